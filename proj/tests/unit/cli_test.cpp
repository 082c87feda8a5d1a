#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "superforms/models.hpp"
#include "superforms_cli/cli.hpp"

namespace {

using namespace superforms::cli;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(Command command, const std::string& model, Format format = Format::text, std::optional<int> degree = {}) {
  RunConfig cfg;
  cfg.command = command;
  cfg.model = model;
  cfg.format = format;
  cfg.degree = degree;
  std::ostringstream out, err;
  int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

bool only_string_leaves(const nlohmann::json& j) {
  if (j.is_object() || j.is_array()) {
    for (const auto& x : j)
      if (!only_string_leaves(x)) return false;
    return true;
  }
  return j.is_string();
}

TEST(Cli, ParseHelpers) {
  EXPECT_EQ(parse_command("cone"), Command::cone);
  EXPECT_FALSE(parse_command("bogus").has_value());
  EXPECT_EQ(parse_format("csv"), Format::csv);
  EXPECT_FALSE(parse_format("xml").has_value());
  EXPECT_EQ(to_string(Command::harmonic), "harmonic");
}

TEST(Cli, OutputIsByteDeterministic) {
  for (Format f : {Format::text, Format::json, Format::csv}) {
    Outcome a = invoke(Command::check, "h3", f);
    Outcome b = invoke(Command::check, "h3", f);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
  }
  EXPECT_EQ(invoke(Command::cohomology, "su2xr", Format::json).out, invoke(Command::cohomology, "su2xr", Format::json).out);
}

TEST(Cli, JsonCarriesOnlyStrings) {
  Outcome o = invoke(Command::cohomology, "h3", Format::json);
  ASSERT_EQ(o.code, 0);
  nlohmann::json j = nlohmann::json::parse(o.out);
  EXPECT_TRUE(only_string_leaves(j));
  EXPECT_EQ(j.at("model"), "h3");
}

TEST(Cli, CsvHeader) {
  Outcome o = invoke(Command::harmonic, "su2", Format::csv, 3);
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(o.out.substr(0, o.out.find('\n')), "model,section,item,degree,claimed,computed,status,note");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke(Command::all, "h3").code, kOk);
  Outcome unknown = invoke(Command::check, "nope");
  EXPECT_EQ(unknown.code, kInputError);
  EXPECT_FALSE(unknown.err.empty());
  EXPECT_EQ(invoke(Command::harmonic, "h3", Format::text, 9).code, kInputError);
}

TEST(Cli, BrokenModelFileIsAnInputError) {
  auto path = std::filesystem::temp_directory_path() / "superforms_cli_test_bad.alg";
  {
    std::ofstream f(path);
    f << "[algebra]\ndim = 3\n[brackets]\n1 2 -> 2 : 1\n1 3 -> 1 : 1\n2 3 -> 1 : 1\n[structure]\nkind = kahler\n";
  }
  Outcome o = invoke(Command::check, path.string());
  EXPECT_EQ(o.code, kInputError);
  EXPECT_NE(o.err.find("Jacobi"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, ModelFileMatchesBuiltinOutput) {
  Outcome file = invoke(Command::cohomology, std::string(SUPERFORMS_MODELS_DIR) + "/h3.alg", Format::csv);
  Outcome builtin = invoke(Command::cohomology, "h3", Format::csv);
  EXPECT_EQ(file.code, 0);
  EXPECT_EQ(file.out, builtin.out);
}

TEST(Cli, WritesToOutputFile) {
  auto path = std::filesystem::temp_directory_path() / "superforms_cli_test_out.txt";
  RunConfig cfg;
  cfg.command = Command::cone;
  cfg.model = "h3";
  cfg.output = path.string();
  std::ostringstream out, err;
  EXPECT_EQ(run(cfg, out, err), kOk);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), invoke(Command::cone, "h3").out);
  std::filesystem::remove(path);
}

TEST(Cli, ReportCountsStatuses) {
  RunReport r = build_report({Command::check, "torus4", std::nullopt, Format::text, std::nullopt});
  EXPECT_FALSE(r.failed());
  EXPECT_EQ(r.count("pass-variant"), 1u);
  EXPECT_EQ(r.count("fail"), 0u);
}

}  // namespace
