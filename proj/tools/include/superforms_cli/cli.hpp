#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace superforms::cli {

enum class Command { check, cohomology, harmonic, cone, all };
enum class Format { text, json, csv };

struct RunConfig {
  Command command = Command::check;
  std::string model;
  std::optional<int> degree;
  Format format = Format::text;
  std::optional<std::string> output;  // standard output when absent
};

enum ExitCode { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

struct ReportItem {
  std::string item;
  std::optional<int> degree;
  std::string claimed;
  std::string computed;
  std::string status;  // pass | pass-variant | fail | info-holds | info-fails
  std::string note;
  std::vector<std::string> basis;
};

struct ReportSection {
  std::string title;
  std::vector<ReportItem> items;
};

struct RunReport {
  std::string model;
  std::string command;
  std::string description;
  std::vector<ReportSection> sections;

  bool failed() const;
  std::size_t count(const std::string& status) const;
};

std::optional<Command> parse_command(const std::string& s);
std::optional<Format> parse_format(const std::string& s);
std::string to_string(Command c);

// Builds the report; throws superforms::ModelError or std::invalid_argument
// on input errors.
RunReport build_report(const RunConfig& config);

void render_text(const RunReport& report, std::ostream& out);
void render_json(const RunReport& report, std::ostream& out);
void render_csv(const RunReport& report, std::ostream& out);

// Full invocation: builds, renders to `out` (or config.output) and returns
// the exit code; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace superforms::cli
