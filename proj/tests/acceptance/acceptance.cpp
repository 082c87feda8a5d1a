// One line per acceptance criterion; exit status 1 when any criterion fails.
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "naive_betti.hpp"
#include "oracle_algebras.hpp"
#include "superforms/cone.hpp"
#include "superforms_cli/cli.hpp"

namespace {

using namespace superforms;

struct Outcome {
  bool ok = true;
  std::vector<std::string> reasons;

  void require(bool cond, const std::string& why) {
    if (cond) return;
    ok = false;
    reasons.push_back(why);
  }
};

std::string describe(const RelationEntry& e) {
  std::string s = e.scope + " [" + e.group + "] " + e.lhs + " = " + e.rhs;
  if (e.verdict == Verdict::pass_variant) s += " (holds as " + e.lhs + " = " + e.variant + ")";
  return s;
}

const std::vector<std::string> kSasakian = {"su2", "h3", "h5"};
const std::vector<std::string> kVaisman = {"su2xr", "h3xr"};

Outcome kahler_table() {
  Outcome o;
  for (const std::string name : {"torus2", "torus4"}) {
    for (const auto& e : kahler_relation_report(builtin_model(name)).entries)
      o.require(e.verdict == Verdict::pass, describe(e));
  }
  return o;
}

Outcome sasakian_table() {
  Outcome o;
  for (const auto& name : kSasakian) {
    for (const auto& e : sasakian_relation_report(builtin_model(name)).entries) {
      bool exact_group = e.group == "i" || e.group == "iii" || e.group == "iv" || e.group == "v" || e.group == "vi";
      bool variant_group = e.group == "ii" || e.group == "vii";
      if (exact_group) o.require(e.verdict == Verdict::pass, describe(e));
      if (variant_group) o.require(e.holds() && (e.verdict == Verdict::pass || !e.variant.empty()), describe(e));
      if (name == "su2" && e.group == "iii" && e.lhs == "{d1,d1}")
        o.require(e.nonvacuous && e.rhs_nonzero, "su2 {d1,d1} and L(1) must both be nonzero");
    }
  }
  return o;
}

Outcome hattori_identities() {
  Outcome o;
  for (const auto& name : kSasakian)
    for (const auto& e : hattori_report(builtin_model(name)).entries) o.require(e.verdict == Verdict::pass, describe(e));
  return o;
}

void require_verdict(Outcome& o, const DecompositionVerdict& v) {
  for (const auto& r : v.rows)
    if (r.normative)
      o.require(r.ok, v.title + ": degree " + std::to_string(r.degree) + " " + r.claim + " claimed " +
                          std::to_string(r.claimed) + ", computed " + std::to_string(r.computed));
  for (const auto& c : v.checks.items)
    if (c.normative) o.require(c.ok, v.title + ": " + c.name);
}

Outcome cone_equivalence() {
  Outcome o;
  for (const auto& name : kSasakian) require_verdict(o, cone_identification(builtin_model(name)));
  return o;
}

Outcome betti_tables() {
  Outcome o;
  struct Full {
    std::string model;
    oracle::Algebra algebra;
    std::vector<int> expected;  // empty: whatever the oracle computes
  };
  std::vector<Full> full = {
      {"torus2", oracle::abelian(2), {1, 2, 1}},     {"torus4", oracle::abelian(4), {1, 4, 6, 4, 1}},
      {"su2", oracle::su2(), {1, 0, 0, 1}},          {"h3", oracle::h3(), {1, 2, 2, 1}},
      {"h5", oracle::h5(), {1, 4, 5, 5, 4, 1}},      {"su2xr", oracle::su2(1), {1, 1, 0, 1, 1}},
      {"h3xr", oracle::h3(1), {1, 3, 4, 3, 1}},
  };
  for (const auto& c : full) {
    std::vector<int> reference = oracle::betti(c.algebra);
    std::vector<int> engine = cohomology(full_complex(builtin_model(c.model))).betti;
    o.require(reference == c.expected, c.model + ": oracle disagrees with the expected table");
    o.require(engine == reference, c.model + ": engine disagrees with the oracle");
  }
  struct Basic {
    std::string model;
    oracle::Algebra algebra;
    std::vector<int> vertical;
    std::vector<int> expected;
  };
  std::vector<Basic> basic = {
      {"h3", oracle::h3(), {2}, {1, 2, 1}},
      {"su2", oracle::su2(), {2}, {1, 0, 1}},
      {"su2xr", oracle::su2(1), {0, 3}, {1, 0, 1}},
  };
  for (const auto& c : basic) {
    std::vector<int> reference = oracle::basic_betti(c.algebra, c.vertical);
    Model m = builtin_model(c.model);
    std::vector<int> engine = cohomology(basic_subcomplex(m, m.pack.kahler_foliation())).betti;
    bool tail_zero = true;
    for (std::size_t k = reference.size(); k < engine.size(); ++k) tail_zero = tail_zero && engine[k] == 0;
    engine.resize(reference.size());
    o.require(reference == c.expected, c.model + ": basic oracle disagrees with the expected table");
    o.require(engine == reference && tail_zero, c.model + ": basic engine disagrees with the oracle");
  }
  return o;
}

Outcome sasakian_decomposition_rows() {
  Outcome o;
  for (const auto& name : kSasakian) require_verdict(o, sasakian_decomposition(builtin_model(name)));
  bool detected = false;
  for (const auto& r : sasakian_decomposition(builtin_model("su2")).rows)
    if (r.table == "headline" && r.degree == 0) detected = r.computed == 1 && r.claimed == 0 && !r.ok;
  o.require(detected, "su2: H^0 = 1 against ker(L: H^0_bas -> H^2_bas) = 0 not reported");
  return o;
}

Outcome sasakian_harmonic() {
  Outcome o;
  for (const std::string name : {"su2", "h3"}) require_verdict(o, sasakian_harmonic_check(builtin_model(name)));
  return o;
}

Outcome vaisman_theorems() {
  Outcome o;
  for (const auto& name : kVaisman) {
    require_verdict(o, vaisman_decomposition(builtin_model(name)));
    require_verdict(o, vaisman_harmonic_check(builtin_model(name)));
  }
  return o;
}

Outcome transversal_package() {
  Outcome o;
  for (const auto& m : builtin_models()) {
    for (const auto& c : transversal_hodge_package(m).items)
      if (c.normative) o.require(c.ok, m.name() + ": " + c.group + " " + c.name);
  }
  return o;
}

std::string cli_output(cli::Command command, const std::string& model, cli::Format format) {
  std::ostringstream out, err;
  cli::run({command, model, std::nullopt, format, std::nullopt}, out, err);
  return out.str();
}

Outcome structural_guards() {
  Outcome o;
  for (const std::string name : {"su2", "h3"}) {
    SasakianOperators s = sasakian_operators(builtin_model(name));
    for (const auto& e : super_jacobi_pool(s.generators(), name).entries) o.require(e.verdict == Verdict::pass, describe(e));
  }
  for (const auto& m : builtin_models()) {
    if (m.dim() % 2 == 0) continue;
    CohomologyReport h = cohomology(full_complex(m));
    for (int k = 0; k <= m.dim(); ++k)
      o.require(h.betti_at(k) == h.betti_at(m.dim() - k), m.name() + ": Poincare duality at degree " + std::to_string(k));
    o.require(h.euler_characteristic() == 0, m.name() + ": nonzero Euler characteristic");
  }
  auto deterministic = [&](cli::Command command, const std::string& name, cli::Format format) {
    std::string first = cli_output(command, name, format);
    o.require(!first.empty() && first == cli_output(command, name, format),
              name + " " + cli::to_string(command) + ": CLI output differs between identical runs");
  };
  for (auto format : {cli::Format::text, cli::Format::json, cli::Format::csv}) {
    deterministic(cli::Command::all, "h3", format);
    deterministic(cli::Command::cohomology, "su2", format);
    deterministic(cli::Command::cone, "su2xr", format);
  }
  deterministic(cli::Command::all, "su2", cli::Format::json);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"Kahler supersymmetry table on torus2, torus4", kahler_table},
      {"Sasakian supersymmetry table on su2, h3, h5", sasakian_table},
      {"Hattori identities on su2, h3, h5", hattori_identities},
      {"invariant complex equals the shifted Lefschetz cone, exact sequence", cone_equivalence},
      {"Betti tables against the naive oracle", betti_tables},
      {"Sasakian cohomology from basic cohomology", sasakian_decomposition_rows},
      {"Sasakian harmonic forms equal ker Delta", sasakian_harmonic},
      {"Vaisman cohomology and harmonic splitting", vaisman_theorems},
      {"transversal Hodge package on every basic complex", transversal_package},
      {"super Jacobi, Poincare duality, Euler characteristic, CLI determinism", structural_guards},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << index << ": " << c.title << "\n";
    for (const auto& r : o.reasons) std::cout << "    " << r << "\n";
    if (!o.ok) ++failed;
  }
  std::cout << (10 - failed) << "/10 criteria pass\n";
  return failed == 0 ? 0 : 1;
}
