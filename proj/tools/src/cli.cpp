#include "superforms_cli/cli.hpp"

#include <fstream>
#include <iomanip>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "superforms/cone.hpp"
#include "superforms/hattori.hpp"
#include "superforms/hodge.hpp"
#include "superforms/models.hpp"

namespace superforms::cli {

namespace {

std::string status_of(Verdict v) { return superforms::to_string(v); }

std::string info_status(bool ok) { return ok ? "info-holds" : "info-fails"; }

ReportSection from_relations(const RelationReport& r) {
  ReportSection s{r.title, {}};
  for (const auto& e : r.entries) {
    ReportItem it;
    it.item = (e.group.empty() ? "" : "(" + e.group + ") ") + e.name;
    it.claimed = e.rhs;
    it.computed = e.verdict == Verdict::pass ? e.rhs : (e.verdict == Verdict::pass_variant ? e.variant : "-");
    it.status = status_of(e.verdict);
    if (e.verdict == Verdict::fail && e.mismatch)
      it.note = "first mismatch in degree " + std::to_string(e.mismatch->degree) + " at (" +
                std::to_string(e.mismatch->entry.row) + "," + std::to_string(e.mismatch->entry.col) + ")";
    if (!e.nonvacuous && !e.rhs_nonzero) it.note += std::string(it.note.empty() ? "" : "; ") + "both sides vanish";
    s.items.push_back(std::move(it));
  }
  return s;
}

void add_checks(ReportSection& s, const CheckList& checks) {
  for (const auto& c : checks.items) {
    ReportItem it;
    it.item = c.name;
    it.status = c.normative ? (c.ok ? "pass" : "fail") : info_status(c.ok);
    it.note = c.detail;
    s.items.push_back(std::move(it));
  }
}

ReportSection from_checks(const CheckList& checks) {
  ReportSection s{checks.title, {}};
  add_checks(s, checks);
  return s;
}

ReportSection from_verdict(const DecompositionVerdict& v, const std::function<std::vector<std::string>(int, const Matrix&)>& fmt = {}) {
  ReportSection s{v.title, {}};
  for (const auto& r : v.rows) {
    ReportItem it;
    it.item = r.table + ": " + r.claim;
    it.degree = r.degree;
    it.claimed = std::to_string(r.claimed);
    it.computed = std::to_string(r.computed);
    it.status = r.normative ? (r.ok ? "pass" : "fail") : info_status(r.ok);
    if (fmt && r.normative) {
      auto w = v.witnesses.find(r.degree);
      if (w != v.witnesses.end()) it.basis = fmt(r.degree, w->second);
    }
    s.items.push_back(std::move(it));
  }
  add_checks(s, v.checks);
  return s;
}

// Sector-aware printing of a coordinate vector of degree k.
std::string format_vector(const Model& model, const SpacePtr& space, int k, const Matrix& column) {
  std::vector<std::string> parts;
  int offset = 0;
  const auto& sectors = model.algebra.sectors();
  for (const auto& sector : sectors) {
    for (int local = 0; local < sector.fiber; ++local) {
      int fi = offset + local;
      std::vector<Scalar> coords(space->monomials(k).size());
      bool any = false;
      for (std::size_t m = 0; m < coords.size(); ++m) {
        coords[m] = column(m * space->fiber() + fi, 0);
        any = any || !coords[m].is_zero();
      }
      if (!any) continue;
      FormElement f(model.dim());
      for (std::size_t m = 0; m < coords.size(); ++m)
        if (!coords[m].is_zero()) f.add(space->monomials(k)[m], coords[m]);
      std::string body = format_form(f, model.algebra.first_label());
      if (sectors.size() == 1)
        parts.push_back(body);
      else
        parts.push_back("[" + sector.name + (sector.fiber > 1 ? ":" + std::to_string(local + 1) : "") + "] (" + body + ")");
    }
    offset += sector.fiber;
  }
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

std::vector<std::string> format_basis(const Model& model, const SpacePtr& space, int k, const Matrix& basis) {
  std::vector<std::string> out;
  for (std::size_t c = 0; c < basis.cols(); ++c) out.push_back(format_vector(model, space, k, basis.col(c)));
  return out;
}

std::vector<GradedOperator> jacobi_pool(const Model& model) {
  if (model.pack.kind == StructureKind::sasakian) return sasakian_operators(model).generators();
  OperatorSet ops = structure_operators(model);
  std::vector<GradedOperator> pool;
  for (const auto& [name, op] : ops.ops) pool.push_back(op);
  pool.push_back(adjoint(ops.at("d")).set_label("d*"));
  return pool;
}

void add_check_sections(RunReport& r, const Model& model) {
  switch (model.pack.kind) {
    case StructureKind::kahler:
      r.sections.push_back(from_relations(kahler_relation_report(model)));
      break;
    case StructureKind::sasakian:
      r.sections.push_back(from_relations(sasakian_relation_report(model)));
      r.sections.push_back(from_relations(hattori_report(model)));
      break;
    case StructureKind::vaisman:
      r.sections.push_back(from_relations(vaisman_structure_report(model)));
      break;
  }
  RelationReport jacobi = super_jacobi_pool(jacobi_pool(model), model.name());
  jacobi.title = "Super Jacobi identity on the operator pool of " + model.name();
  r.sections.push_back(from_relations(jacobi));
}

void add_betti(ReportSection& s, const std::string& label, const CohomologyReport& h) {
  for (std::size_t i = 0; i < h.betti.size(); ++i) {
    ReportItem it;
    it.item = label;
    it.degree = h.lo + static_cast<int>(i);
    it.computed = std::to_string(h.betti[i]);
    it.status = "pass";
    s.items.push_back(std::move(it));
  }
}

void add_cohomology_sections(RunReport& r, const Model& model) {
  int n = model.dim();
  CohomologyReport full = cohomology(full_complex(model));
  ReportSection betti{"Betti numbers of " + model.name(), {}};
  add_betti(betti, "full", full);
  if (model.pack.kind == StructureKind::sasakian)
    add_betti(betti, "bas", cohomology(basic_subcomplex(model, model.pack.reeb_foliation())));
  if (model.pack.kind == StructureKind::vaisman) {
    add_betti(betti, "sas", cohomology(basic_subcomplex(model, model.pack.lee_foliation())));
    add_betti(betti, "kah", cohomology(basic_subcomplex(model, model.pack.sigma_foliation())));
  }
  r.sections.push_back(std::move(betti));

  ReportSection guards{"Hodge isomorphism and duality on " + model.name(), {}};
  for (int k = 0; k <= n; ++k) {
    ReportItem it;
    it.item = "dim ker Delta = b_k";
    it.degree = k;
    it.claimed = std::to_string(full.betti_at(k));
    it.computed = std::to_string(harmonic_space(model, k).cols());
    it.status = it.claimed == it.computed ? "pass" : "fail";
    guards.items.push_back(it);
    ReportItem pd;
    pd.item = "Poincare duality b_k = b_(N-k)";
    pd.degree = k;
    pd.claimed = std::to_string(full.betti_at(n - k));
    pd.computed = std::to_string(full.betti_at(k));
    pd.status = pd.claimed == pd.computed ? "pass" : "fail";
    guards.items.push_back(pd);
  }
  ReportItem chi;
  chi.item = "Euler characteristic";
  chi.claimed = n % 2 == 1 ? "0" : "";
  chi.computed = std::to_string(full.euler_characteristic());
  if (n % 2 == 1)
    chi.status = full.euler_characteristic() == 0 ? "pass" : "fail";
  else
    chi.status = "info-holds";
  guards.items.push_back(chi);
  r.sections.push_back(std::move(guards));

  if (model.pack.kind == StructureKind::sasakian) r.sections.push_back(from_verdict(sasakian_decomposition(model)));
  if (model.pack.kind == StructureKind::vaisman) r.sections.push_back(from_verdict(vaisman_decomposition(model)));
  r.sections.push_back(from_checks(transversal_hodge_package(model)));
}

void add_harmonic_sections(RunReport& r, const Model& model, std::optional<int> degree) {
  SpacePtr space = form_space(model);
  ReportSection s{"Harmonic forms on " + model.name(), {}};
  for (int k = 0; k <= model.dim(); ++k) {
    if (degree && *degree != k) continue;
    Matrix h = harmonic_space(model, k);
    ReportItem it;
    it.item = "ker Delta";
    it.degree = k;
    it.computed = std::to_string(h.cols());
    it.status = "pass";
    it.basis = format_basis(model, space, k, h);
    s.items.push_back(std::move(it));
  }
  r.sections.push_back(std::move(s));
  auto fmt = [&](int k, const Matrix& b) { return format_basis(model, space, k, b); };
  std::optional<DecompositionVerdict> v;
  if (model.pack.kind == StructureKind::sasakian) v = sasakian_harmonic_check(model);
  if (model.pack.kind == StructureKind::vaisman) v = vaisman_harmonic_check(model);
  if (!v) return;
  if (degree) {
    std::vector<DegreeRow> rows;
    for (const auto& row : v->rows)
      if (row.degree == *degree) rows.push_back(row);
    v->rows = std::move(rows);
  }
  r.sections.push_back(from_verdict(*v, fmt));
}

void add_cone_sections(RunReport& r, const Model& model) {
  if (model.pack.kind == StructureKind::sasakian)
    r.sections.push_back(from_verdict(cone_identification(model)));
  else
    r.sections.push_back(from_verdict(lefschetz_cone_check(model)));
}

std::string describe(const Model& model) {
  std::ostringstream o;
  o << model.name() << " (" << superforms::to_string(model.pack.kind) << ", " << model.dim() << " generators";
  if (model.algebra.fiber() > 1) {
    o << ", sectors";
    for (const auto& s : model.algebra.sectors()) o << " " << s.name << "/" << s.fiber;
  }
  o << ")";
  return o.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

bool RunReport::failed() const { return count("fail") > 0; }

std::size_t RunReport::count(const std::string& status) const {
  std::size_t n = 0;
  for (const auto& s : sections)
    for (const auto& it : s.items) n += it.status == status;
  return n;
}

std::optional<Command> parse_command(const std::string& s) {
  if (s == "check") return Command::check;
  if (s == "cohomology") return Command::cohomology;
  if (s == "harmonic") return Command::harmonic;
  if (s == "cone") return Command::cone;
  if (s == "all") return Command::all;
  return std::nullopt;
}

std::optional<Format> parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  return std::nullopt;
}

std::string to_string(Command c) {
  switch (c) {
    case Command::check: return "check";
    case Command::cohomology: return "cohomology";
    case Command::harmonic: return "harmonic";
    case Command::cone: return "cone";
    case Command::all: return "all";
  }
  return "?";
}

RunReport build_report(const RunConfig& config) {
  Model model = load_model(config.model);
  if (config.degree && (*config.degree < 0 || *config.degree > model.dim()))
    throw std::invalid_argument("degree " + std::to_string(*config.degree) + " outside 0.." + std::to_string(model.dim()));
  RunReport r;
  r.model = model.name();
  r.command = to_string(config.command);
  r.description = describe(model);
  bool all = config.command == Command::all;
  if (all || config.command == Command::check) add_check_sections(r, model);
  if (all || config.command == Command::cohomology) add_cohomology_sections(r, model);
  if (all || config.command == Command::harmonic) add_harmonic_sections(r, model, config.degree);
  if (all || config.command == Command::cone) add_cone_sections(r, model);
  return r;
}

void render_text(const RunReport& report, std::ostream& out) {
  out << "model: " << report.description << "\n";
  out << "command: " << report.command << "\n";
  for (const auto& s : report.sections) {
    out << "\n[" << s.title << "]\n";
    for (const auto& it : s.items) {
      out << "  " << std::left << std::setw(13) << it.status;
      if (it.degree) out << "k=" << std::setw(3) << *it.degree;
      out << it.item;
      if (!it.claimed.empty() || !it.computed.empty()) {
        if (it.claimed.empty())
          out << ": " << it.computed;
        else if (it.claimed != it.computed)
          out << "  (claimed " << it.claimed << ", computed " << it.computed << ")";
        else if (it.degree)
          out << "  (" << it.computed << ")";
      }
      if (!it.note.empty()) out << "  [" << it.note << "]";
      out << "\n";
      for (const auto& b : it.basis) out << "        " << b << "\n";
    }
  }
  out << "\nsummary: " << report.count("pass") << " pass, " << report.count("pass-variant") << " pass-variant, "
      << report.count("fail") << " fail, " << report.count("info-holds") + report.count("info-fails")
      << " informational (" << report.count("info-fails") << " not matching)\n";
  out << "result: " << (report.failed() ? "FAIL" : "PASS") << "\n";
}

void render_json(const RunReport& report, std::ostream& out) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["model"] = report.model;
  doc["description"] = report.description;
  doc["command"] = report.command;
  doc["result"] = report.failed() ? "fail" : "pass";
  json sections = json::array();
  for (const auto& s : report.sections) {
    json js;
    js["title"] = s.title;
    json items = json::array();
    for (const auto& it : s.items) {
      json ji;
      ji["item"] = it.item;
      if (it.degree) ji["degree"] = std::to_string(*it.degree);
      if (!it.claimed.empty()) ji["claimed"] = it.claimed;
      if (!it.computed.empty()) ji["computed"] = it.computed;
      ji["status"] = it.status;
      if (!it.note.empty()) ji["note"] = it.note;
      if (!it.basis.empty()) ji["basis"] = it.basis;
      items.push_back(std::move(ji));
    }
    js["items"] = std::move(items);
    sections.push_back(std::move(js));
  }
  doc["sections"] = std::move(sections);
  out << doc.dump(2) << "\n";
}

void render_csv(const RunReport& report, std::ostream& out) {
  out << "model,section,item,degree,claimed,computed,status,note\n";
  for (const auto& s : report.sections)
    for (const auto& it : s.items)
      out << csv_field(report.model) << "," << csv_field(s.title) << "," << csv_field(it.item) << ","
          << (it.degree ? std::to_string(*it.degree) : "") << "," << csv_field(it.claimed) << ","
          << csv_field(it.computed) << "," << it.status << "," << csv_field(it.note) << "\n";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  RunReport report;
  try {
    report = build_report(config);
  } catch (const ModelError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  std::ofstream file;
  std::ostream* sink = &out;
  if (config.output) {
    file.open(*config.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << *config.output << "\n";
      return kInputError;
    }
    sink = &file;
  }
  switch (config.format) {
    case Format::text: render_text(report, *sink); break;
    case Format::json: render_json(report, *sink); break;
    case Format::csv: render_csv(report, *sink); break;
  }
  return report.failed() ? kVerificationFailed : kOk;
}

}  // namespace superforms::cli
