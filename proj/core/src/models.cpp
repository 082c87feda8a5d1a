#include "superforms/models.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace superforms {

std::string to_string(ModelErrorKind k) {
  switch (k) {
    case ModelErrorKind::syntax: return "syntax";
    case ModelErrorKind::antisymmetry: return "antisymmetry";
    case ModelErrorKind::jacobi: return "jacobi";
    case ModelErrorKind::contact: return "contact";
    case ModelErrorKind::complex_structure: return "complex-structure";
    case ModelErrorKind::vaisman: return "vaisman";
    case ModelErrorKind::sector: return "sector";
    case ModelErrorKind::unknown_model: return "unknown-model";
    case ModelErrorKind::io: return "io";
  }
  return "unknown";
}

ModelError::ModelError(ModelErrorKind kind, const std::string& what, int line)
    : std::runtime_error((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) + what),
      kind_(kind),
      line_(line) {}

std::string to_string(StructureKind k) {
  switch (k) {
    case StructureKind::kahler: return "kahler";
    case StructureKind::sasakian: return "sasakian";
    case StructureKind::vaisman: return "vaisman";
  }
  return "unknown";
}

LieModel::LieModel(std::string name, int dim, int first_label)
    : name_(std::move(name)), dim_(dim), first_label_(first_label), c_(static_cast<std::size_t>(dim) * dim * dim) {
  if (dim < 1 || dim > kMaxGenerators) throw ModelError(ModelErrorKind::syntax, "unsupported dimension " + std::to_string(dim));
  sectors_.push_back(Sector{"invariant", 1, {}});
}

void LieModel::set_bracket(int i, int j, int k, const Rational& value) {
  c_[(k * dim_ + i) * dim_ + j] = value;
  c_[(k * dim_ + j) * dim_ + i] = -value;
}

std::optional<std::array<int, 3>> LieModel::jacobi_violation() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k)
        for (int m = 0; m < dim_; ++m) {
          Rational s;
          for (int l = 0; l < dim_; ++l)
            s += c(i, j, l) * c(l, k, m) + c(j, k, l) * c(l, i, m) + c(k, i, l) * c(l, j, m);
          if (sgn(s) != 0) return std::array<int, 3>{i, j, k};
        }
  return std::nullopt;
}

bool LieModel::unimodular() const {
  for (int i = 0; i < dim_; ++i) {
    Rational tr;
    for (int j = 0; j < dim_; ++j) tr += c(i, j, j);
    if (sgn(tr) != 0) return false;
  }
  return true;
}

void LieModel::add_adjoint_sector() {
  Sector s{"adjoint", dim_, {}};
  for (int i = 0; i < dim_; ++i) {
    Matrix m(dim_, dim_);
    for (int k = 0; k < dim_; ++k)
      for (int j = 0; j < dim_; ++j) m(k, j) = Scalar(c(i, j, k));
    s.rho.push_back(std::move(m));
  }
  sectors_.push_back(std::move(s));
}

int LieModel::fiber() const {
  int f = 0;
  for (const auto& s : sectors_) f += s.fiber;
  return f;
}

Matrix LieModel::fiber_action(int k) const {
  int f = fiber();
  Matrix out(f, f);
  int offset = 0;
  for (const auto& s : sectors_) {
    if (!s.rho.empty()) {
      const Matrix& r = s.rho.at(k);
      for (int a = 0; a < s.fiber; ++a)
        for (int b = 0; b < s.fiber; ++b) out(offset + a, offset + b) = r(a, b);
    }
    offset += s.fiber;
  }
  return out;
}

const Sector& LieModel::sector_of_fiber(int f) const {
  for (const auto& s : sectors_) {
    if (f < s.fiber) return s;
    f -= s.fiber;
  }
  throw std::out_of_range("fiber index out of range");
}

int LieModel::sector_offset(std::size_t sector) const {
  int offset = 0;
  for (std::size_t s = 0; s < sector; ++s) offset += sectors_.at(s).fiber;
  return offset;
}

bool operator==(const LieModel& a, const LieModel& b) {
  if (a.dim_ != b.dim_ || a.first_label_ != b.first_label_ || a.c_ != b.c_) return false;
  if (a.sectors_.size() != b.sectors_.size()) return false;
  for (std::size_t s = 0; s < a.sectors_.size(); ++s)
    if (a.sectors_[s].name != b.sectors_[s].name || a.sectors_[s].rho != b.sectors_[s].rho) return false;
  return true;
}

Monomial FoliationSpec::vertical_mask() const {
  std::uint32_t bits = 0;
  for (int p : positions) bits |= 1u << p;
  return Monomial(bits);
}

FoliationSpec StructurePack::reeb_foliation() const {
  if (!reeb) throw std::logic_error("model has no Reeb field");
  return {"reeb", {*reeb}};
}

FoliationSpec StructurePack::lee_foliation() const {
  if (!lee) throw std::logic_error("model has no Lee field");
  return {"lee", {*lee}};
}

FoliationSpec StructurePack::sigma_foliation() const {
  if (!lee || !reeb) throw std::logic_error("model has no canonical rank-2 foliation");
  return {"sigma", {std::min(*lee, *reeb), std::max(*lee, *reeb)}};
}

FoliationSpec StructurePack::kahler_foliation() const {
  switch (kind) {
    case StructureKind::kahler: return {"point", {}};
    case StructureKind::sasakian: return reeb_foliation();
    case StructureKind::vaisman: return sigma_foliation();
  }
  return {"point", {}};
}

int StructurePack::transversal_complex_dim() const {
  return (static_cast<int>(j.rows()) - kahler_foliation().rank()) / 2;
}

FormElement StructurePack::leafwise_volume(const FoliationSpec& fol) const {
  return FormElement::monomial(static_cast<int>(j.rows()), fol.vertical_mask());
}

FormElement StructurePack::apply_j(const FormElement& one_form) const {
  int n = static_cast<int>(j.rows());
  FormElement out(n);
  for (const auto& [m, c] : one_form.terms()) {
    if (m.degree() != 1) throw std::invalid_argument("apply_j expects a 1-form");
    int a = __builtin_ctz(m.bits());
    for (int b = 0; b < n; ++b)
      if (!j(b, a).is_zero()) out.add(Monomial(1u << b), c * j(b, a));
  }
  return out;
}

namespace {

FormElement form_from_j(const Matrix& j, std::uint32_t domain) {
  int n = static_cast<int>(j.rows());
  FormElement out(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (((domain >> a) & 1u) && ((domain >> b) & 1u)) out.add(Monomial((1u << a) | (1u << b)), j(b, a));
  return out;
}

std::uint32_t full_mask(int n) { return n >= 32 ? ~0u : ((1u << n) - 1); }

std::uint32_t j_domain(const Model& m) {
  std::uint32_t all = full_mask(m.dim());
  if (m.pack.kind == StructureKind::sasakian) return all & ~(1u << *m.pack.reeb);
  return all;
}

FormElement apply_d(const Model& m, const FormElement& f) { return scalar_ce_differential(m).apply(f); }

std::string triple_text(const LieModel& a, const std::array<int, 3>& t) {
  return "(" + std::to_string(a.label(t[0])) + ", " + std::to_string(a.label(t[1])) + ", " +
         std::to_string(a.label(t[2])) + ")";
}

}  // namespace

void validate(const Model& model) {
  const LieModel& alg = model.algebra;
  const StructurePack& pack = model.pack;
  int n = alg.dim();

  if (auto t = alg.jacobi_violation())
    throw ModelError(ModelErrorKind::jacobi, "Jacobi identity fails on generators " + triple_text(alg, *t));

  for (std::size_t s = 1; s < alg.sectors().size(); ++s) {
    const Sector& sec = alg.sectors()[s];
    if (static_cast<int>(sec.rho.size()) != n) throw ModelError(ModelErrorKind::sector, "sector " + sec.name + " lacks generator actions");
    for (int i = 0; i < n; ++i) {
      if (sec.rho[i].adjoint() != -sec.rho[i])
        throw ModelError(ModelErrorKind::sector, "sector " + sec.name + " action is not skew");
      for (int j = 0; j < n; ++j) {
        Matrix bracket = sec.rho[i] * sec.rho[j] - sec.rho[j] * sec.rho[i];
        Matrix expect(sec.fiber, sec.fiber);
        for (int k = 0; k < n; ++k) expect += Scalar(alg.c(i, j, k)) * sec.rho[k];
        if (bracket != expect) throw ModelError(ModelErrorKind::sector, "sector " + sec.name + " is not a representation");
      }
    }
  }
  if (!compose(scalar_ce_differential(model), scalar_ce_differential(model)).is_zero())
    throw ModelError(ModelErrorKind::jacobi, "differential does not square to zero");
  if (alg.sectors().size() > 1) {
    GradedOperator d = ce_differential(model);
    if (!compose(d, d).is_zero()) throw ModelError(ModelErrorKind::sector, "twisted differential does not square to zero");
  }

  // complex structure
  if (pack.j.rows() != static_cast<std::size_t>(n) || pack.j.cols() != static_cast<std::size_t>(n))
    throw ModelError(ModelErrorKind::complex_structure, "complex structure has wrong size");
  std::uint32_t dom = j_domain(model);
  Matrix proj(n, n);
  for (int a = 0; a < n; ++a)
    if ((dom >> a) & 1u) proj(a, a) = Scalar(1);
  if (pack.j * proj != pack.j || proj * pack.j != pack.j)
    throw ModelError(ModelErrorKind::complex_structure, "J does not preserve the horizontal coframe");
  if (pack.j * pack.j != -proj) throw ModelError(ModelErrorKind::complex_structure, "J^2 != -1 on the horizontal coframe");
  if (pack.j.transpose() * pack.j != proj) throw ModelError(ModelErrorKind::complex_structure, "J is not orthogonal");
  FormElement omega_j = form_from_j(pack.j, dom);

  if (pack.kind == StructureKind::kahler) {
    if (pack.omega != omega_j || pack.omega0 != omega_j)
      throw ModelError(ModelErrorKind::complex_structure, "Kahler form differs from g(J., .)");
    if (!apply_d(model, pack.omega).is_zero()) throw ModelError(ModelErrorKind::complex_structure, "Kahler form is not closed");
    return;
  }

  if (!pack.reeb) throw ModelError(ModelErrorKind::contact, "missing Reeb index");
  int r = *pack.reeb;
  FormElement one = FormElement::unit(n);
  if (contract(r, pack.eta) != one) throw ModelError(ModelErrorKind::contact, "i_r eta != 1");
  if (pack.omega0 != apply_d(model, pack.eta)) throw ModelError(ModelErrorKind::contact, "d eta != omega0");
  if (!contract(r, pack.omega0).is_zero()) throw ModelError(ModelErrorKind::contact, "i_r d eta != 0");

  auto phi_condition = [&](const FoliationSpec& fol) {
    FormElement dphi = apply_d(model, pack.leafwise_volume(fol));
    std::uint32_t vert = fol.vertical_mask().bits();
    for (const auto& [m, c] : dphi.terms())
      if ((m.bits() & vert) == vert)
        throw ModelError(ModelErrorKind::contact, "leafwise volume of the " + fol.name + " foliation violates d1 Phi = 0");
  };

  if (pack.kind == StructureKind::sasakian) {
    if (pack.omega0 != omega_j)
      throw ModelError(ModelErrorKind::contact, "d eta != omega0 = g(J., .) on the horizontal coframe");
    phi_condition(pack.reeb_foliation());
    return;
  }

  // vaisman
  if (!pack.lee) throw ModelError(ModelErrorKind::vaisman, "missing Lee index");
  int l = *pack.lee;
  if (pack.theta != FormElement::generator(n, l)) throw ModelError(ModelErrorKind::vaisman, "Lee form must be the unit coframe element");
  if (!apply_d(model, pack.theta).is_zero()) throw ModelError(ModelErrorKind::vaisman, "Lee form is not closed");
  for (int k = 0; k < n; ++k)
    if (k != l && k != r && sgn(alg.c(l, r, k)) != 0)
      throw ModelError(ModelErrorKind::vaisman, "Lee and Reeb fields do not span an integrable foliation");
  FormElement i_theta = pack.apply_j(pack.theta);
  if (i_theta != pack.eta) throw ModelError(ModelErrorKind::vaisman, "I theta != eta");
  if (pack.omega != omega_j) throw ModelError(ModelErrorKind::complex_structure, "omega differs from g(J., .)");
  if (apply_d(model, i_theta) != pack.omega - wedge(pack.theta, i_theta))
    throw ModelError(ModelErrorKind::vaisman, "d(I theta) != omega - theta ^ I theta");
  if (pack.omega0 != form_from_j(pack.j, dom & ~((1u << l) | (1u << r))))
    throw ModelError(ModelErrorKind::vaisman, "omega0 is not the transversal Kahler form of the canonical foliation");
  phi_condition(pack.lee_foliation());
  phi_condition(pack.reeb_foliation());
  phi_condition(pack.sigma_foliation());
}

namespace {

Matrix j_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  Matrix j(n, n);
  for (auto [a, b] : pairs) {
    j(b, a) = Scalar(1);
    j(a, b) = Scalar(-1);
  }
  return j;
}

Model finish_sasakian(LieModel alg, int reeb, const std::vector<std::pair<int, int>>& pairs) {
  Model m{std::move(alg), {}};
  int n = m.dim();
  m.pack.kind = StructureKind::sasakian;
  m.pack.reeb = reeb;
  m.pack.j = j_from_pairs(n, pairs);
  m.pack.eta = FormElement::generator(n, reeb);
  m.pack.omega0 = apply_d(m, m.pack.eta);
  m.pack.omega = m.pack.omega0;
  m.pack.theta = FormElement(n);
  return m;
}

Model finish_vaisman(LieModel alg, int lee, int reeb, const std::vector<std::pair<int, int>>& pairs) {
  Model m{std::move(alg), {}};
  int n = m.dim();
  m.pack.kind = StructureKind::vaisman;
  m.pack.reeb = reeb;
  m.pack.lee = lee;
  m.pack.j = j_from_pairs(n, pairs);
  m.pack.eta = FormElement::generator(n, reeb);
  m.pack.theta = FormElement::generator(n, lee);
  m.pack.omega0 = apply_d(m, m.pack.eta);
  m.pack.omega = m.pack.omega0 + wedge(m.pack.theta, m.pack.eta);
  return m;
}

Model torus(int n) {
  Model m{LieModel("torus" + std::to_string(n), n), {}};
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a + 1 < n; a += 2) pairs.emplace_back(a, a + 1);
  m.pack.kind = StructureKind::kahler;
  m.pack.j = j_from_pairs(n, pairs);
  m.pack.omega = form_from_j(m.pack.j, full_mask(n));
  m.pack.omega0 = m.pack.omega;
  m.pack.eta = FormElement(n);
  m.pack.theta = FormElement(n);
  return m;
}

// su(2) on positions base..base+2 with [e1,e2] = -e3, [e2,e3] = -e1, [e3,e1] = -e2.
void su2_brackets(LieModel& a, int base) {
  a.set_bracket(base + 0, base + 1, base + 2, Rational(-1));
  a.set_bracket(base + 1, base + 2, base + 0, Rational(-1));
  a.set_bracket(base + 2, base + 0, base + 1, Rational(-1));
}

Model build(const std::string& name) {
  if (name == "torus2") return torus(2);
  if (name == "torus4") return torus(4);
  if (name == "su2") {
    LieModel a("su2", 3);
    su2_brackets(a, 0);
    a.add_adjoint_sector();
    return finish_sasakian(std::move(a), 2, {{0, 1}});
  }
  if (name == "h3") {
    LieModel a("h3", 3);
    a.set_bracket(0, 1, 2, Rational(-1));
    return finish_sasakian(std::move(a), 2, {{0, 1}});
  }
  if (name == "h5") {
    LieModel a("h5", 5);
    a.set_bracket(0, 1, 4, Rational(-1));
    a.set_bracket(2, 3, 4, Rational(-1));
    return finish_sasakian(std::move(a), 4, {{0, 1}, {2, 3}});
  }
  if (name == "su2xr") {
    LieModel a("su2xr", 4, 0);
    su2_brackets(a, 1);
    return finish_vaisman(std::move(a), 0, 3, {{1, 2}, {0, 3}});
  }
  if (name == "h3xr") {
    LieModel a("h3xr", 4, 0);
    a.set_bracket(1, 2, 3, Rational(-1));
    return finish_vaisman(std::move(a), 0, 3, {{1, 2}, {0, 3}});
  }
  throw ModelError(ModelErrorKind::unknown_model, "unknown built-in model '" + name + "'");
}

}  // namespace

std::vector<std::string> builtin_names() { return {"torus2", "torus4", "su2", "h3", "h5", "su2xr", "h3xr"}; }

Model builtin_model(const std::string& name) {
  Model m = build(name);
  validate(m);
  return m;
}

std::vector<Model> builtin_models() {
  std::vector<Model> out;
  for (const auto& n : builtin_names()) out.push_back(builtin_model(n));
  return out;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, int line) {
  if (tok.empty()) throw ModelError(ModelErrorKind::syntax, "expected an integer", line);
  std::size_t i = tok[0] == '-' ? 1 : 0;
  if (i == tok.size()) throw ModelError(ModelErrorKind::syntax, "expected an integer, got '" + tok + "'", line);
  for (std::size_t k = i; k < tok.size(); ++k)
    if (tok[k] < '0' || tok[k] > '9') throw ModelError(ModelErrorKind::syntax, "expected an integer, got '" + tok + "'", line);
  if (tok.size() > 6) throw ModelError(ModelErrorKind::syntax, "integer out of range: '" + tok + "'", line);
  return std::stoi(tok);
}

Rational parse_value(const std::string& tok, int line) {
  try {
    return parse_rational(tok);
  } catch (const std::invalid_argument& e) {
    throw ModelError(ModelErrorKind::syntax, e.what(), line);
  }
}

struct BracketLine {
  int i, j, k;
  Rational value;
  int line;
};

struct JLine {
  int from, to, sign, line;
};

}  // namespace

Model parse_model(const std::string& text, const std::string& default_name) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  std::string section;
  std::optional<int> dim;
  int first_index = 1;
  std::string name = default_name;
  std::vector<std::string> sectors;
  std::vector<BracketLine> brackets;
  std::vector<JLine> jlines;
  std::vector<BracketLine> omega_lines;
  std::optional<std::string> kind;
  std::optional<std::pair<int, int>> reeb, lee;  // (label, line)

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    for (unsigned char ch : line)
      if (ch > 127) throw ModelError(ModelErrorKind::syntax, "non-ASCII character", line_no);
    if (line.front() == '[') {
      if (line.back() != ']') throw ModelError(ModelErrorKind::syntax, "unterminated section header", line_no);
      section = trim(line.substr(1, line.size() - 2));
      if (section != "algebra" && section != "brackets" && section != "structure" && section != "omega")
        throw ModelError(ModelErrorKind::syntax, "unknown section [" + section + "]", line_no);
      continue;
    }
    if (section.empty()) throw ModelError(ModelErrorKind::syntax, "content before the first section header", line_no);

    if (section == "brackets" || section == "omega") {
      auto colon = line.find(':');
      if (colon == std::string::npos) throw ModelError(ModelErrorKind::syntax, "expected ': value'", line_no);
      auto lhs = split_ws(line.substr(0, colon));
      auto rhs = split_ws(line.substr(colon + 1));
      if (rhs.size() != 1) throw ModelError(ModelErrorKind::syntax, "expected a single rational value", line_no);
      Rational v = parse_value(rhs[0], line_no);
      if (section == "brackets") {
        if (lhs.size() != 4 || lhs[2] != "->") throw ModelError(ModelErrorKind::syntax, "expected 'i j -> k : value'", line_no);
        brackets.push_back({parse_int(lhs[0], line_no), parse_int(lhs[1], line_no), parse_int(lhs[3], line_no), v, line_no});
      } else {
        if (lhs.size() != 2) throw ModelError(ModelErrorKind::syntax, "expected 'i j : value'", line_no);
        omega_lines.push_back({parse_int(lhs[0], line_no), parse_int(lhs[1], line_no), 0, v, line_no});
      }
      continue;
    }

    if (section == "structure" && line.rfind("J:", 0) == 0) {
      auto toks = split_ws(line.substr(2));
      if (toks.size() != 3 || toks[1] != "->") throw ModelError(ModelErrorKind::syntax, "expected 'J: i -> j'", line_no);
      int from = parse_int(toks[0], line_no);
      int to = parse_int(toks[2], line_no);
      int sign = 1;
      if (toks[2][0] == '-') {
        sign = -1;
        to = -to;
      }
      jlines.push_back({from, to, sign, line_no});
      continue;
    }

    auto eq = line.find('=');
    if (eq == std::string::npos) throw ModelError(ModelErrorKind::syntax, "expected 'key = value'", line_no);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (section == "algebra") {
      if (key == "dim")
        dim = parse_int(value, line_no);
      else if (key == "first_index")
        first_index = parse_int(value, line_no);
      else if (key == "name")
        name = value;
      else if (key == "sectors")
        sectors = split_ws(value);
      else
        throw ModelError(ModelErrorKind::syntax, "unknown key '" + key + "' in [algebra]", line_no);
    } else if (section == "structure") {
      if (key == "kind")
        kind = value;
      else if (key == "reeb")
        reeb = std::make_pair(parse_int(value, line_no), line_no);
      else if (key == "lee")
        lee = std::make_pair(parse_int(value, line_no), line_no);
      else
        throw ModelError(ModelErrorKind::syntax, "unknown key '" + key + "' in [structure]", line_no);
    } else {
      throw ModelError(ModelErrorKind::syntax, "unexpected line in [" + section + "]", line_no);
    }
  }

  if (!dim) throw ModelError(ModelErrorKind::syntax, "missing 'dim' in [algebra]");
  if (*dim < 1 || *dim > kMaxGenerators) throw ModelError(ModelErrorKind::syntax, "dimension out of range");
  if (!kind) throw ModelError(ModelErrorKind::syntax, "missing 'kind' in [structure]");
  int n = *dim;
  auto pos = [&](int label, int line) {
    int p = label - first_index;
    if (p < 0 || p >= n) throw ModelError(ModelErrorKind::syntax, "generator index " + std::to_string(label) + " out of range", line);
    return p;
  };

  LieModel alg(name, n, first_index);
  std::map<std::array<int, 3>, std::pair<Rational, int>> given;  // oriented (i, j, k) -> (value, line)
  for (const auto& b : brackets) {
    int i = pos(b.i, b.line), j = pos(b.j, b.line), k = pos(b.k, b.line);
    if (i == j) {
      if (sgn(b.value) != 0) throw ModelError(ModelErrorKind::antisymmetry, "c^k_{ii} must vanish", b.line);
      continue;
    }
    if (given.count({i, j, k})) throw ModelError(ModelErrorKind::syntax, "duplicate bracket entry", b.line);
    auto mirror = given.find({j, i, k});
    if (mirror != given.end()) {
      if (mirror->second.first != -b.value)
        throw ModelError(ModelErrorKind::antisymmetry,
                         "c^" + std::to_string(b.k) + "_{" + std::to_string(b.i) + std::to_string(b.j) + "} != -c^" +
                             std::to_string(b.k) + "_{" + std::to_string(b.j) + std::to_string(b.i) + "} (first given on line " +
                             std::to_string(mirror->second.second) + ")",
                         b.line);
    }
    given[{i, j, k}] = {b.value, b.line};
    alg.set_bracket(i, j, k, b.value);
  }
  for (const auto& s : sectors) {
    if (s == "adjoint")
      alg.add_adjoint_sector();
    else
      throw ModelError(ModelErrorKind::syntax, "unknown sector '" + s + "'");
  }

  Matrix j(n, n);
  std::vector<bool> set(n, false);
  for (const auto& jl : jlines) {
    int a = pos(jl.from, jl.line), b = pos(jl.to, jl.line);
    if (set[a]) throw ModelError(ModelErrorKind::complex_structure, "J image of " + std::to_string(jl.from) + " given twice", jl.line);
    for (int r = 0; r < n; ++r) j(r, a) = Scalar();
    j(b, a) = Scalar(jl.sign);
    set[a] = true;
  }
  // J e_a = s e_b implies J e_b = -s e_a unless given explicitly
  for (const auto& jl : jlines) {
    int a = pos(jl.from, jl.line), b = pos(jl.to, jl.line);
    if (!set[b]) {
      j(a, b) = Scalar(-jl.sign);
      set[b] = true;
    }
  }

  Model m{std::move(alg), {}};
  if (*kind == "kahler") {
    m.pack.kind = StructureKind::kahler;
    m.pack.j = j;
    m.pack.omega = form_from_j(j, full_mask(n));
    m.pack.omega0 = m.pack.omega;
    m.pack.eta = FormElement(n);
    m.pack.theta = FormElement(n);
  } else if (*kind == "sasakian" || *kind == "vaisman") {
    if (!reeb) throw ModelError(ModelErrorKind::syntax, "missing 'reeb' in [structure]");
    int r = pos(reeb->first, reeb->second);
    m.pack.kind = *kind == "sasakian" ? StructureKind::sasakian : StructureKind::vaisman;
    m.pack.reeb = r;
    m.pack.j = j;
    m.pack.eta = FormElement::generator(n, r);
    m.pack.omega0 = apply_d(m, m.pack.eta);
    m.pack.omega = m.pack.omega0;
    m.pack.theta = FormElement(n);
    if (m.pack.kind == StructureKind::vaisman) {
      if (!lee) throw ModelError(ModelErrorKind::syntax, "missing 'lee' in [structure]");
      int l = pos(lee->first, lee->second);
      m.pack.lee = l;
      m.pack.theta = FormElement::generator(n, l);
      if (omega_lines.empty()) {
        m.pack.omega = m.pack.omega0 + wedge(m.pack.theta, m.pack.eta);
      } else {
        FormElement w(n);
        for (const auto& ol : omega_lines) {
          int a = pos(ol.i, ol.line), b = pos(ol.j, ol.line);
          w += ol.value * wedge(FormElement::generator(n, a), FormElement::generator(n, b));
        }
        m.pack.omega = w;
      }
    }
  } else {
    throw ModelError(ModelErrorKind::syntax, "unknown kind '" + *kind + "'");
  }
  validate(m);
  return m;
}

Model load_model(const std::string& name_or_path) {
  for (const auto& n : builtin_names())
    if (n == name_or_path) return builtin_model(n);
  std::filesystem::path p(name_or_path);
  if (!std::filesystem::exists(p)) {
    if (p.has_extension() || name_or_path.find('/') != std::string::npos)
      throw ModelError(ModelErrorKind::io, "cannot read model file '" + name_or_path + "'");
    throw ModelError(ModelErrorKind::unknown_model, "unknown built-in model '" + name_or_path + "'");
  }
  std::ifstream in(p);
  if (!in) throw ModelError(ModelErrorKind::io, "cannot read model file '" + name_or_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str(), p.stem().string());
}

SpacePtr form_space(const Model& model) { return std::make_shared<const FormSpace>(model.dim(), model.algebra.fiber()); }

SpacePtr scalar_space(const Model& model) { return std::make_shared<const FormSpace>(model.dim(), 1); }

GradedOperator on_all_sectors(const GradedOperator& op, const SpacePtr& space) {
  if (space->fiber() == 1) return GradedOperator(space, op.shift(), op.parity(), op.blocks(), op.label());
  return lift(op, space, Matrix::identity(space->fiber()));
}

GradedOperator scalar_ce_differential(const Model& model) {
  int n = model.dim();
  const LieModel& alg = model.algebra;
  GeneratorAction action{FormElement(n), {}};
  for (int k = 0; k < n; ++k) {
    FormElement dk(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (sgn(alg.c(i, j, k)) != 0) dk.add(Monomial((1u << i) | (1u << j)), Scalar(-alg.c(i, j, k)));
    action.generators.push_back(std::move(dk));
  }
  return extend_derivation(scalar_space(model), Parity::odd, action, "d");
}

GradedOperator ce_differential(const Model& model) {
  int n = model.dim();
  SpacePtr scalar = scalar_space(model);
  SpacePtr space = form_space(model);
  GradedOperator d = on_all_sectors(scalar_ce_differential(model), space);
  if (space->fiber() == 1) return d;
  // coefficient action: sum_k rho(e_k) (x) theta^k ^ .
  for (int k = 0; k < n; ++k) {
    Matrix rho = model.algebra.fiber_action(k);
    if (!rho.is_zero()) d += lift(multiplication(scalar, FormElement::generator(n, k)), space, rho);
  }
  d.set_label("d");
  return d;
}

const GradedOperator& OperatorSet::at(const std::string& name) const {
  auto it = ops.find(name);
  if (it == ops.end()) throw std::out_of_range("no structure operator named " + name);
  return it->second;
}

GradedOperator weil_operator(const Model& model, const FoliationSpec& fol) {
  int n = model.dim();
  std::uint32_t vert = fol.vertical_mask().bits();
  const Matrix& j = model.pack.j;
  GeneratorAction action{FormElement(n), {}};
  for (int a = 0; a < n; ++a) {
    FormElement image(n);
    if (!((vert >> a) & 1u)) {
      for (int b = 0; b < n; ++b) {
        if (j(b, a).is_zero()) continue;
        if ((vert >> b) & 1u) throw std::invalid_argument("J does not preserve the horizontal coframe of " + fol.name);
        image.add(Monomial(1u << b), j(b, a));
      }
    }
    action.generators.push_back(std::move(image));
  }
  return on_all_sectors(extend_derivation(scalar_space(model), Parity::even, action, "W"), form_space(model));
}

GradedOperator complex_structure_operator(const Model& model, const FoliationSpec& fol, bool inverse) {
  int n = model.dim();
  std::uint32_t vert = fol.vertical_mask().bits();
  const Matrix& j = model.pack.j;
  std::vector<FormElement> image_of_generator;
  for (int a = 0; a < n; ++a) {
    if ((vert >> a) & 1u) {
      image_of_generator.push_back(FormElement::generator(n, a));
      continue;
    }
    FormElement image(n);
    for (int b = 0; b < n; ++b)
      if (!j(b, a).is_zero()) image.add(Monomial(1u << b), inverse ? -j(b, a) : j(b, a));
    image_of_generator.push_back(std::move(image));
  }
  SpacePtr scalar = scalar_space(model);
  std::vector<Matrix> blocks;
  for (int k = 0; k <= n; ++k) {
    Matrix block(scalar->dim(k), scalar->dim(k));
    for (std::size_t c = 0; c < scalar->monomials(k).size(); ++c) {
      FormElement image = FormElement::unit(n);
      for (int p : scalar->monomials(k)[c].positions()) image = wedge(image, image_of_generator[p]);
      for (const auto& [mono, coeff] : image.terms()) block(scalar->index_of(mono), c) = coeff;
    }
    blocks.push_back(std::move(block));
  }
  GradedOperator out(scalar, 0, Parity::even, std::move(blocks), inverse ? "I^-1" : "I");
  return on_all_sectors(out, form_space(model));
}

GradedOperator horizontal_projector(const SpacePtr& space, const FoliationSpec& fol, int h) {
  std::uint32_t vert = fol.vertical_mask().bits();
  std::vector<Matrix> blocks;
  for (int k = 0; k <= space->generators(); ++k) {
    Matrix block(space->dim(k), space->dim(k));
    for (std::size_t i = 0; i < space->dim(k); ++i)
      if (__builtin_popcount(space->monomial_at(k, i).bits() & ~vert) == h) block(i, i) = Scalar(1);
    blocks.push_back(std::move(block));
  }
  return GradedOperator(space, 0, Parity::even, std::move(blocks), "Pi_hor" + std::to_string(h));
}

GradedOperator vertical_projector(const SpacePtr& space, const FoliationSpec& fol, int v) {
  std::uint32_t vert = fol.vertical_mask().bits();
  std::vector<Matrix> blocks;
  for (int k = 0; k <= space->generators(); ++k) {
    Matrix block(space->dim(k), space->dim(k));
    for (std::size_t i = 0; i < space->dim(k); ++i)
      if (__builtin_popcount(space->monomial_at(k, i).bits() & vert) == v) block(i, i) = Scalar(1);
    blocks.push_back(std::move(block));
  }
  return GradedOperator(space, 0, Parity::even, std::move(blocks), "Pi_vert" + std::to_string(v));
}

GradedOperator weil_projector(const GradedOperator& w, int k) {
  const SpacePtr& space = w.space();
  std::vector<Matrix> blocks;
  for (int deg = 0; deg <= space->generators(); ++deg) {
    std::size_t dim = space->dim(deg);
    Matrix p = Matrix::identity(dim);
    if (k < -deg || k > deg) {
      blocks.emplace_back(dim, dim);
      continue;
    }
    for (int other = -deg; other <= deg; ++other) {
      if (other == k) continue;
      // (W - i*other) / (i*(k - other))
      Matrix factor = w.block(deg) - Scalar(0, other) * Matrix::identity(dim);
      factor *= Scalar(0, k - other).inverse();
      p = factor * p;
    }
    blocks.push_back(std::move(p));
  }
  return GradedOperator(space, 0, Parity::even, std::move(blocks), "Pi_W" + std::to_string(k));
}

GradedOperator bigrading_projector(const GradedOperator& w, const FoliationSpec& fol, int p, int q, int m) {
  GradedOperator out =
      compose(weil_projector(w, p - q), compose(horizontal_projector(w.space(), fol, p + q), vertical_projector(w.space(), fol, m)));
  out.set_label("Pi^{" + std::to_string(p) + "," + std::to_string(q) + "}_" + std::to_string(m));
  return out;
}

OperatorSet structure_operators(const Model& model) {
  const StructurePack& pack = model.pack;
  OperatorSet set;
  set.space = form_space(model);
  SpacePtr scalar = scalar_space(model);
  auto put = [&](const std::string& name, GradedOperator op) {
    op.set_label(name);
    set.ops.emplace(name, std::move(op));
  };
  GradedOperator d = ce_differential(model);
  put("Id", GradedOperator::identity(set.space));
  put("d", d);
  GradedOperator l = on_all_sectors(multiplication(scalar, pack.omega0), set.space);
  GradedOperator lambda = adjoint(l);
  put("L", l);
  put("Lambda", lambda);
  put("H", supercommutator(l, lambda));
  FoliationSpec fol = pack.kahler_foliation();
  put("W", weil_operator(model, fol));
  put("I", complex_structure_operator(model, fol, false));
  put("I_inv", complex_structure_operator(model, fol, true));
  if (pack.reeb) {
    GradedOperator e_r = on_all_sectors(multiplication(scalar, pack.eta), set.space);
    GradedOperator i_r = on_all_sectors(contraction(scalar, *pack.reeb), set.space);
    put("e_r", e_r);
    put("i_r", i_r);
    put("Lie_r", supercommutator(d, i_r));
  }
  if (pack.lee) {
    GradedOperator i_theta = on_all_sectors(contraction(scalar, *pack.lee), set.space);
    put("e_theta", on_all_sectors(multiplication(scalar, pack.theta), set.space));
    put("i_theta", i_theta);
    put("Lie_theta", supercommutator(d, i_theta));
  }
  for (const auto& [name, op] : set.ops)
    if (!op.parity_matches_shift()) throw std::logic_error("operator " + name + " has parity inconsistent with its shift");
  return set;
}

}  // namespace superforms
