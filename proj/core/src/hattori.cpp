#include "superforms/hattori.hpp"

#include <map>

namespace superforms {

bool is_integrable(const Model& model, const FoliationSpec& fol) {
  std::uint32_t vert = fol.vertical_mask().bits();
  for (int a : fol.positions)
    for (int b : fol.positions)
      for (int k = 0; k < model.dim(); ++k)
        if (!((vert >> k) & 1u) && sgn(model.algebra.c(a, b, k)) != 0) return false;
  return true;
}

HattoriSplit hattori_split(const GradedOperator& d, const Model& model, const FoliationSpec& fol) {
  if (!is_integrable(model, fol)) throw std::invalid_argument("foliation " + fol.name + " is not integrable");
  const SpacePtr& space = d.space();
  int n = space->generators();
  std::vector<GradedOperator> proj;
  for (int h = 0; h <= n; ++h) proj.push_back(horizontal_projector(space, fol, h));
  HattoriSplit split{fol, {}};
  for (int i = -n; i <= n + 1; ++i) {
    GradedOperator comp = GradedOperator::zero(space, d.shift(), d.parity());
    for (int h = 0; h <= n; ++h)
      if (h + i >= 0 && h + i <= n) comp += compose(proj[h + i], compose(d, proj[h]));
    bool expected = i >= 0 && i <= fol.rank() + 1;
    if (!expected) {
      if (!comp.is_zero())
        throw std::invalid_argument("differential has a component of horizontal degree " + std::to_string(i) +
                                    " for foliation " + fol.name);
      continue;
    }
    comp.set_label("d" + std::to_string(i));
    split.components.push_back(std::move(comp));
  }
  return split;
}

GradedOperator weil_component(const GradedOperator& op, const GradedOperator& w, int j) {
  int n = w.space()->generators();
  std::map<int, GradedOperator> e;
  for (int k = -n; k <= n; ++k) e.emplace(k, weil_projector(w, k));
  GradedOperator out = GradedOperator::zero(op.space(), op.shift(), op.parity());
  for (int k = -n; k <= n; ++k)
    if (k + j >= -n && k + j <= n) out += compose(e.at(k + j), compose(op, e.at(k)));
  return out;
}

HodgeSplit hodge_split_d1(const HattoriSplit& split, const GradedOperator& w) {
  const GradedOperator& d1 = split.d1();
  int n = w.space()->generators();
  for (int j = -n - 1; j <= n + 1; ++j) {
    if (j == 1 || j == -1) continue;
    if (!weil_component(d1, w, j).is_zero())
      throw std::invalid_argument("d1 has a component of W-weight " + std::to_string(j) +
                                  "; the transversal complex structure is not integrable");
  }
  HodgeSplit hs{weil_component(d1, w, 1), weil_component(d1, w, -1), {}};
  hs.d1_10.set_label("d1^{1,0}");
  hs.d1_01.set_label("d1^{0,1}");
  hs.d1c = Scalar::i() * (hs.d1_01 - hs.d1_10);
  hs.d1c.set_label("d1c");
  return hs;
}

GradedOperator horizontal_weight(const SpacePtr& space, const FoliationSpec& fol, int n) {
  GradedOperator out = GradedOperator::zero(space, 0, Parity::even);
  for (int h = 0; h <= space->generators(); ++h) out += Scalar(h - n) * horizontal_projector(space, fol, h);
  out.set_label("(p-n) Id");
  return out;
}

std::vector<GradedOperator> SasakianOperators::generators() const {
  return {L, Lambda, H, W, delta1, id, d1, d1s, d1c, d1cs, e_r, i_r};
}

SasakianOperators sasakian_operators(const Model& model) {
  if (model.pack.kind != StructureKind::sasakian) throw std::invalid_argument("sasakian_operators needs a Sasakian model");
  OperatorSet ops = structure_operators(model);
  SasakianOperators s;
  s.space = ops.space;
  s.n = (model.dim() - 1) / 2;
  s.id = ops.at("Id");
  s.d = ops.at("d");
  s.L = ops.at("L");
  s.Lambda = ops.at("Lambda");
  s.H = ops.at("H");
  s.W = ops.at("W");
  s.I = ops.at("I");
  s.I_inv = ops.at("I_inv");
  s.e_r = ops.at("e_r");
  s.i_r = ops.at("i_r");
  s.lie_r = ops.at("Lie_r");
  HattoriSplit split = hattori_split(s.d, model, model.pack.reeb_foliation());
  s.d0 = split.d0();
  s.d1 = split.d1();
  s.d2 = split.d2();
  HodgeSplit hs = hodge_split_d1(split, s.W);
  s.d1_10 = hs.d1_10;
  s.d1_01 = hs.d1_01;
  s.d1c = hs.d1c;
  s.d1s = adjoint(s.d1).set_label("d1*");
  s.d1cs = adjoint(s.d1c).set_label("d1c*");
  s.d0s = adjoint(s.d0).set_label("d0*");
  s.delta1 = supercommutator(s.d1, s.d1s).set_label("Delta1");
  s.delta0 = supercommutator(s.d0, s.d0s).set_label("Delta0");
  s.L1 = reeb_power(s.L, s.lie_r, 1);
  s.Lambda1 = reeb_power(s.Lambda, s.lie_r, 1);
  s.H1 = reeb_power(s.H, s.lie_r, 1);
  s.d1_1 = reeb_power(s.d1, s.lie_r, 1);
  s.d1c_1 = reeb_power(s.d1c, s.lie_r, 1);
  s.d1s_1 = reeb_power(s.d1s, s.lie_r, 1);
  s.d1cs_1 = reeb_power(s.d1cs, s.lie_r, 1);
  s.e_r1 = reeb_power(s.e_r, s.lie_r, 1);
  s.i_r1 = reeb_power(s.i_r, s.lie_r, 1);
  return s;
}

namespace {

class TableBuilder {
 public:
  TableBuilder(std::string scope, SpacePtr space) : scope_(std::move(scope)), space_(std::move(space)) {}

  void rel(const std::string& group, const std::string& lhs_expr, const GradedOperator& lhs, const Scalar& coeff,
           const std::string& base_expr, const GradedOperator& base, std::vector<Candidate> alts = {}) {
    report.entries.push_back(check_relation({group, lhs_expr, lhs, coeff, base_expr, base, std::move(alts)}, scope_));
  }
  void zero(const std::string& group, const std::string& lhs_expr, const GradedOperator& lhs,
            std::vector<Candidate> alts = {}) {
    rel(group, lhs_expr, lhs, Scalar(1), "0", GradedOperator::zero(space_, lhs.shift(), lhs.parity()), std::move(alts));
  }

  RelationReport report;

 private:
  std::string scope_;
  SpacePtr space_;
};

std::string bracket_expr(const std::string& a, const std::string& b, bool odd_pair) {
  return odd_pair ? "{" + a + "," + b + "}" : "[" + a + "," + b + "]";
}

GradedOperator br(const GradedOperator& a, const GradedOperator& b) { return supercommutator(a, b); }

std::string br_expr(const GradedOperator& a, const GradedOperator& b) {
  return bracket_expr(a.label(), b.label(), a.odd() && b.odd());
}

}  // namespace

RelationReport kahler_relation_report(const Model& model) {
  if (model.pack.kind != StructureKind::kahler) throw std::invalid_argument("kahler_relation_report needs a Kahler model");
  OperatorSet ops = structure_operators(model);
  const SpacePtr& space = ops.space;
  GradedOperator d = ops.at("d");
  GradedOperator L = ops.at("L");
  GradedOperator Lambda = ops.at("Lambda");
  GradedOperator H = ops.at("H");
  GradedOperator W = ops.at("W");
  GradedOperator d10 = weil_component(d, W, 1);
  GradedOperator d01 = weil_component(d, W, -1);
  GradedOperator dc = (Scalar::i() * (d01 - d10)).set_label("dc");
  GradedOperator ds = adjoint(d).set_label("d*");
  GradedOperator dcs = adjoint(dc).set_label("dc*");
  GradedOperator delta = br(d, ds).set_label("Delta");
  GradedOperator idc = compose(ops.at("I"), compose(d, ops.at("I_inv")));
  GradedOperator iinvd = compose(ops.at("I_inv"), compose(d, ops.at("I")));
  int n = model.dim() / 2;

  TableBuilder t(model.name(), space);
  t.rel("def", "d*", ds, Scalar(1), "{Lambda,dc}", br(Lambda, dc));
  t.rel("def", "dc*", dcs, Scalar(-1), "{Lambda,d}", br(Lambda, d));
  t.rel("def", "dc", dc, Scalar(1), "I d I^-1", idc, {{"I^-1 d I", iinvd}});

  t.rel("1", "[H,L]", br(H, L), Scalar(2), "L", L);
  t.rel("1", "[H,Lambda]", br(H, Lambda), Scalar(2), "Lambda", Lambda);
  t.rel("1", "[L,Lambda]", br(L, Lambda), Scalar(1), "H", H);
  t.rel("1", "H", H, Scalar(1), "(p-n) Id", horizontal_weight(space, {"point", {}}, n));
  for (const auto& x : {d, dc, ds, dcs, W, delta, L, Lambda})
    t.rel("1", br_expr(H, x), br(H, x), Scalar(x.shift()), x.label(), x);

  t.rel("2", "[W,d]", br(W, d), Scalar(1), "dc", dc);
  t.rel("2", "[W,dc]", br(W, dc), Scalar(-1), "d", d);
  t.rel("2", "[W,d*]", br(W, ds), Scalar(-1), "dc*", dcs);
  t.rel("2", "[W,dc*]", br(W, dcs), Scalar(1), "d*", ds);

  t.rel("3", "[Lambda,d]", br(Lambda, d), Scalar(1), "dc*", dcs);
  t.rel("3", "[L,d*]", br(L, ds), Scalar(-1), "dc", dc);
  t.rel("3", "[Lambda,dc]", br(Lambda, dc), Scalar(-1), "d*", ds);
  t.rel("3", "[L,dc*]", br(L, dcs), Scalar(1), "d", d);

  t.rel("4", "{d,d*}", br(d, ds), Scalar(1), "Delta", delta);
  t.rel("4", "{dc,dc*}", br(dc, dcs), Scalar(1), "Delta", delta);
  std::vector<GradedOperator> odd = {d, dc, ds, dcs};
  for (std::size_t a = 0; a < odd.size(); ++a)
    for (std::size_t b = a; b < odd.size(); ++b) {
      bool laplacian_pair = (a == 0 && b == 2) || (a == 1 && b == 3);
      if (!laplacian_pair) t.zero("4", br_expr(odd[a], odd[b]), br(odd[a], odd[b]));
    }
  for (const auto& x : {d, dc, ds, dcs, L, Lambda, H, W, delta}) t.zero("4", br_expr(delta, x), br(delta, x));

  for (const auto& x : {L, Lambda, H}) t.zero("only", br_expr(W, x), br(W, x));
  t.zero("only", "[L,d]", br(L, d));
  t.zero("only", "[L,dc]", br(L, dc));
  t.zero("only", "[Lambda,d*]", br(Lambda, ds));
  t.zero("only", "[Lambda,dc*]", br(Lambda, dcs));

  t.report.title = "Kahler supersymmetry relations on " + model.name();
  return t.report;
}

RelationReport sasakian_relation_report(const Model& model) {
  SasakianOperators s = sasakian_operators(model);
  const SpacePtr& space = s.space;
  FoliationSpec fol = model.pack.reeb_foliation();
  TableBuilder t(model.name(), space);

  // (i)
  t.rel("i", "[H,L]", br(s.H, s.L), Scalar(2), "L", s.L);
  t.rel("i", "[H,Lambda]", br(s.H, s.Lambda), Scalar(2), "Lambda", s.Lambda);
  t.rel("i", "[L,Lambda]", br(s.L, s.Lambda), Scalar(1), "H", s.H);
  t.rel("i", "H", s.H, Scalar(1), "(p-n) Id", horizontal_weight(space, fol, s.n));
  for (const auto& x : {s.d1, s.d1s, s.d1c, s.d1cs}) {
    int grading = x.label() == "d1" || x.label() == "d1c" ? 1 : -1;
    t.rel("i", br_expr(s.H, x), br(s.H, x), Scalar(grading), x.label(), x);
  }
  for (const auto& x : {s.L, s.Lambda, s.H})
    for (const auto& y : {s.W, s.delta1, s.delta0, s.d0, s.d0s}) t.zero("i", br_expr(x, y), br(x, y));

  // (ii)
  t.rel("ii", "[W,d]", br(s.W, s.d), Scalar(1), "d1c", s.d1c);
  t.rel("ii", "[W,d1c]", br(s.W, s.d1c), Scalar(-1), "d1", s.d1);
  t.rel("ii", "[W,d1*]", br(s.W, s.d1s), Scalar(-1), "d1c*", s.d1cs);
  t.rel("ii", "[W,d1c*]", br(s.W, s.d1cs), Scalar(1), "d1", s.d1, {{"d1*", s.d1s}});
  for (const auto& y : {s.L, s.Lambda, s.H, s.delta1, s.id, s.e_r, s.i_r}) t.zero("ii", br_expr(s.W, y), br(s.W, y));

  // (iii)
  t.rel("iii", "{d1,d1}", br(s.d1, s.d1), Scalar(-1), "L(1)", s.L1);
  t.rel("iii", "{d1c,d1c}", br(s.d1c, s.d1c), Scalar(-1), "L(1)", s.L1);
  t.rel("iii", "{d1*,d1*}", br(s.d1s, s.d1s), Scalar(1), "Lambda(1)", s.Lambda1);
  t.rel("iii", "{d1c*,d1c*}", br(s.d1cs, s.d1cs), Scalar(1), "Lambda(1)", s.Lambda1);
  t.zero("iii", "{d1,d1c}", br(s.d1, s.d1c));
  t.zero("iii", "{d1*,d1c*}", br(s.d1s, s.d1cs));

  // (iv)
  t.rel("iv", "[Lambda,d1]", br(s.Lambda, s.d1), Scalar(1), "d1c*", s.d1cs);
  t.rel("iv", "[L,d1*]", br(s.L, s.d1s), Scalar(-1), "d1c", s.d1c);
  t.rel("iv", "[Lambda,d1c]", br(s.Lambda, s.d1c), Scalar(-1), "d1*", s.d1s);
  t.rel("iv", "[L,d1c*]", br(s.L, s.d1cs), Scalar(1), "d1", s.d1);

  // (v)
  t.rel("v", "{d1*,d1c}", br(s.d1s, s.d1c), Scalar::frac(-1, 2), "H(1)", s.H1);
  t.rel("v", "{d1,d1c*}", br(s.d1, s.d1cs), Scalar::frac(-1, 2), "H(1)", s.H1);

  // (vi)
  t.rel("vi", "{e_r,i_r}", br(s.e_r, s.i_r), Scalar(1), "Id", s.id);
  t.zero("vi", "{e_r,e_r}", br(s.e_r, s.e_r));
  t.zero("vi", "{i_r,i_r}", br(s.i_r, s.i_r));
  for (const auto& u : {s.e_r, s.i_r})
    for (const auto& x : {s.L, s.Lambda, s.H, s.W, s.delta1, s.d1, s.d1s, s.d1c, s.d1cs})
      t.zero("vi", br_expr(u, x), br(u, x));

  // (vii)
  t.rel("vii", "Delta1", s.delta1, Scalar(1), "{d1*,d1c*}", br(s.d1s, s.d1cs), {{"{d1c,d1c*}", br(s.d1c, s.d1cs)}});
  for (const auto& x : {s.L, s.Lambda, s.H, s.W, s.id, s.e_r, s.i_r}) t.zero("vii", br_expr(s.delta1, x), br(s.delta1, x));
  t.rel("vii", "{d1,Delta1}", br(s.d1, s.delta1), Scalar::frac(-1, 2), "d1c(1)", s.d1c_1);
  t.rel("vii", "{d1c,Delta1}", br(s.d1c, s.delta1), Scalar::frac(1, 2), "d1(1)", s.d1_1);
  t.rel("vii", "{d1*,Delta1}", br(s.d1s, s.delta1), Scalar::frac(-1, 2), "d1c*(1)", s.d1cs_1);
  t.rel("vii", "{d1c*,Delta1}", br(s.d1cs, s.delta1), Scalar::frac(1, 2), "d1*(1)", s.d1s_1);

  // Reeb derivative is central; d0 and its adjoint in terms of A(1)
  for (const auto& x : s.generators()) t.zero("center", br_expr(s.lie_r, x), br(s.lie_r, x));
  t.rel("claims", "d0", s.d0, Scalar(1), "e_r(1)", s.e_r1);
  t.rel("claims", "d0*", s.d0s, Scalar(1), "i_r(1)", s.i_r1);
  t.rel("claims", "Delta0", s.delta0, Scalar(1), "Lie_r^2", compose(s.lie_r, s.lie_r));

  // Hodge components of d1
  GradedOperator idi = compose(s.I, compose(s.d1, s.I_inv));
  GradedOperator iinvdi = compose(s.I_inv, compose(s.d1, s.I));
  t.rel("d1c", "d1c", s.d1c, Scalar(1), "I d1 I^-1", idi, {{"I^-1 d1 I", iinvdi}});
  t.rel("d1c", "d1c", s.d1c, Scalar(1), "d1^{0,1} - d1^{1,0}", s.d1_01 - s.d1_10,
        {{"i (d1^{0,1} - d1^{1,0})", Scalar::i() * (s.d1_01 - s.d1_10)}});
  t.rel("d1c", "d1^{1,0}", s.d1_10, Scalar::frac(1, 2), "(d1 + i d1c)", s.d1 + Scalar::i() * s.d1c);
  t.rel("d1c", "d1", s.d1, Scalar(1), "d1^{1,0} + d1^{0,1}", s.d1_10 + s.d1_01);

  t.report.title = "Sasakian supersymmetry relations on " + model.name();
  return t.report;
}

RelationReport hattori_report(const Model& model) {
  SasakianOperators s = sasakian_operators(model);
  TableBuilder t(model.name(), s.space);
  t.rel("hattori", "d", s.d, Scalar(1), "d0 + d1 + d2", s.d0 + s.d1 + s.d2);
  t.rel("hattori", "d0", s.d0, Scalar(1), "e_r Lie_r", compose(s.e_r, s.lie_r));
  t.rel("hattori", "d2", s.d2, Scalar(1), "L i_r", compose(s.L, s.i_r));
  t.zero("hattori", "d0 d0", compose(s.d0, s.d0));
  t.zero("hattori", "d2 d2", compose(s.d2, s.d2));
  t.rel("hattori", "{d0,d2}", br(s.d0, s.d2), Scalar(-1), "{d1,d1}", br(s.d1, s.d1));
  t.report.title = "Hattori splitting on " + model.name();
  return t.report;
}

RelationReport vaisman_structure_report(const Model& model) {
  if (model.pack.kind != StructureKind::vaisman) throw std::invalid_argument("vaisman_structure_report needs a Vaisman model");
  OperatorSet ops = structure_operators(model);
  const SpacePtr& space = ops.space;
  TableBuilder t(model.name(), space);
  const GradedOperator& d = ops.at("d");
  for (const FoliationSpec& fol :
       {model.pack.lee_foliation(), model.pack.reeb_foliation(), model.pack.sigma_foliation()}) {
    HattoriSplit split = hattori_split(d, model, fol);
    GradedOperator sum = GradedOperator::zero(space, 1, Parity::odd);
    std::string expr;
    for (const auto& c : split.components) {
      sum += c;
      expr += (expr.empty() ? "" : " + ") + c.label();
    }
    t.rel("split-" + fol.name, "d", d, Scalar(1), expr, sum);
  }
  t.zero("lee", "Lie_theta", ops.at("Lie_theta"));
  t.zero("lee", "{d,e_theta}", br(d, ops.at("e_theta")));
  t.rel("lee", "{e_theta,i_theta}", br(ops.at("e_theta"), ops.at("i_theta")), Scalar(1), "Id", ops.at("Id"));
  t.rel("reeb", "Lie_r*", adjoint(ops.at("Lie_r")), Scalar(-1), "Lie_r", ops.at("Lie_r"));

  FoliationSpec sigma = model.pack.sigma_foliation();
  HattoriSplit split = hattori_split(d, model, sigma);
  HodgeSplit hs = hodge_split_d1(split, ops.at("W"));
  const GradedOperator& L = ops.at("L");
  const GradedOperator& Lambda = ops.at("Lambda");
  const GradedOperator& H = ops.at("H");
  t.rel("transversal", "d1", split.d1(), Scalar(1), "d1^{1,0} + d1^{0,1}", hs.d1_10 + hs.d1_01);
  t.rel("transversal", "[L,Lambda]", br(L, Lambda), Scalar(1), "(p-n) Id",
        horizontal_weight(space, sigma, model.pack.transversal_complex_dim()));
  t.zero("transversal", "[W,L]", br(ops.at("W"), L));
  t.zero("transversal", "[Lie_r,H]", br(ops.at("Lie_r"), H));
  t.zero("transversal", "[Lie_theta,H]", br(ops.at("Lie_theta"), H));
  t.report.title = "Vaisman structure on " + model.name();
  return t.report;
}

}  // namespace superforms
