#include "superforms/hodge.hpp"

#include <stdexcept>

namespace superforms {

std::size_t CochainComplex::dim(int k) const {
  if (k < lo || k > hi()) return 0;
  return basis[k - lo].cols();
}

Matrix CochainComplex::d(int k) const {
  if (k >= lo && k < hi()) return diff[k - lo];
  return Matrix(dim(k + 1), dim(k));
}

Matrix CochainComplex::gram(int k) const {
  if (k < lo || k > hi()) return Matrix();
  return basis[k - lo].adjoint() * basis[k - lo];
}

Matrix CochainComplex::embed(int k) const {
  if (k < lo || k > hi()) return Matrix();
  return basis[k - lo];
}

void check_complex(const CochainComplex& cx) {
  if (cx.basis.empty()) throw std::invalid_argument(cx.label + ": empty complex");
  if (cx.diff.size() + 1 != cx.basis.size()) throw std::invalid_argument(cx.label + ": wrong number of differentials");
  for (int k = cx.lo; k < cx.hi(); ++k) {
    const Matrix& dk = cx.diff[k - cx.lo];
    if (dk.rows() != cx.dim(k + 1) || dk.cols() != cx.dim(k))
      throw std::invalid_argument(cx.label + ": differential shape mismatch at degree " + std::to_string(k));
  }
  for (int k = cx.lo; k + 1 < cx.hi(); ++k)
    if (!(cx.d(k + 1) * cx.d(k)).is_zero())
      throw std::invalid_argument(cx.label + ": d^2 != 0 at degree " + std::to_string(k));
}

CochainComplex abstract_complex(std::string label, int lo, std::vector<Matrix> diff, std::vector<std::size_t> dims) {
  CochainComplex cx;
  cx.label = std::move(label);
  cx.lo = lo;
  for (std::size_t n : dims) cx.basis.push_back(Matrix::identity(n));
  cx.diff = std::move(diff);
  check_complex(cx);
  return cx;
}

CochainComplex subcomplex(std::string label, const GradedOperator& d, std::vector<Matrix> spans) {
  CochainComplex cx;
  cx.label = std::move(label);
  cx.ambient = d.space();
  cx.lo = 0;
  cx.basis = std::move(spans);
  for (int k = 0; k + 1 < static_cast<int>(cx.basis.size()); ++k) {
    Matrix image = d.block(k) * cx.basis[k];
    std::optional<Matrix> coords = solve(cx.basis[k + 1], image);
    if (!coords)
      throw std::invalid_argument(cx.label + ": d does not preserve the subspace at degree " + std::to_string(k));
    cx.diff.push_back(std::move(*coords));
  }
  check_complex(cx);
  return cx;
}

CochainComplex full_complex(const Model& model) {
  GradedOperator d = ce_differential(model);
  std::vector<Matrix> spans;
  for (int k = 0; k <= model.dim(); ++k) spans.push_back(Matrix::identity(d.space()->dim(k)));
  return subcomplex("full", d, std::move(spans));
}

namespace {

GradedOperator lifted_contraction(const Model& model, const SpacePtr& space, int pos) {
  return on_all_sectors(contraction(scalar_space(model), pos), space);
}

CochainComplex kernel_subcomplex(const Model& model, const FoliationSpec& fol, bool with_contractions,
                                 const std::string& label) {
  GradedOperator d = ce_differential(model);
  const SpacePtr& space = d.space();
  std::vector<GradedOperator> conditions;
  for (int v : fol.positions) {
    GradedOperator iv = lifted_contraction(model, space, v);
    conditions.push_back(supercommutator(d, iv));
    if (with_contractions) conditions.push_back(iv);
  }
  std::vector<Matrix> spans;
  for (int k = 0; k <= model.dim(); ++k) {
    std::vector<Matrix> rows;
    for (const auto& c : conditions) rows.push_back(c.block(k));
    Matrix stacked = Matrix::vstack(rows, space->dim(k));
    spans.push_back(canonical_basis(nullspace(stacked)));
  }
  return subcomplex(label, d, std::move(spans));
}

}  // namespace

CochainComplex basic_subcomplex(const Model& model, const FoliationSpec& fol) {
  return kernel_subcomplex(model, fol, true, "basic(" + fol.name + ")");
}

CochainComplex invariant_subcomplex(const Model& model, const FoliationSpec& fol) {
  return kernel_subcomplex(model, fol, false, "invariant(" + fol.name + ")");
}

int CohomologyReport::betti_at(int k) const {
  if (k < lo || k >= lo + static_cast<int>(betti.size())) return 0;
  return betti[k - lo];
}

int CohomologyReport::euler_characteristic() const {
  int chi = 0;
  for (std::size_t i = 0; i < betti.size(); ++i) chi += ((lo + static_cast<int>(i)) % 2 == 0 ? 1 : -1) * betti[i];
  return chi;
}

CohomologyReport cohomology(const CochainComplex& cx) {
  check_complex(cx);
  CohomologyReport h;
  h.label = cx.label;
  h.lo = cx.lo;
  for (int k = cx.lo; k <= cx.hi(); ++k) {
    Matrix dk = cx.d(k);
    Matrix prev = cx.d(k - 1);
    int by_rank = static_cast<int>(cx.dim(k) - rank(dk) - rank(prev));
    // Closed and orthogonal (Gram metric) to the image of the previous differential.
    Matrix conditions = Matrix::vstack({dk, prev.adjoint() * cx.gram(k)}, cx.dim(k));
    Matrix reps = canonical_basis(nullspace(conditions));
    if (static_cast<int>(reps.cols()) != by_rank)
      throw std::logic_error(cx.label + ": harmonic representatives disagree with the rank count at degree " +
                             std::to_string(k));
    h.betti.push_back(by_rank);
    h.ambient_representatives.push_back(canonical_basis(cx.embed(k) * reps));
    h.representatives.push_back(std::move(reps));
  }
  return h;
}

Matrix boundaries(const CochainComplex& cx, int k) { return column_space(cx.d(k - 1)); }

Matrix class_coordinates(const CochainComplex& cx, const CohomologyReport& h, int k, const Matrix& cocycles) {
  if (!(cx.d(k) * cocycles).is_zero()) throw std::invalid_argument("class_coordinates: input is not closed");
  int b = h.betti_at(k);
  if (cocycles.cols() == 0) return Matrix(b, 0);
  Matrix reps = b > 0 ? h.representatives[k - h.lo] : Matrix(cx.dim(k), 0);
  Matrix bnd = boundaries(cx, k);
  std::optional<Matrix> x = solve(Matrix::hstack({reps, bnd}, cx.dim(k)), cocycles);
  if (!x) throw std::logic_error("class_coordinates: cocycle outside harmonic + exact");
  Matrix out(b, cocycles.cols());
  for (int r = 0; r < b; ++r)
    for (std::size_t c = 0; c < cocycles.cols(); ++c) out(r, c) = (*x)(r, c);
  return out;
}

GradedOperator laplacian(const Model& model) {
  GradedOperator d = ce_differential(model);
  return supercommutator(d, adjoint(d)).set_label("Delta");
}

Matrix harmonic_space(const Model& model, int k) { return canonical_basis(nullspace(laplacian(model).block(k))); }

Matrix basic_laplacian(const CochainComplex& cx, int k) {
  auto metric_adjoint = [&](int j) {  // adjoint of d(j): degree j+1 -> j
    if (cx.dim(j) == 0 || cx.dim(j + 1) == 0) return Matrix(cx.dim(j), cx.dim(j + 1));
    return *inverse(cx.gram(j)) * cx.d(j).adjoint() * cx.gram(j + 1);
  };
  return metric_adjoint(k) * cx.d(k) + cx.d(k - 1) * metric_adjoint(k - 1);
}

GradedOperator split_laplacian(const Model& model, const FoliationSpec& fol) {
  GradedOperator d = ce_differential(model);
  HattoriSplit split = hattori_split(d, model, fol);
  GradedOperator out = supercommutator(split.d1(), adjoint(split.d1()));
  for (int v : fol.positions) {
    GradedOperator lie = supercommutator(d, lifted_contraction(model, d.space(), v));
    out -= compose(lie, lie);
  }
  return out.set_label("Delta_s");
}

std::vector<Matrix> hodge_star_blocks(const SpacePtr& space, Monomial within) {
  int m = within.degree();
  int f = space->fiber();
  std::vector<Matrix> blocks;
  for (int k = 0; k <= space->generators(); ++k) {
    std::size_t rows = (k <= m) ? space->dim(m - k) : 0;
    Matrix b(rows, space->dim(k));
    if (k <= m) {
      const auto& mons = space->monomials(k);
      for (std::size_t i = 0; i < mons.size(); ++i) {
        if ((mons[i].bits() & ~within.bits()) != 0) continue;
        Monomial rest(within.bits() & ~mons[i].bits());
        Scalar sign(wedge_sign(mons[i], rest));
        for (int fi = 0; fi < f; ++fi) b(space->index_of(rest, fi), i * f + fi) = sign;
      }
    }
    blocks.push_back(std::move(b));
  }
  return blocks;
}

GradedOperator wedge_operator(const Model& model, const FormElement& form) {
  return on_all_sectors(multiplication(scalar_space(model), form), form_space(model));
}

GradedOperator lefschetz_operator(const Model& model) {
  return wedge_operator(model, model.pack.omega0).set_label("L");
}

void CheckList::add(std::string group, std::string name, bool ok, std::string detail, bool normative) {
  items.push_back({std::move(group), std::move(name), ok, normative, std::move(detail)});
}

bool CheckList::all_ok() const {
  for (const auto& c : items)
    if (c.normative && !c.ok) return false;
  return true;
}

void CheckList::append(const CheckList& other) { items.insert(items.end(), other.items.begin(), other.items.end()); }

namespace {

Monomial horizontal_mask(int n, const FoliationSpec& fol) {
  std::uint32_t all = (1u << n) - 1;
  return Monomial(all & ~fol.vertical_mask().bits());
}

}  // namespace

RelationReport basic_adjoint_check(const Model& model, const FoliationSpec& fol) {
  CochainComplex b = basic_subcomplex(model, fol);
  GradedOperator d = ce_differential(model);
  const SpacePtr& space = d.space();
  GradedOperator dstar = adjoint(d);
  GradedOperator hor = vertical_projector(space, fol, 0);
  std::vector<Matrix> star = hodge_star_blocks(space, horizontal_mask(model.dim(), fol));
  int m = model.dim() - fol.rank();
  RelationReport report;
  report.title = "Basic adjoint on " + model.name() + " / " + fol.name;
  for (int k = 1; k <= m; ++k) {
    Matrix alpha = b.embed(k);
    Matrix beta = b.embed(k - 1);
    Matrix dh = hor.block(k - 1) * (dstar.block(k) * alpha);
    Scalar sign((m * (k + 1) + 1) % 2 == 0 ? 1 : -1);
    Matrix dbas = sign * (star[m - k + 1] * (d.block(m - k) * (star[k] * alpha)));
    Matrix lhs = beta.adjoint() * dh;
    Matrix rhs = beta.adjoint() * dbas;
    RelationEntry e;
    e.group = "basic-adjoint";
    e.scope = model.name();
    e.lhs = "g(d*_h a, b)";
    e.rhs = "g(d*_bas a, b)";
    e.name = e.lhs + " = " + e.rhs + " on degree " + std::to_string(k);
    e.nonvacuous = !lhs.is_zero();
    e.rhs_nonzero = !rhs.is_zero();
    if (auto mm = first_mismatch(lhs, rhs)) {
      e.verdict = Verdict::fail;
      e.mismatch = BlockMismatch{k, *mm};
    } else {
      e.verdict = Verdict::pass;
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

CheckList transversal_hodge_package(const Model& model) {
  FoliationSpec fol = model.pack.kahler_foliation();
  int n = model.pack.transversal_complex_dim();
  CochainComplex b = basic_subcomplex(model, fol);
  CohomologyReport h = cohomology(b);
  GradedOperator L = lefschetz_operator(model);
  GradedOperator w = weil_operator(model, fol);
  const SpacePtr& space = L.space();
  CheckList out;
  out.title = "Transversal Hodge package on " + model.name() + " / " + fol.name;
  std::string scope = model.name() + "/" + fol.name;

  for (int k = 0; k <= n; ++k) {
    int target = 2 * n - k;
    Matrix ambient = b.embed(k) * h.representatives[k];
    for (int j = 0; j < n - k; ++j) ambient = L.block(k + 2 * j) * ambient;
    std::optional<Matrix> target_coords = solve(b.embed(target), ambient);
    bool ok = false;
    std::string detail;
    if (target_coords) {
      Matrix cls = class_coordinates(b, h, target, *target_coords);
      std::size_t r = rank(cls);
      ok = h.betti_at(k) == h.betti_at(target) && static_cast<int>(r) == h.betti_at(k);
      detail = "rank " + std::to_string(r) + ", dims " + std::to_string(h.betti_at(k)) + " -> " +
               std::to_string(h.betti_at(target));
    } else {
      detail = "L does not preserve basic forms";
    }
    out.add("lefschetz", scope + ": L^" + std::to_string(n - k) + ": H^" + std::to_string(k) + "_bas -> H^" +
                             std::to_string(target) + "_bas bijective",
            ok, detail);
  }

  for (int k = 0; k <= 2 * n; ++k) {
    const Matrix& reps = h.ambient_representatives[k];
    bool stable = true;
    std::size_t total = 0;
    for (int p = 0; p <= k; ++p) {
      int q = k - p;
      if (p > n || q > n) continue;
      Matrix piece = bigrading_projector(w, fol, p, q, 0).block(k) * reps;
      stable = stable && in_span(reps, piece);
      total += rank(piece);
    }
    out.add("pq", scope + ": harmonic basic " + std::to_string(k) + "-forms stable under Pi^{p,q}",
            stable && static_cast<int>(total) == h.betti_at(k),
            "sum of (p,q) ranks " + std::to_string(total) + " of " + std::to_string(h.betti_at(k)));
  }

  for (const auto& e : basic_adjoint_check(model, fol).entries)
    out.add("basic-adjoint", scope + ": " + e.name, e.holds());

  GradedOperator ds = split_laplacian(model, fol);
  bool psd = true;
  for (int k = 0; k <= model.dim(); ++k) psd = psd && is_positive_semidefinite(ds.block(k));
  out.add("positivity", scope + ": Delta_s self-adjoint and positive semidefinite", psd);

  bool commute = true;
  for (int hdeg = 0; hdeg <= model.dim(); ++hdeg)
    commute = commute && supercommutator(horizontal_projector(space, fol, hdeg), ds).is_zero();
  out.add("projector", scope + ": [Pi_hor, Delta_s] = 0", commute);

  bool harmonic_char = true, eigen = true;
  for (int k = 0; k <= 2 * n; ++k) {
    Matrix lap = basic_laplacian(b, k);
    harmonic_char = harmonic_char && same_span(nullspace(lap), h.representatives[k]);
    Matrix closed_nonzero = intersect_spans(nullspace(b.d(k)), column_space(lap));
    eigen = eigen && in_span(boundaries(b, k), closed_nonzero);
  }
  out.add("harmonic", scope + ": ker Delta_bas = closed basic forms orthogonal to basic exact forms", harmonic_char);
  out.add("eigen", scope + ": closed forms in im Delta_bas are exact", eigen);

  GradedOperator d = ce_differential(model);
  bool lie_vanish = true, contraction_vanish = true;
  for (int k = 0; k <= model.dim(); ++k) {
    Matrix kernel = nullspace(ds.block(k));
    for (int v : fol.positions) {
      GradedOperator iv = lifted_contraction(model, space, v);
      GradedOperator lie = supercommutator(d, iv);
      lie_vanish = lie_vanish && (lie.block(k) * kernel).is_zero();
      if (k > 0) contraction_vanish = contraction_vanish && (iv.block(k) * kernel).is_zero();
    }
  }
  out.add("kernel", scope + ": Lie_v vanishes on ker Delta_s", lie_vanish);
  out.add("kernel", scope + ": i_v vanishes on ker Delta_s", contraction_vanish,
          contraction_vanish ? "" : "leafwise forms lie in ker Delta_s", false);
  return out;
}

}  // namespace superforms
