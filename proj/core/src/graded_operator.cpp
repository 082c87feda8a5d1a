#include "superforms/graded_operator.hpp"

#include <stdexcept>

namespace superforms {

namespace {

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_same_space(const GradedOperator& a, const GradedOperator& b, const char* what) {
  if (!a.space() || !b.space() || !(*a.space() == *b.space()))
    throw std::invalid_argument(std::string(what) + ": operators act on different spaces");
}

}  // namespace

FormSpace::FormSpace(int generators, int fiber) : n_(generators), fiber_(fiber) {
  if (generators < 0 || generators > kMaxGenerators) throw std::invalid_argument("unsupported generator count");
  if (fiber < 1) throw std::invalid_argument("fiber dimension must be positive");
  for (int k = 0; k <= n_; ++k) {
    monomials_.push_back(monomials_of_degree(n_, k));
    for (std::size_t i = 0; i < monomials_.back().size(); ++i) rank_[monomials_.back()[i].bits()] = i;
  }
}

std::size_t FormSpace::dim(int k) const {
  if (k < 0 || k > n_) return 0;
  return static_cast<std::size_t>(binomial(n_, k)) * fiber_;
}

std::size_t FormSpace::total_dim() const { return (std::size_t{1} << n_) * fiber_; }

std::size_t FormSpace::index_of(Monomial m, int fiber_index) const {
  return rank_.at(m.bits()) * fiber_ + fiber_index;
}

std::vector<Scalar> FormSpace::coordinates(const FormElement& a, int k, int fiber_index) const {
  std::vector<Scalar> v(dim(k));
  for (const auto& [m, c] : a.terms())
    if (m.degree() == k) v[index_of(m, fiber_index)] = c;
  return v;
}

FormElement FormSpace::form(int k, const std::vector<Scalar>& coords, int fiber_index) const {
  FormElement out(n_);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (fiber_at(i) == fiber_index) out.add(monomial_at(k, i), coords[i]);
  return out;
}

GradedOperator::GradedOperator(SpacePtr space, int shift, Parity parity, std::vector<Matrix> blocks,
                               std::string label)
    : space_(std::move(space)), shift_(shift), parity_(parity), blocks_(std::move(blocks)), label_(std::move(label)) {
  int n = space_->generators();
  if (static_cast<int>(blocks_.size()) != n + 1) throw std::invalid_argument("operator needs one block per degree");
  for (int k = 0; k <= n; ++k) {
    const Matrix& b = blocks_[k];
    if (b.rows() != space_->dim(k + shift_) || b.cols() != space_->dim(k))
      throw std::invalid_argument("operator block has inconsistent shape at degree " + std::to_string(k));
  }
}

GradedOperator GradedOperator::zero(SpacePtr space, int shift, Parity parity, std::string label) {
  std::vector<Matrix> blocks;
  for (int k = 0; k <= space->generators(); ++k) blocks.emplace_back(space->dim(k + shift), space->dim(k));
  return GradedOperator(std::move(space), shift, parity, std::move(blocks), std::move(label));
}

GradedOperator GradedOperator::identity(SpacePtr space) {
  std::vector<Matrix> blocks;
  for (int k = 0; k <= space->generators(); ++k) blocks.push_back(Matrix::identity(space->dim(k)));
  return GradedOperator(std::move(space), 0, Parity::even, std::move(blocks), "Id");
}

bool GradedOperator::is_zero() const {
  for (const auto& b : blocks_)
    if (!b.is_zero()) return false;
  return true;
}

bool GradedOperator::is_real() const {
  for (const auto& b : blocks_)
    if (!b.is_real()) return false;
  return true;
}

FormElement GradedOperator::apply(const FormElement& a) const {
  if (space_->fiber() != 1) throw std::invalid_argument("apply(FormElement) needs a scalar space");
  FormElement out(space_->generators());
  for (int k : a.degrees()) {
    if (k + shift_ < 0 || k + shift_ > space_->generators()) continue;
    Matrix v = block(k) * Matrix::column(space_->coordinates(a, k));
    out += space_->form(k + shift_, v.col_vector(0));
  }
  return out;
}

Matrix GradedOperator::total_matrix() const {
  int n = space_->generators();
  std::vector<std::size_t> offset(n + 2, 0);
  for (int k = 0; k <= n; ++k) offset[k + 1] = offset[k] + space_->dim(k);
  Matrix out(offset[n + 1], offset[n + 1]);
  for (int k = 0; k <= n; ++k) {
    int t = k + shift_;
    if (t < 0 || t > n) continue;
    const Matrix& b = blocks_[k];
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(offset[t] + r, offset[k] + c) = b(r, c);
  }
  return out;
}

GradedOperator& GradedOperator::operator+=(const GradedOperator& o) {
  require_same_space(*this, o, "operator sum");
  if (o.shift_ != shift_ || o.parity_ != parity_) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    throw std::invalid_argument("operator sum: shift or parity mismatch");
  }
  for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] += o.blocks_[k];
  reeb_label_.reset();
  return *this;
}

GradedOperator& GradedOperator::operator-=(const GradedOperator& o) { return *this += -o; }

GradedOperator& GradedOperator::operator*=(const Scalar& s) {
  for (auto& b : blocks_) b *= s;
  reeb_label_.reset();
  return *this;
}

GradedOperator GradedOperator::operator-() const {
  GradedOperator out = *this;
  for (auto& b : out.blocks_) b = -b;
  out.reeb_label_.reset();
  return out;
}

bool operator==(const GradedOperator& a, const GradedOperator& b) {
  if (!(*a.space_ == *b.space_)) return false;
  if (a.shift_ != b.shift_) return a.is_zero() && b.is_zero();
  return a.blocks_ == b.blocks_;
}

std::optional<BlockMismatch> compare_operators(const GradedOperator& a, const GradedOperator& b) {
  require_same_space(a, b, "compare");
  if (a.shift() != b.shift()) {
    // nonzero operators with different shifts: report the first nonzero entry
    const GradedOperator& nz = a.is_zero() ? b : a;
    if (a.is_zero() && b.is_zero()) return std::nullopt;
    for (int k = 0; k <= nz.top_degree(); ++k) {
      const Matrix& m = nz.block(k);
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
          if (!m(r, c).is_zero()) {
            EntryMismatch e{r, c, &nz == &a ? m(r, c) : Scalar(), &nz == &b ? m(r, c) : Scalar()};
            return BlockMismatch{k, e};
          }
    }
    return std::nullopt;
  }
  for (int k = 0; k <= a.top_degree(); ++k)
    if (auto e = first_mismatch(a.block(k), b.block(k))) return BlockMismatch{k, *e};
  return std::nullopt;
}

GradedOperator compose(const GradedOperator& a, const GradedOperator& b) {
  require_same_space(a, b, "compose");
  const SpacePtr& space = a.space();
  int n = space->generators();
  int shift = a.shift() + b.shift();
  std::vector<Matrix> blocks;
  for (int k = 0; k <= n; ++k) {
    int mid = k + b.shift();
    if (mid < 0 || mid > n || k + shift < 0 || k + shift > n) {
      blocks.emplace_back(space->dim(k + shift), space->dim(k));
      continue;
    }
    const Matrix& bb = b.block(k);
    const Matrix& ab = a.block(mid);
    if (bb.is_zero() || ab.is_zero())
      blocks.emplace_back(space->dim(k + shift), space->dim(k));
    else
      blocks.push_back(ab * bb);
  }
  std::string label = a.label().empty() || b.label().empty() ? std::string() : a.label() + " " + b.label();
  return GradedOperator(space, shift, a.parity() + b.parity(), std::move(blocks), label);
}

GradedOperator supercommutator(const GradedOperator& a, const GradedOperator& b) {
  GradedOperator ab = compose(a, b);
  GradedOperator ba = compose(b, a);
  GradedOperator out = (a.odd() && b.odd()) ? ab + ba : ab - ba;
  out.set_label("{" + a.label() + "," + b.label() + "}");
  return out;
}

GradedOperator adjoint(const GradedOperator& a) {
  const SpacePtr& space = a.space();
  int n = space->generators();
  std::vector<Matrix> blocks;
  for (int k = 0; k <= n; ++k) {
    int src = k - a.shift();  // block(k) of A* is block(k - shift)^H of A
    if (src < 0 || src > n)
      blocks.emplace_back(space->dim(k - a.shift()), space->dim(k));
    else
      blocks.push_back(a.block(src).adjoint());
  }
  return GradedOperator(space, -a.shift(), a.parity(), std::move(blocks), a.label() + "*");
}

GradedOperator reeb_power(const GradedOperator& a, const GradedOperator& lie_r, int k) {
  if (k < 0) throw std::invalid_argument("reeb_power: negative power");
  if (!supercommutator(a, lie_r).is_zero())
    throw std::invalid_argument("reeb_power: " + a.label() + " does not commute with the Reeb Lie derivative");
  GradedOperator out = a;
  for (int i = 0; i < k; ++i) out = compose(out, lie_r);
  out.set_label(a.label() + "(" + std::to_string(k) + ")");
  out.set_reeb_label(a.label(), k);
  return out;
}

GradedOperator extend_derivation(const SpacePtr& space, Parity parity, const GeneratorAction& action,
                                 std::string label) {
  int n = space->generators();
  if (space->fiber() != 1) throw std::invalid_argument("extend_derivation needs a scalar space");
  if (static_cast<int>(action.generators.size()) != n)
    throw std::invalid_argument("extend_derivation: need one value per generator");

  std::optional<int> shift;
  auto note_degree = [&](const FormElement& f, int base) {
    if (f.dim() != n) throw std::invalid_argument("extend_derivation: value on wrong generator set");
    for (int deg : f.degrees()) {
      int s = deg - base;
      if (shift && *shift != s) throw std::invalid_argument("extend_derivation: action values have mixed degree shift");
      shift = s;
    }
  };
  note_degree(action.unit, 0);
  for (const auto& g : action.generators) note_degree(g, 1);
  if (!shift) shift = static_cast<int>(parity);
  if (((*shift % 2) + 2) % 2 != static_cast<int>(parity))
    throw std::invalid_argument("extend_derivation: action inconsistent with declared parity");

  // derivation part: delta(theta^k) = D(theta^k) - D(1) ^ theta^k
  std::vector<FormElement> delta;
  for (int g = 0; g < n; ++g)
    delta.push_back(action.generators[g] - wedge(action.unit, FormElement::generator(n, g)));
  Scalar sign_past_generator = parity == Parity::odd ? Scalar(-1) : Scalar(1);

  std::unordered_map<std::uint32_t, FormElement> memo;
  memo.emplace(0u, FormElement(n));
  std::vector<Matrix> blocks;
  for (int k = 0; k <= n; ++k) {
    Matrix block(space->dim(k + *shift), space->dim(k));
    for (std::size_t c = 0; c < space->monomials(k).size(); ++c) {
      Monomial m = space->monomials(k)[c];
      if (k > 0) {
        std::uint32_t low = m.bits() & (~m.bits() + 1);
        int first = __builtin_ctz(m.bits());
        Monomial rest(m.bits() & ~low);
        FormElement rest_form = FormElement::monomial(n, rest);
        FormElement value = wedge(delta[first], rest_form) +
                            sign_past_generator * wedge(FormElement::generator(n, first), memo.at(rest.bits()));
        memo.emplace(m.bits(), std::move(value));
      }
      FormElement image = memo.at(m.bits()) + wedge(action.unit, FormElement::monomial(n, m));
      for (const auto& [mono, coeff] : image.terms()) block(space->index_of(mono), c) = coeff;
    }
    blocks.push_back(std::move(block));
  }
  return GradedOperator(space, *shift, parity, std::move(blocks), std::move(label));
}

GradedOperator multiplication(const SpacePtr& space, const FormElement& form, std::string label) {
  int n = space->generators();
  auto degrees = form.degrees();
  if (degrees.size() > 1) throw std::invalid_argument("multiplication: form must be homogeneous");
  int deg = degrees.empty() ? 0 : *degrees.begin();
  std::vector<Matrix> blocks;
  for (int k = 0; k <= n; ++k) {
    Matrix block(space->dim(k + deg), space->dim(k));
    for (std::size_t c = 0; c < space->monomials(k).size(); ++c) {
      FormElement image = wedge(form, FormElement::monomial(n, space->monomials(k)[c]));
      for (const auto& [mono, coeff] : image.terms()) block(space->index_of(mono), c) = coeff;
    }
    blocks.push_back(std::move(block));
  }
  return GradedOperator(space, deg, static_cast<Parity>(deg % 2), std::move(blocks), std::move(label));
}

GradedOperator contraction(const SpacePtr& space, int pos, std::string label) {
  int n = space->generators();
  std::vector<Matrix> blocks;
  for (int k = 0; k <= n; ++k) {
    Matrix block(space->dim(k - 1), space->dim(k));
    for (std::size_t c = 0; c < space->monomials(k).size(); ++c) {
      FormElement image = contract(pos, FormElement::monomial(n, space->monomials(k)[c]));
      for (const auto& [mono, coeff] : image.terms()) block(space->index_of(mono), c) = coeff;
    }
    blocks.push_back(std::move(block));
  }
  return GradedOperator(space, -1, Parity::odd, std::move(blocks), std::move(label));
}

GradedOperator lift(const GradedOperator& op, const SpacePtr& target, const Matrix& fiber_matrix) {
  if (op.space()->fiber() != 1 || target->generators() != op.space()->generators())
    throw std::invalid_argument("lift: source must be the scalar space on the same generators");
  if (fiber_matrix.rows() != static_cast<std::size_t>(target->fiber()) || fiber_matrix.cols() != fiber_matrix.rows())
    throw std::invalid_argument("lift: fiber matrix has wrong size");
  std::vector<Matrix> blocks;
  for (int k = 0; k <= op.top_degree(); ++k) blocks.push_back(Matrix::kron(op.block(k), fiber_matrix));
  return GradedOperator(target, op.shift(), op.parity(), std::move(blocks), op.label());
}

std::optional<std::string> first_order_defect(const GradedOperator& d) {
  const SpacePtr& space = d.space();
  if (space->fiber() != 1) throw std::invalid_argument("first_order_defect needs a scalar space");
  int n = space->generators();
  FormElement d1 = d.apply(FormElement::unit(n));
  std::vector<Monomial> all;
  for (int k = 0; k <= n; ++k)
    for (auto m : space->monomials(k)) all.push_back(m);
  std::unordered_map<std::uint32_t, FormElement> image;
  for (auto m : all) image.emplace(m.bits(), d.apply(FormElement::monomial(n, m)));
  for (auto ma : all)
    for (auto mb : all) {
      FormElement a = FormElement::monomial(n, ma);
      FormElement b = FormElement::monomial(n, mb);
      FormElement ab = wedge(a, b);
      Scalar sign = (d.odd() && ma.degree() % 2) ? Scalar(-1) : Scalar(1);
      FormElement defect = d.apply(ab) - wedge(image.at(ma.bits()), b) - sign * wedge(a, image.at(mb.bits())) +
                           wedge(d1, ab);
      if (!defect.is_zero())
        return "defect on (" + format_monomial(ma, 1) + ", " + format_monomial(mb, 1) + "): " + format_form(defect, 1);
    }
  return std::nullopt;
}

}  // namespace superforms
