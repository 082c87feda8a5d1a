#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "superforms/exterior.hpp"
#include "superforms/matrix.hpp"

namespace superforms {

// Forms on n generators with coefficients in a fiber of dimension f.
// Basis of degree k: (monomial, fiber index) pairs, monomial-major.
class FormSpace {
 public:
  explicit FormSpace(int generators, int fiber = 1);

  int generators() const { return n_; }
  int fiber() const { return fiber_; }
  std::size_t dim(int k) const;
  std::size_t total_dim() const;
  const std::vector<Monomial>& monomials(int k) const { return monomials_.at(k); }
  std::size_t index_of(Monomial m, int fiber_index = 0) const;
  Monomial monomial_at(int k, std::size_t index) const { return monomials_[k][index / fiber_]; }
  int fiber_at(std::size_t index) const { return static_cast<int>(index % fiber_); }

  std::vector<Scalar> coordinates(const FormElement& a, int k, int fiber_index = 0) const;
  FormElement form(int k, const std::vector<Scalar>& coords, int fiber_index = 0) const;

  friend bool operator==(const FormSpace& a, const FormSpace& b) { return a.n_ == b.n_ && a.fiber_ == b.fiber_; }

 private:
  int n_;
  int fiber_;
  std::vector<std::vector<Monomial>> monomials_;
  std::unordered_map<std::uint32_t, std::size_t> rank_;
};

using SpacePtr = std::shared_ptr<const FormSpace>;

enum class Parity { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}

// Degree-shifting, parity-tagged operator stored as one exact block per
// source degree: block(k) maps degree k to degree k + shift.
class GradedOperator {
 public:
  GradedOperator() = default;
  GradedOperator(SpacePtr space, int shift, Parity parity, std::vector<Matrix> blocks, std::string label = {});

  static GradedOperator zero(SpacePtr space, int shift, Parity parity, std::string label = "0");
  static GradedOperator identity(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  int shift() const { return shift_; }
  Parity parity() const { return parity_; }
  bool odd() const { return parity_ == Parity::odd; }
  const Matrix& block(int k) const { return blocks_.at(k); }
  const std::vector<Matrix>& blocks() const { return blocks_; }
  int top_degree() const { return space_->generators(); }

  const std::string& label() const { return label_; }
  GradedOperator& set_label(std::string label) {
    label_ = std::move(label);
    return *this;
  }
  // Present when built by reeb_power: the (base label, power) pair.
  const std::optional<std::pair<std::string, int>>& reeb_label() const { return reeb_label_; }
  void set_reeb_label(std::string base, int power) { reeb_label_ = std::make_pair(std::move(base), power); }

  bool is_zero() const;
  bool is_real() const;
  bool parity_matches_shift() const { return ((shift_ % 2) + 2) % 2 == static_cast<int>(parity_); }

  Matrix apply(int k, const Matrix& coords) const { return block(k) * coords; }
  FormElement apply(const FormElement& a) const;  // scalar (fiber 1) spaces only

  // Full matrix on the direct sum of all degrees (degree-major ordering).
  Matrix total_matrix() const;

  GradedOperator& operator+=(const GradedOperator& o);
  GradedOperator& operator-=(const GradedOperator& o);
  GradedOperator& operator*=(const Scalar& s);
  friend GradedOperator operator+(GradedOperator a, const GradedOperator& b) { return a += b; }
  friend GradedOperator operator-(GradedOperator a, const GradedOperator& b) { return a -= b; }
  friend GradedOperator operator*(const Scalar& s, GradedOperator a) { return a *= s; }
  GradedOperator operator-() const;

  // Operators with different shifts are equal only when both vanish.
  friend bool operator==(const GradedOperator& a, const GradedOperator& b);

 private:
  SpacePtr space_;
  int shift_ = 0;
  Parity parity_ = Parity::even;
  std::vector<Matrix> blocks_;
  std::string label_;
  std::optional<std::pair<std::string, int>> reeb_label_;
};

struct BlockMismatch {
  int degree = 0;
  EntryMismatch entry;
};

// First degree and entry where a and b differ (shape-normalized).
std::optional<BlockMismatch> compare_operators(const GradedOperator& a, const GradedOperator& b);

GradedOperator compose(const GradedOperator& a, const GradedOperator& b);
// AB - (-1)^{|A||B|} BA
GradedOperator supercommutator(const GradedOperator& a, const GradedOperator& b);
GradedOperator adjoint(const GradedOperator& a);
// A o Lie_r^k, after checking [A, Lie_r] = 0.
GradedOperator reeb_power(const GradedOperator& a, const GradedOperator& lie_r, int k);

// Values of an operator on 1 and on each generator theta^k.
struct GeneratorAction {
  FormElement unit;
  std::vector<FormElement> generators;
};

// Unique first-order operator D with the given values that satisfies
// D(ab) = D(a)b + (-1)^{|D||a|} a D(b) - D(1)ab  (a derivation when D(1) = 0).
GradedOperator extend_derivation(const SpacePtr& space, Parity parity, const GeneratorAction& action,
                                 std::string label = {});

// Wedge with a form / contraction with a generator on a scalar space.
GradedOperator multiplication(const SpacePtr& space, const FormElement& form, std::string label = {});
GradedOperator contraction(const SpacePtr& space, int pos, std::string label = {});

// fiber_matrix (x) op, mapping a scalar-space operator to a space with fiber.
GradedOperator lift(const GradedOperator& op, const SpacePtr& target, const Matrix& fiber_matrix);

// Pointwise first-order test on a scalar space: returns the first failing
// pair of monomials (as a description) or nothing if D is first order.
std::optional<std::string> first_order_defect(const GradedOperator& d);

}  // namespace superforms
