#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "superforms/scalar.hpp"

namespace superforms {

constexpr int kMaxGenerators = 16;

// Wedge monomial of coframe generators, stored as a bit set of 0-based
// positions; the implied order is increasing position.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::uint32_t bits) : bits_(bits) {}
  static Monomial from_positions(const std::vector<int>& positions);  // must be strictly increasing

  std::uint32_t bits() const { return bits_; }
  int degree() const { return __builtin_popcount(bits_); }
  bool contains(int pos) const { return (bits_ >> pos) & 1u; }
  std::vector<int> positions() const;

  friend bool operator==(Monomial a, Monomial b) { return a.bits_ == b.bits_; }
  friend bool operator!=(Monomial a, Monomial b) { return a.bits_ != b.bits_; }
  // lexicographic order on the increasing position lists
  friend bool operator<(Monomial a, Monomial b);

 private:
  std::uint32_t bits_ = 0;
};

// Sign of moving the disjoint monomial b past a, i.e. theta^a ^ theta^b = sign * theta^(a|b).
int wedge_sign(Monomial a, Monomial b);

// Degree-k monomials on n generators in lexicographic order.
std::vector<Monomial> monomials_of_degree(int n, int k);

class FormElement {
 public:
  using Terms = std::map<Monomial, Scalar>;

  FormElement() = default;
  explicit FormElement(int dim) : dim_(dim) {}
  static FormElement unit(int dim);
  static FormElement generator(int dim, int pos);
  static FormElement monomial(int dim, Monomial m, Scalar coeff = Scalar(1));

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(Monomial m) const;
  std::set<int> degrees() const;
  FormElement part(int degree) const;
  bool is_homogeneous() const { return degrees().size() <= 1; }

  void add(Monomial m, const Scalar& coeff);

  FormElement& operator+=(const FormElement& o);
  FormElement& operator-=(const FormElement& o);
  FormElement& operator*=(const Scalar& s);
  friend FormElement operator+(FormElement a, const FormElement& b) { return a += b; }
  friend FormElement operator-(FormElement a, const FormElement& b) { return a -= b; }
  friend FormElement operator*(const Scalar& s, FormElement a) { return a *= s; }
  FormElement operator-() const;
  friend bool operator==(const FormElement& a, const FormElement& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  int dim_ = 0;
  Terms terms_;
};

FormElement wedge(const FormElement& a, const FormElement& b);
FormElement contract(int pos, const FormElement& a);
// Star for the orientation given by increasing position on all generators.
FormElement hodge_star(const FormElement& a);
// Star inside the subalgebra generated by `within` (transversal star); terms
// outside the subalgebra are rejected.
FormElement hodge_star_within(const FormElement& a, Monomial within);
// Hermitian, conjugate-linear in the first slot; monomials are orthonormal.
Scalar inner_product(const FormElement& a, const FormElement& b);

// "th1^th2 - 1/2 th1^th3"; labels are position + first_label.
std::string format_monomial(Monomial m, int first_label);
std::string format_form(const FormElement& a, int first_label);

}  // namespace superforms
