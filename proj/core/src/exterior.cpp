#include "superforms/exterior.hpp"

#include <stdexcept>

namespace superforms {

Monomial Monomial::from_positions(const std::vector<int>& positions) {
  std::uint32_t bits = 0;
  int last = -1;
  for (int p : positions) {
    if (p <= last || p < 0 || p >= kMaxGenerators)
      throw std::invalid_argument("monomial positions must be strictly increasing and in range");
    bits |= 1u << p;
    last = p;
  }
  return Monomial(bits);
}

std::vector<int> Monomial::positions() const {
  std::vector<int> out;
  for (int p = 0; p < 32; ++p)
    if (contains(p)) out.push_back(p);
  return out;
}

bool operator<(Monomial a, Monomial b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  // lowest differing position decides: the list holding it sorts first
  std::uint32_t diff = a.bits_ ^ b.bits_;
  if (diff == 0) return false;
  std::uint32_t low = diff & (~diff + 1);
  return (a.bits_ & low) != 0;
}

int wedge_sign(Monomial a, Monomial b) {
  // count pairs (i in a, j in b) with i > j
  int swaps = 0;
  std::uint32_t bb = b.bits();
  for (int p : a.positions()) swaps += __builtin_popcount(bb & ((1u << p) - 1));
  return (swaps & 1) ? -1 : 1;
}

std::vector<Monomial> monomials_of_degree(int n, int k) {
  std::vector<Monomial> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(Monomial::from_positions(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

FormElement FormElement::unit(int dim) { return monomial(dim, Monomial()); }

FormElement FormElement::generator(int dim, int pos) {
  if (pos < 0 || pos >= dim) throw std::out_of_range("generator index out of range");
  return monomial(dim, Monomial(1u << pos));
}

FormElement FormElement::monomial(int dim, Monomial m, Scalar coeff) {
  FormElement f(dim);
  f.add(m, coeff);
  return f;
}

Scalar FormElement::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

std::set<int> FormElement::degrees() const {
  std::set<int> out;
  for (const auto& [m, c] : terms_) out.insert(m.degree());
  return out;
}

FormElement FormElement::part(int degree) const {
  FormElement out(dim_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == degree) out.terms_.emplace(m, c);
  return out;
}

void FormElement::add(Monomial m, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  if (dim_ < 32 && (m.bits() >> dim_) != 0) throw std::invalid_argument("monomial outside generator set");
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

FormElement& FormElement::operator+=(const FormElement& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("form sum: generator-set dimension mismatch");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

FormElement& FormElement::operator-=(const FormElement& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("form difference: generator-set dimension mismatch");
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

FormElement& FormElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

FormElement FormElement::operator-() const {
  FormElement out = *this;
  return out *= Scalar(-1);
}

FormElement wedge(const FormElement& a, const FormElement& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: generator-set dimension mismatch");
  FormElement out(a.dim());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.bits() & mb.bits()) continue;
      Scalar c = ca * cb;
      if (wedge_sign(ma, mb) < 0) c = -c;
      out.add(Monomial(ma.bits() | mb.bits()), c);
    }
  return out;
}

FormElement contract(int pos, const FormElement& a) {
  if (pos < 0 || pos >= a.dim()) throw std::out_of_range("contract: index out of range");
  FormElement out(a.dim());
  for (const auto& [m, c] : a.terms()) {
    if (!m.contains(pos)) continue;
    int before = __builtin_popcount(m.bits() & ((1u << pos) - 1));
    out.add(Monomial(m.bits() & ~(1u << pos)), before % 2 ? -c : c);
  }
  return out;
}

FormElement hodge_star_within(const FormElement& a, Monomial within) {
  FormElement out(a.dim());
  for (const auto& [m, c] : a.terms()) {
    if ((m.bits() & ~within.bits()) != 0) throw std::invalid_argument("hodge_star_within: term outside subalgebra");
    Monomial rest(within.bits() & ~m.bits());
    out.add(rest, wedge_sign(m, rest) < 0 ? -c : c);
  }
  return out;
}

FormElement hodge_star(const FormElement& a) {
  std::uint32_t all = a.dim() >= 32 ? ~0u : ((1u << a.dim()) - 1);
  return hodge_star_within(a, Monomial(all));
}

Scalar inner_product(const FormElement& a, const FormElement& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner_product: generator-set dimension mismatch");
  Scalar out;
  for (const auto& [m, c] : a.terms()) {
    auto it = b.terms().find(m);
    if (it != b.terms().end()) out += c.conj() * it->second;
  }
  return out;
}

std::string format_monomial(Monomial m, int first_label) {
  if (m.bits() == 0) return "1";
  std::string s;
  for (int p : m.positions()) {
    if (!s.empty()) s += "^";
    s += "th" + std::to_string(p + first_label);
  }
  return s;
}

std::string format_form(const FormElement& a, int first_label) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : a.terms()) {
    std::string coeff;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      Rational mag = negative ? Rational(-c.re()) : c.re();
      if (mag != 1) coeff = to_string(mag);
    } else {
      coeff = "(" + c.str() + ")";
    }
    if (s.empty())
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    std::string mono = format_monomial(m, first_label);
    if (coeff.empty())
      s += mono;
    else if (m.bits() == 0)
      s += coeff;
    else
      s += coeff + " " + mono;
  }
  return s;
}

}  // namespace superforms
