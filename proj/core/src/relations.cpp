#include "superforms/relations.hpp"

#include <map>

namespace superforms {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::pass_variant:
      return "pass-variant";
    case Verdict::fail:
      return "fail";
  }
  return "fail";
}

bool RelationReport::all_hold() const {
  for (const auto& e : entries)
    if (!e.holds()) return false;
  return true;
}

bool RelationReport::all_printed() const {
  for (const auto& e : entries)
    if (e.verdict != Verdict::pass) return false;
  return true;
}

void RelationReport::append(const RelationReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

std::string scaled_expr(const Scalar& coeff, const std::string& base) {
  if (coeff.is_zero() || base == "0") return "0";
  if (coeff == Scalar(1)) return base;
  if (coeff == Scalar(-1)) return "-" + base;
  if (coeff.is_real()) return coeff.str() + " " + base;
  return "(" + coeff.str() + ") " + base;
}

RelationEntry check_relation(const RelationSpec& spec, const std::string& scope) {
  RelationEntry e;
  e.group = spec.group;
  e.scope = scope;
  e.lhs = spec.lhs_expr;
  e.rhs = scaled_expr(spec.coeff, spec.base_expr);
  e.name = e.lhs + " = " + e.rhs;
  GradedOperator rhs = spec.coeff * spec.base;
  e.nonvacuous = !spec.lhs.is_zero();
  e.rhs_nonzero = !rhs.is_zero();
  e.mismatch = compare_operators(spec.lhs, rhs);
  if (!e.mismatch) {
    e.verdict = Verdict::pass;
    return e;
  }
  auto accept = [&](const Scalar& c, const std::string& base_expr, const GradedOperator& base) {
    if (compare_operators(spec.lhs, c * base)) return false;
    e.verdict = Verdict::pass_variant;
    e.variant = scaled_expr(c, base_expr);
    return true;
  };
  for (const auto& alt : spec.alternatives)
    if (accept(spec.coeff, alt.expr, alt.op)) return e;
  const Scalar multipliers[] = {Scalar(-1), Scalar(2), Scalar(-2), Scalar::frac(1, 2), Scalar::frac(-1, 2)};
  if (!spec.base.is_zero())
    for (const auto& m : multipliers)
      if (accept(m * spec.coeff, spec.base_expr, spec.base)) return e;
  for (const auto& alt : spec.alternatives) {
    if (alt.op.is_zero()) continue;
    for (const auto& m : multipliers)
      if (accept(m * spec.coeff, alt.expr, alt.op)) return e;
  }
  e.verdict = Verdict::fail;
  return e;
}

RelationEntry super_jacobi_check(const GradedOperator& a, const GradedOperator& b, const GradedOperator& c,
                                 const std::string& scope) {
  GradedOperator lhs = supercommutator(a, supercommutator(b, c));
  Scalar sign = (a.odd() && b.odd()) ? Scalar(-1) : Scalar(1);
  GradedOperator rhs = supercommutator(supercommutator(a, b), c) + sign * supercommutator(b, supercommutator(a, c));
  RelationEntry e;
  e.group = "jacobi";
  e.scope = scope;
  e.name = "super Jacobi (" + a.label() + ", " + b.label() + ", " + c.label() + ")";
  e.lhs = "{A,{B,C}}";
  e.rhs = "{{A,B},C} + (-1)^{|A||B|} {B,{A,C}}";
  e.nonvacuous = !lhs.is_zero();
  e.mismatch = compare_operators(lhs, rhs);
  e.verdict = e.mismatch ? Verdict::fail : Verdict::pass;
  return e;
}

RelationReport super_jacobi_pool(const std::vector<GradedOperator>& pool, const std::string& scope) {
  std::size_t n = pool.size();
  std::vector<std::vector<GradedOperator>> bracket(n, std::vector<GradedOperator>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bracket[i][j] = supercommutator(pool[i], pool[j]);

  RelationReport report;
  report.title = "super Jacobi over operator pool";
  std::size_t checked = 0;
  std::size_t nonvacuous = 0;
  std::optional<RelationEntry> first_failure;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        GradedOperator lhs = supercommutator(pool[i], bracket[j][k]);
        Scalar sign = (pool[i].odd() && pool[j].odd()) ? Scalar(-1) : Scalar(1);
        GradedOperator rhs = supercommutator(bracket[i][j], pool[k]) + sign * supercommutator(pool[j], bracket[i][k]);
        ++checked;
        if (!lhs.is_zero()) ++nonvacuous;
        if (!first_failure) {
          if (auto m = compare_operators(lhs, rhs)) {
            RelationEntry e = super_jacobi_check(pool[i], pool[j], pool[k], scope);
            first_failure = e;
          }
        }
      }
  RelationEntry summary;
  summary.group = "jacobi";
  summary.scope = scope;
  summary.name = "super Jacobi, " + std::to_string(checked) + " ordered triples (" + std::to_string(nonvacuous) +
                 " with nonzero left side)";
  summary.lhs = "{A,{B,C}}";
  summary.rhs = "{{A,B},C} + (-1)^{|A||B|} {B,{A,C}}";
  summary.nonvacuous = nonvacuous > 0;
  if (first_failure) {
    summary.verdict = Verdict::fail;
    summary.mismatch = first_failure->mismatch;
    summary.variant = first_failure->name;
  } else {
    summary.verdict = Verdict::pass;
  }
  report.entries.push_back(summary);
  return report;
}

}  // namespace superforms
