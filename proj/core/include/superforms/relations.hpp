#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superforms/graded_operator.hpp"

namespace superforms {

enum class Verdict { pass, pass_variant, fail };

std::string to_string(Verdict v);

struct RelationEntry {
  std::string group;   // table item, e.g. "iii" or "sl2"
  std::string scope;   // model / sector the check ran on
  std::string name;
  std::string lhs;
  std::string rhs;     // as printed
  Verdict verdict = Verdict::fail;
  std::string variant;           // right-hand side that actually holds, when not the printed one
  bool nonvacuous = false;       // left side nonzero
  bool rhs_nonzero = false;      // printed right side nonzero
  std::optional<BlockMismatch> mismatch;  // first failing block of the printed form

  bool holds() const { return verdict != Verdict::fail; }
};

struct RelationReport {
  std::string title;
  std::vector<RelationEntry> entries;

  bool all_hold() const;     // printed or variant
  bool all_printed() const;  // printed only
  void append(const RelationReport& other);
};

struct Candidate {
  std::string expr;
  GradedOperator op;
};

// lhs = coeff * base. Variants tried in order: alternative bases with the
// printed coefficient, then the printed and alternative bases rescaled by
// -1, 2, -2, 1/2, -1/2.
struct RelationSpec {
  std::string group;
  std::string lhs_expr;
  GradedOperator lhs;
  Scalar coeff;
  std::string base_expr;
  GradedOperator base;
  std::vector<Candidate> alternatives = {};
};

std::string scaled_expr(const Scalar& coeff, const std::string& base);
RelationEntry check_relation(const RelationSpec& spec, const std::string& scope);

// {A,{B,C}} = {{A,B},C} + (-1)^{|A||B|} {B,{A,C}}
RelationEntry super_jacobi_check(const GradedOperator& a, const GradedOperator& b, const GradedOperator& c,
                                 const std::string& scope = {});

// Exhaustive super-Jacobi check over all ordered triples of a pool, with
// pairwise brackets cached.
RelationReport super_jacobi_pool(const std::vector<GradedOperator>& pool, const std::string& scope);

}  // namespace superforms
