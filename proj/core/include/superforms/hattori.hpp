#pragma once

#include <vector>

#include "superforms/models.hpp"
#include "superforms/relations.hpp"

namespace superforms {

bool is_integrable(const Model& model, const FoliationSpec& fol);

struct HattoriSplit {
  FoliationSpec foliation;
  std::vector<GradedOperator> components;  // d_i raises horizontal degree by i, i = 0..rank+1

  const GradedOperator& d0() const { return components.at(0); }
  const GradedOperator& d1() const { return components.at(1); }
  const GradedOperator& d2() const { return components.at(2); }
};

// d_i = sum_h Pi_hor(h+i) d Pi_hor(h). Throws for non-integrable foliations.
HattoriSplit hattori_split(const GradedOperator& d, const Model& model, const FoliationSpec& fol);

struct HodgeSplit {
  GradedOperator d1_10;
  GradedOperator d1_01;
  GradedOperator d1c;  // i (d1^{0,1} - d1^{1,0})
};

// Components of op that move the W-eigenvalue from i*k to i*(k+j).
GradedOperator weil_component(const GradedOperator& op, const GradedOperator& w, int j);
// Throws when d1 has a component outside bidegrees (1,0), (0,1).
HodgeSplit hodge_split_d1(const HattoriSplit& split, const GradedOperator& w);

// Every operator of the Sasakian superalgebra on the Reeb foliation.
struct SasakianOperators {
  SpacePtr space;
  int n = 0;  // dim = 2n + 1
  GradedOperator id, d, d0, d1, d2, d1_10, d1_01, d1c, d1s, d1cs, d0s;
  GradedOperator L, Lambda, H, W, I, I_inv, e_r, i_r, lie_r;
  GradedOperator delta1, delta0;
  GradedOperator L1, Lambda1, H1, d1_1, d1c_1, d1s_1, d1cs_1, e_r1, i_r1;

  // The 12 generators of the superalgebra (6 even, 6 odd).
  std::vector<GradedOperator> generators() const;
};

SasakianOperators sasakian_operators(const Model& model);

RelationReport kahler_relation_report(const Model& model);
RelationReport sasakian_relation_report(const Model& model);
// d = d0 + d1 + d2 and the square relations, for the Reeb foliation.
RelationReport hattori_report(const Model& model);
// Structure checks for Vaisman models: splits for the Lee, Reeb and canonical
// foliations, Lee-field invariance.
RelationReport vaisman_structure_report(const Model& model);

// H acting as (p - n) on forms of horizontal degree p.
GradedOperator horizontal_weight(const SpacePtr& space, const FoliationSpec& fol, int n);

}  // namespace superforms
