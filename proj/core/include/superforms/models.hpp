#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "superforms/graded_operator.hpp"

namespace superforms {

enum class ModelErrorKind { syntax, antisymmetry, jacobi, contact, complex_structure, vaisman, sector, unknown_model, io };

std::string to_string(ModelErrorKind k);

class ModelError : public std::runtime_error {
 public:
  ModelError(ModelErrorKind kind, const std::string& what, int line = 0);
  ModelErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  ModelErrorKind kind_;
  int line_;
};

// Coefficient sector: forms with values in a fiber carrying a representation
// rho of the algebra (rho[k] = rho(e_k)). The trivial sector is the plain
// invariant-forms complex.
struct Sector {
  std::string name;
  int fiber = 1;
  std::vector<Matrix> rho;
};

class LieModel {
 public:
  LieModel() = default;
  LieModel(std::string name, int dim, int first_label = 1);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  int first_label() const { return first_label_; }
  int label(int pos) const { return pos + first_label_; }
  int position(int label) const { return label - first_label_; }

  // c^k_{ij} for positions i, j, k
  const Rational& c(int i, int j, int k) const { return c_[(k * dim_ + i) * dim_ + j]; }
  // Sets c^k_{ij} = value and c^k_{ji} = -value.
  void set_bracket(int i, int j, int k, const Rational& value);

  // First (i, j, k) positions violating Jacobi, if any.
  std::optional<std::array<int, 3>> jacobi_violation() const;
  bool unimodular() const;

  const std::vector<Sector>& sectors() const { return sectors_; }
  int fiber() const;                       // total fiber over all sectors
  Matrix fiber_action(int k) const;        // block-diagonal rho(e_k) over sectors
  const Sector& sector_of_fiber(int f) const;
  int sector_offset(std::size_t sector) const;
  void add_adjoint_sector();
  void add_sector(Sector s) { sectors_.push_back(std::move(s)); }

  friend bool operator==(const LieModel& a, const LieModel& b);

 private:
  std::string name_;
  int dim_ = 0;
  int first_label_ = 1;
  std::vector<Rational> c_;
  std::vector<Sector> sectors_;
};

enum class StructureKind { kahler, sasakian, vaisman };

std::string to_string(StructureKind k);

struct FoliationSpec {
  std::string name;
  std::vector<int> positions;  // spanning generators

  int rank() const { return static_cast<int>(positions.size()); }
  Monomial vertical_mask() const;
};

struct StructurePack {
  StructureKind kind = StructureKind::kahler;
  std::optional<int> reeb;  // positions
  std::optional<int> lee;
  Matrix j;  // real N x N; column a is the coefficient vector of J(theta^a)
  FormElement eta;
  FormElement omega0;
  FormElement omega;
  FormElement theta;

  FoliationSpec reeb_foliation() const;
  FoliationSpec lee_foliation() const;
  FoliationSpec sigma_foliation() const;
  // The foliation whose leaf space carries the transversal Kahler structure
  // (Reeb for Sasakian, sigma for Vaisman, the point foliation for Kahler).
  FoliationSpec kahler_foliation() const;
  int transversal_complex_dim() const;
  FormElement leafwise_volume(const FoliationSpec& fol) const;
  FormElement apply_j(const FormElement& one_form) const;
};

struct Model {
  LieModel algebra;
  StructurePack pack;

  int dim() const { return algebra.dim(); }
  const std::string& name() const { return algebra.name(); }
};

std::vector<std::string> builtin_names();
std::vector<Model> builtin_models();
Model builtin_model(const std::string& name);
Model parse_model(const std::string& text, const std::string& name = "model");
// Built-in name or path to a model file.
Model load_model(const std::string& name_or_path);

// Throws ModelError on the first violated invariant.
void validate(const Model& model);

// Forms with coefficients in the sum of all sectors; fiber index 0 is the
// plain invariant-forms complex.
SpacePtr form_space(const Model& model);
SpacePtr scalar_space(const Model& model);
GradedOperator ce_differential(const Model& model);
GradedOperator scalar_ce_differential(const Model& model);

// Named structure operators. Keys: Id, d, L, Lambda, H, W, I,
// I_inv; with a Reeb field also e_r, i_r, Lie_r; Vaisman adds e_theta,
// i_theta, Lie_theta. W and I are taken relative to kahler_foliation().
struct OperatorSet {
  SpacePtr space;
  std::map<std::string, GradedOperator> ops;

  const GradedOperator& at(const std::string& name) const;
  bool has(const std::string& name) const { return ops.count(name) > 0; }
};

OperatorSet structure_operators(const Model& model);

// Even derivation extending J on the horizontal coframe of fol.
GradedOperator weil_operator(const Model& model, const FoliationSpec& fol);
// Algebra automorphism extending J (resp. J^{-1}) on the horizontal coframe.
GradedOperator complex_structure_operator(const Model& model, const FoliationSpec& fol, bool inverse);
// Scalar-space operator extended to every sector (identity on the fiber).
GradedOperator on_all_sectors(const GradedOperator& scalar_op, const SpacePtr& space);

// Projector onto forms of horizontal degree h (vertical degree v) relative to fol.
GradedOperator horizontal_projector(const SpacePtr& space, const FoliationSpec& fol, int h);
GradedOperator vertical_projector(const SpacePtr& space, const FoliationSpec& fol, int v);
// Spectral projector of W for eigenvalue i*k (k = p - q).
GradedOperator weil_projector(const GradedOperator& w, int k);
// Pi^{p,q} (x) Pi^m_vert
GradedOperator bigrading_projector(const GradedOperator& w, const FoliationSpec& fol, int p, int q, int m);

}  // namespace superforms
