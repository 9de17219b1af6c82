#ifndef SUPERALG_REFLECTION_GROUP_HPP
#define SUPERALG_REFLECTION_GROUP_HPP

#include <string>
#include <vector>

#include "superalg/matrix.hpp"
#include "superalg/super_poly.hpp"

namespace superalg {

/// A theorem hypothesis is not satisfied; callers report "not applicable"
/// rather than failure.
class HypothesisError : public AlgebraError {
public:
  explicit HypothesisError(const std::string& what) : AlgebraError(what) {}
};

enum class Character { Trivial, Det, DetInv };

const char* character_name(Character c);

/// x and theta transform as functions (through sigma^{-1}); psi transforms
/// as vectors (through sigma itself). For unitary sigma this is the
/// conjugate-matrix action on the dual space.
SuperPoly act(const CycMatrix& sigma, const SuperPoly& f);
SuperPoly act_with_inverse(const CycMatrix& sigma,
                           const CycMatrix& sigma_inverse, const SuperPoly& f);

/// Finite matrix group with a chosen set of fundamental invariants.
/// Element lists are fully materialized and immutable after construction.
class ReflectionGroup {
public:
  ReflectionGroup(std::string label, int n, unsigned conductor,
                  std::vector<CycMatrix> elements,
                  std::vector<SuperPoly> invariants);

  const std::string& label() const { return label_; }
  int vars() const { return n_; }
  unsigned conductor() const { return conductor_; }
  size_t order() const { return elements_.size(); }
  const std::vector<CycMatrix>& elements() const { return elements_; }
  const CycMatrix& element(size_t i) const { return elements_[i]; }
  const CycMatrix& element_inverse(size_t i) const { return inverses_[i]; }
  const Cyclotomic& det_of(size_t i) const { return dets_[i]; }
  const std::vector<SuperPoly>& invariants() const { return invariants_; }
  const std::vector<int>& degrees() const { return degrees_; }
  bool unitary() const { return unitary_; }
  bool real_orthogonal() const { return real_orthogonal_; }

  /// chi(sigma_i) for the three rank-1 characters.
  Cyclotomic character_value(size_t i, Character chi) const;
  /// chi(sigma_i^{-1}).
  Cyclotomic character_value_inv(size_t i, Character chi) const;

  SuperPoly act(size_t i, const SuperPoly& f) const;

private:
  std::string label_;
  int n_;
  unsigned conductor_;
  std::vector<CycMatrix> elements_;
  std::vector<CycMatrix> inverses_;
  std::vector<Cyclotomic> dets_;
  std::vector<SuperPoly> invariants_;  // sorted by degree, x-only, theta
  std::vector<int> degrees_;           // ascending
  bool unitary_ = false;
  bool real_orthogonal_ = false;
  std::vector<LinearSubstitution> subst_theta_;
  std::vector<LinearSubstitution> subst_psi_;
};

/// Breadth-first closure of the generators under multiplication,
/// deduplicated by exact equality; throws if max_order is exceeded.
std::vector<CycMatrix> generate_group(const std::vector<CycMatrix>& generators,
                                      size_t max_order);

/// Catalog ids: S<n>, S<n>-standard, S<n>-powersum, B<n>, D<n>, I2-<m>,
/// G-<m>-1-<n>.
ReflectionGroup builtin_group(const std::string& id);
std::vector<std::string> builtin_catalog();

/// Vandermonde: coefficient of theta_[n] in df_1 ... df_n (the Jacobian
/// determinant of the invariants); throws if it vanishes.
SuperPoly vandermonde(const ReflectionGroup& g);

Cyclotomic char_trivial(const CycMatrix& sigma);
Cyclotomic char_det(const CycMatrix& sigma);
Cyclotomic char_det_inv(const CycMatrix& sigma);

/// Full structural validation: closure table, identity, inverses,
/// invariance and homogeneity of the f_i, |G| = prod d_i, and Delta != 0.
/// Throws AlgebraError describing the first failure.
void validate_group(const ReflectionGroup& g);

/// Load a group-spec JSON file {label, n, conductor, generators,
/// invariants, max_order}; runs generate_group and validate_group.
ReflectionGroup load_group_file(const std::string& path);
ReflectionGroup parse_group_spec(const std::string& json_text);

}  // namespace superalg

#endif
