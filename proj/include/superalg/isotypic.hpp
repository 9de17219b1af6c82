#ifndef SUPERALG_ISOTYPIC_HPP
#define SUPERALG_ISOTYPIC_HPP

#include "superalg/actions.hpp"
#include "superalg/biseries.hpp"
#include "superalg/reflection_group.hpp"

namespace superalg {

/// All super-monomials of one bidegree, enumerated graded-lex on the
/// exponent vector and then by subset mask; the coordinate frame for
/// exact linear algebra on that slice.
struct BidegreeSlice {
  int n = 0;
  Flavor flavor = Flavor::Theta;
  Bidegree bidegree;
  std::vector<SuperMonomial> monomials;

  size_t dimension() const { return monomials.size(); }
  int index_of(const SuperMonomial& m) const;  // -1 when absent
};

BidegreeSlice enumerate_slice(int n, Bidegree b, Flavor flavor);

/// Coordinates of f in the slice frame; throws if f has terms outside.
CycVector slice_coordinates(const BidegreeSlice& slice, const SuperPoly& f);
SuperPoly slice_element(const BidegreeSlice& slice, const CycVector& coords,
                        unsigned conductor);

struct SubspaceBasis {
  BidegreeSlice slice;
  CycMatrix rows;  // echelon rows spanning the subspace
  int rank = 0;
  std::vector<int> pivot_cols;
};

/// Matrix of the character-weighted projector (1/|G|) sum chi(s^{-1}) s
/// acting on the slice.
CycMatrix projector_matrix(const ReflectionGroup& g, Character chi,
                           const BidegreeSlice& slice);

/// Multiplicity of the rank-1 character in the slice = rank of the
/// projector.
int projector_multiplicity(const ReflectionGroup& g, Character chi,
                           Bidegree b, Flavor flavor);

/// Row space of { m f_i, m df_i } inside the slice: the bidegree piece of
/// the super-coinvariant ideal <f_i, df_i>.
SubspaceBasis ideal_slice(const ReflectionGroup& g, Bidegree b,
                          Flavor flavor = Flavor::Theta);

/// Multiplicity of the character in slice minus its multiplicity in the
/// ideal piece (valid by complete reducibility in characteristic 0).
int quotient_multiplicity(const ReflectionGroup& g, Character chi, Bidegree b);

/// The quotient det-multiplicity table for 0 <= i <= qmax, 0 <= j <= tmax.
BiSeries quotient_series(const ReflectionGroup& g, Character chi, int qmax,
                         int tmax);

/// All df_I (.) (f^alpha Delta) landing in the bidegree; spans the
/// det-isotypic part of k[V] (x) Lambda(V) there (unitary G).
std::vector<SuperPoly> alt_upstairs_vectors(const ReflectionGroup& g,
                                            Bidegree b);

/// The 2^n elements df_I (.) Delta in the identified super-ring; requires
/// G real orthogonal with f_1 = x_1^2 + ... + x_n^2 and all d_i >= 2.
/// Throws HypothesisError otherwise. Results carry the theta flavor.
std::vector<SuperPoly> harmonics_det_basis(const ReflectionGroup& g);

/// True iff f_i . g = 0 and df_i . g = 0 for every fundamental invariant.
bool is_harmonic(const ReflectionGroup& g, const SuperPoly& f);

/// Rank of a family of super-polynomials inside their slice(s); the
/// elements may spread across bidegrees (blocks are independent).
int rank_of_polys(const std::vector<SuperPoly>& polys);

/// Bialternant a_{lambda+delta} = sum_sigma sign(sigma) prod_j
/// x_{sigma(j)}^(lambda_j + n - j), an x-only polynomial in n variables.
SuperPoly schur_alternant(const std::vector<int>& lambda, int n);

}  // namespace superalg

#endif
