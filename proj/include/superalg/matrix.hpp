#ifndef SUPERALG_MATRIX_HPP
#define SUPERALG_MATRIX_HPP

#include <Eigen/Core>

#include <vector>

#include "superalg/cyclotomic.hpp"

namespace Eigen {

template <>
struct NumTraits<superalg::Cyclotomic> {
  using Real = superalg::Cyclotomic;
  using NonInteger = superalg::Cyclotomic;
  using Literal = superalg::Cyclotomic;
  using Nested = superalg::Cyclotomic;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 200
  };
  static inline Real epsilon() { return superalg::Cyclotomic(0); }
  static inline Real dummy_precision() { return superalg::Cyclotomic(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace superalg {

using CycMatrix = Eigen::Matrix<Cyclotomic, Eigen::Dynamic, Eigen::Dynamic>;
using CycVector = Eigen::Matrix<Cyclotomic, Eigen::Dynamic, 1>;

/// Identity with entries embedded at the given conductor.
CycMatrix identity_matrix(Eigen::Index n, unsigned conductor = 1);

/// Lift every entry into Q(zeta_m).
CycMatrix normalize_conductor(const CycMatrix& a, unsigned conductor);

CycMatrix conj_entrywise(const CycMatrix& a);

bool matrices_equal(const CycMatrix& a, const CycMatrix& b);

/// Entrywise representation order for deterministic containers.
bool matrix_repr_less(const CycMatrix& a, const CycMatrix& b);

bool is_unitary(const CycMatrix& a);
bool is_real_matrix(const CycMatrix& a);

Cyclotomic determinant(const CycMatrix& a);

/// Exact inverse by Gauss-Jordan; throws AlgebraError on singular input.
CycMatrix inverse_matrix(const CycMatrix& a);

/// Elementary symmetric functions e_0..e_n of the eigenvalues of a,
/// computed from power traces (Newton's identities, exact in char 0).
/// det(1 - a q) = sum_k (-1)^k e_k q^k and det(1 + a t) = sum_k e_k t^k.
std::vector<Cyclotomic> eigenvalue_elementary_symmetric(const CycMatrix& a);

struct Echelon {
  int rank = 0;
  CycMatrix rows;               // echelon rows, rank of them
  std::vector<int> pivot_cols;  // one per echelon row
};

/// Fraction-free (Bareiss) row reduction with first-nonzero pivoting.
/// Row denominators are cleared up front so all updates divide exactly.
Echelon fraction_free_echelon(const CycMatrix& a);

int rank_of(const CycMatrix& a);

}  // namespace superalg

#endif
