#ifndef SUPERALG_MOLIEN_HPP
#define SUPERALG_MOLIEN_HPP

#include <optional>

#include "superalg/biseries.hpp"
#include "superalg/reflection_group.hpp"

namespace superalg {

/// Which space the symmetric (polynomial) factor is built on: k[V] or
/// k[V*]; likewise for the exterior factor Lambda(V) or Lambda(V*).
enum class SymSpace { V, Vdual };
enum class ExtSpace { V, Vdual };

const char* sym_space_name(SymSpace s);
const char* ext_space_name(ExtSpace s);

/// det(1 - sigma q) coefficients, ascending in q, length n+1.
std::vector<Cyclotomic> char_poly_q(const CycMatrix& sigma);

/// Character-weighted Molien average: the bigraded multiplicity series of
/// the rank-1 character in Sym(space) tensor Lambda(space), truncated.
/// Asserts the summed coefficients are rational.
BiSeries molien_series(const ReflectionGroup& g, Character chi, SymSpace sym,
                       ExtSpace ext, int qmax, int tmax);

struct ExponentData {
  std::vector<int> degrees;      // ascending
  std::vector<int> exponents;    // d_i - 1
  std::vector<int> coexponents;  // ascending
  int delta = 0;                 // sum e_i - sum e_i*
};

/// Coexponents from the graded multiplicity of the trivial character in
/// k[V] (x) V: the series times prod (1 - q^(d_i)) must be a sum of n
/// distinct unit monomials q^(e_i*).
ExponentData coexponents(const ReflectionGroup& g, int qmax);

/// The product formula attached to one cell of the alternant/invariant
/// table, or nullopt for the two cells with no known closed form.
std::optional<ProductFormula> table_cell_formula(SymSpace sym, ExtSpace ext,
                                                 Character chi,
                                                 const ExponentData& e);

ProductFormula solomon_formula(const ExponentData& e);         // invariants of k[V] (x) L(V*)
ProductFormula alternant_formula(const ExponentData& e);       // det part of k[V] (x) L(V)
ProductFormula coinvariant_det_formula(const ExponentData& e); // prod (q^e_i + t)
ProductFormula wallach_formula(int n);                         // prod_{i<n} (t + q^i)

}  // namespace superalg

#endif
