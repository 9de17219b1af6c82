#include <doctest.h>

#include "superalg/molien.hpp"

using namespace superalg;

namespace {

BiSeries from_rows(const std::vector<std::vector<long>>& rows_by_t) {
  int tmax = static_cast<int>(rows_by_t.size()) - 1;
  int qmax = static_cast<int>(rows_by_t[0].size()) - 1;
  BiSeries s(qmax, tmax);
  for (int j = 0; j <= tmax; ++j)
    for (int i = 0; i <= qmax; ++i)
      s.set(i, j, Rational(rows_by_t[static_cast<size_t>(j)]
                                    [static_cast<size_t>(i)]));
  return s;
}

}  // namespace

TEST_CASE("char_poly_q") {
  // identity, n = 2: (1 - q)^2
  CycMatrix id = identity_matrix(2);
  auto p = char_poly_q(id);
  CHECK(p == std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(-2),
                                     Cyclotomic(1)});

  // transposition: det [[1, -q], [-q, 1]] = 1 - q^2
  CycMatrix swap(2, 2);
  swap(0, 0) = Cyclotomic(0);
  swap(0, 1) = Cyclotomic(1);
  swap(1, 0) = Cyclotomic(1);
  swap(1, 1) = Cyclotomic(0);
  CHECK(char_poly_q(swap) ==
        std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(0), Cyclotomic(-1)});

  // diag(zeta_3, zeta_3^2): (1 - z q)(1 - z^2 q) by the test-side oracle
  Cyclotomic z = Cyclotomic::zeta(3);
  CycMatrix diag(2, 2);
  diag(0, 0) = z;
  diag(0, 1) = Cyclotomic::from_rational(0, 3);
  diag(1, 0) = Cyclotomic::from_rational(0, 3);
  diag(1, 1) = z * z;
  auto got = char_poly_q(diag);
  // oracle: convolve the two linear factors with exact coefficients
  std::vector<Cyclotomic> f1{Cyclotomic::from_rational(1, 3), -z};
  std::vector<Cyclotomic> f2{Cyclotomic::from_rational(1, 3), -(z * z)};
  std::vector<Cyclotomic> expect(3, Cyclotomic::from_rational(0, 3));
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) expect[i + j] += f1[i] * f2[j];
  CHECK(got == expect);
  CHECK(expect[1] == Cyclotomic::from_rational(1, 3));  // -(z + z^2) = 1
  CHECK(expect[2] == Cyclotomic::from_rational(1, 3));  // z * z^2 = 1
}

TEST_CASE("molien series of S2: Solomon shape, frozen rows") {
  ReflectionGroup s2 = builtin_group("S2");
  BiSeries raw = molien_series(s2, Character::Trivial, SymSpace::V,
                               ExtSpace::Vdual, 8, 2);
  // (1+t)(1+qt)/((1-q)(1-q^2)) expanded by hand:
  BiSeries expected = from_rows({
      {1, 1, 2, 2, 3, 3, 4, 4, 5},   // t^0
      {1, 2, 3, 4, 5, 6, 7, 8, 9},   // t^1
      {0, 1, 1, 2, 2, 3, 3, 4, 4},   // t^2
  });
  CHECK(raw == expected);
  CHECK(raw.integral_nonnegative());
  CHECK(raw.at(0, 0) == 1);
}

TEST_CASE("molien series of B2: alternant shape, frozen rows") {
  ReflectionGroup b2 = builtin_group("B2");
  BiSeries raw =
      molien_series(b2, Character::Det, SymSpace::V, ExtSpace::V, 8, 2);
  // (q + t)(q^3 + t)/((1-q^2)(1-q^4)) expanded by hand:
  BiSeries expected = from_rows({
      {0, 0, 0, 0, 1, 0, 1, 0, 2},  // t^0
      {0, 1, 0, 2, 0, 3, 0, 4, 0},  // t^1
      {1, 0, 1, 0, 2, 0, 2, 0, 3},  // t^2
  });
  CHECK(raw == expected);
  ExponentData e;
  e.degrees = b2.degrees();
  for (int d : e.degrees) e.exponents.push_back(d - 1);
  CHECK(alternant_formula(e).expand(8, 2) == expected);
}

TEST_CASE("molien coefficients are nonnegative integers") {
  for (const char* id : {"S3", "B2", "I2-5", "G-3-1-2", "D3"}) {
    ReflectionGroup g = builtin_group(id);
    for (Character chi :
         {Character::Trivial, Character::Det, Character::DetInv})
      for (SymSpace sym : {SymSpace::V, SymSpace::Vdual})
        for (ExtSpace ext : {ExtSpace::V, ExtSpace::Vdual})
          CHECK(molien_series(g, chi, sym, ext, 5, g.vars())
                    .integral_nonnegative());
  }
}

TEST_CASE("product formula expansion") {
  // wallach(3) = (t + q)(t + q^2)
  BiSeries w = wallach_formula(3).expand(3, 2);
  BiSeries expected(3, 2);
  expected.set(3, 0, 1);
  expected.set(1, 1, 1);
  expected.set(2, 1, 1);
  expected.set(0, 2, 1);
  CHECK(w == expected);

  // S2 det cell: (1 + t)(q + t)/((1-q)(1-q^2))
  ExponentData e;
  e.degrees = {1, 2};
  e.exponents = {0, 1};
  BiSeries det_cell = alternant_formula(e).expand(4, 2);
  ReflectionGroup s2 = builtin_group("S2");
  CHECK(det_cell ==
        molien_series(s2, Character::Det, SymSpace::V, ExtSpace::V, 4, 2));

  // empty exponent data expands to the series 1
  ExponentData none;
  BiSeries one = alternant_formula(none).expand(3, 1);
  CHECK(one.at(0, 0) == 1);
  BiSeries one_only(3, 1);
  one_only.set(0, 0, 1);
  CHECK(one == one_only);
}

TEST_CASE("coexponents") {
  // real orthogonal groups have e* = e and delta = 0
  for (const char* id : {"S2", "B2", "B3", "D3", "I2-4", "I2-6"}) {
    ReflectionGroup g = builtin_group(id);
    ExponentData e = coexponents(g, 16);
    CHECK(e.coexponents == e.exponents);
    CHECK(e.delta == 0);
  }
  // S2 natural: degrees {1,2} -> coexponents {0,1}
  CHECK(coexponents(builtin_group("S2"), 8).coexponents ==
        std::vector<int>{0, 1});
  // G(3,1,1): degrees {3} -> coexponent {1}
  CHECK(coexponents(builtin_group("G-3-1-1"), 8).coexponents ==
        std::vector<int>{1});
  // G(3,1,2): coexponents {1, 4}, delta = 2
  ExponentData e312 = coexponents(builtin_group("G-3-1-2"), 12);
  CHECK(e312.coexponents == std::vector<int>{1, 4});
  CHECK(e312.delta == 2);
}

TEST_CASE("series transforms") {
  ExponentData e;
  e.degrees = {1, 2};
  e.exponents = {0, 1};
  e.coexponents = {0, 1};
  ProductFormula solomon = solomon_formula(e);
  // t-transform swaps (1 + q^a t) <-> (q^a + t) factors
  ProductFormula det_form = formula_transform_t(solomon);
  CHECK(det_form.expand(6, 2) == alternant_formula(e).expand(6, 2));
  // involution
  CHECK(formula_transform_t(det_form).expand(6, 2) == solomon.expand(6, 2));

  // raw-series transform: flip t columns
  ReflectionGroup s2 = builtin_group("S2");
  BiSeries inv_raw = molien_series(s2, Character::Trivial, SymSpace::V,
                                   ExtSpace::Vdual, 6, 2);
  BiSeries det_raw =
      molien_series(s2, Character::Det, SymSpace::V, ExtSpace::V, 6, 2);
  CHECK(series_transform_t(inv_raw, 2) == det_raw);
  CHECK(series_transform_t(series_transform_t(inv_raw, 2), 2) == inv_raw);

  // constant series with n = 0 stays itself
  BiSeries one(3, 0);
  one.set(0, 0, 1);
  CHECK(series_transform_t(one, 0) == one);

  // q-transform at the descriptor level: Solomon cell -> row-4 det-inv cell
  ProductFormula q_moved = formula_transform_q(solomon);
  CHECK(q_moved.expand(6, 2) == alternant_formula(e).expand(6, 2));
}

TEST_CASE("every catalog group satisfies every filled table cell") {
  // raw Molien averages against the product formulas, qmax = 8, tmax = n
  for (const std::string& id : builtin_catalog()) {
    ReflectionGroup g = builtin_group(id);
    CAPTURE(id);
    int cmax = std::max(8, 2 * g.degrees().back());
    ExponentData e = coexponents(g, cmax);
    for (SymSpace sym : {SymSpace::V, SymSpace::Vdual})
      for (ExtSpace ext : {ExtSpace::V, ExtSpace::Vdual})
        for (Character chi :
             {Character::Trivial, Character::Det, Character::DetInv}) {
          auto formula = table_cell_formula(sym, ext, chi, e);
          if (!formula) continue;
          BiSeries raw = molien_series(g, chi, sym, ext, 8, g.vars());
          CHECK(raw == formula->expand(8, g.vars()));
        }
  }
}

TEST_CASE("molien respects the choice of spaces for a complex group") {
  // For G(3,1,2) the invariant series of k[V] (x) L(V) uses coexponents:
  // prod (1 + q^{e*_i} t)/(1 - q^{d_i}) with e* = {1, 4}.
  ReflectionGroup g = builtin_group("G-3-1-2");
  ExponentData e = coexponents(g, 12);
  BiSeries raw = molien_series(g, Character::Trivial, SymSpace::V,
                               ExtSpace::V, 8, 2);
  auto formula = table_cell_formula(SymSpace::V, ExtSpace::V,
                                    Character::Trivial, e);
  REQUIRE(formula.has_value());
  CHECK(raw == formula->expand(8, 2));
  // and the exponent-based Solomon cell differs from it (delta > 0 group)
  CHECK(raw != solomon_formula(e).expand(8, 2));
}
