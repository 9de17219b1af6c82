#include <doctest.h>

#include <random>

#include "superalg/cyclotomic.hpp"

using namespace superalg;

namespace {

// Test-side oracle: naive polynomial remainder of z^a * z^b modulo Phi_m,
// independent of the reduction tables inside Cyclotomic.
std::vector<Rational> oracle_power_product_mod_phi(unsigned a, unsigned b,
                                                   unsigned m) {
  const std::vector<Rational>& phi = cyclotomic_polynomial(m);
  size_t deg = phi.size() - 1;
  std::vector<Rational> r(a + b + 1, Rational(0));
  r[a + b] = 1;
  for (size_t d = r.size(); d-- > deg;) {
    Rational c = r[d];
    if (c == 0) continue;
    for (size_t i = 0; i <= deg; ++i) r[d - deg + i] -= c * phi[i];
  }
  r.resize(deg, Rational(0));
  return r;
}

Cyclotomic random_element(std::mt19937_64& eng, unsigned m) {
  unsigned phi = euler_phi(m);
  std::vector<Rational> coeffs(phi);
  for (Rational& c : coeffs) {
    long num = static_cast<long>(eng() % 7) - 3;
    long den = 1 + static_cast<long>(eng() % 3);
    coeffs[&c - coeffs.data()] = Rational(num, den);
    c.canonicalize();
  }
  return Cyclotomic::from_coeffs(coeffs, m);
}

}  // namespace

TEST_CASE("euler phi and cyclotomic polynomials") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(3) == 2);
  CHECK(euler_phi(4) == 2);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(20) == 8);
  // Phi_3 = z^2 + z + 1, Phi_4 = z^2 + 1, Phi_12 = z^4 - z^2 + 1
  CHECK(cyclotomic_polynomial(3) == std::vector<Rational>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Rational>{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Rational>{1, 0, -1, 0, 1});
}

TEST_CASE("addition identities") {
  Cyclotomic z3 = Cyclotomic::zeta(3);
  CHECK(z3 + z3 * z3 == Cyclotomic(-1));  // zeta + zeta^2 = -1 in Q(zeta_3)
  std::mt19937_64 eng(5);
  Cyclotomic a = random_element(eng, 12);
  CHECK(Cyclotomic(0) + a == a);
  Cyclotomic z4 = Cyclotomic::zeta(4);
  Cyclotomic half(Rational(1, 2));
  CHECK((half + z4) + (half - z4) == Cyclotomic(1));
}

TEST_CASE("multiplication against the polynomial-division oracle") {
  CHECK(Cyclotomic::zeta(4) * Cyclotomic::zeta(4) == Cyclotomic(-1));
  // zeta_3^2 reduced by long division: -1 - zeta_3
  auto reduced = oracle_power_product_mod_phi(1, 1, 3);
  Cyclotomic expected = Cyclotomic::from_coeffs(reduced, 3);
  CHECK(Cyclotomic::zeta(3) * Cyclotomic::zeta(3) == expected);
  CHECK(expected == Cyclotomic(-1) - Cyclotomic::zeta(3));
  // random power products at several conductors
  for (unsigned m : {5u, 8u, 12u}) {
    unsigned phi = euler_phi(m);
    for (unsigned a = 0; a < phi; ++a)
      for (unsigned b = 0; b < phi; ++b) {
        Cyclotomic got = Cyclotomic::zeta(m).pow(a) * Cyclotomic::zeta(m).pow(b);
        CHECK(got == Cyclotomic::from_coeffs(
                         oracle_power_product_mod_phi(a, b, m), m));
      }
  }
}

TEST_CASE("inverses") {
  for (unsigned m : {3u, 4u, 5u, 8u, 12u}) {
    Cyclotomic z = Cyclotomic::zeta(m);
    CHECK(z.inverse() == z.pow(static_cast<long>(m) - 1));
    CHECK(z * z.inverse() == Cyclotomic::from_rational(1, m));
  }
  CHECK_THROWS_AS(Cyclotomic(0).inverse(), AlgebraError);
}

TEST_CASE("conjugation") {
  Cyclotomic z4 = Cyclotomic::zeta(4);
  CHECK(z4.conjugate() == -z4);
  CHECK(Cyclotomic(Rational(3, 7)).conjugate() == Cyclotomic(Rational(3, 7)));
  std::mt19937_64 eng(11);
  for (unsigned m : {3u, 5u, 8u, 12u}) {
    for (int k = 0; k < 10; ++k) {
      Cyclotomic a = random_element(eng, m);
      Cyclotomic b = random_element(eng, m);
      CHECK(a.conjugate().conjugate() == a);
      CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
      CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
    }
  }
}

TEST_CASE("rational detection") {
  Cyclotomic embedded = Cyclotomic::from_rational(Rational(3, 7), 4);
  CHECK(embedded.is_rational());
  CHECK(embedded.as_rational() == Rational(3, 7));
  CHECK_THROWS_AS(Cyclotomic::zeta(4).as_rational(), AlgebraError);
  Cyclotomic z3 = Cyclotomic::zeta(3);
  CHECK((z3 + z3 * z3 + Cyclotomic(1)).is_zero());  // root of Phi_3
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 eng(2024);
  for (unsigned m : {1u, 3u, 4u, 5u, 8u, 12u}) {
    for (int k = 0; k < 8; ++k) {
      Cyclotomic a = random_element(eng, m);
      Cyclotomic b = random_element(eng, m);
      Cyclotomic c = random_element(eng, m);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic::from_rational(1, m));
    }
  }
}

TEST_CASE("norm positivity over the Gaussian rationals") {
  std::mt19937_64 eng(99);
  for (int k = 0; k < 25; ++k) {
    Cyclotomic a = random_element(eng, 4);
    Cyclotomic norm = a * a.conjugate();
    REQUIRE(norm.is_rational());
    CHECK(norm.as_rational() >= 0);
    if (!a.is_zero()) CHECK(norm.as_rational() > 0);
  }
}

TEST_CASE("conductor discipline") {
  Cyclotomic z3 = Cyclotomic::zeta(3);
  Cyclotomic z4 = Cyclotomic::zeta(4);
  CHECK_THROWS_AS((void)(z3 + z4), ConductorMismatch);
  CHECK_THROWS_AS((void)(z3 * z4), ConductorMismatch);
  // rationals embed anywhere
  CHECK(z3 + Cyclotomic(2) == Cyclotomic::from_rational(2, 3) + z3);
  CHECK((Cyclotomic(Rational(1, 2)) * z4).conductor() == 4);
}

TEST_CASE("text round trip") {
  std::mt19937_64 eng(7);
  for (unsigned m : {1u, 4u, 8u, 12u}) {
    for (int k = 0; k < 15; ++k) {
      Cyclotomic a = random_element(eng, m);
      CHECK(Cyclotomic::parse(a.to_string(), m) == a);
    }
  }
  Cyclotomic v = Cyclotomic::parse("1/2*z^3 - 2", 8);
  CHECK(v.to_string() == "1/2*z^3 - 2");
  CHECK(Cyclotomic::parse("0", 8).is_zero());
  CHECK(Cyclotomic::parse("z", 8) == Cyclotomic::zeta(8));
}

TEST_CASE("malformed scalar texts are rejected") {
  for (const char* bad : {"", "1//2", "z^", "2*", "*z", "1 +", "q", "^3",
                          "1/2/3", "z z"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Cyclotomic::parse(bad, 8), std::exception);
  }
  // large powers reduce: zeta_4^7 = -zeta_4
  CHECK(Cyclotomic::parse("z^7", 4) == -Cyclotomic::zeta(4));
}

TEST_CASE("lifting between conductors") {
  Cyclotomic z3 = Cyclotomic::zeta(3);
  Cyclotomic lifted = z3.lifted(12);
  CHECK(lifted.conductor() == 12);
  CHECK(lifted.pow(3) == Cyclotomic::from_rational(1, 12));
  CHECK(lifted.conjugate() == z3.conjugate().lifted(12));
  CHECK_THROWS_AS(z3.lifted(8), AlgebraError);
}
