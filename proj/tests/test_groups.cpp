#include <doctest.h>

#include <random>

#include "superalg/reflection_group.hpp"

using namespace superalg;

namespace {

SuperPoly x(int n, int i) { return SuperPoly::variable(n, Flavor::Theta, i); }

SuperPoly random_poly(std::mt19937_64& eng, int n, Flavor flavor) {
  SuperPoly f(n, flavor, 1);
  int terms = 1 + static_cast<int>(eng() % 4);
  for (int t = 0; t < terms; ++t) {
    SuperMonomial m{std::vector<unsigned>(static_cast<size_t>(n), 0u),
                    static_cast<uint32_t>(eng() % (1u << n))};
    for (int d = static_cast<int>(eng() % 4); d > 0; --d)
      m.alpha[eng() % n] += 1;
    long coeff = static_cast<long>(eng() % 7) - 3;
    if (coeff == 0) coeff = 1;
    f.add_term(m, Cyclotomic(coeff));
  }
  return f;
}

// prod_{i<j} (x_j - x_i), the expected shape of the power-sum Vandermonde
SuperPoly vandermonde_product(int n) {
  SuperPoly prod = SuperPoly::constant(n, Flavor::Theta, Cyclotomic(1));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) prod *= x(n, j) - x(n, i);
  return prod;
}

}  // namespace

TEST_CASE("generate_group closure") {
  CycMatrix neg(1, 1);
  neg(0, 0) = Cyclotomic(-1);
  auto two = generate_group({neg}, 10);
  CHECK(two.size() == 2);

  auto trivial = generate_group({}, 10);
  CHECK(trivial.size() == 1);

  // I2(3): rotation by 2pi/3 over Q(zeta_12) plus a reflection -> 6 elements
  ReflectionGroup i23 = builtin_group("I2-3");
  CHECK(i23.order() == 6);  // dihedral order 2m

  CycMatrix sing(2, 2);
  sing(0, 0) = Cyclotomic(1);
  sing(0, 1) = Cyclotomic(1);
  sing(1, 0) = Cyclotomic(1);
  sing(1, 1) = Cyclotomic(1);
  CHECK_THROWS_AS(generate_group({sing}, 10), AlgebraError);

  CycMatrix swap(2, 2);
  swap(0, 0) = Cyclotomic(0);
  swap(0, 1) = Cyclotomic(1);
  swap(1, 0) = Cyclotomic(1);
  swap(1, 1) = Cyclotomic(0);
  CHECK_THROWS_AS(generate_group({swap}, 1), AlgebraError);  // exceeds cap
}

TEST_CASE("builtin orders, degrees and flags") {
  struct Row {
    const char* id;
    size_t order;
    std::vector<int> degrees;
  };
  const Row rows[] = {
      {"S2", 2, {1, 2}},          {"S3", 6, {1, 2, 3}},
      {"S3-standard", 6, {2, 3}}, {"S4-standard", 24, {2, 3, 4}},
      {"B2", 8, {2, 4}},          {"B3", 48, {2, 4, 6}},
      {"D3", 24, {2, 3, 4}},      {"I2-4", 8, {2, 4}},
      {"I2-5", 10, {2, 5}},       {"G-3-1-1", 3, {3}},
      {"G-3-1-2", 18, {3, 6}},
  };
  for (const Row& row : rows) {
    ReflectionGroup g = builtin_group(row.id);
    CHECK(g.order() == row.order);
    CHECK(g.degrees() == row.degrees);
    size_t prod = 1;
    for (int d : g.degrees()) prod *= static_cast<size_t>(d);
    CHECK(prod == g.order());
  }
  CHECK(builtin_group("B2").real_orthogonal());
  CHECK(builtin_group("I2-5").real_orthogonal());
  CHECK(builtin_group("G-3-1-2").unitary());
  CHECK_FALSE(builtin_group("G-3-1-2").real_orthogonal());
  CHECK_FALSE(builtin_group("S3-standard").unitary());
  CHECK_THROWS_AS(builtin_group("E8"), AlgebraError);
  CHECK_THROWS_AS(builtin_group("I2-2"), AlgebraError);
}

TEST_CASE("full structural validation of the small builtins") {
  for (const char* id : {"S3", "B2", "I2-4", "G-3-1-2", "S3-standard"}) {
    ReflectionGroup g = builtin_group(id);
    CHECK_NOTHROW(validate_group(g));
  }
}

TEST_CASE("dual action on coordinates") {
  // S3: the transposition (1 2) sends x1 to x2
  ReflectionGroup s3 = builtin_group("S3");
  const int n = 3;
  bool found = false;
  for (size_t i = 0; i < s3.order(); ++i) {
    SuperPoly image = s3.act(i, x(n, 1));
    if (image == x(n, 2) && s3.act(i, x(n, 3)) == x(n, 3)) {
      found = true;
      CHECK(s3.act(i, x(n, 2)) == x(n, 1));
    }
  }
  CHECK(found);

  // G(3,1,1): sigma = [zeta_3] acts on x by the conjugate scalar
  ReflectionGroup c3 = builtin_group("G-3-1-1");
  Cyclotomic z = Cyclotomic::zeta(3);
  for (size_t i = 0; i < c3.order(); ++i) {
    if (c3.element(i)(0, 0) == z)
      CHECK(c3.act(i, x(1, 1)) == z * z * x(1, 1));  // conj(zeta) = zeta^2
    SuperPoly cube = x(1, 1) * x(1, 1) * x(1, 1);
    CHECK(c3.act(i, cube) == cube);
  }
}

TEST_CASE("invariants are fixed and the action composes") {
  std::mt19937_64 eng(97);
  for (const char* id : {"S3", "B2", "D3", "I2-5", "G-3-1-2", "S4-standard"}) {
    ReflectionGroup g = builtin_group(id);
    for (const SuperPoly& f : g.invariants())
      for (size_t i = 0; i < g.order(); ++i) CHECK(g.act(i, f) == f);
    for (int k = 0; k < 8; ++k) {
      SuperPoly f = random_poly(eng, g.vars(), Flavor::Theta);
      SuperPoly h = random_poly(eng, g.vars(), Flavor::Psi);
      size_t a = eng() % g.order();
      size_t b = eng() % g.order();
      CycMatrix prod = g.element(a) * g.element(b);
      CHECK(act(prod, f) == g.act(a, g.act(b, f)));
      CHECK(act(prod, h) == g.act(a, g.act(b, h)));
    }
  }
}

TEST_CASE("action commutes with the exterior derivative") {
  std::mt19937_64 eng(101);
  for (const char* id : {"S3", "B2", "I2-4", "G-3-1-2"}) {
    ReflectionGroup g = builtin_group(id);
    for (int k = 0; k < 10; ++k) {
      SuperPoly f = random_poly(eng, g.vars(), Flavor::Theta);
      size_t s = eng() % g.order();
      CHECK(g.act(s, exterior_derivative(f)) ==
            exterior_derivative(g.act(s, f)));
    }
  }
}

TEST_CASE("vandermonde") {
  // S2 natural with e_1, e_2: Delta = x1 - x2
  ReflectionGroup s2 = builtin_group("S2");
  CHECK(vandermonde(s2) == x(2, 1) - x(2, 2));

  // B2: nonzero of degree sum(d_i - 1) = 4
  ReflectionGroup b2 = builtin_group("B2");
  SuperPoly delta_b2 = vandermonde(b2);
  CHECK_FALSE(delta_b2.is_zero());
  for (const auto& [m, c] : delta_b2.terms()) CHECK(m.xdeg() == 4);

  // power sums: Delta = c * prod_{i<j} (x_j - x_i); report c
  ReflectionGroup s3p = builtin_group("S3-powersum");
  SuperPoly delta = vandermonde(s3p);
  SuperPoly target = vandermonde_product(3);
  REQUIRE(delta.terms().size() == target.terms().size());
  Cyclotomic ratio =
      delta.terms().begin()->second / target.terms().begin()->second;
  CHECK(delta == ratio * target);
  CHECK_FALSE(ratio.is_zero());
  // the observed constant is n! = 6 (the claimed n!^n would be 216)
  CHECK(ratio == Cyclotomic(6));
}

TEST_CASE("dependent invariants are rejected through the vandermonde") {
  // f2 = f1^2 is invariant and homogeneous of degree 4, but dependent
  ReflectionGroup b2 = builtin_group("B2");
  SuperPoly f1 = b2.invariants()[0];
  std::vector<CycMatrix> elements(b2.elements().begin(), b2.elements().end());
  ReflectionGroup fake("B2-dependent", 2, 1, std::move(elements),
                       {f1, f1 * f1});
  CHECK_THROWS_AS(vandermonde(fake), AlgebraError);
  CHECK_THROWS_AS(validate_group(fake), AlgebraError);
}

TEST_CASE("sigma(Delta) = det(sigma) Delta") {
  for (const char* id : {"S3", "B2", "I2-4", "G-3-1-2"}) {
    ReflectionGroup g = builtin_group(id);
    SuperPoly delta = vandermonde(g);
    for (size_t i = 0; i < g.order(); ++i)
      CHECK(g.act(i, delta) == g.det_of(i) * delta);
  }
}

TEST_CASE("determinant characters") {
  ReflectionGroup s3 = builtin_group("S3");
  int minus_seen = 0;
  for (size_t i = 0; i < s3.order(); ++i) {
    Cyclotomic d = char_det(s3.element(i));
    CHECK((d == Cyclotomic(1) || d == Cyclotomic(-1)));
    if (d == Cyclotomic(-1)) ++minus_seen;
    CHECK(char_trivial(s3.element(i)) == Cyclotomic(1));
    CHECK(char_det_inv(s3.element(i)) * d == Cyclotomic(1));
  }
  CHECK(minus_seen == 3);  // the three transpositions

  ReflectionGroup i24 = builtin_group("I2-4");
  CHECK(char_det(identity_matrix(2, i24.conductor())) == Cyclotomic(1));
  size_t det_one = 0;  // rotations have determinant 1
  for (size_t i = 0; i < i24.order(); ++i)
    if (i24.det_of(i) == Cyclotomic(1)) ++det_one;
  CHECK(det_one == 4);
}

TEST_CASE("group-spec file loading") {
  ReflectionGroup g = load_group_file(std::string(TEST_DATA_DIR) + "/b2.json");
  CHECK(g.label() == "B2-from-file");
  CHECK(g.order() == 8);
  CHECK(g.degrees() == std::vector<int>{2, 4});

  // not an invariant of the group
  std::string bad = R"({
    "label": "bad", "n": 2, "conductor": 1, "max_order": 16,
    "generators": [[["0","1"],["1","0"]], [["-1","0"],["0","1"]]],
    "invariants": ["(1)*x1 + (1)*x2", "(1)*x1^2*x2^2"]
  })";
  CHECK_THROWS_AS(parse_group_spec(bad), AlgebraError);

  std::string overflow = R"({
    "label": "bad2", "n": 2, "conductor": 1, "max_order": 4,
    "generators": [[["0","1"],["1","0"]], [["-1","0"],["0","1"]]],
    "invariants": ["(1)*x1^2 + (1)*x2^2", "(1)*x1^2*x2^2"]
  })";
  CHECK_THROWS_AS(parse_group_spec(overflow), AlgebraError);
}

TEST_CASE("group-spec file with cyclotomic entries") {
  ReflectionGroup g =
      load_group_file(std::string(TEST_DATA_DIR) + "/g312.json");
  CHECK(g.order() == 18);
  CHECK(g.conductor() == 3);
  CHECK(g.degrees() == std::vector<int>{3, 6});
  CHECK(g.unitary());
  CHECK_FALSE(g.real_orthogonal());
  // same group as the builtin, element for element
  ReflectionGroup builtin = builtin_group("G-3-1-2");
  REQUIRE(builtin.order() == g.order());
  for (size_t i = 0; i < g.order(); ++i) {
    bool found = false;
    for (size_t j = 0; j < builtin.order() && !found; ++j)
      found = matrices_equal(g.element(i), builtin.element(j));
    CHECK(found);
  }
}
