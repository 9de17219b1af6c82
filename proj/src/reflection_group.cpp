#include "superalg/reflection_group.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace superalg {

namespace {

struct MatrixReprLess {
  bool operator()(const CycMatrix& a, const CycMatrix& b) const {
    return matrix_repr_less(a, b);
  }
};

Rational binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

constexpr size_t kMaxGroupOrder = 1000;

void check_order_cap(size_t order, const std::string& what) {
  if (order > kMaxGroupOrder)
    throw AlgebraError(what + " has order " + std::to_string(order) +
                       ", above the supported cap " +
                       std::to_string(kMaxGroupOrder));
}

size_t factorial_order(int n) {
  size_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<size_t>(k);
  return f;
}

// e_k of the given polynomials, via the generating product prod (1 + s f_i).
std::vector<SuperPoly> elementary_symmetric_all(
    const std::vector<SuperPoly>& items, int n, unsigned conductor) {
  std::vector<SuperPoly> e;
  e.push_back(SuperPoly::constant(n, Flavor::Theta,
                                  Cyclotomic::from_rational(1, conductor)));
  for (const SuperPoly& f : items) {
    e.push_back(SuperPoly(n, Flavor::Theta, conductor));
    for (size_t k = e.size() - 1; k >= 1; --k) e[k] += e[k - 1] * f;
  }
  return e;
}

std::vector<SuperPoly> x_powers(int n, unsigned exponent, unsigned conductor) {
  std::vector<SuperPoly> out;
  for (int i = 1; i <= n; ++i) {
    SuperMonomial m{std::vector<unsigned>(static_cast<size_t>(n), 0u), 0u};
    m.alpha[static_cast<size_t>(i - 1)] = exponent;
    out.push_back(SuperPoly::monomial(
        n, Flavor::Theta, m, Cyclotomic::from_rational(1, conductor)));
  }
  return out;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

CycMatrix permutation_matrix(const std::vector<int>& perm, unsigned conductor) {
  int n = static_cast<int>(perm.size());
  CycMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = Cyclotomic::from_rational(
          Rational(perm[static_cast<size_t>(j)] == i ? 1 : 0), conductor);
  return m;
}

ReflectionGroup make_symmetric_natural(int n, bool power_sums) {
  check_order_cap(factorial_order(n), "S(n)");
  std::vector<CycMatrix> elements;
  for (const auto& perm : all_permutations(n))
    elements.push_back(permutation_matrix(perm, 1));
  std::vector<SuperPoly> invariants;
  if (power_sums) {
    for (int k = 1; k <= n; ++k) {
      SuperPoly p(n, Flavor::Theta, 1);
      for (const SuperPoly& xk : x_powers(n, static_cast<unsigned>(k), 1))
        p += xk;
      invariants.push_back(p);
    }
  } else {
    auto e = elementary_symmetric_all(x_powers(n, 1, 1), n, 1);
    invariants.assign(e.begin() + 1, e.end());
  }
  std::string label = "S" + std::to_string(n);
  if (power_sums) label += "-powersum";
  return ReflectionGroup(label, n, 1, std::move(elements),
                         std::move(invariants));
}

// S_n on the sum-zero subspace with basis b_i = e_i - e_{i+1}; rational,
// not orthogonal. Invariants are restrictions of e_2..e_n.
ReflectionGroup make_symmetric_standard(int n) {
  if (n < 2) throw AlgebraError("S(n)-standard needs n >= 2");
  check_order_cap(factorial_order(n), "S(n)-standard");
  const int d = n - 1;
  std::vector<CycMatrix> elements;
  for (const auto& perm : all_permutations(n)) {
    CycMatrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m(i, j) = Cyclotomic(0);
    for (int j = 0; j < d; ++j) {
      // sigma(b_j) = e_{perm(j)} - e_{perm(j+1)}
      int a = perm[static_cast<size_t>(j)];
      int b = perm[static_cast<size_t>(j + 1)];
      if (a < b)
        for (int i = a; i < b; ++i) m(i, j) += Cyclotomic(1);
      else
        for (int i = b; i < a; ++i) m(i, j) += Cyclotomic(-1);
    }
    elements.push_back(std::move(m));
  }
  // Ambient coordinate X_j restricted: y_j - y_{j-1} with y_0 = y_n = 0.
  std::vector<SuperPoly> restricted;
  for (int j = 1; j <= n; ++j) {
    SuperPoly x(d, Flavor::Theta, 1);
    if (j <= d) x += SuperPoly::variable(d, Flavor::Theta, j);
    if (j >= 2) x -= SuperPoly::variable(d, Flavor::Theta, j - 1);
    restricted.push_back(x);
  }
  auto e = elementary_symmetric_all(restricted, d, 1);
  std::vector<SuperPoly> invariants(e.begin() + 2, e.end());  // e_2..e_n
  return ReflectionGroup("S" + std::to_string(n) + "-standard", d, 1,
                         std::move(elements), std::move(invariants));
}

// Signed permutations; when even_only, only even numbers of sign flips.
std::vector<CycMatrix> signed_permutations(int n, bool even_only) {
  check_order_cap(factorial_order(n) << (even_only ? n - 1 : n),
                  even_only ? "D(n)" : "B(n)");
  std::vector<CycMatrix> elements;
  for (const auto& perm : all_permutations(n)) {
    for (uint32_t signs = 0; signs < (1u << n); ++signs) {
      if (even_only && (__builtin_popcount(signs) & 1)) continue;
      CycMatrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Cyclotomic(0);
      for (int j = 0; j < n; ++j) {
        int target = perm[static_cast<size_t>(j)];
        bool neg = (signs >> target) & 1u;
        m(target, j) = Cyclotomic(neg ? -1 : 1);
      }
      elements.push_back(std::move(m));
    }
  }
  return elements;
}

ReflectionGroup make_hyperoctahedral(int n) {
  auto e = elementary_symmetric_all(x_powers(n, 2, 1), n, 1);
  std::vector<SuperPoly> invariants(e.begin() + 1, e.end());
  return ReflectionGroup("B" + std::to_string(n), n, 1,
                         signed_permutations(n, false), std::move(invariants));
}

ReflectionGroup make_demihyperoctahedral(int n) {
  if (n < 2) throw AlgebraError("D(n) needs n >= 2");
  auto e = elementary_symmetric_all(x_powers(n, 2, 1), n, 1);
  std::vector<SuperPoly> invariants(e.begin() + 1, e.end() - 1);
  SuperPoly prod = SuperPoly::constant(n, Flavor::Theta, Cyclotomic(1));
  for (int i = 1; i <= n; ++i) prod *= SuperPoly::variable(n, Flavor::Theta, i);
  invariants.push_back(prod);
  return ReflectionGroup("D" + std::to_string(n), n, 1,
                         signed_permutations(n, true), std::move(invariants));
}

ReflectionGroup make_dihedral(int m) {
  if (m < 3) throw AlgebraError("I2(m) needs m >= 3");
  check_order_cap(2 * static_cast<size_t>(m), "I2(m)");
  unsigned conductor = static_cast<unsigned>(std::lcm(m, 4));
  Cyclotomic z = Cyclotomic::zeta(conductor);
  Cyclotomic zm = z.pow(conductor / static_cast<unsigned>(m));
  Cyclotomic i_unit = z.pow(conductor / 4);
  Cyclotomic half = Cyclotomic(Rational(1, 2)).lifted(conductor);
  Cyclotomic c = (zm + zm.inverse()) * half;
  Cyclotomic s = (zm - zm.inverse()) * half / i_unit;
  CycMatrix rot(2, 2), refl(2, 2);
  rot(0, 0) = c;
  rot(0, 1) = -s;
  rot(1, 0) = s;
  rot(1, 1) = c;
  refl(0, 0) = Cyclotomic(1).lifted(conductor);
  refl(0, 1) = Cyclotomic(0).lifted(conductor);
  refl(1, 0) = Cyclotomic(0).lifted(conductor);
  refl(1, 1) = Cyclotomic(-1).lifted(conductor);
  auto elements = generate_group({rot, refl}, static_cast<size_t>(4 * m));

  SuperPoly x = SuperPoly::variable(2, Flavor::Theta, 1);
  SuperPoly y = SuperPoly::variable(2, Flavor::Theta, 2);
  SuperPoly f1 = x * x + y * y;
  SuperPoly f2(2, Flavor::Theta, 1);  // Re((x + iy)^m)
  for (int k = 0; 2 * k <= m; ++k) {
    Rational coeff = binomial(static_cast<unsigned>(m),
                              static_cast<unsigned>(2 * k));
    if (k & 1) coeff = -coeff;
    f2 += Cyclotomic(coeff) * (x.pow(static_cast<unsigned>(m - 2 * k)) *
                               y.pow(static_cast<unsigned>(2 * k)));
  }
  return ReflectionGroup("I2-" + std::to_string(m), 2, conductor,
                         std::move(elements), {f1, f2});
}

ReflectionGroup make_cyclic_monomial(int m, int n) {
  if (m < 2) throw AlgebraError("G(m,1,n) needs m >= 2");
  size_t order = factorial_order(n);
  for (int k = 0; k < n; ++k) {
    order *= static_cast<size_t>(m);
    check_order_cap(order, "G(m,1,n)");
  }
  unsigned conductor = static_cast<unsigned>(m);
  Cyclotomic z = Cyclotomic::zeta(conductor);
  std::vector<Cyclotomic> zpow;
  for (int k = 0; k < m; ++k) zpow.push_back(z.pow(k));
  std::vector<CycMatrix> elements;
  std::vector<int> weights(static_cast<size_t>(n), 0);
  for (const auto& perm : all_permutations(n)) {
    std::fill(weights.begin(), weights.end(), 0);
    while (true) {
      CycMatrix mat(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          mat(i, j) = Cyclotomic::from_rational(0, conductor);
      for (int j = 0; j < n; ++j)
        mat(perm[static_cast<size_t>(j)], j) =
            zpow[static_cast<size_t>(weights[static_cast<size_t>(j)])];
      elements.push_back(std::move(mat));
      int pos = 0;
      while (pos < n && ++weights[static_cast<size_t>(pos)] == m) {
        weights[static_cast<size_t>(pos)] = 0;
        ++pos;
      }
      if (pos == n) break;
    }
  }
  auto e = elementary_symmetric_all(
      x_powers(n, static_cast<unsigned>(m), conductor), n, conductor);
  std::vector<SuperPoly> invariants(e.begin() + 1, e.end());
  return ReflectionGroup(
      "G-" + std::to_string(m) + "-1-" + std::to_string(n), n, conductor,
      std::move(elements), std::move(invariants));
}

}  // namespace

const char* character_name(Character c) {
  switch (c) {
    case Character::Trivial: return "trivial";
    case Character::Det: return "det";
    case Character::DetInv: return "det-inv";
  }
  return "?";
}

SuperPoly act_with_inverse(const CycMatrix& sigma,
                           const CycMatrix& sigma_inverse, const SuperPoly& f) {
  if (f.flavor() == Flavor::Theta)
    return substitute_linear(f, sigma_inverse, sigma_inverse);
  return substitute_linear(f, sigma_inverse, sigma.transpose());
}

SuperPoly act(const CycMatrix& sigma, const SuperPoly& f) {
  return act_with_inverse(sigma, inverse_matrix(sigma), f);
}

ReflectionGroup::ReflectionGroup(std::string label, int n, unsigned conductor,
                                 std::vector<CycMatrix> elements,
                                 std::vector<SuperPoly> invariants)
    : label_(std::move(label)), n_(n), conductor_(conductor) {
  if (n < 1) throw AlgebraError("group dimension must be positive");
  if (elements.empty()) throw AlgebraError("group needs at least the identity");
  if (static_cast<int>(invariants.size()) != n)
    throw AlgebraError("expected exactly n fundamental invariants");

  elements_.reserve(elements.size());
  for (CycMatrix& m : elements) {
    if (m.rows() != n || m.cols() != n)
      throw AlgebraError("group element has wrong dimensions");
    elements_.push_back(normalize_conductor(m, conductor_));
  }

  for (const SuperPoly& f : invariants) {
    if (f.is_zero() || !f.x_only() || f.vars() != n)
      throw AlgebraError("invariants must be nonzero x-only polynomials");
    int deg = f.terms().begin()->first.xdeg();
    for (const auto& [mono, c] : f.terms())
      if (mono.xdeg() != deg)
        throw AlgebraError("invariant is not homogeneous: " + f.to_string());
  }
  std::stable_sort(invariants.begin(), invariants.end(),
                   [](const SuperPoly& a, const SuperPoly& b) {
                     return a.terms().begin()->first.xdeg() <
                            b.terms().begin()->first.xdeg();
                   });
  for (SuperPoly& f : invariants) {
    degrees_.push_back(f.terms().begin()->first.xdeg());
    invariants_.push_back(std::move(f));
  }

  size_t expected_order = 1;
  for (int d : degrees_) expected_order *= static_cast<size_t>(d);
  if (expected_order != elements_.size())
    throw AlgebraError("group order " + std::to_string(elements_.size()) +
                       " does not match product of degrees " +
                       std::to_string(expected_order));

  unitary_ = true;
  real_orthogonal_ = true;
  for (const CycMatrix& m : elements_) {
    inverses_.push_back(inverse_matrix(m));
    dets_.push_back(determinant(m));
    if (unitary_ && !is_unitary(m)) unitary_ = false;
    if (real_orthogonal_ && !is_real_matrix(m)) real_orthogonal_ = false;
  }
  if (!unitary_) real_orthogonal_ = false;

  for (size_t i = 0; i < elements_.size(); ++i) {
    subst_theta_.emplace_back(n_, Flavor::Theta, inverses_[i], inverses_[i]);
    subst_psi_.emplace_back(n_, Flavor::Psi, inverses_[i],
                            CycMatrix(elements_[i].transpose()));
  }

  for (const SuperPoly& f : invariants_)
    for (size_t i = 0; i < elements_.size(); ++i)
      if (act(i, f) != f)
        throw AlgebraError("claimed invariant is not fixed by the group: " +
                           f.to_string());
}

Cyclotomic ReflectionGroup::character_value(size_t i, Character chi) const {
  switch (chi) {
    case Character::Trivial: return Cyclotomic(1);
    case Character::Det: return dets_[i];
    case Character::DetInv: return dets_[i].inverse();
  }
  throw AlgebraError("unknown character");
}

Cyclotomic ReflectionGroup::character_value_inv(size_t i, Character chi) const {
  switch (chi) {
    case Character::Trivial: return Cyclotomic(1);
    case Character::Det: return dets_[i].inverse();
    case Character::DetInv: return dets_[i];
  }
  throw AlgebraError("unknown character");
}

SuperPoly ReflectionGroup::act(size_t i, const SuperPoly& f) const {
  return (f.flavor() == Flavor::Theta) ? subst_theta_[i].apply(f)
                                       : subst_psi_[i].apply(f);
}

std::vector<CycMatrix> generate_group(const std::vector<CycMatrix>& generators,
                                      size_t max_order) {
  Eigen::Index n = generators.empty() ? 1 : generators[0].rows();
  unsigned conductor = 1;
  for (const CycMatrix& g : generators) {
    if (g.rows() != n || g.cols() != n)
      throw AlgebraError("generators must be square of equal size");
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        unsigned c = g(i, j).conductor();
        if (c != 1) {
          if (conductor != 1 && conductor != c)
            throw ConductorMismatch(conductor, c);
          conductor = c;
        }
      }
  }
  std::vector<CycMatrix> gens;
  for (const CycMatrix& g : generators) {
    if (determinant(g).is_zero())
      throw AlgebraError("generator is not invertible");
    gens.push_back(normalize_conductor(g, conductor));
  }

  std::map<CycMatrix, size_t, MatrixReprLess> seen;
  std::vector<CycMatrix> queue;
  CycMatrix id = identity_matrix(n, conductor);
  seen.emplace(id, 0);
  queue.push_back(id);
  for (size_t head = 0; head < queue.size(); ++head) {
    CycMatrix current = queue[head];
    for (const CycMatrix& g : gens) {
      CycMatrix next = normalize_conductor(current * g, conductor);
      if (seen.count(next)) continue;
      if (seen.size() >= max_order)
        throw AlgebraError("group closure exceeds max_order " +
                           std::to_string(max_order));
      seen.emplace(next, seen.size());
      queue.push_back(std::move(next));
    }
  }
  std::vector<CycMatrix> out;
  for (const auto& [m, idx] : seen) out.push_back(m);
  return out;
}

ReflectionGroup builtin_group(const std::string& id) {
  auto bad = [&]() -> ReflectionGroup {
    throw AlgebraError(
        "unknown group id '" + id +
        "' (expected S<n>[-standard|-powersum], B<n>, D<n>, I2-<m>, "
        "G-<m>-1-<n>)");
  };
  auto parse_int = [&](const std::string& s) {
    if (s.empty() ||
        !std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isdigit(
                         static_cast<unsigned char>(c)); }))
      return -1;
    return std::stoi(s);
  };
  if (id.rfind("I2-", 0) == 0) {
    int m = parse_int(id.substr(3));
    if (m < 3) return bad();
    return make_dihedral(m);
  }
  if (id.rfind("G-", 0) == 0) {
    size_t p1 = id.find('-', 2);
    size_t p2 = (p1 == std::string::npos) ? p1 : id.find('-', p1 + 1);
    if (p2 == std::string::npos) return bad();
    int m = parse_int(id.substr(2, p1 - 2));
    int one = parse_int(id.substr(p1 + 1, p2 - p1 - 1));
    int n = parse_int(id.substr(p2 + 1));
    if (m < 2 || one != 1 || n < 1) return bad();
    return make_cyclic_monomial(m, n);
  }
  if (!id.empty() && (id[0] == 'S' || id[0] == 'B' || id[0] == 'D')) {
    std::string rest = id.substr(1);
    bool standard = false, powersum = false;
    size_t dash = rest.find('-');
    if (dash != std::string::npos) {
      std::string suffix = rest.substr(dash + 1);
      rest = rest.substr(0, dash);
      if (suffix == "standard")
        standard = true;
      else if (suffix == "powersum")
        powersum = true;
      else
        return bad();
    }
    int n = parse_int(rest);
    if (n < 1) return bad();
    if (id[0] == 'S') {
      if (standard) return make_symmetric_standard(n);
      return make_symmetric_natural(n, powersum);
    }
    if (standard || powersum) return bad();
    if (id[0] == 'B') return make_hyperoctahedral(n);
    return make_demihyperoctahedral(n);
  }
  return bad();
}

std::vector<std::string> builtin_catalog() {
  return {"S2",     "S3",     "S4",    "S3-standard", "S4-standard",
          "S3-powersum", "B2", "B3",   "D3",          "I2-3",
          "I2-4",   "I2-5",   "I2-6",  "G-3-1-1",     "G-3-1-2"};
}

SuperPoly vandermonde(const ReflectionGroup& g) {
  SuperPoly prod = SuperPoly::constant(
      g.vars(), Flavor::Theta, Cyclotomic::from_rational(1, g.conductor()));
  for (const SuperPoly& f : g.invariants()) prod *= exterior_derivative(f);
  uint32_t full = (1u << g.vars()) - 1u;
  SuperPoly delta(g.vars(), Flavor::Theta, g.conductor());
  for (const auto& [m, c] : prod.terms()) {
    if (m.mask != full)
      throw AlgebraError("df product has terms outside theta_[n]");
    SuperMonomial xm{m.alpha, 0u};
    delta.add_term(xm, c);
  }
  if (delta.is_zero())
    throw AlgebraError(
        "vandermonde vanishes: invariants are algebraically dependent");
  return delta;
}

Cyclotomic char_trivial(const CycMatrix&) { return Cyclotomic(1); }
Cyclotomic char_det(const CycMatrix& sigma) { return determinant(sigma); }
Cyclotomic char_det_inv(const CycMatrix& sigma) {
  return determinant(sigma).inverse();
}

void validate_group(const ReflectionGroup& g) {
  std::map<CycMatrix, size_t, MatrixReprLess> index;
  for (size_t i = 0; i < g.order(); ++i) index.emplace(g.element(i), i);
  if (index.size() != g.order())
    throw AlgebraError("duplicate group elements");
  if (!index.count(identity_matrix(g.vars(), g.conductor())))
    throw AlgebraError("identity is missing from the element list");
  for (size_t i = 0; i < g.order(); ++i) {
    if (!index.count(normalize_conductor(g.element_inverse(i), g.conductor())))
      throw AlgebraError("element inverse is missing from the list");
    for (size_t j = 0; j < g.order(); ++j) {
      CycMatrix prod =
          normalize_conductor(g.element(i) * g.element(j), g.conductor());
      if (!index.count(prod))
        throw AlgebraError("element list is not closed under products");
    }
  }
  vandermonde(g);  // throws when the invariants are dependent
}

ReflectionGroup parse_group_spec(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  std::string label = j.at("label").get<std::string>();
  int n = j.at("n").get<int>();
  unsigned conductor = j.at("conductor").get<unsigned>();
  size_t max_order = j.value("max_order", 1000);
  if (max_order > 1000)
    throw AlgebraError("max_order is capped at 1000");
  std::vector<CycMatrix> generators;
  for (const auto& jm : j.at("generators")) {
    CycMatrix m(n, n);
    if (static_cast<int>(jm.size()) != n)
      throw AlgebraError("generator has wrong row count");
    for (int r = 0; r < n; ++r) {
      const auto& row = jm.at(static_cast<size_t>(r));
      if (static_cast<int>(row.size()) != n)
        throw AlgebraError("generator has wrong column count");
      for (int c = 0; c < n; ++c)
        m(r, c) = Cyclotomic::parse(
            row.at(static_cast<size_t>(c)).get<std::string>(), conductor);
    }
    generators.push_back(std::move(m));
  }
  std::vector<SuperPoly> invariants;
  for (const auto& ji : j.at("invariants"))
    invariants.push_back(SuperPoly::parse(ji.get<std::string>(), n,
                                          Flavor::Theta, conductor));
  auto elements = generate_group(generators, max_order);
  ReflectionGroup g(label, n, conductor, std::move(elements),
                    std::move(invariants));
  validate_group(g);
  return g;
}

ReflectionGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError("cannot open group file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_group_spec(buffer.str());
}

}  // namespace superalg
