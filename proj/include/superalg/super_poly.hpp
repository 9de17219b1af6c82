#ifndef SUPERALG_SUPER_POLY_HPP
#define SUPERALG_SUPER_POLY_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "superalg/cyclotomic.hpp"
#include "superalg/matrix.hpp"

namespace superalg {

/// Which exterior algebra the anticommuting part lives in:
/// Theta = Lambda(V*), generators written t1..tn;
/// Psi   = Lambda(V),  generators written p1..pn.
enum class Flavor { Theta, Psi };

struct Bidegree {
  int qdeg = 0;  // x-degree
  int tdeg = 0;  // exterior degree
  friend bool operator==(const Bidegree& a, const Bidegree& b) {
    return a.qdeg == b.qdeg && a.tdeg == b.tdeg;
  }
  friend bool operator<(const Bidegree& a, const Bidegree& b) {
    if (a.qdeg != b.qdeg) return a.qdeg < b.qdeg;
    return a.tdeg < b.tdeg;
  }
};

/// x^alpha times the exterior generators in the subset mask
/// (bit i-1 set means generator i present, indices 1-based).
struct SuperMonomial {
  std::vector<unsigned> alpha;
  uint32_t mask = 0;

  int xdeg() const {
    int d = 0;
    for (unsigned e : alpha) d += static_cast<int>(e);
    return d;
  }
  int extdeg() const { return __builtin_popcount(mask); }
  Bidegree bidegree() const { return {xdeg(), extdeg()}; }

  friend bool operator==(const SuperMonomial& a, const SuperMonomial& b) {
    return a.mask == b.mask && a.alpha == b.alpha;
  }
  // lexicographic on alpha, then mask: the pinned term order
  friend bool operator<(const SuperMonomial& a, const SuperMonomial& b) {
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.mask < b.mask;
  }
};

/// #{(i, j) in I x J : j < i}; the sign of theta_I theta_J is
/// (-1)^inv_count(I, J).
int inv_count(uint32_t I, uint32_t J);

/// sum_{i in I} (i - 1), the sign exponent of the Hodge dual.
int deg_of_mask(uint32_t I);

/// Sparse element of k[x_1..x_n] tensor an exterior algebra, with
/// Cyclotomic coefficients sharing one conductor. Immutable in spirit:
/// all operations build new values.
class SuperPoly {
public:
  SuperPoly() : n_(0), flavor_(Flavor::Theta), conductor_(1) {}
  SuperPoly(int n, Flavor flavor, unsigned conductor = 1);

  static SuperPoly constant(int n, Flavor flavor, const Cyclotomic& c);
  static SuperPoly variable(int n, Flavor flavor, int i);   // x_i, 1-based
  static SuperPoly exterior(int n, Flavor flavor, int i);   // theta_i / psi_i
  static SuperPoly monomial(int n, Flavor flavor, SuperMonomial m,
                            const Cyclotomic& c);

  int vars() const { return n_; }
  Flavor flavor() const { return flavor_; }
  unsigned conductor() const { return conductor_; }
  const std::map<SuperMonomial, Cyclotomic>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool x_only() const;
  /// Bihomogeneous of a single bidegree (zero counts as homogeneous).
  bool bihomogeneous() const;
  Cyclotomic coeff(const SuperMonomial& m) const;
  Cyclotomic constant_coeff() const;

  /// Accumulate c into the monomial's coefficient, dropping zeros.
  void add_term(const SuperMonomial& m, const Cyclotomic& c);

  SuperPoly operator-() const;
  friend SuperPoly operator+(const SuperPoly& a, const SuperPoly& b);
  friend SuperPoly operator-(const SuperPoly& a, const SuperPoly& b);
  friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b);
  friend SuperPoly operator*(const Cyclotomic& c, const SuperPoly& f);
  SuperPoly& operator+=(const SuperPoly& o) { return *this = *this + o; }
  SuperPoly& operator-=(const SuperPoly& o) { return *this = *this - o; }
  SuperPoly& operator*=(const SuperPoly& o) { return *this = *this * o; }

  SuperPoly pow(unsigned e) const;

  friend bool operator==(const SuperPoly& a, const SuperPoly& b);
  friend bool operator!=(const SuperPoly& a, const SuperPoly& b) {
    return !(a == b);
  }

  /// Text form "(1/2)*x1^2*x3*t2*t4 + ..."; round-trips with parse().
  std::string to_string() const;
  static SuperPoly parse(std::string_view text, int n, Flavor flavor,
                         unsigned conductor);

private:
  void raise_conductor(unsigned m);

  int n_;
  Flavor flavor_;
  unsigned conductor_;
  std::map<SuperMonomial, Cyclotomic> terms_;
};

std::ostream& operator<<(std::ostream& os, const SuperPoly& f);

/// d(f theta_I) = sum_i (df/dx_i) theta_i theta_I; requires Theta flavor.
SuperPoly exterior_derivative(const SuperPoly& f);

SuperPoly partial_x(int i, const SuperPoly& f);      // 1-based index
SuperPoly partial_theta(int i, const SuperPoly& f);  // works on either flavor
SuperPoly mult_theta(int i, const SuperPoly& f);

/// Relabel theta <-> psi without touching coefficients or masks.
SuperPoly reinterpret_flavor(const SuperPoly& f, Flavor flavor);

SuperPoly bidegree_component(const SuperPoly& f, Bidegree b);
std::set<Bidegree> bidegrees(const SuperPoly& f);

/// Hodge dual: *theta_I = (-1)^deg(I) psi_([n]-I), k[x]-linearly.
SuperPoly hodge_star(const SuperPoly& f);

/// Ring endomorphism x_j -> sum_i Mx(j,i) x_i, ext_j -> sum_i Mext(j,i) ext_i.
/// Caches generator-image powers so one substitution can be applied to
/// many inputs cheaply.
class LinearSubstitution {
public:
  LinearSubstitution(int n, Flavor flavor, const CycMatrix& mx,
                     const CycMatrix& mext);
  SuperPoly apply(const SuperPoly& f) const;

private:
  SuperPoly apply_general(const SuperPoly& f) const;
  SuperPoly apply_monomial_fast(const SuperPoly& f) const;
  const SuperPoly& x_image_power(int j, unsigned e) const;

  int n_;
  Flavor flavor_;
  unsigned conductor_;
  bool monomial_fast_ = false;
  // fast path: generator j maps to scale[j] * generator target[j] (or to 0)
  std::vector<int> x_target_, ext_target_;
  std::vector<Cyclotomic> x_scale_, ext_scale_;
  // general path
  std::vector<SuperPoly> x_images_, ext_images_;
  mutable std::vector<std::vector<SuperPoly>> x_power_cache_;
};

SuperPoly substitute_linear(const SuperPoly& f, const CycMatrix& mx,
                            const CycMatrix& mext);

}  // namespace superalg

#endif
