#ifndef SUPERALG_CYCLOTOMIC_HPP
#define SUPERALG_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace superalg {

using Rational = mpq_class;

/// Raised when two values at distinct non-trivial conductors meet.
class ConductorMismatch : public std::runtime_error {
public:
  ConductorMismatch(unsigned a, unsigned b)
      : std::runtime_error("conductor mismatch: " + std::to_string(a) +
                           " vs " + std::to_string(b)) {}
};

class AlgebraError : public std::runtime_error {
public:
  explicit AlgebraError(const std::string& what) : std::runtime_error(what) {}
};

unsigned euler_phi(unsigned m);

/// Coefficients of the m-th cyclotomic polynomial, ascending powers,
/// monic of degree phi(m). Cached per conductor.
const std::vector<Rational>& cyclotomic_polynomial(unsigned m);

/// Exact element of Q(zeta_m) in the power basis 1, z, ..., z^{phi(m)-1}
/// reduced modulo the m-th cyclotomic polynomial.
///
/// Values at conductor 1 are plain rationals and combine with any other
/// conductor (the embedding of Q is canonical). Two values at distinct
/// conductors > 1 never combine implicitly; lift explicitly via lifted().
class Cyclotomic {
public:
  Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}
  Cyclotomic(long v) : conductor_(1), coeffs_(1, Rational(v)) {}
  Cyclotomic(const Rational& v) : conductor_(1), coeffs_(1, v) {}

  /// zeta_m, the primitive m-th root of unity.
  static Cyclotomic zeta(unsigned m);
  static Cyclotomic from_rational(const Rational& v, unsigned m);
  /// Coefficient vector in the power basis; length must be phi(m).
  static Cyclotomic from_coeffs(std::vector<Rational> coeffs, unsigned m);

  unsigned conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// The rational value; throws AlgebraError("not rational") otherwise.
  Rational as_rational() const;

  /// Canonical embedding into Q(zeta_M); requires conductor() | M.
  Cyclotomic lifted(unsigned M) const;

  /// Image under zeta -> zeta^(m-1), i.e. complex conjugation.
  Cyclotomic conjugate() const;
  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

  /// Mathematical equality; mixed conductors allowed only through the
  /// rational embedding, otherwise throws.
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) {
    return !(a == b);
  }

  /// Total order on the representation (conductor, then coefficients):
  /// for containers only, no mathematical meaning across conductors.
  static int repr_compare(const Cyclotomic& a, const Cyclotomic& b);

  /// Text form such as "1/2*z^3 - 2"; round-trips exactly with parse().
  std::string to_string() const;
  static Cyclotomic parse(std::string_view text, unsigned conductor);

private:
  Cyclotomic(unsigned m, std::vector<Rational> coeffs)
      : conductor_(m), coeffs_(std::move(coeffs)) {}

  unsigned conductor_;
  std::vector<Rational> coeffs_;  // length phi(conductor_)
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

}  // namespace superalg

#endif
