#ifndef SUPERALG_BISERIES_HPP
#define SUPERALG_BISERIES_HPP

#include <string>
#include <vector>

#include "superalg/cyclotomic.hpp"

namespace superalg {

/// Truncated bivariate power series in q and t with exact rational
/// coefficients; all arithmetic respects the truncation box.
class BiSeries {
public:
  BiSeries() : BiSeries(0, 0) {}
  BiSeries(int qmax, int tmax);

  int qmax() const { return qmax_; }
  int tmax() const { return tmax_; }
  const Rational& at(int i, int j) const;
  void set(int i, int j, const Rational& v);
  void add(int i, int j, const Rational& v);

  bool is_zero() const;
  /// True when every coefficient is a nonnegative integer.
  bool integral_nonnegative() const;

  friend bool operator==(const BiSeries& a, const BiSeries& b);
  friend bool operator!=(const BiSeries& a, const BiSeries& b) {
    return !(a == b);
  }
  friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);

  /// Multiply by (1 + c q^a t^b) in place.
  BiSeries& mul_one_plus(const Rational& c, int a, int b);
  /// Multiply by 1/(1 - q^d) in place (geometric expansion).
  BiSeries& div_one_minus_q(int d);
  /// Multiply by q^s in place, dropping overflow.
  BiSeries& shift_q(int s);

  std::string to_text() const;
  std::string to_csv() const;
  std::string to_json() const;

private:
  int qmax_, tmax_;
  std::vector<Rational> coeff_;  // (qmax+1) x (tmax+1), row-major in q
};

/// t^n F(q, t^{-1}) for F polynomial in t of degree <= n: flips the
/// t-columns. Throws if a coefficient above t-degree n is nonzero.
BiSeries series_transform_t(const BiSeries& f, int n);

/// Closed-form product q^shift prod_i N_i / prod_j (1 - q^(d_j)) where each
/// numerator factor is (q^a + t) or (1 + q^a t).
struct ProductFormula {
  struct Factor {
    int a = 0;
    bool q_power_plus_t = true;  // (q^a + t) when true, (1 + q^a t) otherwise
  };
  int qshift = 0;
  std::vector<Factor> factors;
  std::vector<int> denom_degrees;

  BiSeries expand(int qmax, int tmax) const;
};

/// F(q, t) -> t^n F(q, t^{-1}) at the descriptor level (n = factor count).
ProductFormula formula_transform_t(const ProductFormula& f);

/// G(q, t) -> (-q)^{-n} G(q^{-1}, t) at the descriptor level; requires every
/// numerator factor to be matched with a denominator factor.
ProductFormula formula_transform_q(const ProductFormula& f);

}  // namespace superalg

#endif
