#include "superalg/biseries.hpp"

#include <sstream>

#include <json.hpp>

namespace superalg {

BiSeries::BiSeries(int qmax, int tmax) : qmax_(qmax), tmax_(tmax) {
  if (qmax < 0 || tmax < 0) throw AlgebraError("negative truncation order");
  coeff_.assign(static_cast<size_t>(qmax + 1) * static_cast<size_t>(tmax + 1),
                Rational(0));
}

const Rational& BiSeries::at(int i, int j) const {
  if (i < 0 || i > qmax_ || j < 0 || j > tmax_)
    throw AlgebraError("series index outside truncation box");
  return coeff_[static_cast<size_t>(i) * static_cast<size_t>(tmax_ + 1) +
                static_cast<size_t>(j)];
}

void BiSeries::set(int i, int j, const Rational& v) {
  coeff_[static_cast<size_t>(i) * static_cast<size_t>(tmax_ + 1) +
         static_cast<size_t>(j)] = v;
}

void BiSeries::add(int i, int j, const Rational& v) {
  coeff_[static_cast<size_t>(i) * static_cast<size_t>(tmax_ + 1) +
         static_cast<size_t>(j)] += v;
}

bool BiSeries::is_zero() const {
  for (const Rational& c : coeff_)
    if (c != 0) return false;
  return true;
}

bool BiSeries::integral_nonnegative() const {
  for (const Rational& c : coeff_)
    if (c < 0 || c.get_den() != 1) return false;
  return true;
}

bool operator==(const BiSeries& a, const BiSeries& b) {
  return a.qmax_ == b.qmax_ && a.tmax_ == b.tmax_ && a.coeff_ == b.coeff_;
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
  if (a.qmax_ != b.qmax_ || a.tmax_ != b.tmax_)
    throw AlgebraError("series truncation mismatch");
  BiSeries out = a;
  for (size_t k = 0; k < out.coeff_.size(); ++k) out.coeff_[k] += b.coeff_[k];
  return out;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  if (a.qmax_ != b.qmax_ || a.tmax_ != b.tmax_)
    throw AlgebraError("series truncation mismatch");
  BiSeries out(a.qmax_, a.tmax_);
  for (int i = 0; i <= a.qmax_; ++i)
    for (int j = 0; j <= a.tmax_; ++j) {
      const Rational& ca = a.at(i, j);
      if (ca == 0) continue;
      for (int k = 0; i + k <= a.qmax_; ++k)
        for (int l = 0; j + l <= a.tmax_; ++l) {
          const Rational& cb = b.at(k, l);
          if (cb == 0) continue;
          out.add(i + k, j + l, ca * cb);
        }
    }
  return out;
}

BiSeries& BiSeries::mul_one_plus(const Rational& c, int a, int b) {
  BiSeries shifted(qmax_, tmax_);
  for (int i = 0; i + a <= qmax_; ++i)
    for (int j = 0; j + b <= tmax_; ++j) shifted.add(i + a, j + b, c * at(i, j));
  for (size_t k = 0; k < coeff_.size(); ++k) coeff_[k] += shifted.coeff_[k];
  return *this;
}

BiSeries& BiSeries::div_one_minus_q(int d) {
  if (d <= 0) throw AlgebraError("denominator degree must be positive");
  // 1/(1-q^d): running sums along q in steps of d
  for (int i = d; i <= qmax_; ++i)
    for (int j = 0; j <= tmax_; ++j) add(i, j, at(i - d, j));
  return *this;
}

BiSeries& BiSeries::shift_q(int s) {
  if (s == 0) return *this;
  if (s < 0) throw AlgebraError("negative q-shift on a truncated series");
  BiSeries out(qmax_, tmax_);
  for (int i = 0; i + s <= qmax_; ++i)
    for (int j = 0; j <= tmax_; ++j) out.set(i + s, j, at(i, j));
  *this = out;
  return *this;
}

std::string BiSeries::to_text() const {
  std::ostringstream os;
  std::vector<size_t> width(static_cast<size_t>(tmax_ + 1), 1);
  for (int j = 0; j <= tmax_; ++j) {
    width[static_cast<size_t>(j)] =
        std::max<size_t>(width[static_cast<size_t>(j)],
                         ("t^" + std::to_string(j)).size());
    for (int i = 0; i <= qmax_; ++i)
      width[static_cast<size_t>(j)] = std::max(
          width[static_cast<size_t>(j)], at(i, j).get_str().size());
  }
  os << "q\\t";
  for (int j = 0; j <= tmax_; ++j) {
    os << "  ";
    std::string head = "t^" + std::to_string(j);
    os << std::string(width[static_cast<size_t>(j)] - head.size(), ' ')
       << head;
  }
  os << "\n";
  for (int i = 0; i <= qmax_; ++i) {
    std::string head = "q^" + std::to_string(i);
    os << head;
    for (int j = 0; j <= tmax_; ++j) {
      std::string v = at(i, j).get_str();
      os << "  "
         << std::string(width[static_cast<size_t>(j)] - v.size(), ' ') << v;
    }
    os << "\n";
  }
  return os.str();
}

std::string BiSeries::to_csv() const {
  std::ostringstream os;
  os << "q";
  for (int j = 0; j <= tmax_; ++j) os << ",t" << j;
  os << "\n";
  for (int i = 0; i <= qmax_; ++i) {
    os << i;
    for (int j = 0; j <= tmax_; ++j) os << "," << at(i, j).get_str();
    os << "\n";
  }
  return os.str();
}

std::string BiSeries::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["qmax"] = qmax_;
  j["tmax"] = tmax_;
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i <= qmax_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int jj = 0; jj <= tmax_; ++jj) row.push_back(at(i, jj).get_str());
    rows.push_back(row);
  }
  j["coeffs"] = rows;
  return j.dump(2);
}

BiSeries series_transform_t(const BiSeries& f, int n) {
  if (n > f.tmax())
    throw AlgebraError("t-transform needs tmax >= n");
  for (int j = n + 1; j <= f.tmax(); ++j)
    for (int i = 0; i <= f.qmax(); ++i)
      if (f.at(i, j) != 0)
        throw AlgebraError("t-transform: series has t-degree above n");
  BiSeries out(f.qmax(), f.tmax());
  for (int i = 0; i <= f.qmax(); ++i)
    for (int j = 0; j <= n; ++j) out.set(i, n - j, f.at(i, j));
  return out;
}

BiSeries ProductFormula::expand(int qmax, int tmax) const {
  BiSeries out(qmax, tmax);
  if (qshift > qmax) return out;
  out.set(0, 0, Rational(1));
  for (const Factor& f : factors) {
    if (f.q_power_plus_t) {
      // (q^a + t) = q^a * (1 + q^{-a} t), expanded directly
      BiSeries next(qmax, tmax);
      for (int i = 0; i <= qmax; ++i)
        for (int j = 0; j <= tmax; ++j) {
          const Rational& c = out.at(i, j);
          if (c == 0) continue;
          if (i + f.a <= qmax) next.add(i + f.a, j, c);
          if (j + 1 <= tmax) next.add(i, j + 1, c);
        }
      out = next;
    } else {
      out.mul_one_plus(Rational(1), f.a, 1);
    }
  }
  for (int d : denom_degrees) out.div_one_minus_q(d);
  out.shift_q(qshift);
  return out;
}

ProductFormula formula_transform_t(const ProductFormula& f) {
  ProductFormula out = f;
  for (auto& factor : out.factors) factor.q_power_plus_t = !factor.q_power_plus_t;
  return out;
}

ProductFormula formula_transform_q(const ProductFormula& f) {
  if (f.factors.size() != f.denom_degrees.size())
    throw AlgebraError(
        "q-transform needs one denominator per numerator factor");
  ProductFormula out;
  out.qshift = -f.qshift;
  for (size_t k = 0; k < f.factors.size(); ++k) {
    const auto& factor = f.factors[k];
    int d = f.denom_degrees[k];
    // (1 + q^a t)/(1-q^d) -> q^(d-a-1) (q^a + t)/(1-q^d) and
    // (q^a + t)/(1-q^d) -> q^(d-a-1) (1 + q^a t)/(1-q^d)
    out.qshift += d - factor.a - 1;
    out.factors.push_back({factor.a, !factor.q_power_plus_t});
    out.denom_degrees.push_back(d);
  }
  if (out.qshift < 0)
    throw AlgebraError("q-transform produced a negative q-shift");
  return out;
}

}  // namespace superalg
