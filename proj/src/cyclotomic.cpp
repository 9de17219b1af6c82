#include "superalg/cyclotomic.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

namespace superalg {

namespace {

using Poly = std::vector<Rational>;  // ascending powers

int poly_deg(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[static_cast<size_t>(i)] != 0) return i;
  return -1;
}

void poly_trim(Poly& p) {
  p.resize(static_cast<size_t>(poly_deg(p) + 1));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Euclidean division a = q*b + r over Q[z].
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  int db = poly_deg(b);
  if (db < 0) throw AlgebraError("polynomial division by zero");
  r = a;
  poly_trim(r);
  q.assign(r.size(), Rational(0));
  const Rational& lead = b[static_cast<size_t>(db)];
  for (int d = poly_deg(r); d >= db; d = poly_deg(r)) {
    Rational c = r[static_cast<size_t>(d)] / lead;
    q[static_cast<size_t>(d - db)] = c;
    for (int i = 0; i <= db; ++i)
      r[static_cast<size_t>(d - db + i)] -= c * b[static_cast<size_t>(i)];
  }
  poly_trim(q);
  poly_trim(r);
}

struct CycContext {
  unsigned m = 1;
  unsigned phi = 1;
  Poly modulus;                       // Phi_m, monic, length phi+1
  std::vector<Poly> pow_red;          // z^k mod Phi_m, each of length phi
};

std::vector<Rational> reduce_poly(const CycContext& ctx, const Poly& p) {
  std::vector<Rational> out(ctx.phi, Rational(0));
  for (size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    if (k < ctx.phi) {
      out[k] += p[k];
    } else if (k < ctx.pow_red.size()) {
      const Poly& row = ctx.pow_red[k];
      for (unsigned i = 0; i < ctx.phi; ++i) out[i] += p[k] * row[i];
    } else {
      // beyond the precomputed table (user-supplied huge powers): divide
      Poly big(k + 1, Rational(0));
      big[k] = p[k];
      Poly q, r;
      poly_divmod(big, ctx.modulus, q, r);
      for (size_t i = 0; i < r.size(); ++i) out[i] += r[i];
    }
  }
  return out;
}

std::map<unsigned, std::unique_ptr<Poly>>& phi_cache() {
  static std::map<unsigned, std::unique_ptr<Poly>> cache;
  return cache;
}

std::mutex& registry_mutex() {
  static std::mutex mu;
  return mu;
}

const Poly& cyclotomic_polynomial_locked(unsigned m) {
  auto& cache = phi_cache();
  auto it = cache.find(m);
  if (it != cache.end()) return *it->second;
  Poly result;
  if (m == 1) {
    result = {Rational(-1), Rational(1)};  // z - 1
  } else {
    Poly f(m + 1, Rational(0));  // z^m - 1
    f[0] = Rational(-1);
    f[m] = Rational(1);
    for (unsigned d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      const Poly& phid = cyclotomic_polynomial_locked(d);
      Poly q, r;
      poly_divmod(f, phid, q, r);
      if (poly_deg(r) >= 0) throw AlgebraError("cyclotomic division not exact");
      f = q;
    }
    result = f;
  }
  auto inserted = cache.emplace(m, std::make_unique<Poly>(std::move(result)));
  return *inserted.first->second;
}

constexpr unsigned kMaxConductor = 1024;

const CycContext& context(unsigned m) {
  static std::array<std::atomic<const CycContext*>, kMaxConductor> slots{};
  if (m == 0 || m >= kMaxConductor)
    throw AlgebraError("conductor out of supported range 1.." +
                       std::to_string(kMaxConductor - 1));
  const CycContext* cached = slots[m].load(std::memory_order_acquire);
  if (cached) return *cached;

  std::lock_guard<std::mutex> lock(registry_mutex());
  cached = slots[m].load(std::memory_order_relaxed);
  if (cached) return *cached;

  auto ctx = std::make_unique<CycContext>();
  ctx->m = m;
  ctx->modulus = cyclotomic_polynomial_locked(m);
  ctx->phi = static_cast<unsigned>(poly_deg(ctx->modulus));

  unsigned maxpow = std::max(2 * ctx->phi, m) + 1;
  ctx->pow_red.resize(maxpow + 1);
  for (unsigned k = 0; k <= maxpow; ++k) {
    Poly row(ctx->phi, Rational(0));
    if (k < ctx->phi) {
      row[k] = Rational(1);
    } else {
      // z * previous row, reduced using z^phi = -(lower part of Phi_m)
      const Poly& prev = ctx->pow_red[k - 1];
      Rational top = prev[ctx->phi - 1];
      for (unsigned i = ctx->phi - 1; i >= 1; --i) row[i] = prev[i - 1];
      row[0] = Rational(0);
      if (top != 0)
        for (unsigned i = 0; i < ctx->phi; ++i) row[i] -= top * ctx->modulus[i];
    }
    ctx->pow_red[k] = std::move(row);
  }
  const CycContext* raw = ctx.release();  // lives for the whole process
  slots[m].store(raw, std::memory_order_release);
  return *raw;
}

// Common-conductor promotion: rationals (conductor 1) embed anywhere.
unsigned common_conductor(const Cyclotomic& a, const Cyclotomic& b) {
  unsigned ma = a.conductor(), mb = b.conductor();
  if (ma == mb) return ma;
  if (ma == 1) return mb;
  if (mb == 1) return ma;
  throw ConductorMismatch(ma, mb);
}

}  // namespace

unsigned euler_phi(unsigned m) {
  if (m == 0) throw AlgebraError("euler_phi(0)");
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Rational>& cyclotomic_polynomial(unsigned m) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  return cyclotomic_polynomial_locked(m);
}

Cyclotomic Cyclotomic::zeta(unsigned m) {
  const CycContext& ctx = context(m);
  std::vector<Rational> c(ctx.phi, Rational(0));
  if (ctx.phi > 1) {
    c[1] = Rational(1);
  } else {
    c = ctx.pow_red[1];  // m = 1 or 2: z reduces to +-1
  }
  return Cyclotomic(m, std::move(c));
}

Cyclotomic Cyclotomic::from_rational(const Rational& v, unsigned m) {
  const CycContext& ctx = context(m);
  std::vector<Rational> c(ctx.phi, Rational(0));
  c[0] = v;
  return Cyclotomic(m, std::move(c));
}

Cyclotomic Cyclotomic::from_coeffs(std::vector<Rational> coeffs, unsigned m) {
  const CycContext& ctx = context(m);
  if (coeffs.size() != ctx.phi)
    throw AlgebraError("coefficient vector length must equal phi(m)");
  return Cyclotomic(m, std::move(coeffs));
}

bool Cyclotomic::is_zero() const {
  for (const Rational& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::as_rational() const {
  if (!is_rational()) throw AlgebraError("not rational: " + to_string());
  return coeffs_[0];
}

Cyclotomic Cyclotomic::lifted(unsigned M) const {
  if (M == conductor_) return *this;
  if (M % conductor_ != 0)
    throw AlgebraError("cannot lift conductor " + std::to_string(conductor_) +
                       " into " + std::to_string(M));
  const CycContext& ctx = context(M);
  unsigned step = M / conductor_;
  std::vector<Rational> out(ctx.phi, Rational(0));
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const Poly& row = ctx.pow_red[j * step];
    for (unsigned i = 0; i < ctx.phi; ++i) out[i] += coeffs_[j] * row[i];
  }
  return Cyclotomic(M, std::move(out));
}

Cyclotomic Cyclotomic::conjugate() const {
  if (conductor_ == 1) return *this;
  const CycContext& ctx = context(conductor_);
  std::vector<Rational> out(ctx.phi, Rational(0));
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    size_t image = (j == 0) ? 0 : conductor_ - j;  // zeta^j -> zeta^(m-j)
    const Poly& row = ctx.pow_red[image];
    for (unsigned i = 0; i < ctx.phi; ++i) out[i] += coeffs_[j] * row[i];
  }
  return Cyclotomic(conductor_, std::move(out));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw AlgebraError("inverse of zero");
  if (conductor_ == 1) return Cyclotomic(Rational(1) / coeffs_[0]);
  const CycContext& ctx = context(conductor_);
  // Extended Euclid in Q[z] for u*a + v*Phi = gcd (a nonzero => gcd constant).
  Poly r0 = ctx.modulus, r1 = coeffs_;
  poly_trim(r1);
  Poly u0{Rational(0)}, u1{Rational(1)};
  while (poly_deg(r1) > 0) {
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly qu = poly_mul(q, u1);
    Poly u2 = u0;
    u2.resize(std::max(u2.size(), qu.size()), Rational(0));
    for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
    poly_trim(u2);
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (poly_deg(r1) != 0) throw AlgebraError("inverse: gcd not constant");
  Rational g = r1[0];
  std::vector<Rational> out = reduce_poly(ctx, u1);
  for (Rational& c : out) c /= g;
  return Cyclotomic(conductor_, std::move(out));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic base = *this;
  Cyclotomic acc = Cyclotomic::from_rational(Rational(1), conductor_);
  unsigned long k = static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1UL) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> out = coeffs_;
  for (Rational& c : out) c = -c;
  return Cyclotomic(conductor_, std::move(out));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  unsigned m = common_conductor(a, b);
  const Cyclotomic& x = (a.conductor() == m) ? a : a.lifted(m);
  const Cyclotomic& y = (b.conductor() == m) ? b : b.lifted(m);
  std::vector<Rational> out = x.coeffs_;
  for (size_t i = 0; i < out.size(); ++i) out[i] += y.coeffs_[i];
  return Cyclotomic(m, std::move(out));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  return a + (-b);
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  unsigned m = common_conductor(a, b);
  if (m == 1) return Cyclotomic(a.coeffs_[0] * b.coeffs_[0]);
  const Cyclotomic x = (a.conductor() == m) ? a : a.lifted(m);
  const Cyclotomic y = (b.conductor() == m) ? b : b.lifted(m);
  const CycContext& ctx = context(m);
  Poly conv(2 * ctx.phi - 1, Rational(0));
  for (size_t i = 0; i < ctx.phi; ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < ctx.phi; ++j) {
      if (y.coeffs_[j] == 0) continue;
      conv[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  return Cyclotomic(m, reduce_poly(ctx, conv));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
  return a * b.inverse();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  unsigned m = common_conductor(a, b);
  const Cyclotomic x = (a.conductor() == m) ? a : a.lifted(m);
  const Cyclotomic y = (b.conductor() == m) ? b : b.lifted(m);
  return x.coeffs_ == y.coeffs_;
}

int Cyclotomic::repr_compare(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ != b.conductor_) return a.conductor_ < b.conductor_ ? -1 : 1;
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  bool first = true;
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<size_t>(k)];
    if (c == 0) continue;
    Rational abs_c = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    if (k == 0) {
      out += abs_c.get_str();
    } else {
      if (abs_c != 1) out += abs_c.get_str() + "*";
      out += (k == 1) ? "z" : "z^" + std::to_string(k);
    }
  }
  if (first) out = "0";
  return out;
}

namespace {

void skip_ws(std::string_view& s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
}

bool parse_rational_token(std::string_view& s, Rational& out) {
  skip_ws(s);
  size_t i = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == 0) return false;
  std::string num(s.substr(0, i));
  s.remove_prefix(i);
  skip_ws(s);
  std::string den = "1";
  if (!s.empty() && s.front() == '/') {
    s.remove_prefix(1);
    skip_ws(s);
    size_t j = 0;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == 0) throw AlgebraError("malformed rational");
    den = std::string(s.substr(0, j));
    s.remove_prefix(j);
  }
  out = Rational(num + "/" + den);
  out.canonicalize();
  return true;
}

}  // namespace

Cyclotomic Cyclotomic::parse(std::string_view text, unsigned conductor) {
  Cyclotomic result = Cyclotomic::from_rational(Rational(0), conductor);
  Cyclotomic z = Cyclotomic::zeta(conductor);
  std::string_view s = text;
  skip_ws(s);
  if (s.empty()) throw AlgebraError("empty scalar");
  bool first = true;
  while (true) {
    skip_ws(s);
    if (s.empty()) break;
    int sign = 1;
    if (s.front() == '+' || s.front() == '-') {
      if (s.front() == '-') sign = -1;
      s.remove_prefix(1);
    } else if (!first) {
      throw AlgebraError("expected '+' or '-' in scalar: " +
                         std::string(text));
    }
    first = false;
    skip_ws(s);
    Rational coeff(1);
    bool have_coeff = parse_rational_token(s, coeff);
    skip_ws(s);
    long power = 0;
    if (!s.empty() &&
        ((s.front() == '*' && have_coeff) || s.front() == 'z')) {
      if (s.front() == '*') {
        s.remove_prefix(1);
        skip_ws(s);
      }
      if (s.empty() || s.front() != 'z')
        throw AlgebraError("expected 'z' in scalar: " + std::string(text));
      s.remove_prefix(1);
      power = 1;
      skip_ws(s);
      if (!s.empty() && s.front() == '^') {
        s.remove_prefix(1);
        skip_ws(s);
        Rational e;
        if (!parse_rational_token(s, e) || e.get_den() != 1)
          throw AlgebraError("malformed exponent in scalar");
        power = static_cast<long>(e.get_num().get_si());
      }
    } else if (!have_coeff) {
      throw AlgebraError("malformed term in scalar: " + std::string(text));
    }
    if (sign < 0) coeff = -coeff;
    Cyclotomic term = Cyclotomic::from_rational(coeff, conductor);
    if (power > 0) term *= z.pow(power);
    result += term;
    skip_ws(s);
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) {
  return os << c.to_string();
}

}  // namespace superalg
