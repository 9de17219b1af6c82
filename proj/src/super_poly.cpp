#include "superalg/super_poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace superalg {

namespace {

constexpr int kMaxVars = 31;

void check_compatible(const SuperPoly& a, const SuperPoly& b) {
  if (a.vars() != b.vars())
    throw AlgebraError("super-polynomials have different variable counts");
  if (a.flavor() != b.flavor())
    throw AlgebraError("super-polynomials have different exterior flavors");
}

void check_index(int i, int n) {
  if (i < 1 || i > n)
    throw AlgebraError("generator index " + std::to_string(i) +
                       " out of range 1.." + std::to_string(n));
}

int parity_below(uint32_t mask, int bit) {
  return __builtin_popcount(mask & ((1u << bit) - 1u)) & 1;
}

}  // namespace

int inv_count(uint32_t I, uint32_t J) {
  int count = 0;
  uint32_t rest = I;
  while (rest) {
    int bit = __builtin_ctz(rest);
    rest &= rest - 1;
    count += __builtin_popcount(J & ((1u << bit) - 1u));
  }
  return count;
}

int deg_of_mask(uint32_t I) {
  int deg = 0;
  uint32_t rest = I;
  while (rest) {
    deg += __builtin_ctz(rest);
    rest &= rest - 1;
  }
  return deg;
}

SuperPoly::SuperPoly(int n, Flavor flavor, unsigned conductor)
    : n_(n), flavor_(flavor), conductor_(conductor) {
  if (n < 0 || n > kMaxVars)
    throw AlgebraError("variable count out of range 0.." +
                       std::to_string(kMaxVars));
}

SuperPoly SuperPoly::constant(int n, Flavor flavor, const Cyclotomic& c) {
  SuperPoly f(n, flavor, c.conductor());
  f.add_term(SuperMonomial{std::vector<unsigned>(static_cast<size_t>(n), 0u),
                           0u},
             c);
  return f;
}

SuperPoly SuperPoly::variable(int n, Flavor flavor, int i) {
  check_index(i, n);
  SuperPoly f(n, flavor);
  SuperMonomial m{std::vector<unsigned>(static_cast<size_t>(n), 0u), 0u};
  m.alpha[static_cast<size_t>(i - 1)] = 1;
  f.add_term(m, Cyclotomic(1));
  return f;
}

SuperPoly SuperPoly::exterior(int n, Flavor flavor, int i) {
  check_index(i, n);
  SuperPoly f(n, flavor);
  SuperMonomial m{std::vector<unsigned>(static_cast<size_t>(n), 0u),
                  1u << (i - 1)};
  f.add_term(m, Cyclotomic(1));
  return f;
}

SuperPoly SuperPoly::monomial(int n, Flavor flavor, SuperMonomial m,
                              const Cyclotomic& c) {
  if (static_cast<int>(m.alpha.size()) != n)
    throw AlgebraError("monomial exponent vector has wrong length");
  if (n < kMaxVars && (m.mask >> n) != 0)
    throw AlgebraError("monomial mask has bits beyond the variable count");
  SuperPoly f(n, flavor, c.conductor());
  f.add_term(m, c);
  return f;
}

bool SuperPoly::x_only() const {
  for (const auto& [m, c] : terms_)
    if (m.mask != 0) return false;
  return true;
}

bool SuperPoly::bihomogeneous() const {
  if (terms_.empty()) return true;
  Bidegree b = terms_.begin()->first.bidegree();
  for (const auto& [m, c] : terms_)
    if (!(m.bidegree() == b)) return false;
  return true;
}

Cyclotomic SuperPoly::coeff(const SuperMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Cyclotomic(0) : it->second;
}

Cyclotomic SuperPoly::constant_coeff() const {
  return coeff(SuperMonomial{std::vector<unsigned>(static_cast<size_t>(n_), 0u),
                             0u});
}

void SuperPoly::raise_conductor(unsigned m) {
  if (conductor_ == m) return;
  for (auto& [mono, c] : terms_) c = c.lifted(m);
  conductor_ = m;
}

void SuperPoly::add_term(const SuperMonomial& m, const Cyclotomic& c) {
  if (c.is_zero()) return;
  unsigned cm = c.conductor();
  Cyclotomic v = c;
  if (cm != conductor_) {
    if (cm == 1) {
      v = c.lifted(conductor_);
    } else if (conductor_ == 1) {
      raise_conductor(cm);
    } else {
      throw ConductorMismatch(conductor_, cm);
    }
  }
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SuperPoly SuperPoly::operator-() const {
  SuperPoly out(n_, flavor_, conductor_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

SuperPoly operator+(const SuperPoly& a, const SuperPoly& b) {
  check_compatible(a, b);
  SuperPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

SuperPoly operator-(const SuperPoly& a, const SuperPoly& b) {
  check_compatible(a, b);
  SuperPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
  return out;
}

SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) {
  check_compatible(a, b);
  SuperPoly out(a.vars(), a.flavor(),
                a.conductor() != 1 ? a.conductor() : b.conductor());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.mask & mb.mask) continue;  // repeated exterior generator
      SuperMonomial m;
      m.alpha.resize(ma.alpha.size());
      for (size_t i = 0; i < ma.alpha.size(); ++i)
        m.alpha[i] = ma.alpha[i] + mb.alpha[i];
      m.mask = ma.mask | mb.mask;
      Cyclotomic c = ca * cb;
      if (inv_count(ma.mask, mb.mask) & 1) c = -c;
      out.add_term(m, c);
    }
  }
  return out;
}

SuperPoly operator*(const Cyclotomic& c, const SuperPoly& f) {
  SuperPoly out(f.vars(), f.flavor(),
                c.conductor() != 1 ? c.conductor() : f.conductor());
  for (const auto& [m, fc] : f.terms_) out.add_term(m, c * fc);
  return out;
}

SuperPoly SuperPoly::pow(unsigned e) const {
  SuperPoly acc = SuperPoly::constant(n_, flavor_, Cyclotomic(1));
  SuperPoly base = *this;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const SuperPoly& a, const SuperPoly& b) {
  check_compatible(a, b);
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ita = a.terms_.begin();
  auto itb = b.terms_.begin();
  for (; ita != a.terms_.end(); ++ita, ++itb) {
    if (!(ita->first == itb->first)) return false;
    if (ita->second != itb->second) return false;
  }
  return true;
}

std::string SuperPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const char ext_prefix = (flavor_ == Flavor::Theta) ? 't' : 'p';
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + c.to_string() + ")";
    for (size_t i = 0; i < m.alpha.size(); ++i) {
      if (m.alpha[i] == 0) continue;
      out += "*x" + std::to_string(i + 1);
      if (m.alpha[i] > 1) out += "^" + std::to_string(m.alpha[i]);
    }
    uint32_t rest = m.mask;
    while (rest) {
      int bit = __builtin_ctz(rest);
      rest &= rest - 1;
      out += "*";
      out += ext_prefix;
      out += std::to_string(bit + 1);
    }
  }
  return out;
}

SuperPoly SuperPoly::parse(std::string_view text, int n, Flavor flavor,
                           unsigned conductor) {
  SuperPoly result(n, flavor, conductor);
  const char ext_prefix = (flavor == Flavor::Theta) ? 't' : 'p';
  const char wrong_prefix = (flavor == Flavor::Theta) ? 'p' : 't';
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto parse_uint = [&]() -> long {
    size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) throw AlgebraError("expected number in super-poly text");
    return std::stol(std::string(text.substr(start, pos - start)));
  };
  skip_ws();
  if (pos >= text.size()) throw AlgebraError("empty super-poly text");
  if (text.substr(pos) == "0") return result;
  bool first = true;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (!first) {
      if (text[pos] != '+')
        throw AlgebraError("expected '+' between super-poly terms");
      ++pos;
      skip_ws();
    }
    first = false;
    if (pos >= text.size() || text[pos] != '(')
      throw AlgebraError("expected '(' starting a coefficient");
    size_t close = text.find(')', pos);
    if (close == std::string_view::npos)
      throw AlgebraError("unbalanced coefficient parentheses");
    Cyclotomic c =
        Cyclotomic::parse(text.substr(pos + 1, close - pos - 1), conductor);
    pos = close + 1;
    SuperMonomial m{std::vector<unsigned>(static_cast<size_t>(n), 0u), 0u};
    while (true) {
      skip_ws();
      if (pos >= text.size() || text[pos] != '*') break;
      ++pos;
      skip_ws();
      if (pos >= text.size()) throw AlgebraError("dangling '*' in term");
      char kind = text[pos];
      if (kind == wrong_prefix)
        throw AlgebraError("exterior generator prefix does not match flavor");
      if (kind != 'x' && kind != ext_prefix)
        throw AlgebraError(std::string("unknown generator '") + kind + "'");
      ++pos;
      long idx = parse_uint();
      if (idx < 1 || idx > n)
        throw AlgebraError("generator index out of range in term");
      if (kind == 'x') {
        long e = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          e = parse_uint();
        }
        m.alpha[static_cast<size_t>(idx - 1)] += static_cast<unsigned>(e);
      } else {
        uint32_t bit = 1u << (idx - 1);
        if (m.mask & bit)
          throw AlgebraError("repeated exterior generator in term");
        m.mask |= bit;
      }
    }
    result.add_term(m, c);
    skip_ws();
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const SuperPoly& f) {
  return os << f.to_string();
}

SuperPoly exterior_derivative(const SuperPoly& f) {
  if (f.flavor() != Flavor::Theta)
    throw AlgebraError("exterior derivative requires the theta flavor");
  SuperPoly out(f.vars(), f.flavor(), f.conductor());
  for (const auto& [m, c] : f.terms()) {
    for (size_t i = 0; i < m.alpha.size(); ++i) {
      if (m.alpha[i] == 0) continue;
      uint32_t bit = 1u << i;
      if (m.mask & bit) continue;  // theta_i theta_I vanishes
      SuperMonomial d = m;
      d.alpha[i] -= 1;
      d.mask |= bit;
      Cyclotomic coeff = c * Cyclotomic(static_cast<long>(m.alpha[i]));
      if (parity_below(m.mask, static_cast<int>(i))) coeff = -coeff;
      out.add_term(d, coeff);
    }
  }
  return out;
}

SuperPoly partial_x(int i, const SuperPoly& f) {
  check_index(i, f.vars());
  size_t idx = static_cast<size_t>(i - 1);
  SuperPoly out(f.vars(), f.flavor(), f.conductor());
  for (const auto& [m, c] : f.terms()) {
    if (m.alpha[idx] == 0) continue;
    SuperMonomial d = m;
    d.alpha[idx] -= 1;
    out.add_term(d, c * Cyclotomic(static_cast<long>(m.alpha[idx])));
  }
  return out;
}

SuperPoly partial_theta(int i, const SuperPoly& f) {
  check_index(i, f.vars());
  uint32_t bit = 1u << (i - 1);
  SuperPoly out(f.vars(), f.flavor(), f.conductor());
  for (const auto& [m, c] : f.terms()) {
    if (!(m.mask & bit)) continue;
    SuperMonomial d = m;
    d.mask &= ~bit;
    out.add_term(d, parity_below(m.mask, i - 1) ? -c : c);
  }
  return out;
}

SuperPoly mult_theta(int i, const SuperPoly& f) {
  check_index(i, f.vars());
  uint32_t bit = 1u << (i - 1);
  SuperPoly out(f.vars(), f.flavor(), f.conductor());
  for (const auto& [m, c] : f.terms()) {
    if (m.mask & bit) continue;
    SuperMonomial d = m;
    d.mask |= bit;
    out.add_term(d, parity_below(m.mask, i - 1) ? -c : c);
  }
  return out;
}

SuperPoly reinterpret_flavor(const SuperPoly& f, Flavor flavor) {
  if (f.flavor() == flavor) return f;
  SuperPoly out(f.vars(), flavor, f.conductor());
  for (const auto& [m, c] : f.terms()) out.add_term(m, c);
  return out;
}

SuperPoly bidegree_component(const SuperPoly& f, Bidegree b) {
  SuperPoly out(f.vars(), f.flavor(), f.conductor());
  for (const auto& [m, c] : f.terms())
    if (m.bidegree() == b) out.add_term(m, c);
  return out;
}

std::set<Bidegree> bidegrees(const SuperPoly& f) {
  std::set<Bidegree> out;
  for (const auto& [m, c] : f.terms()) out.insert(m.bidegree());
  return out;
}

SuperPoly hodge_star(const SuperPoly& f) {
  if (f.flavor() != Flavor::Theta)
    throw AlgebraError("hodge dual requires the theta flavor");
  uint32_t full = (f.vars() == kMaxVars) ? 0x7fffffffu
                                         : ((1u << f.vars()) - 1u);
  SuperPoly out(f.vars(), Flavor::Psi, f.conductor());
  for (const auto& [m, c] : f.terms()) {
    SuperMonomial d = m;
    d.mask = full & ~m.mask;
    out.add_term(d, (deg_of_mask(m.mask) & 1) ? -c : c);
  }
  return out;
}

LinearSubstitution::LinearSubstitution(int n, Flavor flavor,
                                       const CycMatrix& mx,
                                       const CycMatrix& mext)
    : n_(n), flavor_(flavor), conductor_(1) {
  if (mx.rows() != n || mx.cols() != n || mext.rows() != n || mext.cols() != n)
    throw AlgebraError("substitution matrices must be n x n");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      unsigned c = mx(i, j).conductor();
      unsigned ce = mext(i, j).conductor();
      if (c != 1) {
        if (conductor_ != 1 && conductor_ != c)
          throw ConductorMismatch(conductor_, c);
        conductor_ = c;
      }
      if (ce != 1) {
        if (conductor_ != 1 && conductor_ != ce)
          throw ConductorMismatch(conductor_, ce);
        conductor_ = ce;
      }
    }

  // Fast path when both matrices have at most one nonzero per row:
  // generators map to scaled generators.
  monomial_fast_ = true;
  x_target_.assign(static_cast<size_t>(n), -1);
  ext_target_.assign(static_cast<size_t>(n), -1);
  x_scale_.assign(static_cast<size_t>(n), Cyclotomic(0));
  ext_scale_.assign(static_cast<size_t>(n), Cyclotomic(0));
  for (int j = 0; j < n && monomial_fast_; ++j) {
    int cx = 0, ce = 0;
    for (int i = 0; i < n; ++i) {
      if (!mx(j, i).is_zero()) {
        ++cx;
        x_target_[static_cast<size_t>(j)] = i;
        x_scale_[static_cast<size_t>(j)] = mx(j, i);
      }
      if (!mext(j, i).is_zero()) {
        ++ce;
        ext_target_[static_cast<size_t>(j)] = i;
        ext_scale_[static_cast<size_t>(j)] = mext(j, i);
      }
    }
    if (cx > 1 || ce > 1) monomial_fast_ = false;
  }

  if (!monomial_fast_) {
    x_images_.reserve(static_cast<size_t>(n));
    ext_images_.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
      SuperPoly xi(n, flavor, conductor_);
      SuperPoly ei(n, flavor, conductor_);
      for (int i = 0; i < n; ++i) {
        if (!mx(j, i).is_zero())
          xi += mx(j, i) * SuperPoly::variable(n, flavor, i + 1);
        if (!mext(j, i).is_zero())
          ei += mext(j, i) * SuperPoly::exterior(n, flavor, i + 1);
      }
      x_images_.push_back(std::move(xi));
      ext_images_.push_back(std::move(ei));
    }
    x_power_cache_.assign(static_cast<size_t>(n), {});
  }
}

const SuperPoly& LinearSubstitution::x_image_power(int j, unsigned e) const {
  auto& cache = x_power_cache_[static_cast<size_t>(j)];
  if (cache.empty())
    cache.push_back(SuperPoly::constant(n_, flavor_, Cyclotomic(1)));
  while (cache.size() <= e)
    cache.push_back(cache.back() * x_images_[static_cast<size_t>(j)]);
  return cache[e];
}

SuperPoly LinearSubstitution::apply_monomial_fast(const SuperPoly& f) const {
  SuperPoly out(n_, flavor_, f.conductor() != 1 ? f.conductor() : conductor_);
  std::vector<int> ext_list;
  for (const auto& [m, c] : f.terms()) {
    Cyclotomic coeff = c;
    SuperMonomial img{std::vector<unsigned>(static_cast<size_t>(n_), 0u), 0u};
    bool dead = false;
    for (size_t j = 0; j < m.alpha.size() && !dead; ++j) {
      if (m.alpha[j] == 0) continue;
      if (x_target_[j] < 0) {
        dead = true;
        break;
      }
      img.alpha[static_cast<size_t>(x_target_[j])] += m.alpha[j];
      coeff *= x_scale_[j].pow(static_cast<long>(m.alpha[j]));
    }
    if (dead) continue;
    ext_list.clear();
    uint32_t rest = m.mask;
    while (rest) {
      int bit = __builtin_ctz(rest);
      rest &= rest - 1;
      if (ext_target_[static_cast<size_t>(bit)] < 0) {
        dead = true;
        break;
      }
      ext_list.push_back(ext_target_[static_cast<size_t>(bit)]);
      coeff *= ext_scale_[static_cast<size_t>(bit)];
    }
    if (dead) continue;
    // sort the image generators, tracking the sign of the permutation
    int sign = 0;
    bool repeat = false;
    for (size_t i = 0; i < ext_list.size() && !repeat; ++i)
      for (size_t k = i + 1; k < ext_list.size(); ++k) {
        if (ext_list[i] == ext_list[k]) {
          repeat = true;
          break;
        }
        if (ext_list[i] > ext_list[k]) ++sign;
      }
    if (repeat) continue;
    for (int t : ext_list) img.mask |= 1u << t;
    out.add_term(img, (sign & 1) ? -coeff : coeff);
  }
  return out;
}

SuperPoly LinearSubstitution::apply_general(const SuperPoly& f) const {
  SuperPoly out(n_, flavor_, f.conductor() != 1 ? f.conductor() : conductor_);
  for (const auto& [m, c] : f.terms()) {
    SuperPoly acc = SuperPoly::constant(n_, flavor_, c);
    for (size_t j = 0; j < m.alpha.size(); ++j)
      if (m.alpha[j] > 0)
        acc = acc * x_image_power(static_cast<int>(j), m.alpha[j]);
    uint32_t rest = m.mask;
    while (rest) {
      int bit = __builtin_ctz(rest);
      rest &= rest - 1;
      acc = acc * ext_images_[static_cast<size_t>(bit)];
    }
    out += acc;
  }
  return out;
}

SuperPoly LinearSubstitution::apply(const SuperPoly& f) const {
  if (f.vars() != n_)
    throw AlgebraError("substitution dimension mismatch");
  if (f.flavor() != flavor_)
    throw AlgebraError("substitution flavor mismatch");
  return monomial_fast_ ? apply_monomial_fast(f) : apply_general(f);
}

SuperPoly substitute_linear(const SuperPoly& f, const CycMatrix& mx,
                            const CycMatrix& mext) {
  return LinearSubstitution(f.vars(), f.flavor(), mx, mext).apply(f);
}

}  // namespace superalg
