#include "superalg/actions.hpp"

#include <algorithm>

namespace superalg {

namespace {

int parity_below(uint32_t mask, int bit) {
  return __builtin_popcount(mask & ((1u << bit) - 1u)) & 1;
}

// Falling factorial prod_i a_i (a_i - 1) ... (a_i - b_i + 1), or zero
// denominator signalled by returning false when b > a somewhere.
bool x_derivative_factor(const std::vector<unsigned>& b,
                         const std::vector<unsigned>& a, Rational& out) {
  out = 1;
  for (size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) return false;
    for (unsigned k = 0; k < b[i]; ++k) out *= static_cast<long>(a[i] - k);
  }
  return true;
}

// Bits of I from highest to lowest: the operator chain for theta_I in
// increasing index order applies its rightmost (largest-index) factor
// first.
std::vector<int> bits_descending(uint32_t mask) {
  std::vector<int> bits;
  uint32_t rest = mask;
  while (rest) {
    int bit = __builtin_ctz(rest);
    rest &= rest - 1;
    bits.push_back(bit);
  }
  std::reverse(bits.begin(), bits.end());
  return bits;
}

}  // namespace

SuperPoly dot(const SuperPoly& f, const SuperPoly& g) {
  if (f.vars() != g.vars()) throw AlgebraError("dot: variable count mismatch");
  if (f.flavor() != Flavor::Theta || g.flavor() != Flavor::Theta)
    throw AlgebraError("dot acts on the theta flavor");
  SuperPoly out(g.vars(), Flavor::Theta,
                f.conductor() != 1 ? f.conductor() : g.conductor());
  for (const auto& [mf, cf] : f.terms()) {
    const Cyclotomic cbar = cf.conjugate();
    const std::vector<int> chain = bits_descending(mf.mask);
    for (const auto& [mg, cg] : g.terms()) {
      Rational xfac;
      if (!x_derivative_factor(mf.alpha, mg.alpha, xfac)) continue;
      if ((mf.mask & mg.mask) != mf.mask) continue;  // some d_theta kills it
      uint32_t mask = mg.mask;
      int sign = 0;
      for (int bit : chain) {
        sign ^= parity_below(mask, bit);
        mask &= ~(1u << bit);
      }
      SuperMonomial m;
      m.alpha.resize(mg.alpha.size());
      for (size_t i = 0; i < m.alpha.size(); ++i)
        m.alpha[i] = mg.alpha[i] - mf.alpha[i];
      m.mask = mask;
      Cyclotomic c = cbar * cg * Cyclotomic(xfac);
      out.add_term(m, sign ? -c : c);
    }
  }
  return out;
}

SuperPoly odot(const SuperPoly& f, const SuperPoly& h) {
  if (f.vars() != h.vars()) throw AlgebraError("odot: variable count mismatch");
  if (f.flavor() != Flavor::Theta)
    throw AlgebraError("odot: left argument must carry the theta flavor");
  if (h.flavor() != Flavor::Psi)
    throw AlgebraError("odot: right argument must carry the psi flavor");
  SuperPoly out(h.vars(), Flavor::Psi,
                f.conductor() != 1 ? f.conductor() : h.conductor());
  for (const auto& [mf, cf] : f.terms()) {
    const Cyclotomic cbar = cf.conjugate();
    const std::vector<int> chain = bits_descending(mf.mask);
    for (const auto& [mh, ch] : h.terms()) {
      Rational xfac;
      if (!x_derivative_factor(mf.alpha, mh.alpha, xfac)) continue;
      if (mf.mask & mh.mask) continue;  // psi multiplication squares to zero
      uint32_t mask = mh.mask;
      int sign = 0;
      for (int bit : chain) {
        sign ^= parity_below(mask, bit);
        mask |= 1u << bit;
      }
      SuperMonomial m;
      m.alpha.resize(mh.alpha.size());
      for (size_t i = 0; i < m.alpha.size(); ++i)
        m.alpha[i] = mh.alpha[i] - mf.alpha[i];
      m.mask = mask;
      Cyclotomic c = cbar * ch * Cyclotomic(xfac);
      out.add_term(m, sign ? -c : c);
    }
  }
  return out;
}

Cyclotomic hermitian_form(const SuperPoly& f, const SuperPoly& g) {
  return dot(f, g).constant_coeff();
}

SuperPoly laplacian(const SuperPoly& f) {
  SuperPoly out(f.vars(), f.flavor(), f.conductor());
  for (const auto& [m, c] : f.terms()) {
    for (size_t i = 0; i < m.alpha.size(); ++i) {
      if (m.alpha[i] < 2) continue;
      SuperMonomial d = m;
      d.alpha[i] -= 2;
      long factor = static_cast<long>(m.alpha[i]) *
                    static_cast<long>(m.alpha[i] - 1);
      out.add_term(d, c * Cyclotomic(factor));
    }
  }
  return out;
}

}  // namespace superalg
