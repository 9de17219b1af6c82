#include "superalg/isotypic.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "superalg/parallel.hpp"

namespace superalg {

namespace {

void enumerate_exponents(int n, int total, std::vector<unsigned>& current,
                         size_t pos, std::vector<std::vector<unsigned>>& out) {
  if (pos + 1 == static_cast<size_t>(n)) {
    current[pos] = static_cast<unsigned>(total);
    out.push_back(current);
    return;
  }
  for (int e = 0; e <= total; ++e) {
    current[pos] = static_cast<unsigned>(e);
    enumerate_exponents(n, total - e, current, pos + 1, out);
  }
}

std::vector<std::vector<unsigned>> exponent_vectors(int n, int total) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current(static_cast<size_t>(n), 0u);
  if (n == 0) {
    if (total == 0) out.push_back(current);
    return out;
  }
  enumerate_exponents(n, total, current, 0, out);
  return out;
}

// Weighted compositions: alpha with sum alpha_i * w_i = total.
void enumerate_weighted(const std::vector<int>& w, int total,
                        std::vector<unsigned>& current, size_t pos,
                        std::vector<std::vector<unsigned>>& out) {
  if (pos == w.size()) {
    if (total == 0) out.push_back(current);
    return;
  }
  for (int e = 0; e * w[pos] <= total; ++e) {
    current[pos] = static_cast<unsigned>(e);
    enumerate_weighted(w, total - e * w[pos], current, pos + 1, out);
  }
}

}  // namespace

int BidegreeSlice::index_of(const SuperMonomial& m) const {
  auto it = std::lower_bound(
      monomials.begin(), monomials.end(), m,
      [](const SuperMonomial& a, const SuperMonomial& b) {
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        return a.mask < b.mask;
      });
  if (it == monomials.end() || !(*it == m)) return -1;
  return static_cast<int>(it - monomials.begin());
}

BidegreeSlice enumerate_slice(int n, Bidegree b, Flavor flavor) {
  BidegreeSlice slice;
  slice.n = n;
  slice.flavor = flavor;
  slice.bidegree = b;
  if (b.qdeg < 0 || b.tdeg < 0 || b.tdeg > n) return slice;
  std::vector<uint32_t> masks;
  for (uint32_t mask = 0; mask < (1u << n); ++mask)
    if (__builtin_popcount(mask) == b.tdeg) masks.push_back(mask);
  for (const auto& alpha : exponent_vectors(n, b.qdeg))
    for (uint32_t mask : masks) slice.monomials.push_back({alpha, mask});
  std::sort(slice.monomials.begin(), slice.monomials.end());
  return slice;
}

CycVector slice_coordinates(const BidegreeSlice& slice, const SuperPoly& f) {
  CycVector v(static_cast<Eigen::Index>(slice.dimension()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Cyclotomic(0);
  for (const auto& [m, c] : f.terms()) {
    int idx = slice.index_of(m);
    if (idx < 0)
      throw AlgebraError("polynomial has a term outside the slice");
    v(idx) = c;
  }
  return v;
}

SuperPoly slice_element(const BidegreeSlice& slice, const CycVector& coords,
                        unsigned conductor) {
  SuperPoly f(slice.n, slice.flavor, conductor);
  for (Eigen::Index i = 0; i < coords.size(); ++i)
    f.add_term(slice.monomials[static_cast<size_t>(i)], coords(i));
  return f;
}

CycMatrix projector_matrix(const ReflectionGroup& g, Character chi,
                           const BidegreeSlice& slice) {
  const Eigen::Index dim = static_cast<Eigen::Index>(slice.dimension());
  auto zero = [&] {
    CycMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = Cyclotomic(0);
    return m;
  };
  std::vector<CycMatrix> partial(worker_count(), zero());
  size_t chunks = 0;
  parallel_chunks(
      g.order(),
      [&](size_t begin, size_t end, size_t chunk) {
        CycMatrix& local = partial[chunk];
        for (size_t idx = begin; idx < end; ++idx) {
          Cyclotomic weight = g.character_value_inv(idx, chi);
          for (Eigen::Index col = 0; col < dim; ++col) {
            SuperPoly image = g.act(
                idx,
                SuperPoly::monomial(
                    slice.n, slice.flavor,
                    slice.monomials[static_cast<size_t>(col)],
                    Cyclotomic::from_rational(1, g.conductor())));
            for (const auto& [m, c] : image.terms()) {
              int row = slice.index_of(m);
              if (row < 0)
                throw AlgebraError("group action left the bidegree slice");
              local(row, col) += weight * c;
            }
          }
        }
      },
      &chunks);
  CycMatrix p = zero();
  for (size_t c = 0; c < chunks; ++c) p += partial[c];
  Cyclotomic scale = Cyclotomic(Rational(1, static_cast<long>(g.order())));
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) p(i, j) *= scale;
  return p;
}

int projector_multiplicity(const ReflectionGroup& g, Character chi,
                           Bidegree b, Flavor flavor) {
  BidegreeSlice slice = enumerate_slice(g.vars(), b, flavor);
  if (slice.dimension() == 0) return 0;
  return rank_of(projector_matrix(g, chi, slice));
}

SubspaceBasis ideal_slice(const ReflectionGroup& g, Bidegree b,
                          Flavor flavor) {
  if (flavor != Flavor::Theta)
    throw AlgebraError("the coinvariant ideal lives in the theta flavor");
  BidegreeSlice slice = enumerate_slice(g.vars(), b, flavor);
  std::vector<CycVector> rows;
  auto push_products = [&](const SuperPoly& gen) {
    if (gen.is_zero()) return;
    Bidegree gb = gen.terms().begin()->first.bidegree();
    Bidegree mb{b.qdeg - gb.qdeg, b.tdeg - gb.tdeg};
    if (mb.qdeg < 0 || mb.tdeg < 0) return;
    BidegreeSlice multipliers = enumerate_slice(g.vars(), mb, flavor);
    for (const SuperMonomial& m : multipliers.monomials) {
      SuperPoly prod =
          SuperPoly::monomial(g.vars(), flavor, m,
                              Cyclotomic::from_rational(1, g.conductor())) *
          gen;
      if (prod.is_zero()) continue;
      rows.push_back(slice_coordinates(slice, prod));
    }
  };
  for (const SuperPoly& f : g.invariants()) {
    push_products(f);
    push_products(exterior_derivative(f));
  }
  CycMatrix mat(static_cast<Eigen::Index>(rows.size()),
                static_cast<Eigen::Index>(slice.dimension()));
  for (Eigen::Index r = 0; r < mat.rows(); ++r)
    for (Eigen::Index c = 0; c < mat.cols(); ++c)
      mat(r, c) = rows[static_cast<size_t>(r)](c);
  Echelon ech = fraction_free_echelon(mat);
  SubspaceBasis basis;
  basis.slice = std::move(slice);
  basis.rows = std::move(ech.rows);
  basis.rank = ech.rank;
  basis.pivot_cols = std::move(ech.pivot_cols);
  return basis;
}

int quotient_multiplicity(const ReflectionGroup& g, Character chi,
                          Bidegree b) {
  BidegreeSlice slice = enumerate_slice(g.vars(), b, Flavor::Theta);
  if (slice.dimension() == 0) return 0;
  CycMatrix p = projector_matrix(g, chi, slice);
  int ring_mult = rank_of(p);
  SubspaceBasis ideal = ideal_slice(g, b, Flavor::Theta);
  if (ideal.rank == 0) return ring_mult;
  CycMatrix restricted = ideal.rows * p.transpose();
  return ring_mult - rank_of(restricted);
}

BiSeries quotient_series(const ReflectionGroup& g, Character chi, int qmax,
                         int tmax) {
  BiSeries out(qmax, tmax);
  for (int i = 0; i <= qmax; ++i)
    for (int j = 0; j <= tmax; ++j)
      out.set(i, j,
              Rational(quotient_multiplicity(g, chi, Bidegree{i, j})));
  return out;
}

std::vector<SuperPoly> alt_upstairs_vectors(const ReflectionGroup& g,
                                            Bidegree b) {
  const int n = g.vars();
  SuperPoly delta = vandermonde(g);
  const int deg_delta = delta.terms().begin()->first.xdeg();
  std::vector<SuperPoly> dfs;
  for (const SuperPoly& f : g.invariants())
    dfs.push_back(exterior_derivative(f));

  std::vector<SuperPoly> out;
  if (b.tdeg < 0 || b.tdeg > n || b.qdeg < 0) return out;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != b.tdeg) continue;
    int shift = 0;
    for (int k = 0; k < n; ++k)
      if (mask & (1u << k)) shift += g.degrees()[static_cast<size_t>(k)] - 1;
    int target = b.qdeg - deg_delta + shift;
    if (target < 0) continue;
    std::vector<std::vector<unsigned>> alphas;
    std::vector<unsigned> current(static_cast<size_t>(n), 0u);
    enumerate_weighted(g.degrees(), target, current, 0, alphas);
    for (const auto& alpha : alphas) {
      SuperPoly df_product = SuperPoly::constant(
          n, Flavor::Theta, Cyclotomic::from_rational(1, g.conductor()));
      for (int k = 0; k < n; ++k)
        if (mask & (1u << k)) df_product *= dfs[static_cast<size_t>(k)];
      SuperPoly fa = delta;
      for (int k = 0; k < n; ++k)
        fa *= g.invariants()[static_cast<size_t>(k)].pow(
            alpha[static_cast<size_t>(k)]);
      out.push_back(odot(df_product, reinterpret_flavor(fa, Flavor::Psi)));
    }
  }
  return out;
}

std::vector<SuperPoly> harmonics_det_basis(const ReflectionGroup& g) {
  const int n = g.vars();
  if (!g.real_orthogonal())
    throw HypothesisError("group is not real orthogonal: " + g.label());
  for (int d : g.degrees())
    if (d < 2)
      throw HypothesisError("degree " + std::to_string(d) +
                            " < 2 (group has fixed vectors): " + g.label());
  SuperPoly sum_squares(n, Flavor::Theta, 1);
  for (int i = 1; i <= n; ++i) {
    SuperPoly x = SuperPoly::variable(n, Flavor::Theta, i);
    sum_squares += x * x;
  }
  if (g.invariants()[0] != sum_squares)
    throw HypothesisError("f_1 is not x_1^2 + ... + x_n^2: " + g.label());

  SuperPoly delta = vandermonde(g);
  std::vector<SuperPoly> dfs;
  for (const SuperPoly& f : g.invariants())
    dfs.push_back(exterior_derivative(f));
  std::vector<SuperPoly> out;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    SuperPoly df_product = SuperPoly::constant(
        n, Flavor::Theta, Cyclotomic::from_rational(1, g.conductor()));
    for (int k = 0; k < n; ++k)
      if (mask & (1u << k)) df_product *= dfs[static_cast<size_t>(k)];
    SuperPoly h = odot(df_product, reinterpret_flavor(delta, Flavor::Psi));
    out.push_back(reinterpret_flavor(h, Flavor::Theta));
  }
  return out;
}

bool is_harmonic(const ReflectionGroup& g, const SuperPoly& f) {
  for (const SuperPoly& inv : g.invariants()) {
    if (!dot(inv, f).is_zero()) return false;
    if (!dot(exterior_derivative(inv), f).is_zero()) return false;
  }
  return true;
}

int rank_of_polys(const std::vector<SuperPoly>& polys) {
  // Group by bidegree; distinct bidegrees contribute independent blocks.
  std::map<Bidegree, std::vector<const SuperPoly*>> blocks;
  for (const SuperPoly& f : polys) {
    if (f.is_zero()) continue;
    if (!f.bihomogeneous())
      throw AlgebraError("rank_of_polys expects bihomogeneous inputs");
    blocks[f.terms().begin()->first.bidegree()].push_back(&f);
  }
  int rank = 0;
  for (const auto& [b, fam] : blocks) {
    const SuperPoly& first = *fam.front();
    BidegreeSlice slice = enumerate_slice(first.vars(), b, first.flavor());
    CycMatrix mat(static_cast<Eigen::Index>(fam.size()),
                  static_cast<Eigen::Index>(slice.dimension()));
    for (size_t r = 0; r < fam.size(); ++r) {
      CycVector v = slice_coordinates(slice, *fam[r]);
      for (Eigen::Index c = 0; c < v.size(); ++c)
        mat(static_cast<Eigen::Index>(r), c) = v(c);
    }
    rank += rank_of(mat);
  }
  return rank;
}

SuperPoly schur_alternant(const std::vector<int>& lambda, int n) {
  if (static_cast<int>(lambda.size()) > n)
    throw AlgebraError("partition has more parts than variables");
  for (size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i] < lambda[i + 1])
      throw AlgebraError("partition parts must be weakly decreasing");
  std::vector<unsigned> exponents(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    int part = (j < static_cast<int>(lambda.size())) ? lambda[static_cast<size_t>(j)] : 0;
    if (part < 0) throw AlgebraError("partition parts must be nonnegative");
    exponents[static_cast<size_t>(j)] =
        static_cast<unsigned>(part + n - 1 - j);
  }
  SuperPoly out(n, Flavor::Theta, 1);
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (size_t i = 0; i < perm.size(); ++i)
      for (size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    SuperMonomial m{std::vector<unsigned>(static_cast<size_t>(n), 0u), 0u};
    for (int j = 0; j < n; ++j)
      m.alpha[static_cast<size_t>(perm[static_cast<size_t>(j)])] =
          exponents[static_cast<size_t>(j)];
    out.add_term(m, Cyclotomic((inversions & 1) ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace superalg
