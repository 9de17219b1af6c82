#include "superalg/molien.hpp"

#include "superalg/parallel.hpp"

namespace superalg {

namespace {

// Reciprocal of a power series with constant term 1, to order qmax.
std::vector<Cyclotomic> series_reciprocal(const std::vector<Cyclotomic>& d,
                                          int qmax) {
  if (d.empty() || !d[0].is_one())
    throw AlgebraError("series reciprocal needs constant term 1");
  std::vector<Cyclotomic> r(static_cast<size_t>(qmax) + 1, Cyclotomic(0));
  r[0] = Cyclotomic(1);
  for (int k = 1; k <= qmax; ++k) {
    Cyclotomic acc(0);
    for (int j = 1; j <= k && j < static_cast<int>(d.size()); ++j)
      acc += d[static_cast<size_t>(j)] * r[static_cast<size_t>(k - j)];
    r[static_cast<size_t>(k)] = -acc;
  }
  return r;
}

Cyclotomic trace_of(const CycMatrix& m) {
  Cyclotomic tr(0);
  for (Eigen::Index i = 0; i < m.rows(); ++i) tr += m(i, i);
  return tr;
}

}  // namespace

const char* sym_space_name(SymSpace s) {
  return s == SymSpace::V ? "V" : "Vdual";
}
const char* ext_space_name(ExtSpace s) {
  return s == ExtSpace::V ? "V" : "Vdual";
}

std::vector<Cyclotomic> char_poly_q(const CycMatrix& sigma) {
  auto e = eigenvalue_elementary_symmetric(sigma);
  for (size_t k = 1; k < e.size(); k += 2) e[k] = -e[k];
  return e;
}

BiSeries molien_series(const ReflectionGroup& g, Character chi, SymSpace sym,
                       ExtSpace ext, int qmax, int tmax) {
  const int n = g.vars();
  using Table = std::vector<std::vector<Cyclotomic>>;
  auto zero_table = [&] {
    return Table(static_cast<size_t>(qmax) + 1,
                 std::vector<Cyclotomic>(static_cast<size_t>(tmax) + 1,
                                         Cyclotomic(0)));
  };
  std::vector<Table> partial(worker_count(), zero_table());
  size_t chunks = 0;
  parallel_chunks(
      g.order(),
      [&](size_t begin, size_t end, size_t chunk) {
        Table& local = partial[chunk];
        for (size_t idx = begin; idx < end; ++idx) {
          auto e_fw = eigenvalue_elementary_symmetric(g.element(idx));
          auto e_inv = eigenvalue_elementary_symmetric(g.element_inverse(idx));
          // k[V] = Sym(V*) pairs with sigma^{-1}, k[V*] with sigma itself.
          const auto& e_sym = (sym == SymSpace::V) ? e_inv : e_fw;
          const auto& e_ext = (ext == ExtSpace::Vdual) ? e_inv : e_fw;
          std::vector<Cyclotomic> denom(e_sym.size());
          for (size_t k = 0; k < e_sym.size(); ++k)
            denom[k] = (k % 2 == 1) ? -e_sym[k] : e_sym[k];
          std::vector<Cyclotomic> inv_denom = series_reciprocal(denom, qmax);
          Cyclotomic weight = g.character_value_inv(idx, chi);
          for (int j = 0; j <= tmax && j <= n; ++j) {
            Cyclotomic wj = weight * e_ext[static_cast<size_t>(j)];
            if (wj.is_zero()) continue;
            for (int i = 0; i <= qmax; ++i) {
              const Cyclotomic& di = inv_denom[static_cast<size_t>(i)];
              if (di.is_zero()) continue;
              local[static_cast<size_t>(i)][static_cast<size_t>(j)] += wj * di;
            }
          }
        }
      },
      &chunks);
  Table acc = zero_table();
  for (size_t c = 0; c < chunks; ++c)
    for (int i = 0; i <= qmax; ++i)
      for (int j = 0; j <= tmax; ++j)
        acc[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
            partial[c][static_cast<size_t>(i)][static_cast<size_t>(j)];
  BiSeries out(qmax, tmax);
  Rational order(static_cast<long>(g.order()));
  for (int i = 0; i <= qmax; ++i)
    for (int j = 0; j <= tmax; ++j) {
      const Cyclotomic& c = acc[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (!c.is_rational())
        throw AlgebraError("molien sum is not rational at q^" +
                           std::to_string(i) + " t^" + std::to_string(j) +
                           ": " + c.to_string());
      out.set(i, j, c.as_rational() / order);
    }
  return out;
}

ExponentData coexponents(const ReflectionGroup& g, int qmax) {
  // Graded multiplicity of the trivial character in k[V] (x) V.
  std::vector<Cyclotomic> acc(static_cast<size_t>(qmax) + 1, Cyclotomic(0));
  for (size_t idx = 0; idx < g.order(); ++idx) {
    auto e_inv = eigenvalue_elementary_symmetric(g.element_inverse(idx));
    std::vector<Cyclotomic> denom(e_inv.size());
    for (size_t k = 0; k < e_inv.size(); ++k)
      denom[k] = (k % 2 == 1) ? -e_inv[k] : e_inv[k];
    std::vector<Cyclotomic> inv_denom = series_reciprocal(denom, qmax);
    Cyclotomic tr = trace_of(g.element(idx));
    if (tr.is_zero()) continue;
    for (int i = 0; i <= qmax; ++i)
      acc[static_cast<size_t>(i)] += tr * inv_denom[static_cast<size_t>(i)];
  }
  std::vector<Rational> series(static_cast<size_t>(qmax) + 1);
  Rational order(static_cast<long>(g.order()));
  for (int i = 0; i <= qmax; ++i) {
    if (!acc[static_cast<size_t>(i)].is_rational())
      throw AlgebraError("coexponent series is not rational");
    series[static_cast<size_t>(i)] =
        acc[static_cast<size_t>(i)].as_rational() / order;
  }
  // Multiply by prod (1 - q^d): the result must be n unit monomials.
  for (int d : g.degrees())
    for (int i = qmax; i >= d; --i)
      series[static_cast<size_t>(i)] -= series[static_cast<size_t>(i - d)];
  ExponentData out;
  out.degrees = g.degrees();
  for (int d : out.degrees) out.exponents.push_back(d - 1);
  for (int i = 0; i <= qmax; ++i) {
    const Rational& c = series[static_cast<size_t>(i)];
    if (c == 0) continue;
    if (c != 1)
      throw AlgebraError("coexponent polynomial has a non-unit coefficient");
    out.coexponents.push_back(i);
  }
  if (static_cast<int>(out.coexponents.size()) != g.vars())
    throw AlgebraError(
        "coexponent polynomial does not have exactly n terms (qmax too "
        "small?)");
  int sum_e = 0, sum_star = 0;
  for (int e : out.exponents) sum_e += e;
  for (int e : out.coexponents) sum_star += e;
  out.delta = sum_e - sum_star;
  return out;
}

namespace {

ProductFormula product_over(const ExponentData& e, const std::vector<int>& a,
                            bool q_power_plus_t, int qshift,
                            bool with_denominators) {
  ProductFormula f;
  f.qshift = qshift;
  for (size_t i = 0; i < a.size(); ++i) {
    f.factors.push_back({a[i], q_power_plus_t});
    if (with_denominators) f.denom_degrees.push_back(e.degrees[i]);
  }
  return f;
}

}  // namespace

std::optional<ProductFormula> table_cell_formula(SymSpace sym, ExtSpace ext,
                                                 Character chi,
                                                 const ExponentData& e) {
  const bool symV = (sym == SymSpace::V);
  const bool extV = (ext == ExtSpace::V);
  switch (chi) {
    case Character::Trivial:
      // invariants: exponents for the "mixed" pairings, coexponents else
      if (symV == extV)
        return product_over(e, e.coexponents, false, 0, true);
      return product_over(e, e.exponents, false, 0, true);
    case Character::Det:
      if (symV && extV) return product_over(e, e.exponents, true, 0, true);
      if (symV && !extV)
        return product_over(e, e.coexponents, true, e.delta, true);
      if (!symV && extV) return product_over(e, e.coexponents, true, 0, true);
      return std::nullopt;  // k[V*] (x) Lambda(V*), det: no known product
    case Character::DetInv:
      if (symV && extV) return std::nullopt;  // no known product
      if (symV && !extV) return product_over(e, e.coexponents, true, 0, true);
      if (!symV && extV)
        return product_over(e, e.coexponents, true, e.delta, true);
      return product_over(e, e.exponents, true, 0, true);
  }
  return std::nullopt;
}

ProductFormula solomon_formula(const ExponentData& e) {
  return product_over(e, e.exponents, false, 0, true);
}

ProductFormula alternant_formula(const ExponentData& e) {
  return product_over(e, e.exponents, true, 0, true);
}

ProductFormula coinvariant_det_formula(const ExponentData& e) {
  return product_over(e, e.exponents, true, 0, false);
}

ProductFormula wallach_formula(int n) {
  ProductFormula f;
  for (int i = 1; i < n; ++i) f.factors.push_back({i, true});
  return f;
}

}  // namespace superalg
