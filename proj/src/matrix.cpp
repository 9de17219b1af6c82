#include "superalg/matrix.hpp"

namespace superalg {

CycMatrix identity_matrix(Eigen::Index n, unsigned conductor) {
  CycMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = Cyclotomic::from_rational(Rational(i == j ? 1 : 0), conductor);
  return m;
}

CycMatrix normalize_conductor(const CycMatrix& a, unsigned conductor) {
  CycMatrix out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out(i, j) = a(i, j).lifted(conductor);
  return out;
}

CycMatrix conj_entrywise(const CycMatrix& a) {
  CycMatrix out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).conjugate();
  return out;
}

bool matrices_equal(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool matrix_repr_less(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      int c = Cyclotomic::repr_compare(a(i, j), b(i, j));
      if (c != 0) return c < 0;
    }
  return false;
}

bool is_unitary(const CycMatrix& a) {
  if (a.rows() != a.cols()) return false;
  CycMatrix prod = conj_entrywise(a).transpose() * a;
  return matrices_equal(prod, identity_matrix(a.rows()));
}

bool is_real_matrix(const CycMatrix& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j).conjugate() != a(i, j)) return false;
  return true;
}

Cyclotomic determinant(const CycMatrix& a) {
  if (a.rows() != a.cols()) throw AlgebraError("determinant of non-square");
  Eigen::Index n = a.rows();
  if (n == 0) return Cyclotomic(1);
  // Plain Gaussian elimination over the field, first nonzero pivot.
  CycMatrix m = a;
  Cyclotomic det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Cyclotomic(0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    Cyclotomic inv_pivot = m(col, col).inverse();
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      Cyclotomic factor = m(r, col) * inv_pivot;
      for (Eigen::Index c = col; c < n; ++c)
        m(r, c) = m(r, c) - factor * m(col, c);
    }
  }
  return det;
}

CycMatrix inverse_matrix(const CycMatrix& a) {
  if (a.rows() != a.cols()) throw AlgebraError("inverse of non-square");
  Eigen::Index n = a.rows();
  CycMatrix m = a;
  CycMatrix inv = identity_matrix(n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw AlgebraError("matrix is singular");
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    Cyclotomic inv_pivot = m(col, col).inverse();
    for (Eigen::Index c = 0; c < n; ++c) {
      m(col, c) *= inv_pivot;
      inv(col, c) *= inv_pivot;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      Cyclotomic factor = m(r, col);
      for (Eigen::Index c = 0; c < n; ++c) {
        m(r, c) = m(r, c) - factor * m(col, c);
        inv(r, c) = inv(r, c) - factor * inv(col, c);
      }
    }
  }
  return inv;
}

std::vector<Cyclotomic> eigenvalue_elementary_symmetric(const CycMatrix& a) {
  if (a.rows() != a.cols())
    throw AlgebraError("elementary symmetric of non-square");
  const int n = static_cast<int>(a.rows());
  std::vector<Cyclotomic> power_traces(static_cast<size_t>(n) + 1);
  CycMatrix pw = identity_matrix(a.rows());
  for (int k = 1; k <= n; ++k) {
    pw = (pw * a).eval();
    Cyclotomic tr(0);
    for (Eigen::Index i = 0; i < a.rows(); ++i) tr += pw(i, i);
    power_traces[static_cast<size_t>(k)] = tr;
  }
  std::vector<Cyclotomic> e(static_cast<size_t>(n) + 1);
  e[0] = Cyclotomic(1);
  for (int k = 1; k <= n; ++k) {
    Cyclotomic acc(0);
    for (int i = 1; i <= k; ++i) {
      Cyclotomic term = e[static_cast<size_t>(k - i)] *
                        power_traces[static_cast<size_t>(i)];
      acc += (i % 2 == 1) ? term : -term;
    }
    e[static_cast<size_t>(k)] = acc * Cyclotomic(Rational(1, k));
  }
  return e;
}

Echelon fraction_free_echelon(const CycMatrix& a) {
  Echelon result;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  if (rows == 0 || cols == 0) {
    result.rows = CycMatrix(0, cols);
    return result;
  }
  CycMatrix m = a;
  // Clear denominators per row so every Bareiss division is exact.
  for (Eigen::Index i = 0; i < rows; ++i) {
    mpz_class l(1);
    for (Eigen::Index j = 0; j < cols; ++j)
      for (const Rational& c : m(i, j).coeffs())
        l = lcm(l, c.get_den());
    if (l != 1) {
      Cyclotomic scale((Rational(l)));
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) *= scale;
    }
  }
  Cyclotomic prev_pivot(1);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < rows; ++r)
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Cyclotomic p = m(row, col);
    const Cyclotomic inv_prev = prev_pivot.inverse();
    for (Eigen::Index r = row + 1; r < rows; ++r) {
      const Cyclotomic head = m(r, col);
      if (head.is_zero()) {
        for (Eigen::Index c = col; c < cols; ++c)
          if (!m(r, c).is_zero()) m(r, c) = m(r, c) * p * inv_prev;
        continue;
      }
      for (Eigen::Index c = col; c < cols; ++c)
        m(r, c) = (m(r, c) * p - head * m(row, c)) * inv_prev;
    }
    prev_pivot = p;
    result.pivot_cols.push_back(static_cast<int>(col));
    ++row;
  }
  result.rank = static_cast<int>(row);
  result.rows = m.topRows(row);
  return result;
}

int rank_of(const CycMatrix& a) { return fraction_free_echelon(a).rank; }

}  // namespace superalg
