#include "looijenga/intmat.hpp"

#include <algorithm>
#include <limits>

namespace looijenga {

Int det(const IntMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: square matrix required");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMat m = a;
  Int prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

IntMat unimodular_inverse(const IntMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: square matrix required");
  const std::size_t n = a.rows();
  Int d = det(a);
  if (d != 1 && d != -1) throw std::invalid_argument("inverse: matrix is not unimodular");
  // Gauss-Jordan over Q; the result is integral because det = ±1.
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(a(i, j));
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw std::logic_error("inverse: singular");
    std::swap(m[c], m[p]);
    Rat piv = m[c][c];
    for (std::size_t j = 0; j < 2 * n; ++j) m[c][j] /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  IntMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (den(m[i][n + j]) != 1) throw std::logic_error("inverse: non-integral entry");
      inv(i, j) = num(m[i][n + j]);
    }
  return inv;
}

namespace {

void row_op(IntMat& m, IntMat& u, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
  for (std::size_t j = 0; j < u.cols(); ++j) u(dst, j) += f * u(src, j);
}

void col_op(IntMat& m, IntMat& v, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
  for (std::size_t i = 0; i < v.rows(); ++i) v(i, dst) += f * v(i, src);
}

void row_swap(IntMat& m, IntMat& u, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
  for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(a, j), u(b, j));
}

void col_swap(IntMat& m, IntMat& v, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
  for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v(i, a), v(i, b));
}

}  // namespace

SmithDecomposition smith(const IntMat& a) {
  const std::size_t r = a.rows(), c = a.cols();
  IntMat m = a;
  IntMat u = IntMat::identity(r), v = IntMat::identity(c);
  const std::size_t k = std::min(r, c);

  for (std::size_t t = 0; t < k; ++t) {
    // Deterministic pivot: minimal |entry| among the remaining block, ties by
    // (row, col).
    std::size_t pi = t, pj = t;
    Int best(0);
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j) {
        Int e = abs(m(i, j));
        if (e == 0) continue;
        if (best == 0 || e < best) {
          best = e;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    row_swap(m, u, t, pi);
    col_swap(m, v, t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (m(i, t) == 0) continue;
        Int q = floor_div(m(i, t), m(t, t));
        row_op(m, u, i, t, -q);
        if (m(i, t) != 0) {
          row_swap(m, u, t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (m(t, j) == 0) continue;
        Int q = floor_div(m(t, j), m(t, t));
        col_op(m, v, j, t, -q);
        if (m(t, j) != 0) {
          col_swap(m, v, t, j);
          clean = false;
        }
      }
    }
    if (m(t, t) < 0) {
      for (std::size_t j = 0; j < c; ++j) m(t, j) = -m(t, j);
      for (std::size_t j = 0; j < r; ++j) u(t, j) = -u(t, j);
    }
  }

  // Enforce the divisibility chain: replace each offending diagonal pair
  // (d_t, d_s) by (gcd, lcm) with an explicit unimodular 2x2 transform.
  for (std::size_t t = 0; t + 1 < k; ++t) {
    for (std::size_t s = t + 1; s < k; ++s) {
      Int dt = m(t, t), ds = m(s, s);
      if (ds == 0) continue;
      if (dt == 0) {
        row_swap(m, u, t, s);
        col_swap(m, v, t, s);
        continue;
      }
      if (ds % dt == 0) continue;
      Int g, x, y;
      g = boost::multiprecision::gcd(dt, ds);
      // Extended gcd: x*dt + y*ds = g.
      {
        Int a = dt, b = ds, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
        while (b != 0) {
          Int q = a / b;
          Int tmp = a - q * b;
          a = b;
          b = tmp;
          tmp = x0 - q * x1;
          x0 = x1;
          x1 = tmp;
          tmp = y0 - q * y1;
          y0 = y1;
          y1 = tmp;
        }
        x = x0;
        y = y0;
        if (a < 0) {
          x = -x;
          y = -y;
        }
      }
      Int l = dt / g * ds;
      // Rows: (row_t, row_s) <- (x row_t + y row_s, -(ds/g) row_t + (dt/g) row_s).
      for (std::size_t j = 0; j < c; ++j) {
        Int a = m(t, j), b = m(s, j);
        m(t, j) = x * a + y * b;
        m(s, j) = -(ds / g) * a + (dt / g) * b;
      }
      for (std::size_t j = 0; j < r; ++j) {
        Int a = u(t, j), b = u(s, j);
        u(t, j) = x * a + y * b;
        u(s, j) = -(ds / g) * a + (dt / g) * b;
      }
      // Columns: (col_t, col_s) <- (col_t + col_s, -(y ds/g) col_t + (x dt/g) col_s).
      for (std::size_t i = 0; i < r; ++i) {
        Int a = m(i, t), b = m(i, s);
        m(i, t) = a + b;
        m(i, s) = -(y * (ds / g)) * a + (x * (dt / g)) * b;
      }
      for (std::size_t i = 0; i < c; ++i) {
        Int a = v(i, t), b = v(i, s);
        v(i, t) = a + b;
        v(i, s) = -(y * (ds / g)) * a + (x * (dt / g)) * b;
      }
      if (m(t, t) != g || m(s, s) != l || m(t, s) != 0 || m(s, t) != 0)
        throw std::logic_error("smith: pair reduction failed");
    }
  }

  SmithDecomposition sd;
  sd.u = u;
  sd.v = v;
  sd.diag.resize(k);
  for (std::size_t t = 0; t < k; ++t) sd.diag[t] = m(t, t);
  return sd;
}

HermiteResult hermite(const IntMat& a) {
  const std::size_t r = a.rows(), c = a.cols();
  IntMat h = a;
  IntMat u = IntMat::identity(r);
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    // Reduce below-diagonal entries of this column to a single nonzero.
    while (true) {
      std::size_t p = row;
      Int best(0);
      for (std::size_t i = row; i < r; ++i) {
        Int e = abs(h(i, col));
        if (e == 0) continue;
        if (best == 0 || e < best) {
          best = e;
          p = i;
        }
      }
      if (best == 0) break;
      row_swap(h, u, row, p);
      bool done = true;
      for (std::size_t i = row + 1; i < r; ++i) {
        if (h(i, col) == 0) continue;
        Int q = floor_div(h(i, col), h(row, col));
        row_op(h, u, i, row, -q);
        if (h(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      for (std::size_t j = 0; j < c; ++j) h(row, j) = -h(row, j);
      for (std::size_t j = 0; j < r; ++j) u(row, j) = -u(row, j);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Int q = floor_div(h(i, col), h(row, col));
      if (q != 0) row_op(h, u, i, row, -q);
    }
    ++row;
  }
  HermiteResult res;
  res.h = h;
  res.u = u;
  res.rank = row;
  return res;
}

IntMat kernel_saturated(const IntMat& a) {
  SmithDecomposition sd = smith(a);
  const std::size_t c = a.cols();
  std::size_t rank = 0;
  for (const Int& d : sd.diag)
    if (d != 0) ++rank;
  IntMat k(c, c - rank);
  for (std::size_t j = rank; j < c; ++j)
    for (std::size_t i = 0; i < c; ++i) k(i, j - rank) = sd.v(i, j);
  return k;
}

std::size_t rank_rat(const IntMat& a) {
  return hermite(a).rank;
}

Signature signature(const IntMat& gram) {
  if (!gram.is_symmetric()) throw std::invalid_argument("signature: symmetric matrix required");
  const std::size_t n = gram.rows();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(gram(i, j));

  Signature sig;
  std::vector<bool> used(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    // Pick a nonzero diagonal pivot if one exists.
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!used[i] && m[i][i] != 0) {
        p = i;
        break;
      }
    if (p == n) {
      // All remaining diagonal entries vanish. If some off-diagonal entry
      // m[i][j] != 0, the basis change e_i += e_j makes m[i][i] = 2 m[i][j].
      std::size_t bi = n, bj = n;
      for (std::size_t i = 0; i < n && bi == n; ++i) {
        if (used[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (used[j] || j == i) continue;
          if (m[i][j] != 0) {
            bi = i;
            bj = j;
            break;
          }
        }
      }
      if (bi == n) {
        for (std::size_t i = 0; i < n; ++i)
          if (!used[i]) ++sig.zero;
        return sig;
      }
      for (std::size_t j = 0; j < n; ++j)
        if (!used[j]) m[bi][j] += m[bj][j];
      for (std::size_t i = 0; i < n; ++i)
        if (!used[i]) m[i][bi] += m[i][bj];
      p = bi;
    }
    Rat piv = m[p][p];
    if (piv > 0)
      ++sig.positive;
    else
      ++sig.negative;
    used[p] = true;
    std::vector<Rat> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = m[i][p];
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i] || col[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!used[j]) m[i][j] -= col[i] * col[j] / piv;
    }
  }
  return sig;
}

}  // namespace looijenga
