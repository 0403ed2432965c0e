#include "looijenga/lattice.hpp"

#include <algorithm>

namespace looijenga {

ClassVec vec_add(const ClassVec& a, const ClassVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
  ClassVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

ClassVec vec_sub(const ClassVec& a, const ClassVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
  ClassVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

ClassVec vec_scale(const Int& c, const ClassVec& a) {
  ClassVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

ClassVec vec_neg(const ClassVec& a) { return vec_scale(Int(-1), a); }

bool is_zero(const ClassVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

RatVec rat_add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec rat_scale(const Rat& c, const RatVec& a) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

ClassVec primitive_ray(const RatVec& v) {
  Int lcm(1);
  for (const Rat& x : v) lcm = lcm / boost::multiprecision::gcd(lcm, den(x)) * den(x);
  ClassVec w(v.size());
  Int g(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    w[i] = num(v[i]) * (lcm / den(v[i]));
    g = boost::multiprecision::gcd(g, w[i]);
  }
  if (g == 0) return w;
  for (Int& x : w) x /= g;
  return w;
}

IntLattice::IntLattice(IntMat g, std::vector<std::string> labels)
    : gram(std::move(g)), basis_labels(std::move(labels)) {
  if (!gram.is_symmetric()) throw std::invalid_argument("IntLattice: gram must be symmetric");
  if (basis_labels.empty()) {
    basis_labels.resize(gram.rows());
    for (std::size_t i = 0; i < gram.rows(); ++i) basis_labels[i] = "b" + std::to_string(i + 1);
  }
  if (basis_labels.size() != gram.rows())
    throw std::invalid_argument("IntLattice: label count mismatch");
}

ClassVec IntLattice::basis_vector(std::size_t i) const {
  ClassVec v(rank(), Int(0));
  v.at(i) = 1;
  return v;
}

Int inner(const IntLattice& l, const ClassVec& a, const ClassVec& b) {
  if (a.size() != l.rank() || b.size() != l.rank())
    throw std::invalid_argument("inner: dimension mismatch");
  Int acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc += a[i] * l.gram(i, j) * b[j];
  }
  return acc;
}

Rat inner_rat(const IntLattice& l, const RatVec& a, const RatVec& b) {
  if (a.size() != l.rank() || b.size() != l.rank())
    throw std::invalid_argument("inner: dimension mismatch");
  Rat acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc += a[i] * Rat(l.gram(i, j)) * b[j];
  }
  return acc;
}

Rat inner_rat(const IntLattice& l, const RatVec& a, const ClassVec& b) {
  return inner_rat(l, a, to_rat(b));
}

LatticeIsometry LatticeIsometry::identity(const IntLattice& l) {
  LatticeIsometry iso;
  iso.matrix = IntMat::identity(l.rank());
  iso.source = l;
  iso.target = l;
  return iso;
}

LatticeIsometry LatticeIsometry::make(IntMat m, IntLattice src, IntLattice tgt) {
  if (m.rows() != tgt.rank() || m.cols() != src.rank())
    throw std::invalid_argument("isometry: shape mismatch");
  Int d = det(m);
  if (d != 1 && d != -1) throw std::invalid_argument("isometry: matrix not unimodular");
  IntMat check = m.transposed() * tgt.gram * m;
  if (!(check == src.gram)) throw std::invalid_argument("isometry: form not preserved");
  LatticeIsometry iso;
  iso.matrix = std::move(m);
  iso.source = std::move(src);
  iso.target = std::move(tgt);
  return iso;
}

LatticeIsometry LatticeIsometry::inverse() const {
  return make(unimodular_inverse(matrix), target, source);
}

LatticeIsometry LatticeIsometry::compose(const LatticeIsometry& first) const {
  return make(matrix * first.matrix, first.source, target);
}

std::vector<ClassVec> orthogonal_complement(const IntLattice& l, const std::vector<ClassVec>& s) {
  const std::size_t n = l.rank();
  if (s.empty()) {
    std::vector<ClassVec> full;
    for (std::size_t i = 0; i < n; ++i) full.push_back(l.basis_vector(i));
    return full;
  }
  IntMat pairings(s.size(), n);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].size() != n) throw std::invalid_argument("orthogonal_complement: dimension mismatch");
    for (std::size_t j = 0; j < n; ++j) pairings(i, j) = inner(l, s[i], l.basis_vector(j));
  }
  IntMat k = kernel_saturated(pairings);
  // Canonical form: rows of the kernel basis in Hermite normal form.
  IntMat rows(k.cols(), n);
  for (std::size_t j = 0; j < k.cols(); ++j)
    for (std::size_t i = 0; i < n; ++i) rows(j, i) = k(i, j);
  HermiteResult h = hermite(rows);
  std::vector<ClassVec> basis;
  for (std::size_t i = 0; i < h.rank; ++i) {
    ClassVec v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = h.h(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// LDL^T data of a positive definite rational matrix.
struct Ldlt {
  std::vector<Rat> d;                 // pivots, > 0
  std::vector<std::vector<Rat>> l;    // unit lower triangular, row major
};

Ldlt ldlt_posdef(const std::vector<std::vector<Rat>>& m) {
  const std::size_t n = m.size();
  Ldlt f;
  f.d.assign(n, Rat(0));
  f.l.assign(n, std::vector<Rat>(n, Rat(0)));
  std::vector<std::vector<Rat>> a = m;
  for (std::size_t k = 0; k < n; ++k) {
    f.d[k] = a[k][k];
    if (f.d[k] <= 0) throw std::logic_error("expected positive definite form");
    f.l[k][k] = 1;
    for (std::size_t i = k + 1; i < n; ++i) f.l[i][k] = a[i][k] / f.d[k];
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j <= i; ++j) {
        a[i][j] -= f.l[i][k] * a[j][k];
        a[j][i] = a[i][j];
      }
  }
  return f;
}

// All integer x with (x - center)^T M (x - center) <= radius, M positive
// definite; recursion over coordinates from the last.
void ellipsoid_enum(const Ldlt& f, const std::vector<Rat>& center, const Rat& radius,
                    std::size_t level, std::vector<Rat>& shift, std::vector<Int>& current,
                    std::vector<std::vector<Int>>& out) {
  // Q(y) = sum_k d_k (y_k + sum_{j>k} l_jk y_j)^2 with y = x - center.
  if (radius < 0) return;
  if (level == 0) {
    out.push_back(current);
    return;
  }
  const std::size_t k = level - 1;
  // y_k + shift_k in [-sqrt(radius/d_k), sqrt(radius/d_k)], x_k = y_k + center_k.
  Rat q = radius / f.d[k];
  Rat mu = center[k] - shift[k];
  Int lo = ceil_center_minus_sqrt(mu, q);
  Int hi = floor_center_plus_sqrt(mu, q);
  for (Int xk = lo; xk <= hi; ++xk) {
    Rat yk = Rat(xk) - center[k];
    Rat term = yk + shift[k];
    Rat used = f.d[k] * term * term;
    if (used > radius) continue;
    current[k] = xk;
    std::vector<Rat> saved = shift;
    for (std::size_t j = 0; j < k; ++j) shift[j] += f.l[k][j] * yk;
    ellipsoid_enum(f, center, radius - used, k, shift, current, out);
    shift = saved;
  }
}

}  // namespace

namespace {

// Pairwise size reduction of the columns of k under the positive definite
// metric -gram (Lagrange-style, no swap condition): conditions the basis so
// the LDL^T pivots and the enumeration boxes stay small.
void reduce_columns_negdef(IntMat& k, IntMat& kg) {
  const std::size_t m = k.cols();
  bool changed = true;
  for (int pass = 0; changed && pass < 100; ++pass) {
    changed = false;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j) continue;
        // Nearest integer of (-kg(i,j)) / (-kg(j,j)).
        Int num = -kg(i, j), den = -kg(j, j);
        Int t = floor_div(2 * num + den, 2 * den);
        if (t == 0) continue;
        for (std::size_t r = 0; r < k.rows(); ++r) k(r, i) -= t * k(r, j);
        for (std::size_t r = 0; r < m; ++r) {
          kg(i, r) -= t * kg(j, r);
        }
        for (std::size_t r = 0; r < m; ++r) {
          kg(r, i) -= t * kg(r, j);
        }
        changed = true;
      }
  }
}

}  // namespace

SquareEnumerator::SquareEnumerator(IntLattice l, ClassVec h)
    : lattice_(std::move(l)), h_(std::move(h)) {
  const std::size_t n = lattice_.rank();
  if (h_.size() != n) throw std::invalid_argument("SquareEnumerator: dimension mismatch");
  if (inner(lattice_, h_, h_) <= 0)
    throw std::invalid_argument("SquareEnumerator: h must have positive square");

  ClassVec w(n);
  Int g(0);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = inner(lattice_, lattice_.basis_vector(i), h_);
    g = boost::multiprecision::gcd(g, w[i]);
  }
  pairing_gcd_ = g;

  // Particular solution with pairing g, by iterated extended gcd.
  ClassVec u(n, Int(0));
  Int acc(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i] == 0) continue;
    if (acc == 0) {
      u.assign(n, Int(0));
      u[i] = 1;
      acc = w[i];
      continue;
    }
    Int a = acc, b = w[i], x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (b != 0) {
      Int q = a / b;
      Int t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
      t = y0 - q * y1;
      y0 = y1;
      y1 = t;
    }
    if (a < 0) {
      a = -a;
      x0 = -x0;
      y0 = -y0;
    }
    ClassVec nu = vec_scale(x0, u);
    nu[i] += y0;
    u = nu;
    acc = a;
  }
  if (acc < 0) u = vec_neg(u);
  particular_ = u;

  IntMat wrow(1, n);
  for (std::size_t i = 0; i < n; ++i) wrow(0, i) = w[i];
  kernel_ = kernel_saturated(wrow);
  kernel_gram_ = kernel_.transposed() * lattice_.gram * kernel_;
  reduce_columns_negdef(kernel_, kernel_gram_);

  const std::size_t m = kernel_.cols();
  if (m > 0) {
    std::vector<std::vector<Rat>> posdef(m, std::vector<Rat>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) posdef[i][j] = Rat(-kernel_gram_(i, j));
    Ldlt fact = ldlt_posdef(posdef);
    ldlt_diag_ = std::move(fact.d);
    ldlt_lower_ = std::move(fact.l);
  }
  // Size-reduce the particular solution against the kernel to keep the coset
  // representative short (its square controls the ellipsoid radius).
  if (m > 0 && !is_zero(particular_)) {
    for (int pass = 0; pass < 8; ++pass) {
      bool moved = false;
      for (std::size_t j = 0; j < m; ++j) {
        ClassVec kj(n);
        for (std::size_t r = 0; r < n; ++r) kj[r] = kernel_(r, j);
        Int num = -inner(lattice_, particular_, kj);
        Int den = -kernel_gram_(j, j);
        Int t = floor_div(2 * num + den, 2 * den);
        if (t == 0) continue;
        particular_ = vec_sub(particular_, vec_scale(t, kj));
        moved = true;
      }
      if (!moved) break;
    }
  }
}

std::vector<ClassVec> SquareEnumerator::solutions(const Int& s, const Int& c) const {
  std::vector<ClassVec> out;
  if (c % pairing_gcd_ != 0) return out;
  const std::size_t n = lattice_.rank();
  const std::size_t m = kernel_.cols();
  ClassVec v0 = vec_scale(c / pairing_gcd_, particular_);
  Int v0sq = inner(lattice_, v0, v0);
  if (m == 0) {
    if (v0sq == s) out.push_back(v0);
    return out;
  }
  // Solve (v0 + K x)^2 = s: with M = -K^T G K and b = K^T G v0, this is
  // (x - x*)^T M (x - x*) = x*^T b + (v0^2 - s), M x* = b.
  std::vector<Rat> b(m);
  for (std::size_t i = 0; i < m; ++i) {
    ClassVec ki(n);
    for (std::size_t r = 0; r < n; ++r) ki[r] = kernel_(r, i);
    b[i] = Rat(inner(lattice_, ki, v0));
  }
  std::vector<std::vector<Rat>> mm(m, std::vector<Rat>(m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) mm[i][j] = Rat(-kernel_gram_(i, j));
    mm[i][m] = b[i];
  }
  for (std::size_t cidx = 0; cidx < m; ++cidx) {
    std::size_t p = cidx;
    while (p < m && mm[p][cidx] == 0) ++p;
    std::swap(mm[cidx], mm[p]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == cidx || mm[i][cidx] == 0) continue;
      Rat f = mm[i][cidx] / mm[cidx][cidx];
      for (std::size_t j = cidx; j <= m; ++j) mm[i][j] -= f * mm[cidx][j];
    }
  }
  std::vector<Rat> center(m);
  for (std::size_t i = 0; i < m; ++i) center[i] = mm[i][m] / mm[i][i];
  Rat radius = Rat(v0sq - s);
  for (std::size_t i = 0; i < m; ++i) radius += center[i] * b[i];

  Ldlt fact;
  fact.d = ldlt_diag_;
  fact.l = ldlt_lower_;
  std::vector<std::vector<Int>> sols;
  std::vector<Rat> shift(m, Rat(0));
  std::vector<Int> current(m, Int(0));
  ellipsoid_enum(fact, center, radius, m, shift, current, sols);
  for (const auto& x : sols) {
    ClassVec v = v0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t r = 0; r < n; ++r) v[r] += kernel_(r, i) * x[i];
    if (inner(lattice_, v, v) == s) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ClassVec> enumerate_with_square(const IntLattice& l, const Int& s, const ClassVec& h,
                                            const Int& c_lo, const Int& c_hi) {
  std::vector<ClassVec> out;
  if (c_lo > c_hi || l.rank() == 0) return out;
  SquareEnumerator en(l, h);
  for (Int c = c_lo; c <= c_hi; ++c)
    for (auto& v : en.solutions(s, c)) out.push_back(std::move(v));
  std::sort(out.begin(), out.end(), [&](const ClassVec& a, const ClassVec& b) {
    Int pa = inner(l, a, h), pb = inner(l, b, h);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  return out;
}

std::vector<ClassVec> enumerate_definite(const IntMat& gram, const Int& s) {
  const std::size_t n = gram.rows();
  std::vector<ClassVec> out;
  if (s > 0) return out;
  if (n == 0) {
    if (s == 0) out.push_back({});
    return out;
  }
  std::vector<std::vector<Rat>> posdef(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) posdef[i][j] = Rat(-gram(i, j));
  Ldlt fact = ldlt_posdef(posdef);
  std::vector<Rat> center(n, Rat(0));
  std::vector<Rat> shift(n, Rat(0));
  std::vector<Int> current(n, Int(0));
  std::vector<std::vector<Int>> sols;
  ellipsoid_enum(fact, center, Rat(-s), n, shift, current, sols);
  for (auto& x : sols) {
    Int val(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) val += x[i] * gram(i, j) * x[j];
    if (val == s) out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace looijenga
