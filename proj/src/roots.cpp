#include "looijenga/roots.hpp"

#include "looijenga/linprog.hpp"

#include <algorithm>

namespace looijenga {

LatticeIsometry reflection(const IntLattice& l, const ClassVec& alpha) {
  if (inner(l, alpha, alpha) != -2)
    throw std::invalid_argument("reflection: root must have square -2");
  const std::size_t n = l.rank();
  IntMat m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    ClassVec img = l.basis_vector(j);
    Int pairing = inner(l, alpha, img);
    img = vec_add(img, vec_scale(pairing, alpha));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = img[i];
  }
  return LatticeIsometry::make(std::move(m), l, l);
}

std::vector<ClassVec> RootDatum::certified_roots() const {
  std::vector<ClassVec> out;
  for (const auto& r : roots)
    if (r.certified) out.push_back(r.cls);
  return out;
}

namespace {

// Realization test: alpha is a root iff alpha^perp meets the interior of
// C++_D. Witness search: project the ample class onto alpha^perp, then try
// small deterministic perturbations inside alpha^perp. Attempts whose wall
// enumeration would be disproportionate are abandoned via the cap; a capped
// attempt only costs the witness, never soundness.
bool certify_root(const ConeOracle& oracle, const ClassVec& alpha) {
  const IntLattice& pic = oracle.pair().pic;
  RatVec a = to_rat(oracle.ample());
  Int cap = 4 * isqrt(inner(pic, oracle.ample(), oracle.ample())) + 12;
  Rat pairing = inner_rat(pic, a, alpha);
  // x0 = a + (a.alpha / 2) alpha lies on alpha^perp (alpha^2 = -2).
  RatVec x0 = rat_add(a, rat_scale(pairing / 2, to_rat(alpha)));
  if (oracle.interior_cpp_d(x0, 1, &cap).ok) return true;

  // Perturbation directions: basis vectors projected onto alpha^perp.
  for (int denom_pow = 0; denom_pow < 3; ++denom_pow) {
    Rat eps(1, 8 << (3 * denom_pow));
    for (std::size_t j = 0; j < pic.rank(); ++j) {
      RatVec dir = to_rat(pic.basis_vector(j));
      Rat dp = inner_rat(pic, dir, alpha);
      dir = rat_add(dir, rat_scale(dp / 2, to_rat(alpha)));
      for (int sign : {1, -1}) {
        RatVec x = rat_add(x0, rat_scale(eps * sign, dir));
        if (inner_rat(pic, x, alpha) != 0) continue;
        if (oracle.interior_cpp_d(x, 1, &cap).ok) return true;
      }
    }
  }
  return false;
}

}  // namespace

RootDatum find_roots(const ConeOracle& oracle, const Int& bound) {
  const PairModel& p = oracle.pair();
  RootDatum rd;
  rd.bound = bound;
  rd.dperp_basis = orthogonal_complement(p.pic, p.boundary);
  if (rd.dperp_basis.empty()) {
    rd.complete = true;
    return rd;
  }

  // Work inside D^perp: Gram g of the basis and the pairing functional
  // against the ample class. Note alpha.a only sees the D^perp-part of a.
  const std::size_t k = rd.dperp_basis.size();
  IntMat g(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      g(i, j) = inner(p.pic, rd.dperp_basis[i], rd.dperp_basis[j]);
  std::vector<Int> w(k);
  for (std::size_t i = 0; i < k; ++i) w[i] = inner(p.pic, rd.dperp_basis[i], oracle.ample());
  auto pair_w = [&](const ClassVec& x) {
    Int acc(0);
    for (std::size_t i = 0; i < k; ++i) acc += w[i] * x[i];
    return acc;
  };

  std::vector<ClassVec> coords;  // solutions in D^perp coordinates
  Signature sig = signature(g);
  if (sig.positive == 0) {
    IntMat radical = kernel_saturated(g);  // columns, D^perp coordinates
    const std::size_t r = radical.cols();
    if (r == k) {
      rd.complete = true;  // totally isotropic: every square is 0
      return rd;
    }
    if (r == 0) {
      // Negative definite: the finite full set, complete iff none is cut off
      // by the height bound.
      rd.complete = true;
      for (auto& x : enumerate_definite(g, Int(-2))) {
        Int c = pair_w(x);
        if (c > bound || c < -bound) {
          rd.complete = false;
          continue;
        }
        coords.push_back(std::move(x));
      }
    } else if (r == 1) {
      // One isotropic radical direction (two are impossible in a hyperbolic
      // ambient lattice). Representatives of D^perp / radical plus bounded
      // radical translates; the ample pairing cuts the translates because no
      // nonzero isotropic vector is orthogonal to the ample class.
      IntMat rad_rows = radical.transposed();
      SmithDecomposition sd = smith(rad_rows);
      IntMat wmat = unimodular_inverse(sd.v);  // rows: radical first, then a quotient basis
      IntMat quotient_gram(k - 1, k - 1);
      for (std::size_t i = 0; i + 1 < k; ++i)
        for (std::size_t j = 0; j + 1 < k; ++j) {
          Int acc(0);
          for (std::size_t s1 = 0; s1 < k; ++s1)
            for (std::size_t s2 = 0; s2 < k; ++s2)
              acc += wmat(1 + i, s1) * g(s1, s2) * wmat(1 + j, s2);
          quotient_gram(i, j) = acc;
        }
      std::vector<ClassVec> reps = enumerate_definite(quotient_gram, Int(-2));
      if (reps.empty()) {
        rd.complete = true;
        return rd;
      }
      ClassVec radgen(k);
      for (std::size_t i = 0; i < k; ++i) radgen[i] = radical(i, 0);
      Int cr = pair_w(radgen);
      if (cr == 0) throw std::logic_error("find_roots: radical direction orthogonal to ample");
      for (const auto& rep : reps) {
        ClassVec x0(k, Int(0));
        for (std::size_t i = 0; i + 1 < k; ++i)
          for (std::size_t s = 0; s < k; ++s) x0[s] += rep[i] * wmat(1 + i, s);
        Int base = pair_w(x0);
        Int z_lo = ceil_div(-bound - base, cr), z_hi = floor_div(bound - base, cr);
        if (cr < 0) std::swap(z_lo, z_hi);
        for (Int z = z_lo; z <= z_hi; ++z) coords.push_back(vec_add(x0, vec_scale(z, radgen)));
      }
    } else {
      throw std::logic_error("find_roots: radical rank exceeds one");
    }
  } else {
    // Indefinite restriction: the boundary span is negative definite, so the
    // D^perp-component of the ample class has positive square and serves as
    // the enumeration anchor.
    const std::size_t n = p.boundary_count();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        m[i][j] = Rat(inner(p.pic, p.boundary[i], p.boundary[j]));
      m[i][n] = Rat(inner(p.pic, oracle.ample(), p.boundary[i]));
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && m[piv][c] == 0) ++piv;
      if (piv == n) throw std::logic_error("find_roots: boundary span unexpectedly degenerate");
      std::swap(m[c], m[piv]);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == c || m[i][c] == 0) continue;
        Rat f = m[i][c] / m[c][c];
        for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
      }
    }
    RatVec perp = to_rat(oracle.ample());
    for (std::size_t i = 0; i < n; ++i)
      perp = rat_add(perp, rat_scale(-(m[i][n] / m[i][i]), to_rat(p.boundary[i])));
    // Express perp in D^perp coordinates: y = g^{-1} (b_i . perp).
    std::vector<std::vector<Rat>> sys(k, std::vector<Rat>(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) sys[i][j] = Rat(g(i, j));
      sys[i][k] = inner_rat(p.pic, perp, rd.dperp_basis[i]);
    }
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t piv = c;
      while (piv < k && sys[piv][c] == 0) ++piv;
      if (piv == k) throw std::logic_error("find_roots: degenerate indefinite restriction");
      std::swap(sys[c], sys[piv]);
      for (std::size_t i = 0; i < k; ++i) {
        if (i == c || sys[i][c] == 0) continue;
        Rat f = sys[i][c] / sys[c][c];
        for (std::size_t j = c; j <= k; ++j) sys[i][j] -= f * sys[c][j];
      }
    }
    RatVec y(k);
    for (std::size_t i = 0; i < k; ++i) y[i] = sys[i][k] / sys[i][i];
    ClassVec h = primitive_ray(y);
    // Scale between alpha.a and the integer pairing x^T g h: y = s h.
    Rat s(0);
    for (std::size_t i = 0; i < k; ++i)
      if (h[i] != 0) {
        s = y[i] / Rat(h[i]);
        break;
      }
    IntLattice sub(g, {});
    if (inner(sub, h, h) <= 0) throw std::logic_error("find_roots: anchor has nonpositive square");
    Int c_hi = floor_rat(Rat(bound) / s);
    coords = enumerate_with_square(sub, Int(-2), h, -c_hi, c_hi);
  }

  for (const auto& x : coords) {
    ClassVec v(p.rank(), Int(0));
    for (std::size_t i = 0; i < k; ++i) v = vec_add(v, vec_scale(x[i], rd.dperp_basis[i]));
    RootEntry e;
    e.certified = certify_root(oracle, v);
    e.cls = std::move(v);
    rd.roots.push_back(std::move(e));
  }
  std::sort(rd.roots.begin(), rd.roots.end(),
            [](const RootEntry& a, const RootEntry& b) { return a.cls < b.cls; });
  return rd;
}

RatVec perturb_off_walls(const ConeOracle& oracle, const std::vector<ClassVec>& walls) {
  const IntLattice& pic = oracle.pair().pic;
  RatVec a = to_rat(oracle.ample());
  std::vector<const ClassVec*> on_wall;
  for (const auto& w : walls)
    if (inner_rat(pic, a, w) == 0) on_wall.push_back(&w);
  if (on_wall.empty()) return a;

  // Deterministic direction: sum of basis vectors weighted 1/2^j, adjusted to
  // pair nonzero with every on-wall class.
  RatVec dir(pic.rank(), Rat(0));
  for (std::size_t j = 0; j < pic.rank(); ++j) dir[j] = Rat(1, Int(1) << (j + 1));
  Rat eps(1, 1000);
  for (int tries = 0; tries < 40; ++tries) {
    RatVec cand = rat_add(a, rat_scale(eps, dir));
    bool ok = inner_rat(pic, cand, cand) > 0;
    for (const auto& w : walls)
      if (ok && inner_rat(pic, cand, w) == 0) ok = false;
    // Keep strict inequalities that already held for a.
    for (const auto& w : walls) {
      if (!ok) break;
      Rat before = inner_rat(pic, a, w);
      if (before > 0 && inner_rat(pic, cand, w) <= 0) ok = false;
      if (before < 0 && inner_rat(pic, cand, w) >= 0) ok = false;
    }
    for (std::size_t i = 0; ok && i < oracle.pair().boundary_count(); ++i)
      if (inner_rat(pic, cand, oracle.pair().boundary[i]) <= 0) ok = false;
    if (ok) return cand;
    if (tries % 2 == 0) {
      eps /= 2;
    } else {
      // Nudge the direction so walls through a in dir^perp are avoided.
      for (std::size_t j = 0; j < pic.rank(); ++j) dir[j] += Rat(1, Int(3) << (j + 1));
    }
  }
  throw std::logic_error("perturb_off_walls: no chamber-interior point found");
}

std::vector<ClassVec> orient_positive(const ConeOracle& oracle,
                                      const std::vector<ClassVec>& roots) {
  std::vector<ClassVec> out;
  for (const auto& r : roots)
    out.push_back(oracle.root_orientation(r) > 0 ? r : vec_neg(r));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ClassVec> chamber_walls(const ConeOracle& oracle,
                                    const std::vector<ClassVec>& phi_y_positive) {
  const IntLattice& pic = oracle.pair().pic;
  const std::size_t rank = pic.rank();
  std::vector<ClassVec> walls;
  for (std::size_t i = 0; i < phi_y_positive.size(); ++i) {
    const ClassVec& alpha = phi_y_positive[i];
    // Facet test: exists x with x.alpha = 0 and x.beta >= 1 for the others.
    LpProblem lp;
    lp.nonneg.assign(rank, false);
    {
      std::vector<Rat> row(rank);
      for (std::size_t r = 0; r < rank; ++r)
        row[r] = Rat(inner(pic, pic.basis_vector(r), alpha));
      lp.a.push_back(std::move(row));
      lp.b.push_back(Rat(0));
    }
    std::size_t slack_base = rank;
    std::size_t extra = 0;
    for (std::size_t j = 0; j < phi_y_positive.size(); ++j) {
      if (j == i) continue;
      if (phi_y_positive[j] == alpha || phi_y_positive[j] == vec_neg(alpha)) continue;
      ++extra;
    }
    for (auto& row : lp.a) row.resize(rank + extra, Rat(0));
    lp.nonneg.resize(rank + extra, true);
    std::size_t slack = 0;
    for (std::size_t j = 0; j < phi_y_positive.size(); ++j) {
      if (j == i) continue;
      if (phi_y_positive[j] == alpha || phi_y_positive[j] == vec_neg(alpha)) continue;
      std::vector<Rat> row(rank + extra, Rat(0));
      for (std::size_t r = 0; r < rank; ++r)
        row[r] = Rat(inner(pic, pic.basis_vector(r), phi_y_positive[j]));
      row[slack_base + slack] = -1;
      ++slack;
      lp.a.push_back(std::move(row));
      lp.b.push_back(Rat(1));
    }
    if (lp_solve(lp).feasible) walls.push_back(alpha);
  }
  return walls;
}

WeylElement WeylElement::identity(const IntLattice& l) {
  return WeylElement{{}, LatticeIsometry::identity(l)};
}

std::pair<WeylElement, RatVec> chamber_reduce(const IntLattice& l,
                                              const std::vector<ClassVec>& walls, const RatVec& x,
                                              std::size_t wall_offset) {
  RatVec cur = x;
  WeylElement w = WeylElement::identity(l);
  const std::size_t m = walls.size();
  for (std::size_t iter = 0; iter < 100000; ++iter) {
    std::size_t violated = m;
    for (std::size_t k = 0; k < m; ++k) {
      std::size_t j = (k + wall_offset) % m;
      if (inner_rat(l, cur, walls[j]) < 0) {
        violated = j;
        break;
      }
    }
    if (violated == m) return {std::move(w), std::move(cur)};
    LatticeIsometry s = reflection(l, walls[violated]);
    cur = s.apply(cur);
    w.word.push_back(walls[violated]);
    w.matrix = s.compose(w.matrix);
  }
  throw std::logic_error("chamber_reduce: did not terminate (x outside C+?)");
}

}  // namespace looijenga
