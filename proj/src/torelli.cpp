#include "looijenga/torelli.hpp"

#include <algorithm>

namespace looijenga {

Int PairContext::default_bound(const PairModel& p) {
  Int m(1);
  for (std::size_t i = 0; i < p.rank(); ++i)
    for (std::size_t j = 0; j < p.rank(); ++j) {
      Int e = boost::multiprecision::abs(p.pic.gram(i, j));
      if (e > m) m = e;
    }
  return 10 * m;
}

PairContext::PairContext(PairModel pair, std::optional<Int> root_bound)
    : oracle_(std::move(pair)), roots_(find_roots(oracle_, root_bound.value_or(default_bound(oracle_.pair())))) {
  for (const auto& r : roots_.roots) {
    if (!r.certified) continue;
    if (unmarked_value(oracle_.pair(), r.cls).is_one()) phi_y_.push_back(r.cls);
  }
  if (!phi_y_.empty()) {
    phi_y_positive_ = orient_positive(oracle_, phi_y_);
    delta_y_ = chamber_walls(oracle_, phi_y_positive_);
  }
}

bool PairContext::generic_certain() const {
  if (!phi_y_.empty()) return false;
  return roots_.complete || is_fresh_generic(oracle_.pair());
}

bool PairContext::has_undetermined_roots() const {
  return std::any_of(roots_.roots.begin(), roots_.roots.end(),
                     [](const RootEntry& r) { return !r.certified; });
}

std::vector<ClassVec> PairContext::walls_up_to(const Int& b) const {
  if (b <= roots_.bound || roots_.complete) return phi_y_positive_;
  {
    std::lock_guard<std::mutex> lock(walls_mutex_);
    auto it = walls_cache_.find(b);
    if (it != walls_cache_.end()) return it->second;
  }
  // Period-trivial candidates up to b, whether or not realization certifies:
  // a wall of a hyperplane missing the interior of C++_D can never reject an
  // interior point, so including undetermined candidates is sound; candidates
  // with no effectivity orientation cannot be actual curve walls and are
  // skipped.
  RootDatum rd = find_roots(oracle_, b);
  std::vector<ClassVec> trivial;
  for (const auto& r : rd.roots)
    if (unmarked_value(oracle_.pair(), r.cls).is_one()) trivial.push_back(r.cls);
  std::vector<ClassVec> oriented;
  for (const auto& alpha : trivial) {
    try {
      oriented.push_back(oracle_.root_orientation(alpha) > 0 ? alpha : vec_neg(alpha));
    } catch (const std::logic_error&) {
      continue;
    }
  }
  std::sort(oriented.begin(), oriented.end());
  oriented.erase(std::unique(oriented.begin(), oriented.end()), oriented.end());
  {
    std::lock_guard<std::mutex> lock(walls_mutex_);
    walls_cache_[b] = oriented;
  }
  return oriented;
}

ConeCheck PairContext::ample_test(const RatVec& x, int bound_scale) const {
  ConeCheck basic = oracle_.interior_cpp_d(x, bound_scale);
  if (!basic.ok) return basic;
  Int wall_bound = oracle_.segment_bound(x, Int(2)) * bound_scale;
  for (const auto& alpha : walls_up_to(wall_bound))
    if (inner_rat(pair().pic, x, alpha) <= 0)
      return ConeCheck::fail(alpha, "nonpositive against an internal (-2)-wall");
  return ConeCheck::pass();
}

namespace {

bool boundary_types_match(const PairModel& a, const PairModel& b) {
  if (a.boundary_count() != b.boundary_count()) return false;
  for (std::size_t i = 0; i < a.boundary_count(); ++i)
    if (a.boundary_square(i) != b.boundary_square(i)) return false;
  return true;
}

// A rational point interior to the nef cone: the certified ample class, moved
// off any Phi_Y walls and chamber-reduced onto the effective side.
RatVec nef_interior_point(const PairContext& ctx) {
  if (ctx.phi_y_positive().empty()) return to_rat(ctx.oracle().ample());
  RatVec start = perturb_off_walls(ctx.oracle(), ctx.phi_y_positive());
  auto [w, reduced] = chamber_reduce(ctx.pair().pic, ctx.phi_y_positive(), start);
  for (const auto& alpha : ctx.phi_y_positive())
    if (inner_rat(ctx.pair().pic, reduced, alpha) <= 0)
      throw std::logic_error("nef_interior_point: reduction landed on a wall");
  return reduced;
}

std::vector<Int> torsor_from_degrees(const PairModel& p) {
  const std::size_t n = p.boundary_count();
  IntMat degrees(n, p.rank());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p.rank(); ++j)
      degrees(i, j) = inner(p.pic, p.pic.basis_vector(j), p.boundary[i]);
  SmithDecomposition sd = smith(degrees);
  std::vector<Int> factors = sd.diag;
  factors.resize(n, Int(0));  // cokernel of an n-row map
  return factors;
}

}  // namespace

std::vector<Int> torsor_group(const PairModel& p) { return torsor_from_degrees(p); }

TorelliVerdict check_global_torelli(const PairContext& c1, const PairContext& c2,
                                    const LatticeIsometry& mu) {
  const PairModel& p1 = c1.pair();
  const PairModel& p2 = c2.pair();
  TorelliVerdict v;
  v.bound = std::max(c1.bound(), c2.bound());
  if (p1.rank() != p2.rank()) throw std::invalid_argument("torelli: lattice rank mismatch");
  if (mu.matrix.cols() != p1.rank() || mu.matrix.rows() != p2.rank())
    throw std::invalid_argument("torelli: map shape mismatch");

  if (!boundary_types_match(p1, p2)) {
    v.verdict = TorelliVerdict::Value::no;
    v.failed_condition = 1;
    v.witness = p1.boundary[0];
    return v;
  }
  // (1) boundary classes preserved.
  for (std::size_t i = 0; i < p1.boundary_count(); ++i) {
    if (mu.apply(p1.boundary[i]) != p2.boundary[i]) {
      v.verdict = TorelliVerdict::Value::no;
      v.failed_condition = 1;
      v.witness = p1.boundary[i];
      return v;
    }
  }
  // (2) nef transport: the image of a nef-interior point must be ample.
  RatVec image_ample = mu.apply(nef_interior_point(c1));
  ConeCheck amp = c2.ample_test(image_ample);
  if (!amp.ok) {
    v.verdict = TorelliVerdict::Value::no;
    v.failed_condition = 2;
    v.witness = amp.certificate;
    return v;
  }
  // (3) bounded Delta comparison: mu must map the Delta_Y fragment onto the
  // other side's.
  {
    std::vector<ClassVec> mapped;
    for (const auto& a : c1.delta_y()) mapped.push_back(mu.apply(a));
    std::sort(mapped.begin(), mapped.end());
    std::vector<ClassVec> target = c2.delta_y();
    std::sort(target.begin(), target.end());
    if (mapped != target) {
      v.verdict = TorelliVerdict::Value::no;
      v.failed_condition = 3;
      if (!mapped.empty()) v.witness = mapped.front();
      return v;
    }
  }
  // (4) exact period equality on D^perp.
  UnmarkedPeriod up1 = unmarked_period(p1);
  for (std::size_t i = 0; i < up1.basis.size(); ++i) {
    GmElem lhs = unmarked_value(p2, mu.apply(up1.basis[i]));
    if (lhs != up1.values[i]) {
      v.verdict = TorelliVerdict::Value::no;
      v.failed_condition = 4;
      v.witness = up1.basis[i];
      v.period_witness = std::make_pair(up1.values[i], lhs);
      return v;
    }
  }
  v.verdict = (c1.has_undetermined_roots() || c2.has_undetermined_roots())
                  ? TorelliVerdict::Value::undetermined
                  : TorelliVerdict::Value::yes;
  if (v.verdict == TorelliVerdict::Value::yes) v.torsor = torsor_group(p2);
  return v;
}

WeakTorelliResult weak_torelli(const PairContext& c1, const PairContext& c2,
                               const LatticeIsometry& mu) {
  WeakTorelliResult res;
  const PairModel& p1 = c1.pair();
  const PairModel& p2 = c2.pair();
  res.verdict.bound = std::max(c1.bound(), c2.bound());

  // Preconditions (1), (2), (4) for mu itself; W_{Y1} fixes all three, so mu
  // must already satisfy them. Condition (2) is C++ preservation, tested on
  // the generic deformation (no nef-chamber alignment yet).
  if (!boundary_types_match(p1, p2)) {
    res.verdict.verdict = TorelliVerdict::Value::no;
    res.verdict.failed_condition = 1;
    return res;
  }
  for (std::size_t i = 0; i < p1.boundary_count(); ++i)
    if (mu.apply(p1.boundary[i]) != p2.boundary[i]) {
      res.verdict.verdict = TorelliVerdict::Value::no;
      res.verdict.failed_condition = 1;
      res.verdict.witness = p1.boundary[i];
      return res;
    }
  {
    ConeCheck cpp = c2.oracle().interior_cpp_d(mu.apply(to_rat(c1.oracle().ample())));
    if (!cpp.ok) {
      res.verdict.verdict = TorelliVerdict::Value::no;
      res.verdict.failed_condition = 2;
      res.verdict.witness = cpp.certificate;
      return res;
    }
  }
  {
    UnmarkedPeriod up1 = unmarked_period(p1);
    for (std::size_t i = 0; i < up1.basis.size(); ++i) {
      GmElem lhs = unmarked_value(p2, mu.apply(up1.basis[i]));
      if (lhs != up1.values[i]) {
        res.verdict.verdict = TorelliVerdict::Value::no;
        res.verdict.failed_condition = 4;
        res.verdict.witness = up1.basis[i];
        res.verdict.period_witness = std::make_pair(up1.values[i], lhs);
        return res;
      }
    }
  }

  // Reduce mu^{-1}(nef interior of Y2) into the fundamental chamber of Y1;
  // w(pulled) lands in Nef(Y1), so g = w^{-1} satisfies
  // (mu o g)(Nef(Y1)) = Nef(Y2). Simple transitivity makes g unique.
  LatticeIsometry mu_inv = mu.inverse();
  RatVec pulled = mu_inv.apply(nef_interior_point(c2));
  auto [w, reduced] = chamber_reduce(p1.pic, c1.phi_y_positive(), pulled);
  WeylElement g;
  g.matrix = w.matrix.inverse();
  g.word.assign(w.word.rbegin(), w.word.rend());
  LatticeIsometry composed = mu.compose(g.matrix);
  TorelliVerdict after = check_global_torelli(c1, c2, composed);
  res.verdict = after;
  if (after.verdict != TorelliVerdict::Value::no) res.g = g;
  return res;
}

bool adm_membership(const PairContext& ctx, const LatticeIsometry& theta) {
  const PairModel& p = ctx.pair();
  if (theta.matrix.rows() != p.rank() || theta.matrix.cols() != p.rank()) return false;
  for (const auto& d : p.boundary)
    if (theta.apply(d) != d) return false;
  ClassVec image = theta.apply(ctx.oracle().ample());
  return ctx.oracle().interior_cpp_d(to_rat(image)).ok;
}

Int mw_rank(const PairModel& p) {
  ClassVec d_total(p.rank(), Int(0));
  for (const auto& d : p.boundary) d_total = vec_add(d_total, d);
  if (inner(p.pic, d_total, d_total) != 0)
    throw std::invalid_argument("mw_rank: total boundary class must have square zero");
  for (const auto& d : p.boundary)
    if (inner(p.pic, d_total, d) != 0)
      throw std::invalid_argument("mw_rank: boundary components must be fiber components");
  // rank(<D>^perp) - rank(span of the [D_i]).
  IntMat boundary_mat(p.boundary_count(), p.rank());
  for (std::size_t i = 0; i < p.boundary_count(); ++i)
    for (std::size_t j = 0; j < p.rank(); ++j) boundary_mat(i, j) = p.boundary[i][j];
  std::size_t span_rank = rank_rat(boundary_mat);
  return Int(p.rank()) - 1 - Int(span_rank);
}

}  // namespace looijenga
