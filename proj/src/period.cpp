#include "looijenga/period.hpp"

#include <algorithm>
#include <map>

namespace looijenga {

GmElem lambda_invariant(std::size_t n, const std::vector<DivisorEntry>& divisor) {
  if (n < 3) throw std::invalid_argument("unsupported cycle length (n >= 3 required)");
  std::vector<Int> multidegree(n, Int(0));
  GmElem result;
  for (const auto& e : divisor) {
    if (e.component >= n) throw std::invalid_argument("lambda_invariant: bad component");
    multidegree[e.component] += e.multiplicity;
    result = result * e.coordinate.pow(e.multiplicity);
  }
  for (const Int& d : multidegree)
    if (d != 0) throw std::invalid_argument("lambda_invariant: nonzero multidegree");
  return result;
}

GmElem psi(const std::vector<GmElem>& lambda, const std::vector<Int>& degrees) {
  if (lambda.size() != degrees.size()) throw std::invalid_argument("psi: length mismatch");
  GmElem r;
  for (std::size_t i = 0; i < lambda.size(); ++i) r = r * lambda[i].pow(degrees[i]);
  return r;
}

BoundaryMarking BoundaryMarking::canonical(std::size_t n) {
  BoundaryMarking m;
  m.points.assign(n, GmElem::minus_one());
  return m;
}

GmElem PeriodPoint::eval(const ClassVec& coords) const {
  if (coords.size() != values.size()) throw std::invalid_argument("PeriodPoint: dimension mismatch");
  GmElem r;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    r = r * values[i].pow(coords[i]);
  }
  return r;
}

std::vector<DivisorEntry> restriction_divisor(const PairModel& p, const ClassVec& v) {
  if (v.size() != p.rank()) throw std::invalid_argument("restriction_divisor: dimension mismatch");
  const std::size_t n = p.boundary_count();
  const std::size_t t = p.toric.lattice.rank();
  std::vector<DivisorEntry> div;
  ClassVec toric_part(v.begin(), v.begin() + t);
  for (std::size_t i = 0; i < n; ++i) {
    Int deg = inner(p.toric.lattice, toric_part, p.toric.boundary_classes[i]);
    if (deg != 0) div.push_back({i, GmElem::minus_one(), deg});
  }
  for (std::size_t j = 0; j < p.blowups.size(); ++j) {
    Int mult(0);
    for (std::size_t c : p.chain_columns[j]) mult += v[c];
    if (mult != 0) div.push_back({p.blowups[j].component, p.blowups[j].coordinate, mult});
  }
  return div;
}

PeriodPoint marked_period(const PairModel& p, const BoundaryMarking& marking) {
  const std::size_t n = p.boundary_count();
  if (marking.points.size() != n) throw std::invalid_argument("marked_period: marking size mismatch");
  PeriodPoint pp;
  pp.labels = p.pic.basis_labels;
  pp.values.reserve(p.rank());
  for (std::size_t b = 0; b < p.rank(); ++b) {
    ClassVec v = p.pic.basis_vector(b);
    std::vector<DivisorEntry> div;
    for (std::size_t i = 0; i < n; ++i) {
      Int deg = inner(p.pic, v, p.boundary[i]);
      if (deg != 0) div.push_back({i, marking.points[i], deg});
    }
    for (auto& e : restriction_divisor(p, v)) {
      e.multiplicity = -e.multiplicity;
      div.push_back(std::move(e));
    }
    pp.values.push_back(lambda_invariant(n, div));
  }
  return pp;
}

PeriodPoint marked_period(const PairModel& p, const BoundaryMarking& marking,
                          const LatticeIsometry& mu) {
  if (!(mu.target.gram == p.pic.gram))
    throw std::invalid_argument("marked_period: marking must land in the pair's lattice");
  PeriodPoint base = marked_period(p, marking);
  PeriodPoint out;
  out.labels = mu.source.basis_labels;
  for (std::size_t i = 0; i < mu.source.rank(); ++i)
    out.values.push_back(base.eval(mu.apply(mu.source.basis_vector(i))));
  return out;
}

GmElem unmarked_value(const PairModel& p, const ClassVec& alpha) {
  for (std::size_t i = 0; i < p.boundary_count(); ++i)
    if (inner(p.pic, alpha, p.boundary[i]) != 0)
      throw std::invalid_argument("unmarked_value: class not orthogonal to the boundary");
  std::vector<DivisorEntry> div = restriction_divisor(p, alpha);
  for (auto& e : div) e.multiplicity = -e.multiplicity;
  return lambda_invariant(p.boundary_count(), div);
}

UnmarkedPeriod unmarked_period(const PairModel& p) {
  UnmarkedPeriod up;
  up.basis = orthogonal_complement(p.pic, p.boundary);
  for (const auto& alpha : up.basis) up.values.push_back(unmarked_value(p, alpha));
  return up;
}

BoundaryMarking solve_boundary_marking(const ToricPic& tp, const std::vector<GmElem>& phibar) {
  const std::size_t k = tp.lattice.rank();
  const std::size_t n = tp.boundary_classes.size();
  if (phibar.size() != k) throw std::invalid_argument("solve_boundary_marking: value count mismatch");

  // With u_i = -p_i the system reads prod_i u_i^{B_j . D_i} = phibar_j.
  IntMat degrees(k, n);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i)
      degrees(j, i) = inner(tp.lattice, tp.lattice.basis_vector(j), tp.boundary_classes[i]);
  SmithDecomposition sd = smith(degrees);
  // Substituting u = V y and multiplying the equations by U gives
  // y_j^{s_j} = h_j with h_j = prod_l phibar_l^{U_{jl}}.
  std::vector<GmElem> y(n);
  for (std::size_t j = 0; j < k; ++j) {
    GmElem h;
    for (std::size_t l = 0; l < k; ++l) h = h * phibar[l].pow(sd.u(j, l));
    if (sd.diag[j] == 0) {
      if (!h.is_one())
        throw std::domain_error("solve_boundary_marking: inconsistent period (degenerate degrees)");
      continue;
    }
    y[j] = h.pow(Rat(1, sd.diag[j]));
  }
  BoundaryMarking m;
  m.points.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    GmElem u;
    for (std::size_t l = 0; l < n; ++l) {
      if (sd.v(i, l) == 0) continue;
      u = u * y[l].pow(sd.v(i, l));
    }
    m.points[i] = u * GmElem::minus_one();
  }
  return m;
}

Reconstruction reconstruct(const Fan2D& fan, const std::vector<std::size_t>& config_components,
                           const std::vector<GmElem>& phi_toric,
                           const std::vector<GmElem>& phi_exceptional) {
  if (config_components.size() != phi_exceptional.size())
    throw std::invalid_argument("reconstruct: component/value count mismatch");
  const std::size_t n = fan.size();
  for (std::size_t c : config_components)
    if (c >= n) throw std::invalid_argument("reconstruct: component out of range");

  ToricPic tp = toric_pic(fan);
  BoundaryMarking marking = solve_boundary_marking(tp, phi_toric);

  const std::size_t m = config_components.size();
  std::vector<GmElem> q(m);
  for (std::size_t j = 0; j < m; ++j)
    q[j] = marking.points[config_components[j]] * phi_exceptional[j].inverse();

  // Merge coincident points on the same component into chains, input order.
  std::vector<BlowupEntry> entries;
  std::vector<std::pair<std::size_t, std::size_t>> slot(m);  // (entry, depth) per generator
  for (std::size_t j = 0; j < m; ++j) {
    std::size_t found = entries.size();
    for (std::size_t e = 0; e < entries.size(); ++e)
      if (entries[e].component == config_components[j] && entries[e].coordinate == q[j]) {
        found = e;
        break;
      }
    if (found == entries.size()) {
      entries.push_back({config_components[j], q[j], 1});
      slot[j] = {found, 0};
    } else {
      slot[j] = {found, entries[found].chain_length};
      entries[found].chain_length += 1;
    }
  }

  Reconstruction rec{build_pair(fan, entries), marking, IntLattice(), LatticeIsometry()};

  // Reference lattice: toric basis followed by one (-1)-generator per class.
  const std::size_t t = tp.lattice.rank();
  IntMat ref_gram(t + m, t + m);
  std::vector<std::string> ref_labels(t + m);
  for (std::size_t i = 0; i < t; ++i) {
    ref_labels[i] = tp.lattice.basis_labels[i];
    for (std::size_t j = 0; j < t; ++j) ref_gram(i, j) = tp.lattice.gram(i, j);
  }
  for (std::size_t j = 0; j < m; ++j) {
    ref_gram(t + j, t + j) = -1;
    ref_labels[t + j] = "E" + std::to_string(j + 1);
  }
  rec.reference = IntLattice(ref_gram, ref_labels);

  IntMat iso(rec.pair.rank(), t + m);
  for (std::size_t i = 0; i < t; ++i) iso(i, i) = 1;
  for (std::size_t j = 0; j < m; ++j) {
    std::size_t col = rec.pair.chain_columns[slot[j].first][slot[j].second];
    iso(col, t + j) = 1;
  }
  rec.ref_to_pic = LatticeIsometry::make(std::move(iso), rec.reference, rec.pair.pic);

  // Exact round trip is part of the contract; verify before returning.
  PeriodPoint check = marked_period(rec.pair, rec.marking);
  for (std::size_t i = 0; i < t; ++i)
    if (check.eval(rec.ref_to_pic.apply(rec.reference.basis_vector(i))) != phi_toric[i])
      throw std::logic_error("reconstruct: toric period mismatch");
  for (std::size_t j = 0; j < m; ++j)
    if (check.eval(rec.ref_to_pic.apply(rec.reference.basis_vector(t + j))) != phi_exceptional[j])
      throw std::logic_error("reconstruct: exceptional period mismatch");
  return rec;
}

MutationResult mutate(const PairModel& p, const ExceptionalConfiguration& new_config) {
  validate_configuration(p, new_config);
  const std::size_t n = p.boundary_count();

  if (new_config.entries.size() + (n - 2) != p.rank())
    throw std::invalid_argument("mutate: configuration must have rank(Pic) - (n-2) classes");
  std::vector<std::size_t> counts(n, 0);
  for (const auto& e : new_config.entries) counts[e.component]++;
  std::vector<Int> d_new(n);
  for (std::size_t i = 0; i < n; ++i) d_new[i] = p.boundary_square(i) + Int(counts[i]);
  Fan2D fan = fan_from_selfintersections(d_new);

  // Reference classes in p: pullbacks of the new toric boundary classes are
  // [D_t] + sum of the configuration classes on component t.
  const std::size_t t = n - 2;
  std::vector<ClassVec> ref_in_p;
  for (std::size_t s = 0; s < t; ++s) {
    ClassVec v = p.boundary[s];
    for (const auto& e : new_config.entries)
      if (e.component == s) v = vec_add(v, e.cls);
    ref_in_p.push_back(std::move(v));
  }
  for (const auto& e : new_config.entries) ref_in_p.push_back(e.cls);

  PeriodPoint phi = marked_period(p, BoundaryMarking::canonical(n));
  std::vector<GmElem> phi_toric, phi_exc;
  for (std::size_t s = 0; s < t; ++s) phi_toric.push_back(phi.eval(ref_in_p[s]));
  for (std::size_t j = t; j < ref_in_p.size(); ++j) phi_exc.push_back(phi.eval(ref_in_p[j]));

  std::vector<std::size_t> comps;
  for (const auto& e : new_config.entries) comps.push_back(e.component);
  Reconstruction rec = reconstruct(fan, comps, phi_toric, phi_exc);

  // p.pic -> reference: invert the matrix whose columns are ref_in_p.
  IntMat a(p.rank(), ref_in_p.size());
  for (std::size_t j = 0; j < ref_in_p.size(); ++j)
    for (std::size_t i = 0; i < p.rank(); ++i) a(i, j) = ref_in_p[j][i];
  LatticeIsometry ref_to_p;
  try {
    ref_to_p = LatticeIsometry::make(std::move(a), rec.reference, p.pic);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("mutate: configuration does not define a lattice basis");
  }
  MutationResult out{std::move(rec.pair), std::move(rec.marking),
                     rec.ref_to_pic.compose(ref_to_p.inverse())};
  return out;
}

}  // namespace looijenga
