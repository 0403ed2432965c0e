#include "looijenga/pair.hpp"

#include <set>

namespace looijenga {

ClassVec PairModel::toric_pullback(const ClassVec& toric_class) const {
  if (toric_class.size() != toric.lattice.rank())
    throw std::invalid_argument("toric_pullback: dimension mismatch");
  ClassVec v(rank(), Int(0));
  for (std::size_t i = 0; i < toric_class.size(); ++i) v[i] = toric_class[i];
  return v;
}

Int PairModel::boundary_square(std::size_t i) const {
  return inner(pic, boundary.at(i), boundary.at(i));
}

PairModel build_pair(Fan2D fan, std::vector<BlowupEntry> blowups) {
  const std::size_t n = fan.size();
  for (const auto& b : blowups) {
    if (b.component >= n) throw std::invalid_argument("build_pair: invalid component index");
    if (b.chain_length < 1) throw std::invalid_argument("build_pair: chain_length must be >= 1");
  }

  PairModel p{std::move(fan), std::move(blowups), ToricPic{}, IntLattice{}, {}, {}, {}};
  p.toric = toric_pic(p.fan);
  const std::size_t t = p.toric.lattice.rank();
  std::size_t extra = 0;
  for (const auto& b : p.blowups) extra += b.chain_length;
  const std::size_t rank = t + extra;

  IntMat gram(rank, rank);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) gram(i, j) = p.toric.lattice.gram(i, j);
  for (std::size_t i = t; i < rank; ++i) gram(i, i) = -1;

  std::vector<std::string> labels(rank);
  for (std::size_t i = 0; i < t; ++i) labels[i] = p.toric.lattice.basis_labels[i];
  std::size_t col = t;
  p.chain_columns.resize(p.blowups.size());
  for (std::size_t j = 0; j < p.blowups.size(); ++j) {
    for (std::size_t k = 0; k < p.blowups[j].chain_length; ++k) {
      labels[col] = "E" + std::to_string(j + 1) +
                    (p.blowups[j].chain_length > 1 ? "_" + std::to_string(k + 1) : "");
      p.chain_columns[j].push_back(col);
      ++col;
    }
  }
  p.pic = IntLattice(gram, labels);

  // Boundary classes: strict transforms lose every chain class over them.
  p.boundary.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    ClassVec d(rank, Int(0));
    for (std::size_t s = 0; s < t; ++s) d[s] = p.toric.boundary_classes[i][s];
    for (std::size_t j = 0; j < p.blowups.size(); ++j) {
      if (p.blowups[j].component != i) continue;
      for (std::size_t c : p.chain_columns[j]) d[c] = -1;
    }
    p.boundary[i] = std::move(d);
  }
  ClassVec k(rank, Int(0));
  for (const auto& d : p.boundary) k = vec_sub(k, d);
  p.canonical = std::move(k);

  Signature sig = signature(p.pic.gram);
  if (sig.positive != 1 || sig.zero != 0 || sig.negative != rank - 1)
    throw std::logic_error("build_pair: Picard lattice signature is not (1, rank-1)");
  return p;
}

PairModel pair_corner_blowup(const PairModel& p, std::size_t node) {
  const std::size_t n = p.boundary_count();
  if (node >= n) throw std::invalid_argument("pair_corner_blowup: node out of range");
  Fan2D fan = corner_blowup(p.fan, node);
  std::vector<BlowupEntry> blowups = p.blowups;
  for (auto& b : blowups)
    if (b.component > node) ++b.component;
  return build_pair(std::move(fan), std::move(blowups));
}

Int interior_euler(const PairModel& p) {
  return Int(2) + Int(p.rank()) - Int(p.boundary_count());
}

bool is_fresh_generic(const PairModel& p) {
  std::set<GmElem> seen;
  for (const auto& b : p.blowups) {
    if (b.chain_length != 1) return false;
    const auto& sym = b.coordinate.symbol_exponents();
    if (b.coordinate.negative() || !b.coordinate.prime_exponents().empty() || sym.size() != 1 ||
        sym.begin()->second != 1)
      return false;
    if (!seen.insert(b.coordinate).second) return false;
  }
  return true;
}

std::vector<std::size_t> ExceptionalConfiguration::combinatorial_type(std::size_t n) const {
  std::vector<std::size_t> counts(n, 0);
  for (const auto& e : entries) counts.at(e.component)++;
  return counts;
}

ExceptionalConfiguration defining_configuration(const PairModel& p) {
  ExceptionalConfiguration cfg;
  for (std::size_t j = 0; j < p.blowups.size(); ++j) {
    for (std::size_t c : p.chain_columns[j]) {
      ClassVec v(p.rank(), Int(0));
      v[c] = 1;
      cfg.entries.push_back({p.blowups[j].component, std::move(v)});
    }
  }
  return cfg;
}

void validate_configuration(const PairModel& p, const ExceptionalConfiguration& config) {
  const std::size_t n = p.boundary_count();
  for (std::size_t a = 0; a < config.entries.size(); ++a) {
    const auto& e = config.entries[a];
    if (e.component >= n) throw std::invalid_argument("configuration: component out of range");
    if (e.cls.size() != p.rank())
      throw std::invalid_argument("configuration: class dimension mismatch");
    if (inner(p.pic, e.cls, e.cls) != -1)
      throw std::invalid_argument("configuration: class must have square -1");
    if (inner(p.pic, p.canonical, e.cls) != -1)
      throw std::invalid_argument("configuration: class must have K-degree -1");
    for (std::size_t i = 0; i < n; ++i) {
      Int want = (i == e.component) ? 1 : 0;
      if (inner(p.pic, e.cls, p.boundary[i]) != want)
        throw std::invalid_argument("configuration: wrong boundary intersections");
    }
    for (std::size_t b = a + 1; b < config.entries.size(); ++b)
      if (inner(p.pic, e.cls, config.entries[b].cls) != 0)
        throw std::invalid_argument("configuration: classes must be pairwise orthogonal");
  }
}

}  // namespace looijenga
