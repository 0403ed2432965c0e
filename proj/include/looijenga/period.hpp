#pragma once

#include "looijenga/pair.hpp"

#include <vector>

namespace looijenga {

// A divisor supported on the smooth locus of the boundary cycle, in component
// coordinates (node i-1,i at 0, node i,i+1 at infinity).
struct DivisorEntry {
  std::size_t component;
  GmElem coordinate;
  Int multiplicity;
};

// Canonical identification Pic^0(D) = G_m for a cycle of n >= 3 components:
// lambda(O_D(sum m_k z_k)) = prod z_k^{m_k}. Requires multidegree zero on
// every component. Validated against the section-patching oracle in the test
// suite; the convention makes phi(E_ij) = p_i / q_ij.
GmElem lambda_invariant(std::size_t n, const std::vector<DivisorEntry>& divisor);

// psi(lambda_1..lambda_n)(L) = prod lambda_i^{deg L|D_i}.
GmElem psi(const std::vector<GmElem>& lambda, const std::vector<Int>& degrees);

// Marking of the boundary: one point of each D_i^o.
struct BoundaryMarking {
  std::vector<GmElem> points;

  static BoundaryMarking canonical(std::size_t n);  // all points -1
};

// Homomorphism from a lattice with labelled basis into G_m.
struct PeriodPoint {
  std::vector<std::string> labels;
  std::vector<GmElem> values;

  GmElem eval(const ClassVec& coords) const;
};

// Divisor of the restriction of a class to the boundary cycle: toric part at
// the canonical points -1, exceptional part at the blowup coordinates.
std::vector<DivisorEntry> restriction_divisor(const PairModel& p, const ClassVec& v);

// Marked period point on p's own Picard basis:
// phi(L) = lambda((L|_D)^{-1} ox O_D(sum (L.D_i) p_i)).
PeriodPoint marked_period(const PairModel& p, const BoundaryMarking& marking);

// Marked period point pulled back along a marking mu of the Picard lattice:
// values on mu's source basis. Boundary preservation of mu is the caller's
// contract (the Torelli layer checks it against the reference boundary).
PeriodPoint marked_period(const PairModel& p, const BoundaryMarking& marking,
                          const LatticeIsometry& mu);

// Value of the unmarked period on a class orthogonal to every boundary
// component (independent of any marking).
GmElem unmarked_value(const PairModel& p, const ClassVec& alpha);

struct UnmarkedPeriod {
  std::vector<ClassVec> basis;  // of D^perp, canonical
  std::vector<GmElem> values;
};
UnmarkedPeriod unmarked_period(const PairModel& p);

// Boundary marking realizing a prescribed period on the toric Picard lattice:
// canonical Smith solution, any two solutions differ by the kernel of psi.
// Throws on the sign obstruction (even root of a negative element).
BoundaryMarking solve_boundary_marking(const ToricPic& tp, const std::vector<GmElem>& phibar);

struct Reconstruction {
  PairModel pair;
  BoundaryMarking marking;
  IntLattice reference;        // toric basis ++ one (-1)-generator per config class
  LatticeIsometry ref_to_pic;  // reference -> pair.pic
};

// Pair with the given toric model type and period point: solves the marking,
// places q_j = p_i * phi(E_j)^{-1}, merges coincident points into chains in
// input order. Exact round trip: the marked period of the result pulled back
// along ref_to_pic equals the input.
Reconstruction reconstruct(const Fan2D& fan, const std::vector<std::size_t>& config_components,
                           const std::vector<GmElem>& phi_toric,
                           const std::vector<GmElem>& phi_exceptional);

struct MutationResult {
  PairModel pair;
  BoundaryMarking marking;
  LatticeIsometry map;  // p.pic -> pair.pic, identifies the presentations
};

// Re-present the pair through another exceptional configuration: computes the
// marked period at the canonical marking, derives the new toric type, and
// reconstructs. Marked periods agree under `map`.
MutationResult mutate(const PairModel& p, const ExceptionalConfiguration& new_config);

}  // namespace looijenga
