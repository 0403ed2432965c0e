#pragma once

#include "looijenga/fan.hpp"
#include "looijenga/gm.hpp"

#include <vector>

namespace looijenga {

// One interior blowup: chain_length iterated blowups at the point of the
// boundary component with the given coordinate (successive blowups at the
// intersection point with the strict transform of the boundary, so the chain
// of exceptional curves has self-intersections -2,...,-2,-1 with the final
// (-1)-curve meeting the boundary).
struct BlowupEntry {
  std::size_t component = 0;
  GmElem coordinate;
  std::size_t chain_length = 1;
};

// A Looijenga pair presented by a toric model: fan plus interior blowups.
// Picard basis: the n-2 toric classes first, then for each blowup entry j the
// chain classes e_{j,1}, ..., e_{j,r_j} (total transforms, pairwise orthogonal
// (-1)-classes; e_{j,1} is the top exceptional curve class C_r).
struct PairModel {
  Fan2D fan;
  std::vector<BlowupEntry> blowups;

  // Derived data.
  ToricPic toric;
  IntLattice pic;
  std::vector<ClassVec> boundary;  // [D_i] in the pic basis
  ClassVec canonical;              // K with -K = sum [D_i]
  std::vector<std::vector<std::size_t>> chain_columns;  // per entry, pic basis indices

  std::size_t boundary_count() const { return fan.size(); }
  std::size_t rank() const { return pic.rank(); }
  ClassVec toric_pullback(const ClassVec& toric_class) const;
  const ClassVec& boundary_class(std::size_t i) const { return boundary.at(i); }
  Int boundary_square(std::size_t i) const;
};

PairModel build_pair(Fan2D fan, std::vector<BlowupEntry> blowups);

// Toric blowup of a pair: corner blowup of the fan at node (i, i+1), blowup
// entries re-indexed past the inserted component.
PairModel pair_corner_blowup(const PairModel& p, std::size_t node);

// 2 + rank(Pic) - n; zero exactly for toric pairs, +1 per interior blowup step.
Int interior_euler(const PairModel& p);

// True when all blowup coordinates are pairwise distinct single symbols and
// all chains have length one: such a pair is generic by construction.
bool is_fresh_generic(const PairModel& p);

// Ordered collection of interior (-1)-classes grouped by boundary component.
struct ExceptionalConfiguration {
  struct Entry {
    std::size_t component;
    ClassVec cls;
  };
  std::vector<Entry> entries;

  std::vector<std::size_t> combinatorial_type(std::size_t n) const;
};

// All chain classes of every blowup entry, top class C_r = e_{j,1} first
// within each entry; order follows the blowup list.
ExceptionalConfiguration defining_configuration(const PairModel& p);

// Checks the configuration invariants inside p's lattice: every class E has
// E^2 = K.E = -1, meets exactly its declared boundary component once, and
// distinct classes are orthogonal. Throws with the violated invariant.
void validate_configuration(const PairModel& p, const ExceptionalConfiguration& config);

}  // namespace looijenga
