#pragma once

#include "looijenga/cones.hpp"

#include <optional>

namespace looijenga {

// Reflection s_alpha: beta -> beta + <alpha, beta> alpha, alpha^2 = -2.
LatticeIsometry reflection(const IntLattice& l, const ClassVec& alpha);

struct RootEntry {
  ClassVec cls;
  bool certified = false;  // hyperplane shown to meet the interior of C++_D
};

// Height-bounded fragment of the root system: all alpha with alpha^2 = -2,
// alpha.[D_i] = 0 and |alpha.ample| <= bound, each with its realization flag.
struct RootDatum {
  Int bound;
  bool complete = false;  // true when no roots exist at any bound
  std::vector<RootEntry> roots;
  std::vector<ClassVec> dperp_basis;

  std::vector<ClassVec> certified_roots() const;
};

RootDatum find_roots(const ConeOracle& oracle, const Int& bound);

// Deterministic chamber-interior perturbation of the certified ample class:
// moves it off the given walls while keeping strict positivity on the checked
// inequalities (eps = 1/1000, halved as needed).
RatVec perturb_off_walls(const ConeOracle& oracle, const std::vector<ClassVec>& walls);

// Roots with trivial period value, oriented positively against the perturbed
// ample class. `period_of` must evaluate the unmarked period on a class of
// D^perp.
std::vector<ClassVec> orient_positive(const ConeOracle& oracle, const std::vector<ClassVec>& roots);

// Walls of the chamber of the phi_Y-arrangement containing the (perturbed)
// ample class: facet test by exact LP.
std::vector<ClassVec> chamber_walls(const ConeOracle& oracle,
                                    const std::vector<ClassVec>& phi_y_positive);

struct WeylElement {
  std::vector<ClassVec> word;  // reflections applied right-to-left
  LatticeIsometry matrix;

  static WeylElement identity(const IntLattice& l);
};

// Reduce x in C+ into the fundamental chamber {x.alpha >= 0 for all walls}:
// returns (w, x') with x' = w(x). wall_offset rotates the deterministic choice
// of violated wall (order-independence is a tested property).
std::pair<WeylElement, RatVec> chamber_reduce(const IntLattice& l,
                                              const std::vector<ClassVec>& walls, const RatVec& x,
                                              std::size_t wall_offset = 0);

}  // namespace looijenga
