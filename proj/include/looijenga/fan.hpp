#pragma once

#include "looijenga/lattice.hpp"

#include <array>
#include <vector>

namespace looijenga {

using Ray = std::array<Int, 2>;

inline Int det2(const Ray& a, const Ray& b) { return a[0] * b[1] - a[1] * b[0]; }

// Smooth complete 2-dimensional fan, rays in counterclockwise cyclic order.
// Invariants: n >= 3, every consecutive pair a positively oriented basis
// (det = +1), total winding exactly one turn.
struct Fan2D {
  std::vector<Ray> rays;

  explicit Fan2D(std::vector<Ray> r);
  std::size_t size() const { return rays.size(); }
};

// Self-intersection sequence d_i from v_{i-1} + v_{i+1} = -d_i v_i.
std::vector<Int> selfintersections(const Fan2D& f);

// Fan with the given self-intersection sequence, from v_1=(1,0), v_2=(0,1);
// throws "unrealizable sequence" when propagation fails to close up with
// winding one.
Fan2D fan_from_selfintersections(const std::vector<Int>& d);

// Insert the ray v_i + v_{i+1} between positions i and i+1 (indices mod n).
Fan2D corner_blowup(const Fan2D& f, std::size_t i);

// Picard lattice of the toric surface: rank n-2 with basis the classes of the
// first n-2 boundary divisors, plus all n boundary classes in that basis.
struct ToricPic {
  IntLattice lattice;
  std::vector<ClassVec> boundary_classes;  // n entries
  // Presentation data 0 -> M -> Z^n -> Pic -> 0: the two relation columns
  // (images of a basis of M) and the reduction of each unit vector.
  IntMat relations;  // n x 2
};

ToricPic toric_pic(const Fan2D& f);

}  // namespace looijenga
