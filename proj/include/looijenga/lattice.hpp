#pragma once

#include "looijenga/intmat.hpp"

#include <string>
#include <vector>

namespace looijenga {

using ClassVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline RatVec to_rat(const ClassVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

ClassVec vec_add(const ClassVec& a, const ClassVec& b);
ClassVec vec_sub(const ClassVec& a, const ClassVec& b);
ClassVec vec_scale(const Int& c, const ClassVec& a);
ClassVec vec_neg(const ClassVec& a);
bool is_zero(const ClassVec& a);
RatVec rat_add(const RatVec& a, const RatVec& b);
RatVec rat_scale(const Rat& c, const RatVec& a);

// Clears denominators and divides by the content; the zero vector maps to
// itself. Used to turn a rational ray into its primitive integral generator.
ClassVec primitive_ray(const RatVec& v);

// A finitely generated free abelian group with an integer symmetric bilinear
// form, plus basis labels for reporting.
struct IntLattice {
  IntMat gram;
  std::vector<std::string> basis_labels;

  IntLattice() = default;
  IntLattice(IntMat g, std::vector<std::string> labels);

  std::size_t rank() const { return gram.rows(); }
  ClassVec basis_vector(std::size_t i) const;
};

Int inner(const IntLattice& l, const ClassVec& a, const ClassVec& b);
Rat inner_rat(const IntLattice& l, const RatVec& a, const RatVec& b);
Rat inner_rat(const IntLattice& l, const RatVec& a, const ClassVec& b);

// An integer matrix map between lattices preserving the forms; det ±1.
struct LatticeIsometry {
  IntMat matrix;  // target coords of source basis vectors, columns
  IntLattice source, target;

  static LatticeIsometry identity(const IntLattice& l);
  // Throws unless matrix is unimodular and matrix^T gram_target matrix = gram_source.
  static LatticeIsometry make(IntMat m, IntLattice src, IntLattice tgt);

  ClassVec apply(const ClassVec& v) const { return matrix.apply(v); }
  RatVec apply(const RatVec& v) const { return matrix.apply_rat(v); }
  LatticeIsometry inverse() const;
  LatticeIsometry compose(const LatticeIsometry& first) const;  // this after first
  bool operator==(const LatticeIsometry& o) const { return matrix == o.matrix; }
};

// Basis of the saturated sublattice {x : <x, s> = 0 for all s in S}, rows of
// the returned matrix, in row Hermite normal form (canonical).
std::vector<ClassVec> orthogonal_complement(const IntLattice& l, const std::vector<ClassVec>& s);

// Enumeration engine for {v : v^2 = s, <v, h> = c} with h^2 > 0 on a lattice
// of signature (1, rank-1): for fixed c the solutions live in a coset of the
// negative definite h^perp and are enumerated Fincke-Pohst style. The kernel
// basis, its pairwise reduction and the exact LDL^T factorization are
// prepared once.
class SquareEnumerator {
 public:
  SquareEnumerator(IntLattice l, ClassVec h);

  std::vector<ClassVec> solutions(const Int& s, const Int& c) const;
  const IntLattice& lattice() const { return lattice_; }

 private:
  IntLattice lattice_;
  ClassVec h_;
  Int pairing_gcd_;
  ClassVec particular_;           // <particular, h> = pairing_gcd_
  IntMat kernel_;                 // columns: basis of h^perp, reduced
  IntMat kernel_gram_;            // negative definite
  std::vector<Rat> ldlt_diag_;    // of -kernel_gram_
  std::vector<std::vector<Rat>> ldlt_lower_;
};

// All v with v^2 = s and c_lo <= <v, h> <= c_hi, sorted by pairing then
// lexicographically.
std::vector<ClassVec> enumerate_with_square(const IntLattice& l, const Int& s, const ClassVec& h,
                                            const Int& c_lo, const Int& c_hi);

// All coordinate vectors x with x^T gram x = s for a negative definite gram
// (finite set; s <= 0). Sorted lexicographically.
std::vector<ClassVec> enumerate_definite(const IntMat& gram, const Int& s);

}  // namespace looijenga
