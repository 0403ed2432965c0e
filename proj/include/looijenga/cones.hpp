#pragma once

#include "looijenga/pair.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace looijenga {

// Outcome of an exact cone-membership test; on failure the violating class is
// returned as a machine-checkable certificate.
struct ConeCheck {
  bool ok = false;
  std::optional<ClassVec> certificate;
  std::string reason;

  static ConeCheck pass() { return {true, std::nullopt, ""}; }
  static ConeCheck fail(ClassVec cert, std::string why) {
    return {false, std::move(cert), std::move(why)};
  }
};

class ConeOracle;

// A class certified ample on the generic deformation (interior of C++_D),
// built as N * (pullback of a toric ample) minus descending-weight chain
// corrections; throws when no candidate certifies within the budget.
ClassVec certified_ample(const PairModel& p);

// Membership oracle for the positive cone, the interior of C++_D, the nef
// cone (given oriented root walls), Zariski decomposition and the Tits cone.
// Construction certifies an ample-on-the-generic-deformation base class
// (interior of C++_D) by segment wall-crossing from the pulled-back toric
// ample; throws if no candidate certifies within the iteration budget.
class ConeOracle {
 public:
  explicit ConeOracle(PairModel pair);

  const PairModel& pair() const { return pair_; }
  const ClassVec& ample() const { return ample_; }
  const ClassVec& nef_base() const { return base_; }

  bool in_positive_cone(const RatVec& x) const;

  // Interior of C++_D: x^2 > 0, x.[D_i] > 0, x.E > 0 for every E with
  // E^2 = K.E = -1 effective. The infinitely many E-conditions reduce to the
  // walls meeting the segment [ample, x]; bound_scale widens the enumeration
  // (soundness regression hook). With enum_cap set, attempts whose wall
  // enumeration bound exceeds the cap fail fast with a "cap" reason, which
  // keeps witness searches cheap; a capped failure is never a certificate.
  ConeCheck interior_cpp_d(const RatVec& x, int bound_scale = 1,
                           const Int* enum_cap = nullptr) const;

  // Interior-of-nef test: interior_cpp_d plus strict positivity against the
  // supplied oriented (-2)-walls (the Phi_Y-effective classes).
  ConeCheck ample_test(const RatVec& x, const std::vector<ClassVec>& root_walls,
                       int bound_scale = 1) const;

  // Upper bound for |v.ample| over classes v of square v_sq < 0 whose wall
  // meets the segment [ample, x].
  Int segment_bound(const RatVec& x, const Int& v_sq_neg) const;

  // All E with E^2 = K.E = -1 and E.ample = c (cached, effective classes).
  std::vector<ClassVec> minus_one_classes(const Int& c) const;

  struct Zariski {
    RatVec positive;                              // P, nef against the inputs
    std::vector<std::pair<ClassVec, Rat>> negative;  // (N_i, a_i), a_i >= 0
  };
  // Unique decomposition x = P + N against the candidate irreducible negative
  // classes; boundary classes are always included as candidates.
  Zariski zariski_decompose(const RatVec& x, const std::vector<ClassVec>& negatives) const;

  struct TitsResult {
    enum class Verdict { yes, no, unknown } verdict = Verdict::unknown;
    bool bound_dependent = true;  // false when the answer holds at every bound
    Int bound;
    std::optional<RatVec> separator;  // dual certificate for "no"
  };
  // Membership of x in closure(NE(Y_generic) + <D_1..D_n>), semidecided at the
  // given enumeration bound; monotone in the bound.
  TitsResult tits_membership(const RatVec& x, const Int& bound) const;

  // Oriented internal (-2)-walls visible without period data: differences of
  // chain classes over coincident blowup points (earlier minus later).
  const std::vector<ClassVec>& structural_root_walls() const { return structural_walls_; }

  // Effectivity orientation of a period-trivial root: +1 when alpha is the
  // effective one of ±alpha, -1 for its negative, via the nef base pairing or
  // the blowup order for chain-difference roots. Throws when undecidable.
  int root_orientation(const ClassVec& alpha) const;

 private:
  ConeCheck wall_check(const RatVec& x, int bound_scale, bool from_nef_base,
                       const Int* enum_cap = nullptr) const;

  PairModel pair_;
  ClassVec ample_;
  ClassVec base_;  // pullback of a toric ample class (nef and big)
  std::vector<ClassVec> structural_walls_;
  std::vector<std::vector<std::size_t>> coincidence_groups_;  // pic columns, chain order
  std::optional<SquareEnumerator> ample_enum_, base_enum_;

  mutable std::mutex cache_mutex_;
  mutable std::map<Int, std::vector<ClassVec>> minus_one_cache_;
};

}  // namespace looijenga
