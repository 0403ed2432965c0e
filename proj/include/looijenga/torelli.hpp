#pragma once

#include "looijenga/period.hpp"
#include "looijenga/roots.hpp"

#include <map>
#include <mutex>
#include <optional>

namespace looijenga {

// Wires together the pieces a pair analysis needs: the cone oracle, the
// bounded root fragment, its period-trivial (Phi_Y) part oriented and the
// chamber walls (Delta_Y at the bound). Everything is exact; root data is
// bounded and the flags say whether the bound was conclusive.
class PairContext {
 public:
  explicit PairContext(PairModel pair, std::optional<Int> root_bound = std::nullopt);

  const PairModel& pair() const { return oracle_.pair(); }
  const ConeOracle& oracle() const { return oracle_; }
  const RootDatum& roots() const { return roots_; }
  const Int& bound() const { return roots_.bound; }

  // Roots with trivial period at the bound (both signs).
  const std::vector<ClassVec>& phi_y() const { return phi_y_; }
  // Phi_Y oriented positively against the (perturbed) ample class.
  const std::vector<ClassVec>& phi_y_positive() const { return phi_y_positive_; }
  // Walls of the nef chamber among phi_y_positive (Delta_Y fragment).
  const std::vector<ClassVec>& delta_y() const { return delta_y_; }

  bool generic_at_bound() const { return phi_y_.empty(); }
  // Conclusive genericity: fresh-symbol pairs and structurally root-free
  // pairs are generic at every bound.
  bool generic_certain() const;
  bool has_undetermined_roots() const;

  // Full nef-interior test: interior of C++_D plus the period-trivial
  // (-2)-walls whose hyperplanes can meet the segment from the ample class
  // to x. The wall fragment is enlarged on demand when the segment bound
  // exceeds the context bound, so a "true" never hides an out-of-bound wall.
  ConeCheck ample_test(const RatVec& x, int bound_scale = 1) const;

  // Oriented period-trivial walls with |alpha.ample| <= b (cached).
  std::vector<ClassVec> walls_up_to(const Int& b) const;

  static Int default_bound(const PairModel& p);

 private:
  ConeOracle oracle_;
  RootDatum roots_;
  std::vector<ClassVec> phi_y_, phi_y_positive_, delta_y_;
  mutable std::mutex walls_mutex_;
  mutable std::map<Int, std::vector<ClassVec>> walls_cache_;
};

struct TorelliVerdict {
  enum class Value { yes, no, undetermined } verdict = Value::undetermined;
  int failed_condition = 0;          // 1..4 when verdict == no
  std::optional<ClassVec> witness;   // violating class
  std::optional<std::pair<GmElem, GmElem>> period_witness;
  std::vector<Int> torsor;           // invariant factors of N' when yes
  Int bound;
};

// Global Torelli decision for mu: Pic(Y1) -> Pic(Y2): boundary preservation,
// nef transport (ample image + bounded Delta comparison), exact period
// equality on D^perp.
TorelliVerdict check_global_torelli(const PairContext& p1, const PairContext& p2,
                                    const LatticeIsometry& mu);

struct WeakTorelliResult {
  std::optional<WeylElement> g;  // unique element of W_{Y1} with mu o g = f^*
  TorelliVerdict verdict;        // verdict for mu o g (or the failing precondition)
};

WeakTorelliResult weak_torelli(const PairContext& p1, const PairContext& p2,
                               const LatticeIsometry& mu);

// Monodromy membership: theta fixes every boundary class and theta(ample)
// stays ample on the generic deformation.
bool adm_membership(const PairContext& ctx, const LatticeIsometry& theta);

// Invariant factors of N' = coker(Pic -> Z^n, L -> (L.D_i)); zeros count the
// torus rank of Hom(N', G_m).
std::vector<Int> torsor_group(const PairModel& p);

// Rank of <D>^perp / <D_1,...,D_n> for anticanonical cycles with D^2 = 0.
Int mw_rank(const PairModel& p);

}  // namespace looijenga
