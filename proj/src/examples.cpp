#include "looijenga/examples.hpp"

#include <stdexcept>

namespace looijenga {

namespace {

Fan2D p2_fan() {
  return Fan2D({{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(-1)}});
}

Fan2D f1_fan() {
  // d = (-1, 0, 1, 0).
  return fan_from_selfintersections({Int(-1), Int(0), Int(1), Int(0)});
}

GmElem named(const char* s) { return GmElem::symbol(s); }

PairModel p2_axes(bool canonical_points) {
  std::vector<BlowupEntry> blowups;
  const char* names[3] = {"a", "b", "c"};
  for (std::size_t i = 0; i < 3; ++i) {
    GmElem coord = canonical_points ? GmElem::minus_one() : named(names[i]);
    blowups.push_back({i, coord, 1});
  }
  return build_pair(p2_fan(), std::move(blowups));
}

PairModel cycle7(bool canonical_points) {
  // P^2 blown up at four nodes to a seven-ray fan with d =
  // (-2, -1, -2, -1, -1, -1, -1), then one interior blowup on each (-1).
  Fan2D fan = p2_fan();
  fan = corner_blowup(fan, 0);  // between (1,0) and (0,1)
  fan = corner_blowup(fan, 2);  // between (0,1) and (-1,-1)
  fan = corner_blowup(fan, 4);  // between (-1,-1) and (1,0)
  fan = corner_blowup(fan, 0);  // between (1,0) and the first inserted ray
  std::vector<Int> d = selfintersections(fan);
  std::vector<BlowupEntry> blowups;
  const char* names[] = {"a", "b", "c", "d", "e", "f", "g"};
  std::size_t used = 0;
  for (std::size_t i = 0; i < fan.size(); ++i) {
    for (Int s = d[i]; s > -2; --s) {
      GmElem coord = canonical_points ? GmElem::minus_one() : named(names[used]);
      ++used;
      blowups.push_back({i, coord, 1});
    }
  }
  return build_pair(std::move(fan), std::move(blowups));
}

PairModel delta_infinite() {
  // Blowing up the canonical cycle7 pair at the common point the sections
  // pass through (the marked point of the first component) produces a pair
  // with infinitely many internal (-2)-curves; only bounded root fragments
  // are ever reported for it.
  PairModel base = cycle7(true);
  std::vector<BlowupEntry> blowups = base.blowups;
  blowups.push_back({0, GmElem::minus_one(), 1});
  return build_pair(base.fan, std::move(blowups));
}

PairModel cycle8(bool canonical_points) {
  // F_1, blowups at the nodes D1^D2, D2^D3, D3^D4 and then at the node of
  // (the strict transform of) D4 with the exceptional over D3^D4; finally an
  // interior blowup on each of the four (-1)-components.
  Fan2D fan = f1_fan();
  // Components: D1(-1) D2(0) D3(1) D4(0).
  fan = corner_blowup(fan, 0);  // node D1^D2 -> [D1 Ea D2 D3 D4]
  fan = corner_blowup(fan, 2);  // node D2^D3 -> [D1 Ea D2 Eb D3 D4]
  fan = corner_blowup(fan, 4);  // node D3^D4 -> [D1 Ea D2 Eb D3 Ec D4]
  fan = corner_blowup(fan, 5);  // node Ec^D4 -> [D1 Ea D2 Eb D3 Ec Ed D4]
  std::vector<Int> d = selfintersections(fan);
  std::vector<BlowupEntry> blowups;
  const char* names[] = {"a", "b", "c", "d"};
  std::size_t used = 0;
  for (std::size_t i = 0; i < fan.size(); ++i) {
    if (d[i] != -1) continue;
    GmElem coord = canonical_points ? GmElem::minus_one() : named(names[used++]);
    blowups.push_back({i, coord, 1});
  }
  return build_pair(std::move(fan), std::move(blowups));
}

}  // namespace

PairModel builtin_example(const std::string& name) {
  if (name == "p2-axes") return p2_axes(false);
  if (name == "ye-p2-axes") return p2_axes(true);
  if (name == "f1-base") return build_pair(f1_fan(), {});
  if (name == "cycle7") return cycle7(false);
  if (name == "ye-cycle7") return cycle7(true);
  if (name == "cycle8") return cycle8(false);
  if (name == "ye-cycle8") return cycle8(true);
  if (name == "delta-infinite") return delta_infinite();
  throw std::invalid_argument("unknown example: " + name);
}

std::vector<std::string> builtin_example_names() {
  return {"p2-axes", "ye-p2-axes", "f1-base",  "cycle7",
          "ye-cycle7", "cycle8",   "ye-cycle8", "delta-infinite"};
}

}  // namespace looijenga
