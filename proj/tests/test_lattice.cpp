#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "looijenga/lattice.hpp"

#include <algorithm>

using namespace looijenga;

namespace {

IntLattice diag_lattice(std::vector<int> diag) {
  IntMat g(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) g(i, i) = diag[i];
  return IntLattice(g, {});
}

ClassVec cv(std::vector<int> v) {
  ClassVec r;
  for (int x : v) r.emplace_back(x);
  return r;
}

// Brute-force oracle: box search over coordinates.
std::vector<ClassVec> brute_enumerate(const IntLattice& l, const Int& s, const ClassVec& h,
                                      const Int& c_lo, const Int& c_hi, int box) {
  std::vector<ClassVec> out;
  const std::size_t n = l.rank();
  ClassVec v(n, Int(0));
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      if (inner(l, v, v) != s) return;
      Int c = inner(l, v, h);
      if (c < c_lo || c > c_hi) return;
      out.push_back(v);
      return;
    }
    for (int x = -box; x <= box; ++x) {
      v[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [&](const ClassVec& a, const ClassVec& b) {
    Int pa = inner(l, a, h), pb = inner(l, b, h);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  return out;
}

}  // namespace

TEST_CASE("inner products on the three-points lattice") {
  IntLattice l = diag_lattice({1, -1, -1, -1});
  ClassVec alpha = cv({1, -1, -1, -1});
  CHECK(inner(l, alpha, alpha) == -2);
  CHECK(inner(l, cv({0, 0, 0, 0}), alpha) == 0);
  CHECK(inner(l, alpha, cv({0, 1, 0, 0})) == 1);
  CHECK_THROWS_AS(inner(l, cv({1, 0}), alpha), std::invalid_argument);
}

TEST_CASE("smith normal form basics") {
  SUBCASE("identity") {
    SmithDecomposition sd = smith(IntMat::identity(2));
    CHECK(sd.diag == std::vector<Int>{1, 1});
  }
  SUBCASE("diag(2,3) has invariant factors (1,6)") {
    IntMat a(2, 2);
    a(0, 0) = 2;
    a(1, 1) = 3;
    SmithDecomposition sd = smith(a);
    CHECK(sd.diag == std::vector<Int>{1, 6});
    IntMat prod = sd.u * a * sd.v;
    CHECK(prod(0, 0) == 1);
    CHECK(prod(1, 1) == 6);
    CHECK(prod(0, 1) == 0);
    CHECK(prod(1, 0) == 0);
  }
  SUBCASE("zero matrix") {
    SmithDecomposition sd = smith(IntMat(2, 2));
    CHECK(sd.diag == std::vector<Int>{0, 0});
  }
  SUBCASE("u a v diagonal with divisibility chain, random-ish entries") {
    IntMat a(3, 4);
    int vals[3][4] = {{4, -6, 10, 2}, {0, 8, 12, -2}, {6, 9, 15, 3}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) a(i, j) = vals[i][j];
    SmithDecomposition sd = smith(a);
    CHECK(abs(det(sd.u)) == 1);
    CHECK(abs(det(sd.v)) == 1);
    IntMat prod = sd.u * a * sd.v;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (i != j) CHECK(prod(i, j) == 0);
    for (std::size_t i = 0; i < 3; ++i) CHECK(prod(i, i) == sd.diag[i]);
    for (std::size_t i = 0; i + 1 < 3; ++i)
      if (sd.diag[i + 1] != 0) CHECK(sd.diag[i + 1] % sd.diag[i] == 0);
  }
}

TEST_CASE("hermite normal form is canonical and unimodular") {
  IntMat a(2, 3);
  a(0, 0) = 2;
  a(0, 1) = 4;
  a(0, 2) = 4;
  a(1, 0) = -6;
  a(1, 1) = 6;
  a(1, 2) = 12;
  HermiteResult h = hermite(a);
  CHECK(h.rank == 2);
  CHECK(abs(det(h.u)) == 1);
  IntMat prod = h.u * a;
  CHECK(prod == h.h);
  // Echelon with positive pivots.
  CHECK(h.h(0, 0) > 0);
  CHECK(h.h(1, 0) == 0);
}

TEST_CASE("signature by exact symmetric reduction") {
  SUBCASE("lorentzian diag") {
    Signature s = signature(diag_lattice({1, -1, -1, -1}).gram);
    CHECK(s.positive == 1);
    CHECK(s.negative == 3);
    CHECK(s.zero == 0);
  }
  SUBCASE("hyperbolic plane needs the off-diagonal pivot trick") {
    IntMat g(2, 2);
    g(0, 1) = 1;
    g(1, 0) = 1;
    Signature s = signature(g);
    CHECK(s.positive == 1);
    CHECK(s.negative == 1);
    CHECK(s.zero == 0);
  }
  SUBCASE("degenerate block") {
    IntMat g(3, 3);
    g(0, 0) = -2;
    Signature s = signature(g);
    CHECK(s.negative == 1);
    CHECK(s.zero == 2);
  }
}

TEST_CASE("orthogonal complement of the boundary of the three-points pair") {
  IntLattice l = diag_lattice({1, -1, -1, -1});
  std::vector<ClassVec> s = {cv({1, -1, 0, 0}), cv({1, 0, -1, 0}), cv({1, 0, 0, -1})};
  std::vector<ClassVec> basis = orthogonal_complement(l, s);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == cv({1, -1, -1, -1}));

  SUBCASE("empty set gives the full basis") {
    std::vector<ClassVec> full = orthogonal_complement(l, {});
    CHECK(full.size() == 4);
  }
  SUBCASE("full basis of a unimodular lattice gives the empty complement") {
    std::vector<ClassVec> all;
    for (std::size_t i = 0; i < 4; ++i) all.push_back(l.basis_vector(i));
    CHECK(orthogonal_complement(l, all).empty());
  }
  SUBCASE("saturation: quotient by span + complement has no torsion in complement directions") {
    // The complement of {2 e_1} must still be generated by primitive vectors.
    std::vector<ClassVec> gen = {cv({2, 0, 0, 0})};
    std::vector<ClassVec> comp = orthogonal_complement(l, gen);
    REQUIRE(comp.size() == 3);
    for (const auto& v : comp) {
      Int g(0);
      for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
      CHECK(g == 1);
    }
  }
}

TEST_CASE("isometry algebra") {
  IntLattice l = diag_lattice({1, -1, -1, -1});
  // Reflection-style map as raw matrix: beta + <alpha,beta> alpha.
  ClassVec alpha = cv({1, -1, -1, -1});
  IntMat m(4, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    ClassVec img = l.basis_vector(j);
    Int p = inner(l, alpha, img);
    img = vec_add(img, vec_scale(p, alpha));
    for (std::size_t i = 0; i < 4; ++i) m(i, j) = img[i];
  }
  LatticeIsometry s = LatticeIsometry::make(m, l, l);
  LatticeIsometry id = LatticeIsometry::identity(l);
  CHECK(s.compose(s) == id);
  CHECK(s.inverse() == s);
  // Associativity on a triple product.
  CHECK(s.compose(s.compose(s)) == s.compose(s).compose(s));
  // Form preservation is part of make(); a non-isometry must throw.
  IntMat bad = IntMat::identity(4);
  bad(0, 0) = 2;
  CHECK_THROWS_AS(LatticeIsometry::make(bad, l, l), std::invalid_argument);
}

TEST_CASE("enumerate_with_square matches the brute-force oracle") {
  SUBCASE("square -2 orthogonal slice of the three-points lattice") {
    IntLattice l = diag_lattice({1, -1, -1, -1});
    ClassVec h = cv({3, -1, -1, -1});
    auto fast = enumerate_with_square(l, Int(-2), h, Int(0), Int(0));
    auto slow = brute_enumerate(l, Int(-2), h, Int(0), Int(0), 5);
    CHECK(fast == slow);
    // Frozen from the oracle: the three E_i - E_j pairs besides +-alpha.
    CHECK(fast.size() == 8);
    CHECK(std::find(fast.begin(), fast.end(), cv({1, -1, -1, -1})) != fast.end());
    CHECK(std::find(fast.begin(), fast.end(), cv({-1, 1, 1, 1})) != fast.end());
    CHECK(std::find(fast.begin(), fast.end(), cv({0, 1, -1, 0})) != fast.end());
  }
  SUBCASE("square -1 on diag(1,-1), frozen from the oracle") {
    IntLattice l = diag_lattice({1, -1});
    ClassVec h = cv({2, -1});
    auto fast = enumerate_with_square(l, Int(-1), h, Int(1), Int(1));
    auto slow = brute_enumerate(l, Int(-1), h, Int(1), Int(1), 6);
    CHECK(fast == slow);
    REQUIRE(fast.size() == 1);
    CHECK(fast[0] == cv({0, 1}));
  }
  SUBCASE("empty range") {
    IntLattice l = diag_lattice({1, -1});
    CHECK(enumerate_with_square(l, Int(-1), cv({1, 0}), Int(1), Int(0)).empty());
  }
  SUBCASE("wider scans agree with the oracle") {
    IntLattice l = diag_lattice({1, -1, -1});
    ClassVec h = cv({2, -1, -1});
    for (int s : {-1, -2, 0, 2}) {
      auto fast = enumerate_with_square(l, Int(s), h, Int(-4), Int(4));
      auto slow = brute_enumerate(l, Int(s), h, Int(-4), Int(4), 7);
      CHECK(fast == slow);
    }
  }
  SUBCASE("every output satisfies the defining equations") {
    IntLattice l = diag_lattice({1, -1, -1, -1});
    ClassVec h = cv({5, -2, -1, -1});
    auto out = enumerate_with_square(l, Int(-2), h, Int(-3), Int(6));
    for (const auto& v : out) {
      CHECK(inner(l, v, v) == -2);
      Int c = inner(l, v, h);
      CHECK(c >= -3);
      CHECK(c <= 6);
    }
    CHECK(out == brute_enumerate(l, Int(-2), h, Int(-3), Int(6), 8));
  }
  SUBCASE("h with nonpositive square is rejected") {
    IntLattice l = diag_lattice({1, -1});
    CHECK_THROWS_AS(enumerate_with_square(l, Int(0), cv({0, 1}), Int(0), Int(0)),
                    std::invalid_argument);
  }
}

TEST_CASE("enumerate_definite finds the finite root set") {
  IntMat g(2, 2);
  g(0, 0) = -2;
  g(0, 1) = 1;
  g(1, 0) = 1;
  g(1, 1) = -2;  // A_2, negated
  auto roots = enumerate_definite(g, Int(-2));
  CHECK(roots.size() == 6);
  CHECK(enumerate_definite(g, Int(-1)).empty());
}
