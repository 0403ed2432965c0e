#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "looijenga/examples.hpp"
#include "looijenga/io.hpp"

using namespace looijenga;

TEST_CASE("gm elements round trip through json") {
  std::vector<GmElem> cases = {
      GmElem::one(),
      GmElem::minus_one(),
      GmElem::from_rational(Rat(12, 35)),
      GmElem::symbol("t1") * GmElem::from_rational(Rat(-3, 2)),
      GmElem::symbol("q").pow(Rat(2, 3)) * GmElem::from_rational(Rat(5)).pow(Rat(1, 2)),
  };
  for (const auto& g : cases) {
    Json j = gm_to_json(g);
    CHECK(gm_from_json(j) == g);
  }
  Json j = gm_to_json(GmElem::from_rational(Rat(3, 2)));
  CHECK(j["sign"] == 1);
  CHECK(j["primes"]["2"] == "-1");
  CHECK(j["primes"]["3"] == "1");
}

TEST_CASE("pair documents are canonical") {
  for (const auto& name : builtin_example_names()) {
    PairModel p = builtin_example(name);
    Json doc = pair_to_json(p, name);
    std::string first = dump_canonical(doc);
    PairModel parsed = pair_from_json(Json::parse(first));
    std::string second = dump_canonical(pair_to_json(parsed, name));
    CHECK(first == second);
    CHECK(parsed.rank() == p.rank());
    CHECK(parsed.fan.rays == p.fan.rays);
  }
}

TEST_CASE("schema violations are reported") {
  CHECK_THROWS_AS(pair_from_json(Json::object()), std::invalid_argument);
  Json bad;
  bad["fan"] = Json::array({Json::array({1, 0}), Json::array({0, 1})});
  CHECK_THROWS_AS(pair_from_json(bad), std::invalid_argument);
}

TEST_CASE("matrices and classes round trip") {
  IntMat m(2, 3);
  m(0, 0) = 1;
  m(0, 2) = -7;
  m(1, 1) = Int("123456789012345678901234567890");
  IntMat back = matrix_from_json(matrix_to_json(m));
  CHECK(back == m);
  ClassVec v = {Int(3), Int(-1), Int(0)};
  CHECK(class_from_json(class_to_json(v)) == v);
}

TEST_CASE("configuration json") {
  PairModel p = builtin_example("p2-axes");
  ExceptionalConfiguration cfg = defining_configuration(p);
  ExceptionalConfiguration back = config_from_json(config_to_json(cfg));
  REQUIRE(back.entries.size() == cfg.entries.size());
  for (std::size_t i = 0; i < cfg.entries.size(); ++i) {
    CHECK(back.entries[i].component == cfg.entries[i].component);
    CHECK(back.entries[i].cls == cfg.entries[i].cls);
  }
}

TEST_CASE("period serialization uses basis labels") {
  PairModel p = builtin_example("p2-axes");
  PeriodPoint pp = marked_period(p, BoundaryMarking::canonical(3));
  Json j = period_to_json(pp);
  CHECK(j.contains("T1"));
  CHECK(j.contains("E1"));
  CHECK(gm_from_json(j["E1"]) == pp.values[1]);
}
