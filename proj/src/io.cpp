#include "looijenga/io.hpp"

namespace looijenga {

namespace {

Json int_to_json(const Int& v) {
  static const Int lo = -(Int(1) << 53), hi = Int(1) << 53;
  if (v > lo && v < hi) return Json(static_cast<long long>(v));
  return Json(v.str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

}  // namespace

Json gm_to_json(const GmElem& g) {
  Json j;
  j["sign"] = g.negative() ? -1 : 1;
  Json primes = Json::object();
  for (const auto& [p, e] : g.prime_exponents()) primes[p.str()] = rat_to_string(e);
  j["primes"] = primes;
  Json symbols = Json::object();
  for (const auto& [s, e] : g.symbol_exponents()) symbols[s] = rat_to_string(e);
  j["symbols"] = symbols;
  return j;
}

GmElem gm_from_json(const Json& j) {
  GmElem g;
  if (j.contains("sign") && j["sign"].get<int>() == -1) g = GmElem::minus_one();
  if (j.contains("primes"))
    for (auto it = j["primes"].begin(); it != j["primes"].end(); ++it) {
      Int p(it.key());
      Rat e = rat_from_string(it.value().get<std::string>());
      g = g * GmElem::from_rational(Rat(p)).pow(e);
    }
  if (j.contains("symbols"))
    for (auto it = j["symbols"].begin(); it != j["symbols"].end(); ++it) {
      Rat e = rat_from_string(it.value().get<std::string>());
      g = g * GmElem::symbol(it.key()).pow(e);
    }
  return g;
}

Json fan_to_json(const Fan2D& f) {
  Json rays = Json::array();
  for (const auto& r : f.rays) rays.push_back(Json::array({int_to_json(r[0]), int_to_json(r[1])}));
  return rays;
}

Fan2D fan_from_json(const Json& j) {
  std::vector<Ray> rays;
  for (const auto& r : j) {
    if (!r.is_array() || r.size() != 2) throw std::invalid_argument("fan: expected [x, y] pairs");
    rays.push_back({int_from_json(r[0]), int_from_json(r[1])});
  }
  return Fan2D(std::move(rays));
}

Json pair_to_json(const PairModel& p, const std::string& name) {
  Json j;
  if (!name.empty()) j["name"] = name;
  j["fan"] = fan_to_json(p.fan);
  Json blowups = Json::array();
  for (const auto& b : p.blowups) {
    Json e;
    e["component"] = b.component;
    e["coordinate"] = gm_to_json(b.coordinate);
    e["chain_length"] = b.chain_length;
    blowups.push_back(std::move(e));
  }
  j["blowups"] = blowups;
  return j;
}

PairModel pair_from_json(const Json& j) {
  if (!j.contains("fan")) throw std::invalid_argument("pair document: missing \"fan\"");
  Fan2D fan = fan_from_json(j["fan"]);
  std::vector<BlowupEntry> blowups;
  if (j.contains("blowups"))
    for (const auto& e : j["blowups"]) {
      BlowupEntry b;
      b.component = e.at("component").get<std::size_t>();
      b.coordinate = gm_from_json(e.at("coordinate"));
      b.chain_length = e.contains("chain_length") ? e["chain_length"].get<std::size_t>() : 1;
      blowups.push_back(std::move(b));
    }
  return build_pair(std::move(fan), std::move(blowups));
}

Json class_to_json(const ClassVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(int_to_json(x));
  return a;
}

ClassVec class_from_json(const Json& j) {
  ClassVec v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

Json ratvec_to_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_to_string(x));
  return a;
}

Json period_to_json(const PeriodPoint& pp) {
  Json j = Json::object();
  for (std::size_t i = 0; i < pp.labels.size(); ++i) j[pp.labels[i]] = gm_to_json(pp.values[i]);
  return j;
}

Json config_to_json(const ExceptionalConfiguration& c) {
  Json classes = Json::array();
  for (const auto& e : c.entries) {
    Json x;
    x["component"] = e.component;
    x["coords"] = class_to_json(e.cls);
    classes.push_back(std::move(x));
  }
  Json j;
  j["classes"] = classes;
  return j;
}

ExceptionalConfiguration config_from_json(const Json& j) {
  ExceptionalConfiguration c;
  for (const auto& e : j.at("classes")) {
    ExceptionalConfiguration::Entry entry;
    entry.component = e.at("component").get<std::size_t>();
    entry.cls = class_from_json(e.at("coords"));
    c.entries.push_back(std::move(entry));
  }
  return c;
}

Json verdict_to_json(const TorelliVerdict& v) {
  Json j;
  switch (v.verdict) {
    case TorelliVerdict::Value::yes:
      j["verdict"] = "yes";
      break;
    case TorelliVerdict::Value::no:
      j["verdict"] = "no";
      break;
    case TorelliVerdict::Value::undetermined:
      j["verdict"] = "undetermined-at-bound";
      break;
  }
  j["bound"] = int_to_json(v.bound);
  if (v.verdict == TorelliVerdict::Value::no) {
    j["failed_condition"] = v.failed_condition;
    if (v.witness) j["witness"] = class_to_json(*v.witness);
    if (v.period_witness) {
      j["period_expected"] = gm_to_json(v.period_witness->first);
      j["period_found"] = gm_to_json(v.period_witness->second);
    }
  }
  if (v.verdict == TorelliVerdict::Value::yes) {
    Json t = Json::array();
    for (const auto& f : v.torsor) t.push_back(int_to_json(f));
    j["torsor_invariant_factors"] = t;
  }
  return j;
}

Json matrix_to_json(const IntMat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMat matrix_from_json(const Json& j) {
  const std::size_t rows = j.size();
  if (rows == 0) return IntMat();
  const std::size_t cols = j[0].size();
  IntMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) throw std::invalid_argument("matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = int_from_json(j[i][c]);
  }
  return m;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace looijenga
