#include "looijenga/examples.hpp"
#include "looijenga/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace looijenga;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

Int effective_bound(const PairModel& p, std::optional<long long> flag) {
  if (flag) return Int(*flag);
  if (const char* env = std::getenv("LOOIJENGA_BOUND")) return Int(env);
  return PairContext::default_bound(p);
}

BoundaryMarking marking_from_document(const Json& doc, std::size_t n) {
  if (!doc.contains("marking")) return BoundaryMarking::canonical(n);
  BoundaryMarking m;
  for (const auto& g : doc["marking"]) m.points.push_back(gm_from_json(g));
  if (m.points.size() != n)
    throw std::invalid_argument("marking must have one point per boundary component");
  return m;
}

int cmd_analyze(const std::string& path, std::optional<long long> bound_flag) {
  Json doc = read_json_file(path);
  PairModel p = pair_from_json(doc);
  PairContext ctx(p, effective_bound(p, bound_flag));

  Json report;
  report["rank"] = p.rank();
  report["boundary_components"] = p.boundary_count();
  Json squares = Json::array();
  for (std::size_t i = 0; i < p.boundary_count(); ++i)
    squares.push_back(static_cast<long long>(p.boundary_square(i)));
  report["boundary_squares"] = squares;
  report["canonical_square"] = static_cast<long long>(inner(p.pic, p.canonical, p.canonical));
  report["interior_euler"] = static_cast<long long>(interior_euler(p));
  report["bound"] = static_cast<long long>(ctx.bound());
  report["roots_at_bound"] = ctx.roots().roots.size();
  report["roots_complete"] = ctx.roots().complete;
  std::size_t undetermined = 0;
  for (const auto& r : ctx.roots().roots)
    if (!r.certified) ++undetermined;
  report["roots_undetermined"] = undetermined;
  if (ctx.generic_certain())
    report["generic"] = "yes";
  else if (!ctx.generic_at_bound())
    report["generic"] = "no";
  else
    report["generic"] = "undetermined-at-bound";
  Json torsor = Json::array();
  for (const auto& f : torsor_group(p)) torsor.push_back(static_cast<long long>(f));
  report["torsor_invariant_factors"] = torsor;
  ClassVec d_total(p.rank(), Int(0));
  for (const auto& d : p.boundary) d_total = vec_add(d_total, d);
  if (inner(p.pic, d_total, d_total) == 0) {
    bool fibers = true;
    for (const auto& d : p.boundary)
      if (inner(p.pic, d_total, d) != 0) fibers = false;
    if (fibers) report["mw_rank"] = static_cast<long long>(mw_rank(p));
  }
  std::cout << dump_canonical(report);
  return 0;
}

int cmd_roots(const std::string& path, std::optional<long long> bound_flag) {
  Json doc = read_json_file(path);
  PairModel p = pair_from_json(doc);
  PairContext ctx(p, effective_bound(p, bound_flag));
  Json out;
  out["bound"] = static_cast<long long>(ctx.bound());
  out["complete"] = ctx.roots().complete;
  Json roots = Json::array();
  for (const auto& r : ctx.roots().roots) {
    Json e;
    e["class"] = class_to_json(r.cls);
    e["status"] = r.certified ? "certified" : "undetermined-at-bound";
    e["period_trivial"] = unmarked_value(p, r.cls).is_one();
    roots.push_back(std::move(e));
  }
  out["roots"] = roots;
  std::cout << dump_canonical(out);
  return 0;
}

int cmd_period(const std::string& path) {
  Json doc = read_json_file(path);
  PairModel p = pair_from_json(doc);
  BoundaryMarking m = marking_from_document(doc, p.boundary_count());
  Json out;
  out["marked"] = period_to_json(marked_period(p, m));
  UnmarkedPeriod up = unmarked_period(p);
  Json unmarked = Json::array();
  for (std::size_t i = 0; i < up.basis.size(); ++i) {
    Json e;
    e["class"] = class_to_json(up.basis[i]);
    e["value"] = gm_to_json(up.values[i]);
    unmarked.push_back(std::move(e));
  }
  out["unmarked_on_dperp"] = unmarked;
  std::cout << dump_canonical(out);
  return 0;
}

int cmd_reconstruct(const std::string& fan_path, const std::string& config_path,
                    const std::string& phi_path) {
  Json fan_doc = read_json_file(fan_path);
  Fan2D fan = fan_from_json(fan_doc.contains("fan") ? fan_doc["fan"] : fan_doc);
  Json config = read_json_file(config_path);
  std::vector<std::size_t> components;
  for (const auto& c : config.at("components")) components.push_back(c.get<std::size_t>());
  Json phi = read_json_file(phi_path);
  std::vector<GmElem> phi_toric, phi_exc;
  for (const auto& g : phi.at("toric")) phi_toric.push_back(gm_from_json(g));
  for (const auto& g : phi.at("exceptional")) phi_exc.push_back(gm_from_json(g));

  Reconstruction rec = reconstruct(fan, components, phi_toric, phi_exc);
  Json out = pair_to_json(rec.pair);
  Json marking = Json::array();
  for (const auto& pt : rec.marking.points) marking.push_back(gm_to_json(pt));
  out["marking"] = marking;
  std::cout << dump_canonical(out);
  return 0;
}

int cmd_torelli(const std::string& path_a, const std::string& path_b, const std::string& map_path,
                bool weak, std::optional<long long> bound_flag) {
  PairModel a = pair_from_json(read_json_file(path_a));
  PairModel b = pair_from_json(read_json_file(path_b));
  IntMat m = matrix_from_json(read_json_file(map_path));
  if (m.rows() != b.rank() || m.cols() != a.rank())
    throw std::invalid_argument("map has wrong dimensions for the two lattices");
  LatticeIsometry mu = LatticeIsometry::make(m, a.pic, b.pic);
  PairContext ca(a, effective_bound(a, bound_flag));
  PairContext cb(b, effective_bound(b, bound_flag));
  Json out;
  TorelliVerdict verdict;
  if (weak) {
    WeakTorelliResult res = weak_torelli(ca, cb, mu);
    verdict = res.verdict;
    out = verdict_to_json(verdict);
    if (res.g) {
      Json word = Json::array();
      for (const auto& alpha : res.g->word) word.push_back(class_to_json(alpha));
      out["weyl_word"] = word;
      out["weyl_matrix"] = matrix_to_json(res.g->matrix.matrix);
    }
  } else {
    verdict = check_global_torelli(ca, cb, mu);
    out = verdict_to_json(verdict);
  }
  std::cout << dump_canonical(out);
  return verdict.verdict == TorelliVerdict::Value::yes ? 0 : 1;
}

int cmd_mutate(const std::string& path, const std::string& config_path) {
  PairModel p = pair_from_json(read_json_file(path));
  ExceptionalConfiguration config = config_from_json(read_json_file(config_path));
  MutationResult res = mutate(p, config);
  Json out = pair_to_json(res.pair);
  Json marking = Json::array();
  for (const auto& pt : res.marking.points) marking.push_back(gm_to_json(pt));
  out["marking"] = marking;
  out["basis_map"] = matrix_to_json(res.map.matrix);
  std::cout << dump_canonical(out);
  return 0;
}

int cmd_examples(const std::string& name) {
  try {
    PairModel p = builtin_example(name);
    std::cout << dump_canonical(pair_to_json(p, name));
    return 0;
  } catch (const std::invalid_argument&) {
    std::cerr << "unknown example \"" << name << "\"; available:\n";
    for (const auto& n : builtin_example_names()) std::cerr << "  " << n << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with Looijenga pairs"};
  app.require_subcommand(1);

  std::string path, path_b, map_path, config_path, fan_path, phi_path, name;
  std::optional<long long> bound;
  bool weak = false;

  auto* analyze = app.add_subcommand("analyze", "lattice, Euler and root report");
  analyze->add_option("file", path)->required();
  analyze->add_option("--bound", bound, "root enumeration bound");

  auto* roots = app.add_subcommand("roots", "bounded root fragment with certification flags");
  roots->add_option("file", path)->required();
  roots->add_option("--bound", bound);

  auto* period = app.add_subcommand("period", "marked and unmarked period points");
  period->add_option("file", path)->required();

  auto* rec = app.add_subcommand("reconstruct", "pair from a period point");
  rec->add_option("--fan", fan_path)->required();
  rec->add_option("--config", config_path)->required();
  rec->add_option("--phi", phi_path)->required();

  auto* torelli = app.add_subcommand("torelli", "global/weak Torelli decision");
  torelli->add_option("fileA", path)->required();
  torelli->add_option("fileB", path_b)->required();
  torelli->add_option("--map", map_path)->required();
  torelli->add_flag("--weak", weak);
  torelli->add_option("--bound", bound);

  auto* mutate_cmd = app.add_subcommand("mutate", "change of exceptional configuration");
  mutate_cmd->add_option("file", path)->required();
  mutate_cmd->add_option("--config", config_path)->required();

  auto* examples = app.add_subcommand("examples", "emit a built-in example document");
  examples->add_option("name", name)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(path, bound);
    if (app.got_subcommand(roots)) return cmd_roots(path, bound);
    if (app.got_subcommand(period)) return cmd_period(path);
    if (app.got_subcommand(rec)) return cmd_reconstruct(fan_path, config_path, phi_path);
    if (app.got_subcommand(torelli)) return cmd_torelli(path, path_b, map_path, weak, bound);
    if (app.got_subcommand(mutate_cmd)) return cmd_mutate(path, config_path);
    if (app.got_subcommand(examples)) return cmd_examples(name);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
