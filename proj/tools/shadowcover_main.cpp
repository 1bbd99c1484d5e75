// shadowcover: convex-body shadow covering experiments from the shell.
//
// Exit codes: 0 when the queried relation holds (or the computation
// succeeded), 1 when a covering/containment query fails, 2 on input or
// usage errors. Reports are JSON with sorted keys and 12-significant-
// digit floats so pipelines can diff them byte for byte.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "shadowcover/body_io.hpp"
#include "shadowcover/repro.hpp"

namespace sc = shadowcover;
using nlohmann::json;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitError = 2;

json witness_json(const sc::ContainmentWitness& w) {
  json j;
  j["feasible"] = w.feasible;
  j["margin"] = sc::json_num(w.margin);
  json t = json::array();
  for (double x : w.translation) t.push_back(sc::json_num(x));
  j["translation"] = std::move(t);
  if (!w.feasible) {
    json v = json::array();
    for (double x : w.violated_normal) v.push_back(sc::json_num(x));
    j["violated_normal"] = std::move(v);
    j["deficit"] = sc::json_num(w.deficit);
  }
  j["tolerance"] = sc::json_num(sc::tolerances().feasibility);
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_covering(const std::string& kfile, const std::string& lfile, int codim,
                 int dirs, std::uint64_t seed, bool refine, const std::string& csv) {
  sc::Body K = sc::load_body(kfile);
  sc::Body L = sc::load_body(lfile);
  sc::CoveringReport rep = sc::covering_sweep(K, L, codim, dirs, seed, refine);
  emit(sc::to_json(rep));
  if (!csv.empty()) {
    std::ofstream out(csv);
    if (!out) throw sc::BadParameter("cannot write csv file: " + csv);
    out << sc::to_csv(rep);
  }
  return rep.all_covered ? kExitHolds : kExitFails;
}

int cmd_contain(const std::string& kfile, const std::string& lfile) {
  sc::Body K = sc::load_body(kfile);
  sc::Body L = sc::load_body(lfile);
  sc::ContainmentWitness w = sc::translate_into(K, L);
  emit(witness_json(w));
  return w.feasible ? kExitHolds : kExitFails;
}

int cmd_dilate(const std::string& kfile, const std::string& lfile) {
  sc::Body K = sc::load_body(kfile);
  sc::Body L = sc::load_body(lfile);
  sc::DilateResult r = sc::min_cover_dilate(K, L);
  json j;
  j["lambda"] = sc::json_num(r.lambda);
  json t = json::array();
  for (double x : r.translation) t.push_back(sc::json_num(x));
  j["translation"] = std::move(t);
  j["tolerance"] = sc::json_num(sc::tolerances().feasibility);
  emit(j);
  return kExitHolds;
}

int cmd_mixed(const std::string& kfile, const std::string& lfile) {
  sc::Body K = sc::load_body(kfile);
  sc::Body L = sc::load_body(lfile);
  sc::SteinerCoefficients scoef = sc::steiner_fit(K, L);
  json j;
  j["n"] = scoef.n;
  json vals = json::array();
  for (double v : scoef.values) vals.push_back(sc::json_num(v));
  j["values"] = std::move(vals);
  j["cross_check_base_height"] = sc::json_num(sc::base_height_mixed(K, L));
  j["tolerance"] = sc::json_num(1e-7);
  emit(j);
  return kExitHolds;
}

int cmd_optimize(const std::string& kfile, const std::string& tfile,
                 const std::string& csv) {
  sc::Body K = sc::load_body(kfile);
  sc::Body T = sc::load_body(tfile);
  sc::InterpFamily fam = sc::interp_family(K, T);
  sc::InterpOptimum opt = sc::optimize_interp(K, T);
  json j;
  json poly = json::array();
  for (double c : fam.poly) poly.push_back(sc::json_num(c));
  j["poly"] = std::move(poly);
  j["derivative_at_one"] = sc::json_num(fam.derivative_at_one());
  j["t_star"] = sc::json_num(opt.t_star);
  j["value"] = sc::json_num(opt.value);
  j["value_ratio_to_target"] = sc::json_num(opt.value / T.volume());
  j["tolerance"] = sc::json_num(1e-7);
  emit(j);
  if (!csv.empty()) {
    std::ofstream out(csv);
    if (!out) throw sc::BadParameter("cannot write csv file: " + csv);
    out << "t,volume,ratio_to_target\n";
    char buf[64];
    const double vt = T.volume();
    for (int g = 0; g <= 200; ++g) {
      const double t = g / 200.0;
      const double v = fam.eval(t);
      std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g\n", t, v, v / vt);
      out << buf;
    }
  }
  return kExitHolds;
}

int cmd_bounds(int n, int d) {
  emit(sc::to_json(sc::bound_report(n, d)));
  return kExitHolds;
}

int cmd_paper_repro(std::uint64_t seed, const std::string& out_path) {
  sc::ReproReport rep = sc::run_paper_repro(seed);
  json j = sc::to_json(rep);
  emit(j);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw sc::BadParameter("cannot write report file: " + out_path);
    out << j.dump(2) << "\n";
  }
  for (const sc::ReproItem& it : rep.items)
    std::cerr << (it.pass ? "PASS " : "FAIL ") << it.id << ": computed "
              << it.computed_value << " vs " << it.paper_value << " (tol "
              << it.tolerance << (it.relative ? ", relative" : "") << ")\n";
  return rep.all_pass ? kExitHolds : kExitFails;
}

int cmd_make_body(const std::string& kind, int n, int count, std::uint64_t seed,
                  const std::string& out_path) {
  sc::Body b;
  if (kind == "standard_simplex") b = sc::make_standard_simplex(n);
  else if (kind == "regular_simplex") b = sc::make_regular_simplex(n);
  else if (kind == "cube") b = sc::make_cube(n);
  else if (kind == "cross_polytope") b = sc::make_cross_polytope(n);
  else if (kind == "cap_body") b = sc::make_cap_body(n);
  else if (kind == "ball") b = sc::make_ball_approx(n, count, seed);
  else if (kind == "random") b = sc::make_random_polytope(n, count, seed);
  else throw sc::BadParameter("unknown body kind: " + kind);
  if (out_path.empty())
    emit(sc::body_to_json(b));
  else
    sc::save_body(b, out_path);
  return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
  sc::apply_tolerance_env();

  CLI::App app{"shadow covering toolkit for convex polytopes"};
  app.require_subcommand(1);

  std::string kfile, lfile, csv, out_path, kind = "cube";
  int codim = 1, dirs = 500, n = 3, d = 1, count = 64;
  std::uint64_t seed = 1;
  bool refine = false;

  auto* covering = app.add_subcommand("covering", "sampled projection-covering sweep");
  covering->add_option("K", kfile, "body json for the covered side")->required();
  covering->add_option("L", lfile, "body json for the covering side")->required();
  covering->add_option("--codim", codim, "projection codimension d");
  covering->add_option("--dirs", dirs, "number of sampled directions/frames");
  covering->add_option("--seed", seed, "sampling seed");
  covering->add_flag("--refine", refine, "subdivide around low-margin directions");
  covering->add_option("--csv", csv, "also dump per-direction verdicts as csv");

  auto* contain = app.add_subcommand("contain", "does a translate of K fit inside L?");
  contain->add_option("K", kfile)->required();
  contain->add_option("L", lfile)->required();

  auto* dilate = app.add_subcommand("dilate", "minimal dilate of L covering a translate of K");
  dilate->add_option("K", kfile)->required();
  dilate->add_option("L", lfile)->required();

  auto* mixed = app.add_subcommand("mixed", "volume polynomial coefficients of K + sL");
  mixed->add_option("K", kfile)->required();
  mixed->add_option("L", lfile)->required();

  std::string opt_csv;
  auto* optimize = app.add_subcommand("optimize", "maximize V((1-t)K + tT) over t in [0,1]");
  optimize->add_option("K", kfile)->required();
  optimize->add_option("T", lfile)->required();
  optimize->add_option("--csv", opt_csv, "dump the volume-vs-t curve as csv");

  auto* bounds = app.add_subcommand("bounds", "constant table for a given (n, d)");
  bounds->add_option("--n", n, "ambient dimension")->required();
  bounds->add_option("--d", d, "projection codimension");

  auto* repro = app.add_subcommand("paper-repro", "recompute every reported value");
  repro->add_option("--seed", seed, "direction-sampling seed");
  repro->add_option("--out", out_path, "also write the report json here");

  auto* makebody = app.add_subcommand("make-body", "emit a named body as json");
  makebody->add_option("kind", kind,
                       "standard_simplex|regular_simplex|cube|cross_polytope|cap_body|ball|random")
      ->required();
  makebody->add_option("--n", n, "ambient dimension");
  makebody->add_option("--count", count, "vertex count for ball/random");
  makebody->add_option("--seed", seed, "generator seed");
  makebody->add_option("--out", out_path, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (covering->parsed())
      return cmd_covering(kfile, lfile, codim, dirs, seed, refine, csv);
    if (contain->parsed()) return cmd_contain(kfile, lfile);
    if (dilate->parsed()) return cmd_dilate(kfile, lfile);
    if (mixed->parsed()) return cmd_mixed(kfile, lfile);
    if (optimize->parsed()) return cmd_optimize(kfile, lfile, opt_csv);
    if (bounds->parsed()) return cmd_bounds(n, d);
    if (repro->parsed()) return cmd_paper_repro(seed, out_path);
    if (makebody->parsed()) return cmd_make_body(kind, n, count, seed, out_path);
  } catch (const sc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
