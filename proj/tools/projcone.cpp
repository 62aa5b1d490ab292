#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "projcone/boxgeom.hpp"
#include "projcone/btcone.hpp"
#include "projcone/errors.hpp"
#include "projcone/flow.hpp"
#include "projcone/flower.hpp"
#include "projcone/json_io.hpp"
#include "projcone/refuter.hpp"
#include "projcone/scan.hpp"

namespace {

using namespace projcone;

constexpr long kDefaultMcap = 1L << 20;

long resolve_mcap(long flag_value, bool flag_given) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("PROJCONE_MCAP")) {
    std::string text(env);
    if (!text.empty()) {
      try {
        size_t used = 0;
        long value = std::stol(text, &used);
        if (used == text.size() && value > 0) return value;
      } catch (const std::exception&) {
      }
      throw DomainError("PROJCONE_MCAP must be a positive integer");
    }
  }
  return kDefaultMcap;
}

void write_output(const std::string& path, const nlohmann::json& j) {
  if (!path.empty()) save_json_file(path, j);
}

int cmd_classify(const std::string& ineq_path) {
  ProjectionInequality ineq = inequality_from_json(load_json_file(ineq_path));
  if (!is_fnc(ineq).is_fnc) {
    std::cout << "not-FNC\n";
    return 20;
  }
  if (auto comb = in_bt_cone(ineq)) {
    std::cout << "BT\n" << combination_to_json(*comb).dump(2) << "\n";
    return 0;
  }
  std::cout << "NC\\BT\n";
  return 10;
}

int cmd_refute(const std::string& ineq_path, const std::string& methods,
               int tmax, long mcap, const std::string& out_path) {
  ProjectionInequality ineq = inequality_from_json(load_json_file(ineq_path));
  PipelineOptions options;
  options.mcap = mcap;
  options.t_radius = tmax;
  if (!methods.empty()) {
    options.allow_flower = false;
    options.allow_skeleton = false;
    options.allow_unionbox = false;
    options.allow_hybrid = false;
    options.allow_staircase = false;
    std::stringstream ss(methods);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name == "flower") {
        options.allow_flower = true;
      } else if (name == "skeleton") {
        options.allow_skeleton = true;
      } else if (name == "unionbox") {
        options.allow_unionbox = true;
      } else if (name == "hybrid") {
        options.allow_hybrid = true;
      } else if (name == "staircase") {
        options.allow_staircase = true;
      } else {
        throw DomainError("unknown method: " + name);
      }
    }
  }
  auto report = refute_pipeline(ineq, options);
  if (!report) {
    std::cout << "no refutation found\n";
    return 30;
  }
  nlohmann::json j = report_to_json(*report);
  std::cout << j.dump(2) << "\n";
  write_output(out_path, j);
  return 0;
}

int cmd_membership(const std::string& pi_path, const std::string& out_path) {
  LogProjectionVector pi = pi_from_json(load_json_file(pi_path));
  MembershipResult result = flower_from_pi(pi);
  if (result.flower) {
    nlohmann::json j = flower_to_json(*result.flower);
    std::cout << j.dump(2) << "\n";
    write_output(out_path, j);
    return 0;
  }
  nlohmann::json j = inequality_to_json(*result.certificate);
  std::cout << j.dump(2) << "\n";
  write_output(out_path, j);
  return 10;
}

int cmd_flower_pi(const std::string& flower_path, const std::string& out_path) {
  Flower flower = flower_from_json(load_json_file(flower_path));
  nlohmann::json j = pi_to_json(pi_from_flower(flower));
  std::cout << j.dump(2) << "\n";
  write_output(out_path, j);
  return 0;
}

int cmd_volume(const std::string& object_path, const std::string& subset) {
  BoxUnion u = box_union_from_json(load_json_file(object_path));
  if (!subset.empty()) {
    u = project(u, parse_axis_set(subset, u.dimension));
  }
  std::cout << rational_str(volume(u)) << "\n";
  return 0;
}

int cmd_evaluate(const std::string& ineq_path, const std::string& object_path) {
  ProjectionInequality ineq = inequality_from_json(load_json_file(ineq_path));
  BoxUnion u = box_union_from_json(load_json_file(object_path));
  EvalResult result = evaluate_inequality(ineq, u);
  const char* word = result.status == EvalStatus::Holds    ? "holds"
                     : result.status == EvalStatus::Tight ? "tight"
                                                          : "violated";
  std::cout << word << " " << rational_str(result.margin) << "\n";
  return 0;
}

int cmd_scan(const ScanJob& job) {
  ScanLedger ledger = run_scan(job);
  std::cout << ledger_to_json_string(ledger);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classifier and refuter for box-projection inequalities"};
  app.require_subcommand(1);

  std::string ineq_path;
  std::string object_path;
  std::string pi_path;
  std::string flower_path;
  std::string out_path;
  std::string methods;
  std::string subset;
  int tmax = 2;
  long mcap = kDefaultMcap;

  auto* classify = app.add_subcommand("classify", "Classify an inequality as BT, NC\\BT, or not-FNC");
  classify->add_option("ineq-file", ineq_path, "Inequality JSON file")->required();

  auto* refute = app.add_subcommand("refute", "Search for a counterexample box union");
  refute->add_option("ineq-file", ineq_path, "Inequality JSON file")->required();
  refute->add_option("--methods", methods, "Comma-separated subset of flower,skeleton,unionbox,hybrid,staircase");
  refute->add_option("--tmax", tmax, "Direction-search grid radius");
  auto* refute_mcap = refute->add_option("--mcap", mcap, "Side-length cap for witness search");
  refute->add_option("--out", out_path, "Write the report JSON here as well");

  auto* membership = app.add_subcommand("membership", "Decide whether a projection vector admits a flower");
  membership->add_option("pi-file", pi_path, "Projection vector JSON file")->required();
  membership->add_option("--out", out_path, "Write the flower or certificate JSON here as well");

  auto* flower_pi = app.add_subcommand("flower-pi", "Print the projection vector of a flower");
  flower_pi->add_option("flower-file", flower_path, "Flower JSON file")->required();
  flower_pi->add_option("--out", out_path, "Write the projection vector JSON here as well");

  auto* vol = app.add_subcommand("volume", "Exact volume of a box union (optionally of a projection)");
  vol->add_option("object-file", object_path, "Box union JSON file")->required();
  vol->add_option("--subset", subset, "Axis subset, e.g. 1,2,3");

  auto* evaluate = app.add_subcommand("evaluate", "Evaluate an inequality on a box union");
  evaluate->add_option("ineq-file", ineq_path, "Inequality JSON file")->required();
  evaluate->add_option("object-file", object_path, "Box union JSON file")->required();

  ScanJob job;
  auto* scan = app.add_subcommand("scan", "Exhaustive classify-and-refute sweep");
  scan->add_option("--n", job.dimension, "Dimension");
  scan->add_option("--bound", job.bound, "Coefficient bound c: entries in [-c, c]");
  scan->add_flag("--no-dedup", [&](size_t) { job.dedup = false; },
                 "Keep axis-permutation duplicates");
  scan->add_option("--out", job.output_path, "Ledger JSON output file");
  scan->add_option("--checkpoint", job.checkpoint_path, "Checkpoint file for resume");
  auto* scan_mcap = scan->add_option("--mcap", mcap, "Side-length cap for witness search");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return cmd_classify(ineq_path);
    if (refute->parsed())
      return cmd_refute(ineq_path, methods, tmax,
                        resolve_mcap(mcap, refute_mcap->count() > 0), out_path);
    if (membership->parsed()) return cmd_membership(pi_path, out_path);
    if (flower_pi->parsed()) return cmd_flower_pi(flower_path, out_path);
    if (vol->parsed()) return cmd_volume(object_path, subset);
    if (evaluate->parsed()) return cmd_evaluate(ineq_path, object_path);
    if (scan->parsed()) {
      job.mcap = resolve_mcap(mcap, scan_mcap->count() > 0);
      return cmd_scan(job);
    }
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
