#include "projcone/scan.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include "json.hpp"

#include "projcone/btcone.hpp"
#include "projcone/errors.hpp"
#include "projcone/flow.hpp"
#include "projcone/json_io.hpp"
#include "projcone/refuter.hpp"

namespace projcone {

namespace {

using nlohmann::json;

// Position maps for every axis permutation: maps[p][q] is the canonical
// position of the image of the q-th subset.
const std::vector<std::vector<int>>& permutation_maps(int n) {
  static std::map<int, std::vector<std::vector<int>>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  const auto& subsets = enumerate_subsets(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> maps;
  do {
    std::vector<int> posmap(subsets.size());
    for (size_t q = 0; q < subsets.size(); ++q) {
      AxisSet image;
      for (int axis : subsets[q].axes()) image = image.with(perm[axis - 1]);
      posmap[q] = subset_position(image, n);
    }
    maps.push_back(std::move(posmap));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return cache.emplace(n, std::move(maps)).first->second;
}

json ledger_to_json(const ScanLedger& ledger) {
  json j;
  j["enumerated"] = ledger.enumerated;
  j["canonical"] = ledger.canonical;
  j["not_fnc"] = ledger.not_fnc;
  j["bt"] = ledger.bt;
  j["nc_not_bt"] = ledger.nc_not_bt;
  j["refuted_by_method"] = json::object();
  for (const auto& [method, count] : ledger.refuted_by_method)
    j["refuted_by_method"][method] = count;
  j["resistant"] = ledger.resistant;
  return j;
}

bool ledger_from_json(const json& j, ScanLedger& ledger) {
  if (!j.is_object()) return false;
  for (const char* key :
       {"enumerated", "canonical", "not_fnc", "bt", "nc_not_bt"}) {
    if (!j.contains(key) || !j[key].is_number_integer()) return false;
  }
  if (!j.contains("refuted_by_method") || !j["refuted_by_method"].is_object())
    return false;
  if (!j.contains("resistant") || !j["resistant"].is_array()) return false;
  ledger.enumerated = j["enumerated"].get<long long>();
  ledger.canonical = j["canonical"].get<long long>();
  ledger.not_fnc = j["not_fnc"].get<long long>();
  ledger.bt = j["bt"].get<long long>();
  ledger.nc_not_bt = j["nc_not_bt"].get<long long>();
  ledger.refuted_by_method.clear();
  for (const auto& [method, count] : j["refuted_by_method"].items()) {
    if (!count.is_number_integer()) return false;
    ledger.refuted_by_method[method] = count.get<long long>();
  }
  ledger.resistant.clear();
  for (const auto& entry : j["resistant"]) {
    if (!entry.is_string()) return false;
    ledger.resistant.push_back(entry.get<std::string>());
  }
  return true;
}

void write_file_atomic(const std::string& path, const std::string& payload) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InternalError("cannot open " + tmp + " for writing");
    out << payload;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw InternalError("cannot rename " + tmp + " to " + path);
}

struct Checkpoint {
  long long raw_index = 0;
  ScanLedger ledger;
};

std::string checkpoint_payload(const ScanJob& job, long long raw_index,
                               const ScanLedger& ledger) {
  json j;
  j["job"] = {{"dimension", job.dimension},
              {"bound", job.bound},
              {"dedup", job.dedup},
              {"mcap", job.mcap}};
  j["raw_index"] = raw_index;
  j["ledger"] = ledger_to_json(ledger);
  return j.dump(2) + "\n";
}

// A checkpoint only resumes the exact same job; anything else starts fresh.
std::optional<Checkpoint> load_checkpoint(const ScanJob& job) {
  if (job.checkpoint_path.empty()) return std::nullopt;
  std::ifstream in(job.checkpoint_path, std::ios::binary);
  if (!in) return std::nullopt;
  json j;
  try {
    in >> j;
  } catch (const json::exception&) {
    return std::nullopt;
  }
  if (!j.is_object() || !j.contains("job") || !j.contains("raw_index") ||
      !j.contains("ledger"))
    return std::nullopt;
  const json& jj = j["job"];
  if (!jj.is_object() || jj.value("dimension", -1) != job.dimension ||
      jj.value("bound", -1L) != job.bound ||
      jj.value("dedup", !job.dedup) != job.dedup ||
      jj.value("mcap", -1L) != job.mcap)
    return std::nullopt;
  if (!j["raw_index"].is_number_integer()) return std::nullopt;
  Checkpoint cp;
  cp.raw_index = j["raw_index"].get<long long>();
  if (cp.raw_index < 0) return std::nullopt;
  if (!ledger_from_json(j["ledger"], cp.ledger)) return std::nullopt;
  return cp;
}

}  // namespace

bool lex_min_under_axis_permutations(const std::vector<int>& vec, int n) {
  if (n < 1 || n > 8) throw DomainError("dimension out of range for symmetry dedup");
  const auto& subsets = enumerate_subsets(n);
  if (vec.size() != subsets.size())
    throw DomainError("coefficient vector length does not match dimension");
  for (const auto& posmap : permutation_maps(n)) {
    for (size_t q = 0; q < vec.size(); ++q) {
      int image = vec[posmap[q]];
      if (image < vec[q]) return false;
      if (image > vec[q]) break;
    }
  }
  return true;
}

void enumerate_coefficient_vectors(
    int n, long bound, const std::function<bool(const std::vector<int>&)>& fn) {
  if (n < 1 || n > kMaxDimension) throw DomainError("dimension out of range");
  if (bound < 0) throw DomainError("coefficient bound must be nonnegative");
  if (bound == 0) return;
  const size_t size = enumerate_subsets(n).size();
  std::vector<int> vec(size, static_cast<int>(-bound));
  size_t nonzero = size;
  while (true) {
    if (nonzero > 0 && !fn(vec)) return;
    size_t pos = size;
    while (pos > 0) {
      --pos;
      nonzero -= (vec[pos] != 0);
      if (vec[pos] < bound) {
        ++vec[pos];
        nonzero += (vec[pos] != 0);
        break;
      }
      vec[pos] = static_cast<int>(-bound);
      nonzero += 1;  // -bound is nonzero here since bound >= 1
      if (pos == 0) return;
    }
  }
}

ScanLedger run_scan(const ScanJob& job) {
  if (job.dimension < 1 || job.dimension > 6)
    throw DomainError("scan supports dimensions 1 through 6");
  if (job.bound < 0) throw DomainError("coefficient bound must be nonnegative");

  const int n = job.dimension;
  const auto& subsets = enumerate_subsets(n);
  ScanLedger ledger;
  long long resume_from = 0;
  if (auto cp = load_checkpoint(job)) {
    ledger = std::move(cp->ledger);
    resume_from = cp->raw_index;
  }

  PipelineOptions options;
  options.mcap = job.mcap;

  auto classify = [&](const std::vector<int>& vec) {
    if (job.dedup && !lex_min_under_axis_permutations(vec, n)) return;
    ledger.canonical += 1;

    // Integer per-axis balance screens out most non-members before any
    // exact-arithmetic work.
    bool balanced = true;
    for (int axis = 1; axis <= n && balanced; ++axis) {
      long sum = 0;
      for (size_t q = 0; q < vec.size(); ++q)
        if (subsets[q].contains(axis)) sum += vec[q];
      balanced = (sum == 0);
    }
    if (!balanced) {
      ledger.not_fnc += 1;
      return;
    }

    std::vector<std::pair<AxisSet, Rat>> terms;
    for (size_t q = 0; q < vec.size(); ++q)
      if (vec[q] != 0) terms.emplace_back(subsets[q], Rat(vec[q]));
    ProjectionInequality ineq = ProjectionInequality::canonicalize(n, terms);

    if (!is_fnc(ineq).is_fnc) {
      ledger.not_fnc += 1;
      return;
    }
    if (in_bt_cone(ineq)) {
      ledger.bt += 1;
      return;
    }
    ledger.nc_not_bt += 1;
    try {
      auto report = refute_pipeline(ineq, options);
      if (report) {
        ledger.refuted_by_method[report->method] += 1;
      } else {
        ledger.resistant.push_back(inequality_to_json(ineq).dump() +
                                   " :: pipeline exhausted without refutation");
      }
    } catch (const std::exception& e) {
      ledger.resistant.push_back(inequality_to_json(ineq).dump() +
                                 " :: " + e.what());
    }
  };

  long long raw_index = 0;
  enumerate_coefficient_vectors(n, job.bound, [&](const std::vector<int>& vec) {
    raw_index += 1;
    if (raw_index <= resume_from) return true;
    ledger.enumerated += 1;
    classify(vec);
    if (!job.checkpoint_path.empty() && raw_index % 10000 == 0)
      write_file_atomic(job.checkpoint_path,
                        checkpoint_payload(job, raw_index, ledger));
    return true;
  });

  if (!job.checkpoint_path.empty())
    write_file_atomic(job.checkpoint_path,
                      checkpoint_payload(job, raw_index, ledger));
  if (!job.output_path.empty())
    write_file_atomic(job.output_path, ledger_to_json_string(ledger));
  return ledger;
}

std::string ledger_to_json_string(const ScanLedger& ledger) {
  return ledger_to_json(ledger).dump(2) + "\n";
}

}  // namespace projcone
