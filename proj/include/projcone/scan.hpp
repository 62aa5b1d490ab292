#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "projcone/inequality.hpp"

namespace projcone {

struct ScanJob {
  int dimension = 4;
  long bound = 1;  // coefficients range over [-bound, bound]
  bool dedup = true;
  std::string output_path;      // ledger JSON; empty = do not write
  std::string checkpoint_path;  // empty = no checkpointing
  long mcap = 1 << 20;
};

struct ScanLedger {
  long long enumerated = 0;  // raw nonzero vectors seen
  long long canonical = 0;   // survivors of symmetry dedup
  long long not_fnc = 0;
  long long bt = 0;
  long long nc_not_bt = 0;
  std::map<std::string, long long> refuted_by_method;
  // Inequalities in the NC\BT class the pipeline could not refute, with
  // diagnostics; must stay rare.
  std::vector<std::string> resistant;
};

// True when vec (coefficients in canonical subset order) is
// lexicographically minimal among all axis-permutation images.
bool lex_min_under_axis_permutations(const std::vector<int>& vec, int n);

// Streams every nonzero coefficient vector with entries in [-bound, bound]
// in odometer order (canonical subset positions, last position fastest).
// Returns false from the callback to stop.
void enumerate_coefficient_vectors(int n, long bound,
                                   const std::function<bool(const std::vector<int>&)>& fn);

// Full classify-and-refute sweep. Deterministic: the ledger (and its JSON
// dump) is byte-identical across runs of the same job. Checkpoints every
// 10^4 raw vectors when a checkpoint path is given, and resumes from a
// matching checkpoint file.
ScanLedger run_scan(const ScanJob& job);

// Ledger JSON used both for the output file and checkpoint payloads.
std::string ledger_to_json_string(const ScanLedger& ledger);

}  // namespace projcone
