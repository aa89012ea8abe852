#pragma once

#include <vector>

#include "wpline/endalg.hpp"
#include "wpline/sheaf.hpp"

namespace wpline {

struct SurveyOptions {
  bool require_tau2 = false;
  long candidate_budget = 4096;   // max symbols in the search pool
  long search_budget = 5000000;   // DFS nodes
  long sum_budget = 20000;        // tilting sums before giving up
  int cap = 32;
};

struct SurveyEntry {
  SheafSum representative;
  std::vector<SheafSum> members;  // every sum in this equivalence class
  std::vector<int> q_per_tube;
  bool tau2_stable = false;
  AlgebraPresentation end_alg;
};

struct SurveyResult {
  LVec lo, hi;
  bool require_tau2 = false;
  long sums_found = 0;
  std::vector<SurveyEntry> entries;  // deduplicated presentations
};

// All basic tilting sums of window line bundles and exceptional simples,
// optionally restricted to tau^2-stable ones, paired with their endomorphism
// presentations and deduplicated up to the quiver/Cartan equivalence proxy.
SurveyResult survey_tilting(const Weights& w, const LVec& lo, const LVec& hi,
                            const SurveyOptions& opt = {});

}  // namespace wpline
