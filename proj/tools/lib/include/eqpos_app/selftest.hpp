#pragma once

#include <map>
#include <string>
#include <vector>

#include "eqpos/bsdh.hpp"

namespace eqpos::app {

enum class Depth { kSmall, kFull };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  /// Deterministic summary; never contains timings.
  std::string detail;
  double seconds = 0.0;
};

struct FamilyCount {
  std::string family;
  int words = 0;
  std::int64_t curves = 0;
};

/// Reduced words of length 1..max_length over A1, A2, A3, B2, G2.
struct Corpus {
  std::vector<BsdhVariety> varieties;
  std::vector<FamilyCount> families;
};

Corpus build_corpus(int max_length);

struct Budget {
  int corpus_length = 6;
  int random_trees = 1000;
  int seshadri_instances = 200;
};

Budget budget_for(Depth depth);

CriterionResult check_counting(const Corpus& corpus);
CriterionResult check_degree_consistency(const Corpus& corpus);
CriterionResult check_ample_seshadri(const Corpus& corpus);
CriterionResult check_worked_instance();
CriterionResult check_split_algebra(int trees);
CriterionResult check_seshadri_structure(const Corpus& corpus, int instances);
CriterionResult check_y_curves();
CriterionResult check_wonderful();
CriterionResult check_gkm_guard(const Corpus& corpus);

struct SelftestReport {
  std::string depth;
  std::vector<FamilyCount> families;
  std::vector<CriterionResult> criteria;

  bool all_pass() const;
  /// Byte-stable text: family counts and one line per criterion.
  std::string render() const;
};

SelftestReport run_selftest(Depth depth);

}  // namespace eqpos::app
