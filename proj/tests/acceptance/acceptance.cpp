// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <string>
#include <sys/wait.h>

#include "eqpos_app/selftest.hpp"

namespace {

using eqpos::app::CriterionResult;

void print(const CriterionResult& c) {
  std::cout << (c.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << c.detail << " ("
            << std::fixed << std::setprecision(2) << c.seconds << " s)\n";
}

struct Capture {
  int status = -1;
  std::string out;
  double seconds = 0.0;
};

Capture capture(const std::string& cmd) {
  Capture c;
  const auto start = std::chrono::steady_clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return c;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) c.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c;
}

CriterionResult determinism() {
  CriterionResult r{10, "determinism and performance", false, "", 0.0};
  const std::string cmd = std::string(EQPOS_CLI_PATH) + " selftest --full";
  const auto first = capture(cmd);
  const auto second = capture(cmd);
  r.seconds = first.seconds + second.seconds;
  const bool fast = first.seconds <= 120.0 && second.seconds <= 120.0;
  const bool same = first.out == second.out && !first.out.empty();
  r.pass = first.status == 0 && second.status == 0 && fast && same;
  r.detail = std::string("exit ") + std::to_string(first.status) + "/" + std::to_string(second.status) +
             (same ? ", reports byte-identical" : ", reports differ") + (fast ? ", within 2 min" : ", too slow");
  return r;
}

}  // namespace

int main() {
  using namespace eqpos::app;
  const auto budget = budget_for(Depth::kFull);
  const auto corpus = build_corpus(budget.corpus_length);
  std::vector<CriterionResult> results{
      check_counting(corpus),
      check_degree_consistency(corpus),
      check_ample_seshadri(corpus),
      check_worked_instance(),
      check_split_algebra(budget.random_trees),
      check_seshadri_structure(corpus, budget.seshadri_instances),
      check_y_curves(),
      check_wonderful(),
      check_gkm_guard(corpus),
      determinism(),
  };
  bool all = true;
  for (const auto& r : results) {
    print(r);
    all = all && r.pass;
  }
  std::cout << (all ? "acceptance: all 10 criteria passed" : "acceptance: FAILED") << "\n";
  return all ? 0 : 1;
}
