#pragma once

#include <string>
#include <vector>

namespace sunvol::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Run one numbered end-to-end check (1..8).  Never throws for a failing
// check — failures come back with pass = false and a diagnostic detail.
CriterionResult run_criterion(int id);

// Suite names: "volumes" {1, 8}, "measures" {2, 3, 5}, "sampling" {4, 6, 7},
// or "all".  Unknown names throw std::invalid_argument.
std::vector<CriterionResult> run_suite(const std::string& suite);

}  // namespace sunvol::verify
