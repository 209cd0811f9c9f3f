#ifndef SDSP_ACCEPTANCE_HPP
#define SDSP_ACCEPTANCE_HPP

#include <ostream>
#include <string>
#include <vector>

namespace sdsp {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;  // failure diagnostics
};

// Runs the full acceptance battery, one line per criterion on `out`.
std::vector<CriterionResult> run_acceptance(std::ostream& out);

bool acceptance_passed(const std::vector<CriterionResult>& results);

}  // namespace sdsp

#endif
