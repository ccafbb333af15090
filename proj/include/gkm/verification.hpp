#ifndef GKM_VERIFICATION_HPP
#define GKM_VERIFICATION_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gkm {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // failure description or short summary
};

// Runs the full verification battery with every sweep capped at max_n.
// All comparisons are exact. Progress notes go to `progress`.
std::vector<CriterionResult> run_acceptance(int max_n, std::ostream& progress);

bool all_passed(const std::vector<CriterionResult>& results);

// One line per criterion: "criterion N (name): PASS|FAIL ...".
void print_results(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace gkm

#endif
