// Verification battery: one pass/fail line per criterion, nonzero exit on
// any failure.
#include <iostream>

#include "gkm/verification.hpp"

int main() {
  const auto results = gkm::run_acceptance(5, std::cerr);
  gkm::print_results(results, std::cout);
  return gkm::all_passed(results) ? 0 : 1;
}
