#include <cstdlib>
#include <iostream>
#include <string>

#include "g2/suite.hpp"

int main(int argc, char** argv) {
  g2::SuiteOptions options;
  options.fleet = g2::load_fleet(argc > 1 ? argv[1] : G2_ACCEPTANCE_FLEET);
  options.seed = argc > 2 ? std::stoull(argv[2]) : 0;
  bool all = true;
  for (const auto& r : g2::run_all(options)) {
    std::cout << g2::summary_line(r) << '\n';
    if (!r.pass()) {
      for (const auto& d : r.details) std::cout << "    " << d << '\n';
    }
    all = all && r.pass();
  }
  std::cout << (all ? "ALL PASS" : "FAILURES PRESENT") << std::endl;
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
