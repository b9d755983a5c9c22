#include <cstdlib>
#include <iostream>
#include <string>

#include "property_suite.hpp"

int main(int argc, char** argv) {
  const std::size_t cases = argc > 1 ? std::stoul(argv[1]) : 1000;
  const std::uint64_t seed = argc > 2 ? std::stoull(argv[2]) : 2024;
  const auto out = property::run(cases, seed);
  for (const auto& [name, t] : out.tally) {
    std::cout << (t.second == 0 ? "PASS " : "FAIL ") << name << ": " << t.first << " checked, " << t.second
              << " failed\n";
  }
  for (const auto& f : out.failures) std::cout << "  " << f << "\n";
  std::cout << out.cases << " cases, " << out.failed() << " failures\n";
  return out.failed() == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
