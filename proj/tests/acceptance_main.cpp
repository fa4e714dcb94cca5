// Runs the acceptance suite and prints one line per criterion.
// Usage: lfc_acceptance [--tiny] [--seed N]
#include <cstdlib>
#include <iostream>
#include <string>

#include "lfc/acceptance.hpp"

int main(int argc, char** argv) {
  lfc::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--tiny")
      options.sizes = lfc::SuiteSize::tiny;
    else if (a == "--seed" && i + 1 < argc)
      options.seed = std::stoull(argv[++i]);
    else {
      std::cerr << "usage: lfc_acceptance [--tiny] [--seed N]\n";
      return 2;
    }
  }
  options.progress = [](const std::string& m) { std::cerr << "  .. " << m << std::endl; };
  const auto report = lfc::run_acceptance(options);
  for (const auto& r : report.results) std::cout << lfc::format_result(r) << std::endl;
  std::cout << (report.passed() ? "ALL PASS" : "SOME CRITERIA FAILED") << " (seed " << report.seed << ", "
            << static_cast<long long>(report.seconds) << " s)" << std::endl;
  return report.passed() ? EXIT_SUCCESS : EXIT_FAILURE;
}
