// One PASS/FAIL line per acceptance criterion; all comparisons are exact.
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "jhkit/verify.hpp"

int main(int argc, char** argv) {
  jhkit::VerifyConfig cfg;
  if (const char* env = std::getenv("JHKIT_SEED")) cfg.seed = std::stoull(env);
  const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  const auto& names = jhkit::suite_names();
  int failures = 0;
  for (std::size_t i = 0; i < names.size(); ++i) {
    jhkit::SuiteResult r;
    try {
      r = jhkit::run_suite(names[i], cfg);
    } catch (const std::exception& e) {
      r.name = names[i];
      r.failed = 1;
      r.notes.push_back(std::string("exception: ") + e.what());
    }
    failures += !r.passed();
    std::cout << (r.passed() ? "PASS" : "FAIL") << " criterion " << std::setw(2) << i + 1 << " [" << r.name
              << "] tolerance=0 checks=" << r.checks << " failed=" << r.failed << " time=" << std::fixed
              << std::setprecision(2) << r.seconds << "s";
    if (!r.summary.empty()) std::cout << " :: " << r.summary;
    std::cout << "\n";
    if (verbose || !r.passed()) {
      for (const auto& n : r.notes) std::cout << "    note: " << n << "\n";
      for (const auto& c : r.counterexamples) std::cout << "    replay: " << c << "\n";
    }
  }
  std::cout << (failures ? "FAIL" : "PASS") << " overall: " << names.size() - static_cast<std::size_t>(failures) << "/"
            << names.size() << " criteria\n";
  return failures ? 1 : 0;
}
