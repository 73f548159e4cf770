#include <chrono>
#include <iostream>
#include "t1kit/verify.hpp"
using namespace t1kit;
int main(int argc, char** argv) {
  std::vector<std::string> names =
      argc > 1 ? std::vector<std::string>{argv[1]} : suite_names();
  int rc = 0;
  for (const std::string& n : names) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r = run_suite(n, 0, "data");
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0).count();
    std::cout << format_suite(r) << "  [" << ms << " ms]\n";
    if (!r.ok()) rc = 1;
  }
  return rc;
}
