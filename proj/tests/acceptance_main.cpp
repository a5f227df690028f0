#include "acceptance.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  int failed = 0;
  weylva::verify::run_acceptance(quick, [&](const weylva::verify::CriterionResult& r) {
    std::cout << weylva::verify::format_line(r) << std::endl;
    if (!r.passed) ++failed;
  });
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : std::string("acceptance: all criteria passed"))
            << std::endl;
  return failed ? 1 : 0;
}
