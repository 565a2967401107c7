#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "automorphe/common.hpp"

namespace automorphe {

enum ExitCode { EXIT_OK = 0, EXIT_ASSERTION = 1, EXIT_USAGE = 2, EXIT_DATA = 3 };

struct RunConfig {
  long long p = 2;
  int N = 6;
  double eps = 0.1;
  std::optional<double> beta;  // default from the budget trade-off
  long long radius = 20;
  double tol = 1e-8;
  std::string format = "csv";
  std::string fixture;
  void validate() const;
};

// "1.5", "-2i", "0.2+1.3i", "1e-3-4e2i"
cplx parse_complex(const std::string& text);

// argv[0] is the program name; report goes to out (or --out), diagnostics to err
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace automorphe
