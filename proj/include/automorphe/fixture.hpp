#pragma once

#include <stdexcept>
#include <string>

#include "automorphe/halfplane.hpp"

namespace automorphe {

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NormalizationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"lambda": real, "parity": 0|1, "precision": real, "coeffs": {"k": [re, im], ...}}
// optional "norm": positive real, the fixture value of the form's squared norm
MaassExpansion parse_fixture(const std::string& text);
MaassExpansion load_fixture(const std::string& path);
double fixture_norm(const std::string& path);

}  // namespace automorphe
