#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "automorphe/common.hpp"

namespace automorphe {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// |xi|_delta^{-1-nu} exp(2 i pi c x / xi)
struct PhiBlock {
  int delta = 0;
  cplx nu = 0.0;
  Rational c = 0;
};

struct ScaledPhi {
  cplx coeff = 0.0;  // zero means the block is annihilated
  PhiBlock block;
};

}  // namespace automorphe
