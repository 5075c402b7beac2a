#pragma once
#include <stdexcept>

namespace formdiv {

// Bad mathematical input: wrong parity, class not coprime to the modulus, ...
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A brute-force check hit its ceiling before reaching a verdict.
// Raised instead of ever returning a possibly-wrong answer.
struct oracle_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 64-bit overflow in a scan or product.
struct overflow_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed catalog asset.
struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace formdiv
