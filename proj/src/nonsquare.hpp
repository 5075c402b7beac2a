#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "forms.hpp"

// Families of integers that can never be perfect squares because every
// value is divisible only in forbidden classes: 4Nmn + A(m +- n) grids and
// the three-variable 4abc/2abc corollaries.

namespace formdiv {

enum class FamilyKind {
  sum,          // 4Nmn + A(m+n), A in a forbidden class of x^2 + N y^2
  difference,   // 4Nmn +- A(m-n), +-A forbidden for x^2 - N y^2
  abc4,         // 4abc - b - c, unconditional
  abc2_bc,      // 2abc - b - c, b or c of the form 4k+3
  abc2_mixed,   // 2abc - b + c, a odd, b of the form 4k+1 or 4k+2
  abc2_pm,      // 2abc +- c + b, a odd, b of the form 4k+3 or 4k+2
};

const char* family_kind_name(FamilyKind k);

struct NonsquareFamily {
  FamilyKind kind = FamilyKind::sum;
  int64_t n = 0;              // grid kinds only; modulus is 4n
  int64_t coeff = 0;          // signed A as written
  bool both_signs = false;    // scan +-A (difference families)
  bool enforce_coprime = true;  // gcd(m, A) = gcd(n, A) = 1 side condition

  std::string text() const;
};

struct Counterexample {
  int64_t x = 0, y = 0, z = 0;  // z = 0 for grid families
  int sign = +1;                // which sign of a +- family produced it
  int64_t value = 0;
  int64_t root = 0;
};

struct ScanReport {
  NonsquareFamily family;
  int64_t bound = 0;
  int64_t cells_scanned = 0;  // assignments meeting the side conditions
  std::vector<Counterexample> counterexamples;  // lexicographic order

  bool clean() const { return counterexamples.empty(); }
};

// The grid families a form's forbidden classes generate. Plus forms give
// sum families (each forbidden class written both as -A and +(4N-A), the
// two printed spellings); minus forms give one +- difference family per
// complementary pair. Degenerate minus forms have none.
std::vector<NonsquareFamily> generate_families(const FormSpec& f);

// Exhaustive scan over the grid [1, bound]^2 (grids) or [1, bound]^3
// (abc kinds). Values are checked with exact integer arithmetic; overflow
// throws rather than wrapping.
ScanReport scan_family(const NonsquareFamily& fam, int64_t bound, int jobs = 1);

// Parse "4mn-(m+n)", "28mn+8(m-n)", "24mn+-7(m-n)", "4abc-b-c", ... as
// written in the catalog. Returns nullopt for text that fits no family shape.
std::optional<NonsquareFamily> family_from_text(const std::string& text);

}  // namespace formdiv
