#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "arith.hpp"

// Residue classes mod 4N that can contain odd prime divisors of x^2 + N y^2
// (sign plus) or x^2 - N y^2 (sign minus), gcd(x, y) = 1.

namespace formdiv {

enum class Sign { plus, minus };

inline const char* sign_name(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

struct FormSpec {
  int64_t n = 1;
  Sign sign = Sign::plus;

  int64_t modulus() const { return 4 * n; }
  // For minus forms with square N the form factors over the integers and
  // every odd class coprime to 4N admits divisors.
  bool degenerate() const { return sign == Sign::minus && is_square(n); }
  // negative for plus forms, positive for minus forms
  int64_t discriminant() const { return sign == Sign::plus ? -4 * n : 4 * n; }
};

struct ResidueClassSet {
  int64_t modulus = 0;
  std::vector<int64_t> members;  // sorted, odd, coprime to modulus

  bool contains(int64_t r) const;
  size_t size() const { return members.size(); }
};

// Fast path: class r is admissible iff kronecker(discriminant, r) = +1.
ResidueClassSet divisor_classes(const FormSpec& f);

// Independent brute force: factor |a^2 +- N b^2| over coprime pairs up to
// harvest_bound and collect the classes of every odd prime divisor of the
// values that does not divide N. Always a subset of divisor_classes(f).
ResidueClassSet divisor_classes_oracle(const FormSpec& f, int64_t harvest_bound);

// Complement of the admissible classes among odd residues coprime to 4N.
ResidueClassSet forbidden_classes(const FormSpec& f);

// If the admissible set is stable under adding 2N, the same information
// fits mod 2N; otherwise nullopt.
std::optional<ResidueClassSet> reduced_classes(const FormSpec& f);

// phi(4N)/2 for squarefree N: the shared size of the admissible and
// forbidden sets. Throws domain_error when N has a square factor.
int64_t squarefree_class_count(int64_t n);

// Product of two members always lands in the set.
bool closure_holds(const ResidueClassSet& s);

// Classes generated directly by small values of the form itself:
// odd squares coprime to 4N, plus a^2 + N (plus forms) or +-(a^2 - N)
// (minus forms) where those are odd and coprime to 4N.
ResidueClassSet seed_classes(const FormSpec& f);

// One row of the prime-by-prime table: for a fixed odd prime P, which
// values of N mod P put +-P among the admissible classes.
struct CharacterRow {
  int64_t prime = 0;
  Sign sign_of_form = Sign::plus;
  std::vector<int64_t> plus_classes;   // N mod P for which +P is admissible
  std::vector<int64_t> minus_classes;  // the rest of 1..P-1
};

CharacterRow character_row(int64_t p, Sign sign_of_form);

}  // namespace formdiv
