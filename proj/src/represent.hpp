#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "forms.hpp"

// Witness search for p a^2 + q b^2 and p a^2 - q b^2 with gcd(a, b) = 1,
// and the class-by-class multiplier / companion-form surveys built on it.

namespace formdiv {

struct TwoCoefForm {
  int64_t p = 1;
  int64_t q = 1;
  Sign sign = Sign::plus;

  int64_t product() const { return p * q; }
};

struct Witness {
  int64_t value = 0;  // the represented number, k * original value
  int64_t k = 1;      // multiplier applied before searching
  int64_t a = 0;
  int64_t b = 0;
  TwoCoefForm form;
};

inline constexpr int64_t kMinusSearchBound = 10'000;

// Smallest-b (then smallest-a) coprime representation of value, if any.
// Plus forms need no external bound; minus forms search b <= search_bound.
std::optional<Witness> represent(int64_t value, const TwoCoefForm& f,
                                 int64_t search_bound = kMinusSearchBound);

// Least k in [1, cap] with k * prime representable; cap <= 0 means 4*p*q.
std::optional<Witness> smallest_multiplier(int64_t prime, const TwoCoefForm& f,
                                           int64_t cap = 0,
                                           int64_t search_bound = kMinusSearchBound);

struct MultiplierSurvey {
  int64_t n = 0;
  int64_t modulus = 0;
  int64_t prime_bound = 0;
  int64_t cap = 0;
  struct Row {
    int64_t klass = 0;
    int64_t primes_sampled = 0;
    std::vector<int64_t> multipliers;  // distinct smallest multipliers seen
    bool empty_sample = false;         // no prime of this class in range
    bool exhausted = false;            // some prime had no multiplier <= cap
  };
  std::vector<Row> rows;  // one per admissible class, ascending
};

// Smallest multiplier of every prime <= prime_bound in each admissible
// class of x^2 + N y^2.
MultiplierSurvey class_multiplier_survey(const FormSpec& f, int64_t prime_bound,
                                         int64_t cap = 0, int jobs = 1);

struct SplitSurvey {
  int64_t n = 0;
  int64_t modulus = 0;
  int64_t prime_bound = 0;
  std::vector<TwoCoefForm> forms;  // principal form first
  struct Row {
    int64_t klass = 0;
    int64_t primes_sampled = 0;
    std::vector<int> forms_seen;  // indices into forms, ascending
    bool mixed = false;           // different primes matched different form sets
    bool uncovered = false;       // some prime matched no form
    bool multi = false;           // some prime matched more than one form
    bool empty_sample = false;
  };
  std::vector<Row> rows;
};

// Which of { x^2 + N y^2, companions... } represent the primes of each
// admissible class with multiplier 1. Companions must multiply out to N.
SplitSurvey split_survey(int64_t n, const std::vector<TwoCoefForm>& companions,
                         int64_t prime_bound, int jobs = 1);

struct InclusionReport {
  bool ok = true;
  int64_t primes_checked = 0;
  std::vector<int64_t> offending;  // classes seen outside the parent set
};

// Every odd prime divisor of p a^2 +- q b^2 coprime to 2pq falls in a
// divisor class of x^2 +- pq y^2.
InclusionReport inclusion_check(const TwoCoefForm& f, int64_t harvest_bound);

}  // namespace formdiv
