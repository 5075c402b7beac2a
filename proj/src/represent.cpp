#include "represent.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "error.hpp"
#include "parallel.hpp"

namespace formdiv {

namespace {

void check_form(const TwoCoefForm& f) {
  if (f.p < 1 || f.q < 1) throw domain_error("two-coefficient form: p, q must be >= 1");
  if (std::gcd(f.p, f.q) != 1) throw domain_error("two-coefficient form: p, q must be coprime");
}

}  // namespace

std::optional<Witness> represent(int64_t value, const TwoCoefForm& f, int64_t search_bound) {
  check_form(f);
  if (value < 1) throw domain_error("represent: value must be >= 1");
  const int64_t b_max =
      f.sign == Sign::plus ? isqrt(value / f.q) : search_bound;
  for (int64_t b = 0; b <= b_max; ++b) {
    int64_t rest = f.sign == Sign::plus ? value - checked_mul(f.q, b * b)
                                        : checked_add(value, checked_mul(f.q, b * b));
    if (rest < 0) break;
    if (rest % f.p != 0) continue;
    int64_t aa = rest / f.p;
    if (!is_square(aa)) continue;
    int64_t a = isqrt(aa);
    if (std::gcd(a, b) != 1) continue;
    return Witness{value, 1, a, b, f};
  }
  return std::nullopt;
}

std::optional<Witness> smallest_multiplier(int64_t prime, const TwoCoefForm& f,
                                           int64_t cap, int64_t search_bound) {
  check_form(f);
  if (prime < 2) throw domain_error("smallest_multiplier: prime must be >= 2");
  if (cap <= 0) cap = 4 * f.product();
  for (int64_t k = 1; k <= cap; ++k) {
    auto w = represent(checked_mul(k, prime), f, search_bound);
    if (w) {
      w->k = k;
      return w;
    }
  }
  return std::nullopt;
}

MultiplierSurvey class_multiplier_survey(const FormSpec& f, int64_t prime_bound,
                                         int64_t cap, int jobs) {
  if (f.sign != Sign::plus)
    throw domain_error("multiplier survey: defined for plus forms only");
  TwoCoefForm principal{1, f.n, Sign::plus};
  if (cap <= 0) cap = 4 * f.n;
  ResidueClassSet admissible = divisor_classes(f);
  const int64_t m = f.modulus();

  std::vector<int64_t> primes = sieve_primes(prime_bound);
  MultiplierSurvey survey{f.n, m, prime_bound, cap, {}};

  std::function<MultiplierSurvey::Row(size_t)> work = [&](size_t idx) {
    const int64_t klass = admissible.members[idx];
    MultiplierSurvey::Row row{klass, 0, {}, false, false};
    std::set<int64_t> ks;
    for (int64_t p : primes) {
      if (p % m != klass) continue;
      ++row.primes_sampled;
      auto w = smallest_multiplier(p, principal, cap);
      if (w)
        ks.insert(w->k);
      else
        row.exhausted = true;
    }
    row.multipliers.assign(ks.begin(), ks.end());
    row.empty_sample = row.primes_sampled == 0;
    return row;
  };
  survey.rows = parallel_map<MultiplierSurvey::Row>(admissible.size(), jobs, work);
  return survey;
}

SplitSurvey split_survey(int64_t n, const std::vector<TwoCoefForm>& companions,
                         int64_t prime_bound, int jobs) {
  FormSpec spec{n, Sign::plus};
  SplitSurvey survey{n, spec.modulus(), prime_bound, {}, {}};
  survey.forms.push_back(TwoCoefForm{1, n, Sign::plus});
  for (const TwoCoefForm& c : companions) {
    check_form(c);
    if (c.sign != Sign::plus || c.product() != n)
      throw domain_error("split survey: companion coefficients must multiply to N");
    if (c.p == 1) continue;  // principal form is implicit
    survey.forms.push_back(c);
  }

  ResidueClassSet admissible = divisor_classes(spec);
  std::vector<int64_t> primes = sieve_primes(prime_bound);
  const int64_t m = survey.modulus;

  std::function<SplitSurvey::Row(size_t)> work = [&](size_t idx) {
    const int64_t klass = admissible.members[idx];
    SplitSurvey::Row row{klass, 0, {}, false, false, false, false};
    std::set<int> seen;
    std::set<std::vector<int>> signatures;
    for (int64_t p : primes) {
      if (p % m != klass) continue;
      ++row.primes_sampled;
      std::vector<int> sig;
      for (size_t fi = 0; fi < survey.forms.size(); ++fi)
        if (represent(p, survey.forms[fi])) sig.push_back(static_cast<int>(fi));
      if (sig.empty()) row.uncovered = true;
      if (sig.size() > 1) row.multi = true;
      seen.insert(sig.begin(), sig.end());
      signatures.insert(sig);
    }
    row.mixed = signatures.size() > 1;
    row.forms_seen.assign(seen.begin(), seen.end());
    row.empty_sample = row.primes_sampled == 0;
    return row;
  };
  survey.rows = parallel_map<SplitSurvey::Row>(admissible.size(), jobs, work);
  return survey;
}

InclusionReport inclusion_check(const TwoCoefForm& f, int64_t harvest_bound) {
  check_form(f);
  FormSpec parent{f.product(), f.sign};
  ResidueClassSet parent_classes = divisor_classes(parent);
  const int64_t m = parent.modulus();

  InclusionReport report;
  std::set<int64_t> seen, bad;
  for (int64_t a = 1; a <= harvest_bound; ++a) {
    for (int64_t b = 1; b <= harvest_bound; ++b) {
      if (std::gcd(a, b) != 1) continue;
      int64_t v = f.sign == Sign::plus
                      ? checked_add(checked_mul(f.p, a * a), checked_mul(f.q, b * b))
                      : checked_mul(f.p, a * a) - checked_mul(f.q, b * b);
      if (v == 0) continue;
      if (v < 0) v = -v;
      for (int64_t p : factorize(v)) {
        if (p == 2 || (2 * f.product()) % p == 0) continue;
        if (seen.insert(p).second) {
          ++report.primes_checked;
          if (!parent_classes.contains(p % m)) bad.insert(p % m);
        }
      }
    }
  }
  report.offending.assign(bad.begin(), bad.end());
  report.ok = bad.empty();
  return report;
}

}  // namespace formdiv
