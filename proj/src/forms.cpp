#include "forms.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "error.hpp"

namespace formdiv {

namespace {

void check_n(const FormSpec& f) {
  if (f.n < 1) throw domain_error("form: N must be >= 1");
}

int64_t mod4n(int64_t v, int64_t m) {
  int64_t r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

bool ResidueClassSet::contains(int64_t r) const {
  int64_t v = mod4n(r, modulus);
  return std::binary_search(members.begin(), members.end(), v);
}

ResidueClassSet divisor_classes(const FormSpec& f) {
  check_n(f);
  const int64_t m = f.modulus();
  const int64_t d = f.discriminant();
  ResidueClassSet out{m, {}};
  for (int64_t r = 1; r < m; r += 2) {
    if (std::gcd(r, m) != 1) continue;
    if (kronecker(d, r) == 1) out.members.push_back(r);
  }
  return out;
}

ResidueClassSet forbidden_classes(const FormSpec& f) {
  check_n(f);
  const int64_t m = f.modulus();
  ResidueClassSet admissible = divisor_classes(f);
  ResidueClassSet out{m, {}};
  for (int64_t r = 1; r < m; r += 2) {
    if (std::gcd(r, m) != 1) continue;
    if (!admissible.contains(r)) out.members.push_back(r);
  }
  return out;
}

ResidueClassSet divisor_classes_oracle(const FormSpec& f, int64_t harvest_bound) {
  check_n(f);
  if (harvest_bound < 1) throw domain_error("harvest bound must be >= 1");
  const int64_t m = f.modulus();
  std::set<int64_t> classes;
  for (int64_t a = 1; a <= harvest_bound; ++a) {
    for (int64_t b = 1; b <= harvest_bound; ++b) {
      if (std::gcd(a, b) != 1) continue;
      int64_t v = f.sign == Sign::plus ? checked_add(checked_mul(a, a), checked_mul(f.n, checked_mul(b, b)))
                                       : checked_mul(a, a) - checked_mul(f.n, checked_mul(b, b));
      if (v == 0) continue;
      if (v < 0) v = -v;
      for (int64_t p : factorize(v)) {
        if (p == 2 || f.n % p == 0) continue;
        classes.insert(p % m);
      }
    }
  }
  ResidueClassSet out{m, {classes.begin(), classes.end()}};
  return out;
}

std::optional<ResidueClassSet> reduced_classes(const FormSpec& f) {
  ResidueClassSet s = divisor_classes(f);
  const int64_t half = 2 * f.n;
  for (int64_t r : s.members)
    if (!s.contains(r + half)) return std::nullopt;
  std::set<int64_t> reduced;
  for (int64_t r : s.members) reduced.insert(r % half);
  return ResidueClassSet{half, {reduced.begin(), reduced.end()}};
}

int64_t squarefree_class_count(int64_t n) {
  if (n < 1) throw domain_error("squarefree_class_count: N must be >= 1");
  std::vector<int64_t> fs = factorize(n);
  for (size_t i = 1; i < fs.size(); ++i)
    if (fs[i] == fs[i - 1])
      throw domain_error("squarefree_class_count: N must be squarefree, got " + std::to_string(n));
  return totient(4 * n) / 2;
}

bool closure_holds(const ResidueClassSet& s) {
  if (s.modulus < 1) throw domain_error("closure: empty set");
  for (int64_t x : s.members)
    for (int64_t y : s.members)
      if (!s.contains(mod4n(checked_mul(x, y), s.modulus))) return false;
  return true;
}

ResidueClassSet seed_classes(const FormSpec& f) {
  check_n(f);
  const int64_t m = f.modulus();
  std::set<int64_t> seeds;
  auto try_insert = [&](int64_t v) {
    int64_t r = mod4n(v, m);
    if (r % 2 == 1 && std::gcd(r, m) == 1) seeds.insert(r);
  };
  // a^2 and a^2 +- N are periodic in a mod 2N
  for (int64_t a = 0; a <= 2 * f.n; ++a) {
    if (a % 2 == 1) try_insert(a * a);
    if (f.sign == Sign::plus) {
      try_insert(a * a + f.n);
    } else {
      try_insert(a * a - f.n);
      try_insert(f.n - a * a);
    }
  }
  return ResidueClassSet{m, {seeds.begin(), seeds.end()}};
}

CharacterRow character_row(int64_t p, Sign sign_of_form) {
  if (p < 3 || p % 2 == 0 || !is_prime(static_cast<uint64_t>(p)))
    throw domain_error("character_row: argument must be an odd prime");
  std::set<int64_t> squares;
  for (int64_t t = 1; t < p; ++t) squares.insert(modpow(t, 2, p));
  // Minus forms admit +P exactly when N is a square mod P. Plus forms flip
  // that when P = 4k+3, since -N rather than N must be the square.
  bool flip = sign_of_form == Sign::plus && p % 4 == 3;
  CharacterRow row{p, sign_of_form, {}, {}};
  for (int64_t r = 1; r < p; ++r) {
    bool qr = squares.count(r) != 0;
    if (qr != flip)
      row.plus_classes.push_back(r);
    else
      row.minus_classes.push_back(r);
  }
  return row;
}

}  // namespace formdiv
