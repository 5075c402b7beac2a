#include "nonsquare.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"
#include "parallel.hpp"

namespace formdiv {

const char* family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::sum: return "sum";
    case FamilyKind::difference: return "difference";
    case FamilyKind::abc4: return "abc4";
    case FamilyKind::abc2_bc: return "abc2-bc";
    case FamilyKind::abc2_mixed: return "abc2-mixed";
    case FamilyKind::abc2_pm: return "abc2-pm";
  }
  return "?";
}

std::string NonsquareFamily::text() const {
  auto coeff_str = [&](int64_t c, bool pm) {
    std::string s = pm ? "+-" : (c < 0 ? "-" : "+");
    int64_t v = c < 0 ? -c : c;
    if (v != 1) s += std::to_string(v);
    return s;
  };
  switch (kind) {
    case FamilyKind::sum:
      return std::to_string(4 * n) + "mn" + coeff_str(coeff, false) + "(m+n)";
    case FamilyKind::difference:
      return std::to_string(4 * n) + "mn" + coeff_str(coeff, both_signs) + "(m-n)";
    case FamilyKind::abc4: return "4abc-b-c";
    case FamilyKind::abc2_bc: return "2abc-b-c";
    case FamilyKind::abc2_mixed: return "2abc-b+c";
    case FamilyKind::abc2_pm: return "2abc+-c+b";
  }
  return "?";
}

std::vector<NonsquareFamily> generate_families(const FormSpec& f) {
  std::vector<NonsquareFamily> out;
  if (f.degenerate()) return out;
  ResidueClassSet forbidden = forbidden_classes(f);
  const int64_t m = f.modulus();
  if (f.sign == Sign::plus) {
    for (int64_t c : forbidden.members) {
      out.push_back({FamilyKind::sum, f.n, c - m, false, true});
      out.push_back({FamilyKind::sum, f.n, c, false, true});
    }
  } else {
    for (int64_t c : forbidden.members) {
      if (c > m - c) continue;  // one family per +- pair
      out.push_back({FamilyKind::difference, f.n, c, true, true});
    }
  }
  return out;
}

namespace {

bool square_root_of(int64_t v, int64_t* root) {
  if (v < 0) return false;
  int64_t r = isqrt(v);
  if (r * r != v) return false;
  *root = r;
  return true;
}

void scan_grid_row(const NonsquareFamily& fam, int64_t m, int64_t bound,
                   int64_t* cells, std::vector<Counterexample>* out) {
  const int64_t abs_a = fam.coeff < 0 ? -fam.coeff : fam.coeff;
  const int64_t four_n = 4 * fam.n;
  if (fam.enforce_coprime && abs_a != 0 && std::gcd(m, abs_a) != 1) return;
  for (int64_t k = 1; k <= bound; ++k) {
    if (fam.enforce_coprime && abs_a != 0 && std::gcd(k, abs_a) != 1) continue;
    if (fam.kind == FamilyKind::difference && m == k) continue;
    int64_t base = checked_mul(checked_mul(four_n, m), k);
    int64_t mix = fam.kind == FamilyKind::sum ? checked_add(m, k) : m - k;
    for (int s : {+1, -1}) {
      if (s < 0 && !fam.both_signs) break;
      int64_t v = checked_add(base, checked_mul(s * fam.coeff, mix));
      ++*cells;
      int64_t root = 0;
      if (square_root_of(v, &root)) out->push_back({m, k, 0, s, v, root});
    }
  }
}

bool abc_conditions(FamilyKind kind, int64_t a, int64_t b, int64_t /*c*/) {
  switch (kind) {
    case FamilyKind::abc4: return true;
    case FamilyKind::abc2_bc: return true;  // the b-or-c condition is checked per pair below
    case FamilyKind::abc2_mixed: return a % 2 == 1 && (b % 4 == 1 || b % 4 == 2);
    case FamilyKind::abc2_pm: return a % 2 == 1 && (b % 4 == 3 || b % 4 == 2);
    default: return false;
  }
}

void scan_abc_plane(const NonsquareFamily& fam, int64_t a, int64_t bound,
                    int64_t* cells, std::vector<Counterexample>* out) {
  for (int64_t b = 1; b <= bound; ++b) {
    for (int64_t c = 1; c <= bound; ++c) {
      if (fam.kind == FamilyKind::abc2_bc && b % 4 != 3 && c % 4 != 3) continue;
      if (!abc_conditions(fam.kind, a, b, c)) continue;
      int64_t abc = checked_mul(checked_mul(a, b), c);
      switch (fam.kind) {
        case FamilyKind::abc4: {
          int64_t v = checked_mul(4, abc) - b - c;
          ++*cells;
          int64_t root = 0;
          if (square_root_of(v, &root)) out->push_back({a, b, c, +1, v, root});
          break;
        }
        case FamilyKind::abc2_bc: {
          int64_t v = checked_mul(2, abc) - b - c;
          ++*cells;
          int64_t root = 0;
          if (square_root_of(v, &root)) out->push_back({a, b, c, +1, v, root});
          break;
        }
        case FamilyKind::abc2_mixed: {
          int64_t v = checked_mul(2, abc) - b + c;
          ++*cells;
          int64_t root = 0;
          if (square_root_of(v, &root)) out->push_back({a, b, c, +1, v, root});
          break;
        }
        case FamilyKind::abc2_pm: {
          for (int s : {+1, -1}) {
            int64_t v = checked_add(checked_mul(2, abc) + b, s > 0 ? c : -c);
            ++*cells;
            int64_t root = 0;
            if (square_root_of(v, &root)) out->push_back({a, b, c, s, v, root});
          }
          break;
        }
        default: break;
      }
    }
  }
}

}  // namespace

ScanReport scan_family(const NonsquareFamily& fam, int64_t bound, int jobs) {
  if (bound < 1) throw domain_error("scan: bound must be >= 1");
  const bool grid = fam.kind == FamilyKind::sum || fam.kind == FamilyKind::difference;
  if (grid && fam.n < 1) throw domain_error("scan: grid family needs N >= 1");

  struct Slice {
    int64_t cells = 0;
    std::vector<Counterexample> hits;
  };
  std::function<Slice(size_t)> work = [&](size_t idx) {
    Slice s;
    int64_t first = static_cast<int64_t>(idx) + 1;
    if (grid)
      scan_grid_row(fam, first, bound, &s.cells, &s.hits);
    else
      scan_abc_plane(fam, first, bound, &s.cells, &s.hits);
    return s;
  };
  std::vector<Slice> slices = parallel_map<Slice>(static_cast<size_t>(bound), jobs, work);

  ScanReport report{fam, bound, 0, {}};
  for (const Slice& s : slices) {
    report.cells_scanned += s.cells;
    report.counterexamples.insert(report.counterexamples.end(), s.hits.begin(), s.hits.end());
  }
  return report;
}

std::optional<NonsquareFamily> family_from_text(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != ' ') t += ch;
  // normalize the +- spellings
  auto replace_all = [](std::string& s, const std::string& from, const std::string& to) {
    for (size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
      s.replace(pos, from.size(), to);
  };
  replace_all(t, "±", "+-");

  if (t == "4abc-b-c") return NonsquareFamily{FamilyKind::abc4, 0, 0, false, false};
  if (t == "2abc-b-c") return NonsquareFamily{FamilyKind::abc2_bc, 0, 0, false, false};
  if (t == "2abc-b+c") return NonsquareFamily{FamilyKind::abc2_mixed, 0, 0, false, false};
  if (t == "2abc+-c+b" || t == "2abc+c+b" || t == "2abc-c+b")
    return NonsquareFamily{FamilyKind::abc2_pm, 0, 0, false, false};

  // <4N>mn<sign><A>(m<+|->n), coefficient 1 may be omitted
  size_t mn = t.find("mn");
  if (mn == std::string::npos || mn == 0) return std::nullopt;
  int64_t four_n = 0;
  for (size_t i = 0; i < mn; ++i) {
    if (!isdigit(static_cast<unsigned char>(t[i]))) return std::nullopt;
    four_n = four_n * 10 + (t[i] - '0');
  }
  if (four_n % 4 != 0 || four_n == 0) return std::nullopt;
  size_t pos = mn + 2;
  if (pos >= t.size()) return std::nullopt;
  bool both = false;
  int sign = +1;
  if (t.compare(pos, 2, "+-") == 0) {
    both = true;
    pos += 2;
  } else if (t[pos] == '+') {
    ++pos;
  } else if (t[pos] == '-') {
    sign = -1;
    ++pos;
  } else {
    return std::nullopt;
  }
  int64_t coeff = 0;
  bool have_digits = false;
  while (pos < t.size() && isdigit(static_cast<unsigned char>(t[pos]))) {
    coeff = coeff * 10 + (t[pos] - '0');
    have_digits = true;
    ++pos;
  }
  if (!have_digits) coeff = 1;
  std::string tail = t.substr(pos);
  NonsquareFamily fam;
  fam.n = four_n / 4;
  fam.coeff = sign * coeff;
  fam.both_signs = both;
  fam.enforce_coprime = true;
  if (tail == "(m+n)") {
    if (both) return std::nullopt;  // sum families carry one printed sign
    fam.kind = FamilyKind::sum;
    return fam;
  }
  if (tail == "(m-n)") {
    fam.kind = FamilyKind::difference;
    return fam;
  }
  return std::nullopt;
}

}  // namespace formdiv
