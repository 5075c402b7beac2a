#include "catalog.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "error.hpp"
#include "nonsquare.hpp"
#include "parallel.hpp"
#include "represent.hpp"

namespace formdiv {

namespace detail {
const char* embedded_catalog_json();
}

namespace {

using nlohmann::json;

// N range for the prime-by-prime admission rule sweeps.
constexpr int64_t kRuleModuliBound = 120;

const std::set<std::string>& known_kinds() {
  static const std::set<std::string> kinds = {
      "classes",        "forbidden",   "representation", "difference-of-squares",
      "multiplier",     "split",       "split-multiplier", "inclusion",
      "structure",      "count-table", "character-table", "reduction",
      "family-scan",    "family-table"};
  return kinds;
}

int64_t norm_mod(int64_t v, int64_t m) { return ((v % m) + m) % m; }

std::string join(const std::vector<int64_t>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i];
  }
  return os.str();
}

std::vector<int64_t> int_list(const json& arr) {
  if (!arr.is_array()) throw data_error("expected an integer array");
  std::vector<int64_t> out;
  for (const json& e : arr) {
    if (!e.is_number_integer()) throw data_error("expected an integer array");
    out.push_back(e.get<int64_t>());
  }
  return out;
}

// A printed or corrected class list. Integers normalize mod `modulus`
// (negative entries are the 4Nm - a spelling), +- lists add the mirror
// class, and misprinted entries stay as text.
struct ClassList {
  std::vector<int64_t> values;
  std::vector<std::string> text_entries;
  size_t entries = 0;
};

ClassList expand_classes(const json& arr, int64_t modulus, bool pm) {
  if (!arr.is_array()) throw data_error("class list must be an array");
  ClassList out;
  std::set<int64_t> vals;
  for (const json& e : arr) {
    ++out.entries;
    if (e.is_string()) {
      out.text_entries.push_back(e.get<std::string>());
      continue;
    }
    if (!e.is_number_integer()) throw data_error("class entries are integers or text");
    int64_t v = e.get<int64_t>();
    vals.insert(norm_mod(v, modulus));
    if (pm) vals.insert(norm_mod(-v, modulus));
  }
  out.values.assign(vals.begin(), vals.end());
  return out;
}

Sign sign_of(const Record& rec) {
  return rec.fields.value("sign", "plus") == std::string("minus") ? Sign::minus
                                                                  : Sign::plus;
}

FormSpec spec_of(const Record& rec) {
  FormSpec f;
  f.n = rec.fields.at("n").get<int64_t>();
  f.sign = sign_of(rec);
  if (f.n < 1) throw data_error(rec.id + ": N must be >= 1");
  return f;
}

std::vector<int64_t> special_primes(int64_t n) {
  std::set<int64_t> s{2};
  for (int64_t p : factorize(n))
    if (p % 2 == 1) s.insert(p);
  return {s.begin(), s.end()};
}

std::vector<TwoCoefForm> forms_of(const Record& rec, Sign sign) {
  std::vector<TwoCoefForm> out;
  for (const json& f : rec.fields.at("forms")) {
    if (!f.is_array() || f.size() != 2) throw data_error(rec.id + ": forms are [p, q] pairs");
    out.push_back({f[0].get<int64_t>(), f[1].get<int64_t>(), sign});
  }
  return out;
}

void add(RecordReport& rep, std::string name, bool pass, std::string detail = "") {
  rep.checks.push_back(CheckResult{std::move(name), pass, std::move(detail)});
}

struct PropResult {
  bool ok = true;
  std::string detail;
};

// Sampled primes of every admissible class must admit a square root of
// -+N, i.e. divide some x^2 +- N y^2 with x, y coprime.
PropResult class_witnesses(const FormSpec& f, const VerificationBounds& B) {
  ResidueClassSet adm = divisor_classes(f);
  const int64_t m = f.modulus();
  int64_t seen = 0;
  for (int64_t c : adm.members) {
    auto ps = primes_in_class(c, m, B.samples_per_class, B.witness_prime_limit);
    if (ps.empty())
      return {false, "no prime below limit in class " + std::to_string(c) + " mod " +
                         std::to_string(m)};
    for (int64_t p : ps) {
      int64_t a = norm_mod(f.sign == Sign::plus ? -f.n : f.n, p);
      auto s = sqrt_mod(a, p);
      if (!s || norm_mod(*s * *s - a, p) != 0)
        return {false, "no square root of " + std::to_string(a) + " mod " + std::to_string(p) +
                           " (class " + std::to_string(c) + ")"};
      ++seen;
    }
  }
  return {true, std::to_string(seen) + " primes across " + std::to_string(adm.size()) +
                    " classes"};
}

struct TranscriptionPair {
  ClassList printed;
  ClassList corrected;
};

// Printed lists must agree with the corrected ones except exactly where an
// erratum documents the slip. Text entries always need an erratum; an empty
// printed list means the source spelled the set some other way and carries
// no claim of its own.
void check_transcription(const Record& rec, RecordReport& rep,
                         const std::vector<TranscriptionPair>& pairs) {
  std::set<std::string> documented;
  for (const Erratum& e : rec.errata) documented.insert(e.printed);
  bool ok = true;
  std::string detail;
  for (const TranscriptionPair& pr : pairs) {
    for (const std::string& s : pr.printed.text_entries)
      if (!documented.count(s)) {
        ok = false;
        detail = "printed entry \"" + s + "\" lacks an erratum";
      }
    if (rec.errata.empty() && pr.printed.entries > 0 &&
        pr.printed.values != pr.corrected.values) {
      ok = false;
      detail = "printed and corrected lists differ with no erratum";
    }
  }
  add(rep, "transcription", ok, detail);
}

// Coprime representations of `value`, counted in ascending y order.
int count_witnesses(int64_t value, const TwoCoefForm& fm, int64_t search_bound, int want) {
  int found = 0;
  const int64_t b_max = fm.sign == Sign::plus ? isqrt(value / fm.q) : search_bound;
  for (int64_t b = 0; b <= b_max && found < want; ++b) {
    int64_t rest = fm.sign == Sign::plus ? value - checked_mul(fm.q, b * b)
                                         : checked_add(value, checked_mul(fm.q, b * b));
    if (rest < 0) break;
    if (rest % fm.p != 0) continue;
    int64_t aa = rest / fm.p;
    if (!is_square(aa)) continue;
    if (gcd64(isqrt(aa), b) != 1) continue;
    ++found;
  }
  return found;
}

// ---- classes / forbidden ----------------------------------------------

void verify_classes_record(const Record& rec, const VerificationBounds& B,
                           RecordReport& rep) {
  FormSpec f = spec_of(rec);
  const int64_t m = f.modulus();
  const bool pm = rec.fields.value("pm", false);
  ResidueClassSet adm = divisor_classes(f);

  ClassList corrected = expand_classes(rec.fields.at("corrected"), m, pm);
  add(rep, "class-list", corrected.values == adm.members,
      corrected.values == adm.members
          ? std::to_string(adm.size()) + " classes mod " + std::to_string(m)
          : "stated {" + join(corrected.values) + "} vs computed {" + join(adm.members) + "}");

  std::vector<int64_t> special = special_primes(f.n);
  bool sp_ok = true;
  std::string sp_detail = join(special);
  if (rec.fields.contains("special")) {
    sp_ok = int_list(rec.fields.at("special")) == special;
    if (!sp_ok) sp_detail = "stated special primes differ from 2 and the odd primes of N";
    if (rec.fields.contains("special_printed") && rec.errata.empty()) {
      sp_ok = false;
      sp_detail = "printed special primes differ but no erratum is recorded";
    }
  }
  add(rep, "special-primes", sp_ok, sp_detail);

  PropResult w = class_witnesses(f, B);
  add(rep, "class-witness", w.ok, w.detail);

  ResidueClassSet oracle = divisor_classes_oracle(f, B.harvest_bound);
  bool harv = !oracle.members.empty() &&
              std::includes(adm.members.begin(), adm.members.end(),
                            oracle.members.begin(), oracle.members.end());
  add(rep, "harvest", harv,
      harv ? std::to_string(oracle.size()) + " of " + std::to_string(adm.size()) +
                 " classes hit by pairs up to " + std::to_string(B.harvest_bound)
           : "factor harvest found classes outside the stated set");

  if (rec.fields.contains("reduced")) {
    const json& red = rec.fields.at("reduced");
    const int64_t rm = red.at("modulus").get<int64_t>();
    const bool rpm = red.value("pm", false);
    ClassList red_corr = expand_classes(red.at("corrected"), rm, rpm);
    auto rc = reduced_classes(f);
    bool ok = rc.has_value() && rc->modulus == rm && red_corr.values == rc->members;
    add(rep, "reduced-list", ok,
        ok ? std::to_string(rc->size()) + " classes mod " + std::to_string(rm)
           : (rc ? "stated {" + join(red_corr.values) + "} vs computed {" +
                       join(rc->members) + "}"
                 : "the class set does not reduce mod " + std::to_string(rm)));
  }

  std::vector<TranscriptionPair> pairs;
  pairs.push_back({expand_classes(rec.fields.at("printed"), m, pm), corrected});
  if (rec.fields.contains("reduced")) {
    const json& red = rec.fields.at("reduced");
    const int64_t rm = red.at("modulus").get<int64_t>();
    const bool rpm = red.value("pm", false);
    pairs.push_back({expand_classes(red.at("printed"), rm, rpm),
                     expand_classes(red.at("corrected"), rm, rpm)});
  }
  check_transcription(rec, rep, pairs);
}

void verify_forbidden_record(const Record& rec, const VerificationBounds& B,
                             RecordReport& rep) {
  FormSpec f = spec_of(rec);
  const int64_t m = f.modulus();
  const bool pm = rec.fields.value("pm", false);
  ResidueClassSet forb = forbidden_classes(f);

  ClassList corrected = expand_classes(rec.fields.at("corrected"), m, pm);
  add(rep, "class-list", corrected.values == forb.members,
      corrected.values == forb.members
          ? std::to_string(forb.size()) + " classes mod " + std::to_string(m)
          : "stated {" + join(corrected.values) + "} vs computed {" + join(forb.members) + "}");

  std::string fail;
  int64_t seen = 0;
  for (int64_t c : forb.members) {
    auto ps = primes_in_class(c, m, B.samples_per_class, B.witness_prime_limit);
    if (ps.empty()) {
      fail = "no prime below limit in class " + std::to_string(c);
      break;
    }
    for (int64_t p : ps) {
      int64_t a = norm_mod(f.sign == Sign::plus ? -f.n : f.n, p);
      if (kronecker(f.discriminant(), p) != -1 || sqrt_mod(a, p)) {
        fail = "prime " + std::to_string(p) + " admits a root in class " + std::to_string(c);
        break;
      }
      ++seen;
    }
    if (!fail.empty()) break;
  }
  add(rep, "forbidden-witness", fail.empty(),
      fail.empty() ? std::to_string(seen) + " primes across " + std::to_string(forb.size()) +
                         " classes"
                   : fail);

  ResidueClassSet oracle = divisor_classes_oracle(f, B.harvest_bound);
  bool disjoint = true;
  int64_t leak = 0;
  for (int64_t c : oracle.members)
    if (forb.contains(c)) {
      disjoint = false;
      leak = c;
      break;
    }
  add(rep, "harvest-disjoint", disjoint,
      disjoint ? std::to_string(oracle.size()) + " harvested classes, none forbidden"
               : "harvested divisor class " + std::to_string(leak) + " is in the stated set");

  if (rec.fields.contains("reduced")) {
    const json& red = rec.fields.at("reduced");
    const int64_t rm = red.at("modulus").get<int64_t>();
    const bool rpm = red.value("pm", false);
    ClassList red_corr = expand_classes(red.at("corrected"), rm, rpm);
    auto rc = reduced_classes(f);
    bool ok = rc.has_value() && rc->modulus == rm;
    std::vector<int64_t> comp;
    if (ok)
      for (int64_t r = 1; r < rm; ++r)
        if (gcd64(r, rm) == 1 && !rc->contains(r)) comp.push_back(r);
    ok = ok && red_corr.values == comp;
    add(rep, "reduced-list", ok,
        ok ? std::to_string(comp.size()) + " classes mod " + std::to_string(rm)
           : "stated halved list does not complement the reduced admissible set");
  }

  std::vector<TranscriptionPair> pairs;
  pairs.push_back({expand_classes(rec.fields.at("printed"), m, pm), corrected});
  if (rec.fields.contains("reduced")) {
    const json& red = rec.fields.at("reduced");
    const int64_t rm = red.at("modulus").get<int64_t>();
    const bool rpm = red.value("pm", false);
    pairs.push_back({expand_classes(red.at("printed"), rm, rpm),
                     expand_classes(red.at("corrected"), rm, rpm)});
  }
  check_transcription(rec, rep, pairs);
}

// ---- representation ------------------------------------------------------

void verify_representation_record(const Record& rec, const VerificationBounds& B,
                                  RecordReport& rep) {
  FormSpec f = spec_of(rec);
  const int64_t modulus = rec.fields.at("modulus").get<int64_t>();
  ClassList classes = expand_classes(rec.fields.at("classes"), modulus, false);
  std::vector<TwoCoefForm> forms = forms_of(rec, f.sign);

  ResidueClassSet adm = divisor_classes(f);
  std::set<int64_t> projected;
  for (int64_t r : adm.members) projected.insert(r % modulus);
  std::vector<int64_t> proj(projected.begin(), projected.end());
  add(rep, "class-list", proj == classes.values,
      proj == classes.values
          ? std::to_string(proj.size()) + " classes mod " + std::to_string(modulus)
          : "stated {" + join(classes.values) + "} vs computed {" + join(proj) + "}");

  if (rec.fields.contains("special")) {
    std::vector<int64_t> special = special_primes(f.n);
    add(rep, "special-primes", int_list(rec.fields.at("special")) == special, join(special));
  }

  const int64_t bound =
      f.sign == Sign::plus ? B.rep_prime_bound_plus : B.rep_prime_bound_minus;
  std::set<int64_t> class_set(classes.values.begin(), classes.values.end());
  std::string fail_in, fail_out;
  int64_t covered = 0, excluded = 0;
  for (int64_t p : sieve_primes(bound)) {
    if (gcd64(p, 2 * f.n) != 1) continue;
    bool inside = class_set.count(p % modulus) != 0;
    bool repd = false;
    for (const TwoCoefForm& fm : forms)
      if (represent(p, fm, B.minus_search_bound)) {
        repd = true;
        break;
      }
    if (inside && !repd && fail_in.empty())
      fail_in = "prime " + std::to_string(p) + " in class " + std::to_string(p % modulus) +
                " has no coprime representation";
    if (!inside && repd && fail_out.empty())
      fail_out = "prime " + std::to_string(p) + " is representable outside the stated classes";
    inside ? ++covered : ++excluded;
  }
  add(rep, "representation", fail_in.empty(),
      fail_in.empty() ? std::to_string(covered) + " primes represented" : fail_in);
  add(rep, "exclusion", fail_out.empty(),
      fail_out.empty() ? std::to_string(excluded) + " primes outside the classes, none represented"
                       : fail_out);

  if (rec.fields.contains("min_witnesses")) {
    const int want = rec.fields.at("min_witnesses").get<int>();
    std::string fail;
    int64_t deep = 0;
    for (int64_t p : sieve_primes(B.second_witness_bound)) {
      if (gcd64(p, 2 * f.n) != 1 || !class_set.count(p % modulus)) continue;
      bool ok = false;
      for (const TwoCoefForm& fm : forms)
        if (count_witnesses(p, fm, B.minus_search_bound, want) >= want) {
          ok = true;
          break;
        }
      if (!ok) {
        fail = "prime " + std::to_string(p) + " has fewer than " + std::to_string(want) +
               " representations";
        break;
      }
      ++deep;
    }
    add(rep, "repeat-witness", fail.empty(),
        fail.empty() ? std::to_string(deep) + " primes with " + std::to_string(want) +
                           "+ representations"
                     : fail);
  }

  if (rec.fields.contains("printed")) {
    const bool pm = rec.fields.value("pm", false);
    check_transcription(rec, rep,
                        {{expand_classes(rec.fields.at("printed"), modulus, pm), classes}});
  }
}

// ---- difference of squares ----------------------------------------------

void verify_diff_squares_record(const Record& rec, const VerificationBounds& B,
                                RecordReport& rep) {
  FormSpec f{1, Sign::minus};
  ResidueClassSet adm = divisor_classes(f);
  const bool pm = rec.fields.value("pm", false);
  ClassList corrected = expand_classes(rec.fields.at("corrected"), f.modulus(), pm);
  add(rep, "class-list", corrected.values == adm.members,
      corrected.values == adm.members ? "every odd class mod 4"
                                      : "stated classes miss part of the computed set");

  add(rep, "special-primes",
      rec.fields.contains("special") && int_list(rec.fields.at("special")) ==
                                            std::vector<int64_t>{2},
      "2");

  std::string fail;
  int64_t count = 0;
  for (int64_t p : sieve_primes(B.rep_prime_bound_minus)) {
    if (p == 2) continue;
    int64_t a = (p + 1) / 2, b = (p - 1) / 2;
    if (a * a - b * b != p || gcd64(a, b) != 1) {
      fail = "prime " + std::to_string(p);
      break;
    }
    ++count;
  }
  add(rep, "class-witness", fail.empty(),
      fail.empty() ? std::to_string(count) + " odd primes as differences of coprime squares"
                   : fail);

  // Which numbers are themselves differences of two squares (any common
  // factor allowed): all except twice an odd number.
  std::string fail2;
  for (int64_t v = 1; v <= B.sweep_bound; ++v) {
    bool found = false;
    for (int64_t b = 0; !found && 2 * b <= v; ++b) {
      int64_t aa = v + b * b;
      int64_t a = isqrt(aa);
      found = a * a == aa;
    }
    if (found != (v % 4 != 2)) {
      fail2 = "value " + std::to_string(v);
      break;
    }
  }
  add(rep, "difference-sweep", fail2.empty(),
      fail2.empty() ? "values 1.." + std::to_string(B.sweep_bound) : fail2);

  check_transcription(rec, rep,
                      {{expand_classes(rec.fields.at("printed"), f.modulus(), pm), corrected}});
}

// ---- multiplier / split ---------------------------------------------------

void verify_multiplier_record(const Record& rec, const VerificationBounds& B,
                              RecordReport& rep) {
  FormSpec f = spec_of(rec);
  const int64_t m = f.modulus();
  ResidueClassSet adm = divisor_classes(f);

  struct Group {
    std::vector<int64_t> ks;
    std::set<int64_t> classes;
  };
  std::vector<Group> groups;
  std::set<int64_t> all;
  bool disjoint = true;
  for (const json& g : rec.fields.at("groups")) {
    Group gr;
    gr.ks = int_list(g.at("ks"));
    for (int64_t c : int_list(g.at("classes"))) {
      if (!all.insert(c).second) disjoint = false;
      gr.classes.insert(c);
    }
    groups.push_back(std::move(gr));
  }
  bool cover = disjoint && std::vector<int64_t>(all.begin(), all.end()) == adm.members;
  add(rep, "class-cover", cover,
      cover ? std::to_string(groups.size()) + " groups over " + std::to_string(adm.size()) +
                  " classes"
            : "groups do not partition the admissible classes");

  // Every prime of a grouped class must land in the principal form after
  // one of the stated multipliers; a bare square k p counts, the one case
  // with no coprime pair below it.
  TwoCoefForm principal{1, f.n, Sign::plus};
  std::string fail;
  int64_t checked = 0;
  for (int64_t p : sieve_primes(B.survey_prime_bound)) {
    const int64_t c = p % m;
    const Group* g = nullptr;
    for (const Group& gr : groups)
      if (gr.classes.count(c)) {
        g = &gr;
        break;
      }
    if (!g) continue;
    bool ok = false;
    for (int64_t k : g->ks) {
      int64_t v = checked_mul(k, p);
      if (is_square(v) || represent(v, principal)) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      fail = "prime " + std::to_string(p) + ": no stated multiplier works";
      break;
    }
    ++checked;
  }
  add(rep, "multiplier-witness", fail.empty(),
      fail.empty() ? std::to_string(checked) + " primes below " +
                         std::to_string(B.survey_prime_bound)
                   : fail);
}

void verify_split_record(const Record& rec, const VerificationBounds& B,
                         RecordReport& rep) {
  FormSpec f = spec_of(rec);
  ResidueClassSet adm = divisor_classes(f);
  std::vector<TwoCoefForm> forms = forms_of(rec, Sign::plus);

  struct Group {
    int form = 0;
    std::vector<int64_t> classes;
  };
  std::vector<Group> groups;
  std::set<int64_t> all;
  bool disjoint = true;
  for (const json& g : rec.fields.at("groups")) {
    Group gr;
    gr.form = g.at("form").get<int>();
    gr.classes = int_list(g.at("classes"));
    for (int64_t c : gr.classes)
      if (!all.insert(c).second) disjoint = false;
    groups.push_back(std::move(gr));
  }
  bool cover = disjoint && std::vector<int64_t>(all.begin(), all.end()) == adm.members;
  add(rep, "class-cover", cover,
      cover ? std::to_string(groups.size()) + " groups over " + std::to_string(adm.size()) +
                  " classes"
            : "groups do not partition the admissible classes");

  SplitSurvey survey = split_survey(f.n, forms, B.survey_prime_bound, 1);
  bool aligned = survey.forms.size() == forms.size();
  for (size_t i = 0; aligned && i < forms.size(); ++i)
    aligned = survey.forms[i].p == forms[i].p && survey.forms[i].q == forms[i].q;

  std::string fail;
  if (!aligned) fail = "stated forms do not match the survey layout";
  int64_t sampled = 0;
  for (const Group& g : groups) {
    if (!fail.empty()) break;
    for (int64_t c : g.classes) {
      const SplitSurvey::Row* row = nullptr;
      for (const SplitSurvey::Row& r : survey.rows)
        if (r.klass == c) {
          row = &r;
          break;
        }
      if (!row || row->empty_sample) {
        fail = "class " + std::to_string(c) + " has no sampled prime";
        break;
      }
      if (row->uncovered || row->multi || row->mixed ||
          row->forms_seen != std::vector<int>{g.form}) {
        fail = "class " + std::to_string(c) + " is not taken exclusively by the stated form";
        break;
      }
      sampled += row->primes_sampled;
    }
  }
  add(rep, "split-assignment", fail.empty(),
      fail.empty() ? std::to_string(sampled) + " primes below " +
                         std::to_string(B.survey_prime_bound)
                   : fail);
}

void verify_split_multiplier_record(const Record& rec, const VerificationBounds& B,
                                    RecordReport& rep) {
  FormSpec f = spec_of(rec);
  const int64_t m = f.modulus();
  ResidueClassSet adm = divisor_classes(f);
  std::vector<TwoCoefForm> forms = forms_of(rec, Sign::plus);
  const int64_t factor = rec.fields.at("factor").get<int64_t>();
  std::vector<int64_t> direct = int_list(rec.fields.at("direct"));
  std::vector<int64_t> tripled = int_list(rec.fields.at("tripled"));

  std::set<int64_t> all(direct.begin(), direct.end());
  bool disjoint = true;
  for (int64_t c : tripled)
    if (!all.insert(c).second) disjoint = false;
  bool cover = disjoint && std::vector<int64_t>(all.begin(), all.end()) == adm.members;
  add(rep, "class-cover", cover,
      cover ? "two columns over " + std::to_string(adm.size()) + " classes"
            : "columns do not partition the admissible classes");

  std::set<int64_t> direct_set(direct.begin(), direct.end());
  std::set<int64_t> mapped;
  for (int64_t c : tripled) mapped.insert(norm_mod(factor * c, m));
  add(rep, "factor-map", mapped == direct_set,
      mapped == direct_set
          ? std::to_string(factor) + "x sends the second column onto the first"
          : "scaled second-column classes do not give the first column");

  SplitSurvey survey = split_survey(f.n, forms, B.survey_prime_bound, 1);
  std::string fail;
  int64_t sampled = 0;
  for (int64_t c : direct) {
    const SplitSurvey::Row* row = nullptr;
    for (const SplitSurvey::Row& r : survey.rows)
      if (r.klass == c) {
        row = &r;
        break;
      }
    if (!row || row->empty_sample || row->uncovered) {
      fail = "class " + std::to_string(c) + " has a prime no stated form represents";
      break;
    }
    sampled += row->primes_sampled;
  }
  add(rep, "direct-representation", fail.empty(),
      fail.empty() ? std::to_string(sampled) + " primes taken by the two forms" : fail);

  std::set<int64_t> tripled_set(tripled.begin(), tripled.end());
  std::string fail2;
  int64_t scaled = 0;
  for (int64_t p : sieve_primes(B.survey_prime_bound)) {
    if (!tripled_set.count(p % m)) continue;
    bool ok = false;
    for (const TwoCoefForm& fm : forms)
      if (represent(checked_mul(factor, p), fm)) {
        ok = true;
        break;
      }
    if (!ok) {
      fail2 = "prime " + std::to_string(p) + ": " + std::to_string(factor) +
              "p is not representable";
      break;
    }
    ++scaled;
  }
  add(rep, "scaled-representation", fail2.empty(),
      fail2.empty() ? std::to_string(scaled) + " primes taken after scaling" : fail2);
}

// ---- inclusion -------------------------------------------------------------

void verify_inclusion_record(const Record& rec, const VerificationBounds& B,
                             RecordReport& rep) {
  const Sign sign = sign_of(rec);
  std::string fail;
  int64_t total = 0;
  size_t count = 0;
  for (const json& e : rec.fields.at("sample_forms")) {
    TwoCoefForm fm{e.at(0).get<int64_t>(), e.at(1).get<int64_t>(), sign};
    InclusionReport r = inclusion_check(fm, B.harvest_bound);
    total += r.primes_checked;
    ++count;
    if (!r.ok) {
      fail = std::to_string(fm.p) + "," + std::to_string(fm.q) + " leaks classes " +
             join(r.offending);
      break;
    }
  }
  add(rep, "companion-inclusion", fail.empty(),
      fail.empty() ? std::to_string(total) + " primes across " + std::to_string(count) +
                         " sampled forms"
                   : fail);
}

// ---- structure --------------------------------------------------------------

PropResult structure_property(const std::string& prop, Sign sign, int64_t n,
                              const VerificationBounds& B) {
  FormSpec f{n, sign};
  const int64_t m = f.modulus();
  ResidueClassSet adm = divisor_classes(f);

  if (prop == "two-divides") {
    for (int64_t a = 1; a <= 8; ++a)
      for (int64_t b = 1; b <= 8; ++b) {
        if (gcd64(a, b) != 1) continue;
        int64_t v = sign == Sign::plus ? a * a + n * b * b : a * a - n * b * b;
        if (v != 0 && v % 2 == 0) return {true, ""};
      }
    return {false, "no even value with x, y <= 8"};
  }
  if (prop == "n-divides") {
    int64_t v = sign == Sign::plus ? n * n + n : n * n - n;
    return {v != 0 && v % n == 0, v == 0 ? "value vanished" : ""};
  }
  if (prop == "harvest-subset") {
    ResidueClassSet oracle = divisor_classes_oracle(f, B.harvest_bound);
    bool ok = !oracle.members.empty() &&
              std::includes(adm.members.begin(), adm.members.end(),
                            oracle.members.begin(), oracle.members.end());
    return {ok, ok ? "" : "harvested class outside the computed set"};
  }
  if (prop == "class-witness") return class_witnesses(f, B);
  if (prop == "antisymmetry" || prop == "plus-contrast") {
    FormSpec g{n, Sign::plus};
    ResidueClassSet a2 = divisor_classes(g);
    const int64_t m2 = g.modulus();
    for (int64_t r = 1; r < m2; r += 2) {
      if (gcd64(r, m2) != 1) continue;
      if (a2.contains(r) == a2.contains(m2 - r))
        return {false, "classes " + std::to_string(r) + " and " + std::to_string(m2 - r) +
                           " agree"};
    }
    return {true, ""};
  }
  if (prop == "symmetry") {
    for (int64_t r : adm.members)
      if (!adm.contains(m - r))
        return {false, "class " + std::to_string(r) + " has no mirror"};
    return {true, ""};
  }
  if (prop == "contains-one") return {adm.contains(1), "class 1"};
  if (prop == "odd-coprime") {
    for (int64_t r : adm.members)
      if (r % 2 == 0 || gcd64(r, m) != 1)
        return {false, "class " + std::to_string(r)};
    return {true, ""};
  }
  if (prop == "below-modulus") {
    for (int64_t r : adm.members)
      if (r < 1 || r >= m) return {false, "class " + std::to_string(r)};
    return {true, ""};
  }
  if (prop == "half-count") {
    int64_t expected = f.degenerate() ? totient(m) : totient(m) / 2;
    bool ok = static_cast<int64_t>(adm.members.size()) == expected;
    return {ok, ok ? "" : "expected " + std::to_string(expected) + " classes, found " +
                              std::to_string(adm.members.size())};
  }
  if (prop == "one-exception") {
    bool ok = forbidden_classes(f).members.empty() == is_square(n);
    return {ok, ok ? "" : "forbidden set emptiness disagrees with N being square"};
  }
  if (prop == "below-half-modulus") {
    std::set<int64_t> reps;
    for (int64_t r : adm.members) reps.insert(std::min(r, m - r));
    if (2 * reps.size() != adm.members.size())
      return {false, "mirror pairs do not halve the list"};
    for (int64_t r : reps)
      if (r % 2 == 0 || r >= 2 * n) return {false, "representative " + std::to_string(r)};
    return {true, ""};
  }
  if (prop == "seeds") {
    ResidueClassSet s = seed_classes(f);
    bool ok = !s.members.empty() &&
              std::includes(adm.members.begin(), adm.members.end(), s.members.begin(),
                            s.members.end());
    return {ok, ok ? "" : "seed class outside the computed set"};
  }
  if (prop == "closure") {
    bool ok = closure_holds(adm);
    return {ok, ok ? "" : "product of two classes escapes the set"};
  }
  if (prop == "neg-square-forbidden") {
    ResidueClassSet forb = forbidden_classes(f);
    for (int64_t t = 1; t < m; t += 2) {
      if (gcd64(t, m) != 1) continue;
      if (!forb.contains(norm_mod(-t * t, m)))
        return {false, "-" + std::to_string(t) + "^2 is not forbidden"};
    }
    return {true, ""};
  }
  if (prop == "square-residue-rule") {
    const int64_t p = n;  // the sample is a prime here
    if (p < 3 || !is_prime(static_cast<uint64_t>(p)))
      return {false, "sample is not an odd prime"};
    std::set<int64_t> squares;
    for (int64_t t = 1; t < p; ++t) squares.insert(t * t % p);
    for (int64_t k = 1; k <= kRuleModuliBound; ++k) {
      if (k % p == 0) continue;
      FormSpec g{k, Sign::minus};
      bool member = divisor_classes(g).contains(norm_mod(p, g.modulus()));
      if (member != (squares.count(k % p) != 0))
        return {false, "N=" + std::to_string(k) + " disagrees with the square rule"};
    }
    return {true, ""};
  }
  return {false, "unknown property " + prop};
}

void verify_structure_record(const Record& rec, const VerificationBounds& B,
                             RecordReport& rep) {
  const Sign sign = sign_of(rec);
  std::vector<int64_t> samples = int_list(rec.fields.at("samples"));
  for (const json& pj : rec.fields.at("properties")) {
    const std::string prop = pj.get<std::string>();
    bool ok = true;
    std::string detail = std::to_string(samples.size()) + " moduli";
    for (int64_t n : samples) {
      PropResult one = structure_property(prop, sign, n, B);
      if (!one.ok) {
        ok = false;
        detail = "N=" + std::to_string(n) + ": " + one.detail;
        break;
      }
    }
    add(rep, prop, ok, detail);
  }
}

// ---- count table -----------------------------------------------------------

int64_t shape_formula(int64_t n) {
  int64_t out = n % 2 == 0 ? 2 : 1;
  for (int64_t p : factorize(n))
    if (p % 2 == 1) out *= p - 1;
  return out;
}

void verify_count_table_record(const Record& rec, const VerificationBounds& B,
                               RecordReport& rep) {
  (void)B;
  if (rec.fields.contains("rows")) {
    static const std::vector<std::pair<std::string, std::vector<int64_t>>> shapes = {
        {"N=1: 1", {1}},
        {"N=2: 2", {2}},
        {"N=p: p-1", {3, 5, 7, 13, 23}},
        {"N=2p: 2(p-1)", {6, 10, 14, 22, 26}},
        {"N=pq: (p-1)(q-1)", {15, 21, 33, 35}},
        {"N=2pq: 2(p-1)(q-1)", {30, 42}},
        {"N=pqr: (p-1)(q-1)(r-1)", {105}},
        {"N=2pqr: 2(p-1)(q-1)(r-1)", {210}},
    };

    std::vector<std::string> rows;
    for (const json& r : rec.fields.at("rows")) rows.push_back(r.get<std::string>());
    std::vector<std::string> expected;
    for (const auto& [row, _] : shapes) expected.push_back(row);
    add(rep, "table-content", rows == expected,
        rows == expected ? std::to_string(rows.size()) + " rows"
                         : "corrected rows differ from the canonical table");

    std::string fail;
    int64_t cases = 0;
    for (const auto& [row, ns] : shapes)
      for (int64_t n : ns) {
        int64_t formula = shape_formula(n);
        int64_t direct = squarefree_class_count(n);
        int64_t actual = static_cast<int64_t>(divisor_classes({n, Sign::plus}).size());
        if (formula != actual || direct != actual) {
          fail = "N=" + std::to_string(n) + ": formula " + std::to_string(formula) +
                 " vs " + std::to_string(actual) + " classes";
          break;
        }
        ++cases;
      }
    add(rep, "row-values", fail.empty(),
        fail.empty() ? std::to_string(cases) + " sample moduli" : fail);

    bool tr_ok = true;
    std::string tr_detail;
    if (rec.fields.contains("rows_printed")) {
      std::vector<std::string> printed;
      for (const json& r : rec.fields.at("rows_printed")) printed.push_back(r.get<std::string>());
      if (printed != rows && rec.errata.empty()) {
        tr_ok = false;
        tr_detail = "printed rows differ with no erratum";
      }
    }
    add(rep, "transcription", tr_ok, tr_detail);
    return;
  }

  const int64_t n = rec.fields.at("count_n").get<int64_t>();
  const int64_t count = rec.fields.at("count").get<int64_t>();
  ResidueClassSet adm = divisor_classes({n, Sign::minus});
  bool ok = static_cast<int64_t>(adm.size()) == count &&
            squarefree_class_count(n) == count && shape_formula(n) == count;
  add(rep, "count", ok,
      ok ? std::to_string(count) + " classes mod " + std::to_string(4 * n)
         : "stated count " + std::to_string(count) + " vs computed " +
               std::to_string(adm.size()));
  if (rec.fields.contains("formula_pairs")) {
    const int64_t pairs = rec.fields.at("formula_pairs").get<int64_t>();
    add(rep, "pair-count", 2 * pairs == count,
        std::to_string(pairs) + " mirror pairs");
  }
}

// ---- character table --------------------------------------------------------

void verify_character_table_record(const Record& rec, const VerificationBounds& B,
                                   RecordReport& rep) {
  (void)B;
  const Sign sign = sign_of(rec);
  std::set<std::string> documented;
  for (const Erratum& e : rec.errata) documented.insert(e.printed);

  std::string fail_rows;
  bool tr_ok = true;
  std::string tr_detail;
  size_t nrows = 0;
  for (const json& row : rec.fields.at("rows")) {
    const int64_t p = row.at("p").get<int64_t>();
    ++nrows;
    CharacterRow cr = character_row(p, sign);
    auto normalize = [&](const json& arr, std::vector<std::string>* text) {
      std::set<int64_t> s;
      for (const json& e : arr) {
        if (e.is_string()) {
          if (text) text->push_back(e.get<std::string>());
          continue;
        }
        s.insert(norm_mod(e.get<int64_t>(), p));
      }
      return s;
    };
    std::set<int64_t> yes = normalize(row.at("yes"), nullptr);
    std::set<int64_t> no = normalize(row.at("no"), nullptr);
    std::set<int64_t> cyes(cr.plus_classes.begin(), cr.plus_classes.end());
    std::set<int64_t> cno(cr.minus_classes.begin(), cr.minus_classes.end());
    if ((yes != cyes || no != cno) && fail_rows.empty())
      fail_rows = "row for prime " + std::to_string(p) + " disagrees";

    for (const char* key : {"yes_printed", "no_printed"}) {
      if (!row.contains(key)) continue;
      std::vector<std::string> text;
      std::set<int64_t> printed = normalize(row.at(key), &text);
      for (const std::string& s : text)
        if (!documented.count(s)) {
          tr_ok = false;
          tr_detail = "printed entry \"" + s + "\" lacks an erratum";
        }
      const std::set<int64_t>& target = key[0] == 'y' ? yes : no;
      if (printed != target && rec.errata.empty()) {
        tr_ok = false;
        tr_detail = "printed row differs with no erratum";
      }
    }
  }
  add(rep, "rows", fail_rows.empty(),
      fail_rows.empty() ? std::to_string(nrows) + " rows" : fail_rows);

  // The residue rule must match the classes themselves, not just the rows:
  // P lands among the divisors of x^2 +- N y^2 exactly when the row for P
  // admits N mod P.
  std::string fail_rule;
  std::vector<int64_t> rule_primes = int_list(rec.fields.at("rule_primes"));
  for (int64_t p : rule_primes) {
    CharacterRow cr = character_row(p, sign);
    std::set<int64_t> yes(cr.plus_classes.begin(), cr.plus_classes.end());
    for (int64_t k = 1; k <= kRuleModuliBound; ++k) {
      if (k % p == 0) continue;
      FormSpec g{k, sign};
      bool member = divisor_classes(g).contains(norm_mod(p, g.modulus()));
      if (member != (yes.count(norm_mod(k, p)) != 0)) {
        fail_rule = "prime " + std::to_string(p) + ", N=" + std::to_string(k);
        break;
      }
    }
    if (!fail_rule.empty()) break;
  }
  add(rep, "rule", fail_rule.empty(),
      fail_rule.empty() ? std::to_string(rule_primes.size()) + " primes against moduli 1.." +
                              std::to_string(kRuleModuliBound)
                        : fail_rule);
  add(rep, "transcription", tr_ok, tr_detail);
}

// ---- reduction ----------------------------------------------------------------

void verify_reduction_record(const Record& rec, const VerificationBounds& B,
                             RecordReport& rep) {
  (void)B;
  const Sign sign = sign_of(rec);
  const bool expect = rec.fields.at("expect").get<bool>();
  std::string fail_red, fail_shift;
  std::vector<int64_t> samples = int_list(rec.fields.at("samples"));
  for (int64_t n : samples) {
    FormSpec f{n, sign};
    const int64_t m = f.modulus();
    ResidueClassSet adm = divisor_classes(f);
    ResidueClassSet forb = forbidden_classes(f);

    bool stable = true;
    for (int64_t r : adm.members)
      if (!adm.contains(r + 2 * n)) {
        stable = false;
        break;
      }
    auto rc = reduced_classes(f);
    if (fail_red.empty()) {
      if (stable != expect || rc.has_value() != expect)
        fail_red = "N=" + std::to_string(n) + ": stability disagrees";
      else if (rc) {
        bool ok = rc->modulus == 2 * n && 2 * rc->members.size() == adm.members.size();
        for (int64_t r : adm.members) ok = ok && rc->contains(r);
        if (!ok) fail_red = "N=" + std::to_string(n) + ": reduced set mismatch";
      }
    }

    // The printed consequence: shifting an odd square class by 2N stays
    // admissible exactly when the set reduces.
    if (fail_shift.empty()) {
      for (int64_t t = 1; t < m; t += 2) {
        if (gcd64(t, m) != 1) continue;
        int64_t sq = norm_mod(t * t, m);
        bool good = expect ? adm.contains(sq) && adm.contains(sq + 2 * n)
                           : adm.contains(sq) && forb.contains(sq + 2 * n);
        if (!good) {
          fail_shift = "N=" + std::to_string(n) + ", square class " + std::to_string(sq);
          break;
        }
      }
    }
  }
  add(rep, "reduction", fail_red.empty(),
      fail_red.empty() ? std::to_string(samples.size()) + " moduli" : fail_red);
  add(rep, "square-shift", fail_shift.empty(),
      fail_shift.empty() ? std::to_string(samples.size()) + " moduli" : fail_shift);
}

// ---- nonsquare families -------------------------------------------------------

std::string describe(const Counterexample& c, bool grid) {
  std::ostringstream os;
  if (grid)
    os << "m=" << c.x << " n=" << c.y;
  else
    os << "a=" << c.x << " b=" << c.y << " c=" << c.z;
  os << " gives " << c.value << " = " << c.root << "^2";
  return os.str();
}

void verify_family_scan_record(const Record& rec, const VerificationBounds& B,
                               RecordReport& rep) {
  const std::string text = rec.fields.at("family").get<std::string>();
  auto fam = family_from_text(text);
  add(rep, "parse", fam.has_value(),
      fam ? family_kind_name(fam->kind) : "unrecognized family " + text);
  if (!fam) return;
  ScanReport sr = scan_family(*fam, B.abc_bound, 1);
  add(rep, "scan", sr.clean(),
      sr.clean() ? std::to_string(sr.cells_scanned) + " cells, no squares"
                 : describe(sr.counterexamples.front(), false));
}

void verify_family_table_record(const Record& rec, const VerificationBounds& B,
                                RecordReport& rep) {
  const Sign sign = sign_of(rec);
  std::vector<int64_t> parents = int_list(rec.fields.at("parents"));
  std::set<int64_t> parent_set(parents.begin(), parents.end());

  std::vector<std::string> entries;
  for (const json& e : rec.fields.at("entries")) entries.push_back(e.get<std::string>());

  std::vector<NonsquareFamily> fams;
  std::string fail;
  for (const std::string& text : entries) {
    auto fam = family_from_text(text);
    const FamilyKind want = sign == Sign::plus ? FamilyKind::sum : FamilyKind::difference;
    if (!fam || fam->kind != want || !parent_set.count(fam->n)) {
      fail = "entry " + text;
      break;
    }
    fams.push_back(*fam);
  }
  add(rep, "parse", fail.empty(),
      fail.empty() ? std::to_string(entries.size()) + " families over " +
                         std::to_string(parents.size()) + " moduli"
                   : fail);
  if (!fail.empty()) return;

  // Every coefficient must sit in a forbidden class of its parent form.
  std::string fail_c;
  for (const NonsquareFamily& fam : fams) {
    ResidueClassSet forb = forbidden_classes({fam.n, sign});
    if (!forb.contains(norm_mod(fam.coeff, 4 * fam.n))) {
      fail_c = fam.text() + ": coefficient class is admissible";
      break;
    }
  }
  add(rep, "coefficient-class", fail_c.empty(), fail_c);

  // The table must list exactly the families the forbidden classes
  // generate: both printed spellings of each class for the sum grids, both
  // members of each mirror pair for the difference grids.
  std::map<int64_t, std::multiset<std::string>> stated;
  for (const NonsquareFamily& fam : fams) stated[fam.n].insert(fam.text());
  bool cover_ok = true;
  std::string fail_cover;
  for (int64_t n : parents) {
    std::multiset<std::string> expected;
    for (const NonsquareFamily& g : generate_families({n, sign})) {
      expected.insert(g.text());
      if (g.kind == FamilyKind::difference)
        expected.insert(
            NonsquareFamily{FamilyKind::difference, n, 4 * n - g.coeff, true, true}.text());
    }
    if (stated[n] != expected) {
      cover_ok = false;
      fail_cover = "modulus " + std::to_string(4 * n) + " rows differ from the forbidden classes";
      break;
    }
  }
  add(rep, "coverage", cover_ok,
      cover_ok ? "all forbidden classes of " + std::to_string(parents.size()) + " moduli"
               : fail_cover);

  // Rows come in pairs naming the same class of the same modulus.
  bool pair_ok = fams.size() % 2 == 0;
  std::string fail_pair = pair_ok ? "" : "odd row count";
  for (size_t i = 0; pair_ok && i + 1 < fams.size(); i += 2) {
    const NonsquareFamily& a = fams[i];
    const NonsquareFamily& b = fams[i + 1];
    const int64_t m = 4 * a.n;
    int64_t ca = norm_mod(a.coeff, m), cb = norm_mod(b.coeff, m);
    bool same = a.n == b.n && (sign == Sign::plus
                                   ? ca == cb
                                   : std::min(ca, m - ca) == std::min(cb, m - cb));
    if (!same) {
      pair_ok = false;
      fail_pair = a.text() + " / " + b.text();
    }
  }
  add(rep, "pairing", pair_ok, fail_pair);

  std::string fail_s;
  int64_t cells = 0;
  for (const NonsquareFamily& fam : fams) {
    ScanReport sr = scan_family(fam, B.grid_bound, 1);
    cells += sr.cells_scanned;
    if (!sr.clean()) {
      fail_s = fam.text() + ": " + describe(sr.counterexamples.front(), true);
      break;
    }
  }
  add(rep, "scan", fail_s.empty(),
      fail_s.empty() ? std::to_string(cells) + " cells, no squares" : fail_s);

  std::vector<std::string> printed;
  for (const json& e : rec.fields.at("entries_printed")) printed.push_back(e.get<std::string>());
  bool tr_ok = printed.size() == entries.size();
  std::string tr_detail = tr_ok ? "" : "printed row count differs";
  if (tr_ok)
    for (size_t i = 0; i < entries.size(); ++i) {
      if (printed[i] == entries[i]) continue;
      bool doc = false;
      for (const Erratum& e : rec.errata)
        doc = doc || (e.printed == printed[i] && e.corrected == entries[i]);
      if (!doc) {
        tr_ok = false;
        tr_detail = "printed entry \"" + printed[i] + "\" lacks an erratum";
      }
    }
  add(rep, "transcription", tr_ok, tr_detail);
}

}  // namespace

// ---- catalog loading ---------------------------------------------------------

const Record* Catalog::find(const std::string& id) const {
  for (const Record& r : records)
    if (r.id == id) return &r;
  return nullptr;
}

Catalog parse_catalog(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw data_error(std::string("catalog does not parse: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("records") || !doc.at("records").is_array())
    throw data_error("catalog must be an object with a records array");
  Catalog cat;
  cat.version = doc.value("version", 0);
  if (cat.version < 1) throw data_error("catalog version missing");
  std::set<std::string> ids;
  for (const json& r : doc.at("records")) {
    if (!r.is_object()) throw data_error("records must be objects");
    Record rec;
    rec.id = r.value("id", "");
    rec.title = r.value("title", "");
    rec.kind = r.value("kind", "");
    if (rec.id.empty() || rec.kind.empty()) throw data_error("record missing id or kind");
    if (!known_kinds().count(rec.kind))
      throw data_error("record " + rec.id + ": unknown kind " + rec.kind);
    if (!ids.insert(rec.id).second) throw data_error("duplicate record id " + rec.id);
    if (r.contains("errata")) {
      if (!r.at("errata").is_array())
        throw data_error("record " + rec.id + ": errata must be an array");
      for (const json& e : r.at("errata")) {
        if (!e.is_object() || !e.contains("printed") || !e.contains("corrected") ||
            !e.at("printed").is_string() || !e.at("corrected").is_string())
          throw data_error("record " + rec.id + ": errata need printed and corrected text");
        rec.errata.push_back(
            Erratum{e.at("printed").get<std::string>(), e.at("corrected").get<std::string>(),
                    e.value("note", "")});
      }
    }
    rec.fields = r;
    cat.records.push_back(std::move(rec));
  }
  if (cat.records.empty()) throw data_error("catalog has no records");
  return cat;
}

Catalog embedded_catalog() { return parse_catalog(detail::embedded_catalog_json()); }

Catalog load_catalog_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_error("cannot open catalog file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

namespace {

// Overwrites each corrected reading with its printed counterpart, at any
// nesting depth. "printed" shadows "corrected" (or "classes" in records
// that verify the class list directly), and every "X_printed" shadows "X".
void substitute_printed(json& node) {
  if (node.is_object()) {
    if (node.contains("printed")) {
      if (node.contains("corrected"))
        node["corrected"] = node.at("printed");
      else if (node.contains("classes"))
        node["classes"] = node.at("printed");
    }
    for (const char* key : {"special", "rows", "entries", "yes", "no"}) {
      const std::string printed_key = std::string(key) + "_printed";
      if (node.contains(printed_key)) node[key] = node.at(printed_key);
    }
    for (auto& [k, v] : node.items()) {
      (void)k;
      substitute_printed(v);
    }
  } else if (node.is_array()) {
    for (json& v : node) substitute_printed(v);
  }
}

}  // namespace

Catalog printed_text_catalog(const Catalog& cat) {
  Catalog out = cat;
  // Only records carrying errata change: everywhere else the normal run
  // already proves the printed and corrected readings say the same thing,
  // and swapping them would only reintroduce spelling artifacts (values the
  // text leaves implicit, or +- lists stored expanded).
  for (Record& r : out.records)
    if (!r.errata.empty()) substitute_printed(r.fields);
  return out;
}

// ---- verification -------------------------------------------------------------

bool RecordReport::passed() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

std::string RecordReport::status() const {
  if (!passed()) return "failed";
  return errata.empty() ? "verified" : "verified-with-errata";
}

RecordReport verify_record(const Record& rec, const VerificationBounds& bounds) {
  RecordReport rep;
  rep.id = rec.id;
  rep.title = rec.title;
  rep.kind = rec.kind;
  rep.errata = rec.errata;
  try {
    if (rec.kind == "classes")
      verify_classes_record(rec, bounds, rep);
    else if (rec.kind == "forbidden")
      verify_forbidden_record(rec, bounds, rep);
    else if (rec.kind == "representation")
      verify_representation_record(rec, bounds, rep);
    else if (rec.kind == "difference-of-squares")
      verify_diff_squares_record(rec, bounds, rep);
    else if (rec.kind == "multiplier")
      verify_multiplier_record(rec, bounds, rep);
    else if (rec.kind == "split")
      verify_split_record(rec, bounds, rep);
    else if (rec.kind == "split-multiplier")
      verify_split_multiplier_record(rec, bounds, rep);
    else if (rec.kind == "inclusion")
      verify_inclusion_record(rec, bounds, rep);
    else if (rec.kind == "structure")
      verify_structure_record(rec, bounds, rep);
    else if (rec.kind == "count-table")
      verify_count_table_record(rec, bounds, rep);
    else if (rec.kind == "character-table")
      verify_character_table_record(rec, bounds, rep);
    else if (rec.kind == "reduction")
      verify_reduction_record(rec, bounds, rep);
    else if (rec.kind == "family-scan")
      verify_family_scan_record(rec, bounds, rep);
    else if (rec.kind == "family-table")
      verify_family_table_record(rec, bounds, rep);
    else
      throw data_error("record " + rec.id + ": unknown kind " + rec.kind);
  } catch (const std::exception& e) {
    add(rep, "exception", false, e.what());
  }
  return rep;
}

std::vector<RecordReport> verify_catalog(const Catalog& cat, const VerificationBounds& bounds) {
  std::function<RecordReport(size_t)> work = [&](size_t i) {
    return verify_record(cat.records[i], bounds);
  };
  return parallel_map<RecordReport>(cat.records.size(), bounds.jobs, work);
}

std::vector<ErratumEntry> errata_list(const Catalog& cat) {
  std::vector<ErratumEntry> out;
  for (const Record& r : cat.records)
    for (const Erratum& e : r.errata) out.push_back({r.id, r.title, e});
  return out;
}

nlohmann::json report_json(const std::vector<RecordReport>& reports,
                           const VerificationBounds& b) {
  json out;
  out["bounds"] = {{"samples_per_class", b.samples_per_class},
                   {"witness_prime_limit", b.witness_prime_limit},
                   {"harvest_bound", b.harvest_bound},
                   {"rep_prime_bound_plus", b.rep_prime_bound_plus},
                   {"rep_prime_bound_minus", b.rep_prime_bound_minus},
                   {"second_witness_bound", b.second_witness_bound},
                   {"minus_search_bound", b.minus_search_bound},
                   {"survey_prime_bound", b.survey_prime_bound},
                   {"grid_bound", b.grid_bound},
                   {"abc_bound", b.abc_bound},
                   {"sweep_bound", b.sweep_bound}};
  int verified = 0, with_errata = 0, failed = 0;
  size_t checks = 0, errata = 0;
  json recs = json::array();
  for (const RecordReport& r : reports) {
    const std::string st = r.status();
    if (st == "verified")
      ++verified;
    else if (st == "failed")
      ++failed;
    else
      ++with_errata;
    checks += r.checks.size();
    errata += r.errata.size();
    json jr = {{"id", r.id}, {"title", r.title}, {"kind", r.kind}, {"status", st}};
    json jc = json::array();
    for (const CheckResult& c : r.checks) {
      json e = {{"name", c.name}, {"pass", c.pass}};
      if (!c.detail.empty()) e["detail"] = c.detail;
      jc.push_back(e);
    }
    jr["checks"] = jc;
    if (!r.errata.empty()) {
      json je = json::array();
      for (const Erratum& e : r.errata) {
        json o = {{"printed", e.printed}, {"corrected", e.corrected}};
        if (!e.note.empty()) o["note"] = e.note;
        je.push_back(o);
      }
      jr["errata"] = je;
    }
    recs.push_back(std::move(jr));
  }
  out["summary"] = {{"records", reports.size()},  {"verified", verified},
                    {"verified_with_errata", with_errata}, {"failed", failed},
                    {"checks", checks},           {"errata", errata}};
  out["records"] = recs;
  return out;
}

}  // namespace formdiv
