// Command-line front end. Talks to the library exclusively through the C
// surface in formdiv.h; everything it prints is rendered from the JSON
// documents that surface returns.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdint>
#include <json.hpp>
#include <string>

#include "formdiv.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;  // verification failure or counterexample
constexpr int kExitUsage = 2;    // bad invocation or bad data

struct Options {
  std::string format = "table";
  std::string catalog_path;  // empty = embedded

  int64_t n = 0;
  std::string sign = "plus";

  int64_t value = 0;
  int64_t p = 0;
  int64_t q = 0;
  int64_t search_bound = 0;

  std::string record;
  bool all = false;
  bool as_printed = false;
  json bounds = json::object();

  int64_t prime_max = 13;

  std::string family;
  int64_t bound = 0;
};

int usage_error(const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  return kExitUsage;
}

int api_error(fd_status status) {
  std::fprintf(stderr, "error: %s\n", fd_last_error());
  // data problems and bad arguments are both invocation-level failures
  (void)status;
  return kExitUsage;
}

// Takes ownership of the C string and parses it.
json take(char* s) {
  std::string text = s == nullptr ? "null" : s;
  fd_string_free(s);
  return json::parse(text);
}

void print_json(const json& doc) { std::printf("%s\n", doc.dump(2).c_str()); }

fd_sign sign_of(const std::string& s) { return s == "minus" ? FD_MINUS : FD_PLUS; }

std::string join(const json& arr) {
  std::string out;
  for (const json& v : arr) {
    if (!out.empty()) out += ' ';
    out += v.dump();
  }
  return out;
}

std::string form_text(int64_t p, int64_t q, const std::string& sign) {
  std::string px = p == 1 ? "" : std::to_string(p);
  std::string qx = q == 1 ? "" : std::to_string(q);
  return px + "x^2 " + (sign == "minus" ? "-" : "+") + " " + qx + "y^2";
}

struct CatalogHandle {
  fd_catalog* cat = nullptr;
  ~CatalogHandle() { fd_catalog_close(cat); }
};

int run_classes(const Options& o) {
  char* out = nullptr;
  fd_status st = fd_classes(o.n, sign_of(o.sign), &out);
  if (st != FD_OK) return api_error(st);
  json doc = take(out);
  if (o.format == "json") {
    print_json(doc);
    return kExitOk;
  }
  std::printf("form: %s\n", form_text(1, o.n, o.sign).c_str());
  if (doc.at("degenerate").get<bool>())
    std::printf("degenerate: N is a square, so the form factors and every odd class\n"
                "coprime to the modulus contains divisors\n");
  int64_t m = doc.at("modulus").get<int64_t>();
  std::printf("admissible mod %lld: %s\n", static_cast<long long>(m),
              join(doc.at("admissible")).c_str());
  std::printf("forbidden  mod %lld: %s\n", static_cast<long long>(m),
              join(doc.at("forbidden")).c_str());
  if (doc.at("reduced").is_null()) {
    std::printf("not reducible\n");
  } else {
    std::printf("reduced mod %lld: %s\n",
                static_cast<long long>(doc.at("reduced").at("modulus").get<int64_t>()),
                join(doc.at("reduced").at("classes")).c_str());
  }
  return kExitOk;
}

int run_represent(const Options& o) {
  int64_t p = o.p, q = o.q;
  if (o.n != 0) {
    if (p != 0 || q != 0) return usage_error("give --n or --p/--q, not both");
    p = 1;
    q = o.n;
  } else if (p == 0 || q == 0) {
    return usage_error("represent needs --n, or --p and --q");
  }
  char* out = nullptr;
  fd_status st = fd_represent(o.value, p, q, sign_of(o.sign), o.search_bound, &out);
  if (st != FD_OK) return api_error(st);
  json doc = take(out);
  if (o.format == "json") {
    print_json(doc);
    return kExitOk;
  }
  if (doc.at("witness").is_null()) {
    std::printf("none\n");
    return kExitOk;
  }
  int64_t a = doc.at("witness").at("a").get<int64_t>();
  int64_t b = doc.at("witness").at("b").get<int64_t>();
  std::string pa = p == 1 ? "" : std::to_string(p) + "*";
  std::string qb = q == 1 ? "" : std::to_string(q) + "*";
  std::printf("%lld = %s%lld^2 %s %s%lld^2\n", static_cast<long long>(o.value), pa.c_str(),
              static_cast<long long>(a), o.sign == "minus" ? "-" : "+", qb.c_str(),
              static_cast<long long>(b));
  return kExitOk;
}

int run_verify(const Options& o) {
  CatalogHandle h;
  fd_status st =
      fd_catalog_open(o.catalog_path.empty() ? nullptr : o.catalog_path.c_str(), &h.cat);
  if (st != FD_OK) return api_error(st);

  std::string bounds = o.bounds.dump();
  char* out = nullptr;
  st = fd_verify(h.cat, o.record.empty() ? nullptr : o.record.c_str(),
                 o.bounds.empty() ? nullptr : bounds.c_str(), o.as_printed ? 1 : 0, &out);
  if (st != FD_OK) return api_error(st);
  json doc = take(out);
  int failed = doc.at("summary").at("failed").get<int>();
  if (o.format == "json") {
    print_json(doc);
    return failed == 0 ? kExitOk : kExitFinding;
  }
  for (const json& r : doc.at("records")) {
    std::string status = r.at("status").get<std::string>();
    std::printf("%-12s %-22s %zu checks\n", r.at("id").get<std::string>().c_str(),
                status.c_str(), r.at("checks").size());
    for (const json& c : r.at("checks")) {
      if (c.at("pass").get<bool>()) continue;
      std::printf("    failed %s: %s\n", c.at("name").get<std::string>().c_str(),
                  c.value("detail", "").c_str());
    }
    if (r.contains("errata"))
      for (const json& e : r.at("errata"))
        std::printf("    erratum: \"%s\" -> \"%s\"\n",
                    e.at("printed").get<std::string>().c_str(),
                    e.at("corrected").get<std::string>().c_str());
  }
  const json& s = doc.at("summary");
  std::printf("%d records: %d verified, %d verified with errata, %d failed; %d errata\n",
              s.at("records").get<int>(), s.at("verified").get<int>(),
              s.at("verified_with_errata").get<int>(), failed, s.at("errata").get<int>());
  return failed == 0 ? kExitOk : kExitFinding;
}

int run_tables(const Options& o) {
  char* out = nullptr;
  fd_status st = fd_character_table(sign_of(o.sign), o.prime_max, &out);
  if (st != FD_OK) return api_error(st);
  json doc = take(out);
  if (o.format == "json") {
    print_json(doc);
    return kExitOk;
  }
  std::printf("form x^2 %s N y^2: classes of N mod P that put +-P among the divisors\n",
              o.sign == "minus" ? "-" : "+");
  for (const json& r : doc.at("rows")) {
    long long p = r.at("prime").get<long long>();
    std::printf("P=%-3lld  +%lld: %-24s -%lld: %s\n", p, p, join(r.at("admits")).c_str(), p,
                join(r.at("excludes")).c_str());
  }
  return kExitOk;
}

int run_scan(const Options& o, int jobs) {
  if (o.family.empty()) return usage_error("scan needs --family (or --corollary)");
  int64_t bound = o.bound;
  if (bound == 0)
    bound = o.family.find("abc") != std::string::npos ? 60 : 300;
  char* out = nullptr;
  fd_status st = fd_scan(o.family.c_str(), bound, jobs, &out);
  if (st != FD_OK) return api_error(st);
  json doc = take(out);
  bool clean = doc.at("clean").get<bool>();
  if (o.format == "json") {
    print_json(doc);
    return clean ? kExitOk : kExitFinding;
  }
  std::string tail =
      clean ? "clean" : std::to_string(doc.at("counterexamples").size()) + " squares";
  std::printf("family %s (bound %lld): %lld assignments, %s\n",
              doc.at("family").get<std::string>().c_str(),
              static_cast<long long>(doc.at("bound").get<int64_t>()),
              static_cast<long long>(doc.at("cells_scanned").get<int64_t>()), tail.c_str());
  std::string kind = doc.at("kind").get<std::string>();
  const bool grid = kind == "sum" || kind == "difference";
  const char* names = grid ? "mn" : "abc";
  for (const json& c : doc.at("counterexamples")) {
    std::string vars;
    int i = 0;
    for (const json& v : c.at("vars"))
      vars += std::string(1, names[i++]) + "=" + v.dump() + " ";
    std::printf("  %ssign=%c value=%lld=%lld^2\n", vars.c_str(),
                c.at("sign").get<int>() < 0 ? '-' : '+',
                static_cast<long long>(c.at("value").get<int64_t>()),
                static_cast<long long>(c.at("root").get<int64_t>()));
  }
  return clean ? kExitOk : kExitFinding;
}

int run_errata(const Options& o) {
  CatalogHandle h;
  fd_status st =
      fd_catalog_open(o.catalog_path.empty() ? nullptr : o.catalog_path.c_str(), &h.cat);
  if (st != FD_OK) return api_error(st);
  char* out = nullptr;
  st = fd_catalog_errata(h.cat, &out);
  if (st != FD_OK) return api_error(st);
  json doc = take(out);
  if (o.format == "json") {
    print_json(doc);
    return kExitOk;
  }
  for (const json& e : doc) {
    std::printf("%-8s \"%s\" -> \"%s\"\n", e.at("id").get<std::string>().c_str(),
                e.at("printed").get<std::string>().c_str(),
                e.at("corrected").get<std::string>().c_str());
    if (e.contains("note"))
      std::printf("         (%s)\n", e.at("note").get<std::string>().c_str());
  }
  std::printf("%zu errata\n", doc.size());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"residue classes of the prime divisors of x^2 +- N y^2"};
  app.set_version_flag("--version", fd_version());
  app.require_subcommand(1);

  Options o;
  int jobs = 1;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
  };
  auto add_sign = [&](CLI::App* cmd) {
    cmd->add_option("--sign", o.sign, "plus for x^2+Ny^2, minus for x^2-Ny^2")
        ->check(CLI::IsMember({"plus", "minus"}));
  };

  CLI::App* classes = app.add_subcommand("classes", "divisor classes mod 4N");
  classes->add_option("--n", o.n, "the N of x^2 +- N y^2")->required();
  add_sign(classes);
  add_format(classes);

  CLI::App* represent =
      app.add_subcommand("represent", "coprime representation of a value");
  represent->add_option("--value", o.value, "number to represent")->required();
  represent->add_option("--n", o.n, "shorthand for --p 1 --q N");
  represent->add_option("--p", o.p, "coefficient of a^2");
  represent->add_option("--q", o.q, "coefficient of b^2");
  represent->add_option("--search-bound", o.search_bound,
                        "b ceiling for minus forms (default 10000)");
  add_sign(represent);
  add_format(represent);

  CLI::App* verify = app.add_subcommand("verify", "re-derive the catalog's claims");
  verify->add_option("--record", o.record, "verify a single record by id");
  verify->add_flag("--all", o.all, "verify every record (the default)")
      ->excludes(verify->get_option("--record"));
  verify->add_flag("--as-printed", o.as_printed,
                   "verify the text exactly as typeset; recorded errata then fail");
  verify->add_option("--catalog", o.catalog_path, "catalog file (default: embedded)");
  add_format(verify);
  struct BoundFlag {
    const char* flag;
    const char* key;
    const char* help;
  };
  static const BoundFlag bound_flags[] = {
      {"--jobs", "jobs", "worker threads"},
      {"--samples", "samples_per_class", "primes sampled per class"},
      {"--witness-prime-limit", "witness_prime_limit", "ceiling for class samples"},
      {"--harvest-bound", "harvest_bound", "coprime grid for factor harvests"},
      {"--rep-prime-bound-plus", "rep_prime_bound_plus", "representation sweep, plus"},
      {"--rep-prime-bound-minus", "rep_prime_bound_minus", "representation sweep, minus"},
      {"--second-witness-bound", "second_witness_bound", "sweep for repeat witnesses"},
      {"--minus-search-bound", "minus_search_bound", "b ceiling per minus search"},
      {"--survey-prime-bound", "survey_prime_bound", "multiplier/split sweeps"},
      {"--grid-bound", "grid_bound", "m,n ceiling for family scans"},
      {"--abc-bound", "abc_bound", "a,b,c ceiling for family scans"},
      {"--sweep-bound", "sweep_bound", "difference-of-squares sweep"},
  };
  constexpr size_t kNumBounds = sizeof(bound_flags) / sizeof(bound_flags[0]);
  static int64_t bound_values[kNumBounds];
  for (size_t i = 0; i < kNumBounds; ++i)
    verify->add_option(bound_flags[i].flag, bound_values[i], bound_flags[i].help);

  CLI::App* tables =
      app.add_subcommand("tables", "prime-by-prime admission rule for +-P");
  tables->add_option("--prime-max", o.prime_max, "largest prime row");
  add_sign(tables);
  add_format(tables);

  CLI::App* scan = app.add_subcommand("scan", "never-a-square family scan");
  scan->add_option("--family", o.family, "family text, e.g. \"4mn-(m+n)\"");
  scan->add_option("--corollary", o.family, "alias for --family, e.g. \"4abc-b-c\"")
      ->excludes(scan->get_option("--family"));
  scan->add_option("--bound", o.bound, "grid ceiling (default 300, abc families 60)");
  scan->add_option("--jobs", jobs, "worker threads");
  add_format(scan);

  CLI::App* errata = app.add_subcommand("errata", "all printed/corrected divergences");
  errata->add_option("--catalog", o.catalog_path, "catalog file (default: embedded)");
  add_format(errata);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (classes->parsed()) return run_classes(o);
  if (represent->parsed()) return run_represent(o);
  if (verify->parsed()) {
    for (size_t i = 0; i < kNumBounds; ++i)
      if (verify->get_option(bound_flags[i].flag)->count() > 0)
        o.bounds[bound_flags[i].key] = bound_values[i];
    return run_verify(o);
  }
  if (tables->parsed()) return run_tables(o);
  if (scan->parsed()) return run_scan(o, jobs);
  if (errata->parsed()) return run_errata(o);
  return kExitUsage;
}
