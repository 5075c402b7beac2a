#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

// The statement catalog: a JSON list of residue-class claims with the
// printed text preserved verbatim, plus the machinery that re-derives every
// claim from scratch and reports where the printed text is wrong.

namespace formdiv {

struct Erratum {
  std::string printed;
  std::string corrected;
  std::string note;
};

struct Record {
  std::string id;
  std::string title;
  std::string kind;
  std::vector<Erratum> errata;
  nlohmann::json fields;  // the whole record object
};

struct Catalog {
  int version = 0;
  std::vector<Record> records;

  const Record* find(const std::string& id) const;
};

// Copy compiled into the library, so nothing depends on a data path.
Catalog embedded_catalog();
Catalog parse_catalog(const std::string& text);
Catalog load_catalog_file(const std::string& path);

// The catalog with every corrected reading replaced by the printed one, so
// the text can be verified exactly as typeset. Records carrying errata are
// expected to fail under this view; that failure is the demonstration.
Catalog printed_text_catalog(const Catalog& cat);

// Every knob a verification run depends on, so results are reproducible
// from the report alone.
struct VerificationBounds {
  int samples_per_class = 3;                // primes examined per residue class
  int64_t witness_prime_limit = 10'000'000; // ceiling when hunting those primes
  int64_t harvest_bound = 40;               // coprime (a, b) grid for factor harvests
  int64_t rep_prime_bound_plus = 100'000;   // representation sweeps, plus forms
  int64_t rep_prime_bound_minus = 3'000;    // same for minus forms
  int64_t second_witness_bound = 500;       // primes swept for a second witness
  int64_t minus_search_bound = 10'000;      // b ceiling per minus-form search
  int64_t survey_prime_bound = 20'000;      // multiplier / split sweeps
  int64_t grid_bound = 300;                 // m, n ceiling for mn family scans
  int64_t abc_bound = 60;                   // a, b, c ceiling for abc family scans
  int64_t sweep_bound = 2'000;              // difference-of-squares converse sweep
  int jobs = 1;                             // worker threads across records
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct RecordReport {
  std::string id;
  std::string title;
  std::string kind;
  std::vector<CheckResult> checks;
  std::vector<Erratum> errata;

  bool passed() const;
  // verified | verified-with-errata | failed
  std::string status() const;
};

RecordReport verify_record(const Record& rec, const VerificationBounds& bounds = {});
std::vector<RecordReport> verify_catalog(const Catalog& cat,
                                         const VerificationBounds& bounds = {});

struct ErratumEntry {
  std::string id;
  std::string title;
  Erratum erratum;
};

// All errata in catalog order.
std::vector<ErratumEntry> errata_list(const Catalog& cat);

nlohmann::json report_json(const std::vector<RecordReport>& reports,
                           const VerificationBounds& bounds);

}  // namespace formdiv
