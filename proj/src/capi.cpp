#include "formdiv.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "catalog.hpp"
#include "error.hpp"
#include "forms.hpp"
#include "nonsquare.hpp"
#include "represent.hpp"

#ifndef FORMDIV_VERSION
#define FORMDIV_VERSION "0.0.0"
#endif

struct fd_catalog {
  formdiv::Catalog cat;
};

namespace {

using nlohmann::json;

thread_local std::string t_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fd_status fail(fd_status code, const std::string& message) {
  t_error = message;
  return code;
}

// Runs fn, routing the library's exception taxonomy onto status codes.
template <typename Fn>
fd_status wrap(Fn&& fn) {
  t_error.clear();
  try {
    return fn();
  } catch (const formdiv::data_error& e) {
    return fail(FD_DATA_ERROR, e.what());
  } catch (const formdiv::oracle_error& e) {
    return fail(FD_ORACLE_EXHAUSTED, e.what());
  } catch (const formdiv::overflow_error& e) {
    return fail(FD_INVALID_ARGUMENT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(FD_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(FD_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(FD_INTERNAL_ERROR, "unknown error");
  }
}

fd_status emit(const json& doc, char** json_out) {
  char* s = dup_string(doc.dump());
  if (s == nullptr) return fail(FD_INTERNAL_ERROR, "out of memory");
  *json_out = s;
  return FD_OK;
}

formdiv::Sign to_sign(fd_sign s) {
  if (s != FD_PLUS && s != FD_MINUS)
    throw formdiv::domain_error("sign must be FD_PLUS or FD_MINUS");
  return s == FD_PLUS ? formdiv::Sign::plus : formdiv::Sign::minus;
}

formdiv::VerificationBounds parse_bounds(const char* bounds_json) {
  formdiv::VerificationBounds b;
  if (bounds_json == nullptr) return b;
  json doc;
  try {
    doc = json::parse(bounds_json);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bounds do not parse: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("bounds must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_number_integer() || value.get<int64_t>() < 1)
      throw std::invalid_argument("bound " + key + " must be a positive integer");
    int64_t v = value.get<int64_t>();
    if (key == "samples_per_class")
      b.samples_per_class = static_cast<int>(v);
    else if (key == "witness_prime_limit")
      b.witness_prime_limit = v;
    else if (key == "harvest_bound")
      b.harvest_bound = v;
    else if (key == "rep_prime_bound_plus")
      b.rep_prime_bound_plus = v;
    else if (key == "rep_prime_bound_minus")
      b.rep_prime_bound_minus = v;
    else if (key == "second_witness_bound")
      b.second_witness_bound = v;
    else if (key == "minus_search_bound")
      b.minus_search_bound = v;
    else if (key == "survey_prime_bound")
      b.survey_prime_bound = v;
    else if (key == "grid_bound")
      b.grid_bound = v;
    else if (key == "abc_bound")
      b.abc_bound = v;
    else if (key == "sweep_bound")
      b.sweep_bound = v;
    else if (key == "jobs")
      b.jobs = static_cast<int>(v);
    else
      throw std::invalid_argument("unknown bound " + key);
  }
  return b;
}

json classes_json(const formdiv::ResidueClassSet& s) { return json(s.members); }

}  // namespace

extern "C" {

const char* fd_version(void) { return FORMDIV_VERSION; }

const char* fd_last_error(void) { return t_error.c_str(); }

void fd_string_free(char* s) { std::free(s); }

fd_status fd_catalog_open(const char* path, fd_catalog** out) {
  return wrap([&]() -> fd_status {
    if (out == nullptr) return fail(FD_INVALID_ARGUMENT, "out pointer is null");
    auto handle = new fd_catalog;
    try {
      handle->cat = path == nullptr ? formdiv::embedded_catalog()
                                    : formdiv::load_catalog_file(path);
    } catch (...) {
      delete handle;
      throw;
    }
    *out = handle;
    return FD_OK;
  });
}

void fd_catalog_close(fd_catalog* cat) { delete cat; }

int fd_catalog_size(const fd_catalog* cat) {
  return cat == nullptr ? 0 : static_cast<int>(cat->cat.records.size());
}

fd_status fd_catalog_errata(const fd_catalog* cat, char** json_out) {
  return wrap([&]() -> fd_status {
    if (cat == nullptr || json_out == nullptr)
      return fail(FD_INVALID_ARGUMENT, "null argument");
    json out = json::array();
    for (const formdiv::ErratumEntry& e : formdiv::errata_list(cat->cat)) {
      json o = {{"id", e.id},
                {"title", e.title},
                {"printed", e.erratum.printed},
                {"corrected", e.erratum.corrected}};
      if (!e.erratum.note.empty()) o["note"] = e.erratum.note;
      out.push_back(std::move(o));
    }
    return emit(out, json_out);
  });
}

fd_status fd_verify(const fd_catalog* cat, const char* record_id,
                    const char* bounds_json, int as_printed, char** json_out) {
  return wrap([&]() -> fd_status {
    if (cat == nullptr || json_out == nullptr)
      return fail(FD_INVALID_ARGUMENT, "null argument");
    formdiv::VerificationBounds bounds = parse_bounds(bounds_json);
    formdiv::Catalog view =
        as_printed != 0 ? formdiv::printed_text_catalog(cat->cat) : cat->cat;

    std::vector<formdiv::RecordReport> reports;
    if (record_id == nullptr) {
      reports = formdiv::verify_catalog(view, bounds);
    } else {
      const formdiv::Record* rec = view.find(record_id);
      if (rec == nullptr)
        return fail(FD_INVALID_ARGUMENT, std::string("no record named ") + record_id);
      reports.push_back(formdiv::verify_record(*rec, bounds));
    }
    json doc = formdiv::report_json(reports, bounds);
    doc["as_printed"] = as_printed != 0;
    return emit(doc, json_out);
  });
}

fd_status fd_classes(int64_t n, fd_sign sign, char** json_out) {
  return wrap([&]() -> fd_status {
    if (json_out == nullptr) return fail(FD_INVALID_ARGUMENT, "null argument");
    formdiv::FormSpec f{n, to_sign(sign)};
    formdiv::ResidueClassSet adm = formdiv::divisor_classes(f);
    json doc = {{"n", n},
                {"sign", formdiv::sign_name(f.sign)},
                {"modulus", f.modulus()},
                {"degenerate", f.degenerate()},
                {"admissible", classes_json(adm)},
                {"forbidden", classes_json(formdiv::forbidden_classes(f))},
                {"count", adm.members.size()}};
    auto red = formdiv::reduced_classes(f);
    if (red.has_value())
      doc["reduced"] = {{"modulus", red->modulus}, {"classes", classes_json(*red)}};
    else
      doc["reduced"] = nullptr;
    return emit(doc, json_out);
  });
}

fd_status fd_represent(int64_t value, int64_t p, int64_t q, fd_sign sign,
                       int64_t search_bound, char** json_out) {
  return wrap([&]() -> fd_status {
    if (json_out == nullptr) return fail(FD_INVALID_ARGUMENT, "null argument");
    formdiv::TwoCoefForm f{p, q, to_sign(sign)};
    int64_t bound = search_bound > 0 ? search_bound : formdiv::kMinusSearchBound;
    auto w = formdiv::represent(value, f, bound);
    json doc = {{"value", value},
                {"form", {{"p", p}, {"q", q}, {"sign", formdiv::sign_name(f.sign)}}},
                {"search_bound", bound}};
    if (w.has_value())
      doc["witness"] = {{"a", w->a}, {"b", w->b}};
    else
      doc["witness"] = nullptr;
    return emit(doc, json_out);
  });
}

fd_status fd_character_table(fd_sign sign, int64_t prime_max, char** json_out) {
  return wrap([&]() -> fd_status {
    if (json_out == nullptr) return fail(FD_INVALID_ARGUMENT, "null argument");
    if (prime_max < 3)
      return fail(FD_INVALID_ARGUMENT, "prime_max must be at least 3");
    formdiv::Sign s = to_sign(sign);
    json rows = json::array();
    for (int64_t p : formdiv::sieve_primes(prime_max)) {
      if (p == 2) continue;
      formdiv::CharacterRow row = formdiv::character_row(p, s);
      rows.push_back({{"prime", p},
                      {"admits", json(row.plus_classes)},
                      {"excludes", json(row.minus_classes)}});
    }
    json doc = {{"sign", formdiv::sign_name(s)}, {"prime_max", prime_max}, {"rows", rows}};
    return emit(doc, json_out);
  });
}

fd_status fd_scan(const char* family_text, int64_t bound, int jobs, char** json_out) {
  return wrap([&]() -> fd_status {
    if (family_text == nullptr || json_out == nullptr)
      return fail(FD_INVALID_ARGUMENT, "null argument");
    auto fam = formdiv::family_from_text(family_text);
    if (!fam.has_value())
      return fail(FD_INVALID_ARGUMENT,
                  std::string("unrecognized family ") + family_text);
    formdiv::ScanReport rep = formdiv::scan_family(*fam, bound, jobs < 1 ? 1 : jobs);
    json cexs = json::array();
    for (const formdiv::Counterexample& c : rep.counterexamples) {
      json o = {{"value", c.value}, {"root", c.root}, {"sign", c.sign}};
      bool grid = fam->kind == formdiv::FamilyKind::sum ||
                  fam->kind == formdiv::FamilyKind::difference;
      o["vars"] = grid ? json{c.x, c.y} : json{c.x, c.y, c.z};
      cexs.push_back(std::move(o));
    }
    json doc = {{"family", fam->text()},
                {"kind", formdiv::family_kind_name(fam->kind)},
                {"bound", bound},
                {"cells_scanned", rep.cells_scanned},
                {"clean", rep.clean()},
                {"counterexamples", cexs}};
    return emit(doc, json_out);
  });
}

}  // extern "C"
