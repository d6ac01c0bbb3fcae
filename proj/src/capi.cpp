#include "quiverkit/quiverkit.h"

#include <cstring>
#include <memory>
#include <string>

#include <json.hpp>

#include "quiverkit/document.hpp"
#include "quiverkit/error.hpp"
#include "quiverkit/homsearch.hpp"
#include "quiverkit/injective.hpp"
#include "quiverkit/limits.hpp"
#include "quiverkit/projective.hpp"
#include "quiverkit/verify.hpp"

struct qk_quiver {
  quiverkit::Quiver value;
};

struct qk_morphism {
  quiverkit::QuiverMorphism value;
};

namespace {

using namespace quiverkit;

thread_local std::string last_error;

qk_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_argument:
      return QK_INVALID_ARGUMENT;
    case ErrorKind::precondition:
      return QK_PRECONDITION;
    case ErrorKind::mismatch:
      return QK_MISMATCH;
    case ErrorKind::parse:
      return QK_PARSE_ERROR;
    case ErrorKind::budget_exhausted:
      return QK_BUDGET_EXHAUSTED;
    case ErrorKind::size_limit:
      return QK_SIZE_LIMIT;
  }
  return QK_INTERNAL;
}

template <typename F>
qk_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return QK_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    last_error = e.what();
    return QK_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return QK_INTERNAL;
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorKind::invalid_argument, what);
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

SearchBudget budget_of(uint64_t b) {
  SearchBudget budget;
  if (b != 0) budget.max_assignments = b;
  return budget;
}

qk_status check(const qk_quiver* q, int* holds, char** report_json,
                CheckReport (*decide)(const Quiver&)) {
  return guarded([&] {
    require(q && holds, "null argument");
    CheckReport r = decide(q->value);
    std::string text = report_json ? serialize(r) : std::string();
    *holds = r.ok ? 1 : 0;
    if (report_json) *report_json = dup_string(text);
  });
}

qk_status check(const qk_morphism* m, int* holds, char** report_json,
                CheckReport (*decide)(const QuiverMorphism&)) {
  return guarded([&] {
    require(m && holds, "null argument");
    CheckReport r = decide(m->value);
    std::string text = report_json ? serialize(r) : std::string();
    *holds = r.ok ? 1 : 0;
    if (report_json) *report_json = dup_string(text);
  });
}

CheckReport loaded_report(const Quiver& q) {
  CheckReport r;
  if (auto pair = find_unloaded_pair(q)) {
    r.fail("no edge from " + pair->first.to_string() + " to " + pair->second.to_string());
    r.witness = {pair->first, pair->second};
  }
  return r;
}

CheckReport mono_injective_report(const Quiver& q) {
  if (q.vertex_count() == 0) {
    CheckReport r;
    r.fail("quiver has no vertices");
    return r;
  }
  return loaded_report(q);
}

CheckReport epi_projective_report(const Quiver& q) {
  if (is_epi_projective(q)) return {};
  CheckReport r = check_disjoint_arrows(q);
  r.violations.insert(r.violations.begin(), "covering map is not an isomorphism");
  r.ok = false;
  return r;
}

}  // namespace

extern "C" {

const char* qk_version(void) { return "1.0.0"; }

const char* qk_last_error(void) { return last_error.c_str(); }

const char* qk_status_name(qk_status status) {
  switch (status) {
    case QK_OK:
      return "ok";
    case QK_INVALID_ARGUMENT:
      return "invalid argument";
    case QK_PARSE_ERROR:
      return "parse error";
    case QK_PRECONDITION:
      return "precondition violated";
    case QK_MISMATCH:
      return "domain/codomain mismatch";
    case QK_BUDGET_EXHAUSTED:
      return "search budget exhausted";
    case QK_SIZE_LIMIT:
      return "size limit exceeded";
    case QK_INTERNAL:
      break;
  }
  return "internal error";
}

void qk_string_free(char* s) { delete[] s; }

qk_status qk_quiver_parse(const char* text, qk_quiver** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new qk_quiver{parse_quiver(text)};
  });
}

qk_status qk_quiver_validate_document(const char* text, int* ok, char** report_json) {
  return guarded([&] {
    require(text && ok, "null argument");
    CheckReport r;
    try {
      r = validate_quiver(parse_quiver_data(text));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::invalid_argument) throw;
      r.fail(e.what());
    }
    std::string s = report_json ? serialize(r) : std::string();
    *ok = r.ok ? 1 : 0;
    if (report_json) *report_json = dup_string(s);
  });
}

qk_status qk_quiver_serialize(const qk_quiver* q, char** out) {
  return guarded([&] {
    require(q && out, "null argument");
    *out = dup_string(serialize(q->value));
  });
}

qk_status qk_quiver_to_dot(const qk_quiver* q, char** out) {
  return guarded([&] {
    require(q && out, "null argument");
    *out = dup_string(export_dot(q->value));
  });
}

qk_status qk_quiver_counts(const qk_quiver* q, size_t* vertices, size_t* edges) {
  return guarded([&] {
    require(q, "null argument");
    if (vertices) *vertices = q->value.vertex_count();
    if (edges) *edges = q->value.edge_count();
  });
}

qk_status qk_quiver_equal(const qk_quiver* a, const qk_quiver* b, int* equal) {
  return guarded([&] {
    require(a && b && equal, "null argument");
    *equal = a->value == b->value ? 1 : 0;
  });
}

void qk_quiver_free(qk_quiver* q) { delete q; }

qk_status qk_morphism_parse(const char* text, qk_morphism** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new qk_morphism{parse_morphism(text)};
  });
}

qk_status qk_morphism_serialize(const qk_morphism* m, char** out) {
  return guarded([&] {
    require(m && out, "null argument");
    *out = dup_string(serialize(m->value));
  });
}

qk_status qk_morphism_domain(const qk_morphism* m, qk_quiver** out) {
  return guarded([&] {
    require(m && out, "null argument");
    *out = new qk_quiver{m->value.dom()};
  });
}

qk_status qk_morphism_codomain(const qk_morphism* m, qk_quiver** out) {
  return guarded([&] {
    require(m && out, "null argument");
    *out = new qk_quiver{m->value.cod()};
  });
}

qk_status qk_morphism_kind(const qk_morphism* m, int* mono, int* epi, int* iso) {
  return guarded([&] {
    require(m, "null argument");
    if (mono) *mono = is_mono(m->value) ? 1 : 0;
    if (epi) *epi = is_epi(m->value) ? 1 : 0;
    if (iso) *iso = is_iso(m->value) ? 1 : 0;
  });
}

void qk_morphism_free(qk_morphism* m) { delete m; }

qk_status qk_is_loaded(const qk_quiver* q, int* holds, char** report_json) {
  return check(q, holds, report_json, loaded_report);
}

qk_status qk_is_mono_injective(const qk_quiver* q, int* holds, char** report_json) {
  return check(q, holds, report_json, mono_injective_report);
}

qk_status qk_is_epi_projective(const qk_quiver* q, int* holds, char** report_json) {
  return check(q, holds, report_json, epi_projective_report);
}

qk_status qk_is_mono_essential(const qk_morphism* m, int* holds, char** report_json) {
  return check(m, holds, report_json, is_mono_essential);
}

qk_status qk_is_epi_coessential(const qk_morphism* m, int* holds, char** report_json) {
  return check(m, holds, report_json, is_epi_coessential);
}

qk_status qk_loading(const qk_quiver* q, qk_quiver** out) {
  return guarded([&] {
    require(q && out, "null argument");
    *out = new qk_quiver{loading(q->value)};
  });
}

qk_status qk_explosion(const qk_quiver* q, qk_quiver** out) {
  return guarded([&] {
    require(q && out, "null argument");
    *out = new qk_quiver{explosion(q->value)};
  });
}

qk_status qk_envelope(const qk_quiver* q, qk_morphism** embedding) {
  return guarded([&] {
    require(q && embedding, "null argument");
    *embedding = new qk_morphism{envelope(q->value).embedding};
  });
}

qk_status qk_cover(const qk_quiver* q, qk_morphism** covering_map) {
  return guarded([&] {
    require(q && covering_map, "null argument");
    *covering_map = new qk_morphism{cover(q->value).map};
  });
}

qk_status qk_product(const qk_quiver* g, const qk_quiver* h, qk_morphism** first,
                     qk_morphism** second) {
  return guarded([&] {
    require(g && h && first && second, "null argument");
    Product p = product(g->value, h->value);
    auto a = std::make_unique<qk_morphism>(qk_morphism{p.first});
    *second = new qk_morphism{p.second};
    *first = a.release();
  });
}

qk_status qk_coproduct(const qk_quiver* g, const qk_quiver* h, qk_morphism** first,
                       qk_morphism** second) {
  return guarded([&] {
    require(g && h && first && second, "null argument");
    Coproduct c = coproduct(g->value, h->value);
    auto a = std::make_unique<qk_morphism>(qk_morphism{c.first});
    *second = new qk_morphism{c.second};
    *first = a.release();
  });
}

qk_status qk_equalizer(const qk_morphism* f, const qk_morphism* g, qk_morphism** inclusion) {
  return guarded([&] {
    require(f && g && inclusion, "null argument");
    *inclusion = new qk_morphism{equalizer(f->value, g->value).inclusion};
  });
}

qk_status qk_coequalizer(const qk_morphism* f, const qk_morphism* g, qk_morphism** quotient_map) {
  return guarded([&] {
    require(f && g && quotient_map, "null argument");
    *quotient_map = new qk_morphism{coequalizer(f->value, g->value).map};
  });
}

qk_status qk_count_homs(const qk_quiver* g, const qk_quiver* h, uint64_t budget,
                        uint64_t* count) {
  return guarded([&] {
    require(g && h && count, "null argument");
    *count = count_homs(g->value, h->value, budget_of(budget));
  });
}

qk_status qk_list_homs(const qk_quiver* g, const qk_quiver* h, uint64_t budget, char** json) {
  return guarded([&] {
    require(g && h && json, "null argument");
    nlohmann::json arr = nlohmann::json::array();
    for_each_hom(
        g->value, h->value,
        [&](const QuiverMorphism& m) {
          arr.push_back(nlohmann::json::parse(serialize(m)));
          return true;
        },
        budget_of(budget));
    *json = dup_string(arr.dump(2) + "\n");
  });
}

qk_status qk_verify_theorems(size_t vmax, size_t emax, uint64_t budget, int* all_passed,
                             char** report_json) {
  return guarded([&] {
    require(all_passed, "null argument");
    auto results = verify::verify_theorems(vmax, emax, budget_of(budget));
    nlohmann::json arr = nlohmann::json::array();
    bool ok = true;
    for (const auto& r : results) {
      ok = ok && r.passed();
      arr.push_back({{"suite", r.name},
                     {"cases", r.cases},
                     {"failures", r.failures},
                     {"first_failure", r.first_failure},
                     {"seconds", r.seconds}});
    }
    std::string s = report_json ? arr.dump(2) + "\n" : std::string();
    *all_passed = ok ? 1 : 0;
    if (report_json) *report_json = dup_string(s);
  });
}

}  // extern "C"
