#include <doctest.h>

#include <string>

#include "quiverkit/quiverkit.h"

namespace {

const char* kLoading = R"({"v": ["0", "1"], "e": [["e", "0", "1"], ["f", "0", "1"]]})";
const char* kLoop = R"({"v": ["a"], "e": [["l", "a", "a"]]})";

qk_quiver* parse(const char* text) {
  qk_quiver* q = nullptr;
  REQUIRE(qk_quiver_parse(text, &q) == QK_OK);
  return q;
}

std::string take(char* s) {
  std::string out = s;
  qk_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("C API: parse, serialize, counts") {
  qk_quiver* q = parse(kLoading);
  size_t v = 0, e = 0;
  CHECK(qk_quiver_counts(q, &v, &e) == QK_OK);
  CHECK(v == 2);
  CHECK(e == 2);

  char* text = nullptr;
  REQUIRE(qk_quiver_serialize(q, &text) == QK_OK);
  qk_quiver* again = parse(text);
  qk_string_free(text);
  int equal = 0;
  CHECK(qk_quiver_equal(q, again, &equal) == QK_OK);
  CHECK(equal == 1);

  char* dot = nullptr;
  REQUIRE(qk_quiver_to_dot(q, &dot) == QK_OK);
  CHECK(take(dot).find("digraph") == 0);

  qk_quiver_free(again);
  qk_quiver_free(q);
  CHECK(std::string(qk_version()) == "1.0.0");
}

TEST_CASE("C API: error reporting") {
  qk_quiver* q = nullptr;
  CHECK(qk_quiver_parse("{\"v\": [", &q) == QK_PARSE_ERROR);
  CHECK(q == nullptr);
  CHECK(std::string(qk_last_error()).find("line") != std::string::npos);
  CHECK(qk_quiver_parse(R"({"v":["a"],"e":[["e","a","b"]]})", &q) == QK_INVALID_ARGUMENT);
  CHECK(qk_quiver_parse(nullptr, &q) == QK_INVALID_ARGUMENT);
  CHECK(std::string(qk_status_name(QK_BUDGET_EXHAUSTED)) == "search budget exhausted");

  int ok = 1;
  char* report = nullptr;
  CHECK(qk_quiver_validate_document(R"({"v":["a"],"e":[["e","a","b"]]})", &ok, &report) == QK_OK);
  CHECK(ok == 0);
  CHECK(take(report).find("not in V") != std::string::npos);
  CHECK(qk_quiver_validate_document("[", &ok, nullptr) == QK_PARSE_ERROR);

  qk_morphism* m = nullptr;
  const char* collapse = R"({"dom":{"v":["a","b"],"e":[]},"cod":{"v":["z"],"e":[]},
                            "vmap":[["a","z"],["b","z"]],"emap":[]})";
  REQUIRE(qk_morphism_parse(collapse, &m) == QK_OK);
  int holds = 0;
  CHECK(qk_is_mono_essential(m, &holds, nullptr) == QK_PRECONDITION);
  CHECK(qk_is_epi_coessential(m, &holds, nullptr) == QK_OK);
  CHECK(holds == 0);
  int mono = -1, epi = -1, iso = -1;
  CHECK(qk_morphism_kind(m, &mono, &epi, &iso) == QK_OK);
  CHECK(mono == 0);
  CHECK(epi == 1);
  CHECK(iso == 0);

  qk_morphism* id = nullptr;
  qk_quiver* ab = nullptr;
  REQUIRE(qk_morphism_domain(m, &ab) == QK_OK);
  qk_quiver* z = nullptr;
  REQUIRE(qk_morphism_codomain(m, &z) == QK_OK);
  qk_morphism* a = nullptr;
  qk_morphism* b = nullptr;
  CHECK(qk_coproduct(ab, z, &a, &b) == QK_OK);
  CHECK(qk_equalizer(m, a, &id) == QK_MISMATCH);
  qk_morphism_free(a);
  qk_morphism_free(b);
  qk_quiver_free(ab);
  qk_quiver_free(z);
  qk_morphism_free(m);
}

TEST_CASE("C API: checks and constructions") {
  qk_quiver* d = parse(kLoading);
  qk_quiver* loop = parse(kLoop);
  int holds = -1;
  char* report = nullptr;
  CHECK(qk_is_loaded(d, &holds, &report) == QK_OK);
  CHECK(holds == 0);
  CHECK(take(report).find(R"("witness":["0","0"])") != std::string::npos);
  CHECK(qk_is_mono_injective(loop, &holds, nullptr) == QK_OK);
  CHECK(holds == 1);
  CHECK(qk_is_epi_projective(loop, &holds, &report) == QK_OK);
  CHECK(holds == 0);
  CHECK(take(report).find("\"criterion\":3") != std::string::npos);

  qk_quiver* l = nullptr;
  REQUIRE(qk_loading(d, &l) == QK_OK);
  qk_morphism* j = nullptr;
  REQUIRE(qk_envelope(d, &j) == QK_OK);
  qk_quiver* env = nullptr;
  REQUIRE(qk_morphism_codomain(j, &env) == QK_OK);
  int equal = 0;
  qk_quiver_equal(l, env, &equal);
  CHECK(equal == 1);
  CHECK(qk_is_mono_essential(j, &holds, nullptr) == QK_OK);
  CHECK(holds == 1);

  qk_morphism* p = nullptr;
  REQUIRE(qk_cover(loop, &p) == QK_OK);
  CHECK(qk_is_epi_coessential(p, &holds, nullptr) == QK_OK);
  CHECK(holds == 1);
  qk_quiver* x = nullptr;
  REQUIRE(qk_explosion(loop, &x) == QK_OK);
  size_t v = 0, e = 0;
  qk_quiver_counts(x, &v, &e);
  CHECK(v == 2);
  CHECK(e == 1);

  uint64_t n = 0;
  CHECK(qk_count_homs(d, loop, 0, &n) == QK_OK);
  CHECK(n == 1);
  CHECK(qk_count_homs(loop, d, 0, &n) == QK_OK);
  CHECK(n == 0);
  char* list = nullptr;
  CHECK(qk_list_homs(d, loop, 0, &list) == QK_OK);
  CHECK(take(list).find("\"vmap\"") != std::string::npos);

  qk_quiver* big = parse(R"({"v":["a","b","c","d","e","f"],"e":[]})");
  CHECK(qk_count_homs(big, big, 5, &n) == QK_BUDGET_EXHAUSTED);

  qk_morphism *first = nullptr, *second = nullptr;
  REQUIRE(qk_product(d, loop, &first, &second) == QK_OK);
  qk_morphism* q = nullptr;
  CHECK(qk_coequalizer(first, second, &q) == QK_MISMATCH);
  REQUIRE(qk_coequalizer(first, first, &q) == QK_OK);
  qk_morphism_free(q);
  qk_morphism_free(first);
  qk_morphism_free(second);

  for (auto* m : {j, p}) qk_morphism_free(m);
  for (auto* h : {d, loop, l, env, x, big}) qk_quiver_free(h);
}

TEST_CASE("C API: verify-theorems") {
  int passed = 0;
  char* report = nullptr;
  REQUIRE(qk_verify_theorems(1, 1, 0, &passed, &report) == QK_OK);
  CHECK(passed == 1);
  CHECK(take(report).find("\"suite\": \"envelope\"") != std::string::npos);
}
