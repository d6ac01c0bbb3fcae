#include <doctest.h>

#include "helpers.hpp"
#include "quiverkit/error.hpp"
#include "quiverkit/injective.hpp"
#include "quiverkit/limits.hpp"
#include "quiverkit/reflections.hpp"

using namespace qt;

namespace {

QuiverMorphism motivating_inclusion() {
  std::vector<Id> s = naturals(2);
  return lift_I({{s[0], Id::tagged(0, {"e"})}, {s[1], Id::tagged(1, {"e"})}}, build_M(ids({"e"})));
}

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::invalid_argument;
}

}  // namespace

TEST_CASE("edges_between") {
  Quiver k = build_K(ids({"a", "b"}));
  CHECK(edges_between(k, Id("a"), Id("b")) == std::vector<Id>{Id::pair("a", "b")});
  Quiver i = build_I(ids({"a", "b"}));
  CHECK(edges_between(i, Id("a"), Id("b")).empty());
  CHECK(edges_between(two_vertex_loaded(), Id("a"), Id("b")) == ids({"p", "q"}));
  CHECK_THROWS_AS(edges_between(k, Id("a"), Id("z")), Error);
}

TEST_CASE("loaded and mono-injective") {
  for (std::size_t n = 0; n <= 2; ++n) {
    std::vector<Id> s = naturals(n);
    CHECK(is_loaded(build_K(s)));
    CHECK(is_loaded(build_B(s)) == (n > 0));
    CHECK(is_loaded(build_I(s)) == (n == 0));
    CHECK(is_loaded(build_M(s)) == (n == 0));
  }
  CHECK(is_mono_injective(build_B(ids({"a"}))));
  CHECK(is_loaded(Quiver()));
  CHECK_FALSE(is_mono_injective(Quiver()));
  CHECK(is_mono_injective(two_vertex_loaded()));
  auto gap = find_unloaded_pair(loading_example());
  REQUIRE(gap.has_value());
  CHECK(gap->first == Id("0"));
  CHECK(gap->second == Id("0"));
}

TEST_CASE("extend_along_mono examples") {
  auto phi = motivating_inclusion();
  Quiver loop = build_B(ids({"l"}));
  std::vector<Id> s = naturals(2);
  auto psi = lift_I({{s[0], "1"}, {s[1], "1"}}, loop);
  auto hat = extend_along_mono(phi, psi);
  CHECK(hat.map_edge("e") == Id("l"));
  auto only = enumerate_homs(phi.cod(), loop);
  REQUIRE(only.size() == 1);
  CHECK(hat == only[0]);

  Quiver g = explosion_example();
  Quiver j = two_vertex_loaded();
  auto relabel = find_isomorphism(g, make({"p", "q", "r", "s"}, {{"E", "p", "p"},
                                                                  {"F", "q", "s"},
                                                                  {"G", "s", "q"},
                                                                  {"H", "s", "q"}}));
  REQUIRE(relabel.has_value());
  for (const auto& psi2 : enumerate_homs(g, j)) {
    CHECK(extend_along_mono(*relabel, psi2) == compose(psi2, invert(*relabel)));
  }

  auto from_empty = QuiverMorphism(Quiver(), g, {}, {});
  auto collapse = extend_along_mono(from_empty, QuiverMorphism(Quiver(), loop, {}, {}));
  for (Index e = 0; e < g.edge_count(); ++e) CHECK(collapse.edge_map()[e] == 0);

  CHECK(kind_of([&] { extend_along_mono(phi, lift_I({{s[0], "a"}, {s[1], "b"}}, build_I(ids({"a", "b"})))); }) ==
        ErrorKind::precondition);
  auto collapse2 = QuiverMorphism::from_ids(make({"a", "b"}, {}), make({"z"}, {}),
                                            {{"a", "z"}, {"b", "z"}}, {});
  CHECK(kind_of([&] { extend_along_mono(collapse2, lift_I({{"a", "1"}, {"b", "1"}}, loop)); }) ==
        ErrorKind::precondition);
  CHECK(kind_of([&] { extend_along_mono(phi, identity(loop)); }) == ErrorKind::mismatch);
}

TEST_CASE("extend_along_mono is always a valid extension") {
  std::vector<Quiver> targets{build_B(ids({"l"})), build_B(ids({"l", "m"})),
                              build_K(ids({"a", "b"})), two_vertex_loaded()};
  auto small = enumerate_quivers(2, 2);
  std::size_t cases = 0;
  for (const Quiver& d : small)
    for (const Quiver& c : small)
      for (const auto& phi : monos(d, c))
        for (const Quiver& j : targets)
          for (const auto& psi : enumerate_homs(d, j)) {
            auto hat = extend_along_mono(phi, psi);
            REQUIRE(validate_morphism(hat).ok);
            REQUIRE(compose(hat, phi) == psi);
            ++cases;
          }
  CHECK(cases > 1000);
}

TEST_CASE("is_mono_essential examples") {
  CHECK(is_mono_essential(envelope(loading_example()).embedding).ok);
  CHECK(is_mono_essential(QuiverMorphism(Quiver(), build_B(std::vector<Id>{unit_id()}), {}, {})).ok);

  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<Id> s = naturals(n);
    std::map<Id, Id> ident;
    for (const Id& x : s) ident.insert_or_assign(x, x);
    CHECK(is_mono_essential(colift_K(ident, build_I(s), s)).ok);
  }

  CheckReport two = is_mono_essential(QuiverMorphism(Quiver(), build_I(ids({"a", "b"})), {}, {}));
  CHECK_FALSE(two.ok);
  CHECK(two.criterion == 0);

  Quiver two_loops = make({"a"}, {{"x", "a", "a"}, {"y", "a", "a"}});
  CHECK_FALSE(is_mono_essential(QuiverMorphism(Quiver(), two_loops, {}, {})).ok);

  CheckReport c1 = is_mono_essential(QuiverMorphism(build_I(ids({"a"})), build_I(ids({"a", "b"})), {0}, {}));
  CHECK_FALSE(c1.ok);
  CHECK(c1.criterion == 1);

  Quiver arrow = make({"s", "t"}, {{"e", "s", "t"}});
  Quiver doubled = make({"s", "t"}, {{"e", "s", "t"}, {"f", "s", "t"}});
  CheckReport c2 = is_mono_essential(QuiverMorphism(arrow, doubled, {0, 1}, {0}));
  CHECK_FALSE(c2.ok);
  CHECK(c2.criterion == 2);
  CHECK(c2.witness == ids({"s", "t"}));

  CheckReport c3 = is_mono_essential(QuiverMorphism(make({"s", "t"}, {}), doubled, {0, 1}, {}));
  CHECK_FALSE(c3.ok);
  CHECK(c3.criterion == 3);

  CheckReport fine = is_mono_essential(QuiverMorphism(make({"s", "t"}, {}), arrow, {0, 1}, {}));
  CHECK(fine.ok);

  auto collapse = QuiverMorphism::from_ids(make({"a", "b"}, {}), make({"z"}, {}),
                                           {{"a", "z"}, {"b", "z"}}, {});
  CHECK(kind_of([&] { is_mono_essential(collapse); }) == ErrorKind::precondition);
}

TEST_CASE("loading") {
  Quiver l = loading(loading_example());
  Quiver expected({"0", "1"}, {{Id::tagged(0, {"e"}), "0", "1"},
                               {Id::tagged(0, {"f"}), "0", "1"},
                               {Id::tagged(1, {"0", "0"}), "0", "0"},
                               {Id::tagged(1, {"1", "1"}), "1", "1"},
                               {Id::tagged(1, {"1", "0"}), "1", "0"}});
  CHECK(l == expected);
  CHECK(is_loaded(l));

  Quiver loaded = two_vertex_loaded();
  Quiver same = loading(loaded);
  CHECK(same.edge_count() == loaded.edge_count());
  for (const Id& e : same.edges()) CHECK(e.elements()[0] == Id::natural(0));

  CHECK(isomorphic(loading(build_I(ids({"a"}))), build_K(ids({"a"}))));
  for (const Quiver& d : enumerate_quivers(3, 3)) REQUIRE(is_loaded(loading(d)));
}

TEST_CASE("envelope") {
  for (std::size_t n = 1; n <= 2; ++n) {
    std::vector<Id> s = naturals(n);
    CHECK(isomorphic(envelope(build_I(s)).quiver, build_K(s)));
  }
  Quiver loaded = two_vertex_loaded();
  auto env = envelope(loaded);
  CHECK(isomorphic(env.quiver, loaded));
  CHECK(is_iso(env.embedding));

  auto empty = envelope(Quiver());
  CHECK(empty.quiver == build_B(std::vector<Id>{unit_id()}));
  CHECK(empty.embedding.dom() == Quiver());

  auto ex = envelope(loading_example());
  CHECK(ex.quiver == loading(loading_example()));
  CHECK(ex.embedding.map_edge("e") == Id::tagged(0, {"e"}));
  CHECK(ex.embedding.map_vertex("1") == Id("1"));

  // No proper subquiver of L(I({0,1})) that contains the image of j is loaded.
  std::vector<Id> s = naturals(2);
  auto small = envelope(build_I(s));
  std::size_t candidates = 0;
  for (const auto& sub : enumerate_subquivers(small.quiver)) {
    if (sub.is_whole() || sub.vertex_indices().size() != 2) continue;
    ++candidates;
    CHECK_FALSE(is_loaded(sub.quiver()));
  }
  CHECK(candidates == 15);
}

TEST_CASE("essential verdicts are not one-sided") {
  std::size_t yes = 0, no = 0;
  auto small = enumerate_quivers(2, 2);
  for (const Quiver& d : small)
    for (const Quiver& c : small)
      for (const auto& phi : monos(d, c)) (is_mono_essential(phi).ok ? yes : no)++;
  CHECK(yes > 10);
  CHECK(no > 10);
}
