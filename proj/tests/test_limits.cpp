#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "quiverkit/error.hpp"
#include "quiverkit/limits.hpp"
#include "quiverkit/reflections.hpp"

using namespace qt;

namespace {

// Relabels a labelling by first occurrence, so equal partitions compare equal.
std::vector<Index> normalize(std::span<const Index> labels) {
  std::map<Index, Index> seen;
  std::vector<Index> out;
  for (Index l : labels) out.push_back(seen.emplace(l, seen.size()).first->second);
  return out;
}

std::set<std::vector<Index>> partitions(std::size_t n) {
  std::set<std::vector<Index>> out;
  std::vector<Index> f(n, 0);
  while (true) {
    out.insert(normalize(f));
    std::size_t i = 0;
    while (i < n && ++f[i] == n) f[i++] = 0;
    if (i == n) break;
  }
  return out;
}

std::set<std::pair<std::vector<Index>, std::vector<Index>>> brute_congruences(const Quiver& q) {
  std::set<std::pair<std::vector<Index>, std::vector<Index>>> out;
  for (const auto& vp : partitions(q.vertex_count()))
    for (const auto& ep : partitions(q.edge_count())) {
      bool ok = true;
      for (Index e = 0; e < q.edge_count() && ok; ++e)
        for (Index f = 0; f < q.edge_count() && ok; ++f)
          if (ep[e] == ep[f])
            ok = vp[q.source(e)] == vp[q.source(f)] && vp[q.target(e)] == vp[q.target(f)];
      if (ok) out.insert({vp, ep});
    }
  return out;
}

std::size_t brute_subquiver_count(const Quiver& q) {
  std::size_t n = 0;
  for (std::size_t vm = 0; vm < (std::size_t{1} << q.vertex_count()); ++vm)
    for (std::size_t em = 0; em < (std::size_t{1} << q.edge_count()); ++em) {
      bool closed = true;
      for (Index e = 0; e < q.edge_count(); ++e)
        if ((em >> e & 1) && !((vm >> q.source(e) & 1) && (vm >> q.target(e) & 1))) closed = false;
      n += closed;
    }
  return n;
}

}  // namespace

TEST_CASE("product") {
  auto p = product(build_B(ids({"a"})), build_B(ids({"b"})));
  CHECK(p.quiver.vertex_count() == 1);
  CHECK(p.quiver.edge_count() == 1);
  CHECK(p.quiver.edge(0) == Id::pair("a", "b"));

  auto q = product(build_K(naturals(2)), build_I(ids({"s"})));
  CHECK(q.quiver.vertex_count() == 2);
  CHECK(q.quiver.edge_count() == 0);

  for (std::size_t s = 0; s <= 2; ++s)
    for (std::size_t t = 0; t <= 2; ++t)
      CHECK(product(build_K(naturals(s)), build_K(naturals(t))).quiver.edge_count() ==
            s * s * t * t);

  Quiver g = explosion_example();
  Quiver h = build_M(ids({"e", "f"}));
  auto gh = product(g, h);
  CHECK(validate_morphism(gh.first).ok);
  CHECK(validate_morphism(gh.second).ok);
  CHECK(gh.quiver.source_of(Id::pair("f", "e")) == Id::pair("w", Id::tagged(0, {"e"})));
}

TEST_CASE("coproduct") {
  Quiver q = explosion_example();
  auto c = coproduct(q, Quiver());
  CHECK(isomorphic(c.quiver, q));
  CHECK(is_mono(c.first));
  CHECK(is_iso(c.first));
  CHECK(c.quiver.find_vertex(Id::tagged(0, {"u"})).has_value());

  auto d = coproduct(build_I(ids({"a"})), build_M(ids({"t"})));
  CHECK(is_mono(d.first));
  CHECK(is_mono(d.second));
  CHECK(d.quiver.vertex_count() == 3);
  CHECK(d.quiver.find_edge(Id::tagged(1, {"t"})).has_value());
}

TEST_CASE("equalizer") {
  Quiver g = explosion_example();
  auto whole = equalizer(identity(g), identity(g));
  CHECK(whole.subquiver.is_whole());
  CHECK(is_iso(whole.inclusion));

  std::vector<Id> ab = ids({"a", "b"});
  Quiver k = build_K(ab);
  std::vector<Id> xy = ids({"x", "y"});
  std::map<Id, Id> all_x, one_x;
  for (const Id& e : k.edges()) {
    all_x.insert_or_assign(e, "x");
    one_x.insert_or_assign(e, e == Id::pair("a", "a") ? Id("x") : Id("y"));
  }
  auto eq = equalizer(colift_B(all_x, k, xy), colift_B(one_x, k, xy));
  CHECK(eq.subquiver.vertex_indices().size() == 2);
  REQUIRE(eq.subquiver.edge_indices().size() == 1);
  CHECK(eq.inclusion.map_edge(Id::pair("a", "a")) == Id::pair("a", "a"));
  CHECK(is_mono(eq.inclusion));

  std::vector<Id> s01 = naturals(2);
  Quiver src = make({"p", "q"}, {{"r", "p", "q"}});
  auto to0 = colift_K({{"p", Id::natural(0)}, {"q", Id::natural(0)}}, src, s01);
  auto to1 = colift_K({{"p", Id::natural(1)}, {"q", Id::natural(1)}}, src, s01);
  auto none = equalizer(to0, to1);
  CHECK(none.inclusion.dom() == Quiver());

  CHECK_THROWS_AS(equalizer(to0, identity(src)), Error);
}

TEST_CASE("congruence closure") {
  Quiver three = build_I(ids({"u", "v", "w"}));
  CHECK(congruence_closure(three, {}, {}).is_discrete());

  auto one = congruence_closure(three, {{"v", "w"}}, {});
  CHECK(one.vertex_class(1) == one.vertex_class(2));
  CHECK(one.vertex_class(0) != one.vertex_class(1));

  Quiver par = loading_example();
  auto edges = congruence_closure(par, {}, {{"e", "f"}});
  CHECK(edges.vertex_class(0) != edges.vertex_class(1));
  CHECK(edges.edge_class(0) == edges.edge_class(1));

  // Merging two edges forces their endpoints together.
  Quiver two_arrows = make({"a", "b", "c", "d"}, {{"e", "a", "b"}, {"f", "c", "d"}});
  auto forced = congruence_closure(two_arrows, {}, {{"e", "f"}});
  CHECK(forced.vertex_class(0) == forced.vertex_class(2));
  CHECK(forced.vertex_class(1) == forced.vertex_class(3));

  for (const Quiver& q : enumerate_quivers(3, 2)) {
    for (const auto& c : enumerate_congruences(q)) {
      std::vector<std::pair<Id, Id>> vp, ep;
      for (Index v = 0; v < q.vertex_count(); ++v) vp.push_back({q.vertex(v), q.vertex(c.vertex_class(v))});
      for (Index e = 0; e < q.edge_count(); ++e) ep.push_back({q.edge(e), q.edge(c.edge_class(e))});
      auto again = congruence_closure(q, vp, ep);
      REQUIRE(again == c);
      // Monotone: adding a pair already inside the congruence changes nothing.
      if (!vp.empty()) {
        vp.push_back(vp.front());
        REQUIRE(congruence_closure(q, vp, ep) == c);
      }
    }
  }

  CHECK_THROWS_AS(congruence_closure(three, {{"v", "nowhere"}}, {}), Error);
}

TEST_CASE("quotient") {
  Quiver q = explosion_example();
  auto disc = quotient(QuiverCongruence(q));
  CHECK(is_iso(disc.map));

  Quiver m = build_M(ids({"e"}));
  auto merged = quotient(congruence_closure(m, {{Id::tagged(0, {"e"}), Id::tagged(1, {"e"})}}, {}));
  CHECK(merged.quiver.vertex_count() == 1);
  CHECK(merged.quiver.edge_count() == 1);
  CHECK(isomorphic(merged.quiver, build_B(ids({"e"}))));
  CHECK(merged.quiver.vertex(0) == Id::tagged(0, {"e"}));
  CHECK(is_epi(merged.map));

  for (const Quiver& g : enumerate_quivers(3, 2))
    for (const auto& c : enumerate_congruences(g)) REQUIRE(is_epi(quotient(c).map));
}

TEST_CASE("coequalizer") {
  Quiver g = explosion_example();
  auto same = coequalizer(identity(g), identity(g));
  CHECK(is_iso(same.map));

  std::vector<Id> unit{unit_id()};
  Quiver pt = build_I(unit);
  Quiver i01 = build_I(naturals(2));
  auto in0 = lift_I({{unit_id(), Id::natural(0)}}, i01);
  auto in1 = lift_I({{unit_id(), Id::natural(1)}}, i01);
  auto one = coequalizer(in0, in1);
  CHECK(one.quiver.vertex_count() == 1);

  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<Id> s = naturals(n);
    Quiver m = build_M(s);
    std::map<Id, Id> src, tgt;
    for (const Id& x : s) {
      src.insert_or_assign(x, Id::tagged(0, {x}));
      tgt.insert_or_assign(x, Id::tagged(1, {x}));
    }
    // Each arrow closes into its own loop: |S| disjoint loops, B(S) when |S| = 1.
    auto loops = coequalizer(lift_I(src, m), lift_I(tgt, m));
    Quiver expected;
    for (const Id& x : s) expected = coproduct(expected, build_B(std::vector<Id>{x})).quiver;
    CHECK(isomorphic(loops.quiver, expected));
    CHECK(isomorphic(loops.quiver, build_B(s)) == (n == 1));
  }
  CHECK_THROWS_AS(coequalizer(in0, identity(i01)), Error);
}

TEST_CASE("congruence enumeration matches brute force") {
  CHECK(enumerate_congruences(build_I(ids({"a"}))).size() == 1);
  CHECK(enumerate_congruences(build_I(ids({"a", "b"}))).size() == 2);

  std::vector<Quiver> family = enumerate_quivers(3, 3);
  family.push_back(build_M(ids({"e", "f"})));
  for (const Quiver& q : family) {
    std::set<std::pair<std::vector<Index>, std::vector<Index>>> got;
    std::size_t n = 0;
    for_each_congruence(q, [&](const QuiverCongruence& c) {
      ++n;
      got.insert({normalize(c.vertex_classes()), normalize(c.edge_classes())});
      return true;
    });
    REQUIRE(n == got.size());
    REQUIRE(got == brute_congruences(q));
  }
}

TEST_CASE("subquiver enumeration") {
  CHECK(enumerate_subquivers(build_B(ids({"a"}))).size() == 3);
  CHECK(enumerate_subquivers(build_I(ids({"a", "b"}))).size() == 4);
  CHECK(enumerate_subquivers(build_M(ids({"e"}))).size() == 5);
  for (const Quiver& q : enumerate_quivers(3, 3)) {
    auto subs = enumerate_subquivers(q);
    REQUIRE(subs.size() == brute_subquiver_count(q));
    std::set<std::pair<std::vector<Index>, std::vector<Index>>> distinct;
    for (const auto& s : subs) {
      distinct.insert({s.vertex_indices(), s.edge_indices()});
      REQUIRE(is_mono(s.inclusion()));
    }
    REQUIRE(distinct.size() == subs.size());
  }
  CHECK_THROWS_AS(Subquiver(loading_example(), {0}, {0}), Error);
}
