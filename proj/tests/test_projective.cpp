#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "quiverkit/error.hpp"
#include "quiverkit/limits.hpp"
#include "quiverkit/projective.hpp"
#include "quiverkit/reflections.hpp"

using namespace qt;

namespace {

Id m_vertex(std::uint64_t side, const char* edge) {
  return Id::tagged(1, {Id::tagged(side, {edge})});
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

TEST_CASE("independent vertices") {
  CHECK(independent_vertices(explosion_example()) == ids({"u"}));
  CHECK(independent_vertices(build_I(ids({"a", "b"}))) == ids({"a", "b"}));
  CHECK(independent_vertices(build_K(ids({"a"}))).empty());
}

TEST_CASE("explosion of the worked example") {
  Quiver x = explosion(explosion_example());
  std::vector<Id> vs{Id::tagged(0, {"u"})};
  std::vector<EdgeSpec> es;
  for (const char* e : {"e", "f", "g", "h"}) {
    vs.push_back(m_vertex(0, e));
    vs.push_back(m_vertex(1, e));
    es.push_back({Id::tagged(1, {e}), m_vertex(0, e), m_vertex(1, e)});
  }
  CHECK(x == Quiver(vs, es));

  auto c = explosion_coproduct(explosion_example());
  CHECK(c.quiver == coproduct(build_I(ids({"u"})), build_M(ids({"e", "f", "g", "h"}))).quiver);

  CHECK(isomorphic(explosion(build_I(ids({"a", "b"}))), build_I(ids({"a", "b"}))));
  CHECK(isomorphic(explosion(build_B(ids({"l"}))), build_M(ids({"l"}))));
}

TEST_CASE("covering map") {
  Quiver g = explosion_example();
  auto p = covering_map(g);
  CHECK(p.map_vertex(m_vertex(0, "e")) == Id("v"));
  CHECK(p.map_vertex(m_vertex(1, "e")) == Id("v"));
  CHECK(p.map_vertex(m_vertex(0, "f")) == Id("w"));
  CHECK(p.map_vertex(m_vertex(1, "f")) == Id("x"));
  CHECK(p.map_vertex(m_vertex(0, "g")) == Id("x"));
  CHECK(p.map_vertex(m_vertex(1, "h")) == Id("w"));
  CHECK(p.map_vertex(Id::tagged(0, {"u"})) == Id("u"));
  CHECK(p.map_edge(Id::tagged(1, {"g"})) == Id("g"));
  CHECK(is_epi(p));
  CHECK(std::set<Index>(p.edge_map().begin(), p.edge_map().end()).size() == g.edge_count());

  CHECK(is_iso(covering_map(build_I(ids({"a", "b"})))));
  for (const Quiver& q : enumerate_quivers(3, 3)) {
    auto pq = covering_map(q);
    REQUIRE(validate_morphism(pq).ok);
    REQUIRE(is_epi(pq));
  }
}

TEST_CASE("epi-projectivity") {
  Quiver it = coproduct(build_I(ids({"a", "b"})), build_M(ids({"s", "t"}))).quiver;
  CHECK(is_epi_projective(it));
  CHECK(check_disjoint_arrows(it).ok);
  CHECK_FALSE(is_epi_projective(build_B(ids({"l"}))));
  CHECK(is_epi_projective(Quiver()));

  Quiver fan_out = make({"a", "b", "c"}, {{"x", "a", "b"}, {"y", "a", "c"}});
  CheckReport r1 = check_disjoint_arrows(fan_out);
  CHECK(r1.criterion == 1);
  Quiver fan_in = make({"a", "b", "c"}, {{"x", "b", "a"}, {"y", "c", "a"}});
  CHECK(check_disjoint_arrows(fan_in).criterion == 2);
  Quiver path = make({"a", "b", "c"}, {{"x", "a", "b"}, {"y", "b", "c"}});
  CheckReport r3 = check_disjoint_arrows(path);
  CHECK(r3.criterion == 3);
  CHECK(r3.witness == ids({"b"}));
  CHECK_FALSE(is_epi_projective(path));
}

TEST_CASE("lift_along_epi") {
  Quiver g = explosion_example();
  Quiver p = coproduct(build_I(ids({"a"})), build_M(ids({"s"}))).quiver;
  auto iso = *find_isomorphism(g, g);
  for (const auto& psi : enumerate_homs(p, g))
    CHECK(lift_along_epi(psi, iso) == compose(invert(iso), psi));

  std::vector<Id> s = ids({"x", "y"});
  Quiver m = build_M(s);
  auto onto_b = colift_B({{"x", "x"}, {"y", "y"}}, m, s);
  auto gamma = lift_along_epi(onto_b, onto_b);
  CHECK(compose(onto_b, gamma) == onto_b);

  Quiver loop = build_B(ids({"l"}));
  CHECK(kind_of([&] { lift_along_epi(identity(loop), covering_map(loop)); }) ==
        ErrorKind::precondition);
  Quiver arrow = make({"s", "t"}, {{"e", "s", "t"}});
  QuiverMorphism into_bigger(arrow, make({"s", "t", "u"}, {{"e", "s", "t"}}), {0, 1}, {0});
  CHECK(kind_of([&] { lift_along_epi(into_bigger, into_bigger); }) == ErrorKind::precondition);
  CHECK(kind_of([&] { lift_along_epi(identity(arrow), into_bigger); }) == ErrorKind::mismatch);

  auto small = enumerate_quivers(2, 2);
  std::size_t cases = 0;
  for (const Quiver& pp : small) {
    if (!is_epi_projective(pp)) continue;
    for (const Quiver& gg : small)
      for (const Quiver& hh : small)
        for (const auto& phi : epis(gg, hh))
          for (const auto& psi : enumerate_homs(pp, hh)) {
            auto c = lift_along_epi(psi, phi);
            REQUIRE(validate_morphism(c).ok);
            REQUIRE(compose(phi, c) == psi);
            ++cases;
          }
  }
  CHECK(cases > 100);
}

TEST_CASE("is_epi_coessential") {
  Quiver it = coproduct(build_I(ids({"a"})), build_M(ids({"t"}))).quiver;
  CHECK(is_epi_coessential(identity(it)).ok);

  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<Id> s = naturals(n);
    std::map<Id, Id> ident;
    for (const Id& x : s) ident.insert_or_assign(x, x);
    CHECK(is_epi_coessential(colift_B(ident, build_M(s), s)).ok);
    CHECK(is_epi_coessential(covering_map(build_K(s))).ok);
  }

  Quiver doubled = make({"s", "t"}, {{"e", "s", "t"}, {"f", "s", "t"}});
  Quiver arrow = make({"s", "t"}, {{"e", "s", "t"}});
  CheckReport c1 = is_epi_coessential(QuiverMorphism(doubled, arrow, {0, 1}, {0, 0}));
  CHECK_FALSE(c1.ok);
  CHECK(c1.criterion == 1);

  Quiver with_stray = make({"s", "t", "u"}, {{"e", "s", "t"}});
  CheckReport c2 = is_epi_coessential(QuiverMorphism(with_stray, arrow, {0, 1, 0}, {0}));
  CHECK(c2.criterion == 2);
  CHECK(c2.witness == ids({"u"}));

  CheckReport c3 = is_epi_coessential(QuiverMorphism(build_I(ids({"a", "b"})), build_I(ids({"z"})), {0, 0}, {}));
  CHECK(c3.criterion == 3);
  CHECK(c3.witness == ids({"z"}));

  CHECK(kind_of([&] { is_epi_coessential(QuiverMorphism(build_I(ids({"a"})), build_I(ids({"a", "b"})), {0}, {})); }) ==
        ErrorKind::precondition);
}

TEST_CASE("cover") {
  for (std::size_t n = 1; n <= 2; ++n) {
    std::vector<Id> s = naturals(n);
    auto cb = cover(build_B(s));
    CHECK(isomorphic(cb.quiver, build_M(s)));
    std::vector<Id> s2;
    for (const Id& a : s)
      for (const Id& b : s) s2.push_back(Id::pair(a, b));
    auto ck = cover(build_K(s));
    CHECK(isomorphic(ck.quiver, build_M(s2)));
  }
  Quiver it = coproduct(build_I(ids({"a"})), build_M(ids({"t"}))).quiver;
  CHECK(is_iso(cover(it).map));

  for (const Quiver& g : enumerate_quivers(3, 3)) {
    auto c = cover(g);
    REQUIRE(is_epi_projective(c.quiver));
    REQUIRE(is_epi_coessential(c.map).ok);
  }
}
