#include "quiverkit/reflections.hpp"

#include <algorithm>

#include "quiverkit/error.hpp"

namespace quiverkit {

std::vector<Id> make_set(std::span<const Id> s) {
  std::vector<Id> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Quiver build_I(std::span<const Id> s) { return Quiver(make_set(s), {}); }

Quiver build_M(std::span<const Id> s) {
  std::vector<Id> vertices;
  std::vector<EdgeSpec> edges;
  for (const Id& x : make_set(s)) {
    vertices.push_back(Id::tagged(0, {x}));
    vertices.push_back(Id::tagged(1, {x}));
    edges.push_back({x, Id::tagged(0, {x}), Id::tagged(1, {x})});
  }
  return Quiver(std::move(vertices), std::move(edges));
}

Quiver build_K(std::span<const Id> s) {
  std::vector<Id> vertices = make_set(s);
  std::vector<EdgeSpec> edges;
  for (const Id& a : vertices) {
    for (const Id& b : vertices) edges.push_back({Id::pair(a, b), a, b});
  }
  return Quiver(std::move(vertices), std::move(edges));
}

Quiver build_B(std::span<const Id> s) {
  std::vector<EdgeSpec> edges;
  for (const Id& x : make_set(s)) edges.push_back({x, unit_id(), unit_id()});
  return Quiver({unit_id()}, std::move(edges));
}

namespace {

std::vector<Id> keys(const std::map<Id, Id>& m) {
  std::vector<Id> out;
  out.reserve(m.size());
  for (const auto& [k, v] : m) out.push_back(k);
  return out;
}

void require_total(const std::map<Id, Id>& m, std::span<const Id> domain, const char* what) {
  bool total = m.size() == domain.size() &&
               std::all_of(domain.begin(), domain.end(),
                           [&](const Id& x) { return m.count(x) != 0; });
  if (!total) {
    throw Error(ErrorKind::invalid_argument,
                std::string(what) + ": function is not total on the domain");
  }
}

}  // namespace

QuiverMorphism lift_I(const std::map<Id, Id>& vertex_choice, const Quiver& g) {
  Quiver is = build_I(keys(vertex_choice));
  std::vector<Index> vm;
  for (const Id& s : is.vertices()) vm.push_back(g.vertex_index(vertex_choice.at(s)));
  return QuiverMorphism(std::move(is), g, std::move(vm), {});
}

QuiverMorphism lift_M(const std::map<Id, Id>& edge_choice, const Quiver& g) {
  Quiver ms = build_M(keys(edge_choice));
  std::vector<Index> vm(ms.vertex_count());
  std::vector<Index> em(ms.edge_count());
  for (Index e = 0; e < ms.edge_count(); ++e) {
    Index f = g.edge_index(edge_choice.at(ms.edge(e)));
    em[e] = f;
    vm[ms.source(e)] = g.source(f);
    vm[ms.target(e)] = g.target(f);
  }
  return QuiverMorphism(std::move(ms), g, std::move(vm), std::move(em));
}

QuiverMorphism colift_K(const std::map<Id, Id>& chi, const Quiver& g,
                        std::span<const Id> s) {
  require_total(chi, g.vertices(), "colift_K");
  Quiver ks = build_K(s);
  std::vector<Index> vm;
  for (const Id& v : g.vertices()) vm.push_back(ks.vertex_index(chi.at(v)));
  std::vector<Index> em;
  for (Index e = 0; e < g.edge_count(); ++e) {
    em.push_back(ks.edge_index(Id::pair(ks.vertex(vm[g.source(e)]), ks.vertex(vm[g.target(e)]))));
  }
  return QuiverMorphism(g, std::move(ks), std::move(vm), std::move(em));
}

QuiverMorphism colift_B(const std::map<Id, Id>& xi, const Quiver& g, std::span<const Id> s) {
  require_total(xi, g.edges(), "colift_B");
  Quiver bs = build_B(s);
  std::vector<Index> vm(g.vertex_count(), 0);
  std::vector<Index> em;
  for (const Id& e : g.edges()) em.push_back(bs.edge_index(xi.at(e)));
  return QuiverMorphism(g, std::move(bs), std::move(vm), std::move(em));
}

}  // namespace quiverkit
