#pragma once

#include <array>
#include <initializer_list>
#include <map>
#include <vector>

#include "quiverkit/homsearch.hpp"
#include "quiverkit/quiver.hpp"

namespace qt {

using namespace quiverkit;

inline std::vector<Id> ids(std::initializer_list<const char*> xs) {
  return std::vector<Id>(xs.begin(), xs.end());
}

inline std::vector<Id> naturals(std::size_t n) {
  std::vector<Id> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Id::natural(i));
  return out;
}

inline Quiver make(std::initializer_list<const char*> v,
                   std::initializer_list<std::array<const char*, 3>> e) {
  std::vector<EdgeSpec> edges;
  for (const auto& [id, s, t] : e) edges.push_back({Id(id), Id(s), Id(t)});
  return Quiver(ids(v), edges);
}

// Loop e at v; f: w -> x; g, h: x -> w; u isolated.
inline Quiver explosion_example() {
  return make({"v", "w", "u", "x"},
              {{"e", "v", "v"}, {"f", "w", "x"}, {"g", "x", "w"}, {"h", "x", "w"}});
}

// Two parallel edges e, f: 0 -> 1.
inline Quiver loading_example() { return make({"0", "1"}, {{"e", "0", "1"}, {"f", "0", "1"}}); }

// Loaded but not full: loops, two parallel edges a -> b, one edge back.
inline Quiver two_vertex_loaded() {
  return make({"a", "b"}, {{"la", "a", "a"},
                           {"lb", "b", "b"},
                           {"p", "a", "b"},
                           {"q", "a", "b"},
                           {"r", "b", "a"}});
}

inline bool isomorphic(const Quiver& a, const Quiver& b) {
  return find_isomorphism(a, b).has_value();
}

inline std::vector<QuiverMorphism> monos(const Quiver& d, const Quiver& c) {
  std::vector<QuiverMorphism> out;
  for (auto& m : enumerate_homs(d, c))
    if (is_mono(m)) out.push_back(m);
  return out;
}

inline std::vector<QuiverMorphism> epis(const Quiver& g, const Quiver& h) {
  std::vector<QuiverMorphism> out;
  for (auto& m : enumerate_homs(g, h))
    if (is_epi(m)) out.push_back(m);
  return out;
}

}  // namespace qt
