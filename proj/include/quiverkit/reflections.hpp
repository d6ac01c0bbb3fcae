#pragma once

#include <map>
#include <span>
#include <vector>

#include "quiverkit/quiver.hpp"

namespace quiverkit {

// The four quivers adjoint to the vertex and edge functors Quiv -> Set.
// Element naming follows the usual notation so results can be compared
// against hand-drawn examples:
//   I(S): vertices S, no edges
//   M(S): vertices (0,s) and (1,s), edges s : (0,s) -> (1,s)
//   K(S): vertices S, edges (s,t) : s -> t
//   B(S): the single vertex "1", edges S, all loops
// Duplicate elements of S are ignored.
Quiver build_I(std::span<const Id> s);
Quiver build_M(std::span<const Id> s);
Quiver build_K(std::span<const Id> s);
Quiver build_B(std::span<const Id> s);

// Sorted, duplicate-free copy of s.
std::vector<Id> make_set(std::span<const Id> s);

// Unique I(S) -> G with the given vertex component; S is the key set.
QuiverMorphism lift_I(const std::map<Id, Id>& vertex_choice, const Quiver& g);
// Unique M(S) -> G with the given edge component; S is the key set.
QuiverMorphism lift_M(const std::map<Id, Id>& edge_choice, const Quiver& g);
// Unique G -> K(S) with the given vertex component. `chi` must be total on
// V(G) and land in S.
QuiverMorphism colift_K(const std::map<Id, Id>& chi, const Quiver& g,
                        std::span<const Id> s);
// Unique G -> B(S) with the given edge component.
QuiverMorphism colift_B(const std::map<Id, Id>& xi, const Quiver& g,
                        std::span<const Id> s);

}  // namespace quiverkit
