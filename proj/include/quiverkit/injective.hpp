#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "quiverkit/quiver.hpp"

namespace quiverkit {

// Edges from v to w, in canonical order. Throws Error(invalid_argument) for
// unknown vertices.
std::vector<Id> edges_between(const Quiver& q, const Id& v, const Id& w);
std::vector<Index> edges_between(const Quiver& q, Index v, Index w);

// First ordered vertex pair (v, w) with no edge from v to w.
std::optional<std::pair<Id, Id>> find_unloaded_pair(const Quiver& q);

// Every ordered pair of vertices (loops included) has an edge between them.
bool is_loaded(const Quiver& q);

// Injective with respect to every monomorphism: loaded with a vertex.
bool is_mono_injective(const Quiver& q);

/// Extends psi : D -> J along the mono phi : D -> C to some psi_hat : C -> J
/// with psi_hat ∘ phi = psi.
///
/// C is split into the image of phi (V0, E0), the remaining vertices V1, the
/// edges inside V1 (E1), the new edges inside V0 (E2) and the edges crossing
/// from V0 to V1 (E3) or back (E4). V0 and E0 follow psi; V1 and E1 go to
/// the smallest vertex w of J and its smallest loop; each edge in E2..E4 goes
/// to the smallest edge of J between the images of its endpoints.
///
/// Throws Error(precondition) unless phi is monic and J is mono-injective,
/// and Error(mismatch) if psi and phi do not share a domain.
QuiverMorphism extend_along_mono(const QuiverMorphism& phi, const QuiverMorphism& psi);

/// Decides whether the mono phi : D -> C is mono-essential, i.e. every alpha
/// with alpha ∘ phi monic is itself monic.
///
/// With V(D) empty this holds iff C has at most one vertex and at most one
/// edge. Otherwise all of
///   1. V(phi) is bijective;
///   2. if D has edges v -> w, phi maps them onto the edges of C between
///      the images of v and w;
///   3. if D has no edge v -> w, C has at most one edge between the images.
/// The report records the first failed criterion (0 in the empty case) and
/// a witnessing vertex or pair. Throws Error(precondition) if phi is not monic.
CheckReport is_mono_essential(const QuiverMorphism& phi);

// D plus a fresh edge (1,v,w) : v -> w for each pair without one; existing
// edges are renamed (0,e).
Quiver loading(const Quiver& d);

struct Envelope {
  Quiver quiver;
  QuiverMorphism embedding;  // D -> envelope, monic and mono-essential
};

// (L(D), j_D) for D with a vertex; (B(1), the empty map) for the empty quiver.
Envelope envelope(const Quiver& d);

}  // namespace quiverkit
