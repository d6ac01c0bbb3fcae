#pragma once

#include <vector>

#include "quiverkit/limits.hpp"
#include "quiverkit/quiver.hpp"

namespace quiverkit {

// Vertices that are neither a source nor a target of any edge.
std::vector<Id> independent_vertices(const Quiver& g);

// X(G) = I(indep G) ⊔ M(E(G)) with the coproduct's tagging: an independent
// vertex u becomes (0,u); an edge e becomes the arrow
// (1,e) : (1,(0,e)) -> (1,(1,e)).
Coproduct explosion_coproduct(const Quiver& g);
Quiver explosion(const Quiver& g);

// p_G : X(G) -> G. Sends (0,u) to u, (1,(0,e)) to src e, (1,(1,e)) to
// tgt e and (1,e) to e. Always epic and bijective on edges.
QuiverMorphism covering_map(const Quiver& g);

// P ≅ I(S) ⊔ M(T), decided by whether p_P is an isomorphism.
bool is_epi_projective(const Quiver& p);

// The same class described directly: src and tgt are injective and no
// vertex is both a source and a target. Reports the first offending edge.
CheckReport check_disjoint_arrows(const Quiver& p);

// Some gamma : P -> G with phi ∘ gamma = psi, built by splitting P through
// p_P and choosing the smallest preimage of each independent vertex and each
// edge. Throws Error(precondition) unless phi is epic and P is
// epi-projective, and Error(mismatch) unless psi and phi share a codomain.
QuiverMorphism lift_along_epi(const QuiverMorphism& psi, const QuiverMorphism& phi);

// Decides whether the epi phi : G -> H is epi-coessential, i.e. every alpha
// with phi ∘ alpha epic is itself epic:
//   1. E(phi) is bijective;
//   2. independent vertices of G map to independent vertices of H;
//   3. each independent vertex of H has exactly one independent preimage.
// Throws Error(precondition) if phi is not epic.
CheckReport is_epi_coessential(const QuiverMorphism& phi);

struct Cover {
  Quiver quiver;
  QuiverMorphism map;  // X(G) -> G
};

Cover cover(const Quiver& g);

}  // namespace quiverkit
