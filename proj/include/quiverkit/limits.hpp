#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "quiverkit/quiver.hpp"

namespace quiverkit {

// Tensor product G × H with vertices (v,w) and edges (e,f).
struct Product {
  Quiver quiver;
  QuiverMorphism first;   // G × H -> G
  QuiverMorphism second;  // G × H -> H
};

// Disjoint union G ⊔ H. Elements of G become (0,x), elements of H (1,y).
struct Coproduct {
  Quiver quiver;
  QuiverMorphism first;   // G -> G ⊔ H
  QuiverMorphism second;  // H -> G ⊔ H
};

Product product(const Quiver& g, const Quiver& h);
Coproduct coproduct(const Quiver& g, const Quiver& h);

// <f, g> : X -> G × H. Throws Error(mismatch) on incompatible legs.
QuiverMorphism pair_into(const Product& p, const QuiverMorphism& f, const QuiverMorphism& g);
// [f, g] : G ⊔ H -> Z.
QuiverMorphism copair(const Coproduct& c, const QuiverMorphism& f, const QuiverMorphism& g);

// A pair (V_N, E_N) of subsets of a base quiver closed under src and tgt.
class Subquiver {
 public:
  // Index lists need not be sorted; duplicates are ignored. Throws
  // Error(invalid_argument) if an edge's endpoint is missing from V_N.
  Subquiver(Quiver base, std::vector<Index> vertices, std::vector<Index> edges);

  const Quiver& base() const noexcept { return base_; }
  const std::vector<Index>& vertex_indices() const noexcept { return vertices_; }
  const std::vector<Index>& edge_indices() const noexcept { return edges_; }
  bool is_whole() const noexcept {
    return vertices_.size() == base_.vertex_count() && edges_.size() == base_.edge_count();
  }

  // N as a quiver in its own right, keeping the base ids.
  Quiver quiver() const;
  // N -> base.
  QuiverMorphism inclusion() const;

 private:
  Quiver base_;
  std::vector<Index> vertices_;
  std::vector<Index> edges_;
};

struct Equalizer {
  Subquiver subquiver;
  QuiverMorphism inclusion;
};

// Throws Error(mismatch) unless f and g are parallel.
Equalizer equalizer(const QuiverMorphism& f, const QuiverMorphism& g);

// Equivalence relations on V and E such that e ~ f implies src e ~ src f and
// tgt e ~ tgt f. Each element is stored with the index of the smallest
// member of its class, which is also the id its class gets in a quotient.
class QuiverCongruence {
 public:
  // Discrete congruence.
  explicit QuiverCongruence(Quiver base);
  // Classes given by arbitrary labels per element. Throws
  // Error(invalid_argument) if the pair is not compatible.
  QuiverCongruence(Quiver base, std::span<const Index> vertex_labels,
                   std::span<const Index> edge_labels);

  const Quiver& base() const noexcept { return base_; }
  Index vertex_class(Index v) const { return vertex_rep_.at(v); }
  Index edge_class(Index e) const { return edge_rep_.at(e); }
  std::span<const Index> vertex_classes() const noexcept { return vertex_rep_; }
  std::span<const Index> edge_classes() const noexcept { return edge_rep_; }
  bool is_discrete() const noexcept;

  friend bool operator==(const QuiverCongruence& a, const QuiverCongruence& b);

 private:
  Quiver base_;
  std::vector<Index> vertex_rep_;
  std::vector<Index> edge_rep_;
};

// Smallest congruence containing the given pairs of ids.
QuiverCongruence congruence_closure(const Quiver& base,
                                    const std::vector<std::pair<Id, Id>>& vertex_pairs,
                                    const std::vector<std::pair<Id, Id>>& edge_pairs);

struct Quotient {
  Quiver quiver;
  QuiverMorphism map;  // base -> base/~, epic
};

Quotient quotient(const QuiverCongruence& c);

// Quotient of cod by the closure of {(f x, g x)}. Throws Error(mismatch)
// unless f and g are parallel.
Quotient coequalizer(const QuiverMorphism& f, const QuiverMorphism& g);

// Visitors return false to stop early. Both throw Error(size_limit) when the
// base is too large to enumerate.
void for_each_congruence(const Quiver& base,
                         const std::function<bool(const QuiverCongruence&)>& visit);
std::vector<QuiverCongruence> enumerate_congruences(const Quiver& base);

void for_each_subquiver(const Quiver& base, const std::function<bool(const Subquiver&)>& visit);
std::vector<Subquiver> enumerate_subquivers(const Quiver& base);

}  // namespace quiverkit
