#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "quiverkit/quiver.hpp"

namespace quiverkit {

// Bounds on a homomorphism search. Running out is reported as
// Error(budget_exhausted), never as "no morphism".
struct SearchBudget {
  std::uint64_t max_assignments = 100'000'000;
  std::optional<std::chrono::milliseconds> time_limit;
};

// Per-element candidate restrictions for a search G -> H. An empty inner
// vector means "unrestricted"; otherwise it lists the allowed codomain
// indices in increasing order.
struct SearchDomains {
  std::vector<std::vector<Index>> vertices;
  std::vector<std::vector<Index>> edges;
};

// Enumerates every morphism G -> H exactly once, in canonical order:
// lexicographic in the edge map, then in the images of the vertices no edge
// touches. Edges are assigned first; each edge fixes its endpoints' images.
// `visit` receives the vertex and edge maps and returns false to stop.
void for_each_hom_maps(
    const Quiver& g, const Quiver& h,
    const std::function<bool(std::span<const Index>, std::span<const Index>)>& visit,
    const SearchBudget& budget = {}, const SearchDomains* domains = nullptr);

void for_each_hom(const Quiver& g, const Quiver& h,
                  const std::function<bool(const QuiverMorphism&)>& visit,
                  const SearchBudget& budget = {});

std::vector<QuiverMorphism> enumerate_homs(const Quiver& g, const Quiver& h,
                                           const SearchBudget& budget = {});

std::uint64_t count_homs(const Quiver& g, const Quiver& h, const SearchBudget& budget = {});

// Some psi_hat : B -> J with psi_hat ∘ phi = psi, where psi : A -> J and
// phi : A -> B. Exhaustive search.
std::optional<QuiverMorphism> find_lift(const QuiverMorphism& psi, const QuiverMorphism& phi,
                                        const SearchBudget& budget = {});

// Some gamma : P -> G with phi ∘ gamma = psi, where psi : P -> H and
// phi : G -> H.
std::optional<QuiverMorphism> find_colift(const QuiverMorphism& psi, const QuiverMorphism& phi,
                                          const SearchBudget& budget = {});

// Outcome of a lifting-property check; `counterexample` is a map psi for
// which no lift exists.
struct LiftingReport {
  bool ok = true;
  std::optional<QuiverMorphism> counterexample;
  explicit operator bool() const noexcept { return ok; }
};

// J is injective with respect to phi : A -> B.
LiftingReport is_injective_wrt(const Quiver& j, const QuiverMorphism& phi,
                               const SearchBudget& budget = {});
// P is projective with respect to phi : G -> H.
LiftingReport is_projective_wrt(const Quiver& p, const QuiverMorphism& phi,
                                const SearchBudget& budget = {});

std::optional<QuiverMorphism> find_isomorphism(const Quiver& a, const Quiver& b,
                                               const SearchBudget& budget = {});

// Every quiver on vertices v1..vk (k <= vmax) and edges e1..em (m <= emax),
// each src/tgt assignment once; k^(2m) quivers for fixed (k, m). Ordered by
// k, then m, then the assignment.
void for_each_quiver(std::size_t vmax, std::size_t emax,
                     const std::function<bool(const Quiver&)>& visit);
std::vector<Quiver> enumerate_quivers(std::size_t vmax, std::size_t emax);

}  // namespace quiverkit
