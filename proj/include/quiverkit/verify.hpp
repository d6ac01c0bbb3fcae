#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quiverkit/homsearch.hpp"

namespace quiverkit::verify {

// Outcome of one exhaustive small-model suite.
struct SuiteResult {
  explicit SuiteResult(std::string suite_name = {}) : name(std::move(suite_name)) {}

  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  double seconds = 0.0;

  bool passed() const noexcept { return failures == 0; }
  void fail(std::string what) {
    if (failures++ == 0) first_failure = std::move(what);
  }
};

// For every quiver D on <= vmax vertices and <= emax edges: the envelope is
// loaded and mono-injective, and its embedding is monic and mono-essential.
SuiteResult envelope_suite(std::size_t vmax, std::size_t emax);

// Same enumeration: X(G) is epi-projective, p_G is epic, bijective on
// edges and epi-coessential.
SuiteResult cover_suite(std::size_t vmax, std::size_t emax);

// is_epi_projective (covering map iso) agrees with check_disjoint_arrows.
SuiteResult projective_shape_suite(std::size_t vmax, std::size_t emax);

// For every monic phi : D -> C with C in the bounds, is_mono_essential(phi)
// agrees with: every congruence on C whose quotient map q makes q ∘ phi monic
// is discrete.
SuiteResult essential_oracle_suite(std::size_t vmax, std::size_t emax,
                                   const SearchBudget& budget = {});

// For every epic phi : G -> H with G in the bounds, is_epi_coessential(phi)
// agrees with: every subquiver N of G with phi ∘ (N -> G) epic is all of G.
SuiteResult coessential_oracle_suite(std::size_t vmax, std::size_t emax,
                                     const SearchBudget& budget = {});

// For every J in (j_vmax, j_emax): is_mono_injective(J) agrees with J
// having lifts along every monic D -> C, D and C in (vmax, emax).
SuiteResult injective_lifting_suite(std::size_t j_vmax, std::size_t j_emax, std::size_t vmax,
                                    std::size_t emax, const SearchBudget& budget = {});

// For every P in (vmax, emax): is_epi_projective(P) agrees with P having
// colifts along every epic G -> H, G and H in the same bounds.
SuiteResult projective_lifting_suite(std::size_t vmax, std::size_t emax,
                                     const SearchBudget& budget = {});

// Hom counts out of I(S), M(S) and into K(S), B(S) against |V|^|S|,
// |E|^|S|, |S|^|V|, |S|^|E| (0^0 = 1) on `samples` random (S, G) with
// |S|, |V(G)|, |E(G)| <= 3.
SuiteResult adjunction_counting_suite(std::size_t samples, std::uint64_t seed);

// Mediating maps for products, coproducts, equalizers and coequalizers
// exist and are unique, for legs and test objects in (vmax, emax).
SuiteResult universal_property_suite(std::size_t vmax, std::size_t emax,
                                     const SearchBudget& budget = {});

// Everything above; the two oracle suites and the envelope/cover suites use
// (vmax, emax), the rest run at their fixed micro bounds.
std::vector<SuiteResult> verify_theorems(std::size_t vmax, std::size_t emax,
                                         const SearchBudget& budget = {});

}  // namespace quiverkit::verify
