#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quiverkit/id.hpp"

namespace quiverkit {

using Index = std::size_t;

struct EdgeSpec {
  Id id;
  Id source;
  Id target;
};

// A quadruple (V, E, src, tgt) as written down, not yet checked.
struct QuiverData {
  std::vector<Id> vertices;
  std::vector<EdgeSpec> edges;
};

// Verdict of a decision procedure. `violations` explains each failure in
// prose, `witness` holds the ids exhibiting the first one and `criterion`
// numbers the failed condition where the procedure has numbered conditions.
struct CheckReport {
  bool ok = true;
  int criterion = 0;
  std::vector<std::string> violations;
  std::vector<Id> witness;

  explicit operator bool() const noexcept { return ok; }

  void fail(std::string message) {
    ok = false;
    violations.push_back(std::move(message));
  }
};

CheckReport validate_quiver(const QuiverData& data);

// Finite directed multigraph. Immutable; copies share storage.
//
// Vertices and edges are stored sorted by the canonical Id order, so index i
// of vertices() is the i-th smallest vertex. Algorithms work on indices;
// the Id-based accessors are for callers and tests.
class Quiver {
 public:
  // The empty quiver I(∅).
  Quiver();
  // Throws Error(invalid_argument) listing every violation.
  explicit Quiver(const QuiverData& data);
  Quiver(std::vector<Id> vertices, std::vector<EdgeSpec> edges);

  std::size_t vertex_count() const noexcept;
  std::size_t edge_count() const noexcept;
  std::span<const Id> vertices() const noexcept;
  std::span<const Id> edges() const noexcept;
  const Id& vertex(Index v) const { return vertices()[v]; }
  const Id& edge(Index e) const { return edges()[e]; }

  Index source(Index e) const;
  Index target(Index e) const;
  std::span<const Index> sources() const noexcept;
  std::span<const Index> targets() const noexcept;

  std::optional<Index> find_vertex(const Id& v) const;
  std::optional<Index> find_edge(const Id& e) const;
  // Throw Error(invalid_argument) for unknown ids.
  Index vertex_index(const Id& v) const;
  Index edge_index(const Id& e) const;

  const Id& source_of(const Id& e) const;
  const Id& target_of(const Id& e) const;

  QuiverData data() const;

  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  struct Rep;
  std::shared_ptr<const Rep> rep_;
};

std::string to_string(const Quiver& q);

// A vertex map and an edge map between two quivers. Totality is enforced on
// construction; the commuting squares are checked by validate_morphism.
// Everything the library hands out is a valid morphism.
class QuiverMorphism {
 public:
  QuiverMorphism(Quiver dom, Quiver cod, std::vector<Index> vertex_map,
                 std::vector<Index> edge_map);

  static QuiverMorphism from_ids(Quiver dom, Quiver cod,
                                 const std::map<Id, Id>& vertex_map,
                                 const std::map<Id, Id>& edge_map);

  const Quiver& dom() const noexcept { return dom_; }
  const Quiver& cod() const noexcept { return cod_; }
  std::span<const Index> vertex_map() const noexcept { return vertex_map_; }
  std::span<const Index> edge_map() const noexcept { return edge_map_; }

  const Id& map_vertex(const Id& v) const;
  const Id& map_edge(const Id& e) const;

  friend bool operator==(const QuiverMorphism& a, const QuiverMorphism& b);

 private:
  Quiver dom_;
  Quiver cod_;
  std::vector<Index> vertex_map_;
  std::vector<Index> edge_map_;
};

CheckReport validate_morphism(const QuiverMorphism& m);

QuiverMorphism identity(const Quiver& q);

// g ∘ f. Throws Error(mismatch) unless cod(f) == dom(g).
QuiverMorphism compose(const QuiverMorphism& g, const QuiverMorphism& f);

bool is_mono(const QuiverMorphism& m);
bool is_epi(const QuiverMorphism& m);
bool is_iso(const QuiverMorphism& m);

// Throws Error(precondition) unless is_iso(m).
QuiverMorphism invert(const QuiverMorphism& m);

}  // namespace quiverkit
