#include "quiverkit/quiver.hpp"

#include <algorithm>
#include <numeric>

#include "quiverkit/error.hpp"

namespace quiverkit {

struct Quiver::Rep {
  std::vector<Id> vertices;
  std::vector<Id> edges;
  std::vector<Index> sources;
  std::vector<Index> targets;
};

namespace {

std::optional<Index> find_sorted(std::span<const Id> ids, const Id& x) {
  auto it = std::lower_bound(ids.begin(), ids.end(), x);
  if (it == ids.end() || *it != x) return std::nullopt;
  return static_cast<Index>(it - ids.begin());
}

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += "; ";
    out += x;
  }
  return out;
}

}  // namespace

CheckReport validate_quiver(const QuiverData& data) {
  CheckReport report;
  std::vector<Id> vs = data.vertices;
  std::sort(vs.begin(), vs.end());
  for (std::size_t i = 1; i < vs.size(); ++i) {
    if (vs[i] == vs[i - 1]) {
      report.fail("duplicate vertex " + vs[i].to_string());
      if (report.witness.empty()) report.witness = {vs[i]};
    }
  }
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());

  std::vector<Id> es;
  es.reserve(data.edges.size());
  for (const auto& e : data.edges) es.push_back(e.id);
  std::sort(es.begin(), es.end());
  for (std::size_t i = 1; i < es.size(); ++i) {
    if (es[i] == es[i - 1]) {
      report.fail("duplicate edge " + es[i].to_string());
      if (report.witness.empty()) report.witness = {es[i]};
    }
  }

  for (const auto& e : data.edges) {
    for (auto [end, name] : {std::pair{&e.source, "src"}, std::pair{&e.target, "tgt"}}) {
      if (!std::binary_search(vs.begin(), vs.end(), *end)) {
        report.fail(std::string(name) + "(" + e.id.to_string() + ")=" +
                    end->to_string() + " not in V");
        if (report.witness.empty()) report.witness = {e.id};
      }
    }
  }
  return report;
}

Quiver::Quiver() : rep_(std::make_shared<const Rep>()) {}

Quiver::Quiver(const QuiverData& data) {
  CheckReport report = validate_quiver(data);
  if (!report) {
    throw Error(ErrorKind::invalid_argument, "invalid quiver: " + join(report.violations));
  }
  auto rep = std::make_shared<Rep>();
  rep->vertices = data.vertices;
  std::sort(rep->vertices.begin(), rep->vertices.end());

  std::vector<const EdgeSpec*> order;
  order.reserve(data.edges.size());
  for (const auto& e : data.edges) order.push_back(&e);
  std::sort(order.begin(), order.end(),
            [](const EdgeSpec* a, const EdgeSpec* b) { return a->id < b->id; });
  for (const EdgeSpec* e : order) {
    rep->edges.push_back(e->id);
    rep->sources.push_back(*find_sorted(rep->vertices, e->source));
    rep->targets.push_back(*find_sorted(rep->vertices, e->target));
  }
  rep_ = std::move(rep);
}

Quiver::Quiver(std::vector<Id> vertices, std::vector<EdgeSpec> edges)
    : Quiver(QuiverData{std::move(vertices), std::move(edges)}) {}

std::size_t Quiver::vertex_count() const noexcept { return rep_->vertices.size(); }
std::size_t Quiver::edge_count() const noexcept { return rep_->edges.size(); }
std::span<const Id> Quiver::vertices() const noexcept { return rep_->vertices; }
std::span<const Id> Quiver::edges() const noexcept { return rep_->edges; }
Index Quiver::source(Index e) const { return rep_->sources.at(e); }
Index Quiver::target(Index e) const { return rep_->targets.at(e); }
std::span<const Index> Quiver::sources() const noexcept { return rep_->sources; }
std::span<const Index> Quiver::targets() const noexcept { return rep_->targets; }

std::optional<Index> Quiver::find_vertex(const Id& v) const {
  return find_sorted(rep_->vertices, v);
}

std::optional<Index> Quiver::find_edge(const Id& e) const {
  return find_sorted(rep_->edges, e);
}

Index Quiver::vertex_index(const Id& v) const {
  if (auto i = find_vertex(v)) return *i;
  throw Error(ErrorKind::invalid_argument, "unknown vertex " + v.to_string());
}

Index Quiver::edge_index(const Id& e) const {
  if (auto i = find_edge(e)) return *i;
  throw Error(ErrorKind::invalid_argument, "unknown edge " + e.to_string());
}

const Id& Quiver::source_of(const Id& e) const { return vertex(source(edge_index(e))); }
const Id& Quiver::target_of(const Id& e) const { return vertex(target(edge_index(e))); }

QuiverData Quiver::data() const {
  QuiverData d;
  d.vertices = rep_->vertices;
  for (Index e = 0; e < edge_count(); ++e) {
    d.edges.push_back({edge(e), vertex(source(e)), vertex(target(e))});
  }
  return d;
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.rep_ == b.rep_) return true;
  return a.rep_->vertices == b.rep_->vertices && a.rep_->edges == b.rep_->edges &&
         a.rep_->sources == b.rep_->sources && a.rep_->targets == b.rep_->targets;
}

std::string to_string(const Quiver& q) {
  std::string out = "V={";
  for (Index v = 0; v < q.vertex_count(); ++v) {
    if (v) out += ',';
    out += q.vertex(v).to_string();
  }
  out += "} E={";
  for (Index e = 0; e < q.edge_count(); ++e) {
    if (e) out += ',';
    out += q.edge(e).to_string() + ":" + q.vertex(q.source(e)).to_string() + "->" +
           q.vertex(q.target(e)).to_string();
  }
  return out + "}";
}

QuiverMorphism::QuiverMorphism(Quiver dom, Quiver cod, std::vector<Index> vertex_map,
                               std::vector<Index> edge_map)
    : dom_(std::move(dom)),
      cod_(std::move(cod)),
      vertex_map_(std::move(vertex_map)),
      edge_map_(std::move(edge_map)) {
  if (vertex_map_.size() != dom_.vertex_count() || edge_map_.size() != dom_.edge_count()) {
    throw Error(ErrorKind::invalid_argument, "morphism maps are not total on the domain");
  }
  auto out_of_range = [](const std::vector<Index>& m, std::size_t n) {
    return std::any_of(m.begin(), m.end(), [n](Index i) { return i >= n; });
  };
  if (out_of_range(vertex_map_, cod_.vertex_count()) ||
      out_of_range(edge_map_, cod_.edge_count())) {
    throw Error(ErrorKind::invalid_argument, "morphism maps leave the codomain");
  }
}

QuiverMorphism QuiverMorphism::from_ids(Quiver dom, Quiver cod,
                                        const std::map<Id, Id>& vertex_map,
                                        const std::map<Id, Id>& edge_map) {
  auto build = [](std::span<const Id> from, const std::map<Id, Id>& m, auto&& lookup,
                  const char* what) {
    if (m.size() != from.size()) {
      throw Error(ErrorKind::invalid_argument,
                  std::string(what) + " map is not a total function on the domain");
    }
    std::vector<Index> out;
    out.reserve(from.size());
    for (const Id& x : from) {
      auto it = m.find(x);
      if (it == m.end()) {
        throw Error(ErrorKind::invalid_argument,
                    std::string(what) + " map undefined at " + x.to_string());
      }
      out.push_back(lookup(it->second));
    }
    return out;
  };
  auto vm = build(dom.vertices(), vertex_map,
                  [&](const Id& y) { return cod.vertex_index(y); }, "vertex");
  auto em = build(dom.edges(), edge_map, [&](const Id& y) { return cod.edge_index(y); },
                  "edge");
  return QuiverMorphism(std::move(dom), std::move(cod), std::move(vm), std::move(em));
}

const Id& QuiverMorphism::map_vertex(const Id& v) const {
  return cod_.vertex(vertex_map_[dom_.vertex_index(v)]);
}

const Id& QuiverMorphism::map_edge(const Id& e) const {
  return cod_.edge(edge_map_[dom_.edge_index(e)]);
}

bool operator==(const QuiverMorphism& a, const QuiverMorphism& b) {
  return a.vertex_map_ == b.vertex_map_ && a.edge_map_ == b.edge_map_ && a.dom_ == b.dom_ &&
         a.cod_ == b.cod_;
}

CheckReport validate_morphism(const QuiverMorphism& m) {
  CheckReport report;
  const Quiver& g = m.dom();
  const Quiver& h = m.cod();
  for (Index e = 0; e < g.edge_count(); ++e) {
    Index f = m.edge_map()[e];
    if (m.vertex_map()[g.source(e)] != h.source(f)) {
      report.fail("source square fails at edge " + g.edge(e).to_string());
      report.criterion = 1;
    } else if (m.vertex_map()[g.target(e)] != h.target(f)) {
      report.fail("target square fails at edge " + g.edge(e).to_string());
      report.criterion = 2;
    }
    if (!report) {
      report.witness = {g.edge(e)};
      break;
    }
  }
  return report;
}

QuiverMorphism identity(const Quiver& q) {
  std::vector<Index> vm(q.vertex_count());
  std::vector<Index> em(q.edge_count());
  std::iota(vm.begin(), vm.end(), Index{0});
  std::iota(em.begin(), em.end(), Index{0});
  return QuiverMorphism(q, q, std::move(vm), std::move(em));
}

QuiverMorphism compose(const QuiverMorphism& g, const QuiverMorphism& f) {
  if (!(f.cod() == g.dom())) {
    throw Error(ErrorKind::mismatch, "compose: codomain of f differs from domain of g");
  }
  std::vector<Index> vm(f.vertex_map().size());
  std::vector<Index> em(f.edge_map().size());
  for (Index i = 0; i < vm.size(); ++i) vm[i] = g.vertex_map()[f.vertex_map()[i]];
  for (Index i = 0; i < em.size(); ++i) em[i] = g.edge_map()[f.edge_map()[i]];
  return QuiverMorphism(f.dom(), g.cod(), std::move(vm), std::move(em));
}

namespace {

bool injective(std::span<const Index> m, std::size_t n) {
  std::vector<char> seen(n, 0);
  for (Index i : m) {
    if (seen[i]) return false;
    seen[i] = 1;
  }
  return true;
}

bool surjective(std::span<const Index> m, std::size_t n) {
  std::vector<char> seen(n, 0);
  std::size_t hit = 0;
  for (Index i : m) {
    if (!seen[i]) {
      seen[i] = 1;
      ++hit;
    }
  }
  return hit == n;
}

}  // namespace

bool is_mono(const QuiverMorphism& m) {
  return injective(m.vertex_map(), m.cod().vertex_count()) &&
         injective(m.edge_map(), m.cod().edge_count());
}

bool is_epi(const QuiverMorphism& m) {
  return surjective(m.vertex_map(), m.cod().vertex_count()) &&
         surjective(m.edge_map(), m.cod().edge_count());
}

bool is_iso(const QuiverMorphism& m) {
  return m.dom().vertex_count() == m.cod().vertex_count() &&
         m.dom().edge_count() == m.cod().edge_count() && is_mono(m);
}

QuiverMorphism invert(const QuiverMorphism& m) {
  if (!is_iso(m)) throw Error(ErrorKind::precondition, "invert: map is not an isomorphism");
  std::vector<Index> vm(m.vertex_map().size());
  std::vector<Index> em(m.edge_map().size());
  for (Index i = 0; i < vm.size(); ++i) vm[m.vertex_map()[i]] = i;
  for (Index i = 0; i < em.size(); ++i) em[m.edge_map()[i]] = i;
  return QuiverMorphism(m.cod(), m.dom(), std::move(vm), std::move(em));
}

}  // namespace quiverkit
