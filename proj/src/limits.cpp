#include "quiverkit/limits.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "quiverkit/error.hpp"

namespace quiverkit {

Product product(const Quiver& g, const Quiver& h) {
  QuiverData d;
  for (const Id& v : g.vertices()) {
    for (const Id& w : h.vertices()) d.vertices.push_back(Id::pair(v, w));
  }
  for (Index e = 0; e < g.edge_count(); ++e) {
    for (Index f = 0; f < h.edge_count(); ++f) {
      d.edges.push_back({Id::pair(g.edge(e), h.edge(f)),
                         Id::pair(g.vertex(g.source(e)), h.vertex(h.source(f))),
                         Id::pair(g.vertex(g.target(e)), h.vertex(h.target(f)))});
    }
  }
  Quiver p(d);
  // Pairs sort lexicographically, so (v_i, w_j) sits at i * |V(H)| + j.
  std::vector<Index> v1, v2, e1, e2;
  for (Index i = 0; i < p.vertex_count(); ++i) {
    v1.push_back(i / h.vertex_count());
    v2.push_back(i % h.vertex_count());
  }
  for (Index i = 0; i < p.edge_count(); ++i) {
    e1.push_back(i / h.edge_count());
    e2.push_back(i % h.edge_count());
  }
  return Product{p, QuiverMorphism(p, g, std::move(v1), std::move(e1)),
                 QuiverMorphism(p, h, std::move(v2), std::move(e2))};
}

Coproduct coproduct(const Quiver& g, const Quiver& h) {
  QuiverData d;
  for (const Id& v : g.vertices()) d.vertices.push_back(Id::tagged(0, {v}));
  for (const Id& w : h.vertices()) d.vertices.push_back(Id::tagged(1, {w}));
  for (Index e = 0; e < g.edge_count(); ++e) {
    d.edges.push_back({Id::tagged(0, {g.edge(e)}), Id::tagged(0, {g.vertex(g.source(e))}),
                       Id::tagged(0, {g.vertex(g.target(e))})});
  }
  for (Index f = 0; f < h.edge_count(); ++f) {
    d.edges.push_back({Id::tagged(1, {h.edge(f)}), Id::tagged(1, {h.vertex(h.source(f))}),
                       Id::tagged(1, {h.vertex(h.target(f))})});
  }
  Quiver c(d);
  // Tag 0 sorts before tag 1, so G's elements come first in order.
  std::vector<Index> v1(g.vertex_count()), e1(g.edge_count());
  std::vector<Index> v2(h.vertex_count()), e2(h.edge_count());
  std::iota(v1.begin(), v1.end(), Index{0});
  std::iota(e1.begin(), e1.end(), Index{0});
  std::iota(v2.begin(), v2.end(), g.vertex_count());
  std::iota(e2.begin(), e2.end(), g.edge_count());
  return Coproduct{c, QuiverMorphism(g, c, std::move(v1), std::move(e1)),
                   QuiverMorphism(h, c, std::move(v2), std::move(e2))};
}

QuiverMorphism pair_into(const Product& p, const QuiverMorphism& f, const QuiverMorphism& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == p.first.cod()) || !(g.cod() == p.second.cod())) {
    throw Error(ErrorKind::mismatch, "pair_into: legs do not form a cone over the product");
  }
  const std::size_t nv = g.cod().vertex_count();
  const std::size_t ne = g.cod().edge_count();
  std::vector<Index> vm, em;
  for (Index v = 0; v < f.dom().vertex_count(); ++v) {
    vm.push_back(f.vertex_map()[v] * nv + g.vertex_map()[v]);
  }
  for (Index e = 0; e < f.dom().edge_count(); ++e) {
    em.push_back(f.edge_map()[e] * ne + g.edge_map()[e]);
  }
  return QuiverMorphism(f.dom(), p.quiver, std::move(vm), std::move(em));
}

QuiverMorphism copair(const Coproduct& c, const QuiverMorphism& f, const QuiverMorphism& g) {
  if (!(f.cod() == g.cod()) || !(f.dom() == c.first.dom()) || !(g.dom() == c.second.dom())) {
    throw Error(ErrorKind::mismatch, "copair: legs do not form a cocone under the coproduct");
  }
  std::vector<Index> vm(f.vertex_map().begin(), f.vertex_map().end());
  vm.insert(vm.end(), g.vertex_map().begin(), g.vertex_map().end());
  std::vector<Index> em(f.edge_map().begin(), f.edge_map().end());
  em.insert(em.end(), g.edge_map().begin(), g.edge_map().end());
  return QuiverMorphism(c.quiver, f.cod(), std::move(vm), std::move(em));
}

Subquiver::Subquiver(Quiver base, std::vector<Index> vertices, std::vector<Index> edges)
    : base_(std::move(base)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (auto* xs : {&vertices_, &edges_}) {
    std::sort(xs->begin(), xs->end());
    xs->erase(std::unique(xs->begin(), xs->end()), xs->end());
  }
  if ((!vertices_.empty() && vertices_.back() >= base_.vertex_count()) ||
      (!edges_.empty() && edges_.back() >= base_.edge_count())) {
    throw Error(ErrorKind::invalid_argument, "subquiver: index out of range");
  }
  for (Index e : edges_) {
    if (!std::binary_search(vertices_.begin(), vertices_.end(), base_.source(e)) ||
        !std::binary_search(vertices_.begin(), vertices_.end(), base_.target(e))) {
      throw Error(ErrorKind::invalid_argument,
                  "subquiver: edge " + base_.edge(e).to_string() + " has an endpoint outside");
    }
  }
}

Quiver Subquiver::quiver() const {
  QuiverData d;
  for (Index v : vertices_) d.vertices.push_back(base_.vertex(v));
  for (Index e : edges_) {
    d.edges.push_back({base_.edge(e), base_.vertex(base_.source(e)),
                       base_.vertex(base_.target(e))});
  }
  return Quiver(d);
}

QuiverMorphism Subquiver::inclusion() const {
  return QuiverMorphism(quiver(), base_, vertices_, edges_);
}

Equalizer equalizer(const QuiverMorphism& f, const QuiverMorphism& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) {
    throw Error(ErrorKind::mismatch, "equalizer: maps are not parallel");
  }
  std::vector<Index> vs, es;
  for (Index v = 0; v < f.dom().vertex_count(); ++v) {
    if (f.vertex_map()[v] == g.vertex_map()[v]) vs.push_back(v);
  }
  for (Index e = 0; e < f.dom().edge_count(); ++e) {
    if (f.edge_map()[e] == g.edge_map()[e]) es.push_back(e);
  }
  Subquiver sub(f.dom(), std::move(vs), std::move(es));
  QuiverMorphism inc = sub.inclusion();
  return Equalizer{std::move(sub), std::move(inc)};
}

namespace {

// Union-find whose roots are always the smallest index of their class.
class MinUnionFind {
 public:
  explicit MinUnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Index{0});
  }

  Index find(Index x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  std::vector<Index> roots() {
    std::vector<Index> out(parent_.size());
    for (Index i = 0; i < out.size(); ++i) out[i] = find(i);
    return out;
  }

 private:
  std::vector<Index> parent_;
};

std::vector<Index> reps_from_labels(std::span<const Index> labels) {
  std::map<Index, Index> first;
  std::vector<Index> out(labels.size());
  for (Index i = 0; i < labels.size(); ++i) {
    out[i] = first.try_emplace(labels[i], i).first->second;
  }
  return out;
}

}  // namespace

QuiverCongruence::QuiverCongruence(Quiver base)
    : base_(std::move(base)),
      vertex_rep_(base_.vertex_count()),
      edge_rep_(base_.edge_count()) {
  std::iota(vertex_rep_.begin(), vertex_rep_.end(), Index{0});
  std::iota(edge_rep_.begin(), edge_rep_.end(), Index{0});
}

QuiverCongruence::QuiverCongruence(Quiver base, std::span<const Index> vertex_labels,
                                   std::span<const Index> edge_labels)
    : base_(std::move(base)) {
  if (vertex_labels.size() != base_.vertex_count() ||
      edge_labels.size() != base_.edge_count()) {
    throw Error(ErrorKind::invalid_argument, "congruence: label count mismatch");
  }
  vertex_rep_ = reps_from_labels(vertex_labels);
  edge_rep_ = reps_from_labels(edge_labels);
  for (Index e = 0; e < edge_rep_.size(); ++e) {
    Index r = edge_rep_[e];
    if (vertex_rep_[base_.source(e)] != vertex_rep_[base_.source(r)] ||
        vertex_rep_[base_.target(e)] != vertex_rep_[base_.target(r)]) {
      throw Error(ErrorKind::invalid_argument,
                  "congruence: edges " + base_.edge(r).to_string() + " and " +
                      base_.edge(e).to_string() + " are related but their endpoints are not");
    }
  }
}

bool QuiverCongruence::is_discrete() const noexcept {
  for (Index i = 0; i < vertex_rep_.size(); ++i) {
    if (vertex_rep_[i] != i) return false;
  }
  for (Index i = 0; i < edge_rep_.size(); ++i) {
    if (edge_rep_[i] != i) return false;
  }
  return true;
}

bool operator==(const QuiverCongruence& a, const QuiverCongruence& b) {
  return a.vertex_rep_ == b.vertex_rep_ && a.edge_rep_ == b.edge_rep_ && a.base_ == b.base_;
}

QuiverCongruence congruence_closure(const Quiver& base,
                                    const std::vector<std::pair<Id, Id>>& vertex_pairs,
                                    const std::vector<std::pair<Id, Id>>& edge_pairs) {
  MinUnionFind vs(base.vertex_count());
  MinUnionFind es(base.edge_count());
  for (const auto& [a, b] : vertex_pairs) vs.unite(base.vertex_index(a), base.vertex_index(b));
  for (const auto& [a, b] : edge_pairs) es.unite(base.edge_index(a), base.edge_index(b));
  // Merging vertices never forces edge merges, so one pass reaches the fixpoint.
  for (Index e = 0; e < base.edge_count(); ++e) {
    Index r = es.find(e);
    vs.unite(base.source(e), base.source(r));
    vs.unite(base.target(e), base.target(r));
  }
  auto vr = vs.roots();
  auto er = es.roots();
  return QuiverCongruence(base, vr, er);
}

Quotient quotient(const QuiverCongruence& c) {
  const Quiver& base = c.base();
  std::vector<Index> vpos(base.vertex_count()), epos(base.edge_count());
  QuiverData d;
  for (Index v = 0; v < base.vertex_count(); ++v) {
    if (c.vertex_class(v) == v) {
      vpos[v] = d.vertices.size();
      d.vertices.push_back(base.vertex(v));
    }
  }
  for (Index e = 0; e < base.edge_count(); ++e) {
    if (c.edge_class(e) == e) {
      epos[e] = d.edges.size();
      d.edges.push_back({base.edge(e), base.vertex(c.vertex_class(base.source(e))),
                         base.vertex(c.vertex_class(base.target(e)))});
    }
  }
  Quiver q(d);
  std::vector<Index> vm(base.vertex_count()), em(base.edge_count());
  for (Index v = 0; v < vm.size(); ++v) vm[v] = vpos[c.vertex_class(v)];
  for (Index e = 0; e < em.size(); ++e) em[e] = epos[c.edge_class(e)];
  return Quotient{q, QuiverMorphism(base, q, std::move(vm), std::move(em))};
}

Quotient coequalizer(const QuiverMorphism& f, const QuiverMorphism& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) {
    throw Error(ErrorKind::mismatch, "coequalizer: maps are not parallel");
  }
  const Quiver& h = f.cod();
  std::vector<std::pair<Id, Id>> vp, ep;
  for (Index v = 0; v < f.dom().vertex_count(); ++v) {
    vp.emplace_back(h.vertex(f.vertex_map()[v]), h.vertex(g.vertex_map()[v]));
  }
  for (Index e = 0; e < f.dom().edge_count(); ++e) {
    ep.emplace_back(h.edge(f.edge_map()[e]), h.edge(g.edge_map()[e]));
  }
  return quotient(congruence_closure(h, vp, ep));
}

namespace {

constexpr double kCongruenceSearchLimit = 2e7;
constexpr std::size_t kSubquiverElementLimit = 22;

double bell(std::size_t n) {
  // Bell triangle.
  std::vector<double> row{1.0};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<double> next{row.back()};
    for (double x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

// Restricted growth strings over `n` elements; `fits(i, block)` filters
// which existing blocks element i may join.
template <typename Fits, typename Visit>
bool for_each_rgs(std::size_t n, std::vector<Index>& labels, std::size_t i, Index blocks,
                  const Fits& fits, const Visit& visit) {
  if (i == n) return visit();
  for (Index b = 0; b <= blocks && b < n; ++b) {
    if (b < blocks && !fits(i, b)) continue;
    labels[i] = b;
    if (!for_each_rgs(n, labels, i + 1, std::max(blocks, b + 1), fits, visit)) return false;
  }
  return true;
}

}  // namespace

void for_each_congruence(const Quiver& base,
                         const std::function<bool(const QuiverCongruence&)>& visit) {
  if (bell(base.vertex_count()) * bell(base.edge_count()) > kCongruenceSearchLimit) {
    throw Error(ErrorKind::size_limit, "enumerate_congruences: quiver too large");
  }
  const std::size_t nv = base.vertex_count();
  const std::size_t ne = base.edge_count();
  std::vector<Index> vl(nv), el(ne);
  // First member of each edge block, to test endpoint compatibility.
  std::vector<Index> block_head(ne);
  auto all_vertices = [](std::size_t, Index) { return true; };
  for_each_rgs(nv, vl, 0, 0, all_vertices, [&] {
    auto edge_fits = [&](std::size_t e, Index b) {
      Index h = block_head[b];
      return vl[base.source(e)] == vl[base.source(h)] && vl[base.target(e)] == vl[base.target(h)];
    };
    // Heads are recorded when a block is opened; with RGS, the block opened at
    // edge e has label equal to the current block count.
    std::function<bool(std::size_t, Index)> rec = [&](std::size_t e, Index blocks) -> bool {
      if (e == ne) return visit(QuiverCongruence(base, vl, el));
      for (Index b = 0; b <= blocks; ++b) {
        if (b < blocks && !edge_fits(e, b)) continue;
        el[e] = b;
        if (b == blocks) block_head[b] = e;
        if (!rec(e + 1, b == blocks ? blocks + 1 : blocks)) return false;
      }
      return true;
    };
    return rec(0, 0);
  });
}

std::vector<QuiverCongruence> enumerate_congruences(const Quiver& base) {
  std::vector<QuiverCongruence> out;
  for_each_congruence(base, [&](const QuiverCongruence& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

void for_each_subquiver(const Quiver& base, const std::function<bool(const Subquiver&)>& visit) {
  const std::size_t nv = base.vertex_count();
  const std::size_t ne = base.edge_count();
  if (nv + ne > kSubquiverElementLimit) {
    throw Error(ErrorKind::size_limit, "enumerate_subquivers: quiver too large");
  }
  for (std::uint64_t vmask = 0; vmask < (std::uint64_t{1} << nv); ++vmask) {
    std::vector<Index> vs;
    for (Index v = 0; v < nv; ++v) {
      if (vmask >> v & 1) vs.push_back(v);
    }
    std::vector<Index> allowed;
    for (Index e = 0; e < ne; ++e) {
      if ((vmask >> base.source(e) & 1) && (vmask >> base.target(e) & 1)) allowed.push_back(e);
    }
    for (std::uint64_t emask = 0; emask < (std::uint64_t{1} << allowed.size()); ++emask) {
      std::vector<Index> es;
      for (Index i = 0; i < allowed.size(); ++i) {
        if (emask >> i & 1) es.push_back(allowed[i]);
      }
      if (!visit(Subquiver(base, vs, std::move(es)))) return;
    }
  }
}

std::vector<Subquiver> enumerate_subquivers(const Quiver& base) {
  std::vector<Subquiver> out;
  for_each_subquiver(base, [&](const Subquiver& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace quiverkit
