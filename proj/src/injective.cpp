#include "quiverkit/injective.hpp"

#include "quiverkit/error.hpp"
#include "quiverkit/reflections.hpp"

namespace quiverkit {

std::vector<Index> edges_between(const Quiver& q, Index v, Index w) {
  std::vector<Index> out;
  for (Index e = 0; e < q.edge_count(); ++e) {
    if (q.source(e) == v && q.target(e) == w) out.push_back(e);
  }
  return out;
}

std::vector<Id> edges_between(const Quiver& q, const Id& v, const Id& w) {
  std::vector<Id> out;
  for (Index e : edges_between(q, q.vertex_index(v), q.vertex_index(w))) {
    out.push_back(q.edge(e));
  }
  return out;
}

namespace {

// count[v * n + w] = |edges(v, w)|
std::vector<std::size_t> pair_counts(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  std::vector<std::size_t> count(n * n, 0);
  for (Index e = 0; e < q.edge_count(); ++e) ++count[q.source(e) * n + q.target(e)];
  return count;
}

}  // namespace

std::optional<std::pair<Id, Id>> find_unloaded_pair(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  auto count = pair_counts(q);
  for (Index v = 0; v < n; ++v) {
    for (Index w = 0; w < n; ++w) {
      if (count[v * n + w] == 0) return std::pair{q.vertex(v), q.vertex(w)};
    }
  }
  return std::nullopt;
}

bool is_loaded(const Quiver& q) { return !find_unloaded_pair(q); }

bool is_mono_injective(const Quiver& q) { return q.vertex_count() > 0 && is_loaded(q); }

QuiverMorphism extend_along_mono(const QuiverMorphism& phi, const QuiverMorphism& psi) {
  if (!(phi.dom() == psi.dom())) {
    throw Error(ErrorKind::mismatch, "extend_along_mono: phi and psi have different domains");
  }
  if (!is_mono(phi)) throw Error(ErrorKind::precondition, "extend_along_mono: phi is not monic");
  const Quiver& c = phi.cod();
  const Quiver& j = psi.cod();
  if (!is_mono_injective(j)) {
    throw Error(ErrorKind::precondition, "extend_along_mono: target is not mono-injective");
  }

  const std::size_t nj = j.vertex_count();
  // Smallest edge of J between each ordered pair; loaded means all exist.
  std::vector<Index> first_edge(nj * nj, 0);
  std::vector<char> seen(nj * nj, 0);
  for (Index f = 0; f < j.edge_count(); ++f) {
    Index k = j.source(f) * nj + j.target(f);
    if (!seen[k]) {
      seen[k] = 1;
      first_edge[k] = f;
    }
  }
  auto pick = [&](Index v, Index w) { return first_edge[v * nj + w]; };

  const Index w = 0;  // smallest vertex of J
  constexpr Index kNone = static_cast<Index>(-1);
  // For x in V0, the vertex of D it comes from.
  std::vector<Index> preimage_v(c.vertex_count(), kNone);
  for (Index x = 0; x < phi.dom().vertex_count(); ++x) preimage_v[phi.vertex_map()[x]] = x;
  std::vector<Index> preimage_e(c.edge_count(), kNone);
  for (Index y = 0; y < phi.dom().edge_count(); ++y) preimage_e[phi.edge_map()[y]] = y;

  std::vector<Index> vm(c.vertex_count());
  for (Index v = 0; v < c.vertex_count(); ++v) {
    vm[v] = preimage_v[v] != kNone ? psi.vertex_map()[preimage_v[v]] : w;  // V0 : V1
  }
  std::vector<Index> em(c.edge_count());
  for (Index e = 0; e < c.edge_count(); ++e) {
    if (preimage_e[e] != kNone) {
      em[e] = psi.edge_map()[preimage_e[e]];  // E0
    } else {
      // E1 lands on the loop at w; E2, E3 and E4 between the endpoint images.
      em[e] = pick(vm[c.source(e)], vm[c.target(e)]);
    }
  }
  return QuiverMorphism(c, j, std::move(vm), std::move(em));
}

CheckReport is_mono_essential(const QuiverMorphism& phi) {
  if (!is_mono(phi)) throw Error(ErrorKind::precondition, "is_mono_essential: map is not monic");
  const Quiver& d = phi.dom();
  const Quiver& c = phi.cod();
  CheckReport report;

  if (d.vertex_count() == 0) {
    if (c.vertex_count() > 1) {
      report.fail("codomain of a map out of the empty quiver has more than one vertex");
      report.witness = {c.vertex(0), c.vertex(1)};
    } else if (c.edge_count() > 1) {
      report.fail("codomain of a map out of the empty quiver has more than one edge");
      report.witness = {c.edge(0), c.edge(1)};
    }
    return report;
  }

  if (c.vertex_count() != d.vertex_count()) {
    report.fail("vertex map is not onto");
    report.criterion = 1;
    std::vector<char> hit(c.vertex_count(), 0);
    for (Index x : phi.vertex_map()) hit[x] = 1;
    for (Index v = 0; v < c.vertex_count(); ++v) {
      if (!hit[v]) {
        report.witness = {c.vertex(v)};
        break;
      }
    }
    return report;
  }

  const std::size_t n = d.vertex_count();
  auto d_counts = pair_counts(d);
  auto c_counts = pair_counts(c);
  for (Index v = 0; v < n; ++v) {
    for (Index w = 0; w < n; ++w) {
      const std::size_t in_d = d_counts[v * n + w];
      const std::size_t in_c = c_counts[phi.vertex_map()[v] * n + phi.vertex_map()[w]];
      // phi is injective on edges, so the image of edges_D(v,w) is a subset of
      // edges_C(phi v, phi w) with the same size; equality is a count check.
      if (in_d > 0 && in_c != in_d) {
        report.fail("edges from " + d.vertex(v).to_string() + " to " + d.vertex(w).to_string() +
                    " gain a parallel edge");
        report.criterion = 2;
      } else if (in_d == 0 && in_c > 1) {
        report.fail("more than one new edge from " + d.vertex(v).to_string() + " to " +
                    d.vertex(w).to_string());
        report.criterion = 3;
      }
      if (!report) {
        report.witness = {d.vertex(v), d.vertex(w)};
        return report;
      }
    }
  }
  return report;
}

Quiver loading(const Quiver& d) {
  QuiverData out;
  out.vertices.assign(d.vertices().begin(), d.vertices().end());
  for (Index e = 0; e < d.edge_count(); ++e) {
    out.edges.push_back(
        {Id::tagged(0, {d.edge(e)}), d.vertex(d.source(e)), d.vertex(d.target(e))});
  }
  const std::size_t n = d.vertex_count();
  auto count = pair_counts(d);
  for (Index v = 0; v < n; ++v) {
    for (Index w = 0; w < n; ++w) {
      if (count[v * n + w] == 0) {
        out.edges.push_back({Id::tagged(1, {d.vertex(v), d.vertex(w)}), d.vertex(v), d.vertex(w)});
      }
    }
  }
  return Quiver(out);
}

Envelope envelope(const Quiver& d) {
  if (d.vertex_count() == 0) {
    const Id one[] = {unit_id()};
    Quiver b1 = build_B(one);
    return Envelope{b1, QuiverMorphism(d, b1, {}, {})};
  }
  Quiver l = loading(d);
  std::vector<Index> vm(d.vertex_count());
  for (Index v = 0; v < vm.size(); ++v) vm[v] = v;
  // (0,e) edges sort before (1,v,w) ones and keep the order of e.
  std::vector<Index> em(d.edge_count());
  for (Index e = 0; e < em.size(); ++e) em[e] = e;
  return Envelope{l, QuiverMorphism(d, l, std::move(vm), std::move(em))};
}

}  // namespace quiverkit
