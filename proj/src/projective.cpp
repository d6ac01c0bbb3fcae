#include "quiverkit/projective.hpp"

#include <map>

#include "quiverkit/error.hpp"
#include "quiverkit/reflections.hpp"

namespace quiverkit {

namespace {

std::vector<char> independence(const Quiver& g) {
  std::vector<char> indep(g.vertex_count(), 1);
  for (Index e = 0; e < g.edge_count(); ++e) {
    indep[g.source(e)] = 0;
    indep[g.target(e)] = 0;
  }
  return indep;
}

}  // namespace

std::vector<Id> independent_vertices(const Quiver& g) {
  auto indep = independence(g);
  std::vector<Id> out;
  for (Index v = 0; v < g.vertex_count(); ++v) {
    if (indep[v]) out.push_back(g.vertex(v));
  }
  return out;
}

Coproduct explosion_coproduct(const Quiver& g) {
  return coproduct(build_I(independent_vertices(g)), build_M(g.edges()));
}

Quiver explosion(const Quiver& g) { return explosion_coproduct(g).quiver; }

namespace {

QuiverMorphism covering_map(const Quiver& g, const Coproduct& x) {
  std::map<Id, Id> kappa, lambda;
  for (const Id& u : independent_vertices(g)) kappa.emplace(u, u);
  for (const Id& e : g.edges()) lambda.emplace(e, e);
  return copair(x, lift_I(kappa, g), lift_M(lambda, g));
}

}  // namespace

QuiverMorphism covering_map(const Quiver& g) { return covering_map(g, explosion_coproduct(g)); }

bool is_epi_projective(const Quiver& p) { return is_iso(covering_map(p)); }

CheckReport check_disjoint_arrows(const Quiver& p) {
  CheckReport report;
  constexpr Index kNone = static_cast<Index>(-1);
  std::vector<Index> out_edge(p.vertex_count(), kNone), in_edge(p.vertex_count(), kNone);
  for (Index e = 0; e < p.edge_count() && report; ++e) {
    const Index s = p.source(e);
    const Index t = p.target(e);
    if (out_edge[s] != kNone) {
      report.fail("source map is not injective");
      report.criterion = 1;
      report.witness = {p.edge(out_edge[s]), p.edge(e)};
    } else if (in_edge[t] != kNone) {
      report.fail("target map is not injective");
      report.criterion = 2;
      report.witness = {p.edge(in_edge[t]), p.edge(e)};
    }
    out_edge[s] = e;
    in_edge[t] = e;
  }
  if (!report) return report;
  for (Index v = 0; v < p.vertex_count(); ++v) {
    if (out_edge[v] != kNone && in_edge[v] != kNone) {
      report.fail("vertex " + p.vertex(v).to_string() + " is both a source and a target");
      report.criterion = 3;
      report.witness = {p.vertex(v)};
      break;
    }
  }
  return report;
}

QuiverMorphism lift_along_epi(const QuiverMorphism& psi, const QuiverMorphism& phi) {
  if (!(psi.cod() == phi.cod())) {
    throw Error(ErrorKind::mismatch, "lift_along_epi: psi and phi have different codomains");
  }
  if (!is_epi(phi)) throw Error(ErrorKind::precondition, "lift_along_epi: phi is not epic");
  const Quiver& p = psi.dom();
  const Quiver& g = phi.dom();
  Coproduct x = explosion_coproduct(p);
  QuiverMorphism cover_p = covering_map(p, x);
  if (!is_iso(cover_p)) {
    throw Error(ErrorKind::precondition, "lift_along_epi: source is not epi-projective");
  }

  // psi read on the two summands of X(P) ≅ P.
  QuiverMorphism psi_x = compose(psi, cover_p);
  QuiverMorphism on_vertices = compose(psi_x, x.first);
  QuiverMorphism on_edges = compose(psi_x, x.second);

  std::map<Id, Id> alpha, beta;
  const Quiver& is = x.first.dom();
  for (Index s = 0; s < is.vertex_count(); ++s) {
    const Index target = on_vertices.vertex_map()[s];
    for (Index v = 0; v < g.vertex_count(); ++v) {
      if (phi.vertex_map()[v] == target) {
        alpha.emplace(is.vertex(s), g.vertex(v));
        break;
      }
    }
  }
  const Quiver& mt = x.second.dom();
  for (Index t = 0; t < mt.edge_count(); ++t) {
    const Index target = on_edges.edge_map()[t];
    for (Index e = 0; e < g.edge_count(); ++e) {
      if (phi.edge_map()[e] == target) {
        beta.emplace(mt.edge(t), g.edge(e));
        break;
      }
    }
  }
  QuiverMorphism gamma_x = copair(x, lift_I(alpha, g), lift_M(beta, g));
  return compose(gamma_x, invert(cover_p));
}

CheckReport is_epi_coessential(const QuiverMorphism& phi) {
  if (!is_epi(phi)) throw Error(ErrorKind::precondition, "is_epi_coessential: map is not epic");
  const Quiver& g = phi.dom();
  const Quiver& h = phi.cod();
  CheckReport report;

  if (g.edge_count() != h.edge_count()) {
    report.fail("edge map is not injective");
    report.criterion = 1;
    constexpr Index kNone = static_cast<Index>(-1);
    std::vector<Index> first(h.edge_count(), kNone);
    for (Index e = 0; e < g.edge_count(); ++e) {
      Index f = phi.edge_map()[e];
      if (first[f] != kNone) {
        report.witness = {g.edge(first[f]), g.edge(e)};
        break;
      }
      first[f] = e;
    }
    return report;
  }

  auto indep_g = independence(g);
  auto indep_h = independence(h);
  for (Index v = 0; v < g.vertex_count(); ++v) {
    if (indep_g[v] && !indep_h[phi.vertex_map()[v]]) {
      report.fail("independent vertex " + g.vertex(v).to_string() +
                  " maps to a vertex with edges");
      report.criterion = 2;
      report.witness = {g.vertex(v)};
      return report;
    }
  }

  std::vector<std::size_t> preimages(h.vertex_count(), 0);
  for (Index v = 0; v < g.vertex_count(); ++v) {
    if (indep_g[v]) ++preimages[phi.vertex_map()[v]];
  }
  for (Index w = 0; w < h.vertex_count(); ++w) {
    if (indep_h[w] && preimages[w] != 1) {
      report.fail("independent vertex " + h.vertex(w).to_string() + " has " +
                  std::to_string(preimages[w]) + " independent preimages");
      report.criterion = 3;
      report.witness = {h.vertex(w)};
      return report;
    }
  }
  return report;
}

Cover cover(const Quiver& g) {
  Coproduct x = explosion_coproduct(g);
  QuiverMorphism p = covering_map(g, x);
  return Cover{x.quiver, std::move(p)};
}

}  // namespace quiverkit
