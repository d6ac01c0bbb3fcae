#include "quiverkit/homsearch.hpp"

#include <algorithm>
#include <limits>

#include "quiverkit/error.hpp"

namespace quiverkit {

namespace {

constexpr Index kUnset = std::numeric_limits<Index>::max();

bool allowed(const std::vector<std::vector<Index>>* domains, Index x, Index y) {
  if (domains == nullptr || (*domains)[x].empty()) return true;
  const auto& d = (*domains)[x];
  return std::binary_search(d.begin(), d.end(), y);
}

class HomSearch {
 public:
  using Visit = std::function<bool(std::span<const Index>, std::span<const Index>)>;

  HomSearch(const Quiver& g, const Quiver& h, const Visit& visit, const SearchBudget& budget,
            const SearchDomains* domains)
      : g_(g),
        h_(h),
        visit_(visit),
        budget_(budget),
        vdom_(domains ? &domains->vertices : nullptr),
        edom_(domains ? &domains->edges : nullptr),
        vmap_(g.vertex_count(), kUnset),
        emap_(g.edge_count(), kUnset),
        start_(std::chrono::steady_clock::now()) {
    if (domains && (domains->vertices.size() != g.vertex_count() ||
                    domains->edges.size() != g.edge_count())) {
      throw Error(ErrorKind::invalid_argument, "search domains do not match the source quiver");
    }
    const std::size_t nv = h.vertex_count();
    out_.resize(nv);
    in_.resize(nv);
    between_.resize(nv * nv);
    for (Index f = 0; f < h.edge_count(); ++f) {
      out_[h.source(f)].push_back(f);
      in_[h.target(f)].push_back(f);
      between_[h.source(f) * nv + h.target(f)].push_back(f);
    }
    all_edges_.resize(h.edge_count());
    for (Index f = 0; f < all_edges_.size(); ++f) all_edges_[f] = f;
    all_vertices_.resize(nv);
    for (Index v = 0; v < nv; ++v) all_vertices_[v] = v;

    std::vector<char> touched(g.vertex_count(), 0);
    for (Index e = 0; e < g.edge_count(); ++e) {
      touched[g.source(e)] = 1;
      touched[g.target(e)] = 1;
    }
    for (Index v = 0; v < g.vertex_count(); ++v) {
      if (!touched[v]) free_.push_back(v);
    }
  }

  void run() { assign_edge(0); }

 private:
  void tick() {
    if (++assignments_ > budget_.max_assignments) {
      throw Error(ErrorKind::budget_exhausted,
                  "homomorphism search exceeded " + std::to_string(budget_.max_assignments) +
                      " candidate assignments");
    }
    if (budget_.time_limit && (assignments_ & 0x3ff) == 0 &&
        std::chrono::steady_clock::now() - start_ > *budget_.time_limit) {
      throw Error(ErrorKind::budget_exhausted, "homomorphism search exceeded its time limit");
    }
  }

  const std::vector<Index>& candidates(Index e) const {
    Index s = vmap_[g_.source(e)];
    Index t = vmap_[g_.target(e)];
    if (s != kUnset && t != kUnset) return between_[s * h_.vertex_count() + t];
    if (s != kUnset) return out_[s];
    if (t != kUnset) return in_[t];
    return all_edges_;
  }

  // Returns false once the visitor asked to stop.
  bool assign_edge(Index e) {
    if (e == g_.edge_count()) return assign_free(0);
    const Index gs = g_.source(e);
    const Index gt = g_.target(e);
    for (Index f : candidates(e)) {
      tick();
      if (!allowed(edom_, e, f)) continue;
      const Index hs = h_.source(f);
      const Index ht = h_.target(f);
      const bool set_s = vmap_[gs] == kUnset;
      if (set_s) {
        if (!allowed(vdom_, gs, hs)) continue;
        vmap_[gs] = hs;
      }
      bool ok = true;
      const bool set_t = vmap_[gt] == kUnset;
      if (set_t) {
        if (allowed(vdom_, gt, ht)) {
          vmap_[gt] = ht;
        } else {
          ok = false;
        }
      } else if (vmap_[gt] != ht) {
        ok = false;
      }
      if (ok) {
        emap_[e] = f;
        bool go_on = assign_edge(e + 1);
        emap_[e] = kUnset;
        if (!go_on) return false;
      }
      if (set_t && ok) vmap_[gt] = kUnset;
      if (set_s) vmap_[gs] = kUnset;
    }
    return true;
  }

  bool assign_free(Index i) {
    if (i == free_.size()) return visit_(vmap_, emap_);
    const Index v = free_[i];
    const auto& choices =
        (vdom_ && !(*vdom_)[v].empty()) ? (*vdom_)[v] : all_vertices_;
    for (Index w : choices) {
      tick();
      vmap_[v] = w;
      if (!assign_free(i + 1)) return false;
    }
    vmap_[v] = kUnset;
    return true;
  }

  const Quiver& g_;
  const Quiver& h_;
  const Visit& visit_;
  const SearchBudget& budget_;
  const std::vector<std::vector<Index>>* vdom_;
  const std::vector<std::vector<Index>>* edom_;
  std::vector<Index> vmap_;
  std::vector<Index> emap_;
  std::vector<std::vector<Index>> out_, in_, between_;
  std::vector<Index> all_edges_, all_vertices_, free_;
  std::uint64_t assignments_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

void for_each_hom_maps(
    const Quiver& g, const Quiver& h,
    const std::function<bool(std::span<const Index>, std::span<const Index>)>& visit,
    const SearchBudget& budget, const SearchDomains* domains) {
  HomSearch(g, h, visit, budget, domains).run();
}

void for_each_hom(const Quiver& g, const Quiver& h,
                  const std::function<bool(const QuiverMorphism&)>& visit,
                  const SearchBudget& budget) {
  for_each_hom_maps(
      g, h,
      [&](std::span<const Index> vm, std::span<const Index> em) {
        return visit(QuiverMorphism(g, h, {vm.begin(), vm.end()}, {em.begin(), em.end()}));
      },
      budget);
}

std::vector<QuiverMorphism> enumerate_homs(const Quiver& g, const Quiver& h,
                                           const SearchBudget& budget) {
  std::vector<QuiverMorphism> out;
  for_each_hom(
      g, h,
      [&](const QuiverMorphism& m) {
        out.push_back(m);
        return true;
      },
      budget);
  return out;
}

std::uint64_t count_homs(const Quiver& g, const Quiver& h, const SearchBudget& budget) {
  std::uint64_t n = 0;
  for_each_hom_maps(
      g, h,
      [&](std::span<const Index>, std::span<const Index>) {
        ++n;
        return true;
      },
      budget);
  return n;
}

namespace {

std::optional<QuiverMorphism> first_hom(const Quiver& g, const Quiver& h,
                                        const SearchDomains& domains,
                                        const SearchBudget& budget) {
  std::optional<QuiverMorphism> found;
  for_each_hom_maps(
      g, h,
      [&](std::span<const Index> vm, std::span<const Index> em) {
        found.emplace(g, h, std::vector<Index>(vm.begin(), vm.end()),
                      std::vector<Index>(em.begin(), em.end()));
        return false;
      },
      budget, &domains);
  return found;
}

}  // namespace

std::optional<QuiverMorphism> find_lift(const QuiverMorphism& psi, const QuiverMorphism& phi,
                                        const SearchBudget& budget) {
  if (!(psi.dom() == phi.dom())) {
    throw Error(ErrorKind::mismatch, "find_lift: psi and phi have different domains");
  }
  const Quiver& b = phi.cod();
  SearchDomains d{std::vector<std::vector<Index>>(b.vertex_count()),
                  std::vector<std::vector<Index>>(b.edge_count())};
  // phi(x) must go where psi sends x; disagreeing demands mean no lift.
  for (Index x = 0; x < phi.dom().vertex_count(); ++x) {
    auto& slot = d.vertices[phi.vertex_map()[x]];
    if (!slot.empty() && slot.front() != psi.vertex_map()[x]) return std::nullopt;
    slot = {psi.vertex_map()[x]};
  }
  for (Index x = 0; x < phi.dom().edge_count(); ++x) {
    auto& slot = d.edges[phi.edge_map()[x]];
    if (!slot.empty() && slot.front() != psi.edge_map()[x]) return std::nullopt;
    slot = {psi.edge_map()[x]};
  }
  return first_hom(b, psi.cod(), d, budget);
}

std::optional<QuiverMorphism> find_colift(const QuiverMorphism& psi, const QuiverMorphism& phi,
                                          const SearchBudget& budget) {
  if (!(psi.cod() == phi.cod())) {
    throw Error(ErrorKind::mismatch, "find_colift: psi and phi have different codomains");
  }
  const Quiver& p = psi.dom();
  const Quiver& g = phi.dom();
  const Quiver& h = phi.cod();
  std::vector<std::vector<Index>> vfibre(h.vertex_count()), efibre(h.edge_count());
  for (Index x = 0; x < g.vertex_count(); ++x) vfibre[phi.vertex_map()[x]].push_back(x);
  for (Index x = 0; x < g.edge_count(); ++x) efibre[phi.edge_map()[x]].push_back(x);
  SearchDomains d;
  for (Index x = 0; x < p.vertex_count(); ++x) {
    d.vertices.push_back(vfibre[psi.vertex_map()[x]]);
    if (d.vertices.back().empty()) return std::nullopt;
  }
  for (Index x = 0; x < p.edge_count(); ++x) {
    d.edges.push_back(efibre[psi.edge_map()[x]]);
    if (d.edges.back().empty()) return std::nullopt;
  }
  return first_hom(p, g, d, budget);
}

LiftingReport is_injective_wrt(const Quiver& j, const QuiverMorphism& phi,
                               const SearchBudget& budget) {
  LiftingReport report;
  for_each_hom(
      phi.dom(), j,
      [&](const QuiverMorphism& psi) {
        if (find_lift(psi, phi, budget)) return true;
        report.ok = false;
        report.counterexample = psi;
        return false;
      },
      budget);
  return report;
}

LiftingReport is_projective_wrt(const Quiver& p, const QuiverMorphism& phi,
                                const SearchBudget& budget) {
  LiftingReport report;
  for_each_hom(
      p, phi.cod(),
      [&](const QuiverMorphism& psi) {
        if (find_colift(psi, phi, budget)) return true;
        report.ok = false;
        report.counterexample = psi;
        return false;
      },
      budget);
  return report;
}

std::optional<QuiverMorphism> find_isomorphism(const Quiver& a, const Quiver& b,
                                               const SearchBudget& budget) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    return std::nullopt;
  }
  std::optional<QuiverMorphism> found;
  for_each_hom(
      a, b,
      [&](const QuiverMorphism& m) {
        if (!is_iso(m)) return true;
        found = m;
        return false;
      },
      budget);
  return found;
}

void for_each_quiver(std::size_t vmax, std::size_t emax,
                     const std::function<bool(const Quiver&)>& visit) {
  std::vector<Id> vnames, enames;
  for (std::size_t i = 1; i <= vmax; ++i) vnames.emplace_back("v" + std::to_string(i));
  for (std::size_t i = 1; i <= emax; ++i) enames.emplace_back("e" + std::to_string(i));

  for (std::size_t k = 0; k <= vmax; ++k) {
    for (std::size_t m = 0; m <= emax; ++m) {
      if (k == 0 && m > 0) continue;
      std::vector<Id> vs(vnames.begin(), vnames.begin() + static_cast<std::ptrdiff_t>(k));
      // digits[2i] = src(e_i+1), digits[2i+1] = tgt(e_i+1), base k.
      std::vector<std::size_t> digits(2 * m, 0);
      while (true) {
        std::vector<EdgeSpec> es;
        es.reserve(m);
        for (std::size_t i = 0; i < m; ++i) {
          es.push_back({enames[i], vnames[digits[2 * i]], vnames[digits[2 * i + 1]]});
        }
        if (!visit(Quiver(vs, std::move(es)))) return;
        bool wrapped = true;
        for (std::size_t pos = digits.size(); pos-- > 0;) {
          if (++digits[pos] < k) {
            wrapped = false;
            break;
          }
          digits[pos] = 0;
        }
        if (wrapped) break;
      }
    }
  }
}

std::vector<Quiver> enumerate_quivers(std::size_t vmax, std::size_t emax) {
  std::vector<Quiver> out;
  for_each_quiver(vmax, emax, [&](const Quiver& q) {
    out.push_back(q);
    return true;
  });
  return out;
}

}  // namespace quiverkit
