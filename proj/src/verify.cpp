#include "quiverkit/verify.hpp"

#include <chrono>
#include <random>
#include <set>

#include "quiverkit/injective.hpp"
#include "quiverkit/limits.hpp"
#include "quiverkit/projective.hpp"
#include "quiverkit/reflections.hpp"

namespace quiverkit::verify {

namespace {

class Timer {
 public:
  explicit Timer(SuiteResult& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  Timer(const Timer&) = delete;
  Timer& operator=(const Timer&) = delete;

 private:
  SuiteResult& r_;
  std::chrono::steady_clock::time_point start_;
};

std::uint64_t power(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  while (exp--) out *= base;
  return out;
}

// Flattened (vertex map, edge map), usable as a set key.
std::vector<Index> key(const QuiverMorphism& m) {
  std::vector<Index> k(m.vertex_map().begin(), m.vertex_map().end());
  k.push_back(static_cast<Index>(-1));
  k.insert(k.end(), m.edge_map().begin(), m.edge_map().end());
  return k;
}

std::vector<Index> key2(const QuiverMorphism& a, const QuiverMorphism& b) {
  auto k = key(a);
  k.push_back(static_cast<Index>(-2));
  auto kb = key(b);
  k.insert(k.end(), kb.begin(), kb.end());
  return k;
}

std::string describe(const QuiverMorphism& m) {
  return "dom " + to_string(m.dom()) + " cod " + to_string(m.cod());
}

}  // namespace

SuiteResult envelope_suite(std::size_t vmax, std::size_t emax) {
  SuiteResult r{"envelope"};
  Timer t(r);
  for_each_quiver(vmax, emax, [&](const Quiver& d) {
    ++r.cases;
    Envelope env = envelope(d);
    const QuiverMorphism& j = env.embedding;
    if (!(j.dom() == d) || !(j.cod() == env.quiver)) {
      r.fail("embedding has wrong ends for " + to_string(d));
    } else if (!validate_morphism(j)) {
      r.fail("embedding is not a homomorphism for " + to_string(d));
    } else if (!is_loaded(env.quiver) || !is_mono_injective(env.quiver)) {
      r.fail("envelope not mono-injective for " + to_string(d));
    } else if (!is_mono(j)) {
      r.fail("embedding not monic for " + to_string(d));
    } else if (!is_mono_essential(j)) {
      r.fail("embedding not mono-essential for " + to_string(d));
    }
    return true;
  });
  return r;
}

SuiteResult cover_suite(std::size_t vmax, std::size_t emax) {
  SuiteResult r{"cover"};
  Timer t(r);
  for_each_quiver(vmax, emax, [&](const Quiver& g) {
    ++r.cases;
    Cover c = cover(g);
    const QuiverMorphism& p = c.map;
    if (!(p.cod() == g) || !(p.dom() == c.quiver) || !validate_morphism(p)) {
      r.fail("covering map malformed for " + to_string(g));
    } else if (!is_epi_projective(c.quiver)) {
      r.fail("explosion not epi-projective for " + to_string(g));
    } else if (!is_epi(p) || p.dom().edge_count() != g.edge_count()) {
      r.fail("covering map not epic and edge-bijective for " + to_string(g));
    } else if (!is_epi_coessential(p)) {
      r.fail("covering map not epi-coessential for " + to_string(g));
    }
    return true;
  });
  return r;
}

SuiteResult projective_shape_suite(std::size_t vmax, std::size_t emax) {
  SuiteResult r{"projective-shape"};
  Timer t(r);
  for_each_quiver(vmax, emax, [&](const Quiver& p) {
    ++r.cases;
    if (is_epi_projective(p) != check_disjoint_arrows(p).ok) {
      r.fail("covering-map test and arrow-shape test disagree on " + to_string(p));
    }
    return true;
  });
  return r;
}

SuiteResult essential_oracle_suite(std::size_t vmax, std::size_t emax,
                                   const SearchBudget& budget) {
  SuiteResult r{"essential-oracle"};
  Timer t(r);
  const auto sources = enumerate_quivers(vmax, emax);
  for (const Quiver& c : sources) {
    std::vector<QuiverMorphism> proper_quotients;
    for (const QuiverCongruence& cong : enumerate_congruences(c)) {
      if (!cong.is_discrete()) proper_quotients.push_back(quotient(cong).map);
    }
    for (const Quiver& d : sources) {
      if (d.vertex_count() > c.vertex_count() || d.edge_count() > c.edge_count()) continue;
      for_each_hom(
          d, c,
          [&](const QuiverMorphism& phi) {
            if (!is_mono(phi)) return true;
            ++r.cases;
            // Non-monic quotient maps q that still make q ∘ phi monic refute
            // essentiality.
            bool oracle = true;
            for (const QuiverMorphism& q : proper_quotients) {
              if (is_mono(compose(q, phi))) {
                oracle = false;
                break;
              }
            }
            if (is_mono_essential(phi).ok != oracle) {
              r.fail("disagreement on mono " + describe(phi) + " (oracle says " +
                     (oracle ? "essential" : "not essential") + ")");
            }
            return true;
          },
          budget);
    }
  }
  return r;
}

SuiteResult coessential_oracle_suite(std::size_t vmax, std::size_t emax,
                                     const SearchBudget& budget) {
  SuiteResult r{"coessential-oracle"};
  Timer t(r);
  const auto quivers = enumerate_quivers(vmax, emax);
  for (const Quiver& g : quivers) {
    std::vector<QuiverMorphism> proper_inclusions;
    for (const Subquiver& n : enumerate_subquivers(g)) {
      if (!n.is_whole()) proper_inclusions.push_back(n.inclusion());
    }
    for (const Quiver& h : quivers) {
      if (h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count()) continue;
      for_each_hom(
          g, h,
          [&](const QuiverMorphism& phi) {
            if (!is_epi(phi)) return true;
            ++r.cases;
            bool oracle = true;
            for (const QuiverMorphism& inc : proper_inclusions) {
              if (is_epi(compose(phi, inc))) {
                oracle = false;
                break;
              }
            }
            if (is_epi_coessential(phi).ok != oracle) {
              r.fail("disagreement on epi " + describe(phi) + " (oracle says " +
                     (oracle ? "coessential" : "not coessential") + ")");
            }
            return true;
          },
          budget);
    }
  }
  return r;
}

SuiteResult injective_lifting_suite(std::size_t j_vmax, std::size_t j_emax, std::size_t vmax,
                                    std::size_t emax, const SearchBudget& budget) {
  SuiteResult r{"injective-lifting"};
  Timer t(r);
  const auto small = enumerate_quivers(vmax, emax);
  std::vector<QuiverMorphism> monos;
  for (const Quiver& d : small) {
    for (const Quiver& c : small) {
      for_each_hom(
          d, c,
          [&](const QuiverMorphism& phi) {
            if (is_mono(phi)) monos.push_back(phi);
            return true;
          },
          budget);
    }
  }
  for_each_quiver(j_vmax, j_emax, [&](const Quiver& j) {
    ++r.cases;
    bool oracle = true;
    for (const QuiverMorphism& phi : monos) {
      if (!is_injective_wrt(j, phi, budget)) {
        oracle = false;
        break;
      }
    }
    if (is_mono_injective(j) != oracle) {
      r.fail("disagreement on " + to_string(j) + " (lifting oracle says " +
             (oracle ? "injective" : "not injective") + ")");
    }
    return true;
  });
  return r;
}

SuiteResult projective_lifting_suite(std::size_t vmax, std::size_t emax,
                                     const SearchBudget& budget) {
  SuiteResult r{"projective-lifting"};
  Timer t(r);
  const auto small = enumerate_quivers(vmax, emax);
  std::vector<QuiverMorphism> epis;
  for (const Quiver& g : small) {
    for (const Quiver& h : small) {
      for_each_hom(
          g, h,
          [&](const QuiverMorphism& phi) {
            if (is_epi(phi)) epis.push_back(phi);
            return true;
          },
          budget);
    }
  }
  for (const Quiver& p : small) {
    ++r.cases;
    bool oracle = true;
    for (const QuiverMorphism& phi : epis) {
      if (!is_projective_wrt(p, phi, budget)) {
        oracle = false;
        break;
      }
    }
    if (is_epi_projective(p) != oracle) {
      r.fail("disagreement on " + to_string(p) + " (lifting oracle says " +
             (oracle ? "projective" : "not projective") + ")");
    }
  }
  return r;
}

SuiteResult adjunction_counting_suite(std::size_t samples, std::uint64_t seed) {
  SuiteResult r{"adjunction-counting"};
  Timer t(r);
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  for (std::size_t i = 0; i < samples; ++i) {
    ++r.cases;
    std::vector<Id> s;
    for (std::size_t k = uniform(0, 3); k > 0; --k) s.emplace_back("s" + std::to_string(k));
    const std::size_t nv = uniform(0, 3);
    const std::size_t ne = nv == 0 ? 0 : uniform(0, 3);
    std::vector<Id> vs;
    for (std::size_t k = 1; k <= nv; ++k) vs.emplace_back("v" + std::to_string(k));
    std::vector<EdgeSpec> es;
    for (std::size_t k = 1; k <= ne; ++k) {
      es.push_back({Id("e" + std::to_string(k)), vs[uniform(0, nv - 1)], vs[uniform(0, nv - 1)]});
    }
    Quiver g(vs, es);
    const struct {
      const char* law;
      std::uint64_t got;
      std::uint64_t want;
    } laws[] = {
        {"|Hom(I(S),G)| = |V|^|S|", count_homs(build_I(s), g), power(nv, s.size())},
        {"|Hom(M(S),G)| = |E|^|S|", count_homs(build_M(s), g), power(ne, s.size())},
        {"|Hom(G,K(S))| = |S|^|V|", count_homs(g, build_K(s)), power(s.size(), nv)},
        {"|Hom(G,B(S))| = |S|^|E|", count_homs(g, build_B(s)), power(s.size(), ne)},
    };
    for (const auto& law : laws) {
      if (law.got != law.want) {
        r.fail(std::string(law.law) + " fails for |S|=" + std::to_string(s.size()) + ", G " +
               to_string(g) + ": got " + std::to_string(law.got) + ", want " +
               std::to_string(law.want));
      }
    }
  }
  return r;
}

namespace {

void check_product(SuiteResult& r, const Quiver& g, const Quiver& h,
                   const std::vector<Quiver>& tests, const SearchBudget& budget) {
  Product p = product(g, h);
  for (const Quiver& x : tests) {
    ++r.cases;
    // u |-> (pi1 u, pi2 u) must be a bijection Hom(X, G×H) -> Hom(X,G) × Hom(X,H).
    const auto to_g = count_homs(x, g, budget);
    const auto to_h = count_homs(x, h, budget);
    std::set<std::vector<Index>> legs;
    std::uint64_t n = 0;
    for_each_hom(
        x, p.quiver,
        [&](const QuiverMorphism& u) {
          ++n;
          QuiverMorphism f = compose(p.first, u);
          QuiverMorphism k = compose(p.second, u);
          legs.insert(key2(f, k));
          if (!(pair_into(p, f, k) == u)) r.fail("pair_into disagrees with search");
          return true;
        },
        budget);
    if (n != to_g * to_h || legs.size() != n) {
      r.fail("product of " + to_string(g) + " and " + to_string(h) + " tested by " + to_string(x));
    }
  }
}

void check_coproduct(SuiteResult& r, const Quiver& g, const Quiver& h,
                     const std::vector<Quiver>& tests, const SearchBudget& budget) {
  Coproduct c = coproduct(g, h);
  for (const Quiver& y : tests) {
    ++r.cases;
    const auto from_g = count_homs(g, y, budget);
    const auto from_h = count_homs(h, y, budget);
    std::set<std::vector<Index>> legs;
    std::uint64_t n = 0;
    for_each_hom(
        c.quiver, y,
        [&](const QuiverMorphism& u) {
          ++n;
          QuiverMorphism f = compose(u, c.first);
          QuiverMorphism k = compose(u, c.second);
          legs.insert(key2(f, k));
          if (!(copair(c, f, k) == u)) r.fail("copair disagrees with search");
          return true;
        },
        budget);
    if (n != from_g * from_h || legs.size() != n) {
      r.fail("coproduct of " + to_string(g) + " and " + to_string(h) + " tested by " +
             to_string(y));
    }
  }
}

void check_equalizer(SuiteResult& r, const QuiverMorphism& f, const QuiverMorphism& g,
                     const std::vector<Quiver>& tests, const SearchBudget& budget) {
  Equalizer eq = equalizer(f, g);
  if (!(compose(f, eq.inclusion) == compose(g, eq.inclusion)) || !is_mono(eq.inclusion)) {
    r.fail("equalizer inclusion does not equalize for " + describe(f));
    return;
  }
  const Quiver n = eq.inclusion.dom();
  for (const Quiver& x : tests) {
    ++r.cases;
    std::set<std::vector<Index>> equalizing;
    for_each_hom(
        x, f.dom(),
        [&](const QuiverMorphism& h) {
          if (compose(f, h) == compose(g, h)) equalizing.insert(key(h));
          return true;
        },
        budget);
    std::set<std::vector<Index>> images;
    std::uint64_t n_count = 0;
    for_each_hom(
        x, n,
        [&](const QuiverMorphism& u) {
          ++n_count;
          images.insert(key(compose(eq.inclusion, u)));
          return true;
        },
        budget);
    if (images != equalizing || images.size() != n_count) {
      r.fail("equalizer of " + describe(f) + " tested by " + to_string(x));
    }
  }
}

void check_coequalizer(SuiteResult& r, const QuiverMorphism& f, const QuiverMorphism& g,
                       const std::vector<Quiver>& tests, const SearchBudget& budget) {
  Quotient co = coequalizer(f, g);
  if (!(compose(co.map, f) == compose(co.map, g)) || !is_epi(co.map)) {
    r.fail("coequalizer map does not coequalize for " + describe(f));
    return;
  }
  for (const Quiver& y : tests) {
    ++r.cases;
    std::set<std::vector<Index>> coequalizing;
    for_each_hom(
        f.cod(), y,
        [&](const QuiverMorphism& h) {
          if (compose(h, f) == compose(h, g)) coequalizing.insert(key(h));
          return true;
        },
        budget);
    std::set<std::vector<Index>> images;
    std::uint64_t n = 0;
    for_each_hom(
        co.quiver, y,
        [&](const QuiverMorphism& u) {
          ++n;
          images.insert(key(compose(u, co.map)));
          return true;
        },
        budget);
    if (images != coequalizing || images.size() != n) {
      r.fail("coequalizer of " + describe(f) + " tested by " + to_string(y));
    }
  }
}

}  // namespace

SuiteResult universal_property_suite(std::size_t vmax, std::size_t emax,
                                     const SearchBudget& budget) {
  SuiteResult r{"universal-properties"};
  Timer t(r);
  const auto quivers = enumerate_quivers(vmax, emax);
  for (const Quiver& g : quivers) {
    for (const Quiver& h : quivers) {
      check_product(r, g, h, quivers, budget);
      check_coproduct(r, g, h, quivers, budget);
      const auto homs = enumerate_homs(g, h, budget);
      for (const QuiverMorphism& f : homs) {
        for (const QuiverMorphism& k : homs) {
          check_equalizer(r, f, k, quivers, budget);
          check_coequalizer(r, f, k, quivers, budget);
        }
      }
    }
  }
  return r;
}

std::vector<SuiteResult> verify_theorems(std::size_t vmax, std::size_t emax,
                                         const SearchBudget& budget) {
  std::vector<SuiteResult> out;
  out.push_back(envelope_suite(vmax, emax));
  out.push_back(cover_suite(vmax, emax));
  out.push_back(projective_shape_suite(vmax, emax));
  out.push_back(essential_oracle_suite(vmax, emax, budget));
  out.push_back(coessential_oracle_suite(vmax, emax, budget));
  out.push_back(injective_lifting_suite(2, 4, 2, 1, budget));
  out.push_back(projective_lifting_suite(2, 1, budget));
  out.push_back(adjunction_counting_suite(20, 20261018));
  out.push_back(universal_property_suite(std::min<std::size_t>(vmax, 2),
                                         std::min<std::size_t>(emax, 2), budget));
  return out;
}

}  // namespace quiverkit::verify
