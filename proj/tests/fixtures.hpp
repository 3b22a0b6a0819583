#ifndef BQALG_TESTS_FIXTURES_HPP_
#define BQALG_TESTS_FIXTURES_HPP_

// Quivers used across the suites, a small random generator, and brute-force
// reference computations that share no code with the library beyond the
// Quiver container itself.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bqalg/chains.hpp"
#include "bqalg/constructions.hpp"
#include "bqalg/monomial.hpp"
#include "bqalg/oracle.hpp"
#include "bqalg/quiver.hpp"

namespace fixtures {

  using namespace bqalg;

  // ---------------------------------------------------------------- quivers

  // 1 -a-> 2 -b-> 3 -c-> 1, 2 -d-> 1, 3 -e-> 2, 1 -f-> 3.
  inline Quiver example_quiver() {
    Quiver q(3);
    q.add_arrow("a", 1, 2);
    q.add_arrow("b", 2, 3);
    q.add_arrow("c", 3, 1);
    q.add_arrow("d", 2, 1);
    q.add_arrow("e", 3, 2);
    q.add_arrow("f", 1, 3);
    return q;
  }

  inline std::vector<std::vector<std::string>> example_I_words() {
    return {{"a", "d"}, {"f", "c"}, {"f", "e"}, {"b", "c"}, {"b", "e"}};
  }

  inline std::string arrow_name(Vertex i, Vertex j, std::size_t t, std::size_t mult) {
    std::string id = "x" + std::to_string(i) + "_" + std::to_string(j);
    if (mult > 1) {
      id += "_" + std::to_string(t);
    }
    return id;
  }

  // r(i,j) = mult for every i != j, arrows added in (i, j, t) order.
  inline Quiver complete_quiver(std::size_t n, std::size_t mult = 1) {
    Quiver q(n);
    for (Vertex i = 1; i <= n; ++i) {
      for (Vertex j = 1; j <= n; ++j) {
        if (i != j) {
          for (std::size_t t = 1; t <= mult; ++t) {
            q.add_arrow(arrow_name(i, j, t, mult), i, j);
          }
        }
      }
    }
    return q;
  }

  // The complete quiver with the arrows from `last` into 1..last-1 removed.
  inline Quiver complete_without_returns(std::size_t n, Vertex last) {
    Quiver q(n);
    for (Vertex i = 1; i <= n; ++i) {
      for (Vertex j = 1; j <= n; ++j) {
        if (i != j && !(i == last && j < last)) {
          q.add_arrow(arrow_name(i, j, 1, 1), i, j);
        }
      }
    }
    return q;
  }

  // 1 -> 2 -> ... -> n with arrows a1 .. a(n-1).
  inline Quiver linear_quiver(std::size_t n) {
    Quiver q(n);
    for (Vertex i = 1; i < n; ++i) {
      q.add_arrow("a" + std::to_string(i), i, i + 1);
    }
    return q;
  }

  // Every length-2 path of the linear quiver.
  inline RelationSet consecutive_relations(Quiver const& q) {
    std::vector<Path> rels;
    for (ArrowIndex a = 0; a + 1 < q.arrow_count(); ++a) {
      rels.push_back(q.path({a, a + 1}));
    }
    return reduce(rels);
  }

  inline Quiver loop_quiver() {
    Quiver q(1);
    q.add_arrow("a", 1, 1);
    return q;
  }

  inline Quiver cycle_quiver(std::size_t n) {
    Quiver q(n);
    for (Vertex i = 1; i <= n; ++i) {
      q.add_arrow("c" + std::to_string(i), i, i % n + 1);
    }
    return q;
  }

  inline RelationSet relations_of(Quiver const& q, std::vector<std::vector<std::string>> const& ws) {
    std::vector<Path> rels;
    for (auto const& w : ws) {
      rels.push_back(q.path_from_ids(w));
    }
    return reduce(rels);
  }

  // -------------------------------------------------------------- generator

  struct RandomQuiverOptions {
    std::size_t min_n         = 1;
    std::size_t max_n         = 6;
    std::size_t max_mult      = 2;
    double      arrow_density = 0.4;
    bool        loops         = false;
  };

  inline Quiver random_quiver(std::mt19937& rng, RandomQuiverOptions const& o = {}) {
    std::uniform_int_distribution<std::size_t> size(o.min_n, o.max_n);
    std::uniform_int_distribution<std::size_t> mult(1, o.max_mult);
    std::bernoulli_distribution                present(o.arrow_density);
    std::size_t const                          n = size(rng);
    Quiver                                     q(n);
    std::size_t                                counter = 0;
    for (Vertex i = 1; i <= n; ++i) {
      for (Vertex j = 1; j <= n; ++j) {
        if ((i == j && !o.loops) || !present(rng)) {
          continue;
        }
        std::size_t const r = mult(rng);
        for (std::size_t t = 0; t < r; ++t) {
          q.add_arrow("r" + std::to_string(counter++), i, j);
        }
      }
    }
    return q;
  }

  // Random length-2 and length-3 relations, kept only if the result is
  // admissible. Used for the generic equivalence suites.
  inline std::optional<RelationSet> random_admissible_relations(std::mt19937& rng,
                                                                Quiver const& q,
                                                                double        keep = 0.6) {
    std::bernoulli_distribution pick(keep);
    std::vector<Path>           rels;
    for (ArrowIndex x = 0; x < q.arrow_count(); ++x) {
      for (ArrowIndex y : q.out_arrows(q.arrow(x).target)) {
        if (pick(rng)) {
          rels.push_back(q.path({x, y}));
        } else {
          for (ArrowIndex z : q.out_arrows(q.arrow(y).target)) {
            if (pick(rng)) {
              rels.push_back(q.path({x, y, z}));
            }
          }
        }
      }
    }
    RelationSet r = reduce(rels);
    Algebra     probe(q, r);
    if (!probe.is_admissible() || probe.dimension() > 200) {
      return std::nullopt;
    }
    return r;
  }

  // ------------------------------------------------- brute-force references

  struct NaivePath {
    Vertex     source;
    Word       word;

    bool operator==(NaivePath const&) const = default;
    bool operator<(NaivePath const& that) const {
      return std::tie(source, word) < std::tie(that.source, that.word);
    }
  };

  inline bool naive_contains(Word const& hay, Word const& needle) {
    return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
  }

  inline bool naive_is_zero(Word const& w, std::vector<Word> const& rels) {
    return std::any_of(rels.begin(), rels.end(), [&](Word const& r) {
      return naive_contains(w, r);
    });
  }

  // Every nonzero path (including trivial ones) found by extending arrow by
  // arrow and testing each candidate against every relation. Gives up
  // (returns nullopt) past `max_length`, which signals a non-admissible ideal.
  inline std::optional<std::vector<NaivePath>>
  naive_nonzero_paths(Quiver const& q, std::vector<Word> const& rels, std::size_t max_length = 40) {
    std::vector<NaivePath> out;
    std::vector<NaivePath> frontier;
    for (Vertex v = 1; v <= q.vertex_count(); ++v) {
      frontier.push_back({v, {}});
    }
    for (std::size_t len = 0; !frontier.empty(); ++len) {
      if (len > max_length) {
        return std::nullopt;
      }
      std::vector<NaivePath> next;
      for (auto const& p : frontier) {
        out.push_back(p);
        Vertex const end = p.word.empty() ? p.source : q.arrow(p.word.back()).target;
        for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
          if (q.arrow(a).source != end) {
            continue;
          }
          Word w = p.word;
          w.push_back(a);
          if (!naive_is_zero(w, rels)) {
            next.push_back({p.source, std::move(w)});
          }
        }
      }
      frontier = std::move(next);
    }
    return out;
  }

  inline std::vector<Word> words_of(RelationSet const& r) {
    std::vector<Word> ws;
    for (auto const& g : r.generators()) {
      ws.push_back(g.word());
    }
    return ws;
  }

  inline Vertex naive_target(Quiver const& q, NaivePath const& p) {
    return p.word.empty() ? p.source : q.arrow(p.word.back()).target;
  }

  // Composition vector of M(i, killed) by counting paths from i whose first
  // arrow is not killed.
  inline std::vector<std::int64_t> naive_composition(Quiver const&                  q,
                                                     std::vector<NaivePath> const&  paths,
                                                     Vertex                         i,
                                                     std::vector<ArrowIndex> const& killed) {
    std::vector<std::int64_t> cv(q.vertex_count(), 0);
    for (auto const& p : paths) {
      if (p.source != i) {
        continue;
      }
      if (!p.word.empty()
          && std::find(killed.begin(), killed.end(), p.word.front()) != killed.end()) {
        continue;
      }
      ++cv[naive_target(q, p) - 1];
    }
    return cv;
  }

  inline std::map<Vertex, std::int64_t> as_map(std::vector<std::int64_t> const& v) {
    std::map<Vertex, std::int64_t> m;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] != 0) {
        m[k + 1] = v[k];
      }
    }
    return m;
  }

  // Number of simple directed paths on m distinct vertices, counted over all
  // ordered vertex tuples and weighted by arrow multiplicities.
  inline std::size_t naive_embedding_count(Quiver const& q, std::size_t m) {
    std::size_t const   n = q.vertex_count();
    std::vector<Vertex> perm(n);
    for (Vertex v = 1; v <= n; ++v) {
      perm[v - 1] = v;
    }
    // Enumerate all n! orders and count distinct m-prefixes by dividing by
    // (n - m)!, which is exact because every prefix appears that many times.
    std::size_t total = 0;
    std::size_t rest  = 1;
    for (std::size_t k = 2; k <= n - m; ++k) {
      rest *= k;
    }
    do {
      std::size_t ways = 1;
      for (std::size_t k = 0; k + 1 < m; ++k) {
        ways *= q.r(perm[k], perm[k + 1]);
      }
      total += ways;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / rest;
  }

  // Does some simple path on m vertices have an arrow from its end back into
  // its vertex set? Checked over all vertex orders.
  inline bool naive_has_X(Quiver const& q, std::size_t m) {
    std::size_t const   n = q.vertex_count();
    std::vector<Vertex> perm(n);
    for (Vertex v = 1; v <= n; ++v) {
      perm[v - 1] = v;
    }
    do {
      bool path = true;
      for (std::size_t k = 0; k + 1 < m; ++k) {
        path = path && q.r(perm[k], perm[k + 1]) > 0;
      }
      if (!path) {
        continue;
      }
      for (std::size_t k = 0; k + 1 < m; ++k) {
        if (q.r(perm[m - 1], perm[k]) > 0) {
          return true;
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }

  // All length-2 paths x then y whose middle vertex exceeds both ends.
  inline std::vector<Word> naive_local_max_pairs(Quiver const& q) {
    std::vector<Word> out;
    for (ArrowIndex x = 0; x < q.arrow_count(); ++x) {
      for (ArrowIndex y = 0; y < q.arrow_count(); ++y) {
        Arrow const& ax = q.arrow(x);
        Arrow const& ay = q.arrow(y);
        if (ax.target == ay.source && ax.target > ax.source && ay.source > ay.target) {
          out.push_back({x, y});
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // ------------------------------------------------------ euler bookkeeping

  struct EulerTally {
    std::size_t checked = 0;
    std::size_t failed  = 0;
  };

  inline EulerTally& euler_tally() {
    static EulerTally tally;
    return tally;
  }

  // The alternating sum of the composition vectors of the projective terms,
  // computed from brute-force path counts, against the module's own vector.
  inline bool independent_euler(Algebra const& a, ModuleSpec const& spec, Resolution const& res) {
    Quiver const& q     = a.quiver();
    auto const    paths = naive_nonzero_paths(q, words_of(a.relations()));
    if (!paths) {
      return false;
    }
    std::vector<std::int64_t> sum(q.vertex_count(), 0);
    for (std::size_t d = 0; d < res.betti.size(); ++d) {
      std::int64_t const sign = d % 2 == 0 ? 1 : -1;
      for (Vertex v = 1; v <= q.vertex_count(); ++v) {
        auto const proj = naive_composition(q, *paths, v, {});
        for (std::size_t k = 0; k < sum.size(); ++k) {
          sum[k] += sign * res.betti[d][v - 1] * proj[k];
        }
      }
    }
    return sum == naive_composition(q, *paths, spec.vertex(), spec.killed());
  }

  // Every complete resolution produced in the suites goes through here, so
  // the Euler identity is asserted on all of them (library check and the
  // independent one above).
  inline bool record_euler(Algebra const& a, ModuleSpec const& spec, Resolution const& res) {
    if (!res.complete) {
      return true;
    }
    bool const ok = euler_characteristic_holds(a, spec, res) && independent_euler(a, spec, res);
    ++euler_tally().checked;
    if (!ok) {
      ++euler_tally().failed;
    }
    return ok;
  }

  inline std::vector<ModuleSpec> s_delta_gamma(Quiver const& q) {
    std::vector<ModuleSpec> mods;
    for (Vertex i = 1; i <= q.vertex_count(); ++i) {
      mods.push_back(ModuleSpec::simple(q, i));
      mods.push_back(ModuleSpec::standard(q, i));
      if (i < q.vertex_count()) {
        mods.push_back(ModuleSpec::gamma(q, i));
      }
    }
    return mods;
  }

  inline std::vector<std::map<Vertex, std::int64_t>> betti_maps(Resolution const& r) {
    std::vector<std::map<Vertex, std::int64_t>> out;
    for (auto const& d : r.betti) {
      out.push_back(as_map(d));
    }
    return out;
  }

  inline std::size_t comparison_degree(bqalg::Algebra const&    a,
                                       bqalg::ModuleSpec const& m,
                                       std::size_t              max_deg) {
    return bqalg::affordable_degree(a, m, max_deg);
  }

}  // namespace fixtures

#endif  // BQALG_TESTS_FIXTURES_HPP_
