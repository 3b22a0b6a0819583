#include "bqalg/constructions.hpp"

#include <algorithm>

#include "bqalg/chains.hpp"
#include "bqalg/error.hpp"

namespace bqalg {

  namespace {

    void require_loopless(Quiver const& q) {
      for (auto const& a : q.arrows()) {
        if (a.is_loop()) {
          throw InvalidInput("arrow \"" + a.id + "\" is a loop");
        }
      }
    }

    void require_linear(Quiver const& q, std::size_t m) {
      if (m > q.vertex_count()) {
        throw InvalidInput("m = " + std::to_string(m) + " exceeds the vertex count");
      }
      for (Vertex i = 1; i < m; ++i) {
        if (q.r(i, i + 1) == 0) {
          throw InvalidInput("no arrow " + std::to_string(i) + " -> " + std::to_string(i + 1)
                             + "; relabel so that A_m sits on 1..m");
        }
      }
    }

    // Every path i -> i+1 -> i+2 through consecutive vertices.
    void add_consecutive(Quiver const& q, std::size_t last_i, std::vector<Path>& out) {
      for (Vertex i = 1; i <= last_i; ++i) {
        for (ArrowIndex a : q.arrows_between(i, i + 1)) {
          for (ArrowIndex b : q.arrows_between(i + 1, i + 2)) {
            out.push_back(q.path({a, b}));
          }
        }
      }
    }

    // Kahn's algorithm; the caller guarantees the quiver is acyclic.
    Relabeling topological_relabeling(Quiver const& q) {
      std::size_t const        n = q.vertex_count();
      std::vector<std::size_t> indegree(n + 1, 0);
      for (auto const& a : q.arrows()) {
        ++indegree[a.target];
      }
      std::vector<Vertex> order;
      for (Vertex v = 1; v <= n; ++v) {
        if (indegree[v] == 0) {
          order.push_back(v);
        }
      }
      for (std::size_t k = 0; k < order.size(); ++k) {
        for (ArrowIndex x : q.out_arrows(order[k])) {
          if (--indegree[q.arrow(x).target] == 0) {
            order.push_back(q.arrow(x).target);
          }
        }
      }
      if (order.size() != n) {
        throw InternalError("topological order requested for a quiver with a cycle");
      }
      return relabeling_with_prefix(n, order);
    }

  }  // namespace

  RelationSet build_I(Quiver const& q) {
    require_loopless(q);
    std::vector<Path> gens;
    for (Vertex v = 1; v <= q.vertex_count(); ++v) {
      for (ArrowIndex x : q.in_arrows(v)) {
        if (q.arrow(x).source >= v) {
          continue;
        }
        for (ArrowIndex y : q.out_arrows(v)) {
          if (q.arrow(y).target < v) {
            gens.push_back(q.path({x, y}));
          }
        }
      }
    }
    return reduce(std::move(gens));
  }

  RelationSet build_Iprime(Quiver const& q, std::size_t m) {
    if (m < 2) {
      throw InvalidInput("build_Iprime needs m >= 2");
    }
    require_linear(q, m);
    std::vector<Path> gens = build_I(q).generators();
    add_consecutive(q, m - 2, gens);
    return reduce(std::move(gens));
  }

  RelationSet build_Idoubleprime(Quiver const& q, std::size_t m) {
    if (m < 4) {
      throw InvalidInput("build_Idoubleprime needs m >= 4");
    }
    require_linear(q, m);
    RelationSet const base = build_I(q);
    std::vector<Path> gens = base.generators();
    add_consecutive(q, m - 4, gens);
    for (ArrowIndex a : q.arrows_between(m - 3, m - 2)) {
      for (ArrowIndex b : q.arrows_between(m - 2, m - 1)) {
        for (ArrowIndex c : q.arrows_between(m - 1, m)) {
          Path p = q.path({a, b, c});
          for (auto const& g : gens) {
            if (is_infix(g.word(), p.word())) {
              throw InternalError("length-3 relation contains a shorter relation");
            }
          }
          gens.push_back(std::move(p));
        }
      }
    }
    return reduce(std::move(gens));
  }

  CorollaryDecision decide_gldim2_exists(Quiver const& q) {
    for (auto const& a : q.arrows()) {
      if (a.is_loop()) {
        return {false, std::nullopt};
      }
    }
    for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
      Vertex const middle = q.arrow(a).target;
      auto const&  out    = q.out_arrows(middle);
      if (out.empty()) {
        continue;
      }
      std::vector<Vertex> order;
      for (Vertex v = 1; v <= q.vertex_count(); ++v) {
        if (v != middle) {
          order.push_back(v);
        }
      }
      order.push_back(middle);
      return {true,
              CorollaryWitness{q.path({a, out.front()}),
                               relabeling_with_prefix(q.vertex_count(), order)}};
    }
    return {false, std::nullopt};
  }

  std::string to_string(ConstructionKind k) {
    switch (k) {
      case ConstructionKind::semisimple:
        return "semisimple";
      case ConstructionKind::hereditary:
        return "hereditary";
      case ConstructionKind::gldim_le2:
        return "gldim_le2";
      case ConstructionKind::prop_a:
        return "prop_a";
      case ConstructionKind::prop_x1:
        return "prop_x1";
      case ConstructionKind::prop_x2:
        return "prop_x2";
    }
    return "unknown";
  }

  RelationSet pull_back(Quiver const& q, RelationSet const& rels, Relabeling const& sigma) {
    Relabeling const  back = sigma.inverse();
    std::vector<Path> gens;
    for (auto const& g : rels.generators()) {
      gens.push_back(q.path(back(g.source()), g.word()));
    }
    return reduce(std::move(gens));
  }

  RelationSet replay_certificate(Quiver const& q, Certificate const& c) {
    Quiver const relabelled = relabel(q, c.relabeling);
    switch (c.kind) {
      case ConstructionKind::semisimple:
      case ConstructionKind::hereditary:
        return RelationSet();
      case ConstructionKind::gldim_le2:
        return pull_back(q, build_I(relabelled), c.relabeling);
      case ConstructionKind::prop_a:
      case ConstructionKind::prop_x1:
        return pull_back(q, build_Iprime(relabelled, c.m.value()), c.relabeling);
      case ConstructionKind::prop_x2:
        return pull_back(q, build_Idoubleprime(relabelled, c.m.value()), c.relabeling);
    }
    throw InternalError("unknown construction kind");
  }

  namespace {

    Certificate certify(Quiver const&              q,
                        ConstructionKind           kind,
                        std::optional<std::size_t> m,
                        std::optional<Embedding>   embedding,
                        Relabeling                 sigma,
                        std::size_t                claimed) {
      Certificate c{kind, m, std::move(embedding), std::move(sigma), {}, claimed, 0, {}};
      c.ideal = replay_certificate(q, c);
      Algebra const a(q, c.ideal);
      if (!a.is_admissible()) {
        throw InternalError(to_string(kind) + " construction produced a non-admissible ideal");
      }
      c.pdims          = simple_pdims(a);
      c.verified_gldim = 0;
      for (auto const& d : c.pdims) {
        c.verified_gldim = std::max(c.verified_gldim, d);
      }
      if (c.verified_gldim != c.claimed_gldim) {
        throw InternalError(to_string(kind) + " construction claims gldim "
                            + c.claimed_gldim.to_string() + " but has "
                            + c.verified_gldim.to_string());
      }
      return c;
    }

  }  // namespace

  PlanResult achieve_gldim(Quiver const& q, std::size_t target, std::size_t budget) {
    StructureFlags const flags = structure_predicates(q);
    std::size_t const    n     = q.vertex_count();
    PlanResult           result;

    if (flags.has_loop) {
      result.diagnostic = "the quiver has a loop, so every admissible ideal has infinite global "
                          "dimension";
      return result;
    }
    if (target == 0) {
      if (q.arrow_count() == 0) {
        result.certificate = certify(
            q, ConstructionKind::semisimple, std::nullopt, std::nullopt, Relabeling::identity(n), 0);
      } else {
        result.diagnostic = "global dimension 0 needs a quiver without arrows";
      }
      return result;
    }
    if (target == 1) {
      if (q.arrow_count() != 0 && !flags.has_oriented_cycle) {
        result.certificate = certify(
            q, ConstructionKind::hereditary, std::nullopt, std::nullopt, topological_relabeling(q), 1);
      } else {
        result.diagnostic = q.arrow_count() == 0
                                ? "global dimension 1 needs an arrow"
                                : "global dimension 1 needs a quiver without oriented cycles";
      }
      return result;
    }
    if (target == 2) {
      auto decision = decide_gldim2_exists(q);
      if (decision.exists) {
        result.certificate = certify(q,
                                     ConstructionKind::gldim_le2,
                                     std::nullopt,
                                     std::nullopt,
                                     decision.witness->relabeling,
                                     2);
      } else {
        result.diagnostic = "global dimension 2 needs a pair of composable arrows";
      }
      return result;
    }

    // (a) A_{target+1} that cannot be closed into X_{target+1}
    std::optional<Embedding> linear;
    for_each_A_embedding(
        q,
        target + 1,
        [&](Embedding const& e) {
          if (!is_extendable(q, e)) {
            linear = e;
            return false;
          }
          return true;
        },
        budget);
    if (linear) {
      Relabeling sigma   = relabeling_from_embedding(q, *linear);
      result.certificate = certify(
          q, ConstructionKind::prop_a, target + 1, linear, std::move(sigma), target);
      return result;
    }
    // (b) X_target
    if (auto x = find_X_embedding(q, target, budget)) {
      Relabeling sigma   = relabeling_from_embedding(q, *x);
      result.certificate = certify(q, ConstructionKind::prop_x1, target, x, std::move(sigma), target);
      return result;
    }
    // (c) X_{target+1}
    if (auto x = find_X_embedding(q, target + 1, budget)) {
      Relabeling sigma   = relabeling_from_embedding(q, *x);
      result.certificate = certify(
          q, ConstructionKind::prop_x2, target + 1, x, std::move(sigma), target);
      return result;
    }
    std::string const t  = std::to_string(target);
    std::string const t1 = std::to_string(target + 1);
    result.diagnostic = "not achievable by the available constructions: no non-extendable A_" + t1
                        + ", no X_" + t + ", no X_" + t1;
    return result;
  }

}  // namespace bqalg
