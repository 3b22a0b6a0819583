#ifndef BQALG_CONSTRUCTIONS_HPP_
#define BQALG_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bqalg/ext_nat.hpp"
#include "bqalg/monomial.hpp"
#include "bqalg/quiver.hpp"
#include "bqalg/subquiver.hpp"

namespace bqalg {

  // All length-2 paths x -> v -> y whose middle vertex v is larger than both
  // x and y, one per pair of arrows. The quotient has global dimension <= 2.
  // Throws InvalidInput if q has a loop.
  [[nodiscard]] RelationSet build_I(Quiver const& q);

  // build_I plus every path i -> i+1 -> i+2 for 1 <= i <= m - 2. Needs the
  // linear quiver A_m on the vertices 1..m (relabel first). Throws
  // InvalidInput for m < 2 or a missing arrow i -> i+1.
  [[nodiscard]] RelationSet build_Iprime(Quiver const& q, std::size_t m);

  // build_I, plus i -> i+1 -> i+2 for 1 <= i <= m - 4, plus every path
  // (m-3) -> (m-2) -> (m-1) -> m. Needs A_m on 1..m and m >= 4.
  [[nodiscard]] RelationSet build_Idoubleprime(Quiver const& q, std::size_t m);

  struct CorollaryWitness {
    Path       path;        // the first composable arrow pair
    Relabeling relabeling;  // sends the middle vertex of `path` to n
  };

  // An admissible ideal with global dimension exactly 2 exists iff q has no
  // loop and some pair of composable arrows.
  struct CorollaryDecision {
    bool                            exists;
    std::optional<CorollaryWitness> witness;
  };

  [[nodiscard]] CorollaryDecision decide_gldim2_exists(Quiver const& q);

  enum class ConstructionKind {
    semisimple,  // no arrows, zero ideal
    hereditary,  // acyclic, zero ideal
    gldim_le2,   // build_I after moving a 2-path's middle vertex to n
    prop_a,      // build_Iprime on a non-extendable A_m: gldim m - 1
    prop_x1,     // build_Iprime on X_m: gldim m
    prop_x2      // build_Idoubleprime on X_m: gldim m - 1
  };

  [[nodiscard]] std::string to_string(ConstructionKind k);

  struct Certificate {
    ConstructionKind         kind;
    std::optional<std::size_t> m;
    std::optional<Embedding> embedding;   // in original labels
    Relabeling               relabeling;  // original -> construction labels
    RelationSet              ideal;       // in original labels
    ExtNat                   claimed_gldim;
    ExtNat                   verified_gldim;
    std::vector<ExtNat>      pdims;       // pdim S(i), original labels
  };

  struct PlanResult {
    std::optional<Certificate> certificate;
    std::string                diagnostic;
  };

  // Realises the requested global dimension with one of the constructions,
  // verifies it with the chain engine and returns a certificate. Throws
  // InternalError if a construction does not achieve its claimed value.
  [[nodiscard]] PlanResult achieve_gldim(Quiver const& q,
                                         std::size_t   target,
                                         std::size_t   budget = default_search_budget);

  // Rebuilds a certificate's ideal from its kind, m and relabeling.
  [[nodiscard]] RelationSet replay_certificate(Quiver const& q, Certificate const& c);

  // Maps relations of relabel(q, sigma) back to q.
  [[nodiscard]] RelationSet pull_back(Quiver const& q, RelationSet const& rels, Relabeling const& sigma);

}  // namespace bqalg

#endif  // BQALG_CONSTRUCTIONS_HPP_
