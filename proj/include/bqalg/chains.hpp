#ifndef BQALG_CHAINS_HPP_
#define BQALG_CHAINS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bqalg/ext_nat.hpp"
#include "bqalg/module_spec.hpp"
#include "bqalg/monomial.hpp"

// Minimal projective resolutions of truncated projectives over a monomial
// algebra, computed combinatorially.
//
// For a nonzero path g ending at v, the kernel of P(v) -> gA, w |-> gw, is a
// direct sum of the submodules generated by the minimal nonzero paths p with
// gp = 0. Those minimal paths are the successors of g. Each successor
// contributes one summand P(target(p)) to the next degree, and the
// recursion only ever looks at the latest generator. A resolution is
// therefore a walk in the "chain graph" on generator paths, and a cycle
// reachable from the first syzygy means infinite projective dimension.

namespace bqalg {

  struct Resolution {
    // betti[d][v - 1] = multiplicity of P(v) in degree d
    std::vector<VertexCounts> betti;
    // false when the computation stopped at a degree bound
    bool complete = true;

    // Index of the last nonempty degree.
    [[nodiscard]] std::size_t length() const noexcept {
      return betti.empty() ? 0 : betti.size() - 1;
    }

    bool operator==(Resolution const&) const = default;
  };

  // The successors of a nonzero path of length >= 1, in canonical order.
  // Throws InvalidInput for a trivial or zero path.
  [[nodiscard]] std::vector<Path> chain_successors(Algebra const& a, Path const& g);

  // Without max_deg, throws InfiniteResolutionError (naming a cycle of the
  // chain graph) when the projective dimension is infinite.
  [[nodiscard]] Resolution resolve(Algebra const&             a,
                                   ModuleSpec const&          spec,
                                   std::optional<std::size_t> max_deg = std::nullopt);

  [[nodiscard]] ExtNat pdim(Algebra const& a, ModuleSpec const& spec);

  // pdim S(i) for i = 1..n
  [[nodiscard]] std::vector<ExtNat> simple_pdims(Algebra const& a);

  [[nodiscard]] ExtNat gldim(Algebra const& a);

  // The alternating sum over degrees of the composition vectors of the
  // projective terms equals the module's composition vector. Only defined
  // for complete resolutions; returns false for truncated ones.
  [[nodiscard]] bool euler_characteristic_holds(Algebra const&    a,
                                                ModuleSpec const& spec,
                                                Resolution const& res);

  // Closed form of the resolution of S(i) for the local-maximum ideal:
  //   degree 1: P(j)^{r(i,j)} for j != i,
  //   degree 2: P(k)^{r(i,j) r(j,k)} for j > i, k < j,
  //   nothing above.
  struct Prop1Mismatch {
    Vertex       simple;
    std::size_t  degree;
    Vertex       vertex;
    std::int64_t expected;
    std::int64_t got;
  };

  struct Prop1Report {
    std::vector<Prop1Mismatch> mismatches;

    [[nodiscard]] bool ok() const noexcept {
      return mismatches.empty();
    }
  };

  // Throws InvalidInput unless a's relations are build_I(a.quiver()).
  [[nodiscard]] Prop1Report verify_prop1_formula(Algebra const& a);

}  // namespace bqalg

#endif  // BQALG_CHAINS_HPP_
