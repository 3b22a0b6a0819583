#ifndef BQALG_ORACLE_HPP_
#define BQALG_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "bqalg/chains.hpp"
#include "bqalg/module_spec.hpp"
#include "bqalg/monomial.hpp"
#include "bqalg/zp_matrix.hpp"

// Minimal projective resolutions by explicit linear algebra over a prime
// field. Shares nothing with the chain-graph engine beyond the path basis,
// and is used to cross-check it.

namespace bqalg {

  // A representation of the bound quiver: a vector space per vertex and a
  // matrix per arrow (rows = dimension at the target, columns = dimension at
  // the source).
  struct Rep {
    PrimeField                field;
    std::vector<std::size_t>  dims;     // dims[v - 1]
    std::vector<ZpMatrix>     actions;  // actions[a]

    [[nodiscard]] std::size_t total_dimension() const noexcept;
    [[nodiscard]] bool        is_zero() const noexcept {
      return total_dimension() == 0;
    }
  };

  // M(i, S) on its path basis; arrow a sends a basis path p to pa, or to 0
  // when pa is zero in the algebra.
  [[nodiscard]] Rep rep_of(Algebra const&    a,
                           ModuleSpec const& spec,
                           PrimeField const& field = PrimeField());

  // Does every relation act as the zero matrix?
  [[nodiscard]] bool satisfies_relations(Algebra const& a, Rep const& m);

  struct RadicalTop {
    Rep                      radical;
    std::vector<std::size_t> top;  // top[v - 1] = dim of the top at v
  };

  // The radical is the sum of the images of all arrows.
  [[nodiscard]] RadicalTop radical_and_top(Algebra const& a, Rep const& m);

  // The kernel of a projective cover of m.
  [[nodiscard]] Rep syzygy(Algebra const& a, Rep const& m);

  [[nodiscard]] Resolution minimal_resolution(Algebra const&    a,
                                              ModuleSpec const& spec,
                                              std::size_t       max_deg,
                                              PrimeField const& field = PrimeField());

  // Largest d <= max_deg such that every projective term up to degree d + 1
  // has total dimension at most `budget`, read off the chain engine's Betti
  // data. Dense elimination is cubic in that dimension, and Betti numbers can
  // grow exponentially once the quiver has cycles.
  inline constexpr std::size_t default_oracle_budget = 400;
  [[nodiscard]] std::size_t affordable_degree(Algebra const&    a,
                                              ModuleSpec const& spec,
                                              std::size_t       max_deg,
                                              std::size_t       budget = default_oracle_budget);

  // dim Hom(P(j), m) = dim of m at j.
  [[nodiscard]] std::size_t hom_dim(Algebra const& a, Vertex j, Rep const& m);

}  // namespace bqalg

#endif  // BQALG_ORACLE_HPP_
