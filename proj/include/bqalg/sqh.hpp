#ifndef BQALG_SQH_HPP_
#define BQALG_SQH_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "bqalg/monomial.hpp"
#include "bqalg/zp_matrix.hpp"

namespace bqalg {

  struct SqhVertexReport {
    Vertex vertex;
    // R(i) is a direct sum of P(j), j < i: no relation starts with an arrow
    // i -> j, j < i.
    bool r_projective_ok;
    // every composition factor of rad Delta(i) is some S(j) with j > i
    bool delta_factors_ok;
    // dim Hom(P(j), Delta(i)) = delta_ij for all j <= i
    bool hom_delta_ok;
  };

  struct SqhReport {
    std::vector<SqhVertexReport> vertices;
    // conjunction of r_projective_ok and delta_factors_ok
    bool verdict = true;
    bool hom_delta_all = true;
  };

  // Strongly quasi-hereditary with respect to the order 1 < 2 < ... < n.
  [[nodiscard]] SqhReport check_strongly_qh(Algebra const& a, PrimeField const& field = PrimeField());

  // gldim <= n
  [[nodiscard]] bool ringel_bound_check(Algebra const& a);

  struct IdentityCheck {
    std::string name;
    bool        ok;
    std::string detail;
  };

  struct SequenceReport {
    std::vector<IdentityCheck> checks;

    [[nodiscard]] bool ok() const noexcept;
  };

  // Composition-level and pdim checks of the short exact sequences used for
  // the ideal build_Iprime(q, m):
  //   P(i) vs S(i), R(i), Gamma(i+1), Delta(j) for j >= i+2   (i <= m-2)
  //   P(i) vs Gamma(i), R(i), Gamma(i+1)                      (i <= m-2)
  //   P(m-1) - Gamma(m-1) vs R(m-1) and P(m) - R(m)
  //   pdim Delta(j) <= 1 for every j
  //   pdim Gamma(i) = pdim Gamma(i+1) + 1 = pdim S(i)         (i <= m-2)
  [[nodiscard]] SequenceReport verify_sequence_identities(Algebra const& a, std::size_t m);

}  // namespace bqalg

#endif  // BQALG_SQH_HPP_
