#include "bqalg/sqh.hpp"

#include <algorithm>
#include <sstream>

#include "bqalg/chains.hpp"
#include "bqalg/error.hpp"
#include "bqalg/oracle.hpp"

namespace bqalg {

  SqhReport check_strongly_qh(Algebra const& a, PrimeField const& field) {
    Quiver const& q = a.quiver();
    SqhReport     report;
    for (Vertex i = 1; i <= q.vertex_count(); ++i) {
      SqhVertexReport v{i, true, true, true};
      for (ArrowIndex x : down_arrows(q, i)) {
        for (auto const& g : a.relations().generators()) {
          if (g.word().front() == x) {
            v.r_projective_ok = false;
          }
        }
      }
      ModuleSpec const delta = ModuleSpec::standard(q, i);
      VertexCounts     rad   = a.composition_vector(delta);
      rad[i - 1] -= 1;
      for (Vertex j = 1; j <= i; ++j) {
        if (rad[j - 1] != 0) {
          v.delta_factors_ok = false;
        }
      }
      Rep const rep = rep_of(a, delta, field);
      for (Vertex j = 1; j <= i; ++j) {
        if (hom_dim(a, j, rep) != (j == i ? 1u : 0u)) {
          v.hom_delta_ok = false;
        }
      }
      report.verdict       = report.verdict && v.r_projective_ok && v.delta_factors_ok;
      report.hom_delta_all = report.hom_delta_all && v.hom_delta_ok;
      report.vertices.push_back(v);
    }
    return report;
  }

  bool ringel_bound_check(Algebra const& a) {
    return gldim(a) <= ExtNat(a.quiver().vertex_count());
  }

  bool SequenceReport::ok() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](IdentityCheck const& c) {
      return c.ok;
    });
  }

  namespace {

    VertexCounts& operator+=(VertexCounts& x, VertexCounts const& y) {
      for (std::size_t k = 0; k < x.size(); ++k) {
        x[k] += y[k];
      }
      return x;
    }

    VertexCounts scaled(VertexCounts x, std::int64_t s) {
      for (auto& c : x) {
        c *= s;
      }
      return x;
    }

    VertexCounts minus(VertexCounts x, VertexCounts const& y) {
      return x += scaled(y, -1);
    }

    std::string show(VertexCounts const& x) {
      std::ostringstream os;
      os << '{';
      bool first = true;
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] != 0) {
          os << (first ? "" : ",") << k + 1 << ':' << x[k];
          first = false;
        }
      }
      os << '}';
      return os.str();
    }

    IdentityCheck compare(std::string name, VertexCounts const& lhs, VertexCounts const& rhs) {
      return {std::move(name), lhs == rhs, show(lhs) + " vs " + show(rhs)};
    }

  }  // namespace

  SequenceReport verify_sequence_identities(Algebra const& a, std::size_t m) {
    Quiver const&     q = a.quiver();
    std::size_t const n = q.vertex_count();
    if (m < 2 || m > n) {
      throw InvalidInput("sequence identities need 2 <= m <= n");
    }
    SequenceReport report;

    auto cv_P = [&](Vertex i) {
      return a.composition_vector(ModuleSpec::projective(q, i));
    };
    auto cv_S = [&](Vertex i) {
      return a.composition_vector(ModuleSpec::simple(q, i));
    };
    auto cv_Delta = [&](Vertex i) {
      return a.composition_vector(ModuleSpec::standard(q, i));
    };
    auto cv_Gamma = [&](Vertex i) {
      return a.composition_vector(ModuleSpec::gamma(q, i));
    };
    auto cv_R = [&](Vertex i) {
      return a.submodule_composition(i, down_arrows(q, i));
    };
    auto r = [&](Vertex i, Vertex j) {
      return static_cast<std::int64_t>(q.r(i, j));
    };

    for (Vertex i = 1; i + 2 <= m; ++i) {
      std::string const tag = "(i=" + std::to_string(i) + ")";

      VertexCounts rhs = cv_S(i);
      rhs += cv_R(i);
      rhs += scaled(cv_Gamma(i + 1), r(i, i + 1));
      for (Vertex j = i + 2; j <= n; ++j) {
        rhs += scaled(cv_Delta(j), r(i, j));
      }
      report.checks.push_back(compare("simple sequence " + tag, cv_P(i), rhs));

      VertexCounts rhs2 = cv_Gamma(i);
      rhs2 += cv_R(i);
      rhs2 += scaled(cv_Gamma(i + 1), r(i, i + 1));
      report.checks.push_back(compare("gamma sequence " + tag, cv_P(i), rhs2));
    }

    {
      VertexCounts lhs = minus(cv_P(m - 1), cv_Gamma(m - 1));
      VertexCounts rhs = cv_R(m - 1);
      rhs += scaled(minus(cv_P(m), cv_R(m)), r(m - 1, m));
      report.checks.push_back(compare("gamma(m-1) resolution", lhs, rhs));
    }

    for (Vertex j = 1; j <= n; ++j) {
      ExtNat const d = pdim(a, ModuleSpec::standard(q, j));
      report.checks.push_back({"pdim Delta(" + std::to_string(j) + ") <= 1",
                               d <= ExtNat(1),
                               "pdim = " + d.to_string()});
    }

    for (Vertex i = 1; i + 2 <= m; ++i) {
      ExtNat const gi  = pdim(a, ModuleSpec::gamma(q, i));
      ExtNat const gi1 = pdim(a, ModuleSpec::gamma(q, i + 1));
      ExtNat const si  = pdim(a, ModuleSpec::simple(q, i));
      std::string const tag = "(i=" + std::to_string(i) + ")";
      report.checks.push_back({"pdim Gamma(i) = pdim Gamma(i+1) + 1 " + tag,
                               gi == gi1 + 1,
                               gi.to_string() + " vs " + gi1.to_string() + " + 1"});
      report.checks.push_back({"pdim S(i) = pdim Gamma(i+1) + 1 " + tag,
                               si == gi1 + 1,
                               si.to_string() + " vs " + gi1.to_string() + " + 1"});
    }
    return report;
  }

}  // namespace bqalg
