#include "bqalg/oracle.hpp"

#include <map>
#include <numeric>
#include <string>

#include "bqalg/error.hpp"

namespace bqalg {

  std::size_t Rep::total_dimension() const noexcept {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{0});
  }

  namespace {

    // Restriction of m to the subrepresentation whose basis at v is given by
    // the columns of bases[v - 1].
    Rep subrep(Algebra const& a, Rep const& m, std::vector<ZpMatrix> const& bases) {
      Quiver const& q = a.quiver();
      Rep           sub{m.field, {}, {}};
      for (auto const& b : bases) {
        sub.dims.push_back(b.cols());
      }
      for (ArrowIndex x = 0; x < q.arrow_count(); ++x) {
        Arrow const& arrow = q.arrow(x);
        ZpMatrix const image
            = multiply(m.field, m.actions[x], bases[arrow.source - 1]);
        sub.actions.push_back(solve(m.field, bases[arrow.target - 1], image));
      }
      return sub;
    }

    ZpMatrix apply_word(Rep const& m, Word const& w, Vertex base) {
      ZpMatrix acc = ZpMatrix::identity(m.dims[base - 1]);
      for (ArrowIndex x : w) {
        acc = multiply(m.field, m.actions[x], acc);
      }
      return acc;
    }

  }  // namespace

  Rep rep_of(Algebra const& a, ModuleSpec const& spec, PrimeField const& field) {
    Quiver const&     q     = a.quiver();
    BasisIndex const& basis = a.basis();
    std::size_t const n     = q.vertex_count();

    Rep m{field, std::vector<std::size_t>(n, 0), {}};
    std::map<std::size_t, std::size_t> position;  // basis id -> coordinate at its target
    auto const ids = a.module_basis(spec);
    for (std::size_t id : ids) {
      Vertex const t = basis[id].target();
      position[id]   = m.dims[t - 1]++;
    }
    for (ArrowIndex x = 0; x < q.arrow_count(); ++x) {
      Arrow const& arrow = q.arrow(x);
      m.actions.emplace_back(m.dims[arrow.target - 1], m.dims[arrow.source - 1]);
    }
    for (std::size_t id : ids) {
      Path const& p = basis[id];
      for (ArrowIndex x : q.out_arrows(p.target())) {
        auto const next = basis.extend(id, x);
        if (!next) {
          continue;
        }
        auto it = position.find(*next);
        if (it == position.end()) {
          continue;  // e_i . x with x killed
        }
        m.actions[x](it->second, position.at(id)) = 1;
      }
    }
    if (!satisfies_relations(a, m)) {
      throw InternalError("path representation violates a relation");
    }
    return m;
  }

  bool satisfies_relations(Algebra const& a, Rep const& m) {
    for (auto const& rho : a.relations().generators()) {
      if (!apply_word(m, rho.word(), rho.source()).is_zero()) {
        return false;
      }
    }
    return true;
  }

  RadicalTop radical_and_top(Algebra const& a, Rep const& m) {
    Quiver const&         q = a.quiver();
    std::size_t const     n = q.vertex_count();
    std::vector<ZpMatrix> bases;
    RadicalTop            result;
    for (Vertex v = 1; v <= n; ++v) {
      std::vector<ZpMatrix> images;
      for (ArrowIndex x : q.in_arrows(v)) {
        images.push_back(m.actions[x]);
      }
      bases.push_back(column_basis(m.field, hconcat(m.dims[v - 1], images)));
      result.top.push_back(m.dims[v - 1] - bases.back().cols());
    }
    result.radical = subrep(a, m, bases);
    return result;
  }

  Rep syzygy(Algebra const& a, Rep const& m) {
    Quiver const&     q     = a.quiver();
    BasisIndex const& basis = a.basis();
    PrimeField const& f     = m.field;
    std::size_t const n     = q.vertex_count();

    // Generators of m: a complement of the radical at each vertex, made of
    // standard basis vectors chosen left to right.
    struct Generator {
      Vertex                     vertex;
      std::vector<std::uint32_t> value;
    };
    std::vector<Generator> gens;
    for (Vertex v = 1; v <= n; ++v) {
      std::size_t const     d = m.dims[v - 1];
      std::vector<ZpMatrix> images;
      for (ArrowIndex x : q.in_arrows(v)) {
        images.push_back(m.actions[x]);
      }
      ZpMatrix const    span = column_basis(f, hconcat(d, images));
      // pivots past the span pick the greedy complement among e_1..e_d
      RowEchelon const e = row_echelon(f, hconcat(d, {span, ZpMatrix::identity(d)}));
      for (std::size_t c : e.pivots) {
        if (c >= span.cols()) {
          std::vector<std::uint32_t> unit(d, 0);
          unit[c - span.cols()] = 1;
          gens.push_back({v, std::move(unit)});
        }
      }
    }

    // Projective cover: coordinates at u are pairs (generator, basis path
    // from the generator's vertex to u).
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> coords(n);
    std::vector<std::map<std::pair<std::size_t, std::size_t>, std::size_t>> where(n);
    std::vector<std::vector<std::vector<std::uint32_t>>> images(n);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      std::map<std::size_t, std::vector<std::uint32_t>> value;
      for (std::size_t id : basis.from(gens[g].vertex)) {
        Path const& p = basis[id];
        std::vector<std::uint32_t> v;
        if (p.is_trivial()) {
          v = gens[g].value;
        } else {
          Word const prefix(p.word().begin(), p.word().end() - 1);
          auto const parent = basis.find(p.source(), prefix);
          ZpMatrix   col(m.dims[q.arrow(p.word().back()).source - 1], 1);
          col.set_column(0, value.at(*parent));
          v = multiply(f, m.actions[p.word().back()], col).column(0);
        }
        Vertex const t = p.target();
        where[t - 1][{g, id}] = coords[t - 1].size();
        coords[t - 1].emplace_back(g, id);
        images[t - 1].push_back(v);
        value.emplace(id, std::move(v));
      }
    }

    Rep cover{f, std::vector<std::size_t>(n, 0), {}};
    std::vector<ZpMatrix> kernels;
    for (Vertex u = 1; u <= n; ++u) {
      cover.dims[u - 1] = coords[u - 1].size();
      ZpMatrix phi(m.dims[u - 1], coords[u - 1].size());
      for (std::size_t c = 0; c < coords[u - 1].size(); ++c) {
        phi.set_column(c, images[u - 1][c]);
      }
      kernels.push_back(nullspace(f, phi));
    }
    for (ArrowIndex x = 0; x < q.arrow_count(); ++x) {
      Arrow const& arrow = q.arrow(x);
      ZpMatrix     act(cover.dims[arrow.target - 1], cover.dims[arrow.source - 1]);
      for (std::size_t c = 0; c < coords[arrow.source - 1].size(); ++c) {
        auto const [g, id] = coords[arrow.source - 1][c];
        auto const next    = basis.extend(id, x);
        if (next) {
          act(where[arrow.target - 1].at({g, *next}), c) = 1;
        }
      }
      cover.actions.push_back(std::move(act));
    }
    return subrep(a, cover, kernels);
  }

  Resolution minimal_resolution(Algebra const&    a,
                                ModuleSpec const& spec,
                                std::size_t       max_deg,
                                PrimeField const& field) {
    Resolution res;
    Rep        m = rep_of(a, spec, field);
    auto to_counts = [](std::vector<std::size_t> const& top) {
      return VertexCounts(top.begin(), top.end());
    };
    res.betti.push_back(to_counts(radical_and_top(a, m).top));
    for (std::size_t d = 1;; ++d) {
      m = syzygy(a, m);
      if (m.is_zero()) {
        res.complete = true;
        break;
      }
      if (d > max_deg) {
        res.complete = false;
        break;
      }
      res.betti.push_back(to_counts(radical_and_top(a, m).top));
    }
    return res;
  }

  std::size_t affordable_degree(Algebra const&    a,
                                ModuleSpec const& spec,
                                std::size_t       max_deg,
                                std::size_t       budget) {
    Resolution const r = resolve(a, spec, max_deg);
    auto dim_at = [&](std::size_t d) {
      std::size_t total = 0;
      if (d < r.betti.size()) {
        for (std::size_t v = 0; v < r.betti[d].size(); ++v) {
          total += static_cast<std::size_t>(r.betti[d][v]) * a.dim_projective(v + 1);
        }
      }
      return total;
    };
    std::size_t d = 0;
    while (d < max_deg && dim_at(d + 1) <= budget && dim_at(d + 2) <= budget) {
      ++d;
    }
    return d;
  }

  std::size_t hom_dim(Algebra const& a, Vertex j, Rep const& m) {
    if (!a.quiver().is_vertex(j)) {
      throw InvalidInput("vertex " + std::to_string(j) + " out of range");
    }
    return m.dims[j - 1];
  }

}  // namespace bqalg
