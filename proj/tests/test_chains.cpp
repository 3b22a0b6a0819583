#include "doctest.h"

#include <numeric>

#include "bqalg/chains.hpp"
#include "bqalg/constructions.hpp"
#include "bqalg/error.hpp"
#include "bqalg/subquiver.hpp"
#include "fixtures.hpp"

using namespace bqalg;
using namespace fixtures;

using Betti = std::vector<std::map<Vertex, std::int64_t>>;

namespace {

  Resolution checked(Algebra const& a, ModuleSpec const& spec, std::optional<std::size_t> max_deg = {}) {
    Resolution r = resolve(a, spec, max_deg);
    CHECK(record_euler(a, spec, r));
    return r;
  }

  std::vector<Word> words(std::vector<Path> const& ps) {
    std::vector<Word> out;
    for (auto const& p : ps) {
      out.push_back(p.word());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace

TEST_SUITE("chains") {
  TEST_CASE("ExtNat ordering") {
    CHECK(ExtNat(3) < ExtNat::infinity());
    CHECK(ExtNat(2) < ExtNat(3));
    CHECK(ExtNat::infinity() == ExtNat::infinity() + 4);
    CHECK(ExtNat(2) + 1 == ExtNat(3));
    CHECK(ExtNat::infinity().to_string() == "inf");
  }

  TEST_CASE("chain successors") {
    Quiver const  k4 = complete_quiver(4);
    Algebra const A(k4, build_I(k4));
    auto const    x12 = k4.path_from_ids({"x1_2"});
    auto const    x21 = k4.path_from_ids({"x2_1"});
    CHECK(words(chain_successors(A, x12)) == std::vector<Word>{x21.word()});
    CHECK(chain_successors(A, x21).empty());
    CHECK_THROWS_AS((void)chain_successors(A, k4.trivial_path(1)), InvalidInput);
    CHECK_THROWS_AS((void)chain_successors(A, k4.path_from_ids({"x1_2", "x2_1"})), InvalidInput);

    Quiver const  a4 = linear_quiver(4);
    Algebra const L(a4, consecutive_relations(a4));
    auto          step = chain_successors(L, a4.path_from_ids({"a1"}));
    CHECK(words(step) == std::vector<Word>{{1}});
    step = chain_successors(L, step.front());
    CHECK(words(step) == std::vector<Word>{{2}});
    CHECK(chain_successors(L, step.front()).empty());
    CHECK(pdim(L, ModuleSpec::simple(a4, 1)) == ExtNat(3));
  }

  TEST_CASE("successors are minimal and complete the relation") {
    std::mt19937 rng(41);
    int          tested = 0;
    for (int round = 0; round < 120 && tested < 40; ++round) {
      Quiver const q    = random_quiver(rng, {.max_n = 4});
      auto const   rels = random_admissible_relations(rng, q);
      if (!rels) {
        continue;
      }
      ++tested;
      Algebra const A(q, *rels);
      for (auto const& g : A.basis().paths()) {
        if (g.is_trivial()) {
          continue;
        }
        auto const succ = chain_successors(A, g);
        for (auto const& p : succ) {
          CHECK(p.source() == g.target());
          CHECK_FALSE(A.is_zero_path(p));
          Word gp = g.word();
          gp.insert(gp.end(), p.word().begin(), p.word().end());
          CHECK(A.is_zero_word(g.source(), gp));
          // Dropping the last arrow of p leaves g p' nonzero.
          Word shorter(gp.begin(), gp.end() - 1);
          CHECK_FALSE(A.is_zero_word(g.source(), shorter));
          for (auto const& other : succ) {
            if (!(other == p)) {
              CHECK_FALSE(is_infix(other.word(), p.word()));
            }
          }
        }
      }
    }
  }

  TEST_CASE("resolution of S(1) for the local-maximum ideal, four vertices") {
    Quiver const     k4 = complete_quiver(4);
    Algebra const    A(k4, build_I(k4));
    Resolution const r = checked(A, ModuleSpec::simple(k4, 1));
    CHECK(r.complete);
    CHECK(betti_maps(r) == Betti{{{1, 1}}, {{2, 1}, {3, 1}, {4, 1}}, {{1, 3}, {2, 2}, {3, 1}}});
    for (Vertex i = 1; i <= 4; ++i) {
      Resolution const p = checked(A, ModuleSpec::projective(k4, i));
      CHECK(betti_maps(p) == Betti{{{i, 1}}});
      CHECK(pdim(A, ModuleSpec::projective(k4, i)) == ExtNat(0));
    }
  }

  TEST_CASE("one loop bounded by a^3") {
    Quiver const  q = loop_quiver();
    Algebra const A(q, relations_of(q, {{"a", "a", "a"}}));
    CHECK(pdim(A, ModuleSpec::simple(q, 1)).is_infinite());
    CHECK(pdim(A, ModuleSpec::projective(q, 1)) == ExtNat(0));
    CHECK(gldim(A).is_infinite());
    CHECK_THROWS_AS((void)resolve(A, ModuleSpec::simple(q, 1)), InfiniteResolutionError);
    Resolution const r = checked(A, ModuleSpec::simple(q, 1), 5);
    CHECK_FALSE(r.complete);
    CHECK(r.betti.size() == 6);
  }

  TEST_CASE("golden example") {
    Quiver const  ex = example_quiver();
    Algebra const I(ex, relations_of(ex, example_I_words()));
    CHECK(gldim(I) == ExtNat(2));
    auto          w = example_I_words();
    w.push_back({"a", "b"});
    Algebra const Ip(ex, relations_of(ex, w));
    CHECK(gldim(Ip) == ExtNat(3));
    for (auto const& m : s_delta_gamma(ex)) {
      (void)checked(I, m);
      (void)checked(Ip, m);
    }
  }

  TEST_CASE("linear quivers with consecutive relations") {
    for (std::size_t n = 2; n <= 8; ++n) {
      Quiver const  q = linear_quiver(n);
      Algebra const A(q, consecutive_relations(q));
      auto const    pd = simple_pdims(A);
      for (Vertex i = 1; i <= n; ++i) {
        CHECK(pd[i - 1] == ExtNat(n - i));
        (void)checked(A, ModuleSpec::simple(q, i));
      }
      CHECK(gldim(A) == ExtNat(n - 1));
    }
  }

  TEST_CASE("Gamma(m-1) for a non-extendable A_4") {
    Quiver const  q = complete_without_returns(5, 4);
    Algebra const A(q, build_Iprime(q, 4));
    CHECK(pdim(A, ModuleSpec::gamma(q, 3)) == ExtNat(1));
    CHECK(gldim(A) == ExtNat(3));
  }

  TEST_CASE("closed-form resolution of the local-maximum ideal") {
    CHECK(verify_prop1_formula(Algebra(complete_quiver(4), build_I(complete_quiver(4)))).ok());
    CHECK(verify_prop1_formula(Algebra(Quiver(3), RelationSet())).ok());

    std::mt19937 rng(43);
    for (int round = 0; round < 50; ++round) {
      Quiver const  q = random_quiver(rng, {.max_n = 6, .max_mult = 2, .arrow_density = 0.5});
      Algebra const A(q, build_I(q));
      auto const    rep = verify_prop1_formula(A);
      CHECK(rep.ok());
      CHECK(gldim(A) <= ExtNat(2));
      for (Vertex i = 1; i <= q.vertex_count(); ++i) {
        (void)checked(A, ModuleSpec::simple(q, i));
      }
    }

    Quiver const ex = example_quiver();
    CHECK_THROWS_AS((void)verify_prop1_formula(Algebra(ex, RelationSet())), InvalidInput);
  }

  TEST_CASE("gldim is invariant under relabeling") {
    std::mt19937 rng(47);
    int          tested = 0;
    for (int round = 0; round < 150 && tested < 40; ++round) {
      Quiver const q    = random_quiver(rng, {.max_n = 5, .loops = round % 4 == 0});
      auto const   rels = random_admissible_relations(rng, q);
      if (!rels) {
        continue;
      }
      ++tested;
      std::vector<Vertex> image(q.vertex_count());
      std::iota(image.begin(), image.end(), Vertex{1});
      std::shuffle(image.begin(), image.end(), rng);
      Relabeling const sigma(image);
      Quiver const     p = relabel(q, sigma);
      Algebra const    A(q, *rels);
      Algebra const    B(p, reduce(relabel_paths(p, rels->generators(), sigma)));
      CHECK(gldim(A) == gldim(B));
      auto const pa = simple_pdims(A);
      auto const pb = simple_pdims(B);
      for (Vertex v = 1; v <= q.vertex_count(); ++v) {
        CHECK(pa[v - 1] == pb[sigma(v) - 1]);
      }
    }
  }

  TEST_CASE("loops force infinite global dimension") {
    std::mt19937 rng(53);
    int          tested = 0;
    for (int round = 0; round < 300 && tested < 30; ++round) {
      Quiver const q = random_quiver(rng, {.max_n = 4, .arrow_density = 0.45, .loops = true});
      if (!structure_predicates(q).has_loop) {
        continue;
      }
      auto const rels = random_admissible_relations(rng, q);
      if (!rels) {
        continue;
      }
      ++tested;
      CHECK(gldim(Algebra(q, *rels)).is_infinite());
    }
    CHECK(tested >= 10);
  }

  TEST_CASE("pdim of M(i,S) is the maximum over single killed arrows") {
    std::mt19937 rng(59);
    int          tested = 0;
    for (int round = 0; round < 150 && tested < 40; ++round) {
      Quiver const q    = random_quiver(rng, {.max_n = 4, .loops = round % 3 == 0});
      auto const   rels = random_admissible_relations(rng, q);
      if (!rels) {
        continue;
      }
      ++tested;
      Algebra const A(q, *rels);
      for (Vertex i = 1; i <= q.vertex_count(); ++i) {
        auto const& outs = q.out_arrows(i);
        // every subset of out-arrows, up to 4 arrows
        std::size_t const k = std::min<std::size_t>(outs.size(), 4);
        for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
          std::vector<ArrowIndex> killed;
          ExtNat                  bound = 0;
          for (std::size_t b = 0; b < k; ++b) {
            if (mask >> b & 1) {
              killed.push_back(outs[b]);
              bound = std::max(bound, pdim(A, ModuleSpec(q, i, {outs[b]})));
            }
          }
          ModuleSpec const spec(q, i, killed);
          ExtNat const     d = pdim(A, spec);
          CHECK(d == bound);
          if (d.is_finite()) {
            Resolution const r = checked(A, spec);
            CHECK(r.length() == d.value());
          }
        }
      }
    }
  }

  TEST_CASE("truncation flags") {
    Quiver const  a5 = linear_quiver(5);
    Algebra const A(a5, consecutive_relations(a5));
    Resolution const full = checked(A, ModuleSpec::simple(a5, 1));
    CHECK(full.complete);
    CHECK(full.length() == 4);
    Resolution const cut = checked(A, ModuleSpec::simple(a5, 1), 2);
    CHECK_FALSE(cut.complete);
    CHECK(cut.betti.size() == 3);
    Resolution const exact = checked(A, ModuleSpec::simple(a5, 1), 4);
    CHECK(exact.complete);
  }
}
