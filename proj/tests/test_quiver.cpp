#include "doctest.h"

#include <numeric>
#include <set>

#include "bqalg/error.hpp"
#include "bqalg/quiver.hpp"
#include "bqalg/subquiver.hpp"
#include "fixtures.hpp"

using namespace bqalg;
using namespace fixtures;

TEST_SUITE("quiver") {
  TEST_CASE("arrows and multiplicities") {
    Quiver const q = example_quiver();
    CHECK(q.vertex_count() == 3);
    CHECK(q.arrow_count() == 6);
    CHECK(q.r(1, 2) == 1);
    CHECK(q.r(2, 2) == 0);
    CHECK(q.arrow(q.arrow_index("e")).source == 3);
    CHECK_FALSE(q.find_arrow("z").has_value());

    Quiver bad(2);
    bad.add_arrow("a", 1, 2);
    CHECK_THROWS_AS(bad.add_arrow("a", 2, 1), InvalidInput);
    CHECK_THROWS_AS(bad.add_arrow("b", 1, 3), InvalidInput);
    CHECK_THROWS_AS(bad.add_arrow("b", 0, 1), InvalidInput);
  }

  TEST_CASE("r agrees with the arrow list on random quivers") {
    std::mt19937 rng(11);
    for (int round = 0; round < 40; ++round) {
      Quiver const q = random_quiver(rng, {.max_mult = 3, .loops = true});
      for (Vertex i = 1; i <= q.vertex_count(); ++i) {
        for (Vertex j = 1; j <= q.vertex_count(); ++j) {
          std::size_t count = 0;
          for (auto const& a : q.arrows()) {
            count += a.source == i && a.target == j;
          }
          CHECK(q.r(i, j) == count);
          CHECK(q.arrows_between(i, j).size() == count);
        }
      }
    }
  }

  TEST_CASE("compose") {
    Quiver const q  = example_quiver();
    Path const   a  = q.path({q.arrow_index("a")});
    Path const   b  = q.path({q.arrow_index("b")});
    Path const   ab = compose(a, b);
    CHECK(ab.word() == Word{q.arrow_index("a"), q.arrow_index("b")});
    CHECK(ab.source() == 1);
    CHECK(ab.target() == 3);
    CHECK(ab.length() == 2);
    CHECK(q.composition_string(ab.word()) == "ba");
    CHECK(compose(q.trivial_path(1), a) == a);
    CHECK(compose(a, q.trivial_path(2)) == a);
    CHECK_THROWS_AS(compose(b, b), CompositionError);
    CHECK_THROWS_AS(compose(q.trivial_path(2), a), CompositionError);
  }

  TEST_CASE("paths reject non-composable words") {
    Quiver const q = example_quiver();
    CHECK_THROWS((void)q.path({q.arrow_index("a"), q.arrow_index("a")}));
    CHECK(q.trivial_path(2).is_trivial());
    CHECK(q.trivial_path(2).source() == 2);
    CHECK(q.trivial_path(2).target() == 2);
  }

  TEST_CASE("structure predicates") {
    auto flags = [](Quiver const& q) {
      auto const f = structure_predicates(q);
      return std::tuple(f.has_loop, f.has_oriented_cycle, f.has_length2_path);
    };
    CHECK(flags(loop_quiver()) == std::tuple(true, true, true));
    CHECK(flags(linear_quiver(2)) == std::tuple(false, false, false));
    CHECK(flags(example_quiver()) == std::tuple(false, true, true));
    CHECK(flags(linear_quiver(3)) == std::tuple(false, false, true));
    CHECK(flags(Quiver(4)) == std::tuple(false, false, false));

    auto const cycle = find_oriented_cycle(cycle_quiver(4));
    REQUIRE(cycle.has_value());
    CHECK(cycle->size() == 4);
    CHECK_FALSE(find_oriented_cycle(linear_quiver(5)).has_value());
  }

  TEST_CASE("A_m embeddings match the brute-force count") {
    Quiver const k4 = complete_quiver(4);
    CHECK(find_A_embeddings(k4, 2).size() == 12);
    CHECK(find_A_embeddings(k4, 4).size() == 24);
    CHECK(find_A_embeddings(Quiver(3), 2).empty());
    CHECK(find_A_embeddings(k4, 5).empty());
    CHECK_THROWS_AS((void)find_A_embeddings(k4, 0), InvalidInput);

    CHECK(naive_embedding_count(k4, 2) == 12);
    CHECK(naive_embedding_count(k4, 4) == 24);

    std::mt19937 rng(5);
    for (int round = 0; round < 40; ++round) {
      Quiver const q = random_quiver(rng, {.max_n = 5, .arrow_density = 0.5});
      for (std::size_t m = 1; m <= q.vertex_count(); ++m) {
        auto const embs = find_A_embeddings(q, m);
        CHECK(embs.size() == naive_embedding_count(q, m));
        std::set<std::pair<std::vector<Vertex>, Word>> seen;
        for (auto const& e : embs) {
          CHECK(is_valid_embedding(q, e));
          seen.insert({e.vertices, e.arrows});
        }
        CHECK(seen.size() == embs.size());
        CHECK(std::is_sorted(embs.begin(), embs.end(), [](Embedding const& x, Embedding const& y) {
          return std::tie(x.vertices, x.arrows) < std::tie(y.vertices, y.arrows);
        }));
        CHECK(embs == find_A_embeddings(q, m));
      }
    }
  }

  TEST_CASE("parallel arrows give distinct embeddings") {
    Quiver q(3);
    q.add_arrow("p", 1, 2);
    q.add_arrow("q", 1, 2);
    q.add_arrow("s", 2, 3);
    auto const embs = find_A_embeddings(q, 3);
    REQUIRE(embs.size() == 2);
    CHECK(embs[0].arrows == Word{0, 2});
    CHECK(embs[1].arrows == Word{1, 2});
  }

  TEST_CASE("search budget") {
    CHECK_THROWS_AS((void)find_A_embeddings(complete_quiver(7), 7, 100), SearchBudgetExceeded);
  }

  TEST_CASE("extendability") {
    Quiver const a3 = linear_quiver(3);
    CHECK_FALSE(is_extendable(a3, find_A_embeddings(a3, 3).front()).has_value());

    Quiver const ex = example_quiver();
    Embedding    e{{1, 2, 3}, {ex.arrow_index("a"), ex.arrow_index("b")}, std::nullopt};
    REQUIRE(is_valid_embedding(ex, e));
    auto const w = is_extendable(ex, e);
    REQUIRE(w.has_value());
    CHECK(ex.arrow(*w).id == "c");

    Quiver const k4 = complete_quiver(4);
    for (auto const& emb : find_A_embeddings(k4, 4)) {
      CHECK(is_extendable(k4, emb).has_value());
    }
  }

  TEST_CASE("X_m embeddings") {
    Quiver const ex = example_quiver();
    auto const   x3 = find_X_embedding(ex, 3);
    REQUIRE(x3.has_value());
    CHECK(x3->vertices == std::vector<Vertex>{1, 2, 3});
    REQUIRE(x3->cycle_arrow.has_value());
    CHECK(ex.arrow(x3->cycle_arrow->arrow).id == "e");
    CHECK(x3->cycle_arrow->return_index == 1);
    CHECK(is_valid_embedding(ex, *x3));

    for (std::size_t m = 2; m <= 6; ++m) {
      CHECK_FALSE(find_X_embedding(linear_quiver(6), m).has_value());
    }

    Quiver two(2);
    two.add_arrow("u", 1, 2);
    two.add_arrow("v", 2, 1);
    auto const x2 = find_X_embedding(two, 2);
    REQUIRE(x2.has_value());
    CHECK(x2->vertices == std::vector<Vertex>{1, 2});
    CHECK(two.arrow(x2->cycle_arrow->arrow).id == "v");
  }

  TEST_CASE("X_m exists iff some A_m embedding is extendable") {
    std::mt19937 rng(17);
    for (int round = 0; round < 60; ++round) {
      Quiver const q = random_quiver(rng, {.max_n = 5, .max_mult = 1, .arrow_density = 0.35});
      for (std::size_t m = 2; m <= q.vertex_count(); ++m) {
        bool any = false;
        for (auto const& e : find_A_embeddings(q, m)) {
          any = any || is_extendable(q, e).has_value();
        }
        auto const x = find_X_embedding(q, m);
        CHECK(x.has_value() == any);
        CHECK(any == naive_has_X(q, m));
        if (x) {
          CHECK(is_valid_embedding(q, *x));
          // No other return arrow from the last vertex lands later in the path.
          for (ArrowIndex a : q.out_arrows(x->vertices.back())) {
            auto const it = std::find(x->vertices.begin(), x->vertices.end() - 1, q.arrow(a).target);
            if (it != x->vertices.end() - 1) {
              CHECK(static_cast<std::size_t>(it - x->vertices.begin())
                    <= x->cycle_arrow->return_index);
            }
          }
        }
      }
    }
  }

  TEST_CASE("relabeling") {
    CHECK_THROWS_AS(Relabeling({1, 1, 2}), InvalidInput);
    CHECK_THROWS_AS(Relabeling({1, 4, 2}), InvalidInput);
    CHECK(Relabeling::identity(4).is_identity());

    Quiver const a4 = linear_quiver(4);
    CHECK(relabeling_from_embedding(a4, find_A_embeddings(a4, 4).front()).is_identity());

    Quiver const ex    = example_quiver();
    Embedding    e{{2, 3}, {ex.arrow_index("b")}, std::nullopt};
    Relabeling   sigma = relabeling_from_embedding(ex, e);
    CHECK(sigma.image() == std::vector<Vertex>{3, 1, 2});
    CHECK(relabeling_with_prefix(5, {4, 2}).image() == std::vector<Vertex>{3, 2, 4, 1, 5});
  }

  TEST_CASE("relabel preserves invariants and inverts") {
    std::mt19937 rng(23);
    for (int round = 0; round < 50; ++round) {
      Quiver const        q = random_quiver(rng, {.loops = true});
      std::vector<Vertex> image(q.vertex_count());
      std::iota(image.begin(), image.end(), Vertex{1});
      std::shuffle(image.begin(), image.end(), rng);
      Relabeling const sigma(image);
      Quiver const     p = relabel(q, sigma);

      CHECK(p.arrow_count() == q.arrow_count());
      auto const fq = structure_predicates(q);
      auto const fp = structure_predicates(p);
      CHECK(fq == fp);
      std::multiset<std::size_t> rq;
      std::multiset<std::size_t> rp;
      std::size_t                loops_q = 0;
      std::size_t                loops_p = 0;
      for (Vertex i = 1; i <= q.vertex_count(); ++i) {
        loops_q += q.r(i, i);
        loops_p += p.r(i, i);
        for (Vertex j = 1; j <= q.vertex_count(); ++j) {
          rq.insert(q.r(i, j));
          rp.insert(p.r(i, j));
          CHECK(p.r(sigma(i), sigma(j)) == q.r(i, j));
        }
      }
      CHECK(rq == rp);
      CHECK(loops_q == loops_p);
      CHECK(relabel(p, sigma.inverse()) == q);
    }
  }
}
