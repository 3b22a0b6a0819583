#ifndef BQALG_SUBQUIVER_HPP_
#define BQALG_SUBQUIVER_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "bqalg/quiver.hpp"

namespace bqalg {

  // A copy of the linear quiver A_m (1 -> 2 -> ... -> m) inside a quiver,
  // optionally closed into X_m by an arrow from the last vertex back to an
  // earlier one.
  struct Embedding {
    struct CycleArrow {
      ArrowIndex  arrow;
      // 0-based position in `vertices` of the arrow's target; the X_m
      // parameter i is return_index + 1.
      std::size_t return_index;

      bool operator==(CycleArrow const&) const = default;
    };

    std::vector<Vertex>       vertices;
    std::vector<ArrowIndex>   arrows;  // arrows[j] : vertices[j] -> vertices[j + 1]
    std::optional<CycleArrow> cycle_arrow;

    [[nodiscard]] std::size_t size() const noexcept {
      return vertices.size();
    }

    bool operator==(Embedding const&) const = default;
  };

  // Checks the Embedding invariants against q.
  [[nodiscard]] bool is_valid_embedding(Quiver const& q, Embedding const& e);

  // Bound on the number of backtracking steps in the subquiver search.
  inline constexpr std::size_t default_search_budget = 50'000'000;

  // Calls visit on every A_m embedding, ordered lexicographically by vertex
  // sequence and then by arrow sequence (arrow index order). Stops early
  // when visit returns false. Throws SearchBudgetExceeded when the search
  // takes more than `budget` steps.
  void for_each_A_embedding(Quiver const&                          q,
                            std::size_t                            m,
                            std::function<bool(Embedding const&)> const& visit,
                            std::size_t budget = default_search_budget);

  [[nodiscard]] std::vector<Embedding>
  find_A_embeddings(Quiver const& q,
                    std::size_t   m,
                    std::size_t   budget = default_search_budget);

  // The first (by index) non-loop arrow from the last embedded vertex into
  // the embedded vertex set.
  [[nodiscard]] std::optional<ArrowIndex> is_extendable(Quiver const&    q,
                                                        Embedding const& e);

  // The first extendable A_m embedding, closed by the return arrow whose
  // target sits latest along the path (ties broken by arrow index).
  [[nodiscard]] std::optional<Embedding>
  find_X_embedding(Quiver const& q,
                   std::size_t   m,
                   std::size_t   budget = default_search_budget);

  // A permutation of the vertices: image()[old - 1] is the new label of old.
  class Relabeling {
   public:
    Relabeling() = default;
    // Throws InvalidInput unless image is a permutation of 1..n.
    explicit Relabeling(std::vector<Vertex> image);

    static Relabeling identity(std::size_t n);

    [[nodiscard]] Vertex operator()(Vertex old) const;
    [[nodiscard]] std::vector<Vertex> const& image() const noexcept {
      return _image;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _image.size();
    }
    [[nodiscard]] Relabeling inverse() const;
    [[nodiscard]] bool is_identity() const;

    bool operator==(Relabeling const&) const = default;

   private:
    std::vector<Vertex> _image;
  };

  // Embedded vertices get 1..m in path order; the remaining vertices get
  // m+1..n in ascending original order.
  [[nodiscard]] Relabeling relabeling_from_embedding(Quiver const&    q,
                                                     Embedding const& e);

  // `first` receives labels 1..k in the order given, the rest follow in
  // ascending original order.
  [[nodiscard]] Relabeling relabeling_with_prefix(std::size_t                n,
                                                  std::vector<Vertex> const& first);

  // Same arrows, same ids, same arrow order; only the endpoints move.
  [[nodiscard]] Quiver relabel(Quiver const& q, Relabeling const& sigma);

  // Paths keep their words; only base vertices are relabelled. The paths
  // must belong to `relabelled`'s preimage.
  [[nodiscard]] std::vector<Path> relabel_paths(Quiver const&            relabelled,
                                                std::vector<Path> const& paths,
                                                Relabeling const&        sigma);

}  // namespace bqalg

#endif  // BQALG_SUBQUIVER_HPP_
