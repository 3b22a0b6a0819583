#ifndef BQALG_QUIVER_HPP_
#define BQALG_QUIVER_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bqalg {

  // Vertices are labelled 1, ..., n.
  using Vertex = std::size_t;
  // Position of an arrow in Quiver::arrows().
  using ArrowIndex = std::size_t;
  // A sequence of arrows in traversal order: the first arrow walked is
  // word[0]. This is the reverse of the usual composition-order notation,
  // where the path "ba" first traverses a and then b.
  using Word = std::vector<ArrowIndex>;

  struct Arrow {
    std::string id;
    Vertex      source;
    Vertex      target;

    [[nodiscard]] bool is_loop() const noexcept {
      return source == target;
    }

    bool operator==(Arrow const&) const = default;
  };

  class Quiver;

  // A path of a quiver. Only a Quiver can create one, so every Path is
  // composable. Paths are ordered by (length, word, source), which is the
  // canonical basis order used throughout the library.
  class Path {
   public:
    [[nodiscard]] Vertex source() const noexcept {
      return _source;
    }
    [[nodiscard]] Vertex target() const noexcept {
      return _target;
    }
    [[nodiscard]] Word const& word() const noexcept {
      return _word;
    }
    [[nodiscard]] std::size_t length() const noexcept {
      return _word.size();
    }
    [[nodiscard]] bool is_trivial() const noexcept {
      return _word.empty();
    }

    bool operator==(Path const&) const = default;
    bool operator<(Path const& that) const;

   private:
    friend class Quiver;
    friend Path compose(Path const&, Path const&);

    Path(Vertex source, Vertex target, Word word)
        : _source(source), _target(target), _word(std::move(word)) {}

    Vertex _source;
    Vertex _target;
    Word   _word;
  };

  // Concatenation in traversal order: walk p, then q. Throws
  // CompositionError unless p.target() == q.source().
  Path compose(Path const& p, Path const& q);

  class Quiver {
   public:
    Quiver() = default;
    explicit Quiver(std::size_t n) : _out(n), _in(n) {}
    Quiver(std::size_t n, std::vector<Arrow> const& arrows);

    // Throws InvalidInput on a duplicate id or a vertex out of range.
    ArrowIndex add_arrow(std::string id, Vertex source, Vertex target);

    [[nodiscard]] std::size_t vertex_count() const noexcept {
      return _out.size();
    }
    [[nodiscard]] std::size_t arrow_count() const noexcept {
      return _arrows.size();
    }
    [[nodiscard]] std::vector<Arrow> const& arrows() const noexcept {
      return _arrows;
    }
    [[nodiscard]] Arrow const& arrow(ArrowIndex a) const;

    [[nodiscard]] std::optional<ArrowIndex> find_arrow(std::string_view id) const;
    // Throws InvalidInput for an unknown id.
    [[nodiscard]] ArrowIndex arrow_index(std::string_view id) const;

    // Arrows leaving / entering v, in index order.
    [[nodiscard]] std::vector<ArrowIndex> const& out_arrows(Vertex v) const;
    [[nodiscard]] std::vector<ArrowIndex> const& in_arrows(Vertex v) const;
    [[nodiscard]] std::vector<ArrowIndex> arrows_between(Vertex i, Vertex j) const;
    // Number of arrows i -> j.
    [[nodiscard]] std::size_t r(Vertex i, Vertex j) const;

    [[nodiscard]] bool is_vertex(Vertex v) const noexcept {
      return v >= 1 && v <= vertex_count();
    }

    [[nodiscard]] Path trivial_path(Vertex v) const;
    // A nonempty word; throws CompositionError if consecutive arrows do not
    // compose.
    [[nodiscard]] Path path(Word word) const;
    // Same, but also accepts the empty word (the trivial path at base).
    [[nodiscard]] Path path(Vertex base, Word word) const;
    [[nodiscard]] Path path_from_ids(std::vector<std::string> const& ids) const;

    // "a b c" style rendering of a word by arrow ids, traversal order.
    [[nodiscard]] std::string word_to_string(Word const& w) const;
    // The same word in composition order, e.g. traversal [a, d] -> "da".
    // Ids are separated by '.' unless all of them are a single character.
    [[nodiscard]] std::string composition_string(Word const& w) const;

    bool operator==(Quiver const& that) const {
      return _arrows == that._arrows && _out.size() == that._out.size();
    }

   private:
    void check_vertex(Vertex v) const;

    std::vector<Arrow>                   _arrows;
    std::vector<std::vector<ArrowIndex>> _out;
    std::vector<std::vector<ArrowIndex>> _in;
    std::map<std::string, ArrowIndex, std::less<>> _ids;
  };

  struct StructureFlags {
    bool has_loop;
    bool has_oriented_cycle;
    bool has_length2_path;

    bool operator==(StructureFlags const&) const = default;
  };

  [[nodiscard]] StructureFlags structure_predicates(Quiver const& q);

  // The arrows of some oriented cycle (traversal order), if any; a loop is
  // a cycle of length 1.
  [[nodiscard]] std::optional<Word> find_oriented_cycle(Quiver const& q);

}  // namespace bqalg

#endif  // BQALG_QUIVER_HPP_
