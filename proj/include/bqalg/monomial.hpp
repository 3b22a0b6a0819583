#ifndef BQALG_MONOMIAL_HPP_
#define BQALG_MONOMIAL_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bqalg/module_spec.hpp"
#include "bqalg/quiver.hpp"

namespace bqalg {

  // A reduced set of zero relations: every generator has length >= 2 and no
  // generator's word is a contiguous infix of another's. Generators are kept
  // in canonical path order.
  class RelationSet {
   public:
    RelationSet() = default;

    [[nodiscard]] std::vector<Path> const& generators() const noexcept {
      return _generators;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _generators.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _generators.empty();
    }
    // Length of the longest generator, 0 for the empty set.
    [[nodiscard]] std::size_t max_length() const noexcept;
    [[nodiscard]] bool contains(Word const& w) const;

    bool operator==(RelationSet const&) const = default;

   private:
    friend RelationSet reduce(std::vector<Path>);
    std::vector<Path> _generators;
  };

  // Drops every path containing another one as an infix. Idempotent. Throws
  // NotAdmissibleError for a path of length < 2.
  [[nodiscard]] RelationSet reduce(std::vector<Path> raw);

  // Is `needle` a contiguous infix of `haystack`?
  [[nodiscard]] bool is_infix(Word const& needle, Word const& haystack);

  // Aho-Corasick automaton over the arrow alphabet for the relation words,
  // multiplied with the current vertex. Walks from the start state of a
  // vertex v that never reach a rejecting transition are exactly the nonzero
  // paths starting at v.
  class SubwordAutomaton {
   public:
    using State = std::size_t;
    static constexpr State reject = static_cast<State>(-1);

    SubwordAutomaton() = default;
    SubwordAutomaton(Quiver const& q, RelationSet const& rels);

    [[nodiscard]] State start(Vertex v) const {
      return v - 1;
    }
    // Only arrows starting at vertex_of(s) may be fed.
    [[nodiscard]] State step(State s, ArrowIndex a) const;
    [[nodiscard]] Vertex vertex_of(State s) const {
      return _vertex[s];
    }
    [[nodiscard]] std::size_t state_count() const noexcept {
      return _vertex.size();
    }
    // Accepted transitions out of s, in arrow order.
    [[nodiscard]] std::vector<std::pair<ArrowIndex, State>> const&
    transitions(State s) const {
      return _edges[s];
    }

   private:
    std::vector<Vertex>                                    _vertex;
    std::vector<std::map<ArrowIndex, State>>               _delta;
    std::vector<std::vector<std::pair<ArrowIndex, State>>> _edges;
  };

  struct AdmissibleOk {
    // Smallest N with every path of length N zero: 1 + longest nonzero path.
    std::size_t nilpotency;
    std::size_t longest_nonzero_path;
  };

  struct NotAdmissible {
    std::string reason;
    // A cycle all of whose powers are nonzero, when that is the reason.
    std::optional<Path> cycle_witness;
  };

  using Admissibility = std::variant<AdmissibleOk, NotAdmissible>;

  // Nonzero paths, indexed. Path ids follow the canonical order (length,
  // word, source).
  class BasisIndex {
   public:
    BasisIndex() = default;
    BasisIndex(std::size_t n, std::vector<Path> paths);

    [[nodiscard]] std::vector<Path> const& paths() const noexcept {
      return _paths;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _paths.size();
    }
    [[nodiscard]] Path const& operator[](std::size_t id) const {
      return _paths[id];
    }
    [[nodiscard]] std::optional<std::size_t> find(Vertex base, Word const& w) const;
    [[nodiscard]] std::optional<std::size_t> find(Path const& p) const {
      return find(p.source(), p.word());
    }
    // Ids of the basis paths starting at v, in canonical order.
    [[nodiscard]] std::vector<std::size_t> const& from(Vertex v) const {
      return _from[v - 1];
    }
    // Id of the basis path p extended by arrow a, if nonzero.
    [[nodiscard]] std::optional<std::size_t> extend(std::size_t id, ArrowIndex a) const;

   private:
    std::vector<Path>                     _paths;
    std::map<Word, std::size_t>           _nonempty;
    std::vector<std::size_t>              _trivial;
    std::vector<std::vector<std::size_t>> _from;
    std::vector<std::map<ArrowIndex, std::size_t>> _children;
  };

  // kQ/I for a monomial ideal I. Immutable after construction and safe to
  // share between threads.
  class Algebra {
   public:
    static constexpr std::size_t default_basis_cap = 1'000'000;

    // Throws InvalidInput if a relation is not a path of q; throws
    // BasisCapExceeded if the ideal is admissible but the basis has more than
    // `basis_cap` paths. A non-admissible ideal is accepted; basis() then
    // throws.
    Algebra(Quiver q, RelationSet rels, std::size_t basis_cap = default_basis_cap);

    [[nodiscard]] Quiver const& quiver() const noexcept {
      return _quiver;
    }
    [[nodiscard]] RelationSet const& relations() const noexcept {
      return _relations;
    }
    [[nodiscard]] SubwordAutomaton const& automaton() const noexcept {
      return _automaton;
    }
    [[nodiscard]] Admissibility const& admissibility() const noexcept {
      return _admissibility;
    }
    [[nodiscard]] bool is_admissible() const noexcept {
      return std::holds_alternative<AdmissibleOk>(_admissibility);
    }
    // Throws NotAdmissibleError when the quotient is infinite-dimensional.
    [[nodiscard]] BasisIndex const& basis() const;

    // True iff some generator is an infix of p. Throws InvalidInput if p
    // does not belong to this algebra's quiver.
    [[nodiscard]] bool is_zero_path(Path const& p) const;
    [[nodiscard]] bool is_zero_word(Vertex base, Word const& w) const;

    [[nodiscard]] std::size_t dimension() const {
      return basis().size();
    }
    [[nodiscard]] std::size_t dim_projective(Vertex i) const;

    // Basis path ids of M(i, S), canonical order.
    [[nodiscard]] std::vector<std::size_t> module_basis(ModuleSpec const& spec) const;
    // Multiplicity of each simple as a composition factor.
    [[nodiscard]] VertexCounts composition_vector(ModuleSpec const& spec) const;
    // Composition vector of the submodule of P(i) spanned by the nonzero paths
    // whose first arrow is one of `generators` (all starting at i).
    [[nodiscard]] VertexCounts
    submodule_composition(Vertex i, std::vector<ArrowIndex> const& generators) const;

   private:
    Quiver           _quiver;
    RelationSet      _relations;
    SubwordAutomaton _automaton;
    Admissibility    _admissibility;
    BasisIndex       _basis;
  };

  // The admissibility result; kept as a free function for symmetry with the
  // other checks.
  [[nodiscard]] inline Admissibility const& check_admissible(Algebra const& a) {
    return a.admissibility();
  }

  [[nodiscard]] inline BasisIndex const& enumerate_basis(Algebra const& a) {
    return a.basis();
  }

  // Builds a RelationSet from arrow-id words (traversal order).
  [[nodiscard]] RelationSet
  relations_from_ids(Quiver const& q, std::vector<std::vector<std::string>> const& words);

}  // namespace bqalg

#endif  // BQALG_MONOMIAL_HPP_
