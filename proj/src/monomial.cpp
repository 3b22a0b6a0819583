#include "bqalg/monomial.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>

#include "bqalg/error.hpp"

namespace bqalg {

  ////////////////////////////////////////////////////////////////////////
  // RelationSet
  ////////////////////////////////////////////////////////////////////////

  bool is_infix(Word const& needle, Word const& haystack) {
    if (needle.size() > haystack.size()) {
      return false;
    }
    return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end())
           != haystack.end();
  }

  std::size_t RelationSet::max_length() const noexcept {
    std::size_t result = 0;
    for (auto const& p : _generators) {
      result = std::max(result, p.length());
    }
    return result;
  }

  bool RelationSet::contains(Word const& w) const {
    return std::any_of(_generators.begin(), _generators.end(), [&w](Path const& p) {
      return p.word() == w;
    });
  }

  RelationSet reduce(std::vector<Path> raw) {
    for (auto const& p : raw) {
      if (p.length() < 2) {
        throw NotAdmissibleError("zero relation of length " + std::to_string(p.length())
                                 + " is not contained in the square of the arrow ideal");
      }
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    // sorted by length, so only shorter (already kept) words can be infixes
    RelationSet result;
    for (auto& p : raw) {
      bool const redundant = std::any_of(
          result._generators.begin(), result._generators.end(), [&p](Path const& g) {
            return is_infix(g.word(), p.word());
          });
      if (!redundant) {
        result._generators.push_back(std::move(p));
      }
    }
    return result;
  }

  RelationSet relations_from_ids(Quiver const&                                q,
                                 std::vector<std::vector<std::string>> const& words) {
    std::vector<Path> raw;
    raw.reserve(words.size());
    for (auto const& w : words) {
      raw.push_back(q.path_from_ids(w));
    }
    return reduce(std::move(raw));
  }

  ////////////////////////////////////////////////////////////////////////
  // SubwordAutomaton
  ////////////////////////////////////////////////////////////////////////

  SubwordAutomaton::SubwordAutomaton(Quiver const& q, RelationSet const& rels) {
    // Trie over the relation words; node 0 is the root.
    std::vector<std::map<ArrowIndex, std::size_t>> child(1);
    std::vector<bool>                              terminal(1, false);
    std::vector<Vertex>                            last_target(1, 0);
    for (auto const& g : rels.generators()) {
      std::size_t node = 0;
      for (ArrowIndex a : g.word()) {
        auto it = child[node].find(a);
        if (it == child[node].end()) {
          child.emplace_back();
          terminal.push_back(false);
          last_target.push_back(q.arrow(a).target);
          it = child[node].emplace(a, child.size() - 1).first;
        }
        node = it->second;
      }
      terminal[node] = true;
    }

    std::size_t const nodes = child.size();
    std::vector<std::size_t> fail(nodes, 0);
    std::vector<std::size_t> order;  // BFS order, root excluded
    std::deque<std::size_t>  queue;
    for (auto const& [a, c] : child[0]) {
      queue.push_back(c);
    }
    while (!queue.empty()) {
      std::size_t const u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (auto const& [a, c] : child[u]) {
        std::size_t f = fail[u];
        while (f != 0 && child[f].count(a) == 0) {
          f = fail[f];
        }
        auto it = child[f].find(a);
        fail[c] = (it != child[f].end() && it->second != c) ? it->second : 0;
        terminal[c] = terminal[c] || terminal[fail[c]];
        queue.push_back(c);
      }
    }

    // goto function, restricted to arrows that can actually follow the node
    std::vector<std::map<ArrowIndex, std::size_t>> go(nodes);
    for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
      auto it  = child[0].find(a);
      go[0][a] = it == child[0].end() ? 0 : it->second;
    }
    for (std::size_t u : order) {
      for (ArrowIndex a : q.out_arrows(last_target[u])) {
        auto it = child[u].find(a);
        go[u][a] = it != child[u].end() ? it->second : go[fail[u]].at(a);
      }
    }

    // Product states: 0..n-1 are (vertex, root); then one per live node.
    std::size_t const        n = q.vertex_count();
    std::vector<std::size_t> state_of(nodes, reject);
    _vertex.clear();
    for (Vertex v = 1; v <= n; ++v) {
      _vertex.push_back(v);
    }
    std::vector<std::size_t> node_of(n, 0);
    for (std::size_t u : order) {
      if (!terminal[u]) {
        state_of[u] = _vertex.size();
        _vertex.push_back(last_target[u]);
        node_of.push_back(u);
      }
    }

    _delta.assign(_vertex.size(), {});
    _edges.assign(_vertex.size(), {});
    for (State s = 0; s < _vertex.size(); ++s) {
      std::size_t const u = node_of[s];
      for (ArrowIndex a : q.out_arrows(_vertex[s])) {
        std::size_t const next = go[u].at(a);
        State             t;
        if (terminal[next]) {
          t = reject;
        } else if (next == 0) {
          t = start(q.arrow(a).target);
        } else {
          t = state_of[next];
        }
        _delta[s][a] = t;
        if (t != reject) {
          _edges[s].emplace_back(a, t);
        }
      }
    }
  }

  SubwordAutomaton::State SubwordAutomaton::step(State s, ArrowIndex a) const {
    auto it = _delta[s].find(a);
    if (it == _delta[s].end()) {
      throw CompositionError("arrow " + std::to_string(a) + " cannot follow vertex "
                             + std::to_string(_vertex[s]));
    }
    return it->second;
  }

  ////////////////////////////////////////////////////////////////////////
  // BasisIndex
  ////////////////////////////////////////////////////////////////////////

  BasisIndex::BasisIndex(std::size_t n, std::vector<Path> paths)
      : _paths(std::move(paths)), _trivial(n, 0), _from(n), _children(_paths.size()) {
    std::sort(_paths.begin(), _paths.end());
    for (std::size_t id = 0; id < _paths.size(); ++id) {
      Path const& p = _paths[id];
      _from[p.source() - 1].push_back(id);
      if (p.is_trivial()) {
        _trivial[p.source() - 1] = id;
        continue;
      }
      _nonempty.emplace(p.word(), id);
      std::size_t parent;
      if (p.length() == 1) {
        parent = _trivial[p.source() - 1];
      } else {
        Word prefix(p.word().begin(), p.word().end() - 1);
        parent = _nonempty.at(prefix);
      }
      _children[parent].emplace(p.word().back(), id);
    }
  }

  std::optional<std::size_t> BasisIndex::find(Vertex base, Word const& w) const {
    if (w.empty()) {
      if (base < 1 || base > _trivial.size()) {
        return std::nullopt;
      }
      return _trivial[base - 1];
    }
    auto it = _nonempty.find(w);
    if (it == _nonempty.end() || _paths[it->second].source() != base) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<std::size_t> BasisIndex::extend(std::size_t id, ArrowIndex a) const {
    auto const& kids = _children.at(id);
    auto        it   = kids.find(a);
    if (it == kids.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  ////////////////////////////////////////////////////////////////////////
  // Algebra
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Cycle detection and longest walk on the automaton's state graph.
    Admissibility analyse(Quiver const& q, SubwordAutomaton const& aut) {
      using State               = SubwordAutomaton::State;
      std::size_t const  states = aut.state_count();
      std::vector<int>   colour(states, 0);
      std::vector<std::size_t> longest(states, 0);

      struct Frame {
        State       s;
        std::size_t next;
      };
      std::vector<Frame>      frames;
      std::vector<ArrowIndex> arrows;  // arrows[k] leads from frames[k] to frames[k+1]

      for (State root = 0; root < states; ++root) {
        if (colour[root] != 0) {
          continue;
        }
        frames.push_back({root, 0});
        colour[root] = 1;
        while (!frames.empty()) {
          Frame&      f     = frames.back();
          auto const& edges = aut.transitions(f.s);
          if (f.next == edges.size()) {
            std::size_t best = 0;
            for (auto const& [a, t] : edges) {
              best = std::max(best, longest[t] + 1);
            }
            longest[f.s] = best;
            colour[f.s]  = 2;
            frames.pop_back();
            if (!arrows.empty()) {
              arrows.pop_back();
            }
            continue;
          }
          auto const [a, t] = edges[f.next++];
          if (colour[t] == 1) {
            Word cycle{a};
            for (std::size_t k = frames.size(); k-- > 0;) {
              if (frames[k].s == t) {
                break;
              }
              cycle.push_back(arrows[k - 1]);
            }
            std::reverse(cycle.begin(), cycle.end());
            Path witness = q.path(std::move(cycle));
            return NotAdmissible{"the oriented cycle " + q.word_to_string(witness.word())
                                     + " (traversal order) has no vanishing power",
                                 witness};
          }
          if (colour[t] == 0) {
            colour[t] = 1;
            arrows.push_back(a);
            frames.push_back({t, 0});
          }
        }
      }
      std::size_t best = 0;
      for (Vertex v = 1; v <= q.vertex_count(); ++v) {
        best = std::max(best, longest[aut.start(v)]);
      }
      return AdmissibleOk{best + 1, best};
    }

    std::size_t count_paths(Quiver const& q, SubwordAutomaton const& aut, std::size_t cap) {
      using State = SubwordAutomaton::State;
      std::size_t const        saturate = std::numeric_limits<std::size_t>::max() / 2;
      std::vector<std::size_t> count(aut.state_count(), 0);
      std::vector<bool>        done(aut.state_count(), false);
      std::function<std::size_t(State)> visit = [&](State s) -> std::size_t {
        if (done[s]) {
          return count[s];
        }
        std::size_t c = 1;
        for (auto const& [a, t] : aut.transitions(s)) {
          c = std::min(saturate, c + visit(t));
        }
        done[s]  = true;
        count[s] = c;
        return c;
      };
      std::size_t total = 0;
      for (Vertex v = 1; v <= q.vertex_count(); ++v) {
        total = std::min(saturate, total + visit(aut.start(v)));
        if (total > cap) {
          break;
        }
      }
      return total;
    }

  }  // namespace

  Algebra::Algebra(Quiver q, RelationSet rels, std::size_t basis_cap)
      : _quiver(std::move(q)), _relations(std::move(rels)) {
    for (auto const& g : _relations.generators()) {
      Path check = [&] {
        try {
          return _quiver.path(g.source(), g.word());
        } catch (Error const& e) {
          throw InvalidInput(std::string("relation is not a path of the quiver: ")
                             + e.what());
        }
      }();
      if (check != g) {
        throw InvalidInput("relation is not a path of the quiver");
      }
    }
    _automaton     = SubwordAutomaton(_quiver, _relations);
    _admissibility = analyse(_quiver, _automaton);
    if (!is_admissible()) {
      return;
    }
    std::size_t const total = count_paths(_quiver, _automaton, basis_cap);
    if (total > basis_cap) {
      throw BasisCapExceeded("the quotient has more than " + std::to_string(basis_cap)
                             + " basis paths");
    }
    std::vector<Path> paths;
    paths.reserve(total);
    Word word;
    std::function<void(Vertex, SubwordAutomaton::State)> walk
        = [&](Vertex base, SubwordAutomaton::State s) {
            paths.push_back(_quiver.path(base, word));
            for (auto const& [a, t] : _automaton.transitions(s)) {
              word.push_back(a);
              walk(base, t);
              word.pop_back();
            }
          };
    for (Vertex v = 1; v <= _quiver.vertex_count(); ++v) {
      walk(v, _automaton.start(v));
    }
    _basis = BasisIndex(_quiver.vertex_count(), std::move(paths));
  }

  BasisIndex const& Algebra::basis() const {
    if (auto const* bad = std::get_if<NotAdmissible>(&_admissibility)) {
      throw NotAdmissibleError("ideal is not admissible: " + bad->reason);
    }
    return _basis;
  }

  bool Algebra::is_zero_word(Vertex base, Word const& w) const {
    if (!_quiver.is_vertex(base)) {
      throw InvalidInput("vertex " + std::to_string(base) + " out of range");
    }
    auto s = _automaton.start(base);
    for (ArrowIndex a : w) {
      if (a >= _quiver.arrow_count()) {
        throw InvalidInput("foreign arrow index " + std::to_string(a));
      }
      if (_quiver.arrow(a).source != _automaton.vertex_of(s)) {
        throw CompositionError("word is not a path of the quiver");
      }
      s = _automaton.step(s, a);
      if (s == SubwordAutomaton::reject) {
        // the rest must still compose
        (void) _quiver.path(base, w);
        return true;
      }
    }
    return false;
  }

  bool Algebra::is_zero_path(Path const& p) const {
    return is_zero_word(p.source(), p.word());
  }

  std::size_t Algebra::dim_projective(Vertex i) const {
    if (!_quiver.is_vertex(i)) {
      throw InvalidInput("vertex " + std::to_string(i) + " out of range");
    }
    return basis().from(i).size();
  }

  std::vector<std::size_t> Algebra::module_basis(ModuleSpec const& spec) const {
    std::vector<std::size_t> result;
    for (std::size_t id : basis().from(spec.vertex())) {
      if (spec.admits(_basis[id])) {
        result.push_back(id);
      }
    }
    return result;
  }

  VertexCounts Algebra::composition_vector(ModuleSpec const& spec) const {
    VertexCounts cv(_quiver.vertex_count(), 0);
    for (std::size_t id : module_basis(spec)) {
      ++cv[_basis[id].target() - 1];
    }
    return cv;
  }

  VertexCounts Algebra::submodule_composition(Vertex                         i,
                                              std::vector<ArrowIndex> const& generators) const {
    VertexCounts cv(_quiver.vertex_count(), 0);
    for (std::size_t id : basis().from(i)) {
      Path const& p = _basis[id];
      if (!p.is_trivial()
          && std::find(generators.begin(), generators.end(), p.word().front())
                 != generators.end()) {
        ++cv[p.target() - 1];
      }
    }
    return cv;
  }

}  // namespace bqalg
