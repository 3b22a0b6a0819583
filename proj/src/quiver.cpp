#include "bqalg/quiver.hpp"

#include <algorithm>
#include <utility>

#include "bqalg/error.hpp"

namespace bqalg {

  bool Path::operator<(Path const& that) const {
    if (_word.size() != that._word.size()) {
      return _word.size() < that._word.size();
    }
    if (_word != that._word) {
      return _word < that._word;
    }
    return _source < that._source;
  }

  Path compose(Path const& p, Path const& q) {
    if (p.target() != q.source()) {
      throw CompositionError("cannot compose a path ending at "
                             + std::to_string(p.target())
                             + " with a path starting at "
                             + std::to_string(q.source()));
    }
    Word w = p.word();
    w.insert(w.end(), q.word().begin(), q.word().end());
    return Path(p.source(), q.target(), std::move(w));
  }

  Quiver::Quiver(std::size_t n, std::vector<Arrow> const& arrows)
      : Quiver(n) {
    for (auto const& a : arrows) {
      add_arrow(a.id, a.source, a.target);
    }
  }

  void Quiver::check_vertex(Vertex v) const {
    if (!is_vertex(v)) {
      throw InvalidInput("vertex " + std::to_string(v)
                         + " out of range [1, "
                         + std::to_string(vertex_count()) + "]");
    }
  }

  ArrowIndex Quiver::add_arrow(std::string id, Vertex source, Vertex target) {
    check_vertex(source);
    check_vertex(target);
    if (id.empty()) {
      throw InvalidInput("arrow id must be nonempty");
    }
    if (_ids.count(id) != 0) {
      throw InvalidInput("duplicate arrow id \"" + id + "\"");
    }
    ArrowIndex const a = _arrows.size();
    _ids.emplace(id, a);
    _arrows.push_back({std::move(id), source, target});
    _out[source - 1].push_back(a);
    _in[target - 1].push_back(a);
    return a;
  }

  Arrow const& Quiver::arrow(ArrowIndex a) const {
    if (a >= _arrows.size()) {
      throw InvalidInput("arrow index " + std::to_string(a) + " out of range");
    }
    return _arrows[a];
  }

  std::optional<ArrowIndex> Quiver::find_arrow(std::string_view id) const {
    auto it = _ids.find(id);
    if (it == _ids.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  ArrowIndex Quiver::arrow_index(std::string_view id) const {
    auto a = find_arrow(id);
    if (!a) {
      throw InvalidInput("unknown arrow id \"" + std::string(id) + "\"");
    }
    return *a;
  }

  std::vector<ArrowIndex> const& Quiver::out_arrows(Vertex v) const {
    check_vertex(v);
    return _out[v - 1];
  }

  std::vector<ArrowIndex> const& Quiver::in_arrows(Vertex v) const {
    check_vertex(v);
    return _in[v - 1];
  }

  std::vector<ArrowIndex> Quiver::arrows_between(Vertex i, Vertex j) const {
    std::vector<ArrowIndex> result;
    for (ArrowIndex a : out_arrows(i)) {
      if (_arrows[a].target == j) {
        result.push_back(a);
      }
    }
    return result;
  }

  std::size_t Quiver::r(Vertex i, Vertex j) const {
    check_vertex(j);
    return arrows_between(i, j).size();
  }

  Path Quiver::trivial_path(Vertex v) const {
    check_vertex(v);
    return Path(v, v, {});
  }

  Path Quiver::path(Word word) const {
    if (word.empty()) {
      throw InvalidInput("an empty word needs a base vertex");
    }
    Vertex const base = arrow(word.front()).source;
    return path(base, std::move(word));
  }

  Path Quiver::path(Vertex base, Word word) const {
    check_vertex(base);
    Vertex at = base;
    for (ArrowIndex a : word) {
      Arrow const& x = arrow(a);
      if (x.source != at) {
        throw CompositionError("arrow \"" + x.id + "\" starts at "
                               + std::to_string(x.source) + ", not at "
                               + std::to_string(at));
      }
      at = x.target;
    }
    return Path(base, at, std::move(word));
  }

  Path Quiver::path_from_ids(std::vector<std::string> const& ids) const {
    Word w;
    w.reserve(ids.size());
    for (auto const& id : ids) {
      w.push_back(arrow_index(id));
    }
    return path(std::move(w));
  }

  std::string Quiver::word_to_string(Word const& w) const {
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k != 0) {
        out += ' ';
      }
      out += arrow(w[k]).id;
    }
    return out;
  }

  std::string Quiver::composition_string(Word const& w) const {
    bool const short_ids = std::all_of(w.begin(), w.end(), [this](ArrowIndex a) {
      return arrow(a).id.size() == 1;
    });
    std::string out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (!short_ids && it != w.rbegin()) {
        out += '.';
      }
      out += arrow(*it).id;
    }
    return out;
  }

  std::optional<Word> find_oriented_cycle(Quiver const& q) {
    std::size_t const n = q.vertex_count();
    // 0 = unvisited, 1 = on stack, 2 = done
    std::vector<int>        colour(n + 1, 0);
    std::vector<ArrowIndex> stack_arrows;

    struct Frame {
      Vertex      v;
      std::size_t next;
    };

    for (Vertex root = 1; root <= n; ++root) {
      if (colour[root] != 0) {
        continue;
      }
      std::vector<Frame> frames{{root, 0}};
      colour[root] = 1;
      while (!frames.empty()) {
        Frame& f   = frames.back();
        auto const& out = q.out_arrows(f.v);
        if (f.next == out.size()) {
          colour[f.v] = 2;
          frames.pop_back();
          if (!stack_arrows.empty()) {
            stack_arrows.pop_back();
          }
          continue;
        }
        ArrowIndex const a = out[f.next++];
        Vertex const     t = q.arrow(a).target;
        if (colour[t] == 1) {
          // unwind the stack back to t
          Word cycle{a};
          for (std::size_t k = frames.size(); k-- > 1;) {
            if (frames[k].v == t) {
              break;
            }
            cycle.push_back(stack_arrows[k - 1]);
          }
          std::reverse(cycle.begin(), cycle.end());
          return cycle;
        }
        if (colour[t] == 0) {
          colour[t] = 1;
          stack_arrows.push_back(a);
          frames.push_back({t, 0});
        }
      }
    }
    return std::nullopt;
  }

  StructureFlags structure_predicates(Quiver const& q) {
    StructureFlags flags{false, false, false};
    for (auto const& a : q.arrows()) {
      flags.has_loop = flags.has_loop || a.is_loop();
      flags.has_length2_path
          = flags.has_length2_path || !q.out_arrows(a.target).empty();
    }
    flags.has_oriented_cycle = find_oriented_cycle(q).has_value();
    return flags;
  }

}  // namespace bqalg
