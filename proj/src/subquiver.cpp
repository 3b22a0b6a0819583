#include "bqalg/subquiver.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bqalg/error.hpp"

namespace bqalg {

  bool is_valid_embedding(Quiver const& q, Embedding const& e) {
    std::size_t const m = e.vertices.size();
    if (m == 0 || e.arrows.size() != m - 1) {
      return false;
    }
    std::vector<Vertex> sorted = e.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return false;
    }
    for (Vertex v : e.vertices) {
      if (!q.is_vertex(v)) {
        return false;
      }
    }
    for (std::size_t j = 0; j + 1 < m; ++j) {
      if (e.arrows[j] >= q.arrow_count()) {
        return false;
      }
      Arrow const& a = q.arrow(e.arrows[j]);
      if (a.source != e.vertices[j] || a.target != e.vertices[j + 1]) {
        return false;
      }
    }
    if (e.cycle_arrow) {
      auto const& [arrow, idx] = *e.cycle_arrow;
      if (arrow >= q.arrow_count() || idx + 1 >= m) {
        return false;
      }
      Arrow const& a = q.arrow(arrow);
      if (a.source != e.vertices.back() || a.target != e.vertices[idx]) {
        return false;
      }
    }
    return true;
  }

  namespace {

    class ASearch {
     public:
      ASearch(Quiver const&                                q,
              std::size_t                                  m,
              std::function<bool(Embedding const&)> const& visit,
              std::size_t                                  budget)
          : _q(q),
            _m(m),
            _visit(visit),
            _budget(budget),
            _used(q.vertex_count() + 1, false) {}

      void run() {
        for (Vertex v = 1; v <= _q.vertex_count() && _running; ++v) {
          push(v);
          extend();
          pop();
        }
      }

     private:
      void tick() {
        if (++_steps > _budget) {
          throw SearchBudgetExceeded("subquiver search exceeded "
                                     + std::to_string(_budget) + " steps");
        }
      }

      void push(Vertex v) {
        _used[v] = true;
        _vertices.push_back(v);
      }

      void pop() {
        _used[_vertices.back()] = false;
        _vertices.pop_back();
      }

      void extend() {
        tick();
        if (_vertices.size() == _m) {
          emit_arrow_choices();
          return;
        }
        // distinct unused successors, ascending
        std::vector<Vertex> next;
        for (ArrowIndex a : _q.out_arrows(_vertices.back())) {
          Vertex const t = _q.arrow(a).target;
          if (!_used[t]) {
            next.push_back(t);
          }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        for (Vertex t : next) {
          if (!_running) {
            return;
          }
          push(t);
          extend();
          pop();
        }
      }

      // Cartesian product of parallel arrows along the vertex sequence.
      void emit_arrow_choices() {
        std::vector<std::vector<ArrowIndex>> choices;
        for (std::size_t j = 0; j + 1 < _m; ++j) {
          choices.push_back(_q.arrows_between(_vertices[j], _vertices[j + 1]));
        }
        std::vector<std::size_t> pick(choices.size(), 0);
        while (_running) {
          tick();
          Embedding e;
          e.vertices = _vertices;
          for (std::size_t j = 0; j < choices.size(); ++j) {
            e.arrows.push_back(choices[j][pick[j]]);
          }
          _running = _visit(e);
          // odometer, last position fastest
          std::size_t j = choices.size();
          while (j > 0) {
            --j;
            if (++pick[j] < choices[j].size()) {
              break;
            }
            pick[j] = 0;
            if (j == 0) {
              return;
            }
          }
          if (choices.empty()) {
            return;
          }
        }
      }

      Quiver const&                                _q;
      std::size_t                                  _m;
      std::function<bool(Embedding const&)> const& _visit;
      std::size_t                                  _budget;
      std::size_t                                  _steps = 0;
      bool                                         _running = true;
      std::vector<bool>                            _used;
      std::vector<Vertex>                          _vertices;
    };

  }  // namespace

  void for_each_A_embedding(Quiver const&                                q,
                            std::size_t                                  m,
                            std::function<bool(Embedding const&)> const& visit,
                            std::size_t                                  budget) {
    if (m == 0) {
      throw InvalidInput("A_m needs m >= 1");
    }
    if (m > q.vertex_count()) {
      return;
    }
    ASearch(q, m, visit, budget).run();
  }

  std::vector<Embedding> find_A_embeddings(Quiver const& q,
                                           std::size_t   m,
                                           std::size_t   budget) {
    std::vector<Embedding> result;
    for_each_A_embedding(
        q,
        m,
        [&result](Embedding const& e) {
          result.push_back(e);
          return true;
        },
        budget);
    return result;
  }

  std::optional<ArrowIndex> is_extendable(Quiver const& q, Embedding const& e) {
    if (e.vertices.empty()) {
      return std::nullopt;
    }
    Vertex const last = e.vertices.back();
    for (ArrowIndex a : q.out_arrows(last)) {
      Vertex const t = q.arrow(a).target;
      if (t != last
          && std::find(e.vertices.begin(), e.vertices.end(), t)
                 != e.vertices.end()) {
        return a;
      }
    }
    return std::nullopt;
  }

  std::optional<Embedding> find_X_embedding(Quiver const& q,
                                            std::size_t   m,
                                            std::size_t   budget) {
    if (m < 2) {
      throw InvalidInput("X_m needs m >= 2");
    }
    std::optional<Embedding> found;
    for_each_A_embedding(
        q,
        m,
        [&](Embedding const& e) {
          Vertex const last = e.vertices.back();
          std::optional<Embedding::CycleArrow> best;
          for (ArrowIndex a : q.out_arrows(last)) {
            Vertex const t = q.arrow(a).target;
            auto const   it = std::find(e.vertices.begin(), e.vertices.end() - 1, t);
            if (it == e.vertices.end() - 1) {
              continue;
            }
            std::size_t const idx = static_cast<std::size_t>(it - e.vertices.begin());
            if (!best || idx > best->return_index) {
              best = Embedding::CycleArrow{a, idx};
            }
          }
          if (!best) {
            return true;
          }
          found              = e;
          found->cycle_arrow = best;
          return false;
        },
        budget);
    return found;
  }

  Relabeling::Relabeling(std::vector<Vertex> image) : _image(std::move(image)) {
    std::vector<bool> seen(_image.size() + 1, false);
    for (Vertex v : _image) {
      if (v < 1 || v > _image.size() || seen[v]) {
        throw InvalidInput("relabeling is not a permutation of 1.."
                           + std::to_string(_image.size()));
      }
      seen[v] = true;
    }
  }

  Relabeling Relabeling::identity(std::size_t n) {
    std::vector<Vertex> image(n);
    std::iota(image.begin(), image.end(), Vertex{1});
    return Relabeling(std::move(image));
  }

  Vertex Relabeling::operator()(Vertex old) const {
    if (old < 1 || old > _image.size()) {
      throw InvalidInput("vertex " + std::to_string(old)
                         + " outside the relabeling's domain");
    }
    return _image[old - 1];
  }

  Relabeling Relabeling::inverse() const {
    std::vector<Vertex> inv(_image.size());
    for (std::size_t k = 0; k < _image.size(); ++k) {
      inv[_image[k] - 1] = k + 1;
    }
    return Relabeling(std::move(inv));
  }

  bool Relabeling::is_identity() const {
    for (std::size_t k = 0; k < _image.size(); ++k) {
      if (_image[k] != k + 1) {
        return false;
      }
    }
    return true;
  }

  Relabeling relabeling_with_prefix(std::size_t n, std::vector<Vertex> const& first) {
    std::vector<Vertex> image(n, 0);
    Vertex              next = 1;
    for (Vertex v : first) {
      if (v < 1 || v > n || image[v - 1] != 0) {
        throw InvalidInput("relabeling prefix must list distinct vertices");
      }
      image[v - 1] = next++;
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (image[k] == 0) {
        image[k] = next++;
      }
    }
    return Relabeling(std::move(image));
  }

  Relabeling relabeling_from_embedding(Quiver const& q, Embedding const& e) {
    return relabeling_with_prefix(q.vertex_count(), e.vertices);
  }

  Quiver relabel(Quiver const& q, Relabeling const& sigma) {
    if (sigma.size() != q.vertex_count()) {
      throw InvalidInput("relabeling size does not match the quiver");
    }
    Quiver result(q.vertex_count());
    for (auto const& a : q.arrows()) {
      result.add_arrow(a.id, sigma(a.source), sigma(a.target));
    }
    return result;
  }

  std::vector<Path> relabel_paths(Quiver const&            relabelled,
                                  std::vector<Path> const& paths,
                                  Relabeling const&        sigma) {
    std::vector<Path> result;
    result.reserve(paths.size());
    for (auto const& p : paths) {
      result.push_back(relabelled.path(sigma(p.source()), p.word()));
    }
    return result;
  }

}  // namespace bqalg
