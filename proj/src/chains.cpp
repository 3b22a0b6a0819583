#include "bqalg/chains.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bqalg/constructions.hpp"
#include "bqalg/error.hpp"

namespace bqalg {

  std::vector<Path> chain_successors(Algebra const& a, Path const& g) {
    if (g.is_trivial()) {
      throw InvalidInput("chain successors need a path of length >= 1");
    }
    if (a.is_zero_path(g)) {
      throw InvalidInput("chain successors need a nonzero path");
    }
    Quiver const& q = a.quiver();
    Word const&   w = g.word();

    std::set<Word> candidates;
    for (auto const& rho : a.relations().generators()) {
      Word const& r = rho.word();
      for (std::size_t split = 1; split < r.size(); ++split) {
        // u = r[0, split) must be a suffix of w
        if (split > w.size()
            || !std::equal(r.begin(), r.begin() + split, w.end() - split)) {
          continue;
        }
        Word v(r.begin() + split, r.end());
        if (!a.is_zero_word(g.target(), v)) {
          candidates.insert(std::move(v));
        }
      }
    }

    std::vector<Path> result;
    for (auto const& v : candidates) {
      bool const has_shorter_prefix
          = std::any_of(candidates.begin(), candidates.end(), [&v](Word const& u) {
              return u.size() < v.size() && std::equal(u.begin(), u.end(), v.begin());
            });
      if (!has_shorter_prefix) {
        result.push_back(q.path(g.target(), v));
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  namespace {

    // Lazily explored chain graph of one algebra.
    class ChainGraph {
     public:
      explicit ChainGraph(Algebra const& a) : _a(a) {}

      std::vector<Path> const& successors(Path const& g) {
        auto it = _succ.find(g.word());
        if (it == _succ.end()) {
          it = _succ.emplace(g.word(), chain_successors(_a, g)).first;
        }
        return it->second;
      }

      // Longest walk (in edges) from g, or nullopt if a cycle is reachable.
      // On a cycle, `cycle` receives its nodes.
      std::optional<std::size_t> height(Path const& g, std::vector<Path>& cycle) {
        auto done = _height.find(g.word());
        if (done != _height.end()) {
          return done->second;
        }
        if (_on_stack.count(g.word()) != 0) {
          auto start = std::find(_stack.begin(), _stack.end(), g);
          cycle.assign(start, _stack.end());
          return std::nullopt;
        }
        _on_stack.insert(g.word());
        _stack.push_back(g);
        std::size_t best = 0;
        auto const& next = successors(g);
        for (auto const& p : next) {
          auto h = height(p, cycle);
          if (!h) {
            return std::nullopt;
          }
          best = std::max(best, *h + 1);
        }
        _stack.pop_back();
        _on_stack.erase(g.word());
        _height.emplace(g.word(), best);
        return best;
      }

      void clear_stack() {
        _stack.clear();
        _on_stack.clear();
      }

     private:
      Algebra const&                      _a;
      std::map<Word, std::vector<Path>>   _succ;
      std::map<Word, std::size_t>         _height;
      std::set<Word>                      _on_stack;
      std::vector<Path>                   _stack;
    };

    std::vector<Path> level_one(Algebra const& a, ModuleSpec const& spec) {
      std::vector<Path> result;
      for (ArrowIndex x : spec.killed()) {
        result.push_back(a.quiver().path({x}));
      }
      return result;
    }

    // pdim, plus a cycle witness when infinite.
    ExtNat pdim_with_witness(Algebra const&     a,
                             ModuleSpec const&  spec,
                             ChainGraph&        graph,
                             std::vector<Path>& cycle) {
      auto const first = level_one(a, spec);
      if (first.empty()) {
        return 0;
      }
      std::size_t best = 0;
      for (auto const& g : first) {
        auto h = graph.height(g, cycle);
        if (!h) {
          graph.clear_stack();
          return ExtNat::infinity();
        }
        best = std::max(best, *h);
      }
      return best + 1;
    }

  }  // namespace

  Resolution resolve(Algebra const& a, ModuleSpec const& spec, std::optional<std::size_t> max_deg) {
    (void) a.basis();  // admissibility precondition
    ChainGraph graph(a);
    if (!max_deg) {
      std::vector<Path> cycle;
      if (pdim_with_witness(a, spec, graph, cycle).is_infinite()) {
        std::string nodes;
        for (auto const& p : cycle) {
          nodes += " [" + a.quiver().word_to_string(p.word()) + "]";
        }
        throw InfiniteResolutionError("resolution of " + spec.name()
                                      + " is infinite; chain graph cycle:" + nodes);
      }
    }

    std::size_t const n = a.quiver().vertex_count();
    Resolution        res;
    res.betti.emplace_back(n, 0);
    res.betti[0][spec.vertex() - 1] = 1;

    std::map<Path, std::int64_t> level;
    for (auto const& g : level_one(a, spec)) {
      level[g] += 1;
    }
    std::size_t degree = 1;
    while (!level.empty()) {
      if (max_deg && degree > *max_deg) {
        res.complete = false;
        break;
      }
      VertexCounts betti(n, 0);
      std::map<Path, std::int64_t> next;
      for (auto const& [g, count] : level) {
        betti[g.target() - 1] += count;
        for (auto const& p : graph.successors(g)) {
          next[p] += count;
        }
      }
      res.betti.push_back(std::move(betti));
      level = std::move(next);
      ++degree;
    }
    return res;
  }

  ExtNat pdim(Algebra const& a, ModuleSpec const& spec) {
    (void) a.basis();
    ChainGraph        graph(a);
    std::vector<Path> cycle;
    return pdim_with_witness(a, spec, graph, cycle);
  }

  std::vector<ExtNat> simple_pdims(Algebra const& a) {
    (void) a.basis();
    Quiver const&       q = a.quiver();
    ChainGraph          graph(a);
    std::vector<ExtNat> result;
    for (Vertex i = 1; i <= q.vertex_count(); ++i) {
      std::vector<Path> cycle;
      result.push_back(pdim_with_witness(a, ModuleSpec::simple(q, i), graph, cycle));
    }
    return result;
  }

  ExtNat gldim(Algebra const& a) {
    ExtNat best = 0;
    for (auto const& d : simple_pdims(a)) {
      best = std::max(best, d);
    }
    return best;
  }

  bool euler_characteristic_holds(Algebra const& a, ModuleSpec const& spec, Resolution const& res) {
    if (!res.complete) {
      return false;
    }
    Quiver const& q = a.quiver();
    std::size_t const n = q.vertex_count();
    std::vector<VertexCounts> proj;
    for (Vertex v = 1; v <= n; ++v) {
      proj.push_back(a.composition_vector(ModuleSpec::projective(q, v)));
    }
    VertexCounts sum(n, 0);
    for (std::size_t d = 0; d < res.betti.size(); ++d) {
      std::int64_t const sign = d % 2 == 0 ? 1 : -1;
      for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u = 0; u < n; ++u) {
          sum[u] += sign * res.betti[d][v] * proj[v][u];
        }
      }
    }
    return sum == a.composition_vector(spec);
  }

  Prop1Report verify_prop1_formula(Algebra const& a) {
    Quiver const& q = a.quiver();
    if (a.relations() != build_I(q)) {
      throw InvalidInput("verify_prop1_formula needs the local-maximum ideal of the quiver");
    }
    std::size_t const n = q.vertex_count();
    Prop1Report       report;
    for (Vertex i = 1; i <= n; ++i) {
      std::vector<VertexCounts> expected(3, VertexCounts(n, 0));
      expected[0][i - 1] = 1;
      for (Vertex j = 1; j <= n; ++j) {
        if (j == i) {
          continue;
        }
        auto const rij = static_cast<std::int64_t>(q.r(i, j));
        expected[1][j - 1] += rij;
        if (j > i) {
          for (Vertex k = 1; k < j; ++k) {
            expected[2][k - 1] += rij * static_cast<std::int64_t>(q.r(j, k));
          }
        }
      }
      Resolution const got = resolve(a, ModuleSpec::simple(q, i), 3);
      for (std::size_t d = 0; d <= 3; ++d) {
        for (Vertex v = 1; v <= n; ++v) {
          std::int64_t const want = d < 3 ? expected[d][v - 1] : 0;
          std::int64_t const have = d < got.betti.size() ? got.betti[d][v - 1] : 0;
          if (want != have) {
            report.mismatches.push_back({i, d, v, want, have});
          }
        }
      }
      if (!got.complete) {
        report.mismatches.push_back({i, 4, 0, 0, 1});
      }
    }
    return report;
  }

}  // namespace bqalg
