#include "bqalg/render.hpp"

#include <map>
#include <sstream>

namespace bqalg {

  std::string render_module_quiver(Algebra const& a, ModuleSpec const& spec) {
    Quiver const&     q     = a.quiver();
    BasisIndex const& basis = a.basis();
    auto const        ids   = a.module_basis(spec);

    std::map<std::size_t, std::size_t> node;  // basis id -> node number
    for (std::size_t k = 0; k < ids.size(); ++k) {
      node.emplace(ids[k], k);
    }

    std::ostringstream os;
    os << "digraph \"" << spec.name() << "\" {\n";
    os << "  rankdir=TB;\n";
    os << "  node [shape=plaintext];\n";
    std::map<std::size_t, std::vector<std::size_t>> ranks;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      Path const& p = basis[ids[k]];
      os << "  n" << k << " [label=\"" << p.target() << "\"];\n";
      ranks[p.length()].push_back(k);
    }
    for (std::size_t k = 0; k < ids.size(); ++k) {
      Path const& p = basis[ids[k]];
      for (ArrowIndex x : q.out_arrows(p.target())) {
        auto const next = basis.extend(ids[k], x);
        if (!next) {
          continue;
        }
        auto it = node.find(*next);
        if (it != node.end()) {
          os << "  n" << k << " -> n" << it->second << " [label=\"" << q.arrow(x).id
             << "\"];\n";
        }
      }
    }
    for (auto const& [length, members] : ranks) {
      os << "  { rank=same;";
      for (auto k : members) {
        os << " n" << k << ';';
      }
      os << " }\n";
    }
    os << "}\n";
    return os.str();
  }

}  // namespace bqalg
