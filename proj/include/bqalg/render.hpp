#ifndef BQALG_RENDER_HPP_
#define BQALG_RENDER_HPP_

#include <string>

#include "bqalg/module_spec.hpp"
#include "bqalg/monomial.hpp"

namespace bqalg {

  // Graphviz DOT for the quiver of the module M(i, S) with respect to its
  // path basis: one node per basis path, labelled with the path's target
  // vertex, and an edge labelled a from p to pa whenever pa is again a basis
  // path. Nodes are emitted in canonical basis order and ranked by length.
  [[nodiscard]] std::string render_module_quiver(Algebra const& a, ModuleSpec const& spec);

}  // namespace bqalg

#endif  // BQALG_RENDER_HPP_
