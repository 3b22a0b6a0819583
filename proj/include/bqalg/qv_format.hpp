#ifndef BQALG_QV_FORMAT_HPP_
#define BQALG_QV_FORMAT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "bqalg/quiver.hpp"

// The QV1 text format:
//
//   # comment (anything after '#' is ignored)
//   quiver 3
//   arrow a 1 2
//   arrow b 2 3
//   relations
//   rel a b          # the path "ba": first a, then b
//
// Relation words list arrow ids in traversal order.

namespace bqalg {

  struct QuiverFile {
    Quiver            quiver;
    std::vector<Path> relations;  // as written, not reduced
    bool              has_relations = false;

    bool operator==(QuiverFile const&) const = default;
  };

  // Throws ParseError (with a 1-based line number) on malformed input.
  [[nodiscard]] QuiverFile parse_qv(std::string_view text);

  // Normalized text: header comment, `quiver`, one `arrow` line per arrow in
  // index order, and a `relations` section when has_relations is set. Each
  // relation line carries its composition-order spelling as a comment.
  [[nodiscard]] std::string emit_qv(QuiverFile const& file);

  [[nodiscard]] bool is_identifier(std::string_view s) noexcept;

}  // namespace bqalg

#endif  // BQALG_QV_FORMAT_HPP_
