#ifndef BQALG_REPORT_HPP_
#define BQALG_REPORT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bqalg/chains.hpp"
#include "bqalg/constructions.hpp"
#include "bqalg/ext_nat.hpp"
#include "bqalg/sqh.hpp"

// JSON building blocks of the machine-readable reports. Integers stay
// integers; infinity is the string "inf"; vertex-keyed maps use decimal
// vertex labels as keys and omit zero entries.

namespace bqalg {

  // "fnv1a64:" followed by 16 hex digits of the FNV-1a hash of the input.
  [[nodiscard]] std::string input_hash(std::string_view bytes);

  [[nodiscard]] nlohmann::json to_json(ExtNat x);
  [[nodiscard]] nlohmann::json vertex_map_json(VertexCounts const& counts);
  [[nodiscard]] nlohmann::json pdims_json(std::vector<ExtNat> const& pdims);
  [[nodiscard]] nlohmann::json to_json(Quiver const& q, Resolution const& r);
  [[nodiscard]] nlohmann::json to_json(Quiver const& q, Embedding const& e);
  [[nodiscard]] nlohmann::json to_json(Quiver const& q, Certificate const& c);
  [[nodiscard]] nlohmann::json to_json(SqhReport const& r);

}  // namespace bqalg

#endif  // BQALG_REPORT_HPP_
