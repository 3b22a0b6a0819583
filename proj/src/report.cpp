#include "bqalg/report.hpp"

#include <cstdint>
#include <cstdio>

namespace bqalg {

  using nlohmann::json;

  std::string input_hash(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
  }

  json to_json(ExtNat x) {
    if (x.is_infinite()) {
      return "inf";
    }
    return x.value();
  }

  json vertex_map_json(VertexCounts const& counts) {
    json j = json::object();
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (counts[k] != 0) {
        j[std::to_string(k + 1)] = counts[k];
      }
    }
    return j;
  }

  json pdims_json(std::vector<ExtNat> const& pdims) {
    json j = json::object();
    for (std::size_t k = 0; k < pdims.size(); ++k) {
      j[std::to_string(k + 1)] = to_json(pdims[k]);
    }
    return j;
  }

  json to_json(Quiver const&, Resolution const& r) {
    json betti = json::array();
    for (auto const& degree : r.betti) {
      betti.push_back(vertex_map_json(degree));
    }
    return {{"betti", betti}, {"complete", r.complete}};
  }

  json to_json(Quiver const& q, Embedding const& e) {
    json arrows = json::array();
    for (auto a : e.arrows) {
      arrows.push_back(q.arrow(a).id);
    }
    json j = {{"vertices", e.vertices}, {"arrows", arrows}};
    if (e.cycle_arrow) {
      j["cycle_arrow"]  = q.arrow(e.cycle_arrow->arrow).id;
      j["return_index"] = e.cycle_arrow->return_index + 1;
    }
    return j;
  }

  json to_json(Quiver const& q, Certificate const& c) {
    json generators = json::array();
    for (auto const& g : c.ideal.generators()) {
      json word = json::array();
      for (auto a : g.word()) {
        word.push_back(q.arrow(a).id);
      }
      generators.push_back(word);
    }
    json j = {{"kind", to_string(c.kind)},
              {"m", c.m ? json(*c.m) : json(nullptr)},
              {"embedding", c.embedding ? to_json(q, *c.embedding) : json(nullptr)},
              {"relabeling", c.relabeling.image()},
              {"generators", generators},
              {"claimed_gldim", to_json(c.claimed_gldim)},
              {"verified_gldim", to_json(c.verified_gldim)}};
    return j;
  }

  json to_json(SqhReport const& r) {
    json vertices = json::array();
    for (auto const& v : r.vertices) {
      vertices.push_back({{"vertex", v.vertex},
                          {"r_projective_ok", v.r_projective_ok},
                          {"delta_factors_ok", v.delta_factors_ok},
                          {"hom_delta_ok", v.hom_delta_ok}});
    }
    return {{"verdict", r.verdict}, {"hom_delta_all", r.hom_delta_all}, {"vertices", vertices}};
  }

}  // namespace bqalg
