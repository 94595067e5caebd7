#ifndef TAQUIN_JSON_IO_HPP
#define TAQUIN_JSON_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "taquin/dual_equivalence.hpp"
#include "taquin/ktheory.hpp"
#include "taquin/monodromy.hpp"
#include "taquin/partition.hpp"
#include "taquin/tableau.hpp"

namespace taquin {

using Json = nlohmann::ordered_json;

inline Json json_of(const Partition& p) { return Json(p.parts()); }

inline Json json_of(const Rectangle& r) {
  return Json{{"rows", r.rows}, {"cols", r.cols}};
}

inline Json json_of(const SkewShape& s) {
  return Json{{"inner", json_of(s.inner)}, {"outer", json_of(s.outer)}};
}

inline Json json_of(const SkewTableau& t) {
  Json chain = Json::array();
  for (const Partition& p : t.chain()) chain.push_back(json_of(p));
  return Json{{"chain", std::move(chain)}};
}

// A dual class serializes as its representative chain.
inline Json json_of(const DualClass& d) { return json_of(d.representative); }

inline Json json_of(const DEChain& chain) {
  Json classes = Json::array(), type = Json::array();
  for (const DualClass& d : chain.classes()) {
    classes.push_back(json_of(d));
    type.push_back(json_of(d.rectification_shape));
  }
  return Json{{"inner", json_of(chain.inner())},
              {"classes", std::move(classes)},
              {"outer", json_of(chain.outer())},
              {"type", std::move(type)}};
}

inline Json json_of(const IncreasingTableau& t) {
  return Json{{"inner", json_of(t.inner())}, {"rows", t.rows()}};
}

inline Json json_of(const OrbitReport& r) {
  return Json{{"set_size", r.set_size}, {"orbits", r.orbits}, {"sign", r.sign}};
}

inline Json json_of(const ParityReport& r) {
  return Json{{"alpha", json_of(r.alpha)}, {"beta", json_of(r.beta)},
              {"gamma", json_of(r.gamma)}, {"c", r.c},
              {"k", r.k},                  {"eta", r.eta},
              {"sign", r.sign},            {"chi", r.chi},
              {"ok", r.ok}};
}

inline Json json_of(const CoveringModel& m) {
  Json fibers = Json::array();
  for (const auto& fiber : m.fibers) {
    Json f = Json::array();
    for (const DEChain& chain : fiber) f.push_back(json_of(chain));
    fibers.push_back(std::move(f));
  }
  Json types = Json::array();
  for (const Partition& t : m.types) types.push_back(json_of(t));
  Json sh_arcs = Json::object(), esh_arcs = Json::object();
  for (const auto& [i, perm] : m.sh_arcs) sh_arcs[std::to_string(i)] = perm;
  for (const auto& [i, perm] : m.esh_arcs) esh_arcs[std::to_string(i)] = perm;
  return Json{{"rect", json_of(m.rect)},   {"types", std::move(types)},
              {"fibers", std::move(fibers)}, {"iota", m.iota},
              {"sh_arcs", std::move(sh_arcs)},
              {"esh_arcs", std::move(esh_arcs)}};
}

inline Partition partition_from_json(const Json& j) {
  detail::require(j.is_array(), "partition_from_json: expected an array");
  return Partition(j.get<std::vector<int>>());
}

inline SkewTableau tableau_from_json(const Json& j) {
  detail::require(j.is_object() && j.contains("chain"),
                  "tableau_from_json: expected {\"chain\": [...]}");
  std::vector<Partition> chain;
  for (const Json& p : j.at("chain")) chain.push_back(partition_from_json(p));
  return SkewTableau(std::move(chain));
}

inline IncreasingTableau increasing_from_json(const Json& j) {
  detail::require(j.is_object() && j.contains("inner") && j.contains("rows"),
                  "increasing_from_json: expected {\"inner\", \"rows\"}");
  return IncreasingTableau(partition_from_json(j.at("inner")),
                           j.at("rows").get<std::vector<std::vector<int>>>());
}

}  // namespace taquin

#endif
