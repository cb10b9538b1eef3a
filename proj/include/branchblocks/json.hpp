#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <limits>
#include <vector>

#include "branchblocks/bigint.hpp"
#include "branchblocks/branching.hpp"
#include "branchblocks/characters.hpp"
#include "branchblocks/interlacing.hpp"
#include "branchblocks/tiling.hpp"
#include "branchblocks/weights.hpp"

namespace branchblocks {

// Integers are emitted as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that, so arbitrarily large counts survive the
// round trip through standard JSON parsers.
inline nlohmann::json json_int(const Int& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max())
    return value.convert_to<std::int64_t>();
  return value.str();
}

inline nlohmann::json json_int_array(const std::vector<Int>& values) {
  nlohmann::json out = nlohmann::json::array();
  for (const Int& v : values) out.push_back(json_int(v));
  return out;
}

inline nlohmann::json weight_json(const DominantWeight& w) {
  return {{"family", family_name(w.family())},
          {"rank", w.rank()},
          {"entries", json_int_array(w.entries())}};
}

inline nlohmann::json pattern_json(const InterlacingPattern& p) {
  return {{"top", json_int_array(p.top().entries())},
          {"middle", json_int_array(p.middle())},
          {"bottom", json_int_array(p.bottom().entries())}};
}

inline nlohmann::json path_json(const DirectedPath& p) {
  nlohmann::json out = nlohmann::json::array();
  for (Arrow a : p.arrows()) out.push_back(arrow_name(a));
  return out;
}

inline nlohmann::json sigma_json(const SigmaSequence& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [x, z] : s.blocks())
    out.push_back(nlohmann::json::array({json_int(x), json_int(z)}));
  return out;
}

// Blocks are [x, y, z] triples when the tiling carries middle values and
// [x, z] pairs when the middles are free.
inline nlohmann::json tiling_json(const Tiling& t) {
  nlohmann::json blocks = nlohmann::json::array();
  for (std::size_t j = 0; j < t.sigma.size(); ++j) {
    if (t.middle)
      blocks.push_back(nlohmann::json::array({json_int(t.sigma.x(j)),
                                              json_int((*t.middle)[j]),
                                              json_int(t.sigma.z(j))}));
    else
      blocks.push_back(nlohmann::json::array(
          {json_int(t.sigma.x(j)), json_int(t.sigma.z(j))}));
  }
  return {{"path", path_json(t.path)},
          {"blocks", blocks},
          {"lambda", json_int_array(t.lambda.entries())},
          {"mu", json_int_array(t.mu.entries())}};
}

// [[e1, ..., eN, coeff], ...] in lexicographically descending exponent
// order, matching the text form.
template <std::size_t N>
inline nlohmann::json polynomial_json(const LaurentPolynomial<N>& p) {
  nlohmann::json out = nlohmann::json::array();
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    nlohmann::json term = nlohmann::json::array();
    for (std::size_t i = 0; i < N; ++i) term.push_back(json_int(it->first[i]));
    term.push_back(json_int(it->second));
    out.push_back(term);
  }
  return out;
}

inline nlohmann::json branching_result_json(const BranchingResult& r) {
  return {{"source", weight_json(r.source)},
          {"target", weight_json(r.target)},
          {"multiplicity", json_int(r.multiplicity)},
          {"sigma", r.sigma ? sigma_json(*r.sigma) : nlohmann::json()},
          {"twist", r.twist ? json_int(*r.twist) : nlohmann::json()}};
}

inline nlohmann::json decomposition_json(const Decomposition& d) {
  nlohmann::json components = nlohmann::json::array();
  for (const BranchingResult& r : d.components)
    components.push_back(branching_result_json(r));
  return {{"source", weight_json(d.source)}, {"components", components}};
}

}  // namespace branchblocks
