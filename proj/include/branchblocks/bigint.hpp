#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace branchblocks {

// Arbitrary-precision integer used for weight entries, exponents,
// coefficients and counts. Multiplicities are products over blocks and
// dimension counts grow combinatorially; fixed-width integers would
// silently overflow.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;

inline std::string to_string(const Int& value) { return value.str(); }

// Renders an integer tuple as "(8,5,2,0)"; the empty tuple as "()".
inline std::string tuple_to_string(const std::vector<Int>& entries) {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out += ',';
    out += entries[i].str();
  }
  out += ')';
  return out;
}

}  // namespace branchblocks
