#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <string>

#include "branchblocks/branchblocks.hpp"

namespace bb = branchblocks;
using bb::Int;
using nlohmann::json;

TEST_CASE("integers stay numbers up to 64 bits and become strings beyond") {
  CHECK(bb::json_int(Int(24)) == json(24));
  CHECK(bb::json_int(Int(-5)) == json(-5));
  CHECK(bb::json_int(Int(std::numeric_limits<std::int64_t>::max())) ==
        json(std::numeric_limits<std::int64_t>::max()));
  const Int huge = Int(1) << 70;
  const json encoded = bb::json_int(huge);
  REQUIRE(encoded.is_string());
  CHECK(encoded.get<std::string>() == huge.str());
  const Int negated = -huge;
  CHECK(bb::json_int(negated).get<std::string>() == negated.str());
}

TEST_CASE("weight encoding carries family, rank and entries") {
  const json w = bb::weight_json(bb::gl_weight({8, 5, 2, 0}));
  CHECK(w["family"] == "GL");
  CHECK(w["rank"] == 4);
  CHECK(w["entries"] == json::array({8, 5, 2, 0}));
  CHECK(bb::weight_json(bb::so_even_weight({2, -1}))["family"] == "SOeven");
  CHECK(bb::weight_json(bb::gl_weight({}))["entries"] == json::array());
}

TEST_CASE("pattern encoding lists the three rows") {
  const json p = bb::pattern_json(bb::InterlacingPattern(
      bb::gl_weight({8, 5, 2, 0}), {6, 4, 1}, bb::gl_weight({4, 1})));
  CHECK(p["top"] == json::array({8, 5, 2, 0}));
  CHECK(p["middle"] == json::array({6, 4, 1}));
  CHECK(p["bottom"] == json::array({4, 1}));
}

TEST_CASE("tilings encode blocks as pairs without middles and triples "
          "with them") {
  const bb::InterlacingPattern pattern(bb::gl_weight({8, 5, 2, 0}), {6, 4, 1},
                                       bb::gl_weight({4, 1}));
  const json filled = bb::tiling_json(bb::tile_pattern(pattern));
  CHECK(filled["path"] == json::array({"HU", "UR", "UR"}));
  CHECK(filled["blocks"] ==
        json::array({{8, 6, 5}, {4, 4, 2}, {1, 1, 0}}));
  CHECK(filled["lambda"] == json::array({8, 5, 2, 0}));
  CHECK(filled["mu"] == json::array({4, 1}));

  const json open = bb::tiling_json(bb::path_to_tiling(
      bb::canonical_path(bb::gl_weight({8, 5, 2, 0}), bb::gl_weight({4, 1})),
      bb::merge_sigma(bb::gl_weight({8, 5, 2, 0}), bb::gl_weight({4, 1}))));
  CHECK(open["blocks"] == json::array({{8, 5}, {4, 2}, {1, 0}}));
}

TEST_CASE("polynomial encoding is exponent-descending rows of exponents "
          "plus coefficient") {
  CHECK(bb::polynomial_json(bb::gl2_character(1, 0)) ==
        json::array({{1, 0, 1}, {0, 1, 1}}));
  CHECK(bb::polynomial_json(bb::sl2_character(1)) ==
        json::array({{1, 1}, {-1, 1}}));
  CHECK(bb::polynomial_json(bb::LaurentPolynomial<2>()) == json::array());
}

TEST_CASE("branching results encode absent blocks as null") {
  const json with = bb::branching_result_json(
      bb::gl_multiplicity(bb::gl_weight({8, 5, 2, 0}), bb::gl_weight({4, 1})));
  CHECK(with["multiplicity"] == 24);
  CHECK(with["twist"] == -5);
  CHECK(with["sigma"] == json::array({{8, 5}, {4, 2}, {1, 0}}));
  CHECK(with["source"]["rank"] == 4);

  const json without = bb::branching_result_json(bb::so_odd_multiplicity(
      bb::so_odd_weight({1, 1}), bb::so_odd_weight({1})));
  CHECK(without["multiplicity"] == 3);
  CHECK(without["sigma"].is_null());
  CHECK(without["twist"].is_null());
}

TEST_CASE("decomposition encoding nests the component results") {
  const json d = bb::decomposition_json(bb::sp_decompose(bb::sp_weight({1, 0})));
  CHECK(d["source"]["family"] == "Sp");
  REQUIRE(d["components"].size() == 2);
  CHECK(d["components"][0]["target"]["entries"] == json::array({1}));
  CHECK(d["components"][0]["multiplicity"] == 1);
  CHECK(d["components"][1]["multiplicity"] == 2);
}

TEST_CASE("path encoding uses the two-letter arrow names") {
  CHECK(bb::path_json(bb::DirectedPath(
            {bb::Arrow::DR, bb::Arrow::DR, bb::Arrow::HU})) ==
        json::array({"DR", "DR", "HU"}));
}
