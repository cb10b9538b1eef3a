#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <map>
#include <vector>

#include "branchblocks/branchblocks.hpp"
#include "oracles.hpp"

namespace bb = branchblocks;
using bb::Int;

TEST_CASE("two-step general linear branching multiplicity") {
  const bb::BranchingResult r =
      bb::gl_multiplicity(bb::gl_weight({8, 5, 2, 0}), bb::gl_weight({4, 1}));
  CHECK(r.multiplicity == 24);
  REQUIRE(r.sigma.has_value());
  CHECK(r.sigma->to_string() == "(8,5)(4,2)(1,0)");
  REQUIRE(r.twist.has_value());
  CHECK(*r.twist == -5);

  const bb::BranchingResult other =
      bb::gl_multiplicity(bb::gl_weight({8, 4, 1, 0}), bb::gl_weight({5, 2}));
  CHECK(other.multiplicity == 24);
  CHECK(other.sigma == r.sigma);
  CHECK(*other.twist == -7);
}

TEST_CASE("non-interlacing targets have multiplicity zero without blocks") {
  const bb::BranchingResult r =
      bb::gl_multiplicity(bb::gl_weight({1, 0}), bb::gl_weight({3}));
  CHECK(r.multiplicity == 0);
  CHECK_FALSE(r.sigma.has_value());
  CHECK_FALSE(r.twist.has_value());
  // Proper rank, still not doubly interlacing.
  const bb::BranchingResult s =
      bb::gl_multiplicity(bb::gl_weight({2, 1, 0}), bb::gl_weight({3}));
  CHECK(s.multiplicity == 0);
  CHECK_FALSE(s.sigma.has_value());
}

TEST_CASE("general linear multiplicities match the brute-force count") {
  oracles::for_each_gl_pair(
      4, 4, [&](const std::vector<Int>& lv, const std::vector<Int>& mv) {
        const bb::DominantWeight lambda = bb::gl_weight(lv);
        const bb::DominantWeight mu = bb::gl_weight(mv);
        INFO("lambda " << lambda.to_string() << " mu " << mu.to_string());
        CHECK(bb::gl_multiplicity(lambda, mu).multiplicity ==
              oracles::count_gl_middles(lv, mv));
      });
}

TEST_CASE("general linear decomposition lists positive targets in "
          "decreasing order") {
  const bb::Decomposition two = bb::gl_decompose(bb::gl_weight({1, 0}));
  REQUIRE(two.components.size() == 1);
  CHECK(two.components[0].target == bb::gl_weight({}));
  CHECK(two.components[0].multiplicity == 2);

  const bb::Decomposition one = bb::gl_decompose(bb::gl_weight({1, 1}));
  REQUIRE(one.components.size() == 1);
  CHECK(one.components[0].multiplicity == 1);

  const bb::Decomposition three = bb::gl_decompose(bb::gl_weight({2, 0}));
  REQUIRE(three.components.size() == 1);
  CHECK(three.components[0].multiplicity == 3);

  const bb::Decomposition tall = bb::gl_decompose(bb::gl_weight({2, 1, 1, 0}));
  REQUIRE(tall.components.size() > 1);
  for (std::size_t i = 0; i + 1 < tall.components.size(); ++i)
    CHECK(tall.components[i].target.entries() >
          tall.components[i + 1].target.entries());
  for (const bb::BranchingResult& r : tall.components)
    CHECK(r.multiplicity > 0);

  CHECK_THROWS_AS(bb::gl_decompose(bb::gl_weight({1})),
                  std::invalid_argument);
}

TEST_CASE("decompositions are complete: no positive target is missed") {
  oracles::for_each_partition(4, 3, [&](const std::vector<Int>& lv) {
    const bb::DominantWeight lambda = bb::gl_weight(lv);
    std::map<std::vector<Int>, Int> listed;
    for (const bb::BranchingResult& r : bb::gl_decompose(lambda).components)
      listed[r.target.entries()] = r.multiplicity;
    // Scan every candidate target over the same entry range.
    oracles::for_each_partition(2, 3, [&](const std::vector<Int>& mv) {
      const Int want = oracles::count_gl_middles(lv, mv);
      const auto it = listed.find(mv);
      INFO("lambda " << lambda.to_string() << " mu "
                     << bb::tuple_to_string(mv));
      if (it == listed.end()) {
        CHECK(want == 0);
      } else {
        CHECK(it->second == want);
      }
    });
  });
}

TEST_CASE("dimension bookkeeping survives a branching step") {
  CHECK(bb::gl_dimension(bb::gl_weight({1, 0})) == 2);
  CHECK(bb::gl_dimension(bb::gl_weight({})) == 1);
  CHECK(bb::gl_dimension(bb::gl_weight({2, 1, 0})) == 8);

  oracles::for_each_partition(4, 3, [&](const std::vector<Int>& lv) {
    const bb::DominantWeight lambda = bb::gl_weight(lv);
    INFO("lambda " << lambda.to_string());
    CHECK(bb::gl_dimension(lambda) == oracles::weyl_dimension(lv));
    // Branching to two ranks down preserves total dimension, with each
    // target weighted by its multiplicity.
    Int total = 0;
    for (const bb::BranchingResult& r : bb::gl_decompose(lambda).components)
      total += r.multiplicity * bb::gl_dimension(r.target);
    CHECK(total == bb::gl_dimension(lambda));
  });
}

TEST_CASE("symplectic branching delegates to the extended general linear "
          "pair") {
  const bb::BranchingResult a =
      bb::sp_multiplicity(bb::sp_weight({1, 0}), bb::sp_weight({0}));
  CHECK(a.multiplicity == 2);
  CHECK(a.source == bb::sp_weight({1, 0}));
  CHECK(a.target == bb::sp_weight({0}));
  REQUIRE(a.sigma.has_value());

  CHECK(bb::sp_multiplicity(bb::sp_weight({1, 1}), bb::sp_weight({1}))
            .multiplicity == 2);
  CHECK(bb::sp_multiplicity(bb::sp_weight({0, 0}), bb::sp_weight({0}))
            .multiplicity == 1);

  oracles::for_each_partition(3, 3, [&](const std::vector<Int>& lv) {
    const bb::DominantWeight lambda = bb::sp_weight(lv);
    oracles::for_each_partition(2, 3, [&](const std::vector<Int>& mv) {
      const bb::DominantWeight mu = bb::sp_weight(mv);
      INFO("lambda " << lambda.to_string() << " mu " << mu.to_string());
      CHECK(bb::sp_multiplicity(lambda, mu).multiplicity ==
            oracles::count_sp_arrays(lv, mv));
    });
  });
}

TEST_CASE("odd orthogonal branching matches the signed array count") {
  CHECK(bb::so_odd_multiplicity(bb::so_odd_weight({1, 0}),
                                bb::so_odd_weight({0}))
            .multiplicity == 2);
  CHECK(bb::so_odd_multiplicity(bb::so_odd_weight({0, 0}),
                                bb::so_odd_weight({0}))
            .multiplicity == 1);
  // The general case has no block factorization to report.
  const bb::BranchingResult general = bb::so_odd_multiplicity(
      bb::so_odd_weight({1, 1}), bb::so_odd_weight({1}));
  CHECK(general.multiplicity == 3);
  CHECK_FALSE(general.sigma.has_value());
  CHECK_FALSE(general.twist.has_value());

  oracles::for_each_partition(3, 3, [&](const std::vector<Int>& lv) {
    const bb::DominantWeight lambda = bb::so_odd_weight(lv);
    oracles::for_each_partition(2, 3, [&](const std::vector<Int>& mv) {
      const bb::DominantWeight mu = bb::so_odd_weight(mv);
      INFO("lambda " << lambda.to_string() << " mu " << mu.to_string());
      CHECK(bb::so_odd_multiplicity(lambda, mu).multiplicity ==
            oracles::count_so_odd_arrays(lv, mv));
    });
  });
}

TEST_CASE("even orthogonal branching matches the boundary array count") {
  CHECK(bb::so_even_multiplicity(bb::so_even_weight({1, 0, 0}),
                                 bb::so_even_weight({0, 0}))
            .multiplicity == 2);
  CHECK(bb::so_even_multiplicity(bb::so_even_weight({1, 1, 0}),
                                 bb::so_even_weight({1, 0}))
            .multiplicity == 2);
  CHECK(bb::so_even_multiplicity(bb::so_even_weight({0, 0}),
                                 bb::so_even_weight({0}))
            .multiplicity == 1);

  oracles::for_each_signed_partition(3, 3, [&](const std::vector<Int>& lv) {
    const bb::DominantWeight lambda = bb::so_even_weight(lv);
    oracles::for_each_signed_partition(2, 3, [&](const std::vector<Int>& mv) {
      const bb::DominantWeight mu = bb::so_even_weight(mv);
      INFO("lambda " << lambda.to_string() << " mu " << mu.to_string());
      CHECK(bb::so_even_multiplicity(lambda, mu).multiplicity ==
            oracles::count_so_even_arrays(lv, mv));
    });
  });
}

TEST_CASE("symplectic decomposition") {
  const bb::Decomposition d = bb::sp_decompose(bb::sp_weight({1, 0}));
  REQUIRE(d.components.size() == 2);
  CHECK(d.components[0].target == bb::sp_weight({1}));
  CHECK(d.components[0].multiplicity == 1);
  CHECK(d.components[1].target == bb::sp_weight({0}));
  CHECK(d.components[1].multiplicity == 2);
}

TEST_CASE("odd orthogonal decomposition") {
  const bb::Decomposition d = bb::so_odd_decompose(bb::so_odd_weight({0, 0}));
  REQUIRE(d.components.size() == 1);
  CHECK(d.components[0].target == bb::so_odd_weight({0}));
  CHECK(d.components[0].multiplicity == 1);
}

TEST_CASE("even orthogonal decomposition ranges over a signed last entry") {
  const bb::Decomposition d =
      bb::so_even_decompose(bb::so_even_weight({1, 0, 0}));
  REQUIRE(d.components.size() == 2);
  CHECK(d.components[0].target == bb::so_even_weight({1, 0}));
  CHECK(d.components[0].multiplicity == 1);
  CHECK(d.components[1].target == bb::so_even_weight({0, 0}));
  CHECK(d.components[1].multiplicity == 2);
}

TEST_CASE("non-linear decompositions are complete over naive target "
          "scans") {
  // Symplectic.
  oracles::for_each_partition(3, 2, [&](const std::vector<Int>& lv) {
    const bb::DominantWeight lambda = bb::sp_weight(lv);
    std::map<std::vector<Int>, Int> listed;
    for (const bb::BranchingResult& r : bb::sp_decompose(lambda).components)
      listed[r.target.entries()] = r.multiplicity;
    oracles::for_each_partition(2, 2, [&](const std::vector<Int>& mv) {
      const Int want = oracles::count_sp_arrays(lv, mv);
      const auto it = listed.find(mv);
      INFO("Sp lambda " << lambda.to_string() << " mu "
                        << bb::tuple_to_string(mv));
      CHECK((it == listed.end() ? Int(0) : it->second) == want);
    });
  });
  // Odd orthogonal.
  oracles::for_each_partition(3, 2, [&](const std::vector<Int>& lv) {
    const bb::DominantWeight lambda = bb::so_odd_weight(lv);
    std::map<std::vector<Int>, Int> listed;
    for (const bb::BranchingResult& r :
         bb::so_odd_decompose(lambda).components) {
      CHECK(r.multiplicity > 0);
      listed[r.target.entries()] = r.multiplicity;
    }
    oracles::for_each_partition(2, 2, [&](const std::vector<Int>& mv) {
      const Int want = oracles::count_so_odd_arrays(lv, mv);
      const auto it = listed.find(mv);
      INFO("SOodd lambda " << lambda.to_string() << " mu "
                           << bb::tuple_to_string(mv));
      CHECK((it == listed.end() ? Int(0) : it->second) == want);
    });
  });
  // Even orthogonal, with the signed last target entry.
  oracles::for_each_signed_partition(3, 2, [&](const std::vector<Int>& lv) {
    const bb::DominantWeight lambda = bb::so_even_weight(lv);
    std::map<std::vector<Int>, Int> listed;
    for (const bb::BranchingResult& r :
         bb::so_even_decompose(lambda).components) {
      CHECK(r.multiplicity > 0);
      listed[r.target.entries()] = r.multiplicity;
    }
    oracles::for_each_signed_partition(2, 2, [&](const std::vector<Int>& mv) {
      const Int want = oracles::count_so_even_arrays(lv, mv);
      const auto it = listed.find(mv);
      INFO("SOeven lambda " << lambda.to_string() << " mu "
                            << bb::tuple_to_string(mv));
      CHECK((it == listed.end() ? Int(0) : it->second) == want);
    });
  });
}

TEST_CASE("branching rejects weights from the wrong family or rank") {
  CHECK_THROWS_AS(
      bb::gl_multiplicity(bb::sp_weight({1, 0}), bb::gl_weight({})),
      std::invalid_argument);
  CHECK_THROWS_AS(
      bb::sp_multiplicity(bb::sp_weight({1, 0}), bb::sp_weight({1, 0})),
      std::invalid_argument);
  CHECK_THROWS_AS(
      bb::so_odd_multiplicity(bb::so_odd_weight({1, 0}), bb::sp_weight({0})),
      std::invalid_argument);
  CHECK_THROWS_AS(bb::sp_decompose(bb::gl_weight({1, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(bb::so_even_decompose(bb::so_even_weight({1})),
                  std::invalid_argument);
}
