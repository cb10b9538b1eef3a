#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "branchblocks/bigint.hpp"
#include "branchblocks/branching.hpp"
#include "branchblocks/characters.hpp"
#include "branchblocks/interlacing.hpp"
#include "branchblocks/tiling.hpp"
#include "branchblocks/weights.hpp"

namespace branchblocks {

// Result of one invariant sweep: how many cases were checked and, on
// failure, the first counterexample spelled out in full.
struct VerificationCheck {
  std::string name;
  long long cases = 0;
  bool passed = true;
  std::string counterexample;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;

  bool ok() const {
    for (const VerificationCheck& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

namespace detail {

// Visits every weakly decreasing nonnegative tuple of the given length
// with entries <= max_entry.
template <typename Fn>
void for_each_partition(std::size_t length, long long max_entry, Fn&& fn) {
  std::vector<Int> tuple(length);
  auto extend = [&](auto&& self, std::size_t i, long long hi) -> void {
    if (i == length) {
      fn(static_cast<const std::vector<Int>&>(tuple));
      return;
    }
    for (long long v = hi; v >= 0; --v) {
      tuple[i] = v;
      self(self, i + 1, v);
    }
  };
  extend(extend, 0, max_entry);
}

// Visits every dominant SO(2n) weight of the given rank with |entries| <=
// max_entry: weakly decreasing nonnegative tuples plus a sign choice on the
// last entry.
template <typename Fn>
void for_each_so_even_weight(std::size_t rank, long long max_entry, Fn&& fn) {
  for_each_partition(rank, max_entry, [&](const std::vector<Int>& tuple) {
    fn(tuple);
    if (tuple.back() != 0) {
      std::vector<Int> flipped = tuple;
      flipped.back() = -flipped.back();
      fn(static_cast<const std::vector<Int>&>(flipped));
    }
  });
}

struct SweepBounds {
  std::size_t max_path_rank;
  std::size_t bijection_rank;
  long long bijection_entry;
  std::size_t character_rank;
  long long character_entry;
  std::size_t dimension_rank;
  long long dimension_entry;
  std::size_t family_rank;
  long long family_entry;
  std::size_t tie_rank;
  long long tie_entry;
};

inline SweepBounds small_bounds() {
  return SweepBounds{8, 4, 3, 4, 3, 4, 3, 3, 3, 4, 2};
}

inline SweepBounds full_bounds() {
  return SweepBounds{12, 6, 6, 5, 6, 5, 4, 4, 4, 5, 3};
}

}  // namespace detail

// Runs every invariant sweep; `full` selects the larger bounds (the ones
// quoted in the README), the default keeps each check under a second.
inline VerificationReport run_verification(bool full) {
  const detail::SweepBounds bounds =
      full ? detail::full_bounds() : detail::small_bounds();
  VerificationReport report;

  auto fail = [](VerificationCheck& check, std::string counterexample) {
    if (!check.passed) return;
    check.passed = false;
    check.counterexample = std::move(counterexample);
  };

  // Path counts: |enumerate_paths(n)| = 2^(n-2).
  {
    VerificationCheck check{"path counts", 0, true, ""};
    for (std::size_t n = 2; n <= bounds.max_path_rank; ++n) {
      ++check.cases;
      const std::size_t expected = std::size_t(1) << (n - 2);
      const std::size_t got = enumerate_paths(n).size();
      if (got != expected) {
        fail(check, "n=" + std::to_string(n) + ": expected " +
                        std::to_string(expected) + " paths, got " +
                        std::to_string(got));
        break;
      }
    }
    report.checks.push_back(std::move(check));
  }

  // The closed form behind doubly_interlaces agrees with explicit
  // enumeration for arbitrary (not only interlacing) pairs.
  {
    VerificationCheck check{"double interlacing closed form", 0, true, ""};
    for (std::size_t n = 2; n <= bounds.bijection_rank && check.passed; ++n) {
      detail::for_each_partition(n, bounds.bijection_entry,
                                 [&](const std::vector<Int>& lv) {
        if (!check.passed) return;
        const DominantWeight lambda = gl_weight(lv);
        detail::for_each_partition(n - 2, bounds.bijection_entry,
                                   [&](const std::vector<Int>& mv) {
          if (!check.passed) return;
          ++check.cases;
          const DominantWeight mu = gl_weight(mv);
          const bool closed = doubly_interlaces(mu, lambda);
          const bool enumerated = !enumerate_middles(lambda, mu).empty();
          if (closed != enumerated)
            fail(check, "lambda=" + lambda.to_string() +
                            ", mu=" + mu.to_string() + ": closed form says " +
                            (closed ? "yes" : "no") +
                            ", enumeration says " +
                            (enumerated ? "yes" : "no"));
        });
      });
    }
    report.checks.push_back(std::move(check));
  }

  // The block product equals the number of middles, and every returned
  // sigma reproduces the multiplicity.
  {
    VerificationCheck check{"product vs enumeration", 0, true, ""};
    for (std::size_t n = 2; n <= bounds.bijection_rank && check.passed; ++n) {
      detail::for_each_partition(n, bounds.bijection_entry,
                                 [&](const std::vector<Int>& lv) {
        if (!check.passed) return;
        const DominantWeight lambda = gl_weight(lv);
        detail::for_each_partition(n - 2, bounds.bijection_entry,
                                   [&](const std::vector<Int>& mv) {
          if (!check.passed) return;
          const DominantWeight mu = gl_weight(mv);
          if (!doubly_interlaces(mu, lambda)) return;
          ++check.cases;
          const Int product = multiplicity_product(lambda, mu);
          const Int enumerated = Int(enumerate_middles(lambda, mu).size());
          if (product != enumerated) {
            fail(check, "lambda=" + lambda.to_string() +
                            ", mu=" + mu.to_string() + ": product " +
                            product.str() + ", enumeration " +
                            enumerated.str());
            return;
          }
          const BranchingResult r = gl_multiplicity(lambda, mu);
          if (!r.sigma || multiplicity_product(*r.sigma) != r.multiplicity)
            fail(check, "lambda=" + lambda.to_string() +
                            ", mu=" + mu.to_string() +
                            ": sigma does not reproduce the multiplicity");
        });
      });
    }
    report.checks.push_back(std::move(check));
  }

  // Bijection roundtrip in both directions, plus equal cardinality of the
  // two sides.
  {
    VerificationCheck check{"bijection roundtrips", 0, true, ""};
    for (std::size_t n = 2; n <= bounds.bijection_rank && check.passed; ++n) {
      detail::for_each_partition(n, bounds.bijection_entry,
                                 [&](const std::vector<Int>& lv) {
        if (!check.passed) return;
        const DominantWeight lambda = gl_weight(lv);
        detail::for_each_partition(n - 2, bounds.bijection_entry,
                                   [&](const std::vector<Int>& mv) {
          if (!check.passed) return;
          const DominantWeight mu = gl_weight(mv);
          if (!doubly_interlaces(mu, lambda)) return;
          const std::string where =
              "lambda=" + lambda.to_string() + ", mu=" + mu.to_string();
          // Forward: pattern -> blocks -> pattern is the identity.
          const std::vector<InterlacingPattern> patterns =
              enumerate_middles(lambda, mu);
          for (const InterlacingPattern& p : patterns) {
            ++check.cases;
            if (blocks_to_pattern(pattern_to_blocks(p), lambda, mu) != p) {
              fail(check, where + ", kappa=" + tuple_to_string(p.middle()) +
                              ": pattern does not survive the roundtrip");
              return;
            }
          }
          // Backward: every block filling survives, and the fillings are
          // exactly as numerous as the patterns.
          const SigmaSequence sigma = merge_sigma(lambda, mu);
          std::vector<GL2Block> blocks;
          for (std::size_t j = 0; j < sigma.size(); ++j)
            blocks.push_back(GL2Block{sigma.x(j), sigma.z(j), sigma.z(j)});
          Int fillings = 0;
          auto sweep = [&](auto&& self, std::size_t j) -> void {
            if (!check.passed) return;
            if (j == sigma.size()) {
              ++fillings;
              if (pattern_to_blocks(blocks_to_pattern(blocks, lambda, mu)) !=
                  blocks)
                fail(check,
                     where + ": block filling does not survive the roundtrip");
              return;
            }
            for (Int y = sigma.z(j); y <= sigma.x(j) && check.passed; ++y) {
              blocks[j].y = y;
              self(self, j + 1);
            }
          };
          sweep(sweep, 0);
          if (check.passed && fillings != Int(patterns.size()))
            fail(check, where + ": " + fillings.str() + " fillings vs " +
                            std::to_string(patterns.size()) + " patterns");
        });
      });
    }
    report.checks.push_back(std::move(check));
  }

  // The two character constructions agree, evaluate to the multiplicity at
  // t1 = t2 = 1, and restrict to the predicted SL(2) product.
  {
    VerificationCheck identity{"character identity", 0, true, ""};
    VerificationCheck restriction{"sl2 restriction", 0, true, ""};
    for (std::size_t n = 2; n <= bounds.character_rank; ++n) {
      if (!identity.passed && !restriction.passed) break;
      detail::for_each_partition(n, bounds.character_entry,
                                 [&](const std::vector<Int>& lv) {
        if (!identity.passed && !restriction.passed) return;
        const DominantWeight lambda = gl_weight(lv);
        detail::for_each_partition(n - 2, bounds.character_entry,
                                   [&](const std::vector<Int>& mv) {
          if (!identity.passed && !restriction.passed) return;
          const DominantWeight mu = gl_weight(mv);
          if (!doubly_interlaces(mu, lambda)) return;
          const std::string where =
              "lambda=" + lambda.to_string() + ", mu=" + mu.to_string();
          const LaurentPolynomial<2> factored = factored_character(lambda, mu);
          if (identity.passed) {
            ++identity.cases;
            const LaurentPolynomial<2> direct =
                branching_character(lambda, mu);
            if (direct != factored)
              fail(identity, where + ": direct form " + direct.to_string() +
                                 " vs factored form " + factored.to_string());
            else if (factored.evaluate({1, 1}) !=
                     multiplicity_product(lambda, mu))
              fail(identity,
                   where + ": evaluation at (1,1) misses the multiplicity");
          }
          if (restriction.passed) {
            ++restriction.cases;
            LaurentPolynomial<1> expected = LaurentPolynomial<1>::constant(1);
            const SigmaSequence sigma = merge_sigma(lambda, mu);
            for (const auto& [x, z] : sigma.blocks())
              expected *= sl2_character(x - z);
            if (restrict_to_sl2(factored) != expected)
              fail(restriction,
                   where + ": restriction differs from the SL(2) product");
          }
        });
      });
    }
    report.checks.push_back(std::move(identity));
    report.checks.push_back(std::move(restriction));
  }

  // Dimensions add up: sum over targets of mult * dim(target) = dim(source).
  {
    VerificationCheck check{"dimension bookkeeping", 0, true, ""};
    for (std::size_t n = 2; n <= bounds.dimension_rank && check.passed; ++n) {
      detail::for_each_partition(n, bounds.dimension_entry,
                                 [&](const std::vector<Int>& lv) {
        if (!check.passed) return;
        ++check.cases;
        const DominantWeight lambda = gl_weight(lv);
        Int total = 0;
        for (const BranchingResult& r : gl_decompose(lambda).components)
          total += r.multiplicity * gl_dimension(r.target);
        const Int expected = gl_dimension(lambda);
        if (total != expected)
          fail(check, "lambda=" + lambda.to_string() + ": sum " + total.str() +
                          " vs dimension " + expected.str());
      });
    }
    report.checks.push_back(std::move(check));
  }

  // Two single steps compose to the double step.
  {
    VerificationCheck check{"one-step consistency", 0, true, ""};
    for (std::size_t n = 2; n <= bounds.dimension_rank && check.passed; ++n) {
      detail::for_each_partition(n, bounds.dimension_entry,
                                 [&](const std::vector<Int>& lv) {
        if (!check.passed) return;
        const DominantWeight lambda = gl_weight(lv);
        const auto steps = one_step_branch(lambda);
        detail::for_each_partition(n - 2, bounds.dimension_entry,
                                   [&](const std::vector<Int>& mv) {
          if (!check.passed) return;
          ++check.cases;
          const DominantWeight mu = gl_weight(mv);
          Int via_steps = 0;
          for (const auto& step : steps)
            if (interlaces(mu, step.first)) ++via_steps;
          const Int direct = gl_multiplicity(lambda, mu).multiplicity;
          if (via_steps != direct)
            fail(check, "lambda=" + lambda.to_string() +
                            ", mu=" + mu.to_string() + ": two steps give " +
                            via_steps.str() + ", one double step gives " +
                            direct.str());
        });
      });
    }
    report.checks.push_back(std::move(check));
  }

  // Sp delegates to GL and both match the definitional array count.
  {
    VerificationCheck check{"sp bridge", 0, true, ""};
    for (std::size_t n = 2; n <= bounds.family_rank && check.passed; ++n) {
      detail::for_each_partition(n, bounds.family_entry,
                                 [&](const std::vector<Int>& lv) {
        if (!check.passed) return;
        const DominantWeight lambda = sp_weight(lv);
        detail::for_each_partition(n - 1, bounds.family_entry,
                                   [&](const std::vector<Int>& mv) {
          if (!check.passed) return;
          ++check.cases;
          const DominantWeight mu = sp_weight(mv);
          const BranchingResult r = sp_multiplicity(lambda, mu);
          std::vector<Int> extended = lv;
          extended.push_back(0);
          const Int via_gl =
              gl_multiplicity(gl_weight(extended), gl_weight(mv)).multiplicity;
          const Int direct = detail::sp_direct_count(lv, mv);
          const std::string where =
              "lambda=" + lambda.to_string() + ", mu=" + mu.to_string();
          if (r.multiplicity != via_gl || r.multiplicity != direct)
            fail(check, where + ": result " + r.multiplicity.str() +
                            ", GL " + via_gl.str() + ", array " +
                            direct.str());
          else if (r.sigma &&
                   multiplicity_product(*r.sigma) != r.multiplicity)
            fail(check, where + ": sigma does not reproduce the multiplicity");
        });
      });
    }
    report.checks.push_back(std::move(check));
  }

  // SO results (reduction or not) match the definitional array counts.
  {
    VerificationCheck check{"so reductions", 0, true, ""};
    for (std::size_t n = 2; n <= bounds.family_rank && check.passed; ++n) {
      detail::for_each_partition(n, bounds.family_entry,
                                 [&](const std::vector<Int>& lv) {
        if (!check.passed) return;
        const DominantWeight lambda = so_odd_weight(lv);
        detail::for_each_partition(n - 1, bounds.family_entry,
                                   [&](const std::vector<Int>& mv) {
          if (!check.passed) return;
          ++check.cases;
          const DominantWeight mu = so_odd_weight(mv);
          const BranchingResult r = so_odd_multiplicity(lambda, mu);
          const Int direct = detail::so_odd_direct_count(lv, mv);
          if (r.multiplicity != direct)
            fail(check, "SO(2n+1): lambda=" + lambda.to_string() +
                            ", mu=" + mu.to_string() + ": result " +
                            r.multiplicity.str() + ", array " + direct.str());
        });
      });
      detail::for_each_so_even_weight(n, bounds.family_entry,
                                      [&](const std::vector<Int>& lv) {
        if (!check.passed) return;
        const DominantWeight lambda = so_even_weight(lv);
        detail::for_each_so_even_weight(n - 1, bounds.family_entry,
                                        [&](const std::vector<Int>& mv) {
          if (!check.passed) return;
          ++check.cases;
          const DominantWeight mu = so_even_weight(mv);
          const BranchingResult r = so_even_multiplicity(lambda, mu);
          const Int direct = detail::so_even_direct_count(lv, mv);
          if (r.multiplicity != direct)
            fail(check, "SO(2n): lambda=" + lambda.to_string() +
                            ", mu=" + mu.to_string() + ": result " +
                            r.multiplicity.str() + ", array " + direct.str());
        });
      });
    }
    report.checks.push_back(std::move(check));
  }

  // The canonical path reproduces its rows.
  {
    VerificationCheck check{"canonical rows", 0, true, ""};
    for (std::size_t n = 2; n <= bounds.tie_rank && check.passed; ++n) {
      detail::for_each_partition(n, bounds.tie_entry,
                                 [&](const std::vector<Int>& lv) {
        if (!check.passed) return;
        const DominantWeight lambda = gl_weight(lv);
        detail::for_each_partition(n - 2, bounds.tie_entry,
                                   [&](const std::vector<Int>& mv) {
          if (!check.passed) return;
          const DominantWeight mu = gl_weight(mv);
          if (!doubly_interlaces(mu, lambda)) return;
          ++check.cases;
          const Tiling t = path_to_tiling(canonical_path(lambda, mu),
                                          merge_sigma(lambda, mu));
          if (t.lambda != lambda || t.mu != mu)
            fail(check, "lambda=" + lambda.to_string() +
                            ", mu=" + mu.to_string() +
                            ": canonical tiling has rows " +
                            t.lambda.to_string() + ", " + t.mu.to_string());
        });
      });
    }
    report.checks.push_back(std::move(check));
  }

  // Ties: for every sigma, paths that produce equal rows produce equal
  // tilings value-for-value, the canonical path lands in the right class,
  // and canonical_path is deterministic.
  {
    VerificationCheck check{"tie degeneracy", 0, true, ""};
    for (std::size_t n = 2; n <= bounds.tie_rank && check.passed; ++n) {
      const std::vector<DirectedPath> paths = enumerate_paths(n);
      detail::for_each_partition(2 * n - 2, bounds.tie_entry,
                                 [&](const std::vector<Int>& chain) {
        if (!check.passed) return;
        ++check.cases;
        const SigmaSequence sigma = SigmaSequence::from_flat(chain);
        std::map<std::pair<std::vector<Int>, std::vector<Int>>,
                 std::vector<Tiling>>
            by_rows;
        for (const DirectedPath& path : paths) {
          Tiling t = path_to_tiling(path, sigma);
          by_rows[{t.lambda.entries(), t.mu.entries()}].push_back(
              std::move(t));
        }
        for (const auto& [rows, tilings] : by_rows) {
          const std::string where =
              "sigma=" + sigma.to_string() + ", rows " +
              tuple_to_string(rows.first) + ", " + tuple_to_string(rows.second);
          for (const Tiling& t : tilings) {
            if (t.sigma != tilings.front().sigma ||
                t.lambda != tilings.front().lambda ||
                t.mu != tilings.front().mu) {
              fail(check, where + ": tilings differ across tied paths");
              return;
            }
          }
          const DirectedPath canonical =
              canonical_path(tilings.front().lambda, tilings.front().mu);
          if (!(canonical ==
                canonical_path(tilings.front().lambda, tilings.front().mu))) {
            fail(check, where + ": canonical_path is not deterministic");
            return;
          }
          bool found = false;
          for (const Tiling& t : tilings)
            if (t.path == canonical) found = true;
          if (!found) {
            fail(check, where + ": canonical path is not among the paths "
                                "producing these rows");
            return;
          }
        }
      });
    }
    report.checks.push_back(std::move(check));
  }

  return report;
}

}  // namespace branchblocks
