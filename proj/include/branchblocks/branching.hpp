#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "branchblocks/bigint.hpp"
#include "branchblocks/characters.hpp"
#include "branchblocks/interlacing.hpp"
#include "branchblocks/tiling.hpp"
#include "branchblocks/weights.hpp"

namespace branchblocks {

// Result of one branching query. sigma and twist are present exactly when
// the multiplicity space has a GL(2)-block factorization: always for GL and
// Sp, and for SO only in the reduction cases that delegate to GL.
struct BranchingResult {
  DominantWeight source;
  DominantWeight target;
  Int multiplicity;
  std::optional<SigmaSequence> sigma;
  std::optional<Int> twist;

  friend bool operator==(const BranchingResult&, const BranchingResult&) =
      default;
};

// Full isotypic decomposition: every target with positive multiplicity,
// targets pairwise distinct in lexicographically decreasing order.
struct Decomposition {
  DominantWeight source;
  std::vector<BranchingResult> components;
};

namespace detail {

inline void require_family(const DominantWeight& w, Family family,
                           const char* role) {
  if (w.family() != family)
    throw std::invalid_argument(std::string(role) + " must be a " +
                                family_name(family) + " weight, got " +
                                w.group().name());
}

inline void require_rank_gap(const DominantWeight& lambda,
                             const DominantWeight& mu, std::size_t gap,
                             const char* op) {
  if (mu.rank() + gap != lambda.rank())
    throw std::invalid_argument(
        std::string(op) + ": mu must have rank " + std::to_string(gap) +
        " less than lambda (got " + std::to_string(mu.rank()) + " and " +
        std::to_string(lambda.rank()) + ")");
}

// Definitional count of the Sp(2n) -> Sp(2n-2) interlacing array: kappa has
// n entries with
//   lambda_j >= kappa_j             (j = 1..n)
//   kappa_j >= lambda_{j+1}         (j = 1..n-1)
//   kappa_j >= mu_j                 (j = 1..n-1)
//   mu_{j-1} >= kappa_j             (j = 2..n)
//   kappa_n >= 0.
// Used as the debug-mode oracle for sp_multiplicity.
inline Int sp_direct_count(const std::vector<Int>& lambda,
                           const std::vector<Int>& mu) {
  const std::size_t n = lambda.size();
  Int count = 0;
  auto extend = [&](auto&& self, std::size_t j) -> void {
    if (j == n) {
      ++count;
      return;
    }
    Int hi = lambda[j];
    if (j >= 1 && mu[j - 1] < hi) hi = mu[j - 1];
    Int lo = 0;
    if (j + 1 < n && lambda[j + 1] > lo) lo = lambda[j + 1];
    if (j < mu.size() && mu[j] > lo) lo = mu[j];
    for (Int v = hi; v >= lo; --v) {
      (void)v;
      self(self, j + 1);
    }
  };
  extend(extend, 0);
  return count;
}

// Definitional count of the SO(2n+1) -> SO(2n-1) array: kappa is
// SO(2n)-dominant, so kappa_n may be negative and |kappa_n| sits in the
// array. For each choice of kappa_1..kappa_{n-1} the last slot contributes
// one kappa for every value with |kappa_n| <= min(lambda_n, mu_{n-1}).
inline Int so_odd_direct_count(const std::vector<Int>& lambda,
                               const std::vector<Int>& mu) {
  const std::size_t n = lambda.size();
  Int count = 0;
  auto extend = [&](auto&& self, std::size_t j) -> void {
    if (j == n - 1) {
      Int cap = lambda[n - 1] < mu[n - 2] ? lambda[n - 1] : mu[n - 2];
      if (cap >= 0) count += 2 * cap + 1;
      return;
    }
    Int hi = lambda[j];
    if (j >= 1 && mu[j - 1] < hi) hi = mu[j - 1];
    Int lo = lambda[j + 1];
    if (mu[j] > lo) lo = mu[j];
    for (Int v = hi; v >= lo; --v) {
      (void)v;
      self(self, j + 1);
    }
  };
  extend(extend, 0);
  return count;
}

// Definitional count of the SO(2n) -> SO(2n-2) array: kappa is
// SO(2n-1)-dominant (all entries nonnegative) and the boundary slots hold
// |lambda_n| and |mu_{n-1}|:
//   lambda_j >= kappa_j                  (j = 1..n-1)
//   kappa_j >= lambda_{j+1}              (j = 1..n-2), kappa_{n-1} >= |lambda_n|
//   kappa_j >= mu_j                      (j = 1..n-2), kappa_{n-1} >= |mu_{n-1}|
//   mu_{j-1} >= kappa_j                  (j = 2..n-1).
inline Int so_even_direct_count(const std::vector<Int>& lambda,
                                const std::vector<Int>& mu) {
  const std::size_t n = lambda.size();
  const Int lambda_last = abs(lambda[n - 1]);
  const Int mu_last = abs(mu[n - 2]);
  Int count = 0;
  auto extend = [&](auto&& self, std::size_t j) -> void {
    if (j == n - 1) {
      ++count;
      return;
    }
    Int hi = lambda[j];
    if (j >= 1 && mu[j - 1] < hi) hi = mu[j - 1];
    Int lo;
    if (j + 1 < n - 1) {
      lo = lambda[j + 1];
      if (mu[j] > lo) lo = mu[j];
    } else {
      lo = lambda_last;
      if (mu_last > lo) lo = mu_last;
    }
    for (Int v = hi; v >= lo; --v) {
      (void)v;
      self(self, j + 1);
    }
  };
  extend(extend, 0);
  return count;
}

}  // namespace detail

// GL(n) -> GL(n-2) branching multiplicity via the block product
// prod (x_j - z_j + 1), with sigma and the determinant twist -|mu| attached
// for positive multiplicity. A mu of the wrong rank cannot doubly
// interlace, so it yields multiplicity 0 rather than an error. Debug
// builds recount by explicit enumeration of the middles and fail hard on
// a mismatch.
inline BranchingResult gl_multiplicity(const DominantWeight& lambda,
                                       const DominantWeight& mu) {
  detail::require_family(lambda, Family::GL, "lambda");
  detail::require_family(mu, Family::GL, "mu");
  if (mu.rank() + 2 != lambda.rank() || !doubly_interlaces(mu, lambda))
    return BranchingResult{lambda, mu, 0, std::nullopt, std::nullopt};
  SigmaSequence sigma = merge_sigma(lambda, mu);
  Int count = multiplicity_product(sigma);
#ifndef NDEBUG
  if (Int(enumerate_middles(lambda, mu).size()) != count)
    throw std::logic_error(
        "gl_multiplicity: block product disagrees with enumeration for "
        "lambda " +
        lambda.to_string() + ", mu " + mu.to_string());
#endif
  return BranchingResult{lambda, mu, std::move(count), std::move(sigma),
                         -mu.sum()};
}

// All GL(n-2) targets with positive multiplicity, lexicographically
// decreasing. Candidates are generated from the entrywise necessary and
// sufficient bounds lambda_{i+2} <= mu_i <= min(lambda_i, mu_{i-1}).
inline Decomposition gl_decompose(const DominantWeight& lambda) {
  detail::require_family(lambda, Family::GL, "lambda");
  const std::size_t n = lambda.rank();
  if (n < 2)
    throw std::invalid_argument("gl_decompose: lambda must have rank >= 2");
  Decomposition out{lambda, {}};
  std::vector<Int> mu(n - 2);
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == n - 2) {
      out.components.push_back(gl_multiplicity(lambda, gl_weight(mu)));
      return;
    }
    Int hi = lambda[i];
    if (i >= 1 && mu[i - 1] < hi) hi = mu[i - 1];
    for (Int v = hi; v >= lambda[i + 2]; --v) {
      mu[i] = v;
      self(self, i + 1);
    }
  };
  extend(extend, 0);
  return out;
}

// Number of Gelfand-Tsetlin patterns with top row alpha — the dimension of
// the GL(k) representation — counted by iterated one-step branching. This
// deliberately shares nothing with the block machinery so it can serve as
// an independent bookkeeping check.
inline Int gl_dimension(const DominantWeight& alpha) {
  detail::require_family(alpha, Family::GL, "alpha");
  if (alpha.rank() == 0) return 1;
  Int total = 0;
  for (const auto& step : one_step_branch(alpha))
    total += gl_dimension(step.first);
  return total;
}

// Sp(2n) -> Sp(2n-2): isomorphic to the GL branching for lambda' =
// (lambda, 0) of rank n+1 over the same mu, which supplies the block
// factorization. Debug builds recount via the interlacing array directly.
inline BranchingResult sp_multiplicity(const DominantWeight& lambda,
                                       const DominantWeight& mu) {
  detail::require_family(lambda, Family::Sp, "lambda");
  detail::require_family(mu, Family::Sp, "mu");
  detail::require_rank_gap(lambda, mu, 1, "sp_multiplicity");
  std::vector<Int> extended = lambda.entries();
  extended.push_back(0);
  BranchingResult inner =
      gl_multiplicity(gl_weight(std::move(extended)), gl_weight(mu.entries()));
#ifndef NDEBUG
  if (detail::sp_direct_count(lambda.entries(), mu.entries()) !=
      inner.multiplicity)
    throw std::logic_error(
        "sp_multiplicity: GL reduction disagrees with the direct array count "
        "for lambda " +
        lambda.to_string() + ", mu " + mu.to_string());
#endif
  return BranchingResult{lambda, mu, std::move(inner.multiplicity),
                         std::move(inner.sigma), std::move(inner.twist)};
}

// SO(2n+1) -> SO(2n-1). Two reduction cases delegate to GL and inherit its
// block factorization; otherwise the multiplicity is the direct count of
// the interlacing array (no sigma/twist — there is no GL(2) factorization
// to report in general).
inline BranchingResult so_odd_multiplicity(const DominantWeight& lambda,
                                           const DominantWeight& mu) {
  detail::require_family(lambda, Family::SOodd, "lambda");
  detail::require_family(mu, Family::SOodd, "mu");
  detail::require_rank_gap(lambda, mu, 1, "so_odd_multiplicity");
  const std::size_t n = lambda.rank();
  const std::vector<Int>& lv = lambda.entries();
  const std::vector<Int>& mv = mu.entries();
  std::optional<BranchingResult> inner;
  if (mv[n - 2] == 0) {
    // mu_{n-1} = 0: same space as GL(n) -> GL(n-2) for (lambda, mu').
    std::vector<Int> reduced_mu(mv.begin(), mv.end() - 1);
    inner = gl_multiplicity(gl_weight(lv), gl_weight(std::move(reduced_mu)));
  } else if (lv[n - 1] == 0) {
    // lambda_n = 0: same space as GL(n+1) -> GL(n-1) for (lambda', mu).
    std::vector<Int> extended(lv.begin(), lv.end() - 1);
    extended.push_back(0);
    extended.push_back(0);
    inner = gl_multiplicity(gl_weight(std::move(extended)), gl_weight(mv));
  }
  if (inner) {
#ifndef NDEBUG
    if (detail::so_odd_direct_count(lv, mv) != inner->multiplicity)
      throw std::logic_error(
          "so_odd_multiplicity: GL reduction disagrees with the direct array "
          "count for lambda " +
          lambda.to_string() + ", mu " + mu.to_string());
#endif
    return BranchingResult{lambda, mu, std::move(inner->multiplicity),
                           std::move(inner->sigma), std::move(inner->twist)};
  }
  return BranchingResult{lambda, mu, detail::so_odd_direct_count(lv, mv),
                         std::nullopt, std::nullopt};
}

// SO(2n) -> SO(2n-2), same shape as the odd case: two reductions delegate
// to GL, everything else is the direct array count.
inline BranchingResult so_even_multiplicity(const DominantWeight& lambda,
                                            const DominantWeight& mu) {
  detail::require_family(lambda, Family::SOeven, "lambda");
  detail::require_family(mu, Family::SOeven, "mu");
  detail::require_rank_gap(lambda, mu, 1, "so_even_multiplicity");
  const std::size_t n = lambda.rank();
  const std::vector<Int>& lv = lambda.entries();
  const std::vector<Int>& mv = mu.entries();
  std::optional<BranchingResult> inner;
  if (n >= 3 && mv[n - 3] == 0) {
    // mu_{n-2} = 0 forces kappa_{n-1} = 0, which is compatible only with
    // lambda_n = mu_{n-1} = 0; then the space matches GL(n-1) -> GL(n-3).
    if (lv[n - 1] != 0 || mv[n - 2] != 0) {
#ifndef NDEBUG
      if (detail::so_even_direct_count(lv, mv) != 0)
        throw std::logic_error(
            "so_even_multiplicity: expected zero count for lambda " +
            lambda.to_string() + ", mu " + mu.to_string());
#endif
      return BranchingResult{lambda, mu, 0, std::nullopt, std::nullopt};
    }
    std::vector<Int> reduced_lambda(lv.begin(), lv.end() - 1);
    std::vector<Int> reduced_mu(mv.begin(), mv.begin() + (n - 3));
    inner = gl_multiplicity(gl_weight(std::move(reduced_lambda)),
                            gl_weight(std::move(reduced_mu)));
  } else if (lv[n - 2] == 0) {
    // lambda_{n-1} = 0 (hence lambda_n = 0): nonzero only when
    // mu_{n-1} = 0, and then the space matches GL(n) -> GL(n-2).
    if (mv[n - 2] != 0) {
#ifndef NDEBUG
      if (detail::so_even_direct_count(lv, mv) != 0)
        throw std::logic_error(
            "so_even_multiplicity: expected zero count for lambda " +
            lambda.to_string() + ", mu " + mu.to_string());
#endif
      return BranchingResult{lambda, mu, 0, std::nullopt, std::nullopt};
    }
    std::vector<Int> extended(lv.begin(), lv.end() - 2);
    extended.push_back(0);
    extended.push_back(0);
    std::vector<Int> reduced_mu(mv.begin(), mv.end() - 1);
    inner = gl_multiplicity(gl_weight(std::move(extended)),
                            gl_weight(std::move(reduced_mu)));
  }
  if (inner) {
#ifndef NDEBUG
    if (detail::so_even_direct_count(lv, mv) != inner->multiplicity)
      throw std::logic_error(
          "so_even_multiplicity: GL reduction disagrees with the direct "
          "array count for lambda " +
          lambda.to_string() + ", mu " + mu.to_string());
#endif
    return BranchingResult{lambda, mu, std::move(inner->multiplicity),
                           std::move(inner->sigma), std::move(inner->twist)};
  }
  return BranchingResult{lambda, mu, detail::so_even_direct_count(lv, mv),
                         std::nullopt, std::nullopt};
}

// Sp(2n) -> Sp(2n-2) decomposition. Candidate bounds come from the GL
// picture for (lambda, 0): lambda'_{i+2} <= mu_i <= min(lambda_i, mu_{i-1}).
inline Decomposition sp_decompose(const DominantWeight& lambda) {
  detail::require_family(lambda, Family::Sp, "lambda");
  const std::size_t n = lambda.rank();
  if (n < 2)
    throw std::invalid_argument("sp_decompose: lambda must have rank >= 2");
  Decomposition out{lambda, {}};
  std::vector<Int> mu(n - 1);
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == n - 1) {
      out.components.push_back(sp_multiplicity(lambda, sp_weight(mu)));
      return;
    }
    Int hi = lambda[i];
    if (i >= 1 && mu[i - 1] < hi) hi = mu[i - 1];
    const Int lo = i + 2 < n ? lambda[i + 2] : Int(0);
    for (Int v = hi; v >= lo; --v) {
      mu[i] = v;
      self(self, i + 1);
    }
  };
  extend(extend, 0);
  return out;
}

// SO(2n+1) -> SO(2n-1) decomposition over the same entrywise bounds;
// candidates that the array count rejects are dropped.
inline Decomposition so_odd_decompose(const DominantWeight& lambda) {
  detail::require_family(lambda, Family::SOodd, "lambda");
  const std::size_t n = lambda.rank();
  if (n < 2)
    throw std::invalid_argument(
        "so_odd_decompose: lambda must have rank >= 2");
  Decomposition out{lambda, {}};
  std::vector<Int> mu(n - 1);
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == n - 1) {
      BranchingResult r = so_odd_multiplicity(lambda, so_odd_weight(mu));
      if (r.multiplicity > 0) out.components.push_back(std::move(r));
      return;
    }
    Int hi = lambda[i];
    if (i >= 1 && mu[i - 1] < hi) hi = mu[i - 1];
    const Int lo = i + 2 < n ? lambda[i + 2] : Int(0);
    for (Int v = hi; v >= lo; --v) {
      mu[i] = v;
      self(self, i + 1);
    }
  };
  extend(extend, 0);
  return out;
}

// SO(2n) -> SO(2n-2) decomposition; the last target entry ranges over a
// signed interval.
inline Decomposition so_even_decompose(const DominantWeight& lambda) {
  detail::require_family(lambda, Family::SOeven, "lambda");
  const std::size_t n = lambda.rank();
  if (n < 2)
    throw std::invalid_argument(
        "so_even_decompose: lambda must have rank >= 2");
  Decomposition out{lambda, {}};
  const Int lambda_last = abs(lambda[n - 1]);
  std::vector<Int> mu(n - 1);
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == n - 1) {
      BranchingResult r = so_even_multiplicity(lambda, so_even_weight(mu));
      if (r.multiplicity > 0) out.components.push_back(std::move(r));
      return;
    }
    if (i + 1 == n - 1) {
      // Signed last entry: |mu_{n-1}| <= min(lambda_{n-1}, mu_{n-2}).
      Int bound = n >= 3 ? lambda[n - 2] : lambda[0];
      if (n >= 3 && mu[i - 1] < bound) bound = mu[i - 1];
      for (Int v = bound; v >= -bound; --v) {
        mu[i] = v;
        self(self, i + 1);
      }
      return;
    }
    Int hi = lambda[i];
    if (i >= 1 && mu[i - 1] < hi) hi = mu[i - 1];
    const Int lo = i + 2 < n - 1 ? lambda[i + 2] : lambda_last;
    for (Int v = hi; v >= lo; --v) {
      mu[i] = v;
      self(self, i + 1);
    }
  };
  extend(extend, 0);
  return out;
}

}  // namespace branchblocks
