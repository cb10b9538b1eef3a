#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "branchblocks/bigint.hpp"
#include "branchblocks/weights.hpp"

namespace branchblocks {

namespace detail {

inline void require_gl(const DominantWeight& w, const char* role) {
  if (w.family() != Family::GL)
    throw std::invalid_argument(std::string(role) + " must be a GL weight, got " +
                                w.group().name());
}

}  // namespace detail

// beta interlaces alpha (one rank down):
//   alpha_1 >= beta_1 >= alpha_2 >= beta_2 >= ... >= alpha_k.
// Requires rank(beta) = rank(alpha) - 1.
inline bool interlaces(const DominantWeight& beta, const DominantWeight& alpha) {
  detail::require_gl(beta, "beta");
  detail::require_gl(alpha, "alpha");
  if (beta.rank() + 1 != alpha.rank())
    throw std::invalid_argument(
        "interlaces: beta must have rank one less than alpha (got " +
        std::to_string(beta.rank()) + " and " + std::to_string(alpha.rank()) +
        ")");
  for (std::size_t i = 0; i < beta.rank(); ++i) {
    if (alpha[i] < beta[i]) return false;
    if (beta[i] < alpha[i + 1]) return false;
  }
  return true;
}

// mu doubly interlaces lambda (two ranks down): some kappa exists with
// mu interlacing kappa and kappa interlacing lambda. Equivalently, by the
// closed form used here, lambda_i >= mu_i >= lambda_{i+2} for all i.
// The equivalence is exercised against explicit enumeration in the tests.
inline bool doubly_interlaces(const DominantWeight& mu,
                              const DominantWeight& lambda) {
  detail::require_gl(mu, "mu");
  detail::require_gl(lambda, "lambda");
  if (mu.rank() + 2 != lambda.rank())
    throw std::invalid_argument(
        "doubly_interlaces: mu must have rank two less than lambda (got " +
        std::to_string(mu.rank()) + " and " + std::to_string(lambda.rank()) +
        ")");
  for (std::size_t i = 0; i < mu.rank(); ++i) {
    if (lambda[i] < mu[i]) return false;
    if (mu[i] < lambda[i + 2]) return false;
  }
  return true;
}

// A two-step interlacing pattern: GL weights lambda (rank n), kappa
// (rank n-1) and mu (rank n-2) with mu interlacing kappa and kappa
// interlacing lambda. The constructor validates all the diagonal
// inequalities and names the first violated one.
class InterlacingPattern {
 public:
  InterlacingPattern(DominantWeight top, std::vector<Int> middle,
                     DominantWeight bottom)
      : top_(std::move(top)), middle_(std::move(middle)),
        bottom_(std::move(bottom)) {
    detail::require_gl(top_, "top");
    detail::require_gl(bottom_, "bottom");
    const std::size_t n = top_.rank();
    if (n < 2)
      throw std::invalid_argument("interlacing pattern needs top rank >= 2");
    if (bottom_.rank() + 2 != n)
      throw std::invalid_argument(
          "interlacing pattern: bottom must have rank two less than top");
    if (middle_.size() + 1 != n)
      throw std::invalid_argument(
          "interlacing pattern: middle must have rank one less than top");
    for (std::size_t r = 0; r + 1 < n; ++r) {
      if (top_[r] < middle_[r])
        throw std::invalid_argument(describe() + ": middle entry " +
                                    std::to_string(r + 1) + " > top entry " +
                                    std::to_string(r + 1));
      if (middle_[r] < top_[r + 1])
        throw std::invalid_argument(describe() + ": middle entry " +
                                    std::to_string(r + 1) + " < top entry " +
                                    std::to_string(r + 2));
    }
    for (std::size_t r = 0; r + 2 < n; ++r) {
      if (middle_[r] < bottom_[r])
        throw std::invalid_argument(describe() + ": bottom entry " +
                                    std::to_string(r + 1) +
                                    " > middle entry " + std::to_string(r + 1));
      if (bottom_[r] < middle_[r + 1])
        throw std::invalid_argument(describe() + ": bottom entry " +
                                    std::to_string(r + 1) +
                                    " < middle entry " + std::to_string(r + 2));
    }
  }

  const DominantWeight& top() const { return top_; }
  const std::vector<Int>& middle() const { return middle_; }
  const DominantWeight& bottom() const { return bottom_; }
  std::size_t rank() const { return top_.rank(); }

  DominantWeight middle_weight() const { return gl_weight(middle_); }

  std::string to_string() const {
    return tuple_to_string(top_.entries()) + " / " + tuple_to_string(middle_) +
           " / " + tuple_to_string(bottom_.entries());
  }

  friend bool operator==(const InterlacingPattern&,
                         const InterlacingPattern&) = default;

 private:
  std::string describe() const {
    return "pattern " + to_string();
  }

  DominantWeight top_;
  std::vector<Int> middle_;
  DominantWeight bottom_;
};

// All kappa with mu interlacing kappa and kappa interlacing lambda, returned
// as full patterns in lexicographically decreasing order of kappa. Empty
// exactly when mu does not doubly interlace lambda. Each kappa entry ranges
// independently over
//   max(lambda_{j+1}, mu_j) <= kappa_j <= min(lambda_j, mu_{j-1})
// (missing bounds dropped); weak decrease of kappa is implied by these.
inline std::vector<InterlacingPattern> enumerate_middles(
    const DominantWeight& lambda, const DominantWeight& mu) {
  detail::require_gl(lambda, "lambda");
  detail::require_gl(mu, "mu");
  if (mu.rank() + 2 != lambda.rank())
    throw std::invalid_argument(
        "enumerate_middles: mu must have rank two less than lambda (got " +
        std::to_string(mu.rank()) + " and " + std::to_string(lambda.rank()) +
        ")");
  std::vector<InterlacingPattern> out;
  const std::size_t n = lambda.rank();
  std::vector<Int> kappa(n - 1);
  // Descending loops at each position yield lexicographically decreasing
  // kappa overall.
  auto extend = [&](auto&& self, std::size_t j) -> void {
    if (j == n - 1) {
      out.emplace_back(lambda, kappa, mu);
      return;
    }
    Int hi = lambda[j];
    if (j >= 1 && mu[j - 1] < hi) hi = mu[j - 1];
    Int lo = lambda[j + 1];
    if (j < mu.rank() && mu[j] > lo) lo = mu[j];
    for (Int v = hi; v >= lo; --v) {
      kappa[j] = v;
      self(self, j + 1);
    }
  };
  extend(extend, 0);
  return out;
}

// One step of branching: all beta interlacing alpha, each with multiplicity
// one, paired with the degree |alpha| - |beta|. Betas are returned in
// lexicographically decreasing order.
inline std::vector<std::pair<DominantWeight, Int>> one_step_branch(
    const DominantWeight& alpha) {
  detail::require_gl(alpha, "alpha");
  const std::size_t n = alpha.rank();
  if (n == 0)
    throw std::invalid_argument("one_step_branch: alpha must have rank >= 1");
  std::vector<std::pair<DominantWeight, Int>> out;
  const Int total = alpha.sum();
  std::vector<Int> beta(n - 1);
  auto extend = [&](auto&& self, std::size_t j, const Int& partial) -> void {
    if (j == n - 1) {
      out.emplace_back(gl_weight(beta), total - partial);
      return;
    }
    for (Int v = alpha[j]; v >= alpha[j + 1]; --v) {
      beta[j] = v;
      self(self, j + 1, partial + v);
    }
  };
  extend(extend, 0, Int(0));
  return out;
}

}  // namespace branchblocks
