#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "branchblocks/bigint.hpp"
#include "branchblocks/interlacing.hpp"
#include "branchblocks/weights.hpp"

namespace branchblocks {

// The four step kinds of a directed path. Each arrow spans one column and
// departs/arrives on either the upper line (y = 0) or the lower line
// (y = -1):
//   DR (down-right)  departs upper, arrives lower
//   HU (harpoon up)  departs upper, arrives upper
//   HD (harpoon down) departs lower, arrives lower
//   UR (up-right)    departs lower, arrives upper
// The enum order DR < HU < HD < UR is the lexicographic order used for
// path enumeration.
enum class Arrow { DR = 0, HU = 1, HD = 2, UR = 3 };

inline bool departs_top(Arrow a) { return a == Arrow::DR || a == Arrow::HU; }
inline bool arrives_top(Arrow a) { return a == Arrow::HU || a == Arrow::UR; }

// Two-letter text encoding used by the CLI and JSON output.
inline const char* arrow_name(Arrow a) {
  switch (a) {
    case Arrow::DR: return "DR";
    case Arrow::HU: return "HU";
    case Arrow::HD: return "HD";
    case Arrow::UR: return "UR";
  }
  return "?";
}

// Unicode glyph for pretty rendering.
inline const char* arrow_glyph(Arrow a) {
  switch (a) {
    case Arrow::DR: return "↘";   // down-right arrow
    case Arrow::HU: return "⇀";   // rightwards harpoon, barb up
    case Arrow::HD: return "⇁";   // rightwards harpoon, barb down
    case Arrow::UR: return "↗";   // up-right arrow
  }
  return "?";
}

inline Arrow arrow_from_name(const std::string& name) {
  if (name == "DR") return Arrow::DR;
  if (name == "HU") return Arrow::HU;
  if (name == "HD") return Arrow::HD;
  if (name == "UR") return Arrow::UR;
  throw std::invalid_argument("unknown arrow name: " + name);
}

// A walk across columns 1..n on the two lines, departing and arriving on
// the upper line and switching lines so that every lower-line point is
// visited: after an arrow arrives on one line, the next arrow departs from
// the other line (the connecting vertical step is implicit).
class DirectedPath {
 public:
  explicit DirectedPath(std::vector<Arrow> arrows)
      : arrows_(std::move(arrows)) {
    if (arrows_.empty())
      throw std::invalid_argument("path needs at least one arrow");
    if (!departs_top(arrows_.front()))
      throw std::invalid_argument("path must start on the upper line");
    for (std::size_t k = 1; k < arrows_.size(); ++k) {
      if (departs_top(arrows_[k]) == arrives_top(arrows_[k - 1]))
        throw std::invalid_argument(
            "path switches lines illegally between arrows " +
            std::to_string(k) + " and " + std::to_string(k + 1));
    }
    if (!arrives_top(arrows_.back()))
      throw std::invalid_argument("path must end on the upper line");
  }

  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t length() const { return arrows_.size(); }
  // Number of columns, one more than the number of arrows.
  std::size_t rank() const { return arrows_.size() + 1; }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t k = 0; k < arrows_.size(); ++k) {
      if (k > 0) out += ',';
      out += arrow_name(arrows_[k]);
    }
    out += ']';
    return out;
  }

  friend bool operator==(const DirectedPath&, const DirectedPath&) = default;

 private:
  std::vector<Arrow> arrows_;
};

// All valid paths on n columns in lexicographic order (DR < HU < HD < UR);
// there are 2^{n-2} of them.
inline std::vector<DirectedPath> enumerate_paths(std::size_t n) {
  if (n < 2) throw std::invalid_argument("enumerate_paths: n must be >= 2");
  std::vector<DirectedPath> out;
  std::vector<Arrow> arrows;
  arrows.reserve(n - 1);
  // Trying the four variants in ascending enum order at each position
  // yields lexicographic order overall.
  auto extend = [&](auto&& self, bool on_top) -> void {
    const std::size_t k = arrows.size();
    for (Arrow a : {Arrow::DR, Arrow::HU, Arrow::HD, Arrow::UR}) {
      if (departs_top(a) != on_top) continue;
      if (k + 1 == n - 1 && !arrives_top(a)) continue;
      arrows.push_back(a);
      if (k + 1 == n - 1)
        out.emplace_back(arrows);
      else
        self(self, !arrives_top(a));
      arrows.pop_back();
    }
  };
  extend(extend, true);
  return out;
}

// The weakly decreasing chain x_1 >= z_1 >= x_2 >= z_2 >= ... >= z_m >= 0,
// chunked into the blocks (x_j, z_j).
class SigmaSequence {
 public:
  explicit SigmaSequence(std::vector<std::pair<Int, Int>> blocks)
      : blocks_(std::move(blocks)) {
    if (blocks_.empty())
      throw std::invalid_argument("sigma needs at least one block");
    const std::vector<Int> chain = flat();
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      if (chain[i] < chain[i + 1])
        throw std::invalid_argument("sigma entry " + std::to_string(i + 1) +
                                    " < entry " + std::to_string(i + 2));
    }
    if (chain.back() < 0)
      throw std::invalid_argument("sigma entry " +
                                  std::to_string(chain.size()) + " < 0");
  }

  static SigmaSequence from_flat(const std::vector<Int>& chain) {
    if (chain.size() < 2 || chain.size() % 2 != 0)
      throw std::invalid_argument(
          "sigma needs an even number of entries (at least two)");
    std::vector<std::pair<Int, Int>> blocks;
    blocks.reserve(chain.size() / 2);
    for (std::size_t i = 0; i < chain.size(); i += 2)
      blocks.emplace_back(chain[i], chain[i + 1]);
    return SigmaSequence(std::move(blocks));
  }

  const std::vector<std::pair<Int, Int>>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  const Int& x(std::size_t j) const { return blocks_[j].first; }
  const Int& z(std::size_t j) const { return blocks_[j].second; }

  std::vector<Int> flat() const {
    std::vector<Int> chain;
    chain.reserve(2 * blocks_.size());
    for (const auto& [x, z] : blocks_) {
      chain.push_back(x);
      chain.push_back(z);
    }
    return chain;
  }

  // "(8,5)(4,2)(1,0)"
  std::string to_string() const {
    std::string out;
    for (const auto& [x, z] : blocks_)
      out += "(" + x.str() + "," + z.str() + ")";
    return out;
  }

  friend bool operator==(const SigmaSequence&, const SigmaSequence&) = default;

 private:
  std::vector<std::pair<Int, Int>> blocks_;
};

// Merges lambda and mu into one weakly decreasing chain and chunks it into
// blocks. Fails if mu does not doubly interlace lambda. As a consistency
// check the result is compared against the closed forms
//   x_1 = lambda_1,  z_j = max(lambda_{j+1}, mu_j),
//   x_{j+1} = min(lambda_{j+1}, mu_j),  z_{n-1} = lambda_n;
// a mismatch would be an internal bug and throws logic_error.
inline SigmaSequence merge_sigma(const DominantWeight& lambda,
                                 const DominantWeight& mu) {
  if (!doubly_interlaces(mu, lambda))
    throw std::invalid_argument("merge_sigma: mu " + mu.to_string() +
                                " does not doubly interlace lambda " +
                                lambda.to_string());
  const std::size_t n = lambda.rank();
  std::vector<Int> chain;
  chain.reserve(2 * n - 2);
  std::size_t li = 0, mi = 0;
  while (li < n || mi < mu.rank()) {
    const bool take_lambda =
        li < n && (mi >= mu.rank() || lambda[li] >= mu[mi]);
    chain.push_back(take_lambda ? lambda[li++] : mu[mi++]);
  }
  SigmaSequence sigma = SigmaSequence::from_flat(chain);
  // Closed-form cross-check.
  auto expect = [&](const Int& got, const Int& want, const char* what) {
    if (got != want)
      throw std::logic_error(std::string("merge_sigma: ") + what +
                             " disagrees with the merged chain for lambda " +
                             lambda.to_string() + ", mu " + mu.to_string());
  };
  expect(sigma.x(0), lambda[0], "x_1 = lambda_1");
  expect(sigma.z(n - 2), lambda[n - 1], "z_{n-1} = lambda_n");
  for (std::size_t j = 0; j + 1 < n - 1; ++j) {
    const Int& a = lambda[j + 1];
    const Int& b = mu[j];
    expect(sigma.z(j), a > b ? a : b, "z_j = max(lambda_{j+1}, mu_j)");
    expect(sigma.x(j + 1), a < b ? a : b, "x_{j+1} = min(lambda_{j+1}, mu_j)");
  }
  return sigma;
}

// The canonical path for (lambda, mu): among all valid paths whose tiling
// reproduces rows (lambda, mu), the one whose merged row word takes lambda
// entries as early as possible. Equivalently a stable descending merge of
// lambda (upper row) and mu (lower row) breaking value ties in favor of
// lambda, constrained to words that form a legal walk; the walk constraint
// matters only for ties, so this refines the plain "lambda first" rule
// rather than contradicting it.
inline DirectedPath canonical_path(const DominantWeight& lambda,
                                   const DominantWeight& mu) {
  if (!doubly_interlaces(mu, lambda))
    throw std::invalid_argument("canonical_path: mu " + mu.to_string() +
                                " does not doubly interlace lambda " +
                                lambda.to_string());
  const std::size_t n = lambda.rank();
  const std::size_t len = 2 * n - 2;
  const auto& lv = lambda.entries();
  const auto& mv = mu.entries();
  // word[p] is true when position p of the merged chain comes from lambda.
  std::vector<bool> word(len, false);
  // Taking the next chain element from one row is value-legal when that
  // row's head is >= the other row's head (rows are each descending, so
  // this keeps the merged chain descending).
  auto value_ok = [&](std::size_t li, std::size_t mi, bool top) {
    if (top) return li < lv.size() && (mi >= mv.size() || lv[li] >= mv[mi]);
    return mi < mv.size() && (li >= lv.size() || mv[mi] >= lv[li]);
  };
  // Walk legality in terms of the row word: position 0 and the last
  // position must be upper (the walk departs and arrives on y = 0), and
  // each block's x-position (even p >= 2) sits on the opposite line from
  // the previous block's z-position (the implicit vertical step).
  auto search = [&](auto&& self, std::size_t p, std::size_t li,
                    std::size_t mi) -> bool {
    if (p == len) return true;
    bool allow_top = true;
    bool allow_bottom = true;
    if (p == 0 || p == len - 1)
      allow_bottom = false;
    else if (p % 2 == 0)
      (word[p - 1] ? allow_top : allow_bottom) = false;
    if (allow_top && value_ok(li, mi, true)) {
      word[p] = true;
      if (self(self, p + 1, li + 1, mi)) return true;
    }
    if (allow_bottom && value_ok(li, mi, false)) {
      word[p] = false;
      if (self(self, p + 1, li, mi + 1)) return true;
    }
    return false;
  };
  if (!search(search, 0, 0, 0))
    throw std::logic_error(
        "canonical_path: no legal row word for lambda " + lambda.to_string() +
        ", mu " + mu.to_string());
  std::vector<Arrow> arrows;
  arrows.reserve(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const bool x_top = word[2 * j];
    const bool z_top = word[2 * j + 1];
    arrows.push_back(x_top ? (z_top ? Arrow::HU : Arrow::DR)
                           : (z_top ? Arrow::UR : Arrow::HD));
  }
  return DirectedPath(std::move(arrows));
}

// A tiling: a path, the block values laid along it, and the two extracted
// rows. Block j puts x_j in column j on its departure line and z_j in
// column j+1 on its arrival line (columns 0-based); the upper row read left
// to right is lambda, the lower row is mu. `middle` carries the y values
// when the tiling was built from an interlacing pattern.
struct Tiling {
  DirectedPath path;
  SigmaSequence sigma;
  DominantWeight lambda;
  DominantWeight mu;
  std::optional<std::vector<Int>> middle;

  bool x_on_top(std::size_t j) const { return departs_top(path.arrows()[j]); }
  bool z_on_top(std::size_t j) const { return arrives_top(path.arrows()[j]); }

  friend bool operator==(const Tiling&, const Tiling&) = default;
};

// Lays sigma's blocks along the path and extracts the two rows.
inline Tiling path_to_tiling(const DirectedPath& path,
                             const SigmaSequence& sigma) {
  if (sigma.size() != path.length())
    throw std::invalid_argument(
        "path_to_tiling: need one sigma block per arrow (got " +
        std::to_string(sigma.size()) + " blocks for " +
        std::to_string(path.length()) + " arrows)");
  const std::size_t n = path.rank();
  std::vector<Int> top(n);
  std::vector<Int> bottom(n - 2);
  std::vector<bool> top_set(n, false);
  std::vector<bool> bottom_set(n - 2, false);
  auto place = [&](const Int& value, std::size_t column, bool on_top) {
    if (on_top) {
      if (top_set[column])
        throw std::logic_error("path_to_tiling: upper slot filled twice");
      top[column] = value;
      top_set[column] = true;
    } else {
      if (column < 1 || column > n - 2)
        throw std::logic_error("path_to_tiling: lower slot out of range");
      if (bottom_set[column - 1])
        throw std::logic_error("path_to_tiling: lower slot filled twice");
      bottom[column - 1] = value;
      bottom_set[column - 1] = true;
    }
  };
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    const Arrow a = path.arrows()[j];
    place(sigma.x(j), j, departs_top(a));
    place(sigma.z(j), j + 1, arrives_top(a));
  }
  // A valid path fills every slot exactly once, so the two rows are total;
  // they are weakly decreasing because consecutive columns read values in
  // chain order.
  return Tiling{path, sigma, gl_weight(std::move(top)),
                gl_weight(std::move(bottom)), std::nullopt};
}

// A filled block: x >= y >= z.
struct GL2Block {
  Int x;
  Int y;
  Int z;

  friend bool operator==(const GL2Block&, const GL2Block&) = default;
};

inline std::string block_to_string(const GL2Block& b) {
  return "(" + b.x.str() + "," + b.y.str() + "," + b.z.str() + ")";
}

// Forward direction of the block bijection: block j is (x_j, kappa_j, z_j).
// Pattern validity guarantees x_j >= kappa_j >= z_j, since kappa_j lies
// between max(lambda_{j+1}, mu_j) = z_j and min(lambda_j, mu_{j-1}) = x_j.
inline std::vector<GL2Block> pattern_to_blocks(const InterlacingPattern& p) {
  const SigmaSequence sigma = merge_sigma(p.top(), p.bottom());
  std::vector<GL2Block> blocks;
  blocks.reserve(sigma.size());
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    const Int& y = p.middle()[j];
    if (sigma.x(j) < y || y < sigma.z(j))
      throw std::logic_error("pattern_to_blocks: middle entry " +
                             std::to_string(j + 1) +
                             " falls outside its block for " + p.to_string());
    blocks.push_back(GL2Block{sigma.x(j), y, sigma.z(j)});
  }
  return blocks;
}

// Inverse direction: reads the middle row off the blocks. The blocks' (x,z)
// frame must equal merge_sigma(lambda, mu), and each y must sit inside its
// block; the assembled pattern is revalidated by its constructor.
inline InterlacingPattern blocks_to_pattern(const std::vector<GL2Block>& blocks,
                                            const DominantWeight& lambda,
                                            const DominantWeight& mu) {
  const SigmaSequence sigma = merge_sigma(lambda, mu);
  if (blocks.size() != sigma.size())
    throw std::invalid_argument(
        "blocks_to_pattern: expected " + std::to_string(sigma.size()) +
        " blocks, got " + std::to_string(blocks.size()));
  std::vector<Int> middle;
  middle.reserve(blocks.size());
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    const GL2Block& b = blocks[j];
    if (b.x != sigma.x(j) || b.z != sigma.z(j))
      throw std::invalid_argument("blocks_to_pattern: block " +
                                  std::to_string(j + 1) + " frame " +
                                  block_to_string(b) +
                                  " does not match sigma block (" +
                                  sigma.x(j).str() + "," + sigma.z(j).str() +
                                  ")");
    if (b.x < b.y)
      throw std::invalid_argument("blocks_to_pattern: block " +
                                  std::to_string(j + 1) + ": " + b.y.str() +
                                  " > " + b.x.str() + " violates x >= y");
    if (b.y < b.z)
      throw std::invalid_argument("blocks_to_pattern: block " +
                                  std::to_string(j + 1) + ": " + b.y.str() +
                                  " < " + b.z.str() + " violates y >= z");
    middle.push_back(b.y);
  }
  return InterlacingPattern(lambda, std::move(middle), mu);
}

// Tiling of a full pattern: canonical path for its rows, blocks laid along
// it, middle row attached.
inline Tiling tile_pattern(const InterlacingPattern& p) {
  Tiling t = path_to_tiling(canonical_path(p.top(), p.bottom()),
                            merge_sigma(p.top(), p.bottom()));
  t.middle = p.middle();
  return t;
}

}  // namespace branchblocks
