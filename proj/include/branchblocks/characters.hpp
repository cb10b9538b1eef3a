#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "branchblocks/bigint.hpp"
#include "branchblocks/interlacing.hpp"
#include "branchblocks/tiling.hpp"
#include "branchblocks/weights.hpp"

namespace branchblocks {

namespace detail {

template <std::size_t N>
std::array<std::string, N> default_variable_names();

template <>
inline std::array<std::string, 1> default_variable_names<1>() {
  return {"t"};
}

template <>
inline std::array<std::string, 2> default_variable_names<2>() {
  return {"t1", "t2"};
}

}  // namespace detail

// A sparse Laurent polynomial in N variables with arbitrary-precision
// integer coefficients and exponents. Terms live in a map keyed by the
// exponent vector; zero coefficients are never stored.
template <std::size_t N>
class LaurentPolynomial {
  static_assert(N == 1 || N == 2,
                "only one- and two-variable characters are used");

 public:
  using Exponents = std::array<Int, N>;
  using TermMap = std::map<Exponents, Int>;

  LaurentPolynomial() = default;

  static LaurentPolynomial monomial(Exponents exponents, Int coefficient = 1) {
    LaurentPolynomial p;
    p.add_term(exponents, coefficient);
    return p;
  }

  static LaurentPolynomial constant(Int value) {
    return monomial(Exponents{}, std::move(value));
  }

  void add_term(const Exponents& exponents, const Int& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Int coefficient(const Exponents& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Int(0) : it->second;
  }

  Int sum_of_coefficients() const {
    Int total = 0;
    for (const auto& [exponents, coefficient] : terms_) total += coefficient;
    return total;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& other) {
    for (const auto& [exponents, coefficient] : other.terms_)
      add_term(exponents, coefficient);
    return *this;
  }

  LaurentPolynomial& operator-=(const LaurentPolynomial& other) {
    for (const auto& [exponents, coefficient] : other.terms_)
      add_term(exponents, -coefficient);
    return *this;
  }

  LaurentPolynomial operator*(const LaurentPolynomial& other) const {
    LaurentPolynomial out;
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : other.terms_) {
        Exponents e;
        for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  LaurentPolynomial& operator*=(const LaurentPolynomial& other) {
    *this = *this * other;
    return *this;
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    a += b;
    return a;
  }

  friend LaurentPolynomial operator-(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    a -= b;
    return a;
  }

  friend bool operator==(const LaurentPolynomial&,
                         const LaurentPolynomial&) = default;

  // Exact evaluation. Negative exponents are integral only at +1 or -1;
  // anywhere else they raise domain_error (the identities this library
  // checks only ever evaluate at such points).
  Int evaluate(const std::array<Int, N>& point) const {
    Int total = 0;
    for (const auto& [exponents, coefficient] : terms_) {
      Int value = coefficient;
      for (std::size_t i = 0; i < N; ++i) value *= power_at(point[i], exponents[i]);
      total += value;
    }
    return total;
  }

  std::string to_string() const {
    return to_string(detail::default_variable_names<N>());
  }

  // Terms in lexicographically descending exponent order, e.g.
  // "t1^8*t2^5 + t1^7*t2^6 - 3*t2". The zero polynomial prints "0".
  std::string to_string(const std::array<std::string, N>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const Int& coefficient = it->second;
      const bool negative = coefficient < 0;
      const Int magnitude = abs(coefficient);
      std::string factors;
      for (std::size_t i = 0; i < N; ++i) {
        const Int& e = it->first[i];
        if (e == 0) continue;
        if (!factors.empty()) factors += '*';
        factors += names[i];
        if (e != 1) factors += "^" + e.str();
      }
      std::string body;
      if (factors.empty())
        body = magnitude.str();
      else if (magnitude == 1)
        body = factors;
      else
        body = magnitude.str() + "*" + factors;
      if (out.empty())
        out = negative ? "-" + body : body;
      else
        out += (negative ? " - " : " + ") + body;
    }
    return out;
  }

 private:
  static Int power_at(const Int& base, const Int& exponent) {
    if (base == 1) return 1;
    if (base == -1) return exponent % 2 == 0 ? Int(1) : Int(-1);
    if (exponent < 0)
      throw std::domain_error(
          "negative exponent evaluated at a point other than 1 or -1");
    if (base == 0) return exponent == 0 ? Int(1) : Int(0);
    Int result = 1;
    Int b = base;
    Int e = exponent;
    while (e > 0) {
      if ((e & 1) != 0) result *= b;
      b *= b;
      e >>= 1;
    }
    return result;
  }

  TermMap terms_;
};

// chi_{(x,z)}(t1,t2) = sum over x >= y >= z of t1^y t2^{x+z-y}: the
// character of the GL(2) representation with highest weight (x, z). Has
// x - z + 1 terms, all of total degree x + z.
inline LaurentPolynomial<2> gl2_character(const Int& x, const Int& z) {
  if (x < z)
    throw std::invalid_argument("gl2_character: (" + x.str() + "," + z.str() +
                                ") is not dominant");
  LaurentPolynomial<2> out;
  for (Int y = z; y <= x; ++y) out.add_term({y, x + z - y}, 1);
  return out;
}

// chi_d(t) = t^-d + t^{-d+2} + ... + t^d: the character of the (d+1)-
// dimensional SL(2) representation.
inline LaurentPolynomial<1> sl2_character(const Int& d) {
  if (d < 0)
    throw std::invalid_argument("sl2_character: degree must be >= 0, got " +
                                d.str());
  LaurentPolynomial<1> out;
  for (Int e = -d; e <= d; e += 2) out.add_term({e}, 1);
  return out;
}

// Substitutes t1 -> t, t2 -> t^-1.
inline LaurentPolynomial<1> restrict_to_sl2(const LaurentPolynomial<2>& p) {
  LaurentPolynomial<1> out;
  for (const auto& [exponents, coefficient] : p.terms())
    out.add_term({exponents[0] - exponents[1]}, coefficient);
  return out;
}

// Character of the branching multiplicity space: sum over all middles kappa
// of t1^{|kappa| - |mu|} t2^{|lambda| - |kappa|}.
inline LaurentPolynomial<2> branching_character(const DominantWeight& lambda,
                                                const DominantWeight& mu) {
  const Int mu_sum = mu.sum();
  const Int lambda_sum = lambda.sum();
  LaurentPolynomial<2> out;
  for (const InterlacingPattern& p : enumerate_middles(lambda, mu)) {
    Int kappa_sum = 0;
    for (const Int& v : p.middle()) kappa_sum += v;
    out.add_term({kappa_sum - mu_sum, lambda_sum - kappa_sum}, 1);
  }
  return out;
}

// The factored form of the same character:
//   (t1 t2)^{-|mu|} * prod_j chi_{(x_j, z_j)}(t1, t2)
// over the blocks of merge_sigma(lambda, mu). Equality with
// branching_character is the central identity checked by the test suite.
inline LaurentPolynomial<2> factored_character(const DominantWeight& lambda,
                                               const DominantWeight& mu) {
  const SigmaSequence sigma = merge_sigma(lambda, mu);
  const Int mu_sum = mu.sum();
  LaurentPolynomial<2> out =
      LaurentPolynomial<2>::monomial({-mu_sum, -mu_sum});
  for (const auto& [x, z] : sigma.blocks()) out *= gl2_character(x, z);
  return out;
}

// prod_j (x_j - z_j + 1) over the blocks.
inline Int multiplicity_product(const SigmaSequence& sigma) {
  Int product = 1;
  for (const auto& [x, z] : sigma.blocks()) product *= x - z + 1;
  return product;
}

inline Int multiplicity_product(const DominantWeight& lambda,
                                const DominantWeight& mu) {
  return multiplicity_product(merge_sigma(lambda, mu));
}

}  // namespace branchblocks
