#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "milnor/freegroup.hpp"
#include "milnor/integer.hpp"
#include "milnor/multiindex.hpp"

namespace milnor {

// Integer power series in non-commuting X_1..X_n, truncated above total degree q.
//
// An optional repeat cap r additionally drops every monomial in which some variable
// occurs more than r times. Both truncations are two-sided ideals, so products and
// Magnus expansions stay exact on the surviving monomials. The cap is ignored for
// n > 12 (it only saves work; keeping more monomials never changes capped values).
//
// Terms are kept sparse and sorted by (degree, lexicographic monomial).
class TruncatedSeries {
 public:
  struct Term {
    std::uint64_t key = 0;     // degree in the high bits, base-n digits below
    std::uint64_t counts = 0;  // packed per-variable multiplicities (when capped)
    Integer coeff;
  };

  TruncatedSeries(int n, int q, int repeat_cap = -1);

  static TruncatedSeries one(int n, int q, int repeat_cap = -1);
  static TruncatedSeries variable(int j, int n, int q, int repeat_cap = -1);

  int variables() const { return n_; }
  int degree_bound() const { return q_; }
  int repeat_cap() const { return cap_; }
  std::size_t term_count() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  // Coefficient of X_{i_1} ... X_{i_m}; the empty index gives the constant term.
  Integer coefficient(const MultiIndex& monomial) const;
  Integer constant_term() const;
  std::vector<int> monomial_of(const Term& term) const;

  // this * (1 + X_j) for sign +1, this * (1 + X_j)^-1 for sign -1.
  TruncatedSeries times_generator(int j, int sign) const;
  // this * X_j
  TruncatedSeries times_variable(int j) const;

  // Inverse of a series with constant term 1.
  TruncatedSeries inverse() const;
  // Same coefficients viewed at a lower truncation degree.
  TruncatedSeries truncated(int q) const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  // "1 + X1*X2 - X2*X1 + X1^2", ordered by degree then lexicographically.
  std::string to_string() const;

 private:
  friend class SeriesBuilder;

  std::uint64_t encode(std::span<const int> monomial, std::uint64_t* counts) const;
  bool counts_ok(std::uint64_t counts) const;
  void check_compatible(const TruncatedSeries& other) const;

  int n_;
  int q_;
  int cap_;  // q_ when no cap is active
  std::vector<std::uint64_t> pow_n_;
  std::vector<Term> terms_;
};

// 1 + X_j, or 1 - X_j + X_j^2 - ... for the inverse letter.
TruncatedSeries generator_series(int j, int sign, int n, int q, int repeat_cap = -1);

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

// The Magnus expansion E(w): m_j -> 1 + X_j.
TruncatedSeries expand(const GroupWord& word, int n, int q, int repeat_cap = -1);

Integer coefficient(const TruncatedSeries& series, const MultiIndex& monomial);

}  // namespace milnor
