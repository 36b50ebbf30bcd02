#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace milnor {

// A finite sequence of 1-based component indices i_1 i_2 ... i_m.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries);

  std::size_t length() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int back() const { return entries_.back(); }
  std::span<const int> entries() const { return entries_; }

  // Largest entry; 0 for the empty index.
  int max_entry() const;
  // True when every entry lies in 1..n.
  bool within(int n) const;

  MultiIndex without_last() const;
  MultiIndex erased(std::size_t position) const;
  // Cyclic shift: entry `shift` becomes the first one.
  MultiIndex rotated(std::size_t shift) const;
  MultiIndex appended(int entry) const;

  // "12233" when every entry is a single digit, "10,11,3" otherwise.
  std::string to_string() const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> entries_;
};

// Accepts "12233", "1,2,2,3,3" and "[1,2,2,3,3]".
MultiIndex parse_multi_index(std::string_view text);

// r(I): the largest number of times any single value occurs in I.
int repeat_max(const MultiIndex& index);

// Orders by length first, then lexicographically.
struct LengthLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    return a < b;
  }
};

// All indices over 1..n with min_length <= |I| <= max_length and r(I) <= max_r,
// in (length, lexicographic) order.
std::vector<MultiIndex> enumerate_indices(int n, int max_length, int max_r,
                                          int min_length = 2);

// An injection pi: {1..k} -> {1..n} with pi(i) < pi(k-1) < pi(k) for i <= k-2.
struct InjectionPi {
  int n = 0;
  std::vector<int> values;

  int arity() const { return static_cast<int>(values.size()); }
  MultiIndex index() const { return MultiIndex(values); }

  friend bool operator==(const InjectionPi&, const InjectionPi&) = default;
  friend auto operator<=>(const InjectionPi&, const InjectionPi&) = default;
};

// A surjection tau: {1..m-2} -> {1..n} \ {k} with every fibre of size <= 2 and
// fibres over j > k of size exactly 1.
struct SurjectionTau {
  int m = 0;
  int k = 0;
  int n = 0;
  std::vector<int> values;

  // tau(1) ... tau(m-2) k k, the index of mu_tau.
  MultiIndex index() const;

  friend bool operator==(const SurjectionTau&, const SurjectionTau&) = default;
  friend auto operator<=>(const SurjectionTau&, const SurjectionTau&) = default;
};

// Throws InvalidArgument if the data violates the defining constraints.
void validate(const InjectionPi& pi);
void validate(const SurjectionTau& tau);

std::vector<InjectionPi> enumerate_F(int k, int n);
std::vector<SurjectionTau> enumerate_B(int m, int k, int n);
std::vector<SurjectionTau> enumerate_P(int m, int k, int n);
std::vector<SurjectionTau> enumerate_R(int m, int k, int n);

bool in_P(const SurjectionTau& tau);
bool in_R(const SurjectionTau& tau);

// tau composed with rho_m(i) = m-1-i, i.e. the reversed value sequence.
SurjectionTau apply_rho(const SurjectionTau& tau);

// For phi in R_{2n-1}(n), the unique tau in R_{2n}(n) agreeing with phi on 1..n-1.
SurjectionTau matching_R2n(const SurjectionTau& phi);

}  // namespace milnor
