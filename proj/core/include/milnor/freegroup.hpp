#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace milnor {

// m_generator^sign in a free group on meridians m_1..m_rank.
struct Letter {
  int generator = 1;
  int sign = 1;

  Letter inverse() const { return Letter{generator, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

// A freely reduced word in the free group of the given rank.
class GroupWord {
 public:
  explicit GroupWord(int rank = 0);
  GroupWord(int rank, std::vector<Letter> letters);

  static GroupWord generator(int rank, int index, int sign = 1);

  int rank() const { return rank_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }

  // Exponent sum of m_index.
  int exponent_sum(int index) const;

  // Space separated, negative numbers for inverse letters: "1 2 -1 -2".
  std::string to_string() const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  void push(Letter letter);

  int rank_ = 0;
  std::vector<Letter> letters_;
};

GroupWord parse_group_word(int rank, std::string_view text);

GroupWord multiply(const GroupWord& a, const GroupWord& b);
GroupWord inverse(const GroupWord& a);
// by * a * by^-1
GroupWord conjugate(const GroupWord& a, const GroupWord& by);
// [a, b] = a b a^-1 b^-1
GroupWord commutator(const GroupWord& a, const GroupWord& b);
GroupWord power(const GroupWord& a, int exponent);
// Right-normed [g_1, [g_2, [..., g_r]...]].
GroupWord iterated_commutator(int rank, std::span<const Letter> generators);

}  // namespace milnor
