#include "milnor/freegroup.hpp"

#include <sstream>

#include "milnor/error.hpp"

namespace milnor {

namespace {

void require_same_rank(const GroupWord& a, const GroupWord& b) {
  if (a.rank() != b.rank()) throw InvalidArgument("free group rank mismatch");
}

}  // namespace

GroupWord::GroupWord(int rank) : rank_(rank) {
  if (rank < 0) throw InvalidArgument("negative free group rank");
}

GroupWord::GroupWord(int rank, std::vector<Letter> letters) : GroupWord(rank) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) push(l);
}

GroupWord GroupWord::generator(int rank, int index, int sign) {
  return GroupWord(rank, {Letter{index, sign}});
}

void GroupWord::push(Letter letter) {
  if (letter.generator < 1 || letter.generator > rank_) {
    throw InvalidArgument("generator index " + std::to_string(letter.generator) +
                          " outside rank " + std::to_string(rank_));
  }
  if (letter.sign != 1 && letter.sign != -1) throw InvalidArgument("letter sign must be +-1");
  if (!letters_.empty() && letters_.back() == letter.inverse()) {
    letters_.pop_back();
  } else {
    letters_.push_back(letter);
  }
}

int GroupWord::exponent_sum(int index) const {
  int total = 0;
  for (const Letter& l : letters_) {
    if (l.generator == index) total += l.sign;
  }
  return total;
}

std::string GroupWord::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) os << ' ';
    os << letters_[i].sign * letters_[i].generator;
  }
  return os.str();
}

GroupWord parse_group_word(int rank, std::string_view text) {
  std::istringstream is{std::string(text)};
  std::vector<Letter> letters;
  std::string token;
  while (is >> token) {
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(token, &used);
      if (used != token.size()) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("bad group word token '" + token + "'");
    }
    if (value == 0) throw ParseError("group word letters must be nonzero");
    letters.push_back(Letter{value > 0 ? value : -value, value > 0 ? 1 : -1});
  }
  return GroupWord(rank, std::move(letters));
}

GroupWord multiply(const GroupWord& a, const GroupWord& b) {
  require_same_rank(a, b);
  std::vector<Letter> letters(a.letters().begin(), a.letters().end());
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return GroupWord(a.rank(), std::move(letters));
}

GroupWord inverse(const GroupWord& a) {
  std::vector<Letter> letters;
  letters.reserve(a.length());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) {
    letters.push_back(it->inverse());
  }
  return GroupWord(a.rank(), std::move(letters));
}

GroupWord conjugate(const GroupWord& a, const GroupWord& by) {
  require_same_rank(a, by);
  return multiply(multiply(by, a), inverse(by));
}

GroupWord commutator(const GroupWord& a, const GroupWord& b) {
  require_same_rank(a, b);
  return multiply(multiply(a, b), multiply(inverse(a), inverse(b)));
}

GroupWord power(const GroupWord& a, int exponent) {
  GroupWord base = exponent >= 0 ? a : inverse(a);
  GroupWord out(a.rank());
  for (int i = 0; i < (exponent >= 0 ? exponent : -exponent); ++i) out = multiply(out, base);
  return out;
}

GroupWord iterated_commutator(int rank, std::span<const Letter> generators) {
  if (generators.empty()) throw InvalidArgument("iterated_commutator needs at least one letter");
  GroupWord acc(rank, {generators.back()});
  for (auto it = generators.rbegin() + 1; it != generators.rend(); ++it) {
    acc = commutator(GroupWord(rank, {*it}), acc);
  }
  return acc;
}

}  // namespace milnor
