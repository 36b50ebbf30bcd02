#include <random>

#include "doctest.h"
#include "milnor/freegroup.hpp"
#include "support.hpp"

using namespace milnor;

namespace {

GroupWord w(int rank, const char* text) { return parse_group_word(rank, text); }

GroupWord random_word(int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Letter> letters;
  const int l = len(testing::rng());
  for (int i = 0; i < l; ++i) letters.push_back(Letter{gen(testing::rng()), sign(testing::rng()) ? 1 : -1});
  return GroupWord(rank, letters);
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(multiply(w(3, "1"), w(3, "-1")).is_identity());
  CHECK(multiply(w(3, "1"), w(3, "2")) == w(3, "1 2"));
  CHECK(multiply(w(3, "1 2"), w(3, "-2 3")) == w(3, "1 3"));
  CHECK(w(3, "1 2 -2 -1 3").to_string() == "3");
  CHECK(GroupWord(2).to_string().empty());
}

TEST_CASE("inverse, conjugate and commutator") {
  CHECK(commutator(w(3, "1"), w(3, "1")).is_identity());
  CHECK(inverse(w(3, "1 2")) == w(3, "-2 -1"));
  CHECK(commutator(w(3, "1"), w(3, "2")) == w(3, "1 2 -1 -2"));
  CHECK(conjugate(w(3, "1"), w(3, "2")) == w(3, "2 1 -2"));
  CHECK(power(w(2, "1 2"), -2) == w(2, "-2 -1 -2 -1"));
  CHECK(power(w(2, "1 2"), 0).is_identity());
}

TEST_CASE("iterated commutators") {
  const std::vector<Letter> one{{1, 1}};
  const std::vector<Letter> two{{1, 1}, {2, 1}};
  const std::vector<Letter> three{{1, 1}, {2, 1}, {3, 1}};
  CHECK(iterated_commutator(3, one) == w(3, "1"));
  CHECK(iterated_commutator(3, two) == commutator(w(3, "1"), w(3, "2")));
  const GroupWord c23 = commutator(w(3, "2"), w(3, "3"));
  CHECK(iterated_commutator(3, three) == multiply(multiply(w(3, "1"), c23), multiply(w(3, "-1"), inverse(c23))));
}

TEST_CASE("group axioms on random words") {
  for (int i = 0; i < 200; ++i) {
    const GroupWord a = random_word(3, 12);
    const GroupWord b = random_word(3, 12);
    const GroupWord c = random_word(3, 12);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, inverse(a)).is_identity());
    CHECK(inverse(inverse(a)) == a);
    CHECK(inverse(multiply(a, b)) == multiply(inverse(b), inverse(a)));
    CHECK(parse_group_word(3, a.to_string()) == a);
    for (int g = 1; g <= 3; ++g) {
      CHECK(multiply(a, b).exponent_sum(g) == a.exponent_sum(g) + b.exponent_sum(g));
      CHECK(commutator(a, b).exponent_sum(g) == 0);
    }
    const auto letters = a.letters();
    for (std::size_t j = 1; j < letters.size(); ++j) {
      CHECK_FALSE(letters[j] == letters[j - 1].inverse());
    }
  }
}

TEST_CASE("word parsing errors") {
  CHECK_THROWS(parse_group_word(2, "3"));
  CHECK_THROWS(parse_group_word(2, "0"));
  CHECK_THROWS(parse_group_word(2, "x"));
}
