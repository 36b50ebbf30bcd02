#include <random>

#include "doctest.h"
#include "milnor/error.hpp"
#include "milnor/generators.hpp"
#include "milnor/invariants.hpp"
#include "support.hpp"

using namespace milnor;

namespace {

const char* kHopfPd = R"({
  "name": "hopf",
  "components": 2,
  "pd": [[1, 4, 2, 3], [4, 1, 3, 2]],
  "component_of_arc": {"1": 1, "2": 1, "3": 2, "4": 2},
  "orientation": {"1": 2, "2": 1, "3": 4, "4": 3}
})";

// Sign from the orientation of both strands: +1 when the over-strand runs from
// position d to position b of the PD tuple.
int pd_sign(const std::array<int, 4>& pd, const std::map<int, int>& next) {
  const int b = pd[1];
  const int d = pd[3];
  if (next.count(d) != 0U && next.at(d) == b) return 1;
  return -1;
}

// Half the signed count of crossings between the two components.
int lk_oracle(const Diagram& d, int a, int b) {
  int total = 0;
  for (const Crossing& c : d.crossings()) {
    const int u = d.component_of(c.under_in);
    const int o = d.component_of(c.over_in);
    if ((u == a && o == b) || (u == b && o == a)) total += c.sign;
  }
  return total / 2;
}

StringLinkDiagram random_pure_braid(int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int> word;
  for (int i = 0; i < len; ++i) {
    const int g = gen(testing::rng()) * (sign(testing::rng()) ? 1 : -1);
    word.push_back(g);
    word.push_back(g);
  }
  return braid_to_stringlink(BraidWord{n, word});
}

}  // namespace

TEST_CASE("PD parsing of the Hopf link") {
  const AnyDiagram any = parse_diagram_json(kHopfPd);
  REQUIRE(std::holds_alternative<LinkDiagram>(any));
  const LinkDiagram& h = std::get<LinkDiagram>(any);
  CHECK(h.components() == 2);
  CHECK(h.crossings().size() == 2);
  const std::map<int, int> next{{1, 2}, {2, 1}, {3, 4}, {4, 3}};
  CHECK(pd_sign({1, 4, 2, 3}, next) == 1);
  CHECK(pd_sign({4, 1, 3, 2}, next) == 1);
  for (const Crossing& c : h.crossings()) CHECK(c.sign == 1);
  CHECK(h.linking_number(1, 2) == 1);
  CHECK(h == hopf_link(1));
}

TEST_CASE("PD parsing of crossingless diagrams") {
  const auto any = parse_diagram_json(R"({"components": 3, "pd": [],
    "component_of_arc": [1, 2, 3], "orientation": [1, 2, 3]})");
  const Diagram& d = as_diagram(any);
  CHECK(d.components() == 3);
  CHECK(d.crossings().empty());
  CHECK(d == trivial_link(3));
}

TEST_CASE("PD validation errors") {
  CHECK_THROWS_AS(parse_diagram_json("{"), ParseError);
  CHECK_THROWS_AS(parse_diagram_json(R"({"components": 2})"), ParseError);
  CHECK_THROWS_AS(parse_diagram_json(R"({"components": 2, "pd": [[1, 4, 2, 3], [4, 1, 3, 2], [1, 3, 2, 4]],
    "component_of_arc": {"1": 1, "2": 1, "3": 2, "4": 2},
    "orientation": {"1": 2, "2": 1, "3": 4, "4": 3}})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_diagram_json(R"({"components": 2, "pd": [[1, 4, 2, 3], [4, 1, 3, 2]],
    "component_of_arc": {"1": 1, "2": 1, "3": 2, "4": 3},
    "orientation": {"1": 2, "2": 1, "3": 4, "4": 3}})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_diagram_json(R"({"components": 2, "pd": [[1, 4, 2, 3], [4, 1, 3, 2]],
    "component_of_arc": {"1": 1, "2": 1, "3": 2, "4": 2},
    "orientation": {"1": 1, "2": 2, "3": 4, "4": 3}})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_diagram_json(R"({"strands": 2, "word": [1], "kind": "stringlink"})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_diagram_json(R"({"strands": 2, "word": [3]})"), ValidationError);
}

TEST_CASE("JSON round trip") {
  for (const auto& [name, link] : testing::link_corpus()) {
    CAPTURE(name);
    const AnyDiagram back = parse_diagram_json(to_json_text(link));
    REQUIRE(std::holds_alternative<LinkDiagram>(back));
    CHECK(std::get<LinkDiagram>(back) == link);
    CHECK(to_json_text(std::get<LinkDiagram>(back)) == to_json_text(link));
  }
  for (const auto& [name, link] : testing::string_link_corpus()) {
    CAPTURE(name);
    const AnyDiagram back = parse_diagram_json(to_json_text(link));
    REQUIRE(std::holds_alternative<StringLinkDiagram>(back));
    CHECK(std::get<StringLinkDiagram>(back) == link);
  }
}

TEST_CASE("braids") {
  CHECK(braid_to_stringlink(BraidWord{3, {}}) == trivial_string_link(3));
  CHECK_THROWS_AS(braid_to_stringlink(BraidWord{2, {1}}), InvalidArgument);
  CHECK(braid_permutation(BraidWord{3, {1, 2}}) == std::vector<int>{2, 0, 1});
  const StringLinkDiagram s = braid_to_stringlink(BraidWord{2, {1, 1}});
  CHECK(s.linking_number(1, 2) + s.linking_number(2, 1) == 2);
  CHECK(MilnorEngine(s).mu(MultiIndex{1, 2}) == 1);
  CHECK(braid_closure(BraidWord{2, {1, 1}}).components() == 2);
  CHECK(braid_closure(BraidWord{3, {1, 2}}).components() == 1);
}

TEST_CASE("stacking") {
  const StringLinkDiagram s = braid_to_stringlink(BraidWord{2, {1, 1}});
  CHECK(stack(s, trivial_string_link(2)) == s);
  CHECK(stack(trivial_string_link(2), s) == s);
  CHECK(MilnorEngine(stack(s, s)).mu(MultiIndex{1, 2}) == 2);
  for (int i = 0; i < 5; ++i) {
    const auto a = random_pure_braid(3, 3);
    const auto b = make_V_pi(InjectionPi{3, {1, 2, 3}}, i % 2 ? 1 : -1);
    const auto c = random_pure_braid(3, 2);
    CHECK(stack(stack(a, b), c) == stack(a, stack(b, c)));
    const std::vector<StringLinkDiagram> all{a, b, c};
    CHECK(stack_all(all, 3) == stack(a, stack(b, c)));
  }
  CHECK_THROWS_AS(stack(s, trivial_string_link(3)), InvalidArgument);
}

TEST_CASE("closure") {
  CHECK(closure(trivial_string_link(3)) == trivial_link(3));
  const LinkDiagram h = closure(braid_to_stringlink(BraidWord{2, {1, 1}}));
  CHECK(h == hopf_link(1));
  CHECK(closure(braid_to_stringlink(BraidWord{2, {-1, -1}})) == hopf_link(-1));
}

TEST_CASE("linking numbers agree with the crossing oracle") {
  for (const auto& [name, link] : testing::link_corpus()) {
    CAPTURE(name);
    for (int a = 1; a <= link.components(); ++a) {
      for (int b = 1; b <= link.components(); ++b) {
        if (a == b) continue;
        CHECK(link.linking_number(a, b) == lk_oracle(link, a, b));
        CHECK(link.linking_number(a, b) == link.linking_number(b, a));
      }
    }
  }
  CHECK(whitehead_link().linking_number(1, 2) == 0);
  CHECK(hopf_link(-1).linking_number(1, 2) == -1);
}

TEST_CASE("cabling") {
  const std::vector<int> twos{2, 2};
  const CabledLink t = cable(trivial_link(2), twos);
  CHECK(t.link.components() == 4);
  CHECK(t.link.crossings().empty());
  CHECK(t.source_component == std::vector<int>{1, 1, 2, 2});
  const std::vector<int> two_one{2, 1};
  const CabledLink h = cable(hopf_link(1), two_one);
  CHECK(h.link.components() == 3);
  CHECK(h.link.linking_number(1, 3) == 1);
  CHECK(h.link.linking_number(2, 3) == 1);
  CHECK(h.link.linking_number(1, 2) == 0);
  const std::vector<int> bad{2};
  CHECK_THROWS_AS(cable(hopf_link(1), bad), InvalidArgument);
}

TEST_CASE("kink pairs change the diagram, not the invariants") {
  const LinkDiagram w = whitehead_link();
  const LinkDiagram k = add_kink_pair(w, 0);
  CHECK(k.crossings().size() == w.crossings().size() + 2);
  CHECK(k.writhe(1) == w.writhe(1));
  const StringLinkDiagram v = make_V_pi(InjectionPi{3, {1, 2, 3}});
  for (int arc = 0; arc < v.arc_count(); arc += 3) {
    const StringLinkDiagram kv = add_kink_pair(v, arc);
    MilnorEngine a(v);
    MilnorEngine b(kv);
    for (const MultiIndex& I : enumerate_indices(3, 4, 4)) CHECK(a.mu(I) == b.mu(I));
  }
}
