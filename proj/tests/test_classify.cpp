#include <random>

#include "doctest.h"
#include "milnor/classify.hpp"
#include "milnor/error.hpp"
#include "support.hpp"

using namespace milnor;

TEST_CASE("normal forms") {
  const NormalForm z = homotopy_normal_form(trivial_string_link(3));
  CHECK(z.entries.size() == 4);
  for (const auto& e : z.entries) CHECK(e.exponent == 0);
  const NormalForm s = homotopy_normal_form(braid_to_stringlink(BraidWord{2, {1, 1}}));
  REQUIRE(s.entries.size() == 1);
  CHECK(s.entries[0].exponent == 1);
  std::uniform_int_distribution<int> ex(-2, 2);
  for (int i = 0; i < 10; ++i) {
    NormalForm want;
    want.n = 3;
    for (int k = 2; k <= 3; ++k) {
      for (const InjectionPi& pi : enumerate_F(k, 3)) want.entries.push_back({pi, ex(testing::rng())});
    }
    CHECK(homotopy_normal_form(normal_form_representative(want)) == want);
  }
}

TEST_CASE("string link homotopy decisions") {
  CHECK(link_homotopic(trivial_string_link(3), trivial_string_link(3)));
  CHECK_FALSE(link_homotopic(braid_to_stringlink(BraidWord{2, {1, 1}}), trivial_string_link(2)));
  CHECK(link_homotopic(make_V_tau(SurjectionTau{4, 2, 2, {1, 1}}), trivial_string_link(2)));
  const StringLinkDiagram v = make_V_pi(InjectionPi{3, {1, 2, 3}});
  CHECK(c1s_ck_equivalent(v, trivial_string_link(3), 2));
  CHECK_FALSE(c1s_ck_equivalent(v, trivial_string_link(3), 3));
  CHECK(c1s_ck_equivalent(v, trivial_string_link(3), 3) == link_homotopic(v, trivial_string_link(3)));
  CHECK_THROWS_AS(link_homotopic(v, trivial_string_link(2)), InvalidArgument);
}

TEST_CASE("closed link homotopy decisions") {
  CHECK(homotopy_decide(hopf_link(1), trivial_link(2)).verdict == Verdict::kNo);
  CHECK(homotopy_decide(whitehead_link(), trivial_link(2)).verdict == Verdict::kYes);
  CHECK(homotopy_decide(make_milnor_link(3), trivial_link(3)).verdict == Verdict::kNo);
  CHECK(homotopy_decide(trivial_link(4), trivial_link(4)).verdict == Verdict::kUndecided);
}

TEST_CASE("self Delta vectors") {
  const SelfDeltaVector t = selfdelta_vector(trivial_link(2));
  CHECK(t.hypothesis_ok);
  for (const auto& r : t.entries) CHECK(r.value.is_zero());
  const SelfDeltaVector w = selfdelta_vector(whitehead_link());
  CHECK(w.hypothesis_ok);
  bool found = false;
  for (const auto& r : w.entries) {
    if (r.index == MultiIndex{1, 1, 2, 2}) found = !r.value.is_zero();
  }
  CHECK(found);
  const SelfDeltaVector h = selfdelta_vector(hopf_link(1));
  CHECK_FALSE(h.hypothesis_ok);
  CHECK(h.entries.empty());
  REQUIRE(h.obstruction.has_value());
  CHECK(*h.obstruction == MultiIndex{1, 2});
}

TEST_CASE("self Delta verdicts") {
  CHECK(selfdelta_equivalent(trivial_link(3), trivial_link(3)) == Verdict::kYes);
  const SelfDeltaDecision d = selfdelta_decide(whitehead_link(), trivial_link(2));
  CHECK(d.verdict == Verdict::kNo);
  REQUIRE(d.witness.has_value());
  CHECK(repeat_max(*d.witness) == 2);
  CHECK(selfdelta_equivalent(hopf_link(1), trivial_link(2)) == Verdict::kNo);
  CHECK(selfdelta_equivalent(hopf_link(1), hopf_link(1)) == Verdict::kUndecided);
  CHECK(selfdelta_equivalent(whitehead_link(), add_kink_pair(whitehead_link(), 2)) == Verdict::kYes);
  CHECK(selfdelta_trivial(trivial_link(3)));
  CHECK_FALSE(selfdelta_trivial(whitehead_link()));
  CHECK_FALSE(selfdelta_trivial(make_milnor_link(3)));
  CHECK(homotopy_trivial(whitehead_link()));
  CHECK_FALSE(homotopy_trivial(hopf_link(1)));
}

TEST_CASE("Brunnian representatives") {
  const BrunnianRep t = brunnian_representative(trivial_link(3));
  for (int e : t.epsilon) CHECK(e == 0);
  for (const auto& x : t.tau_exponents) CHECK(x == 0);
  for (const auto& x : t.eta_exponents) CHECK(x == 0);
  for (const SurjectionTau& tau : enumerate_P(6, 3, 3)) {
    BrunnianRep rep = brunnian_representative(closure(make_V_tau(tau, 1)));
    for (std::size_t i = 0; i < rep.etas.size(); ++i) {
      CHECK(rep.eta_exponents[i] == (rep.etas[i] == tau ? 1 : 0));
    }
    CHECK(verify_brunnian_representative(closure(make_V_tau(tau, 1)), rep));
  }
  for (int n = 2; n <= 3; ++n) {
    for (const SurjectionTau& tau : enumerate_R(2 * n, n, n)) {
      const LinkDiagram l = closure(make_V_tau(tau, 1));
      BrunnianRep rep = brunnian_representative(l);
      for (int e : rep.epsilon) CHECK(e == 0);
      for (std::size_t i = 0; i < rep.taus.size(); ++i) {
        CHECK(rep.tau_exponents[i] == (rep.taus[i] == tau ? 1 : 0));
      }
      CHECK(verify_brunnian_representative(l, rep));
      CHECK(rep.verified == std::optional<bool>(true));
    }
  }
  CHECK_THROWS_AS(brunnian_representative(hopf_link(1)), HypothesisError);
}

TEST_CASE("2-parallel consistency") {
  const Cor2Report t = cor2_report(trivial_link(2));
  CHECK(t.selfdelta_trivial);
  CHECK(t.cable_homotopy_trivial);
  const Cor2Report w = cor2_report(whitehead_link());
  CHECK_FALSE(w.selfdelta_trivial);
  CHECK_FALSE(w.cable_homotopy_trivial);
  CHECK(cor2_consistency(hopf_link(1)));
}
