#include <algorithm>

#include "doctest.h"
#include "json.hpp"
#include "milnor/error.hpp"
#include "milnor/invariants.hpp"
#include "support.hpp"

using namespace milnor;

namespace {

// gcd of mu over proper subsequences of I, optionally with their cyclic shifts.
Integer delta_oracle(MilnorEngine& e, const MultiIndex& I, bool cyclic) {
  Integer g = 0;
  const std::size_t len = I.length();
  for (std::uint32_t mask = 1; mask + 1 < (1U << len); ++mask) {
    std::vector<int> sub;
    for (std::size_t j = 0; j < len; ++j) {
      if ((mask >> j & 1U) != 0U) sub.push_back(I[j]);
    }
    if (sub.size() < 2) continue;
    const MultiIndex J(sub);
    const std::size_t shifts = cyclic ? J.length() : 1;
    for (std::size_t r = 0; r < shifts; ++r) g = gcd(g, e.mu(J.rotated(r)));
  }
  return g;
}

}  // namespace

TEST_CASE("residues normalize") {
  CHECK(Residue(-1, 3) == Residue(2, 3));
  CHECK(Residue(5, -3) == Residue(2, 3));
  CHECK(Residue(7, 1).is_zero());
  CHECK(Residue(-4, 0).value == -4);
  CHECK(Residue(1, 0).to_string() == "1 (mod 0)");
  CHECK(parse_delta_mode("paper-strict") == DeltaMode::kStrict);
  CHECK_THROWS_AS(parse_delta_mode("other"), InvalidArgument);
}

TEST_CASE("string link values") {
  const StringLinkDiagram one = trivial_string_link(3);
  for (const MultiIndex& I : enumerate_indices(3, 4, 4)) CHECK(mu_string(one, I) == 0);
  CHECK(mu_string(braid_to_stringlink(BraidWord{2, {1, 1}}), MultiIndex{1, 2}) == 1);
  for (int n = 2; n <= 4; ++n) {
    for (int k = 2; k <= n; ++k) {
      for (const InjectionPi& pi : enumerate_F(k, n)) {
        CHECK(mu_string(make_V_pi(pi, 1), pi.index()) == 1);
        CHECK(mu_string(make_V_pi(pi, -1), pi.index()) == -1);
      }
    }
  }
  MilnorEngine e(make_V_pi(InjectionPi{3, {1, 2, 3}}));
  // With length two vanishing, shuffle and cyclic symmetry give mu(132) = mu(213) = -mu(123).
  CHECK(e.mu(MultiIndex{2, 1, 3}) == -1);
  CHECK(e.mu(MultiIndex{1, 3, 2}) == -1);
  for (const MultiIndex& I : enumerate_indices(3, 2, 2)) CHECK(e.mu(I) == 0);
  CHECK_THROWS_AS(e.mu(MultiIndex{1}), InvalidArgument);
  CHECK_THROWS_AS(e.mu(MultiIndex{1, 4}), InvalidArgument);
}

TEST_CASE("Milnor links") {
  MilnorEngine m3(make_milnor_link(3));
  CHECK(m3.delta(MultiIndex{1, 2, 3}) == 0);
  CHECK(m3.mubar(MultiIndex{1, 2, 3}) == Residue(1, 0));
  MilnorEngine m4(make_milnor_link(4));
  CHECK(m4.mubar(MultiIndex{1, 2, 3, 4}) == Residue(1, 0));
  CHECK(m4.mubar(MultiIndex{2, 1, 3, 4}) == Residue(0, 0));
  MilnorEngine t(trivial_link(3));
  for (const MultiIndex& I : enumerate_indices(3, 4, 2)) {
    CHECK(t.mubar(I).is_zero());
    CHECK(t.delta(I) == 0);
  }
}

TEST_CASE("linking numbers are the length two invariants") {
  for (const auto& [name, link] : testing::link_corpus()) {
    CAPTURE(name);
    MilnorEngine e(link);
    for (int a = 1; a <= link.components(); ++a) {
      for (int b = 1; b <= link.components(); ++b) {
        if (a != b) CHECK(e.mubar(MultiIndex{a, b}).value == link.linking_number(a, b));
      }
    }
  }
}

TEST_CASE("indeterminacy against subsequence enumeration") {
  const StringLinkDiagram hopf_and_parallel = braid_to_stringlink(BraidWord{3, {1, 1, 2, 1, 1, -2}});
  std::vector<LinkDiagram> links{closure(hopf_and_parallel), make_milnor_link(3), whitehead_link(),
                                 hopf_link(1)};
  for (const LinkDiagram& l : links) {
    MilnorEngine e(l);
    for (const MultiIndex& I : enumerate_indices(l.components(), 4, 2, 3)) {
      CAPTURE(I.to_string());
      CHECK(e.delta(I, DeltaMode::kMilnorCyclic) == delta_oracle(e, I, true));
      CHECK(e.delta(I, DeltaMode::kStrict) == delta_oracle(e, I, false));
    }
  }
  MilnorEngine e(closure(hopf_and_parallel));
  CHECK(e.mu(MultiIndex{1, 2}) == 1);
  CHECK(e.delta(MultiIndex{1, 2, 2}) == 1);
}

TEST_CASE("cyclic symmetry of mubar") {
  for (const auto& [name, link] : testing::link_corpus()) {
    CAPTURE(name);
    MilnorEngine e(link);
    for (const MultiIndex& I : enumerate_indices(link.components(), 4, 4)) {
      const Residue base = e.mubar(I);
      for (std::size_t r = 1; r < I.length(); ++r) CHECK(e.mubar(I.rotated(r)) == base);
    }
  }
}

TEST_CASE("closure agrees with the string link at the first nonvanishing length") {
  for (int n = 2; n <= 4; ++n) {
    for (const InjectionPi& pi : enumerate_F(n, n)) {
      const StringLinkDiagram v = make_V_pi(pi);
      MilnorEngine s(v);
      MilnorEngine c(closure(v));
      MilnorEngine c2(closure(stack(trivial_string_link(n), stack(v, trivial_string_link(n)))));
      for (const MultiIndex& I : enumerate_indices(n, n, 1, n)) {
        CHECK(c.mubar(I) == Residue(s.mu(I), 0));
        CHECK(c2.mubar(I) == c.mubar(I));
      }
    }
  }
}

TEST_CASE("engine caching does not change values") {
  const LinkDiagram w = whitehead_link();
  MilnorEngine fresh(w);
  MilnorEngine warmed(w);
  warmed.prepare(6, 2);
  for (const MultiIndex& I : enumerate_indices(2, 5, 2)) CHECK(fresh.mu(I) == warmed.mu(I));
  MilnorEngine capped(w);
  capped.prepare(5, 1);
  CHECK(capped.mu(MultiIndex{1, 1, 2, 2}) == fresh.mu(MultiIndex{1, 1, 2, 2}));
}

TEST_CASE("tables") {
  const InvariantTable t = table(trivial_string_link(3), 4, 2);
  CHECK(t.nonzero().empty());
  CHECK(t.rows.size() == enumerate_indices(3, 4, 2).size());
  const InvariantTable m = table(make_milnor_link(3), 3, 1);
  for (const InvariantRow& r : m.nonzero()) {
    std::vector<int> sorted(r.index.entries().begin(), r.index.entries().end());
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{1, 2, 3});
  }
  CHECK(m.to_text(true).find("123: 1 (mod 0)") != std::string::npos);
  const InvariantTable v = table(make_V_tau(SurjectionTau{4, 2, 2, {1, 1}}), 4, 2);
  const auto row = std::find_if(v.rows.begin(), v.rows.end(),
                                [](const InvariantRow& r) { return r.index == MultiIndex{1, 1, 2, 2}; });
  REQUIRE(row != v.rows.end());
  CHECK(row->value.value == 2);
  const auto j = nlohmann::json::parse(m.to_json());
  CHECK(j["rows"][0].contains("index"));
  CHECK(j["rows"][0].contains("value"));
  CHECK(j["rows"][0].contains("modulus"));
}

TEST_CASE("threaded tables match serial tables") {
  const LinkDiagram l = closure(make_V_tau(SurjectionTau{6, 3, 3, {1, 2, 2, 1}}));
  const InvariantTable a = table(l, 5, 2, DeltaMode::kMilnorCyclic, 1);
  const InvariantTable b = table(l, 5, 2, DeltaMode::kMilnorCyclic, 4);
  CHECK(a.to_json() == b.to_json());
}

TEST_CASE("generators indexed by R_2n-1") {
  for (int n = 2; n <= 3; ++n) {
    for (int k = n - 1; k <= n; ++k) {
      for (const SurjectionTau& phi : enumerate_R(2 * n - 1, k, n)) {
        MilnorEngine e(make_V_tau(phi));
        // Only values with r(I) <= 2 survive self Delta moves.
        for (const MultiIndex& I : enumerate_indices(n, 2 * n - 1, 2)) {
          CAPTURE(I.to_string());
          CHECK(e.mu(I) == 0);
        }
      }
    }
    std::vector<SurjectionTau> top = enumerate_R(2 * n, n, n);
    for (const auto& t : enumerate_P(2 * n, n, n)) top.push_back(t);
    for (const SurjectionTau& phi : enumerate_R(2 * n - 1, n, n)) {
      MilnorEngine e(make_V_tau(phi));
      for (const SurjectionTau& tau : top) {
        const bool match = in_R(tau) && std::equal(phi.values.begin(), phi.values.begin() + (n - 1),
                                                   tau.values.begin());
        const Integer v = e.mu(tau.index());
        CHECK((v < 0 ? Integer(-v) : v) == (match ? 1 : 0));
      }
    }
  }
}
