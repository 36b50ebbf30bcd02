#pragma once

#include <random>
#include <string>
#include <vector>

#include "milnor/diagram.hpp"
#include "milnor/generators.hpp"
#include "milnor/multiindex.hpp"

namespace milnor::testing {

struct NamedLink {
  std::string name;
  LinkDiagram link;
};

// trivial_2, trivial_3, Hopf, Whitehead, M_3 and closures of a few V_tau.
inline std::vector<NamedLink> link_corpus() {
  std::vector<NamedLink> out{
      {"trivial2", trivial_link(2)}, {"trivial3", trivial_link(3)}, {"hopf", hopf_link(1)},
      {"whitehead", whitehead_link()}, {"M3", make_milnor_link(3)}};
  for (int n = 2; n <= 3; ++n) {
    for (const SurjectionTau& tau : enumerate_R(2 * n, n, n)) {
      out.push_back({"cl V" + tau.index().to_string(), closure(make_V_tau(tau, 1))});
    }
    for (const SurjectionTau& tau : enumerate_P(2 * n, n, n)) {
      out.push_back({"cl V" + tau.index().to_string(), closure(make_V_tau(tau, 1))});
    }
  }
  return out;
}

struct NamedStringLink {
  std::string name;
  StringLinkDiagram link;
};

inline std::vector<NamedStringLink> string_link_corpus() {
  return {{"1_3", trivial_string_link(3)},
          {"sigma1^2", braid_to_stringlink(BraidWord{2, {1, 1}})},
          {"V12", make_V_pi(InjectionPi{2, {1, 2}})},
          {"V123", make_V_pi(InjectionPi{3, {1, 2, 3}})},
          {"V1234", make_V_pi(InjectionPi{4, {1, 2, 3, 4}})},
          {"V1122", make_V_tau(SurjectionTau{4, 2, 2, {1, 1}})},
          {"V12233", make_V_tau(SurjectionTau{5, 3, 3, {1, 2, 2}})},
          {"pure braid", braid_to_stringlink(BraidWord{3, {1, 2, 2, 1, -2, 1, 1, -2}})}};
}

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611u);
  return gen;
}

}  // namespace milnor::testing
