#include "milnor/generators.hpp"

#include <algorithm>
#include <numeric>

#include "assembly.hpp"
#include "milnor/error.hpp"

namespace milnor {

namespace {

// Moves the strand at `cur` next to position `pos`, passing in front of the strands
// in between, twists around it with two crossings of the given sign, and comes back.
void push_loop(detail::TangleBuilder& b, int cur, int pos, int sign) {
  if (pos < cur) {
    for (int p = cur - 1; p > pos; --p) b.cross(p, false);
    b.cross(pos, sign < 0);
    b.cross(pos, sign < 0);
    for (int p = pos + 1; p < cur; ++p) b.cross(p, true);
  } else {
    for (int p = cur; p + 1 < pos; ++p) b.cross(p, true);
    b.cross(pos - 1, sign < 0);
    b.cross(pos - 1, sign < 0);
    for (int p = pos - 2; p >= cur; --p) b.cross(p, false);
  }
}

}  // namespace

StringLinkDiagram commutator_tangle(const GroupWord& w, int target, int n) {
  if (n < 1) throw InvalidArgument("component count must be positive");
  if (target < 1 || target > n) throw InvalidArgument("target component out of range");
  if (w.rank() != n) throw InvalidArgument("word rank differs from the component count");
  if (w.exponent_sum(target) != 0) {
    throw InvalidArgument("word must have zero exponent sum in the target meridian");
  }
  const bool self_letters = std::any_of(w.letters().begin(), w.letters().end(),
                                        [&](const Letter& l) { return l.generator == target; });
  const int k = target;
  if (!self_letters) {
    detail::TangleBuilder b(n);
    for (const Letter& l : w.letters()) push_loop(b, k - 1, l.generator - 1, l.sign);
    return b.finish_string_link("commutator tangle");
  }

  // Strand k runs in front to the far right (k'), climbs back over everything from
  // a cap next to its own start (k'' going down, R going up), and k' joins R at a cup.
  detail::TangleBuilder b(n);
  for (int p = k - 1; p + 1 < n; ++p) b.cross(p, true);
  b.cap(k - 1, true);
  for (int p = k; p <= n; ++p) b.cross(p, true);
  // Positions now: components other than k in order, k'' at k-1, k' at n, R at n+1.
  for (const Letter& l : w.letters()) push_loop(b, n, l.generator - 1, l.sign);
  b.cup(n);
  return b.finish_string_link("commutator tangle");
}

StringLinkDiagram make_V_pi(const InjectionPi& pi, int exponent) {
  validate(pi);
  if (exponent != 1 && exponent != -1) throw InvalidArgument("exponent must be +-1");
  const int k = pi.arity();
  std::vector<Letter> letters;
  for (int i = 0; i + 1 < k; ++i) letters.push_back(Letter{pi.values[static_cast<std::size_t>(i)], 1});
  GroupWord w = iterated_commutator(pi.n, letters);
  if (exponent < 0) w = inverse(w);
  StringLinkDiagram out = commutator_tangle(w, pi.values.back(), pi.n);
  DiagramData d = out.data();
  d.name = "V" + pi.index().to_string() + (exponent < 0 ? "^-1" : "");
  return StringLinkDiagram(std::move(d));
}

StringLinkDiagram make_V_tau(const SurjectionTau& tau, int exponent) {
  validate(tau);
  if (exponent != 1 && exponent != -1) throw InvalidArgument("exponent must be +-1");
  std::vector<Letter> letters;
  for (int v : tau.values) letters.push_back(Letter{v, 1});
  letters.push_back(Letter{tau.k, 1});
  GroupWord w = iterated_commutator(tau.n, letters);
  if (exponent < 0) w = inverse(w);
  StringLinkDiagram out = commutator_tangle(w, tau.k, tau.n);
  DiagramData d = out.data();
  d.name = "V" + tau.index().to_string() + (exponent < 0 ? "^-1" : "");
  return StringLinkDiagram(std::move(d));
}

LinkDiagram make_milnor_link(int n) {
  if (n < 2) throw InvalidArgument("Milnor links need at least two components");
  InjectionPi pi{n, {}};
  pi.values.resize(static_cast<std::size_t>(n));
  std::iota(pi.values.begin(), pi.values.end(), 1);
  DiagramData d = closure(make_V_pi(pi)).data();
  d.name = "M" + std::to_string(n);
  return LinkDiagram(std::move(d));
}

LinkDiagram hopf_link(int sign) {
  if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +-1");
  DiagramData d = braid_closure(BraidWord{2, {sign, sign}}).data();
  d.name = sign > 0 ? "hopf" : "hopf-negative";
  return LinkDiagram(std::move(d));
}

LinkDiagram whitehead_link() {
  // X[6,1,7,2] X[10,7,5,8] X[4,5,1,6] X[2,10,3,9] X[8,4,9,3]; arcs 1-4 and 5-10.
  DiagramData d;
  d.name = "whitehead";
  d.components = 2;
  d.arc_component = {1, 1, 1, 1, 2, 2, 2, 2, 2, 2};
  d.successor = {1, 2, 3, 0, 5, 6, 7, 8, 9, 4};
  auto a = [](int label) { return label - 1; };
  d.crossings = {
      Crossing{a(6), a(7), a(1), a(2), -1},  Crossing{a(10), a(5), a(7), a(8), -1},
      Crossing{a(4), a(1), a(5), a(6), -1},  Crossing{a(2), a(3), a(9), a(10), 1},
      Crossing{a(8), a(9), a(3), a(4), 1},
  };
  return LinkDiagram(std::move(d));
}

}  // namespace milnor
