#pragma once

#include "milnor/diagram.hpp"
#include "milnor/freegroup.hpp"
#include "milnor/multiindex.hpp"

namespace milnor {

// Pure string link in which strand `target` is pushed around the other strands
// along w, so that its longitude is w. Letters m_target are realized by pushing a
// parallel copy of the target strand around its own start and fusing the two.
// The exponent sum of m_target must vanish; the result is pure and zero framed.
StringLinkDiagram commutator_tangle(const GroupWord& w, int target, int n);

// V_pi: commutator tangle on strand pi(k) along [m_pi(1), [..., m_pi(k-1)]].
StringLinkDiagram make_V_pi(const InjectionPi& pi, int exponent = 1);
// V_tau: commutator tangle on strand k along [m_tau(1), [..., [m_tau(m-2), m_k]]].
StringLinkDiagram make_V_tau(const SurjectionTau& tau, int exponent = 1);
// Closure of V_(1,...,n).
LinkDiagram make_milnor_link(int n);

LinkDiagram hopf_link(int sign = 1);
// Five-crossing Whitehead link with linking number 0.
LinkDiagram whitehead_link();

}  // namespace milnor
