#pragma once

#include <optional>
#include <string>
#include <vector>

#include "milnor/diagram.hpp"
#include "milnor/invariants.hpp"
#include "milnor/multiindex.hpp"

namespace milnor {

// --- link-homotopy of string links ---------------------------------------------------

struct NormalFormEntry {
  InjectionPi pi;
  Integer exponent;

  friend bool operator==(const NormalFormEntry&, const NormalFormEntry&) = default;
};

// Exponents x_pi of V_pi for pi in F_2, F_3, ..., F_n, each family in lexicographic order.
struct NormalForm {
  int n = 0;
  std::vector<NormalFormEntry> entries;

  std::string to_string() const;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm homotopy_normal_form(const StringLinkDiagram& l);
// The product of V_pi^{x_pi} in normal form order.
StringLinkDiagram normal_form_representative(const NormalForm& form);

bool link_homotopic(const StringLinkDiagram& a, const StringLinkDiagram& b);
// Agreement of every mu(I) with r(I) = 1 and |I| <= k.
bool c1s_ck_equivalent(const StringLinkDiagram& a, const StringLinkDiagram& b, int k);

// --- self Delta-equivalence of links --------------------------------------------------

enum class Verdict { kYes, kNo, kUndecided };
std::string to_string(Verdict v);

struct SelfDeltaVector {
  int n = 0;
  bool hypothesis_ok = false;
  // First index with |I| <= 2n-1, r(I) <= 2 and nonvanishing invariant, if any.
  std::optional<MultiIndex> obstruction;
  std::optional<Residue> obstruction_value;
  std::vector<InvariantRow> entries;  // |J| = 2n, r(J) = 2; empty unless hypothesis_ok
};

SelfDeltaVector selfdelta_vector(const LinkDiagram& l, DeltaMode mode = DeltaMode::kMilnorCyclic);
SelfDeltaVector selfdelta_vector(MilnorEngine& engine, DeltaMode mode = DeltaMode::kMilnorCyclic);

struct SelfDeltaDecision {
  Verdict verdict = Verdict::kUndecided;
  // An r <= 2 index whose invariants differ, when the verdict is No.
  std::optional<MultiIndex> witness;
  SelfDeltaVector first;
  SelfDeltaVector second;
};

SelfDeltaDecision selfdelta_decide(const LinkDiagram& a, const LinkDiagram& b,
                                   DeltaMode mode = DeltaMode::kMilnorCyclic);
Verdict selfdelta_equivalent(const LinkDiagram& a, const LinkDiagram& b,
                             DeltaMode mode = DeltaMode::kMilnorCyclic);

struct HomotopyDecision {
  Verdict verdict = Verdict::kUndecided;
  std::optional<MultiIndex> witness;
};

// Closed links: a differing r(I) = 1 invariant separates them; agreement decides only for n <= 3.
HomotopyDecision homotopy_decide(const LinkDiagram& a, const LinkDiagram& b,
                                 DeltaMode mode = DeltaMode::kMilnorCyclic);

// Every invariant with r(I) <= 2 and |I| <= 2n vanishes.
bool selfdelta_trivial(const LinkDiagram& l, DeltaMode mode = DeltaMode::kMilnorCyclic);
// Every invariant with r(I) = 1 vanishes.
bool homotopy_trivial(const LinkDiagram& l, DeltaMode mode = DeltaMode::kMilnorCyclic);

struct BrunnianRep {
  int n = 0;
  std::vector<SurjectionTau> phis;  // R_{2n-1}(n)
  std::vector<int> epsilon;
  std::vector<SurjectionTau> taus;  // R_{2n}(n)
  std::vector<Integer> tau_exponents;
  std::vector<SurjectionTau> etas;  // P_{2n}(n)
  std::vector<Integer> eta_exponents;
  // Set by verify_brunnian_representative.
  std::optional<bool> verified;

  std::string to_string() const;
};

// The input is assumed Brunnian; only the vanishing hypothesis is checked.
BrunnianRep brunnian_representative(const LinkDiagram& l,
                                    DeltaMode mode = DeltaMode::kMilnorCyclic);
// Closure of L' * L''.
LinkDiagram brunnian_representative_link(const BrunnianRep& rep);
// Compares every |J| = 2n, r(J) = 2 invariant of the representative with the input.
bool verify_brunnian_representative(const LinkDiagram& l, BrunnianRep& rep,
                                    DeltaMode mode = DeltaMode::kMilnorCyclic);

struct Cor2Report {
  bool selfdelta_trivial = false;
  bool cable_homotopy_trivial = false;
  bool consistent() const { return selfdelta_trivial == cable_homotopy_trivial; }
};

// Self Delta-triviality of L against link-homotopy triviality of its 2-parallel.
Cor2Report cor2_report(const LinkDiagram& l, DeltaMode mode = DeltaMode::kMilnorCyclic);
bool cor2_consistency(const LinkDiagram& l, DeltaMode mode = DeltaMode::kMilnorCyclic);

}  // namespace milnor
