#include "milnor/classify.hpp"

#include <sstream>

#include "milnor/error.hpp"
#include "milnor/generators.hpp"

namespace milnor {

namespace {

void append_power(std::vector<StringLinkDiagram>& factors, const StringLinkDiagram& v,
                  const StringLinkDiagram& v_inv, const Integer& exponent) {
  if (exponent > 100000 || exponent < -100000) {
    throw InvalidArgument("exponent " + exponent.str() + " too large to realize");
  }
  const long e = exponent.convert_to<long>();
  for (long i = 0; i < (e > 0 ? e : -e); ++i) factors.push_back(e > 0 ? v : v_inv);
}

// The first index of `indices` whose invariant does not vanish.
std::optional<MultiIndex> first_nonzero(MilnorEngine& engine, int max_length, int max_r,
                                        DeltaMode mode, int min_length = 2) {
  engine.prepare(max_length, max_r);
  for (const MultiIndex& I : enumerate_indices(engine.components(), max_length, max_r, min_length)) {
    if (!engine.mubar(I, mode).is_zero()) return I;
  }
  return std::nullopt;
}

}  // namespace

// --- link-homotopy ----------------------------------------------------------------------

std::string NormalForm::to_string() const {
  std::ostringstream os;
  for (const NormalFormEntry& e : entries) {
    os << "V" << e.pi.index().to_string() << "^" << e.exponent.str() << '\n';
  }
  return os.str();
}

NormalForm homotopy_normal_form(const StringLinkDiagram& l) {
  const int n = l.components();
  NormalForm form;
  form.n = n;
  if (n < 2) return form;
  MilnorEngine engine(l);
  engine.prepare(n, 1);
  std::vector<StringLinkDiagram> factors;
  for (int k = 2; k <= n; ++k) {
    MilnorEngine partial(stack_all(factors, n));
    partial.prepare(k, 1);
    std::vector<StringLinkDiagram> next;
    for (const InjectionPi& pi : enumerate_F(k, n)) {
      const MultiIndex I = pi.index();
      Integer x = engine.mu(I) - partial.mu(I);
      if (!x.is_zero()) append_power(next, make_V_pi(pi, 1), make_V_pi(pi, -1), x);
      form.entries.push_back(NormalFormEntry{pi, std::move(x)});
    }
    factors.insert(factors.end(), next.begin(), next.end());
  }
  return form;
}

StringLinkDiagram normal_form_representative(const NormalForm& form) {
  std::vector<StringLinkDiagram> factors;
  for (const NormalFormEntry& e : form.entries) {
    if (!e.exponent.is_zero()) {
      append_power(factors, make_V_pi(e.pi, 1), make_V_pi(e.pi, -1), e.exponent);
    }
  }
  return stack_all(factors, form.n);
}

bool c1s_ck_equivalent(const StringLinkDiagram& a, const StringLinkDiagram& b, int k) {
  const int n = a.components();
  if (b.components() != n) throw InvalidArgument("string links have different component counts");
  if (k < 1 || k > n) throw InvalidArgument("k must lie in 1..n");
  if (k < 2) return true;
  MilnorEngine ea(a);
  MilnorEngine eb(b);
  ea.prepare(k, 1);
  eb.prepare(k, 1);
  for (const MultiIndex& I : enumerate_indices(n, k, 1)) {
    if (ea.mu(I) != eb.mu(I)) return false;
  }
  return true;
}

bool link_homotopic(const StringLinkDiagram& a, const StringLinkDiagram& b) {
  if (a.components() != b.components()) {
    throw InvalidArgument("string links have different component counts");
  }
  return c1s_ck_equivalent(a, b, a.components());
}

// --- self Delta-equivalence ---------------------------------------------------------

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes:
      return "Yes";
    case Verdict::kNo:
      return "No";
    case Verdict::kUndecided:
      return "Undecided";
  }
  return "Undecided";
}

SelfDeltaVector selfdelta_vector(MilnorEngine& engine, DeltaMode mode) {
  SelfDeltaVector v;
  v.n = engine.components();
  const int n = v.n;
  engine.prepare(2 * n, 2);
  if (auto bad = first_nonzero(engine, 2 * n - 1, 2, mode)) {
    v.obstruction = bad;
    v.obstruction_value = engine.mubar(*bad, mode);
    return v;
  }
  v.hypothesis_ok = true;
  for (const MultiIndex& J : enumerate_indices(n, 2 * n, 2, 2 * n)) {
    if (repeat_max(J) != 2) continue;
    v.entries.push_back(InvariantRow{J, engine.mubar(J, mode)});
  }
  return v;
}

SelfDeltaVector selfdelta_vector(const LinkDiagram& l, DeltaMode mode) {
  MilnorEngine engine(l);
  return selfdelta_vector(engine, mode);
}

SelfDeltaDecision selfdelta_decide(const LinkDiagram& a, const LinkDiagram& b, DeltaMode mode) {
  const int n = a.components();
  if (b.components() != n) throw InvalidArgument("links have different component counts");
  MilnorEngine ea(a);
  MilnorEngine eb(b);
  SelfDeltaDecision d;
  d.first = selfdelta_vector(ea, mode);
  d.second = selfdelta_vector(eb, mode);
  if (d.first.hypothesis_ok && d.second.hypothesis_ok) {
    d.verdict = Verdict::kYes;
    for (std::size_t i = 0; i < d.first.entries.size(); ++i) {
      if (d.first.entries[i].value != d.second.entries[i].value) {
        d.verdict = Verdict::kNo;
        d.witness = d.first.entries[i].index;
        break;
      }
    }
    return d;
  }
  // Outside the hypothesis only a differing r <= 2 invariant decides.
  d.verdict = Verdict::kUndecided;
  for (const MultiIndex& I : enumerate_indices(n, 2 * n, 2)) {
    const Residue ra = ea.mubar(I, mode);
    const Residue rb = eb.mubar(I, mode);
    const Integer m = gcd(ra.modulus, rb.modulus);
    if (!Residue(ra.value - rb.value, m).is_zero()) {
      d.verdict = Verdict::kNo;
      d.witness = I;
      break;
    }
  }
  return d;
}

Verdict selfdelta_equivalent(const LinkDiagram& a, const LinkDiagram& b, DeltaMode mode) {
  return selfdelta_decide(a, b, mode).verdict;
}

HomotopyDecision homotopy_decide(const LinkDiagram& a, const LinkDiagram& b, DeltaMode mode) {
  const int n = a.components();
  if (b.components() != n) throw InvalidArgument("links have different component counts");
  HomotopyDecision d;
  d.verdict = n <= 3 ? Verdict::kYes : Verdict::kUndecided;
  if (n < 2) return d;
  MilnorEngine ea(a);
  MilnorEngine eb(b);
  ea.prepare(n, 1);
  eb.prepare(n, 1);
  for (const MultiIndex& I : enumerate_indices(n, n, 1)) {
    const Residue ra = ea.mubar(I, mode);
    const Residue rb = eb.mubar(I, mode);
    if (!Residue(ra.value - rb.value, gcd(ra.modulus, rb.modulus)).is_zero()) {
      d.verdict = Verdict::kNo;
      d.witness = I;
      break;
    }
  }
  return d;
}

bool selfdelta_trivial(const LinkDiagram& l, DeltaMode mode) {
  MilnorEngine engine(l);
  return !first_nonzero(engine, 2 * l.components(), 2, mode).has_value();
}

bool homotopy_trivial(const LinkDiagram& l, DeltaMode mode) {
  if (l.components() < 2) return true;
  MilnorEngine engine(l);
  return !first_nonzero(engine, l.components(), 1, mode).has_value();
}

// --- Brunnian representatives ---------------------------------------------------------

std::string BrunnianRep::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    os << "eps(" << MultiIndex(phis[i].values).to_string() << ") = " << epsilon[i] << '\n';
  }
  for (std::size_t i = 0; i < taus.size(); ++i) {
    os << "V" << taus[i].index().to_string() << "^" << tau_exponents[i].str() << '\n';
  }
  for (std::size_t i = 0; i < etas.size(); ++i) {
    os << "V" << etas[i].index().to_string() << "^" << eta_exponents[i].str() << '\n';
  }
  if (verified) os << "verified: " << (*verified ? "true" : "false") << '\n';
  return os.str();
}

namespace {

std::vector<StringLinkDiagram> primed_factors(const BrunnianRep& rep) {
  std::vector<StringLinkDiagram> factors;
  for (std::size_t i = 0; i < rep.phis.size(); ++i) {
    if (rep.epsilon[i] != 0) factors.push_back(make_V_tau(rep.phis[i], 1));
  }
  return factors;
}

}  // namespace

BrunnianRep brunnian_representative(const LinkDiagram& l, DeltaMode mode) {
  const int n = l.components();
  if (n < 2) throw InvalidArgument("Brunnian representatives need at least two components");
  MilnorEngine engine(l);
  const SelfDeltaVector v = selfdelta_vector(engine, mode);
  if (!v.hypothesis_ok) {
    throw HypothesisError("invariant " + v.obstruction->to_string() + " with r <= 2 and length <= " +
                          std::to_string(2 * n - 1) + " does not vanish");
  }
  BrunnianRep rep;
  rep.n = n;
  rep.phis = enumerate_R(2 * n - 1, n, n);
  rep.taus = enumerate_R(2 * n, n, n);
  rep.etas = enumerate_P(2 * n, n, n);
  for (const SurjectionTau& phi : rep.phis) {
    const Residue r = engine.mubar(matching_R2n(phi).index(), mode);
    rep.epsilon.push_back(r.value % 2 != 0 ? 1 : 0);
  }
  MilnorEngine primed(closure(stack_all(primed_factors(rep), n)));
  for (const SurjectionTau& tau : rep.taus) {
    const Integer diff = engine.mubar(tau.index(), mode).value - primed.mubar(tau.index(), mode).value;
    if (diff % 2 != 0) {
      throw InternalError("odd difference for " + tau.index().to_string() +
                          "; the parity of eps does not match");
    }
    rep.tau_exponents.push_back(diff / 2);
  }
  for (const SurjectionTau& eta : rep.etas) {
    rep.eta_exponents.push_back(engine.mubar(eta.index(), mode).value);
  }
  return rep;
}

LinkDiagram brunnian_representative_link(const BrunnianRep& rep) {
  std::vector<StringLinkDiagram> factors = primed_factors(rep);
  for (std::size_t i = 0; i < rep.taus.size(); ++i) {
    append_power(factors, make_V_tau(rep.taus[i], 1), make_V_tau(rep.taus[i], -1),
                 rep.tau_exponents[i]);
  }
  for (std::size_t i = 0; i < rep.etas.size(); ++i) {
    append_power(factors, make_V_tau(rep.etas[i], 1), make_V_tau(rep.etas[i], -1),
                 rep.eta_exponents[i]);
  }
  DiagramData d = closure(stack_all(factors, rep.n)).data();
  d.name = "brunnian representative";
  return LinkDiagram(std::move(d));
}

bool verify_brunnian_representative(const LinkDiagram& l, BrunnianRep& rep, DeltaMode mode) {
  const SelfDeltaVector a = selfdelta_vector(l, mode);
  const SelfDeltaVector b = selfdelta_vector(brunnian_representative_link(rep), mode);
  bool ok = a.hypothesis_ok && b.hypothesis_ok && a.entries.size() == b.entries.size();
  for (std::size_t i = 0; ok && i < a.entries.size(); ++i) {
    ok = a.entries[i].value == b.entries[i].value;
  }
  rep.verified = ok;
  return ok;
}

// --- parallels ----------------------------------------------------------------------------

Cor2Report cor2_report(const LinkDiagram& l, DeltaMode mode) {
  Cor2Report r;
  r.selfdelta_trivial = selfdelta_trivial(l, mode);
  const std::vector<int> twos(static_cast<std::size_t>(l.components()), 2);
  r.cable_homotopy_trivial = homotopy_trivial(cable(l, twos).link, mode);
  return r;
}

bool cor2_consistency(const LinkDiagram& l, DeltaMode mode) {
  return cor2_report(l, mode).consistent();
}

}  // namespace milnor
