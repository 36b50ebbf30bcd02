#include "milnor/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "assembly.hpp"
#include "milnor/error.hpp"

namespace milnor {

std::array<int, 4> Crossing::pd() const {
  if (sign > 0) return {under_in, over_out, under_out, over_in};
  return {under_in, over_in, under_out, over_out};
}

namespace {

std::string arc_name(int arc) { return "arc " + std::to_string(arc); }

}  // namespace

Diagram::Diagram(DiagramData data, DiagramKind kind) : kind_(kind) {
  validate_and_canonicalize(std::move(data));
}

void Diagram::validate_and_canonicalize(DiagramData data) {
  const int n = data.components;
  const int arcs = static_cast<int>(data.arc_component.size());
  if (n < 1) throw ValidationError("a diagram needs at least one component");
  if (static_cast<int>(data.successor.size()) != arcs) {
    throw ValidationError("successor map size differs from the arc count");
  }
  std::vector<int> per_component(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < arcs; ++a) {
    const int c = data.arc_component[static_cast<std::size_t>(a)];
    if (c < 1 || c > n) throw ValidationError(arc_name(a) + " has component out of range");
    ++per_component[static_cast<std::size_t>(c - 1)];
  }
  for (int c = 0; c < n; ++c) {
    if (per_component[static_cast<std::size_t>(c)] == 0) {
      throw ValidationError("component " + std::to_string(c + 1) + " has no arcs");
    }
  }

  std::vector<int> pred(static_cast<std::size_t>(arcs), -1);
  for (int a = 0; a < arcs; ++a) {
    const int s = data.successor[static_cast<std::size_t>(a)];
    if (s == -1) continue;
    if (s < 0 || s >= arcs) throw ValidationError(arc_name(a) + " has successor out of range");
    if (data.arc_component[static_cast<std::size_t>(s)] !=
        data.arc_component[static_cast<std::size_t>(a)]) {
      throw ValidationError(arc_name(a) + " and its successor lie on different components");
    }
    if (pred[static_cast<std::size_t>(s)] != -1) {
      throw ValidationError(arc_name(s) + " has two predecessors");
    }
    pred[static_cast<std::size_t>(s)] = a;
  }

  std::vector<int> in_count(static_cast<std::size_t>(arcs), 0);
  std::vector<int> out_count(static_cast<std::size_t>(arcs), 0);
  for (std::size_t x = 0; x < data.crossings.size(); ++x) {
    const Crossing& c = data.crossings[x];
    const std::string where = "crossing " + std::to_string(x + 1);
    for (int a : {c.under_in, c.under_out, c.over_in, c.over_out}) {
      if (a < 0 || a >= arcs) throw ValidationError(where + " references an unknown arc");
    }
    if (c.sign != 1 && c.sign != -1) throw ValidationError(where + " has sign other than +-1");
    if (data.successor[static_cast<std::size_t>(c.under_in)] != c.under_out ||
        data.successor[static_cast<std::size_t>(c.over_in)] != c.over_out) {
      throw ValidationError(where + " disagrees with the orientation");
    }
    ++in_count[static_cast<std::size_t>(c.under_in)];
    ++in_count[static_cast<std::size_t>(c.over_in)];
    ++out_count[static_cast<std::size_t>(c.under_out)];
    ++out_count[static_cast<std::size_t>(c.over_out)];
  }
  for (int a = 0; a < arcs; ++a) {
    const auto i = static_cast<std::size_t>(a);
    if (in_count[i] > 1 || out_count[i] > 1) {
      throw ValidationError(arc_name(a) + " occurs more than twice");
    }
    const int s = data.successor[i];
    const bool free_loop = s == a && per_component[static_cast<std::size_t>(
                                         data.arc_component[i] - 1)] == 1;
    if (s != -1 && in_count[i] == 0 && !free_loop) {
      throw ValidationError(arc_name(a) + " ends without reaching a crossing");
    }
    if (s == -1 && in_count[i] != 0) throw ValidationError(arc_name(a) + " has no successor");
    if (pred[i] != -1 && out_count[i] == 0 && !free_loop) {
      throw ValidationError(arc_name(a) + " starts without leaving a crossing");
    }
  }

  // Starting arc of every component.
  std::vector<int> start(static_cast<std::size_t>(n), -1);
  if (kind_ == DiagramKind::kStringLink) {
    for (int a = 0; a < arcs; ++a) {
      if (pred[static_cast<std::size_t>(a)] != -1) continue;
      const int c = data.arc_component[static_cast<std::size_t>(a)];
      if (start[static_cast<std::size_t>(c - 1)] != -1) {
        throw ValidationError("component " + std::to_string(c) + " is not a single interval");
      }
      start[static_cast<std::size_t>(c - 1)] = a;
    }
  } else {
    for (int a = 0; a < arcs; ++a) {
      if (data.successor[static_cast<std::size_t>(a)] == -1) {
        throw ValidationError(arc_name(a) + " has no successor in a closed link");
      }
    }
    if (!data.base_arcs.empty()) {
      if (static_cast<int>(data.base_arcs.size()) != n) {
        throw ValidationError("base arc list size differs from the component count");
      }
      for (int c = 0; c < n; ++c) {
        const int b = data.base_arcs[static_cast<std::size_t>(c)];
        if (b < 0 || b >= arcs || data.arc_component[static_cast<std::size_t>(b)] != c + 1) {
          throw ValidationError("bad base arc for component " + std::to_string(c + 1));
        }
        start[static_cast<std::size_t>(c)] = b;
      }
    } else {
      for (int a = arcs - 1; a >= 0; --a) {
        start[static_cast<std::size_t>(data.arc_component[static_cast<std::size_t>(a)] - 1)] = a;
      }
    }
  }

  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(arcs));
  first_arc_.assign(1, 0);
  for (int c = 0; c < n; ++c) {
    const int s0 = start[static_cast<std::size_t>(c)];
    if (s0 == -1) {
      throw ValidationError("component " + std::to_string(c + 1) + " is not a single interval");
    }
    int cur = s0;
    int walked = 0;
    while (true) {
      order.push_back(cur);
      ++walked;
      const int nxt = data.successor[static_cast<std::size_t>(cur)];
      if (nxt == -1 || nxt == s0) break;
      if (walked > arcs) throw ValidationError("component " + std::to_string(c + 1) + " loops");
      cur = nxt;
    }
    if (walked != per_component[static_cast<std::size_t>(c)]) {
      throw ValidationError("arcs of component " + std::to_string(c + 1) +
                            (kind_ == DiagramKind::kLink ? " do not form a single cycle"
                                                         : " do not form a single interval"));
    }
    first_arc_.push_back(static_cast<int>(order.size()));
  }

  std::vector<int> renumber(static_cast<std::size_t>(arcs));
  for (int i = 0; i < arcs; ++i) renumber[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  auto re = [&](int a) { return renumber[static_cast<std::size_t>(a)]; };

  name_ = std::move(data.name);
  components_ = n;
  arc_component_.resize(static_cast<std::size_t>(arcs));
  successor_.resize(static_cast<std::size_t>(arcs));
  for (int a = 0; a < arcs; ++a) {
    const auto i = static_cast<std::size_t>(re(a));
    arc_component_[i] = data.arc_component[static_cast<std::size_t>(a)];
    const int s = data.successor[static_cast<std::size_t>(a)];
    successor_[i] = s == -1 ? -1 : re(s);
  }
  crossings_.clear();
  crossings_.reserve(data.crossings.size());
  for (const Crossing& c : data.crossings) {
    crossings_.push_back(Crossing{re(c.under_in), re(c.under_out), re(c.over_in),
                                  re(c.over_out), c.sign});
  }
}

int Diagram::base_arc(int component) const {
  if (component < 1 || component > components_) throw InvalidArgument("component out of range");
  return first_arc_[static_cast<std::size_t>(component - 1)];
}

int Diagram::end_arc(int component) const {
  if (component < 1 || component > components_) throw InvalidArgument("component out of range");
  return first_arc_[static_cast<std::size_t>(component)] - 1;
}

std::vector<int> Diagram::arcs_of(int component) const {
  std::vector<int> out(static_cast<std::size_t>(end_arc(component) - base_arc(component) + 1));
  std::iota(out.begin(), out.end(), base_arc(component));
  return out;
}

int Diagram::writhe(int component) const {
  int w = 0;
  for (const Crossing& c : crossings_) {
    if (component_of(c.under_in) == component && component_of(c.over_in) == component) w += c.sign;
  }
  return w;
}

int Diagram::linking_number(int a, int b) const {
  int total = 0;
  for (const Crossing& c : crossings_) {
    if (component_of(c.under_in) == b && component_of(c.over_in) == a) total += c.sign;
  }
  return total;
}

DiagramData Diagram::data() const {
  DiagramData d;
  d.name = name_;
  d.components = components_;
  d.crossings = crossings_;
  d.arc_component = arc_component_;
  d.successor = successor_;
  if (kind_ == DiagramKind::kLink) {
    for (int c = 1; c <= components_; ++c) d.base_arcs.push_back(base_arc(c));
  }
  return d;
}

bool operator==(const Diagram& a, const Diagram& b) {
  return a.kind_ == b.kind_ && a.components_ == b.components_ && a.crossings_ == b.crossings_ &&
         a.arc_component_ == b.arc_component_ && a.successor_ == b.successor_;
}

const Diagram& as_diagram(const AnyDiagram& d) {
  return std::visit([](const auto& x) -> const Diagram& { return x; }, d);
}

// --- assembly ---------------------------------------------------------------------

namespace detail {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int size) : parent(static_cast<std::size_t>(size)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

DiagramData finalize(const RawDiagram& raw, DiagramKind kind,
                     const std::vector<int>& start_labels, std::string name,
                     std::vector<int>* label_arc) {
  UnionFind uf(raw.labels);
  for (const auto& [a, b] : raw.unions) uf.unite(a, b);
  std::vector<int> id(static_cast<std::size_t>(raw.labels), -1);
  int arcs = 0;
  for (int l = 0; l < raw.labels; ++l) {
    const int r = uf.find(l);
    if (id[static_cast<std::size_t>(r)] == -1) id[static_cast<std::size_t>(r)] = arcs++;
  }
  auto arc = [&](int label) { return id[static_cast<std::size_t>(uf.find(label))]; };
  if (label_arc != nullptr) {
    label_arc->resize(static_cast<std::size_t>(raw.labels));
    for (int l = 0; l < raw.labels; ++l) (*label_arc)[static_cast<std::size_t>(l)] = arc(l);
  }

  DiagramData d;
  d.name = std::move(name);
  d.components = static_cast<int>(start_labels.size());
  d.successor.assign(static_cast<std::size_t>(arcs), -1);
  d.arc_component.assign(static_cast<std::size_t>(arcs), 0);
  for (const Crossing& c : raw.crossings) {
    Crossing m{arc(c.under_in), arc(c.under_out), arc(c.over_in), arc(c.over_out), c.sign};
    for (auto [from, to] : {std::pair{m.under_in, m.under_out}, std::pair{m.over_in, m.over_out}}) {
      int& s = d.successor[static_cast<std::size_t>(from)];
      if (s != -1) throw InternalError("arc assembled with two successors");
      s = to;
    }
    d.crossings.push_back(m);
  }
  for (std::size_t c = 0; c < start_labels.size(); ++c) {
    const int s0 = arc(start_labels[c]);
    int cur = s0;
    while (true) {
      int& comp = d.arc_component[static_cast<std::size_t>(cur)];
      if (comp != 0) throw InternalError("assembled components overlap");
      comp = static_cast<int>(c) + 1;
      int& nxt = d.successor[static_cast<std::size_t>(cur)];
      if (nxt == -1 && kind == DiagramKind::kLink) nxt = cur;
      if (nxt == -1 || nxt == s0) break;
      cur = nxt;
    }
    if (kind == DiagramKind::kLink) d.base_arcs.push_back(s0);
  }
  for (int a = 0; a < arcs; ++a) {
    if (d.arc_component[static_cast<std::size_t>(a)] == 0) {
      throw InvalidArgument("construction produced a closed component without endpoints");
    }
  }
  return d;
}

TangleBuilder::TangleBuilder(int strands) {
  if (strands < 1) throw InvalidArgument("a tangle needs at least one strand");
  for (int s = 0; s < strands; ++s) {
    const int l = raw_.new_label();
    row_.push_back(Slot{l, +1});
    top_.push_back(l);
  }
}

void TangleBuilder::cross(int pos, bool left_over) {
  if (pos < 0 || pos + 1 >= width()) throw InvalidArgument("crossing position out of range");
  const Slot left = row_[static_cast<std::size_t>(pos)];
  const Slot right = row_[static_cast<std::size_t>(pos + 1)];
  const int x = raw_.new_label();  // bottom-right, continues the top-left strand
  const int y = raw_.new_label();  // bottom-left, continues the top-right strand

  struct Pass {
    int in, out, dx, dy;
  };
  const Pass a = left.dir > 0 ? Pass{left.label, x, 1, -1} : Pass{x, left.label, -1, 1};
  const Pass b = right.dir > 0 ? Pass{right.label, y, -1, -1} : Pass{y, right.label, 1, 1};
  const Pass& over = left_over ? a : b;
  const Pass& under = left_over ? b : a;
  const int z = over.dx * under.dy - over.dy * under.dx;
  raw_.crossings.push_back(Crossing{under.in, under.out, over.in, over.out, z > 0 ? 1 : -1});
  row_[static_cast<std::size_t>(pos)] = Slot{y, right.dir};
  row_[static_cast<std::size_t>(pos + 1)] = Slot{x, left.dir};
}

void TangleBuilder::cap(int pos, bool left_down) {
  if (pos < 0 || pos > width()) throw InvalidArgument("cap position out of range");
  const int z = raw_.new_label();
  const int d = left_down ? 1 : -1;
  row_.insert(row_.begin() + pos, {Slot{z, d}, Slot{z, -d}});
}

void TangleBuilder::cup(int pos) {
  if (pos < 0 || pos + 1 >= width()) throw InvalidArgument("cup position out of range");
  const Slot left = row_[static_cast<std::size_t>(pos)];
  const Slot right = row_[static_cast<std::size_t>(pos + 1)];
  if (left.dir == right.dir) throw InvalidArgument("cup joins strands of the same direction");
  raw_.unions.emplace_back(left.label, right.label);
  row_.erase(row_.begin() + pos, row_.begin() + pos + 2);
}

StringLinkDiagram TangleBuilder::finish_string_link(std::string name) const {
  if (row_.size() != top_.size()) throw InvalidArgument("tangle has unbalanced caps and cups");
  for (const Slot& s : row_) {
    if (s.dir < 0) throw InvalidArgument("tangle ends with an upward strand");
  }
  std::vector<int> label_arc;
  DiagramData d = finalize(raw_, DiagramKind::kStringLink, top_, std::move(name), &label_arc);
  for (std::size_t s = 0; s < row_.size(); ++s) {
    const int arc = label_arc[static_cast<std::size_t>(row_[s].label)];
    if (d.arc_component[static_cast<std::size_t>(arc)] != static_cast<int>(s) + 1) {
      throw InvalidArgument("non-pure tangle: strand " + std::to_string(s + 1) +
                            " ends at another position");
    }
  }
  return StringLinkDiagram(std::move(d));
}

LinkDiagram TangleBuilder::finish_closure(const std::vector<int>& perm, std::string name) const {
  if (row_.size() != top_.size() || perm.size() != top_.size()) {
    throw InvalidArgument("closure needs a balanced tangle");
  }
  RawDiagram raw = raw_;
  for (std::size_t s = 0; s < row_.size(); ++s) raw.unions.emplace_back(row_[s].label, top_[s]);
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> starts;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    starts.push_back(top_[s]);
    for (std::size_t t = s; !seen[t]; t = static_cast<std::size_t>(perm[t])) seen[t] = true;
  }
  return LinkDiagram(finalize(raw, DiagramKind::kLink, starts, std::move(name)));
}

}  // namespace detail

// --- braids -----------------------------------------------------------------------

void validate(const BraidWord& braid) {
  if (braid.strands < 1) throw InvalidArgument("a braid needs at least one strand");
  for (int g : braid.word) {
    if (g == 0 || std::abs(g) >= braid.strands) {
      throw InvalidArgument("braid generator " + std::to_string(g) + " out of range for " +
                            std::to_string(braid.strands) + " strands");
    }
  }
}

std::vector<int> braid_permutation(const BraidWord& braid) {
  validate(braid);
  std::vector<int> at(static_cast<std::size_t>(braid.strands));  // strand occupying position
  std::iota(at.begin(), at.end(), 0);
  for (int g : braid.word) {
    const auto i = static_cast<std::size_t>(std::abs(g));
    std::swap(at[i - 1], at[i]);
  }
  std::vector<int> perm(at.size());
  for (std::size_t p = 0; p < at.size(); ++p) perm[static_cast<std::size_t>(at[p])] = static_cast<int>(p);
  return perm;
}

namespace {

detail::TangleBuilder braid_tangle(const BraidWord& braid) {
  detail::TangleBuilder b(braid.strands);
  for (int g : braid.word) b.sigma(std::abs(g), g > 0 ? 1 : -1);
  return b;
}

}  // namespace

StringLinkDiagram braid_to_stringlink(const BraidWord& braid) {
  const std::vector<int> perm = braid_permutation(braid);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (perm[s] != static_cast<int>(s)) throw InvalidArgument("non-pure braid");
  }
  return braid_tangle(braid).finish_string_link("braid");
}

LinkDiagram braid_closure(const BraidWord& braid) {
  return braid_tangle(braid).finish_closure(braid_permutation(braid), "braid closure");
}

StringLinkDiagram trivial_string_link(int n) {
  if (n < 1) throw InvalidArgument("component count must be positive");
  return detail::TangleBuilder(n).finish_string_link("trivial");
}

LinkDiagram trivial_link(int n) { return closure(trivial_string_link(n)); }

// --- stacking, closure ------------------------------------------------------------

namespace {

void append_shifted(detail::RawDiagram& raw, const Diagram& d) {
  const int shift = raw.labels;
  raw.labels += d.arc_count();
  for (const Crossing& c : d.crossings()) {
    raw.crossings.push_back(Crossing{c.under_in + shift, c.under_out + shift, c.over_in + shift,
                                     c.over_out + shift, c.sign});
  }
}

}  // namespace

StringLinkDiagram stack(const StringLinkDiagram& a, const StringLinkDiagram& b) {
  if (a.components() != b.components()) throw InvalidArgument("stacking needs equal component counts");
  detail::RawDiagram raw;
  append_shifted(raw, a);
  append_shifted(raw, b);
  std::vector<int> starts;
  for (int c = 1; c <= a.components(); ++c) {
    raw.unions.emplace_back(a.end_arc(c), a.arc_count() + b.base_arc(c));
    starts.push_back(a.base_arc(c));
  }
  return StringLinkDiagram(detail::finalize(raw, DiagramKind::kStringLink, starts, a.name()));
}

StringLinkDiagram stack_all(std::span<const StringLinkDiagram> factors, int n) {
  if (factors.empty()) return trivial_string_link(n);
  detail::RawDiagram raw;
  std::vector<int> starts;
  std::vector<int> prev_end;
  for (const StringLinkDiagram& f : factors) {
    if (f.components() != n) throw InvalidArgument("stacking needs equal component counts");
    const int shift = raw.labels;
    append_shifted(raw, f);
    for (int c = 1; c <= n; ++c) {
      if (starts.size() < static_cast<std::size_t>(n)) {
        starts.push_back(shift + f.base_arc(c));
      } else {
        raw.unions.emplace_back(prev_end[static_cast<std::size_t>(c - 1)], shift + f.base_arc(c));
      }
    }
    prev_end.clear();
    for (int c = 1; c <= n; ++c) prev_end.push_back(shift + f.end_arc(c));
  }
  return StringLinkDiagram(detail::finalize(raw, DiagramKind::kStringLink, starts, "product"));
}

LinkDiagram closure(const StringLinkDiagram& l) {
  detail::RawDiagram raw;
  append_shifted(raw, l);
  std::vector<int> starts;
  for (int c = 1; c <= l.components(); ++c) {
    raw.unions.emplace_back(l.end_arc(c), l.base_arc(c));
    starts.push_back(l.base_arc(c));
  }
  return LinkDiagram(detail::finalize(raw, DiagramKind::kLink, starts, l.name()));
}

// --- cabling ------------------------------------------------------------------------

CabledLink cable(const LinkDiagram& link, std::span<const int> multiplicities) {
  const int n = link.components();
  if (static_cast<int>(multiplicities.size()) != n) {
    throw InvalidArgument("one multiplicity per component is required");
  }
  for (int p : multiplicities) {
    if (p < 1) throw InvalidArgument("cable multiplicities must be positive");
  }
  auto mult = [&](int arc) {
    return multiplicities[static_cast<std::size_t>(link.component_of(arc) - 1)];
  };

  detail::RawDiagram raw;
  const int arcs = link.arc_count();
  std::vector<std::vector<int>> copy(static_cast<std::size_t>(arcs));
  std::vector<std::vector<int>> head(static_cast<std::size_t>(arcs));
  for (int a = 0; a < arcs; ++a) {
    for (int u = 0; u < mult(a); ++u) copy[static_cast<std::size_t>(a)].push_back(raw.new_label());
    head[static_cast<std::size_t>(a)] = copy[static_cast<std::size_t>(a)];
  }

  // Compensating full twists on the base arc of each component.
  for (int c = 1; c <= n; ++c) {
    const int p = multiplicities[static_cast<std::size_t>(c - 1)];
    const int w = link.writhe(c);
    if (p < 2 || w == 0) continue;
    const int sign = w > 0 ? -1 : 1;
    std::vector<int> row = copy[static_cast<std::size_t>(link.base_arc(c))];
    for (int t = 0; t < std::abs(w); ++t) {
      for (int rep = 0; rep < p; ++rep) {
        for (int j = 0; j + 1 < p; ++j) {
          const int x = raw.new_label();  // right slot after the crossing
          const int y = raw.new_label();  // left slot after the crossing
          const int l = row[static_cast<std::size_t>(j)];
          const int r = row[static_cast<std::size_t>(j + 1)];
          if (sign > 0) {
            raw.crossings.push_back(Crossing{r, y, l, x, 1});
          } else {
            raw.crossings.push_back(Crossing{l, x, r, y, -1});
          }
          row[static_cast<std::size_t>(j)] = y;
          row[static_cast<std::size_t>(j + 1)] = x;
        }
      }
    }
    head[static_cast<std::size_t>(link.base_arc(c))] = row;
  }

  for (const Crossing& x : link.crossings()) {
    const int p = mult(x.under_in);
    const int q = mult(x.over_in);
    // Position along each copy at which it meets the copies of the other strand.
    std::vector<int> tpos(static_cast<std::size_t>(q));
    std::vector<int> spos(static_cast<std::size_t>(p));
    for (int v = 0; v < q; ++v) tpos[static_cast<std::size_t>(v)] = x.sign > 0 ? q - v : v + 1;
    for (int u = 0; u < p; ++u) spos[static_cast<std::size_t>(u)] = x.sign > 0 ? u + 1 : p - u;
    std::vector<std::vector<int>> seg(static_cast<std::size_t>(p), std::vector<int>(static_cast<std::size_t>(q + 1)));
    std::vector<std::vector<int>> oseg(static_cast<std::size_t>(q), std::vector<int>(static_cast<std::size_t>(p + 1)));
    for (int u = 0; u < p; ++u) {
      auto& s = seg[static_cast<std::size_t>(u)];
      s.front() = head[static_cast<std::size_t>(x.under_in)][static_cast<std::size_t>(u)];
      s.back() = copy[static_cast<std::size_t>(x.under_out)][static_cast<std::size_t>(u)];
      for (int t = 1; t < q; ++t) s[static_cast<std::size_t>(t)] = raw.new_label();
    }
    for (int v = 0; v < q; ++v) {
      auto& s = oseg[static_cast<std::size_t>(v)];
      s.front() = head[static_cast<std::size_t>(x.over_in)][static_cast<std::size_t>(v)];
      s.back() = copy[static_cast<std::size_t>(x.over_out)][static_cast<std::size_t>(v)];
      for (int t = 1; t < p; ++t) s[static_cast<std::size_t>(t)] = raw.new_label();
    }
    for (int u = 0; u < p; ++u) {
      for (int v = 0; v < q; ++v) {
        const auto t = static_cast<std::size_t>(tpos[static_cast<std::size_t>(v)]);
        const auto s = static_cast<std::size_t>(spos[static_cast<std::size_t>(u)]);
        const auto& us = seg[static_cast<std::size_t>(u)];
        const auto& os = oseg[static_cast<std::size_t>(v)];
        raw.crossings.push_back(Crossing{us[t - 1], us[t], os[s - 1], os[s], x.sign});
      }
    }
  }

  std::vector<int> starts;
  std::vector<int> source;
  for (int c = 1; c <= n; ++c) {
    for (int u = 0; u < multiplicities[static_cast<std::size_t>(c - 1)]; ++u) {
      starts.push_back(copy[static_cast<std::size_t>(link.base_arc(c))][static_cast<std::size_t>(u)]);
      source.push_back(c);
    }
  }
  LinkDiagram out(detail::finalize(raw, DiagramKind::kLink, starts, link.name() + " cable"));
  return CabledLink{std::move(out), std::move(source)};
}

// --- kinks --------------------------------------------------------------------------

namespace {

DiagramData kinked(const Diagram& d, int arc) {
  if (arc < 0 || arc >= d.arc_count()) throw InvalidArgument("arc out of range");
  detail::RawDiagram raw;
  raw.labels = d.arc_count();
  const int l1 = raw.new_label();
  const int mid = raw.new_label();
  const int l2 = raw.new_label();
  const int tail = raw.new_label();
  bool has_head = false;
  for (Crossing c : d.crossings()) {
    if (c.under_in == arc) c.under_in = tail, has_head = true;
    if (c.over_in == arc) c.over_in = tail, has_head = true;
    raw.crossings.push_back(c);
  }
  raw.crossings.push_back(Crossing{arc, l1, l1, mid, 1});
  raw.crossings.push_back(Crossing{mid, l2, l2, tail, -1});
  if (!has_head && !d.is_string_link()) raw.unions.emplace_back(tail, arc);
  std::vector<int> starts;
  for (int c = 1; c <= d.components(); ++c) starts.push_back(d.base_arc(c));
  return detail::finalize(raw, d.kind(), starts, d.name());
}

}  // namespace

LinkDiagram add_kink_pair(const LinkDiagram& link, int arc) {
  return LinkDiagram(kinked(link, arc));
}

StringLinkDiagram add_kink_pair(const StringLinkDiagram& link, int arc) {
  return StringLinkDiagram(kinked(link, arc));
}

}  // namespace milnor
