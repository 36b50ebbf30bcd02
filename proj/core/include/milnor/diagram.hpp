#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace milnor {

// One crossing. Arc ids are 0-based positions in the owning diagram.
struct Crossing {
  int under_in = 0;
  int under_out = 0;
  int over_in = 0;
  int over_out = 0;
  int sign = 1;  // right-handed crossings are +1

  // [a, b, c, d] counterclockwise from the incoming under-arc.
  std::array<int, 4> pd() const;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

enum class DiagramKind { kLink, kStringLink };

// Unvalidated diagram description; input to LinkDiagram / StringLinkDiagram.
struct DiagramData {
  std::string name;
  int components = 0;
  std::vector<Crossing> crossings;
  std::vector<int> arc_component;  // 1-based component of each arc
  std::vector<int> successor;      // next arc along the component, -1 at a string link end
  std::vector<int> base_arcs;      // optional, per component (links only)
};

// Oriented diagram with ordered components. Arcs are the edges of the 4-valent
// projection graph, split at every crossing. Construction validates the data and
// renumbers arcs so component 1's arcs come first, in traversal order from its base.
class Diagram {
 public:
  DiagramKind kind() const { return kind_; }
  bool is_string_link() const { return kind_ == DiagramKind::kStringLink; }
  const std::string& name() const { return name_; }
  int components() const { return components_; }
  int arc_count() const { return static_cast<int>(arc_component_.size()); }
  std::span<const Crossing> crossings() const { return crossings_; }

  int component_of(int arc) const { return arc_component_.at(static_cast<std::size_t>(arc)); }
  // -1 for the bottom arc of a string link component.
  int successor(int arc) const { return successor_.at(static_cast<std::size_t>(arc)); }
  // Base arc of a 1-based component: the top arc for string links.
  int base_arc(int component) const;
  // Arcs of a component in traversal order starting at the base arc.
  std::vector<int> arcs_of(int component) const;
  // Bottom arc of a string link component.
  int end_arc(int component) const;

  // Signed count of self-crossings of a component.
  int writhe(int component) const;
  int linking_number(int a, int b) const;

  DiagramData data() const;

  friend bool operator==(const Diagram&, const Diagram&);

 protected:
  Diagram(DiagramData data, DiagramKind kind);

 private:
  void validate_and_canonicalize(DiagramData data);

  DiagramKind kind_;
  std::string name_;
  int components_ = 0;
  std::vector<Crossing> crossings_;
  std::vector<int> arc_component_;
  std::vector<int> successor_;
  std::vector<int> first_arc_;  // per component (0-based), arcs are contiguous blocks
};

class LinkDiagram final : public Diagram {
 public:
  explicit LinkDiagram(DiagramData data) : Diagram(std::move(data), DiagramKind::kLink) {}
};

class StringLinkDiagram final : public Diagram {
 public:
  explicit StringLinkDiagram(DiagramData data)
      : Diagram(std::move(data), DiagramKind::kStringLink) {}
};

using AnyDiagram = std::variant<LinkDiagram, StringLinkDiagram>;

const Diagram& as_diagram(const AnyDiagram& d);

struct BraidWord {
  int strands = 0;
  std::vector<int> word;  // +-i for sigma_i^{+-1}, 1 <= i < strands
};

void validate(const BraidWord& braid);
// Strand permutation of the braid: result[start position] = end position.
std::vector<int> braid_permutation(const BraidWord& braid);

StringLinkDiagram trivial_string_link(int n);
LinkDiagram trivial_link(int n);

// Pure braids only; throws InvalidArgument for a non-pure braid.
StringLinkDiagram braid_to_stringlink(const BraidWord& braid);
// Closure of any braid; components are numbered by their smallest strand.
LinkDiagram braid_closure(const BraidWord& braid);

// a on top of b.
StringLinkDiagram stack(const StringLinkDiagram& a, const StringLinkDiagram& b);
StringLinkDiagram stack_all(std::span<const StringLinkDiagram> factors, int n);
LinkDiagram closure(const StringLinkDiagram& l);

struct CabledLink {
  LinkDiagram link;
  std::vector<int> source_component;  // h: new component (index i-1) -> source component
};

// Zero-framed parallel copies; copies of component i are consecutive.
CabledLink cable(const LinkDiagram& link, std::span<const int> multiplicities);

// Adds a cancelling pair of curls (writhe +1 then -1) on the given arc; the link
// type is unchanged. Used to perturb diagrams in tests.
LinkDiagram add_kink_pair(const LinkDiagram& link, int arc);
StringLinkDiagram add_kink_pair(const StringLinkDiagram& link, int arc);

// --- JSON file formats ----------------------------------------------------------

// Link file: {"name", "components", "kind"?, "pd", "component_of_arc", "orientation",
// "signs"?}; braid file: {"strands", "word", "kind": "stringlink"|"closure"}.
AnyDiagram parse_diagram_json(std::string_view text);
AnyDiagram parse_pd(std::string_view text);
BraidWord parse_braid_json(std::string_view text);
std::string to_json_text(const Diagram& d);

}  // namespace milnor
