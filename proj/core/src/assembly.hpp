#pragma once

#include <string>
#include <utility>
#include <vector>

#include "milnor/diagram.hpp"

namespace milnor::detail {

// Crossings over free-form labels plus label identifications. Arcs are the classes
// of labels; successors follow from the crossings.
struct RawDiagram {
  int labels = 0;
  std::vector<Crossing> crossings;
  std::vector<std::pair<int, int>> unions;

  int new_label() { return labels++; }
};

// Resolves unions, derives successors and component membership by walking from
// start_labels[i] (the top or base label of component i+1).
DiagramData finalize(const RawDiagram& raw, DiagramKind kind,
                     const std::vector<int>& start_labels, std::string name,
                     std::vector<int>* label_arc = nullptr);

// Builds tangles from horizontal slices. Row positions are 0-based; strands
// start at the top going down, strand s being component s+1.
class TangleBuilder {
 public:
  explicit TangleBuilder(int strands);

  int width() const { return static_cast<int>(row_.size()); }

  // Crossing of positions pos and pos+1; the strand leaving the top-left slot
  // ends at the bottom-right slot.
  void cross(int pos, bool left_over);
  // Braid generator on downward strands at positions i-1, i (1-based i).
  void sigma(int i, int sign) { cross(i - 1, sign < 0); }
  // New arc turning at a maximum, occupying positions pos and pos+1 below.
  void cap(int pos, bool left_down);
  // Joins positions pos and pos+1 at a minimum.
  void cup(int pos);

  StringLinkDiagram finish_string_link(std::string name) const;
  // Closes strand ends to the tops; perm[s] is the end position of strand s.
  LinkDiagram finish_closure(const std::vector<int>& perm, std::string name) const;

 private:
  struct Slot {
    int label;
    int dir;  // +1 down, -1 up
  };

  RawDiagram raw_;
  std::vector<Slot> row_;
  std::vector<int> top_;
};

}  // namespace milnor::detail
