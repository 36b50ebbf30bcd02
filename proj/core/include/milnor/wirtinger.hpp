#pragma once

#include <string>
#include <vector>

#include "milnor/diagram.hpp"
#include "milnor/freegroup.hpp"
#include "milnor/magnus.hpp"

namespace milnor {

// x_out = x_over^-sign * x_in * x_over^sign; arcs are 0-based generator ids.
struct WirtingerRelation {
  int out_arc = 0;
  int in_arc = 0;
  int over_arc = 0;
  int sign = 1;
};

// One step along a component: from `arc` to the next arc. over_arc is -1 when the
// component passes over the crossing (same generator on both sides).
struct WalkStep {
  int arc = 0;
  int over_arc = -1;
  int sign = 0;
};

struct WirtingerPresentation {
  int components = 0;
  int generators = 0;
  std::vector<int> arc_component;  // 1-based
  std::vector<int> base_arc;       // per component
  std::vector<int> writhe;         // per component
  std::vector<WirtingerRelation> relations;
  // Per component, arcs in traversal order from the base with the crossing that
  // follows each one; the last step of a string link component has over_arc -1.
  std::vector<std::vector<WalkStep>> walks;
  bool string_link = false;

  // Relations as "x4 = x2^-1 x3 x2", one per line.
  std::string to_string() const;
};

WirtingerPresentation presentation(const Diagram& d);

// Arc generators as words in the base meridians, modulo the (depth+1)-th term of
// the lower central series.
struct MeridianApproximation {
  int depth = 1;
  std::vector<GroupWord> words;
};

MeridianApproximation meridian_approx(const WirtingerPresentation& p, int depth);

// Zero-framed longitude of a 1-based component from depth-t arc words.
GroupWord longitude(const WirtingerPresentation& p, int component, int depth);

// Magnus expansions of all zero-framed longitudes, exact through degree q,
// computed in the truncated series ring instead of with words. `depth` defaults to q;
// a smaller depth gives values exact through that degree only.
class SeriesLongitudes {
 public:
  SeriesLongitudes(const WirtingerPresentation& p, int q, int repeat_cap = -1, int depth = -1);

  int degree_bound() const { return q_; }
  int repeat_cap() const { return cap_; }
  int depth() const { return depth_; }
  // E(l_i) for a 1-based component.
  const TruncatedSeries& longitude(int component) const;

 private:
  int q_;
  int cap_;
  int depth_;
  std::vector<TruncatedSeries> longitudes_;
};

}  // namespace milnor
