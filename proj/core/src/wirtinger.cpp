#include "milnor/wirtinger.hpp"

#include <sstream>

#include "milnor/error.hpp"

namespace milnor {

WirtingerPresentation presentation(const Diagram& d) {
  WirtingerPresentation p;
  p.components = d.components();
  p.generators = d.arc_count();
  p.string_link = d.is_string_link();
  for (int a = 0; a < d.arc_count(); ++a) p.arc_component.push_back(d.component_of(a));

  // The crossing at the head of each arc.
  std::vector<int> head_under(static_cast<std::size_t>(d.arc_count()), -1);
  std::vector<int> head_sign(static_cast<std::size_t>(d.arc_count()), 0);
  for (const Crossing& c : d.crossings()) {
    p.relations.push_back(WirtingerRelation{c.under_out, c.under_in, c.over_in, c.sign});
    head_under[static_cast<std::size_t>(c.under_in)] = c.over_in;
    head_sign[static_cast<std::size_t>(c.under_in)] = c.sign;
  }
  for (int c = 1; c <= d.components(); ++c) {
    p.base_arc.push_back(d.base_arc(c));
    p.writhe.push_back(d.writhe(c));
    std::vector<WalkStep> walk;
    for (int a : d.arcs_of(c)) {
      walk.push_back(WalkStep{a, head_under[static_cast<std::size_t>(a)],
                              head_sign[static_cast<std::size_t>(a)]});
    }
    p.walks.push_back(std::move(walk));
  }
  return p;
}

std::string WirtingerPresentation::to_string() const {
  std::ostringstream os;
  for (const WirtingerRelation& r : relations) {
    os << 'x' << r.out_arc + 1 << " = x" << r.over_arc + 1 << '^' << -r.sign << " x"
       << r.in_arc + 1 << " x" << r.over_arc + 1 << '^' << r.sign << '\n';
  }
  return os.str();
}

namespace {

GroupWord signed_word(const GroupWord& w, int sign) { return sign > 0 ? w : inverse(w); }

}  // namespace

MeridianApproximation meridian_approx(const WirtingerPresentation& p, int depth) {
  if (depth < 1) throw InvalidArgument("depth must be at least 1");
  const int n = p.components;
  MeridianApproximation m;
  m.depth = 1;
  for (int a = 0; a < p.generators; ++a) {
    m.words.push_back(GroupWord::generator(n, p.arc_component[static_cast<std::size_t>(a)]));
  }
  for (int t = 1; t < depth; ++t) {
    std::vector<GroupWord> next(m.words.size(), GroupWord(n));
    for (int c = 1; c <= n; ++c) {
      const GroupWord mc = GroupWord::generator(n, c);
      GroupWord lambda(n);
      for (const WalkStep& s : p.walks[static_cast<std::size_t>(c - 1)]) {
        next[static_cast<std::size_t>(s.arc)] = multiply(multiply(inverse(lambda), mc), lambda);
        if (s.over_arc >= 0) {
          lambda = multiply(lambda, signed_word(m.words[static_cast<std::size_t>(s.over_arc)], s.sign));
        }
      }
    }
    m.words = std::move(next);
    m.depth = t + 1;
  }
  return m;
}

GroupWord longitude(const WirtingerPresentation& p, int component, int depth) {
  if (component < 1 || component > p.components) throw InvalidArgument("component out of range");
  const MeridianApproximation m = meridian_approx(p, depth);
  GroupWord lambda(p.components);
  for (const WalkStep& s : p.walks[static_cast<std::size_t>(component - 1)]) {
    if (s.over_arc >= 0) {
      lambda = multiply(lambda, signed_word(m.words[static_cast<std::size_t>(s.over_arc)], s.sign));
    }
  }
  const int w = p.writhe[static_cast<std::size_t>(component - 1)];
  return multiply(lambda, power(GroupWord::generator(p.components, component), -w));
}

SeriesLongitudes::SeriesLongitudes(const WirtingerPresentation& p, int q, int repeat_cap,
                                   int depth)
    : q_(q), cap_(repeat_cap), depth_(depth < 0 ? q : depth) {
  if (q < 0) throw InvalidArgument("truncation degree must be nonnegative");
  if (depth_ < 1) throw InvalidArgument("depth must be at least 1");
  const int n = p.components;
  const TruncatedSeries one = TruncatedSeries::one(n, q, repeat_cap);

  // E(x_a) and E(x_a^-1) for every arc.
  std::vector<TruncatedSeries> x;
  std::vector<TruncatedSeries> x_inv;
  for (int a = 0; a < p.generators; ++a) {
    const int c = p.arc_component[static_cast<std::size_t>(a)];
    x.push_back(one.times_generator(c, 1));
    x_inv.push_back(one.times_generator(c, -1));
  }

  // Each pass conjugates the meridian of every arc by the partial longitude read
  // from the previous pass.
  for (int t = 1; t < depth_; ++t) {
    const std::vector<TruncatedSeries> prev_x = x;
    const std::vector<TruncatedSeries> prev_x_inv = x_inv;
    for (int c = 1; c <= n; ++c) {
      TruncatedSeries lambda = one;
      TruncatedSeries lambda_inv = one;
      for (const WalkStep& s : p.walks[static_cast<std::size_t>(c - 1)]) {
        x[static_cast<std::size_t>(s.arc)] = lambda_inv.times_generator(c, 1) * lambda;
        x_inv[static_cast<std::size_t>(s.arc)] = lambda_inv.times_generator(c, -1) * lambda;
        if (s.over_arc >= 0) {
          const auto o = static_cast<std::size_t>(s.over_arc);
          lambda = lambda * (s.sign > 0 ? prev_x[o] : prev_x_inv[o]);
          lambda_inv = (s.sign > 0 ? prev_x_inv[o] : prev_x[o]) * lambda_inv;
        }
      }
    }
  }

  auto walk = [&](int c) {
    TruncatedSeries lambda = one;
    for (const WalkStep& s : p.walks[static_cast<std::size_t>(c - 1)]) {
      if (s.over_arc >= 0) {
        const auto o = static_cast<std::size_t>(s.over_arc);
        lambda = lambda * (s.sign > 0 ? x[o] : x_inv[o]);
      }
    }
    return lambda;
  };

  for (int c = 1; c <= n; ++c) {
    TruncatedSeries lambda = walk(c);
    const int w = p.writhe[static_cast<std::size_t>(c - 1)];
    for (int i = 0; i < (w > 0 ? w : -w); ++i) lambda = lambda.times_generator(c, w > 0 ? -1 : 1);
    longitudes_.push_back(std::move(lambda));
  }
}

const TruncatedSeries& SeriesLongitudes::longitude(int component) const {
  if (component < 1 || component > static_cast<int>(longitudes_.size())) {
    throw InvalidArgument("component out of range");
  }
  return longitudes_[static_cast<std::size_t>(component - 1)];
}

}  // namespace milnor
