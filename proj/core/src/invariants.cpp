#include "milnor/invariants.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "milnor/error.hpp"
#include "milnor/magnus.hpp"

namespace milnor {

Residue::Residue(Integer v, Integer m) : value(std::move(v)), modulus(std::move(m)) {
  if (modulus < 0) modulus = -modulus;
  if (!modulus.is_zero()) {
    value %= modulus;
    if (value < 0) value += modulus;
  }
}

std::string Residue::to_string() const {
  return value.str() + " (mod " + modulus.str() + ")";
}

std::string to_string(DeltaMode mode) {
  return mode == DeltaMode::kMilnorCyclic ? "milnor-cyclic" : "paper-strict";
}

DeltaMode parse_delta_mode(const std::string& text) {
  if (text == "milnor-cyclic") return DeltaMode::kMilnorCyclic;
  if (text == "paper-strict") return DeltaMode::kStrict;
  throw InvalidArgument("unknown delta mode '" + text + "'");
}

MilnorEngine::MilnorEngine(const Diagram& d) : presentation_(milnor::presentation(d)) {}

void MilnorEngine::check_index(const MultiIndex& index) const {
  if (index.length() < 2) throw InvalidArgument("Milnor indices need length at least 2");
  if (!index.within(components())) {
    throw InvalidArgument("index " + index.to_string() + " mentions a missing component");
  }
}

std::shared_ptr<const SeriesLongitudes> MilnorEngine::longitudes(int q, int repeat_cap) {
  const int cap = repeat_cap >= q ? -1 : repeat_cap;
  {
    std::lock_guard lock(mutex_);
    for (const auto& s : cache_) {
      if (s->degree_bound() < q) continue;
      if (s->repeat_cap() < 0 || (repeat_cap >= 0 && s->repeat_cap() >= repeat_cap)) return s;
    }
  }
  auto fresh = std::make_shared<const SeriesLongitudes>(presentation_, q, cap);
  std::lock_guard lock(mutex_);
  cache_.push_back(fresh);
  return fresh;
}

void MilnorEngine::prepare(int max_length, int max_r) {
  if (max_length < 2) throw InvalidArgument("max length must be at least 2");
  longitudes(max_length - 1, max_r);
}

Integer MilnorEngine::mu(const MultiIndex& index) {
  check_index(index);
  const int q = static_cast<int>(index.length()) - 1;
  const auto series = longitudes(q, repeat_max(index));
  const TruncatedSeries& l = series->longitude(index.back());
  return l.coefficient(index.without_last());
}

Integer MilnorEngine::delta(const MultiIndex& index, DeltaMode mode) {
  check_index(index);
  auto& memo = mode == DeltaMode::kMilnorCyclic ? delta_cyclic_ : delta_strict_;
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo.find(index); it != memo.end()) return it->second;
  }
  // Delta(I) = gcd over j of mu(I - j) (with rotations) and Delta(I - j).
  Integer g = 0;
  if (index.length() > 2) {
    for (std::size_t j = 0; j < index.length(); ++j) {
      const MultiIndex sub = index.erased(j);
      if (mode == DeltaMode::kMilnorCyclic) {
        for (std::size_t r = 0; r < sub.length(); ++r) g = gcd(g, mu(sub.rotated(r)));
      } else {
        g = gcd(g, mu(sub));
      }
      if (g == 1) break;
      g = gcd(g, delta(sub, mode));
      if (g == 1) break;
    }
  }
  std::lock_guard lock(mutex_);
  memo.emplace(index, g);
  return g;
}

Residue MilnorEngine::mubar(const MultiIndex& index, DeltaMode mode) {
  const Integer d = delta(index, mode);
  return Residue(mu(index), d);
}

Integer mu_string(const StringLinkDiagram& l, const MultiIndex& index) {
  return MilnorEngine(l).mu(index);
}

Integer delta(const Diagram& d, const MultiIndex& index, DeltaMode mode) {
  return MilnorEngine(d).delta(index, mode);
}

Residue mubar(const Diagram& d, const MultiIndex& index, DeltaMode mode) {
  return MilnorEngine(d).mubar(index, mode);
}

// --- tables ---------------------------------------------------------------------------

std::vector<InvariantRow> InvariantTable::nonzero() const {
  std::vector<InvariantRow> out;
  for (const InvariantRow& r : rows) {
    if (!r.value.is_zero()) out.push_back(r);
  }
  return out;
}

namespace {

nlohmann::ordered_json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

}  // namespace

std::string InvariantTable::to_json() const {
  nlohmann::ordered_json j;
  j["subject"] = subject;
  j["kind"] = string_link ? "stringlink" : "link";
  j["components"] = components;
  j["max_length"] = max_length;
  j["max_r"] = max_r;
  j["delta_mode"] = milnor::to_string(mode);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const InvariantRow& r : rows) {
    nlohmann::ordered_json row;
    row["index"] = r.index.to_string();
    row["value"] = integer_json(r.value.value);
    row["modulus"] = integer_json(r.value.modulus);
    arr.push_back(std::move(row));
  }
  j["rows"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string InvariantTable::to_text(bool nonzero_only) const {
  std::size_t width = 0;
  for (const InvariantRow& r : rows) width = std::max(width, r.index.to_string().size());
  std::ostringstream os;
  for (const InvariantRow& r : rows) {
    if (nonzero_only && r.value.is_zero()) continue;
    os << std::setw(static_cast<int>(width)) << r.index.to_string() << ": "
       << (string_link ? r.value.value.str() : r.value.to_string()) << '\n';
  }
  return os.str();
}

InvariantTable table(MilnorEngine& engine, const std::string& subject, int max_length,
                     int max_r, DeltaMode mode, int jobs) {
  if (max_length < 2) throw InvalidArgument("max length must be at least 2");
  if (max_r < 1) throw InvalidArgument("max r must be at least 1");
  InvariantTable t;
  t.subject = subject;
  t.string_link = engine.is_string_link();
  t.components = engine.components();
  t.max_length = max_length;
  t.max_r = max_r;
  t.mode = mode;
  const std::vector<MultiIndex> indices = enumerate_indices(t.components, max_length, max_r);
  t.rows.resize(indices.size());
  if (indices.empty()) return t;
  engine.prepare(max_length, max_r);

  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < indices.size(); i += step) {
      const MultiIndex& I = indices[i];
      t.rows[i].index = I;
      t.rows[i].value = t.string_link ? Residue(engine.mu(I), 0) : engine.mubar(I, mode);
    }
  };
  const std::size_t threads = static_cast<std::size_t>(std::max(1, jobs));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (std::size_t k = 0; k < threads; ++k) {
      pool.emplace_back([&, k] {
        try {
          work(k, threads);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }
  return t;
}

InvariantTable table(const Diagram& d, int max_length, int max_r, DeltaMode mode, int jobs) {
  MilnorEngine engine(d);
  return table(engine, d.name(), max_length, max_r, mode, jobs);
}

}  // namespace milnor
