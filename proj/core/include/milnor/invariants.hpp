#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "milnor/diagram.hpp"
#include "milnor/integer.hpp"
#include "milnor/multiindex.hpp"
#include "milnor/wirtinger.hpp"

namespace milnor {

// An integer modulo `modulus`; modulus 0 means the value is an exact integer.
struct Residue {
  Integer value;
  Integer modulus;

  Residue() = default;
  // Normalizes to 0 <= value < modulus when modulus > 0.
  Residue(Integer v, Integer m);

  bool is_zero() const { return value.is_zero(); }
  // "1 (mod 0)"
  std::string to_string() const;

  friend bool operator==(const Residue&, const Residue&) = default;
};

// Which subsequences enter the indeterminacy gcd.
enum class DeltaMode {
  kMilnorCyclic,  // proper subsequences and all their cyclic permutations
  kStrict,        // proper subsequences only
};

std::string to_string(DeltaMode mode);
DeltaMode parse_delta_mode(const std::string& text);

// Milnor numbers of one diagram. Links are read through the string link obtained
// by cutting at the base arcs. Longitude expansions are cached per (degree, cap);
// all methods may be called concurrently.
class MilnorEngine {
 public:
  explicit MilnorEngine(const Diagram& d);

  int components() const { return presentation_.components; }
  bool is_string_link() const { return presentation_.string_link; }
  const WirtingerPresentation& presentation() const { return presentation_; }

  // Computes the longitudes once for all indices with |I| <= max_length, r(I) <= max_r.
  void prepare(int max_length, int max_r = -1);

  // Exact mu(I): coefficient of X_{i_1}...X_{i_{m-1}} in E(l_{i_m}).
  Integer mu(const MultiIndex& index);
  Integer delta(const MultiIndex& index, DeltaMode mode = DeltaMode::kMilnorCyclic);
  Residue mubar(const MultiIndex& index, DeltaMode mode = DeltaMode::kMilnorCyclic);

  std::shared_ptr<const SeriesLongitudes> longitudes(int q, int repeat_cap);

 private:
  void check_index(const MultiIndex& index) const;

  WirtingerPresentation presentation_;
  std::mutex mutex_;
  std::vector<std::shared_ptr<const SeriesLongitudes>> cache_;
  std::map<MultiIndex, Integer> delta_cyclic_;
  std::map<MultiIndex, Integer> delta_strict_;
};

Integer mu_string(const StringLinkDiagram& l, const MultiIndex& index);
Integer delta(const Diagram& d, const MultiIndex& index,
              DeltaMode mode = DeltaMode::kMilnorCyclic);
Residue mubar(const Diagram& d, const MultiIndex& index,
              DeltaMode mode = DeltaMode::kMilnorCyclic);

struct InvariantRow {
  MultiIndex index;
  Residue value;  // modulus 0 for string links
};

struct InvariantTable {
  std::string subject;
  bool string_link = false;
  int components = 0;
  int max_length = 2;
  int max_r = 1;
  DeltaMode mode = DeltaMode::kMilnorCyclic;
  std::vector<InvariantRow> rows;  // (length, lexicographic) order

  std::vector<InvariantRow> nonzero() const;
  std::string to_json() const;
  // One aligned line per row: "123: 1 (mod 0)"; string links omit the modulus.
  std::string to_text(bool nonzero_only = false) const;
};

// Every index with 2 <= |I| <= max_length and r(I) <= max_r. Rows are computed on
// `jobs` threads and merged in canonical order.
InvariantTable table(const Diagram& d, int max_length, int max_r,
                     DeltaMode mode = DeltaMode::kMilnorCyclic, int jobs = 1);
InvariantTable table(MilnorEngine& engine, const std::string& subject, int max_length,
                     int max_r, DeltaMode mode = DeltaMode::kMilnorCyclic, int jobs = 1);

}  // namespace milnor
