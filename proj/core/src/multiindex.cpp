#include "milnor/multiindex.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "milnor/error.hpp"

namespace milnor {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 1) throw InvalidArgument("multi-index entries must be >= 1");
  }
}

MultiIndex::MultiIndex(std::initializer_list<int> entries)
    : MultiIndex(std::vector<int>(entries)) {}

int MultiIndex::max_entry() const {
  return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

bool MultiIndex::within(int n) const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [n](int e) { return e >= 1 && e <= n; });
}

MultiIndex MultiIndex::without_last() const {
  if (entries_.empty()) throw InvalidArgument("without_last on empty multi-index");
  return MultiIndex(std::vector<int>(entries_.begin(), entries_.end() - 1));
}

MultiIndex MultiIndex::erased(std::size_t position) const {
  if (position >= entries_.size()) throw InvalidArgument("erase position out of range");
  std::vector<int> out = entries_;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(position));
  return MultiIndex(std::move(out));
}

MultiIndex MultiIndex::rotated(std::size_t shift) const {
  if (entries_.empty()) return *this;
  std::vector<int> out = entries_;
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()),
              out.end());
  return MultiIndex(std::move(out));
}

MultiIndex MultiIndex::appended(int entry) const {
  std::vector<int> out = entries_;
  out.push_back(entry);
  return MultiIndex(std::move(out));
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  const bool digits = max_entry() <= 9;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!digits && i > 0) os << ',';
    os << entries_[i];
  }
  return os.str();
}

MultiIndex parse_multi_index(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c))) continue;
    cleaned.push_back(c);
  }
  std::vector<int> entries;
  if (cleaned.empty()) return MultiIndex();
  if (cleaned.find(',') != std::string::npos) {
    std::size_t start = 0;
    while (start <= cleaned.size()) {
      const std::size_t end = std::min(cleaned.find(',', start), cleaned.size());
      const std::string token = cleaned.substr(start, end - start);
      if (token.empty() ||
          !std::all_of(token.begin(), token.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError("bad multi-index token '" + token + "' in '" + std::string(text) + "'");
      }
      entries.push_back(std::stoi(token));
      start = end + 1;
    }
  } else {
    for (char c : cleaned) {
      if (c < '1' || c > '9') {
        throw ParseError("bad multi-index digit in '" + std::string(text) + "'");
      }
      entries.push_back(c - '0');
    }
  }
  for (int e : entries) {
    if (e < 1) throw ParseError("multi-index entries must be >= 1: '" + std::string(text) + "'");
  }
  return MultiIndex(std::move(entries));
}

int repeat_max(const MultiIndex& index) {
  std::vector<int> counts(static_cast<std::size_t>(index.max_entry()) + 1, 0);
  int best = 0;
  for (int e : index.entries()) best = std::max(best, ++counts[static_cast<std::size_t>(e)]);
  return best;
}

namespace {

void extend_indices(int n, int length, int max_r, std::vector<int>& prefix,
                    std::vector<int>& counts, std::vector<MultiIndex>& out) {
  if (static_cast<int>(prefix.size()) == length) {
    out.emplace_back(prefix);
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (counts[static_cast<std::size_t>(v)] >= max_r) continue;
    ++counts[static_cast<std::size_t>(v)];
    prefix.push_back(v);
    extend_indices(n, length, max_r, prefix, counts, out);
    prefix.pop_back();
    --counts[static_cast<std::size_t>(v)];
  }
}

void require_tau_range(int m, int k, int n) {
  if (n < 2) throw InvalidArgument("tau families need n >= 2");
  if (m <= n || m > 2 * n) throw InvalidArgument("m must satisfy n < m <= 2n");
  if (k < 1 || k > n) throw InvalidArgument("k must lie in 1..n");
}

// First position p (0-based) with tau(p) != tau(rho(p)); -1 if tau is a palindrome.
int first_asymmetry(const std::vector<int>& v) {
  const int len = static_cast<int>(v.size());
  for (int i = 0; i < len; ++i) {
    if (v[static_cast<std::size_t>(i)] != v[static_cast<std::size_t>(len - 1 - i)]) return i;
  }
  return -1;
}

void extend_tau(int m, int k, int n, std::vector<int>& prefix, std::vector<int>& counts,
                std::vector<SurjectionTau>& out) {
  const int len = m - 2;
  const int placed = static_cast<int>(prefix.size());
  // Values still missing from the image must fit in the remaining slots.
  int missing = 0;
  for (int v = 1; v <= n; ++v) {
    if (v != k && counts[static_cast<std::size_t>(v)] == 0) ++missing;
  }
  if (missing > len - placed) return;
  if (placed == len) {
    out.push_back(SurjectionTau{m, k, n, prefix});
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (v == k) continue;
    const int cap = v > k ? 1 : 2;
    if (counts[static_cast<std::size_t>(v)] >= cap) continue;
    ++counts[static_cast<std::size_t>(v)];
    prefix.push_back(v);
    extend_tau(m, k, n, prefix, counts, out);
    prefix.pop_back();
    --counts[static_cast<std::size_t>(v)];
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_indices(int n, int max_length, int max_r, int min_length) {
  std::vector<MultiIndex> out;
  if (n < 1 || max_r < 1) return out;
  for (int length = std::max(min_length, 0); length <= max_length; ++length) {
    std::vector<int> prefix;
    std::vector<int> counts(static_cast<std::size_t>(n) + 1, 0);
    extend_indices(n, length, max_r, prefix, counts, out);
  }
  return out;
}

MultiIndex SurjectionTau::index() const {
  std::vector<int> e = values;
  e.push_back(k);
  e.push_back(k);
  return MultiIndex(std::move(e));
}

void validate(const InjectionPi& pi) {
  const int k = pi.arity();
  if (k < 2 || k > pi.n) throw InvalidArgument("pi must have 2 <= k <= n");
  std::vector<int> seen(static_cast<std::size_t>(pi.n) + 1, 0);
  for (int v : pi.values) {
    if (v < 1 || v > pi.n) throw InvalidArgument("pi value out of range");
    if (seen[static_cast<std::size_t>(v)]++) throw InvalidArgument("pi must be injective");
  }
  const int top = pi.values[static_cast<std::size_t>(k - 1)];
  const int second = pi.values[static_cast<std::size_t>(k - 2)];
  if (!(second < top)) throw InvalidArgument("pi must satisfy pi(k-1) < pi(k)");
  for (int i = 0; i + 2 < k; ++i) {
    if (!(pi.values[static_cast<std::size_t>(i)] < second)) {
      throw InvalidArgument("pi must satisfy pi(i) < pi(k-1) for i <= k-2");
    }
  }
}

void validate(const SurjectionTau& tau) {
  require_tau_range(tau.m, tau.k, tau.n);
  if (static_cast<int>(tau.values.size()) != tau.m - 2) {
    throw InvalidArgument("tau must have m-2 values");
  }
  std::vector<int> counts(static_cast<std::size_t>(tau.n) + 1, 0);
  for (int v : tau.values) {
    if (v < 1 || v > tau.n || v == tau.k) throw InvalidArgument("tau value out of range");
    ++counts[static_cast<std::size_t>(v)];
  }
  for (int v = 1; v <= tau.n; ++v) {
    if (v == tau.k) continue;
    const int c = counts[static_cast<std::size_t>(v)];
    if (c == 0) throw InvalidArgument("tau must be surjective onto {1..n} minus k");
    if (c > 2) throw InvalidArgument("tau fibres must have size <= 2");
    if (v > tau.k && c != 1) throw InvalidArgument("tau fibres over j > k must have size 1");
  }
}

std::vector<InjectionPi> enumerate_F(int k, int n) {
  if (k < 2 || k > n) throw InvalidArgument("enumerate_F requires 2 <= k <= n");
  std::vector<InjectionPi> out;
  std::vector<int> current;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  // Lexicographic over all injections, keeping the admissible ones.
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == k) {
      InjectionPi pi{n, current};
      const int top = current[static_cast<std::size_t>(k - 1)];
      const int second = current[static_cast<std::size_t>(k - 2)];
      bool ok = second < top;
      for (int i = 0; ok && i + 2 < k; ++i) ok = current[static_cast<std::size_t>(i)] < second;
      if (ok) out.push_back(std::move(pi));
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      current.push_back(v);
      self(self);
      current.pop_back();
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec(rec);
  return out;
}

std::vector<SurjectionTau> enumerate_B(int m, int k, int n) {
  require_tau_range(m, k, n);
  std::vector<SurjectionTau> out;
  if (k < m - n) return out;
  std::vector<int> prefix;
  std::vector<int> counts(static_cast<std::size_t>(n) + 1, 0);
  extend_tau(m, k, n, prefix, counts, out);
  return out;
}

bool in_R(const SurjectionTau& tau) {
  const int n = tau.n;
  const int m = tau.m;
  const auto& v = tau.values;
  auto at = [&](int i) { return v[static_cast<std::size_t>(i - 1)]; };  // 1-based tau(i)
  if (m == 2 * n - 1) {
    for (int i = 1; i <= n - 2; ++i) {
      if (at(i) != at(2 * n - 2 - i)) return false;
    }
    const int middle = at(n - 1);
    return std::count(v.begin(), v.end(), middle) == 1;
  }
  if (m == 2 * n) {
    for (int i = 1; i <= n - 1; ++i) {
      if (at(i) != at(2 * n - 1 - i)) return false;
    }
    return true;
  }
  return false;
}

bool in_P(const SurjectionTau& tau) {
  if (in_R(tau)) return false;
  const int p = first_asymmetry(tau.values);
  if (p < 0) return false;
  const auto& v = tau.values;
  return v[static_cast<std::size_t>(p)] < v[v.size() - 1 - static_cast<std::size_t>(p)];
}

std::vector<SurjectionTau> enumerate_P(int m, int k, int n) {
  std::vector<SurjectionTau> out;
  for (auto& tau : enumerate_B(m, k, n)) {
    if (in_P(tau)) out.push_back(std::move(tau));
  }
  return out;
}

std::vector<SurjectionTau> enumerate_R(int m, int k, int n) {
  std::vector<SurjectionTau> out;
  if (m != 2 * n - 1 && m != 2 * n) {
    require_tau_range(m, k, n);
    return out;
  }
  for (auto& tau : enumerate_B(m, k, n)) {
    if (in_R(tau)) out.push_back(std::move(tau));
  }
  return out;
}

SurjectionTau apply_rho(const SurjectionTau& tau) {
  SurjectionTau out = tau;
  std::reverse(out.values.begin(), out.values.end());
  return out;
}

SurjectionTau matching_R2n(const SurjectionTau& phi) {
  const int n = phi.n;
  if (phi.m != 2 * n - 1 || phi.k != n || !in_R(phi)) {
    throw InvalidArgument("matching_R2n expects phi in R_{2n-1}(n)");
  }
  std::vector<int> values(static_cast<std::size_t>(2 * n - 2));
  for (int i = 1; i <= n - 1; ++i) {
    const int v = phi.values[static_cast<std::size_t>(i - 1)];
    values[static_cast<std::size_t>(i - 1)] = v;
    values[static_cast<std::size_t>(2 * n - 1 - i - 1)] = v;
  }
  SurjectionTau tau{2 * n, n, n, std::move(values)};
  validate(tau);
  return tau;
}

}  // namespace milnor
