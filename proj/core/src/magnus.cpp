#include "milnor/magnus.hpp"

#include <algorithm>
#include <sstream>

#include "milnor/error.hpp"

namespace milnor {

namespace {

constexpr int kDegreeShift = 58;
constexpr std::uint64_t kLocalMask = (std::uint64_t{1} << kDegreeShift) - 1;
constexpr int kCountBits = 5;
constexpr int kMaxCappedVariables = 12;
constexpr int kMaxCap = 15;

int degree_of(std::uint64_t key) { return static_cast<int>(key >> kDegreeShift); }
std::uint64_t local_of(std::uint64_t key) { return key & kLocalMask; }
std::uint64_t make_key(int degree, std::uint64_t local) {
  return (static_cast<std::uint64_t>(degree) << kDegreeShift) | local;
}

std::uint64_t count_unit(int variable) {  // variable is 0-based
  return std::uint64_t{1} << (kCountBits * variable);
}

struct CapMasks {
  std::uint64_t addend = 0;
  std::uint64_t high = 0;
};

CapMasks cap_masks(int n, int cap) {
  CapMasks m;
  for (int v = 0; v < n; ++v) {
    m.addend += static_cast<std::uint64_t>(kMaxCap - cap) * count_unit(v);
    m.high += std::uint64_t{16} * count_unit(v);
  }
  return m;
}

void normalize(std::vector<TruncatedSeries::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.key < b.key; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Integer sum = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].key == terms[i].key) {
      sum += terms[j].coeff;
      ++j;
    }
    if (!sum.is_zero()) {
      terms[out].key = terms[i].key;
      terms[out].counts = terms[i].counts;
      terms[out].coeff = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

struct DenseScratch {
  std::vector<Integer> acc;
  std::vector<std::uint64_t> counts;
  std::vector<char> used;
  std::vector<std::uint32_t> touched;
};

}  // namespace

TruncatedSeries::TruncatedSeries(int n, int q, int repeat_cap) : n_(n), q_(q), cap_(q) {
  if (n < 1) throw InvalidArgument("series needs at least one variable");
  if (q < 0 || q >= 63) throw InvalidArgument("truncation degree out of range");
  if (repeat_cap >= 0 && repeat_cap < q && n <= kMaxCappedVariables && repeat_cap <= kMaxCap) {
    cap_ = repeat_cap;
  }
  pow_n_.assign(static_cast<std::size_t>(q) + 1, 1);
  for (int d = 1; d <= q; ++d) {
    const std::uint64_t prev = pow_n_[static_cast<std::size_t>(d - 1)];
    if (prev > kLocalMask / static_cast<std::uint64_t>(n)) {
      throw InvalidArgument("monomial space too large for n=" + std::to_string(n) +
                            ", q=" + std::to_string(q));
    }
    pow_n_[static_cast<std::size_t>(d)] = prev * static_cast<std::uint64_t>(n);
  }
}

TruncatedSeries TruncatedSeries::one(int n, int q, int repeat_cap) {
  TruncatedSeries s(n, q, repeat_cap);
  s.terms_.push_back(Term{0, 0, Integer(1)});
  return s;
}

TruncatedSeries TruncatedSeries::variable(int j, int n, int q, int repeat_cap) {
  TruncatedSeries s(n, q, repeat_cap);
  if (j < 1 || j > n) throw InvalidArgument("variable index out of range");
  if (q >= 1 && (s.cap_ >= 1)) {
    s.terms_.push_back(Term{make_key(1, static_cast<std::uint64_t>(j - 1)), count_unit(j - 1),
                            Integer(1)});
  }
  return s;
}

bool TruncatedSeries::counts_ok(std::uint64_t counts) const {
  if (cap_ >= q_) return true;
  const CapMasks m = cap_masks(n_, cap_);
  return ((counts + m.addend) & m.high) == 0;
}

std::uint64_t TruncatedSeries::encode(std::span<const int> monomial,
                                      std::uint64_t* counts) const {
  std::uint64_t local = 0;
  std::uint64_t c = 0;
  for (int v : monomial) {
    if (v < 1 || v > n_) throw InvalidArgument("monomial variable out of range");
    local = local * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(v - 1);
    if (cap_ < q_) c += count_unit(v - 1);
  }
  if (counts != nullptr) *counts = c;
  return make_key(static_cast<int>(monomial.size()), local);
}

void TruncatedSeries::check_compatible(const TruncatedSeries& other) const {
  if (n_ != other.n_ || q_ != other.q_ || cap_ != other.cap_) {
    throw InvalidArgument("series parameter mismatch");
  }
}

Integer TruncatedSeries::coefficient(const MultiIndex& monomial) const {
  if (static_cast<int>(monomial.length()) > q_) {
    throw InvalidArgument("monomial degree " + std::to_string(monomial.length()) +
                          " exceeds truncation " + std::to_string(q_));
  }
  std::uint64_t counts = 0;
  const std::uint64_t key = encode(monomial.entries(), &counts);
  if (!counts_ok(counts)) throw InvalidArgument("monomial exceeds the series repeat cap");
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, std::uint64_t k) { return t.key < k; });
  if (it == terms_.end() || it->key != key) return Integer(0);
  return it->coeff;
}

Integer TruncatedSeries::constant_term() const { return coefficient(MultiIndex()); }

std::vector<int> TruncatedSeries::monomial_of(const Term& term) const {
  const int d = degree_of(term.key);
  std::uint64_t local = local_of(term.key);
  std::vector<int> out(static_cast<std::size_t>(d));
  for (int i = d - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(local % static_cast<std::uint64_t>(n_)) + 1;
    local /= static_cast<std::uint64_t>(n_);
  }
  return out;
}

TruncatedSeries TruncatedSeries::times_variable(int j) const {
  if (j < 1 || j > n_) throw InvalidArgument("variable index out of range");
  TruncatedSeries out(n_, q_, cap_);
  out.terms_.reserve(terms_.size());
  const std::uint64_t unit = cap_ < q_ ? count_unit(j - 1) : 0;
  for (const Term& t : terms_) {
    const int d = degree_of(t.key);
    if (d + 1 > q_) break;  // sorted by degree
    const std::uint64_t counts = t.counts + unit;
    if (!counts_ok(counts)) continue;
    const std::uint64_t local =
        local_of(t.key) * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(j - 1);
    out.terms_.push_back(Term{make_key(d + 1, local), counts, t.coeff});
  }
  return out;
}

TruncatedSeries TruncatedSeries::times_generator(int j, int sign) const {
  if (sign != 1 && sign != -1) throw InvalidArgument("generator sign must be +-1");
  std::vector<Term> acc(terms_.begin(), terms_.end());
  TruncatedSeries shifted = times_variable(j);
  int step_sign = sign;  // coefficient of X_j^t is 1 (t=1) or (-1)^t
  while (!shifted.terms_.empty()) {
    for (Term t : shifted.terms_) {
      if (step_sign < 0) t.coeff = -t.coeff;
      acc.push_back(std::move(t));
    }
    if (sign > 0) break;
    shifted = shifted.times_variable(j);
    step_sign = -step_sign;
  }
  normalize(acc);
  TruncatedSeries out(n_, q_, cap_);
  out.terms_ = std::move(acc);
  return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (constant_term() != 1) throw InvalidArgument("inverse needs constant term 1");
  const TruncatedSeries u = *this - one(n_, q_, cap_);
  const TruncatedSeries minus_u = -u;
  TruncatedSeries result = one(n_, q_, cap_);
  TruncatedSeries power = one(n_, q_, cap_);
  for (int t = 1; t <= q_; ++t) {
    power = power * minus_u;
    if (power.terms_.empty()) break;
    result = result + power;
  }
  return result;
}

TruncatedSeries TruncatedSeries::truncated(int q) const {
  if (q > q_) throw InvalidArgument("cannot raise truncation degree");
  TruncatedSeries out(n_, q, cap_ < q_ ? cap_ : -1);
  for (const Term& t : terms_) {
    if (degree_of(t.key) > q) break;
    if (!out.counts_ok(t.counts)) continue;
    out.terms_.push_back(t);
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out = *this;
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  TruncatedSeries out(a.n_, a.q_, a.cap_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].key < b.terms_[j].key)) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || b.terms_[j].key < a.terms_[i].key) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      Integer sum = a.terms_[i].coeff + b.terms_[j].coeff;
      if (!sum.is_zero()) {
        out.terms_.push_back(TruncatedSeries::Term{a.terms_[i].key, a.terms_[i].counts, sum});
      }
      ++i;
      ++j;
    }
  }
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  TruncatedSeries out(a.n_, a.q_, a.cap_);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  const int q = a.q_;
  const bool capped = a.cap_ < q;
  const CapMasks masks = capped ? cap_masks(a.n_, a.cap_) : CapMasks{};

  // b_end[d]: number of terms of b with degree <= d.
  std::vector<std::size_t> b_end(static_cast<std::size_t>(q) + 1, 0);
  {
    std::size_t idx = 0;
    for (int d = 0; d <= q; ++d) {
      while (idx < b.terms_.size() && degree_of(b.terms_[idx].key) <= d) ++idx;
      b_end[static_cast<std::size_t>(d)] = idx;
    }
  }
  std::vector<std::uint64_t> offset(static_cast<std::size_t>(q) + 2, 0);
  for (int d = 0; d <= q; ++d) {
    offset[static_cast<std::size_t>(d) + 1] =
        offset[static_cast<std::size_t>(d)] + a.pow_n_[static_cast<std::size_t>(d)];
  }
  const std::uint64_t total = offset[static_cast<std::size_t>(q) + 1];

  constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 21;
  if (total <= kDenseLimit) {
    thread_local DenseScratch scratch;
    if (scratch.acc.size() < total) {
      scratch.acc.resize(total);
      scratch.counts.resize(total);
      scratch.used.resize(total, 0);
    }
    scratch.touched.clear();
    for (const auto& ta : a.terms_) {
      const int da = degree_of(ta.key);
      const std::uint64_t la = local_of(ta.key);
      const std::size_t lim = b_end[static_cast<std::size_t>(q - da)];
      for (std::size_t bi = 0; bi < lim; ++bi) {
        const auto& tb = b.terms_[bi];
        std::uint64_t counts = 0;
        if (capped) {
          counts = ta.counts + tb.counts;
          if (((counts + masks.addend) & masks.high) != 0) continue;
        }
        const int db = degree_of(tb.key);
        const std::uint64_t idx = offset[static_cast<std::size_t>(da + db)] +
                                  la * a.pow_n_[static_cast<std::size_t>(db)] + local_of(tb.key);
        if (!scratch.used[idx]) {
          scratch.used[idx] = 1;
          scratch.touched.push_back(static_cast<std::uint32_t>(idx));
          scratch.acc[idx] = ta.coeff * tb.coeff;
          scratch.counts[idx] = counts;
        } else {
          scratch.acc[idx] += ta.coeff * tb.coeff;
        }
      }
    }
    std::sort(scratch.touched.begin(), scratch.touched.end());
    out.terms_.reserve(scratch.touched.size());
    int degree = 0;
    for (std::uint32_t idx : scratch.touched) {
      while (idx >= offset[static_cast<std::size_t>(degree) + 1]) ++degree;
      scratch.used[idx] = 0;
      if (scratch.acc[idx].is_zero()) continue;
      out.terms_.push_back(TruncatedSeries::Term{
          make_key(degree, idx - offset[static_cast<std::size_t>(degree)]), scratch.counts[idx],
          std::move(scratch.acc[idx])});
    }
    return out;
  }

  std::vector<TruncatedSeries::Term> acc;
  for (const auto& ta : a.terms_) {
    const int da = degree_of(ta.key);
    const std::size_t lim = b_end[static_cast<std::size_t>(q - da)];
    for (std::size_t bi = 0; bi < lim; ++bi) {
      const auto& tb = b.terms_[bi];
      std::uint64_t counts = 0;
      if (capped) {
        counts = ta.counts + tb.counts;
        if (((counts + masks.addend) & masks.high) != 0) continue;
      }
      const int db = degree_of(tb.key);
      const std::uint64_t local =
          local_of(ta.key) * a.pow_n_[static_cast<std::size_t>(db)] + local_of(tb.key);
      acc.push_back(TruncatedSeries::Term{make_key(da + db, local), counts, ta.coeff * tb.coeff});
    }
  }
  normalize(acc);
  out.terms_ = std::move(acc);
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.n_ != b.n_ || a.q_ != b.q_ || a.cap_ != b.cap_) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

std::string TruncatedSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    const bool negative = t.coeff < 0;
    const Integer magnitude = negative ? Integer(-t.coeff) : t.coeff;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const std::vector<int> mono = monomial_of(t);
    if (mono.empty()) {
      os << magnitude;
      continue;
    }
    if (magnitude != 1) os << magnitude << '*';
    for (std::size_t i = 0; i < mono.size();) {
      std::size_t run = 1;
      while (i + run < mono.size() && mono[i + run] == mono[i]) ++run;
      if (i > 0) os << '*';
      os << 'X' << mono[i];
      if (run > 1) os << '^' << run;
      i += run;
    }
  }
  return os.str();
}

TruncatedSeries generator_series(int j, int sign, int n, int q, int repeat_cap) {
  if (j < 1 || j > n) throw InvalidArgument("generator index out of range");
  return TruncatedSeries::one(n, q, repeat_cap).times_generator(j, sign);
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries expand(const GroupWord& word, int n, int q, int repeat_cap) {
  if (word.rank() != n) throw InvalidArgument("word rank does not match variable count");
  TruncatedSeries s = TruncatedSeries::one(n, q, repeat_cap);
  for (const Letter& l : word.letters()) s = s.times_generator(l.generator, l.sign);
  return s;
}

Integer coefficient(const TruncatedSeries& series, const MultiIndex& monomial) {
  return series.coefficient(monomial);
}

}  // namespace milnor
