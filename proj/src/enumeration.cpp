#include "krun/enumeration.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace krun {

namespace {

bool bit(std::uint64_t mask, long i) { return i >= 0 && i < 64 && ((mask >> i) & 1u) != 0; }

void check_values(const std::vector<Part>& parts) {
  for (const auto& p : parts) {
    if (p.value >= 64) throw std::invalid_argument("mask operations need part values below 64");
  }
}

/// Maximal stretches [lo, hi] of consecutive overlined values, ascending.
std::vector<std::pair<int, int>> overline_stretches(std::uint64_t overlined) {
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v < 64; ++v) {
    if (!bit(overlined, v)) continue;
    int hi = v;
    while (bit(overlined, hi + 1)) ++hi;
    out.emplace_back(v, hi);
    v = hi;
  }
  return out;
}

void partitions_rec(int remaining, int max_part, std::vector<Part>& acc,
                    const std::function<void(const std::vector<Part>&)>& fn) {
  if (remaining == 0) {
    fn(acc);
    return;
  }
  for (int v = std::min(remaining, max_part); v >= 1; --v) {
    for (int mult = remaining / v; mult >= 1; --mult) {
      acc.push_back({v, mult, false});
      partitions_rec(remaining - v * mult, v - 1, acc, fn);
      acc.pop_back();
    }
  }
}

std::uint64_t mask_of(const std::vector<Part>& parts) {
  std::uint64_t m = 0;
  for (const auto& p : parts) m |= std::uint64_t{1} << p.value;
  return m;
}

/// Visits every overline subset of a partition as a mask over its values.
template <typename Fn>
void for_each_overline_mask(const std::vector<Part>& parts, Fn&& fn) {
  const std::size_t d = parts.size();
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << d); ++pattern) {
    std::uint64_t ov = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if ((pattern >> (d - 1 - i)) & 1u) ov |= std::uint64_t{1} << parts[i].value;
    }
    fn(ov);
  }
}

void check_bound(int n) {
  if (n < 0 || n > kEnumerationBound) {
    throw std::out_of_range("exhaustive enumeration supports 0 <= n <= " + std::to_string(kEnumerationBound));
  }
}

}  // namespace

Overpartition::Overpartition(std::vector<Part> parts) {
  std::map<int, Part, std::greater<>> merged;
  for (const auto& p : parts) {
    if (p.value <= 0 || p.multiplicity <= 0) {
      throw std::invalid_argument("parts need positive value and multiplicity");
    }
    auto [it, inserted] = merged.try_emplace(p.value, Part{p.value, 0, false});
    if (p.overlined && it->second.overlined) {
      throw std::invalid_argument("value " + std::to_string(p.value) + " overlined twice");
    }
    it->second.multiplicity += p.multiplicity;
    it->second.overlined = it->second.overlined || p.overlined;
  }
  for (auto& [v, p] : merged) parts_.push_back(p);
}

Overpartition Overpartition::parse(std::string_view text) {
  std::vector<Part> parts;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '+')) ++i;
    if (i >= text.size()) break;
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc()) throw std::invalid_argument("bad overpartition text: " + std::string(text));
    i = static_cast<std::size_t>(ptr - text.data());
    bool over = false;
    if (i < text.size() && text[i] == '\'') {
      over = true;
      ++i;
    }
    if (v == 0 && !over) continue;
    parts.push_back({v, 1, over});
  }
  return Overpartition(std::move(parts));
}

int Overpartition::size() const {
  int s = 0;
  for (const auto& p : parts_) s += p.value * p.multiplicity;
  return s;
}

int Overpartition::part_count() const {
  int s = 0;
  for (const auto& p : parts_) s += p.multiplicity;
  return s;
}

int Overpartition::overline_count() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](const Part& p) { return p.overlined; }));
}

int Overpartition::multiplicity(int v) const {
  for (const auto& p : parts_) {
    if (p.value == v) return p.multiplicity;
  }
  return 0;
}

bool Overpartition::has_overline(int v) const {
  for (const auto& p : parts_) {
    if (p.value == v) return p.overlined;
  }
  return false;
}

std::uint64_t Overpartition::present_mask() const {
  check_values(parts_);
  return mask_of(parts_);
}

std::uint64_t Overpartition::overline_mask() const {
  check_values(parts_);
  std::uint64_t m = 0;
  for (const auto& p : parts_) {
    if (p.overlined) m |= std::uint64_t{1} << p.value;
  }
  return m;
}

std::string Overpartition::to_string() const {
  if (parts_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& p : parts_) {
    for (int c = 0; c < p.multiplicity; ++c) {
      if (!first) out << " + ";
      first = false;
      out << p.value;
      if (p.overlined && c + 1 == p.multiplicity) out << '\'';
    }
  }
  return out.str();
}

// A run j+1..j+k of overlines is admissible for the lower class when j is a
// gap and j+k+1 is not overlined; the upper class swaps the two conditions.
bool is_lower_k_run(std::uint64_t present, std::uint64_t overlined, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  for (int m = 1; m < 64; ++m) {
    if (!bit(overlined, m)) continue;
    bool ok = false;
    for (int j = std::max(0, m - k); j <= m - 1 && !ok; ++j) {
      bool run = true;
      for (int v = j + 1; v <= j + k && run; ++v) run = bit(overlined, v);
      ok = run && !bit(present, j) && !bit(overlined, j + k + 1);
    }
    if (!ok) return false;
  }
  return true;
}

bool is_upper_k_run(std::uint64_t present, std::uint64_t overlined, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  for (int m = 1; m < 64; ++m) {
    if (!bit(overlined, m)) continue;
    bool ok = false;
    for (int j = std::max(0, m - k); j <= m - 1 && !ok; ++j) {
      bool run = true;
      for (int v = j + 1; v <= j + k && run; ++v) run = bit(overlined, v);
      ok = run && !bit(overlined, j) && !bit(present, j + k + 1);
    }
    if (!ok) return false;
  }
  return true;
}

bool is_lower_k_run(const Overpartition& op, int k) {
  return is_lower_k_run(op.present_mask(), op.overline_mask(), k);
}

bool is_upper_k_run(const Overpartition& op, int k) {
  return is_upper_k_run(op.present_mask(), op.overline_mask(), k);
}

void for_each_partition(int n, const std::function<void(const std::vector<Part>&)>& fn) {
  if (n < 0) return;
  std::vector<Part> acc;
  partitions_rec(n, n, acc, fn);
}

void for_each_overpartition(int n, const std::function<void(const Overpartition&)>& fn) {
  check_bound(n);
  for_each_partition(n, [&](const std::vector<Part>& parts) {
    const std::size_t d = parts.size();
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << d); ++pattern) {
      std::vector<Part> marked = parts;
      for (std::size_t i = 0; i < d; ++i) marked[i].overlined = ((pattern >> (d - 1 - i)) & 1u) != 0;
      fn(Overpartition(std::move(marked)));
    }
  });
}

std::vector<Overpartition> enumerate_overpartitions(int n) {
  std::vector<Overpartition> out;
  for_each_overpartition(n, [&](const Overpartition& op) { out.push_back(op); });
  return out;
}

long long count_lower(int n, int k) {
  check_bound(n);
  long long count = 0;
  for_each_partition(n, [&](const std::vector<Part>& parts) {
    const std::uint64_t present = mask_of(parts);
    for_each_overline_mask(parts, [&](std::uint64_t ov) { count += is_lower_k_run(present, ov, k); });
  });
  return count;
}

long long count_upper(int n, int k) {
  check_bound(n);
  long long count = 0;
  for_each_partition(n, [&](const std::vector<Part>& parts) {
    const std::uint64_t present = mask_of(parts);
    for_each_overline_mask(parts, [&](std::uint64_t ov) { count += is_upper_k_run(present, ov, k); });
  });
  return count;
}

long long count_lower_by_parts(int n, int parts_wanted, int k) {
  check_bound(n);
  long long count = 0;
  for_each_partition(n, [&](const std::vector<Part>& parts) {
    int total = 0;
    for (const auto& p : parts) total += p.multiplicity;
    if (total != parts_wanted) return;
    const std::uint64_t present = mask_of(parts);
    for_each_overline_mask(parts, [&](std::uint64_t ov) { count += is_lower_k_run(present, ov, k); });
  });
  return count;
}

long long count_no_k_sequence(int n, int k) {
  check_bound(n);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  long long count = 0;
  for_each_partition(n, [&](const std::vector<Part>& parts) {
    // Values are strictly decreasing, so runs of consecutive values are
    // adjacent entries.
    int run = 0;
    int longest = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      run = (i > 0 && parts[i - 1].value == parts[i].value + 1) ? run + 1 : 1;
      longest = std::max(longest, run);
    }
    if (longest < k) ++count;
  });
  return count;
}

std::vector<long long> lower_counts(int n_max, int k) {
  std::vector<long long> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(count_lower(n, k));
  return out;
}

Overpartition lower_to_upper(const Overpartition& op, int k) {
  if (!is_lower_k_run(op, k)) throw NotLowerKRun();
  const std::uint64_t present = op.present_mask();
  std::uint64_t ov = op.overline_mask();
  std::uint64_t moved = 0;
  for (const auto& [lo, hi] : overline_stretches(ov)) {
    int top = hi;
    while (bit(present, top + 1)) ++top;
    for (int v = lo; v <= hi; ++v) ov &= ~(std::uint64_t{1} << v);
    for (int v = top - k + 1; v <= top; ++v) moved |= std::uint64_t{1} << v;
  }
  ov |= moved;
  std::vector<Part> parts = op.parts();
  for (auto& p : parts) p.overlined = bit(ov, p.value);
  return Overpartition(std::move(parts));
}

Overpartition upper_to_lower(const Overpartition& op, int k) {
  if (!is_upper_k_run(op, k)) throw NotUpperKRun();
  const std::uint64_t present = op.present_mask();
  std::uint64_t ov = op.overline_mask();
  std::uint64_t moved = 0;
  for (const auto& [lo, hi] : overline_stretches(ov)) {
    int bottom = lo;
    while (bottom > 1 && bit(present, bottom - 1)) --bottom;
    for (int v = lo; v <= hi; ++v) ov &= ~(std::uint64_t{1} << v);
    for (int v = bottom; v < bottom + k; ++v) moved |= std::uint64_t{1} << v;
  }
  ov |= moved;
  std::vector<Part> parts = op.parts();
  for (auto& p : parts) p.overlined = bit(ov, p.value);
  return Overpartition(std::move(parts));
}

Overpartition conjugate(const Overpartition& op) {
  const auto& parts = op.parts();
  std::vector<Part> out;
  int rows = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    rows += parts[i].multiplicity;
    const int next = i + 1 < parts.size() ? parts[i + 1].value : 0;
    // Columns next+1 .. value all have exactly `rows` cells.
    out.push_back({rows, parts[i].value - next, parts[i].overlined});
  }
  return Overpartition(std::move(out));
}

bool is_conjugate_one_run_class(const Overpartition& op) {
  const auto& parts = op.parts();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].overlined && parts[i].multiplicity < 2) return false;
  }
  return true;
}

Overpartition mono_inject_n(const Overpartition& op, int k) {
  if (!is_upper_k_run(op, k)) throw NotUpperKRun();
  std::vector<Part> parts = op.parts();
  parts.push_back({1, 1, false});
  return Overpartition(std::move(parts));
}

Overpartition mono_inject_k(const Overpartition& op, int k) {
  if (!is_lower_k_run(op, k + 1)) throw NotLowerKRun();
  std::uint64_t ov = op.overline_mask();
  for (const auto& [lo, hi] : overline_stretches(ov)) ov &= ~(std::uint64_t{1} << hi);
  std::vector<Part> parts = op.parts();
  for (auto& p : parts) p.overlined = bit(ov, p.value);
  return Overpartition(std::move(parts));
}

}  // namespace krun
