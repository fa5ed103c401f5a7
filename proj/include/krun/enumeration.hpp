// Overpartitions, the lower/upper k-run predicates, exhaustive counting, and
// the explicit maps between classes (run shifting, conjugation, injections).
#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace krun {

class NotLowerKRun : public std::invalid_argument {
 public:
  NotLowerKRun() : std::invalid_argument("overpartition is not a lower k-run overpartition") {}
};

class NotUpperKRun : public std::invalid_argument {
 public:
  NotUpperKRun() : std::invalid_argument("overpartition is not an upper k-run overpartition") {}
};

/// One distinct part value. The overline, when present, sits on the last of
/// the `multiplicity` copies.
struct Part {
  int value = 0;
  int multiplicity = 0;
  bool overlined = false;

  friend bool operator==(const Part&, const Part&) = default;
  friend auto operator<=>(const Part&, const Part&) = default;
};

/// Practical bound for the exhaustive oracles; values fit a 64-bit mask.
inline constexpr int kEnumerationBound = 40;

class Overpartition {
 public:
  Overpartition() = default;
  /// Parts in any order; equal values are merged. Throws std::invalid_argument
  /// on non-positive values or multiplicities, or on two overlined entries
  /// with the same value.
  explicit Overpartition(std::vector<Part> parts);

  /// Parses "4' + 3' + 1": a trailing apostrophe marks an overlined part, and
  /// repeated values may be listed individually. "0" or "" is the empty one.
  static Overpartition parse(std::string_view text);

  const std::vector<Part>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int size() const;
  int part_count() const;
  int overline_count() const;
  int largest() const { return parts_.empty() ? 0 : parts_.front().value; }

  /// Multiplicity of v (0 if absent) and whether v carries an overline.
  int multiplicity(int v) const;
  bool has_overline(int v) const;

  /// Bitmask with bit v set when v occurs; requires values < 64.
  std::uint64_t present_mask() const;
  std::uint64_t overline_mask() const;

  /// Same notation as parse(), parts in decreasing order.
  std::string to_string() const;

  friend bool operator==(const Overpartition&, const Overpartition&) = default;
  friend auto operator<=>(const Overpartition&, const Overpartition&) = default;

 private:
  std::vector<Part> parts_;  // strictly decreasing values
};

bool is_lower_k_run(const Overpartition& op, int k);
bool is_upper_k_run(const Overpartition& op, int k);

// Mask-level predicates used by the counting loops.
bool is_lower_k_run(std::uint64_t present, std::uint64_t overlined, int k);
bool is_upper_k_run(std::uint64_t present, std::uint64_t overlined, int k);

/// Calls fn on every overpartition of n, largest part descending, then
/// recursively on the remainder; for each partition the overline patterns
/// are visited as a binary counter over distinct values, largest value as
/// the high bit, plain before overlined.
void for_each_overpartition(int n, const std::function<void(const Overpartition&)>& fn);
std::vector<Overpartition> enumerate_overpartitions(int n);

/// Calls fn on every partition of n as (value, multiplicity) pairs, values
/// decreasing.
void for_each_partition(int n, const std::function<void(const std::vector<Part>&)>& fn);

long long count_lower(int n, int k);
long long count_upper(int n, int k);
long long count_lower_by_parts(int n, int parts, int k);
/// Partitions of n in which no k consecutive integers all appear as parts.
long long count_no_k_sequence(int n, int k);
/// Every count_lower(n, k) for n <= n_max in one pass per n.
std::vector<long long> lower_counts(int n_max, int k);

/// Moves every run of k overlines from the bottom of its block of
/// consecutive values to the top.
Overpartition lower_to_upper(const Overpartition& op, int k);
/// Inverse of lower_to_upper.
Overpartition upper_to_lower(const Overpartition& op, int k);

/// Transpose of the Ferrers diagram; the overline on the last row of value m
/// marks the corner that lands in the last row of value (#parts >= m).
Overpartition conjugate(const Overpartition& op);
/// Every overlined value other than the largest part also occurs without the
/// overline (multiplicity >= 2). Image of the lower 1-run class under
/// conjugation.
bool is_conjugate_one_run_class(const Overpartition& op);

/// Appends a plain part 1; upper k-run of n -> upper k-run of n+1.
Overpartition mono_inject_n(const Overpartition& op, int k);
/// Drops the overline on the top value of every (k+1)-run; lower (k+1)-run ->
/// lower k-run of the same size.
Overpartition mono_inject_k(const Overpartition& op, int k);

}  // namespace krun
