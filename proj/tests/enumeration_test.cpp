#include <doctest.h>

#include <algorithm>
#include <set>

#include "krun/enumeration.hpp"

using namespace krun;

namespace {

// The lower k-run condition spelled out clause by clause on value sets:
// every overlined m sits in some j+1..j+k that is fully overlined, with no
// part j and no overlined j+k+1.
bool naive_lower(const Overpartition& op, int k) {
  for (const auto& p : op.parts()) {
    if (!p.overlined) continue;
    bool ok = false;
    for (int j = std::max(0, p.value - k); j < p.value && !ok; ++j) {
      bool run = true;
      for (int v = j + 1; v <= j + k; ++v) run = run && op.has_overline(v);
      ok = run && op.multiplicity(j) == 0 && !op.has_overline(j + k + 1);
    }
    if (!ok) return false;
  }
  return true;
}

bool naive_upper(const Overpartition& op, int k) {
  for (const auto& p : op.parts()) {
    if (!p.overlined) continue;
    bool ok = false;
    for (int j = std::max(0, p.value - k); j < p.value && !ok; ++j) {
      bool run = true;
      for (int v = j + 1; v <= j + k; ++v) run = run && op.has_overline(v);
      ok = run && !op.has_overline(j) && op.multiplicity(j + k + 1) == 0;
    }
    if (!ok) return false;
  }
  return true;
}

// Literal-definition brute force, computed outside this code base.
const std::vector<long long> kLower1{1, 2, 4, 6, 12, 18, 30, 44, 68, 98, 146, 204, 294, 404, 566, 766, 1052, 1404, 1894};
const std::vector<long long> kLower2{1, 1, 2, 4, 6, 10, 14, 22, 31, 45, 62, 88, 119, 164, 219, 294, 389, 514, 669};
const std::vector<long long> kLower3{1, 1, 2, 3, 5, 7, 12, 16, 24, 34, 47, 64, 90, 119, 160, 213, 281, 366, 479};
// Overpartition numbers, coefficients of (-q;q)_inf / (q;q)_inf.
const std::vector<long long> kOverpartitions{1,   2,   4,   8,    14,   24,   40,   64,   100,  154, 232,
                                             344, 504, 728, 1040, 1472, 2062, 2864, 3948, 5400, 7336};

}  // namespace

TEST_CASE("parse and print") {
  const Overpartition op = Overpartition::parse("3' + 2 + 2'");
  CHECK(op.size() == 7);
  CHECK(op.part_count() == 3);
  CHECK(op.overline_count() == 2);
  CHECK(op.multiplicity(2) == 2);
  CHECK(op.has_overline(2));
  CHECK(op.to_string() == "3' + 2 + 2'");
  CHECK(Overpartition::parse("1 + 2' + 2").to_string() == "2 + 2' + 1");
  CHECK(Overpartition::parse("0").empty());
  CHECK(Overpartition::parse("").empty());
  CHECK(Overpartition().to_string() == "0");
  CHECK_THROWS_AS(Overpartition::parse("2' + 2'"), std::invalid_argument);
  CHECK_THROWS_AS(Overpartition::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Overpartition({{0, 1, false}}), std::invalid_argument);
}

TEST_CASE("predicate examples") {
  CHECK(is_lower_k_run(Overpartition::parse("4' + 3'"), 2));
  CHECK(is_lower_k_run(Overpartition::parse("5 + 3 + 3 + 1"), 4));
  CHECK_FALSE(is_lower_k_run(Overpartition::parse("2' + 1"), 1));
  CHECK(is_lower_k_run(Overpartition::parse("1'"), 1));  // gap at j = 0
  CHECK(is_upper_k_run(Overpartition::parse("3 + 3"), 2));
  CHECK_FALSE(is_upper_k_run(Overpartition::parse("2 + 1'"), 1));
  // Three consecutive overlines is not a run of exactly two.
  CHECK_FALSE(is_lower_k_run(Overpartition::parse("4' + 3' + 2'"), 2));
}

TEST_CASE("predicates agree with the clause-by-clause definition") {
  for (int n = 0; n <= 14; ++n) {
    for (const auto& op : enumerate_overpartitions(n)) {
      for (int k = 1; k <= 4; ++k) {
        CHECK(is_lower_k_run(op, k) == naive_lower(op, k));
        CHECK(is_upper_k_run(op, k) == naive_upper(op, k));
      }
    }
  }
}

TEST_CASE("enumeration visits every overpartition once") {
  CHECK(enumerate_overpartitions(0) == std::vector<Overpartition>{Overpartition()});
  for (int n = 0; n <= 20; ++n) {
    const auto all = enumerate_overpartitions(n);
    CHECK(static_cast<long long>(all.size()) == kOverpartitions[n]);
    const std::set<Overpartition> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    for (const auto& op : all) CHECK(op.size() == n);
  }
  // Largest part descending first.
  const auto four = enumerate_overpartitions(4);
  CHECK(four.front().largest() == 4);
  CHECK(four.back().largest() == 1);
}

TEST_CASE("counts match the literal brute force") {
  for (int n = 0; n <= 18; ++n) {
    CHECK(count_lower(n, 1) == kLower1[n]);
    CHECK(count_lower(n, 2) == kLower2[n]);
    CHECK(count_lower(n, 3) == kLower3[n]);
  }
  CHECK(lower_counts(18, 2) == kLower2);
  CHECK(count_lower(0, 5) == 1);
  CHECK(count_lower(2, 1) == 4);
}

TEST_CASE("the size 7 example") {
  std::vector<std::string> witnesses;
  int plain = 0;
  for (const auto& op : enumerate_overpartitions(7)) {
    if (!is_lower_k_run(op, 2)) continue;
    if (op.overline_count() == 0) {
      ++plain;
    } else {
      witnesses.push_back(op.to_string());
    }
  }
  std::vector<std::string> expected{"4' + 3'",         "4 + 2' + 1'",         "3' + 2 + 2'",
                                    "3 + 2' + 1 + 1'", "2 + 2 + 2' + 1'",     "2 + 2' + 1 + 1 + 1'",
                                    "2' + 1 + 1 + 1 + 1 + 1'"};
  std::sort(witnesses.begin(), witnesses.end());
  std::sort(expected.begin(), expected.end());
  CHECK(witnesses == expected);
  CHECK(plain == 15);
  CHECK(count_lower(7, 2) == 22);
}

TEST_CASE("lower and upper classes have equal size") {
  for (int k = 1; k <= 4; ++k)
    for (int n = 0; n <= 20; ++n) CHECK(count_lower(n, k) == count_upper(n, k));
}

TEST_CASE("part-count refinement sums to the total") {
  for (int k = 1; k <= 2; ++k) {
    for (int n = 0; n <= 16; ++n) {
      long long total = 0;
      for (int l = 0; l <= n; ++l) total += count_lower_by_parts(n, l, k);
      CHECK(total == count_lower(n, k));
    }
  }
  CHECK(count_lower_by_parts(0, 0, 1) == 1);
  CHECK(count_lower_by_parts(5, 0, 1) == 0);
}

TEST_CASE("no-k-sequence counts") {
  CHECK(count_no_k_sequence(3, 2) == 2);
  CHECK(count_no_k_sequence(0, 2) == 1);
  long long p = 0;
  for_each_partition(12, [&](const std::vector<Part>&) { ++p; });
  CHECK(count_no_k_sequence(12, 13) == p);
  // Adjacent distinct values in a sorted partition are the only candidates.
  long long manual = 0;
  for_each_partition(7, [&](const std::vector<Part>& parts) {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) ok = ok && parts[i].value != parts[i + 1].value + 1;
    manual += ok;
  });
  CHECK(count_no_k_sequence(7, 2) == manual);
  CHECK(manual == 8);
}

TEST_CASE("shift bijection") {
  CHECK(lower_to_upper(Overpartition::parse("2' + 1'"), 2) == Overpartition::parse("2' + 1'"));
  const Overpartition plain = Overpartition::parse("5 + 3 + 3");
  CHECK(lower_to_upper(plain, 2) == plain);
  CHECK(lower_to_upper(Overpartition::parse("3 + 2 + 1'"), 1) == Overpartition::parse("3' + 2 + 1"));
  CHECK_THROWS_AS(lower_to_upper(Overpartition::parse("2' + 1"), 1), NotLowerKRun);
  CHECK_THROWS_AS(upper_to_lower(Overpartition::parse("2 + 1'"), 1), NotUpperKRun);

  for (int k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 12; ++n) {
      std::set<Overpartition> image;
      for (const auto& op : enumerate_overpartitions(n)) {
        if (!is_lower_k_run(op, k)) continue;
        const Overpartition up = lower_to_upper(op, k);
        CHECK(is_upper_k_run(up, k));
        CHECK(up.size() == op.size());
        CHECK(up.part_count() == op.part_count());
        CHECK(up.overline_count() == op.overline_count());
        CHECK(upper_to_lower(up, k) == op);
        image.insert(up);
      }
      CHECK(static_cast<long long>(image.size()) == count_upper(n, k));
    }
  }
}

TEST_CASE("conjugation") {
  const Overpartition left = Overpartition::parse("6' + 4' + 1 + 1 + 1'");
  CHECK(conjugate(left) == Overpartition::parse("5' + 2 + 2 + 2' + 1 + 1'"));
  CHECK(conjugate(Overpartition()) == Overpartition());
  CHECK(conjugate(Overpartition::parse("3")) == Overpartition::parse("1 + 1 + 1"));
  CHECK(conjugate(Overpartition::parse("3'")) == Overpartition::parse("1 + 1 + 1'"));

  for (int n = 0; n <= 14; ++n) {
    long long lower = 0, target = 0;
    for (const auto& op : enumerate_overpartitions(n)) {
      const Overpartition c = conjugate(op);
      CHECK(conjugate(c) == op);
      CHECK(c.size() == n);
      CHECK(c.overline_count() == op.overline_count());
      if (is_lower_k_run(op, 1)) {
        ++lower;
        CHECK(is_conjugate_one_run_class(c));
      }
      target += is_conjugate_one_run_class(op);
    }
    CHECK(lower == target);
  }
}

TEST_CASE("monotonicity injections") {
  CHECK(mono_inject_n(Overpartition(), 1) == Overpartition::parse("1"));
  CHECK_THROWS_AS(mono_inject_n(Overpartition::parse("2 + 1'"), 1), NotUpperKRun);
  CHECK_THROWS_AS(mono_inject_k(Overpartition::parse("2' + 1"), 1), NotLowerKRun);
  CHECK(mono_inject_k(Overpartition::parse("2' + 1'"), 1) == Overpartition::parse("2 + 1'"));

  for (int k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 12; ++n) {
      std::set<Overpartition> grow, shrink;
      long long upper = 0, lower_next = 0;
      for (const auto& op : enumerate_overpartitions(n)) {
        if (is_upper_k_run(op, k)) {
          ++upper;
          const Overpartition img = mono_inject_n(op, k);
          CHECK(img.size() == n + 1);
          CHECK(is_upper_k_run(img, k));
          grow.insert(img);
        }
        if (is_lower_k_run(op, k + 1)) {
          ++lower_next;
          const Overpartition img = mono_inject_k(op, k);
          CHECK(img.size() == n);
          CHECK(is_lower_k_run(img, k));
          shrink.insert(img);
        }
      }
      CHECK(static_cast<long long>(grow.size()) == upper);
      CHECK(static_cast<long long>(shrink.size()) == lower_next);
      CHECK(count_lower(n, k) <= count_lower(n + 1, k));
      CHECK(count_lower(n, k) >= count_lower(n, k + 1));
    }
  }
}

TEST_CASE("oracle bound") {
  CHECK_THROWS_AS(count_lower(kEnumerationBound + 1, 1), std::out_of_range);
  CHECK_THROWS(Overpartition::parse("64").present_mask());
}
