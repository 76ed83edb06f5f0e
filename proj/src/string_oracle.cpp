#include "subed/string_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace subed {

std::string StringOracle::read_substring(index_t i, index_t j) const {
  const auto [lo, hi] = clamped_range(*this, i, j);
  std::string out;
  out.reserve(static_cast<std::size_t>(hi - lo));
  for (index_t p = lo; p < hi; ++p) {
    out.push_back(static_cast<char>(char_at(p)));
  }
  return out;
}

std::pair<index_t, index_t> clamped_range(const StringOracle& s, index_t i,
                                          index_t j) {
  index_t lo = std::max<index_t>(i, 0);
  index_t hi = std::min<index_t>(j, s.size());
  if (hi < lo) hi = lo;
  return {lo, hi};
}

std::int64_t hamming_distance(std::string_view x, std::string_view y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("hamming_distance: length mismatch");
  }
  std::int64_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) ++d;
  }
  return d;
}

std::vector<index_t> prefix_function(const std::vector<int>& a) {
  const index_t m = static_cast<index_t>(a.size());
  std::vector<index_t> pi(static_cast<std::size_t>(m), 0);
  for (index_t i = 1; i < m; ++i) {
    index_t k = pi[static_cast<std::size_t>(i - 1)];
    while (k > 0 && a[static_cast<std::size_t>(i)] != a[static_cast<std::size_t>(k)]) {
      k = pi[static_cast<std::size_t>(k - 1)];
    }
    if (a[static_cast<std::size_t>(i)] == a[static_cast<std::size_t>(k)]) ++k;
    pi[static_cast<std::size_t>(i)] = k;
  }
  return pi;
}

std::optional<Period> smallest_period(std::string_view x,
                                      std::optional<index_t> max_len) {
  if (x.empty()) return std::nullopt;
  std::vector<int> a(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) a[i] = static_cast<unsigned char>(x[i]);
  const auto pi = prefix_function(a);
  const index_t p = static_cast<index_t>(x.size()) - pi.back();
  if (max_len && p > *max_len) return std::nullopt;
  return Period{std::string(x.substr(0, static_cast<std::size_t>(p))), true};
}

bool is_periodic_with(std::string_view x, std::string_view pattern) {
  if (pattern.empty()) return x.empty();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != pattern[i % pattern.size()]) return false;
  }
  return true;
}

index_t block_periodicity(std::string_view y, index_t k) {
  if (y.empty()) return 0;
  if (k < 1) throw std::invalid_argument("block_periodicity: k must be >= 1");
  index_t blocks = 0;
  std::size_t start = 0;
  while (start < y.size()) {
    // Longest prefix of y[start..) whose smallest period is <= k. Valid
    // lengths form a contiguous range, so stop at the first violation.
    std::vector<index_t> pi;
    pi.reserve(y.size() - start);
    pi.push_back(0);
    std::size_t len = 1;
    while (start + len < y.size()) {
      const char c = y[start + len];
      index_t q = pi[len - 1];
      while (q > 0 && c != y[start + static_cast<std::size_t>(q)]) {
        q = pi[static_cast<std::size_t>(q - 1)];
      }
      if (c == y[start + static_cast<std::size_t>(q)]) ++q;
      const index_t period = static_cast<index_t>(len + 1) - q;
      if (period > k) break;
      pi.push_back(q);
      ++len;
    }
    start += len;
    ++blocks;
  }
  return blocks;
}

std::vector<index_t> pattern_occurrences(std::string_view text,
                                         std::string_view pattern) {
  std::vector<index_t> hits;
  if (pattern.empty() || pattern.size() > text.size()) return hits;
  std::vector<int> a;
  a.reserve(pattern.size() + 1 + text.size());
  for (char c : pattern) a.push_back(static_cast<unsigned char>(c));
  a.push_back(-1);  // separator below any byte
  for (char c : text) a.push_back(static_cast<unsigned char>(c));
  const auto pi = prefix_function(a);
  const index_t m = static_cast<index_t>(pattern.size());
  for (std::size_t i = pattern.size() + 1; i < a.size(); ++i) {
    if (pi[i] == m) {
      hits.push_back(static_cast<index_t>(i) - 2 * m);
    }
  }
  return hits;
}

}  // namespace subed
