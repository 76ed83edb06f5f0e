#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace subed {

using index_t = std::int64_t;

// Immutable byte string behind an access-counting oracle. Every char_at call
// bumps the counter by exactly one; the counter is the query-cost metric for
// everything built on top.
class StringOracle {
 public:
  explicit StringOracle(std::string data) : data_(std::move(data)) {}

  index_t size() const { return static_cast<index_t>(data_.size()); }

  int char_at(index_t i) const {
    assert(i >= 0 && i < size());
    ++reads_;
    return static_cast<unsigned char>(data_[static_cast<std::size_t>(i)]);
  }

  // Clamped substring per the [max(i,0), min(j,n)) convention; counts one
  // read per extracted character.
  std::string read_substring(index_t i, index_t j) const;

  std::int64_t reads() const { return reads_; }

  // Uncounted view for test oracles and ground-truth checks only.
  std::string_view raw() const { return data_; }

 private:
  std::string data_;
  mutable std::int64_t reads_ = 0;
};

// Memoizing layer over a StringOracle: each position is fetched from the
// oracle at most once, so the counter reports distinct positions touched.
// The cache itself is solver scratch and costs nothing.
class CachedOracle {
 public:
  explicit CachedOracle(const StringOracle& src)
      : src_(&src), cache_(static_cast<std::size_t>(src.size()), kUnread) {}

  index_t size() const { return src_->size(); }

  // Returns the byte at i, or -1 when i is out of range.
  int at(index_t i) const {
    if (i < 0 || i >= size()) return -1;
    std::int16_t& slot = cache_[static_cast<std::size_t>(i)];
    if (slot == kUnread) slot = static_cast<std::int16_t>(src_->char_at(i));
    return slot;
  }

  std::int64_t reads() const { return src_->reads(); }

 private:
  static constexpr std::int16_t kUnread = -1;
  const StringOracle* src_;
  mutable std::vector<std::int16_t> cache_;
};

// A half-open window of length len over one of three byte sources. Reads of
// oracle-backed windows are counted; pattern windows (infinite repetitions of
// a scratch string) and raw views are free. at() returns -1 for positions
// that fall outside the underlying data; such positions never match anything.
struct Window {
  const CachedOracle* oracle = nullptr;
  const std::string* pattern = nullptr;
  std::string_view raw{};
  index_t offset = 0;
  index_t length = 0;

  static Window over(const CachedOracle& o, index_t off, index_t len) {
    Window w;
    w.oracle = &o;
    w.offset = off;
    w.length = len;
    return w;
  }

  static Window repeat(const std::string& p, index_t len, index_t off = 0) {
    assert(!p.empty());
    Window w;
    w.pattern = &p;
    w.offset = off;
    w.length = len;
    return w;
  }

  static Window view(std::string_view s) {
    Window w;
    w.raw = s;
    w.length = static_cast<index_t>(s.size());
    return w;
  }

  int at(index_t i) const {
    assert(i >= 0 && i < length);
    const index_t pos = offset + i;
    if (oracle != nullptr) return oracle->at(pos);
    if (pattern != nullptr) {
      const index_t p = static_cast<index_t>(pattern->size());
      const index_t m = ((pos % p) + p) % p;
      return static_cast<unsigned char>((*pattern)[static_cast<std::size_t>(m)]);
    }
    if (pos < 0 || pos >= static_cast<index_t>(raw.size())) return -1;
    return static_cast<unsigned char>(raw[static_cast<std::size_t>(pos)]);
  }

  std::int64_t reads() const { return oracle ? oracle->reads() : 0; }
};

// Characters match only when both are in range and equal.
inline bool chars_match(int a, int b) { return a >= 0 && b >= 0 && a == b; }

struct Period {
  std::string pattern;
  bool primitive = false;
};

// (max(i,0), min(j,n)), collapsed to an empty range when crossed.
std::pair<index_t, index_t> clamped_range(const StringOracle& s, index_t i,
                                          index_t j);

std::int64_t hamming_distance(std::string_view x, std::string_view y);

// Knuth-Morris-Pratt prefix function of a; the smallest period of a[0..m) is
// m - pi[m-1].
std::vector<index_t> prefix_function(const std::vector<int>& a);

// Shortest P with x = P*[0..|x|). With max_len set, returns nullopt when the
// smallest period exceeds the cap. The result is primitive by minimality.
std::optional<Period> smallest_period(
    std::string_view x, std::optional<index_t> max_len = std::nullopt);

bool is_periodic_with(std::string_view x, std::string_view pattern);

// Minimal number of blocks partitioning y such that every block is periodic
// with some period of length <= k. Greedy longest-prefix extension; this is a
// test-time oracle, not a solver component.
index_t block_periodicity(std::string_view y, index_t k);

// All shifts t such that pattern occurs in text at position t (KMP).
std::vector<index_t> pattern_occurrences(std::string_view text,
                                         std::string_view pattern);

}  // namespace subed
