#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "distrig/errors.hpp"
#include "distrig/geometry.hpp"
#include "distrig/rational.hpp"

namespace distrig {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000ULL;

struct EnumerationOptions {
  unsigned threads = 1;
  std::uint64_t budget = kDefaultBudget;
};

// n^{k+1}, saturating at UINT64_MAX.
inline std::uint64_t tuple_count(std::uint64_t n, std::size_t length) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (n != 0 && total > UINT64_MAX / n) return UINT64_MAX;
    total *= n;
  }
  return total;
}

inline void check_budget(std::uint64_t n, std::size_t length, std::uint64_t budget) {
  const std::uint64_t need = tuple_count(n, length);
  if (need > budget)
    throw BudgetError("enumeration needs " + std::to_string(n) + "^" + std::to_string(length) + " = " +
                          (need == UINT64_MAX ? std::string(">2^64") : std::to_string(need)) +
                          " tuples, budget is " + std::to_string(budget),
                      need, budget);
}

// Every pairwise squared distance of E, interned as an id. Ids are assigned in
// increasing order of value, so id 0 is the zero distance and comparing id
// vectors lexicographically compares the exact values lexicographically.
class DistanceTable {
public:
  explicit DistanceTable(const PointSet& e) : n_(e.size()), ids_(n_ * n_, 0) {
    std::vector<Rational> all;
    all.reserve(n_ * (n_ - 1) / 2 + 1);
    all.emplace_back(0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) all.push_back(squared_distance(e[i], e[j]));
    std::vector<Rational> sorted = all;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    values_ = std::move(sorted);
    std::size_t p = 1;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j, ++p) {
        const auto id = static_cast<std::uint32_t>(std::lower_bound(values_.begin(), values_.end(), all[p]) - values_.begin());
        ids_[i * n_ + j] = ids_[j * n_ + i] = id;
      }
  }

  std::size_t size() const noexcept { return n_; }
  std::uint32_t id(std::size_t i, std::size_t j) const noexcept { return ids_[i * n_ + j]; }
  const std::uint32_t* row(std::size_t i) const noexcept { return ids_.data() + i * n_; }
  // Number of distinct values, the zero distance included.
  std::size_t distinct() const noexcept { return values_.size(); }
  const Rational& value(std::uint32_t id) const { return values_[id]; }
  const std::vector<Rational>& values() const noexcept { return values_; }

private:
  std::size_t n_;
  std::vector<std::uint32_t> ids_;
  std::vector<Rational> values_;
};

// Packs a fixed number of small ids into one 64-bit word when they fit.
struct KeyLayout {
  std::size_t components = 0;
  unsigned bits = 1;

  KeyLayout(std::size_t comps, std::size_t alphabet) : components(comps) {
    bits = std::max(1u, static_cast<unsigned>(std::bit_width(alphabet > 1 ? alphabet - 1 : 1)));
  }
  bool packable() const noexcept { return components * bits <= 64; }

  std::vector<std::uint32_t> unpack(std::uint64_t key) const {
    std::vector<std::uint32_t> out(components);
    const std::uint64_t mask = bits == 64 ? ~0ULL : (1ULL << bits) - 1;
    for (std::size_t c = 0; c < components; ++c) out[c] = static_cast<std::uint32_t>(key >> (bits * c) & mask);
    return out;
  }
};

struct PackedKeyBuilder {
  unsigned bits;
  std::uint64_t key = 0;
  std::size_t pos = 0;
  void reset() { key = 0, pos = 0; }
  void push(std::uint32_t v) { key |= static_cast<std::uint64_t>(v) << (bits * pos++); }
  std::uint64_t get() const { return key; }
  static std::vector<std::uint32_t> decode(const KeyLayout& layout, std::uint64_t k) { return layout.unpack(k); }
};

struct WideKeyHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto x : v) h = (h ^ x) * 0x100000001b3ULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

struct WideKeyBuilder {
  std::vector<std::uint32_t> key;
  void reset() { key.clear(); }
  void push(std::uint32_t v) { key.push_back(v); }
  const std::vector<std::uint32_t>& get() const { return key; }
  static std::vector<std::uint32_t> decode(const KeyLayout&, const std::vector<std::uint32_t>& k) { return k; }
};

// Multiplicity of each exact key, sorted by key. Independent of thread count:
// work is split by the tuple's leading index and partial maps are merged by
// addition before sorting.
template <typename Key, typename Hash, typename Body>
std::vector<std::pair<Key, std::uint64_t>> partitioned_count(std::size_t leading, unsigned threads, Body body) {
  using Map = std::unordered_map<Key, std::uint64_t, Hash>;
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(leading, 1))));
  std::vector<Map> partial(workers);
  std::atomic<std::size_t> next{0};
  auto run = [&](unsigned w) {
    for (std::size_t i; (i = next.fetch_add(1)) < leading;) body(i, partial[w]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  Map merged = std::move(partial[0]);
  for (unsigned w = 1; w < workers; ++w)
    for (auto& [k, c] : partial[w]) merged[k] += c;
  std::vector<std::pair<Key, std::uint64_t>> out(merged.begin(), merged.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// Key multiplicities decoded to id vectors.
struct KeyCounts {
  std::vector<std::pair<std::vector<std::uint32_t>, std::uint64_t>> entries;
};

// Dispatches to packed or wide keys. `fill(builder, i0, map)` enumerates every
// tuple with leading index i0, pushing components into the builder and
// incrementing map[builder.get()].
template <typename Fill>
KeyCounts count_keys(const KeyLayout& layout, std::size_t leading, unsigned threads, Fill fill) {
  KeyCounts out;
  if (layout.packable()) {
    auto counts = partitioned_count<std::uint64_t, std::hash<std::uint64_t>>(
        leading, threads, [&](std::size_t i0, auto& map) {
          PackedKeyBuilder b{layout.bits};
          fill(b, i0, map);
        });
    out.entries.reserve(counts.size());
    for (auto& [k, c] : counts) out.entries.emplace_back(layout.unpack(k), c);
    // Packed order is little-endian in components; restore lexicographic order.
    std::sort(out.entries.begin(), out.entries.end());
  } else {
    auto counts = partitioned_count<std::vector<std::uint32_t>, WideKeyHash>(
        leading, threads, [&](std::size_t i0, auto& map) {
          WideKeyBuilder b;
          fill(b, i0, map);
        });
    out.entries = std::move(counts);
  }
  return out;
}

// Odometer over all index tuples of the given length with a fixed leading index.
template <typename Visit>
void for_each_tuple(std::size_t n, std::size_t length, std::size_t leading, Visit visit) {
  std::vector<std::size_t> idx(length, 0);
  idx[0] = leading;
  if (length == 1) {
    visit(idx);
    return;
  }
  while (true) {
    visit(idx);
    std::size_t p = length - 1;
    while (p > 0 && ++idx[p] == n) idx[p--] = 0;
    if (p == 0) return;
  }
}

// Exact sign of det[x_{1}-x_{0}, ..., x_{d}-x_{0}] for points of E. Integer
// coordinates of small magnitude (after clearing a common denominator) use
// 128-bit arithmetic for d <= 3; everything else falls back to rationals.
class OrientationOracle {
public:
  explicit OrientationOracle(const PointSet& e) : e_(e), d_(e.dim()) {
    Integer common = 1;
    for (const auto& p : e.points())
      for (const auto& c : p.coords()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
    fast_ = d_ <= 3;
    for (const auto& p : e.points()) {
      for (const auto& c : p.coords()) {
        Integer v = c.get_num() * common;
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_den_mpz_t());
        if (!v.fits_slong_p() || abs(v) >= (1L << 20)) fast_ = false;
        scaled_.push_back(fast_ ? v.get_si() : 0);
      }
    }
  }

  // `idx` holds at least d+1 point indices; only the first d+1 are used.
  int sign(const std::size_t* idx) const {
    if (!fast_) {
      std::vector<Point> pts;
      for (std::size_t i = 0; i <= d_; ++i) pts.push_back(e_[idx[i]]);
      return sgn(determinant(frame_matrix(pts, d_)));
    }
    auto col = [&](std::size_t j, std::size_t r) -> __int128 {
      return scaled_[idx[j + 1] * d_ + r] - scaled_[idx[0] * d_ + r];
    };
    __int128 det = 0;
    if (d_ == 1) {
      det = col(0, 0);
    } else if (d_ == 2) {
      det = col(0, 0) * col(1, 1) - col(1, 0) * col(0, 1);
    } else {
      det = col(0, 0) * (col(1, 1) * col(2, 2) - col(2, 1) * col(1, 2)) -
            col(1, 0) * (col(0, 1) * col(2, 2) - col(2, 1) * col(0, 2)) +
            col(2, 0) * (col(0, 1) * col(1, 2) - col(1, 1) * col(0, 2));
    }
    return det > 0 ? 1 : det < 0 ? -1 : 0;
  }

private:
  const PointSet& e_;
  std::size_t d_;
  bool fast_ = false;
  std::vector<long> scaled_;
};

}  // namespace distrig
