#pragma once

// Exact grouping of all pairwise squared distances of a finite point set in
// Q(sqrt5)^n.
//
// Coordinates are first rescaled by the lcm of all their denominators. When
// the resulting integer pairs are small enough, distances are accumulated in
// int64 and only the distinct values are promoted back to QuadExt; otherwise
// everything runs in QuadExt. Both paths return the same groups.

#include "polychord/exactnum.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

namespace polychord {

using Point = std::vector<QuadExt>;

/// All pairs at one squared distance (not normalized by the circumradius).
struct DistanceGroup {
  QuadExt squared;
  BigInt pairs;            // unordered pairs at this distance
  long from_first = 0;     // of those, pairs containing point 0
};

namespace detail {

struct PairKey {
  std::int64_t a;
  std::int64_t b;
  bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const {
    return std::hash<std::int64_t>()(k.a) * 0x9e3779b97f4a7c15ull ^ std::hash<std::int64_t>()(k.b);
  }
};

// |coordinate| bound for the int64 path: 64 dims * (2*2^20)^2 * 6 < 2^63.
inline constexpr std::int64_t kFastCoordinateBound = std::int64_t{1} << 20;

template <class Row>
void for_rows(std::size_t count, unsigned threads, Row&& row) {
  threads = std::max(1u, threads);
  if (threads == 1 || count < 64) {
    for (std::size_t i = 0; i < count; ++i) row(0u, i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) row(t, i);
    });
  for (auto& th : pool) th.join();
}

inline std::vector<DistanceGroup> sort_groups(std::vector<DistanceGroup> groups) {
  std::sort(groups.begin(), groups.end(),
            [](const DistanceGroup& x, const DistanceGroup& y) { return x.squared < y.squared; });
  return groups;
}

inline bool try_integer_path(const std::vector<Point>& pts, unsigned threads,
                             std::vector<DistanceGroup>& out) {
  BigInt den = 1;
  for (const auto& p : pts)
    for (const auto& c : p) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational_part().get_den_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.root5_part().get_den_mpz_t());
    }
  const std::size_t dim = pts.empty() ? 0 : pts.front().size();
  if (dim > 64) return false;
  std::vector<std::int64_t> ia(pts.size() * dim), ib(pts.size() * dim);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t d = 0; d < dim; ++d) {
      const BigRational sa = pts[i][d].rational_part() * den;
      const BigRational sb = pts[i][d].root5_part() * den;
      const BigInt za = sa.get_num(), zb = sb.get_num();
      if (abs(za) >= kFastCoordinateBound || abs(zb) >= kFastCoordinateBound) return false;
      ia[i * dim + d] = za.get_si();
      ib[i * dim + d] = zb.get_si();
    }

  using Counter = std::unordered_map<PairKey, std::uint64_t, PairKeyHash>;
  const unsigned nthreads = std::max(1u, threads);
  std::vector<Counter> partial(nthreads);
  Counter first;
  for_rows(pts.size(), nthreads, [&](unsigned t, std::size_t i) {
    Counter& local = partial[t];
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      std::int64_t sa = 0, sb = 0;
      for (std::size_t d = 0; d < dim; ++d) {
        const std::int64_t da = ia[i * dim + d] - ia[j * dim + d];
        const std::int64_t db = ib[i * dim + d] - ib[j * dim + d];
        sa += da * da + 5 * db * db;
        sb += 2 * da * db;
      }
      ++local[PairKey{sa, sb}];
      if (i == 0) ++first[PairKey{sa, sb}];
    }
  });

  std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t> merged;
  for (const auto& c : partial)
    for (const auto& [k, v] : c) merged[{k.a, k.b}] += v;

  const BigRational scale = BigRational(1) / BigRational(den * den);
  out.clear();
  for (const auto& [k, v] : merged) {
    DistanceGroup g;
    g.squared = QuadExt(BigRational(BigInt(static_cast<long>(k.first))) * scale,
                        BigRational(BigInt(static_cast<long>(k.second))) * scale);
    g.pairs = BigInt(static_cast<unsigned long>(v));
    if (auto it = first.find(PairKey{k.first, k.second}); it != first.end())
      g.from_first = static_cast<long>(it->second);
    out.push_back(std::move(g));
  }
  return true;
}

inline std::vector<DistanceGroup> generic_path(const std::vector<Point>& pts) {
  std::unordered_map<QuadExt, std::pair<BigInt, long>, QuadExtHash> acc;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      QuadExt s;
      for (std::size_t d = 0; d < pts[i].size(); ++d) {
        const QuadExt diff = pts[i][d] - pts[j][d];
        s += diff * diff;
      }
      auto& slot = acc[s];
      slot.first += 1;
      if (i == 0) ++slot.second;
    }
  std::vector<DistanceGroup> out;
  for (auto& [k, v] : acc) out.push_back({k, v.first, v.second});
  return out;
}

}  // namespace detail

/// Groups the V(V-1)/2 pairwise squared distances by exact value, ascending.
/// The result does not depend on `threads`.
inline std::vector<DistanceGroup> group_pairwise_distances(const std::vector<Point>& points,
                                                           unsigned threads = 1,
                                                           bool allow_fast_path = true) {
  std::vector<DistanceGroup> groups;
  if (!allow_fast_path || !detail::try_integer_path(points, threads, groups))
    groups = detail::generic_path(points);
  return detail::sort_groups(std::move(groups));
}

}  // namespace polychord
