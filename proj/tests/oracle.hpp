#pragma once

// Independent brute-force enumeration used to freeze expected values in the
// test suites. Everything here is computed directly from first principles
// (recursive multiset enumeration, closed-form binomials) and must stay
// decoupled from the library implementation it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);
  }
  return r;
}

// Number of multisets of size d over g distinct items: C(d + g - 1, g - 1).
inline std::uint64_t multiset_count(std::uint64_t g, std::uint64_t d) {
  if (g == 0) return d == 0 ? 1 : 0;
  return binomial(d + g - 1, g - 1);
}

namespace detail {
template <typename T>
void multisets_rec(const std::vector<T>& items, std::size_t d, std::size_t from,
                   std::vector<T>& cur, std::vector<std::vector<T>>& out) {
  if (d == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < items.size(); ++i) {
    cur.push_back(items[i]);
    multisets_rec(items, d - 1, i, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

// All multisets of size exactly d over the given items, each returned as a
// non-decreasing index sequence into items, in lexicographic order.
template <typename T>
std::vector<std::vector<T>> multisets_of_degree(const std::vector<T>& items,
                                                std::size_t d) {
  std::vector<std::vector<T>> out;
  std::vector<T> cur;
  detail::multisets_rec(items, d, 0, cur, out);
  return out;
}

// Fiber structure of the componentwise projection of pair multisets: for each
// degree-d multiset over the given (left, right) pairs, project to the sorted
// left multiset and the sorted right multiset, and count how many source
// multisets land on each image pair.
using PairItem = std::pair<std::string, std::string>;
using ProjImage = std::pair<std::vector<std::string>, std::vector<std::string>>;

inline std::map<ProjImage, std::uint64_t> projection_fibers(
    const std::vector<PairItem>& pairs, std::size_t d) {
  std::map<ProjImage, std::uint64_t> fibers;
  for (const auto& ms : multisets_of_degree(pairs, d)) {
    std::vector<std::string> left, right;
    for (const auto& [l, r] : ms) {
      left.push_back(l);
      right.push_back(r);
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    ++fibers[{left, right}];
  }
  return fibers;
}

}  // namespace oracle
