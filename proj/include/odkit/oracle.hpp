#pragma once

// Brute-force ground truth for small n. Element orders of S_n and A_n come
// from cycle types, so nothing here relies on the adjacency criterion.

#include <cstdint>
#include <set>

#include "odkit/numtheory.hpp"
#include "odkit/primegraph.hpp"

namespace odkit::oracle {

inline constexpr std::uint64_t kMaxDegree = 40;

struct CycleType {
  Partition partition;
  int sign = 1;  // (-1)^(n - number of parts)
};

CycleType cycle_type(const Partition& partition);

/// Spectrum of S_n: lcm of every partition of n.
std::set<std::uint64_t> element_orders_sym(std::uint64_t n);
/// Spectrum of A_n: lcm of every even cycle type.
std::set<std::uint64_t> element_orders_alt(std::uint64_t n);
std::set<std::uint64_t> element_orders(Family family, std::uint64_t n);

/// GK graph read off the spectrum: p ~ q iff pq divides some element order.
PrimeGraph gk_oracle(Family family, std::uint64_t n);

}  // namespace odkit::oracle
