#include "odkit/oracle.hpp"

#include <numeric>
#include <string>

namespace odkit::oracle {

namespace {

void check_range(std::uint64_t n) {
  if (n > kMaxDegree) throw DomainError("oracle supports n <= 40, got " + std::to_string(n));
}

std::uint64_t lcm_of(const Partition& p) {
  std::uint64_t l = 1;
  for (auto part : p.parts) l = std::lcm(l, std::uint64_t{part});
  return l;
}

}  // namespace

CycleType cycle_type(const Partition& partition) {
  const auto moved = partition.sum() - partition.parts.size();
  return CycleType{partition, moved % 2 == 0 ? 1 : -1};
}

std::set<std::uint64_t> element_orders(Family family, std::uint64_t n) {
  check_range(n);
  std::set<std::uint64_t> out;
  for (const auto& p : partitions(static_cast<std::uint32_t>(n))) {
    if (family == Family::Alt && cycle_type(p).sign < 0) continue;
    out.insert(lcm_of(p));
  }
  return out;
}

std::set<std::uint64_t> element_orders_sym(std::uint64_t n) { return element_orders(Family::Sym, n); }
std::set<std::uint64_t> element_orders_alt(std::uint64_t n) { return element_orders(Family::Alt, n); }

PrimeGraph gk_oracle(Family family, std::uint64_t n) {
  check_range(n);
  const auto spectrum = element_orders(family, n);
  // A prime divides the group order iff the group has an element of that order.
  std::vector<std::uint64_t> vertices;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (!is_prime(p)) continue;
    for (auto order : spectrum) {
      if (order % p == 0) {
        vertices.push_back(p);
        break;
      }
    }
  }
  PrimeGraph g(vertices);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      for (auto order : spectrum)
        if (order % (vertices[i] * vertices[j]) == 0) {
          g.add_edge_at(i, j);
          break;
        }
  return g;
}

}  // namespace odkit::oracle
