#include "odkit/numtheory.hpp"

#include <array>
#include <sstream>

namespace odkit {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Strong probable-prime test to base a; n odd, n > a.
bool strong_probable_prime(u64 n, u64 a) {
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(u64 n) {
  // The first twelve primes as witnesses are sufficient below 3.3e24.
  static constexpr std::array<u64, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (u64 p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (u64 a : kWitnesses) {
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

u64 legendre_exponent(u64 q, u64 n) {
  if (!is_prime(q)) throw DomainError("legendre_exponent: " + std::to_string(q) + " is not prime");
  u64 total = 0;
  while (n >= q) {
    n /= q;
    total += n;
  }
  return total;
}

// ---------------------------------------------------------------------------
// FactoredInteger

FactoredInteger::FactoredInteger(const Map& factors) {
  for (const auto& [p, e] : factors) {
    if (!is_prime(p)) throw DomainError("factored integer key " + std::to_string(p) + " is not prime");
    if (e != 0) factors_.emplace(p, e);
  }
}

FactoredInteger FactoredInteger::of(u64 n) {
  if (n == 0) throw DomainError("cannot factor 0");
  Map m;
  for (u64 d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++m[d];
      n /= d;
    }
  }
  if (n > 1) ++m[n];
  FactoredInteger out;
  out.factors_ = std::move(m);
  return out;
}

u64 FactoredInteger::exponent(u64 p) const {
  auto it = factors_.find(p);
  return it == factors_.end() ? 0 : it->second;
}

std::vector<u64> FactoredInteger::primes() const {
  std::vector<u64> out;
  out.reserve(factors_.size());
  for (const auto& [p, e] : factors_) out.push_back(p);
  return out;
}

std::string FactoredInteger::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factors_) {
    if (!first) os << " * ";
    first = false;
    os << p;
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

FactoredInteger fi_multiply(const FactoredInteger& a, const FactoredInteger& b) {
  FactoredInteger out = a;
  for (const auto& [p, e] : b.factors_) out.factors_[p] += e;
  return out;
}

FactoredInteger factor_factorial(u64 n) {
  if (n < 2) return {};
  return factor_factorial(n, SievedRange(n));
}

FactoredInteger factor_factorial(u64 n, const SievedRange& sieved) {
  if (n < 2) return {};
  FactoredInteger::Map m;
  for (u64 q : sieved.primes_up_to(n)) {
    u64 e = 0;
    for (u64 k = n; k >= q;) {
      k /= q;
      e += k;
    }
    m.emplace_hint(m.end(), q, e);
  }
  FactoredInteger out;
  out.factors_ = std::move(m);
  return out;
}

// ---------------------------------------------------------------------------
// SievedRange

SievedRange::SievedRange(u64 limit) : limit_(limit) {
  if (limit < 2) throw DomainError("sieve limit must be at least 2");
  if (limit > 0xFFFFFFFFull) throw ResourceError("sieve limit exceeds 32-bit prime counts");
  table_.assign(limit + 1, 1);
  table_[0] = table_[1] = 0;
  for (u64 i = 2; i * i <= limit; ++i) {
    if (!table_[i]) continue;
    for (u64 j = i * i; j <= limit; j += i) table_[j] = 0;
  }
  prefix_.resize(limit + 1);
  std::uint32_t count = 0;
  for (u64 i = 0; i <= limit; ++i) {
    count += table_[i];
    prefix_[i] = count;
  }
}

bool SievedRange::is_prime(u64 x) const {
  require(x);
  return table_[x] != 0;
}

u64 SievedRange::prime_count(u64 x) const {
  require(x);
  return prefix_[x];
}

std::vector<u64> SievedRange::primes_up_to(u64 x) const {
  require(x);
  std::vector<u64> out;
  out.reserve(prefix_[x]);
  for (u64 i = 2; i <= x; ++i)
    if (table_[i]) out.push_back(i);
  return out;
}

void SievedRange::require(u64 n) const {
  if (n > limit_)
    throw ResourceError("sieve limit " + std::to_string(limit_) + " does not cover " + std::to_string(n));
}

// ---------------------------------------------------------------------------
// Partitions

u64 Partition::sum() const {
  u64 s = 0;
  for (auto part : parts) s += part;
  return s;
}

namespace {

void emit_partitions(std::uint32_t remaining, std::uint32_t max_part, std::vector<std::uint32_t>& prefix,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{prefix});
    return;
  }
  for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    emit_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(std::uint32_t m, std::uint32_t bound) {
  if (m > bound)
    throw DomainError("partitions: m = " + std::to_string(m) + " exceeds bound " + std::to_string(bound));
  std::vector<Partition> out;
  out.reserve(partition_count(m));
  std::vector<std::uint32_t> prefix;
  emit_partitions(m, m, prefix, out);
  return out;
}

u64 partition_count(std::uint32_t m) {
  // Coin-change style DP over part sizes.
  std::vector<u64> ways(m + 1, 0);
  ways[0] = 1;
  for (std::uint32_t part = 1; part <= m; ++part)
    for (std::uint32_t total = part; total <= m; ++total) ways[total] += ways[total - part];
  return ways[m];
}

}  // namespace odkit
