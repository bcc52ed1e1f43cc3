#pragma once

// Arithmetic substrate: primality, sieving, factorial factorizations,
// factored-integer products and integer partitions.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace odkit {

/// Raised when an argument falls outside an operation's supported domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a request exceeds a configured resource limit (sieve size,
/// partition bound, materialization threshold).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic primality test, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Exponent of the prime q in n!.
std::uint64_t legendre_exponent(std::uint64_t q, std::uint64_t n);

/// A positive integer held as a prime -> exponent map. Orders of groups are
/// kept in this form and never multiplied out.
class SievedRange;

class FactoredInteger {
 public:
  using Map = std::map<std::uint64_t, std::uint64_t>;

  FactoredInteger() = default;
  /// Validates keys (prime) and drops zero exponents.
  explicit FactoredInteger(const Map& factors);
  FactoredInteger(std::initializer_list<Map::value_type> factors) : FactoredInteger(Map(factors)) {}

  /// Factorization by trial division; intended for small literals only.
  static FactoredInteger of(std::uint64_t n);

  const Map& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint64_t exponent(std::uint64_t p) const;
  std::vector<std::uint64_t> primes() const;

  /// "2^2 * 3 * 5"; the empty product renders as "1".
  std::string to_string() const;

  friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

 private:
  friend FactoredInteger fi_multiply(const FactoredInteger&, const FactoredInteger&);
  friend FactoredInteger factor_factorial(std::uint64_t, const SievedRange&);

  Map factors_;
};

FactoredInteger fi_multiply(const FactoredInteger& a, const FactoredInteger& b);

/// n! in factored form; 0! and 1! are the empty map.
FactoredInteger factor_factorial(std::uint64_t n);
/// Same, reusing an existing sieve (which must cover n).
FactoredInteger factor_factorial(std::uint64_t n, const SievedRange& sieved);

/// Byte-table Eratosthenes sieve with a prefix prime count for every x <= limit.
class SievedRange {
 public:
  explicit SievedRange(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  bool is_prime(std::uint64_t x) const;
  /// Number of primes <= x. Throws ResourceError if x > limit().
  std::uint64_t prime_count(std::uint64_t x) const;
  /// Ascending primes <= x.
  std::vector<std::uint64_t> primes_up_to(std::uint64_t x) const;
  /// Throws ResourceError unless limit() >= n.
  void require(std::uint64_t n) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint8_t> table_;
  std::vector<std::uint32_t> prefix_;
};

/// Nonincreasing list of positive parts.
struct Partition {
  std::vector<std::uint32_t> parts;

  std::uint64_t sum() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

inline constexpr std::uint32_t kDefaultPartitionBound = 64;

/// Every partition of m once, lexicographically decreasing ([m] first,
/// [1,...,1] last). Throws DomainError if m > bound.
std::vector<Partition> partitions(std::uint32_t m,
                                  std::uint32_t bound = kDefaultPartitionBound);

/// Number of partitions of m without enumerating them.
std::uint64_t partition_count(std::uint32_t m);

}  // namespace odkit
