#pragma once

// Search for primes p = 5^alpha - 6 with p+2, p+4 composite, and
// verification that A_{p+6}, S_{p+6} share order and degree pattern with
// A_{p+5} x H, S_{p+5} x H and A_{p+5} x T (|H| = 5^alpha, |T| = 2 * 5^alpha).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "odkit/descriptors.hpp"
#include "odkit/primegraph.hpp"

namespace odkit {

inline constexpr std::uint32_t kMaxAlpha = 27;

/// The hypothesis fails for this alpha.
class NonQualifyingError : public std::runtime_error {
 public:
  NonQualifyingError(std::uint32_t alpha, const std::string& reason);
  std::uint32_t alpha() const { return alpha_; }

 private:
  std::uint32_t alpha_;
};

struct CandidateWitness {
  std::uint32_t alpha = 0;
  std::int64_t p = 0;  // 5^alpha - 6; negative for alpha = 1
  bool p_prime = false;
  bool p2_composite = false;
  bool p4_composite = false;
  bool qualifies = false;
  /// Empty when qualifying; otherwise the first failed condition.
  std::string reason;
};

/// alpha in [1, 27]; throws DomainError otherwise.
CandidateWitness check_candidate(std::uint32_t alpha);
std::vector<CandidateWitness> search_candidates(std::uint32_t max_alpha);

/// One OD comparison between two expressions.
struct Comparison {
  std::string lhs, rhs;
  GraphSummary lhs_summary, rhs_summary;
  bool order_equal = false;
  bool pattern_equal = false;
  std::optional<PatternDifference> first_difference;
};

struct PartResult {
  bool order_equal = false;
  bool pattern_equal = false;
  std::vector<Comparison> evidence;
};

enum class IdentityCertificate { EdgeSets, DegreePatterns };
const char* certificate_name(IdentityCertificate c);

struct GraphIdentity {
  bool equal = false;
  IdentityCertificate certificate = IdentityCertificate::EdgeSets;
  std::optional<PatternDifference> first_difference;
};

/// GK(A_{n+1}) == GK(A_n)? Compares edge sets when n + 1 <= kMaterializeLimit.
/// Above that, compares vertex sets and degree patterns: the edges of
/// GK(A_n) are a subset of those of GK(A_{n+1}), so equal vertices plus equal
/// degree sums already force equal edge sets.
GraphIdentity compare_consecutive_alt(std::uint64_t n, const SievedRange& sieved);

struct VerificationReport {
  std::uint32_t alpha = 0;
  std::uint64_t p = 0;
  PartResult part1;  // A_{p+6} vs A_{p+5} x H
  PartResult part2;  // S_{p+6} vs S_{p+5} x H
  PartResult part3;  // S_{p+6} vs A_{p+5} x T, both GK(T) variants
  GraphIdentity graph_identity;
  /// partitions(alpha) + 1 when passed: abelian groups of order 5^alpha
  /// only, so this never counts the full number of groups of that order.
  std::uint64_t od_class_size_lower_bound = 0;

  bool passed() const;
};

/// Throws NonQualifyingError unless check_candidate(alpha).qualifies and
/// ResourceError if sieved does not reach 5^alpha.
VerificationReport verify_main_theorem(std::uint32_t alpha, const SievedRange& sieved);

/// The same checks without the hypothesis gate (p = 5^alpha - 6 must still
/// be positive). Shows which comparisons break when p+2 or p+4 is prime.
VerificationReport evaluate_main_theorem(std::uint32_t alpha, const SievedRange& sieved);

/// [family(p+6)] followed by family(p+5) x Ab(5, lambda) for every partition
/// lambda of alpha, in partition order.
std::vector<GroupExpr> od_class(std::uint32_t alpha, Family family);

std::uint64_t pow5(std::uint32_t alpha);

}  // namespace odkit
