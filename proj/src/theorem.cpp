#include "odkit/theorem.hpp"

namespace odkit {

namespace {

using u64 = std::uint64_t;

void check_alpha(std::uint32_t alpha) {
  if (alpha < 1 || alpha > kMaxAlpha)
    throw DomainError("alpha must lie in [1, 27] so that 5^alpha fits in 64 bits, got " + std::to_string(alpha));
}

CandidateWitness require_qualifying(std::uint32_t alpha) {
  CandidateWitness w = check_candidate(alpha);
  if (!w.qualifies) throw NonQualifyingError(alpha, w.reason);
  return w;
}

Comparison compare(const GroupExpr& lhs, const GroupExpr& rhs, const SievedRange& sieved) {
  const ODPair a = od_pair(lhs, sieved);
  const ODPair b = od_pair(rhs, sieved);
  Comparison c;
  c.lhs = to_string(lhs);
  c.rhs = to_string(rhs);
  c.lhs_summary = summarize(a.pattern);
  c.rhs_summary = summarize(b.pattern);
  c.order_equal = a.order == b.order;
  c.pattern_equal = a.pattern == b.pattern;
  c.first_difference = first_difference(a.pattern, b.pattern);
  return c;
}

PartResult part_of(std::vector<Comparison> evidence) {
  PartResult r;
  r.order_equal = r.pattern_equal = true;
  for (const auto& c : evidence) {
    r.order_equal = r.order_equal && c.order_equal;
    r.pattern_equal = r.pattern_equal && c.pattern_equal;
  }
  r.evidence = std::move(evidence);
  return r;
}

}  // namespace

NonQualifyingError::NonQualifyingError(std::uint32_t alpha, const std::string& reason)
    : std::runtime_error("alpha = " + std::to_string(alpha) + " does not qualify: " + reason), alpha_(alpha) {}

u64 pow5(std::uint32_t alpha) {
  check_alpha(alpha);
  u64 v = 1;
  for (std::uint32_t i = 0; i < alpha; ++i) v *= 5;
  return v;
}

CandidateWitness check_candidate(std::uint32_t alpha) {
  CandidateWitness w;
  w.alpha = alpha;
  const u64 q = pow5(alpha);
  w.p = static_cast<std::int64_t>(q) - 6;
  if (w.p <= 0) {
    w.reason = "p = " + std::to_string(w.p) + " is not a positive odd prime";
    return w;
  }
  const u64 p = static_cast<u64>(w.p);
  w.p_prime = is_prime(p);
  w.p2_composite = !is_prime(p + 2);
  w.p4_composite = !is_prime(p + 4);
  w.qualifies = w.p_prime && w.p2_composite && w.p4_composite && p % 2 == 1;
  if (!w.p_prime)
    w.reason = "p = " + std::to_string(p) + " is not prime";
  else if (p % 2 == 0)
    w.reason = "p = " + std::to_string(p) + " is even";
  else if (!w.p2_composite)
    w.reason = "p+2 = " + std::to_string(p + 2) + " is prime";
  else if (!w.p4_composite)
    w.reason = "p+4 = " + std::to_string(p + 4) + " is prime";
  return w;
}

std::vector<CandidateWitness> search_candidates(std::uint32_t max_alpha) {
  check_alpha(max_alpha);
  std::vector<CandidateWitness> out;
  for (std::uint32_t a = 1; a <= max_alpha; ++a) out.push_back(check_candidate(a));
  return out;
}

const char* certificate_name(IdentityCertificate c) {
  return c == IdentityCertificate::EdgeSets ? "edge_sets" : "degree_patterns";
}

GraphIdentity compare_consecutive_alt(u64 n, const SievedRange& sieved) {
  sieved.require(n + 1);
  GraphIdentity r;
  if (n + 1 <= kMaterializeLimit) {
    const PrimeGraph small = gk_alt(n, sieved);
    const PrimeGraph large = gk_alt(n + 1, sieved);
    r.certificate = IdentityCertificate::EdgeSets;
    r.equal = graphs_equal(small, large);
    r.first_difference = first_difference(degree_pattern(small), degree_pattern(large));
    return r;
  }
  const DegreePattern small = fast_degree_pattern_alt(n, sieved);
  const DegreePattern large = fast_degree_pattern_alt(n + 1, sieved);
  r.certificate = IdentityCertificate::DegreePatterns;
  r.equal = small == large;
  r.first_difference = first_difference(small, large);
  return r;
}

bool VerificationReport::passed() const {
  return part1.order_equal && part1.pattern_equal && part2.order_equal && part2.pattern_equal &&
         part3.order_equal && part3.pattern_equal && graph_identity.equal;
}

VerificationReport verify_main_theorem(std::uint32_t alpha, const SievedRange& sieved) {
  require_qualifying(alpha);
  return evaluate_main_theorem(alpha, sieved);
}

VerificationReport evaluate_main_theorem(std::uint32_t alpha, const SievedRange& sieved) {
  const CandidateWitness w = check_candidate(alpha);
  if (w.p <= 0) throw NonQualifyingError(alpha, w.reason);
  const u64 p = static_cast<u64>(w.p);
  sieved.require(p + 6);

  const auto h = GroupExpr::abelian(5, {alpha});
  const auto a_big = GroupExpr::alt(p + 6);
  const auto a_small = GroupExpr::alt(p + 5);
  const auto s_big = GroupExpr::sym(p + 6);
  const auto s_small = GroupExpr::sym(p + 5);
  // T of order 2 * 5^alpha, with and without elements of order 10.
  const FactoredInteger t_order({{2, 1}, {5, alpha}});
  const auto t_plain = GroupExpr::abstract(t_order, {2, 5}, {});
  const auto t_joined = GroupExpr::abstract(t_order, {2, 5}, {{2, 5}});

  VerificationReport r;
  r.alpha = alpha;
  r.p = p;
  r.part1 = part_of({compare(a_big, GroupExpr::product(a_small, h), sieved)});
  r.part2 = part_of({compare(s_big, GroupExpr::product(s_small, h), sieved)});
  r.part3 = part_of({compare(s_big, GroupExpr::product(a_small, t_plain), sieved),
                     compare(s_big, GroupExpr::product(a_small, t_joined), sieved)});
  r.graph_identity = compare_consecutive_alt(p + 5, sieved);
  r.od_class_size_lower_bound = r.passed() ? partition_count(alpha) + 1 : 1;
  return r;
}

std::vector<GroupExpr> od_class(std::uint32_t alpha, Family family) {
  const CandidateWitness w = require_qualifying(alpha);
  const u64 p = static_cast<u64>(w.p);
  std::vector<GroupExpr> out;
  out.push_back(GroupExpr::family(family, p + 6));
  for (const auto& lambda : partitions(alpha))
    out.push_back(GroupExpr::product(GroupExpr::family(family, p + 5), GroupExpr::abelian(5, lambda.parts)));
  return out;
}

}  // namespace odkit
