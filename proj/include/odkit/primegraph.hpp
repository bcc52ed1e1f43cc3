#pragma once

// Prime (Gruenberg-Kegel) graphs of alternating and symmetric groups and of
// direct products, plus degree patterns.

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "odkit/numtheory.hpp"

namespace odkit {

enum class Family { Alt, Sym };

const char* family_name(Family f);

/// Largest n for which Alt(n)/Sym(n) edge sets are materialized.
inline constexpr std::uint64_t kMaterializeLimit = 100000;

/// Read-only view of a labelled prime graph. Implemented both by the
/// explicit PrimeGraph and by on-demand adjacency rules for large n.
class GraphModel {
 public:
  virtual ~GraphModel() = default;
  /// Ascending, distinct.
  virtual const std::vector<std::uint64_t>& vertices() const = 0;
  virtual bool has_vertex(std::uint64_t p) const = 0;
  /// False for p == q or for non-vertices.
  virtual bool adjacent(std::uint64_t p, std::uint64_t q) const = 0;
  /// Precondition: has_vertex(p).
  virtual std::uint64_t degree(std::uint64_t p) const = 0;
};

/// Explicit prime graph: sorted vertex list and a symmetric adjacency bit
/// matrix indexed by vertex position.
class PrimeGraph final : public GraphModel {
 public:
  using Edge = std::pair<std::uint64_t, std::uint64_t>;

  PrimeGraph() = default;
  /// Vertices must be strictly ascending primes.
  explicit PrimeGraph(std::vector<std::uint64_t> vertices);
  PrimeGraph(std::vector<std::uint64_t> vertices, const std::vector<Edge>& edges);

  /// Throws DomainError on self-loops or unknown endpoints.
  void add_edge(std::uint64_t p, std::uint64_t q);
  void add_edge_at(std::size_t i, std::size_t j);

  const std::vector<std::uint64_t>& vertices() const override { return vertices_; }
  bool has_vertex(std::uint64_t p) const override { return index_of(p).has_value(); }
  bool adjacent(std::uint64_t p, std::uint64_t q) const override;
  std::uint64_t degree(std::uint64_t p) const override;

  std::optional<std::size_t> index_of(std::uint64_t p) const;
  bool adjacent_at(std::size_t i, std::size_t j) const;
  std::uint64_t degree_at(std::size_t i) const;
  std::uint64_t edge_count() const;
  /// Edges as (smaller, larger), lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const PrimeGraph& a, const PrimeGraph& b) {
    return a.vertices_ == b.vertices_ && a.bits_ == b.bits_;
  }

 private:
  std::vector<std::uint64_t> vertices_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Degree tuple aligned with the ascending prime vertices.
struct DegreePattern {
  std::vector<std::uint64_t> primes;
  std::vector<std::uint64_t> degrees;

  friend bool operator==(const DegreePattern&, const DegreePattern&) = default;
};

struct GraphSummary {
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  std::uint64_t min_degree = 0;
  std::uint64_t max_degree = 0;

  friend bool operator==(const GraphSummary&, const GraphSummary&) = default;
};

/// Position where two patterns first disagree.
struct PatternDifference {
  std::size_t index = 0;
  std::optional<std::uint64_t> lhs_prime, rhs_prime;
  std::optional<std::uint64_t> lhs_degree, rhs_degree;
};

/// GK(A_n) and GK(S_n) evaluated directly from the arithmetic criterion:
///  - Alt: odd r != s adjacent iff r + s <= n; 2 ~ r iff r + 4 <= n.
///  - Sym: distinct r, s adjacent iff r + s <= n.
/// Vertices are the primes dividing the group order. Degrees cost O(1)
/// through the sieve's prefix counts, so nothing is materialized.
class CriterionGraph final : public GraphModel {
 public:
  CriterionGraph(Family family, std::uint64_t n, const SievedRange& sieved);

  Family family() const { return family_; }
  std::uint64_t n() const { return n_; }

  const std::vector<std::uint64_t>& vertices() const override { return vertices_; }
  bool has_vertex(std::uint64_t p) const override;
  bool adjacent(std::uint64_t p, std::uint64_t q) const override;
  std::uint64_t degree(std::uint64_t p) const override;

 private:
  std::uint64_t odd_primes_up_to(std::uint64_t x) const;

  Family family_;
  std::uint64_t n_;
  const SievedRange* sieved_;
  std::vector<std::uint64_t> vertices_;
};

/// Direct product of two graph models (lcm rule): union of vertices, edges
/// of either factor, and every pair with one endpoint from each factor.
class ProductGraph final : public GraphModel {
 public:
  ProductGraph(std::shared_ptr<const GraphModel> left, std::shared_ptr<const GraphModel> right);

  const std::vector<std::uint64_t>& vertices() const override { return vertices_; }
  bool has_vertex(std::uint64_t p) const override;
  bool adjacent(std::uint64_t p, std::uint64_t q) const override;
  /// Cost O(|other factor|) for a vertex lying in only one factor.
  std::uint64_t degree(std::uint64_t p) const override;

 private:
  std::shared_ptr<const GraphModel> left_, right_;
  std::vector<std::uint64_t> vertices_;
};

/// Vertex set of GK(family(n)): empty for trivial groups, {3} for A_3,
/// otherwise every prime <= n.
std::vector<std::uint64_t> family_vertices(Family family, std::uint64_t n, const SievedRange& sieved);

PrimeGraph gk_alt(std::uint64_t n, const SievedRange& sieved);
PrimeGraph gk_sym(std::uint64_t n, const SievedRange& sieved);
PrimeGraph gk_family(Family family, std::uint64_t n, const SievedRange& sieved);

PrimeGraph gk_product(const PrimeGraph& g1, const PrimeGraph& g2);

/// Materializes any model. Cost is quadratic in the vertex count.
PrimeGraph materialize(const GraphModel& g);

DegreePattern degree_pattern(const PrimeGraph& g);
DegreePattern degree_pattern(const GraphModel& g);

DegreePattern fast_degree_pattern_alt(std::uint64_t n, const SievedRange& sieved);
DegreePattern fast_degree_pattern_sym(std::uint64_t n, const SievedRange& sieved);
DegreePattern fast_degree_pattern(Family family, std::uint64_t n, const SievedRange& sieved);

bool graphs_equal(const PrimeGraph& g1, const PrimeGraph& g2);

GraphSummary summarize(const DegreePattern& d);

std::optional<PatternDifference> first_difference(const DegreePattern& a, const DegreePattern& b);

}  // namespace odkit
