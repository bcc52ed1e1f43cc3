#pragma once

// Symbolic group expressions, their orders and prime graphs, and the text
// grammar accepted by the command line:
//
//   expr     := term ( "x" term )*
//   term     := "Alt(" int ")" | "Sym(" int ")"
//             | "Ab(" int "," "[" int ("," int)* "]" ")"
//             | "Grp(" factored ";" "pi=" int ("," int)* ";" "edges=" edgelist? ")"
//   factored := int ( "*" int )*      each int written p or p^k
//   edgelist := pair ("," pair)*      pair := int "-" int
//
// Whitespace between tokens is ignored; chains of "x" associate left.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "odkit/numtheory.hpp"
#include "odkit/primegraph.hpp"

namespace odkit {

class GroupExpr;

struct AltGroup {
  std::uint64_t n;
  friend bool operator==(const AltGroup&, const AltGroup&) = default;
};

struct SymGroup {
  std::uint64_t n;
  friend bool operator==(const SymGroup&, const SymGroup&) = default;
};

/// Direct sum of cyclic groups of orders p^part.
struct AbelianPGroup {
  std::uint64_t p;
  Partition type;
  friend bool operator==(const AbelianPGroup&, const AbelianPGroup&) = default;
};

/// A group known only through its order and prime graph.
struct AbstractGroup {
  FactoredInteger order;
  std::vector<std::uint64_t> pi;            // ascending, equals order's primes
  std::vector<PrimeGraph::Edge> edges;      // (smaller, larger), sorted, unique
  friend bool operator==(const AbstractGroup&, const AbstractGroup&) = default;
};

struct DirectProduct {
  std::shared_ptr<const GroupExpr> left;
  std::shared_ptr<const GroupExpr> right;
  friend bool operator==(const DirectProduct& a, const DirectProduct& b);
};

/// Immutable expression tree. Construct through the validating factories.
class GroupExpr {
 public:
  using Node = std::variant<AltGroup, SymGroup, AbelianPGroup, AbstractGroup, DirectProduct>;

  static GroupExpr alt(std::uint64_t n);
  static GroupExpr sym(std::uint64_t n);
  static GroupExpr family(Family f, std::uint64_t n);
  /// Parts must be positive; they are sorted into nonincreasing order.
  static GroupExpr abelian(std::uint64_t p, std::vector<std::uint32_t> parts);
  /// pi must equal the primes of order; edges must be non-loop pairs in pi.
  static GroupExpr abstract(FactoredInteger order, std::vector<std::uint64_t> pi,
                            std::vector<PrimeGraph::Edge> edges);
  static GroupExpr product(GroupExpr left, GroupExpr right);

  const Node& node() const { return node_; }

  friend bool operator==(const GroupExpr& a, const GroupExpr& b) { return a.node_ == b.node_; }

 private:
  explicit GroupExpr(Node node) : node_(std::move(node)) {}
  Node node_;
};

/// Order and degree pattern: the data an OD-characterization compares.
struct ODPair {
  FactoredInteger order;
  DegreePattern pattern;
  friend bool operator==(const ODPair&, const ODPair&) = default;
};

/// Syntax error in a group expression, with the 0-based offset it occurred at.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Largest Alt/Sym degree in the tree (0 if none).
std::uint64_t max_family_degree(const GroupExpr& e);
/// Sieve limit needed to evaluate e (at least 2).
std::uint64_t required_sieve_limit(const GroupExpr& e);
/// True when every Alt/Sym leaf is within kMaterializeLimit.
bool materializable(const GroupExpr& e);

FactoredInteger order_of(const GroupExpr& e, const SievedRange& sieved);

/// Explicit prime graph. Throws ResourceError when a leaf is too large to
/// materialize.
PrimeGraph gk_of(const GroupExpr& e, const SievedRange& sieved);

/// Non-materializing view of GK(e). The model keeps a pointer to sieved.
std::shared_ptr<const GraphModel> graph_model(const GroupExpr& e, const SievedRange& sieved);

/// Uses gk_of when materializable, otherwise the on-demand graph model.
DegreePattern degree_pattern_of(const GroupExpr& e, const SievedRange& sieved);

ODPair od_pair(const GroupExpr& e, const SievedRange& sieved);
bool same_od(const GroupExpr& a, const GroupExpr& b, const SievedRange& sieved);

GroupExpr parse_group_expr(std::string_view text);
/// Canonical text in the grammar above. Products print left-associated.
std::string to_string(const GroupExpr& e);

}  // namespace odkit
