#include "odkit/descriptors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace odkit {

namespace {

using u64 = std::uint64_t;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Work allowed for degree patterns of products whose factors are both large.
constexpr u64 kProductPatternBudget = 2'000'000'000;

}  // namespace

bool operator==(const DirectProduct& a, const DirectProduct& b) {
  return *a.left == *b.left && *a.right == *b.right;
}

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

// ---------------------------------------------------------------------------
// Factories

GroupExpr GroupExpr::alt(u64 n) {
  if (n < 1) throw DomainError("Alt(n) needs n >= 1");
  return GroupExpr(AltGroup{n});
}

GroupExpr GroupExpr::sym(u64 n) {
  if (n < 1) throw DomainError("Sym(n) needs n >= 1");
  return GroupExpr(SymGroup{n});
}

GroupExpr GroupExpr::family(Family f, u64 n) { return f == Family::Alt ? alt(n) : sym(n); }

GroupExpr GroupExpr::abelian(u64 p, std::vector<std::uint32_t> parts) {
  if (!is_prime(p)) throw DomainError("Ab base " + std::to_string(p) + " is not prime");
  if (parts.empty()) throw DomainError("Ab needs at least one part");
  for (auto part : parts)
    if (part == 0) throw DomainError("Ab parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return GroupExpr(AbelianPGroup{p, Partition{std::move(parts)}});
}

GroupExpr GroupExpr::abstract(FactoredInteger order, std::vector<u64> pi, std::vector<PrimeGraph::Edge> edges) {
  std::sort(pi.begin(), pi.end());
  if (std::adjacent_find(pi.begin(), pi.end()) != pi.end()) throw DomainError("Grp pi lists a prime twice");
  if (pi != order.primes()) throw DomainError("Grp pi must equal the primes dividing its order");
  for (auto& [a, b] : edges) {
    if (a == b) throw DomainError("Grp edge " + std::to_string(a) + "-" + std::to_string(b) + " is a self-loop");
    if (!std::binary_search(pi.begin(), pi.end(), a) || !std::binary_search(pi.begin(), pi.end(), b))
      throw DomainError("Grp edge " + std::to_string(a) + "-" + std::to_string(b) + " leaves pi");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return GroupExpr(AbstractGroup{std::move(order), std::move(pi), std::move(edges)});
}

GroupExpr GroupExpr::product(GroupExpr left, GroupExpr right) {
  return GroupExpr(DirectProduct{std::make_shared<const GroupExpr>(std::move(left)),
                                 std::make_shared<const GroupExpr>(std::move(right))});
}

// ---------------------------------------------------------------------------
// Evaluation

u64 max_family_degree(const GroupExpr& e) {
  return std::visit(Overloaded{
                        [](const AltGroup& g) { return g.n; },
                        [](const SymGroup& g) { return g.n; },
                        [](const AbelianPGroup&) { return u64{0}; },
                        [](const AbstractGroup&) { return u64{0}; },
                        [](const DirectProduct& g) {
                          return std::max(max_family_degree(*g.left), max_family_degree(*g.right));
                        },
                    },
                    e.node());
}

u64 required_sieve_limit(const GroupExpr& e) { return std::max<u64>(2, max_family_degree(e)); }

bool materializable(const GroupExpr& e) { return max_family_degree(e) <= kMaterializeLimit; }

FactoredInteger order_of(const GroupExpr& e, const SievedRange& sieved) {
  return std::visit(Overloaded{
                        [&](const AltGroup& g) {
                          auto m = factor_factorial(g.n, sieved).factors();
                          if (g.n >= 2 && --m[2] == 0) m.erase(2);
                          return FactoredInteger(m);
                        },
                        [&](const SymGroup& g) { return factor_factorial(g.n, sieved); },
                        [](const AbelianPGroup& g) { return FactoredInteger({{g.p, g.type.sum()}}); },
                        [](const AbstractGroup& g) { return g.order; },
                        [&](const DirectProduct& g) {
                          return fi_multiply(order_of(*g.left, sieved), order_of(*g.right, sieved));
                        },
                    },
                    e.node());
}

PrimeGraph gk_of(const GroupExpr& e, const SievedRange& sieved) {
  return std::visit(Overloaded{
                        [&](const AltGroup& g) {
                          if (g.n > kMaterializeLimit)
                            throw ResourceError("Alt(" + std::to_string(g.n) + ") is too large to materialize");
                          return gk_alt(g.n, sieved);
                        },
                        [&](const SymGroup& g) {
                          if (g.n > kMaterializeLimit)
                            throw ResourceError("Sym(" + std::to_string(g.n) + ") is too large to materialize");
                          return gk_sym(g.n, sieved);
                        },
                        [](const AbelianPGroup& g) { return PrimeGraph({g.p}); },
                        [](const AbstractGroup& g) { return PrimeGraph(g.pi, g.edges); },
                        [&](const DirectProduct& g) {
                          return gk_product(gk_of(*g.left, sieved), gk_of(*g.right, sieved));
                        },
                    },
                    e.node());
}

namespace {

// Returns the model and an estimate of the adjacency queries its degree
// pattern costs beyond the O(1) per-vertex base.
std::pair<std::shared_ptr<const GraphModel>, u64> build_model(const GroupExpr& e, const SievedRange& sieved) {
  using Result = std::pair<std::shared_ptr<const GraphModel>, u64>;
  return std::visit(
      Overloaded{
          [&](const AltGroup& g) -> Result {
            return {std::make_shared<CriterionGraph>(Family::Alt, g.n, sieved), 0};
          },
          [&](const SymGroup& g) -> Result {
            return {std::make_shared<CriterionGraph>(Family::Sym, g.n, sieved), 0};
          },
          [](const AbelianPGroup& g) -> Result { return {std::make_shared<PrimeGraph>(std::vector<u64>{g.p}), 0}; },
          [](const AbstractGroup& g) -> Result { return {std::make_shared<PrimeGraph>(g.pi, g.edges), 0}; },
          [&](const DirectProduct& g) -> Result {
            auto [left, left_cost] = build_model(*g.left, sieved);
            auto [right, right_cost] = build_model(*g.right, sieved);
            auto prod = std::make_shared<ProductGraph>(left, right);
            const u64 a = left->vertices().size(), b = right->vertices().size();
            const u64 shared = a + b - prod->vertices().size();
            const u64 cost = left_cost + right_cost + (a - shared) * b + (b - shared) * a;
            return {prod, cost};
          },
      },
      e.node());
}

}  // namespace

std::shared_ptr<const GraphModel> graph_model(const GroupExpr& e, const SievedRange& sieved) {
  return build_model(e, sieved).first;
}

DegreePattern degree_pattern_of(const GroupExpr& e, const SievedRange& sieved) {
  if (materializable(e)) return degree_pattern(gk_of(e, sieved));
  auto [model, cost] = build_model(e, sieved);
  if (cost > kProductPatternBudget)
    throw ResourceError("degree pattern of " + to_string(e) + " needs about " + std::to_string(cost) +
                        " adjacency queries");
  return degree_pattern(*model);
}

ODPair od_pair(const GroupExpr& e, const SievedRange& sieved) {
  return ODPair{order_of(e, sieved), degree_pattern_of(e, sieved)};
}

bool same_od(const GroupExpr& a, const GroupExpr& b, const SievedRange& sieved) {
  return od_pair(a, sieved) == od_pair(b, sieved);
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const GroupExpr& e) {
  return std::visit(Overloaded{
                        [](const AltGroup& g) { return "Alt(" + std::to_string(g.n) + ")"; },
                        [](const SymGroup& g) { return "Sym(" + std::to_string(g.n) + ")"; },
                        [](const AbelianPGroup& g) {
                          std::string s = "Ab(" + std::to_string(g.p) + ",[";
                          for (std::size_t i = 0; i < g.type.parts.size(); ++i) {
                            if (i) s += ",";
                            s += std::to_string(g.type.parts[i]);
                          }
                          return s + "])";
                        },
                        [](const AbstractGroup& g) {
                          std::string s = "Grp(";
                          bool first = true;
                          for (const auto& [p, k] : g.order.factors()) {
                            if (!first) s += "*";
                            first = false;
                            s += std::to_string(p);
                            if (k > 1) s += "^" + std::to_string(k);
                          }
                          s += "; pi=";
                          for (std::size_t i = 0; i < g.pi.size(); ++i) {
                            if (i) s += ",";
                            s += std::to_string(g.pi[i]);
                          }
                          s += "; edges=";
                          for (std::size_t i = 0; i < g.edges.size(); ++i) {
                            if (i) s += ",";
                            s += std::to_string(g.edges[i].first) + "-" + std::to_string(g.edges[i].second);
                          }
                          return s + ")";
                        },
                        [](const DirectProduct& g) { return to_string(*g.left) + " x " + to_string(*g.right); },
                    },
                    e.node());
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupExpr parse() {
    GroupExpr e = term();
    while (accept("x")) e = GroupExpr::product(std::move(e), term());
    skip_space();
    if (pos_ != text_.size()) fail("'x' or end of input");
    return e;
  }

 private:
  GroupExpr term() {
    skip_space();
    const std::size_t start = pos_;
    if (accept("Alt")) {
      expect("(");
      u64 n = integer();
      expect(")");
      return at(start, [&] { return GroupExpr::alt(n); });
    }
    if (accept("Sym")) {
      expect("(");
      u64 n = integer();
      expect(")");
      return at(start, [&] { return GroupExpr::sym(n); });
    }
    if (accept("Ab")) {
      expect("(");
      u64 p = integer();
      expect(",");
      expect("[");
      std::vector<std::uint32_t> parts;
      do {
        const std::size_t part_pos = pos_;
        u64 part = integer();
        if (part > std::numeric_limits<std::uint32_t>::max())
          throw DomainError("Ab part at position " + std::to_string(part_pos) + " is too large");
        parts.push_back(static_cast<std::uint32_t>(part));
      } while (accept(","));
      expect("]");
      expect(")");
      return at(start, [&] { return GroupExpr::abelian(p, std::move(parts)); });
    }
    if (accept("Grp")) {
      expect("(");
      FactoredInteger::Map order;
      do {
        const std::size_t factor_pos = pos_;
        u64 p = integer();
        u64 k = accept("^") ? integer() : 1;
        if (!is_prime(p))
          throw DomainError("Grp order factor " + std::to_string(p) + " at position " + std::to_string(factor_pos) +
                            " is not prime");
        if (k == 0) throw DomainError("Grp order exponent must be positive");
        order[p] += k;
      } while (accept("*"));
      expect(";");
      expect("pi");
      expect("=");
      std::vector<u64> pi;
      do pi.push_back(integer());
      while (accept(","));
      expect(";");
      expect("edges");
      expect("=");
      std::vector<PrimeGraph::Edge> edges;
      if (peek_digit()) {
        do {
          u64 a = integer();
          expect("-");
          u64 b = integer();
          edges.emplace_back(a, b);
        } while (accept(","));
      }
      expect(")");
      return at(start, [&] { return GroupExpr::abstract(FactoredInteger(order), std::move(pi), std::move(edges)); });
    }
    fail("'Alt(', 'Sym(', 'Ab(' or 'Grp('");
  }

  // Re-raises argument errors with the term's position attached.
  template <class F>
  GroupExpr at(std::size_t start, F&& make) {
    try {
      return make();
    } catch (const DomainError& err) {
      throw DomainError(std::string(err.what()) + " (term at position " + std::to_string(start) + ")");
    }
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("'" + std::string(token) + "'");
  }

  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  u64 integer() {
    if (!peek_digit()) fail("integer");
    const std::size_t start = pos_;
    u64 value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const u64 digit = static_cast<u64>(text_[pos_] - '0');
      if (value > (std::numeric_limits<u64>::max() - digit) / 10)
        throw DomainError("integer at position " + std::to_string(start) + " overflows 64 bits");
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& expected) {
    skip_space();
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw ParseError(pos_, "expected " + expected + ", found " + found);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupExpr parse_group_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace odkit
