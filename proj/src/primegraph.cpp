#include "odkit/primegraph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace odkit {

namespace {
using u64 = std::uint64_t;
}

const char* family_name(Family f) { return f == Family::Alt ? "Alt" : "Sym"; }

// ---------------------------------------------------------------------------
// PrimeGraph

PrimeGraph::PrimeGraph(std::vector<u64> vertices) : vertices_(std::move(vertices)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i > 0 && vertices_[i - 1] >= vertices_[i])
      throw DomainError("prime graph vertices must be strictly ascending");
    if (!is_prime(vertices_[i])) throw DomainError("prime graph vertex " + std::to_string(vertices_[i]) + " is not prime");
  }
  words_ = (vertices_.size() + 63) / 64;
  bits_.assign(words_ * vertices_.size(), 0);
}

PrimeGraph::PrimeGraph(std::vector<u64> vertices, const std::vector<Edge>& edges) : PrimeGraph(std::move(vertices)) {
  for (const auto& [p, q] : edges) add_edge(p, q);
}

void PrimeGraph::add_edge(u64 p, u64 q) {
  auto i = index_of(p);
  auto j = index_of(q);
  if (!i || !j) throw DomainError("edge " + std::to_string(p) + "-" + std::to_string(q) + " has an endpoint outside the vertex set");
  if (*i == *j) throw DomainError("self-loop at " + std::to_string(p));
  add_edge_at(*i, *j);
}

void PrimeGraph::add_edge_at(std::size_t i, std::size_t j) {
  bits_[i * words_ + j / 64] |= u64{1} << (j % 64);
  bits_[j * words_ + i / 64] |= u64{1} << (i % 64);
}

std::optional<std::size_t> PrimeGraph::index_of(u64 p) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
  if (it == vertices_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool PrimeGraph::adjacent_at(std::size_t i, std::size_t j) const {
  return (bits_[i * words_ + j / 64] >> (j % 64)) & 1;
}

bool PrimeGraph::adjacent(u64 p, u64 q) const {
  auto i = index_of(p);
  auto j = index_of(q);
  return i && j && adjacent_at(*i, *j);
}

u64 PrimeGraph::degree_at(std::size_t i) const {
  u64 d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(bits_[i * words_ + w]);
  return d;
}

u64 PrimeGraph::degree(u64 p) const {
  auto i = index_of(p);
  if (!i) throw DomainError(std::to_string(p) + " is not a vertex");
  return degree_at(*i);
}

u64 PrimeGraph::edge_count() const {
  u64 total = 0;
  for (u64 word : bits_) total += std::popcount(word);
  return total / 2;
}

std::vector<PrimeGraph::Edge> PrimeGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t w = i / 64; w < words_; ++w) {
      u64 word = bits_[i * words_ + w];
      while (word) {
        std::size_t j = w * 64 + std::countr_zero(word);
        word &= word - 1;
        if (j > i) out.emplace_back(vertices_[i], vertices_[j]);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// CriterionGraph

std::vector<u64> family_vertices(Family family, u64 n, const SievedRange& sieved) {
  sieved.require(n);
  if (family == Family::Alt) {
    if (n < 3) return {};
    if (n == 3) return {3};
  } else if (n < 2) {
    return {};
  }
  return sieved.primes_up_to(n);
}

CriterionGraph::CriterionGraph(Family family, u64 n, const SievedRange& sieved)
    : family_(family), n_(n), sieved_(&sieved), vertices_(family_vertices(family, n, sieved)) {}

bool CriterionGraph::has_vertex(u64 p) const {
  if (p > n_ || !sieved_->is_prime(p)) return false;
  if (family_ == Family::Alt && n_ == 3) return p == 3;
  return !vertices_.empty();
}

bool CriterionGraph::adjacent(u64 p, u64 q) const {
  if (p == q || !has_vertex(p) || !has_vertex(q)) return false;
  if (family_ == Family::Alt && (p == 2 || q == 2)) return std::max(p, q) + 4 <= n_;
  return p + q <= n_;
}

u64 CriterionGraph::odd_primes_up_to(u64 x) const {
  u64 c = sieved_->prime_count(x);
  return x >= 2 ? c - 1 : c;
}

u64 CriterionGraph::degree(u64 p) const {
  if (!has_vertex(p)) throw DomainError(std::to_string(p) + " is not a vertex");
  const u64 room = n_ - p;  // partners s must satisfy s <= n - p
  if (family_ == Family::Sym) {
    u64 d = sieved_->prime_count(room);
    if (p <= room) --d;
    return d;
  }
  if (p == 2) return n_ >= 4 ? odd_primes_up_to(n_ - 4) : 0;
  u64 d = odd_primes_up_to(room);
  if (p <= room) --d;
  if (p + 4 <= n_) ++d;
  return d;
}

// ---------------------------------------------------------------------------
// ProductGraph

ProductGraph::ProductGraph(std::shared_ptr<const GraphModel> left, std::shared_ptr<const GraphModel> right)
    : left_(std::move(left)), right_(std::move(right)) {
  const auto& a = left_->vertices();
  const auto& b = right_->vertices();
  vertices_.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(vertices_));
}

bool ProductGraph::has_vertex(u64 p) const { return left_->has_vertex(p) || right_->has_vertex(p); }

bool ProductGraph::adjacent(u64 p, u64 q) const {
  if (p == q) return false;
  const bool p1 = left_->has_vertex(p), p2 = right_->has_vertex(p);
  const bool q1 = left_->has_vertex(q), q2 = right_->has_vertex(q);
  if ((p1 && q2) || (q1 && p2)) return true;
  return left_->adjacent(p, q) || right_->adjacent(p, q);
}

u64 ProductGraph::degree(u64 p) const {
  const bool in_left = left_->has_vertex(p);
  const bool in_right = right_->has_vertex(p);
  if (in_left && in_right) return vertices_.size() - 1;
  if (!in_left && !in_right) throw DomainError(std::to_string(p) + " is not a vertex");
  // p sits in one factor: its neighbours are its own-factor neighbours plus
  // every vertex of the other factor.
  const GraphModel& own = in_left ? *left_ : *right_;
  const GraphModel& other = in_left ? *right_ : *left_;
  u64 d = own.degree(p);
  for (u64 q : other.vertices())
    if (!own.adjacent(p, q)) ++d;
  return d;
}

// ---------------------------------------------------------------------------
// Construction

PrimeGraph gk_family(Family family, u64 n, const SievedRange& sieved) {
  PrimeGraph g(family_vertices(family, n, sieved));
  const auto& v = g.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (family == Family::Alt && v[i] == 2) {
      for (std::size_t j = i + 1; j < v.size() && v[j] + 4 <= n; ++j) g.add_edge_at(i, j);
      continue;
    }
    for (std::size_t j = i + 1; j < v.size() && v[i] + v[j] <= n; ++j) g.add_edge_at(i, j);
  }
  return g;
}

PrimeGraph gk_alt(u64 n, const SievedRange& sieved) { return gk_family(Family::Alt, n, sieved); }
PrimeGraph gk_sym(u64 n, const SievedRange& sieved) { return gk_family(Family::Sym, n, sieved); }

PrimeGraph gk_product(const PrimeGraph& g1, const PrimeGraph& g2) {
  std::vector<u64> all;
  std::set_union(g1.vertices().begin(), g1.vertices().end(), g2.vertices().begin(), g2.vertices().end(),
                 std::back_inserter(all));
  PrimeGraph out(all);
  for (const PrimeGraph* g : {&g1, &g2})
    for (const auto& [p, q] : g->edges()) out.add_edge_at(*out.index_of(p), *out.index_of(q));
  for (u64 p : g1.vertices()) {
    const std::size_t i = *out.index_of(p);
    for (u64 q : g2.vertices())
      if (p != q) out.add_edge_at(i, *out.index_of(q));
  }
  return out;
}

PrimeGraph materialize(const GraphModel& g) {
  PrimeGraph out(g.vertices());
  const auto& v = out.vertices();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (g.adjacent(v[i], v[j])) out.add_edge_at(i, j);
  return out;
}

DegreePattern degree_pattern(const PrimeGraph& g) {
  DegreePattern d;
  d.primes = g.vertices();
  d.degrees.reserve(d.primes.size());
  for (std::size_t i = 0; i < d.primes.size(); ++i) d.degrees.push_back(g.degree_at(i));
  return d;
}

DegreePattern degree_pattern(const GraphModel& g) {
  if (const auto* explicit_graph = dynamic_cast<const PrimeGraph*>(&g)) return degree_pattern(*explicit_graph);
  DegreePattern d;
  d.primes = g.vertices();
  d.degrees.reserve(d.primes.size());
  for (u64 p : d.primes) d.degrees.push_back(g.degree(p));
  return d;
}

DegreePattern fast_degree_pattern(Family family, u64 n, const SievedRange& sieved) {
  return degree_pattern(CriterionGraph(family, n, sieved));
}

DegreePattern fast_degree_pattern_alt(u64 n, const SievedRange& sieved) {
  return fast_degree_pattern(Family::Alt, n, sieved);
}

DegreePattern fast_degree_pattern_sym(u64 n, const SievedRange& sieved) {
  return fast_degree_pattern(Family::Sym, n, sieved);
}

bool graphs_equal(const PrimeGraph& g1, const PrimeGraph& g2) { return g1 == g2; }

GraphSummary summarize(const DegreePattern& d) {
  GraphSummary s;
  s.vertex_count = d.primes.size();
  if (d.degrees.empty()) return s;
  u64 total = 0;
  s.min_degree = d.degrees.front();
  for (u64 deg : d.degrees) {
    total += deg;
    s.min_degree = std::min(s.min_degree, deg);
    s.max_degree = std::max(s.max_degree, deg);
  }
  s.edge_count = total / 2;
  return s;
}

std::optional<PatternDifference> first_difference(const DegreePattern& a, const DegreePattern& b) {
  const std::size_t n = std::max(a.primes.size(), b.primes.size());
  for (std::size_t i = 0; i < n; ++i) {
    PatternDifference diff;
    diff.index = i;
    if (i < a.primes.size()) {
      diff.lhs_prime = a.primes[i];
      diff.lhs_degree = a.degrees[i];
    }
    if (i < b.primes.size()) {
      diff.rhs_prime = b.primes[i];
      diff.rhs_degree = b.degrees[i];
    }
    if (diff.lhs_prime != diff.rhs_prime || diff.lhs_degree != diff.rhs_degree) return diff;
  }
  return std::nullopt;
}

}  // namespace odkit
