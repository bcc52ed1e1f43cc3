#include "odkit/render.hpp"

#include <iomanip>
#include <sstream>

namespace odkit {

namespace {

using u64 = std::uint64_t;

Json difference_json(const std::optional<PatternDifference>& d) {
  if (!d) return nullptr;
  auto opt = [](const std::optional<u64>& v) -> Json { return v ? Json(*v) : Json(nullptr); };
  return Json{{"index", d->index},
              {"lhs_prime", opt(d->lhs_prime)},
              {"lhs_degree", opt(d->lhs_degree)},
              {"rhs_prime", opt(d->rhs_prime)},
              {"rhs_degree", opt(d->rhs_degree)}};
}

std::optional<PatternDifference> difference_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  auto opt = [](const Json& v) -> std::optional<u64> {
    return v.is_null() ? std::nullopt : std::optional<u64>(v.get<u64>());
  };
  PatternDifference d;
  d.index = j.at("index").get<std::size_t>();
  d.lhs_prime = opt(j.at("lhs_prime"));
  d.lhs_degree = opt(j.at("lhs_degree"));
  d.rhs_prime = opt(j.at("rhs_prime"));
  d.rhs_degree = opt(j.at("rhs_degree"));
  return d;
}

GraphSummary summary_from_json(const Json& j) {
  return GraphSummary{j.at("vertex_count").get<u64>(), j.at("edge_count").get<u64>(), j.at("min_degree").get<u64>(),
                      j.at("max_degree").get<u64>()};
}

Json part_json(const PartResult& p) {
  Json evidence = Json::array();
  for (const auto& c : p.evidence) {
    evidence.push_back({{"lhs", c.lhs},
                        {"rhs", c.rhs},
                        {"lhs_summary", to_json(c.lhs_summary)},
                        {"rhs_summary", to_json(c.rhs_summary)},
                        {"order_equal", c.order_equal},
                        {"pattern_equal", c.pattern_equal},
                        {"first_difference", difference_json(c.first_difference)}});
  }
  return Json{{"order_equal", p.order_equal}, {"pattern_equal", p.pattern_equal}, {"evidence", evidence}};
}

PartResult part_from_json(const Json& j) {
  PartResult p;
  p.order_equal = j.at("order_equal").get<bool>();
  p.pattern_equal = j.at("pattern_equal").get<bool>();
  for (const auto& e : j.at("evidence")) {
    Comparison c;
    c.lhs = e.at("lhs").get<std::string>();
    c.rhs = e.at("rhs").get<std::string>();
    c.lhs_summary = summary_from_json(e.at("lhs_summary"));
    c.rhs_summary = summary_from_json(e.at("rhs_summary"));
    c.order_equal = e.at("order_equal").get<bool>();
    c.pattern_equal = e.at("pattern_equal").get<bool>();
    c.first_difference = difference_from_json(e.at("first_difference"));
    p.evidence.push_back(std::move(c));
  }
  return p;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Json to_json(const PrimeGraph& g) {
  Json edges = Json::array();
  for (const auto& [p, q] : g.edges()) edges.push_back({p, q});
  return Json{{"vertices", g.vertices()}, {"edges", edges}};
}

Json to_json(const DegreePattern& d) { return Json{{"primes", d.primes}, {"degrees", d.degrees}}; }

Json to_json(const FactoredInteger& f) {
  Json factors = Json::array();
  for (const auto& [p, e] : f.factors()) factors.push_back({{"prime", p}, {"exponent", e}});
  return Json{{"factors", factors}, {"text", f.to_string()}};
}

Json to_json(const GraphSummary& s) {
  return Json{{"vertex_count", s.vertex_count},
              {"edge_count", s.edge_count},
              {"min_degree", s.min_degree},
              {"max_degree", s.max_degree}};
}

Json to_json(const CandidateWitness& w) {
  return Json{{"alpha", w.alpha},
              {"p", w.p},
              {"p_prime", w.p_prime},
              {"p2_composite", w.p2_composite},
              {"p4_composite", w.p4_composite},
              {"qualifies", w.qualifies},
              {"reason", w.reason}};
}

Json to_json(const VerificationReport& r) {
  return Json{{"alpha", r.alpha},
              {"p", r.p},
              {"part1", part_json(r.part1)},
              {"part2", part_json(r.part2)},
              {"part3", part_json(r.part3)},
              {"graph_identity", r.graph_identity.equal},
              {"graph_identity_certificate", certificate_name(r.graph_identity.certificate)},
              {"graph_identity_first_difference", difference_json(r.graph_identity.first_difference)},
              {"od_class_size_lower_bound", r.od_class_size_lower_bound},
              {"od_class_lower_bound_kind", "abelian: partitions(alpha) + 1"},
              {"pass", r.passed()}};
}

Json search_json(const std::vector<CandidateWitness>& rows) {
  Json candidates = Json::array();
  Json qualifying = Json::array();
  for (const auto& w : rows) {
    candidates.push_back(to_json(w));
    if (w.qualifies) qualifying.push_back(w.alpha);
  }
  return Json{{"candidates", candidates}, {"qualifying_alphas", qualifying}};
}

Json od_class_json(std::uint32_t alpha, Family family, const std::vector<GroupExpr>& members) {
  Json list = Json::array();
  for (const auto& m : members) list.push_back(to_string(m));
  return Json{{"alpha", alpha}, {"family", family == Family::Alt ? "alt" : "sym"}, {"members", list}};
}

PrimeGraph graph_from_json(const Json& j) {
  std::vector<PrimeGraph::Edge> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<u64>(), e.at(1).get<u64>());
  return PrimeGraph(j.at("vertices").get<std::vector<u64>>(), edges);
}

DegreePattern pattern_from_json(const Json& j) {
  DegreePattern d{j.at("primes").get<std::vector<u64>>(), j.at("degrees").get<std::vector<u64>>()};
  if (d.primes.size() != d.degrees.size()) throw DomainError("degree pattern arrays differ in length");
  return d;
}

FactoredInteger order_from_json(const Json& j) {
  FactoredInteger::Map m;
  for (const auto& f : j.at("factors")) m[f.at("prime").get<u64>()] += f.at("exponent").get<u64>();
  return FactoredInteger(m);
}

CandidateWitness candidate_from_json(const Json& j) {
  CandidateWitness w;
  w.alpha = j.at("alpha").get<std::uint32_t>();
  w.p = j.at("p").get<std::int64_t>();
  w.p_prime = j.at("p_prime").get<bool>();
  w.p2_composite = j.at("p2_composite").get<bool>();
  w.p4_composite = j.at("p4_composite").get<bool>();
  w.qualifies = j.at("qualifies").get<bool>();
  w.reason = j.at("reason").get<std::string>();
  return w;
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  r.alpha = j.at("alpha").get<std::uint32_t>();
  r.p = j.at("p").get<u64>();
  r.part1 = part_from_json(j.at("part1"));
  r.part2 = part_from_json(j.at("part2"));
  r.part3 = part_from_json(j.at("part3"));
  r.graph_identity.equal = j.at("graph_identity").get<bool>();
  const auto cert = j.at("graph_identity_certificate").get<std::string>();
  if (cert == "edge_sets")
    r.graph_identity.certificate = IdentityCertificate::EdgeSets;
  else if (cert == "degree_patterns")
    r.graph_identity.certificate = IdentityCertificate::DegreePatterns;
  else
    throw DomainError("unknown graph identity certificate '" + cert + "'");
  r.graph_identity.first_difference = difference_from_json(j.at("graph_identity_first_difference"));
  r.od_class_size_lower_bound = j.at("od_class_size_lower_bound").get<u64>();
  return r;
}

std::string to_dot(const PrimeGraph& g) {
  std::ostringstream os;
  os << "graph GK {\n";
  for (u64 v : g.vertices()) os << "  \"" << v << "\";\n";
  for (const auto& [p, q] : g.edges()) os << "  \"" << p << "\" -- \"" << q << "\";\n";
  os << "}\n";
  return os.str();
}

std::string pattern_text(const DegreePattern& d) {
  std::string s;
  for (std::size_t i = 0; i < d.primes.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(d.primes[i]) + ":" + std::to_string(d.degrees[i]);
  }
  return s;
}

std::string graph_text(const PrimeGraph& g) {
  std::ostringstream os;
  os << "vertices:";
  for (u64 v : g.vertices()) os << ' ' << v;
  os << "\nedges:";
  for (const auto& [p, q] : g.edges()) os << ' ' << p << '-' << q;
  os << '\n';
  return os.str();
}

std::string search_text(const std::vector<CandidateWitness>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "alpha" << std::setw(22) << "p" << std::setw(10) << "qualifies"
     << "reason\n";
  for (const auto& w : rows) {
    os << std::setw(6) << w.alpha << std::setw(22) << w.p << std::setw(10) << yes_no(w.qualifies)
       << (w.qualifies ? "-" : w.reason) << '\n';
  }
  return os.str();
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "alpha = " << r.alpha << ", p = " << r.p << ", p+6 = " << r.p + 6 << '\n';
  const char* names[] = {"part1 A(p+6) ~ A(p+5) x H", "part2 S(p+6) ~ S(p+5) x H", "part3 S(p+6) ~ A(p+5) x T"};
  const PartResult* parts[] = {&r.part1, &r.part2, &r.part3};
  for (int i = 0; i < 3; ++i) {
    os << names[i] << ": order " << (parts[i]->order_equal ? "equal" : "DIFFERENT") << ", pattern "
       << (parts[i]->pattern_equal ? "equal" : "DIFFERENT") << '\n';
    for (const auto& c : parts[i]->evidence) {
      os << "  " << c.lhs << " vs " << c.rhs << ": " << c.lhs_summary.vertex_count << " vertices, "
         << c.lhs_summary.edge_count << " vs " << c.rhs_summary.edge_count << " edges\n";
      if (c.first_difference) {
        const auto& d = *c.first_difference;
        os << "    first difference at index " << d.index << '\n';
      }
    }
  }
  os << "graph identity GK(A(p+6)) = GK(A(p+5)): " << yes_no(r.graph_identity.equal) << " ("
     << certificate_name(r.graph_identity.certificate) << ")\n";
  os << "od-class size lower bound (abelian 5-groups + 1): " << r.od_class_size_lower_bound << '\n';
  os << "result: " << (r.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace odkit
