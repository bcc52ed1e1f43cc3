// odkit: prime graphs, degree patterns and OD-class checks from the shell.
//
// Exit codes: 0 ok/pass, 2 verification failed, 3 alpha does not qualify,
// 4 resource or range limit, 5 malformed input.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "odkit/descriptors.hpp"
#include "odkit/render.hpp"
#include "odkit/theorem.hpp"

namespace {

using namespace odkit;

enum Exit : int { kOk = 0, kFail = 2, kNonQualifying = 3, kResource = 4, kInput = 5 };

struct Options {
  std::string format = "text";
  std::uint64_t sieve_limit = 20'000'000;
  std::string expr;
  std::uint32_t alpha = 0;
  std::uint32_t max_alpha = 0;
  std::string family = "alt";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SievedRange make_sieve(std::uint64_t needed, const Options& opt) {
  needed = std::max<std::uint64_t>(needed, 2);
  if (needed > opt.sieve_limit)
    throw ResourceError("needs a sieve up to " + std::to_string(needed) + " but --sieve-limit is " +
                        std::to_string(opt.sieve_limit));
  return SievedRange(needed);
}

GroupExpr parse_input(const std::string& text) {
  try {
    return parse_group_expr(text);
  } catch (const DomainError& e) {
    throw UsageError(std::string("invalid argument: ") + e.what());
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

void reject_dot(const Options& opt, const char* command) {
  if (opt.format == "dot") throw UsageError(std::string("--format dot is only valid for 'graph', not '") + command + "'");
}

int cmd_graph(const Options& opt) {
  const GroupExpr e = parse_input(opt.expr);
  if (!materializable(e))
    throw ResourceError("edge sets above n = " + std::to_string(kMaterializeLimit) + " are not materialized; use degpat");
  const SievedRange sieved = make_sieve(required_sieve_limit(e), opt);
  const PrimeGraph g = gk_of(e, sieved);
  if (opt.format == "json")
    std::cout << to_json(g).dump() << '\n';
  else if (opt.format == "dot")
    std::cout << to_dot(g);
  else
    std::cout << graph_text(g);
  return kOk;
}

int cmd_degpat(const Options& opt) {
  reject_dot(opt, "degpat");
  const GroupExpr e = parse_input(opt.expr);
  const SievedRange sieved = make_sieve(required_sieve_limit(e), opt);
  const DegreePattern d = degree_pattern_of(e, sieved);
  if (opt.format == "json")
    std::cout << to_json(d).dump() << '\n';
  else
    std::cout << pattern_text(d) << '\n';
  return kOk;
}

int cmd_order(const Options& opt) {
  reject_dot(opt, "order");
  const GroupExpr e = parse_input(opt.expr);
  const SievedRange sieved = make_sieve(required_sieve_limit(e), opt);
  const FactoredInteger order = order_of(e, sieved);
  if (opt.format == "json")
    std::cout << to_json(order).dump() << '\n';
  else
    std::cout << order.to_string() << '\n';
  return kOk;
}

int cmd_search(const Options& opt) {
  reject_dot(opt, "search");
  const auto rows = search_candidates(opt.max_alpha);
  if (opt.format == "json")
    std::cout << search_json(rows).dump(2) << '\n';
  else
    std::cout << search_text(rows);
  return kOk;
}

int cmd_verify(const Options& opt) {
  reject_dot(opt, "verify");
  const CandidateWitness w = check_candidate(opt.alpha);
  if (!w.qualifies) throw NonQualifyingError(opt.alpha, w.reason);
  const SievedRange sieved = make_sieve(static_cast<std::uint64_t>(w.p) + 6, opt);
  const VerificationReport r = verify_main_theorem(opt.alpha, sieved);
  if (opt.format == "json")
    std::cout << to_json(r).dump(2) << '\n';
  else
    std::cout << report_text(r);
  return r.passed() ? kOk : kFail;
}

int cmd_odclass(const Options& opt) {
  reject_dot(opt, "odclass");
  const Family family = opt.family == "sym" ? Family::Sym : Family::Alt;
  const auto members = od_class(opt.alpha, family);
  if (opt.format == "json") {
    std::cout << od_class_json(opt.alpha, family, members).dump(2) << '\n';
  } else {
    for (const auto& m : members) std::cout << to_string(m) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime graphs, degree patterns and OD-class verification for alternating and symmetric groups"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--sieve-limit", opt.sieve_limit, "Largest sieve the command may build")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{0xFFFFFFFF}));

  auto* graph = app.add_subcommand("graph", "Prime graph of a group expression");
  graph->add_option("expr", opt.expr, "Group expression, e.g. \"Alt(624) x Ab(5,[4])\"")->required();
  auto* degpat = app.add_subcommand("degpat", "Degree pattern of a group expression");
  degpat->add_option("expr", opt.expr, "Group expression")->required();
  auto* order = app.add_subcommand("order", "Factored order of a group expression");
  order->add_option("expr", opt.expr, "Group expression")->required();
  auto* search = app.add_subcommand("search", "Scan alpha = 1..N for qualifying p = 5^alpha - 6");
  search->add_option("--max-alpha", opt.max_alpha, "Largest alpha to scan")->required();
  auto* verify = app.add_subcommand("verify", "Verify all three OD equalities for one alpha");
  verify->add_option("--alpha", opt.alpha, "Exponent alpha")->required();
  auto* odclass = app.add_subcommand("odclass", "List groups sharing order and degree pattern");
  odclass->add_option("--alpha", opt.alpha, "Exponent alpha")->required();
  odclass->add_option("--family", opt.family, "alt or sym")->check(CLI::IsMember({"alt", "sym"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  const bool range_is_input = graph->parsed() || degpat->parsed() || order->parsed();
  try {
    if (graph->parsed()) return cmd_graph(opt);
    if (degpat->parsed()) return cmd_degpat(opt);
    if (order->parsed()) return cmd_order(opt);
    if (search->parsed()) return cmd_search(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (odclass->parsed()) return cmd_odclass(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const NonQualifyingError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNonQualifying;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return range_is_input ? kInput : kResource;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return kResource;
  }
  return kInput;
}
