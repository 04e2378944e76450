// rmcensus: command-line front end for the census library.
//
//   rmcensus params -p 11
//   rmcensus census -p 11 --format text
//   rmcensus verify -p 19
//   rmcensus group -p 11 --family HatG1 --center

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "rmc/census.hpp"
#include "rmc/presentation.hpp"

using nlohmann::json;
using namespace rmc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

std::vector<Family> parse_families(const std::string& list) {
  std::vector<Family> out;
  std::stringstream ss(list);
  std::string tag;
  while (std::getline(ss, tag, ',')) {
    if (tag.empty()) continue;
    out.push_back(parse_family(tag));
  }
  return out;
}

int cmd_params(int64_t p) {
  const PrimeParams P = derive_params(p);
  const json j{{"p", P.p}, {"residue_mod5", P.residue}, {"k", opt(P.k)}, {"s", opt(P.s)}, {"t1", opt(P.t1)},
               {"t2", opt(P.t2)}, {"delta", P.delta}, {"delta_mod_p2", opt(P.delta_sq)}};
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_census(int64_t p, const std::string& format, const std::string& out, const std::string& families, int threads,
               bool timing) {
  const ReportFormat fmt = parse_format(format);
  CensusOptions opt;
  opt.families = parse_families(families);
  opt.threads = threads;
  opt.timing = timing;
  const CensusReport r = run_census(p, opt);
  if (out.empty())
    std::cout << emit_report(r, fmt);
  else
    write_report(r, fmt, out);
  return kExitOk;
}

int cmd_verify(int64_t p, int threads) {
  CensusOptions opt;
  opt.threads = threads;
  const CensusReport r = run_census(p, opt);
  const auto failing = r.failing_checks();
  for (const CheckResult& c : r.theorem_checks) {
    if (c.pass) continue;
    std::cout << "FAIL " << c.name << ": expected " << c.expected.dump() << ", actual " << c.actual.dump() << '\n';
  }
  std::cout << (r.theorem_checks.size() - failing.size()) << '/' << r.theorem_checks.size() << " checks pass\n";
  return failing.empty() ? kExitOk : kExitVerify;
}

int cmd_group(int64_t p, const std::string& tag, bool census, bool centre) {
  const GroupSpec G(derive_params(p), parse_family(tag));
  const Presentation pr = presentation(G);
  json relations = json::array();
  for (const Relation& r : pr.relations) relations.push_back(r.name);
  json j{{"family", tag}, {"order", G.expected_order()}, {"generators", pr.generators}, {"relations", relations}};
  if (census) {
    json oc = json::object();
    for (const auto& [order, count] : order_census(G)) oc[std::to_string(order)] = count;
    j["order_census"] = oc;
  }
  if (centre) {
    json z = json::array();
    for (const Element& x : center(G)) z.push_back(render(G, x));
    j["center"] = z;
  }
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Census of orientably-regular maps and hypermaps of Euler characteristic -2p^2"};
  app.require_subcommand(1);

  int64_t p = 0;
  std::string format = "json", out, families, family;
  int threads = 1;
  bool timing = false, want_census = false, want_center = false;

  auto* params = app.add_subcommand("params", "print the constants derived from p");
  params->add_option("-p,--prime", p, "prime")->required();

  auto* census = app.add_subcommand("census", "run the census and emit a report");
  census->add_option("-p,--prime", p, "prime")->required();
  census->add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  census->add_option("--out", out, "write the report to this path");
  census->add_option("--families", families, "comma-separated family tags");
  census->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  census->add_flag("--timing", timing, "include elapsed time (output is then not reproducible)");

  auto* verify = app.add_subcommand("verify", "exit 0 iff every theorem check passes");
  verify->add_option("-p,--prime", p, "prime")->required();
  verify->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  auto* group = app.add_subcommand("group", "describe one group family");
  group->add_option("-p,--prime", p, "prime")->required();
  group->add_option("--family", family, "family tag")->required();
  group->add_flag("--order-census", want_census, "number of elements of each order");
  group->add_flag("--center", want_center, "list the centre");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*params) return cmd_params(p);
    if (*census) return cmd_census(p, format, out, families, threads, timing);
    if (*verify) return cmd_verify(p, threads);
    if (*group) return cmd_group(p, family, want_census, want_center);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return kExitVerify;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerify;
  }
  return kExitInput;
}
