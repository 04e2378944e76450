// Runs the eleven acceptance criteria and prints one PASS/FAIL line each.
//
//   acceptance <path-to-rmcensus> [--large]

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "rmc/census.hpp"
#include "rmc/presentation.hpp"

using namespace rmc;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

const CheckResult* find_check(const CensusReport& r, const std::string& name) {
  for (const CheckResult& c : r.theorem_checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool check_passes(const CensusReport& r, const std::string& name) {
  const CheckResult* c = find_check(r, name);
  return c && c->pass;
}

std::string actual(const CensusReport& r, const std::string& name) {
  const CheckResult* c = find_check(r, name);
  return c ? c->actual.dump() : "missing";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string run_command(const std::string& cmd, int& status) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  if (!pipe) {
    status = -1;
    return out;
  }
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe.get())) > 0) out.append(buf, n);
  status = pclose(pipe.release());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <rmcensus> [--large]\n";
    return 2;
  }
  const std::string cli = argv[1];
  const bool large = argc > 2 && std::string(argv[2]) == "--large";

  CensusReport r11, r19;
  double t11 = 0, t19 = 0;
  int failures = 0;

  auto criterion = [&](int n, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = seconds_since(t0);
    if (!o.pass) ++failures;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << "  ("
         << dt << " s)";
    std::cout << line.str() << std::endl;
  };

  criterion(1, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    r11 = run_census(11, {{}, 8, false});
    t11 = seconds_since(t0);
    const bool ok = check_passes(r11, "maps_type_5_10_total") && check_passes(r11, "reflexive_maps_total") &&
                    check_passes(r11, "chiral_pairs_total") && t11 < 60;
    return Outcome{ok, "maps " + actual(r11, "maps_type_5_10_total") + ", reflexive " +
                           actual(r11, "reflexive_maps_total") + ", chiral pairs " + actual(r11, "chiral_pairs_total")};
  });

  criterion(2, [&] {
    bool ok = true;
    std::string detail;
    for (const char* tag : {"HatG1", "HatG_s_s2", "HatG_s_s4"}) {
      const std::string t(tag);
      ok = ok && check_passes(r11, "maps_" + t) && check_passes(r11, "chiral_pairs_" + t) &&
           check_passes(r11, "reflexive_" + t);
      detail += t + " " + actual(r11, "maps_" + t) + "/" + actual(r11, "chiral_pairs_" + t) + "/" +
                actual(r11, "reflexive_" + t) + " ";
    }
    return Outcome{ok, detail + "(maps/chiral pairs/reflexive)"};
  });

  criterion(3, [&] {
    bool ok = true;
    std::string detail;
    for (const char* tag : {"G1", "G_s_s2", "G_s_s4"}) {
      const std::string t(tag);
      ok = ok && check_passes(r11, "hypermaps_" + t) && check_passes(r11, "surfaces_" + t) &&
           check_passes(r11, "hypermaps_per_surface_" + t) && check_passes(r11, "restriction_covers_hypermaps_" + t);
      detail += t + " " + actual(r11, "hypermaps_" + t) + " on " + actual(r11, "surfaces_" + t) + " ";
    }
    return Outcome{ok, detail};
  });

  criterion(4, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    r19 = run_census(19, {{}, 8, false});
    t19 = seconds_since(t0);
    const auto fams = admissible_families(derive_params(19));
    const bool only_g0 = fams == std::vector<Family>{Family::G0, Family::HatG0};
    const bool ok = only_g0 && check_passes(r19, "maps_type_5_10_total") && check_passes(r19, "reflexive_maps_total") &&
                    check_passes(r19, "hypermaps_G0") && check_passes(r19, "surfaces_G0") && t19 < 300;
    return Outcome{ok, "maps " + actual(r19, "maps_type_5_10_total") + ", reflexive " +
                           actual(r19, "reflexive_maps_total") + ", hypermaps " + actual(r19, "hypermaps_G0") +
                           " on " + actual(r19, "surfaces_G0")};
  });

  criterion(5, [&] {
    std::vector<int64_t> primes{11};
    if (large) primes.push_back(31);
    bool ok = true;
    std::string detail;
    for (int64_t p : primes)
      for (Family f : {Family::G_1_s, Family::G_s_s}) {
        const size_t n = enumerate_skes(GroupSpec(derive_params(p), f), kSig555, 8).size();
        ok = ok && n == 0;
        detail += std::string(family_tag(f)) + "@" + std::to_string(p) + " " + std::to_string(n) + " ";
      }
    return Outcome{ok, detail};
  });

  criterion(6, [&] {
    bool ok = true;
    std::string detail;
    for (int64_t p : {11, 19}) {
      const auto sigs = admissible_signatures(5 * p * p, 1 + p * p, 5);
      ok = ok && sigs == std::vector<Signature>{kSig555};
      detail += "p=" + std::to_string(p) + " {";
      for (const Signature& s : sigs) detail += s.to_string();
      detail += "} ";
    }
    return Outcome{ok, detail};
  });

  criterion(7, [&] {
    bool ok = true;
    std::string detail;
    for (const CensusReport* r : {&r11, &r19})
      for (const CheckResult& c : r->theorem_checks)
        if (c.name.rfind("extensions_", 0) == 0) {
          ok = ok && c.pass;
          detail += c.name.substr(11) + " " + c.actual.dump() + "/" + c.expected.dump() + " ";
        }
    for (const CensusReport* r : {&r11, &r19}) {
      const CheckResult* flag = find_check(*r, "exists_surface_with_full_group_5p2");
      ok = ok && flag && flag->actual == false;
    }
    return Outcome{ok, detail + "full-group flag false"};
  });

  criterion(8, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    const GroupSpec H(derive_params(19), Family::HatG0);
    int violations = 0, instances = 0;
    for (int l = 1; l <= 2; ++l)
      for (int64_t alpha = 0; alpha < 19; ++alpha)
        for (int64_t beta = 0; beta < 19; ++beta) {
          ++instances;
          if (!lemma_matrix_check(H, alpha, beta, l).holds) ++violations;
        }
    const bool ok = violations == 0 && instances == 2 * 19 * 19 && seconds_since(t0) < 30;
    return Outcome{ok, std::to_string(instances) + " instances, " + std::to_string(violations) + " violations"};
  });

  criterion(9, [&] {
    bool ok = true;
    int total = 0;
    for (int64_t p : {11, 19}) {
      const PrimeParams P = derive_params(p);
      for (Family f : admissible_families(P)) {
        if (!is_extended(f)) continue;
        const int n = hyperellipticity_check(GroupSpec(P, f)).central_involutions;
        total += n;
        ok = ok && n == 0;
      }
    }
    return Outcome{ok, std::to_string(total) + " central involutions"};
  });

  criterion(10, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    bool presentations = true, mirrors = true, closed = true, orbits = true;
    uint64_t skes_checked = 0;
    for (int64_t p : {11, 19}) {
      const PrimeParams P = derive_params(p);
      for (Family f : admissible_families(P)) {
        const GroupSpec G(P, f);
        presentations = presentations && verify_presentation(G).ok;
        const AutomorphismGroup aut(G);
        closed = closed && verify_closed(aut).closed;
        std::vector<Ske> skes = enumerate_skes(G, G.d_present() ? kSig2510 : kSig555, 8);
        for (const Ske& k : skes) mirrors = mirrors && mirror(G, mirror(G, k)) == k;
        skes_checked += skes.size();
        const uint64_t raw = skes.size();
        const Classification cl = orbit_classify(G, std::move(skes), aut);
        uint64_t sum = 0;
        for (const SkeClass& c : cl.classes) {
          sum += c.orbit_size;
          orbits = orbits && aut.size() % c.orbit_size == 0;
        }
        orbits = orbits && sum == raw;
      }
    }
    const double dt = seconds_since(t0);
    const bool ok = presentations && mirrors && closed && orbits && dt < 120;
    std::string detail = std::string("presentations ") + (presentations ? "ok" : "broken") + ", mirror " +
                         (mirrors ? "ok" : "broken") + " on " + std::to_string(skes_checked) + " skes, Aut " +
                         (closed ? "closed" : "not closed") + ", orbits " + (orbits ? "ok" : "broken");
    return Outcome{ok, detail};
  });

  criterion(11, [&] {
    int s1 = 0, s2 = 0, s3 = 0;
    const std::string base = "\"" + cli + "\" census -p 11 --format json";
    const std::string a = run_command(base + " --threads 1", s1);
    const std::string b = run_command(base + " --threads 1", s2);
    const std::string c = run_command(base + " --threads 4", s3);
    const bool ok = s1 == 0 && s2 == 0 && s3 == 0 && !a.empty() && a == b && a == c;
    return Outcome{ok, std::to_string(a.size()) + " bytes, runs " + (a == b ? "identical" : "differ") +
                           ", threads 1 vs 4 " + (a == c ? "identical" : "differ")};
  });

  std::cout << (11 - failures) << "/11 criteria pass\n";
  return failures == 0 ? 0 : 1;
}
