#include <fstream>
#include <sstream>

#include "rmc/census.hpp"

namespace rmc {

using nlohmann::json;

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> opt_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

json triple_json(const std::array<std::vector<int64_t>, 3>& t) {
  return json{{"g1", t[0]}, {"g2", t[1]}, {"g3", t[2]}};
}

std::array<std::vector<int64_t>, 3> triple_from(const json& j) {
  return {j.at("g1").get<std::vector<int64_t>>(), j.at("g2").get<std::vector<int64_t>>(),
          j.at("g3").get<std::vector<int64_t>>()};
}

json class_json(const ClassRecord& c, bool map) {
  json j{{"id", c.id},
         {"representative", triple_json(c.representative)},
         {"rendered", json{{"g1", c.rendered[0]}, {"g2", c.rendered[1]}, {"g3", c.rendered[2]}}},
         {"orbit_size", c.orbit_size},
         {"surface_id", opt(c.surface_id)}};
  if (map) {
    j["chirality"] = c.chirality;
    j["partner_id"] = opt(c.partner_id);
  } else {
    j["extension_id"] = opt(c.extension_id);
  }
  return j;
}

ClassRecord class_from(const json& j, bool map) {
  ClassRecord c;
  c.id = j.at("id").get<int>();
  c.representative = triple_from(j.at("representative"));
  const json& r = j.at("rendered");
  c.rendered = {r.at("g1").get<std::string>(), r.at("g2").get<std::string>(), r.at("g3").get<std::string>()};
  c.orbit_size = j.at("orbit_size").get<uint64_t>();
  c.surface_id = opt_from<int>(j.at("surface_id"));
  if (map) {
    c.chirality = j.at("chirality").get<std::string>();
    c.partner_id = opt_from<int>(j.at("partner_id"));
  } else {
    c.extension_id = opt_from<int>(j.at("extension_id"));
  }
  return c;
}

std::string plain(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  if (s == "text") return ReportFormat::Text;
  throw InputError("unknown report format: " + s);
}

json to_json(const CensusReport& r) {
  json families = json::array();
  for (const FamilyReport& f : r.families) {
    json hyper = json::array(), maps = json::array(), refs = json::array();
    for (const ClassRecord& c : f.hypermaps) hyper.push_back(class_json(c, false));
    for (const ClassRecord& c : f.maps) maps.push_back(class_json(c, true));
    for (const ReferenceRecord& ref : f.reference_representatives)
      refs.push_back(json{{"label", ref.label}, {"triple", triple_json(ref.triple)}, {"class_id", opt(ref.class_id)}});
    families.push_back(json{
        {"tag", f.tag},
        {"order", f.order},
        {"signature", f.signature},
        {"aut_order", f.aut_order},
        {"raw_ske_count", f.raw_ske_count},
        {"hypermaps", json{{"class_count", f.hypermaps.size()}, {"surface_count", f.surface_count}, {"classes", hyper}}},
        {"maps", json{{"class_count", f.maps.size()}, {"classes", maps}}},
        {"reference_representatives", refs},
    });
  }
  json checks = json::array();
  for (const CheckResult& c : r.theorem_checks)
    checks.push_back(json{{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  json j{{"prime", r.prime},
         {"residue_mod5", r.residue_mod5},
         {"genus", r.genus},
         {"euler_characteristic", r.euler_characteristic},
         {"certified_empty", r.certified_empty},
         {"verdict", r.verdict},
         {"map_convention", r.map_convention},
         {"families", families},
         {"theorem_checks", checks}};
  if (r.elapsed_seconds) j["elapsed_seconds"] = *r.elapsed_seconds;
  return j;
}

CensusReport report_from_json(const json& j) {
  CensusReport r;
  r.prime = j.at("prime").get<int64_t>();
  r.residue_mod5 = j.at("residue_mod5").get<int>();
  r.genus = j.at("genus").get<int64_t>();
  r.euler_characteristic = j.at("euler_characteristic").get<int64_t>();
  r.certified_empty = j.at("certified_empty").get<bool>();
  r.verdict = j.at("verdict").get<std::string>();
  r.map_convention = j.at("map_convention").get<std::string>();
  for (const json& fj : j.at("families")) {
    FamilyReport f;
    f.tag = fj.at("tag").get<std::string>();
    f.order = fj.at("order").get<int64_t>();
    f.signature = fj.at("signature").get<std::string>();
    f.aut_order = fj.at("aut_order").get<uint64_t>();
    f.raw_ske_count = fj.at("raw_ske_count").get<uint64_t>();
    f.surface_count = fj.at("hypermaps").at("surface_count").get<int>();
    for (const json& c : fj.at("hypermaps").at("classes")) f.hypermaps.push_back(class_from(c, false));
    for (const json& c : fj.at("maps").at("classes")) f.maps.push_back(class_from(c, true));
    for (const json& ref : fj.at("reference_representatives"))
      f.reference_representatives.push_back(
          {ref.at("label").get<std::string>(), triple_from(ref.at("triple")), opt_from<int>(ref.at("class_id"))});
    r.families.push_back(std::move(f));
  }
  for (const json& c : j.at("theorem_checks"))
    r.theorem_checks.push_back({c.at("name").get<std::string>(), c.at("expected"), c.at("actual"), c.at("pass").get<bool>()});
  if (j.contains("elapsed_seconds")) r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
  return r;
}

std::string emit_report(const CensusReport& r, ReportFormat format) {
  std::ostringstream os;
  switch (format) {
    case ReportFormat::Json:
      os << to_json(r).dump(2) << '\n';
      break;
    case ReportFormat::Csv:
      os << "family,signature,kind,class_id,representative,chirality,surface_id\n";
      for (const FamilyReport& f : r.families) {
        auto row = [&](const ClassRecord& c, const char* kind) {
          const std::string rep = c.rendered[0] + "; " + c.rendered[1] + "; " + c.rendered[2];
          os << csv_field(f.tag) << ',' << csv_field(f.signature) << ',' << kind << ',' << c.id << ','
             << csv_field(rep) << ',' << c.chirality << ',' << (c.surface_id ? std::to_string(*c.surface_id) : "")
             << '\n';
        };
        for (const ClassRecord& c : f.hypermaps) row(c, "hypermap");
        for (const ClassRecord& c : f.maps) row(c, "map");
      }
      break;
    case ReportFormat::Text: {
      os << "p = " << r.prime << " (p = " << r.residue_mod5 << " mod 5), genus " << r.genus
         << ", Euler characteristic " << r.euler_characteristic << '\n';
      os << r.verdict << '\n';
      os << "maps: " << r.map_convention << "\n\n";
      for (const FamilyReport& f : r.families) {
        os << f.tag << "  order " << f.order << "  signature " << f.signature << "  |Aut| " << f.aut_order
           << "  skes " << f.raw_ske_count << '\n';
        for (const ClassRecord& c : f.hypermaps)
          os << "  hypermap " << c.id << ": (" << c.rendered[0] << ", " << c.rendered[1] << ", " << c.rendered[2]
             << ")  surface " << (c.surface_id ? std::to_string(*c.surface_id) : "-") << '\n';
        for (const ClassRecord& c : f.maps) {
          os << "  map " << c.id << ": (" << c.rendered[0] << ", " << c.rendered[1] << ", " << c.rendered[2] << ")  "
             << c.chirality;
          if (c.partner_id) os << " with " << *c.partner_id;
          os << '\n';
        }
      }
      os << '\n';
      for (const CheckResult& c : r.theorem_checks)
        os << c.name << ": expected " << plain(c.expected) << ", actual " << plain(c.actual) << ", "
           << (c.pass ? "PASS" : "FAIL") << '\n';
      if (r.elapsed_seconds) os << "\nelapsed " << *r.elapsed_seconds << " s\n";
      break;
    }
  }
  return os.str();
}

void write_report(const CensusReport& r, ReportFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << emit_report(r, format);
  if (!out) throw std::runtime_error("failed writing " + path);
}

std::vector<std::string> validate_report(const CensusReport& r) {
  std::vector<std::string> problems;
  if (r.euler_characteristic != 2 - 2 * r.genus) problems.push_back("euler_characteristic != 2 - 2 genus");
  const PrimeParams params = derive_params(r.prime);
  for (const FamilyReport& f : r.families) {
    const GroupSpec G(params, parse_family(f.tag));
    const Signature& sig = G.d_present() ? kSig2510 : kSig555;
    auto check = [&](const ClassRecord& c) {
      Ske k;
      k.signature = sig;
      for (size_t i = 0; i < 3; ++i) k.triple[i] = from_exponent_tuple(G, c.representative[i]);
      const std::string why = ske_violation(G, k);
      if (!why.empty()) problems.push_back(f.tag + " class " + std::to_string(c.id) + ": " + why);
    };
    for (const ClassRecord& c : f.hypermaps) check(c);
    for (const ClassRecord& c : f.maps) check(c);
  }
  return problems;
}

}  // namespace rmc
