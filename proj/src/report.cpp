#include "symlen/report.hpp"

#include <sstream>

#include "symlen/text.hpp"

namespace symlen {

using nlohmann::json;

json to_json(const Place& place) { return place.to_string(); }

json to_json(const ResidueVector& v) {
  json classes = json::array();
  for (const auto& [place, value] : v.classes) {
    classes.push_back(json{{"place", to_json(place)}, {"degree", place.degree()}, {"value", value}});
  }
  return json{{"n", v.n}, {"classes", classes}};
}

json to_json(const KummerVector& v) {
  json k = json::array();
  for (const auto& e : v.k) k.push_back(encode(e));
  return json{{"f", encode(v.f)}, {"k", k}};
}

json to_json(const ZeroCertificate& cert) {
  json partial = json::array();
  for (const auto& x : cert.partial.N) partial.push_back(encode(x));
  return json{{"method", cert.method},   {"v", to_json(cert.v)},       {"norm", encode(cert.norm)},
              {"partial", partial},      {"witness", cert.witness},    {"degree", cert.degree},
              {"candidates", cert.candidates}};
}

json to_json(const ReductionReport& rep) {
  json certs = json::array();
  for (const auto& c : rep.certificates) certs.push_back(to_json(c));
  json j{{"initial_count", rep.initial_count},
         {"final_count", rep.final_count},
         {"target", rep.target},
         {"oracle_checked", rep.oracle_checked},
         {"oracle_equal", rep.oracle_equal},
         {"budget_exhausted", rep.budget_exhausted},
         {"message", rep.message},
         {"certificates", certs},
         {"proof", to_json(rep.proof)}};
  if (!rep.layers.empty()) {
    json layers = json::array();
    for (const auto& l : rep.layers) layers.push_back(to_json(l));
    j["layers"] = layers;
  }
  if (!rep.sub_reports.empty()) {
    json subs = json::array();
    for (const auto& s : rep.sub_reports) subs.push_back(to_json(s));
    j["sub_reports"] = subs;
  }
  return j;
}

json invariants_json(const SymbolProduct& p) {
  const ResidueVector v = residue_vector(p);
  return json{{"product", to_json(p)},
              {"residues", to_json(v)},
              {"exponent", exponent(p)},
              {"index", index(p)},
              {"split", v.trivial()},
              {"reciprocity", reciprocity_holds(v)}};
}

std::string render_plain(const ZeroCertificate& cert) {
  std::ostringstream os;
  os << "zero (" << cert.method << ", degree " << cert.degree << ", " << cert.candidates << " candidates)\n";
  os << "  f = " << cert.v.f.to_string() << "\n";
  for (std::size_t j = 0; j < cert.v.k.size(); ++j) {
    os << "  k" << j + 1 << " = [";
    for (std::size_t i = 0; i < cert.v.k[j].c.size(); ++i) os << (i ? ", " : "") << cert.v.k[j].c[i].to_string();
    os << "]\n";
  }
  for (std::size_t j = 0; j < cert.partial.N.size(); ++j) {
    os << "  N" << j + 1 << " = " << cert.partial.N[j].to_string() << "\n";
  }
  return os.str();
}

std::string render_plain(const ReductionReport& rep) {
  std::ostringstream os;
  os << "input: " << to_string(rep.proof.initial) << "\n";
  for (const auto& c : rep.certificates) os << render_plain(c);
  for (const auto& s : rep.proof.steps) {
    SymbolProduct after{rep.proof.initial.backend, rep.proof.initial.kind, s.after};
    os << (s.label.empty() ? "" : s.label + " ") << s.rule << " [";
    for (std::size_t i = 0; i < s.index.size(); ++i) os << (i ? "," : "") << s.index[i];
    os << "]";
    if (s.params.contains("reason")) os << " " << s.params["reason"].get<std::string>();
    os << "\n  = " << to_string(after) << "\n";
  }
  os << "result: " << to_string(rep.proof.final) << " (" << rep.final_count << " symbol"
     << (rep.final_count == 1 ? "" : "s") << ", target " << rep.target << ")\n";
  os << "oracle: " << (rep.oracle_checked ? (rep.oracle_equal ? "equal" : "DIFFERENT") : "not checked") << "\n";
  if (rep.budget_exhausted) os << "budget exhausted\n";
  if (!rep.message.empty()) os << "note: " << rep.message << "\n";
  return os.str();
}

}  // namespace symlen
