#include "coxinv/report.hpp"

#include "json.hpp"

#include <sstream>

namespace coxinv {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string profiles_csv(const GroupAnalysis& ga) {
  std::ostringstream out;
  out << "type,degree,label,order_factored,Gminus,TildeGminus,Gplus,TildeGplus,gamma\n";
  std::string type = ga.root_system().irreducible().to_string();
  for (const auto& p : ga.profiles()) {
    out << type << ',' << p.degree << ',' << csv_field(p.label) << ',' << factored(p.order) << ','
        << p.g_minus.to_string() << ',' << p.tilde_minus.to_string() << ',' << p.g_plus.to_string() << ','
        << p.tilde_plus.to_string() << ',' << csv_field(p.gamma.printed) << '\n';
  }
  return out.str();
}

std::string profiles_json(const GroupAnalysis& ga) {
  const RootSystem& rs = ga.root_system();
  nlohmann::json j;
  j["schema_version"] = 1;
  j["type"] = rs.irreducible().to_string();
  j["canonical_type"] = rs.type().to_string();
  j["group_order"] = rs.type().order().get_str();
  j["classes"] = nlohmann::json::array();
  for (std::size_t i = 0; i < ga.size(); ++i) {
    const ClassAnalysis& a = ga[i];
    const CentralizerProfile& p = a.profile;
    nlohmann::json c;
    c["degree"] = p.degree;
    c["label"] = p.label;
    c["class_size"] = p.class_size.get_str();
    c["order"] = p.order.get_str();
    c["order_factored"] = factored(p.order);
    c["Gminus"] = p.g_minus.to_string();
    c["TildeGminus"] = p.tilde_minus.to_string();
    c["Gplus"] = p.g_plus.to_string();
    c["TildeGplus"] = p.tilde_plus.to_string();
    c["TildeGminus_reflection_generated"] = p.tilde_minus_reflection_generated;
    c["TildeGplus_reflection_generated"] = p.tilde_plus_reflection_generated;
    c["order_G1"] = p.order_g1.get_str();
    c["gamma"] = p.gamma.printed;
    c["gamma_order"] = p.gamma.order;
    c["gamma_structure"] = p.gamma.structure.label;
    c["gamma_identified"] = p.gamma.identified;
    c["cube"] = ga.census()[a.index].cube.roots;
    j["classes"].push_back(std::move(c));
  }
  return j.dump(2);
}

}  // namespace coxinv
