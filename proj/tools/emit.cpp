#include "emit.hpp"

#include <map>
#include <sstream>

namespace arq::io {

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string valuation(const ARArrow& a) {
  if (a.a == 1 && a.b == 1) return {};
  return "(" + std::to_string(a.a) + "," + std::to_string(a.b) + ")";
}

}  // namespace

std::string flag_string(const NodeFlags& f) {
  std::string s;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!s.empty()) s += ",";
    s += name;
  };
  add(f.projective, "projective");
  add(f.injective, "injective");
  add(f.ext_projective, "ext_projective");
  add(f.ext_injective, "ext_injective");
  add(f.gprj, "gprj");
  return s;
}

ojson quiver_json(const ARQuiver& q) {
  ojson doc = ojson::object();
  doc["nodes"] = ojson::array();
  for (auto& n : q.nodes) {
    ojson node = ojson::object();
    node["id"] = n.id;
    node["name"] = n.label;
    node["dim_vector"] = n.dimvec;
    ojson flags = ojson::object();
    flags["projective"] = n.flags.projective;
    flags["injective"] = n.flags.injective;
    flags["ext_projective"] = n.flags.ext_projective;
    flags["ext_injective"] = n.flags.ext_injective;
    flags["gprj"] = n.flags.gprj;
    node["flags"] = flags;
    doc["nodes"].push_back(node);
  }
  doc["arrows"] = ojson::array();
  for (auto& a : q.arrows) {
    ojson arrow = ojson::object();
    arrow["from"] = q.nodes[a.from].id;
    arrow["to"] = q.nodes[a.to].id;
    arrow["valuation"] = {a.a, a.b};
    doc["arrows"].push_back(arrow);
  }
  doc["tau"] = ojson::array();
  for (auto& t : q.tau) {
    ojson link = ojson::object();
    link["from"] = q.nodes[t.from].id;
    link["to"] = q.nodes[t.to].id;
    doc["tau"].push_back(link);
  }
  return doc;
}

ARQuiver quiver_from_json(const ojson& j) {
  ARQuiver q;
  std::map<std::size_t, std::size_t> pos;
  try {
    for (auto& n : j.at("nodes")) {
      ARNode node;
      node.id = q.nodes.size();
      pos[n.at("id").get<std::size_t>()] = node.id;
      node.label = n.at("name").get<std::string>();
      node.dimvec = n.at("dim_vector").get<std::vector<std::size_t>>();
      const auto& f = n.at("flags");
      node.flags.projective = f.at("projective").get<bool>();
      node.flags.injective = f.at("injective").get<bool>();
      node.flags.ext_projective = f.at("ext_projective").get<bool>();
      node.flags.ext_injective = f.at("ext_injective").get<bool>();
      node.flags.gprj = f.at("gprj").get<bool>();
      q.nodes.push_back(node);
    }
    for (auto& a : j.at("arrows")) {
      ARArrow arrow;
      arrow.from = pos.at(a.at("from").get<std::size_t>());
      arrow.to = pos.at(a.at("to").get<std::size_t>());
      arrow.a = a.at("valuation").at(0).get<std::size_t>();
      arrow.b = a.at("valuation").at(1).get<std::size_t>();
      q.arrows.push_back(arrow);
    }
    for (auto& t : j.at("tau")) q.tau.push_back(TauLink{pos.at(t.at("from").get<std::size_t>()), pos.at(t.at("to").get<std::size_t>())});
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Input, std::string("malformed quiver document: ") + e.what());
  } catch (const std::out_of_range&) {
    fail(ErrorKind::Input, "malformed quiver document: unknown node id");
  }
  return q;
}

std::string emit_json(const ARQuiver& q) { return quiver_json(q).dump(2) + "\n"; }

std::string emit_dot(const ARQuiver& q, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n";
  out << "  rankdir=LR;\n";
  for (auto& n : q.nodes)
    out << "  n" << n.id << " [label=\"" << dot_escape(n.label) << "\\n" << dimvec_string(n.dimvec) << "\"];\n";
  for (auto& a : q.arrows) {
    out << "  n" << q.nodes[a.from].id << " -> n" << q.nodes[a.to].id;
    std::string v = valuation(a);
    if (!v.empty()) out << " [label=\"" << v << "\"]";
    out << ";\n";
  }
  for (auto& t : q.tau)
    out << "  n" << q.nodes[t.from].id << " -> n" << q.nodes[t.to].id << " [style=dashed, constraint=false];\n";
  out << "}\n";
  return out.str();
}

std::string emit_text(const ARQuiver& q) {
  std::ostringstream out;
  out << "nodes " << q.nodes.size() << "\n";
  for (auto& n : q.nodes) {
    out << "  " << n.label << " " << dimvec_string(n.dimvec);
    std::string f = flag_string(n.flags);
    if (!f.empty()) out << " [" << f << "]";
    out << "\n";
  }
  out << "arrows " << q.arrows.size() << "\n";
  for (auto& a : q.arrows) out << "  " << q.nodes[a.from].label << " -> " << q.nodes[a.to].label << valuation(a) << "\n";
  out << "tau " << q.tau.size() << "\n";
  for (auto& t : q.tau) out << "  tau " << q.nodes[t.from].label << " = " << q.nodes[t.to].label << "\n";
  return out.str();
}

}  // namespace arq::io
