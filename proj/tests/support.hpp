#pragma once

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arq/morphcat.hpp"
#include "json.hpp"
#include "spec_io.hpp"

namespace arq::test {

inline std::string source_path(const std::string& rel) { return std::string(ARQ_SOURCE_DIR) + "/" + rel; }

inline AlgPtr fixture(const std::string& name) {
  return build_algebra(io::load_spec(source_path("fixtures/" + name + ".json")));
}

inline AlgebraSpec spec_of(const std::string& json) { return io::parse_spec(json); }

// summand with the given label, e.g. "S2" over A3
inline FDModule named(const std::vector<FDModule>& mods, const std::string& label) {
  for (auto& m : mods)
    if (default_label(m) == label) return m;
  fail(ErrorKind::Internal, "no module labelled " + label);
}

inline std::size_t summand_named(const AddXContext& ctx, const std::string& name) {
  for (std::size_t i = 0; i < ctx.size(); ++i)
    if (ctx.names[i] == name) return i;
  fail(ErrorKind::Internal, "no summand named " + name);
}

// names used for the dual-number triangular algebra, keyed by dimension vector
inline std::string t2_dual_name(const FDModule& m, bool projective) {
  std::string s = dimvec_string(m.dimvec());
  if (projective) return s == "20" ? "P1" : "P2";
  if (s == "10") return "G3";
  if (s == "11") return "G1";
  if (s == "21") return "G2";
  if (s == "01") return "M";
  if (s == "12") return "N";
  if (s == "22") return "T";
  if (s == "02") return "U";
  return s;
}

inline void rename_t2_dual(AddXContext& ctx) {
  for (std::size_t i = 0; i < ctx.size(); ++i) ctx.names[i] = t2_dual_name(ctx.summands[i], ctx.projective_summand(i));
}

// "A[x+y]" with the bracket contents sorted, so orderings compare equal
inline std::string normalize_label(const std::string& s) {
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '[') {
      out += s[i++];
      continue;
    }
    std::size_t j = s.find(']', i);
    std::vector<std::string> parts;
    std::stringstream ss(s.substr(i + 1, j - i - 1));
    for (std::string p; std::getline(ss, p, '+');) parts.push_back(p);
    std::sort(parts.begin(), parts.end());
    out += '[';
    for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? "+" : "") + parts[k];
    out += ']';
    i = j + 1;
  }
  return out;
}

struct Shape {
  std::set<std::string> nodes;
  std::multiset<std::pair<std::string, std::string>> arrows, tau;
};

inline Shape shape_of(const ARQuiver& q) {
  Shape s;
  auto lab = [&](std::size_t id) { return normalize_label(q.nodes[id].label); };
  for (auto& n : q.nodes) s.nodes.insert(normalize_label(n.label));
  for (auto& a : q.arrows)
    for (std::size_t k = 0; k < a.a; ++k) s.arrows.insert({lab(a.from), lab(a.to)});
  for (auto& t : q.tau) s.tau.insert({lab(t.from), lab(t.to)});
  return s;
}

inline Shape golden(const std::string& name) {
  std::ifstream in(source_path("golden/" + name + ".json"));
  nlohmann::json j = nlohmann::json::parse(in);
  Shape s;
  for (auto& n : j["nodes"]) s.nodes.insert(normalize_label(n.get<std::string>()));
  for (auto& a : j["arrows"]) s.arrows.insert({normalize_label(a["from"]), normalize_label(a["to"])});
  for (auto& t : j["tau"]) s.tau.insert({normalize_label(t["from"]), normalize_label(t["to"])});
  return s;
}

}  // namespace arq::test
