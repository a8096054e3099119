#include "spec_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace arq::io {

using nlohmann::json;

namespace {

std::string position(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::Input, where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string as_name(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(ErrorKind::Input, where + ": expected a name");
}

}  // namespace

AlgebraSpec parse_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Input, "syntax error at " + position(text, e.byte ? e.byte - 1 : 0));
  }
  AlgebraSpec spec;
  if (doc.contains("field")) {
    const json& f = doc.at("field");
    const json& c = member(f, "char", "field");
    if (!c.is_number_unsigned()) fail(ErrorKind::Input, "field.char must be a positive integer");
    auto v = c.get<unsigned long long>();
    if (v >= (1ull << 31)) fail(ErrorKind::Input, "field.char too large");
    spec.characteristic = u32(v);
  }
  const json& q = member(doc, "quiver", "spec");
  for (auto& v : member(q, "vertices", "quiver")) spec.quiver.vertices.push_back(as_name(v, "quiver.vertices"));
  if (q.contains("arrows"))
    for (auto& a : q.at("arrows")) {
      Arrow arr;
      arr.name = as_name(member(a, "name", "arrow"), "arrow.name");
      arr.from = spec.quiver.vertex_index(as_name(member(a, "from", "arrow " + arr.name), "arrow.from"));
      arr.to = spec.quiver.vertex_index(as_name(member(a, "to", "arrow " + arr.name), "arrow.to"));
      spec.quiver.arrows.push_back(arr);
    }
  if (doc.contains("relations"))
    for (auto& r : doc.at("relations")) {
      if (!r.is_string()) fail(ErrorKind::Input, "relations must be strings");
      spec.relations.push_back(parse_relation(r.get<std::string>(), spec.quiver));
    }
  if (doc.contains("path_cap")) spec.path_cap = doc.at("path_cap").get<std::size_t>();
  validate_spec(spec);
  return spec;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Input, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AlgebraSpec load_spec(const std::string& path) { return parse_spec(read_file(path)); }

}  // namespace arq::io
