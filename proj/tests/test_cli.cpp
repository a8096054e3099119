#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <regex>

#include "doctest.h"
#include "emit.hpp"
#include "support.hpp"

using namespace arq;
using arq::test::fixture;
using arq::test::source_path;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run arq_cli(const std::string& args, const std::string& stdin_text = {}) {
  std::string cmd = std::string(ARQ_CLI_PATH) + " " + args + " 2>/dev/null";
  if (!stdin_text.empty()) {
    std::string tmp = std::string(ARQ_BINARY_DIR) + "/cli_stdin.json";
    std::FILE* f = std::fopen(tmp.c_str(), "w");
    std::fputs(stdin_text.c_str(), f);
    std::fclose(f);
    cmd += " < " + tmp;
  }
  Run r;
  std::FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fx(const std::string& name) { return source_path("fixtures/" + name + ".json"); }

std::size_t count(const std::string& s, const std::regex& re) {
  return std::distance(std::sregex_iterator(s.begin(), s.end(), re), std::sregex_iterator());
}

}  // namespace

TEST_CASE("spec syntax errors carry a position") {
  try {
    io::parse_spec("{\n  \"quiver\": [,\n}");
    FAIL("accepted malformed json");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Input);
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
}

TEST_CASE("specs with unknown vertices are rejected") {
  const char* s = R"({"quiver":{"vertices":["1"],"arrows":[{"name":"a","from":"1","to":"9"}]}})";
  CHECK_THROWS_AS(io::parse_spec(s), Error);
}

TEST_CASE("JSON round trip of a quiver") {
  ARQuiver q = ar_quiver(fixture("a3"));
  ARQuiver r = io::quiver_from_json(io::quiver_json(q));
  CHECK(quiver_differences(q, r).empty());
  CHECK(io::emit_json(q) == io::emit_json(r));
  REQUIRE(r.nodes.size() == q.nodes.size());
  for (std::size_t i = 0; i < q.nodes.size(); ++i) {
    CHECK(r.nodes[i].dimvec == q.nodes[i].dimvec);
    CHECK(io::flag_string(r.nodes[i].flags) == io::flag_string(q.nodes[i].flags));
  }
}

TEST_CASE("malformed quiver documents are input errors") {
  auto bad = io::ojson::parse(R"({"nodes":[{"id":0,"name":"x"}],"arrows":[{"from":0,"to":7}]})");
  try {
    io::quiver_from_json(bad);
    FAIL("accepted a dangling arrow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Input);
  }
}

TEST_CASE("empty quiver emits valid empty documents") {
  ARQuiver q;
  auto j = io::ojson::parse(io::emit_json(q));
  CHECK(j["nodes"].empty());
  CHECK(j["arrows"].empty());
  std::string dot = io::emit_dot(q);
  CHECK(dot.find("digraph") == 0);
  CHECK(count(dot, std::regex("->")) == 0);
  CHECK_NOTHROW(io::emit_text(q));
}

TEST_CASE("DOT output of the A3 AR quiver") {
  std::string dot = io::emit_dot(ar_quiver(fixture("a3")));
  CHECK(count(dot, std::regex(R"(n\d+ \[label=)")) == 6);
  CHECK(count(dot, std::regex(R"(-> n\d+;)")) == 6);
  CHECK(count(dot, std::regex("style=dashed")) == 3);
}

TEST_CASE("valued arrows are labelled in DOT") {
  ARQuiver q;
  q.nodes = {ARNode{0, "x", {1}, {}}, ARNode{1, "y", {2}, {}}};
  q.arrows = {ARArrow{0, 1, 1, 2}};
  CHECK(io::emit_dot(q).find("(1,2)") != std::string::npos);
}

TEST_CASE("cli: sub-ar on A3 has 17 nodes") {
  Run r = arq_cli("sub-ar " + fx("a3") + " --category mod --format json");
  REQUIRE(r.code == 0);
  CHECK(io::ojson::parse(r.out)["nodes"].size() == 17);
}

TEST_CASE("cli: gprj functor quiver of the dual numbers has 10 nodes") {
  Run r = arq_cli("gprj-functor-quiver " + fx("dualnumbers") + " --format json");
  REQUIRE(r.code == 0);
  auto j = io::ojson::parse(r.out);
  CHECK(j["nodes"].size() == 10);
  CHECK(j["tau"].size() == 3);
}

TEST_CASE("cli: counts table") {
  Run r = arq_cli("counts " + fx("a3"));
  CHECK(r.code == 0);
  CHECK(count(r.out, std::regex(" pass\n")) == 3);
  CHECK(r.out.find(" fail") == std::string::npos);
}

TEST_CASE("cli: reading the spec from stdin") {
  Run r = arq_cli("indecs - --format json", io::read_file(fx("dualnumbers")));
  REQUIRE(r.code == 0);
  CHECK(io::ojson::parse(r.out)["nodes"].size() == 2);
}

TEST_CASE("cli: exit codes") {
  CHECK(arq_cli("ar-quiver " + fx("a3")).code == 0);
  CHECK(arq_cli("ar-quiver /nonexistent/spec.json").code == 2);
  CHECK(arq_cli("no-such-verb " + fx("a3")).code == 2);
  CHECK(arq_cli("ar-quiver " + fx("a3") + " --format yaml").code == 2);
  CHECK(arq_cli("ar-quiver " + fx("a3") + " --max-count 2").code == 3);
  CHECK(arq_cli("ar-quiver -", R"({"quiver":{"vertices":["1"],"arrows":[{"name":"a","from":"1","to":"1"}]},"relations":["a*z"]})").code == 2);
  CHECK(arq_cli("verify " + fx("dualnumbers")).code == 0);
}

TEST_CASE("cli: verify output is deterministic") {
  Run a = arq_cli("verify " + fx("a3rel"));
  Run b = arq_cli("verify " + fx("a3rel"));
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("0 failures") != std::string::npos);
}

TEST_CASE("cli: stable-aus of A3") {
  Run r = arq_cli("stable-aus " + fx("a3") + " --format json");
  REQUIRE(r.code == 0);
  auto j = io::ojson::parse(r.out);
  CHECK(j["dimension"] == 5);
  CHECK(j["indecomposables"] == 5);
  CHECK(j["arrows"].size() == 2);
  CHECK(j["self_injective"] == false);
}

TEST_CASE("cli: gprj over the triangular fixture") {
  Run r = arq_cli("gprj " + fx("t2dualnumbers") + " --format json");
  REQUIRE(r.code == 0);
  CHECK(io::ojson::parse(r.out)["nodes"].size() == 5);
}
