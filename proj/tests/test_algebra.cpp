#include "doctest.h"
#include "support.hpp"

using namespace arq;
using arq::test::fixture;
using arq::test::spec_of;

namespace {

const char* kA3Rel = R"({"quiver":{"vertices":["1","2","3"],
  "arrows":[{"name":"a","from":"1","to":"2"},{"name":"b","from":"2","to":"3"}]},"relations":["a*b"]})";

const char* kThreeCycle = R"({"quiver":{"vertices":["1","2","3"],
  "arrows":[{"name":"a","from":"1","to":"2"},{"name":"b","from":"2","to":"3"},{"name":"c","from":"3","to":"1"}]},
  "relations":["a*b","b*c","c*a"]})";

const char* kSemisimple = R"({"quiver":{"vertices":["1","2","3"],"arrows":[]}})";

}  // namespace

TEST_CASE("build_algebra dimensions") {
  CHECK(fixture("a3")->dim == 6);
  CHECK(build_algebra(spec_of(kA3Rel))->dim == 5);
  CHECK(fixture("dualnumbers")->dim == 2);
  CHECK(check_associative(*fixture("a3")));
  CHECK(check_associative(*build_algebra(spec_of(kThreeCycle))));
}

TEST_CASE("relations naming unknown arrows are rejected") {
  const char* bad = R"({"quiver":{"vertices":["1"],"arrows":[{"name":"a","from":"1","to":"1"}]},"relations":["a*z"]})";
  try {
    io::parse_spec(bad);
    FAIL("accepted a relation with an unknown arrow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Input);
    CHECK(std::string(e.what()).find('z') != std::string::npos);
  }
}

TEST_CASE("opposite") {
  AlgPtr d = fixture("dualnumbers");
  AlgPtr dop = opposite(d);
  CHECK(dop->dim == 2);
  CHECK(check_associative(*dop));

  AlgPtr a3 = fixture("a3");
  Quiver q = gabriel_quiver(opposite(a3));
  REQUIRE(q.vertices.size() == 3);
  CHECK(q.arrows.size() == 2);
  CHECK(q.multiplicity(1, 0) == 1);
  CHECK(q.multiplicity(2, 1) == 1);
  CHECK(q.multiplicity(0, 1) == 0);
}

TEST_CASE("jacobson_radical") {
  CHECK(jacobson_radical(build_algebra(spec_of(kSemisimple))).cols() == 0);
  AlgPtr d = fixture("dualnumbers");
  CHECK(jacobson_radical(d).cols() == 1);
  CHECK(loewy_length(d) == 2);
  CHECK(jacobson_radical(build_algebra(spec_of(kA3Rel))).cols() == 2);
}

TEST_CASE("primitive idempotents of a bound quiver algebra are the vertices") {
  AlgPtr a3 = fixture("a3");
  auto idem = primitive_idempotents(a3);
  CHECK(idem.size() == 3);
  for (std::size_t i = 0; i < idem.size(); ++i)
    for (std::size_t j = 0; j < idem.size(); ++j) {
      auto prod = a3->product(idem[i], idem[j]);
      CHECK(prod == (i == j ? idem[i] : std::vector<u32>(a3->dim, 0)));
    }
}

TEST_CASE("primitive idempotents of a full matrix algebra") {
  // End(P + P) for a local P is the 2x2 matrix algebra
  const u32 p = kDefaultPrime;
  std::vector<u32> table(4 * 4 * 4, 0);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t l = 0; l < 2; ++l) table[((i * 2 + j) * 4 + (j * 2 + l)) * 4 + (i * 2 + l)] = 1;
  AlgPtr m2 = algebra_from_table(p, 4, table, {"e11", "e12", "e21", "e22"});
  CHECK(primitive_idempotents(m2).size() == 2);
  CHECK(jacobson_radical(m2).cols() == 0);
}

TEST_CASE("gabriel_quiver") {
  Quiver q = gabriel_quiver(fixture("dualnumbers"));
  CHECK(q.vertices.size() == 1);
  CHECK(q.multiplicity(0, 0) == 1);

  Quiver cyc = gabriel_quiver(build_algebra(spec_of(kThreeCycle)));
  CHECK(cyc.arrows.size() == 3);
  CHECK(cyc.multiplicity(0, 1) == 1);
  CHECK(cyc.multiplicity(1, 2) == 1);
  CHECK(cyc.multiplicity(2, 0) == 1);
}

TEST_CASE("is_self_injective") {
  CHECK(is_self_injective(fixture("dualnumbers")));
  CHECK_FALSE(is_self_injective(fixture("a3")));
  CHECK(is_self_injective(build_algebra(spec_of(kThreeCycle))));
}

TEST_CASE("small fields are unsupported for the radical") {
  const char* s = R"({"field":{"char":2},"quiver":{"vertices":["1","2","3"],
    "arrows":[{"name":"a","from":"1","to":"2"},{"name":"b","from":"2","to":"3"}]}})";
  AlgPtr a = build_algebra(spec_of(s));
  try {
    jacobson_radical(algebra_from_table(a->p, a->dim, a->table, a->labels));
    FAIL("radical computed over F_2");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unsupported);
  }
}

TEST_CASE("triangular algebra of the dual numbers is the second fixture") {
  AlgPtr t = triangular(fixture("dualnumbers"));
  AlgPtr f = fixture("t2dualnumbers");
  CHECK(t->dim == f->dim);
  CHECK(t->nv == 2);
  CHECK(all_indecomposables(t).size() == all_indecomposables(f).size());
}
