#include "doctest.h"
#include "support.hpp"

using namespace arq;
using namespace arq::test;

namespace {

void check_shape(const ARQuiver& q, const std::string& golden_name) {
  Shape got = shape_of(q), want = golden(golden_name);
  CHECK(got.nodes == want.nodes);
  CHECK(got.arrows == want.arrows);
  CHECK(got.tau == want.tau);
}

}  // namespace

TEST_CASE("submodule category of A3 matches the golden quiver") {
  AddXContext x = module_context(fixture("a3"));
  SXQuiver q = assemble_sx_quiver(x, Ambient::Modules);
  REQUIRE(q.agree());
  check_shape(q.fast, "a3_submodule_quiver");
  check_shape(q.oracle, "a3_submodule_quiver");
}

TEST_CASE("Gorenstein projectives over the triangular fixture match the golden quiver") {
  AddXContext y = gprj_context(fixture("t2dualnumbers"));
  rename_t2_dual(y);
  SXQuiver q = assemble_sx_quiver(y, Ambient::Gprj);
  REQUIRE(q.agree());
  check_shape(q.fast, "t2_gprj_quiver");
  check_shape(q.oracle, "t2_gprj_quiver");
}

TEST_CASE("Gprj functor quiver matches the golden quiver") {
  AlgPtr lam = fixture("t2dualnumbers");
  AddXContext x = module_context(lam), y = gprj_context(lam);
  rename_t2_dual(x);
  rename_t2_dual(y);
  FunctorQuiver q = gprj_functor_quiver(x, y);
  label_by_extension(q, x, y);
  REQUIRE(q.agree());
  check_shape(q.fast, "gprj_functor_quiver");
  check_shape(q.oracle, "gprj_functor_quiver");
}

TEST_CASE("bracket normalization") {
  CHECK(normalize_label("P2[S2+P1]") == "P2[P1+S2]");
  CHECK(normalize_label("[b+a][d+c]") == "[a+b][c+d]");
  CHECK(normalize_label("(-,G1)") == "(-,G1)");
}
