#include "doctest.h"
#include "support.hpp"

using namespace arq;
using arq::test::fixture;
using arq::test::summand_named;

namespace {

struct A3Context {
  AlgPtr lam = fixture("a3");
  AddXContext x = module_context(lam);
  FDModule mod(const std::string& n) const { return x.summands[summand_named(x, n)]; }
  std::size_t at(const std::string& n) const { return summand_named(x, n); }
};

const AddXContext& t2_modules() {
  static AddXContext x = [] {
    AddXContext c = module_context(fixture("t2dualnumbers"));
    test::rename_t2_dual(c);
    return c;
  }();
  return x;
}

const AddXContext& t2_gprj() {
  static AddXContext y = [] {
    AddXContext c = gprj_context(fixture("t2dualnumbers"));
    test::rename_t2_dual(c);
    return c;
  }();
  return y;
}

}  // namespace

TEST_CASE("stable Auslander algebra of A3") {
  A3Context a;
  CHECK(a.x.size() == 6);
  CHECK(a.x.stable_aus->dim == 5);
  Quiver q = gabriel_quiver(a.x.stable_aus);
  REQUIRE(q.vertices.size() == 3);
  CHECK(q.arrows.size() == 2);
  // I1 -> I2 -> S2
  std::size_t s2 = a.x.stable_vertex[a.at("S2")], i2 = a.x.stable_vertex[a.at("I2")],
              i1 = a.x.stable_vertex[a.at("I1")];
  CHECK(q.multiplicity(i1, i2) == 1);
  CHECK(q.multiplicity(i2, s2) == 1);
  CHECK(loewy_length(a.x.stable_aus) == 2);
  CHECK(all_indecomposables(a.x.stable_aus).size() == 5);
}

TEST_CASE("stable Cohen-Macaulay Auslander algebra of the triangular fixture") {
  const AddXContext& y = t2_gprj();
  CHECK(y.size() == 5);
  CHECK(y.stable_aus->dim == 6);
  Quiver q = gabriel_quiver(y.stable_aus);
  REQUIRE(q.vertices.size() == 3);
  CHECK(q.arrows.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    std::size_t out = 0;
    for (std::size_t j = 0; j < 3; ++j) out += q.multiplicity(i, j);
    CHECK(out == 1);
    CHECK(q.multiplicity(i, i) == 0);
  }
  CHECK(loewy_length(y.stable_aus) == 2);
  CHECK(is_self_injective(y.stable_aus));
  CHECK(all_indecomposables(y.stable_aus).size() == 6);
}

TEST_CASE("projectives alone give the zero stable category") {
  AlgPtr a3 = fixture("a3");
  AddXContext c = build_context(projective_indecomposables(a3));
  CHECK(c.stable_aus->dim == 0);
}

TEST_CASE("Yoneda image of the radical inclusion P3 -> P2") {
  A3Context a;
  AddModule s = to_add(a.x, a.mod("P3")), t = to_add(a.x, a.mod("P2"));
  auto maps = hom_basis(s.mod, t.mod);
  REQUIRE(maps.size() == 1);
  YonedaMap y = yoneda_map(a.x, s, t, maps[0]);
  CHECK(y.map.injective());
  CHECK_FALSE(y.map.surjective());
  ModuleMap back = yoneda_unmap(a.x, s, t, y.src, y.tgt, y.map);
  CHECK(back.mat == maps[0].mat);
}

TEST_CASE("resolution triples over the A3 context") {
  A3Context a;
  ResolutionTriple r = minimal_resolution_triple(a.x, representable_functor(a.x, a.at("I2")));
  CHECK(is_isomorphic(r.a.mod, a.mod("P3")));
  CHECK(is_isomorphic(r.b.mod, a.mod("P1")));
  CHECK(is_isomorphic(r.c.mod, a.mod("I2")));
  CHECK(r.f.injective());
  CHECK((r.g * r.f).is_zero());

  ResolutionTriple s = minimal_resolution_triple(a.x, simple_functor(a.x, a.at("S2")));
  CHECK(is_isomorphic(s.a.mod, a.mod("P3")));
  CHECK(is_isomorphic(s.b.mod, a.mod("P2")));
  CHECK(is_isomorphic(s.c.mod, a.mod("S2")));
}

TEST_CASE("representable functors of non-projective summands resolve through the projective cover") {
  A3Context a;
  for (std::size_t i = 0; i < a.x.size(); ++i) {
    if (a.x.projective_summand(i)) continue;
    ResolutionTriple r = minimal_resolution_triple(a.x, representable_functor(a.x, i));
    CHECK(is_isomorphic(r.c.mod, a.x.summands[i]));
    CHECK(is_isomorphic(r.b.mod, projective_cover(a.x.summands[i]).proj.mod));
    CHECK(is_isomorphic(r.a.mod, syzygy(a.x.summands[i])));
  }
}

TEST_CASE("one syzygy step") {
  A3Context a;
  ResolutionTriple s = minimal_resolution_triple(a.x, simple_functor(a.x, a.at("S2")));
  ResolutionTriple n = functor_syzygy_step(a.x, s);
  CHECK(is_isomorphic(n.a.mod, a.mod("P3")));
  CHECK(is_isomorphic(n.b.mod, direct_sum_module({a.mod("P3"), a.mod("P2")})));
  CHECK(is_isomorphic(n.c.mod, a.mod("P2")));
}

TEST_CASE("syzygy triples present the direct syzygies") {
  A3Context a;
  FDModule simple = simple_functor(a.x, a.at("S2"));
  SyzygyTriple t3 = functor_syzygy_n(a.x, minimal_resolution_triple(a.x, simple), 3);
  CHECK(stably_isomorphic(presented_functor(a.x, t3.triple), syzygy(simple, 3)));

  FDModule rep = representable_functor(a.x, a.at("I2"));
  SyzygyTriple t2 = functor_syzygy_n(a.x, minimal_resolution_triple(a.x, rep), 2);
  CHECK(stably_isomorphic(presented_functor(a.x, t2.triple), syzygy(rep, 2)));
}

TEST_CASE("no non-projective functor over the A3 context is Gorenstein projective") {
  A3Context a;
  for (auto& f : all_indecomposables(a.x.stable_aus).modules) {
    if (is_projective(f)) continue;
    FunctorGprj g = is_gprj_functor(a.x, f);
    CHECK(g.agree());
    CHECK(g.direct.verdict == Verdict::NotGprj);
  }
}

TEST_CASE("extension of the simple at G3 is a Gorenstein projective functor") {
  const AddXContext& x = t2_modules();
  const AddXContext& y = t2_gprj();
  FDModule f = upsilon(x, y, simple_functor(y, summand_named(y, "G3")));
  FunctorGprj g = is_gprj_functor(x, f);
  CHECK(g.agree());
  CHECK(g.direct.gprj());
}

TEST_CASE("extension functor basics") {
  const AddXContext& x = t2_modules();
  const AddXContext& y = t2_gprj();
  CHECK(upsilon(x, y, zero_module(y.stable_aus)).is_zero());
  Upsilon up = make_upsilon(x, y);
  // representables go to representables
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (y.projective_summand(k)) continue;
    std::size_t i = up.emb.index[k];
    CHECK(is_isomorphic(up.apply(representable_functor(y, k)), representable_functor(x, i)));
  }
}

TEST_CASE("Gprj functor quiver of the triangular fixture") {
  FunctorQuiver q = gprj_functor_quiver(t2_modules(), t2_gprj());
  CHECK(q.fast.nodes.size() == 10);
  CHECK(q.agree());
  CHECK(mesh_violations(q.fast).empty());
}

TEST_CASE("functor labels") {
  A3Context a;
  CHECK(functor_label(a.x, representable_functor(a.x, a.at("I2"))) == "(-,I2)");
  CHECK(functor_label(a.x, simple_functor(a.x, a.at("I2"))) == "S_I2");
}
