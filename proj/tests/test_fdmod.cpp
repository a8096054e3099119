#include "doctest.h"
#include "support.hpp"

using namespace arq;
using arq::test::fixture;

namespace {

struct A3 {
  AlgPtr lam = fixture("a3");
  FDModule p1 = projective_module(lam, 0), p2 = projective_module(lam, 1), p3 = projective_module(lam, 2);
  FDModule s2 = simple_module(lam, 1), s3 = simple_module(lam, 2);
  FDModule i1 = injective_module(lam, 0), i2 = injective_module(lam, 1);
};

std::vector<std::size_t> dv(std::initializer_list<std::size_t> l) { return l; }

// the same module after a random change of basis within each vertex
FDModule scrambled(const FDModule& m, u32 seed) {
  const u32 p = m.p();
  FMatrix g(m.dim(), m.dim(), p);
  for (std::size_t v = 0; v < m.nv(); ++v) {
    std::size_t o = m.offset(v), d = m.dimvec()[v];
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) g(o + i, o + j) = (i == j) ? 1 : u32((seed * (i + 3) + 7 * j + v) % p);
  }
  FMatrix gi = *inverse(g);
  std::vector<FMatrix> act;
  for (std::size_t b = 0; b < m.algebra()->dim; ++b) act.push_back(g * m.action(b) * gi);
  return make_module(m.algebra(), act);
}

}  // namespace

TEST_CASE("projective and injective dimension vectors over A3") {
  A3 a;
  CHECK(a.p1.dimvec() == dv({1, 1, 1}));
  CHECK(a.p2.dimvec() == dv({0, 1, 1}));
  CHECK(a.p3.dimvec() == dv({0, 0, 1}));
  auto inj = injective_indecomposables(a.lam);
  REQUIRE(inj.size() == 3);
  CHECK(inj[0].dimvec() == dv({1, 0, 0}));
  CHECK(inj[1].dimvec() == dv({1, 1, 0}));
  CHECK(inj[2].dimvec() == dv({1, 1, 1}));
}

TEST_CASE("projectives equal injectives over the dual numbers") {
  AlgPtr d = fixture("dualnumbers");
  CHECK(is_isomorphic(projective_module(d, 0), injective_module(d, 0)));
}

TEST_CASE("hom dimensions over A3") {
  A3 a;
  CHECK(hom_dim(a.s2, a.s2) == 1);
  CHECK(hom_dim(a.p3, a.p2) == 1);
  CHECK(hom_dim(a.s2, a.s3) == 0);
  for (auto& f : hom_basis(a.p3, a.p2)) CHECK(is_homomorphism(a.p3, a.p2, f.mat));
}

TEST_CASE("stable hom dimensions over A3") {
  A3 a;
  for (auto& m : {a.p1, a.s2, a.i2}) CHECK(stable_hom_dim(a.p2, m) == 0);
  CHECK(stable_hom_dim(a.s2, a.s2) == 1);
  CHECK(stable_hom_dim(a.s2, a.i2) == 1);
}

TEST_CASE("is_isomorphic") {
  A3 a;
  CHECK(is_isomorphic(a.i2, a.i2));
  CHECK_FALSE(is_isomorphic(a.p2, a.s2));
  CHECK(is_isomorphic(a.i2, scrambled(a.i2, 5)));
  CHECK(is_isomorphic(a.p1, scrambled(a.p1, 11)));
}

TEST_CASE("decompose") {
  A3 a;
  auto g = decompose_grouped(direct_sum_module({a.p2, a.p2}));
  REQUIRE(g.size() == 1);
  CHECK(g[0].mult == 2);
  CHECK(is_isomorphic(g[0].mod, a.p2));

  auto reg = decompose(scrambled(regular_module(a.lam), 3));
  REQUIRE(reg.size() == 3);
  std::vector<std::size_t> hits(3, 0);
  for (auto& s : reg)
    for (std::size_t v = 0; v < 3; ++v)
      if (is_isomorphic(s.mod, projective_module(a.lam, v))) ++hits[v];
  CHECK(hits == dv({1, 1, 1}));
}

TEST_CASE("projective covers over A3") {
  A3 a;
  Cover c = projective_cover(a.s2);
  CHECK(is_isomorphic(c.proj.mod, a.p2));
  CHECK(c.map.surjective());
  CHECK(is_isomorphic(kernel(c.map).first, a.p3));

  Cover ci = projective_cover(a.i2);
  CHECK(is_isomorphic(ci.proj.mod, a.p1));
  CHECK(is_isomorphic(kernel(ci.map).first, a.s3));
  CHECK(is_isomorphic(a.s3, a.p3));

  Cover cp = projective_cover(a.p2);
  CHECK(is_isomorphic(cp.proj.mod, a.p2));
  CHECK(cp.map.injective());
}

TEST_CASE("syzygies and cosyzygies") {
  AlgPtr d = fixture("dualnumbers");
  FDModule k = simple_module(d, 0);
  CHECK(is_isomorphic(syzygy(k), k));
  CHECK(is_isomorphic(syzygy(k, 4), k));

  A3 a;
  CHECK(syzygy(a.p1).is_zero());
  // every projective has socle S3, so S2 maps to none of them
  CHECK(hom_dim(a.s2, direct_sum_module({a.p1, a.p2, a.p3})) == 0);
  CHECK(left_projective_approximation(a.s2).obj.is_zero());
  CHECK(projective_cosyzygy(a.s2).is_zero());
}

TEST_CASE("cosyzygies of Gorenstein projectives invert syzygies") {
  AlgPtr t = fixture("t2dualnumbers");
  for (auto& m : gprj_indecomposables(t).modules) {
    if (is_projective(m)) continue;
    FDModule c = projective_cosyzygy(m);
    CHECK(is_isomorphic(syzygy(c), m));
    CHECK(is_isomorphic(projective_cosyzygy(syzygy(m)), m));
  }
}

TEST_CASE("duality and transpose") {
  AlgPtr d = fixture("dualnumbers");
  FDModule k = simple_module(d, 0);
  FDModule tk = transpose(k);
  CHECK(tk.dim() == 1);
  CHECK(is_isomorphic(dual(dual(k)).with_label(""), k));

  A3 a;
  for (auto& m : {a.p1, a.s2, a.i2}) {
    FDModule dm = dual(m);
    CHECK(dm.algebra()->dim == a.lam->dim);
    CHECK(dm.dim() == m.dim());
  }
  CHECK(is_isomorphic(dual(a.p2), injective_module(opposite(a.lam), 1)));
}

TEST_CASE("Ext^1 and extension sequences") {
  AlgPtr d = fixture("dualnumbers");
  FDModule k = simple_module(d, 0);
  ExtGroup e = ext_group(k, k);
  REQUIRE(e.dim() == 1);
  SES s = extension_to_ses(e, e.class_map(0));
  CHECK(ses_is_exact(s));
  CHECK_FALSE(ses_splits(s));
  CHECK(is_isomorphic(s.mid, regular_module(d)));

  SES z = extension_to_ses(e, ModuleMap::zero(e.omega, k));
  CHECK(ses_splits(z));

  A3 a;
  ExtGroup e2 = ext_group(a.s2, a.p3);
  REQUIRE(e2.dim() == 1);
  SES s2 = extension_to_ses(e2, e2.class_map(0));
  CHECK(is_isomorphic(s2.mid, a.p2));
  CHECK(ext_group(a.p1, a.s2).dim() == 0);
}

TEST_CASE("Ext^2 over a relation algebra") {
  AlgPtr rel = fixture("a3rel");
  // 0 -> P3 -> P2 -> P1 -> S1 -> 0 gives Ext^2(S1, S3) = k
  CHECK(ext_group(simple_module(rel, 0), simple_module(rel, 2), 2).dim() == 1);
  CHECK(projective_dimension(simple_module(rel, 0), 5) == 2);
}

TEST_CASE("module construction checks relations") {
  A3 a;
  std::vector<FMatrix> act;
  for (std::size_t b = 0; b < a.lam->dim; ++b) act.push_back(a.p1.action(b));
  act.back() = act.back() + FMatrix::identity(3, a.lam->p);
  CHECK_THROWS_AS(make_module(a.lam, act), Error);
}
