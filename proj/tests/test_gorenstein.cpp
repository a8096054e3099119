#include "doctest.h"
#include "support.hpp"

using namespace arq;
using arq::test::fixture;

TEST_CASE("projectives are Gorenstein projective") {
  AlgPtr a3 = fixture("a3");
  for (auto& p : projective_indecomposables(a3)) CHECK(is_gorenstein_projective(p, 3).gprj());
}

TEST_CASE("every module over a self-injective algebra is Gorenstein projective") {
  AlgPtr d = fixture("dualnumbers");
  GprjReport r = gprj_report(simple_module(d, 0));
  CHECK(r.gprj());
  CHECK(r.exact);
  CHECK(gprj_indecomposables(d).modules.size() == 2);
}

TEST_CASE("self-injective dimensions") {
  CHECK(selfinjective_dimension(fixture("dualnumbers")) == std::optional<std::size_t>(0));
  CHECK(selfinjective_dimension(fixture("t2dualnumbers")) == std::optional<std::size_t>(1));
  CHECK(selfinjective_dimension(fixture("a3")) == std::optional<std::size_t>(1));
}

TEST_CASE("the simple at the second vertex of the triangular fixture is not Gorenstein projective") {
  AlgPtr t = fixture("t2dualnumbers");
  GprjReport r = gprj_report(simple_module(t, 1));
  CHECK(r.verdict == Verdict::NotGprj);
  CHECK(r.exact);
  CHECK_FALSE(r.witness.empty());
}

TEST_CASE("Gorenstein projectives of the triangular fixture") {
  AlgPtr t = fixture("t2dualnumbers");
  GprjList g = gprj_indecomposables(t);
  CHECK(g.inconclusive.empty());
  std::multiset<std::string> dims;
  for (auto& m : g.modules) dims.insert(dimvec_string(m.dimvec()));
  CHECK(dims == std::multiset<std::string>{"10", "11", "20", "21", "22"});
}

TEST_CASE("hereditary algebras have only projective Gorenstein projectives") {
  GprjList g = gprj_indecomposables(fixture("a3"));
  CHECK(g.modules.size() == 3);
  for (auto& m : g.modules) CHECK(is_projective(m));
}

TEST_CASE("relative knitting finds the same Gorenstein projectives") {
  for (auto name : {"a3", "t2dualnumbers", "nakayama-x3"}) {
    AlgPtr lam = fixture(name);
    GprjKnit kn = knit_gprj(lam);
    CHECK(kn.closed);
    GprjList g = gprj_indecomposables(lam);
    CHECK_MESSAGE(kn.modules.size() == g.modules.size(), name);
    for (auto& m : kn.modules) {
      bool found = false;
      for (auto& n : g.modules) found = found || is_isomorphic(m, n);
      CHECK_MESSAGE(found, name);
    }
  }
}

TEST_CASE("Gprj right approximations factor every map from a Gorenstein projective") {
  AlgPtr t = fixture("t2dualnumbers");
  GprjList g = gprj_indecomposables(t);
  for (auto& m : all_indecomposables(t).modules) {
    Minimized ap = gprj_right_approximation(m, 1);
    for (auto& d : decompose(ap.obj)) CHECK(gprj_report(d.mod).gprj());
    for (auto& src : g.modules) {
      std::vector<std::vector<u32>> through;
      for (auto& h : hom_basis(src, ap.obj)) through.push_back((ap.map * h).mat.vec());
      FMatrix span = concat_columns(through, src.dim() * m.dim(), t->p);
      for (auto& f : hom_basis(src, m)) CHECK(in_span(span, FMatrix::column(f.mat.vec(), t->p)));
    }
  }
}
