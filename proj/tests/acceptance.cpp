// One line per acceptance criterion with its wall time; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>

#include "suites.hpp"
#include "support.hpp"

using namespace arq;
using namespace arq::test;

namespace {

using Problems = std::vector<std::string>;

void expect(Problems& p, bool ok, const std::string& what) {
  if (!ok) p.push_back(what);
}

void expect_count(Problems& p, std::size_t got, std::size_t want, const std::string& what) {
  if (got != want) p.push_back(what + ": " + std::to_string(got) + ", expected " + std::to_string(want));
}

void expect_shape(Problems& p, const ARQuiver& q, const std::string& golden_name) {
  Shape got = shape_of(q), want = golden(golden_name);
  expect(p, got.nodes == want.nodes, golden_name + ": node labels differ");
  expect(p, got.arrows == want.arrows, golden_name + ": arrows differ");
  expect(p, got.tau == want.tau, golden_name + ": translations differ");
}

// a linear quiver v0 -> v1 -> v2 in some vertex order
bool is_chain_of_three(const Quiver& q) {
  if (q.vertices.size() != 3 || q.arrows.size() != 2) return false;
  std::vector<std::size_t> in(3, 0), out(3, 0);
  for (auto& a : q.arrows) {
    if (a.from == a.to) return false;
    ++out[a.from], ++in[a.to];
  }
  std::size_t sources = 0, sinks = 0;
  for (std::size_t v = 0; v < 3; ++v) {
    sources += in[v] == 0 && out[v] == 1;
    sinks += in[v] == 1 && out[v] == 0;
  }
  return sources == 1 && sinks == 1;
}

bool is_three_cycle(const Quiver& q) {
  if (q.vertices.size() != 3 || q.arrows.size() != 3) return false;
  for (std::size_t v = 0; v < 3; ++v) {
    std::size_t out = 0, in = 0;
    for (auto& a : q.arrows) {
      if (a.from == a.to) return false;
      out += a.from == v, in += a.to == v;
    }
    if (out != 1 || in != 1) return false;
  }
  return true;
}

struct Fixtures {
  AlgPtr a3 = fixture("a3");
  AlgPtr t2 = fixture("t2dualnumbers");
  AddXContext a3_mod = module_context(a3);
  AddXContext t2_mod = module_context(t2);
  AddXContext t2_gprj = gprj_context(t2);
  Fixtures() {
    rename_t2_dual(t2_mod);
    rename_t2_dual(t2_gprj);
  }
  std::vector<const AddXContext*> contexts() const { return {&a3_mod, &t2_mod, &t2_gprj}; }
};

std::vector<FDModule> nonprojective_functors(const AddXContext& ctx) {
  std::vector<FDModule> out;
  if (ctx.stable_aus->dim == 0) return out;
  for (auto& f : all_indecomposables(ctx.stable_aus).modules)
    if (!is_projective(f)) out.push_back(f);
  return out;
}

Problems criterion_a3(const Fixtures& fx) {
  Problems p;
  expect_count(p, all_indecomposables(fx.a3).size(), 6, "indecomposables");
  const AddXContext& x = fx.a3_mod;
  expect_count(p, x.stable_aus->dim, 5, "stable Auslander algebra dimension");
  expect(p, is_chain_of_three(gabriel_quiver(x.stable_aus)), "stable Auslander quiver is not a chain of three");
  // three vertices, two arrows and dimension five leave no room for the length-2 path
  expect_count(p, loewy_length(x.stable_aus), 2, "Loewy length of the stable Auslander algebra");
  expect_count(p, all_indecomposables(x.stable_aus).size(), 5, "stable Auslander indecomposables");
  SXQuiver q = assemble_sx_quiver(x, Ambient::Modules);
  expect_count(p, q.fast.nodes.size(), 17, "submodule category nodes");
  expect_shape(p, q.fast, "a3_submodule_quiver");
  return p;
}

Problems criterion_t2(const Fixtures& fx) {
  Problems p;
  expect(p, selfinjective_dimension(fx.t2) == std::optional<std::size_t>(1), "self-injective dimension is not 1");
  expect_count(p, all_indecomposables(fx.t2).size(), 9, "indecomposables");
  GprjList g = gprj_indecomposables(fx.t2);
  expect_count(p, g.modules.size(), 5, "Gorenstein projective indecomposables");
  expect(p, g.inconclusive.empty(), "inconclusive Gprj verdicts");
  AlgPtr b = fx.t2_gprj.stable_aus;
  expect_count(p, b->dim, 6, "stable CM Auslander algebra dimension");
  expect(p, is_three_cycle(gabriel_quiver(b)), "stable CM Auslander quiver is not a 3-cycle");
  expect_count(p, loewy_length(b), 2, "Loewy length of the stable CM Auslander algebra");
  expect(p, is_self_injective(b), "stable CM Auslander algebra is not self-injective");
  expect_count(p, all_indecomposables(b).size(), 6, "stable CM Auslander indecomposables");

  FunctorQuiver fq = gprj_functor_quiver(fx.t2_mod, fx.t2_gprj);
  label_by_extension(fq, fx.t2_mod, fx.t2_gprj);
  expect_count(p, fq.fast.nodes.size(), 10, "Gprj functor quiver nodes");
  expect_shape(p, fq.fast, "gprj_functor_quiver");

  SXQuiver q = assemble_sx_quiver(fx.t2_gprj, Ambient::Gprj);
  expect_count(p, q.fast.nodes.size(), 16, "Gprj submodule category nodes");
  expect_shape(p, q.fast, "t2_gprj_quiver");
  return p;
}

Problems criterion_tau6() {
  Problems p;
  AddXContext x = module_context(fixture("nakayama-x3"));
  std::vector<FDModule> np = nonprojective_functors(x);
  expect(p, !np.empty(), "no non-projective functors over k[x]/(x^3)");
  for (auto& n : np) {
    FDModule m = n;
    for (int i = 0; i < 6 && !m.is_zero(); ++i) m = tau(m);
    expect(p, !m.is_zero() && is_isomorphic(m, n), "tau^6 differs at " + functor_label(x, n));
  }
  AddXContext d = module_context(fixture("dualnumbers"));
  expect_count(p, nonprojective_functors(d).size(), 0, "non-projective functors over k[x]/(x^2)");
  return p;
}

Problems criterion_oracles(const Fixtures& fx) {
  Problems p;
  auto report = [&](const std::string& what, const std::vector<std::string>& diffs) {
    for (auto& d : diffs) p.push_back(what + ": " + d);
  };
  report("A3 submodule category", assemble_sx_quiver(fx.a3_mod, Ambient::Modules).differences);
  report("Gprj submodule category", assemble_sx_quiver(fx.t2_gprj, Ambient::Gprj).differences);
  AddXContext a3_gprj = gprj_context(fx.a3);
  report("A3 Gprj functor quiver", gprj_functor_quiver(fx.a3_mod, a3_gprj).differences);
  report("Gprj functor quiver", gprj_functor_quiver(fx.t2_mod, fx.t2_gprj).differences);
  return p;
}

Problems criterion_syzygy(const Fixtures& fx) {
  Problems p;
  for (const AddXContext* ctx : fx.contexts())
    for (auto& f : nonprojective_functors(*ctx)) {
      ResolutionTriple t = minimal_resolution_triple(*ctx, f);
      FDModule direct = f;
      for (std::size_t n = 1; n <= 6; ++n) {
        direct = syzygy(direct);
        SyzygyTriple st = functor_syzygy_n(*ctx, t, n);
        if (!stably_isomorphic(presented_functor(*ctx, st.triple), direct))
          p.push_back("Omega^" + std::to_string(n) + " of " + functor_label(*ctx, f));
      }
    }
  return p;
}

Problems criterion_verdicts(const Fixtures& fx) {
  Problems p;
  for (const AddXContext* ctx : fx.contexts())
    for (auto& f : nonprojective_functors(*ctx)) {
      FunctorGprj g = is_gprj_functor(*ctx, f);
      if (!g.agree())
        p.push_back(functor_label(*ctx, f) + ": " + verdict_name(g.by_resolution.verdict) + " vs " +
                    verdict_name(g.direct.verdict));
      if (g.direct.verdict == Verdict::Inconclusive) p.push_back(functor_label(*ctx, f) + ": inconclusive");
    }
  return p;
}

Problems criterion_upsilon(const Fixtures& fx) {
  Problems p;
  const AddXContext &x = fx.t2_mod, &y = fx.t2_gprj;
  Upsilon up = make_upsilon(x, y);
  std::vector<FDModule> yf = all_indecomposables(y.stable_aus).modules, images;
  for (auto& f : yf) {
    images.push_back(up.apply(f));
    if (is_projective(f)) continue;
    SES s = almost_split_sequence(f);
    SES img;
    img.inj = up.apply(s.inj);
    img.surj = up.apply(s.surj);
    img.left = img.inj.src, img.mid = img.inj.tgt, img.right = img.surj.tgt;
    expect(p, ses_is_exact(img), "extension of the sequence ending at " + functor_label(y, f) + " is not exact");
  }
  for (std::size_t i = 0; i < yf.size(); ++i)
    for (std::size_t j = 0; j < yf.size(); ++j)
      expect(p, hom_dim(yf[i], yf[j]) == hom_dim(images[i], images[j]),
             "Hom(" + functor_label(y, yf[i]) + ", " + functor_label(y, yf[j]) + ") changes");

  FunctorQuiver fq = gprj_functor_quiver(x, y);
  std::set<std::string> missed;
  for (auto& m : fq.oracle_members) {
    bool hit = false;
    for (auto& im : images) hit = hit || is_isomorphic(im, m);
    if (!hit) missed.insert(functor_label(x, m));
  }
  std::set<std::string> want{"(-,M)", "(-,N)", "(-,T)", "(-,U)"};
  if (missed != want) {
    std::string got;
    for (auto& s : missed) got += " " + s;
    p.push_back("non-image indecomposables:" + got);
  }
  for (auto& m : fq.oracle_members)
    if (missed.count(functor_label(x, m))) expect(p, is_projective(m), functor_label(x, m) + " is not projective");
  return p;
}

Problems criterion_properties() {
  Problems p;
  for (auto name : {"a3", "a3rel", "dualnumbers", "nakayama-x3", "t2dualnumbers"}) {
    suites::Report r = suites::run_all(io::load_spec(source_path(std::string("fixtures/") + name + ".json")), {});
    for (auto& c : r.checks)
      if (c.status == suites::Status::Fail) p.push_back(std::string(name) + ": " + suites::format(c, false));
  }
  return p;
}

struct Criterion {
  int id;
  std::string name;
  std::optional<double> limit;
  std::function<Problems()> run;
};

}  // namespace

int main() {
  std::optional<Fixtures> fx;
  auto setup_start = std::chrono::steady_clock::now();
  try {
    fx.emplace();
  } catch (const std::exception& e) {
    std::cout << "FAIL  setup: " << e.what() << "\n";
    return 1;
  }
  double setup = std::chrono::duration<double>(std::chrono::steady_clock::now() - setup_start).count();
  std::printf("setup  fixture contexts built in %.2f s\n", setup);

  std::vector<Criterion> all = {
      {1, "A3 fixture: indecomposables, stable Auslander algebra, submodule quiver", 10, [&] { return criterion_a3(*fx); }},
      {2, "triangular dual numbers: Gprj, stable CM Auslander algebra, both quivers", 30, [&] { return criterion_t2(*fx); }},
      {3, "tau^6 identity over k[x]/(x^3), vacuous over k[x]/(x^2)", 10, [] { return criterion_tau6(); }},
      {4, "fast paths agree with oracles", 60, [&] { return criterion_oracles(*fx); }},
      {5, "syzygy triples present direct syzygies for n <= 6", 30, [&] { return criterion_syzygy(*fx); }},
      {6, "Gprj functor verdicts agree", std::nullopt, [&] { return criterion_verdicts(*fx); }},
      {7, "extension functor is exact, faithful on homs, misses four projectives", std::nullopt,
       [&] { return criterion_upsilon(*fx); }},
      {8, "property suites on every fixture", 60, [] { return criterion_properties(); }},
  };

  int failures = 0;
  for (auto& c : all) {
    auto start = std::chrono::steady_clock::now();
    Problems p;
    try {
      p = c.run();
    } catch (const std::exception& e) {
      p.push_back(std::string("error: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit && secs > *c.limit) p.push_back("took " + std::to_string(secs) + " s");
    bool ok = p.empty();
    failures += !ok;
    std::string lim = c.limit ? "limit " + std::to_string(int(*c.limit)) + " s" : "no limit";
    std::printf("%s  [%d] %s  (%.2f s, %s)\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, lim.c_str());
    for (auto& s : p) std::printf("        %s\n", s.c_str());
  }
  std::printf("%d of %zu criteria passed\n", int(all.size()) - failures, all.size());
  return failures == 0 ? 0 : 1;
}
