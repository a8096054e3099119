#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <random>
#include <sstream>

namespace arq::suites {

namespace {

using Clock = std::chrono::steady_clock;

std::string join(const std::vector<std::string>& v, std::size_t cap = 4) {
  std::string s;
  for (std::size_t i = 0; i < v.size() && i < cap; ++i) s += (i ? "; " : "") + v[i];
  if (v.size() > cap) s += "; ... (" + std::to_string(v.size()) + " total)";
  return s;
}

std::optional<std::size_t> find_iso(const std::vector<FDModule>& list, const FDModule& m) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i].dimvec() == m.dimvec() && is_isomorphic(list[i], m)) return i;
  return std::nullopt;
}

// same iso-classes on both sides, as sets
std::string compare_classes(const std::vector<FDModule>& got, const std::vector<FDModule>& want, const std::string& what) {
  for (auto& g : got)
    if (!find_iso(want, g)) return what + ": unexpected " + dimvec_string(g.dimvec());
  for (auto& w : want)
    if (!find_iso(got, w)) return what + ": missing " + dimvec_string(w.dimvec());
  return {};
}

FMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, u32 p) {
  std::uniform_int_distribution<u32> d(0, p - 1);
  FMatrix m(r, c, p);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

FMatrix random_invertible(std::mt19937_64& rng, std::size_t n, u32 p) {
  for (;;) {
    FMatrix m = random_matrix(rng, n, n, p);
    if (rank_of(m) == n) return m;
  }
}

// the same module in a random vertex-adapted basis
FDModule scramble(const FDModule& m, std::mt19937_64& rng) {
  const u32 p = m.p();
  FMatrix g(m.dim(), m.dim(), p);
  for (std::size_t v = 0; v < m.nv(); ++v)
    if (m.dimvec()[v]) g.set_block(m.offset(v), m.offset(v), random_invertible(rng, m.dimvec()[v], p));
  FMatrix gi = *inverse(g);
  std::vector<FMatrix> act;
  for (std::size_t b = 0; b < m.algebra()->dim; ++b) act.push_back(gi * m.action(b) * g);
  return FDModule::from_data(m.algebra(), m.dimvec(), act);
}

std::vector<std::pair<std::size_t, std::size_t>> sample_pairs(std::size_t n, std::size_t cap, std::mt19937_64& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> all;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) all.emplace_back(i, j);
  if (all.size() > cap) {
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(cap);
    std::sort(all.begin(), all.end());
  }
  return all;
}

std::vector<u32> add_vec(std::vector<u32> a, const std::vector<u32>& b, u32 p) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = u32((u64(a[i]) + b[i]) % p);
  return a;
}

std::vector<std::size_t> add_dims(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace

std::size_t Report::failures() const {
  return std::size_t(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; }));
}

void Report::run(const std::string& suite, const std::string& name, const std::function<std::string()>& fn) {
  Check c{suite, name, Status::Pass, {}, 0};
  auto t0 = Clock::now();
  try {
    c.detail = fn();
    if (!c.detail.empty()) c.status = Status::Fail;
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::Budget:
      case ErrorKind::Unsupported:
      case ErrorKind::Inconclusive:
        c.status = Status::Skip;
        break;
      default:
        c.status = Status::Fail;
    }
    c.detail = e.what();
  }
  c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  checks.push_back(c);
}

std::string format(const Check& c, bool with_time) {
  const char* tag = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "SKIP";
  std::ostringstream out;
  out << tag << "  " << c.suite << "/" << c.name;
  if (with_time) {
    out.setf(std::ios::fixed);
    out.precision(3);
    out << "  (" << c.seconds << " s)";
  }
  if (!c.detail.empty()) out << "  " << c.detail;
  return out.str();
}

// ---------------------------------------------------------------------------

void exactla_suite(Report& r, u32 p, const Options& opt) {
  std::mt19937_64 rng(opt.seed);
  std::vector<FMatrix> mats;
  std::uniform_int_distribution<std::size_t> size(1, 7);
  for (int k = 0; k < 60; ++k) {
    std::size_t rows = size(rng), cols = size(rng);
    if (k % 3 == 0) {
      std::size_t inner = size(rng) % 3 + 1;
      mats.push_back(random_matrix(rng, rows, inner, p) * random_matrix(rng, inner, cols, p));
    } else {
      mats.push_back(random_matrix(rng, rows, cols, p));
    }
  }
  r.run("exactla", "rref is idempotent", [&] {
    for (auto& m : mats) {
      FMatrix once = rref(m).reduced;
      if (rref(once).reduced != once) return "rref changed a reduced matrix:\n" + m.to_string();
    }
    return std::string();
  });
  r.run("exactla", "rank plus nullity", [&] {
    for (auto& m : mats) {
      FMatrix k = kernel_basis(m);
      if (rank_of(m) + k.cols() != m.cols()) return "rank + nullity != cols for\n" + m.to_string();
      if (k.cols() && !(m * k).is_zero()) return std::string("kernel basis not annihilated");
    }
    return std::string();
  });
  r.run("exactla", "solutions satisfy the system", [&] {
    for (auto& m : mats) {
      FMatrix b = m * random_matrix(rng, m.cols(), 2, p);
      auto x = solve_linear(m, b);
      if (!x) return std::string("consistent system reported unsolvable");
      if (m * *x != b) return std::string("a*x != b");
    }
    return std::string();
  });
}

// ---------------------------------------------------------------------------

void algebra_suite(Report& r, const AlgPtr& lam, const AlgebraSpec* spec, const Options&) {
  const u32 p = lam->p;
  r.run("algebra", "associativity on basis triples", [&] {
    return check_associative(*lam) ? std::string() : std::string("structure constants are not associative");
  });
  r.run("algebra", "radical is nilpotent", [&] {
    FMatrix rad = jacobson_radical(lam);
    FMatrix cur = rad;
    for (std::size_t k = 1; k <= lam->dim + 1; ++k) {
      if (cur.cols() == 0) return std::string();
      std::vector<std::vector<u32>> cols;
      for (std::size_t i = 0; i < cur.cols(); ++i)
        for (std::size_t j = 0; j < rad.cols(); ++j) cols.push_back(lam->product(cur.col_vec(i), rad.col_vec(j)));
      cur = cols.empty() ? FMatrix(lam->dim, 0, p) : column_basis(concat_columns(cols, lam->dim, p));
    }
    return std::string("rad^(dim+1) != 0");
  });
  r.run("algebra", "top is semisimple", [&] {
    if (!lam->adapted) fail(ErrorKind::Unsupported, "non-basic algebra");
    AlgPtr top = quotient_algebra(lam, jacobson_radical(lam));
    auto rad = jacobson_radical(top);
    return rad.cols() == 0 ? std::string() : "radical of A/rad A has dimension " + std::to_string(rad.cols());
  });
  r.run("algebra", "primitive idempotents are orthogonal and complete", [&] {
    auto e = primitive_idempotents(lam);
    std::vector<u32> sum(lam->dim, 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      sum = add_vec(sum, e[i], p);
      for (std::size_t j = 0; j < e.size(); ++j) {
        auto prod = lam->product(e[i], e[j]);
        auto want = i == j ? e[i] : std::vector<u32>(lam->dim, 0);
        if (prod != want) return "e" + std::to_string(i) + " e" + std::to_string(j) + " is wrong";
      }
    }
    if (sum != lam->unit()) return std::string("idempotents do not sum to 1");
    if (lam->adapted && e.size() != lam->nv) return std::string("idempotent count differs from vertex count");
    return std::string();
  });
  if (spec)
    r.run("algebra", "Gabriel quiver recovers the input quiver", [&] {
      Quiver q = gabriel_quiver(lam);
      const std::size_t n = spec->quiver.vertices.size();
      if (q.vertices.size() != n) return std::string("vertex count differs");
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (q.multiplicity(i, j) != spec->quiver.multiplicity(i, j))
            return "arrow count " + spec->quiver.vertices[i] + " -> " + spec->quiver.vertices[j] + " differs";
      return std::string();
    });
}

// ---------------------------------------------------------------------------

void fdmod_suite(Report& r, const AlgPtr& lam, const std::vector<FDModule>& modules, const Options& opt) {
  std::mt19937_64 rng(opt.seed + 1);
  auto pairs = sample_pairs(modules.size(), opt.sample_pairs, rng);
  r.run("fdmod", "dimension vectors add along sequences", [&] {
    for (auto& m : modules) {
      Cover c = projective_cover(m);
      auto [k, inc] = kernel(c.map);
      if (c.proj.mod.dimvec() != add_dims(k.dimvec(), m.dimvec())) return "cover sequence of " + default_label(m);
      if (is_projective(m)) continue;
      SES s = almost_split_sequence(m);
      if (s.mid.dimvec() != add_dims(s.left.dimvec(), s.right.dimvec())) return "almost split sequence at " + default_label(m);
    }
    return std::string();
  });
  r.run("fdmod", "decomposition recomposes", [&] {
    std::size_t used = 0;
    for (auto [i, j] : pairs) {
      if (++used > 40) break;
      FDModule sum = scramble(direct_sum_module({modules[i], modules[j]}), rng);
      auto parts = decompose(sum);
      std::vector<FDModule> pieces;
      for (auto& s : parts) pieces.push_back(s.mod);
      std::string d = compare_classes(pieces, {modules[i], modules[j]}, "summands");
      if (!d.empty()) return d;
      if (pieces.size() != 2) return "expected 2 summands, got " + std::to_string(pieces.size());
      if (!is_isomorphic(direct_sum_module(pieces), sum)) return std::string("sum of summands is not isomorphic to the input");
    }
    return std::string();
  });
  r.run("fdmod", "projective cover kernel lies in the radical", [&] {
    for (auto& m : modules) {
      Cover c = projective_cover(m);
      auto [k, inc] = kernel(c.map);
      if (!in_span(radical_span(c.proj.mod), inc.mat)) return "cover of " + default_label(m) + " is not minimal";
    }
    return std::string();
  });
  r.run("fdmod", "Hom and duality", [&] {
    for (auto [i, j] : pairs)
      if (hom_dim(modules[i], modules[j]) != hom_dim(dual(modules[j]), dual(modules[i])))
        return "dim Hom(" + default_label(modules[i]) + ", " + default_label(modules[j]) + ") differs from the dual side";
    return std::string();
  });
  r.run("fdmod", "Ext^1 from a non-minimal presentation", [&] {
    for (auto [i, j] : pairs) {
      const FDModule& m = modules[i];
      const FDModule& n = modules[j];
      Cover c = projective_cover(m);
      DirectSum ds = direct_sum({c.proj.mod, projective_module(lam, (i + j) % lam->nv)});
      ModuleMap big{ds.sum, m, c.map.mat * ds.proj[0].mat};
      auto [k, inc] = kernel(big);
      std::vector<std::vector<u32>> cols;
      for (auto& h : hom_basis(ds.sum, n)) cols.push_back((h * inc).mat.vec());
      std::size_t restricted = cols.empty() ? 0 : rank_of(concat_columns(cols, n.dim() * k.dim(), lam->p));
      std::size_t dim = hom_dim(k, n) - restricted;
      if (dim != ext_group(m, n, 1).dim())
        return "Ext^1(" + default_label(m) + ", " + default_label(n) + ") depends on the presentation";
    }
    return std::string();
  });
}

// ---------------------------------------------------------------------------

void artheory_suite(Report& r, const AlgPtr& lam, const Options& opt) {
  std::optional<ARData> data;
  r.run("artheory", "closed universe", [&] {
    data = ar_data(lam, opt.budget);
    return std::string();
  });
  if (!data) return;
  const auto& u = data->universe;
  r.run("artheory", "tau and its inverse are mutually inverse", [&] {
    for (auto& m : u.modules) {
      if (!is_projective(m) && !is_isomorphic(tau_inverse(tau(m)), m)) return "tau^-1 tau " + default_label(m);
      if (!is_injective(m) && !is_isomorphic(tau(tau_inverse(m)), m)) return "tau tau^-1 " + default_label(m);
    }
    return std::string();
  });
  r.run("artheory", "almost split sequences verify", [&] {
    for (std::size_t i = 0; i < data->ass.size(); ++i)
      if (data->ass[i] && !verify_almost_split(*data->ass[i], u)) return "sequence ending at " + data->quiver.nodes[i].label;
    return std::string();
  });
  r.run("artheory", "mesh identity", [&] {
    auto bad = mesh_violations(data->quiver);
    for (auto& n : data->quiver.nodes)
      if (!n.flags.ext_projective && !data->quiver.tau_of(n.id)) bad.push_back("no translate at " + n.label);
    return join(bad);
  });
  r.run("artheory", "all-pass subcategory equals the AR quiver", [&] {
    ARQuiver sub = subcategory_ar_quiver(u, [](const FDModule&) { return true; });
    return join(quiver_differences(data->quiver, sub));
  });
  if (is_self_injective(lam))
    r.run("artheory", "self-injective: Gprj subcategory has every node", [&] {
      ARQuiver sub = subcategory_ar_quiver(u, gprj_membership());
      if (sub.nodes.size() != data->quiver.nodes.size()) return std::string("node counts differ");
      for (auto& n : data->quiver.nodes)
        if (!sub.find(n.label)) return "missing " + n.label;
      return std::string();
    });
}

// ---------------------------------------------------------------------------

void gorenstein_suite(Report& r, const AlgPtr& lam, const Options& opt) {
  std::optional<std::size_t> d;
  std::vector<FDModule> gprj;
  IndecUniverse u;
  r.run("gorenstein", "finite self-injective dimension", [&] {
    d = selfinjective_dimension(lam);
    if (!d) fail(ErrorKind::Unsupported, "self-injective dimension not established within the cap");
    u = all_indecomposables(lam, opt.budget);
    if (u.closed) {
      gprj = gprj_filter(u).modules;
    } else {
      GprjKnit k = knit_gprj(lam, opt.budget);
      if (!k.closed) fail(ErrorKind::Budget, "Gprj knitting did not close");
      gprj = k.modules;
    }
    return std::string();
  });
  if (!d || gprj.empty()) return;
  r.run("gorenstein", "projectives are Gprj without witnesses", [&] {
    for (auto& pm : projective_indecomposables(lam)) {
      GprjReport rep = is_gorenstein_projective(pm, std::max<std::size_t>(*d, 1), d);
      if (!rep.gprj() || rep.witness_index) return "projective " + default_label(pm);
    }
    return std::string();
  });
  r.run("gorenstein", "Gprj is closed under syzygies", [&] {
    for (auto& g : gprj) {
      FDModule om = syzygy(g);
      if (om.dim() == 0) continue;
      for (auto& s : decompose(om))
        if (!find_iso(gprj, s.mod)) return "syzygy of " + default_label(g) + " leaves Gprj";
    }
    return std::string();
  });
  if (u.closed)
    r.run("gorenstein", "Gprj equals the n-th syzygies", [&] {
      std::vector<FDModule> got = projective_indecomposables(lam);
      for (auto& m : u.modules) {
        FDModule om = syzygy(m, *d);
        if (om.dim() == 0) continue;
        for (auto& s : decompose(om))
          if (!find_iso(got, s.mod)) got.push_back(s.mod);
      }
      return compare_classes(got, gprj, "syzygy summands versus Gprj");
    });
}

// ---------------------------------------------------------------------------

void stabfun_suite(Report& r, const AddXContext& x, const AddXContext* y, const Options& opt) {
  std::mt19937_64 rng(opt.seed + 2);
  if (x.stable_aus->dim == 0) {
    r.run("stabfun", "stable category is zero", [] { return std::string(); });
    return;
  }
  r.run("stabfun", "Yoneda: representable homs are stable homs", [&] {
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (x.projective_summand(i) || x.projective_summand(j)) continue;
        std::size_t lhs = hom_dim(representable_functor(x, i), representable_functor(x, j));
        if (lhs != stable_hom_dim(x.summands[i], x.summands[j])) return "Hom((-," + x.names[i] + "),(-," + x.names[j] + "))";
      }
    return std::string();
  });
  r.run("stabfun", "Yoneda round trip", [&] {
    for (auto [i, j] : sample_pairs(x.size(), opt.sample_pairs, rng)) {
      AddModule s = add_object(x, {i}), t = add_object(x, {j});
      for (auto& f : hom_basis(x.summands[i], x.summands[j])) {
        ModuleMap g = t.incl[0] * f * s.proj[0];
        YonedaMap ym = yoneda_map(x, s, t, g);
        if (yoneda_unmap(x, s, t, ym.src, ym.tgt, ym.map).mat != g.mat) return "map " + x.names[i] + " -> " + x.names[j];
      }
    }
    return std::string();
  });
  std::optional<IndecUniverse> funcs;
  r.run("stabfun", "functor universe", [&] {
    IndecUniverse u = all_indecomposables(x.stable_aus, opt.budget);
    if (!u.closed) fail(ErrorKind::Budget, u.note);
    funcs = u;
    return std::string();
  });
  if (!funcs) return;
  std::vector<FDModule> nonproj;
  for (auto& f : funcs->modules)
    if (!is_projective(f)) nonproj.push_back(f);
  r.run("stabfun", "syzygy triples match direct syzygies", [&] {
    for (auto& f : nonproj) {
      ResolutionTriple t = minimal_resolution_triple(x, f);
      for (std::size_t n = 1; n <= opt.syzygy_steps; ++n) {
        SyzygyTriple st = functor_syzygy_n(x, t, n);
        if (!stably_isomorphic(presented_functor(x, st.triple), syzygy(f, n)))
          return "step " + std::to_string(n) + " at " + functor_label(x, f);
      }
    }
    return std::string();
  });
  r.run("stabfun", "Gprj verdicts agree", [&] {
    for (auto& f : nonproj) {
      FunctorGprj g = is_gprj_functor(x, f);
      if (!g.agree())
        return functor_label(x, f) + ": resolution says " + verdict_name(g.by_resolution.verdict) + ", Ext test says " +
               verdict_name(g.direct.verdict);
    }
    return std::string();
  });
  if (!y) return;
  std::optional<Upsilon> up;
  std::vector<FDModule> yfuncs;
  r.run("stabfun", "extension functor setup", [&] {
    up = make_upsilon(x, *y);
    IndecUniverse u = all_indecomposables(y->stable_aus, opt.budget);
    if (!u.closed) fail(ErrorKind::Budget, u.note);
    yfuncs = u.modules;
    return std::string();
  });
  if (!up) return;
  r.run("stabfun", "extension preserves exactness", [&] {
    for (auto& f : yfuncs) {
      if (is_projective(f)) continue;
      SES s = almost_split_sequence(f);
      SES img;
      img.inj = up->apply(s.inj);
      img.surj = up->apply(s.surj);
      img.left = img.inj.src, img.mid = img.inj.tgt, img.right = img.surj.tgt;
      if (img.surj.src.dimvec() != img.mid.dimvec() || !ses_is_exact(img)) return "sequence ending at " + functor_label(*y, f);
    }
    return std::string();
  });
  std::vector<FDModule> images;
  r.run("stabfun", "extension preserves hom dimensions", [&] {
    for (auto& f : yfuncs) images.push_back(up->apply(f));
    for (std::size_t i = 0; i < yfuncs.size(); ++i)
      for (std::size_t j = 0; j < yfuncs.size(); ++j) {
        if (hom_dim(yfuncs[i], yfuncs[j]) != hom_dim(images[i], images[j]))
          return "Hom(" + functor_label(*y, yfuncs[i]) + ", " + functor_label(*y, yfuncs[j]) + ")";
        if (i < j && images[i].dimvec() == images[j].dimvec() && is_isomorphic(images[i], images[j]))
          return "images of " + functor_label(*y, yfuncs[i]) + " and " + functor_label(*y, yfuncs[j]) + " coincide";
      }
    return std::string();
  });
  std::optional<FunctorQuiver> fq;
  r.run("stabfun", "Gprj functor quiver: fast path equals oracle", [&] {
    fq = gprj_functor_quiver(x, *y, opt.budget);
    auto bad = fq->differences;
    for (auto& m : mesh_violations(fq->fast)) bad.push_back(m);
    return join(bad);
  });
  if (!fq || images.size() != yfuncs.size()) return;
  r.run("stabfun", "non-image is the representables outside Y", [&] {
    std::vector<FDModule> missed;
    for (auto& m : fq->oracle_members)
      if (!find_iso(images, m)) missed.push_back(m);
    ContextEmbedding emb = embed_context(*y, x);
    std::vector<FDModule> want;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!x.projective_summand(i) && std::find(emb.index.begin(), emb.index.end(), i) == emb.index.end())
        want.push_back(representable_functor(x, i));
    return compare_classes(missed, want, "functors outside the image");
  });
}

// ---------------------------------------------------------------------------

void morphcat_suite(Report& r, const AddXContext& ctx, Ambient ambient, const Options& opt) {
  const std::string suite = ambient == Ambient::Gprj ? "morphcat[gprj]" : "morphcat[mod]";
  std::optional<SXQuiver> q;
  std::vector<FDModule> funcs;
  r.run(suite, "fast path equals oracle", [&] {
    IndecUniverse u = all_indecomposables(ctx.stable_aus, opt.budget);
    if (!u.closed) fail(ErrorKind::Budget, u.note);
    funcs = u.modules;
    q = assemble_sx_quiver(ctx, ambient, ambient == Ambient::Gprj ? opt.budget : opt.oracle_budget);
    return join(q->differences);
  });
  if (!q) return;
  AlgPtr t = q->oracle_members.empty() ? t2(ctx.lam) : q->oracle_members.front().algebra();
  r.run(suite, "mesh identity", [&] {
    auto bad = mesh_violations(q->fast);
    for (auto& m : mesh_violations(q->oracle)) bad.push_back("oracle " + m);
    for (auto& n : q->fast.nodes)
      if (!n.flags.ext_projective && !q->fast.tau_of(n.id)) bad.push_back("no translate at " + n.label);
    return join(bad);
  });
  r.run(suite, "node count is twice the summands plus the stable indecomposables", [&] {
    std::size_t want = 2 * ctx.size() + funcs.size();
    if (q->oracle.nodes.size() != want)
      return std::to_string(q->oracle.nodes.size()) + " nodes, expected " + std::to_string(want);
    return std::string();
  });
  r.run(suite, "Psi vanishes exactly on trivial objects", [&] {
    for (auto& m : q->oracle_members) {
      MorphObj o = morph_decode(m);
      bool zero = psi(ctx, o).dim() == 0;
      if (zero != is_trivial_object(o)) return "object " + morph_label(ctx, o);
    }
    return std::string();
  });
  r.run(suite, "Psi recovers every functor", [&] {
    for (auto& f : funcs)
      if (!is_isomorphic(psi(ctx, s_of_functor(ctx, f)), f)) return "functor " + functor_label(ctx, f);
    return std::string();
  });
  r.run(suite, "wired sequences are almost split", [&] {
    for (auto& s : q->meshes)
      if (!verify_almost_split(s, q->oracle_members)) return "sequence ending at " + morph_label(ctx, morph_decode(s.right));
    return std::string();
  });
  r.run(suite, "transferred sequences are almost split", [&] {
    for (auto& s : q->meshes) {
      MorphObj end = morph_decode(s.right);
      // no almost split sequence ends at a projective functor
      if (is_trivial_object(end) || is_projective(psi(ctx, end))) continue;
      SES e = transfer_ass(ctx, s);
      if (!verify_almost_split(e, funcs)) return "transfer of the sequence ending at " + morph_label(ctx, morph_decode(s.right));
    }
    return std::string();
  });
  r.run(suite, "Ext-projective and Ext-injective lists", [&] {
    ExtLists lists = ext_projectives_in_S(ctx);
    std::vector<FDModule> lp, li;
    for (auto& o : lists.projectives) lp.push_back(morph_encode(t, o));
    for (auto& o : lists.injectives) li.push_back(morph_encode(t, o));
    Membership inx = add_membership(ctx);
    const auto& mem = q->oracle_members;
    for (std::size_t c = 0; c < mem.size(); ++c) {
      std::optional<ExtGroup> out_witness, in_witness;
      for (auto& m : mem) {
        ExtGroup eo = ext_group(mem[c], m, 1);
        if (eo.dim() && !out_witness) out_witness = eo;
        ExtGroup ei = ext_group(m, mem[c], 1);
        if (ei.dim() && !in_witness) in_witness = ei;
      }
      std::string name = morph_label(ctx, morph_decode(mem[c]));
      if (bool(find_iso(lp, mem[c])) == bool(out_witness)) return "Ext-projectivity of " + name;
      if (bool(find_iso(li, mem[c])) == bool(in_witness)) return "Ext-injectivity of " + name;
      // a non-vanishing class gives a non-retracting epimorphism inside the category
      for (auto* w : {&out_witness, &in_witness}) {
        if (!*w) continue;
        SES s = extension_to_ses(**w, (*w)->class_map(0));
        if (ses_splits(s)) return "extension class of " + name + " splits";
        if (!s_membership(morph_decode(s.mid), inx)) return "extension of " + name + " leaves the category";
      }
    }
    return std::string();
  });
}

// ---------------------------------------------------------------------------

Report run_all(const AlgebraSpec& spec, const Options& opt) {
  Report r;
  AlgPtr lam = build_algebra(spec);
  exactla_suite(r, lam->p, opt);
  algebra_suite(r, lam, &spec, opt);
  IndecUniverse u = all_indecomposables(lam, opt.budget);
  std::vector<FDModule> mods = u.modules;
  if (mods.size() > 40) mods.resize(40);
  fdmod_suite(r, lam, mods, opt);
  artheory_suite(r, lam, opt);
  gorenstein_suite(r, lam, opt);

  std::optional<AddXContext> x, y;
  r.run("stabfun", "module context", [&] {
    x = module_context(lam, opt.budget);
    return std::string();
  });
  r.run("stabfun", "Gprj context", [&] {
    y = gprj_context(lam, opt.budget);
    return std::string();
  });
  if (x) stabfun_suite(r, *x, y && y->size() < x->size() ? &*y : nullptr, opt);
  if (y) stabfun_suite(r, *y, nullptr, opt);
  if (x) morphcat_suite(r, *x, Ambient::Modules, opt);
  if (y) morphcat_suite(r, *y, Ambient::Gprj, opt);
  return r;
}

}  // namespace arq::suites
