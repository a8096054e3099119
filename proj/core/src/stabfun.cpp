#include "arq/stabfun.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace arq {

namespace {

std::vector<u32> times(const FMatrix& m, const std::vector<u32>& v) { return (m * FMatrix::column(v, m.modulus())).col_vec(0); }

ModuleMap inverse_map(const ModuleMap& iso) {
  auto inv = inverse(iso.mat);
  ensure(inv.has_value(), "isomorphism is not invertible");
  return ModuleMap{iso.tgt, iso.src, *inv};
}

}  // namespace

// ---------------------------------------------------------------------------
// context

ModuleMap AddXContext::element_map(std::size_t row, std::size_t col, const std::vector<u32>& x) const {
  const EndBlock& b = blocks[row][col];
  FMatrix m(summands[row].dim(), summands[col].dim(), lam->p);
  for (std::size_t k = 0; k < b.maps.size(); ++k)
    if (x[b.index[k]]) m.add_scaled(b.maps[k].mat, x[b.index[k]]);
  return ModuleMap{summands[col], summands[row], m};
}

std::vector<u32> AddXContext::element_of(std::size_t row, std::size_t col, const ModuleMap& f) const {
  const EndBlock& b = blocks[row][col];
  std::vector<u32> x(aus->dim, 0);
  if (b.maps.empty()) return x;
  FMatrix c = b.to_block * b.hom.coords(f.mat);
  for (std::size_t k = 0; k < b.maps.size(); ++k) x[b.index[k]] = c(k, 0);
  return x;
}

std::optional<std::size_t> AddXContext::summand_index(const FDModule& m) const {
  for (std::size_t i = 0; i < summands.size(); ++i)
    if (summands[i].dimvec() == m.dimvec() && is_isomorphic(summands[i], m)) return i;
  return std::nullopt;
}

AddXContext build_context(const std::vector<FDModule>& summands, std::vector<std::string> names) {
  if (summands.empty()) fail(ErrorKind::Input, "empty summand list");
  AddXContext ctx;
  ctx.lam = summands[0].algebra();
  const u32 p = ctx.lam->p;
  const std::size_t n = summands.size();
  for (auto& s : summands) {
    if (!same_algebra(s.algebra(), ctx.lam)) fail(ErrorKind::Input, "summands over different algebras");
    if (s.dim() == 0 || !is_local(s)) fail(ErrorKind::Input, "summand " + default_label(s) + " is not indecomposable");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (summands[i].dimvec() == summands[j].dimvec() && is_isomorphic(summands[i], summands[j]))
        fail(ErrorKind::Input, "duplicate summands " + std::to_string(j) + " and " + std::to_string(i));
  ctx.summands = summands;
  if (names.size() != n) {
    names.clear();
    for (auto& s : summands) names.push_back(default_label(s));
  }
  ctx.names = std::move(names);
  for (std::size_t v = 0; v < ctx.lam->nv; ++v)
    if (!ctx.summand_index(projective_module(ctx.lam, v)))
      fail(ErrorKind::Input, "indecomposable projective at vertex " + ctx.lam->vertex_names[v] + " is missing");

  // blocks; identities take the first n basis indices
  ctx.blocks.assign(n, std::vector<EndBlock>(n));
  std::vector<std::vector<FMatrix>> proj_span(n, std::vector<FMatrix>(n));
  std::size_t next = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      StableHom sh = stable_hom_basis(summands[j], summands[i]);
      EndBlock& b = ctx.blocks[i][j];
      b.hom = sh.hom;
      proj_span[i][j] = sh.proj_span;
      const std::size_t k = b.hom.size();
      if (i == j) {
        FMatrix rad = radical_of_local_end(b.hom);
        FMatrix idc = b.hom.coords(FMatrix::identity(summands[i].dim(), p));
        auto inv = inverse(FMatrix::hcat(idc, rad));
        ensure(inv.has_value(), "identity and radical do not span the endomorphisms");
        b.to_block = *inv;
        b.maps.push_back(ModuleMap::identity(summands[i]));
        for (std::size_t c = 0; c < rad.cols(); ++c) b.maps.push_back(b.hom.combine(rad.col(c)));
        b.index.push_back(i);
        for (std::size_t c = 1; c < k; ++c) b.index.push_back(next++);
      } else {
        b.to_block = FMatrix::identity(k, p);
        b.maps = b.hom.basis;
        for (std::size_t c = 0; c < k; ++c) b.index.push_back(next++);
      }
    }
  const std::size_t dim = next;
  ctx.basis_row.resize(dim);
  ctx.basis_col.resize(dim);
  ctx.basis_pos.resize(dim);
  std::vector<std::string> labels(dim);
  std::vector<std::size_t> src(dim), tgt(dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto& b = ctx.blocks[i][j];
      for (std::size_t k = 0; k < b.index.size(); ++k) {
        std::size_t e = b.index[k];
        ctx.basis_row[e] = i;
        ctx.basis_col[e] = j;
        ctx.basis_pos[e] = k;
        src[e] = i;
        tgt[e] = j;
        labels[e] = (i == j && k == 0) ? "e[" + ctx.names[i] + "]"
                                       : ctx.names[j] + "->" + ctx.names[i] + "#" + std::to_string(k);
      }
    }
  std::vector<u32> table(dim * dim * dim, 0);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      if (ctx.basis_col[a] != ctx.basis_row[b]) continue;
      std::size_t i = ctx.basis_row[a], k = ctx.basis_col[b];
      const ModuleMap& fa = ctx.blocks[i][ctx.basis_col[a]].maps[ctx.basis_pos[a]];
      const ModuleMap& fb = ctx.blocks[ctx.basis_row[b]][k].maps[ctx.basis_pos[b]];
      FMatrix prod = fa.mat * fb.mat;
      if (prod.is_zero()) continue;
      const EndBlock& blk = ctx.blocks[i][k];
      FMatrix c = blk.to_block * blk.hom.coords(prod);
      for (std::size_t r = 0; r < blk.index.size(); ++r) table[(a * dim + b) * dim + blk.index[r]] = c(r, 0);
    }
  std::vector<std::size_t> idem(n);
  for (std::size_t i = 0; i < n; ++i) idem[i] = i;
  ctx.aus = adapted_algebra(p, dim, table, labels, idem, src, tgt, ctx.names, Provenance::Endomorphism);

  std::vector<std::vector<u32>> ideal_cols;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& ps = proj_span[i][j];
      const auto& b = ctx.blocks[i][j];
      for (std::size_t c = 0; c < ps.cols(); ++c) {
        FMatrix bc = b.to_block * ps.col(c);
        std::vector<u32> v(dim, 0);
        for (std::size_t r = 0; r < b.index.size(); ++r) v[b.index[r]] = bc(r, 0);
        ideal_cols.push_back(v);
      }
    }
  ctx.ideal = concat_columns(ideal_cols, dim, p);
  ctx.stable_aus = quotient_algebra(ctx.aus, ctx.ideal);
  ctx.stable_vertex.assign(n, AddXContext::npos);
  for (std::size_t v = 0; v < ctx.stable_aus->parent_vertex.size(); ++v) {
    ctx.stable_vertex[ctx.stable_aus->parent_vertex[v]] = v;
    ctx.stable_summand.push_back(ctx.stable_aus->parent_vertex[v]);
  }
  for (std::size_t i = 0; i < n; ++i)
    ensure(ctx.projective_summand(i) == is_projective(summands[i]), "stable vertices do not match the non-projective summands");

  ctx.syzygy_closed = true;
  for (auto& s : summands) {
    FDModule om = syzygy(s);
    if (om.dim() == 0) continue;
    for (auto& part : decompose(om))
      if (!ctx.summand_index(part.mod)) ctx.syzygy_closed = false;
  }
  return ctx;
}

AddXContext module_context(const AlgPtr& lam, const Budget& budget) {
  IndecUniverse u = all_indecomposables(lam, budget);
  if (!u.closed) fail(ErrorKind::Budget, u.note);
  return build_context(u.modules);
}

AddXContext gprj_context(const AlgPtr& lam, const Budget& budget) {
  GprjList g = gprj_indecomposables(lam, budget);
  if (!g.inconclusive.empty()) fail(ErrorKind::Inconclusive, "some indecomposables have no Gprj verdict");
  return build_context(g.modules);
}

// ---------------------------------------------------------------------------
// stable modules

FDModule deflate(const AddXContext& ctx, const FDModule& m) {
  const auto& q = ctx.stable_aus;
  const u32 p = ctx.lam->p;
  for (std::size_t c = 0; c < ctx.ideal.cols(); ++c) {
    FMatrix act(m.dim(), m.dim(), p);
    for (std::size_t b = 0; b < ctx.aus->dim; ++b)
      if (ctx.ideal(b, c)) act.add_scaled(m.action(b), ctx.ideal(b, c));
    if (!act.is_zero()) fail(ErrorKind::Input, "module is not annihilated by the projective-factoring ideal");
  }
  std::vector<std::size_t> vdim;
  for (auto v : q->parent_vertex) vdim.push_back(m.dimvec()[v]);
  std::vector<FMatrix> act;
  for (std::size_t k = 0; k < q->dim; ++k) {
    FMatrix a(m.dim(), m.dim(), p);
    for (std::size_t b = 0; b < ctx.aus->dim; ++b)
      if (q->from_quotient(b, k)) a.add_scaled(m.action(b), q->from_quotient(b, k));
    act.push_back(a);
  }
  return FDModule::from_data(q, vdim, act, m.label());
}

FDModule inflate(const AddXContext& ctx, const FDModule& m) {
  const auto& q = ctx.stable_aus;
  const u32 p = ctx.lam->p;
  std::vector<std::size_t> vdim(ctx.size(), 0);
  for (std::size_t v = 0; v < q->nv; ++v) vdim[q->parent_vertex[v]] = m.dimvec()[v];
  std::vector<FMatrix> act;
  for (std::size_t b = 0; b < ctx.aus->dim; ++b) {
    FMatrix a(m.dim(), m.dim(), p);
    for (std::size_t k = 0; k < q->dim; ++k)
      if (q->to_quotient(k, b)) a.add_scaled(m.action(k), q->to_quotient(k, b));
    act.push_back(a);
  }
  return FDModule::from_data(ctx.aus, vdim, act, m.label());
}

ModuleMap deflate_map(const AddXContext& ctx, const ModuleMap& f) {
  return ModuleMap{deflate(ctx, f.src), deflate(ctx, f.tgt), f.mat};
}

// ---------------------------------------------------------------------------
// add X objects

AddModule to_add(const AddXContext& ctx, const FDModule& m) {
  AddModule a;
  a.mod = m;
  if (m.dim() == 0) return a;
  for (auto& s : decompose(m)) {
    auto i = ctx.summand_index(s.mod);
    if (!i) fail(ErrorKind::Input, "summand " + default_label(s.mod) + " is outside add X");
    auto iso = find_isomorphism(ctx.summands[*i], s.mod);
    ensure(iso.has_value(), "isomorphic summand without an isomorphism");
    a.idx.push_back(*i);
    a.incl.push_back(s.incl * *iso);
    a.proj.push_back(inverse_map(*iso) * s.proj);
  }
  return a;
}

AddModule add_object(const AddXContext& ctx, const std::vector<std::size_t>& idx) {
  AddModule a;
  if (idx.empty()) {
    a.mod = zero_module(ctx.lam);
    return a;
  }
  std::vector<FDModule> parts;
  for (auto i : idx) parts.push_back(ctx.summands[i]);
  DirectSum ds = direct_sum(parts);
  a.mod = ds.sum;
  a.idx = idx;
  a.incl = ds.incl;
  a.proj = ds.proj;
  return a;
}

AddModule add_sum(const AddXContext& ctx, const std::vector<AddModule>& parts) {
  std::vector<FDModule> mods;
  for (auto& p : parts) mods.push_back(p.mod);
  if (mods.empty()) return add_object(ctx, {});
  DirectSum ds = direct_sum(mods);
  AddModule a;
  a.mod = ds.sum;
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (std::size_t l = 0; l < parts[k].idx.size(); ++l) {
      a.idx.push_back(parts[k].idx[l]);
      a.incl.push_back(ds.incl[k] * parts[k].incl[l]);
      a.proj.push_back(parts[k].proj[l] * ds.proj[k]);
    }
  return a;
}

YonedaMap yoneda_map(const AddXContext& ctx, const AddModule& s, const AddModule& t, const ModuleMap& f) {
  YonedaMap y;
  y.src = projective_sum(ctx.aus, s.idx);
  y.tgt = projective_sum(ctx.aus, t.idx);
  if (s.idx.empty() || t.idx.empty()) {
    y.map = ModuleMap::zero(y.src.mod, y.tgt.mod);
    return y;
  }
  std::vector<std::vector<std::vector<u32>>> x(t.idx.size(), std::vector<std::vector<u32>>(s.idx.size()));
  for (std::size_t l = 0; l < t.idx.size(); ++l)
    for (std::size_t k = 0; k < s.idx.size(); ++k)
      x[l][k] = ctx.element_of(t.idx[l], s.idx[k], t.proj[l] * f * s.incl[k]);
  y.map = map_from_elements(y.src, y.tgt, x);
  return y;
}

ModuleMap yoneda_unmap(const AddXContext& ctx, const AddModule& s, const AddModule& t, const ProjSum& ps,
                       const ProjSum& pt, const ModuleMap& g) {
  FMatrix m(t.mod.dim(), s.mod.dim(), ctx.lam->p);
  if (!s.idx.empty() && !t.idx.empty()) {
    auto x = element_matrix(ps, pt, g);
    for (std::size_t l = 0; l < t.idx.size(); ++l)
      for (std::size_t k = 0; k < s.idx.size(); ++k)
        m += (t.incl[l] * ctx.element_map(t.idx[l], s.idx[k], x[l][k]) * s.proj[k]).mat;
  }
  return ModuleMap{s.mod, t.mod, m};
}

// ---------------------------------------------------------------------------
// resolutions and syzygies

ResolutionTriple minimal_resolution_triple(const AddXContext& ctx, const FDModule& functor) {
  if (functor.dim() == 0) fail(ErrorKind::Input, "zero functor has no resolution triple");
  FDModule g = inflate(ctx, functor);
  Resolution r = projective_resolution(g, 3);
  if (r.terms.size() > 3) fail(ErrorKind::Internal, "functor resolution has more than three terms");
  auto term = [&](std::size_t k) { return k < r.terms.size() ? r.terms[k] : projective_sum(ctx.aus, {}); };
  ProjSum p0 = term(0), p1 = term(1), p2 = term(2);
  ResolutionTriple t;
  t.c = add_object(ctx, p0.verts);
  t.b = add_object(ctx, p1.verts);
  t.a = add_object(ctx, p2.verts);
  t.g = r.diffs.size() > 0 ? yoneda_unmap(ctx, t.b, t.c, p1, p0, r.diffs[0]) : ModuleMap::zero(t.b.mod, t.c.mod);
  t.f = r.diffs.size() > 1 ? yoneda_unmap(ctx, t.a, t.b, p2, p1, r.diffs[1]) : ModuleMap::zero(t.a.mod, t.b.mod);
  ensure(t.f.injective(), "left map of the resolution triple is not injective");
  ensure((t.g * t.f).is_zero(), "resolution triple is not a complex");
  ensure(t.b.mod.dim() - t.g.rank() == t.f.rank(), "resolution triple is not exact in the middle");
  return t;
}

FDModule presented_functor(const AddXContext& ctx, const ResolutionTriple& t) {
  YonedaMap y = yoneda_map(ctx, t.b, t.c, t.g);
  return deflate(ctx, cokernel(y.map).first);
}

ResolutionTriple functor_syzygy_step(const AddXContext& ctx, const ResolutionTriple& t) {
  const u32 p = ctx.lam->p;
  Cover cv = projective_cover(t.c.mod);
  auto [om, iota] = kernel(cv.map);
  // b': P_C -> B with g b' = cover
  ModuleMap bp = lift_through(cv.proj, cv.map, t.g);
  ModuleMap bi = bp * iota;
  FMatrix k(t.a.mod.dim(), om.dim(), p);
  if (t.a.mod.dim() > 0 && om.dim() > 0) k = factor_through_mono(t.f, bi.mat);
  else ensure(bi.is_zero(), "syzygy map does not factor through the left term");
  DirectSum ds = direct_sum({t.a.mod, cv.proj.mod});
  ResolutionTriple out;
  out.a = to_add(ctx, om);
  AddModule pc = to_add(ctx, cv.proj.mod);
  out.b.mod = ds.sum;
  const AddModule* parts[2] = {&t.a, &pc};
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t l = 0; l < parts[s]->idx.size(); ++l) {
      out.b.idx.push_back(parts[s]->idx[l]);
      out.b.incl.push_back(ds.incl[s] * parts[s]->incl[l]);
      out.b.proj.push_back(parts[s]->proj[l] * ds.proj[s]);
    }
  out.c = t.b;
  out.f = ModuleMap{om, ds.sum, ds.incl[1].mat * iota.mat - ds.incl[0].mat * k};
  out.g = ModuleMap{ds.sum, t.b.mod, t.f.mat * ds.proj[0].mat + bp.mat * ds.proj[1].mat};
  return out;
}

namespace {

std::vector<std::size_t> nonprojective_part(const AddXContext& ctx, const std::vector<std::size_t>& idx) {
  std::vector<std::size_t> v;
  for (auto i : idx)
    if (!ctx.projective_summand(i)) v.push_back(i);
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::size_t> projective_part(const AddXContext& ctx, const std::vector<std::size_t>& idx) {
  std::vector<std::size_t> v;
  for (auto i : idx)
    if (ctx.projective_summand(i)) v.push_back(i);
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::size_t> syzygy_part(const AddXContext& ctx, const AddModule& m, std::size_t k) {
  FDModule s = syzygy(m.mod, k);
  return nonprojective_part(ctx, to_add(ctx, s).idx);
}

}  // namespace

SyzygyTriple functor_syzygy_n(const AddXContext& ctx, const ResolutionTriple& t, std::size_t n) {
  if (n == 0) fail(ErrorKind::Input, "syzygy order must be at least 1");
  ResolutionTriple cur = t;
  for (std::size_t s = 0; s < n; ++s) cur = functor_syzygy_step(ctx, cur);
  const std::size_t k = n / 3;
  std::vector<std::size_t> ea, eb, ec;
  switch (n % 3) {
    case 0:
      ea = syzygy_part(ctx, t.a, k), eb = syzygy_part(ctx, t.b, k), ec = syzygy_part(ctx, t.c, k);
      break;
    case 1:
      ea = syzygy_part(ctx, t.c, k + 1), eb = syzygy_part(ctx, t.a, k), ec = syzygy_part(ctx, t.b, k);
      break;
    default:
      ea = syzygy_part(ctx, t.b, k + 1), eb = syzygy_part(ctx, t.c, k + 1), ec = syzygy_part(ctx, t.a, k);
  }
  if (nonprojective_part(ctx, cur.a.idx) != ea || nonprojective_part(ctx, cur.b.idx) != eb ||
      nonprojective_part(ctx, cur.c.idx) != ec)
    fail(ErrorKind::Falsified, "syzygy triple of order " + std::to_string(n) + " does not have the rotated shape");
  SyzygyTriple out;
  out.triple = cur;
  out.pad_middle = projective_part(ctx, cur.b.idx);
  out.pad_right = projective_part(ctx, cur.c.idx);
  return out;
}

bool stably_isomorphic(const FDModule& m, const FDModule& n) {
  auto parts = [](const FDModule& x) {
    std::vector<FDModule> v;
    if (x.dim() == 0) return v;
    for (auto& s : decompose(x))
      if (!is_projective(s.mod)) v.push_back(s.mod);
    return v;
  };
  auto a = parts(m), b = parts(n);
  if (a.size() != b.size()) return false;
  std::vector<char> used(b.size(), 0);
  for (auto& x : a) {
    bool hit = false;
    for (std::size_t j = 0; j < b.size() && !hit; ++j)
      if (!used[j] && b[j].dimvec() == x.dimvec() && is_isomorphic(x, b[j])) used[j] = 1, hit = true;
    if (!hit) return false;
  }
  return true;
}

FunctorGprj is_gprj_functor(const AddXContext& ctx, const FDModule& functor) {
  if (functor.dim() == 0 || !is_local(functor)) fail(ErrorKind::Input, "functor is not indecomposable");
  if (is_projective(functor)) fail(ErrorKind::Input, "functor is projective");
  if (!ctx.syzygy_closed) fail(ErrorKind::Unsupported, "syzygies of the summands leave add X");
  FunctorGprj out;
  ResolutionTriple t = minimal_resolution_triple(ctx, functor);
  auto d = selfinjective_dimension(ctx.lam);
  std::size_t depth = d ? std::max<std::size_t>(*d, 1) : default_gprj_depth();
  GprjReport& r = out.by_resolution;
  r.verdict = Verdict::Gprj;
  r.exact = true;
  r.checked_depth = depth;
  const std::pair<const char*, const FDModule*> terms[3] = {{"A", &t.a.mod}, {"B", &t.b.mod}, {"C", &t.c.mod}};
  for (auto& [name, m] : terms) {
    GprjReport x = is_gorenstein_projective(*m, depth, d);
    if (x.verdict == Verdict::NotGprj) {
      r = x;
      r.witness = std::string(name) + ": " + x.witness;
      break;
    }
    if (x.verdict == Verdict::Inconclusive) r.verdict = Verdict::Inconclusive;
    r.exact = r.exact && x.exact;
  }
  out.direct = gprj_report(functor);
  return out;
}

// ---------------------------------------------------------------------------
// naming

FDModule representable_functor(const AddXContext& ctx, std::size_t summand) {
  if (ctx.projective_summand(summand)) return zero_module(ctx.stable_aus);
  return projective_module(ctx.stable_aus, ctx.stable_vertex[summand]);
}

FDModule simple_functor(const AddXContext& ctx, std::size_t summand) {
  if (ctx.projective_summand(summand)) return zero_module(ctx.stable_aus);
  return simple_module(ctx.stable_aus, ctx.stable_vertex[summand]);
}

std::string functor_label(const AddXContext& ctx, const FDModule& f) {
  if (f.dim() == 0) return "0";
  for (std::size_t v = 0; v < ctx.stable_aus->nv; ++v) {
    FDModule pv = projective_module(ctx.stable_aus, v);
    if (pv.dimvec() == f.dimvec() && is_isomorphic(pv, f)) return "(-," + ctx.names[ctx.stable_summand[v]] + ")";
  }
  if (f.dim() == 1)
    for (std::size_t v = 0; v < f.nv(); ++v)
      if (f.dimvec()[v]) return "S_" + ctx.names[ctx.stable_summand[v]];
  return dimvec_string(f.dimvec());
}

// ---------------------------------------------------------------------------
// extension functor

ContextEmbedding embed_context(const AddXContext& y, const AddXContext& x) {
  if (!same_algebra(y.lam, x.lam)) fail(ErrorKind::Input, "contexts over different algebras");
  ContextEmbedding e;
  for (auto& s : y.summands) {
    auto i = x.summand_index(s);
    if (!i) fail(ErrorKind::Input, "summand " + default_label(s) + " of the smaller context is missing");
    auto iso = find_isomorphism(s, x.summands[*i]);
    ensure(iso.has_value(), "isomorphic summand without an isomorphism");
    e.index.push_back(*i);
    e.iso.push_back(*iso);
    e.iso_inv.push_back(inverse_map(*iso));
  }
  return e;
}

Upsilon make_upsilon(const AddXContext& x, const AddXContext& y) {
  Upsilon u;
  u.x = &x;
  u.y = &y;
  u.emb = embed_context(y, x);
  return u;
}

namespace {

struct Presentation {
  Cover c0;
  ProjSum p1;
  ModuleMap d;  // P1 -> P0
};

Presentation present(const FDModule& f) {
  Presentation pr;
  pr.c0 = projective_cover(f);
  auto [k, inc] = kernel(pr.c0.map);
  Cover c1 = projective_cover(k);
  pr.p1 = c1.proj;
  pr.d = inc * c1.map;
  return pr;
}

// stable Y-elements between stable vertices to stable X-elements
std::vector<std::vector<std::vector<u32>>> transport(const Upsilon& u, const ProjSum& s, const ProjSum& t,
                                                     const std::vector<std::vector<std::vector<u32>>>& x) {
  const AddXContext& X = *u.x;
  const AddXContext& Y = *u.y;
  std::vector<std::vector<std::vector<u32>>> out(t.verts.size(), std::vector<std::vector<u32>>(s.verts.size()));
  for (std::size_t l = 0; l < t.verts.size(); ++l)
    for (std::size_t k = 0; k < s.verts.size(); ++k) {
      std::size_t ry = Y.stable_summand[t.verts[l]], cy = Y.stable_summand[s.verts[k]];
      std::vector<u32> parent = times(Y.stable_aus->from_quotient, x[l][k]);
      ModuleMap m = u.emb.iso[ry] * Y.element_map(ry, cy, parent) * u.emb.iso_inv[cy];
      std::vector<u32> ax = X.element_of(u.emb.index[ry], u.emb.index[cy], m);
      out[l][k] = times(X.stable_aus->to_quotient, ax);
    }
  return out;
}

ProjSum transport_sum(const Upsilon& u, const ProjSum& s) {
  std::vector<std::size_t> verts;
  for (auto v : s.verts) verts.push_back(u.x->stable_vertex[u.emb.index[u.y->stable_summand[v]]]);
  return projective_sum(u.x->stable_aus, verts);
}

ModuleMap transport_map(const Upsilon& u, const ProjSum& s, const ProjSum& t, const ProjSum& xs, const ProjSum& xt,
                        const ModuleMap& f) {
  if (s.verts.empty() || t.verts.empty()) return ModuleMap::zero(xs.mod, xt.mod);
  return map_from_elements(xs, xt, transport(u, s, t, element_matrix(s, t, f)));
}

struct Transported {
  ProjSum q0;
  FDModule value;
  ModuleMap quo;
};

Transported apply_presentation(const Upsilon& u, const Presentation& pr) {
  Transported t;
  t.q0 = transport_sum(u, pr.c0.proj);
  ProjSum q1 = transport_sum(u, pr.p1);
  ModuleMap d = transport_map(u, pr.p1, pr.c0.proj, q1, t.q0, pr.d);
  auto [c, q] = cokernel(d);
  t.value = c;
  t.quo = q;
  return t;
}

}  // namespace

FDModule Upsilon::apply(const FDModule& f) const {
  if (!same_algebra(f.algebra(), y->stable_aus)) fail(ErrorKind::Input, "functor is not over the smaller context");
  if (f.dim() == 0) return zero_module(x->stable_aus);
  return apply_presentation(*this, present(f)).value;
}

ModuleMap Upsilon::apply(const ModuleMap& s) const {
  if (s.src.dim() == 0 || s.tgt.dim() == 0) return ModuleMap::zero(apply(s.src), apply(s.tgt));
  Presentation pf = present(s.src), pg = present(s.tgt);
  ModuleMap h0 = lift_through(pf.c0.proj, s * pf.c0.map, pg.c0.map);
  Transported tf = apply_presentation(*this, pf), tg = apply_presentation(*this, pg);
  ModuleMap H0 = transport_map(*this, pf.c0.proj, pg.c0.proj, tf.q0, tg.q0, h0);
  return ModuleMap{tf.value, tg.value, tg.quo.mat * H0.mat * right_inverse(tf.quo.mat)};
}

FDModule upsilon(const AddXContext& x, const AddXContext& y, const FDModule& f) { return make_upsilon(x, y).apply(f); }

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> unique_labels(const AddXContext& ctx, const std::vector<FDModule>& ms) {
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> seen;
  for (auto& m : ms) {
    std::string l = functor_label(ctx, m);
    std::size_t c = seen[l]++;
    labels.push_back(c ? l + "#" + std::to_string(c) : l);
  }
  return labels;
}

}  // namespace

FunctorQuiver gprj_functor_quiver(const AddXContext& x, const AddXContext& y, const Budget& budget) {
  FunctorQuiver out;
  Upsilon u = make_upsilon(x, y);
  ARData bd = ar_data(y.stable_aus, budget);
  if (!bd.universe.closed) fail(ErrorKind::Budget, bd.universe.note);
  const std::size_t nb = bd.universe.size();
  for (auto& m : bd.universe.modules) out.fast_members.push_back(u.apply(m));
  std::vector<char> hit(x.size(), 0);
  for (auto i : u.emb.index) hit[i] = 1;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!hit[i] && !x.projective_summand(i)) out.fast_members.push_back(representable_functor(x, i));
  SubcategoryAR sub = subcategory_ar(out.fast_members, unique_labels(x, out.fast_members));
  // translation quiver of the smaller algebra carried over, category radical for the new vertices
  out.fast.nodes = sub.quiver.nodes;
  for (auto& a : bd.quiver.arrows) out.fast.arrows.push_back(a);
  for (auto& a : sub.quiver.arrows)
    if (a.from >= nb || a.to >= nb) out.fast.arrows.push_back(a);
  std::sort(out.fast.arrows.begin(), out.fast.arrows.end(),
            [](const ARArrow& a, const ARArrow& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
  out.fast.tau = bd.quiver.tau;

  GprjKnit kn = knit_gprj(x.stable_aus, budget);
  if (!kn.closed) fail(ErrorKind::Budget, "Gprj knitting over the larger context did not close");
  out.oracle_members = kn.modules;
  out.oracle = subcategory_ar(kn.modules, unique_labels(x, kn.modules)).quiver;
  out.differences = quiver_differences(out.fast, out.oracle);
  return out;
}

void label_by_extension(FunctorQuiver& q, const AddXContext& x, const AddXContext& y) {
  Upsilon up = make_upsilon(x, y);
  std::vector<std::pair<FDModule, std::string>> images;
  for (std::size_t v = 0; v < y.stable_aus->nv; ++v) {
    FDModule s = simple_module(y.stable_aus, v);
    if (!is_projective(s)) images.emplace_back(up.apply(s), "Y(" + functor_label(y, s) + ")");
  }
  IndecUniverse u = all_indecomposables(y.stable_aus);
  for (auto& f : u.modules) {
    std::string l = functor_label(y, f);
    if (l.rfind("(-,", 0) == 0 || l.rfind("S_", 0) == 0) continue;
    images.emplace_back(up.apply(f), "Y(" + l + ")");
  }
  auto relabel = [&](ARQuiver& g, const std::vector<FDModule>& members) {
    for (std::size_t n = 0; n < g.nodes.size() && n < members.size(); ++n) {
      if (g.nodes[n].label.rfind("(-,", 0) == 0) continue;
      for (auto& [img, name] : images)
        if (img.dimvec() == members[n].dimvec() && is_isomorphic(img, members[n])) {
          g.nodes[n].label = name;
          break;
        }
    }
  };
  relabel(q.fast, q.fast_members);
  relabel(q.oracle, q.oracle_members);
}

}  // namespace arq
