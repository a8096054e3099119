#include "arq/morphcat.hpp"

#include <algorithm>
#include <map>

namespace arq {

AlgPtr t2(const AlgPtr& a) { return triangular(a); }

namespace {

const AlgPtr& base_of(const AlgPtr& t) {
  if (t->prov != Provenance::Triangular || !t->base) fail(ErrorKind::Input, "module is not over a triangular matrix algebra");
  return t->base;
}

std::size_t tri(const AlgPtr& t, int c, std::size_t b) { return t->tri_index[c * t->base->dim + b]; }

// B occupies the 1.v vertices, which come first
std::size_t b_dim(const FDModule& m) {
  const std::size_t n = base_of(m.algebra())->nv;
  std::size_t s = 0;
  for (std::size_t v = 0; v < n; ++v) s += m.dimvec()[v];
  return s;
}

}  // namespace

FDModule morph_encode(const AlgPtr& t, const MorphObj& m) {
  const AlgPtr& lam = base_of(t);
  const std::size_t n = lam->nv, d = lam->dim;
  const std::size_t bd = m.b.dim(), ad = m.a.dim(), tot = ad + bd;
  std::vector<std::size_t> vdim(2 * n);
  for (std::size_t v = 0; v < n; ++v) {
    vdim[v] = m.b.dimvec()[v];
    vdim[n + v] = m.a.dimvec()[v];
  }
  std::vector<FMatrix> act(t->dim, FMatrix(tot, tot, lam->p));
  for (std::size_t b = 0; b < d; ++b) {
    act[tri(t, 0, b)].set_block(0, 0, m.b.action(b));
    act[tri(t, 1, b)].set_block(bd, bd, m.a.action(b));
    if (ad && bd) act[tri(t, 2, b)].set_block(0, bd, m.b.action(b) * m.f.mat);
  }
  return FDModule::from_data(t, vdim, act);
}

MorphObj morph_decode(const FDModule& m) {
  const AlgPtr& t = m.algebra();
  const AlgPtr& lam = base_of(t);
  const std::size_t n = lam->nv, d = lam->dim;
  const std::size_t bd = b_dim(m), ad = m.dim() - bd;
  std::vector<std::size_t> bv(m.dimvec().begin(), m.dimvec().begin() + n), av(m.dimvec().begin() + n, m.dimvec().end());
  std::vector<FMatrix> ba, aa;
  for (std::size_t b = 0; b < d; ++b) {
    ba.push_back(m.action(tri(t, 0, b)).block(0, 0, bd, bd));
    aa.push_back(m.action(tri(t, 1, b)).block(bd, bd, ad, ad));
  }
  MorphObj o;
  o.a = FDModule::from_data(lam, av, aa);
  o.b = FDModule::from_data(lam, bv, ba);
  FMatrix f(bd, ad, lam->p);
  for (std::size_t v = 0; v < n; ++v) f += m.action(tri(t, 2, v)).block(0, bd, bd, ad);
  o.f = ModuleMap{o.a, o.b, f};
  return o;
}

MorphMap morph_decode_map(const ModuleMap& g) {
  MorphObj s = morph_decode(g.src), t = morph_decode(g.tgt);
  const std::size_t sb = s.b.dim(), tb = t.b.dim();
  MorphMap m;
  m.on_b = ModuleMap{s.b, t.b, g.mat.block(0, 0, tb, sb)};
  m.on_a = ModuleMap{s.a, t.a, g.mat.block(tb, sb, t.a.dim(), s.a.dim())};
  return m;
}

ModuleMap morph_encode_map(const FDModule& src, const FDModule& tgt, const MorphMap& m) {
  FMatrix g(tgt.dim(), src.dim(), src.p());
  const std::size_t sb = m.on_b.src.dim(), tb = m.on_b.tgt.dim();
  g.set_block(0, 0, m.on_b.mat);
  g.set_block(tb, sb, m.on_a.mat);
  return ModuleMap{src, tgt, g};
}

// ---------------------------------------------------------------------------

Membership all_modules() {
  return [](const FDModule&) { return true; };
}

Membership add_membership(const AddXContext& ctx) {
  return [&ctx](const FDModule& m) {
    if (m.dim() == 0) return true;
    for (auto& s : decompose(m))
      if (!ctx.summand_index(s.mod)) return false;
    return true;
  };
}

Membership gprj_membership() {
  return [](const FDModule& m) { return gprj_report(m).gprj(); };
}

bool s_membership(const MorphObj& m, const Membership& member) {
  if (!m.f.injective()) return false;
  return member(m.a) && member(m.b) && member(m.cokernel());
}

MorphObj identity_object(const FDModule& x) { return MorphObj{x, x, ModuleMap::identity(x)}; }

MorphObj zero_object(const FDModule& x) {
  FDModule z = zero_module(x.algebra());
  return MorphObj{z, x, ModuleMap::zero(z, x)};
}

bool is_trivial_object(const MorphObj& m) {
  if (m.a.dim() == 0) return true;
  return m.a.dim() == m.b.dim() && m.f.rank() == m.a.dim();
}

// ---------------------------------------------------------------------------
// Psi

namespace {

struct PsiData {
  AddModule b, c;
  ModuleMap to_cok;  // B -> Cok f
  YonedaMap y;
  FDModule value;    // over aus
  ModuleMap quo;
};

PsiData psi_data(const AddXContext& ctx, const MorphObj& m) {
  PsiData d;
  if (!m.f.injective()) fail(ErrorKind::Input, "object is not a monomorphism");
  auto [cok, q] = cokernel(m.f);
  d.to_cok = q;
  d.b = to_add(ctx, m.b);
  d.c = to_add(ctx, cok);
  d.y = yoneda_map(ctx, d.b, d.c, q);
  auto [v, quo] = cokernel(d.y.map);
  d.value = v;
  d.quo = quo;
  return d;
}

}  // namespace

FDModule psi(const AddXContext& ctx, const MorphObj& m) {
  if (!s_membership(m, add_membership(ctx))) fail(ErrorKind::Input, "object is not in the submodule category of add X");
  return deflate(ctx, psi_data(ctx, m).value);
}

ModuleMap psi_map(const AddXContext& ctx, const MorphObj& s, const MorphObj& t, const MorphMap& g) {
  PsiData ds = psi_data(ctx, s), dt = psi_data(ctx, t);
  // induced map on cokernels of f
  FMatrix gam = dt.to_cok.mat * g.on_b.mat * right_inverse(ds.to_cok.mat);
  ModuleMap gamma{ds.to_cok.tgt, dt.to_cok.tgt, gam};
  YonedaMap yc = yoneda_map(ctx, ds.c, dt.c, gamma);
  FMatrix m = dt.quo.mat * yc.map.mat * right_inverse(ds.quo.mat);
  return ModuleMap{deflate(ctx, ds.value), deflate(ctx, dt.value), m};
}

MorphObj s_of_functor(const AddXContext& ctx, const FDModule& functor) {
  ResolutionTriple t = minimal_resolution_triple(ctx, functor);
  MorphObj m{t.a.mod, t.b.mod, t.f};
  FDModule back = psi(ctx, m);
  ensure(back.dimvec() == functor.dimvec() && is_isomorphic(back, functor), "Psi does not recover the functor");
  return m;
}

// ---------------------------------------------------------------------------
// names

std::string module_name(const AddXContext& ctx, const FDModule& m) {
  if (m.dim() == 0) return "0";
  AddModule a = to_add(ctx, m);
  std::vector<std::size_t> idx = a.idx;
  std::sort(idx.begin(), idx.end());
  if (idx.size() == 1) return ctx.names[idx[0]];
  std::string s = "[";
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "+" : "") + ctx.names[idx[k]];
  return s + "]";
}

std::string morph_label(const AddXContext& ctx, const MorphObj& m) { return module_name(ctx, m.a) + module_name(ctx, m.b); }

// ---------------------------------------------------------------------------
// Ext-projectives and Ext-injectives

std::vector<std::size_t> ext_injective_summands(const AddXContext& ctx) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    bool inj = true;
    for (std::size_t j = 0; j < ctx.size() && inj; ++j)
      if (ext_group(ctx.summands[j], ctx.summands[i], 1).dim() > 0) inj = false;
    if (inj) out.push_back(i);
  }
  return out;
}

Minimized ext_injective_approximation(const AddXContext& ctx, const FDModule& a) {
  std::vector<FDModule> parts;
  std::vector<FMatrix> comps;
  for (auto i : ext_injective_summands(ctx))
    for (auto& h : hom_basis(a, ctx.summands[i])) {
      parts.push_back(ctx.summands[i]);
      comps.push_back(h.mat);
    }
  if (parts.empty()) fail(ErrorKind::Unsupported, "no maps into Ext-injectives");
  DirectSum ds = direct_sum(parts);
  FMatrix u(ds.sum.dim(), a.dim(), a.p());
  for (std::size_t k = 0; k < parts.size(); ++k) u += ds.incl[k].mat * comps[k];
  Minimized m = left_minimize(ModuleMap{a, ds.sum, u});
  if (!m.map.injective()) fail(ErrorKind::Unsupported, "add X does not have enough Ext-injectives");
  return m;
}

ExtLists ext_projectives_in_S(const AddXContext& ctx) {
  ExtLists out;
  for (std::size_t i = 0; i < ctx.size(); ++i)
    if (ctx.projective_summand(i)) {
      out.projectives.push_back(identity_object(ctx.summands[i]));
      out.projectives.push_back(zero_object(ctx.summands[i]));
    }
  auto inj = ext_injective_summands(ctx);
  // enough Ext-injectives: every summand embeds into one
  for (auto& x : ctx.summands) ext_injective_approximation(ctx, x);
  for (auto i : inj) {
    out.injectives.push_back(identity_object(ctx.summands[i]));
    out.injectives.push_back(zero_object(ctx.summands[i]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// trivial meshes

namespace {

SES encoded_ses(const AlgPtr& t, const MorphObj& l, const MorphObj& m, const MorphObj& r, const MorphMap& i,
                const MorphMap& p) {
  SES s;
  s.left = morph_encode(t, l);
  s.mid = morph_encode(t, m);
  s.right = morph_encode(t, r);
  s.inj = morph_encode_map(s.left, s.mid, i);
  s.surj = morph_encode_map(s.mid, s.right, p);
  ensure(ses_is_exact(s), "trivial mesh is not exact");
  return s;
}

}  // namespace

TrivialMeshes trivial_meshes(const AddXContext& ctx, const AlgPtr& t, const SES& ass) {
  if (!ses_is_exact(ass) || ses_splits(ass)) fail(ErrorKind::Input, "sequence is not a non-split exact sequence");
  const FDModule &A = ass.left, &B = ass.mid, &C = ass.right;
  const ModuleMap &f = ass.inj, &g = ass.surj;
  const u32 p = ctx.lam->p;
  TrivialMeshes out;
  FDModule zero = zero_module(ctx.lam);

  out.ending_zero = encoded_ses(t, identity_object(A), MorphObj{A, B, f}, zero_object(C), MorphMap{ModuleMap::identity(A), f},
                                MorphMap{ModuleMap::zero(A, zero), g});

  Minimized e = ext_injective_approximation(ctx, A);
  const FDModule& I = e.obj;
  // e' : B -> I with e' f = e
  HomSpace hb = hom_space(B, I);
  std::vector<std::vector<u32>> cols;
  for (auto& h : hb.basis) cols.push_back((h * f).mat.vec());
  std::optional<FMatrix> x;
  if (!cols.empty()) x = solve_linear(concat_columns(cols, I.dim() * A.dim(), p), FMatrix::column(e.map.mat.vec(), p));
  if (!x) fail(ErrorKind::Falsified, "Ext-injective approximation does not extend along the almost split sequence");
  ModuleMap ep = hb.combine(*x);
  DirectSum ic = direct_sum({I, C});
  ModuleMap h{B, ic.sum, ic.incl[0].mat * ep.mat + ic.incl[1].mat * g.mat};
  out.ending_identity = encoded_ses(t, MorphObj{A, I, e.map}, MorphObj{B, ic.sum, h}, identity_object(C),
                                    MorphMap{f, ic.incl[0]}, MorphMap{g, ic.proj[1]});

  Cover cv = projective_cover(C);
  auto [om, iota] = kernel(cv.map);
  ModuleMap bp = lift_through(cv.proj, cv.map, g);
  FMatrix k(A.dim(), om.dim(), p);
  if (om.dim() > 0) k = factor_through_mono(f, (bp * iota).mat);
  DirectSum ap = direct_sum({A, cv.proj.mod});
  ModuleMap hk{om, ap.sum, ap.incl[1].mat * iota.mat - ap.incl[0].mat * k};
  out.starting_zero = encoded_ses(t, zero_object(A), MorphObj{om, ap.sum, hk}, MorphObj{om, cv.proj.mod, iota},
                                  MorphMap{ModuleMap::zero(zero, om), ap.incl[0]}, MorphMap{ModuleMap::identity(om), ap.proj[1]});
  return out;
}

namespace {

FMatrix factor_or_zero(const ModuleMap& mono, const ModuleMap& f) {
  if (f.src.dim() == 0 || mono.src.dim() == 0) return FMatrix(mono.src.dim(), f.src.dim(), f.mat.modulus());
  return factor_through_mono(mono, f.mat);
}

// generator k of p to generator offset+k of q, or the reverse
ModuleMap generator_inclusion(const ProjSum& p, const ProjSum& q, std::size_t offset) {
  std::vector<FMatrix> images;
  for (std::size_t k = 0; k < p.verts.size(); ++k) {
    FMatrix c(q.mod.dim(), 1, q.mod.p());
    c(q.gen_coord[offset + k], 0) = 1;
    images.push_back(c);
  }
  return map_from_generators(p, q.mod, images);
}

ModuleMap generator_projection(const ProjSum& p, const ProjSum& q, std::size_t offset) {
  std::vector<FMatrix> images;
  for (std::size_t k = 0; k < p.verts.size(); ++k) {
    FMatrix c(q.mod.dim(), 1, q.mod.p());
    if (k >= offset && k - offset < q.verts.size()) c(q.gen_coord[k - offset], 0) = 1;
    images.push_back(c);
  }
  return map_from_generators(p, q.mod, images);
}

}  // namespace

SES lift_ass(const AddXContext& ctx, const AlgPtr& t, const SES& eta) {
  if (!ses_is_exact(eta)) fail(ErrorKind::Input, "sequence is not exact");
  FDModule kf = inflate(ctx, eta.left), kg = inflate(ctx, eta.mid), kh = inflate(ctx, eta.right);
  ModuleMap ik{kf, kg, eta.inj.mat}, pk{kg, kh, eta.surj.mat};
  std::vector<ProjSum> qf, qg, qh;
  std::vector<ModuleMap> inq, prq, dg;  // inq/prq per level, dg[j]: QG_{j+1} -> QG_j
  ModuleMap prev_inc;
  for (std::size_t level = 0; level < 4; ++level) {
    Cover cf = projective_cover(kf), ch = projective_cover(kh);
    std::vector<std::size_t> verts = cf.proj.verts;
    verts.insert(verts.end(), ch.proj.verts.begin(), ch.proj.verts.end());
    ProjSum g = projective_sum(ctx.aus, verts);
    ModuleMap lam = lift_through(ch.proj, ch.map, pk);
    std::vector<FMatrix> images;
    for (std::size_t k = 0; k < cf.proj.verts.size(); ++k) images.push_back((ik * cf.map).mat.col(cf.proj.gen_coord[k]));
    for (std::size_t k = 0; k < ch.proj.verts.size(); ++k) images.push_back(lam.mat.col(ch.proj.gen_coord[k]));
    ModuleMap eps = map_from_generators(g, kg, images);
    if (level == 3) {
      if (g.verts.size()) fail(ErrorKind::Internal, "horseshoe resolution has more than three terms");
      break;
    }
    if (level > 0) dg.push_back(prev_inc * eps);
    qf.push_back(cf.proj);
    qg.push_back(g);
    qh.push_back(ch.proj);
    inq.push_back(generator_inclusion(cf.proj, g, 0));
    prq.push_back(generator_projection(g, ch.proj, cf.proj.verts.size()));
    auto [nf, incf] = kernel(cf.map);
    auto [ng, incg] = kernel(eps);
    auto [nh, inch] = kernel(ch.map);
    ik = ModuleMap{nf, ng, factor_or_zero(incg, inq.back() * incf)};
    pk = ModuleMap{ng, nh, factor_or_zero(inch, prq.back() * incg)};
    kf = nf, kg = ng, kh = nh;
    prev_inc = incg;
  }
  while (dg.size() < 2) {
    std::size_t j = dg.size();
    dg.push_back(ModuleMap::zero(qg[j + 1].mod, qg[j].mod));
  }
  auto obj = [&](const ProjSum& p) { return add_object(ctx, p.verts); };
  AddModule af = obj(qf[2]), bf = obj(qf[1]), ag = obj(qg[2]), bg = obj(qg[1]), ah = obj(qh[2]), bh = obj(qh[1]);
  auto unmap = [&](const AddModule& s, const AddModule& u, const ProjSum& ps, const ProjSum& pu, const ModuleMap& m) {
    return yoneda_unmap(ctx, s, u, ps, pu, m);
  };
  MorphObj sf = s_of_functor(ctx, eta.left), sh = s_of_functor(ctx, eta.right);
  MorphObj z{ag.mod, bg.mod, unmap(ag, bg, qg[2], qg[1], dg[1])};
  // the triples of s_F and s_H are built from the same covers
  ensure(sf.a.dimvec() == af.mod.dimvec() && sh.a.dimvec() == ah.mod.dimvec(), "horseshoe does not match the resolution triples");
  MorphMap in{unmap(af, ag, qf[2], qg[2], inq[2]), unmap(bf, bg, qf[1], qg[1], inq[1])};
  MorphMap out{unmap(ag, ah, qg[2], qh[2], prq[2]), unmap(bg, bh, qg[1], qh[1], prq[1])};
  SES s;
  s.left = morph_encode(t, MorphObj{af.mod, bf.mod, ModuleMap{af.mod, bf.mod, sf.f.mat}});
  s.mid = morph_encode(t, z);
  s.right = morph_encode(t, MorphObj{ah.mod, bh.mod, ModuleMap{ah.mod, bh.mod, sh.f.mat}});
  s.inj = morph_encode_map(s.left, s.mid, in);
  s.surj = morph_encode_map(s.mid, s.right, out);
  ensure(is_homomorphism(s.left, s.mid, s.inj.mat) && is_homomorphism(s.mid, s.right, s.surj.mat),
         "horseshoe maps are not homomorphisms");
  ensure(ses_is_exact(s), "horseshoe sequence is not exact");
  return s;
}

SES transfer_ass(const AddXContext& ctx, const SES& eps) {
  MorphObj l = morph_decode(eps.left), m = morph_decode(eps.mid), r = morph_decode(eps.right);
  if (is_trivial_object(r)) fail(ErrorKind::Input, "sequence ends at a trivial object");
  SES out;
  out.left = psi(ctx, l);
  out.mid = psi(ctx, m);
  out.right = psi(ctx, r);
  out.inj = psi_map(ctx, l, m, morph_decode_map(eps.inj));
  out.surj = psi_map(ctx, m, r, morph_decode_map(eps.surj));
  out.inj.src = out.left, out.inj.tgt = out.mid;
  out.surj.src = out.mid, out.surj.tgt = out.right;
  if (out.left.dim() == 0) fail(ErrorKind::Falsified, "transferred sequence starts at zero");
  if (!ses_is_exact(out)) fail(ErrorKind::Falsified, "transferred sequence is not exact");
  if (ses_splits(out)) fail(ErrorKind::Falsified, "transferred sequence splits");
  return out;
}

// ---------------------------------------------------------------------------
// quiver assembly

namespace {

// radical maps a -> b between indecomposables
std::vector<ModuleMap> radical_maps(const FDModule& a, const FDModule& b) {
  HomSpace h = hom_space(a, b);
  if (a.dimvec() != b.dimvec()) return h.basis;
  auto back = find_isomorphism(b, a);
  if (!back) return h.basis;
  FMatrix t(1, h.size(), a.p());
  for (std::size_t k = 0; k < h.size(); ++k) {
    FMatrix e = (*back * h.basis[k]).mat;
    u64 tr = 0;
    for (std::size_t i = 0; i < e.rows(); ++i) tr += e(i, i);
    t(0, k) = u32(tr % a.p());
  }
  FMatrix rad = kernel_basis(t);
  std::vector<ModuleMap> out;
  for (std::size_t c = 0; c < rad.cols(); ++c) out.push_back(h.combine(rad.col_vec(c)));
  return out;
}

// dim rad(m, n) / rad^2(m, n) for non-isomorphic indecomposables, with rad^2
// generated by factorizations through the given complete list of indecomposables
std::size_t irreducible_count(const FDModule& m, const FDModule& n, const std::vector<FDModule>& universe) {
  HomSpace h = hom_space(m, n);
  if (h.size() == 0) return 0;
  std::vector<std::vector<u32>> cols;
  for (auto& z : universe) {
    auto in = radical_maps(m, z);
    if (in.empty()) continue;
    auto out = radical_maps(z, n);
    for (auto& g : out)
      for (auto& f : in) cols.push_back(h.coords((g * f).mat).col_vec(0));
  }
  std::size_t r = cols.empty() ? 0 : rank_of(concat_columns(cols, h.size(), m.p()));
  return h.size() - r;
}

}  // namespace

SXQuiver assemble_sx_quiver(const AddXContext& ctx, Ambient ambient, const Budget& budget) {
  SXQuiver out;
  AlgPtr t = t2(ctx.lam);
  ARData bd = ar_data(ctx.stable_aus, budget);
  if (!bd.universe.closed) fail(ErrorKind::Budget, bd.universe.note);

  std::vector<std::string> conflicts;
  std::map<std::string, std::size_t> at;
  std::vector<FDModule> encoded;
  auto add_node = [&](const MorphObj& m, NodeFlags extra) {
    FDModule e = morph_encode(t, m);
    encoded.push_back(e);
    ARNode n;
    n.id = out.fast.nodes.size();
    n.label = morph_label(ctx, m);
    n.dimvec = e.dimvec();
    n.flags = extra;
    n.flags.projective = is_projective(e);
    n.flags.injective = is_injective(e);
    if (!at.emplace(n.label, n.id).second) fail(ErrorKind::Internal, "two vertices named " + n.label);
    out.fast.nodes.push_back(n);
  };
  for (auto& f : bd.universe.modules) add_node(s_of_functor(ctx, f), {});
  auto inj = ext_injective_summands(ctx);
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    NodeFlags fl;
    fl.ext_projective = ctx.projective_summand(i);
    fl.ext_injective = std::find(inj.begin(), inj.end(), i) != inj.end();
    add_node(identity_object(ctx.summands[i]), fl);
    add_node(zero_object(ctx.summands[i]), fl);
  }

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> arrows;
  auto put = [&](std::size_t u, std::size_t v, std::size_t mult) {
    auto [it, fresh] = arrows.emplace(std::make_pair(u, v), mult);
    if (!fresh && it->second != mult)
      conflicts.push_back("arrow " + out.fast.nodes[u].label + " -> " + out.fast.nodes[v].label + " has valuations " +
                          std::to_string(it->second) + " and " + std::to_string(mult));
  };
  for (auto& a : bd.quiver.arrows) put(a.from, a.to, a.a);
  std::vector<TauLink> tau = bd.quiver.tau;

  auto node_of = [&](const FDModule& encoded) {
    std::string l = morph_label(ctx, morph_decode(encoded));
    auto it = at.find(l);
    if (it == at.end()) fail(ErrorKind::Falsified, "object " + l + " is not a vertex of the assembled quiver");
    return it->second;
  };
  auto wire = [&](const SES& s) {
    out.meshes.push_back(s);
    std::size_t l = node_of(s.left), r = node_of(s.right);
    std::map<std::size_t, std::size_t> mult;
    for (auto& part : decompose(s.mid)) ++mult[node_of(part.mod)];
    for (auto [u, m] : mult) {
      put(l, u, m);
      put(u, r, m);
    }
    if (std::none_of(tau.begin(), tau.end(), [&](const TauLink& x) { return x.from == r; })) tau.push_back(TauLink{r, l});
    else if (std::none_of(tau.begin(), tau.end(), [&](const TauLink& x) { return x.from == r && x.to == l; }))
      conflicts.push_back("two translates of " + out.fast.nodes[r].label);
  };
  // meshes at the vertices coming from stable_aus-modules
  for (std::size_t h = 0; h < bd.universe.size(); ++h)
    if (bd.ass[h]) wire(lift_ass(ctx, t, *bd.ass[h]));
  // meshes at the trivial vertices, from the relative almost split sequences of X
  SubcategoryAR xs = subcategory_ar(ctx.summands, ctx.names);
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (!xs.sink_ses[i]) continue;
    TrivialMeshes tm = trivial_meshes(ctx, t, *xs.sink_ses[i]);
    wire(tm.ending_zero);
    wire(tm.ending_identity);
    wire(tm.starting_zero);
  }
  // no mesh ends at an Ext-projective vertex or starts at an Ext-injective one,
  // so arrows between such vertices come from the radical of the assembled list
  for (std::size_t u = 0; u < out.fast.nodes.size(); ++u) {
    if (!out.fast.nodes[u].flags.ext_injective) continue;
    for (std::size_t v = 0; v < out.fast.nodes.size(); ++v) {
      if (u == v || !out.fast.nodes[v].flags.ext_projective || arrows.count({u, v})) continue;
      if (std::size_t m = irreducible_count(encoded[u], encoded[v], encoded)) put(u, v, m);
    }
  }
  for (auto& [k, m] : arrows) out.fast.arrows.push_back(ARArrow{k.first, k.second, m, m});
  out.fast.tau = tau;

  // oracle
  std::vector<FDModule> members;
  if (ambient == Ambient::Gprj) {
    GprjKnit kn = knit_gprj(t, budget);
    if (!kn.closed) fail(ErrorKind::Budget, "Gprj knitting over the triangular algebra did not close");
    for (auto& m : kn.modules) {
      if (!s_membership(morph_decode(m), add_membership(ctx)))
        fail(ErrorKind::Falsified, "Gprj module of the triangular algebra outside the submodule category");
      members.push_back(m);
    }
  } else {
    IndecUniverse u = all_indecomposables(t, budget);
    if (!u.closed) fail(ErrorKind::Budget, u.note);
    Membership member = add_membership(ctx);
    for (auto& m : u.modules)
      if (s_membership(morph_decode(m), member)) members.push_back(m);
  }
  std::vector<std::string> labels;
  for (auto& m : members) labels.push_back(morph_label(ctx, morph_decode(m)));
  out.oracle_members = members;
  out.oracle = subcategory_ar(members, labels).quiver;
  out.differences = conflicts;
  for (auto& d : quiver_differences(out.fast, out.oracle)) out.differences.push_back(d);
  return out;
}

}  // namespace arq
