#include "arq/artheory.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <tuple>

namespace arq {

namespace {

u32 trace_of(const FMatrix& m) {
  u32 t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t = add_mod(t, m(i, i), m.modulus());
  return t;
}

// columns: hom-space coordinates of the given maps
FMatrix coords_of(const HomSpace& h, const std::vector<FMatrix>& maps) {
  std::vector<std::vector<u32>> cols;
  for (auto& m : maps) cols.push_back(h.coords(m).col_vec(0));
  return concat_columns(cols, h.size(), h.src.p());
}

// indices of candidate columns extending span(base) greedily
std::vector<std::size_t> extend_basis(const FMatrix& base, const FMatrix& cand) {
  std::vector<std::size_t> out;
  FMatrix cur = base;
  std::size_t r = rank_of(cur);
  for (std::size_t j = 0; j < cand.cols(); ++j) {
    FMatrix next = cur.cols() ? FMatrix::hcat(cur, cand.col(j)) : cand.col(j);
    std::size_t r2 = rank_of(next);
    if (r2 > r) {
      out.push_back(j);
      cur = next;
      r = r2;
    }
  }
  return out;
}

// non-invertible maps u -> c for u isomorphic to c, in hom coordinates
FMatrix radical_between_isomorphic(const HomSpace& h, const ModuleMap& back) {
  const u32 p = h.src.p();
  FMatrix f(1, h.size(), p);
  for (std::size_t k = 0; k < h.size(); ++k) f(0, k) = trace_of((back * h.basis[k]).mat);
  return kernel_basis(f);
}

FDModule strip(const FDModule& m, bool projective) {
  auto parts = decompose(m);
  std::vector<FDModule> keep;
  for (auto& s : parts)
    if (projective ? !is_projective(s.mod) : !is_injective(s.mod)) keep.push_back(s.mod);
  if (keep.size() == parts.size()) return m;
  if (keep.empty()) return zero_module(m.algebra());
  return direct_sum_module(keep);
}

}  // namespace

// ---------------------------------------------------------------------------

std::optional<std::size_t> ARQuiver::find(const std::string& label) const {
  for (auto& n : nodes)
    if (n.label == label) return n.id;
  return std::nullopt;
}

std::size_t ARQuiver::multiplicity(std::size_t from, std::size_t to) const {
  for (auto& a : arrows)
    if (a.from == from && a.to == to) return a.a;
  return 0;
}

std::optional<std::size_t> ARQuiver::tau_of(std::size_t c) const {
  for (auto& t : tau)
    if (t.from == c) return t.to;
  return std::nullopt;
}

std::optional<std::size_t> IndecUniverse::index_of(const FDModule& m) const {
  for (std::size_t i = 0; i < modules.size(); ++i)
    if (modules[i].dimvec() == m.dimvec() && is_isomorphic(modules[i], m)) return i;
  return std::nullopt;
}

std::size_t IndecUniverse::insert(const FDModule& m) {
  if (auto i = index_of(m)) return *i;
  modules.push_back(m);
  return modules.size() - 1;
}

std::string dimvec_string(const std::vector<std::size_t>& d) {
  bool wide = std::any_of(d.begin(), d.end(), [](std::size_t x) { return x > 9; });
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (wide && i) s += ",";
    s += std::to_string(d[i]);
  }
  return s;
}

std::string default_label(const FDModule& m) {
  const auto& alg = m.algebra();
  for (std::size_t v = 0; v < alg->nv; ++v) {
    FDModule pv = projective_module(alg, v);
    if (pv.dimvec() == m.dimvec() && is_isomorphic(pv, m)) return "P" + alg->vertex_names[v];
  }
  for (std::size_t v = 0; v < alg->nv; ++v) {
    FDModule iv = injective_module(alg, v);
    if (iv.dimvec() == m.dimvec() && is_isomorphic(iv, m)) return "I" + alg->vertex_names[v];
  }
  for (std::size_t v = 0; v < alg->nv; ++v) {
    FDModule sv = simple_module(alg, v);
    if (sv.dimvec() == m.dimvec()) return "S" + alg->vertex_names[v];
  }
  return "[" + dimvec_string(m.dimvec()) + "]";
}

FDModule tau_translate(const FDModule& m, bool forward) {
  FDModule core = strip(m, forward);
  if (core.dim() == 0) return core;
  return forward ? tau(core) : tau_inverse(core);
}

SES almost_split_sequence(const FDModule& c) {
  if (c.dim() == 0 || !is_local(c)) fail(ErrorKind::Input, "not indecomposable");
  if (is_projective(c)) fail(ErrorKind::Input, "projective has no almost split sequence ending at it");
  FDModule t = tau(c);
  ExtGroup e = ext_group(c, t, 1);
  ensure(e.dim() > 0, "Ext(C, tau C) vanishes");
  HomSpace end = hom_space(c, c);
  FMatrix radc = radical_of_local_end(end);
  const u32 p = c.p();
  std::vector<FMatrix> blocks;
  for (std::size_t r = 0; r < radc.cols(); ++r) {
    ModuleMap phi = end.combine(radc.col(r));
    ModuleMap lift = lift_through(e.cover.proj, phi * e.cover.map, e.cover.map);
    FMatrix om = factor_through_mono(e.omega_incl, lift.mat * e.omega_incl.mat);
    FMatrix act(e.dim(), e.dim(), p);
    for (std::size_t k = 0; k < e.dim(); ++k) {
      ModuleMap moved{e.omega, t, e.class_map(k).mat * om};
      act.set_block(0, k, e.class_coords(moved));
    }
    blocks.push_back(act);
  }
  FMatrix socle = blocks.empty() ? FMatrix::identity(e.dim(), p) : kernel_basis(FMatrix::vcat(blocks, e.dim(), p));
  ensure(socle.cols() > 0, "no class killed by the radical");
  std::vector<u32> xi = socle.col_vec(0);
  FMatrix rep(t.dim(), e.omega.dim(), p);
  for (std::size_t k = 0; k < e.dim(); ++k)
    if (xi[k]) rep.add_scaled(e.class_map(k).mat, xi[k]);
  SES s = extension_to_ses(e, ModuleMap{e.omega, t, rep});
  ensure(ses_is_exact(s) && !ses_splits(s), "almost split candidate is not a non-split sequence");
  return s;
}

SES almost_split_sequence_from(const FDModule& a) {
  if (a.dim() == 0 || !is_local(a)) fail(ErrorKind::Input, "not indecomposable");
  if (is_injective(a)) fail(ErrorKind::Input, "injective has no almost split sequence starting at it");
  SES s = almost_split_sequence(tau_inverse(a));
  auto phi = find_isomorphism(a, s.left);
  ensure(phi.has_value(), "tau tau^-1 does not return the module");
  s.inj = s.inj * *phi;
  s.left = a;
  return s;
}

// ---------------------------------------------------------------------------

namespace {

struct Closure {
  IndecUniverse u;
  std::vector<std::optional<SES>> ass;
};

void close_universe(Closure& cl, const Budget& budget) {
  auto over = [&](const FDModule& m) {
    if (m.dim() > budget.max_dim) {
      cl.u.note = "budget exceeded: module of dimension " + std::to_string(m.dim());
      return true;
    }
    if (cl.u.size() > budget.max_count) {
      cl.u.note = "budget exceeded: more than " + std::to_string(budget.max_count) + " indecomposables";
      return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < cl.u.size(); ++i) {
    cl.ass.resize(cl.u.size());
    FDModule m = cl.u.modules[i];
    if (over(m)) return;
    if (!is_projective(m)) {
      SES s = almost_split_sequence(m);
      cl.u.insert(s.left);
      for (auto& part : decompose(s.mid)) cl.u.insert(part.mod);
      cl.ass.resize(cl.u.size());
      cl.ass[i] = s;
    }
    if (!is_injective(m)) cl.u.insert(tau_inverse(m));
    if (is_projective(m)) {
      FDModule rad = submodule(m, radical_span(m)).first;
      if (rad.dim())
        for (auto& part : decompose(rad)) cl.u.insert(part.mod);
    }
    if (is_injective(m)) {
      FDModule q = quotient(m, socle_span(m)).first;
      if (q.dim())
        for (auto& part : decompose(q)) cl.u.insert(part.mod);
    }
    if (cl.u.size() > budget.max_count) {
      over(m);
      return;
    }
  }
  cl.ass.resize(cl.u.size());
  cl.u.closed = true;
}

void canonical_sort(Closure& cl) {
  std::vector<std::size_t> order(cl.u.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return cl.u.modules[a].dimvec() < cl.u.modules[b].dimvec(); });
  Closure out;
  out.u.alg = cl.u.alg;
  out.u.closed = cl.u.closed;
  out.u.note = cl.u.note;
  for (auto i : order) {
    out.u.modules.push_back(cl.u.modules[i]);
    out.ass.push_back(i < cl.ass.size() ? cl.ass[i] : std::nullopt);
  }
  cl = std::move(out);
}

Closure closure_of(const AlgPtr& alg, const Budget& budget) {
  Closure cl;
  cl.u.alg = alg;
  for (auto& p : projective_indecomposables(alg)) cl.u.insert(p);
  for (auto& i : injective_indecomposables(alg)) cl.u.insert(i);
  for (auto& s : simple_modules(alg)) cl.u.insert(s);
  close_universe(cl, budget);
  canonical_sort(cl);
  return cl;
}

}  // namespace

IndecUniverse all_indecomposables(const AlgPtr& alg, const Budget& budget) { return closure_of(alg, budget).u; }

std::vector<std::size_t> multiplicities(const FDModule& m, const std::vector<FDModule>& universe) {
  std::vector<std::size_t> out(universe.size(), 0);
  for (auto& part : decompose(m)) {
    bool found = false;
    for (std::size_t i = 0; i < universe.size() && !found; ++i)
      if (universe[i].dimvec() == part.mod.dimvec() && is_isomorphic(universe[i], part.mod)) {
        out[i]++;
        found = true;
      }
    if (!found) fail(ErrorKind::Internal, "summand " + dimvec_string(part.mod.dimvec()) + " outside the universe");
  }
  return out;
}

namespace {

ARData build_ar(Closure cl) {
  ARData d;
  d.universe = cl.u;
  d.ass = cl.ass;
  const auto& mods = d.universe.modules;
  const std::size_t n = mods.size();
  if (!d.universe.closed) fail(ErrorKind::Budget, d.universe.note.empty() ? "universe not closed" : d.universe.note);
  for (std::size_t i = 0; i < n; ++i) {
    ARNode node;
    node.id = i;
    node.label = default_label(mods[i]);
    node.dimvec = mods[i].dimvec();
    node.flags.projective = node.flags.ext_projective = is_projective(mods[i]);
    node.flags.injective = node.flags.ext_injective = is_injective(mods[i]);
    d.quiver.nodes.push_back(node);
    if (!node.flags.projective && !d.ass[i]) d.ass[i] = almost_split_sequence(mods[i]);
  }
  // incoming multiplicities from middle terms / radicals
  std::vector<std::vector<std::size_t>> in(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (d.ass[c]) {
      in[c] = multiplicities(d.ass[c]->mid, mods);
      auto t = d.universe.index_of(d.ass[c]->left);
      ensure(t.has_value(), "translate outside the universe");
      d.quiver.tau.push_back(TauLink{c, *t});
    } else {
      FDModule rad = submodule(mods[c], radical_span(mods[c])).first;
      in[c] = rad.dim() ? multiplicities(rad, mods) : std::vector<std::size_t>(n, 0);
    }
  }
  // outgoing multiplicities from the sequence starting at each node
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t m = 0; m < n; ++m) {
    if (d.quiver.nodes[m].flags.injective) {
      FDModule q = quotient(mods[m], socle_span(mods[m])).first;
      out[m] = q.dim() ? multiplicities(q, mods) : std::vector<std::size_t>(n, 0);
    } else {
      std::optional<std::size_t> start;
      for (auto& t : d.quiver.tau)
        if (t.to == m) start = t.from;
      ensure(start.has_value(), "no sequence starts at a non-injective node");
      out[m] = in[*start];
    }
  }
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t m = 0; m < n; ++m)
      if (in[c][m]) d.quiver.arrows.push_back(ARArrow{m, c, in[c][m], out[m][c]});
  std::sort(d.quiver.tau.begin(), d.quiver.tau.end(), [](const TauLink& a, const TauLink& b) { return a.from < b.from; });
  std::sort(d.quiver.arrows.begin(), d.quiver.arrows.end(),
            [](const ARArrow& a, const ARArrow& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
  return d;
}

}  // namespace

ARData ar_data(const AlgPtr& alg, const Budget& budget) { return build_ar(closure_of(alg, budget)); }

ARData ar_data_of(IndecUniverse u) {
  Closure cl;
  cl.ass.resize(u.size());
  cl.u = std::move(u);
  return build_ar(std::move(cl));
}

ARQuiver ar_quiver(const AlgPtr& alg, const Budget& budget) { return ar_data(alg, budget).quiver; }

// ---------------------------------------------------------------------------

SubcategoryAR subcategory_ar(const std::vector<FDModule>& members, const std::vector<std::string>& labels) {
  SubcategoryAR out;
  out.members = members;
  const std::size_t n = members.size();
  if (n == 0) return out;
  const u32 p = members[0].p();
  std::vector<std::vector<HomSpace>> H(n, std::vector<HomSpace>(n));
  std::vector<std::vector<FMatrix>> radc(n, std::vector<FMatrix>(n));  // radical in hom coordinates
  std::vector<std::vector<std::vector<FMatrix>>> radm(n, std::vector<std::vector<FMatrix>>(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t c = 0; c < n; ++c) {
      H[u][c] = hom_space(members[u], members[c]);
      const std::size_t k = H[u][c].size();
      radc[u][c] = u == c ? radical_of_local_end(H[u][c]) : FMatrix::identity(k, p);
      for (std::size_t j = 0; j < radc[u][c].cols(); ++j) radm[u][c].push_back(H[u][c].combine(radc[u][c].col(j)).mat);
    }
  // irreducible representatives: rad modulo rad^2
  std::vector<std::vector<std::vector<ModuleMap>>> irr(n, std::vector<std::vector<ModuleMap>>(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t c = 0; c < n; ++c) {
      if (radm[u][c].empty()) continue;
      std::vector<FMatrix> comps;
      for (std::size_t w = 0; w < n; ++w) {
        if (radm[u][w].empty() || radm[w][c].empty()) continue;
        for (auto& b : radm[w][c])
          for (auto& a : radm[u][w]) {
            FMatrix ba = b * a;
            if (!ba.is_zero()) comps.push_back(ba);
          }
      }
      const std::size_t k = H[u][c].size();
      FMatrix r2 = comps.empty() ? FMatrix(k, 0, p) : column_basis(coords_of(H[u][c], comps));
      for (auto j : extend_basis(r2, radc[u][c])) irr[u][c].push_back(H[u][c].combine(radc[u][c].col(j)));
    }
  for (std::size_t i = 0; i < n; ++i) {
    ARNode node;
    node.id = i;
    node.label = i < labels.size() ? labels[i] : default_label(members[i]);
    node.dimvec = members[i].dimvec();
    node.flags.projective = is_projective(members[i]);
    node.flags.injective = is_injective(members[i]);
    out.quiver.nodes.push_back(node);
  }
  out.sink_ses.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    // sink map
    std::vector<FDModule> parts;
    std::vector<FMatrix> comps;
    for (std::size_t u = 0; u < n; ++u)
      for (auto& f : irr[u][c]) {
        parts.push_back(members[u]);
        comps.push_back(f.mat);
      }
    for (std::size_t u = 0; u < n; ++u)
      if (!irr[u][c].empty()) {
        std::size_t a = irr[u][c].size(), b = irr[u][c].size();
        out.quiver.arrows.push_back(ARArrow{u, c, a, b});
      }
    if (parts.empty()) {
      FDModule z = zero_module(members[c].algebra());
      out.sink.push_back(ModuleMap::zero(z, members[c]));
      out.quiver.nodes[c].flags.ext_projective = true;
    } else {
      DirectSum ds = direct_sum(parts);
      FMatrix g(members[c].dim(), ds.sum.dim(), p);
      for (std::size_t k = 0; k < parts.size(); ++k) g += comps[k] * ds.proj[k].mat;
      ModuleMap sink{ds.sum, members[c], g};
      out.sink.push_back(sink);
      if (!sink.surjective()) {
        out.quiver.nodes[c].flags.ext_projective = true;
      } else {
        // a surjective sink map whose kernel leaves the subcategory is not a
        // proper epimorphism, so the node is still Ext-projective
        auto [K, inc] = kernel(sink);
        std::optional<std::size_t> t;
        for (std::size_t u = 0; u < n && !t; ++u)
          if (members[u].dimvec() == K.dimvec() && is_isomorphic(members[u], K)) t = u;
        if (!t) {
          out.quiver.nodes[c].flags.ext_projective = true;
        } else {
          out.quiver.tau.push_back(TauLink{c, *t});
          out.sink_ses[c] = SES{K, ds.sum, members[c], inc, sink};
        }
      }
    }
    // source map
    std::vector<FDModule> tparts;
    std::vector<FMatrix> tcomps;
    for (std::size_t u = 0; u < n; ++u)
      for (auto& f : irr[c][u]) {
        tparts.push_back(members[u]);
        tcomps.push_back(f.mat);
      }
    if (tparts.empty()) {
      FDModule z = zero_module(members[c].algebra());
      out.source.push_back(ModuleMap::zero(members[c], z));
      out.quiver.nodes[c].flags.ext_injective = true;
    } else {
      DirectSum ds = direct_sum(tparts);
      FMatrix f(ds.sum.dim(), members[c].dim(), p);
      for (std::size_t k = 0; k < tparts.size(); ++k) f += ds.incl[k].mat * tcomps[k];
      ModuleMap source{members[c], ds.sum, f};
      out.source.push_back(source);
      bool proper = source.injective();
      if (proper) {
        FDModule q = cokernel(source).first;
        proper = false;
        for (std::size_t u = 0; u < n && !proper; ++u)
          if (members[u].dimvec() == q.dimvec() && is_isomorphic(members[u], q)) proper = true;
      }
      out.quiver.nodes[c].flags.ext_injective = !proper;
    }
  }
  std::sort(out.quiver.arrows.begin(), out.quiver.arrows.end(),
            [](const ARArrow& a, const ARArrow& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
  return out;
}

ARQuiver subcategory_ar_quiver(const IndecUniverse& universe, const Membership& member) {
  if (!universe.closed) fail(ErrorKind::Budget, "universe not closed");
  std::vector<FDModule> ms;
  for (auto& m : universe.modules)
    if (member(m)) ms.push_back(m);
  return subcategory_ar(ms).quiver;
}

// ---------------------------------------------------------------------------

bool verify_almost_split(const SES& seq, const std::vector<FDModule>& universe) {
  if (!ses_is_exact(seq) || ses_splits(seq)) return false;
  if (!is_local(seq.left) || !is_local(seq.right)) return false;
  const u32 p = seq.mid.p();
  for (auto& u : universe) {
    // right end: Hom(U, mid) -> Hom(U, right)
    {
      HomSpace target = hom_space(u, seq.right);
      std::vector<FMatrix> imgs;
      for (auto& h : hom_basis(u, seq.mid)) imgs.push_back((seq.surj * h).mat);
      std::size_t img_rank = imgs.empty() ? 0 : rank_of(coords_of(target, imgs));
      std::size_t want = target.size();
      if (u.dimvec() == seq.right.dimvec()) {
        if (auto iso = find_isomorphism(seq.right, u)) {
          FMatrix rad = radical_between_isomorphic(target, *iso);
          if (img_rank != rad.cols()) return false;
          if (!imgs.empty()) {
            FMatrix both = FMatrix::hcat(rad, coords_of(target, imgs));
            if (rank_of(both) != rad.cols()) return false;
          }
          continue;
        }
      }
      if (img_rank != want) return false;
    }
  }
  for (auto& u : universe) {
    // left end: Hom(mid, U) -> Hom(left, U)
    HomSpace target = hom_space(seq.left, u);
    std::vector<FMatrix> imgs;
    for (auto& h : hom_basis(seq.mid, u)) imgs.push_back((h * seq.inj).mat);
    std::size_t img_rank = imgs.empty() ? 0 : rank_of(coords_of(target, imgs));
    if (u.dimvec() == seq.left.dimvec()) {
      if (auto iso = find_isomorphism(u, seq.left)) {
        // phi: left -> U is invertible iff iso * phi is
        FMatrix f(1, target.size(), p);
        for (std::size_t k = 0; k < target.size(); ++k) f(0, k) = trace_of((*iso * target.basis[k]).mat);
        FMatrix rad = kernel_basis(f);
        if (img_rank != rad.cols()) return false;
        if (!imgs.empty() && rank_of(FMatrix::hcat(rad, coords_of(target, imgs))) != rad.cols()) return false;
        continue;
      }
    }
    if (img_rank != target.size()) return false;
  }
  return true;
}

bool verify_almost_split(const SES& seq, const IndecUniverse& universe) { return verify_almost_split(seq, universe.modules); }

std::vector<std::string> mesh_violations(const ARQuiver& q) {
  std::vector<std::string> bad;
  for (auto& t : q.tau) {
    const auto& c = q.nodes[t.from];
    const auto& tc = q.nodes[t.to];
    std::vector<std::size_t> lhs(c.dimvec.size(), 0), rhs(c.dimvec.size(), 0);
    for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] = c.dimvec[i] + tc.dimvec[i];
    for (auto& a : q.arrows)
      if (a.to == t.from)
        for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += a.a * q.nodes[a.from].dimvec[i];
    if (lhs != rhs) bad.push_back("mesh at " + c.label);
  }
  return bad;
}

std::vector<std::string> quiver_differences(const ARQuiver& x, const ARQuiver& y) {
  std::vector<std::string> out;
  auto flag_string = [](const NodeFlags& f) {
    return std::string() + (f.projective ? "p" : "-") + (f.injective ? "i" : "-") + (f.ext_projective ? "P" : "-") +
           (f.ext_injective ? "I" : "-");
  };
  for (auto& n : x.nodes) {
    auto j = y.find(n.label);
    if (!j) {
      out.push_back("node " + n.label + " only in the first quiver");
      continue;
    }
    const auto& m = y.nodes[*j];
    if (m.dimvec != n.dimvec) out.push_back("node " + n.label + " has dimension vectors " + dimvec_string(n.dimvec) + " and " + dimvec_string(m.dimvec));
    if (flag_string(m.flags) != flag_string(n.flags)) out.push_back("node " + n.label + " has flags " + flag_string(n.flags) + " and " + flag_string(m.flags));
  }
  for (auto& n : y.nodes)
    if (!x.find(n.label)) out.push_back("node " + n.label + " only in the second quiver");
  using Key = std::tuple<std::string, std::string, std::size_t, std::size_t>;
  auto arrows = [](const ARQuiver& q) {
    std::vector<Key> v;
    for (auto& a : q.arrows) v.emplace_back(q.nodes[a.from].label, q.nodes[a.to].label, a.a, a.b);
    std::sort(v.begin(), v.end());
    return v;
  };
  auto taus = [](const ARQuiver& q) {
    std::vector<std::pair<std::string, std::string>> v;
    for (auto& t : q.tau) v.emplace_back(q.nodes[t.from].label, q.nodes[t.to].label);
    std::sort(v.begin(), v.end());
    return v;
  };
  auto ax = arrows(x), ay = arrows(y);
  for (auto& a : ax)
    if (!std::binary_search(ay.begin(), ay.end(), a)) out.push_back("arrow " + std::get<0>(a) + " -> " + std::get<1>(a) + " only in the first quiver");
  for (auto& a : ay)
    if (!std::binary_search(ax.begin(), ax.end(), a)) out.push_back("arrow " + std::get<0>(a) + " -> " + std::get<1>(a) + " only in the second quiver");
  auto tx = taus(x), ty = taus(y);
  for (auto& t : tx)
    if (!std::binary_search(ty.begin(), ty.end(), t)) out.push_back("tau " + t.first + " -> " + t.second + " only in the first quiver");
  for (auto& t : ty)
    if (!std::binary_search(tx.begin(), tx.end(), t)) out.push_back("tau " + t.first + " -> " + t.second + " only in the second quiver");
  return out;
}

}  // namespace arq
