#include "arq/gorenstein.hpp"

#include <algorithm>
#include <numeric>

namespace arq {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Gprj: return "gprj";
    case Verdict::NotGprj: return "not_gprj";
    default: return "inconclusive";
  }
}

std::size_t default_gprj_depth() { return 12; }

std::size_t injective_dimension(const FDModule& m, std::size_t cap) { return projective_dimension(dual(m), cap); }

std::optional<std::size_t> selfinjective_dimension(const AlgPtr& a, std::size_t cap) {
  std::size_t best = 0;
  for (std::size_t v = 0; v < a->nv; ++v) {
    std::size_t right = injective_dimension(projective_module(a, v), cap);
    std::size_t left = projective_dimension(injective_module(a, v), cap);
    if (right > cap || left > cap) return std::nullopt;
    best = std::max({best, right, left});
  }
  return best;
}

namespace {

// first i in [1, depth] with Ext^i(m, regular) != 0
std::optional<std::size_t> first_nonvanishing(const FDModule& m, std::size_t depth) {
  const auto& alg = m.algebra();
  auto proj = projective_indecomposables(alg);
  FDModule cur = m;
  for (std::size_t i = 1; i <= depth; ++i) {
    if (cur.dim() == 0) return std::nullopt;
    for (auto& p : proj)
      if (ext_group(cur, p, 1).dim() > 0) return i;
    cur = syzygy(cur);
  }
  return std::nullopt;
}

}  // namespace

GprjReport is_gorenstein_projective(const FDModule& m, std::size_t depth, std::optional<std::size_t> known_dim) {
  if (depth == 0) fail(ErrorKind::Input, "depth must be at least 1");
  GprjReport r;
  r.checked_depth = depth;
  if (m.dim() == 0 || is_projective(m)) {
    r.verdict = Verdict::Gprj;
    r.exact = true;
    return r;
  }
  if (auto i = first_nonvanishing(m, depth)) {
    r.verdict = Verdict::NotGprj;
    r.exact = true;
    r.witness_index = *i;
    r.witness = "Ext^" + std::to_string(*i) + "(M, A)";
    return r;
  }
  if (auto i = first_nonvanishing(transpose(m), depth)) {
    r.verdict = Verdict::NotGprj;
    r.exact = true;
    r.witness_index = *i;
    r.witness = "Ext^" + std::to_string(*i) + "(Tr M, A^op)";
    return r;
  }
  r.verdict = Verdict::Gprj;
  r.exact = known_dim.has_value() && *known_dim <= depth;
  return r;
}

GprjReport gprj_report(const FDModule& m) {
  auto d = selfinjective_dimension(m.algebra());
  std::size_t depth = d ? std::max<std::size_t>(*d, 1) : default_gprj_depth();
  return is_gorenstein_projective(m, depth, d);
}

GprjList gprj_filter(const IndecUniverse& u) {
  GprjList out;
  out.selfinj_dim = selfinjective_dimension(u.alg);
  std::size_t depth = out.selfinj_dim ? std::max<std::size_t>(*out.selfinj_dim, 1) : default_gprj_depth();
  for (auto& m : u.modules) {
    GprjReport r = is_gorenstein_projective(m, depth, out.selfinj_dim);
    if (r.verdict == Verdict::Inconclusive) out.inconclusive.push_back(m);
    else if (r.gprj()) out.modules.push_back(m);
  }
  return out;
}

GprjList gprj_indecomposables(const AlgPtr& a, const Budget& budget) {
  IndecUniverse u = all_indecomposables(a, budget);
  if (!u.closed) fail(ErrorKind::Budget, u.note);
  return gprj_filter(u);
}

// ---------------------------------------------------------------------------

Minimized gprj_right_approximation(const FDModule& m, std::size_t d) {
  if (d == 0 || m.dim() == 0) return Minimized{m, ModuleMap::identity(m), ModuleMap::identity(m), ModuleMap::identity(m)};
  // resolution data: covers c_k : P_k -> Omega^k, inclusions Omega^{k+1} -> P_k
  std::vector<FDModule> om{m};
  std::vector<ModuleMap> covers, incls;
  for (std::size_t k = 0; k < d; ++k) {
    Cover c = projective_cover(om[k]);
    auto [K, inc] = kernel(c.map);
    covers.push_back(c.map);
    incls.push_back(inc);
    om.push_back(K);
  }
  FDModule g = om[d];
  ModuleMap u = ModuleMap::identity(g);  // g -> Omega^{j+1}
  for (std::size_t jj = d; jj-- > 0;) {
    ModuleMap target = incls[jj] * u;  // g -> P_j
    if (g.dim() == 0) {
      u = ModuleMap::zero(g, om[jj]);
      continue;
    }
    Minimized left = left_projective_approximation(g);
    const FDModule& q = left.obj;
    // h : q -> P_j with h * left.map = target
    HomSpace hs = hom_space(q, target.tgt);
    std::vector<std::vector<u32>> cols;
    for (auto& b : hs.basis) cols.push_back((b * left.map).mat.vec());
    FMatrix rhs = FMatrix::column(target.mat.vec(), m.p());
    std::optional<FMatrix> x;
    if (!cols.empty()) x = solve_linear(concat_columns(cols, target.mat.rows() * target.mat.cols(), m.p()), rhs);
    else if (target.mat.is_zero()) x = FMatrix(0, 1, m.p());
    if (!x) fail(ErrorKind::Internal, "map into a projective does not factor through the left approximation");
    ModuleMap h = cols.empty() ? ModuleMap::zero(q, target.tgt) : hs.combine(*x);
    auto [gq, quo] = cokernel(left.map);
    FMatrix down = covers[jj].mat * h.mat * right_inverse(quo.mat);
    g = gq;
    u = ModuleMap{gq, om[jj], down};
  }
  Cover c0 = projective_cover(m);
  DirectSum ds = direct_sum({g, c0.proj.mod});
  ModuleMap all{ds.sum, m, u.mat * ds.proj[0].mat + c0.map.mat * ds.proj[1].mat};
  return right_minimize(all);
}

GprjKnit knit_gprj(const AlgPtr& a, const Budget& budget) {
  GprjKnit out;
  auto d = selfinjective_dimension(a);
  if (!d) fail(ErrorKind::Unsupported, "relative knitting needs finite self-injective dimension");
  out.selfinj_dim = *d;
  IndecUniverse u;
  u.alg = a;
  for (auto& p : projective_indecomposables(a)) u.insert(p);
  auto add_parts = [&](const FDModule& m) {
    if (m.dim() == 0) return;
    for (auto& s : decompose(m)) u.insert(s.mod);
  };
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u.size() > budget.max_count) return out;
    FDModule c = u.modules[i];
    if (c.dim() > budget.max_dim) return out;
    ModuleMap into;
    if (is_projective(c)) {
      auto [rad, inc] = submodule(c, radical_span(c));
      into = inc;
    } else {
      SES s = almost_split_sequence(c);
      into = s.surj;
    }
    if (into.src.dim() == 0) continue;
    Minimized ap = gprj_right_approximation(into.src, *d);
    Minimized sink = right_minimize(into * ap.map);
    add_parts(sink.obj);
    if (!is_projective(c)) add_parts(kernel(sink.map).first);
  }
  std::vector<std::size_t> order(u.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return u.modules[x].dimvec() < u.modules[y].dimvec(); });
  for (auto i : order) out.modules.push_back(u.modules[i]);
  out.closed = true;
  return out;
}

}  // namespace arq
