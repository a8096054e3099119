#include "arq/fdmod.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace arq {

namespace {

void require_adapted(const AlgPtr& a) {
  if (!a->adapted) fail(ErrorKind::Unsupported, "module computations need a basic algebra");
}

void require_same(const FDModule& m, const FDModule& n) {
  if (!same_algebra(m.algebra(), n.algebra())) fail(ErrorKind::Input, "modules over different algebras");
}

FMatrix unit_col(std::size_t n, std::size_t i, u32 p) {
  FMatrix e(n, 1, p);
  e(i, 0) = 1;
  return e;
}

u32 trace(const FMatrix& m) {
  u32 t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t = add_mod(t, m(i, i), m.modulus());
  return t;
}

// span of the given square matrices is closed under products and nilpotent
bool span_is_nilpotent(const std::vector<FMatrix>& h, std::size_t n, u32 p) {
  if (h.empty()) return true;
  std::vector<FMatrix> layer = h;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::vector<u32>> vs;
    for (auto& x : layer)
      for (auto& y : h) {
        FMatrix z = x * y;
        if (!z.is_zero()) vs.push_back(z.vec());
      }
    if (vs.empty()) return true;
    FMatrix span = column_basis(concat_columns(vs, n * n, p));
    layer.clear();
    for (std::size_t c = 0; c < span.cols(); ++c) layer.push_back(FMatrix::unvec(span.col_vec(c), n, n, p));
  }
  return false;
}

std::mt19937_64 seeded_rng(u64 salt = 0) { return std::mt19937_64(0x5eedULL ^ (salt * 0x9E3779B97F4A7C15ULL)); }

}  // namespace

// ---------------------------------------------------------------------------

FDModule FDModule::from_data(AlgPtr alg, std::vector<std::size_t> vdim, std::vector<FMatrix> act, std::string label) {
  auto d = std::make_shared<ModuleData>();
  d->alg = std::move(alg);
  d->vdim = std::move(vdim);
  d->voff.resize(d->vdim.size());
  std::size_t off = 0;
  for (std::size_t v = 0; v < d->vdim.size(); ++v) {
    d->voff[v] = off;
    off += d->vdim[v];
  }
  d->dim = off;
  d->act = std::move(act);
  FDModule m;
  m.d_ = d;
  m.label_ = std::move(label);
  return m;
}

std::size_t FDModule::vertex_of(std::size_t coord) const {
  for (std::size_t v = 0; v < nv(); ++v)
    if (coord >= offset(v) && coord < offset(v) + d_->vdim[v]) return v;
  fail(ErrorKind::Internal, "coordinate out of range");
}

FDModule FDModule::with_label(std::string l) const {
  FDModule m = *this;
  m.label_ = std::move(l);
  return m;
}

ModuleMap ModuleMap::operator*(const ModuleMap& o) const { return ModuleMap{o.src, tgt, mat * o.mat}; }
ModuleMap ModuleMap::operator+(const ModuleMap& o) const { return ModuleMap{src, tgt, mat + o.mat}; }
ModuleMap ModuleMap::operator-(const ModuleMap& o) const { return ModuleMap{src, tgt, mat - o.mat}; }
ModuleMap ModuleMap::scaled(u32 s) const { return ModuleMap{src, tgt, mat.scaled(s)}; }
ModuleMap ModuleMap::zero(const FDModule& s, const FDModule& t) { return ModuleMap{s, t, FMatrix(t.dim(), s.dim(), s.p())}; }
ModuleMap ModuleMap::identity(const FDModule& m) { return ModuleMap{m, m, FMatrix::identity(m.dim(), m.p())}; }

// ---------------------------------------------------------------------------
// construction

FDModule make_module(const AlgPtr& alg, std::vector<FMatrix> act, std::string label, bool check) {
  require_adapted(alg);
  if (act.size() != alg->dim) fail(ErrorKind::Input, "module needs one action matrix per basis element");
  const std::size_t n = act.empty() ? 0 : act[0].rows();
  for (auto& a : act)
    if (a.rows() != n || a.cols() != n || a.modulus() != alg->p) fail(ErrorKind::Input, "action matrices have inconsistent shapes");
  if (check) {
    FMatrix u(n, n, alg->p);
    for (std::size_t v = 0; v < alg->nv; ++v) u += act[v];
    if (!u.is_identity()) fail(ErrorKind::Input, "unit does not act as the identity");
    for (std::size_t i = 0; i < alg->dim; ++i)
      for (std::size_t j = 0; j < alg->dim; ++j) {
        FMatrix rhs(n, n, alg->p);
        for (std::size_t k = 0; k < alg->dim; ++k)
          if (alg->c(i, j, k)) rhs.add_scaled(act[k], alg->c(i, j, k));
        if (act[j] * act[i] != rhs) fail(ErrorKind::Input, "action does not respect the multiplication table");
      }
  }
  // adapt the basis to the vertex idempotents
  bool adapted = true;
  std::vector<std::size_t> vdim(alg->nv);
  std::size_t off = 0;
  for (std::size_t v = 0; v < alg->nv && adapted; ++v) {
    const FMatrix& e = act[v];
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (e(i, i) == 1) ++r;
    FMatrix want(n, n, alg->p);
    for (std::size_t i = off; i < off + r; ++i) want(i, i) = 1;
    if (e != want) adapted = false;
    vdim[v] = r;
    off += r;
  }
  if (adapted && off == n) return FDModule::from_data(alg, vdim, std::move(act), std::move(label));
  std::vector<FMatrix> blocks;
  for (std::size_t v = 0; v < alg->nv; ++v) {
    blocks.push_back(column_basis(act[v]));
    vdim[v] = blocks.back().cols();
  }
  FMatrix T = FMatrix::hcat(blocks, n, alg->p);
  auto Ti = inverse(T);
  if (!Ti) fail(ErrorKind::Input, "vertex idempotents do not decompose the module");
  for (auto& a : act) a = *Ti * a * T;
  return FDModule::from_data(alg, vdim, std::move(act), std::move(label));
}

FDModule representation(const AlgPtr& alg, const std::vector<std::size_t>& vdims, const std::vector<FMatrix>& arrow_maps,
                        std::string label) {
  if (alg->prov != Provenance::BoundQuiver || !alg->spec) fail(ErrorKind::Input, "representations need a bound quiver algebra");
  const Quiver& q = alg->spec->quiver;
  if (vdims.size() != q.vertices.size() || arrow_maps.size() != q.arrows.size())
    fail(ErrorKind::Input, "representation data does not match the quiver");
  std::vector<std::size_t> off(vdims.size());
  std::size_t n = 0;
  for (std::size_t v = 0; v < vdims.size(); ++v) {
    off[v] = n;
    n += vdims[v];
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a)
    if (arrow_maps[a].rows() != vdims[q.arrows[a].to] || arrow_maps[a].cols() != vdims[q.arrows[a].from])
      fail(ErrorKind::Input, "arrow matrix " + q.arrows[a].name + " has the wrong shape");
  std::vector<FMatrix> act;
  for (std::size_t b = 0; b < alg->dim; ++b) {
    FMatrix m(n, n, alg->p);
    const auto& path = alg->basis_paths[b];
    if (path.empty()) {
      std::size_t v = alg->src[b];
      for (std::size_t i = 0; i < vdims[v]; ++i) m(off[v] + i, off[v] + i) = 1;
    } else {
      FMatrix acc = FMatrix::identity(vdims[q.arrows[path[0]].from], alg->p);
      for (auto a : path) acc = arrow_maps[a] * acc;
      m.set_block(off[q.arrows[path.back()].to], off[q.arrows[path[0]].from], acc);
    }
    act.push_back(std::move(m));
  }
  // relations must hold: check the defining relations through the action
  FDModule mod = FDModule::from_data(alg, vdims, act, std::move(label));
  for (auto& rel : alg->spec->relations) {
    FMatrix sum(n, n, alg->p);
    for (auto& t : rel.terms) {
      FMatrix acc = FMatrix::identity(vdims[q.arrows[t.arrows[0]].from], alg->p);
      for (auto a : t.arrows) acc = arrow_maps[a] * acc;
      FMatrix big(n, n, alg->p);
      big.set_block(off[q.arrows[t.arrows.back()].to], off[q.arrows[t.arrows[0]].from], acc);
      sum.add_scaled(big, reduce_signed(t.coeff, alg->p));
    }
    if (!sum.is_zero()) fail(ErrorKind::Input, "representation violates relation " + rel.text);
  }
  return mod;
}

FDModule zero_module(const AlgPtr& alg) {
  return FDModule::from_data(alg, std::vector<std::size_t>(alg->nv, 0), std::vector<FMatrix>(alg->dim, FMatrix(0, 0, alg->p)), "0");
}

FDModule regular_module(const AlgPtr& alg) {
  std::vector<FDModule> parts;
  for (std::size_t v = 0; v < alg->nv; ++v) parts.push_back(projective_module(alg, v));
  return direct_sum_module(parts);
}

std::vector<std::size_t> projective_basis(const AlgPtr& alg, std::size_t v) {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < alg->nv; ++w)
    for (std::size_t b = 0; b < alg->dim; ++b)
      if (alg->src[b] == v && alg->tgt[b] == w) out.push_back(b);
  return out;
}

FDModule projective_module(const AlgPtr& alg, std::size_t v) {
  require_adapted(alg);
  auto basis = projective_basis(alg, v);
  const std::size_t n = basis.size();
  std::vector<std::size_t> pos(alg->dim, SIZE_MAX);
  for (std::size_t k = 0; k < n; ++k) pos[basis[k]] = k;
  std::vector<std::size_t> vdim(alg->nv, 0);
  for (auto b : basis) vdim[alg->tgt[b]]++;
  std::vector<FMatrix> act;
  for (std::size_t c = 0; c < alg->dim; ++c) {
    FMatrix m(n, n, alg->p);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < alg->dim; ++k) {
        u32 x = alg->c(basis[j], c, k);
        if (x) {
          ensure(pos[k] != SIZE_MAX, "projective module not closed");
          m(pos[k], j) = x;
        }
      }
    act.push_back(std::move(m));
  }
  return FDModule::from_data(alg, vdim, std::move(act), "P" + alg->vertex_names[v]);
}

FDModule injective_module(const AlgPtr& alg, std::size_t v) {
  return dual(projective_module(opposite(alg), v)).with_label("I" + alg->vertex_names[v]);
}

FDModule simple_module(const AlgPtr& alg, std::size_t v) {
  require_adapted(alg);
  std::vector<std::size_t> vdim(alg->nv, 0);
  vdim[v] = 1;
  std::vector<FMatrix> act;
  for (std::size_t b = 0; b < alg->dim; ++b) {
    FMatrix m(1, 1, alg->p);
    if (b == v) m(0, 0) = 1;
    act.push_back(m);
  }
  return FDModule::from_data(alg, vdim, std::move(act), "S" + alg->vertex_names[v]);
}

std::vector<FDModule> projective_indecomposables(const AlgPtr& alg) {
  std::vector<FDModule> out;
  for (std::size_t v = 0; v < alg->nv; ++v) out.push_back(projective_module(alg, v));
  return out;
}

std::vector<FDModule> injective_indecomposables(const AlgPtr& alg) {
  std::vector<FDModule> out;
  for (std::size_t v = 0; v < alg->nv; ++v) out.push_back(injective_module(alg, v));
  return out;
}

std::vector<FDModule> simple_modules(const AlgPtr& alg) {
  std::vector<FDModule> out;
  for (std::size_t v = 0; v < alg->nv; ++v) out.push_back(simple_module(alg, v));
  return out;
}

bool is_self_injective(const AlgPtr& a) {
  for (std::size_t v = 0; v < a->nv; ++v)
    if (!is_injective(projective_module(a, v))) return false;
  return true;
}

// ---------------------------------------------------------------------------

bool is_homomorphism(const FDModule& s, const FDModule& t, const FMatrix& m) {
  if (m.rows() != t.dim() || m.cols() != s.dim()) return false;
  const auto& a = s.algebra();
  for (std::size_t b = 0; b < a->nv; ++b)
    if (m * s.action(b) != t.action(b) * m) return false;
  for (auto g : a->gens)
    if (m * s.action(g) != t.action(g) * m) return false;
  return true;
}

ModuleMap module_map(const FDModule& s, const FDModule& t, FMatrix m, bool check) {
  require_same(s, t);
  if (check && !is_homomorphism(s, t, m)) fail(ErrorKind::Input, "matrix does not intertwine the actions");
  return ModuleMap{s, t, std::move(m)};
}

DirectSum direct_sum(const std::vector<FDModule>& parts) {
  ensure(!parts.empty(), "direct sum of nothing");
  const auto& alg = parts[0].algebra();
  const std::size_t nv = alg->nv;
  for (auto& p : parts) require_same(parts[0], p);
  std::vector<std::size_t> vdim(nv, 0);
  for (auto& p : parts)
    for (std::size_t v = 0; v < nv; ++v) vdim[v] += p.dimvec()[v];
  std::size_t n = std::accumulate(vdim.begin(), vdim.end(), std::size_t(0));
  // positions: vertex-major, then part order
  std::vector<std::vector<std::size_t>> pos(parts.size());
  std::size_t cur = 0;
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t k = 0; k < parts.size(); ++k) {
      pos[k].resize(parts[k].dim());
      for (std::size_t i = 0; i < parts[k].dimvec()[v]; ++i) pos[k][parts[k].offset(v) + i] = cur++;
    }
  std::vector<FMatrix> act;
  for (std::size_t b = 0; b < alg->dim; ++b) {
    FMatrix m(n, n, alg->p);
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const FMatrix& a = parts[k].action(b);
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
          if (a(i, j)) m(pos[k][i], pos[k][j]) = a(i, j);
    }
    act.push_back(std::move(m));
  }
  DirectSum ds;
  ds.sum = FDModule::from_data(alg, vdim, std::move(act));
  for (std::size_t k = 0; k < parts.size(); ++k) {
    FMatrix inc(n, parts[k].dim(), alg->p);
    for (std::size_t i = 0; i < parts[k].dim(); ++i) inc(pos[k][i], i) = 1;
    ds.incl.push_back(ModuleMap{parts[k], ds.sum, inc});
    ds.proj.push_back(ModuleMap{ds.sum, parts[k], inc.transpose()});
  }
  return ds;
}

FDModule direct_sum_module(const std::vector<FDModule>& parts) { return direct_sum(parts).sum; }

ModuleMap block_map(const DirectSum& s, const DirectSum& t, const std::vector<std::vector<ModuleMap>>& blocks) {
  FMatrix m(t.sum.dim(), s.sum.dim(), s.sum.p());
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks[i].size(); ++j)
      if (!blocks[i][j].mat.is_zero()) m += t.incl[i].mat * blocks[i][j].mat * s.proj[j].mat;
  return ModuleMap{s.sum, t.sum, m};
}

namespace {

// per-vertex basis of a submodule spanned by the columns of w
std::pair<FMatrix, std::vector<std::size_t>> adapted_span(const FDModule& m, const FMatrix& w) {
  const auto& alg = m.algebra();
  std::vector<FMatrix> blocks;
  std::vector<std::size_t> vdim(alg->nv, 0);
  for (std::size_t v = 0; v < alg->nv; ++v) {
    if (m.dimvec()[v] == 0 || w.cols() == 0) {
      blocks.push_back(FMatrix(m.dim(), 0, m.p()));
      continue;
    }
    FMatrix bv = m.action(v) * w;
    FMatrix local = bv.block(m.offset(v), 0, m.dimvec()[v], bv.cols());
    FMatrix basis = column_basis(local);
    FMatrix full(m.dim(), basis.cols(), m.p());
    full.set_block(m.offset(v), 0, basis);
    blocks.push_back(full);
    vdim[v] = basis.cols();
  }
  return {FMatrix::hcat(blocks, m.dim(), m.p()), vdim};
}

}  // namespace

std::pair<FDModule, ModuleMap> submodule(const FDModule& m, const FMatrix& span) {
  auto [w, vdim] = adapted_span(m, span);
  const auto& alg = m.algebra();
  std::vector<FMatrix> act;
  if (w.cols() == 0) {
    FDModule z = zero_module(alg);
    return {z, ModuleMap{z, m, FMatrix(m.dim(), 0, m.p())}};
  }
  FMatrix l = left_inverse(w);
  for (std::size_t b = 0; b < alg->dim; ++b) act.push_back(l * (m.action(b) * w));
  FDModule n = FDModule::from_data(alg, vdim, std::move(act));
  return {n, ModuleMap{n, m, w}};
}

std::pair<FDModule, ModuleMap> quotient(const FDModule& m, const FMatrix& span) {
  const auto& alg = m.algebra();
  auto [w, wdim] = adapted_span(m, span);
  std::vector<std::size_t> comp, vdim(alg->nv, 0);
  for (std::size_t v = 0; v < alg->nv; ++v) {
    std::size_t dv = m.dimvec()[v];
    if (dv == 0) continue;
    FMatrix local = w.cols() ? w.block(m.offset(v), 0, dv, w.cols()) : FMatrix(dv, 0, m.p());
    for (auto j : complement_units(local, dv)) comp.push_back(m.offset(v) + j);
    vdim[v] = dv - wdim[v];
  }
  const std::size_t q = comp.size();
  FMatrix C(m.dim(), q, m.p());
  for (std::size_t k = 0; k < q; ++k) C(comp[k], k) = 1;
  FMatrix T = w.cols() ? FMatrix::hcat(C, w) : C;
  auto Ti = inverse(T);
  ensure(Ti.has_value(), "quotient complement is not complementary");
  FMatrix pq = Ti->block(0, 0, q, m.dim());
  std::vector<FMatrix> act;
  for (std::size_t b = 0; b < alg->dim; ++b) act.push_back(pq * (m.action(b) * C));
  FDModule out = FDModule::from_data(alg, vdim, std::move(act));
  return {out, ModuleMap{m, out, pq}};
}

std::pair<FDModule, ModuleMap> kernel(const ModuleMap& f) {
  const FDModule& s = f.src;
  std::vector<FMatrix> cols;
  for (std::size_t v = 0; v < s.nv(); ++v) {
    std::size_t ds = s.dimvec()[v];
    if (!ds) continue;
    FMatrix blk = f.mat.block(f.tgt.offset(v), s.offset(v), f.tgt.dimvec()[v], ds);
    FMatrix k = kernel_basis(blk);
    FMatrix full(s.dim(), k.cols(), s.p());
    full.set_block(s.offset(v), 0, k);
    cols.push_back(full);
  }
  return submodule(s, FMatrix::hcat(cols, s.dim(), s.p()));
}

std::pair<FDModule, ModuleMap> image(const ModuleMap& f) { return submodule(f.tgt, f.mat); }

std::pair<FDModule, ModuleMap> cokernel(const ModuleMap& f) { return quotient(f.tgt, f.mat); }

FMatrix radical_span(const FDModule& m) {
  const auto& alg = m.algebra();
  std::vector<FMatrix> cols;
  for (std::size_t b = alg->nv; b < alg->dim; ++b)
    if (!m.action(b).is_zero()) cols.push_back(m.action(b));
  if (cols.empty()) return FMatrix(m.dim(), 0, m.p());
  return column_basis(FMatrix::hcat(cols, m.dim(), m.p()));
}

FMatrix socle_span(const FDModule& m) {
  const auto& alg = m.algebra();
  std::vector<FMatrix> rows;
  for (auto g : alg->gens) rows.push_back(m.action(g));
  if (rows.empty()) return FMatrix::identity(m.dim(), m.p());
  return kernel_basis(FMatrix::vcat(rows, m.dim(), m.p()));
}

FMatrix factor_through_mono(const ModuleMap& incl, const FMatrix& f) {
  auto x = solve_linear(incl.mat, f);
  if (!x) fail(ErrorKind::Internal, "map does not factor through the monomorphism");
  return *x;
}

FMatrix right_inverse(const FMatrix& q) { return left_inverse(q.transpose()).transpose(); }

// ---------------------------------------------------------------------------
// Hom

namespace {

struct HomLayout {
  std::vector<std::size_t> off;
  std::size_t total = 0;
};

HomLayout hom_layout(const FDModule& m, const FDModule& n) {
  HomLayout h;
  h.off.resize(m.nv());
  for (std::size_t v = 0; v < m.nv(); ++v) {
    h.off[v] = h.total;
    h.total += n.dimvec()[v] * m.dimvec()[v];
  }
  return h;
}

FMatrix compact_of(const FDModule& m, const FDModule& n, const HomLayout& lay, const FMatrix& mat) {
  FMatrix c(lay.total, 1, m.p());
  for (std::size_t v = 0; v < m.nv(); ++v) {
    std::size_t nr = n.dimvec()[v], nc = m.dimvec()[v];
    for (std::size_t j = 0; j < nc; ++j)
      for (std::size_t i = 0; i < nr; ++i) c(lay.off[v] + j * nr + i, 0) = mat(n.offset(v) + i, m.offset(v) + j);
  }
  return c;
}

FMatrix full_of(const FDModule& m, const FDModule& n, const HomLayout& lay, const FMatrix& compact, std::size_t col) {
  FMatrix mat(n.dim(), m.dim(), m.p());
  for (std::size_t v = 0; v < m.nv(); ++v) {
    std::size_t nr = n.dimvec()[v], nc = m.dimvec()[v];
    for (std::size_t j = 0; j < nc; ++j)
      for (std::size_t i = 0; i < nr; ++i) mat(n.offset(v) + i, m.offset(v) + j) = compact(lay.off[v] + j * nr + i, col);
  }
  return mat;
}

}  // namespace

FMatrix HomSpace::coords(const FMatrix& m) const {
  if (basis.empty()) return FMatrix(0, 1, src.p());
  return coord_inv * compact_of(src, tgt, hom_layout(src, tgt), m);
}

ModuleMap HomSpace::combine(const std::vector<u32>& c) const {
  FMatrix m(tgt.dim(), src.dim(), src.p());
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (c[k]) m.add_scaled(basis[k].mat, c[k]);
  return ModuleMap{src, tgt, m};
}

ModuleMap HomSpace::combine(const FMatrix& c) const { return combine(c.col_vec(0)); }

HomSpace hom_space(const FDModule& m, const FDModule& n) {
  require_same(m, n);
  const auto& alg = m.algebra();
  require_adapted(alg);
  const u32 p = alg->p;
  HomLayout lay = hom_layout(m, n);
  HomSpace hs;
  hs.src = m;
  hs.tgt = n;
  if (lay.total == 0) {
    hs.compact = FMatrix(0, 0, p);
    hs.coord_inv = FMatrix(0, 0, p);
    return hs;
  }
  std::size_t rows = 0;
  for (auto g : alg->gens) rows += n.dimvec()[alg->tgt[g]] * m.dimvec()[alg->src[g]];
  FMatrix eq(rows, lay.total, p);
  std::size_t r0 = 0;
  for (auto g : alg->gens) {
    std::size_t s = alg->src[g], t = alg->tgt[g];
    std::size_t ms = m.dimvec()[s], mt = m.dimvec()[t], ns = n.dimvec()[s], nt = n.dimvec()[t];
    if (!ms || !nt) continue;
    FMatrix rm = m.action(g).block(m.offset(t), m.offset(s), mt, ms);
    FMatrix rn = n.action(g).block(n.offset(t), n.offset(s), nt, ns);
    for (std::size_t j = 0; j < ms; ++j)
      for (std::size_t i = 0; i < nt; ++i) {
        std::size_t row = r0 + j * nt + i;
        // phi_t(i,k) * rm(k,j)
        for (std::size_t k = 0; k < mt; ++k)
          if (rm(k, j)) {
            std::size_t u = lay.off[t] + k * nt + i;
            eq(row, u) = add_mod(eq(row, u), rm(k, j), p);
          }
        // - rn(i,k) * phi_s(k,j)
        for (std::size_t k = 0; k < ns; ++k)
          if (rn(i, k)) {
            std::size_t u = lay.off[s] + j * ns + k;
            eq(row, u) = sub_mod(eq(row, u), rn(i, k), p);
          }
      }
    r0 += ms * nt;
  }
  hs.compact = kernel_basis(eq);
  for (std::size_t c = 0; c < hs.compact.cols(); ++c) hs.basis.push_back(ModuleMap{m, n, full_of(m, n, lay, hs.compact, c)});
  hs.coord_inv = hs.compact.cols() ? left_inverse(hs.compact) : FMatrix(0, lay.total, p);
  return hs;
}

std::vector<ModuleMap> hom_basis(const FDModule& m, const FDModule& n) { return hom_space(m, n).basis; }

std::size_t hom_dim(const FDModule& m, const FDModule& n) { return hom_space(m, n).size(); }

StableHom stable_hom_basis(const FDModule& m, const FDModule& n) {
  StableHom sh;
  sh.hom = hom_space(m, n);
  const u32 p = m.p();
  const std::size_t k = sh.hom.size();
  Cover c = projective_cover(n);
  HomSpace toP = hom_space(m, c.proj.mod);
  std::vector<std::vector<u32>> cols;
  for (auto& h : toP.basis) {
    FMatrix x = sh.hom.coords((c.map * h).mat);
    cols.push_back(x.col_vec(0));
  }
  sh.proj_span = cols.empty() ? FMatrix(k, 0, p) : column_basis(concat_columns(cols, k, p));
  sh.complement = complement_units(sh.proj_span, k);
  FMatrix S(k, k, p);
  for (std::size_t t = 0; t < sh.complement.size(); ++t) S(sh.complement[t], t) = 1;
  S.set_block(0, sh.complement.size(), sh.proj_span);
  auto Si = inverse(S);
  ensure(Si.has_value(), "stable hom complement is singular");
  sh.to_stable = Si->block(0, 0, sh.complement.size(), k);
  return sh;
}

std::size_t stable_hom_dim(const FDModule& m, const FDModule& n) { return stable_hom_basis(m, n).size(); }

// ---------------------------------------------------------------------------
// projectives

ProjSum projective_sum(const AlgPtr& alg, const std::vector<std::size_t>& verts) {
  ProjSum ps;
  ps.alg = alg;
  ps.verts = verts;
  if (verts.empty()) {
    ps.mod = zero_module(alg);
    return ps;
  }
  std::vector<FDModule> parts;
  for (auto v : verts) parts.push_back(projective_module(alg, v));
  ps.parts = direct_sum(parts);
  ps.mod = ps.parts.sum;
  for (std::size_t k = 0; k < verts.size(); ++k) {
    const FMatrix& inc = ps.parts.incl[k].mat;
    std::vector<std::size_t> c(inc.cols());
    for (std::size_t l = 0; l < inc.cols(); ++l)
      for (std::size_t r = 0; r < inc.rows(); ++r)
        if (inc(r, l)) c[l] = r;
    auto basis = projective_basis(alg, verts[k]);
    std::size_t gl = std::find(basis.begin(), basis.end(), verts[k]) - basis.begin();
    ps.gen_coord.push_back(c[gl]);
    ps.coord.push_back(std::move(c));
  }
  return ps;
}

ModuleMap map_from_generators(const ProjSum& p, const FDModule& target, const std::vector<FMatrix>& images) {
  FMatrix m(target.dim(), p.mod.dim(), target.p());
  for (std::size_t k = 0; k < p.verts.size(); ++k) {
    auto basis = projective_basis(p.alg, p.verts[k]);
    for (std::size_t l = 0; l < basis.size(); ++l) {
      FMatrix col = target.action(basis[l]) * images[k];
      m.set_block(0, p.coord[k][l], col);
    }
  }
  return ModuleMap{p.mod, target, m};
}

std::vector<std::vector<std::vector<u32>>> element_matrix(const ProjSum& p, const ProjSum& q, const ModuleMap& f) {
  std::vector<std::vector<std::vector<u32>>> x(q.verts.size(), std::vector<std::vector<u32>>(p.verts.size()));
  for (std::size_t j = 0; j < p.verts.size(); ++j) {
    FMatrix y = f.mat.col(p.gen_coord[j]);
    for (std::size_t i = 0; i < q.verts.size(); ++i) {
      std::vector<u32> e(q.alg->dim, 0);
      auto basis = projective_basis(q.alg, q.verts[i]);
      for (std::size_t l = 0; l < basis.size(); ++l) e[basis[l]] = y(q.coord[i][l], 0);
      x[i][j] = std::move(e);
    }
  }
  return x;
}

ModuleMap map_from_elements(const ProjSum& p, const ProjSum& q, const std::vector<std::vector<std::vector<u32>>>& x) {
  std::vector<FMatrix> images;
  for (std::size_t j = 0; j < p.verts.size(); ++j) {
    FMatrix y(q.mod.dim(), 1, q.mod.p());
    for (std::size_t i = 0; i < q.verts.size(); ++i) {
      auto basis = projective_basis(q.alg, q.verts[i]);
      for (std::size_t l = 0; l < basis.size(); ++l) y(q.coord[i][l], 0) = x[i][j][basis[l]];
    }
    images.push_back(y);
  }
  return map_from_generators(p, q.mod, images);
}

ModuleMap lift_through(const ProjSum& p, const ModuleMap& f, const ModuleMap& s) {
  const FDModule& M = s.src;
  std::vector<FMatrix> images;
  for (std::size_t k = 0; k < p.verts.size(); ++k) {
    std::size_t v = p.verts[k];
    FMatrix t = f.mat.col(p.gen_coord[k]);
    std::size_t dv = M.dimvec()[v];
    FMatrix sv = s.mat.block(0, M.offset(v), s.mat.rows(), dv);
    auto y = solve_linear(sv, t);
    if (!y) fail(ErrorKind::Internal, "lift through a non-surjective map");
    FMatrix full(M.dim(), 1, M.p());
    full.set_block(M.offset(v), 0, *y);
    images.push_back(full);
  }
  return map_from_generators(p, M, images);
}

Cover projective_cover(const FDModule& m) {
  const auto& alg = m.algebra();
  require_adapted(alg);
  FMatrix rad = radical_span(m);
  std::vector<std::size_t> verts;
  std::vector<FMatrix> images;
  for (std::size_t v = 0; v < alg->nv; ++v) {
    std::size_t dv = m.dimvec()[v];
    if (!dv) continue;
    // radical columns living in block v
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < rad.cols(); ++c)
      for (std::size_t i = 0; i < dv; ++i)
        if (rad(m.offset(v) + i, c)) {
          cols.push_back(c);
          break;
        }
    FMatrix local = rad.select_cols(cols).block(m.offset(v), 0, dv, cols.size());
    for (auto j : complement_units(local, dv)) {
      verts.push_back(v);
      images.push_back(unit_col(m.dim(), m.offset(v) + j, m.p()));
    }
  }
  Cover c;
  c.proj = projective_sum(alg, verts);
  c.map = verts.empty() ? ModuleMap::zero(c.proj.mod, m) : map_from_generators(c.proj, m, images);
  return c;
}

Resolution projective_resolution(const FDModule& m, std::size_t len) {
  Resolution r;
  Cover c = projective_cover(m);
  r.terms.push_back(c.proj);
  r.augmentation = c.map;
  ModuleMap prev = c.map;
  for (std::size_t k = 0; k < len; ++k) {
    auto [K, inc] = kernel(prev);
    if (K.dim() == 0) break;
    Cover ck = projective_cover(K);
    ModuleMap d = inc * ck.map;
    r.terms.push_back(ck.proj);
    r.diffs.push_back(d);
    prev = d;
  }
  return r;
}

std::pair<FDModule, ModuleMap> syzygy_inclusion(const FDModule& m) {
  Cover c = projective_cover(m);
  return kernel(c.map);
}

FDModule syzygy(const FDModule& m, std::size_t n) {
  FDModule cur = m;
  for (std::size_t k = 0; k < n && cur.dim() > 0; ++k) cur = syzygy_inclusion(cur).first;
  return cur;
}

Minimized left_projective_approximation(const FDModule& m) {
  const auto& alg = m.algebra();
  std::vector<std::size_t> verts;
  std::vector<ModuleMap> comps;
  for (std::size_t v = 0; v < alg->nv; ++v) {
    FDModule pv = projective_module(alg, v);
    for (auto& h : hom_basis(m, pv)) {
      verts.push_back(v);
      comps.push_back(h);
    }
  }
  ProjSum q = projective_sum(alg, verts);
  FMatrix f(q.mod.dim(), m.dim(), m.p());
  for (std::size_t k = 0; k < comps.size(); ++k) f += q.parts.incl[k].mat * comps[k].mat;
  return left_minimize(ModuleMap{m, q.mod, f});
}

FDModule projective_cosyzygy(const FDModule& m, std::size_t n) {
  FDModule cur = m;
  for (std::size_t k = 0; k < n && cur.dim() > 0; ++k) {
    Minimized a = left_projective_approximation(cur);
    cur = cokernel(a.map).first;
  }
  return cur;
}

bool is_projective(const FDModule& m) { return projective_cover(m).proj.mod.dim() == m.dim(); }

bool is_injective(const FDModule& m) { return is_projective(dual(m)); }

std::size_t projective_dimension(const FDModule& m, std::size_t cap) {
  FDModule cur = m;
  std::size_t n = 0;
  while (cur.dim() > 0 && !is_projective(cur)) {
    if (n >= cap) return cap + 1;
    cur = syzygy(cur);
    ++n;
  }
  return n;
}

// ---------------------------------------------------------------------------
// duality

FDModule dual(const FDModule& m) {
  AlgPtr op = opposite(m.algebra());
  std::vector<FMatrix> act;
  for (std::size_t b = 0; b < op->dim; ++b) act.push_back(m.action(b).transpose());
  return FDModule::from_data(op, m.dimvec(), std::move(act), m.label().empty() ? "" : "D" + m.label());
}

ModuleMap dual_map(const ModuleMap& f) { return ModuleMap{dual(f.tgt), dual(f.src), f.mat.transpose()}; }

FDModule transpose(const FDModule& m) {
  const auto& alg = m.algebra();
  AlgPtr op = opposite(alg);
  Cover c0 = projective_cover(m);
  auto [K, inc] = kernel(c0.map);
  Cover c1 = projective_cover(K);
  ModuleMap d = inc * c1.map;
  auto x = element_matrix(c1.proj, c0.proj, d);
  ProjSum q0 = projective_sum(op, c0.proj.verts);
  ProjSum q1 = projective_sum(op, c1.proj.verts);
  if (q1.verts.empty()) return zero_module(op);
  std::vector<std::vector<std::vector<u32>>> y(q1.verts.size(), std::vector<std::vector<u32>>(q0.verts.size()));
  for (std::size_t i = 0; i < q0.verts.size(); ++i)
    for (std::size_t j = 0; j < q1.verts.size(); ++j) y[j][i] = x[i][j];
  ModuleMap dstar = q0.verts.empty() ? ModuleMap::zero(q0.mod, q1.mod) : map_from_elements(q0, q1, y);
  return cokernel(dstar).first;
}

FDModule tau(const FDModule& m) { return dual(transpose(m)); }

FDModule tau_inverse(const FDModule& m) { return transpose(dual(m)); }

// ---------------------------------------------------------------------------
// Ext

FMatrix ExtGroup::class_coords(const ModuleMap& rep) const {
  const u32 p = m.p();
  const std::size_t k = hom_omega.size();
  FMatrix c = hom_omega.coords(rep.mat);
  FMatrix S(k, k, p);
  for (std::size_t t = 0; t < classes.size(); ++t) S(classes[t], t) = 1;
  S.set_block(0, classes.size(), boundary);
  auto Si = inverse(S);
  ensure(Si.has_value(), "ext complement is singular");
  return (*Si * c).block(0, 0, classes.size(), 1);
}

ExtGroup ext_group(const FDModule& m, const FDModule& n, std::size_t i) {
  require_same(m, n);
  if (i == 0) fail(ErrorKind::Input, "ext_group needs i >= 1");
  ExtGroup e;
  e.m = syzygy(m, i - 1);
  e.n = n;
  e.cover = projective_cover(e.m);
  auto [om, inc] = kernel(e.cover.map);
  e.omega = om;
  e.omega_incl = inc;
  e.hom_omega = hom_space(om, n);
  const std::size_t k = e.hom_omega.size();
  std::vector<std::vector<u32>> cols;
  for (auto& h : hom_basis(e.cover.proj.mod, n)) cols.push_back(e.hom_omega.coords((h * inc).mat).col_vec(0));
  e.boundary = cols.empty() ? FMatrix(k, 0, m.p()) : column_basis(concat_columns(cols, k, m.p()));
  e.classes = complement_units(e.boundary, k);
  return e;
}

SES extension_to_ses(const ExtGroup& e, const ModuleMap& cls) {
  DirectSum ds = direct_sum({e.cover.proj.mod, e.n});
  FMatrix w = ds.incl[0].mat * e.omega_incl.mat - ds.incl[1].mat * cls.mat;
  auto [E, q] = quotient(ds.sum, w);
  SES s;
  s.left = e.n;
  s.mid = E;
  s.right = e.m;
  s.inj = q * ds.incl[1];
  FMatrix y = e.cover.map.mat * ds.proj[0].mat;
  s.surj = ModuleMap{E, e.m, y * right_inverse(q.mat)};
  return s;
}

bool ses_is_exact(const SES& s) {
  if (!s.inj.injective() || !s.surj.surjective()) return false;
  if (!(s.surj * s.inj).is_zero()) return false;
  return s.mid.dim() == s.left.dim() + s.right.dim();
}

bool ses_splits(const SES& s) {
  HomSpace h = hom_space(s.right, s.mid);
  if (h.size() == 0) return s.right.dim() == 0;
  std::vector<std::vector<u32>> cols;
  for (auto& b : h.basis) cols.push_back((s.surj * b).mat.vec());
  FMatrix a = concat_columns(cols, s.right.dim() * s.right.dim(), s.mid.p());
  FMatrix id = FMatrix::identity(s.right.dim(), s.mid.p());
  FMatrix rhs = FMatrix::column(id.vec(), s.mid.p());
  return solve_linear(a, rhs).has_value();
}

// ---------------------------------------------------------------------------
// decomposition

bool is_local(const FDModule& m) {
  if (m.dim() == 0) return false;
  HomSpace e = hom_space(m, m);
  if (e.size() == 1) return true;
  const std::size_t n = m.dim();
  const u32 p = m.p();
  if (p <= n) fail(ErrorKind::Unsupported, "field too small for the locality test");
  u32 invn = inv_mod(u32(n), p);
  std::vector<FMatrix> h;
  for (auto& f : e.basis) {
    FMatrix g = f.mat - FMatrix::identity(n, p).scaled(mul_mod(trace(f.mat), invn, p));
    if (!g.is_zero()) h.push_back(g);
  }
  return span_is_nilpotent(h, n, p);
}

FMatrix radical_of_local_end(const HomSpace& end) {
  const std::size_t k = end.size();
  FMatrix t(1, k, end.src.p());
  for (std::size_t i = 0; i < k; ++i) t(0, i) = trace(end.basis[i].mat);
  return kernel_basis(t);
}

namespace {

void split_rec(const FDModule& m, const FMatrix& w, std::vector<FMatrix>& leaves) {
  auto [n, inc] = submodule(m, w);
  const std::size_t d = n.dim();
  const u32 p = m.p();
  HomSpace e = hom_space(n, n);
  if (e.size() <= 1) {
    leaves.push_back(inc.mat);
    return;
  }
  auto try_split = [&](const FMatrix& f) -> bool {
    if (p > d) {
      u32 lam = mul_mod(trace(f), inv_mod(u32(d), p), p);
      if (is_nilpotent(f - FMatrix::identity(d, p).scaled(lam))) return false;
    }
    auto roots = poly_roots(charpoly(f), p);
    if (roots.empty()) fail(ErrorKind::Unsupported, "non-split endomorphism; enlarge p");
    for (u32 lam : roots) {
      FMatrix g = power(f - FMatrix::identity(d, p).scaled(lam), d);
      FMatrix ker = kernel_basis(g), im = column_basis(g);
      if (ker.cols() == 0 || im.cols() == 0) continue;
      split_rec(m, inc.mat * ker, leaves);
      split_rec(m, inc.mat * im, leaves);
      return true;
    }
    fail(ErrorKind::Unsupported, "non-split endomorphism; enlarge p");
  };
  for (auto& f : e.basis)
    if (try_split(f.mat)) return;
  if (is_local(n)) {
    leaves.push_back(inc.mat);
    return;
  }
  auto rng = seeded_rng(d);
  std::uniform_int_distribution<u32> dist(0, p - 1);
  for (int t = 0; t < 30; ++t) {
    std::vector<u32> c(e.size());
    for (auto& x : c) x = dist(rng);
    if (try_split(e.combine(c).mat)) return;
  }
  fail(ErrorKind::Inconclusive, "inconclusive: no splitting endomorphism found for a non-local module");
}

}  // namespace

std::vector<Summand> decompose(const FDModule& m) {
  std::vector<Summand> out;
  if (m.dim() == 0) return out;
  std::vector<FMatrix> leaves;
  split_rec(m, FMatrix::identity(m.dim(), m.p()), leaves);
  std::vector<FDModule> mods;
  std::vector<FMatrix> incs;
  for (auto& w : leaves) {
    auto [n, inc] = submodule(m, w);
    mods.push_back(n);
    incs.push_back(inc.mat);
  }
  FMatrix T = FMatrix::hcat(incs, m.dim(), m.p());
  auto Ti = inverse(T);
  ensure(Ti.has_value(), "decomposition pieces are not complementary");
  std::size_t off = 0;
  for (std::size_t k = 0; k < mods.size(); ++k) {
    std::size_t d = mods[k].dim();
    out.push_back(Summand{mods[k], ModuleMap{mods[k], m, incs[k]}, ModuleMap{m, mods[k], Ti->block(off, 0, d, m.dim())}});
    off += d;
  }
  std::stable_sort(out.begin(), out.end(), [](const Summand& a, const Summand& b) { return a.mod.dimvec() < b.mod.dimvec(); });
  return out;
}

std::vector<Grouped> decompose_grouped(const FDModule& m) {
  std::vector<Grouped> out;
  for (auto& s : decompose(m)) {
    bool found = false;
    for (auto& g : out)
      if (is_isomorphic(g.mod, s.mod)) {
        g.mult++;
        found = true;
        break;
      }
    if (!found) out.push_back(Grouped{s.mod, 1});
  }
  return out;
}

std::optional<ModuleMap> find_isomorphism(const FDModule& m, const FDModule& n) {
  require_same(m, n);
  if (m.dimvec() != n.dimvec()) return std::nullopt;
  if (m.dim() == 0) return ModuleMap{m, n, FMatrix(0, 0, m.p())};
  HomSpace h = hom_space(m, n);
  if (h.size() == 0) return std::nullopt;
  const u32 p = m.p();
  auto rng = seeded_rng(m.dim() * 131 + h.size());
  std::uniform_int_distribution<u32> dist(0, p - 1);
  auto trial = [&]() -> std::optional<ModuleMap> {
    std::vector<u32> c(h.size());
    for (auto& x : c) x = dist(rng);
    ModuleMap f = h.combine(c);
    if (rank_of(f.mat) == m.dim()) return f;
    return std::nullopt;
  };
  const int kTrials = 40;
  int done = 0;
  for (; done < 3; ++done)
    if (auto f = trial()) return f;
  // certificates of non-isomorphism
  HomSpace back = hom_space(n, m);
  if (back.size() == 0) return std::nullopt;
  bool pairing_zero = true;
  for (auto& f : h.basis) {
    for (auto& g : back.basis)
      if (trace((g * f).mat) != 0) {
        pairing_zero = false;
        break;
      }
    if (!pairing_zero) break;
  }
  if (pairing_zero) return std::nullopt;
  {
    std::vector<FMatrix> imgs, kers;
    for (auto& f : h.basis) {
      imgs.push_back(f.mat);
      kers.push_back(f.mat);
    }
    if (rank_of(FMatrix::hcat(imgs, n.dim(), p)) < n.dim()) return std::nullopt;
    if (rank_of(FMatrix::vcat(kers, m.dim(), p)) < m.dim()) return std::nullopt;
  }
  for (; done < kTrials; ++done)
    if (auto f = trial()) return f;
  if (hom_dim(m, m) != h.size() || hom_dim(n, n) != back.size() || h.size() != back.size()) return std::nullopt;
  fail(ErrorKind::Inconclusive, "inconclusive isomorphism test");
}

bool is_isomorphic(const FDModule& m, const FDModule& n) { return find_isomorphism(m, n).has_value(); }

// ---------------------------------------------------------------------------
// minimization

namespace {

std::optional<FMatrix> find_non_nilpotent(const HomSpace& end, const FMatrix& jcoef, u64 salt) {
  const std::size_t n = end.src.dim();
  const u32 p = end.src.p();
  std::vector<FMatrix> elems;
  for (std::size_t c = 0; c < jcoef.cols(); ++c) elems.push_back(end.combine(jcoef.col(c)).mat);
  for (auto& x : elems)
    if (!is_nilpotent(x)) return x;
  if (elems.size() > 1) {
    auto rng = seeded_rng(salt);
    std::uniform_int_distribution<u32> dist(0, p - 1);
    for (int t = 0; t < 16; ++t) {
      FMatrix x(n, n, p);
      for (auto& e : elems) x.add_scaled(e, dist(rng));
      if (!is_nilpotent(x)) return x;
    }
  }
  if (!span_is_nilpotent(elems, n, p)) fail(ErrorKind::Inconclusive, "inconclusive: minimization found no idempotent to strip");
  return std::nullopt;
}

}  // namespace

Minimized right_minimize(const ModuleMap& g0) {
  Minimized r{g0.src, g0, ModuleMap::identity(g0.src), ModuleMap::identity(g0.src)};
  for (;;) {
    const FDModule& E = r.obj;
    if (E.dim() == 0) return r;
    HomSpace end = hom_space(E, E);
    std::vector<std::vector<u32>> cols;
    for (auto& b : end.basis) cols.push_back((r.map * b).mat.vec());
    FMatrix jcoef = kernel_basis(concat_columns(cols, r.map.tgt.dim() * E.dim(), E.p()));
    if (jcoef.cols() == 0) return r;
    auto psi = find_non_nilpotent(end, jcoef, E.dim());
    if (!psi) return r;
    FMatrix g = power(*psi, E.dim());
    auto [K, kinc] = kernel(ModuleMap{E, E, g});
    FMatrix im = column_basis(g);
    FMatrix T = FMatrix::hcat(kinc.mat, im);
    auto Ti = inverse(T);
    ensure(Ti.has_value(), "Fitting pieces are not complementary");
    FMatrix kproj = Ti->block(0, 0, K.dim(), E.dim());
    r.incl = r.incl * kinc;
    r.proj = ModuleMap{E, K, kproj} * r.proj;
    r.map = r.map * kinc;
    r.obj = K;
  }
}

Minimized left_minimize(const ModuleMap& f0) {
  Minimized r{f0.tgt, f0, ModuleMap::identity(f0.tgt), ModuleMap::identity(f0.tgt)};
  for (;;) {
    const FDModule& E = r.obj;
    if (E.dim() == 0) return r;
    HomSpace end = hom_space(E, E);
    std::vector<std::vector<u32>> cols;
    for (auto& b : end.basis) cols.push_back((b * r.map).mat.vec());
    FMatrix jcoef = kernel_basis(concat_columns(cols, E.dim() * r.map.src.dim(), E.p()));
    if (jcoef.cols() == 0) return r;
    auto psi = find_non_nilpotent(end, jcoef, E.dim() + 7);
    if (!psi) return r;
    FMatrix g = power(*psi, E.dim());
    auto [K, kinc] = kernel(ModuleMap{E, E, g});
    FMatrix im = column_basis(g);
    FMatrix T = FMatrix::hcat(kinc.mat, im);
    auto Ti = inverse(T);
    ensure(Ti.has_value(), "Fitting pieces are not complementary");
    ModuleMap kproj{E, K, Ti->block(0, 0, K.dim(), E.dim())};
    r.incl = r.incl * kinc;
    r.proj = kproj * r.proj;
    r.map = kproj * r.map;
    r.obj = K;
  }
}

}  // namespace arq
