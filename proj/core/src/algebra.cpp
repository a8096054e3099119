#include "arq/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace arq {

std::size_t Quiver::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return i;
  fail(ErrorKind::Input, "unknown vertex " + name);
}

std::size_t Quiver::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return i;
  fail(ErrorKind::Input, "unknown arrow " + name);
}

std::size_t Quiver::multiplicity(std::size_t i, std::size_t j) const {
  return std::count_if(arrows.begin(), arrows.end(), [&](const Arrow& a) { return a.from == i && a.to == j; });
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n"), e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Relation parse_relation(const std::string& text, const Quiver& q) {
  Relation rel;
  rel.text = text;
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) fail(ErrorKind::Input, "empty relation");
  std::vector<std::pair<int, std::string>> chunks;
  int sign = 1;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '+' || ch == '-') {
      if (!cur.empty()) chunks.emplace_back(sign, cur);
      else if (i != 0)
        fail(ErrorKind::Input, "malformed relation '" + text + "'");
      cur.clear();
      sign = ch == '-' ? -1 : 1;
    } else {
      cur += ch;
    }
  }
  if (cur.empty()) fail(ErrorKind::Input, "malformed relation '" + text + "'");
  chunks.emplace_back(sign, cur);

  for (auto& [sg, body] : chunks) {
    PathTerm term;
    term.coeff = sg;
    std::vector<std::string> toks;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
      tok = trim(tok);
      if (tok.empty()) fail(ErrorKind::Input, "malformed relation '" + text + "'");
      toks.push_back(tok);
    }
    std::size_t start = 0;
    if (!toks.empty() && all_digits(toks[0])) {
      term.coeff *= std::stoll(toks[0]);
      start = 1;
    }
    for (std::size_t t = start; t < toks.size(); ++t) {
      bool found = false;
      for (std::size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[a].name == toks[t]) {
          term.arrows.push_back(a);
          found = true;
          break;
        }
      if (!found) fail(ErrorKind::Input, "relation '" + text + "' names unknown arrow " + toks[t]);
    }
    if (term.arrows.size() < 2)
      fail(ErrorKind::Input, "non-admissible relation '" + text + "': every path needs length >= 2");
    for (std::size_t t = 0; t + 1 < term.arrows.size(); ++t)
      if (q.arrows[term.arrows[t]].to != q.arrows[term.arrows[t + 1]].from)
        fail(ErrorKind::Input, "relation '" + text + "' contains a non-composable path");
    rel.terms.push_back(term);
  }
  return rel;
}

void validate_spec(const AlgebraSpec& spec) {
  if (!is_prime(spec.characteristic)) fail(ErrorKind::Input, "field characteristic must be prime");
  if (spec.characteristic >= (1u << 31)) fail(ErrorKind::Input, "field characteristic too large");
  const Quiver& q = spec.quiver;
  if (q.vertices.empty()) fail(ErrorKind::Input, "quiver has no vertices");
  for (std::size_t i = 0; i < q.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < q.vertices.size(); ++j)
      if (q.vertices[i] == q.vertices[j]) fail(ErrorKind::Input, "duplicate vertex " + q.vertices[i]);
  for (std::size_t i = 0; i < q.arrows.size(); ++i) {
    if (q.arrows[i].from >= q.vertices.size() || q.arrows[i].to >= q.vertices.size())
      fail(ErrorKind::Input, "arrow " + q.arrows[i].name + " has an unknown endpoint");
    for (std::size_t j = i + 1; j < q.arrows.size(); ++j)
      if (q.arrows[i].name == q.arrows[j].name) fail(ErrorKind::Input, "duplicate arrow " + q.arrows[i].name);
  }
  for (auto& r : spec.relations)
    for (auto& t : r.terms) {
      if (t.arrows.size() < 2) fail(ErrorKind::Input, "non-admissible relation '" + r.text + "'");
      for (std::size_t k = 0; k + 1 < t.arrows.size(); ++k)
        if (q.arrows[t.arrows[k]].to != q.arrows[t.arrows[k + 1]].from)
          fail(ErrorKind::Input, "relation '" + r.text + "' contains a non-composable path");
    }
}

// ---------------------------------------------------------------------------

std::vector<u32> Algebra::product(const std::vector<u32>& x, const std::vector<u32>& y) const {
  std::vector<u64> acc(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (!y[j]) continue;
      u64 s = u64(x[i]) * y[j] % p;
      const u32* row = &table[(i * dim + j) * dim];
      for (std::size_t k = 0; k < dim; ++k)
        if (row[k]) acc[k] = (acc[k] + s * row[k]) % p;
    }
  }
  return std::vector<u32>(acc.begin(), acc.end());
}

std::vector<u32> Algebra::basis_vec(std::size_t i) const {
  std::vector<u32> v(dim, 0);
  v[i] = 1;
  return v;
}

std::vector<u32> Algebra::unit() const {
  std::vector<u32> u(dim, 0);
  if (adapted) {
    for (std::size_t i = 0; i < nv; ++i) u[i] = 1;
  } else {
    for (auto& e : generic_idempotents)
      for (std::size_t k = 0; k < dim; ++k) u[k] = add_mod(u[k], e[k], p);
  }
  return u;
}

FMatrix Algebra::right_mult(const std::vector<u32>& y) const {
  FMatrix m(dim, dim, p);
  for (std::size_t i = 0; i < dim; ++i) {
    auto col = product(basis_vec(i), y);
    for (std::size_t k = 0; k < dim; ++k) m(k, i) = col[k];
  }
  return m;
}

FMatrix Algebra::left_mult(const std::vector<u32>& y) const {
  FMatrix m(dim, dim, p);
  for (std::size_t i = 0; i < dim; ++i) {
    auto col = product(y, basis_vec(i));
    for (std::size_t k = 0; k < dim; ++k) m(k, i) = col[k];
  }
  return m;
}

std::vector<std::size_t> Algebra::block_basis(std::size_t s, std::size_t t) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim; ++i)
    if (src[i] == s && tgt[i] == t) out.push_back(i);
  return out;
}

std::vector<std::size_t> Algebra::radical_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = nv; i < dim; ++i) out.push_back(i);
  return out;
}

std::string Algebra::describe() const {
  std::ostringstream os;
  os << "algebra of dimension " << dim << " with " << nv << " vertices";
  return os.str();
}

bool same_algebra(const Algebra& a, const Algebra& b) {
  return &a == &b || (a.p == b.p && a.dim == b.dim && a.nv == b.nv && a.table == b.table);
}

bool check_associative(const Algebra& a) {
  const std::size_t n = a.dim;
  std::vector<u64> lhs(n), rhs(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const u32* ij = &a.table[(i * n + j) * n];
      for (std::size_t k = 0; k < n; ++k) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (std::size_t m = 0; m < n; ++m)
          if (ij[m]) {
            const u32* mk = &a.table[(m * n + k) * n];
            for (std::size_t r = 0; r < n; ++r)
              if (mk[r]) lhs[r] = (lhs[r] + u64(ij[m]) * mk[r]) % a.p;
          }
        const u32* jk = &a.table[(j * n + k) * n];
        for (std::size_t m = 0; m < n; ++m)
          if (jk[m]) {
            const u32* im = &a.table[(i * n + m) * n];
            for (std::size_t r = 0; r < n; ++r)
              if (im[r]) rhs[r] = (rhs[r] + u64(jk[m]) * im[r]) % a.p;
          }
        if (lhs != rhs) return false;
      }
    }
  return true;
}

namespace {

// basis indices (among radical ones) spanning rad modulo rad^2
std::vector<std::size_t> radical_generators(const Algebra& a) {
  std::vector<std::vector<u32>> sq;
  auto rad = a.radical_indices();
  for (auto i : rad)
    for (auto j : rad) {
      const u32* row = &a.table[(i * a.dim + j) * a.dim];
      std::vector<u32> v(row, row + a.dim);
      if (std::any_of(v.begin(), v.end(), [](u32 x) { return x != 0; })) sq.push_back(v);
    }
  FMatrix sqm = concat_columns(sq, a.dim, a.p);
  std::vector<std::size_t> gens;
  FMatrix span = sqm.cols() ? column_basis(sqm) : FMatrix(a.dim, 0, a.p);
  for (auto r : rad) {
    FMatrix e(a.dim, 1, a.p);
    e(r, 0) = 1;
    if (!in_span(span, e)) {
      gens.push_back(r);
      span = FMatrix::hcat(span, e);
    }
  }
  return gens;
}

std::shared_ptr<Algebra> finish(std::shared_ptr<Algebra> a) {
  a->gens = radical_generators(*a);
  return a;
}

}  // namespace

AlgPtr adapted_algebra(u32 p, std::size_t dim, const std::vector<u32>& table, const std::vector<std::string>& labels,
                       const std::vector<std::size_t>& idem_index, const std::vector<std::size_t>& src,
                       const std::vector<std::size_t>& tgt, std::vector<std::string> vertex_names, Provenance prov) {
  std::vector<std::size_t> order = idem_index;
  std::vector<char> used(dim, 0);
  for (auto i : idem_index) used[i] = 1;
  for (std::size_t i = 0; i < dim; ++i)
    if (!used[i]) order.push_back(i);
  std::vector<std::size_t> pos(dim);
  for (std::size_t k = 0; k < dim; ++k) pos[order[k]] = k;
  auto a = std::make_shared<Algebra>();
  a->p = p;
  a->dim = dim;
  a->nv = idem_index.size();
  a->vertex_names = std::move(vertex_names);
  a->prov = prov;
  a->table.assign(dim * dim * dim, 0);
  a->labels.resize(dim);
  a->src.resize(dim);
  a->tgt.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    a->labels[pos[i]] = labels[i];
    a->src[pos[i]] = src[i];
    a->tgt[pos[i]] = tgt[i];
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) a->table[(pos[i] * dim + pos[j]) * dim + pos[k]] = table[(i * dim + j) * dim + k];
  }
  return finish(a);
}

// ---------------------------------------------------------------------------
// bound quiver algebras

namespace {

struct Path {
  std::size_t s = 0, t = 0;
  std::vector<std::size_t> arrows;
};

using PathKey = std::pair<std::size_t, std::vector<std::size_t>>;

}  // namespace

AlgPtr build_algebra(const AlgebraSpec& spec) {
  validate_spec(spec);
  const Quiver& q = spec.quiver;
  const u32 p = spec.characteristic;
  const std::size_t nv = q.vertices.size();
  const std::size_t kMaxPaths = 20000;

  std::vector<std::vector<Path>> by_len;
  by_len.push_back({});
  for (std::size_t v = 0; v < nv; ++v) by_len[0].push_back(Path{v, v, {}});
  auto extend = [&]() {
    std::vector<Path> next;
    if (by_len.size() == 1) {
      for (std::size_t a = 0; a < q.arrows.size(); ++a) next.push_back(Path{q.arrows[a].from, q.arrows[a].to, {a}});
    } else {
      for (auto& path : by_len.back())
        for (std::size_t a = 0; a < q.arrows.size(); ++a)
          if (q.arrows[a].from == path.t) {
            Path np = path;
            np.arrows.push_back(a);
            np.t = q.arrows[a].to;
            next.push_back(np);
          }
    }
    by_len.push_back(std::move(next));
  };

  struct Truncation {
    std::vector<Path> paths;  // columns, longest first
    std::map<PathKey, std::size_t> index;
    Rref red;
    std::size_t quotient_dim = 0;
  };

  auto truncate = [&](std::size_t M) {
    // kQ / (I + R^M): paths of length < M
    while (by_len.size() < M) extend();
    Truncation tr;
    for (std::size_t L = M; L-- > 0;)
      for (auto& path : by_len[L]) {
        tr.index[{path.s, path.arrows}] = tr.paths.size();
        tr.paths.push_back(path);
      }
    if (tr.paths.size() > kMaxPaths)
      fail(ErrorKind::Budget, "cap exceeded at length " + std::to_string(M - 1) + " (too many paths)");
    std::vector<std::vector<u32>> rows;
    std::vector<const Path*> shorter;
    for (std::size_t L = 0; L < M; ++L)
      for (auto& path : by_len[L]) shorter.push_back(&path);
    for (auto& rel : spec.relations) {
      std::size_t minlen = M;
      for (auto& t : rel.terms) minlen = std::min(minlen, t.arrows.size());
      if (minlen >= M) continue;
      for (auto* u : shorter)
        for (auto* v : shorter) {
          if (u->arrows.size() + v->arrows.size() + minlen >= M) continue;
          std::vector<u32> row(tr.paths.size(), 0);
          bool nonzero = false;
          for (auto& term : rel.terms) {
            std::size_t ts = q.arrows[term.arrows.front()].from, tt = q.arrows[term.arrows.back()].to;
            if (u->t != ts || tt != v->s) continue;
            std::vector<std::size_t> w = u->arrows;
            w.insert(w.end(), term.arrows.begin(), term.arrows.end());
            w.insert(w.end(), v->arrows.begin(), v->arrows.end());
            if (w.size() >= M) continue;
            auto it = tr.index.find({u->s, w});
            ensure(it != tr.index.end(), "path lookup failed");
            row[it->second] = add_mod(row[it->second], reduce_signed(term.coeff, p), p);
            nonzero = true;
          }
          if (nonzero && std::any_of(row.begin(), row.end(), [](u32 x) { return x; })) rows.push_back(std::move(row));
        }
    }
    FMatrix rel_m(rows.size(), tr.paths.size(), p);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < tr.paths.size(); ++j) rel_m(i, j) = rows[i][j];
    tr.red = rref(rel_m);
    tr.quotient_dim = tr.paths.size() - tr.red.rank;
    return tr;
  };

  std::size_t m = 1;
  Truncation cur = truncate(1);
  for (;;) {
    if (m > spec.path_cap) fail(ErrorKind::Budget, "cap exceeded at length " + std::to_string(spec.path_cap));
    Truncation nxt = truncate(m + 1);
    if (nxt.quotient_dim == cur.quotient_dim) break;
    cur = std::move(nxt);
    ++m;
  }

  // free columns are the basis; order them by length then enumeration order
  const std::size_t N = cur.paths.size();
  std::vector<std::ptrdiff_t> pivot_row(N, -1);
  for (std::size_t i = 0; i < cur.red.rank; ++i) pivot_row[cur.red.pivots[i]] = std::ptrdiff_t(i);
  std::vector<std::size_t> free_cols;
  for (std::size_t j = N; j-- > 0;)
    if (pivot_row[j] < 0) free_cols.push_back(j);
  // columns were longest-first; reversing gives shortest first, but keep
  // enumeration order inside each length
  std::stable_sort(free_cols.begin(), free_cols.end(), [&](std::size_t x, std::size_t y) {
    auto lx = cur.paths[x].arrows.size(), ly = cur.paths[y].arrows.size();
    if (lx != ly) return lx < ly;
    return x < y;
  });
  const std::size_t dim = free_cols.size();
  std::vector<std::size_t> basis_pos(N, SIZE_MAX);
  for (std::size_t k = 0; k < dim; ++k) basis_pos[free_cols[k]] = k;

  auto normal_form = [&](std::size_t col) {
    std::vector<u32> v(dim, 0);
    if (pivot_row[col] < 0) {
      v[basis_pos[col]] = 1;
    } else {
      std::size_t r = std::size_t(pivot_row[col]);
      for (std::size_t k = 0; k < dim; ++k) v[k] = neg_mod(cur.red.reduced(r, free_cols[k]), p);
    }
    return v;
  };

  std::vector<u32> table(dim * dim * dim, 0);
  std::vector<std::string> labels(dim);
  std::vector<std::size_t> src(dim), tgt(dim), idem;
  for (std::size_t k = 0; k < dim; ++k) {
    const Path& x = cur.paths[free_cols[k]];
    src[k] = x.s;
    tgt[k] = x.t;
    if (x.arrows.empty()) {
      labels[k] = "e" + q.vertices[x.s];
      idem.push_back(k);
    } else {
      std::string l;
      for (std::size_t t = 0; t < x.arrows.size(); ++t) l += (t ? "*" : "") + q.arrows[x.arrows[t]].name;
      labels[k] = l;
    }
  }
  ensure(idem.size() == nv, "vertex paths missing from basis");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const Path& x = cur.paths[free_cols[i]];
      const Path& y = cur.paths[free_cols[j]];
      if (x.t != y.s) continue;
      std::vector<std::size_t> w = x.arrows;
      w.insert(w.end(), y.arrows.begin(), y.arrows.end());
      if (w.size() >= m) continue;
      auto it = cur.index.find({x.s, w});
      ensure(it != cur.index.end(), "product path lookup failed");
      auto nf = normal_form(it->second);
      std::copy(nf.begin(), nf.end(), table.begin() + (i * dim + j) * dim);
    }

  auto built = adapted_algebra(p, dim, table, labels, idem, src, tgt, q.vertices, Provenance::BoundQuiver);
  auto a = std::const_pointer_cast<Algebra>(built);
  a->spec = spec;
  a->basis_paths.resize(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    ensure(a->labels[k] == labels[k], "bound quiver basis was reordered");
    a->basis_paths[k] = cur.paths[free_cols[k]].arrows;
  }
  // arrows as generators, in arrow order
  a->gens.clear();
  for (std::size_t ar = 0; ar < q.arrows.size(); ++ar)
    for (std::size_t k = 0; k < dim; ++k)
      if (a->labels[k] == q.arrows[ar].name) a->gens.push_back(k);
  if (!check_associative(*a)) fail(ErrorKind::Internal, "bound quiver algebra is not associative");
  return a;
}

// ---------------------------------------------------------------------------

AlgPtr opposite(const AlgPtr& a) {
  if (auto orig = a->opposite_of.lock()) return orig;
  std::lock_guard<std::mutex> lock(a->cache_mutex);
  if (a->opposite_cache) return a->opposite_cache;
  auto o = std::make_shared<Algebra>();
  o->p = a->p;
  o->dim = a->dim;
  o->nv = a->nv;
  o->labels = a->labels;
  o->vertex_names = a->vertex_names;
  o->adapted = a->adapted;
  o->generic_idempotents = a->generic_idempotents;
  o->generic_radical = a->generic_radical;
  o->gens = a->gens;
  o->src = a->tgt;
  o->tgt = a->src;
  o->prov = Provenance::Opposite;
  o->opposite_of = a;
  const std::size_t n = a->dim;
  o->table.assign(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) o->table[(i * n + j) * n + k] = a->table[(j * n + i) * n + k];
  a->opposite_cache = o;
  return o;
}

AlgPtr triangular(const AlgPtr& lam) {
  if (!lam->adapted) fail(ErrorKind::Unsupported, "triangular matrix algebra needs a basic algebra");
  const std::size_t d = lam->dim, n = lam->nv;
  // components: 0 = e11, 1 = e22, 2 = e21
  auto idx = [&](int comp, std::size_t b) -> std::size_t {
    if (b < n) return comp == 2 ? 2 * n + 2 * (d - n) + b : std::size_t(comp) * n + b;
    if (comp == 2) return 2 * n + 2 * (d - n) + b;
    return 2 * n + std::size_t(comp) * (d - n) + (b - n);
  };
  const std::size_t D = 3 * d;
  std::vector<u32> table(D * D * D, 0);
  std::vector<std::string> labels(D);
  std::vector<std::size_t> src(D), tgt(D);
  const char* tag[3] = {"e11.", "e22.", "e21."};
  // product of matrix units: returns component or -1
  auto unit_prod = [](int x, int y) -> int {
    if (x == 0 && y == 0) return 0;
    if (x == 1 && y == 1) return 1;
    if (x == 2 && y == 0) return 2;
    if (x == 1 && y == 2) return 2;
    return -1;
  };
  for (int c1 = 0; c1 < 3; ++c1)
    for (std::size_t b1 = 0; b1 < d; ++b1) {
      std::size_t i = idx(c1, b1);
      labels[i] = tag[c1] + lam->labels[b1];
      src[i] = (c1 == 0 ? 0 : n) + lam->src[b1];
      tgt[i] = (c1 == 1 ? n : 0) + lam->tgt[b1];
      for (int c2 = 0; c2 < 3; ++c2) {
        int c = unit_prod(c1, c2);
        if (c < 0) continue;
        for (std::size_t b2 = 0; b2 < d; ++b2) {
          std::size_t j = idx(c2, b2);
          for (std::size_t k = 0; k < d; ++k) {
            u32 v = lam->c(b1, b2, k);
            if (v) table[(i * D + j) * D + idx(c, k)] = v;
          }
        }
      }
    }
  std::vector<std::size_t> idem;
  for (std::size_t v = 0; v < n; ++v) idem.push_back(idx(0, v));
  for (std::size_t v = 0; v < n; ++v) idem.push_back(idx(1, v));
  std::vector<std::string> vnames;
  for (auto& v : lam->vertex_names) vnames.push_back("1." + v);
  for (auto& v : lam->vertex_names) vnames.push_back("2." + v);
  auto built = adapted_algebra(lam->p, D, table, labels, idem, src, tgt, vnames, Provenance::Triangular);
  auto a = std::const_pointer_cast<Algebra>(built);
  a->base = lam;
  // adapted_algebra puts the idempotents first and keeps the rest in order
  std::vector<std::size_t> order = idem, pos(D);
  std::vector<char> used(D, 0);
  for (auto i : idem) used[i] = 1;
  for (std::size_t i = 0; i < D; ++i)
    if (!used[i]) order.push_back(i);
  for (std::size_t k = 0; k < D; ++k) pos[order[k]] = k;
  a->tri_index.resize(D);
  for (int c = 0; c < 3; ++c)
    for (std::size_t b = 0; b < d; ++b) a->tri_index[c * d + b] = pos[idx(c, b)];
  return a;
}

AlgPtr quotient_algebra(const AlgPtr& a, const FMatrix& ideal_basis) {
  if (!a->adapted) fail(ErrorKind::Unsupported, "quotient of a non-basic algebra");
  const std::size_t n = a->dim;
  FMatrix ideal = ideal_basis.cols() ? column_basis(ideal_basis) : FMatrix(n, 0, a->p);
  std::vector<std::size_t> reps;
  FMatrix span = ideal;
  for (std::size_t i = 0; i < n; ++i) {
    FMatrix e(n, 1, a->p);
    e(i, 0) = 1;
    if (!in_span(span, e)) {
      reps.push_back(i);
      span = FMatrix::hcat(span, e);
    }
  }
  const std::size_t qd = reps.size();
  FMatrix T(n, n, a->p);
  for (std::size_t k = 0; k < qd; ++k) T(reps[k], k) = 1;
  T.set_block(0, qd, ideal);
  auto Tinv = inverse(T);
  ensure(Tinv.has_value(), "quotient basis change is singular");
  FMatrix to_q = Tinv->block(0, 0, qd, n);

  std::vector<std::size_t> vmap(a->nv, SIZE_MAX), parent_vertex;
  for (std::size_t k = 0; k < qd; ++k)
    if (reps[k] < a->nv) {
      vmap[reps[k]] = parent_vertex.size();
      parent_vertex.push_back(reps[k]);
    }
  std::vector<u32> table(qd * qd * qd, 0);
  std::vector<std::string> labels(qd);
  std::vector<std::size_t> src(qd), tgt(qd), idem;
  for (std::size_t i = 0; i < qd; ++i) {
    labels[i] = a->labels[reps[i]];
    src[i] = vmap[a->src[reps[i]]];
    tgt[i] = vmap[a->tgt[reps[i]]];
    ensure(src[i] != SIZE_MAX && tgt[i] != SIZE_MAX, "quotient representative touches a vanished vertex");
    if (reps[i] < a->nv) idem.push_back(i);
    for (std::size_t j = 0; j < qd; ++j) {
      const u32* row = &a->table[(reps[i] * n + reps[j]) * n];
      FMatrix v(n, 1, a->p);
      for (std::size_t k = 0; k < n; ++k) v(k, 0) = row[k];
      FMatrix c = to_q * v;
      for (std::size_t k = 0; k < qd; ++k) table[(i * qd + j) * qd + k] = c(k, 0);
    }
  }
  std::vector<std::string> vnames;
  for (auto v : parent_vertex) vnames.push_back(a->vertex_names[v]);
  // reps are already idempotents-first, so the order is preserved
  auto built = adapted_algebra(a->p, qd, table, labels, idem, src, tgt, vnames, Provenance::Quotient);
  auto q = std::const_pointer_cast<Algebra>(built);
  q->base = a;
  q->ideal = ideal;
  q->to_quotient = to_q;
  q->from_quotient = T.block(0, 0, n, qd);
  q->parent_vertex = parent_vertex;
  return q;
}

// ---------------------------------------------------------------------------
// generic algebras

namespace {

// trace-zero elements of a local algebra basis must form a nilpotent ideal
bool local_by_trace(const std::vector<FMatrix>& ops) {
  if (ops.empty()) return false;
  const std::size_t n = ops[0].rows();
  const u32 p = ops[0].modulus();
  auto trace = [&](const FMatrix& m) {
    u32 t = 0;
    for (std::size_t i = 0; i < n; ++i) t = add_mod(t, m(i, i), p);
    return t;
  };
  u32 invn = inv_mod(u32(n % p), p);
  std::vector<FMatrix> h;
  for (auto& f : ops) {
    u32 lam = mul_mod(trace(f), invn, p);
    FMatrix g = f - FMatrix::identity(n, p).scaled(lam);
    if (!g.is_zero()) h.push_back(g);
  }
  // nilpotency of the span: products of length n vanish
  std::vector<FMatrix> layer = h;
  for (std::size_t k = 1; k <= n && !layer.empty(); ++k) {
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
  return layer.empty();
}

struct IdemSplitter {
  const Algebra& a;
  std::size_t attempts = 0;

  // restrict left multiplication by x to the subspace w
  FMatrix restrict_left(const std::vector<u32>& x, const FMatrix& w, const FMatrix& winv) const {
    return winv * (a.left_mult(x) * w);
  }

  void run(const std::vector<u32>& e, std::vector<std::vector<u32>>& out) {
    const u32 p = a.p;
    FMatrix le = a.left_mult(e);
    FMatrix w = column_basis(le);  // eA
    if (w.cols() == 0) return;
    FMatrix winv = left_inverse(w);
    // basis of eAe
    std::vector<std::vector<u32>> corner;
    for (std::size_t b = 0; b < a.dim; ++b) {
      auto x = a.product(a.product(e, a.basis_vec(b)), e);
      if (std::any_of(x.begin(), x.end(), [](u32 v) { return v; })) corner.push_back(x);
    }
    const std::size_t n = w.cols();
    std::vector<FMatrix> ops;
    for (auto& x : corner) ops.push_back(restrict_left(x, w, winv));
    for (auto& f : ops) {
      auto roots = poly_roots(charpoly(f), p);
      if (roots.empty()) fail(ErrorKind::Unsupported, "non-split block");
      for (u32 lam : roots) {
        FMatrix g = power(f - FMatrix::identity(n, p).scaled(lam), n);
        FMatrix ker = kernel_basis(g), im = column_basis(g);
        if (ker.cols() == 0 || im.cols() == 0) continue;
        // projection onto im along ker is left multiplication by pi(e)
        FMatrix T = FMatrix::hcat(im, ker);
        auto Ti = inverse(T);
        ensure(Ti.has_value(), "Fitting decomposition not direct");
        FMatrix D(n, n, p);
        for (std::size_t i = 0; i < im.cols(); ++i) D(i, i) = 1;
        FMatrix pi = T * D * *Ti;
        FMatrix ev = FMatrix::column(e, p);
        FMatrix fvec = w * (pi * (winv * ev));
        std::vector<u32> f1 = fvec.col_vec(0), f2(a.dim);
        for (std::size_t k = 0; k < a.dim; ++k) f2[k] = sub_mod(e[k], f1[k], p);
        run(f1, out);
        run(f2, out);
        return;
      }
    }
    if (!local_by_trace(ops)) {
      if (++attempts > 64) fail(ErrorKind::Inconclusive, "idempotent splitting found no splitting element");
      fail(ErrorKind::Unsupported, "non-split block");
    }
    out.push_back(e);
  }
};

FMatrix trace_form_radical(const Algebra& a) {
  const std::size_t n = a.dim;
  if (a.p <= n) fail(ErrorKind::Unsupported, "field too small for the trace-form method at this dimension; use a larger p");
  std::vector<u32> tr(n, 0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m) tr[k] = add_mod(tr[k], a.c(m, k, m), a.p);
  FMatrix g(n, n, a.p);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      u64 s = 0;
      for (std::size_t k = 0; k < n; ++k) s = (s + u64(a.c(i, j, k)) * tr[k]) % a.p;
      g(j, i) = u32(s);
    }
  return kernel_basis(g);
}

}  // namespace

AlgPtr algebra_from_table(u32 p, std::size_t dim, std::vector<u32> table, std::vector<std::string> labels) {
  auto g = std::make_shared<Algebra>();
  g->p = p;
  g->dim = dim;
  g->table = std::move(table);
  g->labels = std::move(labels);
  g->adapted = false;
  if (!check_associative(*g)) fail(ErrorKind::Input, "structure constants are not associative");
  // unit: sum_i u_i c(i,j,k) = delta_jk
  FMatrix sys(dim * dim, dim, p), rhs(dim * dim, 1, p);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k) {
      for (std::size_t i = 0; i < dim; ++i) sys(j * dim + k, i) = g->c(i, j, k);
      rhs(j * dim + k, 0) = j == k;
    }
  auto u = solve_linear(sys, rhs);
  if (!u) fail(ErrorKind::Input, "algebra has no unit");
  g->generic_radical = trace_form_radical(*g);
  std::vector<std::vector<u32>> idem;
  IdemSplitter sp{*g};
  sp.run(u->col_vec(0), idem);
  g->generic_idempotents = idem;
  g->nv = idem.size();

  // basic iff e_i A e_j * e_j A e_i lies in the radical for i != j
  FMatrix rad = g->generic_radical;
  auto corner = [&](const std::vector<u32>& e, const std::vector<u32>& f) {
    std::vector<std::vector<u32>> vs;
    for (std::size_t b = 0; b < dim; ++b) {
      auto x = g->product(g->product(e, g->basis_vec(b)), f);
      if (std::any_of(x.begin(), x.end(), [](u32 v) { return v; })) vs.push_back(x);
    }
    return vs;
  };
  bool basic = true;
  for (std::size_t i = 0; i < idem.size() && basic; ++i)
    for (std::size_t j = 0; j < idem.size() && basic; ++j) {
      if (i == j) continue;
      for (auto& x : corner(idem[i], idem[j]))
        for (auto& y : corner(idem[j], idem[i]))
          if (!in_span(rad, FMatrix::column(g->product(x, y), p))) basic = false;
    }
  if (!basic) return g;

  // rebase: idempotents, then block bases of the radical
  std::vector<std::vector<u32>> nb = idem;
  std::vector<std::size_t> src, tgt;
  for (std::size_t i = 0; i < idem.size(); ++i) {
    src.push_back(i);
    tgt.push_back(i);
  }
  for (std::size_t s = 0; s < idem.size(); ++s)
    for (std::size_t t = 0; t < idem.size(); ++t) {
      std::vector<std::vector<u32>> vs;
      for (std::size_t c = 0; c < rad.cols(); ++c) {
        auto x = g->product(g->product(idem[s], rad.col_vec(c)), idem[t]);
        vs.push_back(x);
      }
      if (vs.empty()) continue;
      FMatrix blk = column_basis(concat_columns(vs, dim, p));
      for (std::size_t c = 0; c < blk.cols(); ++c) {
        nb.push_back(blk.col_vec(c));
        src.push_back(s);
        tgt.push_back(t);
      }
    }
  ensure(nb.size() == dim, "adapted basis has the wrong size");
  FMatrix T = concat_columns(nb, dim, p);
  auto Ti = inverse(T);
  ensure(Ti.has_value(), "adapted basis is singular");
  std::vector<u32> nt(dim * dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      FMatrix v = *Ti * FMatrix::column(g->product(nb[i], nb[j]), p);
      for (std::size_t k = 0; k < dim; ++k) nt[(i * dim + j) * dim + k] = v(k, 0);
    }
  std::vector<std::string> nl, vn;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < dim; ++i) nl.push_back(i < idem.size() ? "e" + std::to_string(i + 1) : "r" + std::to_string(i - idem.size() + 1));
  for (std::size_t i = 0; i < idem.size(); ++i) {
    idx.push_back(i);
    vn.push_back(std::to_string(i + 1));
  }
  return adapted_algebra(p, dim, nt, nl, idx, src, tgt, vn, Provenance::Generic);
}

FMatrix jacobson_radical(const AlgPtr& a) {
  if (!a->adapted) return a->generic_radical;
  FMatrix r(a->dim, a->dim - a->nv, a->p);
  for (std::size_t i = a->nv; i < a->dim; ++i) r(i, i - a->nv) = 1;
  return r;
}

std::vector<std::vector<u32>> primitive_idempotents(const AlgPtr& a) {
  if (!a->adapted) return a->generic_idempotents;
  std::vector<std::vector<u32>> out;
  for (std::size_t i = 0; i < a->nv; ++i) out.push_back(a->basis_vec(i));
  return out;
}

Quiver gabriel_quiver(const AlgPtr& a) {
  if (!a->adapted) fail(ErrorKind::Unsupported, "Gabriel quiver of a non-basic algebra");
  Quiver q;
  q.vertices = a->vertex_names;
  for (auto g : a->gens) q.arrows.push_back(Arrow{a->labels[g], a->src[g], a->tgt[g]});
  return q;
}

std::size_t loewy_length(const AlgPtr& a) {
  FMatrix rad = jacobson_radical(a);
  if (rad.cols() == 0) return 1;
  FMatrix layer = rad;
  std::size_t n = 1;
  while (layer.cols() > 0) {
    std::vector<std::vector<u32>> vs;
    for (std::size_t i = 0; i < layer.cols(); ++i)
      for (std::size_t j = 0; j < rad.cols(); ++j) {
        auto z = a->product(layer.col_vec(i), rad.col_vec(j));
        if (std::any_of(z.begin(), z.end(), [](u32 v) { return v; })) vs.push_back(z);
      }
    ++n;
    if (vs.empty()) break;
    layer = column_basis(concat_columns(vs, a->dim, a->p));
    if (n > a->dim + 1) fail(ErrorKind::Internal, "radical is not nilpotent");
  }
  return n;
}

}  // namespace arq
