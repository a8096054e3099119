#include "arq/exactla.hpp"

#include <algorithm>
#include <sstream>

namespace arq {

bool is_prime(u32 p) {
  if (p < 2) return false;
  for (u64 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

u32 inv_mod(u32 a, u32 p) {
  if (a % p == 0) fail(ErrorKind::Internal, "inverse of zero");
  long long t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += p;
  return u32(t);
}

u32 reduce_signed(long long v, u32 p) {
  long long r = v % (long long)p;
  if (r < 0) r += p;
  return u32(r);
}

FElem::FElem(long long v, u32 p) : v_(reduce_signed(v, p)), p_(p) {}

void FElem::check(const FElem& o) const {
  if (p_ != o.p_) fail(ErrorKind::Input, "field elements with different moduli");
}
FElem FElem::operator+(const FElem& o) const {
  check(o);
  return FElem(add_mod(v_, o.v_, p_), p_);
}
FElem FElem::operator-(const FElem& o) const {
  check(o);
  return FElem(sub_mod(v_, o.v_, p_), p_);
}
FElem FElem::operator*(const FElem& o) const {
  check(o);
  return FElem(mul_mod(v_, o.v_, p_), p_);
}
FElem FElem::operator-() const { return FElem(neg_mod(v_, p_), p_); }
FElem FElem::inverse() const { return FElem(inv_mod(v_, p_), p_); }

// ---------------------------------------------------------------------------

FMatrix::FMatrix(std::size_t r, std::size_t c, u32 p) : r_(r), c_(c), p_(p), a_(r * c, 0) {}

FMatrix FMatrix::identity(std::size_t n, u32 p) {
  FMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FMatrix FMatrix::from_rows(const std::vector<std::vector<long long>>& rows, u32 p) {
  std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  FMatrix m(r, c, p);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) fail(ErrorKind::Input, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = reduce_signed(rows[i][j], p);
  }
  return m;
}

FMatrix FMatrix::column(const std::vector<u32>& v, u32 p) {
  FMatrix m(v.size(), 1, p);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i] % p;
  return m;
}

void FMatrix::check_same(const FMatrix& o) const {
  if (p_ != o.p_) fail(ErrorKind::Input, "matrices over different fields");
}

FMatrix FMatrix::hcat(const FMatrix& a, const FMatrix& b) {
  a.check_same(b);
  if (a.r_ != b.r_) fail(ErrorKind::Internal, "hcat row mismatch");
  FMatrix m(a.r_, a.c_ + b.c_, a.p_);
  m.set_block(0, 0, a);
  m.set_block(0, a.c_, b);
  return m;
}

FMatrix FMatrix::vcat(const FMatrix& a, const FMatrix& b) {
  a.check_same(b);
  if (a.c_ != b.c_) fail(ErrorKind::Internal, "vcat column mismatch");
  FMatrix m(a.r_ + b.r_, a.c_, a.p_);
  m.set_block(0, 0, a);
  m.set_block(a.r_, 0, b);
  return m;
}

FMatrix FMatrix::hcat(const std::vector<FMatrix>& parts, std::size_t rows, u32 p) {
  std::size_t c = 0;
  for (auto& x : parts) {
    if (x.rows() != rows) fail(ErrorKind::Internal, "hcat row mismatch");
    c += x.cols();
  }
  FMatrix m(rows, c, p);
  std::size_t off = 0;
  for (auto& x : parts) {
    m.set_block(0, off, x);
    off += x.cols();
  }
  return m;
}

FMatrix FMatrix::vcat(const std::vector<FMatrix>& parts, std::size_t cols, u32 p) {
  std::size_t r = 0;
  for (auto& x : parts) {
    if (x.cols() != cols) fail(ErrorKind::Internal, "vcat column mismatch");
    r += x.rows();
  }
  FMatrix m(r, cols, p);
  std::size_t off = 0;
  for (auto& x : parts) {
    m.set_block(off, 0, x);
    off += x.rows();
  }
  return m;
}

FMatrix FMatrix::direct_sum(const FMatrix& a, const FMatrix& b) {
  a.check_same(b);
  FMatrix m(a.r_ + b.r_, a.c_ + b.c_, a.p_);
  m.set_block(0, 0, a);
  m.set_block(a.r_, a.c_, b);
  return m;
}

FMatrix FMatrix::operator*(const FMatrix& o) const {
  check_same(o);
  if (c_ != o.r_) fail(ErrorKind::Internal, "matrix product shape mismatch");
  FMatrix out(r_, o.c_, p_);
  if (r_ == 0 || o.c_ == 0) return out;
  const u64 pm1 = p_ - 1;
  const u64 limit = pm1 == 0 ? ~u64(0) : (~u64(0)) / (pm1 * pm1) - 1;
  std::vector<u64> acc(o.c_);
  for (std::size_t i = 0; i < r_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    u64 terms = 0;
    const u32* ar = row_ptr(i);
    for (std::size_t k = 0; k < c_; ++k) {
      u64 a = ar[k];
      if (a == 0) continue;
      const u32* br = o.row_ptr(k);
      for (std::size_t j = 0; j < o.c_; ++j) acc[j] += a * br[j];
      if (++terms >= limit) {
        for (auto& x : acc) x %= p_;
        terms = 1;
      }
    }
    u32* orow = out.row_ptr(i);
    for (std::size_t j = 0; j < o.c_; ++j) orow[j] = u32(acc[j] % p_);
  }
  return out;
}

FMatrix FMatrix::operator+(const FMatrix& o) const {
  FMatrix m = *this;
  m += o;
  return m;
}

FMatrix& FMatrix::operator+=(const FMatrix& o) {
  check_same(o);
  if (r_ != o.r_ || c_ != o.c_) fail(ErrorKind::Internal, "matrix sum shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = add_mod(a_[i], o.a_[i], p_);
  return *this;
}

FMatrix FMatrix::operator-(const FMatrix& o) const {
  check_same(o);
  if (r_ != o.r_ || c_ != o.c_) fail(ErrorKind::Internal, "matrix difference shape mismatch");
  FMatrix m = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = sub_mod(a_[i], o.a_[i], p_);
  return m;
}

FMatrix FMatrix::scaled(u32 s) const {
  FMatrix m = *this;
  s %= p_;
  for (auto& x : m.a_) x = mul_mod(x, s, p_);
  return m;
}

void FMatrix::add_scaled(const FMatrix& o, u32 s) {
  check_same(o);
  if (r_ != o.r_ || c_ != o.c_) fail(ErrorKind::Internal, "add_scaled shape mismatch");
  s %= p_;
  if (s == 0) return;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (o.a_[i]) a_[i] = u32((a_[i] + u64(s) * o.a_[i]) % p_);
}

FMatrix FMatrix::transpose() const {
  FMatrix m(c_, r_, p_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

FMatrix FMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > r_ || c0 + nc > c_) fail(ErrorKind::Internal, "block out of range");
  FMatrix m(nr, nc, p_);
  for (std::size_t i = 0; i < nr; ++i)
    std::copy_n(row_ptr(r0 + i) + c0, nc, m.row_ptr(i));
  return m;
}

void FMatrix::set_block(std::size_t r0, std::size_t c0, const FMatrix& b) {
  check_same(b);
  if (r0 + b.r_ > r_ || c0 + b.c_ > c_) fail(ErrorKind::Internal, "set_block out of range");
  for (std::size_t i = 0; i < b.r_; ++i) std::copy_n(b.row_ptr(i), b.c_, row_ptr(r0 + i) + c0);
}

FMatrix FMatrix::col(std::size_t j) const { return block(0, j, r_, 1); }

std::vector<u32> FMatrix::col_vec(std::size_t j) const {
  std::vector<u32> v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

FMatrix FMatrix::select_cols(const std::vector<std::size_t>& idx) const {
  FMatrix m(r_, idx.size(), p_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) m(i, k) = (*this)(i, idx[k]);
  return m;
}

FMatrix FMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  FMatrix m(idx.size(), c_, p_);
  for (std::size_t k = 0; k < idx.size(); ++k) std::copy_n(row_ptr(idx[k]), c_, m.row_ptr(k));
  return m;
}

std::vector<u32> FMatrix::vec() const {
  std::vector<u32> v(r_ * c_);
  for (std::size_t j = 0; j < c_; ++j)
    for (std::size_t i = 0; i < r_; ++i) v[j * r_ + i] = (*this)(i, j);
  return v;
}

FMatrix FMatrix::unvec(const std::vector<u32>& v, std::size_t r, std::size_t c, u32 p) {
  if (v.size() != r * c) fail(ErrorKind::Internal, "unvec size mismatch");
  FMatrix m(r, c, p);
  for (std::size_t j = 0; j < c; ++j)
    for (std::size_t i = 0; i < r; ++i) m(i, j) = v[j * r + i];
  return m;
}

bool FMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](u32 x) { return x == 0; });
}

bool FMatrix::is_identity() const {
  if (r_ != c_) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

bool FMatrix::operator==(const FMatrix& o) const {
  return p_ == o.p_ && r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
}

std::string FMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < r_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < c_; ++j) os << (j ? " " : "") << (*this)(i, j);
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

Rref rref(const FMatrix& m) {
  Rref out;
  out.reduced = m;
  FMatrix& a = out.reduced;
  const u32 p = m.modulus();
  const std::size_t R = m.rows(), C = m.cols();
  std::size_t row = 0;
  for (std::size_t c = 0; c < C && row < R; ++c) {
    std::size_t piv = R;
    for (std::size_t i = row; i < R; ++i)
      if (a(i, c)) {
        piv = i;
        break;
      }
    if (piv == R) continue;
    if (piv != row)
      for (std::size_t j = 0; j < C; ++j) std::swap(a(piv, j), a(row, j));
    u32 inv = inv_mod(a(row, c), p);
    u32* pr = a.row_ptr(row);
    for (std::size_t j = c; j < C; ++j) pr[j] = mul_mod(pr[j], inv, p);
    for (std::size_t i = 0; i < R; ++i) {
      if (i == row) continue;
      u32 f = a(i, c);
      if (!f) continue;
      u32 nf = p - f;
      u32* ri = a.row_ptr(i);
      for (std::size_t j = c; j < C; ++j)
        if (pr[j]) ri[j] = u32((ri[j] + u64(nf) * pr[j]) % p);
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.rank = out.pivots.size();
  return out;
}

std::size_t rank_of(const FMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // eliminate on the thinner orientation
  return m.rows() < m.cols() ? rref(m.transpose()).rank : rref(m).rank;
}

std::optional<FMatrix> solve_linear(const FMatrix& a, const FMatrix& b) {
  if (a.rows() != b.rows()) fail(ErrorKind::Input, "solve_linear: dimension mismatch");
  const std::size_t n = a.cols(), k = b.cols();
  Rref r = rref(FMatrix::hcat(a, b));
  FMatrix x(n, k, a.modulus());
  for (std::size_t i = 0; i < r.rank; ++i) {
    std::size_t pc = r.pivots[i];
    if (pc >= n) return std::nullopt;
    for (std::size_t j = 0; j < k; ++j) x(pc, j) = r.reduced(i, n + j);
  }
  return x;
}

FMatrix kernel_basis(const FMatrix& a) {
  const std::size_t n = a.cols();
  const u32 p = a.modulus();
  Rref r = rref(a);
  std::vector<char> is_piv(n, 0);
  for (auto c : r.pivots) is_piv[c] = 1;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_piv[c]) free.push_back(c);
  FMatrix k(n, free.size(), p);
  for (std::size_t t = 0; t < free.size(); ++t) {
    std::size_t f = free[t];
    k(f, t) = 1;
    for (std::size_t i = 0; i < r.rank; ++i) k(r.pivots[i], t) = neg_mod(r.reduced(i, f), p);
  }
  return k;
}

std::vector<std::size_t> independent_columns(const FMatrix& a) { return rref(a).pivots; }

FMatrix column_basis(const FMatrix& a) { return a.select_cols(independent_columns(a)); }

std::optional<FMatrix> inverse(const FMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  Rref r = rref(FMatrix::hcat(a, FMatrix::identity(n, a.modulus())));
  if (r.rank < n || (n && r.pivots[n - 1] >= n)) return std::nullopt;
  return r.reduced.block(0, n, n, n);
}

FMatrix left_inverse(const FMatrix& w) {
  // pick independent rows of w, invert that square block
  const std::size_t k = w.cols();
  std::vector<std::size_t> rows = independent_columns(w.transpose());
  if (rows.size() != k) fail(ErrorKind::Internal, "left_inverse: not full column rank");
  auto inv = inverse(w.select_rows(rows));
  ensure(inv.has_value(), "left_inverse: singular block");
  FMatrix l(k, w.rows(), w.modulus());
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t i = 0; i < k; ++i) l(i, rows[t]) = (*inv)(i, t);
  return l;
}

std::vector<std::size_t> complement_units(const FMatrix& w, std::size_t n) {
  FMatrix ext = FMatrix::hcat(w.cols() ? w : FMatrix(n, 0, w.modulus()), FMatrix::identity(n, w.modulus()));
  std::vector<std::size_t> out;
  for (auto c : independent_columns(ext))
    if (c >= w.cols()) out.push_back(c - w.cols());
  return out;
}

bool in_span(const FMatrix& basis, const FMatrix& v) {
  if (v.cols() == 0) return true;
  if (basis.cols() == 0) return v.is_zero();
  return rank_of(FMatrix::hcat(basis, v)) == rank_of(basis);
}

FMatrix power(const FMatrix& m, std::size_t e) {
  FMatrix result = FMatrix::identity(m.rows(), m.modulus());
  FMatrix base = m;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool is_nilpotent(const FMatrix& m) { return power(m, m.rows()).is_zero(); }

std::vector<u32> charpoly(const FMatrix& m) {
  const std::size_t n = m.rows();
  const u32 p = m.modulus();
  FMatrix h = m;
  // similarity to upper Hessenberg form
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = n;
    for (std::size_t i = j + 1; i < n; ++i)
      if (h(i, j)) {
        piv = i;
        break;
      }
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    u32 inv = inv_mod(h(j + 1, j), p);
    for (std::size_t i = j + 2; i < n; ++i) {
      u32 u = mul_mod(h(i, j), inv, p);
      if (!u) continue;
      for (std::size_t c = 0; c < n; ++c) h(i, c) = sub_mod(h(i, c), mul_mod(u, h(j + 1, c), p), p);
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) = add_mod(h(r, j + 1), mul_mod(u, h(r, i), p), p);
    }
  }
  std::vector<std::vector<u32>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 0; k < n; ++k) {
    auto& pk = polys[k];
    std::vector<u32> next(k + 2, 0);
    for (std::size_t d = 0; d <= k; ++d) {
      next[d + 1] = add_mod(next[d + 1], pk[d], p);
      next[d] = sub_mod(next[d], mul_mod(h(k, k), pk[d], p), p);
    }
    u32 t = 1;
    for (std::size_t ii = k; ii-- > 0;) {
      t = mul_mod(t, h(ii + 1, ii), p);
      u32 coef = mul_mod(h(ii, k), t, p);
      if (!coef) continue;
      for (std::size_t d = 0; d < polys[ii].size(); ++d)
        next[d] = sub_mod(next[d], mul_mod(coef, polys[ii][d], p), p);
    }
    polys[k + 1] = std::move(next);
  }
  return polys[n];
}

std::vector<u32> poly_roots(const std::vector<u32>& poly, u32 p) {
  std::vector<u32> roots;
  if (poly.empty()) return roots;
  for (u32 x = 0; x < p; ++x) {
    u64 acc = 0;
    for (std::size_t d = poly.size(); d-- > 0;) acc = (acc * x + poly[d]) % p;
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

FMatrix concat_columns(const std::vector<std::vector<u32>>& cols, std::size_t n, u32 p) {
  FMatrix m(n, cols.size(), p);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  return m;
}

}  // namespace arq
