#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arq/error.hpp"

namespace arq {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

inline constexpr u32 kDefaultPrime = 32003;

bool is_prime(u32 p);
u32 inv_mod(u32 a, u32 p);
u32 reduce_signed(long long v, u32 p);

inline u32 add_mod(u32 a, u32 b, u32 p) {
  u64 s = u64(a) + b;
  return u32(s >= p ? s - p : s);
}
inline u32 sub_mod(u32 a, u32 b, u32 p) { return a >= b ? a - b : u32(u64(a) + p - b); }
inline u32 mul_mod(u32 a, u32 b, u32 p) { return u32(u64(a) * b % p); }
inline u32 neg_mod(u32 a, u32 p) { return a == 0 ? 0 : p - a; }

// Residue mod p.  Mixing moduli throws.
class FElem {
 public:
  FElem() = default;
  FElem(long long v, u32 p);
  u32 value() const { return v_; }
  u32 modulus() const { return p_; }
  FElem operator+(const FElem& o) const;
  FElem operator-(const FElem& o) const;
  FElem operator*(const FElem& o) const;
  FElem operator-() const;
  FElem inverse() const;
  bool operator==(const FElem& o) const { return v_ == o.v_ && p_ == o.p_; }
  bool is_zero() const { return v_ == 0; }

 private:
  void check(const FElem& o) const;
  u32 v_ = 0;
  u32 p_ = kDefaultPrime;
};

class FMatrix {
 public:
  FMatrix() = default;
  FMatrix(std::size_t r, std::size_t c, u32 p = kDefaultPrime);

  static FMatrix identity(std::size_t n, u32 p = kDefaultPrime);
  static FMatrix from_rows(const std::vector<std::vector<long long>>& rows, u32 p = kDefaultPrime);
  static FMatrix column(const std::vector<u32>& v, u32 p);
  static FMatrix hcat(const FMatrix& a, const FMatrix& b);
  static FMatrix vcat(const FMatrix& a, const FMatrix& b);
  static FMatrix hcat(const std::vector<FMatrix>& parts, std::size_t rows, u32 p);
  static FMatrix vcat(const std::vector<FMatrix>& parts, std::size_t cols, u32 p);
  static FMatrix direct_sum(const FMatrix& a, const FMatrix& b);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  u32 modulus() const { return p_; }
  bool empty() const { return r_ == 0 || c_ == 0; }

  u32 operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  u32& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  FElem elem(std::size_t i, std::size_t j) const { return FElem((*this)(i, j), p_); }
  const std::vector<u32>& data() const { return a_; }
  const u32* row_ptr(std::size_t i) const { return a_.data() + i * c_; }
  u32* row_ptr(std::size_t i) { return a_.data() + i * c_; }

  FMatrix operator*(const FMatrix& o) const;
  FMatrix operator+(const FMatrix& o) const;
  FMatrix operator-(const FMatrix& o) const;
  FMatrix& operator+=(const FMatrix& o);
  FMatrix scaled(u32 s) const;
  void add_scaled(const FMatrix& o, u32 s);  // this += s*o
  FMatrix transpose() const;
  FMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const FMatrix& b);
  FMatrix col(std::size_t j) const;
  std::vector<u32> col_vec(std::size_t j) const;
  FMatrix select_cols(const std::vector<std::size_t>& idx) const;
  FMatrix select_rows(const std::vector<std::size_t>& idx) const;
  // column-major flattening, used to treat a matrix space as a vector space
  std::vector<u32> vec() const;
  static FMatrix unvec(const std::vector<u32>& v, std::size_t r, std::size_t c, u32 p);

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const FMatrix& o) const;
  bool operator!=(const FMatrix& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  void check_same(const FMatrix& o) const;
  std::size_t r_ = 0, c_ = 0;
  u32 p_ = kDefaultPrime;
  std::vector<u32> a_;
};

struct Rref {
  FMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

Rref rref(const FMatrix& m);
std::size_t rank_of(const FMatrix& m);
std::optional<FMatrix> solve_linear(const FMatrix& a, const FMatrix& b);
FMatrix kernel_basis(const FMatrix& a);
// independent columns of a, chosen greedily left to right
FMatrix column_basis(const FMatrix& a);
std::vector<std::size_t> independent_columns(const FMatrix& a);
std::optional<FMatrix> inverse(const FMatrix& a);
// l with l*w = I for w of full column rank
FMatrix left_inverse(const FMatrix& w);
// unit vectors e_j (j in order) extending span(w) to the whole space
std::vector<std::size_t> complement_units(const FMatrix& w, std::size_t n);
bool in_span(const FMatrix& basis, const FMatrix& v);
FMatrix power(const FMatrix& m, std::size_t e);
bool is_nilpotent(const FMatrix& m);
// coefficients low to high, monic of degree n
std::vector<u32> charpoly(const FMatrix& m);
std::vector<u32> poly_roots(const std::vector<u32>& poly, u32 p);
FMatrix concat_columns(const std::vector<std::vector<u32>>& cols, std::size_t n, u32 p);

}  // namespace arq
