#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "arq/exactla.hpp"

namespace arq {

struct Arrow {
  std::string name;
  std::size_t from = 0, to = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::size_t vertex_index(const std::string& name) const;
  std::size_t arrow_index(const std::string& name) const;
  // number of arrows i -> j
  std::size_t multiplicity(std::size_t i, std::size_t j) const;
};

struct PathTerm {
  long long coeff = 1;
  std::vector<std::size_t> arrows;
};

struct Relation {
  std::string text;
  std::vector<PathTerm> terms;
};

struct AlgebraSpec {
  u32 characteristic = kDefaultPrime;
  Quiver quiver;
  std::vector<Relation> relations;
  std::size_t path_cap = 30;
};

// "a*b - 2*c*d" against the quiver's arrow names
Relation parse_relation(const std::string& text, const Quiver& q);
void validate_spec(const AlgebraSpec& spec);

enum class Provenance { BoundQuiver, Opposite, Endomorphism, Quotient, Triangular, Generic };

class Algebra;
using AlgPtr = std::shared_ptr<const Algebra>;

// Basic split algebras are stored in an idempotent-adapted basis: the first nv
// basis elements are the primitive idempotents, every other basis element lies
// in some e_s A e_t and in the radical.  Non-basic algebras (only produced by
// algebra_from_table) keep their input basis and set adapted = false.
class Algebra {
 public:
  u32 p = kDefaultPrime;
  std::size_t dim = 0;
  std::size_t nv = 0;
  std::vector<std::string> labels;
  std::vector<std::string> vertex_names;
  std::vector<u32> table;  // coordinates of b_i*b_j at (i*dim+j)*dim
  std::vector<std::size_t> src, tgt;
  std::vector<std::size_t> gens;  // radical basis indices spanning rad/rad^2
  bool adapted = true;
  std::vector<std::vector<u32>> generic_idempotents;  // when !adapted
  FMatrix generic_radical;                            // when !adapted

  Provenance prov = Provenance::Generic;
  std::optional<AlgebraSpec> spec;
  std::vector<std::vector<std::size_t>> basis_paths;  // bound quiver: arrows of each basis path
  AlgPtr base;                   // quotient parent, triangular base
  std::weak_ptr<const Algebra> opposite_of;
  FMatrix ideal;                 // quotient: ideal basis in parent coordinates
  FMatrix to_quotient;           // quotient: dim x parent.dim
  FMatrix from_quotient;         // quotient: parent.dim x dim
  std::vector<std::size_t> parent_vertex;
  std::vector<std::size_t> tri_index;  // triangular: basis index of (component c, base element b) at c*base.dim+b

  u32 c(std::size_t i, std::size_t j, std::size_t k) const { return table[(i * dim + j) * dim + k]; }
  std::vector<u32> product(const std::vector<u32>& x, const std::vector<u32>& y) const;
  std::vector<u32> basis_vec(std::size_t i) const;
  std::vector<u32> unit() const;
  FMatrix right_mult(const std::vector<u32>& y) const;  // x -> x*y
  FMatrix left_mult(const std::vector<u32>& y) const;   // x -> y*x
  std::vector<std::size_t> block_basis(std::size_t s, std::size_t t) const;
  std::vector<std::size_t> radical_indices() const;
  std::string describe() const;

  mutable std::mutex cache_mutex;
  mutable std::shared_ptr<const Algebra> opposite_cache;
};

bool same_algebra(const Algebra& a, const Algebra& b);
inline bool same_algebra(const AlgPtr& a, const AlgPtr& b) { return a == b || same_algebra(*a, *b); }

AlgPtr build_algebra(const AlgebraSpec& spec);
AlgPtr opposite(const AlgPtr& a);
AlgPtr triangular(const AlgPtr& a);
AlgPtr quotient_algebra(const AlgPtr& a, const FMatrix& ideal_basis);
// generic algebra from structure constants; adapts the basis when basic and split
AlgPtr algebra_from_table(u32 p, std::size_t dim, std::vector<u32> table, std::vector<std::string> labels);
// adapted algebra from a block-adapted basis whose idempotents are at idem_index
AlgPtr adapted_algebra(u32 p, std::size_t dim, const std::vector<u32>& table, const std::vector<std::string>& labels,
                       const std::vector<std::size_t>& idem_index, const std::vector<std::size_t>& src,
                       const std::vector<std::size_t>& tgt, std::vector<std::string> vertex_names, Provenance prov);

FMatrix jacobson_radical(const AlgPtr& a);
std::vector<std::vector<u32>> primitive_idempotents(const AlgPtr& a);
Quiver gabriel_quiver(const AlgPtr& a);
bool check_associative(const Algebra& a);
// smallest n with rad^n = 0
std::size_t loewy_length(const AlgPtr& a);
// every indecomposable projective is injective (defined with the module code)
bool is_self_injective(const AlgPtr& a);

}  // namespace arq
