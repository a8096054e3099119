#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arq/algebra.hpp"

namespace arq {

struct ModuleData {
  AlgPtr alg;
  std::size_t dim = 0;
  std::vector<std::size_t> vdim, voff;
  std::vector<FMatrix> act;  // one per algebra basis element
};

// Right module in a vertex-adapted basis: coordinates are grouped by the
// idempotent that fixes them.  Copies share the action data.
class FDModule {
 public:
  FDModule() = default;
  static FDModule from_data(AlgPtr alg, std::vector<std::size_t> vdim, std::vector<FMatrix> act, std::string label = {});

  bool valid() const { return d_ != nullptr; }
  const AlgPtr& algebra() const { return d_->alg; }
  std::size_t dim() const { return d_->dim; }
  std::size_t nv() const { return d_->vdim.size(); }
  u32 p() const { return d_->alg->p; }
  const std::vector<std::size_t>& dimvec() const { return d_->vdim; }
  std::size_t offset(std::size_t v) const { return d_->voff[v]; }
  std::size_t vertex_of(std::size_t coord) const;
  const FMatrix& action(std::size_t b) const { return d_->act[b]; }
  const std::string& label() const { return label_; }
  FDModule with_label(std::string l) const;
  bool is_zero() const { return d_->dim == 0; }
  bool same_data(const FDModule& o) const { return d_ == o.d_; }

 private:
  std::shared_ptr<const ModuleData> d_;
  std::string label_;
};

struct ModuleMap {
  FDModule src, tgt;
  FMatrix mat;  // tgt.dim x src.dim

  ModuleMap operator*(const ModuleMap& o) const;  // this after o
  ModuleMap operator+(const ModuleMap& o) const;
  ModuleMap operator-(const ModuleMap& o) const;
  ModuleMap scaled(u32 s) const;
  std::size_t rank() const { return rank_of(mat); }
  bool injective() const { return rank() == src.dim(); }
  bool surjective() const { return rank() == tgt.dim(); }
  bool is_zero() const { return mat.is_zero(); }
  static ModuleMap zero(const FDModule& s, const FDModule& t);
  static ModuleMap identity(const FDModule& m);
};

struct SES {
  FDModule left, mid, right;
  ModuleMap inj, surj;
};

struct DirectSum {
  FDModule sum;
  std::vector<ModuleMap> incl, proj;
};

struct Summand {
  FDModule mod;
  ModuleMap incl, proj;
};

struct Grouped {
  FDModule mod;
  std::size_t mult = 0;
};

// direct sum of indecomposable projectives P(v) with recorded generators
struct ProjSum {
  AlgPtr alg;
  FDModule mod;
  std::vector<std::size_t> verts;
  DirectSum parts;
  std::vector<std::size_t> gen_coord;  // coordinate of e_v of each summand
  std::vector<std::vector<std::size_t>> coord;  // coord[k][l]: l-th basis path of summand k
};

struct Cover {
  ProjSum proj;
  ModuleMap map;
};

struct HomSpace {
  FDModule src, tgt;
  std::vector<ModuleMap> basis;
  FMatrix compact;   // columns: basis in compact (per-vertex block) coordinates
  FMatrix coord_inv; // left inverse of compact
  std::size_t size() const { return basis.size(); }
  FMatrix coords(const FMatrix& m) const;  // coefficient column of a map
  ModuleMap combine(const std::vector<u32>& c) const;
  ModuleMap combine(const FMatrix& c) const;
};

struct StableHom {
  HomSpace hom;
  FMatrix proj_span;                    // P(m,n) in hom coordinates (columns)
  std::vector<std::size_t> complement;  // hom basis indices spanning a complement
  FMatrix to_stable;                    // stable coordinates of hom coordinates
  std::size_t size() const { return complement.size(); }
};

struct ExtGroup {
  FDModule m, n;  // Ext^1(m, n) with m already the (i-1)th syzygy
  Cover cover;
  FDModule omega;
  ModuleMap omega_incl;
  HomSpace hom_omega;              // Hom(Omega m, n)
  FMatrix boundary;                // image of Hom(P0,n) in hom_omega coordinates
  std::vector<std::size_t> classes;  // hom_omega basis indices of a complement
  std::size_t dim() const { return classes.size(); }
  ModuleMap class_map(std::size_t k) const { return hom_omega.basis[classes[k]]; }
  // coordinates of a class representative modulo the boundary
  FMatrix class_coords(const ModuleMap& rep) const;
};

struct Resolution {
  std::vector<ProjSum> terms;     // P_0, P_1, ...
  ModuleMap augmentation;         // P_0 -> M
  std::vector<ModuleMap> diffs;   // diffs[k]: P_{k+1} -> P_k
};

struct Minimized {
  FDModule obj;        // the new approximating object
  ModuleMap map;       // minimal approximation
  ModuleMap incl;      // obj -> old object
  ModuleMap proj;      // old object -> obj, with proj * incl = id
};

// construction
FDModule make_module(const AlgPtr& alg, std::vector<FMatrix> act, std::string label = {}, bool check = true);
FDModule representation(const AlgPtr& alg, const std::vector<std::size_t>& vdims, const std::vector<FMatrix>& arrow_maps,
                        std::string label = {});
FDModule zero_module(const AlgPtr& alg);
FDModule regular_module(const AlgPtr& alg);
FDModule projective_module(const AlgPtr& alg, std::size_t v);
FDModule injective_module(const AlgPtr& alg, std::size_t v);
FDModule simple_module(const AlgPtr& alg, std::size_t v);
std::vector<FDModule> projective_indecomposables(const AlgPtr& alg);
std::vector<FDModule> injective_indecomposables(const AlgPtr& alg);
std::vector<FDModule> simple_modules(const AlgPtr& alg);
// algebra basis indices spanning P(v), in module coordinate order
std::vector<std::size_t> projective_basis(const AlgPtr& alg, std::size_t v);

bool is_homomorphism(const FDModule& s, const FDModule& t, const FMatrix& m);
ModuleMap module_map(const FDModule& s, const FDModule& t, FMatrix m, bool check = true);
DirectSum direct_sum(const std::vector<FDModule>& parts);
FDModule direct_sum_module(const std::vector<FDModule>& parts);
// block map between direct sums from component maps blocks[i][j]: part j -> part i
ModuleMap block_map(const DirectSum& s, const DirectSum& t, const std::vector<std::vector<ModuleMap>>& blocks);
std::pair<FDModule, ModuleMap> submodule(const FDModule& m, const FMatrix& span);
std::pair<FDModule, ModuleMap> quotient(const FDModule& m, const FMatrix& span);
std::pair<FDModule, ModuleMap> kernel(const ModuleMap& f);
std::pair<FDModule, ModuleMap> image(const ModuleMap& f);
std::pair<FDModule, ModuleMap> cokernel(const ModuleMap& f);
FMatrix radical_span(const FDModule& m);
FMatrix socle_span(const FDModule& m);
// f with f = incl * factor; precondition: image(f) inside image(incl)
FMatrix factor_through_mono(const ModuleMap& incl, const FMatrix& f);
FMatrix right_inverse(const FMatrix& q);

// Hom spaces
HomSpace hom_space(const FDModule& m, const FDModule& n);
std::vector<ModuleMap> hom_basis(const FDModule& m, const FDModule& n);
std::size_t hom_dim(const FDModule& m, const FDModule& n);
StableHom stable_hom_basis(const FDModule& m, const FDModule& n);
std::size_t stable_hom_dim(const FDModule& m, const FDModule& n);

// projectives, covers, syzygies
ProjSum projective_sum(const AlgPtr& alg, const std::vector<std::size_t>& verts);
ModuleMap map_from_generators(const ProjSum& p, const FDModule& target, const std::vector<FMatrix>& images);
// algebra element sitting in summand i of q at the image of generator j of p
std::vector<std::vector<std::vector<u32>>> element_matrix(const ProjSum& p, const ProjSum& q, const ModuleMap& f);
ModuleMap map_from_elements(const ProjSum& p, const ProjSum& q, const std::vector<std::vector<std::vector<u32>>>& x);
// lift f: P -> N through a surjection-onto-image s: M -> N (generator-wise)
ModuleMap lift_through(const ProjSum& p, const ModuleMap& f, const ModuleMap& s);
Cover projective_cover(const FDModule& m);
Resolution projective_resolution(const FDModule& m, std::size_t len);
FDModule syzygy(const FDModule& m, std::size_t n = 1);
std::pair<FDModule, ModuleMap> syzygy_inclusion(const FDModule& m);
Minimized left_projective_approximation(const FDModule& m);
FDModule projective_cosyzygy(const FDModule& m, std::size_t n = 1);
bool is_projective(const FDModule& m);
bool is_injective(const FDModule& m);
std::size_t projective_dimension(const FDModule& m, std::size_t cap);

// duality
FDModule dual(const FDModule& m);
ModuleMap dual_map(const ModuleMap& f);
FDModule transpose(const FDModule& m);
FDModule tau(const FDModule& m);
FDModule tau_inverse(const FDModule& m);

// Ext
ExtGroup ext_group(const FDModule& m, const FDModule& n, std::size_t i = 1);
SES extension_to_ses(const ExtGroup& e, const ModuleMap& cls);
bool ses_is_exact(const SES& s);
bool ses_splits(const SES& s);

// decomposition and isomorphism
std::vector<Summand> decompose(const FDModule& m);
std::vector<Grouped> decompose_grouped(const FDModule& m);
bool is_local(const FDModule& m);
std::optional<ModuleMap> find_isomorphism(const FDModule& m, const FDModule& n);
bool is_isomorphic(const FDModule& m, const FDModule& n);
// trace-zero part of End(m) for local m, as hom_space coordinates
FMatrix radical_of_local_end(const HomSpace& end);

// minimal approximations by stripping summands
Minimized right_minimize(const ModuleMap& g);
Minimized left_minimize(const ModuleMap& f);

}  // namespace arq
