#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arq/gorenstein.hpp"

namespace arq {

// One hom block Hom(X_j, X_i) of the endomorphism algebra, i = codomain.
struct EndBlock {
  HomSpace hom;
  FMatrix to_block;                // block coordinates of hom coordinates
  std::vector<ModuleMap> maps;     // block basis (identity first on the diagonal)
  std::vector<std::size_t> index;  // algebra basis index of each block basis map
};

// add X for a finite set of indecomposable summands.  The endomorphism
// algebra multiplies by composition; a basis map X_j -> X_i starts at vertex i
// and ends at vertex j, so right modules are contravariant functors on add X.
struct AddXContext {
  AlgPtr lam;
  std::vector<FDModule> summands;
  std::vector<std::string> names;
  AlgPtr aus;
  AlgPtr stable_aus;
  std::vector<std::vector<EndBlock>> blocks;  // blocks[i][j]
  std::vector<std::size_t> basis_row, basis_col;  // block of each aus basis element
  std::vector<std::size_t> basis_pos;             // position within its block
  FMatrix ideal;                                  // projective-factoring maps, aus coordinates
  std::vector<std::size_t> stable_vertex;         // summand -> stable vertex, or npos
  std::vector<std::size_t> stable_summand;        // stable vertex -> summand
  bool syzygy_closed = false;                     // syzygies of summands stay in add X

  std::size_t size() const { return summands.size(); }
  bool projective_summand(std::size_t i) const { return stable_vertex[i] == npos; }
  // Lambda-map of an aus element
  ModuleMap element_map(std::size_t row, std::size_t col, const std::vector<u32>& x) const;
  // aus coordinates of a map X_col -> X_row
  std::vector<u32> element_of(std::size_t row, std::size_t col, const ModuleMap& f) const;
  std::optional<std::size_t> summand_index(const FDModule& m) const;

  static constexpr std::size_t npos = std::size_t(-1);
};

AddXContext build_context(const std::vector<FDModule>& summands, std::vector<std::string> names = {});
// context of all indecomposables (or of the Gprj ones) of a representation-finite algebra
AddXContext module_context(const AlgPtr& lam, const Budget& budget = {});
AddXContext gprj_context(const AlgPtr& lam, const Budget& budget = {});

// aus-modules annihilated by the ideal <-> stable_aus-modules
FDModule deflate(const AddXContext& ctx, const FDModule& aus_module);
FDModule inflate(const AddXContext& ctx, const FDModule& stable_module);
ModuleMap deflate_map(const AddXContext& ctx, const ModuleMap& f);

// an object of add X written as an explicit sum of context summands
struct AddModule {
  FDModule mod;
  std::vector<std::size_t> idx;
  std::vector<ModuleMap> incl;  // X_idx[k] -> mod
  std::vector<ModuleMap> proj;  // mod -> X_idx[k]
};

AddModule to_add(const AddXContext& ctx, const FDModule& m);
AddModule add_sum(const AddXContext& ctx, const std::vector<AddModule>& parts);
// the sum of context summands indexed by idx
AddModule add_object(const AddXContext& ctx, const std::vector<std::size_t>& idx);

// Hom(X, -) on maps of add X, as maps between projective aus-modules
struct YonedaMap {
  ProjSum src, tgt;
  ModuleMap map;
};
YonedaMap yoneda_map(const AddXContext& ctx, const AddModule& s, const AddModule& t, const ModuleMap& f);
ModuleMap yoneda_unmap(const AddXContext& ctx, const AddModule& s, const AddModule& t, const ProjSum& ps,
                       const ProjSum& pt, const ModuleMap& g);

// 0 -> (-,A) -> (-,B) -> (-,C) -> F -> 0
struct ResolutionTriple {
  AddModule a, b, c;
  ModuleMap f, g;  // f: A -> B, g: B -> C
};

ResolutionTriple minimal_resolution_triple(const AddXContext& ctx, const FDModule& functor);
// the stable_aus-module presented by a triple
FDModule presented_functor(const AddXContext& ctx, const ResolutionTriple& t);
// (Omega C, A + P_C, B) presenting the first syzygy
ResolutionTriple functor_syzygy_step(const AddXContext& ctx, const ResolutionTriple& t);

struct SyzygyTriple {
  ResolutionTriple triple;
  std::vector<std::size_t> pad_middle, pad_right;  // projective summands of the middle and right terms
};
// n steps; the non-projective parts of the terms are checked against the
// rotation (A,B,C) -> (Omega C, A, B) with syzygies every three steps
SyzygyTriple functor_syzygy_n(const AddXContext& ctx, const ResolutionTriple& t, std::size_t n);

// m ~ n after dropping projective summands on both sides
bool stably_isomorphic(const FDModule& m, const FDModule& n);

struct FunctorGprj {
  GprjReport by_resolution;  // all three terms of the resolution triple
  GprjReport direct;         // Ext vanishing over stable_aus
  bool agree() const { return by_resolution.verdict == direct.verdict; }
};
FunctorGprj is_gprj_functor(const AddXContext& ctx, const FDModule& functor);

// the representable (-, X_i) and simple functors over stable_aus
FDModule representable_functor(const AddXContext& ctx, std::size_t summand);
FDModule simple_functor(const AddXContext& ctx, std::size_t summand);
// "(-,X)" / "S_X" from summand names, otherwise the dimension vector
std::string functor_label(const AddXContext& ctx, const FDModule& functor);

// Y-summands as X-summands, up to chosen isomorphisms
struct ContextEmbedding {
  std::vector<std::size_t> index;
  std::vector<ModuleMap> iso, iso_inv;  // Y_k -> X_index[k] and back
};
ContextEmbedding embed_context(const AddXContext& y, const AddXContext& x);

// the extension functor from stable_aus(Y)-modules to stable_aus(X)-modules
struct Upsilon {
  const AddXContext* x = nullptr;
  const AddXContext* y = nullptr;
  ContextEmbedding emb;
  FDModule apply(const FDModule& f) const;
  ModuleMap apply(const ModuleMap& s) const;
};
Upsilon make_upsilon(const AddXContext& x, const AddXContext& y);
FDModule upsilon(const AddXContext& x, const AddXContext& y, const FDModule& f);

struct FunctorQuiver {
  ARQuiver fast, oracle;
  std::vector<FDModule> fast_members, oracle_members;
  std::vector<std::string> differences;
  bool agree() const { return differences.empty(); }
};
// AR quiver of the Gprj functors over stable_aus(X) with Y = X meet Gprj
FunctorQuiver gprj_functor_quiver(const AddXContext& x, const AddXContext& y, const Budget& budget = {});
// renames nodes hit by the extension of a non-representable Y-functor F to "Y(F)"
void label_by_extension(FunctorQuiver& q, const AddXContext& x, const AddXContext& y);

}  // namespace arq
