#pragma once

#include <string>
#include <vector>

#include "arq/stabfun.hpp"

namespace arq {

// an object A -> B of the morphism category
struct MorphObj {
  FDModule a, b;
  ModuleMap f;
  FDModule cokernel() const { return arq::cokernel(f).first; }
};

struct MorphMap {
  ModuleMap on_a, on_b;
};

// lower triangular 2x2 matrices over the algebra
AlgPtr t2(const AlgPtr& a);

// vertices 1.v carry B, vertices 2.v carry A, and e21 acts through f
FDModule morph_encode(const AlgPtr& t2alg, const MorphObj& m);
MorphObj morph_decode(const FDModule& m);
MorphMap morph_decode_map(const ModuleMap& g);
ModuleMap morph_encode_map(const FDModule& src, const FDModule& tgt, const MorphMap& m);

Membership all_modules();
Membership add_membership(const AddXContext& ctx);
Membership gprj_membership();

// f mono with A, B and Cok f in X
bool s_membership(const MorphObj& m, const Membership& member);

// Cok of Hom(X, B) -> Hom(X, Cok f), as a stable_aus-module
FDModule psi(const AddXContext& ctx, const MorphObj& m);
ModuleMap psi_map(const AddXContext& ctx, const MorphObj& s, const MorphObj& t, const MorphMap& g);
MorphObj s_of_functor(const AddXContext& ctx, const FDModule& functor);

// (X = X) and (0 -> X)
MorphObj identity_object(const FDModule& x);
MorphObj zero_object(const FDModule& x);
bool is_trivial_object(const MorphObj& m);

// summand names glued as A then B, e.g. "P3P2", "0S2", "P2[P1+S2]"
std::string module_name(const AddXContext& ctx, const FDModule& m);
std::string morph_label(const AddXContext& ctx, const MorphObj& m);

// Ext-injective indecomposables of add X inside the summand pool
std::vector<std::size_t> ext_injective_summands(const AddXContext& ctx);
// minimal left approximation by Ext-injectives; required to be mono
Minimized ext_injective_approximation(const AddXContext& ctx, const FDModule& a);

struct ExtLists {
  std::vector<MorphObj> projectives, injectives;
};
ExtLists ext_projectives_in_S(const AddXContext& ctx);

// almost split sequence of X, as encoded sequences of the submodule category
struct TrivialMeshes {
  SES ending_zero;      // ends at (0 -> C)
  SES ending_identity;  // ends at (C = C)
  SES starting_zero;    // starts at (0 -> A)
};
TrivialMeshes trivial_meshes(const AddXContext& ctx, const AlgPtr& t2alg, const SES& ass);

// almost split sequence of the submodule category ending at s_H, glued by the
// horseshoe lemma from an almost split sequence of stable_aus-modules ending at H
SES lift_ass(const AddXContext& ctx, const AlgPtr& t2alg, const SES& functor_ass);

// Psi applied to an almost split sequence ending at s_H
SES transfer_ass(const AddXContext& ctx, const SES& eps);

enum class Ambient { Modules, Gprj };

struct SXQuiver {
  ARQuiver fast, oracle;
  std::vector<FDModule> oracle_members;  // encoded objects
  std::vector<SES> meshes;               // the sequences wired by the fast path
  std::vector<std::string> differences;
  bool agree() const { return differences.empty(); }
};
// fast: stable quiver relabelled through s_F plus the trivial vertices;
// oracle: category radical inside mod T2
SXQuiver assemble_sx_quiver(const AddXContext& ctx, Ambient ambient, const Budget& budget = {});

}  // namespace arq
