#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arq/artheory.hpp"

namespace arq {

enum class Verdict { Gprj, NotGprj, Inconclusive };

struct GprjReport {
  Verdict verdict = Verdict::Inconclusive;
  std::size_t checked_depth = 0;
  bool exact = false;  // depth covers an established self-injective dimension
  std::optional<std::size_t> witness_index;
  std::string witness;  // e.g. "Ext^2(M, A)" or "Ext^1(Tr M, A^op)"
  bool gprj() const { return verdict == Verdict::Gprj; }
};

const char* verdict_name(Verdict v);

std::size_t default_gprj_depth();

// injective dimension of the regular module, the larger of both sides
std::optional<std::size_t> selfinjective_dimension(const AlgPtr& a, std::size_t cap = 12);
std::size_t injective_dimension(const FDModule& m, std::size_t cap);

// Ext^i(M, A) = 0 and Ext^i(Tr M, A^op) = 0 for 1 <= i <= depth.  When
// known_dim is given and at most depth, the verdict is exact.
GprjReport is_gorenstein_projective(const FDModule& m, std::size_t depth,
                                    std::optional<std::size_t> known_dim = std::nullopt);
// depth = established self-injective dimension, else the fallback
GprjReport gprj_report(const FDModule& m);

struct GprjList {
  std::vector<FDModule> modules;
  std::vector<FDModule> inconclusive;
  std::optional<std::size_t> selfinj_dim;
};

GprjList gprj_indecomposables(const AlgPtr& a, const Budget& budget = {});
GprjList gprj_filter(const IndecUniverse& u);

// minimal right Gprj-approximation G -> M over an algebra of self-injective
// dimension d, glued from the d-th syzygy and its projective cosyzygies
Minimized gprj_right_approximation(const FDModule& m, std::size_t d);

// indecomposable Gprj modules found by relative knitting from the
// projectives: sink maps in Gprj are obtained from almost split sequences of
// the ambient category through Gprj-approximations; works when the ambient
// module category is not of finite type
struct GprjKnit {
  std::vector<FDModule> modules;
  std::size_t selfinj_dim = 0;
  bool closed = false;
};
GprjKnit knit_gprj(const AlgPtr& a, const Budget& budget = {});

}  // namespace arq
