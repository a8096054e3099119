#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arq/fdmod.hpp"

namespace arq {

struct Budget {
  std::size_t max_count = 400;
  std::size_t max_dim = 120;
};

struct NodeFlags {
  bool projective = false;
  bool injective = false;
  bool ext_projective = false;
  bool ext_injective = false;
  bool gprj = false;
};

struct ARNode {
  std::size_t id = 0;
  std::string label;
  std::vector<std::size_t> dimvec;
  NodeFlags flags;
};

struct ARArrow {
  std::size_t from = 0, to = 0;
  std::size_t a = 1, b = 1;
};

// dashed link from a node C to its translate tau C
struct TauLink {
  std::size_t from = 0, to = 0;
};

struct ARQuiver {
  std::vector<ARNode> nodes;
  std::vector<ARArrow> arrows;
  std::vector<TauLink> tau;

  std::optional<std::size_t> find(const std::string& label) const;
  std::size_t multiplicity(std::size_t from, std::size_t to) const;
  std::optional<std::size_t> tau_of(std::size_t c) const;
};

// pairwise non-isomorphic indecomposables
struct IndecUniverse {
  AlgPtr alg;
  std::vector<FDModule> modules;
  bool closed = false;
  std::string note;

  std::optional<std::size_t> index_of(const FDModule& m) const;
  // index of m, appending it when new
  std::size_t insert(const FDModule& m);
  std::size_t size() const { return modules.size(); }
};

// drops projective (forward) or injective (inverse) summands first
FDModule tau_translate(const FDModule& m, bool forward = true);

SES almost_split_sequence(const FDModule& c);
// almost split sequence starting at a non-injective indecomposable
SES almost_split_sequence_from(const FDModule& a);

IndecUniverse all_indecomposables(const AlgPtr& alg, const Budget& budget = {});

// standard names P/I/S + vertex when they apply, otherwise the dimension vector
std::string default_label(const FDModule& m);
std::string dimvec_string(const std::vector<std::size_t>& d);

struct ARData {
  IndecUniverse universe;
  std::vector<std::optional<SES>> ass;  // almost split sequence ending at each node
  ARQuiver quiver;
};

ARData ar_data(const AlgPtr& alg, const Budget& budget = {});
ARQuiver ar_quiver(const AlgPtr& alg, const Budget& budget = {});
// quiver of a given closed universe, via almost split sequences
ARData ar_data_of(IndecUniverse u);

using Membership = std::function<bool(const FDModule&)>;

// Auslander-Reiten structure of a full extension-closed subcategory from its
// finitely many indecomposables, by the radical of the category
struct SubcategoryAR {
  std::vector<FDModule> members;
  ARQuiver quiver;
  std::vector<std::optional<SES>> sink_ses;  // relative almost split sequence ending at each member
  std::vector<ModuleMap> sink, source;        // minimal right/left almost split maps
};

SubcategoryAR subcategory_ar(const std::vector<FDModule>& members, const std::vector<std::string>& labels = {});
ARQuiver subcategory_ar_quiver(const IndecUniverse& universe, const Membership& member);

// brute-force check of the almost split property against a universe
bool verify_almost_split(const SES& seq, const std::vector<FDModule>& universe);
bool verify_almost_split(const SES& seq, const IndecUniverse& universe);

// tau C + C = sum over arrows into C, at every node with a tau link
std::vector<std::string> mesh_violations(const ARQuiver& q);

// node-by-node and arrow-by-arrow comparison keyed by label; empty when equal
std::vector<std::string> quiver_differences(const ARQuiver& x, const ARQuiver& y);

// multiplicity of each universe member in the decomposition of m; fails when
// a summand is outside the universe
std::vector<std::size_t> multiplicities(const FDModule& m, const std::vector<FDModule>& universe);

}  // namespace arq
