#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "arq/morphcat.hpp"

namespace arq::suites {

enum class Status { Pass, Fail, Skip };

struct Check {
  std::string suite, name;
  Status status = Status::Pass;
  std::string detail;
  double seconds = 0;
};

struct Options {
  std::uint64_t seed = 1;
  Budget budget;
  std::size_t syzygy_steps = 6;
  std::size_t sample_pairs = 120;  // random module pairs per pairwise check
  // the module-ambient oracle enumerates all of mod T2; kept small so wild cases bail out quickly
  Budget oracle_budget{120, 40};
};

struct Report {
  std::vector<Check> checks;
  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
  // runs fn; an empty string passes, Budget/Unsupported/Inconclusive errors skip
  void run(const std::string& suite, const std::string& name, const std::function<std::string()>& fn);
};

std::string format(const Check& c, bool with_time = true);

void exactla_suite(Report& r, u32 p, const Options& opt);
void algebra_suite(Report& r, const AlgPtr& lam, const AlgebraSpec* spec, const Options& opt);
void fdmod_suite(Report& r, const AlgPtr& lam, const std::vector<FDModule>& modules, const Options& opt);
void artheory_suite(Report& r, const AlgPtr& lam, const Options& opt);
void gorenstein_suite(Report& r, const AlgPtr& lam, const Options& opt);
// x: a context closed under syzygies; y: optional Gprj context inside x
void stabfun_suite(Report& r, const AddXContext& x, const AddXContext* y, const Options& opt);
void morphcat_suite(Report& r, const AddXContext& ctx, Ambient ambient, const Options& opt);

// every suite on one algebra; contexts that do not exist within the budget are skipped
Report run_all(const AlgebraSpec& spec, const Options& opt);

}  // namespace arq::suites
