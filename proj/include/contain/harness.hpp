#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "contain/io.hpp"

namespace contain {

// How a row's computed value is compared with its reference.
enum class Check {
  kEqual,    // |computed - reference| <= eq
  kAtMost,   // computed <= reference + eq
  kAtLeast,  // computed >= reference - eq
  kAbove,    // computed > reference + eq
};

const char* to_string(Check check);

struct ReportRow {
  std::string instance;
  std::string param;
  double computed = 0.0;
  double reference = 0.0;
  Check check = Check::kEqual;
  // Absolute deviation for kEqual, amount of violation otherwise.
  double deviation = 0.0;
  bool pass = false;
  // Set when the row could not be evaluated (for instance budget exceeded).
  std::string error;
};

struct ExperimentReport {
  std::string id;
  std::vector<ReportRow> rows;
  double runtime_seconds = 0.0;

  bool passed() const;
};

struct HarnessOptions {
  Tolerance tol;
  std::uint64_t seed = 1;
  // Largest dimension for checks that enumerate subsets.
  int enum_max_dim = 7;
  // Largest dimension for checks that only solve LPs.
  int lp_max_dim = 12;
  // Random instances per randomized experiment.
  int random_instances = 100;
  // 0 picks std::thread::hardware_concurrency().
  int threads = 0;
};

const std::vector<std::string>& experiment_ids();

// Throws Error(kInvalidArgument) for an unknown id.
ExperimentReport run_experiment(const std::string& id, const HarnessOptions& opts = {});

// Runs experiments concurrently; reports come back in catalog order.
std::vector<ExperimentReport> run_all(const HarnessOptions& opts = {});

ReportRow make_row(std::string instance, std::string param, double computed,
                   double reference, Check check, double eq);

// CSV with header experiment,instance,param,computed,reference,deviation,pass.
std::string to_csv(const std::vector<ExperimentReport>& reports);
Json to_json(const ExperimentReport& report);

// Euclidean distance from q to conv(columns of v): Frank-Wolfe with away steps
// over the barycentric weights, stopped once the duality gap drops below
// gap_tol.
double distance_to_hull(const Eigen::VectorXd& q, const Eigen::MatrixXd& v,
                        double gap_tol = 1e-14, int max_iter = 200000);

}  // namespace contain
