#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swarmselect/dataset.hpp"
#include "swarmselect/metrics.hpp"
#include "swarmselect/objective.hpp"
#include "swarmselect/optimize.hpp"

namespace swarmselect {

/// Everything one experiment needs; each field is a CLI flag and a config
/// key.
struct ExperimentConfig {
    std::string dataset_path;
    std::string label_column = "label";
    std::string algo = "hhossa";  // hho | ssa | hhossa
    std::uint64_t seed = 0;
    int iterations = 100;      // HHO / hybrid outer iterations
    int ssa_iterations = 20;   // SSA iterations (standalone and hybrid inner)
    int population = 30;
    int k = 5;
    double train_fraction = 0.8;
    double fitness_a = 0.9;
    double fitness_b = 0.1;
    double binarize_threshold = 0.5;
    double lb = 0.0;
    double ub = 1.0;
    double beta = 1.5;
    int repeat = 1;
    std::string output_dir = "results";

    void validate() const;
};

/// One optimizer run plus its final held-out evaluation.
struct RunResult {
    std::string algo;
    std::uint64_t seed = 0;
    Eigen::Index n_features = 0;
    FeatureMask best_mask;
    double best_fitness = 0.0;
    double fitness_class_err = 0.0;  // validation error behind best_fitness; NaN if mask empty
    Eigen::Index n_selected = 0;
    std::vector<double> trace;
    long n_evaluations = 0;
    long n_ssa_acceptances = 0;
    MetricsReport test_metrics;
    std::vector<std::string> label_names;
    double wall_time_seconds = 0.0;
    double optimize_seconds = 0.0;
    double classify_test_seconds = 0.0;  // mean of repeated passes over the test set
};

/// Pipeline for one seed: scale -> stratified 80/20 split -> inner fitness
/// split of the training portion -> optimizer -> KNN fitted on the full
/// training portion projected to the best mask, evaluated on the test
/// portion.
RunResult run_single(const ExperimentConfig& cfg, const TabularDataset& raw, std::uint64_t seed);

/// Run cfg.repeat seeds (cfg.seed, cfg.seed+1, ...) over a dataset loaded
/// from cfg.dataset_path. Worker count follows SWARMSELECT_THREADS.
std::vector<RunResult> run_experiment(const ExperimentConfig& cfg);

/// As above but over an already-loaded dataset (tests, synthetic runs).
std::vector<RunResult> run_experiment_on(const ExperimentConfig& cfg, const TabularDataset& raw);

// --- serialization -----------------------------------------------------------

/// Versioned JSON document for one run. Deterministic for a fixed seed and
/// config except for the "timing" object.
std::string result_to_json(const RunResult& r, const ExperimentConfig& cfg,
                           bool include_timing = true);

/// Metrics table mirroring the paper's row layout: accuracy as a full-
/// precision percentage, the other ratios with two decimals. Appends a
/// median summary row when more than one result is given.
std::string metrics_csv(const std::vector<RunResult>& results);

/// Timing table: per-algorithm optimization seconds and test-set
/// classification seconds. When all of hhossa, hho, and ssa are present a
/// comparison row checks hhossa against hho + ssa (hardware-dependent,
/// informational).
std::string timing_csv(const std::vector<RunResult>& results);

/// Per-iteration best-fitness trace as CSV.
std::string trace_csv(const RunResult& r);

/// Write result JSONs, metrics.csv, timing.csv, and per-run trace CSVs into
/// cfg.output_dir. Returns the list of files written.
std::vector<std::string> write_outputs(const std::vector<RunResult>& results,
                                       const ExperimentConfig& cfg);

/// Median with the usual even-count average.
double median(std::vector<double> values);

}  // namespace swarmselect
