#include "swarmselect/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "swarmselect/errors.hpp"
#include "swarmselect/hho.hpp"
#include "swarmselect/hhossa.hpp"
#include "swarmselect/knn.hpp"
#include "swarmselect/ssa.hpp"

namespace swarmselect {

namespace {

using json = nlohmann::ordered_json;
using clock_type = std::chrono::steady_clock;

constexpr double kInnerTrainFraction = 0.8;  // fitness-validation split of the training portion
constexpr int kClassifyTimingPasses = 100;   // single passes are sub-microsecond at desk scale

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

std::vector<std::string> parse_algos(const std::string& algo) {
    std::vector<std::string> out;
    std::stringstream ss(algo);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item != "hho" && item != "ssa" && item != "hhossa")
            throw ConfigError("unknown algorithm '" + item + "' (expected hho, ssa, or hhossa)");
        out.push_back(item);
    }
    if (out.empty()) throw ConfigError("no algorithm given");
    return out;
}

OptResult dispatch_optimizer(const std::string& algo, const ExperimentConfig& cfg,
                             Eigen::Index dim, const FitnessFn& fn, RandomSource& rng) {
    if (algo == "hho") {
        HhoConfig c{cfg.population, cfg.iterations, dim, cfg.lb, cfg.ub, cfg.beta};
        return hho_run(c, fn, rng);
    }
    if (algo == "ssa") {
        SsaConfig c{cfg.population, cfg.ssa_iterations, dim, cfg.lb, cfg.ub};
        return ssa_run(c, fn, rng);
    }
    HybridConfig c{cfg.population, cfg.iterations, cfg.ssa_iterations,
                   dim,            cfg.lb,         cfg.ub,
                   cfg.beta};
    return hhossa_run(c, fn, rng);
}

std::size_t worker_count(std::size_t jobs) {
    std::size_t hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    std::size_t workers = std::min(jobs, hw);
    if (const char* env = std::getenv("SWARMSELECT_THREADS")) {
        std::size_t cap = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), cap);
        if (ec == std::errc() && ptr == env + std::strlen(env) && cap >= 1)
            workers = std::min(workers, cap);
    }
    return std::max<std::size_t>(workers, 1);
}

std::string two_decimals(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string shortest(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

json metrics_to_json(const MetricsReport& m) {
    json j;
    j["accuracy"] = m.accuracy;
    j["precision"] = m.precision;
    j["recall"] = m.recall;
    j["specificity"] = m.specificity;
    j["f1"] = m.f1;
    j["degenerate"] = m.degenerate;
    return j;
}

}  // namespace

void ExperimentConfig::validate() const {
    parse_algos(algo);
    if (iterations < 0) throw ConfigError("iterations must be >= 0");
    if (ssa_iterations < 0) throw ConfigError("ssa-iterations must be >= 0");
    if (population < 1) throw ConfigError("population must be >= 1");
    if (k < 1) throw ConfigError("k must be >= 1");
    if (k % 2 == 0) throw ConfigError("k must be odd (binary vote ties)");
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw ConfigError("train-fraction must be in (0, 1)");
    if (!(fitness_a > 0.0 && fitness_a <= 1.0)) throw ConfigError("fitness.a must be in (0, 1]");
    if (!(fitness_b >= 0.0)) throw ConfigError("fitness.b must be >= 0");
    if (!(binarize_threshold > 0.0 && binarize_threshold < 1.0))
        throw ConfigError("binarize.threshold must be in (0, 1)");
    if (!(lb < ub)) throw ConfigError("bounds must satisfy lb < ub");
    if (!(beta > 0.0 && beta <= 2.0)) throw ConfigError("beta must be in (0, 2]");
    if (repeat < 1) throw ConfigError("repeat must be >= 1");
}

RunResult run_single(const ExperimentConfig& cfg, const TabularDataset& raw, std::uint64_t seed) {
    const auto wall_start = clock_type::now();
    RandomSource rng(seed);

    auto [scaled, scaler] = minmax_scale(raw);
    const SplitPair outer = stratified_split(scaled, cfg.train_fraction, rng);
    const SplitPair inner = stratified_split(outer.train, kInnerTrainFraction, rng);
    const WrapperObjective objective(inner.train, inner.test, cfg.k, cfg.fitness_a, cfg.fitness_b,
                                     cfg.binarize_threshold);
    const FitnessFn fn = [&objective](const Eigen::VectorXd& p) { return objective(p); };

    const auto opt_start = clock_type::now();
    const OptResult opt = dispatch_optimizer(cfg.algo, cfg, scaled.n_features(), fn, rng);
    const double optimize_seconds = seconds_since(opt_start);

    RunResult r;
    r.algo = cfg.algo;
    r.seed = seed;
    r.n_features = scaled.n_features();
    r.best_fitness = opt.best_fitness;
    r.trace = opt.trace;
    r.n_evaluations = opt.n_evaluations;
    r.n_ssa_acceptances = static_cast<long>(opt.acceptances.size());
    r.label_names = scaled.label_names;
    r.optimize_seconds = optimize_seconds;

    const FitnessReport best = objective.report(opt.best_position);
    r.best_mask = best.mask;
    r.n_selected = best.n_selected;
    r.fitness_class_err = best.class_err;

    if (best.mask.any()) {
        // final verdict: KNN on the full training portion, scored on held-out test
        const KnnModel model(project(outer.train, best.mask), cfg.k);
        const TabularDataset test_proj = project(outer.test, best.mask);
        Eigen::VectorXi predicted;
        const auto classify_start = clock_type::now();
        for (int pass = 0; pass < kClassifyTimingPasses; ++pass)
            predicted = model.predict_all(test_proj);
        r.classify_test_seconds = seconds_since(classify_start) / kClassifyTimingPasses;
        r.test_metrics = metrics_report(confusion(predicted, outer.test.labels, 1));
    } else {
        r.test_metrics = MetricsReport{};
        r.test_metrics.degenerate = true;
    }

    r.wall_time_seconds = seconds_since(wall_start);
    return r;
}

std::vector<RunResult> run_experiment_on(const ExperimentConfig& cfg, const TabularDataset& raw) {
    cfg.validate();
    const std::vector<std::string> algos = parse_algos(cfg.algo);

    struct Job {
        std::string algo;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (const auto& a : algos)
        for (int i = 0; i < cfg.repeat; ++i)
            jobs.push_back({a, cfg.seed + static_cast<std::uint64_t>(i)});

    std::vector<RunResult> results(jobs.size());
    const std::size_t workers = worker_count(jobs.size());
    if (workers == 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            ExperimentConfig one = cfg;
            one.algo = jobs[i].algo;
            results[i] = run_single(one, raw, jobs[i].seed);
        }
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            try {
                ExperimentConfig one = cfg;
                one.algo = jobs[i].algo;
                results[i] = run_single(one, raw, jobs[i].seed);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

std::vector<RunResult> run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.dataset_path.empty()) throw ConfigError("--dataset is required");
    const TabularDataset raw = load_csv(cfg.dataset_path, cfg.label_column);
    return run_experiment_on(cfg, raw);
}

std::string result_to_json(const RunResult& r, const ExperimentConfig& cfg, bool include_timing) {
    json j;
    j["schema_version"] = 1;
    j["algo"] = r.algo;
    j["seed"] = r.seed;
    json c;
    c["label_column"] = cfg.label_column;
    c["iterations"] = cfg.iterations;
    c["ssa_iterations"] = cfg.ssa_iterations;
    c["population"] = cfg.population;
    c["k"] = cfg.k;
    c["train_fraction"] = cfg.train_fraction;
    c["fitness_a"] = cfg.fitness_a;
    c["fitness_b"] = cfg.fitness_b;
    c["binarize_threshold"] = cfg.binarize_threshold;
    c["lb"] = cfg.lb;
    c["ub"] = cfg.ub;
    c["beta"] = cfg.beta;
    j["config"] = c;
    j["n_features"] = r.n_features;
    j["label_mapping"] = r.label_names;
    std::vector<int> mask_bits(static_cast<std::size_t>(r.best_mask.size()));
    for (Eigen::Index i = 0; i < r.best_mask.size(); ++i)
        mask_bits[static_cast<std::size_t>(i)] = r.best_mask.bits(i) ? 1 : 0;
    j["best_mask"] = mask_bits;
    j["n_selected"] = r.n_selected;
    j["best_fitness"] = r.best_fitness;
    if (std::isfinite(r.fitness_class_err))
        j["fitness_class_err"] = r.fitness_class_err;
    else
        j["fitness_class_err"] = nullptr;
    j["trace"] = r.trace;
    j["n_evaluations"] = r.n_evaluations;
    j["n_ssa_acceptances"] = r.n_ssa_acceptances;
    j["test_metrics"] = metrics_to_json(r.test_metrics);
    if (include_timing) {
        json t;
        t["wall_time_seconds"] = r.wall_time_seconds;
        t["optimize_seconds"] = r.optimize_seconds;
        t["classify_test_seconds"] = r.classify_test_seconds;
        j["timing"] = t;
    }
    return j.dump(2) + "\n";
}

std::string metrics_csv(const std::vector<RunResult>& results) {
    std::ostringstream out;
    out << "Algorithm,Seed,Classifier,Accuracy,Precision,Recall,F1,Specificity,"
           "SelectedFeatures,BestFitness\n";
    std::vector<std::string> algos;
    for (const auto& r : results) {
        if (std::find(algos.begin(), algos.end(), r.algo) == algos.end()) algos.push_back(r.algo);
        out << r.algo << ',' << r.seed << ",KNN," << shortest(r.test_metrics.accuracy * 100.0)
            << ',' << two_decimals(r.test_metrics.precision) << ','
            << two_decimals(r.test_metrics.recall) << ',' << two_decimals(r.test_metrics.f1)
            << ',' << two_decimals(r.test_metrics.specificity) << ',' << r.n_selected << ','
            << shortest(r.best_fitness) << '\n';
    }
    for (const auto& algo : algos) {
        std::vector<double> acc, prec, rec, f1v, spec, sel, fit;
        for (const auto& r : results) {
            if (r.algo != algo) continue;
            acc.push_back(r.test_metrics.accuracy * 100.0);
            prec.push_back(r.test_metrics.precision);
            rec.push_back(r.test_metrics.recall);
            f1v.push_back(r.test_metrics.f1);
            spec.push_back(r.test_metrics.specificity);
            sel.push_back(static_cast<double>(r.n_selected));
            fit.push_back(r.best_fitness);
        }
        if (acc.size() < 2) continue;
        out << algo << ",median,KNN," << shortest(median(acc)) << ',' << two_decimals(median(prec))
            << ',' << two_decimals(median(rec)) << ',' << two_decimals(median(f1v)) << ','
            << two_decimals(median(spec)) << ',' << shortest(median(sel)) << ','
            << shortest(median(fit)) << '\n';
    }
    return out.str();
}

std::string timing_csv(const std::vector<RunResult>& results) {
    if (results.empty()) throw std::invalid_argument("timing: no results");
    std::ostringstream out;
    out << "Algorithm,ClassifyTestSeconds,OptimizeSeconds,WallTimeSeconds,Note\n";
    std::vector<std::string> algos;
    for (const auto& r : results)
        if (std::find(algos.begin(), algos.end(), r.algo) == algos.end()) algos.push_back(r.algo);

    double classify_total = 0.0;
    std::map<std::string, std::array<double, 3>> totals;
    for (const auto& algo : algos) totals[algo] = {0.0, 0.0, 0.0};
    for (const auto& r : results) {
        auto& t = totals[r.algo];
        t[0] += r.classify_test_seconds;
        t[1] += r.optimize_seconds;
        t[2] += r.wall_time_seconds;
        classify_total += r.classify_test_seconds;
    }
    (void)classify_total;
    for (const auto& algo : algos) {
        const auto& t = totals[algo];
        out << algo << ',' << shortest(t[0]) << ',' << shortest(t[1]) << ',' << shortest(t[2])
            << ",\n";
    }
    const bool all_three = totals.count("hhossa") && totals.count("hho") && totals.count("ssa");
    if (all_three) {
        const double classify_diff = totals["hhossa"][0] - (totals["hho"][0] + totals["ssa"][0]);
        const double optimize_diff = totals["hhossa"][1] - (totals["hho"][1] + totals["ssa"][1]);
        const double wall_diff = totals["hhossa"][2] - (totals["hho"][2] + totals["ssa"][2]);
        out << "hhossa_minus_hho_plus_ssa," << shortest(classify_diff) << ','
            << shortest(optimize_diff) << ',' << shortest(wall_diff)
            << ",\"negative = hhossa faster than hho + ssa; hardware-dependent, "
               "informational\"\n";
    }
    return out.str();
}

std::string trace_csv(const RunResult& r) {
    std::ostringstream out;
    out << "iteration,best_fitness\n";
    for (std::size_t i = 0; i < r.trace.size(); ++i) out << i << ',' << shortest(r.trace[i]) << '\n';
    return out.str();
}

std::vector<std::string> write_outputs(const std::vector<RunResult>& results,
                                       const ExperimentConfig& cfg) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.output_dir);
    std::vector<std::string> written;
    auto emit = [&written](const fs::path& path, const std::string& content) {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("write: cannot open '" + path.string() + "'");
        out << content;
        if (!out) throw std::runtime_error("write: failed writing '" + path.string() + "'");
        written.push_back(path.string());
    };

    const fs::path dir(cfg.output_dir);
    for (const auto& r : results) {
        ExperimentConfig one = cfg;
        one.algo = r.algo;
        const std::string stem = r.algo + "_seed" + std::to_string(r.seed);
        emit(dir / ("result_" + stem + ".json"), result_to_json(r, one));
        emit(dir / ("trace_" + stem + ".csv"), trace_csv(r));
    }
    emit(dir / "metrics.csv", metrics_csv(results));
    emit(dir / "timing.csv", timing_csv(results));
    return written;
}

double median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median: empty input");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace swarmselect
