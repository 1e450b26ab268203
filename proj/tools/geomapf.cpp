// geomapf: instance generation, solver runs, reports and dataset export.
//
// Exit codes: 0 ok, 1 usage error, 2 one or more runs failed.

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "geomapf/bench.hpp"
#include "geomapf/bridge.hpp"
#include "geomapf/datagen.hpp"
#include "geomapf/highlevel.hpp"
#include "geomapf/instance.hpp"
#include "geomapf/rng.hpp"
#include "geomapf/validate.hpp"

namespace fs = std::filesystem;
using namespace geomapf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRunFailures = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Files given directly plus every *.inst inside given directories, sorted.
std::vector<fs::path> collect_instances(const std::vector<std::string>& inputs) {
    std::vector<fs::path> out;
    for (const auto& in : inputs) {
        const fs::path p(in);
        if (fs::is_directory(p)) {
            std::vector<fs::path> found;
            for (const auto& entry : fs::directory_iterator(p)) {
                if (entry.is_regular_file() && entry.path().extension() == ".inst") found.push_back(entry.path());
            }
            std::sort(found.begin(), found.end());
            out.insert(out.end(), found.begin(), found.end());
        } else if (fs::exists(p)) {
            out.push_back(p);
        } else {
            throw UsageError("no such instance file or directory: " + in);
        }
    }
    if (out.empty()) throw UsageError("no instances given");
    return out;
}

// ---- gen --------------------------------------------------------------------

struct GenArgs {
    std::string world = "box";
    int agents_min = 2;
    int agents_max = 2;
    int count = 10;
    std::uint64_t seed = 1;
    std::string out;
    int vertices = 100;
    int neighbors = 8;
    double radius = 0.05;
    MazeParams maze;
    BoxParams box;
};

int run_gen(const GenArgs& a) {
    if (a.agents_min < 1 || a.agents_max < a.agents_min) throw UsageError("need 1 <= --agents-min <= --agents-max");
    if (a.count < 0) throw UsageError("--count must be >= 0");
    InstanceParams params;
    params.world.kind = parse_world_kind(a.world);
    params.world.maze = a.maze;
    params.world.box = a.box;
    params.roadmap.vertices = a.vertices;
    params.roadmap.neighbors = a.neighbors;
    params.radius = a.radius;
    fs::create_directories(a.out);

    int failures = 0;
    for (int m = a.agents_min; m <= a.agents_max; ++m) {
        for (int k = 0; k < a.count; ++k) {
            char name[64];
            std::snprintf(name, sizeof name, "%s-m%d-%03d", a.world.c_str(), m, k);
            params.agents = m;
            params.world.seed = splitmix(a.seed ^ splitmix((static_cast<std::uint64_t>(m) << 32) | static_cast<std::uint32_t>(k)));
            try {
                const Instance inst = generate_instance(params, name);
                write_instance(inst, fs::path(a.out) / (std::string(name) + ".inst"));
            } catch (const GenerationError& e) {
                ++failures;
                std::cerr << "FAIL " << name << ": " << e.what() << '\n';
            } catch (const std::invalid_argument& e) {
                ++failures;
                std::cerr << "FAIL " << name << ": " << e.what() << '\n';
            }
        }
    }
    const int total = (a.agents_max - a.agents_min + 1) * a.count;
    std::cerr << "generated " << total - failures << " of " << total << " instances in " << a.out << '\n';
    return failures ? kExitRunFailures : kExitOk;
}

// ---- solve ------------------------------------------------------------------

struct SolveArgs {
    std::vector<std::string> inputs;
    std::string solver = "cbs";
    std::string w = "1";
    double timeout = 300.0;
    std::string phi_endpoint;
    std::string out;
    std::string tree_log;
    bool serial = false;
    int jobs = 1;
    bool audit = false;
};

struct Job {
    fs::path path;
    RunRecord record;
    std::string message;
};

RunRecord solve_one(const Instance& inst, const SolveArgs& a, double w, std::string& message) {
    SolveOptions opts;
    opts.timeout_s = a.timeout;
    opts.record_tree = !a.tree_log.empty();
    opts.audit = a.audit;

    const auto t0 = std::chrono::steady_clock::now();
    SolveResult res;
    if (a.solver == "cbs") {
        res = cbs_solve(inst, opts);
    } else if (a.solver == "focal-conflicts") {
        ConflictCountHeuristic psi;
        res = focal_solve(inst, w, psi, opts);
    } else {
        try {
            auto client = connect_phi(a.phi_endpoint);
            DepthPhiHeuristic psi(*client);
            res = focal_solve(inst, w, psi, opts);
        } catch (const BridgeError& e) {
            res.outcome = Outcome::Error;
            res.message = std::string("heuristic evaluator unavailable: ") + e.what();
        }
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    RunRecord r;
    r.instance = inst.id;
    r.solver = a.solver;
    r.w = a.solver == "cbs" ? 1.0 : w;
    r.agents = inst.num_agents();
    r.outcome = res.outcome;
    r.wall_time_s = wall;
    r.timeout_s = a.timeout;
    r.expansions = res.stats.expansions;
    r.generated = res.stats.generated;
    message = res.message;
    if (res.solved()) {
        const auto violations = validate_solution(inst, res.solution);
        if (violations.empty()) {
            r.flowtime = res.flowtime;
        } else {
            r.outcome = Outcome::Error;
            message = "solution failed validation: " + to_string(violations.front().kind) + ": " + violations.front().message;
        }
    }
    if (a.audit && res.stats.focal_violations + res.stats.lb_violations + res.stats.monotonicity_violations > 0) {
        r.outcome = Outcome::Error;
        r.flowtime.reset();
        message = "focal-search audit failed";
    }
    if (res.tree) {
        fs::create_directories(a.tree_log);
        write_tree_log(*res.tree, fs::path(a.tree_log) / (inst.id + "." + a.solver + ".ndjson"));
    }
    return r;
}

int run_solve(SolveArgs a) {
    static const std::vector<std::string> solvers = {"cbs", "focal-conflicts", "focal-learned"};
    if (std::find(solvers.begin(), solvers.end(), a.solver) == solvers.end()) {
        throw UsageError("unknown solver '" + a.solver + "'");
    }
    double w = 1.0;
    try {
        w = parse_w(a.w);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (a.solver == "focal-learned" && a.phi_endpoint.empty()) throw UsageError("focal-learned needs --phi-endpoint");
    if (!(a.timeout > 0.0)) throw UsageError("--timeout must be positive");
    if (a.jobs < 1) throw UsageError("--jobs must be >= 1");
    if (a.serial) {
        a.jobs = 1;
        omp_set_num_threads(1);
    }

    std::vector<Job> jobs;
    for (const fs::path& p : collect_instances(a.inputs)) jobs.push_back({p, {}, {}});

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < jobs.size();) {
            Job& job = jobs[k];
            try {
                const Instance inst = read_instance(job.path);
                job.record = solve_one(inst, a, w, job.message);
            } catch (const std::exception& e) {
                job.record.instance = job.path.stem().string();
                job.record.solver = a.solver;
                job.record.w = a.solver == "cbs" ? 1.0 : w;
                job.record.outcome = Outcome::Error;
                job.record.timeout_s = a.timeout;
                job.message = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < a.jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::vector<RunRecord> records;
    int failures = 0;
    for (const Job& job : jobs) {
        records.push_back(job.record);
        if (job.record.outcome != Outcome::Solved) {
            ++failures;
            std::cerr << job.record.instance << ": " << to_string(job.record.outcome);
            if (!job.message.empty()) std::cerr << " (" << job.message << ")";
            std::cerr << '\n';
        }
    }
    if (a.out.empty()) {
        write_runs_csv(std::cout, records);
    } else {
        std::ofstream out(a.out);
        if (!out) throw std::runtime_error("cannot write " + a.out);
        write_runs_csv(out, records);
    }
    return failures ? kExitRunFailures : kExitOk;
}

// ---- report -----------------------------------------------------------------

int run_report(const std::vector<std::string>& runs_files, const std::string& baseline, const std::string& out_path) {
    std::vector<RunRecord> runs;
    for (const auto& f : runs_files) {
        std::ifstream in(f);
        if (!in) throw UsageError("cannot read " + f);
        try {
            auto part = read_runs_csv(in);
            runs.insert(runs.end(), part.begin(), part.end());
        } catch (const ParseError& e) {
            throw std::runtime_error(f + ": " + e.what());
        }
    }
    const auto rows = compute_report(runs, baseline);
    if (out_path.empty()) {
        write_report_csv(std::cout, rows);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        write_report_csv(out, rows);
    }
    return kExitOk;
}

// ---- datagen ----------------------------------------------------------------

int run_datagen(const std::vector<std::string>& inputs, double timeout, const std::string& out) {
    std::map<std::string, Instance> instances;
    std::vector<Sample> samples;
    int failures = 0;
    for (const fs::path& p : collect_instances(inputs)) {
        Instance inst = read_instance(p);
        std::vector<Sample> got = collect_samples(inst, timeout);
        if (got.empty()) {
            ++failures;
            std::cerr << inst.id << ": CBS did not solve the instance; no samples\n";
            continue;
        }
        samples.insert(samples.end(), got.begin(), got.end());
        instances.emplace(inst.id, std::move(inst));
    }
    export_dataset(samples, instances, out);
    std::cerr << "exported " << samples.size() << " samples from " << instances.size() << " instances to " << out << '\n';
    return failures ? kExitRunFailures : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geometric multi-agent path finding: generation, solving, reporting"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance suite");
    gen_cmd->add_option("--world", gen.world, "World kind")->check(CLI::IsMember({"box", "maze"}));
    gen_cmd->add_option("--agents-min", gen.agents_min, "Smallest agent count");
    gen_cmd->add_option("--agents-max", gen.agents_max, "Largest agent count");
    gen_cmd->add_option("--count", gen.count, "Instances per agent count");
    gen_cmd->add_option("--seed", gen.seed, "Base seed");
    gen_cmd->add_option("--out", gen.out, "Output directory")->required();
    gen_cmd->add_option("--vertices", gen.vertices, "Roadmap vertices");
    gen_cmd->add_option("--neighbors", gen.neighbors, "Roadmap k");
    gen_cmd->add_option("--radius", gen.radius, "Agent radius");
    gen_cmd->add_option("--maze-rows", gen.maze.rows);
    gen_cmd->add_option("--maze-cols", gen.maze.cols);
    gen_cmd->add_option("--wall-thickness", gen.maze.wall_thickness);
    gen_cmd->add_option("--removal-prob", gen.maze.removal_prob);
    gen_cmd->add_option("--boxes", gen.box.count);
    gen_cmd->add_option("--box-min", gen.box.min_size);
    gen_cmd->add_option("--box-max", gen.box.max_size);

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Run a solver over instances and write a runs CSV");
    solve_cmd->add_option("instances", solve.inputs, "Instance files or directories")->required();
    solve_cmd->add_option("--solver", solve.solver, "cbs | focal-conflicts | focal-learned");
    solve_cmd->add_option("--w", solve.w, "Suboptimality factor (number or inf)");
    solve_cmd->add_option("--timeout", solve.timeout, "Per-run limit in seconds");
    solve_cmd->add_option("--phi-endpoint", solve.phi_endpoint, "unix:<path>, tcp:<host>:<port> or exec:<command>");
    solve_cmd->add_option("--out", solve.out, "Runs CSV (default stdout)");
    solve_cmd->add_option("--tree-log", solve.tree_log, "Directory for search-tree logs");
    solve_cmd->add_flag("--serial", solve.serial, "One run at a time on one thread, for timing");
    solve_cmd->add_option("--jobs", solve.jobs, "Concurrent runs");
    solve_cmd->add_flag("--audit", solve.audit, "Check focal-search invariants; violations fail the run");

    std::vector<std::string> report_runs;
    std::string report_baseline = "cbs";
    std::string report_out;
    auto* report_cmd = app.add_subcommand("report", "Aggregate runs CSVs");
    report_cmd->add_option("runs", report_runs, "Runs CSV files")->required();
    report_cmd->add_option("--baseline", report_baseline, "Solver flowtimes are compared against");
    report_cmd->add_option("--out", report_out, "Report CSV (default stdout)");

    std::vector<std::string> dg_inputs;
    double dg_timeout = 300.0;
    std::string dg_out;
    auto* dg_cmd = app.add_subcommand("datagen", "Label CBS search trees into a training dataset");
    dg_cmd->add_option("instances", dg_inputs, "Instance files or directories")->required();
    dg_cmd->add_option("--timeout", dg_timeout, "Per-instance CBS limit in seconds");
    dg_cmd->add_option("--out", dg_out, "Dataset directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*solve_cmd) return run_solve(solve);
        if (*report_cmd) return run_report(report_runs, report_baseline, report_out);
        if (*dg_cmd) return run_datagen(dg_inputs, dg_timeout, dg_out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRunFailures;
    }
    return kExitUsage;
}
