#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "geomapf/highlevel.hpp"

namespace geomapf {

/// One solver run on one instance.
struct RunRecord {
    std::string instance;
    std::string solver;
    double w = 1.0;  // 1 for cbs, may be +inf
    int agents = 0;
    Outcome outcome = Outcome::Error;
    double wall_time_s = 0.0;
    double timeout_s = 300.0;
    std::optional<int> flowtime;  // present iff solved
    long expansions = 0;
    long generated = 0;

    friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// Column order of the runs CSV.
inline constexpr const char* kRunsCsvHeader =
    "instance,solver,w,agents,outcome,wall_time_s,timeout_s,flowtime,expansions,generated";

void write_runs_csv(std::ostream& out, const std::vector<RunRecord>& runs, bool header = true);
/// Throws ParseError with the 1-based line and column name.
[[nodiscard]] std::vector<RunRecord> read_runs_csv(std::istream& in);

[[nodiscard]] std::string format_w(double w);
/// Accepts decimals and "inf"; throws std::invalid_argument otherwise or if w < 1.
[[nodiscard]] double parse_w(const std::string& s);

/// Aggregate for one (solver, w, agents) group.
struct ReportRow {
    std::string solver;
    double w = 1.0;
    int agents = 0;
    int runs = 0;
    int solved = 0;
    double success_rate = 0.0;
    /// Failures count as their timeout.
    double mean_time_s = 0.0;
    /// Instances solved by both this solver and the baseline.
    int co_solved = 0;
    /// Sum of flowtimes over co-solved instances divided by the baseline's;
    /// empty when nothing was co-solved.
    std::optional<double> flowtime_ratio;
};

inline constexpr const char* kReportCsvHeader =
    "solver,w,agents,runs,solved,success_rate,mean_time_s,co_solved,flowtime_ratio";

/// Groups sorted by (solver, w, agents). The baseline is matched by
/// (instance) among runs of `baseline_solver`.
[[nodiscard]] std::vector<ReportRow> compute_report(const std::vector<RunRecord>& runs,
                                                    const std::string& baseline_solver = "cbs");
void write_report_csv(std::ostream& out, const std::vector<ReportRow>& rows);

}  // namespace geomapf
