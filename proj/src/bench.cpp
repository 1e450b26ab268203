#include "geomapf/bench.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "geomapf/instance.hpp"

namespace geomapf {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out(1);
    for (char c : line) {
        if (c == ',') {
            out.emplace_back();
        } else if (c != '\r') {
            out.back().push_back(c);
        }
    }
    return out;
}

const std::vector<std::string>& run_columns() {
    static const std::vector<std::string> cols = split_csv(kRunsCsvHeader);
    return cols;
}

double to_double(const std::string& s, int line, const std::string& col) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError(line, col, "not a number: '" + s + "'");
    return v;
}

long to_long(const std::string& s, int line, const std::string& col) {
    long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError(line, col, "not an integer: '" + s + "'");
    return v;
}

}  // namespace

std::string format_w(double w) { return std::isinf(w) ? "inf" : fmt(w); }

double parse_w(const std::string& s) {
    if (s == "inf" || s == "infinity" || s == "∞") return std::numeric_limits<double>::infinity();
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || std::isnan(v)) {
        throw std::invalid_argument("invalid w '" + s + "'");
    }
    if (v < 1.0) throw std::invalid_argument("w must be >= 1, got " + s);
    return v;
}

void write_runs_csv(std::ostream& out, const std::vector<RunRecord>& runs, bool header) {
    if (header) out << kRunsCsvHeader << '\n';
    for (const RunRecord& r : runs) {
        if (r.instance.find_first_of(",\n") != std::string::npos || r.solver.find_first_of(",\n") != std::string::npos) {
            throw std::invalid_argument("instance and solver names may not contain commas or newlines");
        }
        out << r.instance << ',' << r.solver << ',' << format_w(r.w) << ',' << r.agents << ',' << to_string(r.outcome)
            << ',' << fmt(r.wall_time_s) << ',' << fmt(r.timeout_s) << ',';
        if (r.flowtime) out << *r.flowtime;
        out << ',' << r.expansions << ',' << r.generated << '\n';
    }
}

std::vector<RunRecord> read_runs_csv(std::istream& in) {
    const auto& cols = run_columns();
    std::vector<RunRecord> out;
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw ParseError(1, "header", "empty file");
    ++lineno;
    if (split_csv(line) != cols) throw ParseError(lineno, "header", std::string("expected '") + kRunsCsvHeader + "'");

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        const auto f = split_csv(line);
        if (f.size() != cols.size()) {
            throw ParseError(lineno, "row", "expected " + std::to_string(cols.size()) + " columns, got " + std::to_string(f.size()));
        }
        RunRecord r;
        r.instance = f[0];
        r.solver = f[1];
        try {
            r.w = parse_w(f[2]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, cols[2], e.what());
        }
        r.agents = static_cast<int>(to_long(f[3], lineno, cols[3]));
        try {
            r.outcome = parse_outcome(f[4]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, cols[4], e.what());
        }
        r.wall_time_s = to_double(f[5], lineno, cols[5]);
        r.timeout_s = to_double(f[6], lineno, cols[6]);
        if (!f[7].empty()) r.flowtime = static_cast<int>(to_long(f[7], lineno, cols[7]));
        if (r.flowtime.has_value() != (r.outcome == Outcome::Solved)) {
            throw ParseError(lineno, cols[7], "flowtime must be present exactly when solved");
        }
        r.expansions = to_long(f[8], lineno, cols[8]);
        r.generated = to_long(f[9], lineno, cols[9]);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<ReportRow> compute_report(const std::vector<RunRecord>& runs, const std::string& baseline_solver) {
    std::map<std::string, int> baseline;  // instance -> flowtime
    for (const RunRecord& r : runs) {
        if (r.solver == baseline_solver && r.flowtime) baseline[r.instance] = *r.flowtime;
    }

    struct Acc {
        ReportRow row;
        double time_sum = 0.0;
        long flow_sum = 0;
        long base_sum = 0;
    };
    std::map<std::tuple<std::string, double, int>, Acc> groups;
    for (const RunRecord& r : runs) {
        Acc& acc = groups[{r.solver, r.w, r.agents}];
        acc.row.solver = r.solver;
        acc.row.w = r.w;
        acc.row.agents = r.agents;
        ++acc.row.runs;
        const bool ok = r.outcome == Outcome::Solved;
        acc.time_sum += ok ? r.wall_time_s : r.timeout_s;
        if (!ok) continue;
        ++acc.row.solved;
        const auto b = baseline.find(r.instance);
        if (b != baseline.end()) {
            ++acc.row.co_solved;
            acc.flow_sum += *r.flowtime;
            acc.base_sum += b->second;
        }
    }

    std::vector<ReportRow> rows;
    for (auto& [key, acc] : groups) {
        ReportRow row = acc.row;
        row.success_rate = static_cast<double>(row.solved) / row.runs;
        row.mean_time_s = acc.time_sum / row.runs;
        if (row.co_solved > 0 && acc.base_sum > 0) {
            row.flowtime_ratio = static_cast<double>(acc.flow_sum) / static_cast<double>(acc.base_sum);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_report_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
    out << kReportCsvHeader << '\n';
    for (const ReportRow& r : rows) {
        out << r.solver << ',' << format_w(r.w) << ',' << r.agents << ',' << r.runs << ',' << r.solved << ','
            << fmt(r.success_rate) << ',' << fmt(r.mean_time_s) << ',' << r.co_solved << ','
            << (r.flowtime_ratio ? fmt(*r.flowtime_ratio) : std::string("n/a")) << '\n';
    }
}

}  // namespace geomapf
