#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "geomapf/path.hpp"

namespace geomapf {

/// One generated search node. parent is -1 for the root; `constraint` is the
/// constraint this node added over its parent.
struct TreeRecord {
    int id = 0;
    int parent = -1;
    int depth = 0;
    int cost = 0;
    std::optional<Constraint> constraint;
    Solution paths;
    /// Node whose solution the search returned.
    bool solution = false;

    friend bool operator==(const TreeRecord&, const TreeRecord&) = default;
};

struct TreeLog {
    std::vector<TreeRecord> nodes;

    [[nodiscard]] std::optional<int> solution_id() const;
    friend bool operator==(const TreeLog&, const TreeLog&) = default;
};

/// Newline-delimited JSON, one object per node:
/// {"id":..,"parent":..|null,"depth":..,"cost":..,
///  "constraint":{"agent":..,"vertex":..,"time":..}|null,"paths":[[..],..],"solution":bool}
void write_tree_log(const TreeLog& log, std::ostream& out);
void write_tree_log(const TreeLog& log, const std::filesystem::path& path);
/// Throws ParseError naming the offending line.
[[nodiscard]] TreeLog read_tree_log(std::istream& in);
[[nodiscard]] TreeLog read_tree_log(const std::filesystem::path& path);

}  // namespace geomapf
