#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "geomapf/highlevel.hpp"
#include "geomapf/instance.hpp"
#include "geomapf/tree_log.hpp"

namespace geomapf {

enum class Label { Positive, Negative };

struct Sample {
    std::string instance_id;
    Solution solution;
    int depth = 0;
    Label label = Label::Positive;

    friend auto operator<=>(const Sample& a, const Sample& b) {
        return std::tie(a.instance_id, a.depth, a.label, a.solution) <=> std::tie(b.instance_id, b.depth, b.label, b.solution);
    }
    friend bool operator==(const Sample&, const Sample&) = default;
};

class DatasetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Positives: the root-to-leaf chain ending at `solved_leaf`. Negatives:
/// siblings of positives that are not positive themselves. Without a leaf
/// (failed run) nothing is labelled. Throws DatasetError on an inconsistent log.
[[nodiscard]] std::vector<Sample> label_tree(const TreeLog& log, std::optional<int> solved_leaf,
                                             const std::string& instance_id);

/// Same instance and positive at least as deep as the negative.
[[nodiscard]] bool valid_pair(const Sample& positive, const Sample& negative);

/// Solves `inst` with CBS while recording the tree, then labels it.
[[nodiscard]] std::vector<Sample> collect_samples(const Instance& inst, double timeout_s);

struct Dataset {
    std::map<std::string, Instance> instances;
    std::vector<Sample> samples;
};

inline constexpr const char* kDatasetHeader = "geo-mapf-ds v1";

/// Writes MANIFEST, <id>.inst and <id>.samples for every instance.
/// Every sample must reference an instance in `instances`.
void export_dataset(const std::vector<Sample>& samples, const std::map<std::string, Instance>& instances,
                    const std::filesystem::path& dir);
/// Throws ParseError (with line) or DatasetError (missing instance, bad path).
[[nodiscard]] Dataset import_dataset(const std::filesystem::path& dir);

}  // namespace geomapf
