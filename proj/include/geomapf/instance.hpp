#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "geomapf/envgen.hpp"
#include "geomapf/geometry.hpp"
#include "geomapf/roadmap.hpp"

namespace geomapf {

struct Instance {
    /// Not serialised; readers set it from the file stem.
    std::string id;
    WorldSpec world;
    ObstacleSet obstacles;
    Roadmap roadmap;
    std::vector<VertexId> starts;
    std::vector<VertexId> goals;
    AgentRadius radius{0.05};

    [[nodiscard]] int num_agents() const { return static_cast<int>(starts.size()); }

    /// Structural equality; ignores `id`.
    friend bool operator==(const Instance& a, const Instance& b) {
        return a.world == b.world && a.obstacles == b.obstacles && a.roadmap == b.roadmap &&
               a.starts == b.starts && a.goals == b.goals && a.radius == b.radius;
    }
};

struct InstanceParams {
    WorldSpec world;
    RoadmapParams roadmap;
    int agents = 2;
    double radius = 0.05;
};

/// World, roadmap and endpoints all derived from params.world.seed.
[[nodiscard]] Instance generate_instance(const InstanceParams& params, std::string id = {});

class ParseError : public std::runtime_error {
public:
    ParseError(int line, std::string field, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", field '" + field + "': " + what),
          line_(line),
          field_(std::move(field)) {}

    [[nodiscard]] int line() const { return line_; }
    [[nodiscard]] const std::string& field() const { return field_; }

private:
    int line_;
    std::string field_;
};

/// Well-formed file whose contents violate instance invariants.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kInstanceHeader = "geo-mapf v1";

void write_instance(const Instance& inst, std::ostream& out);
void write_instance(const Instance& inst, const std::filesystem::path& path);
[[nodiscard]] Instance read_instance(std::istream& in, std::string id = {});
[[nodiscard]] Instance read_instance(const std::filesystem::path& path);

}  // namespace geomapf
