#pragma once

#include <atomic>
#include <filesystem>
#include <random>
#include <string>
#include <unistd.h>

#include "geomapf/envgen.hpp"
#include "geomapf/geometry.hpp"
#include "geomapf/instance.hpp"

namespace support {

// Directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static std::atomic<int> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("geomapf-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    [[nodiscard]] const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline geomapf::Point2 random_point(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    const double x = u(rng);
    return {x, u(rng)};
}

inline geomapf::Segment2 random_segment(std::mt19937_64& rng, double lo, double hi) {
    return {random_point(rng, lo, hi), random_point(rng, lo, hi)};
}

// Small Box instance: `vertices` roadmap vertices, `agents` agents.
inline geomapf::Instance small_box_instance(std::uint64_t seed, int vertices, int agents, int boxes = 4,
                                            int neighbors = 4, double radius = 0.05) {
    geomapf::InstanceParams p;
    p.world.kind = geomapf::WorldKind::Box;
    p.world.box.count = boxes;
    p.world.seed = seed;
    p.roadmap.vertices = vertices;
    p.roadmap.neighbors = neighbors;
    p.agents = agents;
    p.radius = radius;
    return geomapf::generate_instance(p, "box-" + std::to_string(seed));
}

}  // namespace support
