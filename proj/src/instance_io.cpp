#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "geomapf/instance.hpp"
#include "geomapf/rng.hpp"

namespace geomapf {

namespace {


std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Line-oriented reader that tracks line numbers for error messages.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next non-blank line split into tokens.
    std::vector<std::string> next(const std::string& field) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::istringstream ss(line);
            std::vector<std::string> tokens;
            for (std::string tok; ss >> tok;) tokens.push_back(tok);
            if (!tokens.empty()) return tokens;
        }
        throw ParseError(line_no_ + 1, field, "unexpected end of file");
    }

    // Line starting with `key` followed by exactly `count` values.
    std::vector<std::string> keyed(const std::string& key, std::size_t count) {
        auto tokens = next(key);
        if (tokens[0] != key) fail(key, "expected '" + key + "', found '" + tokens[0] + "'");
        if (tokens.size() != count + 1) {
            fail(key, "expected " + std::to_string(count) + " value(s), found " + std::to_string(tokens.size() - 1));
        }
        tokens.erase(tokens.begin());
        return tokens;
    }

    [[noreturn]] void fail(const std::string& field, const std::string& what) const {
        throw ParseError(line_no_, field, what);
    }

    double real(const std::string& tok, const std::string& field) const {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(field, "not a number: '" + tok + "'");
        return v;
    }

    template <typename Int>
    Int integer(const std::string& tok, const std::string& field) const {
        Int v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(field, "not an integer: '" + tok + "'");
        return v;
    }

    std::size_t count(const std::string& tok, const std::string& field) const {
        const auto v = integer<long long>(tok, field);
        if (v < 0) fail(field, "negative count");
        return static_cast<std::size_t>(v);
    }

    [[nodiscard]] int line() const { return line_no_; }

private:
    std::istream& in_;
    int line_no_ = 0;
};

}  // namespace

Instance generate_instance(const InstanceParams& params, std::string id) {
    const AgentRadius r(params.radius);
    const std::uint64_t seed = params.world.seed;
    Instance inst;
    inst.id = std::move(id);
    inst.world = params.world;
    inst.radius = r;
    inst.obstacles = gen_world(params.world);
    inst.roadmap = sample_roadmap(inst.obstacles, params.world.bounds, params.roadmap, r, splitmix(seed ^ 0x524f41444d4150ULL));
    Endpoints ep = assign_endpoints(inst.roadmap, params.agents, r, splitmix(seed ^ 0x454e44504f494eULL));
    inst.starts = std::move(ep.starts);
    inst.goals = std::move(ep.goals);
    return inst;
}

void write_instance(const Instance& inst, std::ostream& out) {
    const WorldSpec& w = inst.world;
    out << kInstanceHeader << '\n';
    out << "world " << to_string(w.kind) << '\n';
    out << "seed " << w.seed << '\n';
    out << "bounds " << fmt(w.bounds.xmin) << ' ' << fmt(w.bounds.ymin) << ' ' << fmt(w.bounds.xmax) << ' '
        << fmt(w.bounds.ymax) << '\n';
    out << "maze " << w.maze.rows << ' ' << w.maze.cols << ' ' << fmt(w.maze.wall_thickness) << ' '
        << fmt(w.maze.removal_prob) << '\n';
    out << "box " << w.box.count << ' ' << fmt(w.box.min_size) << ' ' << fmt(w.box.max_size) << '\n';
    out << "rects " << inst.obstacles.rects.size() << '\n';
    for (const Rect& r : inst.obstacles.rects) {
        out << fmt(r.xmin) << ' ' << fmt(r.ymin) << ' ' << fmt(r.xmax) << ' ' << fmt(r.ymax) << '\n';
    }
    const Roadmap& g = inst.roadmap;
    out << "V " << g.num_vertices() << '\n';
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        const Point2 p = g.positions()[v];
        out << v << ' ' << fmt(p.x) << ' ' << fmt(p.y) << '\n';
    }
    out << "E " << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) out << e.src << ' ' << e.dst << '\n';
    out << "A " << inst.starts.size() << '\n';
    for (std::size_t i = 0; i < inst.starts.size(); ++i) out << inst.starts[i] << ' ' << inst.goals[i] << '\n';
    out << "R " << fmt(inst.radius.value()) << '\n';
}

void write_instance(const Instance& inst, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_instance(inst, out);
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

Instance read_instance(std::istream& in, std::string id) {
    LineReader rd(in);
    Instance inst;
    inst.id = std::move(id);

    {
        const auto tokens = rd.next("header");
        if (tokens.size() != 2 || tokens[0] + " " + tokens[1] != kInstanceHeader) {
            rd.fail("header", std::string("expected '") + kInstanceHeader + "'");
        }
    }
    {
        const auto t = rd.keyed("world", 1);
        try {
            inst.world.kind = parse_world_kind(t[0]);
        } catch (const std::invalid_argument& e) {
            rd.fail("world", e.what());
        }
    }
    inst.world.seed = rd.integer<std::uint64_t>(rd.keyed("seed", 1)[0], "seed");
    {
        const auto t = rd.keyed("bounds", 4);
        inst.world.bounds = {rd.real(t[0], "bounds"), rd.real(t[1], "bounds"), rd.real(t[2], "bounds"),
                             rd.real(t[3], "bounds")};
    }
    {
        const auto t = rd.keyed("maze", 4);
        inst.world.maze = {rd.integer<int>(t[0], "maze"), rd.integer<int>(t[1], "maze"), rd.real(t[2], "maze"),
                           rd.real(t[3], "maze")};
    }
    {
        const auto t = rd.keyed("box", 3);
        inst.world.box = {rd.integer<int>(t[0], "box"), rd.real(t[1], "box"), rd.real(t[2], "box")};
    }
    const std::size_t nrects = rd.count(rd.keyed("rects", 1)[0], "rects");
    for (std::size_t i = 0; i < nrects; ++i) {
        const auto t = rd.next("rect");
        if (t.size() != 4) rd.fail("rect", "expected 4 values");
        const Rect r{rd.real(t[0], "rect"), rd.real(t[1], "rect"), rd.real(t[2], "rect"), rd.real(t[3], "rect")};
        if (!r.valid()) rd.fail("rect", "min exceeds max");
        inst.obstacles.rects.push_back(r);
    }

    const std::size_t nv = rd.count(rd.keyed("V", 1)[0], "V");
    std::vector<Point2> positions;
    positions.reserve(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        const auto t = rd.next("vertex");
        if (t.size() != 3) rd.fail("vertex", "expected 'id x y'");
        if (rd.count(t[0], "vertex") != v) rd.fail("vertex", "vertex ids must be dense and in order");
        positions.push_back({rd.real(t[1], "vertex"), rd.real(t[2], "vertex")});
    }
    const std::size_t ne = rd.count(rd.keyed("E", 1)[0], "E");
    std::vector<Edge> edges;
    edges.reserve(ne);
    for (std::size_t e = 0; e < ne; ++e) {
        const auto t = rd.next("edge");
        if (t.size() != 2) rd.fail("edge", "expected 'src dst'");
        edges.push_back({rd.integer<VertexId>(t[0], "edge"), rd.integer<VertexId>(t[1], "edge")});
    }
    try {
        inst.roadmap = Roadmap(std::move(positions), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }

    const std::size_t m = rd.count(rd.keyed("A", 1)[0], "A");
    for (std::size_t i = 0; i < m; ++i) {
        const auto t = rd.next("agent");
        if (t.size() != 2) rd.fail("agent", "expected 'start goal'");
        const auto s = rd.integer<VertexId>(t[0], "agent");
        const auto g = rd.integer<VertexId>(t[1], "agent");
        if (!inst.roadmap.valid_vertex(s) || !inst.roadmap.valid_vertex(g)) {
            throw ValidationError("agent " + std::to_string(i) + " references a missing vertex");
        }
        inst.starts.push_back(s);
        inst.goals.push_back(g);
    }
    const double r = rd.real(rd.keyed("R", 1)[0], "R");
    if (!(r > 0.0)) rd.fail("R", "radius must be > 0");
    inst.radius = AgentRadius(r);
    return inst;
}

Instance read_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_instance(in, path.stem().string());
}

}  // namespace geomapf
