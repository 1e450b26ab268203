#include "geomapf/tree_log.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "geomapf/instance.hpp"

namespace geomapf {

using ojson = nlohmann::ordered_json;

std::optional<int> TreeLog::solution_id() const {
    for (const TreeRecord& r : nodes) {
        if (r.solution) return r.id;
    }
    return std::nullopt;
}

void write_tree_log(const TreeLog& log, std::ostream& out) {
    for (const TreeRecord& r : log.nodes) {
        ojson j;
        j["id"] = r.id;
        j["parent"] = r.parent < 0 ? ojson(nullptr) : ojson(r.parent);
        j["depth"] = r.depth;
        j["cost"] = r.cost;
        if (r.constraint) {
            j["constraint"] = {{"agent", r.constraint->agent}, {"vertex", r.constraint->vertex}, {"time", r.constraint->time}};
        } else {
            j["constraint"] = nullptr;
        }
        ojson paths = ojson::array();
        for (const Path& p : r.paths) paths.push_back(p.vertices);
        j["paths"] = std::move(paths);
        j["solution"] = r.solution;
        out << j.dump() << '\n';
    }
}

void write_tree_log(const TreeLog& log, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_tree_log(log, out);
}

TreeLog read_tree_log(std::istream& in) {
    TreeLog log;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const ojson j = ojson::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) throw ParseError(line_no, "record", "not a JSON object");
        std::string field = "id";
        try {
            TreeRecord r;
            r.id = j.at("id").get<int>();
            field = "parent";
            r.parent = j.at("parent").is_null() ? -1 : j.at("parent").get<int>();
            field = "depth";
            r.depth = j.at("depth").get<int>();
            field = "cost";
            r.cost = j.at("cost").get<int>();
            field = "constraint";
            if (const auto& c = j.at("constraint"); !c.is_null()) {
                r.constraint = Constraint{c.at("agent").get<int>(), c.at("vertex").get<VertexId>(), c.at("time").get<int>()};
            }
            field = "paths";
            for (const auto& p : j.at("paths")) {
                Path path{p.get<std::vector<VertexId>>()};
                if (path.vertices.empty()) throw ParseError(line_no, field, "empty path");
                r.paths.push_back(std::move(path));
            }
            field = "solution";
            r.solution = j.value("solution", false);
            log.nodes.push_back(std::move(r));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(line_no, field, e.what());
        }
    }
    return log;
}

TreeLog read_tree_log(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_tree_log(in);
}

}  // namespace geomapf
