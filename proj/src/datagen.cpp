#include "geomapf/datagen.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace geomapf {

std::vector<Sample> label_tree(const TreeLog& log, std::optional<int> solved_leaf, const std::string& instance_id) {
    if (!solved_leaf) return {};

    std::unordered_map<int, const TreeRecord*> by_id;
    for (const TreeRecord& r : log.nodes) {
        if (!by_id.emplace(r.id, &r).second) throw DatasetError("duplicate node id " + std::to_string(r.id));
    }
    auto find = [&](int id) -> const TreeRecord& {
        const auto it = by_id.find(id);
        if (it == by_id.end()) throw DatasetError("tree log references missing node " + std::to_string(id));
        return *it->second;
    };
    std::unordered_map<int, std::vector<int>> children;
    for (const TreeRecord& r : log.nodes) {
        if (r.parent < 0) {
            if (r.depth != 0) throw DatasetError("root node " + std::to_string(r.id) + " has non-zero depth");
            continue;
        }
        if (r.depth != find(r.parent).depth + 1) {
            throw DatasetError("node " + std::to_string(r.id) + " depth is not parent depth + 1");
        }
        children[r.parent].push_back(r.id);
    }

    std::vector<int> chain;
    for (int cur = *solved_leaf;;) {
        chain.push_back(cur);
        const int parent = find(cur).parent;
        if (parent < 0) break;
        if (chain.size() > log.nodes.size()) throw DatasetError("cycle in tree log");
        cur = parent;
    }
    std::reverse(chain.begin(), chain.end());
    const std::set<int> positive(chain.begin(), chain.end());

    std::vector<Sample> out;
    for (int id : chain) out.push_back({instance_id, find(id).paths, find(id).depth, Label::Positive});
    for (int id : chain) {
        const int parent = find(id).parent;
        if (parent < 0) continue;
        for (int sib : children[parent]) {
            if (!positive.contains(sib)) out.push_back({instance_id, find(sib).paths, find(sib).depth, Label::Negative});
        }
    }
    return out;
}

bool valid_pair(const Sample& positive, const Sample& negative) {
    return positive.instance_id == negative.instance_id && positive.depth >= negative.depth;
}

std::vector<Sample> collect_samples(const Instance& inst, double timeout_s) {
    SolveOptions opts;
    opts.timeout_s = timeout_s;
    opts.record_tree = true;
    const SolveResult r = cbs_solve(inst, opts);
    if (!r.solved() || !r.tree) return {};
    return label_tree(*r.tree, r.tree->solution_id(), inst.id);
}

namespace {

std::string label_name(Label l) { return l == Label::Positive ? "positive" : "negative"; }

void write_samples(std::ostream& out, const std::string& id, const std::vector<const Sample*>& samples) {
    out << kDatasetHeader << '\n';
    out << "instance " << id << '\n';
    out << "S " << samples.size() << '\n';
    for (const Sample* s : samples) {
        out << "sample " << label_name(s->label) << ' ' << s->depth << ' ' << s->solution.size() << '\n';
        for (const Path& p : s->solution) {
            out << p.vertices.size();
            for (VertexId v : p.vertices) out << ' ' << v;
            out << '\n';
        }
    }
}

// Tokenised line reader for the sample files.
struct Lines {
    std::istream& in;
    int line = 0;

    std::vector<std::string> next(const std::string& field) {
        std::string text;
        while (std::getline(in, text)) {
            ++line;
            std::istringstream ss(text);
            std::vector<std::string> tok;
            for (std::string t; ss >> t;) tok.push_back(t);
            if (!tok.empty()) return tok;
        }
        throw ParseError(line + 1, field, "unexpected end of file");
    }

    long number(const std::string& tok, const std::string& field) const {
        try {
            std::size_t used = 0;
            const long v = std::stol(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw ParseError(line, field, "not an integer: '" + tok + "'");
        }
    }
};

std::vector<Sample> read_samples(std::istream& in, const Instance& inst) {
    Lines rd{in};
    {
        const auto t = rd.next("header");
        if (t.size() != 2 || t[0] + " " + t[1] != kDatasetHeader) {
            throw ParseError(rd.line, "header", std::string("expected '") + kDatasetHeader + "'");
        }
    }
    {
        const auto t = rd.next("instance");
        if (t.size() != 2 || t[0] != "instance") throw ParseError(rd.line, "instance", "expected 'instance <id>'");
        if (t[1] != inst.id) throw ParseError(rd.line, "instance", "id does not match file name");
    }
    const auto st = rd.next("S");
    if (st.size() != 2 || st[0] != "S") throw ParseError(rd.line, "S", "expected 'S <count>'");
    const long count = rd.number(st[1], "S");

    std::vector<Sample> out;
    for (long k = 0; k < count; ++k) {
        const auto t = rd.next("sample");
        if (t.size() != 4 || t[0] != "sample") throw ParseError(rd.line, "sample", "expected 'sample <label> <depth> <M>'");
        Sample s;
        s.instance_id = inst.id;
        if (t[1] == "positive") {
            s.label = Label::Positive;
        } else if (t[1] == "negative") {
            s.label = Label::Negative;
        } else {
            throw ParseError(rd.line, "label", "unknown label '" + t[1] + "'");
        }
        s.depth = static_cast<int>(rd.number(t[2], "depth"));
        if (s.depth < 0) throw ParseError(rd.line, "depth", "negative depth");
        const long m = rd.number(t[3], "M");
        if (m != inst.num_agents()) throw DatasetError("sample agent count does not match instance " + inst.id);
        for (long a = 0; a < m; ++a) {
            const auto p = rd.next("path");
            const long len = rd.number(p[0], "path");
            if (len < 1 || static_cast<long>(p.size()) != len + 1) throw ParseError(rd.line, "path", "length mismatch");
            Path path;
            for (long i = 1; i <= len; ++i) {
                const auto v = static_cast<VertexId>(rd.number(p[static_cast<std::size_t>(i)], "path"));
                if (!inst.roadmap.valid_vertex(v)) throw DatasetError("path vertex out of range in " + inst.id);
                if (!path.vertices.empty() && !inst.roadmap.has_edge(path.vertices.back(), v)) {
                    throw DatasetError("sample path uses a missing edge in " + inst.id);
                }
                path.vertices.push_back(v);
            }
            s.solution.push_back(std::move(path));
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

void export_dataset(const std::vector<Sample>& samples, const std::map<std::string, Instance>& instances,
                    const std::filesystem::path& dir) {
    std::map<std::string, std::vector<const Sample*>> grouped;
    for (const auto& [id, inst] : instances) grouped[id];
    for (const Sample& s : samples) {
        if (!instances.contains(s.instance_id)) throw DatasetError("sample references unknown instance " + s.instance_id);
        grouped[s.instance_id].push_back(&s);
    }
    std::filesystem::create_directories(dir);
    std::ofstream manifest(dir / "MANIFEST");
    if (!manifest) throw std::runtime_error("cannot write " + (dir / "MANIFEST").string());
    manifest << kDatasetHeader << '\n' << "instances " << grouped.size() << '\n';
    for (const auto& [id, group] : grouped) {
        manifest << id << '\n';
        write_instance(instances.at(id), dir / (id + ".inst"));
        std::ofstream out(dir / (id + ".samples"));
        if (!out) throw std::runtime_error("cannot write samples for " + id);
        write_samples(out, id, group);
    }
}

Dataset import_dataset(const std::filesystem::path& dir) {
    std::ifstream manifest(dir / "MANIFEST");
    if (!manifest) throw DatasetError("no MANIFEST in " + dir.string());
    Lines rd{manifest};
    {
        const auto t = rd.next("header");
        if (t.size() != 2 || t[0] + " " + t[1] != kDatasetHeader) {
            throw ParseError(rd.line, "header", std::string("expected '") + kDatasetHeader + "'");
        }
    }
    const auto ct = rd.next("instances");
    if (ct.size() != 2 || ct[0] != "instances") throw ParseError(rd.line, "instances", "expected 'instances <n>'");
    const long n = rd.number(ct[1], "instances");

    Dataset ds;
    for (long k = 0; k < n; ++k) {
        const auto t = rd.next("instance id");
        const std::string id = t[0];
        const auto inst_path = dir / (id + ".inst");
        if (!std::filesystem::exists(inst_path)) throw DatasetError("missing instance file " + inst_path.string());
        Instance inst = read_instance(inst_path);
        std::ifstream in(dir / (id + ".samples"));
        if (!in) throw DatasetError("missing sample file for " + id);
        std::vector<Sample> samples = read_samples(in, inst);
        ds.samples.insert(ds.samples.end(), std::make_move_iterator(samples.begin()), std::make_move_iterator(samples.end()));
        ds.instances.emplace(id, std::move(inst));
    }
    return ds;
}

}  // namespace geomapf
