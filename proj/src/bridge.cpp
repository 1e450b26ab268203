#include "geomapf/bridge.hpp"

#include <cmath>
#include <unordered_map>

#include <json.hpp>

namespace geomapf {

using ojson = nlohmann::ordered_json;

PhiGraph PhiGraph::from_roadmap(const Roadmap& roadmap) { return {roadmap.positions(), roadmap.edges()}; }

PhiRequest PhiRequest::from_solution(std::shared_ptr<const PhiGraph> graph, const Solution& solution,
                                     std::string graph_id) {
    PhiRequest req;
    req.graph_id = std::move(graph_id);
    req.graph = std::move(graph);
    req.paths.reserve(solution.size());
    for (const Path& p : solution) req.paths.push_back(p.vertices);
    return req;
}

std::vector<double> PhiEvaluator::eval_batch(std::span<const PhiRequest> reqs) {
    std::vector<double> out;
    out.reserve(reqs.size());
    for (const PhiRequest& r : reqs) out.push_back(eval(r));
    return out;
}

std::string encode_hello() {
    ojson j;
    j["hello"] = kPhiHelloName;
    j["version"] = kPhiProtocolVersion;
    return j.dump();
}

void check_hello(std::string_view line) {
    const ojson j = ojson::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw ProtocolError("hello is not a JSON object");
    const auto name = j.find("hello");
    const auto version = j.find("version");
    if (name == j.end() || !name->is_string() || name->get<std::string>() != kPhiHelloName) {
        throw ProtocolError("unexpected hello name");
    }
    if (version == j.end() || !version->is_number_integer() || version->get<int>() != kPhiProtocolVersion) {
        throw ProtocolError("unsupported protocol version");
    }
}

std::string encode_request(std::uint64_t id, const PhiRequest& req) {
    ojson v = ojson::array();
    ojson e = ojson::array();
    if (req.graph) {
        for (const Point2& p : req.graph->vertices) v.push_back({p.x, p.y});
        for (const Edge& edge : req.graph->edges) e.push_back({edge.src, edge.dst});
    }
    ojson j;
    j["id"] = id;
    j["graph"] = ojson::object();
    j["graph"]["v"] = std::move(v);
    j["graph"]["e"] = std::move(e);
    j["paths"] = req.paths;
    if (!req.graph_id.empty()) j["graph_id"] = req.graph_id;
    return j.dump();
}

DecodedRequest decode_request(std::string_view line) {
    const ojson j = ojson::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw ProtocolError("request is not a JSON object");
    try {
        DecodedRequest out;
        out.id = j.at("id").get<std::uint64_t>();
        auto graph = std::make_shared<PhiGraph>();
        for (const auto& p : j.at("graph").at("v")) {
            if (p.size() != 2) throw ProtocolError("vertex must be [x, y]");
            graph->vertices.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
        }
        const auto n = static_cast<VertexId>(graph->vertices.size());
        auto check_id = [n](VertexId v) {
            if (v < 0 || v >= n) throw ProtocolError("vertex id " + std::to_string(v) + " out of range");
            return v;
        };
        for (const auto& e : j.at("graph").at("e")) {
            if (e.size() != 2) throw ProtocolError("edge must be [src, dst]");
            graph->edges.push_back({check_id(e.at(0).get<VertexId>()), check_id(e.at(1).get<VertexId>())});
        }
        for (const auto& p : j.at("paths")) {
            std::vector<VertexId> path;
            for (const auto& v : p) path.push_back(check_id(v.get<VertexId>()));
            if (path.empty()) throw ProtocolError("empty path");
            out.request.paths.push_back(std::move(path));
        }
        if (const auto gid = j.find("graph_id"); gid != j.end()) out.request.graph_id = gid->get<std::string>();
        out.request.graph = std::move(graph);
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ProtocolError(std::string("malformed request: ") + e.what());
    }
}

std::string encode_response(std::uint64_t id, double value) {
    ojson j;
    j["id"] = id;
    j["value"] = value;
    return j.dump();
}

std::string encode_error(std::optional<std::uint64_t> id, std::string_view message) {
    ojson j;
    if (id) {
        j["id"] = *id;
    } else {
        j["id"] = nullptr;
    }
    j["error"] = std::string(message);
    return j.dump();
}

PhiResponse decode_response(std::string_view line) {
    const ojson j = ojson::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw ProtocolError("response is not a JSON object");
    const auto id = j.find("id");
    if (id == j.end() || !id->is_number_unsigned()) throw ProtocolError("response without a valid id");
    PhiResponse r;
    r.id = id->get<std::uint64_t>();
    if (const auto err = j.find("error"); err != j.end()) {
        r.error = err->is_string() ? err->get<std::string>() : err->dump();
        return r;
    }
    const auto value = j.find("value");
    if (value == j.end() || !value->is_number()) throw ProtocolError("response has neither value nor error");
    const double v = value->get<double>();
    if (!std::isfinite(v)) throw ProtocolError("non-finite value");
    r.value = v;
    return r;
}

PhiClient::PhiClient(std::unique_ptr<LineChannel> channel, std::chrono::milliseconds timeout)
    : channel_(std::move(channel)), timeout_(timeout) {
    channel_->write_line(encode_hello());
    const auto line = channel_->read_line(timeout_);
    if (!line) throw TransportError("evaluator closed the connection during hello");
    check_hello(*line);
}

double PhiClient::eval(const PhiRequest& req) { return eval_batch(std::span<const PhiRequest>(&req, 1)).front(); }

std::vector<double> PhiClient::eval_batch(std::span<const PhiRequest> reqs) {
    std::unordered_map<std::uint64_t, std::size_t> slot;
    for (std::size_t k = 0; k < reqs.size(); ++k) {
        const std::uint64_t id = next_id_++;
        slot.emplace(id, k);
        channel_->write_line(encode_request(id, reqs[k]));
    }
    std::vector<double> out(reqs.size(), 0.0);
    std::string first_error;
    for (std::size_t k = 0; k < reqs.size(); ++k) {
        const auto line = channel_->read_line(timeout_);
        if (!line) throw TransportError("evaluator closed the connection");
        const PhiResponse resp = decode_response(*line);
        const auto it = slot.find(resp.id);
        if (it == slot.end()) throw ProtocolError("response for unknown id " + std::to_string(resp.id));
        if (resp.value) {
            out[it->second] = *resp.value;
        } else if (first_error.empty()) {
            first_error = resp.error.empty() ? "unspecified evaluator error" : resp.error;
        }
        slot.erase(it);
    }
    if (!first_error.empty()) throw EvaluatorError(first_error);
    return out;
}

std::unique_ptr<PhiClient> connect_phi(const std::string& endpoint, std::chrono::milliseconds timeout) {
    return std::make_unique<PhiClient>(LineChannel::connect(endpoint), timeout);
}

void serve_phi(LineChannel& channel, const std::function<double(const PhiRequest&)>& evaluate) {
    const auto hello = channel.read_line();
    if (!hello) return;
    try {
        check_hello(*hello);
    } catch (const ProtocolError& e) {
        channel.write_line(encode_error(std::nullopt, e.what()));
        return;
    }
    channel.write_line(encode_hello());
    while (const auto line = channel.read_line()) {
        std::optional<std::uint64_t> id;
        try {
            DecodedRequest req = decode_request(*line);
            id = req.id;
            const double value = evaluate(req.request);
            if (!std::isfinite(value)) throw std::runtime_error("evaluator produced a non-finite value");
            channel.write_line(encode_response(req.id, value));
        } catch (const std::exception& e) {
            if (!id) {
                // Recover the id from a structurally broken request if possible.
                const ojson j = ojson::parse(*line, nullptr, false);
                if (j.is_object() && j.contains("id") && j["id"].is_number_unsigned()) id = j["id"].get<std::uint64_t>();
            }
            channel.write_line(encode_error(id, e.what()));
        }
    }
}

}  // namespace geomapf
