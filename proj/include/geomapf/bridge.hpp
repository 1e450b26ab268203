#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geomapf/geometry.hpp"
#include "geomapf/line_channel.hpp"
#include "geomapf/path.hpp"
#include "geomapf/roadmap.hpp"

namespace geomapf {

/// Graph as sent to the evaluator: vertex positions and directed edges.
struct PhiGraph {
    std::vector<Point2> vertices;
    std::vector<Edge> edges;

    [[nodiscard]] static PhiGraph from_roadmap(const Roadmap& roadmap);
    friend bool operator==(const PhiGraph&, const PhiGraph&) = default;
};

struct PhiRequest {
    /// Optional cache key; evaluators may ignore it.
    std::string graph_id;
    std::shared_ptr<const PhiGraph> graph;
    std::vector<std::vector<VertexId>> paths;

    [[nodiscard]] static PhiRequest from_solution(std::shared_ptr<const PhiGraph> graph, const Solution& solution,
                                                  std::string graph_id = {});
};

/// Source of scalar heuristic values; lower means more promising.
class PhiEvaluator {
public:
    virtual ~PhiEvaluator() = default;
    virtual double eval(const PhiRequest& req) = 0;
    /// Element-wise eval, order preserved.
    virtual std::vector<double> eval_batch(std::span<const PhiRequest> reqs);
};

class ConstantPhi final : public PhiEvaluator {
public:
    explicit ConstantPhi(double value = 0.0) : value_(value) {}
    double eval(const PhiRequest&) override { return value_; }

private:
    double value_;
};

class FunctionPhi final : public PhiEvaluator {
public:
    explicit FunctionPhi(std::function<double(const PhiRequest&)> fn) : fn_(std::move(fn)) {}
    double eval(const PhiRequest& req) override { return fn_(req); }

private:
    std::function<double(const PhiRequest&)> fn_;
};

// ---- wire protocol v1 -------------------------------------------------------

inline constexpr const char* kPhiHelloName = "geo-mapf-phi";
inline constexpr int kPhiProtocolVersion = 1;

[[nodiscard]] std::string encode_hello();
/// Throws ProtocolError unless `line` is a matching hello.
void check_hello(std::string_view line);

[[nodiscard]] std::string encode_request(std::uint64_t id, const PhiRequest& req);
struct DecodedRequest {
    std::uint64_t id = 0;
    PhiRequest request;
};
/// Throws ProtocolError on malformed input.
[[nodiscard]] DecodedRequest decode_request(std::string_view line);

struct PhiResponse {
    std::uint64_t id = 0;
    std::optional<double> value;
    std::string error;
};
[[nodiscard]] std::string encode_response(std::uint64_t id, double value);
[[nodiscard]] std::string encode_error(std::optional<std::uint64_t> id, std::string_view message);
/// Throws ProtocolError on malformed input, including non-finite values.
[[nodiscard]] PhiResponse decode_response(std::string_view line);

/// Evaluator speaking protocol v1 over a LineChannel. Performs the hello
/// exchange on construction.
class PhiClient final : public PhiEvaluator {
public:
    PhiClient(std::unique_ptr<LineChannel> channel, std::chrono::milliseconds timeout);

    double eval(const PhiRequest& req) override;
    /// Pipelines all requests, then collects responses matched by id.
    std::vector<double> eval_batch(std::span<const PhiRequest> reqs) override;

private:
    std::unique_ptr<LineChannel> channel_;
    std::chrono::milliseconds timeout_;
    std::uint64_t next_id_ = 1;
};

[[nodiscard]] std::unique_ptr<PhiClient> connect_phi(const std::string& endpoint,
                                                     std::chrono::milliseconds timeout = std::chrono::seconds(30));

/// Reference server loop: answers the hello, then one response per request
/// line until end of stream. Malformed requests and evaluator exceptions get
/// error responses; the session continues.
void serve_phi(LineChannel& channel, const std::function<double(const PhiRequest&)>& evaluate);

}  // namespace geomapf
