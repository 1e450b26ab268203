#include <doctest.h>

#include <random>
#include <thread>

#include "geomapf/bridge.hpp"
#include "support.hpp"

using namespace geomapf;
using namespace std::chrono_literals;

namespace {

std::shared_ptr<const PhiGraph> tiny_graph() {
    return std::make_shared<const PhiGraph>(PhiGraph{{{0, 0}, {1, 0.5}}, {{0, 1}, {1, 1}}});
}

PhiRequest tiny_request() {
    PhiRequest r;
    r.graph = tiny_graph();
    r.paths = {{0, 1}, {1}};
    return r;
}

// Runs serve_phi on one end of a socket pair in a thread; the client end is
// handed out. The server ends when the client closes.
class TestServer {
public:
    explicit TestServer(std::function<double(const PhiRequest&)> fn) {
        auto [client, server] = LineChannel::make_pair();
        client_ = std::move(client);
        server_ = std::move(server);
        thread_ = std::thread([this, fn = std::move(fn)] { serve_phi(*server_, fn); });
    }
    ~TestServer() {
        if (client_) client_->close_write();
        client_.reset();
        thread_.join();
    }
    std::unique_ptr<LineChannel> take_client() { return std::move(client_); }

private:
    std::unique_ptr<LineChannel> client_;
    std::unique_ptr<LineChannel> server_;
    std::thread thread_;
};

// A hand-scripted peer: answers the hello, then runs `script` with its channel.
class ScriptedPeer {
public:
    explicit ScriptedPeer(std::function<void(LineChannel&)> script) {
        auto [client, server] = LineChannel::make_pair();
        client_ = std::move(client);
        server_ = std::move(server);
        thread_ = std::thread([this, script = std::move(script)] {
            try {
                if (server_->read_line(5s)) server_->write_line(encode_hello());
                script(*server_);
            } catch (const BridgeError&) {
            }
            server_->close_write();
        });
    }
    ~ScriptedPeer() { thread_.join(); }
    std::unique_ptr<LineChannel> take_client() { return std::move(client_); }

private:
    std::unique_ptr<LineChannel> client_;
    std::unique_ptr<LineChannel> server_;
    std::thread thread_;
};

}  // namespace

TEST_CASE("wire format is fixed") {
    CHECK(encode_hello() == R"({"hello":"geo-mapf-phi","version":1})");
    CHECK(encode_request(7, tiny_request()) ==
          R"({"id":7,"graph":{"v":[[0.0,0.0],[1.0,0.5]],"e":[[0,1],[1,1]]},"paths":[[0,1],[1]]})");
    PhiRequest with_id = tiny_request();
    with_id.graph_id = "g1";
    CHECK(encode_request(8, with_id) ==
          R"({"id":8,"graph":{"v":[[0.0,0.0],[1.0,0.5]],"e":[[0,1],[1,1]]},"paths":[[0,1],[1]],"graph_id":"g1"})");
    CHECK(encode_response(3, 0.25) == R"({"id":3,"value":0.25})");
    CHECK(encode_error(3, "bad") == R"({"id":3,"error":"bad"})");
    CHECK(encode_error(std::nullopt, "bad") == R"({"id":null,"error":"bad"})");
}

TEST_CASE("request encoding round-trips bit-exactly") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    auto graph = std::make_shared<PhiGraph>();
    for (int i = 0; i < 50; ++i) graph->vertices.push_back({u(rng), u(rng)});
    for (int i = 0; i < 50; ++i) graph->edges.push_back({i, (i * 7) % 50});
    PhiRequest req;
    req.graph = graph;
    req.paths = {{1, 2, 3}, {49}, {0, 0, 0, 7}};
    req.graph_id = "abc";
    const DecodedRequest back = decode_request(encode_request(99, req));
    CHECK(back.id == 99);
    CHECK(*back.request.graph == *graph);
    CHECK(back.request.paths == req.paths);
    CHECK(back.request.graph_id == "abc");
}

TEST_CASE("malformed messages are protocol errors") {
    CHECK_THROWS_AS(check_hello(R"({"hello":"other","version":1})"), ProtocolError);
    CHECK_THROWS_AS(check_hello(R"({"hello":"geo-mapf-phi","version":2})"), ProtocolError);
    CHECK_THROWS_AS(check_hello("nope"), ProtocolError);
    CHECK_THROWS_AS((void)decode_request(R"({"id":1,"graph":{"v":[[0,0]],"e":[[0,3]]},"paths":[[0]]})"), ProtocolError);
    CHECK_THROWS_AS((void)decode_request(R"({"id":1,"graph":{"v":[[0,0]],"e":[]},"paths":[[]]})"), ProtocolError);
    CHECK_THROWS_AS((void)decode_request(R"({"graph":{"v":[],"e":[]},"paths":[]})"), ProtocolError);
    CHECK_THROWS_AS((void)decode_response(R"({"id":1})"), ProtocolError);
    CHECK_THROWS_AS((void)decode_response(R"({"value":1.0})"), ProtocolError);
    CHECK_THROWS_AS((void)decode_response(R"({"id":1,"value":1e999})"), ProtocolError);
    CHECK_THROWS_AS((void)decode_response("[1,2]"), ProtocolError);
    const PhiResponse err = decode_response(R"({"id":4,"error":"boom"})");
    CHECK(err.id == 4);
    CHECK_FALSE(err.value);
    CHECK(err.error == "boom");
}

TEST_CASE("echo server sees exactly what was sent") {
    PhiRequest seen;
    TestServer server([&](const PhiRequest& r) {
        seen = r;
        return 1.5;
    });
    PhiClient client(server.take_client(), 5s);
    const PhiRequest req = tiny_request();
    CHECK(client.eval(req) == 1.5);
    REQUIRE(seen.graph);
    CHECK(*seen.graph == *req.graph);
    CHECK(seen.paths == req.paths);
}

TEST_CASE("zero stub and batch semantics") {
    TestServer zero([](const PhiRequest&) { return 0.0; });
    PhiClient z(zero.take_client(), 5s);
    CHECK(z.eval(tiny_request()) == 0.0);

    // Value identifies the request so order can be checked.
    TestServer server([](const PhiRequest& r) { return static_cast<double>(r.paths[0].size()); });
    PhiClient client(server.take_client(), 5s);
    CHECK(client.eval_batch({}).empty());

    std::vector<PhiRequest> batch;
    for (int k = 1; k <= 6; ++k) {
        PhiRequest r = tiny_request();
        r.paths[0] = std::vector<VertexId>(static_cast<std::size_t>(k), 0);
        batch.push_back(r);
    }
    const auto values = client.eval_batch(batch);
    REQUIRE(values.size() == 6);
    for (int k = 0; k < 6; ++k) CHECK(values[static_cast<std::size_t>(k)] == k + 1);
    CHECK(client.eval_batch(std::span(&batch[2], 1)).front() == client.eval(batch[2]));
    const std::vector<PhiRequest> dup{batch[3], batch[3]};
    const auto two = client.eval_batch(dup);
    CHECK(two[0] == two[1]);
}

TEST_CASE("responses may arrive out of order") {
    ScriptedPeer peer([](LineChannel& ch) {
        const auto a = decode_request(*ch.read_line(5s));
        const auto b = decode_request(*ch.read_line(5s));
        ch.write_line(encode_response(b.id, 2.0));
        ch.write_line(encode_response(a.id, 1.0));
    });
    PhiClient client(peer.take_client(), 5s);
    const std::vector<PhiRequest> batch{tiny_request(), tiny_request()};
    CHECK(client.eval_batch(batch) == std::vector<double>{1.0, 2.0});
}

TEST_CASE("evaluator errors keep the session alive") {
    int calls = 0;
    TestServer server([&](const PhiRequest&) -> double {
        if (calls++ == 0) throw std::runtime_error("first call fails");
        return 3.0;
    });
    PhiClient client(server.take_client(), 5s);
    CHECK_THROWS_AS((void)client.eval(tiny_request()), EvaluatorError);
    CHECK(client.eval(tiny_request()) == 3.0);
}

TEST_CASE("failure kinds are distinct") {
    SUBCASE("transport: nothing listening") {
        CHECK_THROWS_AS((void)connect_phi("unix:/nonexistent/geomapf.sock", 1s), TransportError);
        CHECK_THROWS_AS((void)connect_phi("tcp:127.0.0.1:1", 1s), TransportError);
        CHECK_THROWS_AS((void)connect_phi("carrier-pigeon:home", 1s), TransportError);
    }
    SUBCASE("transport: peer hangs up mid-session") {
        ScriptedPeer peer([](LineChannel& ch) { (void)ch.read_line(5s); });
        PhiClient client(peer.take_client(), 5s);
        CHECK_THROWS_AS((void)client.eval(tiny_request()), TransportError);
    }
    SUBCASE("protocol: garbage response") {
        ScriptedPeer peer([](LineChannel& ch) {
            (void)ch.read_line(5s);
            ch.write_line("this is not json");
        });
        PhiClient client(peer.take_client(), 5s);
        CHECK_THROWS_AS((void)client.eval(tiny_request()), ProtocolError);
    }
    SUBCASE("protocol: response for an unknown id") {
        ScriptedPeer peer([](LineChannel& ch) {
            (void)ch.read_line(5s);
            ch.write_line(encode_response(12345, 1.0));
        });
        PhiClient client(peer.take_client(), 5s);
        CHECK_THROWS_AS((void)client.eval(tiny_request()), ProtocolError);
    }
    SUBCASE("protocol: wrong hello") {
        auto [client, server] = LineChannel::make_pair();
        std::thread t([&server = server] {
            (void)server->read_line(5s);
            server->write_line(R"({"hello":"geo-mapf-phi","version":9})");
        });
        CHECK_THROWS_AS(PhiClient(std::move(client), 5s), ProtocolError);
        t.join();
    }
    SUBCASE("evaluator error") {
        TestServer server([](const PhiRequest&) -> double { throw std::runtime_error("no model loaded"); });
        PhiClient client(server.take_client(), 5s);
        try {
            (void)client.eval(tiny_request());
            FAIL("expected an evaluator error");
        } catch (const EvaluatorError& e) {
            CHECK(std::string(e.what()).find("no model loaded") != std::string::npos);
        }
    }
    SUBCASE("timeout") {
        ScriptedPeer peer([](LineChannel& ch) {
            (void)ch.read_line(5s);
            std::this_thread::sleep_for(600ms);
        });
        PhiClient client(peer.take_client(), 200ms);
        CHECK_THROWS_AS((void)client.eval(tiny_request()), TimeoutError);
    }
}

TEST_CASE("line channel framing") {
    auto [a, b] = LineChannel::make_pair();
    a->write_line("first");
    a->write_line("");
    a->write_line(std::string(100000, 'x'));
    CHECK(*b->read_line(1s) == "first");
    CHECK(*b->read_line(1s) == "");
    CHECK(b->read_line(1s)->size() == 100000);
    CHECK_THROWS_AS(a->write_line("two\nlines"), std::invalid_argument);
    a->close_write();
    CHECK_FALSE(b->read_line(1s));
}
