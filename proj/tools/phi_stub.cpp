// Minimal heuristic evaluator speaking wire protocol v1 on stdin/stdout.
// Stands in for the learned model in end-to-end tests.

#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "geomapf/bridge.hpp"

using namespace geomapf;

int main(int argc, char** argv) {
    CLI::App app{"Stub heuristic evaluator"};
    std::string mode = "flowtime";
    double value = 0.0;
    app.add_option("--mode", mode, "zero | constant | flowtime | error")
        ->check(CLI::IsMember({"zero", "constant", "flowtime", "error"}));
    app.add_option("--value", value, "Value returned in constant mode");
    CLI11_PARSE(app, argc, argv);

    LineChannel channel(0, 1, /*owns=*/false);
    serve_phi(channel, [&](const PhiRequest& req) -> double {
        if (mode == "zero") return 0.0;
        if (mode == "constant") return value;
        if (mode == "error") throw std::runtime_error("stub configured to fail");
        double total = 0.0;
        for (const auto& p : req.paths) total += static_cast<double>(p.size()) - 1.0;
        return total;
    });
    return 0;
}
