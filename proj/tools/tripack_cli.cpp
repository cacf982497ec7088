// Command-line front end. Talks to the core exclusively through the C API in
// tripack_c.h, the same surface out-of-tree consumers get.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tripack_c.h"

namespace {

struct GraphHandle {
    tripack_graph* ptr = nullptr;
    ~GraphHandle() { tripack_graph_free(ptr); }
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw CLI::ValidationError("input", "cannot open " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const char* text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream file(path);
    file << text << "\n";
}

int report_error(tripack_status status) {
    std::cerr << "error (" << tripack_status_name(status) << "): " << tripack_last_error()
              << "\n";
    return 1;
}

int load_graph(const std::string& input, GraphHandle& handle) {
    std::string text = read_input(input);
    tripack_status status = tripack_graph_from_json(text.c_str(), &handle.ptr);
    return status == TRIPACK_OK ? 0 : report_error(status);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"triangle packing/covering toolkit"};
    app.require_subcommand(1);
    // global flags may appear after the subcommand name
    app.fallthrough();

    std::uint64_t seed = 0;
    std::int64_t budget = 0; // 0 = library default
    std::string format = "json";
    std::string out_path;
    app.add_option("--seed", seed, "RNG seed (SplitMix64)")->capture_default_str();
    app.add_option("--budget", budget, "search node budget (0 = default)")
        ->capture_default_str();
    app.add_option("--format", format, "report format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "output file (default stdout)");

    std::string input;
    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "graph JSON file (default stdin)");
    };

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    std::string gen_kind;
    int gen_n = 10, gen_delta = 0, gen_m = 0;
    gen->add_option("kind", gen_kind, "split|tripartite")
        ->required()
        ->check(CLI::IsMember({"split", "tripartite"}));
    gen->add_option("-n,--n", gen_n, "vertex count")->required();
    gen->add_option("--delta-min", gen_delta, "minimum degree (split)");
    gen->add_option("-m,--edges", gen_m, "edge count (tripartite)");

    auto* bounds = app.add_subcommand("bounds", "print all applicable bound values");
    add_input(bounds);

    auto* color = app.add_subcommand("color", "edge coloring");
    std::string color_method = "vizing";
    color->add_option("--method", color_method, "konig|vizing|class1")
        ->check(CLI::IsMember({"konig", "vizing", "class1"}));
    add_input(color);

    auto* ffactor = app.add_subcommand("ffactor", "bipartite f-factor");
    std::string degrees_path;
    ffactor->add_option("--degrees", degrees_path, "JSON degree map file")->required();
    add_input(ffactor);

    auto* hit = app.add_subcommand("hit", "constructive triangle hitting set");
    std::string hit_method = "cut";
    hit->add_option("--method", hit_method, "clique|cut")
        ->check(CLI::IsMember({"clique", "cut"}));
    add_input(hit);

    auto* nu = app.add_subcommand("nu", "exact maximum triangle packing");
    add_input(nu);
    auto* tau = app.add_subcommand("tau", "exact minimum triangle hitting");
    add_input(tau);
    auto* maxcut = app.add_subcommand("maxcut", "exact maximum cut");
    add_input(maxcut);

    auto* certify = app.add_subcommand("certify-4partite",
                                       "tau/nu certificate for a complete 4-partite graph");
    std::string parts;
    bool with_exact = false;
    certify->add_option("--parts", parts, "a,b,c,d")->required();
    certify->add_flag("--exact", with_exact, "also run the exact oracles");

    auto* vsplit = app.add_subcommand("verify-split", "dense split graph experiment");
    auto* vtri = app.add_subcommand("verify-tripartite", "dense tripartite experiment");
    int trials = 100, n_max = 12;
    for (auto* cmd : {vsplit, vtri}) {
        cmd->add_option("--trials", trials, "instances to sample")->capture_default_str();
        cmd->add_option("--n-max", n_max, "largest vertex count")->capture_default_str();
    }

    auto* sweep = app.add_subcommand("sweep-4partite", "certify all part tuples up to a_max");
    int a_max = 6;
    sweep->add_option("--a-max", a_max, "largest part size")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    char* result = nullptr;
    int failures = 0;
    tripack_status status = TRIPACK_OK;

    if (gen->parsed()) {
        status = gen_kind == "split"
                     ? tripack_gen_split(gen_n, gen_delta, seed, &result)
                     : tripack_gen_tripartite(gen_n, gen_m, seed, &result);
    } else if (certify->parsed()) {
        int a, b, c, d;
        if (std::sscanf(parts.c_str(), "%d,%d,%d,%d", &a, &b, &c, &d) != 4) {
            std::cerr << "error: --parts expects a,b,c,d\n";
            return 1;
        }
        status = tripack_certify_4partite(a, b, c, d, with_exact ? 1 : 0, budget, &result);
    } else if (vsplit->parsed()) {
        status = tripack_verify_split(trials, n_max, seed, budget, format.c_str(), &result,
                                      &failures);
    } else if (vtri->parsed()) {
        status = tripack_verify_tripartite(trials, n_max, seed, budget, format.c_str(),
                                           &result, &failures);
    } else if (sweep->parsed()) {
        status = tripack_sweep_4partite(a_max, budget, format.c_str(), &result, &failures);
    } else {
        GraphHandle graph;
        if (int rc = load_graph(input, graph); rc != 0) return rc;
        if (bounds->parsed())
            status = tripack_bounds(graph.ptr, &result);
        else if (color->parsed())
            status = tripack_color(graph.ptr, color_method.c_str(), budget, &result);
        else if (ffactor->parsed()) {
            std::string degrees = read_input(degrees_path);
            status = tripack_f_factor(graph.ptr, degrees.c_str(), &result);
        } else if (hit->parsed())
            status = tripack_hit(graph.ptr, hit_method.c_str(), seed, &result);
        else if (nu->parsed())
            status = tripack_exact_nu(graph.ptr, budget, &result);
        else if (tau->parsed())
            status = tripack_exact_tau(graph.ptr, budget, &result);
        else if (maxcut->parsed())
            status = tripack_exact_max_cut(graph.ptr, &result);
    }

    if (status != TRIPACK_OK) return report_error(status);
    if (result) {
        write_output(out_path, result);
        tripack_string_free(result);
    }
    return failures == 0 ? 0 : 2;
}
