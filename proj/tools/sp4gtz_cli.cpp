// Command-line front end: enumerate bases, emit vectors and matrices, run
// the verification suite, and decompose polynomial solutions.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "sp4gtz/json_io.hpp"
#include "sp4gtz/verification.hpp"

namespace {

using namespace sp4gtz;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitTheorem = 3;

void emit(const Json& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << payload.dump(2) << "\n";
    }
}

HighestWeight weight_of(const std::vector<int>& w) {
    if (w.size() != 2) throw std::invalid_argument("--weight expects two integers");
    HighestWeight hw{w[0], w[1]};
    if (!hw.valid()) throw std::invalid_argument("invalid weight: need m(-2) >= m(-1) >= 0");
    return hw;
}

int run_basis(const std::vector<int>& w, const std::string& out) {
    const auto hw = weight_of(w);
    Json diagrams = Json::array();
    for (const auto& d : enumerate_diagrams(hw))
        diagrams.push_back({{"diagram", diagram_to_json(d)}, {"shift", exponents_to_json(diagram_to_shift(d))}});
    emit(Json{{"schema", kSchemaVersion},
              {"command", "basis"},
              {"weight", Json::array({hw.m2, hw.m1})},
              {"dimension", diagrams.size()},
              {"diagrams", diagrams}},
         out);
    return kExitOk;
}

int run_vector(const std::vector<int>& dspec, const std::string& out) {
    if (dspec.size() != 6) throw std::invalid_argument("--diagram expects six integers");
    const auto d = GTZDiagram::from_entries({dspec[0], dspec[1], dspec[2], dspec[3], dspec[4], dspec[5]});
    if (!d.valid()) throw std::invalid_argument("diagram violates the betweenness conditions");
    const auto g = diagram_to_shift(d);
    const auto sol = f_graded(g);
    const auto realization = zhelobenko_vector(d);
    Json payload = Json{{"schema", kSchemaVersion},
                        {"command", "vector"},
                        {"diagram", diagram_to_json(d)},
                        {"shift", exponents_to_json(g)},
                        {"series", poly_to_json(gamma_series_poly(g))},
                        {"layers", graded_solution_to_json(sol)["layers"]},
                        {"realization", entry_poly_to_json(realization)}};
    emit(payload, out);
    return kExitOk;
}

int run_matrix(const std::vector<int>& w, const std::string& gen_name, const std::string& out) {
    const auto hw = weight_of(w);
    const auto gen = parse_generator(gen_name);
    if (!gen) {
        std::string names;
        for (Generator g : kGenerators) names += (names.empty() ? "" : ", ") + generator_name(g);
        throw std::invalid_argument("unknown generator '" + gen_name + "'; supported: " + names);
    }
    emit(matrix_to_json(generator_matrix(hw, *gen)), out);
    return kExitOk;
}

int run_verify(std::optional<HighestWeight> single, int max_weight, const std::string& out) {
    if (max_weight < 0) throw std::invalid_argument("--max-weight must be nonnegative");
    const auto report = single ? run_verification_single(*single) : run_verification(max_weight);
    emit(verification_to_json(report, single ? single->m2 : max_weight), out);
    return report.all_pass() ? kExitOk : kExitVerification;
}

int run_decompose(const std::string& in_path, const std::string& out) {
    Json j;
    if (in_path.empty()) {
        j = Json::parse(std::cin);
    } else {
        std::ifstream f(in_path);
        if (!f) throw std::invalid_argument("cannot open input file: " + in_path);
        j = Json::parse(f);
    }
    const SparsePoly p = poly_from_json(j.is_object() && j.contains("poly") ? j["poly"] : j);
    Json components = Json::array();
    for (const auto& [g, c] : decompose(p)) {
        const auto d = shift_to_diagram(g);
        components.push_back({{"diagram", d ? diagram_to_json(*d) : Json(nullptr)},
                              {"shift", exponents_to_json(g)},
                              {"coeff", to_string(c)}});
    }
    emit(Json{{"schema", kSchemaVersion}, {"command", "decompose"}, {"components", components}}, out);
    return kExitOk;
}

Json error_json(const std::string& kind, const std::string& message) {
    return Json{{"schema", kSchemaVersion}, {"error", {{"kind", kind}, {"message", message}}}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gelfand-Tsetlin-Zhelobenko bases for sp4: series, vectors, generator matrices"};
    app.require_subcommand(1);

    std::vector<int> weight, diagram;
    std::string generator, out_path, in_path;
    int max_weight = 3;

    auto* basis = app.add_subcommand("basis", "list the diagrams and canonical shifts of a weight");
    basis->add_option("--weight", weight, "highest weight m(-2) m(-1)")->expected(2)->required();
    basis->add_option("--out", out_path, "write JSON to a file instead of stdout");

    auto* vector = app.add_subcommand("vector", "emit the graded solution and realization of one diagram");
    vector->add_option("--diagram", diagram, "six entries m(-2) m(-1) k(-2) k(-1) h(-2) h(-1)")->expected(6)->required();
    vector->add_option("--out", out_path, "write JSON to a file instead of stdout");

    auto* matrix = app.add_subcommand("matrix", "emit one generator matrix on one weight space");
    matrix->add_option("--weight", weight, "highest weight m(-2) m(-1)")->expected(2)->required();
    matrix->add_option("--generator", generator, "generator name, e.g. \"F(-2,1)\"")->required();
    matrix->add_option("--out", out_path, "write JSON to a file instead of stdout");

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--weight", weight, "single weight to verify (m(-2) m(-1)); verifies all up to m(-2) otherwise")
        ->expected(2);
    verify->add_option("--max-weight", max_weight, "verify all weights with m(-2) up to this bound");
    verify->add_option("--out", out_path, "write JSON to a file instead of stdout");

    auto* decomp = app.add_subcommand("decompose", "decompose a polynomial solution read from stdin or --in");
    decomp->add_option("--in", in_path, "read the polynomial JSON from a file instead of stdin");
    decomp->add_option("--out", out_path, "write JSON to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() != 0) {
            std::cout << error_json("usage", e.what()).dump(2) << "\n";
            return kExitUsage;
        }
        return app.exit(e); // --help
    }

    try {
        if (basis->parsed()) return run_basis(weight, out_path);
        if (vector->parsed()) return run_vector(diagram, out_path);
        if (matrix->parsed()) return run_matrix(weight, generator, out_path);
        if (verify->parsed()) {
            std::optional<HighestWeight> single;
            if (!weight.empty()) single = weight_of(weight);
            return run_verify(single, max_weight, out_path);
        }
        if (decomp->parsed()) return run_decompose(in_path, out_path);
        std::cout << error_json("usage", "no subcommand").dump(2) << "\n";
        return kExitUsage;
    } catch (const sp4gtz::TheoremViolation& e) {
        std::cout << error_json("theorem-violation", e.what()).dump(2) << "\n";
        return kExitTheorem;
    } catch (const std::invalid_argument& e) {
        std::cout << error_json("usage", e.what()).dump(2) << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cout << error_json("internal", e.what()).dump(2) << "\n";
        return kExitTheorem;
    }
}
