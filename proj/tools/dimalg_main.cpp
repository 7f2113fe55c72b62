// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0
//
// dimalg: verification and computation over .dimalg structure files.
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2
// operational error (bad usage, unreadable file, parse failure).

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dimalg/dsl.hpp"
#include "dimalg/errors.hpp"
#include "dimalg/report.hpp"

using namespace dimalg;

namespace {

struct CommonOpts {
    std::string file;
    bool json = false;
    std::uint64_t seed = kDefaultSeed;
    std::int64_t samples = 200;
};

std::string basename_of(const std::string& path) {
    return std::filesystem::path(path).filename().string();
}

Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw dimalg::Error("cannot open file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    ParseResult result = parse(buffer.str());
    if (!result.ok()) {
        std::ostringstream os;
        os << basename_of(path) << ": parse failed";
        for (const auto& d : result.diagnostics) {
            os << "\n  " << d.render();
            std::cerr << basename_of(path) << ":" << d.render() << "\n";
        }
        throw Error(os.str());
    }
    return std::move(*result.document);
}

int finish(RunReport& report, const CommonOpts& opts,
           std::chrono::steady_clock::time_point start) {
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (opts.json)
        std::cout << report.to_json();
    else
        std::cout << report.human();
    return report.exit_code();
}

template <typename Body>
int run_command(RunReport& report, const CommonOpts& opts, Body body) {
    auto start = std::chrono::steady_clock::now();
    try {
        body();
    } catch (const dimalg::MathFailure& e) {
        report.status = "fail";
        report.message = e.what();
        if (report.counterexample.empty())
            report.counterexample = e.what();
    } catch (const std::exception& e) {
        report.status = "error";
        report.message = e.what();
        std::cerr << "error: " << e.what() << "\n";
    }
    return finish(report, opts, start);
}

void emit_spec(RunReport& report, const BracketSpec& spec, const std::string& model_name,
               const std::string& bracket_name, const std::string& out_path) {
    Document doc = document_for_bracket(model_name, bracket_name, spec);
    std::ofstream out(out_path);
    if (!out)
        throw dimalg::Error("cannot write '" + out_path + "'");
    out << render(doc);
    report.emitted = basename_of(out_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dimensioned Poisson algebra kernel"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string bracket_name;
    std::string ideal_name;
    std::vector<std::string> survivors;
    std::string casimir_left, casimir_right;
    std::string out_path;
    std::string elem_a, elem_b;
    std::string left_name, right_name;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", opts.file, "input .dimalg file")->required();
        cmd->add_flag("--json", opts.json, "machine-readable report on stdout");
        cmd->add_option("--seed", opts.seed, "seed for randomized sweeps");
        cmd->add_option("--samples", opts.samples, "sweep size for randomized checks");
    };

    CLI::App* check = app.add_subcommand("check", "verify the dimensioned Poisson axioms");
    add_common(check);
    check->add_option("--bracket", bracket_name, "bracket to verify")->required();

    CLI::App* bracket = app.add_subcommand("bracket", "evaluate a bracket on two elements");
    add_common(bracket);
    bracket->add_option("--bracket", bracket_name, "bracket to use")->required();
    bracket->add_option("a", elem_a, "first element name")->required();
    bracket->add_option("b", elem_b, "second element name")->required();

    CLI::App* reduce_cmd = app.add_subcommand("reduce", "coisotropic reduction N(I)/I");
    add_common(reduce_cmd);
    reduce_cmd->add_option("--bracket", bracket_name, "bracket to reduce")->required();
    reduce_cmd->add_option("--ideal", ideal_name, "coisotropic coordinate ideal")->required();
    reduce_cmd->add_option("--survivors", survivors, "surviving chart variables")
        ->delimiter(',');
    reduce_cmd->add_option("--out", out_path, "emitted spec path");

    CLI::App* product = app.add_subcommand("product", "geometric product of two brackets");
    add_common(product);
    product->add_option("a", left_name, "left bracket name")->required();
    product->add_option("b", right_name, "right bracket name")->required();
    product->add_option("--casimir-left", casimir_left, "Casimir element for the left factor");
    product->add_option("--casimir-right", casimir_right, "Casimir element for the right factor");
    product->add_option("--out", out_path, "emitted spec path");

    CLI::App* tensor = app.add_subcommand("tensor", "tensor product over the scalars");
    add_common(tensor);
    tensor->add_option("a", left_name, "left bracket name")->required();
    tensor->add_option("b", right_name, "right bracket name")->required();
    tensor->add_option("--out", out_path, "emitted spec path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    RunReport report;

    if (check->parsed()) {
        report.command = "check";
        report.add_input("file", basename_of(opts.file));
        report.add_input("bracket", bracket_name);
        report.add_input("seed", std::to_string(opts.seed));
        report.add_input("samples", std::to_string(opts.samples));
        return run_command(report, opts, [&] {
            Document doc = load_document(opts.file);
            BracketSpec spec = doc.materialize_bracket(bracket_name);
            VerifyReport combined = verify_poisson(spec, opts.seed, opts.samples);
            // Single-line Jacobi-shaped tables are cross-checked through the
            // symbol compatibility conditions as well.
            if (auto jacobi = extract_jacobi(spec))
                for (auto& check : verify_symbols(*jacobi, opts.seed, opts.samples).checks)
                    combined.add(std::move(check));
            report.set_verify(combined);
        });
    }

    if (bracket->parsed()) {
        report.command = "bracket";
        report.add_input("file", basename_of(opts.file));
        report.add_input("bracket", bracket_name);
        report.add_input("a", elem_a);
        report.add_input("b", elem_b);
        return run_command(report, opts, [&] {
            Document doc = load_document(opts.file);
            BracketSpec spec = doc.materialize_bracket(bracket_name);
            const Declaration& da = doc.require(elem_a, DeclKind::Element);
            const Declaration& db = doc.require(elem_b, DeclKind::Element);
            DimElement value = evaluate(spec, *da.element, *db.element);
            report.result = value.render();
        });
    }

    if (reduce_cmd->parsed()) {
        report.command = "reduce";
        report.add_input("file", basename_of(opts.file));
        report.add_input("bracket", bracket_name);
        report.add_input("ideal", ideal_name);
        {
            std::string joined;
            for (const auto& s : survivors)
                joined += (joined.empty() ? "" : ",") + s;
            report.add_input("survivors", joined);
        }
        report.add_input("seed", std::to_string(opts.seed));
        report.add_input("samples", std::to_string(opts.samples));
        return run_command(report, opts, [&] {
            Document doc = load_document(opts.file);
            BracketSpec spec = doc.materialize_bracket(bracket_name);
            const Declaration& id = doc.require(ideal_name, DeclKind::Ideal);
            BracketSpec reduced = reduce(spec, ReductionData(*id.ideal, survivors));
            report.set_verify(verify_poisson(reduced, opts.seed, opts.samples));
            std::string path = out_path.empty() ? bracket_name + "_reduced.dimalg" : out_path;
            emit_spec(report, reduced, bracket_name + "_reduced_model",
                      bracket_name + "_reduced", path);
        });
    }

    if (product->parsed()) {
        report.command = "product";
        report.add_input("file", basename_of(opts.file));
        report.add_input("a", left_name);
        report.add_input("b", right_name);
        report.add_input("casimir_left", casimir_left);
        report.add_input("casimir_right", casimir_right);
        report.add_input("seed", std::to_string(opts.seed));
        report.add_input("samples", std::to_string(opts.samples));
        return run_command(report, opts, [&] {
            if (casimir_left.empty() != casimir_right.empty())
                throw dimalg::Error("supply both --casimir-left and --casimir-right or neither");
            Document doc = load_document(opts.file);
            BracketSpec a = doc.materialize_bracket(left_name);
            BracketSpec b = doc.materialize_bracket(right_name);
            BracketSpec result = [&] {
                if (!casimir_left.empty()) {
                    const Declaration& ca = doc.require(casimir_left, DeclKind::Element);
                    const Declaration& cb = doc.require(casimir_right, DeclKind::Element);
                    return product_casimir(a, *ca.element, b, *cb.element);
                }
                if (dim_is_zero(a.bracket_dim()) && dim_is_zero(b.bracket_dim()))
                    return product_poly_poisson(a, b);
                return product_jacobi(a, b);
            }();
            report.set_verify(verify_poisson(result, opts.seed, opts.samples));
            std::string name = left_name + "_" + right_name + "_product";
            std::string path = out_path.empty() ? name + ".dimalg" : out_path;
            emit_spec(report, result, name + "_model", name, path);
        });
    }

    if (tensor->parsed()) {
        report.command = "tensor";
        report.add_input("file", basename_of(opts.file));
        report.add_input("a", left_name);
        report.add_input("b", right_name);
        report.add_input("seed", std::to_string(opts.seed));
        report.add_input("samples", std::to_string(opts.samples));
        return run_command(report, opts, [&] {
            Document doc = load_document(opts.file);
            BracketSpec a = doc.materialize_bracket(left_name);
            BracketSpec b = doc.materialize_bracket(right_name);
            BracketSpec result = tensor_heterogeneous(a, b);
            report.set_verify(verify_poisson(result, opts.seed, opts.samples));
            std::string name = left_name + "_" + right_name + "_tensor";
            std::string path = out_path.empty() ? name + ".dimalg" : out_path;
            emit_spec(report, result, name + "_model", name, path);
        });
    }

    return 2;
}
