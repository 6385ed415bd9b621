// Copyright (c) lorentz-polar contributors.
// SPDX-License-Identifier: Apache-2.0

// lorentz-polar <decompose|compose|verify|sample>
//   [--order rb|br] [--tolerance T] [--seed S] [--count N] [--random N]
//   [--format json|text] [FILE|-]
//
// Exit codes: 0 success, 1 usage or parse error, 2 input is not a proper
// orthochronous Lorentz matrix, 3 verification failed.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lorentz/io.hpp"
#include "lorentz/lorentz.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotLorentz = 2;
constexpr int kExitVerificationFailed = 3;

lorentz::io::Format parse_format(const std::string& name) {
    if (name == "json") return lorentz::io::Format::json;
    if (name == "text") return lorentz::io::Format::text;
    throw lorentz::ParseError("unknown format \"" + name + "\", expected json or text");
}

std::vector<lorentz::Mat4> load_matrices(const std::string& path) {
    if (path == "-") return lorentz::io::read_matrices(std::cin);
    std::ifstream file(path);
    if (!file) throw lorentz::ParseError("cannot open file: " + path);
    return lorentz::io::read_matrices(file);
}

std::vector<lorentz::io::FactorRecord> load_factor_records(const std::string& path) {
    if (path == "-") return lorentz::io::read_factor_records(std::cin);
    std::ifstream file(path);
    if (!file) throw lorentz::ParseError("cannot open file: " + path);
    return lorentz::io::read_factor_records(file);
}

int run_decompose(const std::string& input, const std::string& order_tag, double tolerance,
                  lorentz::io::Format format) {
    const lorentz::FactorOrder order = lorentz::io::parse_order_tag(order_tag);
    for (const lorentz::Mat4& m : load_matrices(input)) {
        const lorentz::LorentzMatrix L = lorentz::LorentzMatrix::from_matrix(m, tolerance);
        const lorentz::CartanFactors factors = order == lorentz::FactorOrder::RotationBoost
                                                   ? lorentz::rotation_boost_decompose(L)
                                                   : lorentz::boost_rotation_decompose(L);
        const double residual = lorentz::max_abs_diff(lorentz::reassemble(factors), m);
        std::cout << lorentz::io::format_factor_report(factors, residual, format);
    }
    return kExitSuccess;
}

int run_compose(const std::string& input, const std::string& rotation_spec,
                const std::string& velocity_spec, const std::string& order_flag, double tolerance,
                lorentz::io::Format format) {
    std::vector<lorentz::io::FactorRecord> records;
    if (!rotation_spec.empty() || !velocity_spec.empty()) {
        lorentz::io::FactorRecord record;
        if (!rotation_spec.empty())
            record.rotation =
                lorentz::io::rotation_from_numbers(lorentz::io::parse_number_list(rotation_spec));
        if (!velocity_spec.empty()) {
            const std::vector<double> v = lorentz::io::parse_number_list(velocity_spec);
            if (v.size() != 3)
                throw lorentz::ParseError("velocity needs 3 numbers, got " +
                                          std::to_string(v.size()));
            record.velocity = {v[0], v[1], v[2]};
        }
        records.push_back(record);
    } else {
        records = load_factor_records(input);
    }

    for (const lorentz::io::FactorRecord& record : records) {
        const lorentz::RotationMatrix rotation = record.rotation.build(tolerance);
        const lorentz::BoostParameters boost{record.velocity};
        const lorentz::FactorOrder order =
            !order_flag.empty() ? lorentz::io::parse_order_tag(order_flag)
                                : record.order.value_or(lorentz::FactorOrder::RotationBoost);
        std::cout << lorentz::io::format_matrix(
            lorentz::reassemble(lorentz::CartanFactors{rotation, boost, order}), format);
    }
    return kExitSuccess;
}

int run_verify(const std::string& input, int random_count, std::uint64_t seed, double tolerance,
               lorentz::io::Format format) {
    std::vector<lorentz::Mat4> matrices;
    if (random_count > 0) {
        lorentz::LorentzSampler sampler(seed);
        matrices.reserve(static_cast<std::size_t>(random_count));
        for (int i = 0; i < random_count; ++i) matrices.push_back(sampler.lorentz().matrix());
    } else {
        matrices = load_matrices(input);
    }

    std::size_t passed = 0;
    for (std::size_t i = 0; i < matrices.size(); ++i) {
        const lorentz::LorentzMatrix L = lorentz::LorentzMatrix::from_matrix(matrices[i], tolerance);
        const lorentz::VerificationReport report = lorentz::verify_moretti(L, tolerance);
        if (report.verdict) ++passed;
        std::cout << lorentz::io::format_verification_report(i, report, format);
    }
    if (format == lorentz::io::Format::text)
        std::cout << "verified " << passed << "/" << matrices.size() << " matrices\n";
    return passed == matrices.size() ? kExitSuccess : kExitVerificationFailed;
}

int run_sample(int count, std::uint64_t seed, lorentz::io::Format format) {
    lorentz::LorentzSampler sampler(seed);
    for (int i = 0; i < count; ++i) {
        const lorentz::Mat4 m = sampler.lorentz().matrix();
        const lorentz::LorentzClassification c = lorentz::validate_lorentz(m, 1e-10);
        if (!c.is_proper_orthochronous())
            throw lorentz::InternalInvariantViolation("sampled matrix failed self-validation");
        std::cout << lorentz::io::format_matrix(m, format);
        if (format == lorentz::io::Format::text && i + 1 < count) std::cout << "\n";
    }
    return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rotation-boost and polar decomposition of Lorentz matrices"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string decompose_order = "rb";
    std::string compose_order;
    std::string rotation_spec;
    std::string velocity_spec;
    std::string format_name = "text";
    double tolerance = 1e-9;
    std::uint64_t seed = 0;
    int count = 1;
    int random_count = 0;

    CLI::App* decompose = app.add_subcommand(
        "decompose", "split a Lorentz matrix into rotation and boost factors");
    decompose->add_option("--order", decompose_order,
                          "factor order: rb (L_R L_v) or br (L_Rv L_R)");
    decompose->add_option("--tolerance", tolerance, "group membership tolerance")
        ->check(CLI::PositiveNumber);
    decompose->add_option("--format", format_name, "output format: json or text");
    decompose->add_option("input", input, "matrix file, or - for stdin");

    CLI::App* compose = app.add_subcommand(
        "compose", "build a Lorentz matrix from rotation and boost factors");
    compose->add_option("--rotation", rotation_spec,
                        "rotation: 9 numbers (3x3 row-major) or 4 numbers (axis, angle)");
    compose->add_option("--velocity", velocity_spec, "boost velocity: 3 numbers, |v| < 1");
    compose->add_option("--order", compose_order, "factor order: rb or br (default from input)");
    compose->add_option("--tolerance", tolerance, "rotation validation tolerance")
        ->check(CLI::PositiveNumber);
    compose->add_option("--format", format_name, "output format: json or text");
    compose->add_option("input", input, "factor record file, or - for stdin");

    CLI::App* verify = app.add_subcommand(
        "verify", "check that the polar and rotation-boost factorizations coincide");
    verify->add_option("--random", random_count, "verify N seeded random matrices instead of input")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "seed for --random");
    verify->add_option("--tolerance", tolerance, "residual tolerance for the verdict")
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", format_name, "output format: json or text");
    verify->add_option("input", input, "matrix file, or - for stdin");

    CLI::App* sample = app.add_subcommand(
        "sample", "emit seeded random proper orthochronous Lorentz matrices");
    sample->add_option("--count", count, "how many matrices to emit")->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed, "random seed");
    sample->add_option("--format", format_name, "output format: json or text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const lorentz::io::Format format = parse_format(format_name);
        if (decompose->parsed())
            return run_decompose(input, decompose_order, tolerance, format);
        if (compose->parsed())
            return run_compose(input, rotation_spec, velocity_spec, compose_order, tolerance, format);
        if (verify->parsed())
            return run_verify(input, random_count, seed, tolerance, format);
        return run_sample(count, seed, format);
    } catch (const lorentz::NotLorentz& e) {
        std::cerr << "lorentz-polar: " << e.what() << "\n";
        return kExitNotLorentz;
    } catch (const lorentz::Error& e) {
        std::cerr << "lorentz-polar: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "lorentz-polar: " << e.what() << "\n";
        return kExitUsage;
    }
}
