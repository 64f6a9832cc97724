#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bjorth/io.hpp"
#include "bjorth/suites.hpp"

using namespace bjorth;

namespace {

constexpr int kExitOrthogonal = 0;
constexpr int kExitNotOrthogonal = 1;
constexpr int kExitBorderline = 2;
constexpr int kExitParse = 3;
constexpr int kExitShape = 4;
constexpr int kExitDomain = 5;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("BJ_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
        std::cerr << "warning: ignoring malformed BJ_SEED\n";
    }
    return 12345;
}

const char* state_name(BJState s) {
    switch (s) {
    case BJState::Orthogonal: return "Orthogonal";
    case BJState::NotOrthogonal: return "NotOrthogonal";
    default: return "Borderline";
    }
}

int state_exit(BJState s) {
    switch (s) {
    case BJState::Orthogonal: return kExitOrthogonal;
    case BJState::NotOrthogonal: return kExitNotOrthogonal;
    default: return kExitBorderline;
    }
}

void print_vector(const Vector& x) {
    std::printf("[");
    for (std::size_t i = 0; i < x.size(); ++i)
        std::printf("%s(%.10g,%.10g)", i ? " " : "", x[i].real(), x[i].imag());
    std::printf("]");
}

void print_verdict(const char* tag, const BJVerdict& v) {
    std::printf("%s: %s margin=%.10e", tag, state_name(v.state), v.margin);
    if (v.witness) {
        std::printf(" witness=");
        print_vector(*v.witness);
    }
    std::printf("\n");
}

int cmd_check(const std::string& file_a, const std::string& file_b, const std::string& method,
              bool want_witness) {
    const AlgebraElement A = load_algebra(file_a);
    const AlgebraElement B = load_algebra(file_b);
    if (A.shape != B.shape) throw ShapeMismatch("check: shapes differ");

    if (method == "criterion") {
        const BJVerdict v = bj_orthogonal_alg(A, B, want_witness);
        print_verdict("criterion", v);
        return state_exit(v.state);
    }
    if (method == "minimize") {
        const BJVerdict v = bj_orthogonal_minimize(A.embed(), B.embed());
        print_verdict("minimize", v);
        return state_exit(v.state);
    }
    const BJVerdict vc = bj_orthogonal_alg(A, B, want_witness);
    const BJVerdict vm = bj_orthogonal_minimize(A.embed(), B.embed());
    print_verdict("criterion", vc);
    print_verdict("minimize", vm);
    const bool agree = vc.state == vm.state || vc.state == BJState::Borderline ||
                       vm.state == BJState::Borderline;
    std::printf("agreement: %s\n", agree ? "true" : "false");
    return state_exit(vc.state);
}

int cmd_m0(const std::string& file) {
    const AlgebraElement A = load_algebra(file);
    const auto [norm, norming] = alg_norm_and_norming_blocks(A);
    std::printf("norm: %.17g\n", norm);
    if (norm == 0.0) {
        std::printf("norming_blocks: none (zero element)\n");
        return 0;
    }
    std::printf("norming_blocks:");
    for (std::size_t k : norming) std::printf(" %zu", k);
    std::printf("\n");
    for (std::size_t k : norming) {
        const NormingSubspace ns = norm_attain_set(A.blocks[k]);
        std::printf("block %zu dim=%zu basis:\n", k, ns.dim());
        for (std::size_t c = 0; c < ns.dim(); ++c) {
            Vector x(ns.basis.rows());
            for (std::size_t i = 0; i < x.size(); ++i) x[i] = ns.basis(i, c);
            std::printf("  ");
            print_vector(x);
            std::printf("\n");
        }
    }
    return 0;
}

int cmd_smooth(const std::string& file) {
    const AlgebraElement A = load_algebra(file);
    const SmoothReport r = is_smooth(A);
    std::printf("smooth: %s\n", r.smooth ? "true" : "false");
    if (r.certificate) {
        std::printf("block: %zu\nnorming_vector: ", r.certificate->block);
        print_vector(r.certificate->norming_vector);
        std::printf("\n");
    }
    return r.smooth ? 0 : 1;
}

int cmd_numrange(const std::string& file, std::size_t samples, const std::string& out_path) {
    const AlgebraElement A = load_algebra(file);
    const ComplexMatrix M = A.embed();
    if (out_path.empty()) {
        write_numrange_csv(std::cout, M, samples);
    } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot open output file: " + out_path);
        write_numrange_csv(out, M, samples);
    }
    return 0;
}

int cmd_verify(const std::string& suite, std::size_t trials, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    const SuiteReport report = run_suite(suite, trials, seed);
    // stdout stays byte-identical across runs; timing goes to stderr
    std::fputs(report.render().c_str(), stdout);
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::fprintf(stderr, "suite wall time: %lld ms\n", static_cast<long long>(ms.count()));
    return report.pass() ? 0 : 1;
}

int cmd_counterexample(const std::string& kind, std::uint64_t seed) {
    if (kind == "gauge") {
        const AlgebraShape shape{{2, 2}};
        const BJMap map = counterexample_gauge_map(
            shape, [](double r) { return r * r; }, [](double r) { return std::sqrt(r); });
        AlgebraElement X = AlgebraElement::identity(shape);
        X.blocks[1] *= cx{0.5, 0.0};
        const AlgebraElement Y = map.forward(X);
        std::printf("input:  %s\n", serialize_algebra(X).c_str());
        std::printf("output: %s\n", serialize_algebra(Y).c_str());
        std::printf("scalar_fit_residual: %.10e\n", scalar_fit_residual(Y, X));
        const PreservationReport pr = strong_preservation_test(map, shape, 200, seed);
        std::printf("preservation: pairs=%zu violations=%zu borderline=%zu\n", pr.pairs,
                    pr.violations, pr.borderline_skipped);
        return pr.pass() ? 0 : 1;
    }
    const BJMap map = counterexample_abelian_map();
    const AlgebraShape shape{{1, 1}};
    AlgebraElement X = AlgebraElement::identity(shape);
    X.blocks[1](0, 0) = cx{0.0, 1.0};
    const AlgebraElement Y = map.forward(X);
    std::printf("input:  %s\n", serialize_algebra(X).c_str());
    std::printf("output: %s\n", serialize_algebra(Y).c_str());
    const PreservationReport pr = strong_preservation_test(map, shape, 200, seed);
    std::printf("preservation: pairs=%zu violations=%zu borderline=%zu\n", pr.pairs, pr.violations,
                pr.borderline_skipped);
    return pr.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Birkhoff-James orthogonality toolkit for block matrix algebras"};
    app.require_subcommand(1);

    std::string file_a, file_b, method = "criterion", out_path, suite = "all", ce_kind;
    std::size_t samples = 256, trials = 0;
    std::uint64_t seed = default_seed();
    bool no_witness = false;

    auto* check = app.add_subcommand("check", "decide A _|_ B for two algebra files");
    check->add_option("fileA", file_a)->required();
    check->add_option("fileB", file_b)->required();
    check->add_option("--method", method)->check(CLI::IsMember({"criterion", "minimize", "both"}));
    check->add_flag("--no-witness", no_witness);

    auto* m0 = app.add_subcommand("m0", "print the norm attainment data of an element");
    m0->add_option("file", file_a)->required();

    auto* smooth = app.add_subcommand("smooth", "test smoothness and print the certificate");
    smooth->add_option("file", file_a)->required();

    auto* numrange = app.add_subcommand("numrange", "export numerical range boundary as CSV");
    numrange->add_option("file", file_a)->required();
    numrange->add_option("--samples", samples);
    numrange->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "run the property verification suites");
    verify->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
    verify->add_option("--trials", trials);
    verify->add_option("--seed", seed);

    auto* ce = app.add_subcommand("counterexample", "demonstrate the two non-isometric preservers");
    ce->add_option("kind", ce_kind)->required()->check(CLI::IsMember({"gauge", "abelian"}));
    ce->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(file_a, file_b, method, !no_witness);
        if (m0->parsed()) return cmd_m0(file_a);
        if (smooth->parsed()) return cmd_smooth(file_a);
        if (numrange->parsed()) return cmd_numrange(file_a, samples, out_path);
        if (verify->parsed()) return cmd_verify(suite, trials, seed);
        if (ce->parsed()) return cmd_counterexample(ce_kind, seed);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const ShapeMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitShape;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain + 1;
    }
    return 0;
}
