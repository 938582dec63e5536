#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qp/commutant.hpp"
#include "qp/decompose.hpp"
#include "qp/io.hpp"
#include "qp/m2.hpp"
#include "qp/reference.hpp"
#include "qp/series_lift.hpp"
#include "qp/structured.hpp"
#include "qp/sweep.hpp"

namespace {

using namespace qp;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

struct Options {
    std::string ring;
    std::string shape;
    std::string matrix;
    std::string format = "text";
    std::string check = "quasipolar";
    unsigned precision = 0;
    bool oracle = false;
    bool exhaustive = false;
    std::size_t samples = 0;
    std::uint64_t seed = 1;
};

bool json_output(const Options& o) { return o.format == "json"; }

void print_checks(const CheckList& checks) {
    std::cout << "checks:\n";
    for (const Check& c : checks.checks()) {
        std::cout << "  " << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
    }
    std::cout << "result: " << (checks.all_passed() ? "verified" : "MISMATCH") << "\n";
}

void print_witness(const QuasipolarWitness& w) {
    std::cout << "p: " << w.p << "\n"
              << "u: " << w.u << "\n"
              << "q: " << w.q << "\n"
              << "comm2 evidence: " << to_string(w.comm2_evidence) << "\n";
}

std::string roots_string(const QuadraticCharPoly& chi) {
    if (!chi.roots) return {};
    return "alpha=" + chi.roots->first.to_string() + ", beta=" + chi.roots->second.to_string();
}

std::string chi_string(const QuadraticCharPoly& chi) {
    return "t^2 - (" + chi.tr.to_string() + ")*t + (" + chi.det.to_string() + ")";
}

Json chi_json(const QuadraticCharPoly& chi) {
    Json j{{"tr", chi.tr.to_string()}, {"det", chi.det.to_string()}};
    if (chi.roots) {
        j["alpha"] = chi.roots->first.to_string();
        j["beta"] = chi.roots->second.to_string();
    }
    return j;
}

int run_decompose(const Options& o) {
    const LocalRing ring = LocalRing::parse(o.ring);
    const Shape shape = Shape::parse(o.shape.empty() ? "T3" : o.shape);
    const ShapedMatrix a = parse_matrix(ring, shape, o.matrix);

    Json out{{"ring", ring.spec()}, {"shape", shape.name()}, {"matrix", to_json(a)}};
    if (!json_output(o)) std::cout << "ring: " << ring.spec() << "\nshape: " << shape.name() << "\nA: " << a << "\n";

    if (shape.tag() == ShapeTag::T3) {
        const CaseTag tag = classify_case(a);
        const ShapedMatrix e = spectral_idempotent_t3(a);
        out["case"] = tag.number;
        out["pattern"] = tag.pattern();
        out["E"] = to_json(e);
        if (!json_output(o)) std::cout << "case: " << tag.number << " (" << tag.pattern() << ")\nE: " << e << "\n";
    }

    std::optional<QuasipolarWitness> built;
    try {
        built = decompose(a);
    } catch (const Error& err) {
        if (err.code() != ErrorCode::NotQuasipolar && err.code() != ErrorCode::ConstantNotQuasipolar) throw;
        if (json_output(o)) {
            out["quasipolar"] = false;
            out["reason"] = err.what();
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "result: not quasipolar (" << err.what() << ")\n";
        }
        return kOk;
    }
    QuasipolarWitness& w = *built;

    std::optional<FiniteRingView> view;
    if (o.oracle) {
        view = oracle_for(a);
        if (!view) throw Error(ErrorCode::CarrierTooLarge, "no finite oracle for " + shape.name() + " over " + ring.spec());
    }
    const CheckList checks = verify_quasipolar(a, w, view ? &*view : nullptr);
    if (json_output(o)) {
        out["quasipolar"] = true;
        out["witness"] = to_json(w);
        out["checks"] = to_json(checks);
        out["verified"] = checks.all_passed();
        std::cout << out.dump(2) << "\n";
    } else {
        print_witness(w);
        print_checks(checks);
    }
    return checks.all_passed() ? kOk : kMismatch;
}

int run_classify_m2(const Options& o) {
    const LocalRing ring = LocalRing::parse(o.ring);
    const ShapedMatrix a = parse_matrix(ring, ShapeTag::M2, o.matrix);
    const M2Class cls = classify_m2(a);
    if (json_output(o)) {
        Json out{{"ring", ring.spec()}, {"matrix", to_json(a)}, {"variant", std::string(to_string(cls.variant))},
                 {"chi", chi_json(cls.chi)}};
        if (!cls.reason.empty()) out["reason"] = cls.reason;
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    std::cout << to_string(cls.variant);
    if (cls.variant == M2Variant::Split) std::cout << " (" << roots_string(cls.chi) << ")";
    if (!cls.reason.empty()) std::cout << " (" << cls.reason << ")";
    std::cout << "\n";
    return kOk;
}

LocalRing lift_ring(const Options& o) {
    const LocalRing ring = LocalRing::parse(o.ring);
    if (ring.kind() == RingKind::TruncatedSeries) {
        return o.precision == 0 ? ring : LocalRing::truncated_series(ring.base(), o.precision);
    }
    return LocalRing::truncated_series(ring, o.precision == 0 ? 8 : o.precision);
}

int run_lift(const Options& o) {
    const LocalRing ring = lift_ring(o);
    const ShapedMatrix a = parse_matrix(ring, ShapeTag::M2, o.matrix);
    const M2Class constant = classify_m2(constant_matrix(a));
    Json out{{"ring", ring.spec()}, {"matrix", to_json(a)},
             {"constant_variant", std::string(to_string(constant.variant))}, {"constant_chi", chi_json(constant.chi)}};
    if (!json_output(o)) {
        std::cout << "ring: " << ring.spec() << "\nA: " << a << "\nchi(A(0)): " << chi_string(constant.chi) << "\n"
                  << "A(0): " << to_string(constant.variant);
        if (constant.variant == M2Variant::Split) std::cout << " (" << roots_string(constant.chi) << ")";
        if (!constant.reason.empty()) std::cout << " (" << constant.reason << ")";
        std::cout << "\n";
    }
    if (constant.variant == M2Variant::NotQuasipolar) {
        if (json_output(o)) {
            out["quasipolar"] = false;
            out["reason"] = constant.reason;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "result: not quasipolar\n";
        }
        return kOk;
    }
    CheckList checks;
    if (constant.variant == M2Variant::Split) {
        const LiftedSplit split = lift_split(a);
        const SeriesQuadratic sq = series_quadratic(a);
        checks.add("alpha(x) solves y^2 - mu y - lambda", sq.evaluate(split.alpha).is_zero());
        checks.add("beta(x) solves y^2 - mu y - lambda", sq.evaluate(split.beta).is_zero());
        checks.add("alpha(x) in J", in_jacobson(split.alpha));
        checks.add("beta(x) a unit", is_unit(split.beta));
        out["alpha"] = split.alpha.to_string();
        out["beta"] = split.beta.to_string();
        if (!json_output(o)) std::cout << "alpha(x): " << split.alpha << "\nbeta(x): " << split.beta << "\n";
    }
    QuasipolarWitness w = quasipolar_witness_m2_series(a);
    checks.append(verify_quasipolar(a, w));
    if (json_output(o)) {
        out["quasipolar"] = true;
        out["witness"] = to_json(w);
        out["checks"] = to_json(checks);
        out["verified"] = checks.all_passed();
        std::cout << out.dump(2) << "\n";
    } else {
        print_witness(w);
        print_checks(checks);
    }
    return checks.all_passed() ? kOk : kMismatch;
}

Json sweep_json(const SweepReport& report) {
    Json groups = Json::array();
    for (const auto& [name, g] : report.groups) {
        groups.push_back(Json{{"group", name},
                              {"total", g.total},
                              {"decomposed", g.decomposed},
                              {"multiple", g.multiple},
                              {"mismatches", g.mismatches}});
    }
    Json mismatches = Json::array();
    for (const auto& m : report.mismatches) mismatches.push_back(Json{{"matrix", to_json(m.a)}, {"reason", m.reason}});
    return Json{{"matrices", report.matrices}, {"groups", groups}, {"mismatches", mismatches}, {"ok", report.ok()}};
}

void print_sweep(const SweepReport& report) {
    std::printf("%-22s %8s %11s %9s %11s\n", "group", "total", "decomposed", "multiple", "mismatches");
    SweepGroup sum;
    for (const auto& [name, g] : report.groups) {
        std::printf("%-22s %8zu %11zu %9zu %11zu\n", name.c_str(), g.total, g.decomposed, g.multiple, g.mismatches);
        sum.total += g.total;
        sum.decomposed += g.decomposed;
        sum.multiple += g.multiple;
        sum.mismatches += g.mismatches;
    }
    std::printf("%-22s %8zu %11zu %9zu %11zu\n", "total", sum.total, sum.decomposed, sum.multiple, sum.mismatches);
    std::fflush(stdout);
    constexpr std::size_t kShown = 20;
    for (std::size_t i = 0; i < report.mismatches.size() && i < kShown; ++i) {
        std::cout << "mismatch: " << report.mismatches[i].a << ": " << report.mismatches[i].reason << "\n";
    }
    if (report.mismatches.size() > kShown) std::cout << "... " << report.mismatches.size() - kShown << " more\n";
    std::cout << "result: " << (report.ok() ? "no mismatches" : "MISMATCH") << "\n";
}

int run_oracle(const Options& o) {
    const LocalRing ring = LocalRing::parse(o.ring);
    const Shape shape = Shape::parse(o.shape.empty() ? "T3" : o.shape);
    SweepCheck check;
    if (o.check == "quasipolar") {
        check = SweepCheck::Quasipolar;
    } else if (o.check == "radclean") {
        check = SweepCheck::RadClean;
    } else {
        throw ParseError(0, "--check must be quasipolar or radclean, got '" + o.check + "'");
    }
    const FiniteRingView view(ring, shape);
    const bool exhaustive = o.exhaustive || o.samples == 0;
    const auto indices = exhaustive ? all_indices(view) : sample_indices(view, o.samples, o.seed);
    const SweepReport report = run_sweep(view, check, indices);
    const std::string mode = exhaustive ? "exhaustive" : "samples (seed " + std::to_string(o.seed) + ")";
    if (json_output(o)) {
        Json out{{"ring", ring.spec()}, {"shape", shape.name()}, {"check", o.check}, {"mode", mode}};
        out.update(sweep_json(report));
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "ring: " << ring.spec() << "  shape: " << shape.name() << "  check: " << o.check
                  << "  mode: " << mode << "  (" << report.matrices << " matrices of " << view.size() << ")\n";
        print_sweep(report);
    }
    return report.ok() ? kOk : kMismatch;
}

int run_sweep_t3(const Options& o) {
    Options full = o;
    full.shape = "T3";
    full.check = "quasipolar";
    full.exhaustive = true;
    return run_oracle(full);
}

int run_bleached(const Options& o) {
    const LocalRing ring = LocalRing::parse(o.ring);
    const BleachedReport report = check_uniquely_bleached(ring);
    if (json_output(o)) {
        Json failures = Json::array();
        for (const auto& f : report.failures) {
            failures.push_back(Json{{"j", f.j.to_string()},
                                    {"u", f.u.to_string()},
                                    {"map", f.map},
                                    {"surjective", f.surjective},
                                    {"injective", f.injective}});
        }
        std::cout << Json{{"ring", report.ring},
                          {"radical_size", report.radical_size},
                          {"unit_count", report.unit_count},
                          {"pairs_checked", report.pairs_checked},
                          {"bleached", report.bleached},
                          {"uniquely_bleached", report.uniquely_bleached},
                          {"failures", failures}}
                         .dump(2)
                  << "\n";
        return kOk;
    }
    std::cout << "ring: " << report.ring << "\n|J| = " << report.radical_size << ", |U| = " << report.unit_count
              << ", pairs checked: " << report.pairs_checked << "\n"
              << "bleached: " << (report.bleached ? "yes" : "no") << "\n"
              << "uniquely bleached: " << (report.uniquely_bleached ? "yes" : "no") << "\n";
    for (const auto& f : report.failures) {
        std::cout << "failure: j=" << f.j << " u=" << f.u << " " << f.map << (f.surjective ? "" : " not surjective")
                  << (f.injective ? "" : " not injective") << "\n";
    }
    return kOk;
}

struct ExampleRun {
    std::string name;
    ShapedMatrix a;
    std::string expected_chi;  // tr, det of A(0)
    std::pair<std::string, std::string> expected_roots;
};

int run_verify_examples(const Options& o) {
    const std::vector<ExampleRun> runs{
        {"geometric tail over series(Z2^2,8)", reference::geometric_tail_matrix(8), "3,0", {"0", "3"}},
        {"linear perturbation over series(Z2^2,2)", reference::linear_perturbation_matrix(), "1,2", {"2", "3"}},
    };
    Json all = Json::array();
    bool ok = true;
    for (const auto& run : runs) {
        const M2Class constant = classify_m2(constant_matrix(run.a));
        CheckList checks;
        checks.add("chi(A(0)) = t^2 - (" + run.expected_chi.substr(0, 1) + ")t + (" + run.expected_chi.substr(2) + ")",
                   constant.chi.tr.to_string() + "," + constant.chi.det.to_string() == run.expected_chi);
        const bool split = constant.variant == M2Variant::Split;
        checks.add("A(0) splits as (" + run.expected_roots.first + ", " + run.expected_roots.second + ")",
                   split && constant.chi.roots->first.to_string() == run.expected_roots.first &&
                       constant.chi.roots->second.to_string() == run.expected_roots.second);
        Json item{{"name", run.name}, {"matrix", to_json(run.a)}};
        if (split) {
            const LiftedSplit lifted = lift_split(run.a);
            const SeriesQuadratic sq = series_quadratic(run.a);
            checks.add("lifted alpha solves the series quadratic", sq.evaluate(lifted.alpha).is_zero());
            checks.add("lifted beta solves the series quadratic", sq.evaluate(lifted.beta).is_zero());
            item["alpha"] = lifted.alpha.to_string();
            item["beta"] = lifted.beta.to_string();
            QuasipolarWitness w = quasipolar_witness_m2_series(run.a);
            checks.append(verify_quasipolar(run.a, w));
            item["witness"] = to_json(w);
            if (!json_output(o)) {
                std::cout << run.name << "\nA: " << run.a << "\nalpha(x): " << lifted.alpha << "\nbeta(x): " << lifted.beta
                          << "\n";
                print_witness(w);
            }
        }
        item["checks"] = to_json(checks);
        item["verified"] = checks.all_passed();
        all.push_back(std::move(item));
        if (!json_output(o)) {
            print_checks(checks);
            std::cout << "\n";
        }
        ok = ok && checks.all_passed();
    }
    if (json_output(o)) std::cout << Json{{"examples", all}, {"ok", ok}}.dump(2) << "\n";
    return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quasipolar decompositions of structured matrices over commutative local rings"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_ring = [&](CLI::App* cmd) {
        cmd->add_option("--ring", o.ring, "Ring: F<p>, Z<p>^<k>, Zloc<p> or series(<ring>,<m>)")->required();
    };

    auto* decompose_cmd = app.add_subcommand("decompose", "Quasipolar witness of one matrix");
    add_ring(decompose_cmd);
    decompose_cmd->add_option("--shape", o.shape, "T3, L3, LOW3, UP3, S1, S2, T2, M2 (default T3)");
    decompose_cmd->add_option("--matrix", o.matrix, "Matrix literal, e.g. \"[1,0,0; 1,2,0; 0,0,2]\"")->required();
    decompose_cmd->add_flag("--oracle", o.oracle, "Also check comm^2 membership and quasinilpotence by enumeration");
    add_format(decompose_cmd);

    auto* classify_cmd = app.add_subcommand("classify-m2", "Classify a 2x2 matrix");
    add_ring(classify_cmd);
    classify_cmd->add_option("--matrix", o.matrix, "2x2 matrix literal")->required();
    add_format(classify_cmd);

    auto* lift_cmd = app.add_subcommand("lift", "Lift the root split of a 2x2 matrix over a truncated series ring");
    add_ring(lift_cmd);
    lift_cmd->add_option("--matrix", o.matrix, "2x2 matrix literal with series entries")->required();
    lift_cmd->add_option("--precision", o.precision, "Truncation order m (series rings: overrides the spec's m)");
    add_format(lift_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle", "Compare constructed witnesses with exhaustive search");
    add_ring(oracle_cmd);
    oracle_cmd->add_option("--shape", o.shape, "Matrix shape (default T3)");
    oracle_cmd->add_option("--check", o.check, "quasipolar or radclean")->check(CLI::IsMember({"quasipolar", "radclean"}));
    auto* exhaustive = oracle_cmd->add_flag("--exhaustive", o.exhaustive, "Every matrix of the shape (default)");
    oracle_cmd->add_option("--samples", o.samples, "Random sample size instead of all matrices")->excludes(exhaustive);
    oracle_cmd->add_option("--seed", o.seed, "Seed for --samples");
    add_format(oracle_cmd);

    auto* bleached_cmd = app.add_subcommand("bleached", "Brute-force bleached / uniquely bleached check");
    add_ring(bleached_cmd);
    add_format(bleached_cmd);

    auto* sweep_cmd = app.add_subcommand("sweep-t3", "Every T3 matrix over a finite ring against the oracle");
    add_ring(sweep_cmd);
    add_format(sweep_cmd);

    auto* examples_cmd = app.add_subcommand("verify-examples", "Run the two reference series examples end to end");
    add_format(examples_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*decompose_cmd) return run_decompose(o);
        if (*classify_cmd) return run_classify_m2(o);
        if (*lift_cmd) return run_lift(o);
        if (*oracle_cmd) return run_oracle(o);
        if (*bleached_cmd) return run_bleached(o);
        if (*sweep_cmd) return run_sweep_t3(o);
        if (*examples_cmd) return run_verify_examples(o);
    } catch (const Error& e) {
        std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
        return kInputError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error [json]: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
