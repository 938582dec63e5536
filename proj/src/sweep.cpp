#include "qp/sweep.hpp"

#include <algorithm>
#include <random>

#include "qp/decompose.hpp"
#include "qp/m2.hpp"
#include "qp/parallel.hpp"
#include "qp/structured.hpp"

namespace qp {

namespace {

struct Outcome {
    std::string group;
    bool decomposed = false;
    bool multiple = false;
    std::string mismatch;
};

std::string group_of(const ShapedMatrix& a) {
    if (a.shape().tag() == ShapeTag::T3) {
        const CaseTag tag = classify_case(a);
        return "case " + std::to_string(tag.number) + " " + tag.pattern();
    }
    if (a.shape().tag() == ShapeTag::M2) return std::string(to_string(classify_m2(a).variant));
    return a.shape().name();
}

std::string failed_checks(const CheckList& checks) {
    std::string out;
    for (const Check& c : checks.checks()) {
        if (c.passed) continue;
        if (!out.empty()) out += ", ";
        out += c.name;
    }
    return out;
}

bool contains(const std::vector<std::size_t>& list, std::size_t x) {
    return std::find(list.begin(), list.end(), x) != list.end();
}

Outcome quasipolar_outcome(const FiniteRingView& view, std::size_t index) {
    const ShapedMatrix a = view.element(index);
    Outcome out;
    out.group = group_of(a);
    const std::vector<std::size_t> found = view.quasipolar_idempotents(index);
    out.decomposed = !found.empty();
    out.multiple = found.size() > 1;
    std::optional<QuasipolarWitness> w;
    try {
        w = decompose(a);
    } catch (const Error& err) {
        if (err.code() != ErrorCode::NotQuasipolar) throw;
    }
    if (!w) {
        if (!found.empty()) out.mismatch = "declared not quasipolar, oracle found " + std::to_string(found.size()) + " idempotent(s)";
        return out;
    }
    const CheckList checks = verify_quasipolar(a, *w, &view);
    if (!checks.all_passed()) {
        out.mismatch = "failed: " + failed_checks(checks);
    } else if (!contains(found, view.index_of(w->p))) {
        out.mismatch = "p = " + w->p.to_string() + " is not among the oracle's idempotents";
    }
    return out;
}

Outcome rad_clean_outcome(const FiniteRingView& view, std::size_t index) {
    const ShapedMatrix a = view.element(index);
    Outcome out;
    out.group = group_of(a);
    const std::vector<std::size_t> found = view.rad_clean_idempotents(index);
    out.decomposed = !found.empty();
    out.multiple = found.size() > 1;
    const RadCleanWitness w = rad_clean_witness_t3(a);
    const CheckList checks = verify_rad_clean(a, w, &view);
    if (!checks.all_passed()) {
        out.mismatch = "failed: " + failed_checks(checks);
    } else if (!contains(found, view.index_of(w.e))) {
        out.mismatch = "e = " + w.e.to_string() + " is not among the oracle's idempotents";
    }
    return out;
}

}  // namespace

SweepReport run_sweep(const FiniteRingView& view, SweepCheck check, const std::vector<std::size_t>& indices) {
    if (check == SweepCheck::RadClean && view.shape().tag() != ShapeTag::T3) {
        throw Error(ErrorCode::UnsupportedShape, "rad clean construction exists for T3 only");
    }
    std::vector<Outcome> outcomes(indices.size());
    parallel_for(indices.size(), [&](std::size_t i) {
        outcomes[i] = check == SweepCheck::Quasipolar ? quasipolar_outcome(view, indices[i])
                                                      : rad_clean_outcome(view, indices[i]);
    });
    SweepReport report;
    report.matrices = indices.size();
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const Outcome& o = outcomes[i];
        SweepGroup& g = report.groups[o.group];
        ++g.total;
        g.decomposed += o.decomposed ? 1 : 0;
        g.multiple += o.multiple ? 1 : 0;
        if (!o.mismatch.empty()) {
            ++g.mismatches;
            report.mismatches.push_back({view.element(indices[i]), o.mismatch});
        }
    }
    return report;
}

std::vector<std::size_t> all_indices(const FiniteRingView& view) {
    std::vector<std::size_t> out(view.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
}

std::vector<std::size_t> sample_indices(const FiniteRingView& view, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, view.size() - 1);
    std::vector<std::size_t> out(count);
    for (auto& x : out) x = pick(rng);
    return out;
}

}  // namespace qp
