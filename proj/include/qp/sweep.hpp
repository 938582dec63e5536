#pragma once

// Constructed witnesses against the finite oracle, over a list of matrices of one view.

#include <map>
#include <string>
#include <vector>

#include "qp/oracle.hpp"

namespace qp {

enum class SweepCheck { Quasipolar, RadClean };

struct SweepGroup {
    std::size_t total = 0;
    std::size_t decomposed = 0;  // oracle found at least one witness
    std::size_t multiple = 0;    // oracle found more than one idempotent
    std::size_t mismatches = 0;
};

struct SweepMismatch {
    ShapedMatrix a;
    std::string reason;
};

struct SweepReport {
    std::size_t matrices = 0;
    std::map<std::string, SweepGroup> groups;  // keyed by T3 case, M2 variant or shape name
    std::vector<SweepMismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// For each index: build the witness constructively, validate it (structure plus oracle
/// comm^2 / corner checks) and require the oracle's list of idempotents to contain it,
/// or to be empty exactly when no witness is constructed.
SweepReport run_sweep(const FiniteRingView& view, SweepCheck check, const std::vector<std::size_t>& indices);

std::vector<std::size_t> all_indices(const FiniteRingView& view);
std::vector<std::size_t> sample_indices(const FiniteRingView& view, std::size_t count, std::uint64_t seed);

}  // namespace qp
