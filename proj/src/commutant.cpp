#include "qp/commutant.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

#include "qp/parallel.hpp"

namespace qp {

RingElement solve_commutant(const CommutantEquation& eq) {
    RingElement diff = eq.a - eq.b;
    if (!is_unit(diff)) {
        throw Error(ErrorCode::NotBleachedInstance, "a - b = " + diff.to_string() + " is not a unit in " +
                                                        diff.ring().spec() + "; l_a - r_b is not invertible");
    }
    return inverse(diff) * eq.c;
}

namespace {

struct MapResult {
    bool surjective;
    bool injective;
};

MapResult scan_map(const std::vector<RingElement>& elements, const LocalRing& ring,
                   const RingElement& left, const RingElement& right) {
    std::vector<bool> hit(elements.size(), false);
    std::size_t distinct = 0;
    for (const auto& x : elements) {
        std::uint64_t idx = ring.index_of(left * x - x * right);
        if (!hit[idx]) {
            hit[idx] = true;
            ++distinct;
        }
    }
    // A self-map of a finite set is onto exactly when it is one-to-one.
    bool onto = distinct == elements.size();
    return {onto, onto};
}

}  // namespace

BleachedReport check_bleached(const LocalRing& ring) {
    const std::vector<RingElement> elements = ring.enumerate();
    std::vector<RingElement> radical, units;
    for (const auto& x : elements) (is_unit(x) ? units : radical).push_back(x);

    BleachedReport report;
    report.ring = ring.spec();
    report.radical_size = radical.size();
    report.unit_count = units.size();
    report.pairs_checked = radical.size() * units.size();

    std::mutex mu;
    parallel_for(report.pairs_checked, [&](std::size_t idx) {
        const RingElement& j = radical[idx / units.size()];
        const RingElement& u = units[idx % units.size()];
        MapResult ul = scan_map(elements, ring, u, j);  // x -> u x - x j
        MapResult jl = scan_map(elements, ring, j, u);  // x -> j x - x u
        if (ul.surjective && ul.injective && jl.surjective && jl.injective) return;
        std::lock_guard lock(mu);
        if (!(ul.surjective && ul.injective)) report.failures.push_back({j, u, "l_u - r_j", ul.surjective, ul.injective});
        if (!(jl.surjective && jl.injective)) report.failures.push_back({j, u, "l_j - r_u", jl.surjective, jl.injective});
    });
    std::sort(report.failures.begin(), report.failures.end(), [&](const BleachedFailure& a, const BleachedFailure& b) {
        return std::tuple(ring.index_of(a.j), ring.index_of(a.u), a.map) <
               std::tuple(ring.index_of(b.j), ring.index_of(b.u), b.map);
    });
    for (const auto& f : report.failures) {
        if (!f.surjective) report.bleached = false;
        if (!(f.surjective && f.injective)) report.uniquely_bleached = false;
    }
    return report;
}

BleachedReport check_uniquely_bleached(const LocalRing& ring) { return check_bleached(ring); }

}  // namespace qp
