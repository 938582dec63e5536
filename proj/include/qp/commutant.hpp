#pragma once

// Commutant equations a*e - e*b = c, i.e. (l_a - r_b)(e) = c, and brute-force
// bleached / uniquely bleached checks on finite local rings.

#include <string>
#include <vector>

#include "qp/ring.hpp"

namespace qp {

struct CommutantEquation {
    RingElement a;
    RingElement b;
    RingElement c;
};

/// Unique e with a*e - e*b = c. Over a commutative ring l_a - r_b is multiplication by
/// a - b, so this is (a - b)^-1 * c. Throws NotBleachedInstance when a - b is not a unit.
RingElement solve_commutant(const CommutantEquation& eq);

struct BleachedFailure {
    RingElement j;  // radical element
    RingElement u;  // unit
    std::string map;  // "l_u - r_j" or "l_j - r_u"
    bool surjective;
    bool injective;
};

struct BleachedReport {
    std::string ring;
    std::size_t radical_size = 0;
    std::size_t unit_count = 0;
    std::size_t pairs_checked = 0;
    bool bleached = true;
    bool uniquely_bleached = true;
    std::vector<BleachedFailure> failures;
};

/// Scans every (j, u) in J(R) x U(R) and tests x -> u*x - x*j and x -> j*x - x*u.
/// Finite rings only (InfiniteRing otherwise).
BleachedReport check_bleached(const LocalRing& ring);
/// Same scan; the verdict of interest is `uniquely_bleached` (both maps bijective).
BleachedReport check_uniquely_bleached(const LocalRing& ring);

}  // namespace qp
