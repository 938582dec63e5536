#pragma once

#include <random>
#include <string>
#include <vector>

#include "qp/io.hpp"
#include "qp/matrix.hpp"
#include "qp/ring.hpp"

namespace qp::test {

inline LocalRing R(const std::string& spec) { return LocalRing::parse(spec); }

inline RingElement el(const LocalRing& r, const std::string& literal) { return r.parse_element(literal); }

inline ShapedMatrix M(const LocalRing& r, Shape shape, const std::string& literal) {
    return parse_matrix(r, shape, literal);
}

/// Uniform element of a finite ring.
inline RingElement random_element(const LocalRing& r, std::mt19937_64& rng) {
    return r.element_at(std::uniform_int_distribution<std::uint64_t>(0, r.order() - 1)(rng));
}

/// a/b with |a| <= bound and 1 <= b <= bound, b prime to p.
inline RingElement random_localized(const LocalRing& r, std::mt19937_64& rng, long long bound) {
    std::uniform_int_distribution<long long> num(-bound, bound);
    std::uniform_int_distribution<long long> den(1, bound);
    long long d = den(rng);
    while (d % static_cast<long long>(r.prime()) == 0) d = den(rng);
    return r.from_fraction(num(rng), d);
}

inline RingElement random_any(const LocalRing& r, std::mt19937_64& rng) {
    if (r.kind() == RingKind::LocalizedIntegers) return random_localized(r, rng, 1000);
    if (r.kind() == RingKind::TruncatedSeries && !r.base().is_finite()) {
        std::vector<RingElement> c;
        for (unsigned i = 0; i < r.precision(); ++i) c.push_back(random_localized(r.base(), rng, 1000));
        return r.series(std::move(c));
    }
    return random_element(r, rng);
}

inline ShapedMatrix random_matrix(const LocalRing& r, Shape shape, std::mt19937_64& rng) {
    ShapedMatrix m = ShapedMatrix::zero(r, shape);
    for (auto [i, j] : shape.positions()) m.set(i, j, random_any(r, rng));
    return m;
}

}  // namespace qp::test
