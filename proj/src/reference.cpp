#include "qp/reference.hpp"

namespace qp::reference {

std::vector<RingElement> geometric_tail(const LocalRing& base, unsigned m) {
    std::vector<RingElement> out(m, base.zero());
    for (unsigned n = 1; n < m; ++n) out[n] = base.one() + pow(base.from_int(3), n);
    return out;
}

ShapedMatrix geometric_tail_matrix(unsigned m) {
    const LocalRing base = LocalRing::integers_mod(2, 2);
    const LocalRing ring = LocalRing::truncated_series(base, m);
    const RingElement s = ring.series(geometric_tail(base, m));
    return ShapedMatrix::from_rows(ring, ShapeTag::M2, {{ring.zero(), -s}, {ring.one(), ring.from_int(3) - s}});
}

ShapedMatrix linear_perturbation_matrix() {
    const LocalRing ring = LocalRing::truncated_series(LocalRing::integers_mod(2, 2), 2);
    return ShapedMatrix::from_rows(ring, ShapeTag::M2,
                                   {{ring.parse_element("3"), ring.parse_element("2 + 2*x")},
                                    {ring.parse_element("2 + x"), ring.parse_element("2 + 3*x")}});
}

}  // namespace qp::reference
