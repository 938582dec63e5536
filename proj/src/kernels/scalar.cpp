#include "qp/kernels.hpp"

namespace qp::kernels {

ProductPlan ProductPlan::build(std::int32_t dim, std::vector<std::pair<std::int32_t, std::int32_t>> positions) {
    ProductPlan plan;
    plan.dim = dim;
    plan.positions = std::move(positions);
    std::vector<std::int32_t> slot(static_cast<std::size_t>(dim * dim), -1);
    for (std::size_t k = 0; k < plan.positions.size(); ++k) {
        const auto [r, c] = plan.positions[k];
        slot[static_cast<std::size_t>(r * dim + c)] = static_cast<std::int32_t>(k);
    }
    auto at = [&](std::int32_t r, std::int32_t c) { return slot[static_cast<std::size_t>(r * dim + c)]; };
    for (const auto& [i, j] : plan.positions) {
        std::vector<Term> right, left;
        for (std::int32_t k = 0; k < dim; ++k) {
            if (at(i, k) >= 0 && at(k, j) >= 0) {
                right.push_back({at(i, k), k * dim + j});
                left.push_back({at(k, j), i * dim + k});
            }
        }
        plan.right.push_back(std::move(right));
        plan.left.push_back(std::move(left));
    }
    return plan;
}

namespace detail {

void commute_mask_scalar(const RingTables& ring, const ProductPlan& plan, const Carrier& carrier,
                         std::span<const std::int32_t> fixed, std::size_t begin, std::span<std::uint8_t> out) {
    const std::int32_t n = ring.order;
    const std::int32_t* add = ring.add.data();
    const std::int32_t* mul = ring.mul.data();
    for (std::size_t x = begin; x < carrier.count; ++x) {
        bool same = true;
        for (std::size_t p = 0; same && p < plan.positions.size(); ++p) {
            std::int32_t xa = ring.zero;
            for (const Term& t : plan.right[p]) {
                std::int32_t prod = mul[carrier.columns[t.carrier_pos][x] * n + fixed[t.fixed_flat]];
                xa = add[xa * n + prod];
            }
            std::int32_t ax = ring.zero;
            for (const Term& t : plan.left[p]) {
                std::int32_t prod = mul[fixed[t.fixed_flat] * n + carrier.columns[t.carrier_pos][x]];
                ax = add[ax * n + prod];
            }
            same = xa == ax;
        }
        out[x] = same ? 1 : 0;
    }
}

void affine_index_scalar(const RingTables& ring, const ProductPlan& plan, const Carrier& carrier,
                         std::span<const std::int32_t> fixed, std::span<const std::int32_t> offset, Side side,
                         std::size_t begin, std::span<std::int32_t> out) {
    const std::int32_t n = ring.order;
    const std::int32_t* add = ring.add.data();
    const std::int32_t* mul = ring.mul.data();
    const auto& terms = side == Side::Left ? plan.left : plan.right;
    for (std::size_t x = begin; x < carrier.count; ++x) {
        std::int32_t index = 0;
        std::int32_t weight = 1;
        for (std::size_t p = 0; p < plan.positions.size(); ++p) {
            const auto [r, c] = plan.positions[p];
            std::int32_t acc = offset[r * plan.dim + c];
            for (const Term& t : terms[p]) {
                const std::int32_t xv = carrier.columns[t.carrier_pos][x];
                const std::int32_t av = fixed[t.fixed_flat];
                const std::int32_t prod = side == Side::Left ? mul[av * n + xv] : mul[xv * n + av];
                acc = add[acc * n + prod];
            }
            index += acc * weight;
            weight *= n;
        }
        out[x] = index;
    }
}

}  // namespace detail
}  // namespace qp::kernels
