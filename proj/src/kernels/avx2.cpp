// Compiled with -mavx2; only reached through the runtime dispatch in dispatch.cpp.

#include <immintrin.h>

#include "qp/kernels.hpp"

namespace qp::kernels::detail {

namespace {

inline __m256i load8(const std::vector<std::int32_t>& column, std::size_t x) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(column.data() + x));
}

// acc <- add[acc * n + mul[lhs * n + rhs]] for eight lanes
inline __m256i mul_accumulate(__m256i acc, __m256i lhs, __m256i rhs, __m256i vn, const std::int32_t* add,
                              const std::int32_t* mul) {
    const __m256i prod = _mm256_i32gather_epi32(mul, _mm256_add_epi32(_mm256_mullo_epi32(lhs, vn), rhs), 4);
    return _mm256_i32gather_epi32(add, _mm256_add_epi32(_mm256_mullo_epi32(acc, vn), prod), 4);
}

}  // namespace

void commute_mask_avx2(const RingTables& ring, const ProductPlan& plan, const Carrier& carrier,
                       std::span<const std::int32_t> fixed, std::span<std::uint8_t> out) {
    const __m256i vn = _mm256_set1_epi32(ring.order);
    const __m256i vzero = _mm256_set1_epi32(ring.zero);
    const std::int32_t* add = ring.add.data();
    const std::int32_t* mul = ring.mul.data();
    const std::size_t full = carrier.count - carrier.count % 8;
    for (std::size_t x = 0; x < full; x += 8) {
        __m256i all = _mm256_set1_epi32(-1);
        for (std::size_t p = 0; p < plan.positions.size(); ++p) {
            __m256i xa = vzero;
            for (const Term& t : plan.right[p]) {
                xa = mul_accumulate(xa, load8(carrier.columns[t.carrier_pos], x), _mm256_set1_epi32(fixed[t.fixed_flat]),
                                    vn, add, mul);
            }
            __m256i ax = vzero;
            for (const Term& t : plan.left[p]) {
                ax = mul_accumulate(ax, _mm256_set1_epi32(fixed[t.fixed_flat]), load8(carrier.columns[t.carrier_pos], x),
                                    vn, add, mul);
            }
            all = _mm256_and_si256(all, _mm256_cmpeq_epi32(xa, ax));
        }
        const int bits = _mm256_movemask_ps(_mm256_castsi256_ps(all));
        for (int lane = 0; lane < 8; ++lane) out[x + lane] = static_cast<std::uint8_t>((bits >> lane) & 1);
    }
    commute_mask_scalar(ring, plan, carrier, fixed, full, out);
}

void affine_index_avx2(const RingTables& ring, const ProductPlan& plan, const Carrier& carrier,
                       std::span<const std::int32_t> fixed, std::span<const std::int32_t> offset, Side side,
                       std::span<std::int32_t> out) {
    const __m256i vn = _mm256_set1_epi32(ring.order);
    const std::int32_t* add = ring.add.data();
    const std::int32_t* mul = ring.mul.data();
    const auto& terms = side == Side::Left ? plan.left : plan.right;
    const std::size_t full = carrier.count - carrier.count % 8;
    for (std::size_t x = 0; x < full; x += 8) {
        __m256i index = _mm256_setzero_si256();
        std::int32_t weight = 1;
        for (std::size_t p = 0; p < plan.positions.size(); ++p) {
            const auto [r, c] = plan.positions[p];
            __m256i acc = _mm256_set1_epi32(offset[r * plan.dim + c]);
            for (const Term& t : terms[p]) {
                const __m256i xv = load8(carrier.columns[t.carrier_pos], x);
                const __m256i av = _mm256_set1_epi32(fixed[t.fixed_flat]);
                acc = side == Side::Left ? mul_accumulate(acc, av, xv, vn, add, mul)
                                         : mul_accumulate(acc, xv, av, vn, add, mul);
            }
            index = _mm256_add_epi32(index, _mm256_mullo_epi32(acc, _mm256_set1_epi32(weight)));
            weight *= ring.order;
        }
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + x), index);
    }
    affine_index_scalar(ring, plan, carrier, fixed, offset, side, full, out);
}

}  // namespace qp::kernels::detail
