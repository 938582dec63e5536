#pragma once

// Batched matrix kernels over a finite ring encoded by element index.
//
// A finite ring of order N is given by N x N addition and multiplication tables. A
// carrier is every matrix of one shape over that ring, stored column-wise: column k
// holds the entry at mask position k for all carrier elements. Carrier element x has
// index sum_k entry_k(x) * N^k.
//
// The kernels apply one fixed matrix A against every carrier element X at once. The
// scalar versions are the reference; the AVX2 versions process eight carrier elements
// per step with table gathers and must agree bit for bit.

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace qp::kernels {

struct RingTables {
    std::int32_t order = 0;
    std::int32_t zero = 0;
    std::vector<std::int32_t> add;  // add[a * order + b]
    std::vector<std::int32_t> mul;  // mul[a * order + b]
};

/// One product term: carrier entry at position `carrier_pos` times dense entry `fixed_flat` of A.
struct Term {
    std::int32_t carrier_pos;
    std::int32_t fixed_flat;
};

/// Terms of each output mask position for X*A (right) and A*X (left).
struct ProductPlan {
    std::int32_t dim = 0;
    std::vector<std::pair<std::int32_t, std::int32_t>> positions;  // (row, col) of each mask position
    std::vector<std::vector<Term>> right;                          // (X A)(pos) = sum X(carrier_pos) * A(fixed_flat)
    std::vector<std::vector<Term>> left;                           // (A X)(pos) = sum A(fixed_flat) * X(carrier_pos)

    static ProductPlan build(std::int32_t dim, std::vector<std::pair<std::int32_t, std::int32_t>> positions);
};

struct Carrier {
    std::size_t count = 0;
    std::vector<std::vector<std::int32_t>> columns;  // columns[k][x]
};

enum class Side { Left, Right };

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend b);
bool avx2_available();
/// Backend in use: QP_SIMD=scalar forces the reference kernels, otherwise AVX2 when the CPU has it.
Backend active_backend();

/// out[x] = 1 if X A == A X, else 0. `fixed` is A densely laid out (dim*dim entry indices).
void commute_mask(Backend backend, const RingTables& ring, const ProductPlan& plan, const Carrier& carrier,
                  std::span<const std::int32_t> fixed, std::span<std::uint8_t> out);

/// out[x] = carrier index of C + A X (Side::Left) or C + X A (Side::Right).
void affine_index(Backend backend, const RingTables& ring, const ProductPlan& plan, const Carrier& carrier,
                  std::span<const std::int32_t> fixed, std::span<const std::int32_t> offset, Side side,
                  std::span<std::int32_t> out);

inline void commute_mask(const RingTables& ring, const ProductPlan& plan, const Carrier& carrier,
                         std::span<const std::int32_t> fixed, std::span<std::uint8_t> out) {
    commute_mask(active_backend(), ring, plan, carrier, fixed, out);
}

inline void affine_index(const RingTables& ring, const ProductPlan& plan, const Carrier& carrier,
                         std::span<const std::int32_t> fixed, std::span<const std::int32_t> offset, Side side,
                         std::span<std::int32_t> out) {
    affine_index(active_backend(), ring, plan, carrier, fixed, offset, side, out);
}

namespace detail {
void commute_mask_scalar(const RingTables&, const ProductPlan&, const Carrier&, std::span<const std::int32_t>,
                         std::size_t begin, std::span<std::uint8_t>);
void affine_index_scalar(const RingTables&, const ProductPlan&, const Carrier&, std::span<const std::int32_t>,
                         std::span<const std::int32_t>, Side, std::size_t begin, std::span<std::int32_t>);
#if defined(QP_HAVE_AVX2_KERNELS)
void commute_mask_avx2(const RingTables&, const ProductPlan&, const Carrier&, std::span<const std::int32_t>,
                       std::span<std::uint8_t>);
void affine_index_avx2(const RingTables&, const ProductPlan&, const Carrier&, std::span<const std::int32_t>,
                       std::span<const std::int32_t>, Side, std::span<std::int32_t>);
#endif
}  // namespace detail

}  // namespace qp::kernels
