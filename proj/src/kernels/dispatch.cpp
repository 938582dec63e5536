#include <cstdlib>
#include <string>

#include "qp/error.hpp"
#include "qp/kernels.hpp"

namespace qp::kernels {

std::string_view to_string(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(QP_HAVE_AVX2_KERNELS)
    static const bool has = __builtin_cpu_supports("avx2");
    return has;
#else
    return false;
#endif
}

Backend active_backend() {
    static const Backend chosen = [] {
        const char* env = std::getenv("QP_SIMD");
        if (env != nullptr && std::string(env) == "scalar") return Backend::Scalar;
        return avx2_available() ? Backend::Avx2 : Backend::Scalar;
    }();
    return chosen;
}

namespace {

void check_sizes(const Carrier& carrier, std::size_t out_size) {
    if (out_size < carrier.count) throw Error(ErrorCode::PreconditionViolation, "kernel output span too small");
}

void require_avx2() {
    if (!avx2_available()) throw Error(ErrorCode::PreconditionViolation, "AVX2 kernels are not available on this CPU");
}

}  // namespace

void commute_mask(Backend backend, const RingTables& ring, const ProductPlan& plan, const Carrier& carrier,
                  std::span<const std::int32_t> fixed, std::span<std::uint8_t> out) {
    check_sizes(carrier, out.size());
    if (backend == Backend::Avx2) {
        require_avx2();
#if defined(QP_HAVE_AVX2_KERNELS)
        detail::commute_mask_avx2(ring, plan, carrier, fixed, out);
        return;
#endif
    }
    detail::commute_mask_scalar(ring, plan, carrier, fixed, 0, out);
}

void affine_index(Backend backend, const RingTables& ring, const ProductPlan& plan, const Carrier& carrier,
                  std::span<const std::int32_t> fixed, std::span<const std::int32_t> offset, Side side,
                  std::span<std::int32_t> out) {
    check_sizes(carrier, out.size());
    if (backend == Backend::Avx2) {
        require_avx2();
#if defined(QP_HAVE_AVX2_KERNELS)
        detail::affine_index_avx2(ring, plan, carrier, fixed, offset, side, out);
        return;
#endif
    }
    detail::affine_index_scalar(ring, plan, carrier, fixed, offset, side, 0, out);
}

}  // namespace qp::kernels
