#pragma once

// Definition-level brute force over finite rings. A FiniteRingView enumerates every
// matrix of one shape over a finite LocalRing and answers commutant, double commutant,
// quasinilpotence, quasipolar and strongly rad clean questions by scanning. Nothing here
// uses the constructive decompositions; this is the ground truth they are tested against.
//
// Elements of a view are addressed by index: entry k (in the shape's row-major mask
// order) contributes ring.index_of(entry) * N^k, N = |R|. Index 0 is the zero matrix.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "qp/kernels.hpp"
#include "qp/matrix.hpp"
#include "qp/witness.hpp"

namespace qp {

class FiniteRingView {
public:
    static constexpr std::size_t kMaxCarrier = 1'000'000;

    /// Throws InfiniteRing for non-finite rings, CarrierTooLarge past kMaxCarrier elements.
    FiniteRingView(LocalRing ring, Shape shape);
    /// The ring itself as 1x1 matrices.
    static FiniteRingView scalars(LocalRing ring);

    ~FiniteRingView();
    FiniteRingView(FiniteRingView&&) noexcept;
    FiniteRingView& operator=(FiniteRingView&&) noexcept;

    const LocalRing& ring() const;
    const Shape& shape() const;
    std::size_t size() const;

    ShapedMatrix element(std::size_t index) const;
    std::size_t index_of(const ShapedMatrix& a) const;
    std::size_t one_index() const;

    std::size_t add(std::size_t x, std::size_t y) const;
    std::size_t sub(std::size_t x, std::size_t y) const;
    std::size_t mul(std::size_t x, std::size_t y) const;

    /// mask[x] = 1 iff element x commutes with a.
    std::vector<std::uint8_t> commute_mask(std::size_t a) const;
    std::vector<std::size_t> commutant(std::size_t a) const;
    std::vector<std::size_t> double_commutant(std::size_t a) const;
    /// comm(a) is contained in comm(p).
    bool in_double_commutant(std::size_t a, std::size_t p) const;

    bool is_unit(std::size_t x) const;
    /// 1 + a x is a unit for every x in comm(a).
    bool is_quasinilpotent(std::size_t a) const;
    std::vector<std::size_t> jacobson() const;
    std::vector<std::size_t> idempotents() const;

    /// Every idempotent p in comm^2(a) with a + p a unit and a p quasinilpotent.
    std::vector<std::size_t> quasipolar_idempotents(std::size_t a) const;
    /// Every idempotent e with ae = ea, a - e a unit and eae in J(eRe).
    std::vector<std::size_t> rad_clean_idempotents(std::size_t a) const;
    /// Throws NotIdempotent. False unless e is in comm^2(a), ae is a unit of eRe and
    /// a(1 - e) is quasinilpotent in (1 - e)R(1 - e).
    bool corner_validate(std::size_t a, std::size_t e) const;

    bool in_corner(std::size_t e, std::size_t x) const;
    bool is_corner_unit(std::size_t e, std::size_t x) const;
    bool in_corner_jacobson(std::size_t e, std::size_t x) const;

    // Matrix-valued conveniences.
    std::vector<ShapedMatrix> commutant(const ShapedMatrix& a) const;
    std::vector<ShapedMatrix> double_commutant(const ShapedMatrix& a) const;
    bool is_quasinilpotent(const ShapedMatrix& a) const;
    std::vector<QuasipolarWitness> quasipolar_search(const ShapedMatrix& a) const;
    std::vector<RadCleanWitness> rad_clean_search(const ShapedMatrix& a) const;
    bool corner_validate(const ShapedMatrix& a, const ShapedMatrix& e) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// All matrices of `shape` over a finite ring, in index order.
std::vector<ShapedMatrix> enumerate_shape(const LocalRing& ring, Shape shape);

}  // namespace qp
