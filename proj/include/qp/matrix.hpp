#pragma once

// Matrices over a LocalRing carrying a zero-pattern shape tag. All shapes here are
// subrings of M_n(R); indices are 0-based in code (entry (2,1) of the usual
// 1-based notation is `(1, 0)`).
//
//   T3   [* 0 0; * * *; 0 0 *]      L3  [* 0 0; 0 * 0; * 0 *]
//   LOW3 [* 0 0; 0 * 0; * * *]      UP3 [* 0 *; 0 * *; 0 0 *]
//   S1   [* 0 *; 0 * 0; 0 0 *]      S2  [* 0 0; 0 * 0; 0 * *]
//   T2 / TN(n) upper triangular;  M2 / M3 full.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qp/ring.hpp"

namespace qp {

enum class ShapeTag { T3, L3, LOW3, UP3, S1, S2, T2, M2, M3, TN };

class Shape {
public:
    constexpr Shape(ShapeTag tag) : tag_(tag), dim_(default_dim(tag)) {}  // NOLINT(google-explicit-constructor)
    static Shape upper_triangular(unsigned n);
    /// Parses `T3`, `L3`, `LOW3`, `UP3`, `S1`, `S2`, `T2`, `M2`, `M3`, `TN<n>` / `T<n>`.
    static Shape parse(std::string_view name);

    ShapeTag tag() const { return tag_; }
    unsigned dim() const { return dim_; }
    bool contains(unsigned row, unsigned col) const;
    /// Positions inside the mask in row-major order.
    std::vector<std::pair<unsigned, unsigned>> positions() const;
    /// Shapes whose units are exactly the matrices with unit diagonal (all except M2, M3).
    bool is_triangular_type() const { return tag_ != ShapeTag::M2 && tag_ != ShapeTag::M3; }
    std::string name() const;

    friend bool operator==(const Shape&, const Shape&) = default;

private:
    constexpr Shape(ShapeTag tag, unsigned dim) : tag_(tag), dim_(dim) {}
    static constexpr unsigned default_dim(ShapeTag tag) {
        switch (tag) {
            case ShapeTag::T2:
            case ShapeTag::M2: return 2;
            case ShapeTag::TN: return 1;
            default: return 3;
        }
    }

    ShapeTag tag_;
    unsigned dim_;
};

class ShapedMatrix {
public:
    static ShapedMatrix zero(const LocalRing& ring, Shape shape);
    static ShapedMatrix identity(const LocalRing& ring, Shape shape);
    /// Throws ShapeMismatch when a nonzero entry falls outside the mask.
    static ShapedMatrix from_rows(const LocalRing& ring, Shape shape, const std::vector<std::vector<RingElement>>& rows);
    static ShapedMatrix from_ints(const LocalRing& ring, Shape shape, const std::vector<std::vector<long long>>& rows);

    const LocalRing& ring() const { return ring_; }
    const Shape& shape() const { return shape_; }
    unsigned dim() const { return shape_.dim(); }

    const RingElement& operator()(unsigned row, unsigned col) const { return entries_[row * dim() + col]; }
    void set(unsigned row, unsigned col, RingElement value);
    const std::vector<RingElement>& entries() const { return entries_; }

    /// Same entries under another shape whose mask admits them.
    ShapedMatrix reshaped(Shape shape) const;
    ShapedMatrix transposed(Shape shape) const;

    std::string to_string() const;

    friend ShapedMatrix operator+(const ShapedMatrix& a, const ShapedMatrix& b);
    friend ShapedMatrix operator-(const ShapedMatrix& a, const ShapedMatrix& b);
    friend ShapedMatrix operator*(const ShapedMatrix& a, const ShapedMatrix& b);
    friend ShapedMatrix operator-(const ShapedMatrix& a);
    friend ShapedMatrix operator*(const RingElement& s, const ShapedMatrix& a);
    friend bool operator==(const ShapedMatrix& a, const ShapedMatrix& b);

private:
    ShapedMatrix(LocalRing ring, Shape shape, std::vector<RingElement> entries)
        : ring_(std::move(ring)), shape_(shape), entries_(std::move(entries)) {}

    LocalRing ring_;
    Shape shape_;
    std::vector<RingElement> entries_;
};

std::ostream& operator<<(std::ostream& os, const ShapedMatrix& a);

bool is_idempotent(const ShapedMatrix& a);
bool commutes(const ShapedMatrix& a, const ShapedMatrix& b);

/// Triangular-type shapes: unit iff every diagonal entry is a unit. M2: unit iff det is a unit.
bool is_unit_shaped(const ShapedMatrix& a);
/// Triangular-type shapes: diagonal in J(R), off-diagonal free. M2: every entry in J(R).
bool in_jacobson_shaped(const ShapedMatrix& a);

RingElement trace(const ShapedMatrix& a);
/// 2x2 only.
RingElement det2(const ShapedMatrix& a);

/// t^2 - tr*t + det, with the root split (alpha in J, beta in U) once found.
struct QuadraticCharPoly {
    RingElement tr;
    RingElement det;
    std::optional<std::pair<RingElement, RingElement>> roots;

    RingElement evaluate(const RingElement& t) const { return t * t - tr * t + det; }
};

QuadraticCharPoly char_poly_2x2(const ShapedMatrix& a);

// ---------------------------------------------------------------------------
// Shape isomorphisms

enum class IsoKind {
    L3ToT2Scalar,  // [a11 0 0; 0 a22 0; a31 0 a33] -> ([a33 a31; 0 a11], a22)
    T3ToLow3,      // [a11 0 0; a21 a22 a23; 0 0 a33] -> [a11 0 0; 0 a33 0; a21 a23 a22]
    Up3ToLow3,     // transpose; reverses products
    S1ToS2,        // [a11 0 a13; 0 a22 0; 0 0 a33] -> [a22 0 0; 0 a33 0; 0 a13 a11]
    S1ToT2Scalar,  // ([a11 a13; 0 a33], a22)
    S2ToT2Scalar,  // ([a33 a32; 0 a22], a11)
};

struct Relocation {
    std::pair<unsigned, unsigned> from;
    std::pair<unsigned, unsigned> to;
};

struct ShapeIso {
    IsoKind kind;
    Shape source;
    Shape target;
    /// Source position carried to the extra scalar factor of `T2 (+) R`, if any.
    std::optional<std::pair<unsigned, unsigned>> scalar_source;
    std::vector<Relocation> map;
    /// Transpose-type maps satisfy iso(AB) = iso(B) iso(A).
    bool reverses_products = false;
};

/// Image of a matrix under a ShapeIso: a matrix of the target shape, plus the
/// scalar component when the target is a product `T2 (+) R`.
struct IsoImage {
    ShapedMatrix matrix;
    std::optional<RingElement> scalar;

    friend bool operator==(const IsoImage&, const IsoImage&) = default;
};

const ShapeIso& shape_iso(IsoKind kind);
IsoImage apply_iso(const ShapeIso& iso, const ShapedMatrix& a);
/// Inverse map: rebuilds the source-shape matrix from an image.
ShapedMatrix pull_back(const ShapeIso& iso, const IsoImage& image);

// ---------------------------------------------------------------------------
// Corner identification T2(R) = E T3(R) E with E = diag(1, 1, 0).
//
// The corner E T3 E consists of [c 0 0; b a 0; 0 0 0], which is lower triangular, so the
// multiplicative identification swaps the two indices:
//   [a b; 0 c]  <->  a22 = a, a21 = b, a11 = c, everything else 0.

ShapedMatrix corner_embed_t2(const ShapedMatrix& t2);
/// Reads the (1,1)/(2,1)/(2,2) corner entries back into T2; entries outside the corner are ignored.
ShapedMatrix corner_extract_t2(const ShapedMatrix& t3);

}  // namespace qp
