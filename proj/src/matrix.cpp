#include "qp/matrix.hpp"

#include <array>
#include <cctype>
#include <ostream>

namespace qp {

// ---------------------------------------------------------------------------
// Shape

Shape Shape::upper_triangular(unsigned n) {
    if (n == 0) throw Error(ErrorCode::UnsupportedShape, "TN needs n >= 1");
    if (n == 2) return Shape(ShapeTag::T2);
    return Shape(ShapeTag::TN, n);
}

Shape Shape::parse(std::string_view name) {
    std::string s;
    for (char c : name) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    if (s == "T3") return ShapeTag::T3;
    if (s == "L3") return ShapeTag::L3;
    if (s == "LOW3") return ShapeTag::LOW3;
    if (s == "UP3") return ShapeTag::UP3;
    if (s == "S1") return ShapeTag::S1;
    if (s == "S2") return ShapeTag::S2;
    if (s == "T2") return ShapeTag::T2;
    if (s == "M2") return ShapeTag::M2;
    if (s == "M3") return ShapeTag::M3;
    if (s.rfind("TN", 0) == 0 && s.size() > 2) {
        unsigned n = 0;
        for (std::size_t i = 2; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i])) || n > 64) {
                throw ParseError(i, "bad TN dimension in shape '" + std::string(name) + "'");
            }
            n = n * 10 + static_cast<unsigned>(s[i] - '0');
        }
        return upper_triangular(n);
    }
    throw ParseError(0, "unknown shape '" + std::string(name) + "'");
}

bool Shape::contains(unsigned row, unsigned col) const {
    if (row >= dim_ || col >= dim_) return false;
    if (row == col) return true;
    switch (tag_) {
        case ShapeTag::T3: return row == 1;  // (1,0) and (1,2)
        case ShapeTag::L3: return row == 2 && col == 0;
        case ShapeTag::LOW3: return row == 2;
        case ShapeTag::UP3: return col == 2;
        case ShapeTag::S1: return row == 0 && col == 2;
        case ShapeTag::S2: return row == 2 && col == 1;
        case ShapeTag::T2:
        case ShapeTag::TN: return row < col;
        case ShapeTag::M2:
        case ShapeTag::M3: return true;
    }
    return false;
}

std::vector<std::pair<unsigned, unsigned>> Shape::positions() const {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned i = 0; i < dim_; ++i)
        for (unsigned j = 0; j < dim_; ++j)
            if (contains(i, j)) out.emplace_back(i, j);
    return out;
}

std::string Shape::name() const {
    switch (tag_) {
        case ShapeTag::T3: return "T3";
        case ShapeTag::L3: return "L3";
        case ShapeTag::LOW3: return "LOW3";
        case ShapeTag::UP3: return "UP3";
        case ShapeTag::S1: return "S1";
        case ShapeTag::S2: return "S2";
        case ShapeTag::T2: return "T2";
        case ShapeTag::M2: return "M2";
        case ShapeTag::M3: return "M3";
        case ShapeTag::TN: return "TN" + std::to_string(dim_);
    }
    return {};
}

// ---------------------------------------------------------------------------
// ShapedMatrix

ShapedMatrix ShapedMatrix::zero(const LocalRing& ring, Shape shape) {
    return ShapedMatrix(ring, shape, std::vector<RingElement>(shape.dim() * shape.dim(), ring.zero()));
}

ShapedMatrix ShapedMatrix::identity(const LocalRing& ring, Shape shape) {
    ShapedMatrix m = zero(ring, shape);
    for (unsigned i = 0; i < shape.dim(); ++i) m.entries_[i * shape.dim() + i] = ring.one();
    return m;
}

ShapedMatrix ShapedMatrix::from_rows(const LocalRing& ring, Shape shape,
                                     const std::vector<std::vector<RingElement>>& rows) {
    const unsigned n = shape.dim();
    if (rows.size() != n) {
        throw Error(ErrorCode::ShapeMismatch, shape.name() + " needs " + std::to_string(n) + " rows, got " +
                                                  std::to_string(rows.size()));
    }
    ShapedMatrix m = zero(ring, shape);
    for (unsigned i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw Error(ErrorCode::ShapeMismatch, "row " + std::to_string(i + 1) + " of " + shape.name() + " needs " +
                                                      std::to_string(n) + " entries");
        }
        for (unsigned j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

ShapedMatrix ShapedMatrix::from_ints(const LocalRing& ring, Shape shape,
                                     const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<RingElement>> r;
    for (const auto& row : rows) {
        std::vector<RingElement> out;
        for (long long v : row) out.push_back(ring.from_int(v));
        r.push_back(std::move(out));
    }
    return from_rows(ring, shape, r);
}

void ShapedMatrix::set(unsigned row, unsigned col, RingElement value) {
    if (!(value.ring() == ring_)) throw Error(ErrorCode::RingMismatch, "entry not in " + ring_.spec());
    if (!shape_.contains(row, col) && !value.is_zero()) {
        throw Error(ErrorCode::ShapeMismatch, "entry (" + std::to_string(row + 1) + "," + std::to_string(col + 1) +
                                                  ") must be zero in shape " + shape_.name());
    }
    entries_[row * dim() + col] = std::move(value);
}

ShapedMatrix ShapedMatrix::reshaped(Shape shape) const {
    if (shape.dim() != dim()) throw Error(ErrorCode::ShapeMismatch, "dimension mismatch in reshape");
    ShapedMatrix m = zero(ring_, shape);
    for (unsigned i = 0; i < dim(); ++i)
        for (unsigned j = 0; j < dim(); ++j) m.set(i, j, (*this)(i, j));
    return m;
}

ShapedMatrix ShapedMatrix::transposed(Shape shape) const {
    if (shape.dim() != dim()) throw Error(ErrorCode::ShapeMismatch, "dimension mismatch in transpose");
    ShapedMatrix m = zero(ring_, shape);
    for (unsigned i = 0; i < dim(); ++i)
        for (unsigned j = 0; j < dim(); ++j) m.set(j, i, (*this)(i, j));
    return m;
}

std::string ShapedMatrix::to_string() const {
    std::string out = "[";
    for (unsigned i = 0; i < dim(); ++i) {
        if (i > 0) out += "; ";
        for (unsigned j = 0; j < dim(); ++j) {
            if (j > 0) out += ",";
            out += (*this)(i, j).to_string();
        }
    }
    return out + "]";
}

namespace {

void require_compatible(const ShapedMatrix& a, const ShapedMatrix& b) {
    if (!(a.ring() == b.ring())) {
        throw Error(ErrorCode::RingMismatch, "matrix rings differ: " + a.ring().spec() + " vs " + b.ring().spec());
    }
    if (!(a.shape() == b.shape())) {
        throw Error(ErrorCode::ShapeMismatch, "matrix shapes differ: " + a.shape().name() + " vs " + b.shape().name());
    }
}

}  // namespace

ShapedMatrix operator+(const ShapedMatrix& a, const ShapedMatrix& b) {
    require_compatible(a, b);
    std::vector<RingElement> e;
    e.reserve(a.entries_.size());
    for (std::size_t i = 0; i < a.entries_.size(); ++i) e.push_back(a.entries_[i] + b.entries_[i]);
    return ShapedMatrix(a.ring_, a.shape_, std::move(e));
}

ShapedMatrix operator-(const ShapedMatrix& a) {
    std::vector<RingElement> e;
    e.reserve(a.entries_.size());
    for (const auto& x : a.entries_) e.push_back(-x);
    return ShapedMatrix(a.ring_, a.shape_, std::move(e));
}

ShapedMatrix operator-(const ShapedMatrix& a, const ShapedMatrix& b) { return a + (-b); }

ShapedMatrix operator*(const ShapedMatrix& a, const ShapedMatrix& b) {
    require_compatible(a, b);
    const unsigned n = a.dim();
    const Shape& s = a.shape_;
    ShapedMatrix c = ShapedMatrix::zero(a.ring_, s);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            if (!s.contains(i, j)) continue;
            RingElement acc = a.ring_.zero();
            for (unsigned k = 0; k < n; ++k) {
                if (s.contains(i, k) && s.contains(k, j)) acc += a(i, k) * b(k, j);
            }
            c.entries_[i * n + j] = std::move(acc);
        }
    }
    return c;
}

ShapedMatrix operator*(const RingElement& s, const ShapedMatrix& a) {
    std::vector<RingElement> e;
    e.reserve(a.entries_.size());
    for (const auto& x : a.entries_) e.push_back(s * x);
    return ShapedMatrix(a.ring_, a.shape_, std::move(e));
}

bool operator==(const ShapedMatrix& a, const ShapedMatrix& b) {
    return a.ring_ == b.ring_ && a.shape_ == b.shape_ && a.entries_ == b.entries_;
}

std::ostream& operator<<(std::ostream& os, const ShapedMatrix& a) { return os << a.to_string(); }

bool is_idempotent(const ShapedMatrix& a) { return a * a == a; }
bool commutes(const ShapedMatrix& a, const ShapedMatrix& b) { return a * b == b * a; }

bool is_unit_shaped(const ShapedMatrix& a) {
    if (a.shape().tag() == ShapeTag::M3) {
        throw Error(ErrorCode::UnsupportedShape, "unit test is not offered for M3");
    }
    if (a.shape().tag() == ShapeTag::M2) return is_unit(det2(a));
    for (unsigned i = 0; i < a.dim(); ++i)
        if (!is_unit(a(i, i))) return false;
    return true;
}

bool in_jacobson_shaped(const ShapedMatrix& a) {
    if (a.shape().is_triangular_type()) {
        for (unsigned i = 0; i < a.dim(); ++i)
            if (!in_jacobson(a(i, i))) return false;
        return true;
    }
    // J(M_n(R)) = M_n(J(R)) for commutative local R.
    for (const auto& x : a.entries())
        if (!in_jacobson(x)) return false;
    return true;
}

RingElement trace(const ShapedMatrix& a) {
    RingElement t = a.ring().zero();
    for (unsigned i = 0; i < a.dim(); ++i) t += a(i, i);
    return t;
}

RingElement det2(const ShapedMatrix& a) {
    if (a.dim() != 2) throw Error(ErrorCode::ShapeMismatch, "det2 needs a 2x2 matrix, got " + a.shape().name());
    return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
}

QuadraticCharPoly char_poly_2x2(const ShapedMatrix& a) {
    if (a.dim() != 2) throw Error(ErrorCode::ShapeMismatch, "char_poly_2x2 needs a 2x2 matrix");
    return QuadraticCharPoly{trace(a), det2(a), std::nullopt};
}

// ---------------------------------------------------------------------------
// Shape isomorphisms

namespace {

ShapeIso make_iso(IsoKind kind) {
    using P = std::pair<unsigned, unsigned>;
    switch (kind) {
        case IsoKind::L3ToT2Scalar:
            return {kind, ShapeTag::L3, ShapeTag::T2, P{1, 1},
                    {{{2, 2}, {0, 0}}, {{2, 0}, {0, 1}}, {{0, 0}, {1, 1}}}, false};
        case IsoKind::T3ToLow3:
            return {kind, ShapeTag::T3, ShapeTag::LOW3, std::nullopt,
                    {{{0, 0}, {0, 0}}, {{2, 2}, {1, 1}}, {{1, 0}, {2, 0}}, {{1, 2}, {2, 1}}, {{1, 1}, {2, 2}}},
                    false};
        case IsoKind::Up3ToLow3:
            return {kind, ShapeTag::UP3, ShapeTag::LOW3, std::nullopt,
                    {{{0, 0}, {0, 0}}, {{0, 2}, {2, 0}}, {{1, 1}, {1, 1}}, {{1, 2}, {2, 1}}, {{2, 2}, {2, 2}}},
                    true};
        case IsoKind::S1ToS2:
            return {kind, ShapeTag::S1, ShapeTag::S2, std::nullopt,
                    {{{1, 1}, {0, 0}}, {{2, 2}, {1, 1}}, {{0, 2}, {2, 1}}, {{0, 0}, {2, 2}}}, false};
        case IsoKind::S1ToT2Scalar:
            return {kind, ShapeTag::S1, ShapeTag::T2, P{1, 1},
                    {{{0, 0}, {0, 0}}, {{0, 2}, {0, 1}}, {{2, 2}, {1, 1}}}, false};
        case IsoKind::S2ToT2Scalar:
            return {kind, ShapeTag::S2, ShapeTag::T2, P{0, 0},
                    {{{2, 2}, {0, 0}}, {{2, 1}, {0, 1}}, {{1, 1}, {1, 1}}}, false};
    }
    throw Error(ErrorCode::UnsupportedShape, "unknown iso");
}

}  // namespace

const ShapeIso& shape_iso(IsoKind kind) {
    static const std::array<ShapeIso, 6> table = {
        make_iso(IsoKind::L3ToT2Scalar), make_iso(IsoKind::T3ToLow3),     make_iso(IsoKind::Up3ToLow3),
        make_iso(IsoKind::S1ToS2),       make_iso(IsoKind::S1ToT2Scalar), make_iso(IsoKind::S2ToT2Scalar),
    };
    return table[static_cast<std::size_t>(kind)];
}

IsoImage apply_iso(const ShapeIso& iso, const ShapedMatrix& a) {
    if (!(a.shape() == iso.source)) {
        throw Error(ErrorCode::ShapeMismatch, "iso expects " + iso.source.name() + ", got " + a.shape().name());
    }
    ShapedMatrix out = ShapedMatrix::zero(a.ring(), iso.target);
    for (const auto& r : iso.map) out.set(r.to.first, r.to.second, a(r.from.first, r.from.second));
    std::optional<RingElement> scalar;
    if (iso.scalar_source) scalar = a(iso.scalar_source->first, iso.scalar_source->second);
    return IsoImage{std::move(out), std::move(scalar)};
}

ShapedMatrix pull_back(const ShapeIso& iso, const IsoImage& image) {
    if (!(image.matrix.shape() == iso.target)) {
        throw Error(ErrorCode::ShapeMismatch,
                    "pull_back expects " + iso.target.name() + ", got " + image.matrix.shape().name());
    }
    if (iso.scalar_source.has_value() != image.scalar.has_value()) {
        throw Error(ErrorCode::ShapeMismatch, "scalar component mismatch in pull_back");
    }
    ShapedMatrix out = ShapedMatrix::zero(image.matrix.ring(), iso.source);
    for (const auto& r : iso.map) out.set(r.from.first, r.from.second, image.matrix(r.to.first, r.to.second));
    if (iso.scalar_source) out.set(iso.scalar_source->first, iso.scalar_source->second, *image.scalar);
    return out;
}

ShapedMatrix corner_embed_t2(const ShapedMatrix& t2) {
    if (!(t2.shape() == Shape(ShapeTag::T2))) throw Error(ErrorCode::ShapeMismatch, "corner_embed_t2 expects T2");
    ShapedMatrix out = ShapedMatrix::zero(t2.ring(), ShapeTag::T3);
    out.set(1, 1, t2(0, 0));
    out.set(1, 0, t2(0, 1));
    out.set(0, 0, t2(1, 1));
    return out;
}

ShapedMatrix corner_extract_t2(const ShapedMatrix& t3) {
    if (!(t3.shape() == Shape(ShapeTag::T3))) throw Error(ErrorCode::ShapeMismatch, "corner_extract_t2 expects T3");
    ShapedMatrix out = ShapedMatrix::zero(t3.ring(), ShapeTag::T2);
    out.set(0, 0, t3(1, 1));
    out.set(0, 1, t3(1, 0));
    out.set(1, 1, t3(0, 0));
    return out;
}

}  // namespace qp
