#include "qp/oracle.hpp"

#include <algorithm>
#include <mutex>

#include "qp/parallel.hpp"

namespace qp {

namespace {

template <class T>
class Lazy {
public:
    template <class F>
    const T& get(F&& make) {
        std::call_once(flag_, [&] { value_ = make(); });
        return value_;
    }

private:
    std::once_flag flag_;
    T value_{};
};

using Mask = std::vector<std::uint8_t>;

struct CornerData {
    Lazy<Mask> members;
    Lazy<Mask> units;
    Lazy<Mask> jacobson;
};

struct IdempotentData {
    std::vector<std::size_t> list;  // ascending
    std::vector<Mask> commute;      // commute mask of each idempotent
};

}  // namespace

struct FiniteRingView::Impl {
    LocalRing ring;
    Shape shape;
    std::vector<RingElement> elements;
    kernels::RingTables tables;
    std::vector<std::int32_t> neg;
    kernels::ProductPlan plan;
    kernels::Carrier carrier;
    std::size_t one = 0;

    Lazy<IdempotentData> idempotents;
    std::unique_ptr<CornerData[]> corners;

    Impl(LocalRing r, Shape s) : ring(std::move(r)), shape(s) {
        if (!ring.is_finite()) throw Error(ErrorCode::InfiniteRing, ring.spec() + " is not finite");
        elements = ring.enumerate();
        const auto n = static_cast<std::int32_t>(elements.size());
        tables.order = n;
        tables.zero = 0;
        tables.add.resize(static_cast<std::size_t>(n) * n);
        tables.mul.resize(static_cast<std::size_t>(n) * n);
        neg.resize(static_cast<std::size_t>(n));
        for (std::int32_t i = 0; i < n; ++i) {
            neg[i] = static_cast<std::int32_t>(ring.index_of(-elements[i]));
            for (std::int32_t j = 0; j < n; ++j) {
                tables.add[i * n + j] = static_cast<std::int32_t>(ring.index_of(elements[i] + elements[j]));
                tables.mul[i * n + j] = static_cast<std::int32_t>(ring.index_of(elements[i] * elements[j]));
            }
        }

        std::vector<std::pair<std::int32_t, std::int32_t>> positions;
        for (auto [r0, c0] : shape.positions()) positions.emplace_back(r0, c0);
        std::size_t count = 1;
        for (std::size_t k = 0; k < positions.size(); ++k) {
            count *= static_cast<std::size_t>(n);
            if (count > kMaxCarrier) {
                throw Error(ErrorCode::CarrierTooLarge,
                            shape.name() + " over " + ring.spec() + " exceeds " + std::to_string(kMaxCarrier) + " elements");
            }
        }
        plan = kernels::ProductPlan::build(static_cast<std::int32_t>(shape.dim()), std::move(positions));

        carrier.count = count;
        carrier.columns.assign(plan.positions.size(), std::vector<std::int32_t>(count));
        for (std::size_t x = 0; x < count; ++x) {
            std::size_t rest = x;
            for (auto& column : carrier.columns) {
                column[x] = static_cast<std::int32_t>(rest % static_cast<std::size_t>(n));
                rest /= static_cast<std::size_t>(n);
            }
        }

        const auto one_digit = static_cast<std::size_t>(ring.index_of(ring.one()));
        std::size_t weight = 1;
        for (const auto& [r0, c0] : plan.positions) {
            if (r0 == c0) one += one_digit * weight;
            weight *= static_cast<std::size_t>(n);
        }
    }

    std::int32_t digit(std::size_t x, std::size_t k) const { return carrier.columns[k][x]; }

    std::vector<std::int32_t> dense(std::size_t x) const {
        std::vector<std::int32_t> out(static_cast<std::size_t>(plan.dim * plan.dim), 0);
        for (std::size_t k = 0; k < plan.positions.size(); ++k) {
            const auto [r0, c0] = plan.positions[k];
            out[static_cast<std::size_t>(r0 * plan.dim + c0)] = digit(x, k);
        }
        return out;
    }

    template <class F>
    std::size_t combine(F&& entry) const {
        std::size_t index = 0;
        std::size_t weight = 1;
        for (std::size_t k = 0; k < plan.positions.size(); ++k) {
            index += static_cast<std::size_t>(entry(k)) * weight;
            weight *= static_cast<std::size_t>(tables.order);
        }
        return index;
    }

    std::size_t add(std::size_t x, std::size_t y) const {
        return combine([&](std::size_t k) { return tables.add[digit(x, k) * tables.order + digit(y, k)]; });
    }

    std::size_t negate(std::size_t x) const {
        return combine([&](std::size_t k) { return neg[digit(x, k)]; });
    }

    std::size_t mul(std::size_t x, std::size_t y) const {
        const auto fixed = dense(y);
        return combine([&](std::size_t k) {
            std::int32_t acc = 0;
            for (const auto& t : plan.right[k]) {
                acc = tables.add[acc * tables.order + tables.mul[digit(x, t.carrier_pos) * tables.order + fixed[t.fixed_flat]]];
            }
            return acc;
        });
    }

    Mask commute_mask(std::size_t a) const {
        Mask out(carrier.count);
        const auto fixed = dense(a);
        kernels::commute_mask(tables, plan, carrier, fixed, out);
        return out;
    }

    /// Index of c + a X (Left) or c + X a (Right) for every carrier element X.
    std::vector<std::int32_t> affine(std::size_t a, std::size_t c, kernels::Side side) const {
        std::vector<std::int32_t> out(carrier.count);
        const auto fixed = dense(a);
        const auto offset = dense(c);
        kernels::affine_index(tables, plan, carrier, fixed, offset, side, out);
        return out;
    }

    const IdempotentData& idempotent_data() {
        return idempotents.get([&] {
            IdempotentData data;
            Mask flag(carrier.count);
            parallel_for(carrier.count, [&](std::size_t x) { flag[x] = mul(x, x) == x ? 1 : 0; });
            for (std::size_t x = 0; x < carrier.count; ++x)
                if (flag[x]) data.list.push_back(x);
            data.commute.resize(data.list.size());
            parallel_for(data.list.size(), [&](std::size_t i) { data.commute[i] = commute_mask(data.list[i]); });
            corners = std::make_unique<CornerData[]>(data.list.size());
            return data;
        });
    }

    std::size_t idempotent_slot(std::size_t e) {
        const auto& list = idempotent_data().list;
        auto it = std::lower_bound(list.begin(), list.end(), e);
        if (it == list.end() || *it != e) {
            throw Error(ErrorCode::NotIdempotent, element_string(e) + " is not idempotent");
        }
        return static_cast<std::size_t>(it - list.begin());
    }

    std::string element_string(std::size_t x) const {
        ShapedMatrix m = ShapedMatrix::zero(ring, shape);
        for (std::size_t k = 0; k < plan.positions.size(); ++k) {
            const auto [r0, c0] = plan.positions[k];
            m.set(static_cast<unsigned>(r0), static_cast<unsigned>(c0), elements[digit(x, k)]);
        }
        return m.to_string();
    }

    const Mask& corner_members(std::size_t e) {
        CornerData& cd = corners[idempotent_slot(e)];
        return cd.members.get([&] {
            const auto left = affine(e, 0, kernels::Side::Left);
            const auto right = affine(e, 0, kernels::Side::Right);
            Mask m(carrier.count);
            for (std::size_t x = 0; x < carrier.count; ++x) {
                m[x] = static_cast<std::size_t>(left[x]) == x && static_cast<std::size_t>(right[x]) == x ? 1 : 0;
            }
            return m;
        });
    }

    const Mask& corner_units(std::size_t e) {
        const Mask& members = corner_members(e);
        CornerData& cd = corners[idempotent_slot(e)];
        return cd.units.get([&] {
            Mask units(carrier.count);
            parallel_for(carrier.count, [&](std::size_t z) {
                if (!members[z]) return;
                const auto prod = affine(z, 0, kernels::Side::Left);
                for (std::size_t x = 0; x < carrier.count; ++x) {
                    if (members[x] && static_cast<std::size_t>(prod[x]) == e) {
                        units[z] = 1;
                        return;
                    }
                }
            });
            return units;
        });
    }

    const Mask& corner_jacobson(std::size_t e) {
        const Mask& members = corner_members(e);
        const Mask& units = corner_units(e);
        CornerData& cd = corners[idempotent_slot(e)];
        return cd.jacobson.get([&] {
            Mask jac(carrier.count);
            parallel_for(carrier.count, [&](std::size_t y) {
                if (!members[y]) return;
                const auto shifted = affine(y, e, kernels::Side::Right);  // e + s y
                for (std::size_t s = 0; s < carrier.count; ++s) {
                    if (members[s] && !units[static_cast<std::size_t>(shifted[s])]) return;
                }
                jac[y] = 1;
            });
            return jac;
        });
    }

    /// b is quasinilpotent in the corner fRf: f + b x is a corner unit for every corner x commuting with b.
    bool corner_quasinilpotent(std::size_t f, std::size_t b) {
        const Mask& members = corner_members(f);
        const Mask& units = corner_units(f);
        const Mask comm = commute_mask(b);
        const auto shifted = affine(b, f, kernels::Side::Left);
        for (std::size_t x = 0; x < carrier.count; ++x) {
            if (members[x] && comm[x] && !units[static_cast<std::size_t>(shifted[x])]) return false;
        }
        return true;
    }
};

FiniteRingView::FiniteRingView(LocalRing ring, Shape shape) : impl_(std::make_unique<Impl>(std::move(ring), shape)) {}

FiniteRingView FiniteRingView::scalars(LocalRing ring) { return FiniteRingView(std::move(ring), Shape::upper_triangular(1)); }

FiniteRingView::~FiniteRingView() = default;
FiniteRingView::FiniteRingView(FiniteRingView&&) noexcept = default;
FiniteRingView& FiniteRingView::operator=(FiniteRingView&&) noexcept = default;

const LocalRing& FiniteRingView::ring() const { return impl_->ring; }
const Shape& FiniteRingView::shape() const { return impl_->shape; }
std::size_t FiniteRingView::size() const { return impl_->carrier.count; }
std::size_t FiniteRingView::one_index() const { return impl_->one; }

ShapedMatrix FiniteRingView::element(std::size_t index) const {
    if (index >= size()) throw Error(ErrorCode::PreconditionViolation, "element index out of range");
    ShapedMatrix m = ShapedMatrix::zero(impl_->ring, impl_->shape);
    for (std::size_t k = 0; k < impl_->plan.positions.size(); ++k) {
        const auto [r0, c0] = impl_->plan.positions[k];
        m.set(static_cast<unsigned>(r0), static_cast<unsigned>(c0), impl_->elements[impl_->digit(index, k)]);
    }
    return m;
}

std::size_t FiniteRingView::index_of(const ShapedMatrix& a) const {
    if (!(a.ring() == impl_->ring)) throw Error(ErrorCode::RingMismatch, a.ring().spec() + " vs " + impl_->ring.spec());
    if (!(a.shape() == impl_->shape)) {
        throw Error(ErrorCode::ShapeMismatch, a.shape().name() + " vs " + impl_->shape.name());
    }
    return impl_->combine([&](std::size_t k) {
        const auto [r0, c0] = impl_->plan.positions[k];
        return impl_->ring.index_of(a(static_cast<unsigned>(r0), static_cast<unsigned>(c0)));
    });
}

std::size_t FiniteRingView::add(std::size_t x, std::size_t y) const { return impl_->add(x, y); }
std::size_t FiniteRingView::sub(std::size_t x, std::size_t y) const { return impl_->add(x, impl_->negate(y)); }
std::size_t FiniteRingView::mul(std::size_t x, std::size_t y) const { return impl_->mul(x, y); }

std::vector<std::uint8_t> FiniteRingView::commute_mask(std::size_t a) const { return impl_->commute_mask(a); }

std::vector<std::size_t> FiniteRingView::commutant(std::size_t a) const {
    const Mask mask = commute_mask(a);
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < mask.size(); ++x)
        if (mask[x]) out.push_back(x);
    return out;
}

std::vector<std::size_t> FiniteRingView::double_commutant(std::size_t a) const {
    Mask all(size(), 1);
    for (std::size_t y : commutant(a)) {
        const Mask m = commute_mask(y);
        for (std::size_t x = 0; x < all.size(); ++x) all[x] &= m[x];
    }
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < all.size(); ++x)
        if (all[x]) out.push_back(x);
    return out;
}

bool FiniteRingView::in_double_commutant(std::size_t a, std::size_t p) const {
    const Mask ma = commute_mask(a);
    const Mask mp = commute_mask(p);
    for (std::size_t x = 0; x < ma.size(); ++x)
        if (ma[x] && !mp[x]) return false;
    return true;
}

bool FiniteRingView::is_unit(std::size_t x) const { return impl_->corner_units(impl_->one)[x] != 0; }

bool FiniteRingView::is_quasinilpotent(std::size_t a) const { return impl_->corner_quasinilpotent(impl_->one, a); }

std::vector<std::size_t> FiniteRingView::jacobson() const {
    const Mask& jac = impl_->corner_jacobson(impl_->one);
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < jac.size(); ++x)
        if (jac[x]) out.push_back(x);
    return out;
}

std::vector<std::size_t> FiniteRingView::idempotents() const { return impl_->idempotent_data().list; }

std::vector<std::size_t> FiniteRingView::quasipolar_idempotents(std::size_t a) const {
    const IdempotentData& ids = impl_->idempotent_data();
    const Mask ma = commute_mask(a);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ids.list.size(); ++i) {
        const Mask& mp = ids.commute[i];
        bool in_comm2 = true;
        for (std::size_t x = 0; in_comm2 && x < ma.size(); ++x) in_comm2 = !ma[x] || mp[x];
        if (!in_comm2) continue;
        const std::size_t p = ids.list[i];
        if (is_unit(add(a, p)) && is_quasinilpotent(mul(a, p))) out.push_back(p);
    }
    return out;
}

std::vector<std::size_t> FiniteRingView::rad_clean_idempotents(std::size_t a) const {
    const IdempotentData& ids = impl_->idempotent_data();
    const Mask ma = commute_mask(a);
    std::vector<std::size_t> out;
    for (std::size_t e : ids.list) {
        if (!ma[e] || !is_unit(sub(a, e))) continue;
        if (in_corner_jacobson(e, mul(mul(e, a), e))) out.push_back(e);
    }
    return out;
}

bool FiniteRingView::corner_validate(std::size_t a, std::size_t e) const {
    if (mul(e, e) != e) throw Error(ErrorCode::NotIdempotent, impl_->element_string(e) + " is not idempotent");
    if (!in_double_commutant(a, e)) return false;
    if (!is_corner_unit(e, mul(a, e))) return false;
    const std::size_t f = sub(impl_->one, e);
    return impl_->corner_quasinilpotent(f, mul(a, f));
}

bool FiniteRingView::in_corner(std::size_t e, std::size_t x) const { return impl_->corner_members(e)[x] != 0; }
bool FiniteRingView::is_corner_unit(std::size_t e, std::size_t x) const { return impl_->corner_units(e)[x] != 0; }
bool FiniteRingView::in_corner_jacobson(std::size_t e, std::size_t x) const {
    return impl_->corner_jacobson(e)[x] != 0;
}

std::vector<ShapedMatrix> FiniteRingView::commutant(const ShapedMatrix& a) const {
    std::vector<ShapedMatrix> out;
    for (std::size_t x : commutant(index_of(a))) out.push_back(element(x));
    return out;
}

std::vector<ShapedMatrix> FiniteRingView::double_commutant(const ShapedMatrix& a) const {
    std::vector<ShapedMatrix> out;
    for (std::size_t x : double_commutant(index_of(a))) out.push_back(element(x));
    return out;
}

bool FiniteRingView::is_quasinilpotent(const ShapedMatrix& a) const { return is_quasinilpotent(index_of(a)); }

std::vector<QuasipolarWitness> FiniteRingView::quasipolar_search(const ShapedMatrix& a) const {
    std::vector<QuasipolarWitness> out;
    for (std::size_t p : quasipolar_idempotents(index_of(a))) {
        ShapedMatrix pm = element(p);
        out.push_back({pm, a + pm, a * pm, Comm2Evidence::FiniteExhaustive});
    }
    return out;
}

std::vector<RadCleanWitness> FiniteRingView::rad_clean_search(const ShapedMatrix& a) const {
    std::vector<RadCleanWitness> out;
    for (std::size_t e : rad_clean_idempotents(index_of(a))) {
        ShapedMatrix em = element(e);
        out.push_back({em, a - em, em * a * em});
    }
    return out;
}

bool FiniteRingView::corner_validate(const ShapedMatrix& a, const ShapedMatrix& e) const {
    return corner_validate(index_of(a), index_of(e));
}

std::vector<ShapedMatrix> enumerate_shape(const LocalRing& ring, Shape shape) {
    FiniteRingView view(ring, shape);
    std::vector<ShapedMatrix> out;
    out.reserve(view.size());
    for (std::size_t x = 0; x < view.size(); ++x) out.push_back(view.element(x));
    return out;
}

}  // namespace qp
