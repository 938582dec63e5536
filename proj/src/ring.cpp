#include "qp/ring.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace qp {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::RingMismatch: return "RingMismatch";
        case ErrorCode::NotAUnit: return "NotAUnit";
        case ErrorCode::InfiniteRing: return "InfiniteRing";
        case ErrorCode::InvalidRing: return "InvalidRing";
        case ErrorCode::Parse: return "ParseError";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::UnsupportedShape: return "UnsupportedShape";
        case ErrorCode::NotBleachedInstance: return "NotBleachedInstance";
        case ErrorCode::PreconditionViolation: return "PreconditionViolation";
        case ErrorCode::NotQuasipolar: return "NotQuasipolar";
        case ErrorCode::BadSeed: return "BadSeed";
        case ErrorCode::PivotNotUnit: return "PivotNotUnit";
        case ErrorCode::NoConstantSplit: return "NoConstantSplit";
        case ErrorCode::ConstantNotQuasipolar: return "ConstantNotQuasipolar";
        case ErrorCode::NotIdempotent: return "NotIdempotent";
        case ErrorCode::CarrierTooLarge: return "CarrierTooLarge";
    }
    return "Unknown";
}

struct LocalRing::Data {
    RingKind kind;
    std::uint64_t p = 0;
    unsigned k = 1;
    std::uint64_t modulus = 0;
    std::optional<LocalRing> base;
    unsigned precision = 0;
};

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// Moduli stay below 2^62 so sums never wrap; products go through 128 bits.
constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}

std::uint64_t mod_reduce(const BigInt& v, std::uint64_t n) {
    BigInt r = v % n;
    if (r < 0) r += n;
    return r.convert_to<std::uint64_t>();
}

// Inverse of a modulo n via extended Euclid; a must be coprime to n.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t n) {
    __int128 t = 0, new_t = 1;
    __int128 r = n, new_r = a;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += n;
    return static_cast<std::uint64_t>(t);
}

Fraction make_fraction(BigInt num, BigInt den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    BigInt g = gcd(num < 0 ? BigInt(-num) : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
    return Fraction{std::move(num), std::move(den)};
}

void require_same_ring(const RingElement& a, const RingElement& b) {
    if (!(a.ring() == b.ring())) {
        throw Error(ErrorCode::RingMismatch,
                    "ring mismatch: " + a.ring().spec() + " vs " + b.ring().spec());
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// LocalRing

LocalRing LocalRing::prime_field(std::uint64_t p) {
    if (!is_prime(p)) throw Error(ErrorCode::InvalidRing, "F<p> needs a prime p, got " + std::to_string(p));
    auto d = std::make_shared<Data>();
    d->kind = RingKind::PrimeField;
    d->p = p;
    d->modulus = p;
    return LocalRing(std::move(d));
}

LocalRing LocalRing::integers_mod(std::uint64_t p, unsigned k) {
    if (!is_prime(p)) throw Error(ErrorCode::InvalidRing, "Z<p>^<k> needs a prime p, got " + std::to_string(p));
    if (k < 1) throw Error(ErrorCode::InvalidRing, "Z<p>^<k> needs k >= 1");
    std::uint64_t n = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (n > kMaxModulus / p) throw Error(ErrorCode::InvalidRing, "modulus p^k too large");
        n *= p;
    }
    auto d = std::make_shared<Data>();
    d->kind = RingKind::IntegersModPk;
    d->p = p;
    d->k = k;
    d->modulus = n;
    return LocalRing(std::move(d));
}

LocalRing LocalRing::localized_integers(std::uint64_t p) {
    if (!is_prime(p)) throw Error(ErrorCode::InvalidRing, "Zloc<p> needs a prime p, got " + std::to_string(p));
    auto d = std::make_shared<Data>();
    d->kind = RingKind::LocalizedIntegers;
    d->p = p;
    return LocalRing(std::move(d));
}

LocalRing LocalRing::truncated_series(const LocalRing& base, unsigned precision) {
    if (precision < 1) throw Error(ErrorCode::InvalidRing, "series precision must be >= 1");
    auto d = std::make_shared<Data>();
    d->kind = RingKind::TruncatedSeries;
    d->p = base.prime();
    d->base = base;
    d->precision = precision;
    return LocalRing(std::move(d));
}

namespace {

struct SpecParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool consume(std::string_view token) {
        skip_ws();
        if (text.substr(pos, token.size()) == token) {
            pos += token.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view token) {
        if (!consume(token)) throw ParseError(pos, "expected '" + std::string(token) + "' in ring spec");
    }
    std::uint64_t number() {
        skip_ws();
        std::size_t start = pos;
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (v > (std::uint64_t{1} << 60)) throw ParseError(start, "number too large in ring spec");
            v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
            ++pos;
        }
        if (pos == start) throw ParseError(pos, "expected a number in ring spec");
        return v;
    }

    LocalRing ring() {
        skip_ws();
        std::size_t start = pos;
        try {
            if (consume("series")) {
                expect("(");
                LocalRing base = ring();
                expect(",");
                std::uint64_t m = number();
                expect(")");
                return LocalRing::truncated_series(base, static_cast<unsigned>(m));
            }
            if (consume("Zloc")) return LocalRing::localized_integers(number());
            if (consume("F")) return LocalRing::prime_field(number());
            if (consume("Z")) {
                std::uint64_t p = number();
                unsigned k = 1;
                if (consume("^")) k = static_cast<unsigned>(number());
                return LocalRing::integers_mod(p, k);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(start, e.what());
        }
        throw ParseError(pos, "unknown ring; expected F<p>, Z<p>^<k>, Zloc<p> or series(<ring>,<m>)");
    }
};

}  // namespace

LocalRing LocalRing::parse(std::string_view spec) {
    SpecParser parser{spec};
    LocalRing r = parser.ring();
    parser.skip_ws();
    if (parser.pos != spec.size()) throw ParseError(parser.pos, "trailing characters in ring spec");
    return r;
}

RingKind LocalRing::kind() const { return data_->kind; }
std::uint64_t LocalRing::prime() const { return data_->p; }
unsigned LocalRing::exponent() const { return data_->k; }

std::uint64_t LocalRing::modulus() const {
    if (!is_modular()) throw Error(ErrorCode::InvalidRing, spec() + " has no modulus");
    return data_->modulus;
}

const LocalRing& LocalRing::base() const {
    if (kind() != RingKind::TruncatedSeries) throw Error(ErrorCode::InvalidRing, spec() + " is not a series ring");
    return *data_->base;
}

unsigned LocalRing::precision() const {
    if (kind() != RingKind::TruncatedSeries) throw Error(ErrorCode::InvalidRing, spec() + " is not a series ring");
    return data_->precision;
}

bool LocalRing::is_finite() const {
    switch (kind()) {
        case RingKind::PrimeField:
        case RingKind::IntegersModPk: return true;
        case RingKind::LocalizedIntegers: return false;
        case RingKind::TruncatedSeries: return base().is_finite();
    }
    return false;
}

std::uint64_t LocalRing::order() const {
    if (!is_finite()) throw Error(ErrorCode::InfiniteRing, spec() + " is infinite");
    if (is_modular()) return modulus();
    std::uint64_t b = base().order();
    std::uint64_t n = 1;
    for (unsigned i = 0; i < precision(); ++i) {
        if (n > (std::uint64_t{1} << 62) / b) throw Error(ErrorCode::InvalidRing, spec() + " is too large to index");
        n *= b;
    }
    return n;
}

std::string LocalRing::spec() const {
    switch (kind()) {
        case RingKind::PrimeField: return "F" + std::to_string(prime());
        case RingKind::IntegersModPk: return "Z" + std::to_string(prime()) + "^" + std::to_string(exponent());
        case RingKind::LocalizedIntegers: return "Zloc" + std::to_string(prime());
        case RingKind::TruncatedSeries:
            return "series(" + base().spec() + "," + std::to_string(precision()) + ")";
    }
    return {};
}

bool operator==(const LocalRing& a, const LocalRing& b) {
    if (a.data_ == b.data_) return true;
    if (a.kind() != b.kind() || a.prime() != b.prime()) return false;
    switch (a.kind()) {
        case RingKind::PrimeField:
        case RingKind::LocalizedIntegers: return true;
        case RingKind::IntegersModPk: return a.exponent() == b.exponent();
        case RingKind::TruncatedSeries: return a.precision() == b.precision() && a.base() == b.base();
    }
    return false;
}

RingElement LocalRing::zero() const { return from_int(0); }
RingElement LocalRing::one() const { return from_int(1); }

RingElement LocalRing::from_int(const BigInt& value) const {
    switch (kind()) {
        case RingKind::PrimeField:
        case RingKind::IntegersModPk: return RingElement(*this, mod_reduce(value, modulus()));
        case RingKind::LocalizedIntegers: return RingElement(*this, Fraction{value, 1});
        case RingKind::TruncatedSeries: {
            std::vector<RingElement> c(precision(), base().zero());
            c[0] = base().from_int(value);
            return RingElement(*this, std::move(c));
        }
    }
    throw Error(ErrorCode::InvalidRing, "unreachable");
}

RingElement LocalRing::from_fraction(const BigInt& num, const BigInt& den) const {
    if (den == 0) throw Error(ErrorCode::NotAUnit, "zero denominator");
    if (kind() == RingKind::LocalizedIntegers) {
        Fraction f = make_fraction(num, den);
        if (f.den % prime() == 0) {
            throw Error(ErrorCode::NotAUnit, "denominator divisible by " + std::to_string(prime()) + " in " + spec());
        }
        return RingElement(*this, std::move(f));
    }
    return from_int(num) * inverse(from_int(den));
}

RingElement LocalRing::series(std::vector<RingElement> coefficients) const {
    if (kind() != RingKind::TruncatedSeries) throw Error(ErrorCode::InvalidRing, spec() + " is not a series ring");
    if (coefficients.size() > precision()) {
        throw Error(ErrorCode::RingMismatch, "coefficient list longer than precision of " + spec());
    }
    for (const auto& c : coefficients) {
        if (!(c.ring() == base())) throw Error(ErrorCode::RingMismatch, "series coefficient not in " + base().spec());
    }
    coefficients.resize(precision(), base().zero());
    return RingElement(*this, std::move(coefficients));
}

namespace {

// literal := ['-'] term (('+'|'-') term)*
// term    := coeff ['*' 'x' ['^' n]] | 'x' ['^' n]
// coeff   := digits ['/' digits]
struct LiteralParser {
    const LocalRing& ring;
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    BigInt digits() {
        skip_ws();
        std::size_t start = pos;
        BigInt v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        if (start == pos) throw ParseError(pos, "expected digits in element literal");
        return v;
    }

    RingElement parse() {
        skip_ws();
        if (pos == text.size()) throw ParseError(pos, "empty element literal");
        RingElement acc = ring.zero();
        bool first = true;
        while (true) {
            skip_ws();
            if (pos == text.size()) break;
            bool negative = false;
            if (!first) {
                if (peek('+')) {
                    ++pos;
                } else if (peek('-')) {
                    ++pos;
                    negative = true;
                } else {
                    throw ParseError(pos, "expected '+' or '-' between terms");
                }
            }
            // A sign may also lead a term ("1 + -2*x").
            while (peek('-') || peek('+')) {
                if (text[pos] == '-') negative = !negative;
                ++pos;
            }
            RingElement t = term();
            acc = negative ? acc - t : acc + t;
            first = false;
        }
        return acc;
    }

    RingElement term() {
        skip_ws();
        std::size_t start = pos;
        BigInt num = 1, den = 1;
        bool has_coeff = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            num = digits();
            has_coeff = true;
            if (peek('/')) {
                ++pos;
                den = digits();
            }
        }
        unsigned degree = 0;
        bool has_x = false;
        if (has_coeff && peek('*')) {
            ++pos;
            skip_ws();
            if (!peek('x')) throw ParseError(pos, "expected 'x' after '*'");
        }
        if (peek('x')) {
            ++pos;
            has_x = true;
            degree = 1;
            if (peek('^')) {
                ++pos;
                std::size_t dpos = pos;
                BigInt d = digits();
                if (d > 1000000) throw ParseError(dpos, "exponent too large");
                degree = d.convert_to<unsigned>();
            }
        }
        if (!has_coeff && !has_x) throw ParseError(start, "expected a number or 'x'");
        if (has_x && ring.kind() != RingKind::TruncatedSeries) {
            throw ParseError(start, "'x' is only allowed in series rings, not in " + ring.spec());
        }
        RingElement coeff = [&] {
            try {
                if (ring.kind() == RingKind::TruncatedSeries) {
                    RingElement c = ring.base().from_fraction(num, den);
                    std::vector<RingElement> v{c};
                    return ring.series(std::move(v));
                }
                return ring.from_fraction(num, den);
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                throw ParseError(start, e.what());
            }
        }();
        if (!has_x || degree == 0) return coeff;
        if (degree >= ring.precision()) return ring.zero();
        std::vector<RingElement> mono(ring.precision(), ring.base().zero());
        mono[degree] = ring.base().one();
        return coeff * ring.series(std::move(mono));
    }
};

}  // namespace

RingElement LocalRing::parse_element(std::string_view literal) const {
    LiteralParser parser{*this, literal};
    return parser.parse();
}

RingElement LocalRing::element_at(std::uint64_t index) const {
    std::uint64_t n = order();
    if (index >= n) throw Error(ErrorCode::PreconditionViolation, "element index out of range for " + spec());
    if (is_modular()) return RingElement(*this, index);
    std::uint64_t b = base().order();
    std::vector<RingElement> c;
    c.reserve(precision());
    for (unsigned i = 0; i < precision(); ++i) {
        c.push_back(base().element_at(index % b));
        index /= b;
    }
    return RingElement(*this, std::move(c));
}

std::uint64_t LocalRing::index_of(const RingElement& a) const {
    if (!(a.ring() == *this)) throw Error(ErrorCode::RingMismatch, "element not in " + spec());
    if (!is_finite()) throw Error(ErrorCode::InfiniteRing, spec() + " is infinite");
    if (is_modular()) return a.residue();
    std::uint64_t b = base().order();
    std::uint64_t index = 0;
    const auto& c = a.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) index = index * b + base().index_of(c[i]);
    return index;
}

std::vector<RingElement> LocalRing::enumerate() const {
    std::uint64_t n = order();
    std::vector<RingElement> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(element_at(i));
    return out;
}

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(LocalRing ring, Payload payload) : ring_(std::move(ring)), payload_(std::move(payload)) {}

std::uint64_t RingElement::residue() const { return std::get<std::uint64_t>(payload_); }
const Fraction& RingElement::fraction() const { return std::get<Fraction>(payload_); }
const std::vector<RingElement>& RingElement::coefficients() const {
    return std::get<std::vector<RingElement>>(payload_);
}

RingElement RingElement::constant_term() const {
    if (ring_.kind() == RingKind::TruncatedSeries) return coefficients().front();
    return *this;
}

bool RingElement::is_zero() const {
    switch (ring_.kind()) {
        case RingKind::PrimeField:
        case RingKind::IntegersModPk: return residue() == 0;
        case RingKind::LocalizedIntegers: return fraction().num == 0;
        case RingKind::TruncatedSeries:
            for (const auto& c : coefficients())
                if (!c.is_zero()) return false;
            return true;
    }
    return false;
}

bool RingElement::is_one() const { return *this == ring_.one(); }

std::string RingElement::to_string() const {
    switch (ring_.kind()) {
        case RingKind::PrimeField:
        case RingKind::IntegersModPk: return std::to_string(residue());
        case RingKind::LocalizedIntegers: {
            const auto& f = fraction();
            if (f.den == 1) return f.num.str();
            return f.num.str() + "/" + f.den.str();
        }
        case RingKind::TruncatedSeries: {
            const bool nested = ring_.base().kind() == RingKind::TruncatedSeries;
            std::string out;
            const auto& c = coefficients();
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (c[i].is_zero()) continue;
                std::string coeff = c[i].to_string();
                if (nested) coeff = "(" + coeff + ")";
                if (!out.empty()) out += " + ";
                if (i == 0) {
                    out += coeff;
                } else {
                    out += (c[i].is_one() && !nested) ? std::string("x") : coeff + "*x";
                    if (i > 1) out += "^" + std::to_string(i);
                }
            }
            return out.empty() ? "0" : out;
        }
    }
    return {};
}

RingElement operator+(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    const LocalRing& r = a.ring();
    switch (r.kind()) {
        case RingKind::PrimeField:
        case RingKind::IntegersModPk: {
            std::uint64_t n = r.modulus();
            std::uint64_t s = a.residue() + b.residue();
            return RingElement(r, s >= n ? s - n : s);
        }
        case RingKind::LocalizedIntegers: {
            const auto& x = a.fraction();
            const auto& y = b.fraction();
            return RingElement(r, make_fraction(x.num * y.den + y.num * x.den, x.den * y.den));
        }
        case RingKind::TruncatedSeries: {
            const auto& x = a.coefficients();
            const auto& y = b.coefficients();
            std::vector<RingElement> c;
            c.reserve(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) c.push_back(x[i] + y[i]);
            return RingElement(r, std::move(c));
        }
    }
    throw Error(ErrorCode::InvalidRing, "unreachable");
}

RingElement operator-(const RingElement& a) {
    const LocalRing& r = a.ring();
    switch (r.kind()) {
        case RingKind::PrimeField:
        case RingKind::IntegersModPk: return RingElement(r, a.residue() == 0 ? 0 : r.modulus() - a.residue());
        case RingKind::LocalizedIntegers: return RingElement(r, Fraction{-a.fraction().num, a.fraction().den});
        case RingKind::TruncatedSeries: {
            std::vector<RingElement> c;
            c.reserve(a.coefficients().size());
            for (const auto& x : a.coefficients()) c.push_back(-x);
            return RingElement(r, std::move(c));
        }
    }
    throw Error(ErrorCode::InvalidRing, "unreachable");
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

RingElement operator*(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    const LocalRing& r = a.ring();
    switch (r.kind()) {
        case RingKind::PrimeField:
        case RingKind::IntegersModPk: return RingElement(r, mod_mul(a.residue(), b.residue(), r.modulus()));
        case RingKind::LocalizedIntegers: {
            const auto& x = a.fraction();
            const auto& y = b.fraction();
            return RingElement(r, make_fraction(x.num * y.num, x.den * y.den));
        }
        case RingKind::TruncatedSeries: {
            const auto& x = a.coefficients();
            const auto& y = b.coefficients();
            const std::size_t m = x.size();
            std::vector<RingElement> c(m, r.base().zero());
            for (std::size_t i = 0; i < m; ++i) {
                if (x[i].is_zero()) continue;
                for (std::size_t j = 0; i + j < m; ++j) c[i + j] += x[i] * y[j];
            }
            return RingElement(r, std::move(c));
        }
    }
    throw Error(ErrorCode::InvalidRing, "unreachable");
}

bool operator==(const RingElement& a, const RingElement& b) {
    return a.ring() == b.ring() && a.payload() == b.payload();
}

bool is_unit(const RingElement& a) {
    const LocalRing& r = a.ring();
    switch (r.kind()) {
        case RingKind::PrimeField:
        case RingKind::IntegersModPk: return a.residue() % r.prime() != 0;
        case RingKind::LocalizedIntegers: return a.fraction().num % r.prime() != 0;
        case RingKind::TruncatedSeries: return is_unit(a.coefficients().front());
    }
    return false;
}

RingElement inverse(const RingElement& a) {
    if (!is_unit(a)) throw Error(ErrorCode::NotAUnit, a.to_string() + " is not a unit in " + a.ring().spec());
    const LocalRing& r = a.ring();
    switch (r.kind()) {
        case RingKind::PrimeField:
        case RingKind::IntegersModPk: return RingElement(r, mod_inverse(a.residue(), r.modulus()));
        case RingKind::LocalizedIntegers: return RingElement(r, make_fraction(a.fraction().den, a.fraction().num));
        case RingKind::TruncatedSeries: {
            // b0 = a0^-1,  b_i = -a0^-1 * sum_{k=1..i} a_k b_{i-k}
            const auto& x = a.coefficients();
            const std::size_t m = x.size();
            RingElement a0_inv = inverse(x[0]);
            std::vector<RingElement> b(m, r.base().zero());
            b[0] = a0_inv;
            for (std::size_t i = 1; i < m; ++i) {
                RingElement s = r.base().zero();
                for (std::size_t k = 1; k <= i; ++k) s += x[k] * b[i - k];
                b[i] = -(a0_inv * s);
            }
            return RingElement(r, std::move(b));
        }
    }
    throw Error(ErrorCode::InvalidRing, "unreachable");
}

RingElement pow(const RingElement& a, unsigned exponent) {
    RingElement result = a.ring().one();
    RingElement base = a;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const RingElement& a) { return os << a.to_string(); }
std::ostream& operator<<(std::ostream& os, const LocalRing& r) { return os << r.spec(); }

std::optional<BigInt> exact_sqrt(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

}  // namespace qp
