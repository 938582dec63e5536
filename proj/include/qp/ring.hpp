#pragma once

// Exact arithmetic in the commutative local rings used throughout the library:
//
//   F<p>              prime field
//   Z<p>^<k>          integers modulo p^k
//   Zloc<p>           integers localized at the prime p (fractions a/b with p not dividing b)
//   series(<R>,<m>)   truncated power series R[[x]]/(x^m)
//
// Every ring here is local, so an element is either a unit or lies in the Jacobson
// radical, never both. Elements are immutable values kept in canonical form after
// every operation, which makes equality structural.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qp/error.hpp"

namespace qp {

using BigInt = boost::multiprecision::cpp_int;

enum class RingKind { PrimeField, IntegersModPk, LocalizedIntegers, TruncatedSeries };

class RingElement;

/// Handle to an immutable ring descriptor. Cheap to copy; compares structurally.
class LocalRing {
public:
    static LocalRing prime_field(std::uint64_t p);
    static LocalRing integers_mod(std::uint64_t p, unsigned k);
    static LocalRing localized_integers(std::uint64_t p);
    static LocalRing truncated_series(const LocalRing& base, unsigned precision);

    /// Parses `F<p>` | `Z<p>^<k>` | `Zloc<p>` | `series(<ring>,<m>)`.
    static LocalRing parse(std::string_view spec);

    RingKind kind() const;
    /// Residue characteristic p (for series rings, that of the innermost base).
    std::uint64_t prime() const;
    /// k for Z<p>^<k>; 1 for F<p>.
    unsigned exponent() const;
    /// p^k for the modular kinds.
    std::uint64_t modulus() const;
    const LocalRing& base() const;
    unsigned precision() const;

    bool is_modular() const { return kind() == RingKind::PrimeField || kind() == RingKind::IntegersModPk; }
    bool is_finite() const;
    /// Number of elements; throws InfiniteRing for rings involving Zloc.
    std::uint64_t order() const;

    /// Canonical spec string, e.g. `series(Z2^2,8)`.
    std::string spec() const;

    RingElement zero() const;
    RingElement one() const;
    RingElement from_int(const BigInt& value) const;
    /// num/den mapped into the ring; throws NotAUnit when den is not invertible there.
    RingElement from_fraction(const BigInt& num, const BigInt& den) const;
    /// Series element from its coefficient list (padded with zeros up to the precision).
    RingElement series(std::vector<RingElement> coefficients) const;

    /// Parses an element literal: integer, `a/b`, or polynomial `c0 + c1*x + ... `.
    /// Terms of degree >= precision vanish in R[[x]]/(x^m) and are dropped.
    RingElement parse_element(std::string_view literal) const;

    /// Finite rings only. element_at(0) is zero; the order is stable across runs.
    RingElement element_at(std::uint64_t index) const;
    std::uint64_t index_of(const RingElement& a) const;
    std::vector<RingElement> enumerate() const;

    friend bool operator==(const LocalRing& a, const LocalRing& b);

private:
    struct Data;
    explicit LocalRing(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

    std::shared_ptr<const Data> data_;
};

struct Fraction {
    BigInt num;
    BigInt den;  // > 0, gcd(num, den) = 1

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

class RingElement {
public:
    using Payload = std::variant<std::uint64_t, Fraction, std::vector<RingElement>>;

    RingElement(LocalRing ring, Payload payload);

    const LocalRing& ring() const { return ring_; }
    const Payload& payload() const { return payload_; }

    std::uint64_t residue() const;
    const Fraction& fraction() const;
    const std::vector<RingElement>& coefficients() const;
    /// Coefficient i of a series element.
    const RingElement& coefficient(std::size_t i) const { return coefficients().at(i); }
    /// Constant term for series, the element itself otherwise.
    RingElement constant_term() const;

    bool is_zero() const;
    bool is_one() const;

    std::string to_string() const;

    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a);
    RingElement& operator+=(const RingElement& b) { return *this = *this + b; }
    RingElement& operator-=(const RingElement& b) { return *this = *this - b; }
    RingElement& operator*=(const RingElement& b) { return *this = *this * b; }

    friend bool operator==(const RingElement& a, const RingElement& b);

private:
    LocalRing ring_;
    Payload payload_;
};

bool is_unit(const RingElement& a);
/// In a local ring the radical is exactly the set of non-units.
inline bool in_jacobson(const RingElement& a) { return !is_unit(a); }
RingElement inverse(const RingElement& a);
RingElement pow(const RingElement& a, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const RingElement& a);
std::ostream& operator<<(std::ostream& os, const LocalRing& r);

/// Integer square root test: returns r with r*r == n, if one exists.
std::optional<BigInt> exact_sqrt(const BigInt& n);

}  // namespace qp
