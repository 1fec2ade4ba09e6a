#ifndef ENTWINE_SCALAR_HPP
#define ENTWINE_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace entwine {

/// Raised when a caller breaks an operation's preconditions (shape mismatch,
/// mixed fields, witnesses that fail their defining equations, ...).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised for malformed textual input (scalars, structure files).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Scalar;

/// The base field: either the rationals or a prime field F_p with p < 2^61.
class Field {
public:
    Field() = default;

    static Field rationals() { return Field{}; }
    static Field prime(std::uint64_t p);

    bool is_rational() const noexcept { return p_ == 0; }
    bool is_prime() const noexcept { return p_ != 0; }
    /// 0 for the rationals.
    std::uint64_t characteristic() const noexcept { return p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t v) const;
    /// "a", "-a", "a/b" for Q; a decimal integer (reduced mod p) for F_p.
    Scalar parse(std::string_view text) const;

    /// "Q" or "F<p>".
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    friend class Scalar;
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

namespace modp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
    return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
inline std::uint64_t neg(std::uint64_t a, std::uint64_t p) noexcept { return a == 0 ? 0 : p - a; }
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t n) noexcept;

} // namespace modp

/// An exact element of a Field. Canonical form: reduced fraction with positive
/// denominator over Q, representative in [0, p) over F_p, so equality is
/// structural.
class Scalar {
public:
    /// Rational zero.
    Scalar() = default;

    static Scalar rational(mpq_class q);
    static Scalar modular(std::uint64_t residue, std::uint64_t p);

    Field field() const;
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    Scalar inverse() const;

    /// Requires a prime-field scalar.
    std::uint64_t residue() const;
    /// Requires a rational scalar.
    const mpq_class& rational_value() const;

    /// Serialized form: "a/b" (or "a" when b = 1) over Q, decimal residue over F_p.
    std::string to_string() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    Scalar(std::uint64_t residue, std::uint64_t p) : p_(p), value_(std::in_place_type<std::uint64_t>, residue) {}
    void require_same_field(const Scalar& o) const;

    std::uint64_t p_ = 0;
    std::variant<mpq_class, std::uint64_t> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace entwine

#endif
