#include "entwine/scalar.hpp"

#include <ostream>

namespace entwine {

namespace modp {

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw ContractViolation("division by zero in F_" + std::to_string(p));
    // extended Euclid on signed 128-bit to stay clear of overflow
    __int128 t = 0, new_t = 1;
    __int128 r = p, new_r = a % p;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint64_t>(t);
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mul(r, b, m);
        b = mul(b, b, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic witness set for all 64-bit n
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace modp

Field Field::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 61)) throw ContractViolation("prime must be below 2^61");
    if (!modp::is_prime(p)) throw ContractViolation(std::to_string(p) + " is not prime");
    return Field{p};
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
    if (is_rational()) return Scalar::rational(mpq_class(static_cast<long>(v)));
    std::int64_t m = static_cast<std::int64_t>(static_cast<__int128>(v) % static_cast<__int128>(p_));
    if (m < 0) m += static_cast<std::int64_t>(p_);
    return Scalar::modular(static_cast<std::uint64_t>(m), p_);
}

Scalar Field::parse(std::string_view text) const {
    auto fail = [&](const char* why) {
        return ParseError("malformed scalar \"" + std::string(text) + "\" over " + name() + ": " + why);
    };
    if (text.empty()) throw fail("empty");

    auto valid_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char ch : s)
            if (ch < '0' || ch > '9') return false;
        return true;
    };

    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!valid_integer(num)) throw fail("bad numerator");
    if (slash != std::string_view::npos && !valid_integer(den)) throw fail("bad denominator");

    std::string num_s(num);
    if (!num_s.empty() && num_s.front() == '+') num_s.erase(0, 1);
    mpz_class n(num_s, 10);
    mpz_class d = 1;
    if (slash != std::string_view::npos) {
        std::string den_s(den);
        if (!den_s.empty() && den_s.front() == '+') den_s.erase(0, 1);
        d = mpz_class(den_s, 10);
        if (d == 0) throw fail("zero denominator");
    }

    if (is_rational()) {
        mpq_class q(n, d);
        q.canonicalize();
        return Scalar::rational(std::move(q));
    }
    mpz_class pz(std::to_string(p_), 10);
    mpz_class nr = n % pz;
    if (nr < 0) nr += pz;
    mpz_class dr = d % pz;
    if (dr < 0) dr += pz;
    if (dr == 0) throw fail("denominator vanishes mod p");
    auto a = static_cast<std::uint64_t>(std::stoull(nr.get_str()));
    auto b = static_cast<std::uint64_t>(std::stoull(dr.get_str()));
    return Scalar::modular(modp::mul(a, modp::inv(b, p_), p_), p_);
}

std::string Field::name() const { return is_rational() ? "Q" : "F" + std::to_string(p_); }

Scalar Scalar::rational(mpq_class q) {
    q.canonicalize();
    Scalar s;
    s.p_ = 0;
    s.value_ = std::move(q);
    return s;
}

Scalar Scalar::modular(std::uint64_t residue, std::uint64_t p) { return Scalar(residue % p, p); }

Field Scalar::field() const { return Field{p_}; }

bool Scalar::is_zero() const noexcept {
    if (p_ == 0) return sgn(std::get<mpq_class>(value_)) == 0;
    return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const noexcept {
    if (p_ == 0) return std::get<mpq_class>(value_) == 1;
    return std::get<std::uint64_t>(value_) == 1;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ContractViolation("inverse of zero");
    if (p_ == 0) return rational(1 / std::get<mpq_class>(value_));
    return modular(modp::inv(std::get<std::uint64_t>(value_), p_), p_);
}

std::uint64_t Scalar::residue() const {
    if (p_ == 0) throw ContractViolation("residue() on a rational scalar");
    return std::get<std::uint64_t>(value_);
}

const mpq_class& Scalar::rational_value() const {
    if (p_ != 0) throw ContractViolation("rational_value() on a prime-field scalar");
    return std::get<mpq_class>(value_);
}

std::string Scalar::to_string() const {
    if (p_ == 0) return std::get<mpq_class>(value_).get_str();
    return std::to_string(std::get<std::uint64_t>(value_));
}

void Scalar::require_same_field(const Scalar& o) const {
    if (p_ != o.p_) throw ContractViolation("scalars from different fields combined");
}

Scalar Scalar::operator-() const {
    if (p_ == 0) return rational(-std::get<mpq_class>(value_));
    return modular(modp::neg(std::get<std::uint64_t>(value_), p_), p_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same_field(o);
    if (p_ == 0)
        std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
    else
        std::get<std::uint64_t>(value_) = modp::add(std::get<std::uint64_t>(value_), std::get<std::uint64_t>(o.value_), p_);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    require_same_field(o);
    if (p_ == 0)
        std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
    else
        std::get<std::uint64_t>(value_) = modp::sub(std::get<std::uint64_t>(value_), std::get<std::uint64_t>(o.value_), p_);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same_field(o);
    if (p_ == 0)
        std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
    else
        std::get<std::uint64_t>(value_) = modp::mul(std::get<std::uint64_t>(value_), std::get<std::uint64_t>(o.value_), p_);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    require_same_field(o);
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_) return false;
    return a.value_ == b.value_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

} // namespace entwine
