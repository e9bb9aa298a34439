#include "corrcancel/scalar.hpp"

namespace corrcancel {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NotDominant: return "NotDominant";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::NotFinite: return "NotFinite";
        case ErrorCode::UnsupportedBase: return "UnsupportedBase";
        case ErrorCode::UnsupportedField: return "UnsupportedField";
        case ErrorCode::WrongDimension: return "WrongDimension";
        case ErrorCode::NotFlat: return "NotFlat";
        case ErrorCode::NotProperOnSupport: return "NotProperOnSupport";
        case ErrorCode::NotEquidimensional: return "NotEquidimensional";
        case ErrorCode::ImproperIntersection: return "ImproperIntersection";
        case ErrorCode::ZeroRestriction: return "ZeroRestriction";
        case ErrorCode::SearchExhausted: return "SearchExhausted";
        case ErrorCode::DegenerateCoordinates: return "DegenerateCoordinates";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;  // p < 2^61, no overflow
    return s >= p ? s - p : s;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) fail(ErrorCode::InvalidArgument, "division by zero in F_p");
    // extended Euclid on signed 128-bit intermediates
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(p), newr = static_cast<long long>(a % p);
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) fail(ErrorCode::Internal, "modulus not prime in mod_inv");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = mod_pow(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mod_mul(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (p >= (1ull << 61)) fail(ErrorCode::UnsupportedField, "prime must be < 2^61");
    if (!is_prime_u64(p)) fail(ErrorCode::UnsupportedField, "characteristic must be prime");
    return FieldSpec{p};
}

void Scalar::check_same(const Scalar& o) const {
    if (field_ != o.field_) fail(ErrorCode::Internal, "mixed-field scalar arithmetic");
}

Scalar Scalar::from_int(const FieldSpec& f, long long v) {
    Scalar s(f);
    if (f.is_rational()) {
        s.q_ = v;
    } else {
        long long m = v % static_cast<long long>(f.characteristic);
        if (m < 0) m += static_cast<long long>(f.characteristic);
        s.r_ = static_cast<std::uint64_t>(m);
    }
    return s;
}

Scalar Scalar::from_big(const FieldSpec& f, const BigInt& v) {
    Scalar s(f);
    if (f.is_rational()) {
        s.q_ = v;
    } else {
        BigInt m = v % BigInt(f.characteristic);
        if (m < 0) m += BigInt(f.characteristic);
        s.r_ = m.convert_to<std::uint64_t>();
    }
    return s;
}

Scalar Scalar::from_rational(const FieldSpec& f, const BigRat& v) {
    if (f.is_rational()) {
        Scalar s(f);
        s.q_ = v;
        return s;
    }
    Scalar num = from_big(f, numerator(v));
    Scalar den = from_big(f, denominator(v));
    if (den.is_zero()) fail(ErrorCode::InvalidArgument, "denominator divisible by the characteristic");
    return num / den;
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return from_big(f, BigInt(text));
        BigInt n(text.substr(0, slash));
        BigInt d(text.substr(slash + 1));
        if (d == 0) fail(ErrorCode::ParseError, "zero denominator");
        return from_rational(f, BigRat(n, d));
    } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "bad scalar literal '" + text + "'");
    }
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_.is_zero() : r_ == 0; }
bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s(field_);
    if (field_.is_rational())
        s.q_ = q_ + o.q_;
    else
        s.r_ = mod_add(r_, o.r_, field_.characteristic);
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar s(field_);
    if (field_.is_rational())
        s.q_ = q_ - o.q_;
    else
        s.r_ = mod_sub(r_, o.r_, field_.characteristic);
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s(field_);
    if (field_.is_rational())
        s.q_ = q_ * o.q_;
    else
        s.r_ = mod_mul(r_, o.r_, field_.characteristic);
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.is_rational())
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : field_.characteristic - r_;
    return s;
}

Scalar Scalar::inverse() const {
    Scalar s(field_);
    if (field_.is_rational()) {
        if (q_.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero");
        s.q_ = 1 / q_;
    } else {
        s.r_ = mod_inv(r_, field_.characteristic);
    }
    return s;
}

Scalar Scalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r = one(field_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same(o);
    return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

bool Scalar::operator<(const Scalar& o) const {
    check_same(o);
    return field_.is_rational() ? q_ < o.q_ : r_ < o.r_;
}

const BigRat& Scalar::rational() const {
    if (!field_.is_rational()) fail(ErrorCode::Internal, "rational() on F_p scalar");
    return q_;
}

std::uint64_t Scalar::residue() const {
    if (field_.is_rational()) fail(ErrorCode::Internal, "residue() on rational scalar");
    return r_;
}

std::string Scalar::str() const {
    if (field_.is_rational()) {
        if (denominator(q_) == 1) return numerator(q_).str();
        return numerator(q_).str() + "/" + denominator(q_).str();
    }
    return std::to_string(r_);
}

}  // namespace corrcancel
