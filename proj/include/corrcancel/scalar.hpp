#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "corrcancel/error.hpp"

namespace corrcancel {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Coefficient field: the rationals (characteristic 0) or a prime field F_p
// with p < 2^61.  All scalars in one computation share one FieldSpec.
struct FieldSpec {
    std::uint64_t characteristic = 0;  // 0 = rationals

    bool is_rational() const { return characteristic == 0; }
    bool operator==(const FieldSpec& o) const { return characteristic == o.characteristic; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string name() const { return is_rational() ? "Q" : "F" + std::to_string(characteristic); }

    static FieldSpec rationals() { return FieldSpec{0}; }
    static FieldSpec prime_field(std::uint64_t p);
};

// An exact field element.  For F_p the value is the least nonnegative residue.
class Scalar {
  public:
    Scalar() = default;  // zero over Q; use the factory functions in real code.

    static Scalar zero(const FieldSpec& f) { return Scalar(f); }
    static Scalar one(const FieldSpec& f) { return from_int(f, 1); }
    static Scalar from_int(const FieldSpec& f, long long v);
    static Scalar from_big(const FieldSpec& f, const BigInt& v);
    static Scalar from_rational(const FieldSpec& f, const BigRat& v);
    // Parses "a", "-a", "a/b".
    static Scalar parse(const FieldSpec& f, const std::string& text);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(long long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // Total order used only for deterministic canonical output.
    bool operator<(const Scalar& o) const;

    // Rational value (field must be Q).
    const BigRat& rational() const;
    // Residue in [0, p) (field must be F_p).
    std::uint64_t residue() const;

    std::string str() const;

  private:
    explicit Scalar(const FieldSpec& f) : field_(f) {}

    FieldSpec field_;
    BigRat q_;             // used when field is Q
    std::uint64_t r_ = 0;  // used when field is F_p

    void check_same(const Scalar& o) const;
};

// Arithmetic mod p on raw residues, p < 2^61.
std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);

}  // namespace corrcancel
