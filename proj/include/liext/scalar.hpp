#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "liext/error.hpp"

namespace liext {

/// Arbitrary-precision rational number. Construction normalizes to lowest
/// terms with a positive denominator.
using BigRat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Identifies the coefficient field: the rationals, or a prime field F_p
/// with p < 2^31 so residue products fit in 64-bit intermediates.
class FieldSpec {
public:
    enum class Kind { rationals, prime_field };

    /// The field of rational numbers.
    static FieldSpec rationals();

    /// The prime field F_p. Throws if p is not a prime in [2, 2^31).
    static FieldSpec prime(std::int64_t p);

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::rationals; }
    bool is_prime() const { return kind_ == Kind::prime_field; }

    /// The modulus p. Throws unless this is a prime field.
    std::int64_t modulus() const;

    /// Characteristic: 0 for the rationals, p for F_p.
    std::int64_t characteristic() const { return is_prime() ? modulus_ : 0; }

    bool operator==(const FieldSpec& other) const = default;

    /// Textual form as used in files and reports: "Q" or "F<p>" (e.g. "F7").
    std::string str() const;

    /// Inverse of str(). Throws Error on anything else.
    static FieldSpec parse(const std::string& text);

private:
    FieldSpec(Kind kind, std::int64_t modulus) : kind_(kind), modulus_(modulus) {}

    Kind kind_ = Kind::rationals;
    std::int64_t modulus_ = 0;
};

/// An immutable exact scalar carrying its field. Arithmetic between scalars
/// of different fields throws. Rational values are kept in lowest terms;
/// prime-field values are reduced residues in [0, p).
class Scalar {
public:
    /// Zero over the rationals.
    Scalar() : field_(FieldSpec::rationals()), rat_(0), res_(0) {}

    static Scalar zero(const FieldSpec& field);
    static Scalar one(const FieldSpec& field);

    /// The image of the integer v in the field.
    static Scalar from_int(std::int64_t v, const FieldSpec& field);

    /// Rational num/den in lowest terms. Throws "division by zero" on den = 0.
    static Scalar rational(const BigInt& num, const BigInt& den);
    static Scalar rational(const BigRat& value);

    /// Residue r mod p in F_p (any integer accepted, reduced on entry).
    static Scalar residue(std::int64_t r, const FieldSpec& field);

    /// Reads a scalar literal: "p/q" or "p" over the rationals, an integer
    /// over a prime field (reduced on entry). Throws Error on anything else.
    static Scalar parse(const std::string& text, const FieldSpec& field);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Multiplicative inverse. Throws "not invertible" on zero.
    Scalar invert() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    /// Division. Throws "not invertible" when rhs is zero.
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    /// Equality requires matching fields; comparing across fields throws.
    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    /// Literal form: "n" or "n/d" over the rationals, the reduced residue
    /// over a prime field.
    std::string str() const;

    /// Underlying rational value. Throws unless the field is the rationals.
    const BigRat& rat() const;

    /// Underlying reduced residue. Throws unless the field is prime.
    std::int64_t res() const;

private:
    Scalar(const FieldSpec& field, BigRat rat, std::int64_t res)
        : field_(field), rat_(std::move(rat)), res_(res) {}

    void require_same_field(const Scalar& other) const;

    FieldSpec field_;
    BigRat rat_;        // active when field_ is the rationals
    std::int64_t res_;  // active when field_ is prime
};

/// num/den over the rationals in lowest terms; machine-integer convenience
/// for Scalar::rational.
Scalar normalize(std::int64_t num, std::int64_t den);

/// Multiplicative inverse of a nonzero scalar.
Scalar invert(const Scalar& a);

}  // namespace liext
