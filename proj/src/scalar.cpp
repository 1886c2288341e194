#include "liext/scalar.hpp"

#include <cctype>

namespace liext {

namespace {

bool is_prime_u32(std::int64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::int64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

// Inverse of a mod p by extended Euclid; a must be a reduced nonzero residue.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t old_r = a, r = p;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    // old_r = gcd(a, p) = 1 since p is prime and a is nonzero mod p.
    return mod_reduce(old_s, p);
}

bool parse_int64(const std::string& text, std::size_t begin, std::size_t end,
                 std::int64_t* out) {
    if (begin >= end) return false;
    bool negative = false;
    std::size_t i = begin;
    if (text[i] == '-' || text[i] == '+') {
        negative = text[i] == '-';
        ++i;
    }
    if (i >= end) return false;
    std::int64_t value = 0;
    for (; i < end; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
        int digit = text[i] - '0';
        if (value > (INT64_MAX - digit) / 10) return false;
        value = value * 10 + digit;
    }
    *out = negative ? -value : value;
    return true;
}

}  // namespace

FieldSpec FieldSpec::rationals() { return FieldSpec(Kind::rationals, 0); }

FieldSpec FieldSpec::prime(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime_u32(p)) {
        throw Error("not a supported prime modulus: " + std::to_string(p));
    }
    return FieldSpec(Kind::prime_field, p);
}

std::int64_t FieldSpec::modulus() const {
    if (!is_prime()) throw Error("modulus requested for the rationals");
    return modulus_;
}

std::string FieldSpec::str() const {
    return is_rationals() ? "Q" : "F" + std::to_string(modulus_);
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text.size() >= 2 && text[0] == 'F') {
        std::int64_t p = 0;
        if (parse_int64(text, 1, text.size(), &p) && p >= 2) return prime(p);
    }
    throw Error("unknown field: '" + text + "'");
}

Scalar Scalar::zero(const FieldSpec& field) { return Scalar(field, BigRat(0), 0); }

Scalar Scalar::one(const FieldSpec& field) {
    if (field.is_rationals()) return Scalar(field, BigRat(1), 0);
    return Scalar(field, BigRat(0), field.modulus() == 1 ? 0 : 1);
}

Scalar Scalar::from_int(std::int64_t v, const FieldSpec& field) {
    if (field.is_rationals()) return Scalar(field, BigRat(v), 0);
    return Scalar(field, BigRat(0), mod_reduce(v, field.modulus()));
}

Scalar Scalar::rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("division by zero");
    // The backing type insists on a positive denominator at construction.
    if (den < 0) return Scalar(FieldSpec::rationals(), BigRat(-num, -den), 0);
    return Scalar(FieldSpec::rationals(), BigRat(num, den), 0);
}

Scalar Scalar::rational(const BigRat& value) {
    return Scalar(FieldSpec::rationals(), value, 0);
}

Scalar Scalar::residue(std::int64_t r, const FieldSpec& field) {
    if (!field.is_prime()) throw Error("residue requested for the rationals");
    return Scalar(field, BigRat(0), mod_reduce(r, field.modulus()));
}

Scalar Scalar::parse(const std::string& text, const FieldSpec& field) {
    const auto fail = [&]() -> Error {
        return Error("bad scalar literal '" + text + "' over " + field.str());
    };
    if (field.is_prime()) {
        std::int64_t v = 0;
        if (!parse_int64(text, 0, text.size(), &v)) throw fail();
        return residue(v, field);
    }
    std::size_t slash = text.find('/');
    std::int64_t num = 0;
    std::int64_t den = 1;
    if (slash == std::string::npos) {
        if (!parse_int64(text, 0, text.size(), &num)) throw fail();
    } else {
        if (!parse_int64(text, 0, slash, &num) ||
            !parse_int64(text, slash + 1, text.size(), &den)) {
            throw fail();
        }
        if (den == 0) throw Error("division by zero");
    }
    return rational(BigInt(num), BigInt(den));
}

bool Scalar::is_zero() const {
    return field_.is_rationals() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rationals() ? rat_ == 1 : res_ == 1 % field_.modulus();
}

void Scalar::require_same_field(const Scalar& other) const {
    if (field_ != other.field_) {
        throw Error("field mismatch: " + field_.str() + " vs " + other.field_.str());
    }
}

Scalar Scalar::invert() const {
    if (is_zero()) throw Error("not invertible");
    if (field_.is_rationals()) {
        if (numerator(rat_) < 0) {
            return Scalar(field_, BigRat(-denominator(rat_), -numerator(rat_)), 0);
        }
        return Scalar(field_, BigRat(denominator(rat_), numerator(rat_)), 0);
    }
    return Scalar(field_, BigRat(0), mod_inverse(res_, field_.modulus()));
}

Scalar Scalar::operator-() const {
    if (field_.is_rationals()) return Scalar(field_, -rat_, 0);
    return Scalar(field_, BigRat(0), res_ == 0 ? 0 : field_.modulus() - res_);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_field(rhs);
    if (field_.is_rationals()) {
        rat_ += rhs.rat_;
    } else {
        res_ = mod_reduce(res_ + rhs.res_, field_.modulus());
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    require_same_field(rhs);
    if (field_.is_rationals()) {
        rat_ -= rhs.rat_;
    } else {
        res_ = mod_reduce(res_ - rhs.res_, field_.modulus());
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_field(rhs);
    if (field_.is_rationals()) {
        rat_ *= rhs.rat_;
    } else {
        // p < 2^31, so the product of two reduced residues fits in int64.
        res_ = mod_reduce(res_ * rhs.res_, field_.modulus());
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    require_same_field(rhs);
    return *this *= rhs.invert();
}

bool Scalar::operator==(const Scalar& rhs) const {
    require_same_field(rhs);
    return field_.is_rationals() ? rat_ == rhs.rat_ : res_ == rhs.res_;
}

std::string Scalar::str() const {
    if (field_.is_prime()) return std::to_string(res_);
    if (denominator(rat_) == 1) return numerator(rat_).str();
    return numerator(rat_).str() + "/" + denominator(rat_).str();
}

const BigRat& Scalar::rat() const {
    if (!field_.is_rationals()) throw Error("rational value requested for " + field_.str());
    return rat_;
}

std::int64_t Scalar::res() const {
    if (!field_.is_prime()) throw Error("residue requested for the rationals");
    return res_;
}

Scalar normalize(std::int64_t num, std::int64_t den) {
    return Scalar::rational(BigInt(num), BigInt(den));
}

Scalar invert(const Scalar& a) { return a.invert(); }

}  // namespace liext
