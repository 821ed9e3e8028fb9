#include "lsw/field.hpp"

namespace lsw {

namespace {

bool is_prime(int64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (int64_t q = 3; q * q <= p; q += 2)
        if (p % q == 0) return false;
    return true;
}

int64_t mulmod(int64_t a, int64_t b, int64_t p) {
    return static_cast<int64_t>(static_cast<__int128>(a) * b % p);
}

// inverse of a modulo p, 0 < a < p, via extended Euclid
int64_t invmod(int64_t a, int64_t p) {
    int64_t old_r = a, r = p;
    int64_t old_s = 1, s = 0;
    while (r != 0) {
        int64_t q = old_r / r;
        int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    int64_t inv = old_s % p;
    if (inv < 0) inv += p;
    return inv;
}

Rational reduced(Rational q) {
    q.canonicalize();
    return q;
}

} // namespace

Field Field::prime(int64_t p) {
    if (!is_prime(p)) throw FieldError("modulus " + std::to_string(p) + " is not prime");
    if (p > (int64_t(1) << 31)) throw FieldError("prime modulus too large");
    return Field(Kind::prime_field, p);
}

Field Field::rationals() { return Field(Kind::rationals, 0); }

int64_t Field::reduce(int64_t n) const {
    int64_t r = n % p_;
    if (r < 0) r += p_;
    return r;
}

Scalar Field::zero() const {
    return kind_ == Kind::prime_field ? Scalar::residue(0) : Scalar::rational(Rational(0));
}

Scalar Field::one() const {
    return kind_ == Kind::prime_field ? Scalar::residue(1) : Scalar::rational(Rational(1));
}

Scalar Field::from_int(int64_t n) const {
    if (kind_ == Kind::prime_field) return Scalar::residue(reduce(n));
    return Scalar::rational(Rational(static_cast<long>(n)));
}

Scalar Field::from_fraction(int64_t num, int64_t den) const {
    if (den == 0) throw FieldError("zero denominator");
    if (kind_ == Kind::prime_field) {
        int64_t d = reduce(den);
        if (d == 0) throw FieldError("denominator divisible by the modulus");
        return Scalar::residue(mulmod(reduce(num), invmod(d, p_), p_));
    }
    return Scalar::rational(reduced(Rational(static_cast<long>(num), static_cast<long>(den))));
}

bool Field::is_zero(const Scalar& a) const {
    return a.is_residue() ? a.residue_value() == 0 : a.rational_value() == 0;
}

bool Field::is_one(const Scalar& a) const {
    return a.is_residue() ? a.residue_value() == 1 : a.rational_value() == 1;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::prime_field) {
        int64_t s = a.residue_value() + b.residue_value();
        if (s >= p_) s -= p_;
        return Scalar::residue(s);
    }
    return Scalar::rational(a.rational_value() + b.rational_value());
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::prime_field) {
        int64_t s = a.residue_value() - b.residue_value();
        if (s < 0) s += p_;
        return Scalar::residue(s);
    }
    return Scalar::rational(a.rational_value() - b.rational_value());
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::prime_field)
        return Scalar::residue(mulmod(a.residue_value(), b.residue_value(), p_));
    return Scalar::rational(a.rational_value() * b.rational_value());
}

Scalar Field::neg(const Scalar& a) const {
    if (kind_ == Kind::prime_field) {
        int64_t v = a.residue_value();
        return Scalar::residue(v == 0 ? 0 : p_ - v);
    }
    return Scalar::rational(-a.rational_value());
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw FieldError("inverse of zero");
    if (kind_ == Kind::prime_field)
        return Scalar::residue(invmod(a.residue_value(), p_));
    return Scalar::rational(1 / a.rational_value());
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

std::string Field::to_string(const Scalar& a) const {
    if (kind_ == Kind::prime_field) return std::to_string(a.residue_value());
    return a.rational_value().get_str();
}

Scalar Field::parse(const std::string& text) const {
    size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    size_t slash = text.find('/', pos);
    try {
        if (slash == std::string::npos) {
            int64_t n = std::stoll(text.substr(pos));
            return from_int(negative ? -n : n);
        }
        int64_t num = std::stoll(text.substr(pos, slash - pos));
        int64_t den = std::stoll(text.substr(slash + 1));
        return from_fraction(negative ? -num : num, den);
    } catch (const std::logic_error&) {
        throw FieldError("cannot parse field element '" + text + "'");
    }
}

std::string Field::describe() const {
    return kind_ == Kind::prime_field ? "prime:" + std::to_string(p_) : "rationals";
}

Field Field::parse_config(const std::string& text) {
    if (text == "rationals") return rationals();
    if (text.rfind("prime:", 0) == 0) return prime(std::stoll(text.substr(6)));
    throw FieldError("field config must be 'prime:P' or 'rationals', got '" + text + "'");
}

} // namespace lsw
