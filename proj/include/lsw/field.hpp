#ifndef LSW_FIELD_HPP
#define LSW_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace lsw {

using Rational = mpq_class;

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One coefficient. Prime-field values are canonical residues in [0, p);
/// rational values are fully reduced with positive denominator. All
/// arithmetic goes through Field, which knows which case is active.
class Scalar {
public:
    Scalar() : v_(int64_t{0}) {}

    static Scalar residue(int64_t r) { return Scalar(r); }
    static Scalar rational(Rational q) { return Scalar(std::move(q)); }

    bool is_residue() const { return v_.index() == 0; }
    int64_t residue_value() const { return std::get<0>(v_); }
    const Rational& rational_value() const { return std::get<1>(v_); }

    bool operator==(const Scalar& o) const {
        if (v_.index() != o.v_.index()) return false;
        if (v_.index() == 0) return std::get<0>(v_) == std::get<0>(o.v_);
        return std::get<1>(v_) == std::get<1>(o.v_);
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

private:
    explicit Scalar(int64_t r) : v_(r) {}
    explicit Scalar(Rational q) : v_(std::move(q)) {}
    std::variant<int64_t, Rational> v_;
};

/// The ground field: F_p for a prime p, or the rationals.
class Field {
public:
    enum class Kind { prime_field, rationals };

    static constexpr int64_t default_prime = 32003;

    static Field prime(int64_t p);
    static Field rationals();

    Kind kind() const { return kind_; }
    int64_t modulus() const { return p_; }
    bool same(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(int64_t n) const;
    Scalar from_fraction(int64_t num, int64_t den) const;

    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const; // throws FieldError on zero
    Scalar div(const Scalar& a, const Scalar& b) const;

    /// Least non-negative residue, or reduced fraction.
    std::string to_string(const Scalar& a) const;
    /// Accepts "123", "-17", "2/5", "-2/5".
    Scalar parse(const std::string& text) const;

    std::string describe() const; // "prime:32003" or "rationals"
    static Field parse_config(const std::string& text);

private:
    Field(Kind k, int64_t p) : kind_(k), p_(p) {}
    int64_t reduce(int64_t n) const;
    Kind kind_;
    int64_t p_;
};

} // namespace lsw

#endif
