#ifndef LSW_POLYNOMIAL_HPP
#define LSW_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsw/ring.hpp"
#include "lsw/term_order.hpp"

namespace lsw {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sparse exact-coefficient polynomial in canonical form: an order-independent
/// map monomial -> nonzero coefficient. Term iteration under a specific term
/// order is computed on demand, since the same polynomial is inspected under
/// many orders.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Scalar>;

    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    static Polynomial zero(Ring ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(Ring ring, const Scalar& c);
    static Polynomial variable(Ring ring, size_t index);
    static Polynomial term(Ring ring, Monomial m, const Scalar& c);

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    int64_t total_degree() const; // -1 for the zero polynomial

    void add_term(const Monomial& m, const Scalar& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial times_monomial(const Monomial& m) const;
    Polynomial pow(unsigned k) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Terms sorted descending under the order.
    std::vector<std::pair<Monomial, Scalar>> sorted_terms(const TermOrder& order) const;
    std::pair<Monomial, Scalar> leading_term(const TermOrder& order) const;

    /// Common Z^m-degree of all terms, or nullopt when terms disagree.
    /// Throws RingError if an untagged variable occurs.
    std::optional<std::vector<int64_t>> multidegree() const;

    /// Image under variable -> images[i] (a polynomial of the target ring).
    Polynomial substitute(const Ring& target, const std::vector<Polynomial>& images) const;

    /// Same polynomial in a context with the same variables appended first /
    /// kept: `map[i]` is the index in the target ring of source variable i.
    Polynomial mapped(const Ring& target, const std::vector<size_t>& map) const;

    std::string to_string(const TermOrder* order = nullptr) const;
    static Polynomial parse(const Ring& ring, const std::string& text);

private:
    void check_same_ring(const Polynomial& o) const;
    Ring ring_;
    TermMap terms_;
};

} // namespace lsw

#endif
