#ifndef LSW_MONOMIAL_HPP
#define LSW_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>

#include <boost/container/small_vector.hpp>

namespace lsw {

using Exponents = boost::container::small_vector<int32_t, 12>;

/// Exponent vector aligned with a RingContext's variable list.
struct Monomial {
    Exponents e;

    Monomial() = default;
    explicit Monomial(size_t nvars) : e(nvars, 0) {}
    Monomial(std::initializer_list<int32_t> init) : e(init) {}

    static Monomial one(size_t nvars) { return Monomial(nvars); }
    static Monomial var(size_t nvars, size_t index, int32_t exp = 1) {
        Monomial m(nvars);
        m.e[index] = exp;
        return m;
    }

    size_t size() const { return e.size(); }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](int32_t x) { return x == 0; });
    }
    int64_t degree() const { return std::accumulate(e.begin(), e.end(), int64_t{0}); }

    bool divides(const Monomial& m) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
        return r;
    }

    /// Exact quotient; caller guarantees divisibility.
    Monomial divided_by(const Monomial& m) const {
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] > 0 && b.e[i] > 0) return false;
        return true;
    }

    bool is_squarefree() const {
        return std::all_of(e.begin(), e.end(), [](int32_t x) { return x <= 1; });
    }

    // container order only (canonical term-map key), not a term order
    bool operator==(const Monomial& m) const { return e == m.e; }
    bool operator!=(const Monomial& m) const { return e != m.e; }
    bool operator<(const Monomial& m) const {
        return std::lexicographical_compare(e.begin(), e.end(), m.e.begin(), m.e.end());
    }
};

} // namespace lsw

#endif
