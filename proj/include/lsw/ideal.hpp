#ifndef LSW_IDEAL_HPP
#define LSW_IDEAL_HPP

#include <vector>

#include "lsw/polynomial.hpp"

namespace lsw {

/// A finitely generated ideal: the context plus a generator list. Zero
/// generators are dropped at construction.
struct Ideal {
    Ring ring;
    std::vector<Polynomial> gens;

    static Ideal make(Ring ring, std::vector<Polynomial> gens);
    bool is_zero() const { return gens.empty(); }
};

/// Divisibility-minimal subset, sorted by (degree, exponents).
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// Monomial ideal held by its minimal generators.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    static MonomialIdeal from_generators(std::vector<Monomial> gens) {
        MonomialIdeal m;
        m.gens_ = minimalize(std::move(gens));
        return m;
    }

    const std::vector<Monomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    bool contains(const Monomial& m) const {
        for (const auto& g : gens_)
            if (g.divides(m)) return true;
        return false;
    }

    bool operator==(const MonomialIdeal& o) const { return gens_ == o.gens_; }
    bool operator!=(const MonomialIdeal& o) const { return gens_ != o.gens_; }

private:
    std::vector<Monomial> gens_;
};

/// Facets (maximal faces) of the Stanley-Reisner complex of a squarefree
/// monomial ideal on nvars vertices, as sorted vertex index lists. Throws
/// RingError if a generator is not squarefree.
std::vector<std::vector<size_t>> complex_facets(const MonomialIdeal& ideal, size_t nvars);

} // namespace lsw

#endif
