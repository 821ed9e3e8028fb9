#ifndef LSW_LATTICE_HPP
#define LSW_LATTICE_HPP

#include <optional>

#include "lsw/groebner.hpp"
#include "lsw/rng.hpp"

namespace lsw {

struct NotALattice : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotALinearExtension : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A point of a product poset; coordinates are labels ordered by value.
using LatticePoint = boost::container::small_vector<int32_t, 8>;

bool point_leq(const LatticePoint& a, const LatticePoint& b);
LatticePoint point_join(const LatticePoint& a, const LatticePoint& b);
LatticePoint point_meet(const LatticePoint& a, const LatticePoint& b);

/// All tuples of the given label sets (each sorted ascending), lex ascending.
std::vector<LatticePoint> product_points(const std::vector<std::vector<int32_t>>& factors);

/// H_n(d) = { alpha in H(d) : rk alpha < n } with rk alpha = sum(alpha_i) - m.
/// Downward closed in H(d) since the rank is monotone.
struct TruncatedLattice {
    std::vector<int32_t> d;
    int n = 0;
    std::vector<LatticePoint> points; // lex ascending

    static TruncatedLattice make(std::vector<int32_t> d, int n);
    int m() const { return static_cast<int>(d.size()); }
    size_t size() const { return points.size(); }
    bool contains(const LatticePoint& p) const;
    std::optional<size_t> index_of(const LatticePoint& p) const;

    static int64_t rank(const LatticePoint& p);
};

/// Index pairs (i < j) of incomparable points, in index order.
std::vector<std::pair<size_t, size_t>> incomparable_pairs(const std::vector<LatticePoint>& pts);

/// s[alpha] ring over the given points, in point order.
Ring make_point_ring(const Field& f, const std::vector<LatticePoint>& pts);

/// One binomial s_a s_b - s_{a v b} s_{a ^ b} per incomparable pair. Throws
/// NotALattice when a join or meet escapes the point set.
Ideal hibi_relations(const Field& f, const std::vector<LatticePoint>& pts);
Ideal hibi_relations(const Ring& s_ring, const std::vector<LatticePoint>& pts);

/// Ideal of products of incomparable pairs (the Stanley-Reisner ideal of the
/// chain complex).
MonomialIdeal incomparability_ideal(const std::vector<LatticePoint>& pts);

/// Saturated chains from a minimal to a maximal element, counted by a
/// memoized DFS over covers.
long long maximal_chain_count(const std::vector<LatticePoint>& pts);

/// Cover relations as plain text, one "a < b" line per edge.
std::string poset_edges_text(const std::vector<LatticePoint>& pts);

/// Size of the longest chain (number of points on it).
long long longest_chain_size(const std::vector<LatticePoint>& pts);

/// All linear extensions (as index sequences, smallest first) if there are
/// at most `cap`; nullopt when the count exceeds the cap.
std::optional<std::vector<std::vector<size_t>>> enumerate_linear_extensions(
    const std::vector<LatticePoint>& pts, size_t cap);

/// One linear extension drawn by randomized topological sort.
std::vector<size_t> sample_linear_extension(const std::vector<LatticePoint>& pts, Rng& rng);

/// Canonical linear extension: the identity on a lex-ascending point list
/// (lex refines the componentwise order).
std::vector<size_t> default_linear_extension(const std::vector<LatticePoint>& pts);

/// Degrevlex whose variable ranking refines the partial order (smallest
/// poset elements smallest). Validates the extension.
TermOrder revlex_extension(const std::vector<LatticePoint>& pts,
                           const std::vector<size_t>& extension);

struct StraighteningRelation {
    size_t a = 0, b = 0; // incomparable pair, indices into the point list
    Polynomial relation; // leading term s_a * s_b
    bool asl2_shape_ok = false;
};

struct AslBudget {
    bool exhaustive_preferred = true; // enumerate when count <= cap
    size_t enumeration_cap = 500;
    size_t sample_count = 50;
    uint64_t seed = 1;
};

struct AslVerdict {
    bool pass = false;
    bool exhaustive = false;
    size_t extensions_tested = 0;
    std::optional<std::vector<size_t>> failing_extension;
    std::string detail;
    std::vector<StraighteningRelation> straightening;
    bool asl2_ok = false;
};

/// Checks in_tau(I) = J_H for every (or sampled) revlex linear extension tau,
/// then extracts the straightening relations from the reduced basis and
/// checks their ASL2 shape (z <= t, z < a, z < b).
AslVerdict asl_verify(const Ideal& I, const std::vector<LatticePoint>& pts,
                      const AslBudget& budget = {}, const GroebnerOptions& opts = {});

} // namespace lsw

#endif
