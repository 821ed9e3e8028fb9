#ifndef LSW_GENERIC_INITIAL_HPP
#define LSW_GENERIC_INITIAL_HPP

#include "lsw/linear_spaces.hpp"

namespace lsw {

/// The combinatorial ideal J: monomials t_{i1 j1} ... t_{ik jk} with
/// i1 < ... < ik and j1 + ... + jk >= n + k, optionally restricted to
/// j_h <= d_{i_h}. Generators stored abstractly as (row, column) lists.
struct JIdeal {
    int m = 0, n = 0;
    std::optional<std::vector<int32_t>> bounds;
    std::vector<std::vector<std::pair<int, int>>> gens; // minimal, 1-based
};

JIdeal combinatorial_J(int m, int n, const std::vector<int32_t>* d = nullptr);

/// Realize the abstract generators in a ring whose row i occupies variable
/// indices [offsets[i-1], offsets[i]).
MonomialIdeal j_monomials(const JIdeal& J, size_t nvars, const std::vector<size_t>& offsets);

/// Facets F_p = { t_ij : j <= p_i } of the Stanley-Reisner complex of J,
/// one per p in {1..n}^m with sum(p) = n + m - 1.
struct FacetComplex {
    int m = 0, n = 0;
    std::vector<std::vector<int32_t>> ps;
};

FacetComplex deltaJ_facets(int m, int n);

struct FacetStats {
    long long codim = 0;
    long long degree = 0;
    bool unmixed = false;
};

FacetStats facet_stats(const FacetComplex& F, long long total_vars);

/// L from an m x n x n coefficient tensor: L_{ij} = sum_k a[i][j][k] t_{ik}.
std::vector<std::vector<Polynomial>> l_matrix_from_tensor(
    const Ring& t_full, int m, int n, const std::vector<int64_t>& tensor);

Ideal two_minors_of(const Ring& t_full, const std::vector<std::vector<Polynomial>>& L);

/// The initial ideal a generic L must have under the given order: J with the
/// columns of each row renamed so the order is row-increasing.
MonomialIdeal expected_generic_initial(const JIdeal& J, const Ring& t_full,
                                       const TermOrder& order);

/// Samples a generic tensor, computes in(I_2(L)) for each sampled
/// row-increasing order and compares against J. A mismatch triggers the
/// resample-and-flag protocol (up to 3 resamples, then flagged).
struct GenericInitialVerdict {
    int m = 0, n = 0;
    uint64_t seed = 0;
    int resamples = 0;
    bool flagged = false;
    size_t orders_tested = 0;
    size_t orders_equal = 0;
    size_t budget_exceeded = 0;
    std::vector<std::string> notes;
    bool all_equal() const {
        return !flagged && budget_exceeded == 0 && orders_equal == orders_tested;
    }
};

GenericInitialVerdict verify_generic_initial(const Field& f, int m, int n, uint64_t seed,
                                             size_t order_count,
                                             const GroebnerOptions& opts = {});

/// Canonical row-increasing order (weights w_ij = j) on the full t-ring.
TermOrder canonical_row_increasing(int m, int n);

/// One binomial per cycle of the complete bipartite graph K_{n,m}, up to
/// rotation and reflection; the 4-cycles are the 2-minors.
std::vector<Polynomial> cycle_binomials(const Ring& t_full, int m, int n);

/// For each minimal generator M of J, the reduced basis element f_M = M + tail
/// with the tail supported inside the box v <= (j_1..j_k) and outside J.
struct EquatFamily {
    Ring t_full;
    JIdeal J;
    std::vector<Polynomial> elements; // aligned with J.gens
    bool shape_ok = false;
    bool flagged = false;
    int resamples = 0;
};

EquatFamily equat_family(const Field& f, int m, int n, uint64_t seed,
                         const GroebnerOptions& opts = {});

/// Straightening data of the generic presentation over H_n(d): the reduced
/// relations (ASL2 shape) plus the display forms s_a s_b - s_meet * L built
/// from the L_delta expansions of the B(V) kernel.
struct GenericStraightening {
    std::vector<LatticePoint> points; // H_n(d)
    Ring s_ring;
    Ideal presentation;                        // Ker F, direct route
    std::vector<StraighteningRelation> reduced;
    std::vector<Polynomial> display;
    bool shapes_ok = false;
    bool display_generates = false; // display family generates Ker F
};

GenericStraightening straightening_relations(const LinearSpaceFamily& V,
                                             const GroebnerOptions& opts = {});

/// Krull dimension and degree of A(V) read from the Stanley-Reisner facets
/// of the initial ideal of the H_n(d) presentation, compared against
/// min(n, 1 - m + sum d_i) and the maximal-chain count.
struct DimDegree {
    long long dim = 0;
    long long degree = 0;
    long long dim_formula = 0;
    long long dim_chain = 0; // longest chain in H_n(d)
    long long degree_chains = 0;
    bool initial_is_JH = false;
    bool matches() const {
        return initial_is_JH && dim == dim_formula && dim == dim_chain &&
               degree == degree_chains;
    }
};

DimDegree krull_dim_degree(const LinearSpaceFamily& V, const GroebnerOptions& opts = {});

} // namespace lsw

#endif
