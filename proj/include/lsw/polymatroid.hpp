#ifndef LSW_POLYMATROID_HPP
#define LSW_POLYMATROID_HPP

#include "lsw/lattice.hpp"

namespace lsw {

struct NotABase : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using BaseVector = std::vector<int32_t>;

/// C_1, ..., C_m: non-empty subsets of {1..n}.
struct SetSystem {
    int n = 0;
    std::vector<std::vector<int32_t>> sets;

    static SetSystem make(int n, std::vector<std::vector<int32_t>> sets);
    int m() const { return static_cast<int>(sets.size()); }
};

/// One-sided exchange axiom: for every v, w and every i with v_i > w_i there
/// is j with v_j < w_j and v + e_j - e_i in B. Checked exhaustively.
bool is_base(const std::vector<BaseVector>& B);

/// All vectors sum_k e_{j_k} with j_k in C_k, deduplicated and sorted.
std::vector<BaseVector> transversal_base(const SetSystem& C);

/// b[v] ring, one variable per base vector in list order.
Ring make_base_ring(const Field& f, const std::vector<BaseVector>& B);

/// Toric defining ideal of K[B]: kernel of b[v] -> x^v.
Ideal base_ring_kernel(const Field& f, const std::vector<BaseVector>& B,
                       const GroebnerOptions& opts = {});

/// Hibi relations of the product lattice C_1 x ... x C_m plus one relation
/// s_alpha - s_rep per member of each nontrivial permutation class (the
/// representative is the lex-smallest tuple with the same multiset).
Ideal pseudo_white_presentation(const Field& f, const SetSystem& C);

/// All quadrics b_v b_w - b_{v - e_i + e_j} b_{w + e_i - e_j} over pairs
/// v, w in B and coordinate pairs with v_i > w_i, v_j < w_j and both
/// exchanged vectors in B. Throws NotABase when B fails the exchange axiom.
Ideal symmetric_exchange_quadrics(const Field& f, const std::vector<BaseVector>& B);

/// Per-instance experiment: does the symmetric-exchange ideal equal the full
/// toric kernel? (Open in general; reported, never assumed.)
struct WhiteVerdict {
    enum class Outcome { holds, fails, budget_exceeded } outcome;
    std::string detail;
};
WhiteVerdict white_check(const Field& f, const std::vector<BaseVector>& B,
                         const GroebnerOptions& opts = {});

/// Order search over revlex linear extensions of C: per extension, the top
/// degree of the reduced basis of the pseudo-White presentation and whether
/// the input relations already were a basis. Whether a quadratic basis always
/// exists is an open question; this only reports what the sampled orders see.
struct DegreeSearch {
    size_t extensions_tested = 0;
    bool exhaustive = false;
    long long best_max_degree = 0;  // smallest top degree seen
    size_t quadratic_orders = 0;    // extensions with top degree <= 2
    size_t input_was_basis = 0;     // extensions where the relations are a basis
};
DegreeSearch quadratic_basis_search(const Field& f, const SetSystem& C, size_t sample_count,
                                    uint64_t seed, const GroebnerOptions& opts = {});

} // namespace lsw

#endif
