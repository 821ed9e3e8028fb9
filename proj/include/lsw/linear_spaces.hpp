#ifndef LSW_LINEAR_SPACES_HPP
#define LSW_LINEAR_SPACES_HPP

#include <iosfwd>

#include "lsw/linalg.hpp"
#include "lsw/polymatroid.hpp"

namespace lsw {

struct FamilyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised by the diagonal construction when a kernel basis element exceeds
/// multidegree (1,...,1); carries the offending element.
class DiagonalBoundViolation : public std::runtime_error {
public:
    explicit DiagonalBoundViolation(std::string offender)
        : std::runtime_error("kernel basis element exceeds multidegree (1,...,1): " + offender),
          offender(std::move(offender)) {}
    std::string offender;
};

/// V_1, ..., V_m inside R_1 = <x_1..x_n>: space i is spanned by the rows of
/// a full-row-rank d_i x n coefficient matrix. Generator labels name the
/// t- and s-variables; a family built from a set system carries the actual
/// column indices as labels, so presentations print in source coordinates.
struct LinearSpaceFamily {
    Field field = Field::prime(Field::default_prime);
    int n = 0;
    std::vector<ScalarMatrix> spaces;
    std::vector<std::vector<int32_t>> gen_labels; // ascending, length d_i

    int m() const { return static_cast<int>(spaces.size()); }
    std::vector<int32_t> dims() const;
    int64_t dims_sum() const;

    static LinearSpaceFamily from_matrices(Field f, int n, std::vector<ScalarMatrix> spaces);
    static LinearSpaceFamily from_set_system(Field f, const SetSystem& C);

    /// Uniform random coefficients, resampled until every space has full row
    /// rank. Over the rationals an explicit coefficient bound is required.
    static LinearSpaceFamily sample_generic(Field f, int m, int n, std::vector<int32_t> d,
                                            uint64_t seed, std::optional<int64_t> coeff_bound = {});

    /// basis polynomial f_{i j} (1-based position j <= d_i) in the x ring
    Polynomial basis_form(const Ring& xring, int i, int j) const;

    static LinearSpaceFamily read(std::istream& in, const Field& f);
    void write(std::ostream& out) const;
};

/// The matrix L with row i = (t_{i1},...,t_{in}) A_i, where x = f_i A_i and
/// f_i is the chosen basis of V_i completed by standard basis vectors.
struct LMatrixBuild {
    Ring t_full;                                 // m x n, row-tagged, labeled
    std::vector<std::vector<int32_t>> full_labels; // per row, length n
    std::vector<std::vector<Polynomial>> entries;  // L_{ij}
    std::vector<ScalarMatrix> completions;         // the completed bases F_i
};

LMatrixBuild build_L(const LinearSpaceFamily& V);

/// 2-minors of the built matrix.
Ideal two_minors(const LMatrixBuild& L);

struct PresentationResult {
    Ideal kernel;
    GroebnerBasis basis;
    std::string index_set; // "T(V)", "H(d)" or "Hn(d)"
    std::optional<std::pair<long long, long long>> dim_degree; // from a squarefree initial ideal
};

/// Ker phi' = I_2(L) cap T(V), presented in the T(V) ring (columns j <= d_i)
/// with its reduced basis under the canonical row-increasing order.
PresentationResult bv_kernel(const LinearSpaceFamily& V, const GroebnerOptions& opts = {});

/// The T(V) ring of a family (columns j <= d_i, labeled).
Ring make_tv_ring(const LinearSpaceFamily& V);

/// H(d) as label tuples of the family.
std::vector<LatticePoint> family_hd_points(const LinearSpaceFamily& V);
/// H_n(d) as label tuples (rank computed on positions).
std::vector<LatticePoint> family_hnd_points(const LinearSpaceFamily& V, int n);

/// Q = (Ker phi')_Delta: pads each kernel basis element of multidegree
/// <= (1,..,1) to degree (1,..,1) and rewrites it linearly in s_alpha.
/// Throws DiagonalBoundViolation when the bound fails.
Ideal diagonal_Q(const PresentationResult& bv, const LinearSpaceFamily& V, const Ring& s_ring);

enum class AvRoute { direct, diagonal };
enum class AvIndexSet { hd, hnd };

/// Presentation of A(V): the direct route is the kernel of
/// s_alpha -> f_{1 alpha_1} ... f_{m alpha_m}; the diagonal route is the
/// Hibi relations of H(d) plus diagonal_Q of the B(V) kernel.
PresentationResult av_presentation(const LinearSpaceFamily& V, AvRoute route,
                                   AvIndexSet index = AvIndexSet::hd,
                                   const GroebnerOptions& opts = {});

/// rank of the products f_{1 j_1} ... f_{m j_m} in the degree-m monomial basis
long long product_dimension(const LinearSpaceFamily& V);

struct PrimdecComponent {
    std::vector<int> subset; // 1-based indices of A
    size_t rank = 0;         // dim of sum_{i in A} V_i
};
struct PrimdecVerdict {
    bool equal = false;
    std::vector<PrimdecComponent> components;
};

/// Machine check of I_1...I_m = cap_A I_A^{#A} (capped at m <= 4).
PrimdecVerdict primdec_check(const LinearSpaceFamily& V, const GroebnerOptions& opts = {});

} // namespace lsw

#endif
