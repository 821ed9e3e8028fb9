#ifndef LSW_GROEBNER_HPP
#define LSW_GROEBNER_HPP

#include "lsw/ideal.hpp"

namespace lsw {

/// Resource budget for one Buchberger run. Exceeding it raises
/// BudgetExceeded; the engine never silently truncates a basis.
struct GroebnerOptions {
    long long max_pairs = 4'000'000;
    long long max_basis = 100'000;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(long long pairs, long long basis)
        : std::runtime_error("groebner budget exceeded (pairs=" + std::to_string(pairs) +
                             ", basis=" + std::to_string(basis) + ")"),
          pairs(pairs), basis(basis) {}
    long long pairs;
    long long basis;
};

struct EngineCheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GroebnerBasis {
    Ring ring;
    std::vector<Polynomial> elements; // monic, sorted by leading term descending
    TermOrder order;
    bool reduced = false;
};

/// Reduced Groebner basis by Buchberger's algorithm with the normal pair
/// selection strategy and the coprime/chain pruning criteria.
GroebnerBasis buchberger(const Ideal& I, const TermOrder& order,
                         const GroebnerOptions& opts = {});

/// Remainder of the division algorithm: no term of the result is divisible
/// by a leading term of G. Works for any generating set, not only bases.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gens,
                       const TermOrder& order);

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b, const TermOrder& order);

/// True iff every S-polynomial of the set reduces to zero modulo the set.
bool is_groebner_set(const std::vector<Polynomial>& gens, const TermOrder& order);

MonomialIdeal initial_ideal(const Ideal& I, const TermOrder& order,
                            const GroebnerOptions& opts = {});
MonomialIdeal leading_ideal(const GroebnerBasis& G);

/// Generators of I intersected with the subring on the kept variables,
/// via a block elimination order.
Ideal eliminate(const Ideal& I, const std::vector<bool>& keep,
                const GroebnerOptions& opts = {});

/// I cap J via one auxiliary variable u and elimination of u.
Ideal intersect(const Ideal& I, const Ideal& J, const GroebnerOptions& opts = {});

/// Reduced bases under one fixed order coincide.
bool ideal_equal(const Ideal& I, const Ideal& J, const GroebnerOptions& opts = {});

/// Kernel of the algebra map source -> target sending variable i of the
/// source ring to images[i]; computed from the graph ideal by elimination.
Ideal algebra_map_kernel(const Ring& source, const std::vector<Polynomial>& images,
                         const GroebnerOptions& opts = {});

Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, unsigned k);

/// Rewrite an ideal into a ring that contains (by name) every variable
/// occurring in its generators.
Ideal ideal_mapped_by_name(const Ideal& I, const Ring& target);

/// Process-global soundness instrumentation: when enabled, every basis the
/// engine returns is re-validated post hoc by full S-pair reduction to zero
/// (no pruning criteria) plus membership of the input generators.
void groebner_self_check_enable(bool on);
bool groebner_self_check_enabled();
struct SelfCheckStats {
    long long computations = 0;
    long long failures = 0;
};
SelfCheckStats groebner_self_check_stats();
void groebner_self_check_reset();

} // namespace lsw

#endif
