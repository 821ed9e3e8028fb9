#ifndef LSW_TERM_ORDER_HPP
#define LSW_TERM_ORDER_HPP

#include <string>
#include <vector>

#include "lsw/monomial.hpp"

namespace lsw {

struct OrderError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Cmp { less, equal, greater };

/// Matrix term order: integer weight rows are compared top-down, ties are
/// broken by a fixed lexicographic comparison on variable index (variable 0
/// largest). The constructor verifies the term-order condition on the
/// generators: every variable compares greater than 1.
///
/// lex, degrevlex, elimination blocks, row-increasing orders and revlex
/// linear extensions are all instances of this one representation.
class TermOrder {
public:
    TermOrder(size_t nvars, std::vector<std::vector<int64_t>> rows, std::string tag = "matrix");

    /// Pure tie-break: lex with var 0 > var 1 > ...
    static TermOrder lex(size_t nvars);
    /// Lex with the given variable order, largest first.
    static TermOrder lex_permuted(const std::vector<size_t>& vars_desc);
    /// Graded reverse lex with var 0 > var 1 > ...
    static TermOrder degrevlex(size_t nvars);
    /// Graded reverse lex with the given variable order, largest first.
    static TermOrder degrevlex_permuted(const std::vector<size_t>& vars_desc);
    /// Any monomial touching an eliminated variable beats any that does not.
    static TermOrder elimination(const std::vector<bool>& eliminate);

    Cmp compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == Cmp::greater;
    }
    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == Cmp::less;
    }

    size_t nvars() const { return nvars_; }
    const std::vector<std::vector<int64_t>>& rows() const { return rows_; }
    const std::string& tag() const { return tag_; }

private:
    void validate() const;
    size_t nvars_;
    std::vector<std::vector<int64_t>> rows_;
    std::string tag_;
};

} // namespace lsw

#endif
