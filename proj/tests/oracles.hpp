#ifndef LSW_TESTS_ORACLES_HPP
#define LSW_TESTS_ORACLES_HPP

// Independent cross-check machinery used only by tests. Everything here is
// deliberately naive: dense linear algebra and exhaustive enumeration, kept
// separate from the division/Buchberger code paths it validates.

#include <map>
#include <vector>

#include "lsw/linalg.hpp"
#include "lsw/polynomial.hpp"

namespace lsw::testing {

inline void enumerate_monomials(size_t nvars, int64_t maxdeg, size_t pos, Monomial& cur,
                                std::vector<Monomial>& out) {
    if (pos == nvars) {
        out.push_back(cur);
        return;
    }
    for (int32_t e = 0; e <= maxdeg; ++e) {
        cur.e[pos] = e;
        enumerate_monomials(nvars, maxdeg - e, pos + 1, cur, out);
    }
    cur.e[pos] = 0;
}

inline std::vector<Monomial> monomials_up_to(size_t nvars, int64_t maxdeg) {
    std::vector<Monomial> out;
    Monomial cur = Monomial::one(nvars);
    enumerate_monomials(nvars, maxdeg, 0, cur, out);
    return out;
}

/// Macaulay-matrix reduction: the row space of { m*g : deg(m*g) <= D } in the
/// monomial basis of degree <= D, kept in reduced row echelon form with
/// pivots on the order-largest monomials. For a Groebner basis under a
/// graded order this reproduces the division normal form; for arbitrary
/// generators, reduction to zero still certifies ideal membership.
class MacaulayOracle {
public:
    MacaulayOracle(Ring ring, TermOrder order, int64_t maxdeg,
                   const std::vector<Polynomial>& gens)
        : ring_(std::move(ring)), order_(std::move(order)), maxdeg_(maxdeg) {
        cols_ = monomials_up_to(ring_->nvars(), maxdeg_);
        std::sort(cols_.begin(), cols_.end(),
                  [&](const Monomial& a, const Monomial& b) { return order_.greater(a, b); });
        for (size_t i = 0; i < cols_.size(); ++i) col_index_[cols_[i]] = i;
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            int64_t room = maxdeg_ - g.total_degree();
            for (const auto& m : monomials_up_to(ring_->nvars(), room))
                insert(to_row(g.times_monomial(m)));
        }
    }

    Polynomial reduce(const Polynomial& f) const {
        std::vector<Scalar> row = to_row(f);
        eliminate(row);
        Polynomial r(ring_);
        for (size_t j = 0; j < cols_.size(); ++j) r.add_term(cols_[j], row[j]);
        return r;
    }

    bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }

private:
    std::vector<Scalar> to_row(const Polynomial& p) const {
        std::vector<Scalar> row(cols_.size(), ring_->field().zero());
        for (const auto& [m, c] : p.terms()) row[col_index_.at(m)] = c;
        return row;
    }

    void eliminate(std::vector<Scalar>& row) const {
        const Field& f = ring_->field();
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Scalar& c = row[pivots_[r]];
            if (f.is_zero(c)) continue;
            Scalar factor = c;
            for (size_t j = pivots_[r]; j < cols_.size(); ++j)
                row[j] = f.sub(row[j], f.mul(factor, rows_[r][j]));
        }
    }

    void insert(std::vector<Scalar> row) {
        const Field& f = ring_->field();
        eliminate(row);
        size_t piv = cols_.size();
        for (size_t j = 0; j < cols_.size(); ++j)
            if (!f.is_zero(row[j])) {
                piv = j;
                break;
            }
        if (piv == cols_.size()) return;
        Scalar inv = f.inv(row[piv]);
        for (size_t j = piv; j < cols_.size(); ++j) row[j] = f.mul(row[j], inv);
        // keep earlier rows reduced against the new pivot
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Scalar& c = rows_[r][piv];
            if (f.is_zero(c)) continue;
            Scalar factor = c;
            for (size_t j = piv; j < cols_.size(); ++j)
                rows_[r][j] = f.sub(rows_[r][j], f.mul(factor, row[j]));
        }
        rows_.push_back(std::move(row));
        pivots_.push_back(piv);
    }

    Ring ring_;
    TermOrder order_;
    int64_t maxdeg_;
    std::vector<Monomial> cols_;
    std::map<Monomial, size_t> col_index_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<size_t> pivots_;
};

} // namespace lsw::testing

#endif
