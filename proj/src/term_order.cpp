#include "lsw/term_order.hpp"

namespace lsw {

TermOrder::TermOrder(size_t nvars, std::vector<std::vector<int64_t>> rows, std::string tag)
    : nvars_(nvars), rows_(std::move(rows)), tag_(std::move(tag)) {
    for (const auto& row : rows_)
        if (row.size() != nvars_) throw OrderError("weight row width mismatch");
    validate();
}

void TermOrder::validate() const {
    // every variable > 1: sufficient for a term order given the lex tie-break
    for (size_t v = 0; v < nvars_; ++v) {
        Monomial var = Monomial::var(nvars_, v);
        if (compare(var, Monomial::one(nvars_)) != Cmp::greater)
            throw OrderError("not a term order: variable " + std::to_string(v) +
                             " compares below 1");
    }
}

Cmp TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.size() != nvars_ || b.size() != nvars_)
        throw OrderError("monomial context mismatch");
    for (const auto& row : rows_) {
        __int128 s = 0;
        for (size_t i = 0; i < nvars_; ++i)
            s += static_cast<__int128>(row[i]) * (a.e[i] - b.e[i]);
        if (s > 0) return Cmp::greater;
        if (s < 0) return Cmp::less;
    }
    for (size_t i = 0; i < nvars_; ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? Cmp::greater : Cmp::less;
    }
    return Cmp::equal;
}

TermOrder TermOrder::lex(size_t nvars) {
    return TermOrder(nvars, {}, "lex");
}

TermOrder TermOrder::lex_permuted(const std::vector<size_t>& vars_desc) {
    size_t n = vars_desc.size();
    std::vector<std::vector<int64_t>> rows;
    rows.reserve(n);
    for (size_t v : vars_desc) {
        std::vector<int64_t> row(n, 0);
        row.at(v) = 1;
        rows.push_back(std::move(row));
    }
    return TermOrder(n, std::move(rows), "lex-perm");
}

TermOrder TermOrder::degrevlex(size_t nvars) {
    std::vector<size_t> desc(nvars);
    for (size_t i = 0; i < nvars; ++i) desc[i] = i;
    return degrevlex_permuted(desc);
}

TermOrder TermOrder::degrevlex_permuted(const std::vector<size_t>& vars_desc) {
    size_t n = vars_desc.size();
    std::vector<std::vector<int64_t>> rows;
    rows.reserve(n);
    rows.emplace_back(n, 1);
    // then revlex: smallest variable checked first, lower exponent wins
    for (size_t k = n; k-- > 1;) {
        std::vector<int64_t> row(n, 0);
        row.at(vars_desc[k]) = -1;
        rows.push_back(std::move(row));
    }
    return TermOrder(n, std::move(rows), "degrevlex");
}

TermOrder TermOrder::elimination(const std::vector<bool>& eliminate) {
    size_t n = eliminate.size();
    std::vector<std::vector<int64_t>> rows;
    std::vector<int64_t> block(n, 0);
    for (size_t i = 0; i < n; ++i) block[i] = eliminate[i] ? 1 : 0;
    rows.push_back(std::move(block));
    rows.emplace_back(n, 1);
    for (size_t k = n; k-- > 1;) {
        std::vector<int64_t> row(n, 0);
        row[k] = -1;
        rows.push_back(std::move(row));
    }
    return TermOrder(n, std::move(rows), "elimination");
}

} // namespace lsw
