#include "lsw/polymatroid.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lsw {

SetSystem SetSystem::make(int n, std::vector<std::vector<int32_t>> sets) {
    SetSystem C;
    C.n = n;
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty()) throw NotABase("set system has an empty member");
        if (s.front() < 1 || s.back() > n) throw NotABase("set system element out of range");
    }
    C.sets = std::move(sets);
    return C;
}

bool is_base(const std::vector<BaseVector>& B) {
    if (B.empty()) throw NotABase("empty vector set");
    size_t n = B.front().size();
    int64_t total = -1;
    for (const auto& v : B) {
        if (v.size() != n) throw NotABase("ragged vector lengths");
        int64_t s = 0;
        for (int32_t c : v) {
            if (c < 0) throw NotABase("negative entry in a base vector");
            s += c;
        }
        if (total < 0) total = s;
        if (s != total) return false;
    }
    std::set<BaseVector> members(B.begin(), B.end());
    for (const auto& v : B)
        for (const auto& w : B)
            for (size_t i = 0; i < n; ++i) {
                if (v[i] <= w[i]) continue;
                bool exchange = false;
                for (size_t j = 0; j < n && !exchange; ++j) {
                    if (v[j] >= w[j]) continue;
                    BaseVector u = v;
                    u[i] -= 1;
                    u[j] += 1;
                    if (members.count(u)) exchange = true;
                }
                if (!exchange) return false;
            }
    return true;
}

std::vector<BaseVector> transversal_base(const SetSystem& C) {
    std::set<BaseVector> out;
    std::vector<size_t> idx(C.sets.size(), 0);
    while (true) {
        BaseVector v(static_cast<size_t>(C.n), 0);
        for (size_t k = 0; k < C.sets.size(); ++k) v[static_cast<size_t>(C.sets[k][idx[k]] - 1)] += 1;
        out.insert(std::move(v));
        size_t pos = C.sets.size();
        bool carry = true;
        while (pos > 0 && carry) {
            --pos;
            if (++idx[pos] < C.sets[pos].size())
                carry = false;
            else
                idx[pos] = 0;
        }
        if (carry) break;
    }
    return {out.begin(), out.end()};
}

Ring make_base_ring(const Field& f, const std::vector<BaseVector>& B) {
    std::vector<Variable> vars;
    vars.reserve(B.size());
    for (const auto& v : B) vars.push_back({format_var_name("b", v), 0});
    return RingContext::make(f, std::move(vars));
}

Ideal base_ring_kernel(const Field& f, const std::vector<BaseVector>& B,
                       const GroebnerOptions& opts) {
    if (B.empty()) throw NotABase("empty vector set");
    Ring bring = make_base_ring(f, B);
    Ring xring = make_x_ring(f, static_cast<int>(B.front().size()));
    std::vector<Polynomial> images;
    for (const auto& v : B) {
        Monomial m(B.front().size());
        for (size_t i = 0; i < v.size(); ++i) m.e[i] = v[i];
        images.push_back(Polynomial::term(xring, m, f.one()));
    }
    return algebra_map_kernel(bring, images, opts);
}

Ideal pseudo_white_presentation(const Field& f, const SetSystem& C) {
    std::vector<std::vector<int32_t>> factors = C.sets;
    std::vector<LatticePoint> pts = product_points(factors);
    Ring s_ring = make_point_ring(f, pts);
    Ideal hibi = hibi_relations(s_ring, pts);
    std::vector<Polynomial> gens = hibi.gens;

    // permutation classes keyed by the sorted coordinate multiset
    std::map<std::vector<int32_t>, std::vector<size_t>> classes;
    for (size_t i = 0; i < pts.size(); ++i) {
        std::vector<int32_t> key(pts[i].begin(), pts[i].end());
        std::sort(key.begin(), key.end());
        classes[key].push_back(i);
    }
    for (const auto& [key, members] : classes) {
        for (size_t k = 1; k < members.size(); ++k)
            gens.push_back(Polynomial::variable(s_ring, members[k]) -
                           Polynomial::variable(s_ring, members[0]));
    }
    return Ideal::make(s_ring, std::move(gens));
}

Ideal symmetric_exchange_quadrics(const Field& f, const std::vector<BaseVector>& B) {
    if (!is_base(B)) throw NotABase("vector set fails the exchange axiom");
    Ring bring = make_base_ring(f, B);
    std::map<BaseVector, size_t> index;
    for (size_t i = 0; i < B.size(); ++i) index[B[i]] = i;
    size_t n = B.front().size();

    std::set<std::pair<Monomial, Monomial>> seen;
    std::vector<Polynomial> gens;
    auto pair_monomial = [&](size_t a, size_t b) {
        Monomial m(B.size());
        m.e[a] += 1;
        m.e[b] += 1;
        return m;
    };
    for (size_t vi = 0; vi < B.size(); ++vi)
        for (size_t wi = 0; wi < B.size(); ++wi)
            for (size_t i = 0; i < n; ++i) {
                if (B[vi][i] <= B[wi][i]) continue;
                for (size_t j = 0; j < n; ++j) {
                    if (B[vi][j] >= B[wi][j]) continue;
                    BaseVector v2 = B[vi], w2 = B[wi];
                    v2[i] -= 1;
                    v2[j] += 1;
                    w2[i] += 1;
                    w2[j] -= 1;
                    auto iv = index.find(v2), iw = index.find(w2);
                    if (iv == index.end() || iw == index.end()) continue;
                    Monomial lhs = pair_monomial(vi, wi);
                    Monomial rhs = pair_monomial(iv->second, iw->second);
                    if (lhs == rhs) continue;
                    auto key = lhs < rhs ? std::make_pair(lhs, rhs) : std::make_pair(rhs, lhs);
                    if (!seen.insert(key).second) continue;
                    Polynomial q(bring);
                    q.add_term(key.first, f.one());
                    q.add_term(key.second, f.neg(f.one()));
                    gens.push_back(std::move(q));
                }
            }
    return Ideal::make(bring, std::move(gens));
}

DegreeSearch quadratic_basis_search(const Field& f, const SetSystem& C, size_t sample_count,
                                    uint64_t seed, const GroebnerOptions& opts) {
    DegreeSearch out;
    std::vector<LatticePoint> pts = product_points(C.sets);
    Ideal P = pseudo_white_presentation(f, C);

    std::vector<std::vector<size_t>> extensions;
    auto all = enumerate_linear_extensions(pts, 500);
    if (all && all->size() <= sample_count) {
        extensions = std::move(*all);
        out.exhaustive = true;
    } else {
        Rng rng(seed);
        for (size_t k = 0; k < sample_count; ++k)
            extensions.push_back(sample_linear_extension(pts, rng));
    }

    out.best_max_degree = -1;
    for (const auto& ext : extensions) {
        TermOrder ord = revlex_extension(pts, ext);
        GroebnerBasis G = buchberger(P, ord, opts);
        ++out.extensions_tested;
        long long top = 0;
        for (const auto& g : G.elements) top = std::max<long long>(top, g.total_degree());
        if (out.best_max_degree < 0 || top < out.best_max_degree) out.best_max_degree = top;
        if (top <= 2) ++out.quadratic_orders;
        if (is_groebner_set(P.gens, ord)) ++out.input_was_basis;
    }
    return out;
}

WhiteVerdict white_check(const Field& f, const std::vector<BaseVector>& B,
                         const GroebnerOptions& opts) {
    try {
        Ideal quadrics = symmetric_exchange_quadrics(f, B);
        Ideal kernel = base_ring_kernel(f, B, opts);
        bool equal = ideal_equal(quadrics, kernel, opts);
        return {equal ? WhiteVerdict::Outcome::holds : WhiteVerdict::Outcome::fails,
                equal ? "exchange quadrics generate the toric kernel"
                      : "exchange quadrics generate a proper subideal"};
    } catch (const BudgetExceeded& e) {
        return {WhiteVerdict::Outcome::budget_exceeded, e.what()};
    }
}

} // namespace lsw
