#include "lsw/lattice.hpp"

#include <algorithm>
#include <functional>

namespace lsw {

bool point_leq(const LatticePoint& a, const LatticePoint& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

LatticePoint point_join(const LatticePoint& a, const LatticePoint& b) {
    LatticePoint r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

LatticePoint point_meet(const LatticePoint& a, const LatticePoint& b) {
    LatticePoint r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

std::vector<LatticePoint> product_points(const std::vector<std::vector<int32_t>>& factors) {
    std::vector<std::vector<int32_t>> sorted = factors;
    for (auto& f : sorted) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.empty()) throw NotALattice("empty factor in a product poset");
    }
    std::vector<LatticePoint> out;
    LatticePoint cur(sorted.size(), 0);
    size_t total = 1;
    for (const auto& f : sorted) total *= f.size();
    out.reserve(total);
    std::vector<size_t> idx(sorted.size(), 0);
    while (true) {
        for (size_t i = 0; i < sorted.size(); ++i) cur[i] = sorted[i][idx[i]];
        out.push_back(cur);
        size_t pos = sorted.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < sorted[pos].size()) break;
            idx[pos] = 0;
            if (pos == 0) return out;
        }
    }
}

int64_t TruncatedLattice::rank(const LatticePoint& p) {
    int64_t r = -static_cast<int64_t>(p.size());
    for (int32_t c : p) r += c;
    return r;
}

TruncatedLattice TruncatedLattice::make(std::vector<int32_t> d, int n) {
    for (int32_t di : d)
        if (di < 1) throw NotALattice("entries of d must be positive");
    std::vector<std::vector<int32_t>> factors;
    for (int32_t di : d) {
        std::vector<int32_t> f(static_cast<size_t>(di));
        for (int32_t j = 0; j < di; ++j) f[static_cast<size_t>(j)] = j + 1;
        factors.push_back(std::move(f));
    }
    TruncatedLattice H;
    H.d = std::move(d);
    H.n = n;
    for (auto& p : product_points(factors))
        if (rank(p) < n) H.points.push_back(std::move(p));
    return H;
}

bool TruncatedLattice::contains(const LatticePoint& p) const {
    return index_of(p).has_value();
}

std::optional<size_t> TruncatedLattice::index_of(const LatticePoint& p) const {
    auto it = std::lower_bound(points.begin(), points.end(), p,
                               [](const LatticePoint& a, const LatticePoint& b) {
                                   return std::lexicographical_compare(a.begin(), a.end(),
                                                                       b.begin(), b.end());
                               });
    if (it == points.end() || *it != p) return std::nullopt;
    return static_cast<size_t>(it - points.begin());
}

std::vector<std::pair<size_t, size_t>> incomparable_pairs(const std::vector<LatticePoint>& pts) {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (!point_leq(pts[i], pts[j]) && !point_leq(pts[j], pts[i])) out.emplace_back(i, j);
    return out;
}

Ring make_point_ring(const Field& f, const std::vector<LatticePoint>& pts) {
    std::vector<std::vector<int32_t>> tuples;
    tuples.reserve(pts.size());
    for (const auto& p : pts) tuples.emplace_back(p.begin(), p.end());
    return make_s_ring(f, tuples);
}

Ideal hibi_relations(const Field& f, const std::vector<LatticePoint>& pts) {
    return hibi_relations(make_point_ring(f, pts), pts);
}

Ideal hibi_relations(const Ring& s_ring, const std::vector<LatticePoint>& pts) {
    auto find = [&](const LatticePoint& p) -> size_t {
        for (size_t k = 0; k < pts.size(); ++k)
            if (pts[k] == p) return k;
        throw NotALattice("join or meet escapes the point set");
    };
    std::vector<Polynomial> gens;
    for (auto [i, j] : incomparable_pairs(pts)) {
        size_t jn = find(point_join(pts[i], pts[j]));
        size_t mt = find(point_meet(pts[i], pts[j]));
        Polynomial rel = Polynomial::variable(s_ring, i) * Polynomial::variable(s_ring, j) -
                         Polynomial::variable(s_ring, jn) * Polynomial::variable(s_ring, mt);
        gens.push_back(std::move(rel));
    }
    return Ideal::make(s_ring, std::move(gens));
}

MonomialIdeal incomparability_ideal(const std::vector<LatticePoint>& pts) {
    std::vector<Monomial> gens;
    for (auto [i, j] : incomparable_pairs(pts)) {
        Monomial m(pts.size());
        m.e[i] = 1;
        m.e[j] = 1;
        gens.push_back(std::move(m));
    }
    return MonomialIdeal::from_generators(std::move(gens));
}

namespace {

// covers[i] = indices j with pts[i] < pts[j] and nothing strictly between
std::vector<std::vector<size_t>> cover_lists(const std::vector<LatticePoint>& pts) {
    size_t n = pts.size();
    std::vector<std::vector<size_t>> covers(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j || !point_leq(pts[i], pts[j]) || pts[i] == pts[j]) continue;
            bool direct = true;
            for (size_t k = 0; k < n && direct; ++k) {
                if (k == i || k == j) continue;
                if (point_leq(pts[i], pts[k]) && point_leq(pts[k], pts[j]) && pts[k] != pts[i] &&
                    pts[k] != pts[j])
                    direct = false;
            }
            if (direct) covers[i].push_back(j);
        }
    return covers;
}

long long chains_from(size_t i, const std::vector<std::vector<size_t>>& covers,
                      std::vector<long long>& memo) {
    if (memo[i] >= 0) return memo[i];
    if (covers[i].empty()) return memo[i] = 1;
    long long total = 0;
    for (size_t j : covers[i]) total += chains_from(j, covers, memo);
    return memo[i] = total;
}

} // namespace

long long maximal_chain_count(const std::vector<LatticePoint>& pts) {
    if (pts.empty()) return 0;
    auto covers = cover_lists(pts);
    std::vector<long long> memo(pts.size(), -1);
    std::vector<bool> minimal(pts.size(), true);
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j : covers[i]) minimal[j] = false;
    // minimality via covers is enough: any smaller element gives a cover chain
    long long total = 0;
    for (size_t i = 0; i < pts.size(); ++i)
        if (minimal[i]) total += chains_from(i, covers, memo);
    return total;
}

std::string poset_edges_text(const std::vector<LatticePoint>& pts) {
    auto covers = cover_lists(pts);
    std::string out;
    auto label = [&](size_t i) {
        std::string s = "(";
        for (size_t k = 0; k < pts[i].size(); ++k) {
            if (k) s += ",";
            s += std::to_string(pts[i][k]);
        }
        return s + ")";
    };
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j : covers[i]) out += label(i) + " < " + label(j) + "\n";
    return out;
}

long long longest_chain_size(const std::vector<LatticePoint>& pts) {
    auto covers = cover_lists(pts);
    std::vector<long long> memo(pts.size(), -1);
    std::function<long long(size_t)> depth = [&](size_t i) -> long long {
        if (memo[i] >= 0) return memo[i];
        long long best = 1;
        for (size_t j : covers[i]) best = std::max(best, 1 + depth(j));
        return memo[i] = best;
    };
    long long best = 0;
    for (size_t i = 0; i < pts.size(); ++i) best = std::max(best, depth(i));
    return best;
}

namespace {

// predecessors counted over the full order relation
std::vector<std::vector<size_t>> smaller_lists(const std::vector<LatticePoint>& pts) {
    std::vector<std::vector<size_t>> smaller(pts.size());
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = 0; j < pts.size(); ++j)
            if (i != j && point_leq(pts[j], pts[i]) && pts[j] != pts[i]) smaller[i].push_back(j);
    return smaller;
}

bool extend_all(const std::vector<std::vector<size_t>>& smaller, std::vector<bool>& placed,
                std::vector<size_t>& cur, size_t n, size_t cap,
                std::vector<std::vector<size_t>>& out) {
    if (cur.size() == n) {
        if (out.size() >= cap) return false;
        out.push_back(cur);
        return true;
    }
    for (size_t i = 0; i < n; ++i) {
        if (placed[i]) continue;
        bool ready = true;
        for (size_t j : smaller[i])
            if (!placed[j]) {
                ready = false;
                break;
            }
        if (!ready) continue;
        placed[i] = true;
        cur.push_back(i);
        bool ok = extend_all(smaller, placed, cur, n, cap, out);
        cur.pop_back();
        placed[i] = false;
        if (!ok) return false;
    }
    return true;
}

} // namespace

std::optional<std::vector<std::vector<size_t>>> enumerate_linear_extensions(
    const std::vector<LatticePoint>& pts, size_t cap) {
    std::vector<std::vector<size_t>> out;
    auto smaller = smaller_lists(pts);
    std::vector<bool> placed(pts.size(), false);
    std::vector<size_t> cur;
    if (!extend_all(smaller, placed, cur, pts.size(), cap, out)) return std::nullopt;
    return out;
}

std::vector<size_t> sample_linear_extension(const std::vector<LatticePoint>& pts, Rng& rng) {
    auto smaller = smaller_lists(pts);
    std::vector<bool> placed(pts.size(), false);
    std::vector<size_t> out;
    while (out.size() < pts.size()) {
        std::vector<size_t> ready;
        for (size_t i = 0; i < pts.size(); ++i) {
            if (placed[i]) continue;
            bool ok = true;
            for (size_t j : smaller[i])
                if (!placed[j]) {
                    ok = false;
                    break;
                }
            if (ok) ready.push_back(i);
        }
        size_t pick = ready[rng.below(ready.size())];
        placed[pick] = true;
        out.push_back(pick);
    }
    return out;
}

std::vector<size_t> default_linear_extension(const std::vector<LatticePoint>& pts) {
    std::vector<size_t> ext(pts.size());
    for (size_t i = 0; i < ext.size(); ++i) ext[i] = i;
    return ext;
}

TermOrder revlex_extension(const std::vector<LatticePoint>& pts,
                           const std::vector<size_t>& extension) {
    if (extension.size() != pts.size())
        throw NotALinearExtension("extension length mismatch");
    std::vector<bool> seen(pts.size(), false);
    for (size_t i : extension) {
        if (i >= pts.size() || seen[i]) throw NotALinearExtension("not a permutation");
        seen[i] = true;
    }
    for (size_t k = 0; k < extension.size(); ++k)
        for (size_t l = k + 1; l < extension.size(); ++l)
            if (point_leq(pts[extension[l]], pts[extension[k]]) &&
                pts[extension[l]] != pts[extension[k]])
                throw NotALinearExtension("sequence violates the partial order");
    std::vector<size_t> desc(extension.rbegin(), extension.rend());
    return TermOrder::degrevlex_permuted(desc);
}

namespace {

// smaller element of a comparable pair {z, t} must sit strictly below both
// points of the straightened pair
bool asl2_shape(const std::vector<LatticePoint>& pts, size_t a, size_t b,
                const Polynomial& rel, const TermOrder& ord) {
    auto lt = rel.leading_term(ord).first;
    Monomial expected(pts.size());
    expected.e[a] = 1;
    expected.e[b] = 1;
    if (!(lt == expected)) return false;
    for (const auto& [m, c] : rel.terms()) {
        if (m == expected) continue;
        if (m.degree() != 2) return false;
        std::vector<size_t> support;
        for (size_t i = 0; i < m.size(); ++i)
            for (int32_t k = 0; k < m.e[i]; ++k) support.push_back(i);
        size_t z = support[0], t = support[1];
        if (!point_leq(pts[z], pts[t])) std::swap(z, t);
        if (!point_leq(pts[z], pts[t])) return false; // incomparable tail pair
        bool z_below_a = point_leq(pts[z], pts[a]) && pts[z] != pts[a];
        bool z_below_b = point_leq(pts[z], pts[b]) && pts[z] != pts[b];
        if (!z_below_a || !z_below_b) return false;
    }
    return true;
}

} // namespace

AslVerdict asl_verify(const Ideal& I, const std::vector<LatticePoint>& pts,
                      const AslBudget& budget, const GroebnerOptions& opts) {
    if (I.ring->nvars() != pts.size())
        throw RingError("asl_verify: one s variable per point required");
    AslVerdict v;
    MonomialIdeal JH = incomparability_ideal(pts);

    std::vector<std::vector<size_t>> extensions;
    auto all = budget.exhaustive_preferred
                   ? enumerate_linear_extensions(pts, budget.enumeration_cap)
                   : std::nullopt;
    if (all) {
        extensions = std::move(*all);
        v.exhaustive = true;
    } else {
        Rng rng(budget.seed);
        for (size_t k = 0; k < budget.sample_count; ++k)
            extensions.push_back(sample_linear_extension(pts, rng));
        v.exhaustive = false;
    }

    std::optional<GroebnerBasis> witness;
    std::optional<TermOrder> witness_order;
    for (const auto& ext : extensions) {
        TermOrder ord = revlex_extension(pts, ext);
        GroebnerBasis G = buchberger(I, ord, opts);
        ++v.extensions_tested;
        if (leading_ideal(G) != JH) {
            v.pass = false;
            v.failing_extension = ext;
            v.detail = "initial ideal differs from the incomparability ideal";
            return v;
        }
        if (!witness) {
            witness = std::move(G);
            witness_order = std::move(ord);
        }
    }
    v.pass = true;

    if (witness) {
        v.asl2_ok = true;
        for (auto [a, b] : incomparable_pairs(pts)) {
            Monomial lt(pts.size());
            lt.e[a] = 1;
            lt.e[b] = 1;
            const Polynomial* found = nullptr;
            for (const auto& g : witness->elements)
                if (g.leading_term(*witness_order).first == lt) {
                    found = &g;
                    break;
                }
            if (!found) {
                v.asl2_ok = false;
                continue;
            }
            StraighteningRelation rel;
            rel.a = a;
            rel.b = b;
            rel.relation = *found;
            rel.asl2_shape_ok = asl2_shape(pts, a, b, *found, *witness_order);
            v.asl2_ok = v.asl2_ok && rel.asl2_shape_ok;
            v.straightening.push_back(std::move(rel));
        }
    }
    return v;
}

} // namespace lsw
