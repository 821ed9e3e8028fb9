#include "lsw/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <set>

namespace lsw {

namespace {

std::atomic<bool> g_self_check{false};
std::atomic<long long> g_check_runs{0};
std::atomic<long long> g_check_failures{0};

struct Term {
    Monomial m;
    Scalar c;
};

// terms sorted strictly descending under the engine order
using Vec = std::vector<Term>;

class Engine {
public:
    Engine(const Field& field, const TermOrder& order) : f_(field), ord_(order) {}

    Vec from_poly(const Polynomial& p) const {
        Vec v;
        v.reserve(p.term_count());
        for (const auto& [m, c] : p.terms()) v.push_back({m, c});
        std::sort(v.begin(), v.end(),
                  [&](const Term& a, const Term& b) { return ord_.greater(a.m, b.m); });
        return v;
    }

    Polynomial to_poly(const Ring& ring, const Vec& v) const {
        Polynomial p(ring);
        for (const auto& t : v) p.add_term(t.m, t.c);
        return p;
    }

    void make_monic(Vec& v) const {
        if (v.empty() || f_.is_one(v.front().c)) return;
        Scalar inv = f_.inv(v.front().c);
        for (auto& t : v) t.c = f_.mul(t.c, inv);
    }

    // a[from..] - c * x^q * b[skip..], both inputs sorted; result sorted
    Vec merge_sub(const Vec& a, size_t from, const Scalar& c, const Monomial& q,
                  const Vec& b, size_t skip) const {
        Vec out;
        out.reserve(a.size() - from + b.size() - skip);
        size_t i = from, j = skip;
        while (i < a.size() || j < b.size()) {
            if (j == b.size()) {
                out.push_back(a[i++]);
                continue;
            }
            Monomial bm = b[j].m * q;
            if (i == a.size()) {
                out.push_back({std::move(bm), f_.neg(f_.mul(c, b[j].c))});
                ++j;
                continue;
            }
            Cmp cmp = ord_.compare(a[i].m, bm);
            if (cmp == Cmp::greater) {
                out.push_back(a[i++]);
            } else if (cmp == Cmp::less) {
                out.push_back({std::move(bm), f_.neg(f_.mul(c, b[j].c))});
                ++j;
            } else {
                Scalar s = f_.sub(a[i].c, f_.mul(c, b[j].c));
                if (!f_.is_zero(s)) out.push_back({std::move(bm), std::move(s)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    // full division remainder; basis elements need not be monic
    Vec normal_form(Vec work, const std::vector<Vec>& basis) const {
        Vec out;
        size_t pos = 0;
        while (pos < work.size()) {
            const Term& lead = work[pos];
            const Vec* g = nullptr;
            for (const auto& cand : basis) {
                if (!cand.empty() && cand.front().m.divides(lead.m)) {
                    g = &cand;
                    break;
                }
            }
            if (!g) {
                out.push_back(lead);
                ++pos;
                continue;
            }
            Scalar c = f_.div(lead.c, g->front().c);
            Monomial q = lead.m.divided_by(g->front().m);
            work = merge_sub(work, pos + 1, c, q, *g, 1);
            pos = 0;
        }
        return out;
    }

    // S(a, b) with both monic: the scaled heads cancel
    Vec spoly(const Vec& a, const Vec& b) const {
        Monomial l = Monomial::lcm(a.front().m, b.front().m);
        Monomial qa = l.divided_by(a.front().m);
        Monomial qb = l.divided_by(b.front().m);
        Vec am;
        am.reserve(a.size() - 1);
        for (size_t i = 1; i < a.size(); ++i) am.push_back({a[i].m * qa, a[i].c});
        return merge_sub(am, 0, f_.one(), qb, b, 1);
    }

    const Field& f_;
    const TermOrder& ord_;
};

struct PairKey {
    int64_t deg;
    Monomial lcm;
    uint32_t i, j;
};

struct PairLess {
    const TermOrder* ord;
    bool operator()(const PairKey& a, const PairKey& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        Cmp c = ord->compare(a.lcm, b.lcm);
        if (c != Cmp::equal) return c == Cmp::less;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

std::vector<Vec> run_buchberger(Engine& eng, std::vector<Vec> basis,
                                const GroebnerOptions& opts) {
    std::set<PairKey, PairLess> pending(PairLess{&eng.ord_});
    std::set<std::pair<uint32_t, uint32_t>> pending_idx;
    auto push_pairs = [&](uint32_t upto) {
        for (uint32_t i = 0; i < upto; ++i) {
            Monomial l = Monomial::lcm(basis[i].front().m, basis[upto].front().m);
            pending.insert({l.degree(), l, i, upto});
            pending_idx.insert({i, upto});
        }
    };
    for (uint32_t k = 1; k < basis.size(); ++k) push_pairs(k);

    long long pops = 0;
    while (!pending.empty()) {
        PairKey top = *pending.begin();
        pending.erase(pending.begin());
        pending_idx.erase({top.i, top.j});
        if (++pops > opts.max_pairs)
            throw BudgetExceeded(pops, static_cast<long long>(basis.size()));

        const Monomial& lti = basis[top.i].front().m;
        const Monomial& ltj = basis[top.j].front().m;
        if (Monomial::coprime(lti, ltj)) continue;

        // chain criterion: some LT(k) divides the lcm and both companion
        // pairs were already handled
        bool skip = false;
        for (uint32_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == top.i || k == top.j) continue;
            if (!basis[k].front().m.divides(top.lcm)) continue;
            auto ik = std::minmax(top.i, k);
            auto jk = std::minmax(top.j, k);
            if (!pending_idx.count({ik.first, ik.second}) &&
                !pending_idx.count({jk.first, jk.second}))
                skip = true;
        }
        if (skip) continue;

        Vec r = eng.normal_form(eng.spoly(basis[top.i], basis[top.j]), basis);
        if (r.empty()) continue;
        eng.make_monic(r);
        basis.push_back(std::move(r));
        if (static_cast<long long>(basis.size()) > opts.max_basis)
            throw BudgetExceeded(pops, static_cast<long long>(basis.size()));
        push_pairs(static_cast<uint32_t>(basis.size()) - 1);
    }
    return basis;
}

std::vector<Vec> reduce_basis(Engine& eng, std::vector<Vec> basis) {
    // minimal: drop any element whose leading term another one divides
    std::sort(basis.begin(), basis.end(),
              [&](const Vec& a, const Vec& b) { return eng.ord_.less(a.front().m, b.front().m); });
    std::vector<Vec> minimal;
    for (auto& g : basis) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (kept.front().m.divides(g.front().m)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(std::move(g));
    }
    // tail-reduce each element modulo the others
    std::vector<Vec> reduced = minimal;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Vec> others;
        others.reserve(minimal.size() - 1);
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced[i] = eng.normal_form(minimal[i], others);
        eng.make_monic(reduced[i]);
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const Vec& a, const Vec& b) { return eng.ord_.greater(a.front().m, b.front().m); });
    return reduced;
}

void self_check(Engine& eng, const std::vector<Vec>& basis, const std::vector<Vec>& inputs) {
    ++g_check_runs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            if (!eng.normal_form(eng.spoly(basis[i], basis[j]), basis).empty()) {
                ++g_check_failures;
                throw EngineCheckFailure("self-check: S-pair does not reduce to zero");
            }
    for (const auto& f : inputs)
        if (!eng.normal_form(f, basis).empty()) {
            ++g_check_failures;
            throw EngineCheckFailure("self-check: input generator not in the basis ideal");
        }
}

std::vector<bool> support_mask(const Polynomial& p) {
    std::vector<bool> used(p.ring()->nvars(), false);
    for (const auto& [m, c] : p.terms())
        for (size_t i = 0; i < m.size(); ++i)
            if (m.e[i] > 0) used[i] = true;
    return used;
}

std::string fresh_var_name(const Ring& r, std::string base) {
    while (r->var_index(base)) base += "_";
    return base;
}

} // namespace

GroebnerBasis buchberger(const Ideal& I, const TermOrder& order, const GroebnerOptions& opts) {
    if (order.nvars() != I.ring->nvars()) throw OrderError("order/ring context mismatch");
    Engine eng(I.ring->field(), order);
    std::vector<Vec> inputs;
    for (const auto& g : I.gens) inputs.push_back(eng.from_poly(g));
    std::vector<Vec> start = inputs;
    for (auto& v : start) eng.make_monic(v);
    std::vector<Vec> basis = reduce_basis(eng, run_buchberger(eng, std::move(start), opts));
    if (g_self_check.load()) self_check(eng, basis, inputs);
    GroebnerBasis G{I.ring, {}, order, true};
    for (const auto& v : basis) G.elements.push_back(eng.to_poly(I.ring, v));
    return G;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    return normal_form(f, G.elements, G.order);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gens,
                       const TermOrder& order) {
    Engine eng(f.ring()->field(), order);
    std::vector<Vec> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(eng.from_poly(g));
    return eng.to_poly(f.ring(), eng.normal_form(eng.from_poly(f), basis));
}

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b, const TermOrder& order) {
    Engine eng(a.ring()->field(), order);
    Vec va = eng.from_poly(a), vb = eng.from_poly(b);
    eng.make_monic(va);
    eng.make_monic(vb);
    if (va.empty() || vb.empty()) return Polynomial::zero(a.ring());
    return eng.to_poly(a.ring(), eng.spoly(va, vb));
}

bool is_groebner_set(const std::vector<Polynomial>& gens, const TermOrder& order) {
    if (gens.empty()) return true;
    Engine eng(gens.front().ring()->field(), order);
    std::vector<Vec> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) {
            basis.push_back(eng.from_poly(g));
            eng.make_monic(basis.back());
        }
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            if (!eng.normal_form(eng.spoly(basis[i], basis[j]), basis).empty()) return false;
    return true;
}

MonomialIdeal initial_ideal(const Ideal& I, const TermOrder& order, const GroebnerOptions& opts) {
    return leading_ideal(buchberger(I, order, opts));
}

MonomialIdeal leading_ideal(const GroebnerBasis& G) {
    std::vector<Monomial> lts;
    for (const auto& g : G.elements) lts.push_back(g.leading_term(G.order).first);
    return MonomialIdeal::from_generators(std::move(lts));
}

Ideal eliminate(const Ideal& I, const std::vector<bool>& keep, const GroebnerOptions& opts) {
    std::vector<bool> elim(keep.size());
    for (size_t i = 0; i < keep.size(); ++i) elim[i] = !keep[i];
    GroebnerBasis G = buchberger(I, TermOrder::elimination(elim), opts);
    std::vector<Polynomial> kept;
    for (const auto& g : G.elements) {
        std::vector<bool> used = support_mask(g);
        bool ok = true;
        for (size_t i = 0; i < used.size(); ++i)
            if (used[i] && elim[i]) {
                ok = false;
                break;
            }
        if (ok) kept.push_back(g);
    }
    return Ideal::make(I.ring, std::move(kept));
}

Ideal intersect(const Ideal& I, const Ideal& J, const GroebnerOptions& opts) {
    if (!same_ring(I.ring, J.ring)) throw RingError("intersect: context mismatch");
    const Ring& R = I.ring;
    Ring ext = extend_ring(R, {{fresh_var_name(R, "u"), 0}});
    size_t u = ext->nvars() - 1;
    std::vector<size_t> embed(R->nvars());
    for (size_t i = 0; i < R->nvars(); ++i) embed[i] = i;

    Polynomial pu = Polynomial::variable(ext, u);
    Polynomial one_minus_u = Polynomial::constant(ext, ext->field().one()) - pu;
    std::vector<Polynomial> gens;
    for (const auto& f : I.gens) gens.push_back(pu * f.mapped(ext, embed));
    for (const auto& g : J.gens) gens.push_back(one_minus_u * g.mapped(ext, embed));

    std::vector<bool> keep(ext->nvars(), true);
    keep[u] = false;
    Ideal cut = eliminate(Ideal::make(ext, std::move(gens)), keep, opts);
    return ideal_mapped_by_name(cut, R);
}

bool ideal_equal(const Ideal& I, const Ideal& J, const GroebnerOptions& opts) {
    if (!same_ring(I.ring, J.ring)) throw RingError("ideal_equal: context mismatch");
    TermOrder ord = TermOrder::degrevlex(I.ring->nvars());
    GroebnerBasis a = buchberger(I, ord, opts);
    GroebnerBasis b = buchberger(J, ord, opts);
    return a.elements == b.elements;
}

Ideal algebra_map_kernel(const Ring& source, const std::vector<Polynomial>& images,
                         const GroebnerOptions& opts) {
    if (images.size() != source->nvars())
        throw RingError("algebra_map_kernel: one image per source variable required");
    if (images.empty()) return Ideal::make(source, {});
    const Ring& target = images.front().ring();
    // combined ring: target variables first so a block order eliminates them
    std::vector<Variable> vars = target->vars();
    for (const auto& v : source->vars()) vars.push_back(v);
    Ring combined = RingContext::make(source->field(), std::move(vars));

    std::vector<size_t> embed_target(target->nvars());
    for (size_t i = 0; i < target->nvars(); ++i) embed_target[i] = i;
    std::vector<Polynomial> gens;
    for (size_t i = 0; i < images.size(); ++i) {
        Polynomial graph = Polynomial::variable(combined, target->nvars() + i) -
                           images[i].mapped(combined, embed_target);
        gens.push_back(std::move(graph));
    }
    std::vector<bool> keep(combined->nvars(), true);
    for (size_t i = 0; i < target->nvars(); ++i) keep[i] = false;
    Ideal cut = eliminate(Ideal::make(combined, std::move(gens)), keep, opts);
    return ideal_mapped_by_name(cut, source);
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring, J.ring)) throw RingError("ideal_product: context mismatch");
    std::vector<Polynomial> gens;
    for (const auto& f : I.gens)
        for (const auto& g : J.gens) gens.push_back(f * g);
    return Ideal::make(I.ring, std::move(gens));
}

Ideal ideal_power(const Ideal& I, unsigned k) {
    if (k == 0)
        return Ideal::make(I.ring, {Polynomial::constant(I.ring, I.ring->field().one())});
    Ideal r = I;
    for (unsigned i = 1; i < k; ++i) r = ideal_product(r, I);
    return r;
}

Ideal ideal_mapped_by_name(const Ideal& I, const Ring& target) {
    std::vector<size_t> map(I.ring->nvars(), SIZE_MAX);
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens) {
        std::vector<bool> used = support_mask(g);
        for (size_t i = 0; i < used.size(); ++i) {
            if (!used[i] || map[i] != SIZE_MAX) continue;
            auto idx = target->var_index(I.ring->var(i).name);
            if (!idx)
                throw RingError("target ring lacks variable '" + I.ring->var(i).name + "'");
            map[i] = *idx;
        }
        Polynomial h(target);
        for (const auto& [m, c] : g.terms()) {
            Monomial t = Monomial::one(target->nvars());
            for (size_t i = 0; i < m.size(); ++i)
                if (m.e[i] > 0) t.e[map[i]] += m.e[i];
            h.add_term(t, c);
        }
        gens.push_back(std::move(h));
    }
    return Ideal::make(target, std::move(gens));
}

void groebner_self_check_enable(bool on) { g_self_check.store(on); }
bool groebner_self_check_enabled() { return g_self_check.load(); }
SelfCheckStats groebner_self_check_stats() {
    return {g_check_runs.load(), g_check_failures.load()};
}
void groebner_self_check_reset() {
    g_check_runs.store(0);
    g_check_failures.store(0);
}

} // namespace lsw
