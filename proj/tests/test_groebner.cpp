#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsw/groebner.hpp"
#include "lsw/rng.hpp"
#include "oracles.hpp"

using namespace lsw;
using lsw::testing::MacaulayOracle;

namespace {

const Field F = Field::prime(32003);

Polynomial random_poly(const Ring& r, Rng& rng, int max_terms, int max_deg) {
    Polynomial p(r);
    int terms = static_cast<int>(rng.range(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        Monomial m(r->nvars());
        int64_t budget = max_deg;
        for (size_t i = 0; i < r->nvars(); ++i) {
            m.e[i] = static_cast<int32_t>(rng.range(0, budget));
            budget -= m.e[i];
        }
        p.add_term(m, r->field().from_int(rng.range(1, 32002)));
    }
    return p;
}

TermOrder random_weight_order(size_t nvars, Rng& rng, int nrows = 2) {
    std::vector<std::vector<int64_t>> rows;
    for (int k = 0; k < nrows; ++k) {
        std::vector<int64_t> row(nvars);
        for (auto& w : row) w = rng.range(0, 10000);
        rows.push_back(std::move(row));
    }
    return TermOrder(nvars, std::move(rows), "random-weight");
}

// 2-minors of the m x n matrix of t-variables
std::vector<Polynomial> t_minors(const Ring& r, int m, int n) {
    std::vector<Polynomial> out;
    auto var = [&](int i, int j) { return Polynomial::variable(r, static_cast<size_t>(i * n + j)); };
    for (int i1 = 0; i1 < m; ++i1)
        for (int i2 = i1 + 1; i2 < m; ++i2)
            for (int j1 = 0; j1 < n; ++j1)
                for (int j2 = j1 + 1; j2 < n; ++j2)
                    out.push_back(var(i1, j1) * var(i2, j2) - var(i1, j2) * var(i2, j1));
    return out;
}

} // namespace

TEST_CASE("normal form leaves irreducible polynomials alone") {
    Ring r = make_t_ring(F, 2, 2);
    TermOrder lex = TermOrder::lex(4);
    Polynomial minor = Polynomial::parse(r, "t[1,1]*t[2,2] - t[1,2]*t[2,1]");
    CHECK(minor.leading_term(lex).first == Monomial({1, 0, 0, 1}));
    Polynomial f = Polynomial::parse(r, "t[1,2]*t[2,1]");
    CHECK(normal_form(f, {minor}, lex) == f);
}

TEST_CASE("normal form reduces basis elements to zero and is idempotent") {
    Ring r = make_x_ring(F, 3);
    Rng rng(31);
    for (int round = 0; round < 10; ++round) {
        Ideal I = Ideal::make(r, {random_poly(r, rng, 3, 2), random_poly(r, rng, 3, 2)});
        TermOrder ord = TermOrder::degrevlex(3);
        GroebnerBasis G = buchberger(I, ord);
        for (const auto& g : G.elements) CHECK(normal_form(g, G).is_zero());
        Polynomial f = random_poly(r, rng, 6, 4);
        Polynomial nf = normal_form(f, G);
        CHECK(normal_form(nf, G) == nf);
    }
}

TEST_CASE("normal form matches the Macaulay-matrix oracle") {
    Ring r = make_x_ring(F, 3);
    Rng rng(17);
    for (int round = 0; round < 12; ++round) {
        Ideal I = Ideal::make(r, {random_poly(r, rng, 3, 2), random_poly(r, rng, 3, 2)});
        TermOrder ord = TermOrder::degrevlex(3);
        GroebnerBasis G = buchberger(I, ord);
        MacaulayOracle oracle(r, ord, 6, G.elements);
        for (int t = 0; t < 4; ++t) {
            Polynomial f = random_poly(r, rng, 6, 3);
            CHECK(normal_form(f, G) == oracle.reduce(f));
        }
    }
}

TEST_CASE("single binomial is its own reduced basis") {
    Ring r = make_t_ring(F, 2, 2);
    Polynomial minor = Polynomial::parse(r, "t[1,1]*t[2,2] - t[1,2]*t[2,1]");
    Ideal I = Ideal::make(r, {minor});
    Rng rng(3);
    for (int k = 0; k < 5; ++k) {
        TermOrder ord = random_weight_order(4, rng);
        GroebnerBasis G = buchberger(I, ord);
        REQUIRE(G.elements.size() == 1);
        // monic normalization may flip the sign
        Polynomial g = G.elements[0];
        CHECK((g == minor || g == -minor));
    }
}

TEST_CASE("the nine Hibi relations are a reduced basis under a revlex extension") {
    // the C = {2,3} x {1,3} x {1,2} lattice, relations as displayed in the source
    std::vector<std::vector<int32_t>> pts;
    for (int32_t a : {2, 3})
        for (int32_t b : {1, 3})
            for (int32_t c : {1, 2}) pts.push_back({a, b, c});
    Ring s = make_s_ring(F, pts); // lex-ascending tuples: a linear extension
    const char* rels[] = {
        "s[3,1,2]*s[3,3,1] - s[3,1,1]*s[3,3,2]", "s[2,1,2]*s[3,1,1] - s[2,1,1]*s[3,1,2]",
        "s[2,1,2]*s[2,3,1] - s[2,1,1]*s[2,3,2]", "s[2,1,2]*s[3,3,1] - s[2,1,1]*s[3,3,2]",
        "s[2,3,1]*s[3,1,1] - s[2,1,1]*s[3,3,1]", "s[2,3,1]*s[3,1,2] - s[2,1,1]*s[3,3,2]",
        "s[2,3,2]*s[3,1,1] - s[2,1,1]*s[3,3,2]", "s[2,3,2]*s[3,1,2] - s[2,1,2]*s[3,3,2]",
        "s[2,3,2]*s[3,3,1] - s[2,3,1]*s[3,3,2]"};
    std::vector<Polynomial> gens;
    for (const char* rel : rels) gens.push_back(Polynomial::parse(s, rel));

    std::vector<size_t> desc(pts.size());
    for (size_t i = 0; i < desc.size(); ++i) desc[i] = desc.size() - 1 - i;
    TermOrder revlex_ext = TermOrder::degrevlex_permuted(desc);

    GroebnerBasis G = buchberger(Ideal::make(s, gens), revlex_ext);
    REQUIRE(G.elements.size() == 9);
    auto sorted = gens;
    std::sort(sorted.begin(), sorted.end(), [&](const Polynomial& a, const Polynomial& b) {
        return revlex_ext.greater(a.leading_term(revlex_ext).first,
                                  b.leading_term(revlex_ext).first);
    });
    CHECK(G.elements == sorted);
}

TEST_CASE("random ideals: basis certified by the Macaulay oracle") {
    Ring r = make_x_ring(F, 3);
    Rng rng(99);
    for (int round = 0; round < 8; ++round) {
        std::vector<Polynomial> gens = {random_poly(r, rng, 3, 2), random_poly(r, rng, 3, 2)};
        TermOrder ord = TermOrder::degrevlex(3);
        GroebnerBasis G = buchberger(Ideal::make(r, gens), ord);
        CHECK(is_groebner_set(G.elements, ord));
        MacaulayOracle oracle(r, ord, 6, gens);
        for (const auto& g : G.elements)
            if (g.total_degree() <= 6) CHECK(oracle.contains(g));
        for (const auto& f : gens) CHECK(normal_form(f, G).is_zero());
    }
}

TEST_CASE("reduced basis is independent of generator order") {
    Ring r = make_x_ring(F, 3);
    Rng rng(7);
    for (int round = 0; round < 6; ++round) {
        std::vector<Polynomial> gens = {random_poly(r, rng, 3, 2), random_poly(r, rng, 3, 2),
                                        random_poly(r, rng, 2, 2)};
        TermOrder ord = TermOrder::degrevlex(3);
        GroebnerBasis a = buchberger(Ideal::make(r, gens), ord);
        std::reverse(gens.begin(), gens.end());
        GroebnerBasis b = buchberger(Ideal::make(r, gens), ord);
        CHECK(a.elements == b.elements);
    }
}

TEST_CASE("initial ideal of a single minor under lex") {
    Ring r = make_t_ring(F, 2, 2);
    Polynomial minor = Polynomial::parse(r, "t[1,1]*t[2,2] - t[1,2]*t[2,1]");
    MonomialIdeal in = initial_ideal(Ideal::make(r, {minor}), TermOrder::lex(4));
    REQUIRE(in.gens().size() == 1);
    CHECK(in.gens()[0] == Monomial({1, 0, 0, 1}));
}

TEST_CASE("initial ideal of I2(t) for the 2x3 variable matrix under degrevlex") {
    Ring r = make_t_ring(F, 2, 3);
    std::vector<Polynomial> minors = t_minors(r, 2, 3);
    REQUIRE(minors.size() == 3);
    TermOrder ord = TermOrder::degrevlex(6);
    MonomialIdeal in = initial_ideal(Ideal::make(r, minors), ord);
    std::vector<Monomial> expected;
    for (const auto& m : minors) expected.push_back(m.leading_term(ord).first);
    CHECK(in == MonomialIdeal::from_generators(expected));
    for (const auto& g : in.gens()) {
        CHECK(g.degree() == 2);
        CHECK(g.is_squarefree());
    }
}

TEST_CASE("generic 2x2 determinant leads with t[1,2]*t[2,2] under row-increasing orders") {
    Ring r = make_t_ring(F, 2, 2);
    Rng rng(12345);
    // det L = L11 L22 - L12 L21 with random dense row-local linear forms
    auto linear_form = [&](int i) {
        Polynomial f1 = Polynomial::variable(r, static_cast<size_t>(2 * i)).scaled(
            F.from_int(rng.range(1, 32002)));
        Polynomial f2 = Polynomial::variable(r, static_cast<size_t>(2 * i + 1)).scaled(
            F.from_int(rng.range(1, 32002)));
        return f1 + f2;
    };
    Polynomial det = linear_form(0) * linear_form(1) - linear_form(0) * linear_form(1);
    while (det.is_zero() || det.term_count() < 4)
        det = linear_form(0) * linear_form(1) - linear_form(0) * linear_form(1);
    CHECK(det.term_count() == 4); // all four products t1a*t2b present
    TermOrder ord(4, {{1, 2, 1, 2}}, "row-increasing");
    MonomialIdeal in = initial_ideal(Ideal::make(r, {det}), ord);
    REQUIRE(in.gens().size() == 1);
    CHECK(in.gens()[0] == Monomial({0, 1, 0, 1}));
}

TEST_CASE("eliminating the diagonal of the 3x3 matrix leaves the hexagon binomial") {
    Ring r = make_t_ring(F, 3, 3);
    Ideal I = Ideal::make(r, t_minors(r, 3, 3));
    std::vector<bool> keep(9, true);
    keep[0] = keep[4] = keep[8] = false; // t[1,1], t[2,2], t[3,3]
    Ideal cut = eliminate(I, keep);
    Polynomial hexagon =
        Polynomial::parse(r, "t[1,2]*t[2,3]*t[3,1] - t[1,3]*t[2,1]*t[3,2]");
    REQUIRE(cut.gens.size() == 1);
    CHECK(ideal_equal(cut, Ideal::make(r, {hexagon})));
}

TEST_CASE("eliminating y from (x - y) leaves nothing") {
    Ring r = make_x_ring(F, 2);
    Ideal I = Ideal::make(r, {Polynomial::parse(r, "x[1] - x[2]")});
    Ideal cut = eliminate(I, {true, false});
    CHECK(cut.gens.empty());
}

TEST_CASE("graph-ideal elimination output vanishes under substitution") {
    Rng rng(55);
    Ring x = make_x_ring(F, 2);
    Ring s = make_s_ring(F, {{1}, {2}});
    for (int round = 0; round < 5; ++round) {
        std::vector<Polynomial> images = {random_poly(x, rng, 2, 2), random_poly(x, rng, 2, 2)};
        Ideal ker = algebra_map_kernel(s, images);
        for (const auto& g : ker.gens) CHECK(g.substitute(x, images).is_zero());
    }
}

TEST_CASE("intersection of coprime principal ideals") {
    Ring r = make_x_ring(F, 2);
    Ideal X = Ideal::make(r, {Polynomial::parse(r, "x[1]")});
    Ideal Y = Ideal::make(r, {Polynomial::parse(r, "x[2]")});
    Ideal meet = intersect(X, Y);
    CHECK(ideal_equal(meet, Ideal::make(r, {Polynomial::parse(r, "x[1]*x[2]")})));
}

TEST_CASE("(x,y)^2 meet (x) is (x^2, xy)") {
    Ring r = make_x_ring(F, 2);
    Ideal M = Ideal::make(r, {Polynomial::parse(r, "x[1]"), Polynomial::parse(r, "x[2]")});
    Ideal I = ideal_power(M, 2);
    Ideal X = Ideal::make(r, {Polynomial::parse(r, "x[1]")});
    Ideal meet = intersect(I, X);
    Ideal expected = Ideal::make(
        r, {Polynomial::parse(r, "x[1]^2"), Polynomial::parse(r, "x[1]*x[2]")});
    CHECK(ideal_equal(meet, expected));
    // membership both directions via the linear-algebra oracle
    TermOrder ord = TermOrder::degrevlex(2);
    MacaulayOracle in_i(r, ord, 4, I.gens), in_x(r, ord, 4, X.gens),
        in_meet(r, ord, 4, meet.gens);
    for (const auto& g : meet.gens) {
        CHECK(in_i.contains(g));
        CHECK(in_x.contains(g));
    }
    for (const auto& g : expected.gens) CHECK(in_meet.contains(g));
}

TEST_CASE("intersection is idempotent") {
    Ring r = make_x_ring(F, 2);
    Rng rng(8);
    Ideal I = Ideal::make(r, {random_poly(r, rng, 2, 2), random_poly(r, rng, 2, 2)});
    CHECK(ideal_equal(intersect(I, I), I));
}

TEST_CASE("ideal equality") {
    Ring r = make_x_ring(F, 2);
    Ideal a = Ideal::make(r, {Polynomial::parse(r, "x[1]"), Polynomial::parse(r, "x[2]")});
    Ideal b = Ideal::make(r, {Polynomial::parse(r, "x[2]"),
                              Polynomial::parse(r, "x[1] + x[2]")});
    CHECK(ideal_equal(a, b));
    Ideal c = Ideal::make(r, {Polynomial::parse(r, "x[1]")});
    Ideal d = Ideal::make(r, {Polynomial::parse(r, "x[1]^2")});
    CHECK(!ideal_equal(c, d));
}

TEST_CASE("kernel of the 2x2 Segre map") {
    Ring s = make_s_ring(F, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
    Ring yx = RingContext::make(
        F, {{"y[1]", 1}, {"y[2]", 2}, {"x[1]", 0}, {"x[2]", 0}});
    std::vector<Polynomial> images;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            images.push_back(Polynomial::variable(yx, static_cast<size_t>(i)) *
                             Polynomial::variable(yx, static_cast<size_t>(2 + j)));
    Ideal ker = algebra_map_kernel(s, images);
    Ideal expected =
        Ideal::make(s, {Polynomial::parse(s, "s[1,1]*s[2,2] - s[1,2]*s[2,1]")});
    CHECK(ideal_equal(ker, expected));
}

TEST_CASE("kernel of an injective monomial map is zero") {
    Ring s = make_s_ring(F, {{1}});
    Ring x = make_x_ring(F, 1);
    Ideal ker = algebra_map_kernel(s, {Polynomial::parse(x, "x[1]^2")});
    CHECK(ker.gens.empty());
}

TEST_CASE("ideal products and powers") {
    Ring r = make_x_ring(F, 2);
    Ideal X = Ideal::make(r, {Polynomial::parse(r, "x[1]")});
    Ideal Y = Ideal::make(r, {Polynomial::parse(r, "x[2]")});
    CHECK(ideal_equal(ideal_product(X, Y),
                      Ideal::make(r, {Polynomial::parse(r, "x[1]*x[2]")})));
    Ideal M = Ideal::make(r, {Polynomial::parse(r, "x[1]"), Polynomial::parse(r, "x[2]")});
    Ideal M2 = ideal_power(M, 2);
    Ideal expected = Ideal::make(r, {Polynomial::parse(r, "x[1]^2"),
                                     Polynomial::parse(r, "x[1]*x[2]"),
                                     Polynomial::parse(r, "x[2]^2")});
    CHECK(ideal_equal(M2, expected));
    CHECK(ideal_power(M, 1).gens == M.gens);
    Ideal unit = ideal_power(M, 0);
    REQUIRE(unit.gens.size() == 1);
    CHECK(unit.gens[0] == Polynomial::constant(r, F.one()));
}

TEST_CASE("minimalize keeps only divisibility-minimal monomials") {
    // {x^2, x^2 y} -> {x^2}
    auto out = minimalize({Monomial({2, 0, 0}), Monomial({2, 1, 0})});
    REQUIRE(out.size() == 1);
    CHECK(out[0] == Monomial({2, 0, 0}));
    // {xy, yz, xz}: pairwise non-dividing
    auto all3 = minimalize({Monomial({1, 1, 0}), Monomial({0, 1, 1}), Monomial({1, 0, 1})});
    CHECK(all3.size() == 3);
}

TEST_CASE("buchberger reports budget exhaustion instead of truncating") {
    Ring r = make_x_ring(F, 3);
    Rng rng(123);
    Ideal I = Ideal::make(r, {random_poly(r, rng, 4, 3), random_poly(r, rng, 4, 3),
                              random_poly(r, rng, 4, 3)});
    GroebnerOptions opts;
    opts.max_pairs = 1;
    CHECK_THROWS_AS(buchberger(I, TermOrder::degrevlex(3), opts), BudgetExceeded);
}

TEST_CASE("groebner self-check instrumentation runs clean") {
    groebner_self_check_reset();
    groebner_self_check_enable(true);
    Ring r = make_x_ring(F, 3);
    Rng rng(77);
    for (int round = 0; round < 4; ++round) {
        Ideal I = Ideal::make(r, {random_poly(r, rng, 3, 2), random_poly(r, rng, 3, 2)});
        buchberger(I, TermOrder::degrevlex(3));
    }
    groebner_self_check_enable(false);
    auto stats = groebner_self_check_stats();
    CHECK(stats.computations == 4);
    CHECK(stats.failures == 0);
}

TEST_CASE("the computed basis generates the input ideal") {
    Ring r = make_x_ring(F, 3);
    Rng rng(41);
    for (int round = 0; round < 4; ++round) {
        Ideal I = Ideal::make(r, {random_poly(r, rng, 3, 2), random_poly(r, rng, 3, 2)});
        for (const TermOrder& ord : {TermOrder::degrevlex(3), TermOrder::lex(3)}) {
            GroebnerBasis G = buchberger(I, ord);
            CHECK(ideal_equal(I, Ideal::make(r, G.elements)));
        }
    }
}

TEST_CASE("basis elements come out sorted by leading term, descending") {
    Ring r = make_x_ring(F, 3);
    Rng rng(21);
    Ideal I = Ideal::make(r, {random_poly(r, rng, 3, 2), random_poly(r, rng, 3, 2)});
    TermOrder ord = TermOrder::degrevlex(3);
    GroebnerBasis G = buchberger(I, ord);
    for (size_t i = 0; i + 1 < G.elements.size(); ++i)
        CHECK(ord.greater(G.elements[i].leading_term(ord).first,
                          G.elements[i + 1].leading_term(ord).first));
}
