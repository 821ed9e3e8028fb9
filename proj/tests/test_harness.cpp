#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "lsw/harness.hpp"

using namespace lsw;

namespace {

const Field F = Field::prime(32003);

std::vector<int64_t> identity_tensor(int m, int n) {
    std::vector<int64_t> tensor(static_cast<size_t>(m) * n * n, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) tensor[(static_cast<size_t>(i) * n + j) * n + j] = 1;
    return tensor;
}

std::string run_to_string(const HarnessConfig& cfg,
                          const ViolationChecker& checker = zm_squarefree_offender) {
    std::ostringstream out;
    out << json{{"config", cfg.describe()}}.dump() << "\n";
    run_trials(cfg, [&](const TrialReport& r) { out << r.to_json().dump() << "\n"; }, checker);
    return out.str();
}

} // namespace

TEST_CASE("Zm-squarefree checker with the three spec cases") {
    Ring t = make_t_ring(F, 2, 2);
    auto m12_22 = Monomial({0, 1, 0, 1}); // t[1,2] t[2,2]
    CHECK(!zm_squarefree_offender(MonomialIdeal::from_generators({m12_22}), *t).has_value());

    auto sq = Monomial({2, 0, 0, 0}); // t[1,1]^2
    auto off = zm_squarefree_offender(MonomialIdeal::from_generators({sq}), *t);
    REQUIRE(off.has_value());
    CHECK(t->monomial_multidegree(*off) == std::vector<int64_t>{2, 0});

    // squarefree as a plain monomial but not Zm-squarefree
    auto row_pair = Monomial({1, 1, 0, 0}); // t[1,1] t[1,2]
    auto off2 = zm_squarefree_offender(MonomialIdeal::from_generators({row_pair}), *t);
    REQUIRE(off2.has_value());
    CHECK(*off2 == row_pair);
}

TEST_CASE("checker agrees with brute-force multidegree inspection") {
    Ring t = make_t_ring(F, 3, 3);
    Rng rng(5);
    for (int round = 0; round < 50; ++round) {
        std::vector<Monomial> gens;
        int count = static_cast<int>(rng.range(1, 5));
        for (int g = 0; g < count; ++g) {
            Monomial mo(9);
            for (int h = 0; h < 3; ++h) mo.e[static_cast<size_t>(rng.range(0, 8))] += 1;
            gens.push_back(std::move(mo));
        }
        MonomialIdeal I = MonomialIdeal::from_generators(gens);
        bool brute_ok = true;
        for (const auto& g : I.gens()) {
            std::vector<int64_t> deg(3, 0);
            for (size_t v = 0; v < 9; ++v) deg[v / 3] += g.e[v];
            for (int64_t c : deg) brute_ok = brute_ok && c <= 1;
        }
        CHECK(zm_squarefree_offender(I, *t).has_value() == !brute_ok);
    }
}

TEST_CASE("the variable matrix itself always passes") {
    HarnessConfig cfg;
    cfg.conjecture = ConjectureId::squarefree_initial;
    cfg.m = 2;
    cfg.n = 3;
    cfg.source.kind = CoefficientSource::Kind::explicit_tensor;
    cfg.source.tensor = identity_tensor(2, 3);
    cfg.orders = 12; // (2!)*(3!) row-local lex orders would need 36
    cfg.seed = 99;
    size_t reports = 0;
    run_trials(cfg, [&](const TrialReport& r) {
        ++reports;
        CHECK(r.outcome == TrialReport::Outcome::pass);
    });
    CHECK(reports == 12);
}

TEST_CASE("a generous order budget adds the row-local lex family") {
    HarnessConfig cfg;
    cfg.conjecture = ConjectureId::squarefree_initial;
    cfg.m = 2;
    cfg.n = 2;
    cfg.source.kind = CoefficientSource::Kind::explicit_tensor;
    cfg.source.tensor = identity_tensor(2, 2);
    cfg.orders = 10;
    cfg.seed = 99;
    size_t weight = 0, lex = 0;
    run_trials(cfg, [&](const TrialReport& r) {
        CHECK(r.outcome == TrialReport::Outcome::pass);
        if (r.order.at("kind") == "weight")
            ++weight;
        else
            ++lex;
    });
    CHECK(weight == 10);
    CHECK(lex == 4); // (2!)^2 per-row column permutations
}

TEST_CASE("runs replay byte for byte") {
    HarnessConfig cfg;
    cfg.conjecture = ConjectureId::squarefree_initial;
    cfg.m = 2;
    cfg.n = 2;
    cfg.source.kind = CoefficientSource::Kind::uniform;
    cfg.trials = 6;
    cfg.orders = 4;
    cfg.seed = 2024;
    CHECK(run_to_string(cfg) == run_to_string(cfg));

    cfg.conjecture = ConjectureId::lex_degree_bound;
    CHECK(run_to_string(cfg) == run_to_string(cfg));
}

TEST_CASE("small exhaustive 0/1 sweep finds no violation") {
    HarnessConfig cfg;
    cfg.conjecture = ConjectureId::squarefree_initial;
    cfg.m = 2;
    cfg.n = 2;
    cfg.source.kind = CoefficientSource::Kind::exhaustive01;
    cfg.orders = 3;
    cfg.seed = 5;
    size_t reports = 0, passes = 0;
    run_trials(cfg, [&](const TrialReport& r) {
        ++reports;
        if (r.outcome == TrialReport::Outcome::pass) ++passes;
    });
    CHECK(reports == 256 * 3);
    CHECK(passes == reports);
}

TEST_CASE("conjecture 4.2 enforces row independence") {
    HarnessConfig cfg;
    cfg.conjecture = ConjectureId::lex_degree_bound;
    cfg.m = 2;
    cfg.n = 2;
    cfg.source.kind = CoefficientSource::Kind::explicit_tensor;
    cfg.source.tensor = identity_tensor(2, 2);
    cfg.source.tensor[0 * 2 + 1] = 1; // row 1 becomes (t11, t11): dependent
    cfg.source.tensor[1 * 2 + 1] = 0;
    CHECK_THROWS_AS(run_trials(cfg, [](const TrialReport&) {}), FamilyError);

    // the exhaustive sweep skips dependent patterns
    cfg.source = {};
    cfg.source.kind = CoefficientSource::Kind::exhaustive01;
    cfg.orders = 2;
    size_t instances = 0;
    std::set<long long> ids;
    run_trials(cfg, [&](const TrialReport& r) {
        ++instances;
        ids.insert(r.trial);
        CHECK(r.outcome == TrialReport::Outcome::pass);
    });
    // 6 of the 16 binary 2x2 matrices are invertible: 36 instances survive,
    // each checked under the 2 sampled lex permutations
    CHECK(ids.size() == 36);
    CHECK(instances == ids.size() * 2);
}

TEST_CASE("budget exhaustion is an outcome, never a silent skip") {
    HarnessConfig cfg;
    cfg.conjecture = ConjectureId::squarefree_initial;
    cfg.m = 3;
    cfg.n = 3;
    cfg.source.kind = CoefficientSource::Kind::uniform;
    cfg.trials = 1;
    cfg.orders = 2;
    cfg.seed = 7;
    cfg.budget.max_pairs = 2;
    size_t budget_reports = 0;
    run_trials(cfg, [&](const TrialReport& r) {
        CHECK(r.outcome == TrialReport::Outcome::budget_exceeded);
        ++budget_reports;
    });
    CHECK(budget_reports == 2);
}

TEST_CASE("shrink minimizes a synthetic violation and replays") {
    // mutated checker: any nonzero initial ideal counts as a violation
    ViolationChecker mutated = [](const MonomialIdeal& I,
                                  const RingContext&) -> std::optional<Monomial> {
        if (I.gens().empty()) return std::nullopt;
        return I.gens().front();
    };
    HarnessConfig cfg;
    cfg.conjecture = ConjectureId::squarefree_initial;
    cfg.m = 3;
    cfg.n = 3;
    cfg.source.kind = CoefficientSource::Kind::uniform;
    cfg.trials = 1;
    cfg.orders = 1;
    cfg.seed = 31;
    std::optional<TrialReport> violation;
    run_trials(cfg, [&](const TrialReport& r) { violation = r; }, mutated);
    REQUIRE(violation.has_value());
    REQUIRE(violation->outcome == TrialReport::Outcome::violation);

    ShrinkResult shrunk = shrink(*violation, F, {}, mutated);
    CHECK(shrunk.changed);
    CHECK(shrunk.note == "minimized");
    auto tensor = shrunk.report.source.at("tensor").get<std::vector<int64_t>>();
    size_t nonzero = 0;
    for (int64_t a : tensor) nonzero += a != 0;
    CHECK(shrunk.report.m == 2); // rows got dropped
    CHECK(nonzero <= 4);

    // the shrunk instance still reproduces the outcome
    HarnessConfig replay = cfg;
    replay.m = shrunk.report.m;
    replay.n = shrunk.report.n;
    replay.source.kind = CoefficientSource::Kind::explicit_tensor;
    replay.source.tensor = tensor;
    Ring t = make_t_ring(F, replay.m, replay.n);
    Ideal I2 = two_minors_of(
        t, l_matrix_from_tensor(t, replay.m, replay.n, tensor));
    MonomialIdeal in = initial_ideal(
        I2, TermOrder(t->nvars(),
                      shrunk.report.order.at("rows").get<std::vector<std::vector<int64_t>>>()));
    CHECK(mutated(in, *t).has_value());

    // a pass report comes back unchanged
    TrialReport pass = *violation;
    pass.outcome = TrialReport::Outcome::pass;
    ShrinkResult untouched = shrink(pass, F, {}, mutated);
    CHECK(!untouched.changed);
}

TEST_CASE("summary aggregation") {
    std::istringstream empty("");
    Summary s0 = summarize(empty);
    CHECK(s0.rows.empty());
    CHECK(s0.total == 0);

    std::string line_pass =
        R"({"conjecture":"1.1","m":2,"n":3,"outcome":"pass","schema_version":1})";
    std::string line_budget =
        R"({"conjecture":"1.1","m":2,"n":3,"outcome":"budget-exceeded","schema_version":1})";
    std::string config_line = R"({"config":{"seed":1}})";
    std::string garbage = "not json at all";
    std::ostringstream file;
    file << config_line << "\n";
    for (int i = 0; i < 3; ++i) file << line_pass << "\n";
    file << line_budget << "\n" << garbage << "\n";

    std::istringstream once(file.str());
    Summary s1 = summarize(once);
    REQUIRE(s1.rows.size() == 1);
    CHECK(s1.rows[0].pass == 3);
    CHECK(s1.rows[0].budget_exceeded == 1);
    CHECK(s1.rows[0].violation == 0);
    CHECK(s1.malformed == 1);

    std::istringstream twice(file.str() + file.str());
    Summary s2 = summarize(twice);
    CHECK(s2.rows[0].pass == 6);
    CHECK(s2.rows[0].budget_exceeded == 2);
    CHECK(s2.malformed == 2);
}
