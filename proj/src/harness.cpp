#include "lsw/harness.hpp"

#include <algorithm>
#include <chrono>
#include <istream>
#include <sstream>

namespace lsw {

std::string conjecture_name(ConjectureId id) {
    return id == ConjectureId::squarefree_initial ? "1.1" : "4.2";
}

ConjectureId conjecture_from_name(const std::string& name) {
    if (name == "1.1") return ConjectureId::squarefree_initial;
    if (name == "4.2") return ConjectureId::lex_degree_bound;
    throw FamilyError("unknown conjecture '" + name + "' (expected 1.1 or 4.2)");
}

json CoefficientSource::describe() const {
    json j;
    switch (kind) {
    case Kind::uniform: j["kind"] = "uniform"; break;
    case Kind::structured:
        j["kind"] = "structured";
        j["density"] = density;
        break;
    case Kind::explicit_tensor: j["kind"] = "explicit"; break;
    case Kind::exhaustive01: j["kind"] = "exhaustive01"; break;
    }
    return j;
}

json HarnessConfig::describe() const {
    json j;
    j["schema_version"] = 1;
    j["conjecture"] = conjecture_name(conjecture);
    j["m"] = m;
    j["n"] = n;
    j["field"] = field.describe();
    j["source"] = source.describe();
    j["orders"] = orders;
    j["trials"] = trials;
    j["seed"] = seed;
    j["budget"] = {{"pairs", budget.max_pairs}, {"basis", budget.max_basis}};
    j["timing"] = include_timing;
    return j;
}

json TrialReport::to_json() const {
    json j;
    j["schema_version"] = schema_version;
    j["conjecture"] = conjecture_name(conjecture);
    j["m"] = m;
    j["n"] = n;
    j["trial"] = trial;
    j["seed"] = trial_seed;
    j["source"] = source;
    j["order"] = order;
    j["outcome"] = outcome == Outcome::pass        ? "pass"
                   : outcome == Outcome::violation ? "VIOLATION"
                                                   : "budget-exceeded";
    if (violating_monomial) {
        j["violation"] = {{"monomial", *violating_monomial},
                          {"multidegree", *violating_multidegree}};
    }
    if (wall_ms) j["wall_ms"] = *wall_ms;
    return j;
}

TrialReport TrialReport::from_json(const json& j) {
    TrialReport r;
    r.schema_version = j.at("schema_version").get<int>();
    r.conjecture = conjecture_from_name(j.at("conjecture").get<std::string>());
    r.m = j.at("m").get<int>();
    r.n = j.at("n").get<int>();
    r.trial = j.at("trial").get<long long>();
    r.trial_seed = j.at("seed").get<uint64_t>();
    r.source = j.at("source");
    r.order = j.at("order");
    std::string out = j.at("outcome").get<std::string>();
    r.outcome = out == "pass"        ? Outcome::pass
                : out == "VIOLATION" ? Outcome::violation
                                     : Outcome::budget_exceeded;
    if (j.contains("violation")) {
        r.violating_monomial = j["violation"].at("monomial").get<std::string>();
        r.violating_multidegree = j["violation"].at("multidegree").get<std::vector<int64_t>>();
    }
    if (j.contains("wall_ms")) r.wall_ms = j["wall_ms"].get<double>();
    return r;
}

std::optional<Monomial> zm_squarefree_offender(const MonomialIdeal& I, const RingContext& ring) {
    for (const auto& g : I.gens()) {
        for (int64_t c : ring.monomial_multidegree(g))
            if (c > 1) return g;
    }
    return std::nullopt;
}

namespace {

std::vector<int64_t> tensor_from_bits(int m, int n, uint64_t bits) {
    std::vector<int64_t> tensor(static_cast<size_t>(m) * n * n, 0);
    for (size_t p = 0; p < tensor.size(); ++p) tensor[p] = (bits >> p) & 1;
    return tensor;
}

bool rows_independent(const Field& f, int m, int n, const std::vector<int64_t>& tensor) {
    for (int i = 0; i < m; ++i) {
        ScalarMatrix a(f, static_cast<size_t>(n), static_cast<size_t>(n));
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                a.at(static_cast<size_t>(j), static_cast<size_t>(k)) =
                    f.from_int(tensor[(static_cast<size_t>(i) * n + j) * n + k]);
        if (rank(std::move(a)) != static_cast<size_t>(n)) return false;
    }
    return true;
}

std::vector<int64_t> sample_source_tensor(const HarnessConfig& cfg, Rng& rng) {
    std::vector<int64_t> tensor(static_cast<size_t>(cfg.m) * cfg.n * cfg.n, 0);
    switch (cfg.source.kind) {
    case CoefficientSource::Kind::uniform:
        for (auto& a : tensor)
            a = cfg.field.kind() == Field::Kind::prime_field
                    ? rng.range(0, cfg.field.modulus() - 1)
                    : rng.range(-50, 50);
        break;
    case CoefficientSource::Kind::structured:
        for (auto& a : tensor)
            if (rng.chance(cfg.source.density)) a = rng.chance(0.5) ? 1 : -1;
        break;
    default: throw FamilyError("sampling requested for a non-random source");
    }
    return tensor;
}

json weight_order_desc(const std::vector<std::vector<int64_t>>& rows) {
    return {{"kind", "weight"}, {"rows", rows}};
}

json lex_order_desc(const std::vector<size_t>& perm) {
    return {{"kind", "lex"}, {"perm", perm}};
}

TermOrder order_from_desc(const json& desc, size_t nvars) {
    if (desc.at("kind") == "weight")
        return TermOrder(nvars, desc.at("rows").get<std::vector<std::vector<int64_t>>>(),
                         "weight");
    return TermOrder::lex_permuted(desc.at("perm").get<std::vector<size_t>>());
}

std::vector<json> orders_for_trial(const HarnessConfig& cfg, uint64_t trial_seed) {
    std::vector<json> out;
    size_t nvars = static_cast<size_t>(cfg.m) * cfg.n;
    Rng rng(Rng::mix(trial_seed, 0xf0));
    if (cfg.conjecture == ConjectureId::squarefree_initial) {
        for (size_t k = 0; k < cfg.orders; ++k) {
            std::vector<std::vector<int64_t>> rows(2, std::vector<int64_t>(nvars));
            for (auto& row : rows)
                for (auto& w : row) w = rng.range(0, 10000);
            out.push_back(weight_order_desc(rows));
        }
        // plus every lex order from per-row column permutations, when that
        // family fits the order budget
        uint64_t count = 1;
        for (int i = 0; i < cfg.m && count <= cfg.orders; ++i)
            for (int k = 2; k <= cfg.n; ++k) count *= static_cast<uint64_t>(k);
        if (count <= cfg.orders) {
            std::vector<std::vector<size_t>> row_perm(
                static_cast<size_t>(cfg.m), std::vector<size_t>(static_cast<size_t>(cfg.n)));
            for (auto& p : row_perm)
                for (size_t j = 0; j < p.size(); ++j) p[j] = j;
            while (true) {
                std::vector<size_t> global;
                for (int i = 0; i < cfg.m; ++i)
                    for (size_t j = 0; j < static_cast<size_t>(cfg.n); ++j)
                        global.push_back(static_cast<size_t>(i) * cfg.n +
                                         row_perm[static_cast<size_t>(i)][j]);
                out.push_back(lex_order_desc(global));
                int pos = cfg.m;
                bool carry = true;
                while (pos > 0 && carry) {
                    --pos;
                    auto& p = row_perm[static_cast<size_t>(pos)];
                    carry = !std::next_permutation(p.begin(), p.end());
                }
                if (carry) break;
            }
        }
        return out;
    }
    // 4.2: lexicographic variable permutations, exhaustive when feasible
    uint64_t factorial = 1;
    bool small = true;
    for (size_t i = 2; i <= nvars && small; ++i) {
        factorial *= i;
        if (factorial > cfg.orders) small = false;
    }
    if (small && factorial > 50000)
        throw FamilyError("exhaustive lex enumeration over " + std::to_string(factorial) +
                          " permutations is out of desk scale");
    if (small) {
        std::vector<size_t> perm(nvars);
        for (size_t i = 0; i < nvars; ++i) perm[i] = i;
        do {
            out.push_back(lex_order_desc(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        for (size_t k = 0; k < cfg.orders; ++k) {
            std::vector<size_t> perm(nvars);
            for (size_t i = 0; i < nvars; ++i) perm[i] = i;
            for (size_t i = nvars; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
            out.push_back(lex_order_desc(perm));
        }
    }
    return out;
}

void run_one_instance(const HarnessConfig& cfg, long long trial_index, uint64_t trial_seed,
                      const std::vector<int64_t>& tensor, const Ring& t_full,
                      const std::function<void(const TrialReport&)>& sink,
                      const ViolationChecker& checker) {
    Ideal I2 = two_minors_of(t_full, l_matrix_from_tensor(t_full, cfg.m, cfg.n, tensor));
    json source_desc = cfg.source.describe();
    source_desc["tensor"] = tensor;

    for (const auto& order_desc : orders_for_trial(cfg, trial_seed)) {
        TrialReport r;
        r.conjecture = cfg.conjecture;
        r.m = cfg.m;
        r.n = cfg.n;
        r.trial = trial_index;
        r.trial_seed = trial_seed;
        r.source = source_desc;
        r.order = order_desc;
        auto start = std::chrono::steady_clock::now();
        try {
            MonomialIdeal in = initial_ideal(I2, order_from_desc(order_desc, t_full->nvars()),
                                             cfg.budget);
            auto offender = checker(in, *t_full);
            if (offender) {
                r.outcome = TrialReport::Outcome::violation;
                r.violating_monomial =
                    Polynomial::term(t_full, *offender, cfg.field.one()).to_string();
                r.violating_multidegree = t_full->monomial_multidegree(*offender);
            } else {
                r.outcome = TrialReport::Outcome::pass;
            }
        } catch (const BudgetExceeded&) {
            r.outcome = TrialReport::Outcome::budget_exceeded;
        }
        if (cfg.include_timing)
            r.wall_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        sink(r);
    }
}

} // namespace

void run_trials(const HarnessConfig& cfg, const std::function<void(const TrialReport&)>& sink,
                const ViolationChecker& checker) {
    Ring t_full = make_t_ring(cfg.field, cfg.m, cfg.n);
    const bool enforce_rows = cfg.conjecture == ConjectureId::lex_degree_bound;

    if (cfg.source.kind == CoefficientSource::Kind::exhaustive01) {
        size_t bits = static_cast<size_t>(cfg.m) * cfg.n * cfg.n;
        if (bits > 24) throw FamilyError("exhaustive01 sweep is capped at 24 coefficient bits");
        for (uint64_t id = 0; id < (uint64_t(1) << bits); ++id) {
            std::vector<int64_t> tensor = tensor_from_bits(cfg.m, cfg.n, id);
            if (enforce_rows && !rows_independent(cfg.field, cfg.m, cfg.n, tensor))
                continue; // outside the conjecture's hypothesis
            run_one_instance(cfg, static_cast<long long>(id), Rng::mix(cfg.seed, id), tensor,
                             t_full, sink, checker);
        }
        return;
    }

    if (cfg.source.kind == CoefficientSource::Kind::explicit_tensor) {
        if (enforce_rows && !rows_independent(cfg.field, cfg.m, cfg.n, cfg.source.tensor))
            throw FamilyError("conjecture 4.2 requires linearly independent rows");
        run_one_instance(cfg, 0, cfg.seed, cfg.source.tensor, t_full, sink, checker);
        return;
    }

    for (long long t = 0; t < cfg.trials; ++t) {
        uint64_t trial_seed = Rng::mix(cfg.seed, static_cast<uint64_t>(t));
        Rng rng(trial_seed);
        std::vector<int64_t> tensor = sample_source_tensor(cfg, rng);
        while (enforce_rows && !rows_independent(cfg.field, cfg.m, cfg.n, tensor))
            tensor = sample_source_tensor(cfg, rng);
        run_one_instance(cfg, t, trial_seed, tensor, t_full, sink, checker);
    }
}

namespace {

// one order check of a shrunk candidate
bool still_violates(const Field& field, int m, int n, const std::vector<int64_t>& tensor,
                    const json& order_desc, const GroebnerOptions& budget,
                    const ViolationChecker& checker) {
    Ring t_full = make_t_ring(field, m, n);
    Ideal I2 = two_minors_of(t_full, l_matrix_from_tensor(t_full, m, n, tensor));
    try {
        MonomialIdeal in =
            initial_ideal(I2, order_from_desc(order_desc, t_full->nvars()), budget);
        return checker(in, *t_full).has_value();
    } catch (const BudgetExceeded&) {
        return false;
    }
}

json drop_row_from_order(const json& order_desc, int m, int n, int row) {
    json out = order_desc;
    size_t lo = static_cast<size_t>(row) * n, hi = lo + n;
    if (order_desc.at("kind") == "weight") {
        auto rows = order_desc.at("rows").get<std::vector<std::vector<int64_t>>>();
        for (auto& r : rows) r.erase(r.begin() + lo, r.begin() + hi);
        out["rows"] = rows;
    } else {
        auto perm = order_desc.at("perm").get<std::vector<size_t>>();
        std::vector<size_t> next;
        for (size_t v : perm) {
            if (v >= lo && v < hi) continue;
            next.push_back(v >= hi ? v - static_cast<size_t>(n) : v);
        }
        out["perm"] = next;
    }
    (void)m;
    return out;
}

} // namespace

ShrinkResult shrink(const TrialReport& violation, const Field& field,
                    const GroebnerOptions& budget, const ViolationChecker& checker) {
    ShrinkResult res{violation, false, ""};
    if (violation.outcome != TrialReport::Outcome::violation) {
        res.note = "not a violation; returned unchanged";
        return res;
    }
    int m = violation.m, n = violation.n;
    std::vector<int64_t> tensor = violation.source.at("tensor").get<std::vector<int64_t>>();
    json order_desc = violation.order;

    bool progress = true;
    while (progress) {
        progress = false;
        // drop a whole row of L (with its variables)
        for (int r = 0; m > 2 && r < m; ++r) {
            std::vector<int64_t> next;
            for (int i = 0; i < m; ++i) {
                if (i == r) continue;
                for (int p = 0; p < n * n; ++p)
                    next.push_back(tensor[static_cast<size_t>(i) * n * n + p]);
            }
            json next_order = drop_row_from_order(order_desc, m, n, r);
            if (still_violates(field, m - 1, n, next, next_order, budget, checker)) {
                tensor = std::move(next);
                order_desc = std::move(next_order);
                --m;
                res.changed = progress = true;
                break;
            }
        }
        if (progress) continue;
        // drop a column of L by zeroing its entries (the variables stay)
        for (int c = 0; c < n; ++c) {
            std::vector<int64_t> next = tensor;
            bool any = false;
            for (int i = 0; i < m; ++i)
                for (int k = 0; k < n; ++k) {
                    size_t p = (static_cast<size_t>(i) * n + c) * n + k;
                    any = any || next[p] != 0;
                    next[p] = 0;
                }
            if (!any) continue;
            if (still_violates(field, m, n, next, order_desc, budget, checker)) {
                tensor = std::move(next);
                res.changed = progress = true;
                break;
            }
        }
        if (progress) continue;
        // zero a single coefficient
        for (size_t p = 0; p < tensor.size(); ++p) {
            if (tensor[p] == 0) continue;
            std::vector<int64_t> next = tensor;
            next[p] = 0;
            if (still_violates(field, m, n, next, order_desc, budget, checker)) {
                tensor = std::move(next);
                res.changed = progress = true;
                break;
            }
        }
    }

    res.report.m = m;
    res.report.n = n;
    res.report.source["tensor"] = tensor;
    res.report.order = order_desc;
    res.note = res.changed ? "minimized" : "already minimal";
    return res;
}

Summary summarize(std::istream& in) {
    Summary s;
    std::map<std::tuple<std::string, int, int>, SummaryRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded()) {
            ++s.malformed;
            continue;
        }
        if (j.contains("config")) continue; // header line
        if (!j.contains("outcome") || !j.contains("conjecture") || !j.contains("m") ||
            !j.contains("n")) {
            ++s.malformed;
            continue;
        }
        ++s.total;
        auto key = std::make_tuple(j["conjecture"].get<std::string>(), j["m"].get<int>(),
                                   j["n"].get<int>());
        auto& row = rows[key];
        row.conjecture = std::get<0>(key);
        row.m = std::get<1>(key);
        row.n = std::get<2>(key);
        std::string outcome = j["outcome"].get<std::string>();
        if (outcome == "pass")
            ++row.pass;
        else if (outcome == "VIOLATION")
            ++row.violation;
        else
            ++row.budget_exceeded;
    }
    for (auto& [k, v] : rows) s.rows.push_back(v);
    return s;
}

std::string Summary::to_text() const {
    std::ostringstream out;
    out << "conjecture  m  n  pass  VIOLATION  budget-exceeded\n";
    for (const auto& r : rows)
        out << r.conjecture << "  " << r.m << "  " << r.n << "  " << r.pass << "  " << r.violation
            << "  " << r.budget_exceeded << "\n";
    out << "reports: " << total << ", malformed lines: " << malformed << "\n";
    return out.str();
}

} // namespace lsw
