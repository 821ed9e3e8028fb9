#ifndef LSW_HARNESS_HPP
#define LSW_HARNESS_HPP

#include <functional>
#include <iosfwd>

#include <json.hpp>

#include "lsw/generic_initial.hpp"

namespace lsw {

using nlohmann::json;

enum class ConjectureId { squarefree_initial, lex_degree_bound };
std::string conjecture_name(ConjectureId id); // "1.1" / "4.2"
ConjectureId conjecture_from_name(const std::string& name);

/// Where the coefficient tensors a_{ijk} come from.
struct CoefficientSource {
    enum class Kind { uniform, structured, explicit_tensor, exhaustive01 };
    Kind kind = Kind::uniform;
    double density = 0.5;         // structured: probability of a nonzero entry
    std::vector<int64_t> tensor;  // explicit_tensor
    json describe() const;
};

struct HarnessConfig {
    ConjectureId conjecture = ConjectureId::squarefree_initial;
    int m = 2, n = 2;
    Field field = Field::prime(Field::default_prime);
    CoefficientSource source;
    size_t orders = 20;      // random weight orders (1.1) or lex permutations (4.2)
    long long trials = 10;   // ignored for the exhaustive source
    uint64_t seed = 1;
    GroebnerOptions budget;
    bool include_timing = false;
    json describe() const;
};

/// One (instance, order) check. Replaying the same config reproduces the
/// whole report stream byte for byte (timing is off by default for exactly
/// that reason).
struct TrialReport {
    int schema_version = 1;
    ConjectureId conjecture;
    int m = 0, n = 0;
    long long trial = 0;
    uint64_t trial_seed = 0;
    json source; // includes the materialized tensor: replay and shrink input
    json order;
    enum class Outcome { pass, violation, budget_exceeded } outcome = Outcome::pass;
    std::optional<std::string> violating_monomial;
    std::optional<std::vector<int64_t>> violating_multidegree;
    std::optional<double> wall_ms;

    json to_json() const;
    static TrialReport from_json(const json& j);
};

/// First minimal generator with a multidegree coordinate above 1, if any.
/// (Z^m-squarefree means at most one variable per row, each to power 1.)
std::optional<Monomial> zm_squarefree_offender(const MonomialIdeal& I, const RingContext& ring);

using ViolationChecker =
    std::function<std::optional<Monomial>(const MonomialIdeal&, const RingContext&)>;

/// Runs the falsification experiment, streaming one report per
/// (instance, order) to the sink. For conjecture 4.2 the row-independence
/// precondition is enforced: sampled tensors are redrawn until every row is
/// invertible, exhaustive enumeration skips dependent patterns, and explicit
/// tensors that violate it are rejected.
void run_trials(const HarnessConfig& config, const std::function<void(const TrialReport&)>& sink,
                const ViolationChecker& checker = zm_squarefree_offender);

/// Greedy counterexample minimization: drop rows, drop columns, zero single
/// coefficients, keeping each change only while the violation persists under
/// the (projected) order. Non-violations come back unchanged.
struct ShrinkResult {
    TrialReport report;
    bool changed = false;
    std::string note;
};
ShrinkResult shrink(const TrialReport& violation, const Field& field,
                    const GroebnerOptions& budget = {},
                    const ViolationChecker& checker = zm_squarefree_offender);

/// Aggregation of a JSON-lines report stream.
struct SummaryRow {
    std::string conjecture;
    int m = 0, n = 0;
    long long pass = 0, violation = 0, budget_exceeded = 0;
};
struct Summary {
    std::vector<SummaryRow> rows; // sorted by (conjecture, m, n)
    long long malformed = 0;
    long long total = 0;
    std::string to_text() const;
};
Summary summarize(std::istream& in);

} // namespace lsw

#endif
