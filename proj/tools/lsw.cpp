// Command-line front end: reproducible experiments over the algebras A(V)
// and B(V), with every artifact stamped by the configuration that made it.

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lsw/harness.hpp"

using namespace lsw;

namespace {

struct CommonOpts {
    std::string field_spec = "prime:32003";
    std::string budget_spec;
    bool verify = false;
    uint64_t seed = 1;
    std::string out_path;

    Field field() const { return Field::parse_config(field_spec); }
    GroebnerOptions budget() const {
        GroebnerOptions opts;
        std::stringstream ss(budget_spec);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos) throw CLI::ValidationError("--budget expects key=value");
            std::string key = item.substr(0, eq);
            long long value = std::stoll(item.substr(eq + 1));
            if (key == "pairs")
                opts.max_pairs = value;
            else if (key == "basis")
                opts.max_basis = value;
            else
                throw CLI::ValidationError("--budget keys are 'pairs' and 'basis'");
        }
        return opts;
    }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--field", opts.field_spec, "prime:P or rationals");
    cmd->add_option("--budget", opts.budget_spec, "pairs=N[,basis=N] engine budget");
    cmd->add_option("--seed", opts.seed, "random seed");
    cmd->add_option("--out", opts.out_path, "output file (default stdout)");
    cmd->add_flag("--verify", opts.verify, "re-check every basis by full S-pair reduction");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Variables mentioned in a polynomial file, in the canonical ring order:
// t (row-major), y, x, s, then anything else alphabetically.
Ring infer_ring(const Field& f, const std::string& text) {
    std::map<std::string, std::pair<std::string, std::vector<int32_t>>> seen;
    size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (!std::isalpha(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
        std::string base = text.substr(start, i - start);
        std::vector<int32_t> idx;
        if (i < text.size() && text[i] == '[') {
            ++i;
            int32_t cur = 0, sign = 1;
            bool have = false;
            while (i < text.size() && text[i] != ']') {
                char c = text[i];
                if (c == '-') sign = -1;
                if (std::isdigit(static_cast<unsigned char>(c))) {
                    cur = cur * 10 + (c - '0');
                    have = true;
                }
                if (c == ',') {
                    idx.push_back(sign * cur);
                    cur = 0;
                    sign = 1;
                    have = false;
                }
                ++i;
            }
            if (have) idx.push_back(sign * cur);
            if (i < text.size()) ++i; // ']'
        }
        std::string name = idx.empty() ? base : format_var_name(base, idx);
        seen.emplace(name, std::make_pair(base, idx));
    }
    std::vector<std::pair<std::string, std::vector<int32_t>>> keys;
    for (auto& [name, parts] : seen) keys.emplace_back(parts.first, parts.second);
    auto family_rank = [](const std::string& base) {
        if (base == "t") return 0;
        if (base == "y") return 1;
        if (base == "x") return 2;
        if (base == "s") return 3;
        return 4;
    };
    std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
        if (family_rank(a.first) != family_rank(b.first))
            return family_rank(a.first) < family_rank(b.first);
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    std::vector<Variable> vars;
    for (const auto& [base, idx] : keys) {
        int tag = 0;
        if ((base == "t" || base == "y") && !idx.empty()) tag = idx.front();
        vars.push_back({idx.empty() ? base : format_var_name(base, idx), tag});
    }
    return RingContext::make(f, std::move(vars));
}

Ideal read_ideal(const Field& f, const std::string& path, Ring* ring_out = nullptr) {
    std::string text = slurp(path);
    Ring ring = infer_ring(f, text);
    std::vector<Polynomial> gens;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        gens.push_back(Polynomial::parse(ring, line));
    }
    if (ring_out) *ring_out = ring;
    return Ideal::make(ring, std::move(gens));
}

TermOrder parse_order(const std::string& spec, size_t nvars) {
    if (spec == "lex") return TermOrder::lex(nvars);
    if (spec == "degrevlex") return TermOrder::degrevlex(nvars);
    if (spec.rfind("weights:", 0) == 0) {
        std::vector<std::vector<int64_t>> rows;
        std::istringstream in(slurp(spec.substr(8)));
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream row(line);
            std::vector<int64_t> w;
            int64_t v;
            while (row >> v) w.push_back(v);
            if (!w.empty()) rows.push_back(std::move(w));
        }
        return TermOrder(nvars, std::move(rows), "weights-file");
    }
    throw CLI::ValidationError("--order expects lex, degrevlex or weights:FILE");
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::app);
            if (!file_) throw std::runtime_error("cannot open '" + path + "' for writing");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void print_config(std::ostream& out, const std::string& command, const json& extra) {
    json cfg = extra;
    cfg["command"] = command;
    out << "# " << cfg.dump() << "\n";
}

void print_basis(std::ostream& out, const GroebnerBasis& G) {
    for (const auto& g : G.elements) out << g.to_string(&G.order) << "\n";
}

void print_ideal(std::ostream& out, const Ideal& I) {
    for (const auto& g : I.gens) out << g.to_string() << "\n";
}

struct FamilyOpts {
    std::string family_path;
    std::string sets_path;
    int m = 0, n = 0;
    std::string d_spec;

    void add(CLI::App* cmd) {
        cmd->add_option("--family", family_path, "family file (header m n d1..dm, then rows)");
        cmd->add_option("--sets", sets_path, "set system file: one C_i per line");
        cmd->add_option("--m", m, "number of spaces (generic sampling)");
        cmd->add_option("--n", n, "ambient variables (generic sampling)");
        cmd->add_option("--d", d_spec, "comma-separated dimensions (generic sampling)");
    }

    LinearSpaceFamily load(const CommonOpts& common) const {
        Field f = common.field();
        if (!family_path.empty()) {
            std::ifstream in(family_path);
            if (!in) throw std::runtime_error("cannot open '" + family_path + "'");
            return LinearSpaceFamily::read(in, f);
        }
        if (!sets_path.empty()) return LinearSpaceFamily::from_set_system(f, read_sets());
        if (m > 0 && n > 0 && !d_spec.empty()) {
            std::vector<int32_t> d;
            std::stringstream ss(d_spec);
            std::string item;
            while (std::getline(ss, item, ',')) d.push_back(std::stoi(item));
            std::optional<int64_t> bound;
            if (f.kind() == Field::Kind::rationals) bound = 100;
            return LinearSpaceFamily::sample_generic(f, m, n, d, common.seed, bound);
        }
        throw CLI::ValidationError("provide --family, --sets, or --m/--n/--d for sampling");
    }

    SetSystem read_sets() const {
        std::istringstream in(slurp(sets_path));
        std::string line;
        std::vector<std::vector<int32_t>> sets;
        int n_max = 0;
        while (std::getline(in, line)) {
            size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') continue;
            std::istringstream row(line);
            std::vector<int32_t> set;
            int32_t v;
            while (row >> v) {
                set.push_back(v);
                n_max = std::max(n_max, v);
            }
            sets.push_back(std::move(set));
        }
        return SetSystem::make(n_max, std::move(sets));
    }

    json describe() const {
        json j;
        if (!family_path.empty()) j["family"] = family_path;
        if (!sets_path.empty()) j["sets"] = sets_path;
        if (m > 0) j["m"] = m;
        if (n > 0) j["n"] = n;
        if (!d_spec.empty()) j["d"] = d_spec;
        return j;
    }
};

json presentation_stats(const PresentationResult& p) {
    json j;
    j["index_set"] = p.index_set;
    j["generators"] = p.kernel.gens.size();
    j["basis_size"] = p.basis.elements.size();
    if (p.dim_degree) {
        j["dim"] = p.dim_degree->first;
        j["degree"] = p.dim_degree->second;
    }
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for algebras generated by products of linear-form spaces"};
    app.require_subcommand(1);

    // gb
    auto* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis of an ideal file");
    CommonOpts gb_common;
    std::string gb_ideal, gb_order = "degrevlex", gb_nf;
    add_common(gb_cmd, gb_common);
    gb_cmd->add_option("--ideal", gb_ideal, "ideal file, one generator per line")->required();
    gb_cmd->add_option("--order", gb_order, "lex | degrevlex | weights:FILE");
    gb_cmd->add_option("--nf", gb_nf, "also print the normal form of this polynomial");
    gb_cmd->callback([&]() {
        groebner_self_check_enable(gb_common.verify);
        Field f = gb_common.field();
        Ideal I = read_ideal(f, gb_ideal);
        TermOrder ord = parse_order(gb_order, I.ring->nvars());
        GroebnerBasis G = buchberger(I, ord, gb_common.budget());
        Output out(gb_common.out_path);
        print_config(out.stream(), "gb",
                     {{"ideal", gb_ideal}, {"order", gb_order}, {"field", f.describe()}});
        print_basis(out.stream(), G);
        if (!gb_nf.empty())
            out.stream() << "# normal_form: "
                         << normal_form(Polynomial::parse(I.ring, gb_nf), G).to_string(&ord)
                         << "\n";
    });

    // eliminate
    auto* elim_cmd = app.add_subcommand("eliminate", "intersect with a subring");
    CommonOpts elim_common;
    std::string elim_ideal, elim_keep;
    add_common(elim_cmd, elim_common);
    elim_cmd->add_option("--ideal", elim_ideal)->required();
    elim_cmd->add_option("--keep", elim_keep, "comma-separated variables to keep")->required();
    elim_cmd->callback([&]() {
        groebner_self_check_enable(elim_common.verify);
        Field f = elim_common.field();
        Ideal I = read_ideal(f, elim_ideal);
        std::vector<bool> keep(I.ring->nvars(), false);
        std::stringstream ss(elim_keep);
        std::string name;
        while (std::getline(ss, name, ',')) {
            auto idx = I.ring->var_index(name);
            if (!idx) throw std::runtime_error("unknown variable '" + name + "'");
            keep[*idx] = true;
        }
        Ideal cut = eliminate(I, keep, elim_common.budget());
        Output out(elim_common.out_path);
        print_config(out.stream(), "eliminate",
                     {{"ideal", elim_ideal}, {"keep", elim_keep}, {"field", f.describe()}});
        print_ideal(out.stream(), cut);
    });

    // bv-present
    auto* bv_cmd = app.add_subcommand("bv-present", "presentation of B(V) by elimination");
    CommonOpts bv_common;
    FamilyOpts bv_family;
    add_common(bv_cmd, bv_common);
    bv_family.add(bv_cmd);
    bv_cmd->callback([&]() {
        groebner_self_check_enable(bv_common.verify);
        LinearSpaceFamily V = bv_family.load(bv_common);
        PresentationResult bv = bv_kernel(V, bv_common.budget());
        Output out(bv_common.out_path);
        json cfg = bv_family.describe();
        cfg["field"] = bv_common.field().describe();
        cfg["seed"] = bv_common.seed;
        print_config(out.stream(), "bv-present", cfg);
        out.stream() << "# stats: " << presentation_stats(bv).dump() << "\n";
        print_basis(out.stream(), bv.basis);
    });

    // av-present
    auto* av_cmd = app.add_subcommand("av-present", "presentation of A(V)");
    CommonOpts av_common;
    FamilyOpts av_family;
    std::string av_route = "direct", av_index = "hd";
    add_common(av_cmd, av_common);
    av_family.add(av_cmd);
    av_cmd->add_option("--route", av_route, "direct | diagonal | both");
    av_cmd->add_option("--index", av_index, "hd | hnd (direct route only)");
    av_cmd->callback([&]() {
        groebner_self_check_enable(av_common.verify);
        LinearSpaceFamily V = av_family.load(av_common);
        AvIndexSet index = av_index == "hnd" ? AvIndexSet::hnd : AvIndexSet::hd;
        Output out(av_common.out_path);
        json cfg = av_family.describe();
        cfg["field"] = av_common.field().describe();
        cfg["route"] = av_route;
        cfg["index"] = av_index;
        cfg["seed"] = av_common.seed;
        print_config(out.stream(), "av-present", cfg);
        if (av_route == "direct" || av_route == "both") {
            PresentationResult direct =
                av_presentation(V, AvRoute::direct, index, av_common.budget());
            out.stream() << "# stats: " << presentation_stats(direct).dump() << "\n";
            print_basis(out.stream(), direct.basis);
            if (av_route == "both") {
                // route agreement is an H(d) statement
                PresentationResult direct_hd =
                    index == AvIndexSet::hd
                        ? direct
                        : av_presentation(V, AvRoute::direct, AvIndexSet::hd,
                                          av_common.budget());
                PresentationResult diag =
                    av_presentation(V, AvRoute::diagonal, AvIndexSet::hd, av_common.budget());
                out.stream() << "# routes agree: "
                             << (ideal_equal(direct_hd.kernel, diag.kernel, av_common.budget())
                                     ? "true"
                                     : "FALSE")
                             << "\n";
            }
        } else {
            PresentationResult diag =
                av_presentation(V, AvRoute::diagonal, AvIndexSet::hd, av_common.budget());
            out.stream() << "# stats: " << presentation_stats(diag).dump() << "\n";
            print_basis(out.stream(), diag.basis);
        }
    });

    // polymatroid
    auto* poly_cmd = app.add_subcommand("polymatroid", "transversal base ring experiments");
    CommonOpts poly_common;
    FamilyOpts poly_family;
    bool poly_white = false;
    size_t poly_gb_search = 0;
    add_common(poly_cmd, poly_common);
    poly_family.add(poly_cmd);
    poly_cmd->add_flag("--white", poly_white, "compare exchange quadrics with the toric kernel");
    poly_cmd->add_option("--gb-search", poly_gb_search,
                         "sample this many revlex extensions and report basis degrees");
    poly_cmd->callback([&]() {
        groebner_self_check_enable(poly_common.verify);
        Field f = poly_common.field();
        SetSystem C = poly_family.read_sets();
        auto B = transversal_base(C);
        Output out(poly_common.out_path);
        json cfg = poly_family.describe();
        cfg["field"] = f.describe();
        print_config(out.stream(), "polymatroid", cfg);
        out.stream() << "# base vectors: " << B.size() << ", exchange axiom: "
                     << (is_base(B) ? "holds" : "fails") << "\n";
        Ideal P = pseudo_white_presentation(f, C);
        out.stream() << "# pseudo-White generators: " << P.gens.size() << "\n";
        print_ideal(out.stream(), P);
        if (poly_white) {
            WhiteVerdict w = white_check(f, B, poly_common.budget());
            out.stream() << "# White check: "
                         << (w.outcome == WhiteVerdict::Outcome::holds   ? "holds"
                             : w.outcome == WhiteVerdict::Outcome::fails ? "fails"
                                                                         : "budget-exceeded")
                         << " (" << w.detail << ")\n";
        }
        if (poly_gb_search > 0) {
            DegreeSearch s = quadratic_basis_search(f, C, poly_gb_search, poly_common.seed,
                                                    poly_common.budget());
            out.stream() << "# basis degree search (open question, experiment only): "
                         << s.quadratic_orders << "/" << s.extensions_tested
                         << " extensions gave top degree <= 2, best top degree "
                         << s.best_max_degree << ", input relations were a basis for "
                         << s.input_was_basis << (s.exhaustive ? " (exhaustive)" : " (sampled)")
                         << "\n";
        }
    });

    // hibi
    auto* hibi_cmd = app.add_subcommand("hibi", "Hibi relations of a product lattice");
    CommonOpts hibi_common;
    std::string hibi_d;
    std::string hibi_sets;
    add_common(hibi_cmd, hibi_common);
    hibi_cmd->add_option("--d", hibi_d, "comma-separated box sizes, e.g. 2,2,2");
    hibi_cmd->add_option("--sets", hibi_sets, "set system file for the factors");
    hibi_cmd->callback([&]() {
        Field f = hibi_common.field();
        std::vector<std::vector<int32_t>> factors;
        if (!hibi_d.empty()) {
            std::stringstream ss(hibi_d);
            std::string item;
            while (std::getline(ss, item, ',')) {
                std::vector<int32_t> range;
                for (int32_t v = 1; v <= std::stoi(item); ++v) range.push_back(v);
                factors.push_back(std::move(range));
            }
        } else if (!hibi_sets.empty()) {
            FamilyOpts tmp;
            tmp.sets_path = hibi_sets;
            factors = tmp.read_sets().sets;
        } else {
            throw CLI::ValidationError("provide --d or --sets");
        }
        std::vector<LatticePoint> pts = product_points(factors);
        Ideal I = hibi_relations(f, pts);
        Output out(hibi_common.out_path);
        print_config(out.stream(), "hibi", {{"field", f.describe()}});
        std::istringstream edges(poset_edges_text(pts));
        std::string edge;
        while (std::getline(edges, edge)) out.stream() << "# " << edge << "\n";
        print_ideal(out.stream(), I);
    });

    // asl-check
    auto* asl_cmd = app.add_subcommand("asl-check", "ASL verification of the A(V) presentation");
    CommonOpts asl_common;
    FamilyOpts asl_family;
    std::string asl_ext = "all";
    add_common(asl_cmd, asl_common);
    asl_family.add(asl_cmd);
    asl_cmd->add_option("--extensions", asl_ext, "all | sample count");
    asl_cmd->callback([&]() {
        groebner_self_check_enable(asl_common.verify);
        LinearSpaceFamily V = asl_family.load(asl_common);
        std::vector<LatticePoint> pts = family_hnd_points(V, V.n);
        PresentationResult pres =
            av_presentation(V, AvRoute::direct, AvIndexSet::hnd, asl_common.budget());
        AslBudget budget;
        budget.seed = asl_common.seed;
        if (asl_ext != "all") {
            budget.exhaustive_preferred = false;
            budget.sample_count = static_cast<size_t>(std::stoul(asl_ext));
        }
        AslVerdict v = asl_verify(pres.kernel, pts, budget, asl_common.budget());
        Output out(asl_common.out_path);
        json cfg = asl_family.describe();
        cfg["field"] = asl_common.field().describe();
        cfg["extensions"] = asl_ext;
        cfg["seed"] = asl_common.seed;
        print_config(out.stream(), "asl-check", cfg);
        out.stream() << "# verdict: " << (v.pass ? "pass" : "FAIL") << ", extensions tested "
                     << v.extensions_tested << (v.exhaustive ? " (exhaustive)" : " (sampled)")
                     << ", ASL2 shape " << (v.asl2_ok ? "ok" : "violated") << "\n";
        for (const auto& rel : v.straightening) out.stream() << rel.relation.to_string() << "\n";
        if (!v.pass) {
            out.stream() << "# failing extension:";
            for (size_t i : *v.failing_extension) out.stream() << " " << i;
            out.stream() << "\n";
            std::exit(1);
        }
    });

    // generic-check
    auto* gen_cmd = app.add_subcommand("generic-check", "initial ideal of a generic L against J");
    CommonOpts gen_common;
    int gen_m = 2, gen_n = 2;
    size_t gen_orders = 25;
    add_common(gen_cmd, gen_common);
    gen_cmd->add_option("--m", gen_m)->required();
    gen_cmd->add_option("--n", gen_n)->required();
    gen_cmd->add_option("--orders", gen_orders, "row-increasing orders to sample");
    gen_cmd->callback([&]() {
        groebner_self_check_enable(gen_common.verify);
        GenericInitialVerdict v = verify_generic_initial(gen_common.field(), gen_m, gen_n,
                                                         gen_common.seed, gen_orders,
                                                         gen_common.budget());
        Output out(gen_common.out_path);
        print_config(out.stream(), "generic-check",
                     {{"m", gen_m},
                      {"n", gen_n},
                      {"orders", gen_orders},
                      {"seed", gen_common.seed},
                      {"field", gen_common.field().describe()}});
        out.stream() << "# equal " << v.orders_equal << "/" << v.orders_tested
                     << ", budget-exceeded " << v.budget_exceeded << ", resamples " << v.resamples
                     << (v.flagged ? ", FLAGGED possibly degenerate" : "") << "\n";
        for (const auto& note : v.notes) out.stream() << "# " << note << "\n";
        if (!v.all_equal()) std::exit(1);
    });

    // primdec-check
    auto* prim_cmd = app.add_subcommand("primdec-check", "product = intersection of powers");
    CommonOpts prim_common;
    FamilyOpts prim_family;
    add_common(prim_cmd, prim_common);
    prim_family.add(prim_cmd);
    prim_cmd->callback([&]() {
        groebner_self_check_enable(prim_common.verify);
        LinearSpaceFamily V = prim_family.load(prim_common);
        PrimdecVerdict v = primdec_check(V, prim_common.budget());
        Output out(prim_common.out_path);
        json cfg = prim_family.describe();
        cfg["field"] = prim_common.field().describe();
        cfg["seed"] = prim_common.seed;
        print_config(out.stream(), "primdec-check", cfg);
        out.stream() << "# equality: " << (v.equal ? "holds" : "FAILS") << "\n";
        for (const auto& comp : v.components) {
            out.stream() << "# I_A for A = {";
            for (size_t i = 0; i < comp.subset.size(); ++i)
                out.stream() << (i ? "," : "") << comp.subset[i];
            out.stream() << "}: rank " << comp.rank << "\n";
        }
        if (!v.equal) std::exit(1);
    });

    // conjecture
    auto* conj_cmd = app.add_subcommand("conjecture", "randomized falsification harness");
    CommonOpts conj_common;
    std::string conj_id = "1.1", conj_source = "uniform", conj_orders = "20";
    int conj_m = 2, conj_n = 2;
    long long conj_trials = 10;
    bool conj_timing = false, conj_shrink = false;
    add_common(conj_cmd, conj_common);
    conj_cmd->add_option("--id", conj_id, "1.1 | 4.2")->required();
    conj_cmd->add_option("--m", conj_m)->required();
    conj_cmd->add_option("--n", conj_n)->required();
    conj_cmd->add_option("--trials", conj_trials, "instances for random sources");
    conj_cmd->add_option("--orders", conj_orders,
                         "orders per instance, or 'all' for every lex permutation (4.2)");
    conj_cmd->add_option("--source", conj_source,
                         "uniform | structured:DENSITY | exhaustive01 | file:PATH");
    conj_cmd->add_flag("--timing", conj_timing, "include wall time (breaks byte replay)");
    conj_cmd->add_flag("--shrink", conj_shrink, "minimize the first violation");
    conj_cmd->callback([&]() {
        groebner_self_check_enable(conj_common.verify);
        HarnessConfig cfg;
        cfg.conjecture = conjecture_from_name(conj_id);
        cfg.m = conj_m;
        cfg.n = conj_n;
        cfg.field = conj_common.field();
        cfg.trials = conj_trials;
        if (conj_orders == "all") {
            if (cfg.conjecture != ConjectureId::lex_degree_bound)
                throw CLI::ValidationError("--orders all needs the finite lex family of 4.2");
            cfg.orders = SIZE_MAX;
        } else {
            cfg.orders = static_cast<size_t>(std::stoull(conj_orders));
        }
        cfg.seed = conj_common.seed;
        cfg.budget = conj_common.budget();
        cfg.include_timing = conj_timing;
        if (conj_source == "uniform") {
            cfg.source.kind = CoefficientSource::Kind::uniform;
        } else if (conj_source.rfind("structured", 0) == 0) {
            cfg.source.kind = CoefficientSource::Kind::structured;
            auto colon = conj_source.find(':');
            if (colon != std::string::npos)
                cfg.source.density = std::stod(conj_source.substr(colon + 1));
        } else if (conj_source == "exhaustive01") {
            cfg.source.kind = CoefficientSource::Kind::exhaustive01;
        } else if (conj_source.rfind("file:", 0) == 0) {
            cfg.source.kind = CoefficientSource::Kind::explicit_tensor;
            std::istringstream in(slurp(conj_source.substr(5)));
            int64_t v;
            while (in >> v) cfg.source.tensor.push_back(v);
        } else {
            throw CLI::ValidationError("unknown --source");
        }
        Output out(conj_common.out_path);
        out.stream() << json{{"config", cfg.describe()}}.dump() << "\n";
        long long violations = 0, budget_exceeded = 0, passes = 0;
        std::optional<TrialReport> first_violation;
        run_trials(cfg, [&](const TrialReport& r) {
            out.stream() << r.to_json().dump() << "\n";
            switch (r.outcome) {
            case TrialReport::Outcome::pass: ++passes; break;
            case TrialReport::Outcome::violation:
                ++violations;
                if (!first_violation) first_violation = r;
                break;
            case TrialReport::Outcome::budget_exceeded: ++budget_exceeded; break;
            }
        });
        std::cerr << "conjecture " << conj_id << " (m=" << conj_m << ", n=" << conj_n
                  << "): " << passes << " pass, " << violations << " VIOLATION, "
                  << budget_exceeded << " budget-exceeded\n";
        if (first_violation && conj_shrink) {
            ShrinkResult s = shrink(*first_violation, cfg.field, cfg.budget);
            json shrunk = s.report.to_json();
            shrunk["shrunk"] = true;
            out.stream() << shrunk.dump() << "\n";
        }
        if (violations > 0) std::exit(3);
    });

    // summary
    auto* sum_cmd = app.add_subcommand("summary", "aggregate a JSON-lines report file");
    std::string sum_in;
    sum_cmd->add_option("--in", sum_in, "report file")->required();
    sum_cmd->callback([&]() {
        std::ifstream in(sum_in);
        if (!in) throw std::runtime_error("cannot open '" + sum_in + "'");
        Summary s = summarize(in);
        std::cout << s.to_text();
    });

    try {
        CLI11_PARSE(app, argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
