#include "lsw/linear_spaces.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace lsw {

std::vector<int32_t> LinearSpaceFamily::dims() const {
    std::vector<int32_t> d;
    for (const auto& s : spaces) d.push_back(static_cast<int32_t>(s.rows));
    return d;
}

int64_t LinearSpaceFamily::dims_sum() const {
    int64_t s = 0;
    for (const auto& sp : spaces) s += static_cast<int64_t>(sp.rows);
    return s;
}

LinearSpaceFamily LinearSpaceFamily::from_matrices(Field f, int n,
                                                   std::vector<ScalarMatrix> spaces) {
    LinearSpaceFamily V;
    V.field = f;
    V.n = n;
    for (auto& s : spaces) {
        if (s.cols != static_cast<size_t>(n)) throw FamilyError("space matrix width mismatch");
        if (s.rows == 0 || s.rows > static_cast<size_t>(n))
            throw FamilyError("space dimension out of range");
        if (rank(s) != s.rows) throw FamilyError("space matrix is not of full row rank");
        std::vector<int32_t> labels(s.rows);
        for (size_t j = 0; j < s.rows; ++j) labels[j] = static_cast<int32_t>(j + 1);
        V.gen_labels.push_back(std::move(labels));
        V.spaces.push_back(std::move(s));
    }
    return V;
}

LinearSpaceFamily LinearSpaceFamily::from_set_system(Field f, const SetSystem& C) {
    LinearSpaceFamily V;
    V.field = f;
    V.n = C.n;
    for (const auto& set : C.sets) {
        ScalarMatrix mat(f, set.size(), static_cast<size_t>(C.n));
        for (size_t j = 0; j < set.size(); ++j)
            mat.at(j, static_cast<size_t>(set[j] - 1)) = f.one();
        V.spaces.push_back(std::move(mat));
        V.gen_labels.push_back(set); // SetSystem::make sorts ascending
    }
    return V;
}

LinearSpaceFamily LinearSpaceFamily::sample_generic(Field f, int m, int n,
                                                    std::vector<int32_t> d, uint64_t seed,
                                                    std::optional<int64_t> coeff_bound) {
    if (static_cast<int>(d.size()) != m) throw FamilyError("d must list one dimension per space");
    if (f.kind() == Field::Kind::rationals && !coeff_bound)
        throw FamilyError("sampling over the rationals requires an explicit coefficient bound");
    Rng rng(seed);
    auto draw = [&]() {
        if (f.kind() == Field::Kind::prime_field)
            return f.from_int(rng.range(0, f.modulus() - 1));
        return f.from_int(rng.range(-*coeff_bound, *coeff_bound));
    };
    std::vector<ScalarMatrix> spaces;
    for (int i = 0; i < m; ++i) {
        if (d[static_cast<size_t>(i)] < 1 || d[static_cast<size_t>(i)] > n)
            throw FamilyError("space dimension out of range");
        ScalarMatrix mat(f, static_cast<size_t>(d[static_cast<size_t>(i)]),
                         static_cast<size_t>(n));
        do {
            for (auto& e : mat.a) e = draw();
        } while (rank(mat) != mat.rows);
        spaces.push_back(std::move(mat));
    }
    return from_matrices(f, n, std::move(spaces));
}

Polynomial LinearSpaceFamily::basis_form(const Ring& xring, int i, int j) const {
    const ScalarMatrix& mat = spaces[static_cast<size_t>(i - 1)];
    Polynomial form(xring);
    for (size_t k = 0; k < mat.cols; ++k)
        form = form + Polynomial::variable(xring, k).scaled(mat.at(static_cast<size_t>(j - 1), k));
    return form;
}

LinearSpaceFamily LinearSpaceFamily::read(std::istream& in, const Field& f) {
    std::string line;
    auto next_line = [&]() -> std::string {
        while (std::getline(in, line)) {
            size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') continue;
            return line;
        }
        throw FamilyError("unexpected end of family file");
    };
    std::istringstream header(next_line());
    int m = 0, n = 0;
    if (!(header >> m >> n)) throw FamilyError("family header must start with m n");
    std::vector<int32_t> d(static_cast<size_t>(m));
    for (auto& di : d)
        if (!(header >> di)) throw FamilyError("family header is missing dimensions");
    std::vector<ScalarMatrix> spaces;
    for (int i = 0; i < m; ++i) {
        ScalarMatrix mat(f, static_cast<size_t>(d[static_cast<size_t>(i)]),
                         static_cast<size_t>(n));
        for (size_t r = 0; r < mat.rows; ++r) {
            std::istringstream row(next_line());
            std::string tok;
            for (size_t c = 0; c < mat.cols; ++c) {
                if (!(row >> tok)) throw FamilyError("family row is too short");
                mat.at(r, c) = f.parse(tok);
            }
        }
        spaces.push_back(std::move(mat));
    }
    return from_matrices(f, n, std::move(spaces));
}

void LinearSpaceFamily::write(std::ostream& out) const {
    out << m() << " " << n;
    for (const auto& s : spaces) out << " " << s.rows;
    out << "\n";
    for (const auto& s : spaces)
        for (size_t r = 0; r < s.rows; ++r) {
            for (size_t c = 0; c < s.cols; ++c)
                out << (c ? " " : "") << field.to_string(s.at(r, c));
            out << "\n";
        }
}

LMatrixBuild build_L(const LinearSpaceFamily& V) {
    const Field& f = V.field;
    size_t n = static_cast<size_t>(V.n);
    LMatrixBuild out;
    for (int i = 0; i < V.m(); ++i) {
        const ScalarMatrix& gens = V.spaces[static_cast<size_t>(i)];
        ScalarMatrix completed(f, n, n);
        for (size_t r = 0; r < gens.rows; ++r)
            for (size_t c = 0; c < n; ++c) completed.at(r, c) = gens.at(r, c);
        size_t filled = gens.rows;
        std::vector<int32_t> labels = V.gen_labels[static_cast<size_t>(i)];
        for (size_t k = 0; k < n && filled < n; ++k) {
            completed.at(filled, k) = f.one();
            ScalarMatrix probe(f, filled + 1, n);
            for (size_t r = 0; r <= filled; ++r)
                for (size_t c = 0; c < n; ++c) probe.at(r, c) = completed.at(r, c);
            if (rank(probe) == filled + 1) {
                ++filled;
            } else {
                completed.at(filled, k) = f.zero();
            }
        }
        if (filled != n) throw FamilyError("could not complete a basis of R_1");
        while (labels.size() < n) {
            int32_t next = 1;
            while (std::find(labels.begin(), labels.end(), next) != labels.end()) ++next;
            labels.push_back(next);
        }
        out.completions.push_back(std::move(completed));
        out.full_labels.push_back(std::move(labels));
    }
    out.t_full = make_t_ring(f, V.m(), V.n, &out.full_labels);

    for (int i = 0; i < V.m(); ++i) {
        // x = f_i A_i with f_i = x F_i^T, so A_i = (F_i^T)^{-1}
        const ScalarMatrix& F = out.completions[static_cast<size_t>(i)];
        ScalarMatrix Ft(f, n, n);
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c) Ft.at(r, c) = F.at(c, r);
        ScalarMatrix A = inverse(Ft);
        std::vector<Polynomial> row;
        for (size_t j = 0; j < n; ++j) {
            Polynomial entry(out.t_full);
            for (size_t k = 0; k < n; ++k) {
                size_t var = static_cast<size_t>(i) * n + k;
                entry = entry + Polynomial::variable(out.t_full, var).scaled(A.at(k, j));
            }
            row.push_back(std::move(entry));
        }
        out.entries.push_back(std::move(row));
    }
    return out;
}

Ideal two_minors(const LMatrixBuild& L) {
    std::vector<Polynomial> gens;
    size_t m = L.entries.size();
    size_t n = m ? L.entries.front().size() : 0;
    for (size_t i1 = 0; i1 < m; ++i1)
        for (size_t i2 = i1 + 1; i2 < m; ++i2)
            for (size_t j1 = 0; j1 < n; ++j1)
                for (size_t j2 = j1 + 1; j2 < n; ++j2)
                    gens.push_back(L.entries[i1][j1] * L.entries[i2][j2] -
                                   L.entries[i1][j2] * L.entries[i2][j1]);
    return Ideal::make(L.t_full, std::move(gens));
}

Ring make_tv_ring(const LinearSpaceFamily& V) {
    std::vector<Variable> vars;
    for (int i = 0; i < V.m(); ++i)
        for (int32_t label : V.gen_labels[static_cast<size_t>(i)])
            vars.push_back({format_var_name("t", {i + 1, label}), i + 1});
    return RingContext::make(V.field, std::move(vars));
}

namespace {

// t_{i,j+1} > t_{ij} within every row: one strictly increasing weight row
TermOrder row_increasing_order(const std::vector<int32_t>& d) {
    std::vector<int64_t> w;
    for (int32_t di : d)
        for (int32_t j = 1; j <= di; ++j) w.push_back(j);
    return TermOrder(w.size(), {w}, "row-increasing");
}

std::optional<std::pair<long long, long long>> stats_from_initial(const GroebnerBasis& G) {
    try {
        auto facets = complex_facets(leading_ideal(G), G.ring->nvars());
        if (facets.empty()) return std::nullopt;
        size_t maxsz = 0;
        for (const auto& f : facets) maxsz = std::max(maxsz, f.size());
        long long degree = 0;
        for (const auto& f : facets)
            if (f.size() == maxsz) ++degree;
        return std::make_pair(static_cast<long long>(maxsz), degree);
    } catch (const RingError&) {
        return std::nullopt; // initial ideal not squarefree
    }
}

} // namespace

PresentationResult bv_kernel(const LinearSpaceFamily& V, const GroebnerOptions& opts) {
    LMatrixBuild L = build_L(V);
    Ideal I2 = two_minors(L);
    size_t n = static_cast<size_t>(V.n);
    std::vector<bool> keep(I2.ring->nvars(), false);
    for (int i = 0; i < V.m(); ++i)
        for (size_t j = 0; j < V.spaces[static_cast<size_t>(i)].rows; ++j)
            keep[static_cast<size_t>(i) * n + j] = true;
    Ideal cut = eliminate(I2, keep, opts);
    Ring tv = make_tv_ring(V);
    Ideal kernel = ideal_mapped_by_name(cut, tv);
    GroebnerBasis basis = buchberger(kernel, row_increasing_order(V.dims()), opts);
    PresentationResult out{std::move(kernel), std::move(basis), "T(V)", std::nullopt};
    out.dim_degree = stats_from_initial(out.basis);
    return out;
}

std::vector<LatticePoint> family_hd_points(const LinearSpaceFamily& V) {
    return product_points(V.gen_labels);
}

std::vector<LatticePoint> family_hnd_points(const LinearSpaceFamily& V, int n) {
    std::vector<LatticePoint> out;
    for (const auto& p : family_hd_points(V)) {
        int64_t rank = -static_cast<int64_t>(p.size());
        for (size_t i = 0; i < p.size(); ++i) {
            const auto& labels = V.gen_labels[i];
            size_t pos = static_cast<size_t>(
                std::find(labels.begin(), labels.end(), p[i]) - labels.begin());
            rank += static_cast<int64_t>(pos) + 1;
        }
        if (rank < n) out.push_back(p);
    }
    return out;
}

Ideal diagonal_Q(const PresentationResult& bv, const LinearSpaceFamily& V, const Ring& s_ring) {
    const Ring& tv = bv.kernel.ring;
    std::vector<LatticePoint> pts = family_hd_points(V);
    auto point_index = [&](const LatticePoint& p) -> size_t {
        for (size_t k = 0; k < pts.size(); ++k)
            if (pts[k] == p) return k;
        throw FamilyError("diagonal term outside H(d)");
    };
    // row offsets into the T(V) variable list
    std::vector<size_t> offset(static_cast<size_t>(V.m()) + 1, 0);
    for (int i = 0; i < V.m(); ++i)
        offset[static_cast<size_t>(i) + 1] =
            offset[static_cast<size_t>(i)] + V.gen_labels[static_cast<size_t>(i)].size();

    auto term_to_point = [&](const Monomial& mono) {
        LatticePoint p(static_cast<size_t>(V.m()), 0);
        for (int i = 0; i < V.m(); ++i) {
            for (size_t j = offset[static_cast<size_t>(i)]; j < offset[static_cast<size_t>(i) + 1];
                 ++j)
                if (mono.e[j] == 1)
                    p[static_cast<size_t>(i)] =
                        V.gen_labels[static_cast<size_t>(i)][j - offset[static_cast<size_t>(i)]];
        }
        return p;
    };

    std::vector<Polynomial> gens;
    for (const auto& h : bv.basis.elements) {
        auto deg = h.multidegree();
        if (!deg) throw DiagonalBoundViolation(h.to_string());
        for (int64_t c : *deg)
            if (c > 1) throw DiagonalBoundViolation(h.to_string());
        // pad over the rows the element misses
        std::vector<int> free_rows;
        for (int i = 0; i < V.m(); ++i)
            if ((*deg)[static_cast<size_t>(i)] == 0) free_rows.push_back(i);
        std::vector<size_t> choice(free_rows.size(), 0);
        while (true) {
            Monomial pad = Monomial::one(tv->nvars());
            for (size_t k = 0; k < free_rows.size(); ++k)
                pad.e[offset[static_cast<size_t>(free_rows[k])] + choice[k]] = 1;
            Polynomial padded = h.times_monomial(pad);
            Polynomial linear(s_ring);
            for (const auto& [mono, coeff] : padded.terms())
                linear.add_term(Monomial::var(s_ring->nvars(), point_index(term_to_point(mono))),
                                coeff);
            gens.push_back(std::move(linear));
            // advance the odometer
            size_t pos = free_rows.size();
            bool carry = true;
            while (pos > 0 && carry) {
                --pos;
                size_t row_size = V.gen_labels[static_cast<size_t>(free_rows[pos])].size();
                if (++choice[pos] < row_size)
                    carry = false;
                else
                    choice[pos] = 0;
            }
            if (free_rows.empty() || carry) break;
        }
    }
    return Ideal::make(s_ring, std::move(gens));
}

PresentationResult av_presentation(const LinearSpaceFamily& V, AvRoute route, AvIndexSet index,
                                   const GroebnerOptions& opts) {
    std::vector<LatticePoint> pts =
        index == AvIndexSet::hd ? family_hd_points(V) : family_hnd_points(V, V.n);
    Ring s_ring = make_point_ring(V.field, pts);

    Ideal kernel = Ideal::make(s_ring, {});
    if (route == AvRoute::direct) {
        Ring xring = make_x_ring(V.field, V.n);
        std::vector<Polynomial> images;
        for (const auto& p : pts) {
            Polynomial prod = Polynomial::constant(xring, V.field.one());
            for (int i = 0; i < V.m(); ++i) {
                const auto& labels = V.gen_labels[static_cast<size_t>(i)];
                size_t pos = static_cast<size_t>(
                    std::find(labels.begin(), labels.end(), p[static_cast<size_t>(i)]) -
                    labels.begin());
                prod = prod * V.basis_form(xring, i + 1, static_cast<int>(pos) + 1);
            }
            images.push_back(std::move(prod));
        }
        kernel = algebra_map_kernel(s_ring, images, opts);
    } else {
        if (index != AvIndexSet::hd)
            throw FamilyError("the diagonal route is indexed by all of H(d)");
        PresentationResult bv = bv_kernel(V, opts);
        Ideal hibi = hibi_relations(s_ring, pts);
        std::vector<Polynomial> gens = hibi.gens;
        for (auto& q : diagonal_Q(bv, V, s_ring).gens) gens.push_back(std::move(q));
        kernel = Ideal::make(s_ring, std::move(gens));
    }

    TermOrder ord = revlex_extension(pts, default_linear_extension(pts));
    GroebnerBasis basis = buchberger(kernel, ord, opts);
    PresentationResult out{std::move(kernel), std::move(basis),
                           index == AvIndexSet::hd ? "H(d)" : "Hn(d)", std::nullopt};
    out.dim_degree = stats_from_initial(out.basis);
    return out;
}

namespace {

void degree_m_monomials(size_t nvars, int left, size_t pos, Monomial& cur,
                        std::vector<Monomial>& out) {
    if (pos + 1 == nvars) {
        cur.e[pos] = left;
        out.push_back(cur);
        cur.e[pos] = 0;
        return;
    }
    for (int e = 0; e <= left; ++e) {
        cur.e[pos] = e;
        degree_m_monomials(nvars, left - e, pos + 1, cur, out);
    }
    cur.e[pos] = 0;
}

} // namespace

long long product_dimension(const LinearSpaceFamily& V) {
    Ring xring = make_x_ring(V.field, V.n);
    std::vector<Monomial> cols;
    Monomial cur = Monomial::one(static_cast<size_t>(V.n));
    degree_m_monomials(static_cast<size_t>(V.n), V.m(), 0, cur, cols);
    std::map<Monomial, size_t> col_index;
    for (size_t k = 0; k < cols.size(); ++k) col_index[cols[k]] = k;

    std::vector<int32_t> d = V.dims();
    size_t rows = 1;
    for (int32_t di : d) rows *= static_cast<size_t>(di);
    ScalarMatrix mat(V.field, rows, cols.size());
    std::vector<int32_t> tuple(d.size(), 1);
    size_t r = 0;
    while (true) {
        Polynomial prod = Polynomial::constant(xring, V.field.one());
        for (int i = 0; i < V.m(); ++i)
            prod = prod * V.basis_form(xring, i + 1, tuple[static_cast<size_t>(i)]);
        for (const auto& [mono, coeff] : prod.terms()) mat.at(r, col_index.at(mono)) = coeff;
        ++r;
        size_t pos = d.size();
        bool carry = true;
        while (pos > 0 && carry) {
            --pos;
            if (++tuple[pos] <= d[pos])
                carry = false;
            else
                tuple[pos] = 1;
        }
        if (carry) break;
    }
    return static_cast<long long>(rank(std::move(mat)));
}

PrimdecVerdict primdec_check(const LinearSpaceFamily& V, const GroebnerOptions& opts) {
    if (V.m() > 4) throw FamilyError("primdec_check is capped at m <= 4");
    Ring xring = make_x_ring(V.field, V.n);
    std::vector<Ideal> ideals;
    for (int i = 0; i < V.m(); ++i) {
        std::vector<Polynomial> gens;
        for (size_t j = 0; j < V.spaces[static_cast<size_t>(i)].rows; ++j)
            gens.push_back(V.basis_form(xring, i + 1, static_cast<int>(j) + 1));
        ideals.push_back(Ideal::make(xring, std::move(gens)));
    }

    Ideal lhs = ideals.front();
    for (int i = 1; i < V.m(); ++i) lhs = ideal_product(lhs, ideals[static_cast<size_t>(i)]);

    PrimdecVerdict verdict;
    std::optional<Ideal> rhs;
    for (unsigned mask = 1; mask < (1u << V.m()); ++mask) {
        PrimdecComponent comp;
        std::vector<Polynomial> gens;
        size_t total_rows = 0;
        for (int i = 0; i < V.m(); ++i)
            if (mask & (1u << i)) {
                comp.subset.push_back(i + 1);
                total_rows += V.spaces[static_cast<size_t>(i)].rows;
                for (const auto& g : ideals[static_cast<size_t>(i)].gens) gens.push_back(g);
            }
        ScalarMatrix stacked(V.field, total_rows, static_cast<size_t>(V.n));
        size_t r = 0;
        for (int i = 0; i < V.m(); ++i)
            if (mask & (1u << i)) {
                const ScalarMatrix& s = V.spaces[static_cast<size_t>(i)];
                for (size_t row = 0; row < s.rows; ++row, ++r)
                    for (size_t c = 0; c < s.cols; ++c) stacked.at(r, c) = s.at(row, c);
            }
        comp.rank = rank(std::move(stacked));
        Ideal IA = Ideal::make(xring, std::move(gens));
        Ideal power = ideal_power(IA, static_cast<unsigned>(comp.subset.size()));
        rhs = rhs ? intersect(*rhs, power, opts) : power;
        verdict.components.push_back(std::move(comp));
    }
    verdict.equal = ideal_equal(lhs, *rhs, opts);
    return verdict;
}

} // namespace lsw
