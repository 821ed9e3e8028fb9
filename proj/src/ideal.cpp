#include "lsw/ideal.hpp"

#include <algorithm>
#include <set>

namespace lsw {

Ideal Ideal::make(Ring ring, std::vector<Polynomial> gens) {
    Ideal I;
    I.ring = std::move(ring);
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!same_ring(g.ring(), I.ring)) throw RingError("ideal generator context mismatch");
        I.gens.push_back(std::move(g));
    }
    return I;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        int64_t da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& kept : out)
            if (kept.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(m);
    }
    return out;
}

namespace {

void collect_faces(uint64_t candidate, const std::vector<uint64_t>& gens,
                   std::set<uint64_t>& visited, std::set<uint64_t>& faces) {
    if (!visited.insert(candidate).second) return;
    for (uint64_t g : gens) {
        if ((g & candidate) != g) continue;
        // candidate contains a non-face: remove one vertex of it per branch
        uint64_t rest = g;
        while (rest) {
            uint64_t bit = rest & (~rest + 1);
            rest ^= bit;
            collect_faces(candidate & ~bit, gens, visited, faces);
        }
        return;
    }
    faces.insert(candidate);
}

} // namespace

std::vector<std::vector<size_t>> complex_facets(const MonomialIdeal& ideal, size_t nvars) {
    if (nvars > 63) throw RingError("complex_facets supports at most 63 variables");
    std::vector<uint64_t> gens;
    for (const auto& g : ideal.gens()) {
        if (!g.is_squarefree()) throw RingError("complex_facets requires a squarefree ideal");
        uint64_t mask = 0;
        for (size_t i = 0; i < g.size(); ++i)
            if (g.e[i] > 0) mask |= uint64_t(1) << i;
        gens.push_back(mask);
    }
    uint64_t full = nvars == 63 ? ~uint64_t(0) >> 1 : (uint64_t(1) << nvars) - 1;
    std::set<uint64_t> visited, faces;
    collect_faces(full, gens, visited, faces);
    // keep only maximal faces
    std::vector<std::vector<size_t>> out;
    for (uint64_t f : faces) {
        bool maximal = true;
        for (uint64_t other : faces)
            if (other != f && (f & other) == f) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        std::vector<size_t> verts;
        for (size_t i = 0; i < nvars; ++i)
            if (f & (uint64_t(1) << i)) verts.push_back(i);
        out.push_back(std::move(verts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace lsw
