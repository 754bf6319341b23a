#include "qtoric/complexes.hpp"

#include "qtoric/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace qtoric {

namespace {

IndexSet sorted(IndexSet s) {
    std::sort(s.begin(), s.end());
    return s;
}

IndexSet without(std::span<const std::size_t> tuple, std::size_t position) {
    IndexSet out;
    out.reserve(tuple.size() - 1);
    for (std::size_t k = 0; k < tuple.size(); ++k)
        if (k != position) out.push_back(tuple[k]);
    return out;
}

/// Orientation that `tuple` induces on the ridge opposite `position`,
/// expressed relative to the sorted ridge.
int induced_sign(std::span<const std::size_t> tuple, std::size_t position) {
    const IndexSet ridge = without(tuple, position);
    const int boundary_sign = position % 2 == 0 ? 1 : -1;
    return boundary_sign * permutation_sign(ridge, sorted(ridge));
}

std::size_t position_of(std::span<const std::size_t> tuple, std::size_t value) {
    return static_cast<std::size_t>(std::find(tuple.begin(), tuple.end(), value) - tuple.begin());
}

struct RidgeIncidence {
    std::size_t facet;
    std::size_t omitted_vertex;
};

std::map<IndexSet, std::vector<RidgeIncidence>> ridge_map(const SimplicialComplex& complex) {
    std::map<IndexSet, std::vector<RidgeIncidence>> ridges;
    for (std::size_t f = 0; f < complex.facets.size(); ++f) {
        const IndexSet facet = sorted(complex.facets[f]);
        for (std::size_t k = 0; k < facet.size(); ++k) {
            ridges[without(facet, k)].push_back({f, facet[k]});
        }
    }
    return ridges;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

}  // namespace

void SimplicialComplex::validate(bool require_pure) const {
    if (facets.empty()) throw ValidationError("simplicial complex has no facets");
    std::set<IndexSet> seen;
    for (std::size_t f = 0; f < facets.size(); ++f) {
        const IndexSet s = sorted(facets[f]);
        if (s.empty()) throw ValidationError("facet " + std::to_string(f + 1) + " is empty");
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
            throw ValidationError("facet " + std::to_string(f + 1) + " repeats a vertex");
        }
        if (s.back() >= num_vertices) {
            throw ValidationError("facet " + std::to_string(f + 1) + " references vertex " +
                                  std::to_string(s.back() + 1) + " beyond " +
                                  std::to_string(num_vertices));
        }
        if (require_pure && s.size() != facets.front().size()) {
            throw ValidationError("complex is not pure: facet " + std::to_string(f + 1) + " has " +
                                  std::to_string(s.size()) + " vertices, facet 1 has " +
                                  std::to_string(facets.front().size()));
        }
        if (!seen.insert(s).second) {
            throw ValidationError("duplicate facet " + tuple_label(s));
        }
    }
}

std::size_t SimplicialComplex::dimension() const {
    return facets.empty() ? 0 : facets.front().size() - 1;
}

void SimplePolytope::validate() const {
    if (dimension == 0) throw ValidationError("simple polytope of dimension 0");
    if (vertices.empty()) throw ValidationError("simple polytope has no vertices");
    std::vector<bool> covered(num_facets, false);
    std::set<IndexSet> seen;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        const IndexSet& s = vertices[v];
        if (s.size() != dimension) {
            throw ValidationError("vertex " + std::to_string(v + 1) + " lies on " +
                                  std::to_string(s.size()) + " facets, expected " +
                                  std::to_string(dimension));
        }
        if (!std::is_sorted(s.begin(), s.end()) ||
            std::adjacent_find(s.begin(), s.end()) != s.end()) {
            throw ValidationError("vertex " + std::to_string(v + 1) +
                                  " must be a strictly increasing facet set");
        }
        if (s.back() >= num_facets) {
            throw ValidationError("vertex " + std::to_string(v + 1) + " references facet " +
                                  std::to_string(s.back() + 1) + " beyond " +
                                  std::to_string(num_facets));
        }
        if (!seen.insert(s).second) throw ValidationError("duplicate vertex " + tuple_label(s));
        for (std::size_t f : s) covered[f] = true;
    }
    for (std::size_t f = 0; f < num_facets; ++f) {
        if (!covered[f]) {
            throw ValidationError("facet " + std::to_string(f + 1) + " contains no vertex");
        }
    }
}

std::size_t SimplePolytope::find_vertex(std::span<const std::size_t> facets) const {
    IndexSet key(facets.begin(), facets.end());
    std::sort(key.begin(), key.end());
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (vertices[v] == key) return v;
    return npos;
}

SimplePolytope make_simple_polytope(std::size_t dimension, std::size_t num_facets,
                                    std::vector<IndexSet> vertices) {
    SimplePolytope p;
    p.dimension = dimension;
    p.num_facets = num_facets;
    p.vertices = std::move(vertices);
    for (auto& v : p.vertices) std::sort(v.begin(), v.end());
    p.validate();
    for (std::size_t a = 0; a < p.vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < p.vertices.size(); ++b) {
            IndexSet common;
            std::set_intersection(p.vertices[a].begin(), p.vertices[a].end(),
                                  p.vertices[b].begin(), p.vertices[b].end(),
                                  std::back_inserter(common));
            if (common.size() + 1 == dimension) p.edges.emplace_back(a, b);
        }
    }
    return p;
}

OrientationData OrientationData::reversed_copy() const {
    OrientationData out = *this;
    for (auto& t : out.tuples)
        if (t.size() >= 2) std::swap(t[0], t[1]);
    out.reversed = !reversed;
    return out;
}

int permutation_sign(std::span<const std::size_t> tuple, std::span<const std::size_t> reference) {
    if (tuple.size() != reference.size()) {
        throw ValidationError("tuples " + tuple_label(tuple) + " and " + tuple_label(reference) +
                              " differ in length");
    }
    std::vector<std::size_t> perm(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        const std::size_t p = position_of(reference, tuple[i]);
        if (p == reference.size()) {
            throw ValidationError("tuple " + tuple_label(tuple) + " is not a permutation of " +
                                  tuple_label(reference));
        }
        perm[i] = p;
    }
    std::vector<bool> visited(perm.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (visited[i]) continue;
        std::size_t length = 0;
        for (std::size_t j = i; !visited[j]; j = perm[j]) {
            visited[j] = true;
            ++length;
        }
        if (length % 2 == 0) sign = -sign;
    }
    const std::set<std::size_t> distinct(perm.begin(), perm.end());
    if (distinct.size() != perm.size()) {
        throw ValidationError("tuple " + tuple_label(tuple) + " repeats an entry");
    }
    return sign;
}

FVector f_vector(const SimplicialComplex& complex) {
    complex.validate(true);
    const std::size_t size = complex.facets.front().size();
    std::vector<std::set<IndexSet>> faces(size);
    for (const auto& facet : complex.facets) {
        const IndexSet s = sorted(facet);
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << size); ++mask) {
            IndexSet face;
            for (std::size_t k = 0; k < size; ++k)
                if (mask >> k & 1) face.push_back(s[k]);
            faces[face.size() - 1].insert(std::move(face));
        }
    }
    FVector f(size);
    for (std::size_t i = 0; i < size; ++i) f[i] = faces[i].size();
    return f;
}

std::vector<std::int64_t> h_vector(const FVector& f, std::size_t d) {
    if (f.size() != d) {
        throw ValidationError("h-vector needs f_0..f_" + std::to_string(d - 1) + " (" +
                              std::to_string(d) + " entries), got " + std::to_string(f.size()));
    }
    std::vector<std::int64_t> h(d + 1, 0);
    for (std::size_t k = 0; k <= d; ++k) {
        std::int64_t acc = 0;
        for (std::size_t i = 0; i <= k; ++i) {
            const auto face_count = static_cast<std::int64_t>(i == 0 ? 1 : f[i - 1]);
            const auto coeff = static_cast<std::int64_t>(binomial(d - i, k - i));
            acc += ((k - i) % 2 == 0 ? 1 : -1) * coeff * face_count;
        }
        h[k] = acc;
    }
    return h;
}

std::int64_t euler_characteristic(const FVector& f) {
    std::int64_t chi = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        chi += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(f[i]);
    }
    return chi;
}

PseudomanifoldReport pseudomanifold_check(const SimplicialComplex& complex) {
    complex.validate(true);
    PseudomanifoldReport report;
    for (const auto& [ridge, incidences] : ridge_map(complex)) {
        if (incidences.size() != 2) report.offending.push_back({ridge, incidences.size()});
    }
    report.passed = report.offending.empty();
    return report;
}

OrientationResult coherent_orientation(const SimplicialComplex& complex) {
    const auto pm = pseudomanifold_check(complex);
    if (!pm.passed) {
        throw ValidationError("not a pseudomanifold: ridge " + tuple_label(pm.offending.front().ridge) +
                              " lies in " + std::to_string(pm.offending.front().count) +
                              " facets");
    }
    const auto ridges = ridge_map(complex);
    const std::size_t n = complex.facets.size();
    std::vector<IndexSet> tuples(n);
    std::vector<std::size_t> parent(n, n);
    std::vector<bool> done(n, false);

    // neighbors[f] = (ridge, other facet)
    std::vector<std::vector<std::pair<const IndexSet*, std::size_t>>> neighbors(n);
    for (const auto& [ridge, inc] : ridges) {
        neighbors[inc[0].facet].emplace_back(&ridge, inc[1].facet);
        neighbors[inc[1].facet].emplace_back(&ridge, inc[0].facet);
    }

    auto ridge_sign = [&](std::size_t facet, const IndexSet& ridge) {
        const IndexSet& t = tuples[facet];
        for (std::size_t k = 0; k < t.size(); ++k) {
            if (!std::binary_search(ridge.begin(), ridge.end(), t[k])) return induced_sign(t, k);
        }
        throw IncidenceError("ridge is not in facet");
    };

    tuples[0] = complex.facets[0];
    done[0] = true;
    std::queue<std::size_t> queue;
    queue.push(0);
    while (!queue.empty()) {
        const std::size_t f = queue.front();
        queue.pop();
        for (const auto& [ridge, g] : neighbors[f]) {
            const int mine = ridge_sign(f, *ridge);
            if (!done[g]) {
                tuples[g] = complex.facets[g];
                if (ridge_sign(g, *ridge) == mine) std::swap(tuples[g][0], tuples[g][1]);
                done[g] = true;
                parent[g] = f;
                queue.push(g);
            } else if (ridge_sign(g, *ridge) == mine) {
                NonOrientableCertificate cert;
                cert.ridge = *ridge;
                cert.facet_a = f;
                cert.facet_b = g;
                std::vector<std::size_t> up_a{f};
                while (parent[up_a.back()] != n) up_a.push_back(parent[up_a.back()]);
                std::vector<std::size_t> up_b{g};
                while (std::find(up_a.begin(), up_a.end(), up_b.back()) == up_a.end()) {
                    up_b.push_back(parent[up_b.back()]);
                }
                const auto meet = std::find(up_a.begin(), up_a.end(), up_b.back());
                cert.cycle.assign(up_a.begin(), meet);
                cert.cycle.insert(cert.cycle.end(), up_b.rbegin(), up_b.rend());
                return cert;
            }
        }
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (!done[f]) {
            throw ValidationError("complex is not connected: facet " + std::to_string(f + 1) +
                                  " is unreachable from facet 1");
        }
    }
    return OrientationData{std::move(tuples), false};
}

bool is_coherent(const SimplicialComplex& complex, const OrientationData& orientation) {
    if (orientation.tuples.size() != complex.facets.size()) return false;
    for (std::size_t f = 0; f < complex.facets.size(); ++f) {
        if (sorted(orientation.tuples[f]) != sorted(complex.facets[f])) return false;
    }
    for (const auto& [ridge, inc] : ridge_map(complex)) {
        if (inc.size() != 2) return false;
        const auto& ta = orientation.tuples[inc[0].facet];
        const auto& tb = orientation.tuples[inc[1].facet];
        const int sa = induced_sign(ta, position_of(ta, inc[0].omitted_vertex));
        const int sb = induced_sign(tb, position_of(tb, inc[1].omitted_vertex));
        if (sa == sb) return false;
    }
    return true;
}

OrientationComparison compare_orientations(const OrientationData& computed,
                                           const OrientationData& reference) {
    std::map<IndexSet, const IndexSet*> by_set;
    for (const auto& t : computed.tuples) by_set[sorted(t)] = &t;
    OrientationComparison out;
    for (const auto& t : reference.tuples) {
        const auto it = by_set.find(sorted(t));
        if (it == by_set.end()) {
            throw ValidationError("reference tuple " + tuple_label(t) + " matches no computed vertex");
        }
        const int parity = permutation_sign(t, *it->second);
        out.parities.push_back(parity);
        (parity > 0 ? out.even : out.odd) += 1;
    }
    if (out.odd == 0) out.relation = OrientationComparison::Case::identical;
    else if (out.even == 0) out.relation = OrientationComparison::Case::global_reversal;
    return out;
}

std::string to_string(OrientationComparison::Case c) {
    switch (c) {
        case OrientationComparison::Case::identical: return "identical";
        case OrientationComparison::Case::global_reversal: return "global_reversal";
        default: return "inconsistent";
    }
}

SimplePolytope dualize(const SimplicialComplex& complex) {
    complex.validate(true);
    return make_simple_polytope(complex.facets.front().size(), complex.num_vertices,
                                complex.facets);
}

SimplicialComplex simplex_boundary(std::size_t dimension) {
    SimplicialComplex k;
    k.num_vertices = dimension + 1;
    for (std::size_t omit = dimension + 1; omit-- > 0;) {
        IndexSet facet;
        for (std::size_t v = 0; v <= dimension; ++v)
            if (v != omit) facet.push_back(v);
        k.facets.push_back(std::move(facet));
    }
    return k;
}

SimplicialComplex cross_polytope_boundary(std::size_t dimension) {
    // Vertex 2i is +e_i, vertex 2i+1 is -e_i.
    SimplicialComplex k;
    k.num_vertices = 2 * dimension;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dimension); ++mask) {
        IndexSet facet;
        for (std::size_t i = 0; i < dimension; ++i) facet.push_back(2 * i + (mask >> i & 1));
        k.facets.push_back(std::move(facet));
    }
    return k;
}

std::string tuple_label(std::span<const std::size_t> tuple) {
    const bool compact = std::all_of(tuple.begin(), tuple.end(), [](std::size_t i) { return i < 9; });
    std::string out;
    for (std::size_t k = 0; k < tuple.size(); ++k) {
        if (!compact && k > 0) out += ',';
        out += std::to_string(tuple[k] + 1);
    }
    return out;
}

}  // namespace qtoric
