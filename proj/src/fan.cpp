#include "rnc/fan.hpp"

#include "rnc/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>

namespace rnc::fan {

std::vector<CMSequence> cm_sequences(int d) {
    if (d < 1) throw domain_error("cm_sequences: d must be positive");
    std::vector<CMSequence> out;
    for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
        std::vector<int> idx{0};
        for (int j = 1; j < d; ++j)
            if (mask & (1u << (j - 1))) idx.push_back(j);
        idx.push_back(d);
        out.emplace_back(std::move(idx));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ConeSystem cone_system(const CMSequence& seq) {
    const int d = seq.d();
    ConeSystem sys;
    sys.d = d;
    for (const auto& e : gb::cm_gb_closed_form(seq)) {
        std::vector<Int> n(static_cast<size_t>(d) + 1);
        for (int i = 0; i <= d; ++i)
            n[static_cast<size_t>(i)] = e.lead[static_cast<size_t>(i)] - e.tail[static_cast<size_t>(i)];
        sys.ineqs.push_back({std::move(n), true});
    }
    return sys;
}

std::vector<CMSequence> cones_containing(const std::vector<Rat>& a, int d, bool closed) {
    if (static_cast<int>(a.size()) != d + 1) throw domain_error("cones_containing: arity mismatch");
    std::vector<CMSequence> hits;
    for (const CMSequence& i : cm_sequences(d))
        if (cone_system(i).contains(a, closed)) hits.push_back(i);
    return hits;
}

std::vector<CMSequence> cones_containing(const xy::ASequence& a, bool closed) {
    std::vector<Rat> q;
    for (const Int& v : a.entries()) q.emplace_back(v);
    return cones_containing(q, a.order(), closed);
}

namespace {

bool contains_pattern(const std::vector<int>& s, int p1, int p2, int p3) {
    // Does s contain a (p1 p2 p3)-pattern?  p is a permutation of {1,2,3}.
    const int n = static_cast<int>(s.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                int v[3] = {s[static_cast<size_t>(i)], s[static_cast<size_t>(j)], s[static_cast<size_t>(k)]};
                int rank[3];
                for (int t = 0; t < 3; ++t)
                    rank[t] = 1 + (v[t] > v[0]) + (v[t] > v[1]) + (v[t] > v[2]) - (v[t] > v[t]);
                if (rank[0] == p1 && rank[1] == p2 && rank[2] == p3) return true;
            }
    return false;
}

}  // namespace

long avoider_count(int d) {
    if (d < 1 || d > 8) throw domain_error("avoider_count: brute force supported for 1 <= d <= 8");
    std::vector<int> perm(static_cast<size_t>(d));
    std::iota(perm.begin(), perm.end(), 1);
    long count = 0;
    do {
        if (!contains_pattern(perm, 2, 3, 1) && !contains_pattern(perm, 3, 1, 2)) count++;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

Int bigcone_perm_count(int d) {
    if (d < 1) throw domain_error("bigcone_perm_count: d must be positive");
    return binomial(d, d / 2);
}

Int catalan_product(const CMSequence& seq) {
    const int d = seq.d();
    std::set<int> in_seq(seq.idx.begin(), seq.idx.end());
    std::vector<int> missing;
    for (int j = 1; j <= d; ++j)
        if (!in_seq.count(j)) missing.push_back(j);
    Int prod = 1;
    size_t start = 0;
    for (size_t t = 1; t <= missing.size(); ++t) {
        if (t == missing.size() || missing[t] != missing[t - 1] + 2) {
            prod *= catalan(static_cast<int>(t - start));
            start = t;
        }
    }
    return prod;
}

GroebnerCone groebner_cone(const ReducedGB& gb) {
    const int dim = gb.d + 1;
    std::vector<std::vector<Int>> normals;
    for (const auto& e : gb.elements) {
        std::vector<Int> n(static_cast<size_t>(dim));
        for (int i = 0; i < dim; ++i)
            n[static_cast<size_t>(i)] = e.lead[static_cast<size_t>(i)] - e.tail[static_cast<size_t>(i)];
        normals.push_back(std::move(n));
    }
    auto facets = cone::facet_reduce(std::move(normals), dim);
    auto interior = cone::strict_point(facets, dim);
    if (!interior)
        throw domain_error("groebner_cone: strict system infeasible (basis not reduced for a generic weight)");
    // Shift along (1,..,1) to a non-negative weight; the normals are
    // orthogonal to the lineality space, so membership is unchanged.
    Rat low = 0;
    for (const Rat& v : *interior) low = std::min(low, v);
    for (Rat& v : *interior) v -= low;

    GroebnerCone out;
    out.facets.d = gb.d;
    for (auto& n : facets) out.facets.ineqs.push_back({std::move(n), true});
    out.interior = std::move(*interior);
    return out;
}

int traversal_cap() {
    if (const char* env = std::getenv("RNC_MAX_D")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 6;
}

namespace {

// Deterministic generic start weight: try fixed candidates, then a seeded
// linear congruential stream, until the basis has no weight ties.
bool all_strict(const ReducedGB& g) {
    for (const auto& e : g.elements)
        if (g.order.weight_cmp(e.lead, e.tail) == 0) return false;
    return true;
}

ReducedGB generic_start(int d) {
    std::vector<std::vector<Rat>> candidates;
    std::vector<Rat> pow2{0};
    for (int i = 1; i <= d; ++i) pow2.push_back(Rat((Int(1) << i) - 1));
    candidates.push_back(pow2);
    unsigned long long state = 0x9e3779b97f4a7c15ull;
    for (int tries = 0; tries < 50; ++tries) {
        if (tries >= static_cast<int>(candidates.size())) {
            std::vector<Rat> w{0};
            Int acc = 0;
            for (int i = 1; i <= d; ++i) {
                state = state * 6364136223846793005ull + 1442695040888963407ull;
                acc += Int(static_cast<unsigned long>((state >> 33) % 100000) + 1);
                w.push_back(Rat(acc));
            }
            candidates.push_back(w);
        }
        gb::TermOrder order{candidates[static_cast<size_t>(tries)], gb::Tiebreak::Lex};
        ReducedGB g = gb::buchberger(d, order);
        if (all_strict(g)) return g;
    }
    throw internal_error("traverse_fan: no generic start weight found");
}

std::vector<Rat> weight_minus_eps_normal(const std::vector<Rat>& wf, const std::vector<Int>& n, const Rat& eps) {
    std::vector<Rat> w = wf;
    for (size_t i = 0; i < w.size(); ++i) w[i] -= eps * Rat(n[i]);
    Rat low = 0;
    for (const Rat& v : w) low = std::min(low, v);
    for (Rat& v : w) v -= low;
    return w;
}

bool closed_cone_contains(const ReducedGB& g, const std::vector<Rat>& w) {
    for (const auto& e : g.elements) {
        Rat s = 0;
        for (size_t i = 0; i < w.size(); ++i) s += Rat(e.lead[i] - e.tail[i]) * w[i];
        if (s < 0) return false;
    }
    return true;
}

int cell_depth(const MonomialIdeal& ideal, const std::vector<Rat>& interior) {
    auto comps = tpoly::ideal_components(ideal);
    if (comps.saturation != ideal) return 0;
    xy::RationalWeight w{interior};
    return xy::is_gr_cm(xy::normalize(w)) ? 2 : 1;
}

}  // namespace

std::vector<FanCell> traverse_fan(int d) {
    if (d < 1) throw domain_error("traverse_fan: d must be positive");
    if (d > traversal_cap())
        throw domain_error("traverse_fan: d=" + std::to_string(d) + " exceeds the cap (" +
                           std::to_string(traversal_cap()) + "); set RNC_MAX_D to override");
    if (d == 1) return {};  // P = 0: no cones to enumerate

    std::map<MonomialIdeal, FanCell> cells;
    std::deque<ReducedGB> queue{generic_start(d)};
    while (!queue.empty()) {
        ReducedGB g = std::move(queue.front());
        queue.pop_front();
        MonomialIdeal key = g.initial_ideal();
        if (cells.count(key)) continue;

        GroebnerCone gc = groebner_cone(g);
        FanCell cell{g, gc.facets, gc.interior, key, 0};
        cell.depth = cell_depth(key, gc.interior);
        cells.emplace(std::move(key), std::move(cell));

        std::vector<std::vector<Int>> normals;
        for (const auto& q : gc.facets.ineqs) normals.push_back(q.n);
        for (size_t f = 0; f < normals.size(); ++f) {
            auto wf = cone::facet_interior_point(normals, f, d + 1);
            if (!wf) throw internal_error("traverse_fan: facet has no relative-interior point");
            {
                Rat low = 0;
                for (const Rat& v : *wf) low = std::min(low, v);
                for (Rat& v : *wf) v -= low;
            }
            // Cross the wall: step by eps along -normal, keeping every other
            // facet of the current cone strictly positive, then verify the
            // far basis really borders this wall; halve eps until it does.
            Rat eps = 1;
            for (const auto& m : normals) {
                if (&m == &normals[f]) continue;
                Rat mn = 0, slack = 0;
                for (size_t i = 0; i < m.size(); ++i) {
                    mn += Rat(m[i]) * Rat(normals[f][i]);
                    slack += Rat(m[i]) * (*wf)[i];
                }
                if (mn > 0) eps = std::min(eps, slack / (2 * mn));
            }
            bool flipped = false;
            for (int attempt = 0; attempt < 80 && !flipped; ++attempt, eps /= 2) {
                std::vector<Rat> w = weight_minus_eps_normal(*wf, normals[f], eps);
                ReducedGB far = gb::buchberger(d, {w, gb::Tiebreak::Lex});
                if (!all_strict(far)) continue;
                if (far.initial_ideal() == g.initial_ideal()) continue;
                if (!closed_cone_contains(far, *wf)) continue;
                queue.push_back(std::move(far));
                flipped = true;
            }
            if (!flipped) throw internal_error("traverse_fan: flip failed across a facet");
        }
    }

    std::vector<FanCell> out;
    out.reserve(cells.size());
    for (auto& [k, c] : cells) out.push_back(std::move(c));
    return out;  // map iteration is already canonical (sorted by initial ideal)
}

std::map<int, int> depth_census(int d) {
    std::map<int, int> census;
    for (const FanCell& c : traverse_fan(d)) census[c.depth]++;
    return census;
}

bool BigCone::member(const xy::ASequence& a) const { return system.contains(a.entries(), true); }
bool BigCone::member(const std::vector<Rat>& a) const { return system.contains(a, true); }

BigCone big_cone(int d) {
    if (d < 1) throw domain_error("big_cone: d must be positive");
    BigCone out;
    out.system.d = d;
    for (int j = 1; j + 2 <= d; ++j) {
        // b_j <= b_{j+2}  i.e.  a_{j-1} + a_{j+2} - a_j - a_{j+1} >= 0
        std::vector<Int> n(static_cast<size_t>(d) + 1, 0);
        n[static_cast<size_t>(j) - 1] += 1;
        n[static_cast<size_t>(j) + 2] += 1;
        n[static_cast<size_t>(j)] -= 1;
        n[static_cast<size_t>(j) + 1] -= 1;
        out.system.ineqs.push_back({std::move(n), false});
    }
    out.sequence_count = 0;
    for (const CMSequence& i : cm_sequences(d)) {
        bool ok = true;
        for (size_t t = 1; t < i.idx.size(); ++t)
            if (i.idx[t] - i.idx[t - 1] > 2) ok = false;
        if (ok) out.sequence_count += 1;
    }
    if (out.sequence_count != fibonacci_f(d))
        throw internal_error("big_cone: gap-at-most-2 count is not Fibonacci");
    return out;
}

}  // namespace rnc::fan
