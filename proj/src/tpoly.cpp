#include "rnc/tpoly.hpp"

#include "rnc/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace rnc::tpoly {

int total_degree(const Exp& e) { return std::accumulate(e.begin(), e.end(), 0); }

long second_degree(const Exp& e) {
    long s = 0;
    for (size_t i = 0; i < e.size(); ++i) s += static_cast<long>(i) * e[i];
    return s;
}

bool divides(const Exp& a, const Exp& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exp mono_lcm(const Exp& a, const Exp& b) {
    Exp c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
    return c;
}

std::string mono_str(const Exp& e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "t" + std::to_string(i);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

Exp parse_monomial(const std::string& s, int nvars) {
    Exp e(static_cast<size_t>(nvars), 0);
    if (s == "1") return e;
    for (const auto& factor : split(s, '*')) {
        auto caret = factor.find('^');
        std::string var = factor.substr(0, caret);
        int pow = 1;
        if (caret != std::string::npos) pow = std::stoi(factor.substr(caret + 1));
        if (var.size() < 2 || var[0] != 't' || pow < 1)
            throw domain_error("bad monomial factor: '" + factor + "'");
        int idx = std::stoi(var.substr(1));
        if (idx < 0 || idx >= nvars) throw domain_error("variable index out of range in '" + factor + "'");
        e[static_cast<size_t>(idx)] += pow;
    }
    return e;
}

std::string binomial_str(const PureBinomial& b) { return mono_str(b.lead) + " - " + mono_str(b.tail); }

std::vector<PureBinomial> rnc_generators(int d) {
    if (d < 1) throw domain_error("rnc_generators: d must be positive");
    std::vector<PureBinomial> gens;
    for (int v = 1; v < d; ++v)
        for (int r = v + 1; r <= d; ++r) {
            Exp lead(static_cast<size_t>(d) + 1, 0), tail(static_cast<size_t>(d) + 1, 0);
            lead[static_cast<size_t>(v) - 1]++;
            lead[static_cast<size_t>(r)]++;
            tail[static_cast<size_t>(v)]++;
            tail[static_cast<size_t>(r) - 1]++;
            gens.push_back({std::move(lead), std::move(tail)});
        }
    return gens;
}

namespace {

// t^a before t^b: lower degree first, then descending reverse-lexicographic
// (t0^2, t0*t1, t1^2, t0*t2, ...).
bool canonical_mono_less(const Exp& a, const Exp& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

std::vector<Exp> minimalize(std::vector<Exp> gens) {
    std::sort(gens.begin(), gens.end(), canonical_mono_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exp> out;
    for (const Exp& g : gens) {
        bool redundant = false;
        for (const Exp& kept : out)
            if (divides(kept, g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(g);
    }
    return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Exp> gens) : nvars_(nvars) {
    for (const Exp& g : gens) {
        if (static_cast<int>(g.size()) != nvars) throw domain_error("generator arity mismatch");
        for (int e : g)
            if (e < 0) throw domain_error("negative exponent");
    }
    gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::parse(const std::string& semicolon_list, int nvars) {
    std::vector<Exp> gens;
    for (const auto& tok : split(semicolon_list, ';'))
        if (!tok.empty()) gens.push_back(parse_monomial(tok, nvars));
    return MonomialIdeal(nvars, std::move(gens));
}

bool MonomialIdeal::contains(const Exp& m) const {
    for (const Exp& g : gens_)
        if (divides(g, m)) return true;
    return false;
}

bool MonomialIdeal::contains_ideal(const MonomialIdeal& other) const {
    for (const Exp& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

MonomialIdeal MonomialIdeal::plus(const Exp& extra_gen) const {
    std::vector<Exp> gens = gens_;
    gens.push_back(extra_gen);
    return MonomialIdeal(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::colon_var_power_inf(int var) const {
    // A pure power of t_var colons to 1, i.e. the unit ideal.
    std::vector<Exp> gens = gens_;
    for (Exp& g : gens) g[static_cast<size_t>(var)] = 0;
    return MonomialIdeal(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
    if (is_zero() || other.is_zero()) return MonomialIdeal(nvars_);
    std::vector<Exp> gens;
    for (const Exp& g : gens_)
        for (const Exp& h : other.gens_) gens.push_back(mono_lcm(g, h));
    return MonomialIdeal(nvars_, std::move(gens));
}

std::string MonomialIdeal::str() const {
    std::string s;
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ";";
        s += mono_str(gens_[i]);
    }
    return s;
}

StdMonomials standard_monomials(const MonomialIdeal& I, int k) {
    if (k < 0) throw domain_error("standard_monomials: k must be non-negative");
    const int n = I.nvars();
    StdMonomials out;
    out.msum.assign(static_cast<size_t>(n), 0);

    Exp cur(static_cast<size_t>(n), 0);
    std::function<void(int, int)> dfs = [&](int var, int remaining) {
        if (I.contains(cur)) return;  // generators in later variables cannot divide a prefix
        if (var == n) {
            if (remaining == 0) {
                out.monomials.push_back(cur);
                for (int i = 0; i < n; ++i) out.msum[static_cast<size_t>(i)] += cur[static_cast<size_t>(i)];
            }
            return;
        }
        int lo = (var == n - 1) ? remaining : 0;
        for (int e = lo; e <= remaining; ++e) {
            cur[static_cast<size_t>(var)] = e;
            dfs(var + 1, remaining - e);
        }
        cur[static_cast<size_t>(var)] = 0;
    };
    dfs(0, k);

    // Fiber check: one standard monomial per (0,1,..,d)-degree in [0, kd].
    const long dmax = static_cast<long>(k) * (n - 1);
    std::vector<int> count(static_cast<size_t>(dmax) + 1, 0);
    for (const Exp& m : out.monomials) {
        long v = second_degree(m);
        if (v < 0 || v > dmax) throw internal_error("standard_monomials: bidegree out of range");
        count[static_cast<size_t>(v)]++;
    }
    for (long v = 0; v <= dmax; ++v)
        if (count[static_cast<size_t>(v)] != 1)
            throw fiber_violation("degree " + std::to_string(k) + " bidegree " + std::to_string(v) + " has " +
                                  std::to_string(count[static_cast<size_t>(v)]) + " standard monomials");
    std::sort(out.monomials.begin(), out.monomials.end(), canonical_mono_less);
    return out;
}

namespace {

int krull_dim(const MonomialIdeal& I) {
    const int n = I.nvars();
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (const Exp& g : I.gens()) {
            bool inside = true;
            for (int i = 0; i < n && inside; ++i)
                if (g[static_cast<size_t>(i)] > 0 && !(mask & (1u << i))) inside = false;
            if (inside) {
                ok = false;
                break;
            }
        }
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

bool is_irreducible(const MonomialIdeal& I) {
    for (const Exp& g : I.gens()) {
        int support = 0;
        for (int e : g)
            if (e > 0) support++;
        if (support > 1) return false;
    }
    return true;
}

void decompose_rec(const MonomialIdeal& I, std::set<MonomialIdeal>& out,
                   std::map<MonomialIdeal, bool>& seen) {
    if (seen.count(I)) return;
    seen[I] = true;
    if (is_irreducible(I)) {
        out.insert(I);
        return;
    }
    // Split on the first mixed generator: I = (I + t_i^e) \cap (I + rest).
    for (const Exp& g : I.gens()) {
        int var = -1;
        for (size_t i = 0; i < g.size(); ++i)
            if (g[i] > 0) {
                if (var >= 0) {
                    Exp pure(g.size(), 0);
                    pure[static_cast<size_t>(var)] = g[static_cast<size_t>(var)];
                    Exp rest = g;
                    rest[static_cast<size_t>(var)] = 0;
                    decompose_rec(I.plus(pure), out, seen);
                    decompose_rec(I.plus(rest), out, seen);
                    return;
                }
                var = static_cast<int>(i);
            }
    }
}

int support_size(const MonomialIdeal& Q) {
    std::set<int> sup;
    for (const Exp& g : Q.gens())
        for (size_t i = 0; i < g.size(); ++i)
            if (g[i] > 0) sup.insert(static_cast<int>(i));
    return static_cast<int>(sup.size());
}

}  // namespace

Components ideal_components(const MonomialIdeal& I) {
    Components c{MonomialIdeal(I.nvars()), MonomialIdeal(I.nvars()), MonomialIdeal(I.nvars()), 0, {}};
    c.dim = krull_dim(I);

    std::vector<Exp> rad;
    for (Exp g : I.gens()) {
        for (int& e : g) e = std::min(e, 1);
        rad.push_back(std::move(g));
    }
    c.radical = MonomialIdeal(I.nvars(), std::move(rad));

    if (I.is_zero()) {
        c.saturation = I;
        c.top = I;
        return c;
    }

    MonomialIdeal sat = I.colon_var_power_inf(0);
    for (int v = 1; v < I.nvars(); ++v) sat = sat.intersect(I.colon_var_power_inf(v));
    c.saturation = sat;

    std::set<MonomialIdeal> comps;
    std::map<MonomialIdeal, bool> seen;
    decompose_rec(I, comps, seen);
    std::vector<MonomialIdeal> list(comps.begin(), comps.end());
    // Drop components containing the intersection of the others.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < list.size(); ++i) {
            MonomialIdeal rest(I.nvars());
            bool first = true;
            for (size_t j = 0; j < list.size(); ++j) {
                if (j == i) continue;
                rest = first ? list[j] : rest.intersect(list[j]);
                first = false;
            }
            if (!first && list[i].contains_ideal(rest)) {
                list.erase(list.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    c.irreducible = list;

    const int top_support = I.nvars() - c.dim;
    MonomialIdeal top(I.nvars());
    bool first = true;
    for (const MonomialIdeal& q : list) {
        if (support_size(q) != top_support) continue;
        top = first ? q : top.intersect(q);
        first = false;
    }
    c.top = top;
    return c;
}

namespace {

bool edges_form_tree(const std::vector<int>& V, const std::vector<std::pair<int, int>>& edges) {
    if (V.size() < 2) return false;  // a <2-vertex graph cannot carry a 2-dimensional quotient
    if (edges.size() + 1 != V.size()) return false;
    std::map<int, int> comp;
    for (int v : V) comp[v] = v;
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (auto [u, v] : edges) {
        if (!comp.count(u) || !comp.count(v)) return false;
        int ru = find(u), rv = find(v);
        if (ru == rv) return false;  // cycle
        comp[ru] = rv;
    }
    int root = find(V[0]);
    for (int v : V)
        if (find(v) != root) return false;
    return true;
}

}  // namespace

MonomialIdeal igphi_build(const StructureData& s) {
    if (!edges_form_tree(s.V, s.edges)) throw domain_error("igphi_build: edges do not form a tree on V");
    std::set<int> vset(s.V.begin(), s.V.end());
    std::set<std::pair<int, int>> eset(s.edges.begin(), s.edges.end());
    std::vector<int> Q;
    for (int i = 0; i < s.nvars; ++i)
        if (!vset.count(i)) Q.push_back(i);
    for (int q : Q) {
        auto it = s.phi.find(q);
        if (it == s.phi.end()) throw domain_error("igphi_build: phi undefined on t" + std::to_string(q));
        if (!eset.count(it->second)) throw domain_error("igphi_build: phi maps outside the edge set");
    }

    std::vector<Exp> gens;
    auto quad = [&](int i, int j) {
        Exp e(static_cast<size_t>(s.nvars), 0);
        e[static_cast<size_t>(i)]++;
        e[static_cast<size_t>(j)]++;
        return e;
    };
    for (size_t i = 0; i < s.V.size(); ++i)
        for (size_t j = i + 1; j < s.V.size(); ++j)
            if (!eset.count({s.V[i], s.V[j]})) gens.push_back(quad(s.V[i], s.V[j]));
    for (size_t i = 0; i < Q.size(); ++i)
        for (size_t j = i; j < Q.size(); ++j) gens.push_back(quad(Q[i], Q[j]));
    for (int q : Q) {
        auto [eu, ev] = s.phi.at(q);
        for (int v : s.V)
            if (v != eu && v != ev) gens.push_back(quad(q, v));
    }
    return MonomialIdeal(s.nvars, std::move(gens));
}

std::string to_string(RecognizeFailure f) {
    switch (f) {
        case RecognizeFailure::NotQuadratic: return "not-quadratic";
        case RecognizeFailure::GraphNotTree: return "graph-not-tree";
        case RecognizeFailure::PhiUndefined: return "phi-undefined";
        case RecognizeFailure::ReconstructionMismatch: return "reconstruction-mismatch";
    }
    return "?";
}

RecognizeResult igphi_recognize(const MonomialIdeal& I) {
    RecognizeResult res;
    auto fail = [&](RecognizeFailure f, std::string detail) {
        res.failure = f;
        res.detail = std::move(detail);
        return res;
    };
    const int n = I.nvars();
    for (const Exp& g : I.gens())
        if (total_degree(g) != 2) return fail(RecognizeFailure::NotQuadratic, "generator " + mono_str(g));

    StructureData s;
    s.nvars = n;
    auto quad = [&](int i, int j) {
        Exp e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i)]++;
        e[static_cast<size_t>(j)]++;
        return e;
    };
    std::vector<int> Q;
    for (int i = 0; i < n; ++i) {
        if (I.contains(quad(i, i)))
            Q.push_back(i);
        else
            s.V.push_back(i);
    }
    for (size_t i = 0; i < s.V.size(); ++i)
        for (size_t j = i + 1; j < s.V.size(); ++j)
            if (!I.contains(quad(s.V[i], s.V[j]))) s.edges.push_back({s.V[i], s.V[j]});
    if (!edges_form_tree(s.V, s.edges))
        return fail(RecognizeFailure::GraphNotTree, "graph on " + std::to_string(s.V.size()) + " vertices with " +
                                                        std::to_string(s.edges.size()) + " edges");
    std::set<std::pair<int, int>> eset(s.edges.begin(), s.edges.end());
    for (int q : Q) {
        std::vector<int> nonneighbors;
        for (int v : s.V)
            if (!I.contains(quad(q, v))) nonneighbors.push_back(v);
        if (nonneighbors.size() != 2 || !eset.count({nonneighbors[0], nonneighbors[1]}))
            return fail(RecognizeFailure::PhiUndefined, "t" + std::to_string(q) + " has " +
                                                            std::to_string(nonneighbors.size()) +
                                                            " V-non-neighbors");
        s.phi[q] = {nonneighbors[0], nonneighbors[1]};
    }
    if (igphi_build(s) != I) return fail(RecognizeFailure::ReconstructionMismatch, "rebuilt ideal differs");
    res.structure = std::move(s);
    return res;
}

}  // namespace rnc::tpoly
