#include "rnc/groebner.hpp"

#include "rnc/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace rnc::gb {

CMSequence::CMSequence(std::vector<int> v) : idx(std::move(v)) {
    if (idx.empty() || idx[0] != 0) throw domain_error("gap sequence must start at 0");
    for (size_t i = 1; i < idx.size(); ++i)
        if (idx[i] <= idx[i - 1]) throw domain_error("gap sequence must be strictly increasing");
    if (idx.size() < 2) throw domain_error("gap sequence must end at d >= 1");
}

std::string CMSequence::str() const {
    std::string s;
    for (size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(idx[i]);
    }
    return s;
}

int TermOrder::weight_cmp(const Exp& a, const Exp& b) const {
    Rat wa = 0, wb = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i]) wa += Rat(a[i]) * weight[i];
        if (b[i]) wb += Rat(b[i]) * weight[i];
    }
    return wa < wb ? -1 : (wa > wb ? 1 : 0);
}

int TermOrder::cmp(const Exp& a, const Exp& b) const {
    int w = weight_cmp(a, b);
    if (w != 0) return w;
    if (tiebreak == Tiebreak::Lex) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
    }
    // revlex: last differing index, smaller exponent wins
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
}

MonomialIdeal ReducedGB::initial_ideal() const {
    std::vector<Exp> leads;
    leads.reserve(elements.size());
    for (const auto& e : elements) leads.push_back(e.lead);
    return MonomialIdeal(d + 1, std::move(leads));
}

namespace {

using tpoly::divides;
using tpoly::mono_lcm;
using tpoly::total_degree;

// Orient so the marked lead is the larger term; equal terms vanish.
std::optional<Generator> orient(Generator g, const TermOrder& order) {
    if (!g.tail) return g;
    int c = order.cmp(g.lead, *g.tail);
    if (c == 0) return std::nullopt;
    if (c < 0) std::swap(g.lead, *g.tail);
    return g;
}

Exp translate(const Exp& m, const Exp& from, const Exp& to) {
    Exp r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = m[i] - from[i] + to[i];
    return r;
}

// Normal form against the current basis; rewrites the lead first.  Returns
// nullopt when the element reduces to zero.
std::optional<Generator> reduce(Generator g, const std::vector<Generator>& basis, const TermOrder& order) {
    for (;;) {
        bool rewritten = false;
        for (const Generator& h : basis) {
            if (divides(h.lead, g.lead)) {
                if (h.tail) {
                    g.lead = translate(g.lead, h.lead, *h.tail);
                    if (g.tail && g.lead == *g.tail) return std::nullopt;
                    auto o = orient(std::move(g), order);
                    if (!o) return std::nullopt;
                    g = std::move(*o);
                } else {
                    // lead term killed by a monomial
                    if (!g.tail) return std::nullopt;
                    g.lead = std::move(*g.tail);
                    g.tail.reset();
                }
                rewritten = true;
                break;
            }
            if (g.tail && divides(h.lead, *g.tail)) {
                if (h.tail) {
                    *g.tail = translate(*g.tail, h.lead, *h.tail);
                    if (g.lead == *g.tail) return std::nullopt;
                    auto o = orient(std::move(g), order);
                    if (!o) return std::nullopt;
                    g = std::move(*o);
                } else {
                    g.tail.reset();
                }
                rewritten = true;
                break;
            }
        }
        if (!rewritten) return g;
    }
}

std::optional<Generator> s_pair(const Generator& f, const Generator& g, const TermOrder& order) {
    Exp l = mono_lcm(f.lead, g.lead);
    std::optional<Exp> a, b;
    if (f.tail) a = translate(l, f.lead, *f.tail);
    if (g.tail) b = translate(l, g.lead, *g.tail);
    if (a && b) {
        if (*a == *b) return std::nullopt;
        return orient(Generator{std::move(*a), std::move(*b)}, order);
    }
    if (a) return Generator{std::move(*a), std::nullopt};
    if (b) return Generator{std::move(*b), std::nullopt};
    return std::nullopt;
}

bool canonical_gen_less(const Generator& x, const Generator& y) {
    int dx = total_degree(x.lead), dy = total_degree(y.lead);
    if (dx != dy) return dx < dy;
    if (x.lead != y.lead) {
        for (size_t i = x.lead.size(); i-- > 0;)
            if (x.lead[i] != y.lead[i]) return x.lead[i] < y.lead[i];
    }
    Exp tx = x.tail ? *x.tail : Exp(x.lead.size(), 0);
    Exp ty = y.tail ? *y.tail : Exp(y.lead.size(), 0);
    return tx < ty;
}

}  // namespace

std::vector<Generator> reduce_basis(std::vector<Generator> raw, const TermOrder& order, int nvars) {
    std::vector<Generator> basis;
    for (auto& g : raw) {
        auto o = orient(std::move(g), order);
        if (o) basis.push_back(std::move(*o));
    }

    // S-pair queue ordered by (lcm degree, lcm, indices) for determinism.
    using Key = std::tuple<int, Exp, size_t, size_t>;
    std::map<Key, std::pair<size_t, size_t>> queue;
    auto push_pairs = [&](size_t upto) {
        for (size_t i = 0; i < upto; ++i) {
            Exp l = mono_lcm(basis[i].lead, basis[upto].lead);
            queue[{total_degree(l), l, i, upto}] = {i, upto};
        }
    };
    for (size_t j = 1; j < basis.size(); ++j) push_pairs(j);

    while (!queue.empty()) {
        auto [i, j] = queue.begin()->second;
        queue.erase(queue.begin());
        auto s = s_pair(basis[i], basis[j], order);
        if (!s) continue;
        auto r = reduce(std::move(*s), basis, order);
        if (!r) continue;
        basis.push_back(std::move(*r));
        push_pairs(basis.size() - 1);
    }

    // Minimalize: drop elements whose lead is divisible by another lead.
    std::vector<Generator> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool drop = false;
        for (size_t j = 0; j < basis.size() && !drop; ++j) {
            if (i == j) continue;
            if (divides(basis[j].lead, basis[i].lead) && basis[j].lead != basis[i].lead) drop = true;
            if (basis[j].lead == basis[i].lead && j < i) drop = true;
        }
        if (!drop) minimal.push_back(basis[i]);
    }

    // Tail-reduce against the other leads.
    std::vector<Generator> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        Generator g = minimal[i];
        for (;;) {
            bool rewritten = false;
            if (g.tail) {
                for (size_t j = 0; j < minimal.size(); ++j) {
                    if (j == i) continue;
                    if (divides(minimal[j].lead, *g.tail)) {
                        if (minimal[j].tail) {
                            *g.tail = translate(*g.tail, minimal[j].lead, *minimal[j].tail);
                        } else {
                            g.tail.reset();
                        }
                        rewritten = true;
                        break;
                    }
                }
            }
            if (!rewritten) break;
        }
        if (g.tail && order.cmp(g.lead, *g.tail) <= 0)
            throw internal_error("reduce_basis: tail reduction broke the marking");
        reduced.push_back(std::move(g));
    }
    std::sort(reduced.begin(), reduced.end(), canonical_gen_less);
    (void)nvars;
    return reduced;
}

ReducedGB buchberger(int d, const TermOrder& order) {
    if (d < 1) throw domain_error("buchberger: d must be positive");
    if (static_cast<int>(order.weight.size()) != d + 1) throw domain_error("buchberger: weight arity mismatch");
    std::vector<Generator> gens;
    for (auto& b : rnc_generators(d)) gens.push_back({std::move(b.lead), std::move(b.tail)});
    auto basis = reduce_basis(std::move(gens), order, d + 1);

    ReducedGB out;
    out.d = d;
    out.order = order;
    for (auto& g : basis) {
        if (!g.tail) throw internal_error("buchberger: non-pure-difference element in a basis of P");
        out.elements.push_back({std::move(g.lead), std::move(*g.tail)});
    }
    // Postcondition: the initial ideal has dk+1 standard monomials in low degrees.
    MonomialIdeal in = out.initial_ideal();
    for (int k = 1; k <= 2; ++k) {
        auto sm = tpoly::standard_monomials(in, k);
        if (static_cast<int>(sm.monomials.size()) != d * k + 1)
            throw internal_error("buchberger: initial ideal fails the dk+1 count");
    }
    return out;
}

InitialForms initial_forms(int d, const std::vector<Rat>& w, Tiebreak tiebreak) {
    TermOrder order{w, tiebreak};
    ReducedGB g = buchberger(d, order);
    InitialForms out;
    for (const auto& e : g.elements) {
        int c = order.weight_cmp(e.lead, e.tail);
        if (c > 0)
            out.monomials.push_back(e.lead);
        else if (c == 0)
            out.binomials.push_back(e);
        else
            throw internal_error("initial_forms: marked lead below tail");
    }
    return out;
}

std::vector<int> canonical_permutation(const CMSequence& i) {
    std::vector<int> b;
    for (size_t j = 1; j < i.idx.size(); ++j)
        for (int v = i.idx[j]; v > i.idx[j - 1]; --v) b.push_back(v);
    return b;
}

std::vector<Rat> canonical_weight(const CMSequence& i) {
    std::vector<int> b = canonical_permutation(i);
    std::vector<Rat> a{0};
    Rat acc = 0;
    for (int bi : b) {
        acc += bi;
        a.push_back(acc);
    }
    return a;
}

std::vector<PureBinomial> cm_gb_closed_form(const CMSequence& seq) {
    const int d = seq.d();
    if (d < 1) throw domain_error("cm_gb_closed_form: d must be positive");
    // Partner pair {p, m-p} of a total second-degree m: p = i_v on
    // [2 i_v, i_v + i_{v+1}], p = i_{v+1} on [i_v + i_{v+1}, 2 i_{v+1}].
    auto partner = [&](int m) -> std::pair<int, int> {
        for (size_t v = 0; v + 1 < seq.idx.size(); ++v) {
            int lo = seq.idx[v], hi = seq.idx[v + 1];
            if (2 * lo <= m && m <= lo + hi) return {std::min(lo, m - lo), std::max(lo, m - lo)};
            if (lo + hi <= m && m <= 2 * hi) return {std::min(hi, m - hi), std::max(hi, m - hi)};
        }
        throw internal_error("cm_gb_closed_form: uncovered degree");
    };

    std::vector<PureBinomial> elements;
    for (int s = 0; s <= d; ++s)
        for (int r = s; r <= d; ++r) {
            auto [p, q] = partner(s + r);
            if (s == p && r == q) continue;
            Exp lead(static_cast<size_t>(d) + 1, 0), tail(static_cast<size_t>(d) + 1, 0);
            lead[static_cast<size_t>(s)]++;
            lead[static_cast<size_t>(r)]++;
            tail[static_cast<size_t>(p)]++;
            tail[static_cast<size_t>(q)]++;
            elements.push_back({std::move(lead), std::move(tail)});
        }
    std::sort(elements.begin(), elements.end(), [](const PureBinomial& x, const PureBinomial& y) {
        return canonical_gen_less({x.lead, x.tail}, {y.lead, y.tail});
    });
    return elements;
}

ReducedGB cm_reduced_gb(const CMSequence& seq) {
    ReducedGB out;
    out.d = seq.d();
    out.order = TermOrder{canonical_weight(seq), Tiebreak::Lex};
    out.elements = cm_gb_closed_form(seq);

    // Cross-check against the engine at the canonical-permutation weight.
    ReducedGB direct = buchberger(out.d, out.order);
    if (direct.elements != out.elements)
        throw internal_error("cm_reduced_gb: closed form disagrees with buchberger for i=" + seq.str());
    return out;
}

}  // namespace rnc::gb
