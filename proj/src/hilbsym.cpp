#include "rnc/hilbsym.hpp"

#include "rnc/errors.hpp"

#include <algorithm>

namespace rnc::hilb {

Int LinearForm::eval(const std::vector<Int>& a) const {
    Int s = 0;
    for (size_t i = 0; i < c.size(); ++i) s += c[i] * a[i];
    return s;
}

Rat LinearForm::eval(const std::vector<Rat>& a) const {
    Rat s = 0;
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) s += Rat(c[i]) * a[i];
    return s;
}

bool LinearForm::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Int& v) { return v == 0; });
}

std::string LinearForm::str() const {
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (s.empty()) {
            if (c[i] == -1)
                s += "-";
            else if (c[i] != 1)
                s += c[i].get_str();
        } else {
            s += c[i] > 0 ? " + " : " - ";
            Int abs = c[i] > 0 ? c[i] : Int(-c[i]);
            if (abs != 1) s += abs.get_str();
        }
        s += "A" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
}

Rat SymbolicHilbert::q1_eval(const std::vector<Rat>& a, int k) const {
    return e0.eval(a) * Rat(binomial(k + 2, 2)) - e1.eval(a) * Rat(k + 1) + e2.eval(a);
}

Int SymbolicHilbert::q1_eval(const std::vector<Int>& a, int k) const {
    return e0.eval(a) * binomial(k + 2, 2) - e1.eval(a) * (k + 1) + e2.eval(a);
}

LinearForm e0_from_radical(const MonomialIdeal& I) {
    const int n = I.nvars();
    // Indices whose variable has no pure power in I, i.e. survives in the radical.
    std::vector<int> idx;
    for (int i = 0; i < n; ++i) {
        bool pure_power = false;
        for (const auto& g : I.gens()) {
            if (g[static_cast<size_t>(i)] == 0) continue;
            if (tpoly::total_degree(g) == g[static_cast<size_t>(i)]) pure_power = true;
        }
        if (!pure_power) idx.push_back(i);
    }
    if (idx.size() < 2 || idx.front() != 0 || idx.back() != n - 1)
        throw domain_error("e0_from_radical: ideal is not an initial-ideal candidate");
    LinearForm f{std::vector<Int>(static_cast<size_t>(n), 0)};
    const size_t k = idx.size() - 1;
    f.c[static_cast<size_t>(idx[0])] += idx[1] - idx[0];
    for (size_t t = 1; t < k; ++t) f.c[static_cast<size_t>(idx[t])] += idx[t + 1] - idx[t - 1];
    f.c[static_cast<size_t>(idx[k])] += idx[k] - idx[k - 1];
    return f;
}

SymbolicHilbert symbolic_h(const MonomialIdeal& I) {
    const int n = I.nvars();
    const int d = n - 1;
    auto vec_form = [&](const tpoly::Exp& e) {
        LinearForm f{std::vector<Int>(static_cast<size_t>(n), 0)};
        for (int i = 0; i < n; ++i) f.c[static_cast<size_t>(i)] = e[static_cast<size_t>(i)];
        return f;
    };
    const LinearForm zero{std::vector<Int>(static_cast<size_t>(n), 0)};

    int window = 2 * d + 6;
    for (int attempt = 0; attempt <= 10; ++attempt, window *= 2) {
        // v[k] = sum M_{k+1}(I), the form with H^1(L,k) = a . v[k].
        std::vector<LinearForm> v;
        for (int k = 0; k <= window; ++k) v.push_back(vec_form(tpoly::standard_monomials(I, k + 1).msum));

        auto coeff = [&](int j) {
            LinearForm c = v[static_cast<size_t>(j)];
            if (j >= 1) {
                LinearForm t = v[static_cast<size_t>(j) - 1];
                for (auto& x : t.c) x *= 3;
                c -= t;
            }
            if (j >= 2) {
                LinearForm t = v[static_cast<size_t>(j) - 2];
                for (auto& x : t.c) x *= 3;
                c += t;
            }
            if (j >= 3) c -= v[static_cast<size_t>(j) - 3];
            return c;
        };
        bool settled = true;
        for (int j = window - 3; j <= window; ++j)
            if (!coeff(j).is_zero()) settled = false;
        if (!settled) continue;

        SymbolicHilbert sym;
        int deg = 0;
        for (int j = 0; j <= window; ++j)
            if (!coeff(j).is_zero()) deg = j;
        for (int j = 0; j <= deg; ++j) sym.h.push_back(coeff(j));

        // Interpolate the quadratic tail exactly: the second difference is
        // e0, then e1 and e2 follow; verify three degrees below the fit.
        const int K = window;
        auto diff = [&](int k) {
            LinearForm r = v[static_cast<size_t>(k)];
            r -= v[static_cast<size_t>(k) - 1];
            return r;
        };
        sym.e0 = diff(K);
        sym.e0 -= diff(K - 1);
        // e1 = e0*(k+1) - (v_k - v_{k-1}) at k = K
        sym.e1 = zero;
        {
            LinearForm t = sym.e0;
            for (auto& x : t.c) x *= (K + 1);
            sym.e1 = t;
            sym.e1 -= diff(K);
        }
        sym.e2 = v[static_cast<size_t>(K)];
        {
            LinearForm t = sym.e0;
            Int b = binomial(K + 2, 2);
            for (auto& x : t.c) x *= b;
            sym.e2 -= t;
            LinearForm u = sym.e1;
            for (auto& x : u.c) x *= (K + 1);
            sym.e2 += u;
        }
        auto q1_form = [&](int k) {
            LinearForm r = sym.e2;
            LinearForm t = sym.e0;
            Int b = binomial(k + 2, 2);
            for (auto& x : t.c) x *= b;
            r += t;
            LinearForm u = sym.e1;
            for (auto& x : u.c) x *= (k + 1);
            r -= u;
            return r;
        };
        for (int k = K - 5; k <= K - 3; ++k)
            if (!(q1_form(k) == v[static_cast<size_t>(k)]))
                throw window_too_small("symbolic_h: quadratic tail not yet stable");

        // The same coefficients must come out of the h-forms.
        LinearForm s0 = zero, s1 = zero, s2 = zero;
        for (size_t j = 0; j < sym.h.size(); ++j) {
            LinearForm t = sym.h[j];
            s0 += t;
            for (auto& x : t.c) x *= static_cast<long>(j);
            s1 += t;
            t = sym.h[j];
            Int b = binomial(static_cast<long>(j), 2);
            for (auto& x : t.c) x *= b;
            s2 += t;
        }
        if (!(s0 == sym.e0 && s1 == sym.e1 && s2 == sym.e2))
            throw internal_error("symbolic_h: binomial-basis conversion disagrees with the tail fit");
        if (!(sym.e0 == e0_from_radical(I)))
            throw internal_error("symbolic_h: e0 form differs from the radical-based multiplicity form");

        sym.stabilized_at = 0;
        for (int k = K; k >= 0; --k) {
            if (q1_form(k) == v[static_cast<size_t>(k)]) continue;
            sym.stabilized_at = k + 1;
            break;
        }
        return sym;
    }
    throw window_too_small("symbolic_h: series did not stabilize");
}

Invariants symbolic_invariants(const MonomialIdeal& I) {
    SymbolicHilbert s = symbolic_h(I);
    return {s.e0, s.e1, s.e2};
}

CompareReport compare_invariants(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.nvars() != J.nvars()) throw domain_error("compare_invariants: dimension mismatch");
    SymbolicHilbert si = symbolic_h(I), sj = symbolic_h(J);
    auto ci = tpoly::ideal_components(I);
    auto cj = tpoly::ideal_components(J);

    CompareReport r;
    r.e0_equal = si.e0 == sj.e0;
    r.q_equal = r.e0_equal && si.e1 == sj.e1;
    r.q1_equal = r.q_equal && si.e2 == sj.e2;
    r.h_equal = si.h == sj.h;
    r.radical_equal = ci.radical == cj.radical;
    r.sat_equal = ci.saturation == cj.saturation;
    r.top_equal = ci.top == cj.top;
    r.toppo_consistent = (r.q_equal == r.top_equal);
    return r;
}

}  // namespace rnc::hilb
