#include "rnc/aseq.hpp"

#include "rnc/errors.hpp"

#include <algorithm>
#include <sstream>

namespace rnc {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

void make_primitive(std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (Int& x : v) x /= g;
}

std::string join_ints(const std::vector<Int>& v, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i].get_str();
    }
    return out;
}

}  // namespace rnc

namespace rnc::xy {

ASequence::ASequence(std::vector<Int> a) : a_(std::move(a)) {
    if (a_.empty()) throw domain_error("a-sequence must be non-empty");
    if (a_[0] != 0) throw domain_error("a-sequence must start with 0");
    for (size_t i = 0; i < a_.size(); ++i) {
        if (a_[i] < 0) throw domain_error("a-sequence entries must be non-negative");
        if (i > 0 && a_[i] < a_[i - 1]) throw domain_error("a-sequence must be weakly increasing");
    }
}

ASequence ASequence::parse(const std::string& csv) {
    std::vector<Int> a;
    for (const auto& tok : split(csv, ',')) a.push_back(parse_int(tok));
    return ASequence(std::move(a));
}

std::vector<Int> ASequence::b_sequence() const {
    std::vector<Int> b;
    for (size_t i = 1; i < a_.size(); ++i) b.push_back(a_[i] - a_[i - 1]);
    return b;
}

bool ASequence::lex_segment() const {
    for (size_t i = 1; i < a_.size(); ++i)
        if (a_[i] <= a_[i - 1]) return false;
    return true;
}

std::string ASequence::str() const { return join_ints(a_, ","); }

RationalWeight RationalWeight::parse(const std::string& csv) {
    RationalWeight r;
    for (const auto& tok : split(csv, ',')) r.w.push_back(parse_rat(tok));
    if (r.w.empty()) throw domain_error("weight must be non-empty");
    return r;
}

ASequence normalize(const RationalWeight& w) {
    const int d = w.order();
    if (d < 0) throw domain_error("normalize: empty weight");
    for (const Rat& q : w.w)
        if (q < 0) throw domain_error("normalize: negative weight entry");

    std::vector<Rat> shifted(w.w);
    for (Rat& q : shifted) q -= w.w[0];

    Int den = 1;
    for (const Rat& q : shifted) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> v;
    v.reserve(shifted.size());
    for (const Rat& q : shifted) {
        Rat scaled = q * den;
        v.push_back(scaled.get_num());
    }

    // Least k >= 0 with v_i + k*i strictly increasing.
    Int k = 0;
    for (int i = 0; i < d; ++i) {
        Int need = v[static_cast<size_t>(i)] - v[static_cast<size_t>(i) + 1] + 1;
        if (need > k) k = need;
    }
    for (int i = 0; i <= d; ++i) v[static_cast<size_t>(i)] += k * i;
    return ASequence(std::move(v));
}

namespace {

std::vector<Int> minplus(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> c(a.size() + b.size() - 1);
    std::vector<bool> set(c.size(), false);
    for (size_t j = 0; j < a.size(); ++j)
        for (size_t k = 0; k < b.size(); ++k) {
            Int s = a[j] + b[k];
            if (!set[j + k] || s < c[j + k]) {
                c[j + k] = s;
                set[j + k] = true;
            }
        }
    return c;
}

Int sum(const std::vector<Int>& v) {
    Int s = 0;
    for (const Int& x : v) s += x;
    return s;
}

// Lower-hull scan over the points (i, a_i): repeatedly take the least slope
// from the current vertex, breaking ties toward the largest index.
std::vector<int> hull_vertices(const std::vector<Int>& a) {
    const int d = static_cast<int>(a.size()) - 1;
    std::vector<int> verts{0};
    int cur = 0;
    while (cur < d) {
        Rat best;
        int arg = -1;
        for (int j = cur + 1; j <= d; ++j) {
            Rat slope(a[static_cast<size_t>(j)] - a[static_cast<size_t>(cur)], j - cur);
            slope.canonicalize();
            if (arg < 0 || slope <= best) {  // <= keeps the max index on ties
                best = slope;
                arg = j;
            }
        }
        verts.push_back(arg);
        cur = arg;
    }
    return verts;
}

Int e0_from_vertices(const std::vector<Int>& a, const std::vector<int>& verts) {
    const int k = static_cast<int>(verts.size()) - 1;
    Int e0 = a[static_cast<size_t>(verts[0])] * (verts[1] - verts[0]);
    for (int t = 1; t < k; ++t)
        e0 += a[static_cast<size_t>(verts[static_cast<size_t>(t)])] *
              (verts[static_cast<size_t>(t) + 1] - verts[static_cast<size_t>(t) - 1]);
    e0 += a[static_cast<size_t>(verts.back())] * (verts[static_cast<size_t>(k)] - verts[static_cast<size_t>(k) - 1]);
    return e0;
}

}  // namespace

ASequence minplus_product(const ASequence& a, const ASequence& b) {
    return ASequence(minplus(a.entries(), b.entries()));
}

Int hilbert_h1(const ASequence& a, int k) {
    if (k < 0) throw domain_error("hilbert_h1: k must be non-negative");
    std::vector<Int> power = a.entries();
    for (int i = 0; i < k; ++i) power = minplus(power, a.entries());
    return sum(power);
}

HilbertReport h_polynomial(const ASequence& a) {
    const int d = a.order();
    int window = 2 * d + 6;
    for (int attempt = 0; attempt <= 10; ++attempt, window *= 2) {
        std::vector<Int> h1(static_cast<size_t>(window) + 1);
        std::vector<Int> power = a.entries();
        h1[0] = sum(power);
        for (int k = 1; k <= window; ++k) {
            power = minplus(power, a.entries());
            h1[static_cast<size_t>(k)] = sum(power);
        }
        // Coefficients of (1-z)^3 * sum H^1(k) z^k.
        auto coeff = [&](int j) {
            Int c = h1[static_cast<size_t>(j)];
            if (j >= 1) c -= 3 * h1[static_cast<size_t>(j) - 1];
            if (j >= 2) c += 3 * h1[static_cast<size_t>(j) - 2];
            if (j >= 3) c -= h1[static_cast<size_t>(j) - 3];
            return c;
        };
        bool settled = true;
        for (int j = window - 3; j <= window; ++j)
            if (coeff(j) != 0) settled = false;
        if (!settled) continue;

        HilbertReport rep;
        rep.series_window = h1;
        rep.colength = h1[0];
        int deg = -1;
        for (int j = 0; j <= window; ++j)
            if (coeff(j) != 0) deg = j;
        for (int j = 0; j <= deg; ++j) rep.h.push_back(coeff(j));
        if (rep.h.empty()) rep.h.push_back(0);
        rep.e0 = 0;
        rep.e1 = 0;
        rep.e2 = 0;
        for (int j = 0; j < static_cast<int>(rep.h.size()); ++j) {
            rep.e0 += rep.h[static_cast<size_t>(j)];
            rep.e1 += j * rep.h[static_cast<size_t>(j)];
            rep.e2 += binomial(j, 2) * rep.h[static_cast<size_t>(j)];
        }
        return rep;
    }
    throw window_too_small("h_polynomial: series did not stabilize");
}

NewtonHull newton_multiplicity(const ASequence& a) {
    if (!a.lex_segment())
        throw domain_error("newton_multiplicity: sequence must be strictly increasing (apply normalize first)");
    NewtonHull hull;
    hull.vertices = hull_vertices(a.entries());
    hull.e0 = e0_from_vertices(a.entries(), hull.vertices);
    return hull;
}

Int deviation(const ASequence& a) {
    std::vector<int> verts;
    if (a.lex_segment()) {
        verts = hull_vertices(a.entries());
    } else {
        // Shifting by (0,1,..,d) adds one to every slope, so the hull vertex
        // set is unchanged; the scan just needs strict increase.
        std::vector<Int> shifted = a.entries();
        for (size_t i = 0; i < shifted.size(); ++i) shifted[i] += static_cast<long>(i);
        verts = hull_vertices(shifted);
    }
    Int e0 = e0_from_vertices(a.entries(), verts);
    Int v = e0 - hilbert_h1(a, 1) + 2 * hilbert_h1(a, 0);
    if (v < 0) throw internal_error("deviation: negative value " + v.get_str() + " for a=" + a.str());
    return v;
}

bool is_gr_cm(const ASequence& a) { return deviation(a) == 0; }

bool zariski_product_cm(const std::vector<ASequence>& factors) {
    if (factors.empty()) throw domain_error("zariski_product_cm: no factors");
    for (const ASequence& f : factors)
        if (!f.lex_segment())
            throw domain_error("zariski_product_cm: factor " + f.str() + " is not a lex-segment sequence");
    return std::all_of(factors.begin(), factors.end(), [](const ASequence& f) { return is_gr_cm(f); });
}

}  // namespace rnc::xy
