#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace rnc {

// All arithmetic in this library is exact: arbitrary-precision integers for
// sequence entries, Hilbert values and linear forms, rationals for weights,
// Newton slopes and the simplex.
using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Fibonacci with the f_1 = 1, f_2 = 2 convention.
inline Int fibonacci_f(int d) {
    if (d < 1) throw std::invalid_argument("fibonacci_f: d must be positive");
    Int prev = 1, cur = 1;  // f_0 = 1, f_1 = 1
    for (int i = 1; i <= d; ++i) {
        Int next = prev + cur;
        prev = cur;
        cur = next;
    }
    return prev;
}

inline Int catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan: n must be non-negative");
    return binomial(2L * n, n) / (n + 1);
}

inline Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
}

inline Rat parse_rat(const std::string& s) {
    try {
        Rat q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep);

// Divide an integer vector by the gcd of its entries (no-op on the zero vector).
void make_primitive(std::vector<Int>& v);

std::string join_ints(const std::vector<Int>& v, const std::string& sep);

}  // namespace rnc
