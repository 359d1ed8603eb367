#pragma once

#include "rnc/arith.hpp"
#include "rnc/tpoly.hpp"

#include <vector>

namespace rnc::hilb {

using tpoly::MonomialIdeal;

/// Integer linear form c_0 A_0 + ... + c_d A_d in the symbolic entries of an
/// a-sequence.
struct LinearForm {
    std::vector<Int> c;

    Int eval(const std::vector<Int>& a) const;
    Rat eval(const std::vector<Rat>& a) const;
    bool is_zero() const;
    std::string str() const;  // "3A0 - A1 + 4A4"

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
    LinearForm& operator+=(const LinearForm& o);
    LinearForm& operator-=(const LinearForm& o);
};

/// Symbolic local Hilbert data of a fan cell: h-form list and the Hilbert
/// coefficients e_0, e_1, e_2 as linear forms; the Hilbert polynomial is
///   Q1(k) = e0 binom(k+2,2) - e1 binom(k+1,1) + e2,
/// matching H^1 from stabilized_at on.
struct SymbolicHilbert {
    std::vector<LinearForm> h;
    LinearForm e0, e1, e2;
    int stabilized_at = 0;

    Rat q1_eval(const std::vector<Rat>& a, int k) const;
    Int q1_eval(const std::vector<Int>& a, int k) const;
};

/// Hilbert data of S/I extracted from the standard-monomial vector sums:
/// the series sum_k (A . sum M_{k+1}) z^k times (1-z)^3 must terminate, its
/// coefficients are the h-forms, and the tail is interpolated (then
/// verified three degrees further) to give e_0, e_1, e_2.  Consistency of
/// e_0 with the radical-based multiplicity form is checked.
SymbolicHilbert symbolic_h(const MonomialIdeal& I);

/// The multiplicity form A_0 (i_1-i_0) + sum A_{i_t} (i_{t+1}-i_{t-1}) +
/// A_{i_k} (i_k-i_{k-1}) read off the radical of an initial ideal.
LinearForm e0_from_radical(const MonomialIdeal& I);

struct Invariants {
    LinearForm e0, e1, e2;
};
Invariants symbolic_invariants(const MonomialIdeal& I);

/// Equality report for two initial ideals of the same curve ideal.
/// q_equal compares the degree-one Hilbert polynomials (e0 and e1),
/// q1_equal all three coefficients; toppo_consistent records whether
/// q_equal matched equality of the top-dimensional parts.
struct CompareReport {
    bool e0_equal = false;
    bool q_equal = false;
    bool h_equal = false;
    bool q1_equal = false;
    bool radical_equal = false;
    bool sat_equal = false;
    bool top_equal = false;
    bool toppo_consistent = false;
};
CompareReport compare_invariants(const MonomialIdeal& I, const MonomialIdeal& J);

}  // namespace rnc::hilb
