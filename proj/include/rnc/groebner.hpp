#pragma once

#include "rnc/arith.hpp"
#include "rnc/tpoly.hpp"

#include <optional>
#include <vector>

namespace rnc::gb {

using tpoly::Exp;
using tpoly::MonomialIdeal;
using tpoly::PureBinomial;

/// Gap sequence 0 = i_0 < i_1 < ... < i_k = d indexing a Cohen-Macaulay cone.
struct CMSequence {
    std::vector<int> idx;
    explicit CMSequence(std::vector<int> v);
    int d() const { return idx.back(); }
    std::string str() const;
    auto operator<=>(const CMSequence&) const = default;
};

enum class Tiebreak { Lex, Revlex };

/// Weight comparison refined by lex or revlex with t_0 > t_1 > ... > t_d.
struct TermOrder {
    std::vector<Rat> weight;
    Tiebreak tiebreak = Tiebreak::Lex;

    int cmp(const Exp& a, const Exp& b) const;          // -1 / 0 / +1, 0 only on equal exponents
    int weight_cmp(const Exp& a, const Exp& b) const;   // weight part alone
};

/// Marked binomial or monomial generator: t^lead (- t^tail when present).
struct Generator {
    Exp lead;
    std::optional<Exp> tail;
};

/// Reduced Groebner basis of the curve ideal P: pure binomials with marked
/// leads, no lead dividing any other monomial of the basis.
struct ReducedGB {
    int d = 0;
    TermOrder order;
    std::vector<PureBinomial> elements;  // sorted by lead, canonically

    MonomialIdeal initial_ideal() const;
};

/// Buchberger on an arbitrary pure-difference/monomial generating set;
/// returns the reduced basis under the order.  Exposed for computing
/// initial ideals of non-monomial in_w(P).
std::vector<Generator> reduce_basis(std::vector<Generator> gens, const TermOrder& order, int nvars);

/// Reduced Groebner basis of P under the order; checks that every element
/// stays a pure difference and that low-degree standard-monomial counts
/// match the Hilbert function of the curve.
ReducedGB buchberger(int d, const TermOrder& order);

/// Generators of in_w(P): the w-initial forms of the tau-w reduced basis.
/// Elements with a strict weight comparison contribute their lead monomial,
/// ties keep the full binomial.
struct InitialForms {
    std::vector<Exp> monomials;
    std::vector<PureBinomial> binomials;
    bool is_monomial() const { return binomials.empty(); }
};
InitialForms initial_forms(int d, const std::vector<Rat>& w, Tiebreak tiebreak = Tiebreak::Lex);

/// The canonical permutation b-vector of a gap sequence: concatenation of
/// the descending runs (i_j, i_j - 1, ..., i_{j-1} + 1).
std::vector<int> canonical_permutation(const CMSequence& i);

/// Weight a_0 = 0, a_i = b_1 + ... + b_i built from the canonical permutation.
std::vector<Rat> canonical_weight(const CMSequence& i);

/// Closed-form element list (lead marked first):
///   t_s t_r - t_{i_v} t_{s+r-i_v}      for 2 i_v <= s+r <= i_v + i_{v+1},
///   t_s t_r - t_{i_{v+1}} t_{s+r-i_{v+1}}  for i_v + i_{v+1} <= s+r <= 2 i_{v+1},
/// skipping the tautological pairs.
std::vector<PureBinomial> cm_gb_closed_form(const CMSequence& i);

/// The closed form packaged as a ReducedGB and cross-checked against
/// buchberger at the canonical-permutation weight.
ReducedGB cm_reduced_gb(const CMSequence& i);

}  // namespace rnc::gb
