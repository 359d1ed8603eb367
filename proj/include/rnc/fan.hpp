#pragma once

#include "rnc/aseq.hpp"
#include "rnc/cones.hpp"
#include "rnc/groebner.hpp"
#include "rnc/tpoly.hpp"

#include <map>
#include <vector>

namespace rnc::fan {

using cone::ConeSystem;
using gb::CMSequence;
using gb::ReducedGB;
using tpoly::MonomialIdeal;

/// All 2^{d-1} gap sequences 0 = i_0 < ... < i_k = d, in lexicographic order.
std::vector<CMSequence> cm_sequences(int d);

/// Open cone C(i): a_s + a_r > a_{i_v} + a_{s+r-i_v} over the bracketing
/// ranges, tautological pairs omitted.  The closed cone is the same system
/// with every inequality relaxed.
ConeSystem cone_system(const CMSequence& i);

/// Gap sequences whose cone (open, or closed when requested) contains a.
std::vector<CMSequence> cones_containing(const std::vector<Rat>& a, int d, bool closed);
std::vector<CMSequence> cones_containing(const xy::ASequence& a, bool closed);

/// Number of permutations in S_d avoiding both patterns 231 and 312,
/// counted by brute force (equals 2^{d-1}).
long avoider_count(int d);

/// binom(d, floor(d/2)): the permutations with sigma(j) < sigma(j+2) whose
/// closed cones cover the big Cohen-Macaulay cone.
Int bigcone_perm_count(int d);

/// Product of Catalan numbers counting the permutation cones inside the
/// closed cone of a gap-at-most-2 sequence.
Int catalan_product(const CMSequence& i);

struct GroebnerCone {
    ConeSystem facets;                // irredundant, strict
    std::vector<Rat> interior;        // all facets at slack >= 1, entries >= 0
};

/// Facets (lead - tail normals, reduced by exact feasibility tests) and a
/// strictly interior weight of the Groebner cone of a reduced basis.
GroebnerCone groebner_cone(const ReducedGB& gb);

struct FanCell {
    ReducedGB gb;
    ConeSystem cone;                  // facets
    std::vector<Rat> interior_weight;
    MonomialIdeal initial_ideal;
    int depth = 0;                    // 0, 1 or 2
};

/// Default traversal cap; the RNC_MAX_D environment variable overrides it.
int traversal_cap();

/// Breadth-first flip enumeration of all maximal Groebner cones of P,
/// returned sorted by canonical initial ideal.
std::vector<FanCell> traverse_fan(int d);

/// Depth histogram over the fan cells: 0 if the initial ideal is not
/// saturated, 2 if the deviation of a normalized interior weight vanishes,
/// 1 otherwise.
std::map<int, int> depth_census(int d);

struct BigCone {
    ConeSystem system;       // b_j <= b_{j+2}, closed
    Int sequence_count;      // gap-at-most-2 sequences; equals Fibonacci f_d
    bool member(const xy::ASequence& a) const;
    bool member(const std::vector<Rat>& a) const;
};
BigCone big_cone(int d);

}  // namespace rnc::fan
