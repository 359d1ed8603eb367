#pragma once

#include "rnc/arith.hpp"

#include <optional>
#include <vector>

namespace rnc::cone {

/// One homogeneous inequality n.a >= 0 (or > 0 when strict).
struct Ineq {
    std::vector<Int> n;
    bool strict = true;
    friend bool operator==(const Ineq&, const Ineq&) = default;
};

/// Finite system of homogeneous integer inequalities on (a_0,..,a_d); every
/// normal is orthogonal to (1,..,1) and (0,1,..,d).
struct ConeSystem {
    int d = 0;
    std::vector<Ineq> ineqs;

    /// closed = true relaxes every inequality to >=; otherwise each keeps
    /// its own strictness flag.
    bool contains(const std::vector<Rat>& a, bool closed) const;
    bool contains(const std::vector<Int>& a, bool closed) const;
};

/// a-space normal of the b-space form c_1 b_1 + ... + c_d b_d >= 0.
std::vector<Int> normal_from_b(const std::vector<Int>& c);

/// Exact phase-1 simplex (Bland's rule): a point x with rows[i].x >= rhs[i]
/// and eqs[j].x = 0, or nullopt when infeasible.
std::optional<std::vector<Rat>> feasible_point(const std::vector<std::vector<Rat>>& rows,
                                               const std::vector<Rat>& rhs,
                                               const std::vector<std::vector<Rat>>& eqs);

/// Point with n.x >= 1 for every normal (scaling a strictly interior point).
std::optional<std::vector<Rat>> strict_point(const std::vector<std::vector<Int>>& normals, int dim);

/// Does {m.x >= 0 : m in closed_system} imply n.x >= 0?
bool implies(const std::vector<std::vector<Int>>& closed_system, const std::vector<Int>& n, int dim);

/// Two-sided implication of closed systems.
bool equivalent_systems(const std::vector<std::vector<Int>>& s1, const std::vector<std::vector<Int>>& s2, int dim);

/// Irredundant subsystem: keeps exactly the normals that can be violated
/// while the remaining ones hold.
std::vector<std::vector<Int>> facet_reduce(std::vector<std::vector<Int>> normals, int dim);

/// Point on the hyperplane of normals[facet] with every other inequality at
/// slack >= 1, i.e. in the relative interior of the facet.
std::optional<std::vector<Rat>> facet_interior_point(const std::vector<std::vector<Int>>& normals, size_t facet,
                                                     int dim);

/// Fourier-Motzkin feasibility of a homogeneous strict/non-strict system;
/// used as an independent cross-check of the simplex answers.
bool fm_feasible(std::vector<Ineq> rows, int dim);

}  // namespace rnc::cone
