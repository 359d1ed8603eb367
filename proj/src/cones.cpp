#include "rnc/cones.hpp"

#include "rnc/errors.hpp"

#include <algorithm>
#include <set>

namespace rnc::cone {

namespace {

template <typename T>
Rat dot(const std::vector<Int>& n, const std::vector<T>& a) {
    Rat s = 0;
    for (size_t i = 0; i < n.size(); ++i)
        if (n[i] != 0) s += Rat(n[i]) * a[i];
    return s;
}

}  // namespace

bool ConeSystem::contains(const std::vector<Rat>& a, bool closed) const {
    for (const Ineq& q : ineqs) {
        Rat v = dot(q.n, a);
        if (closed || !q.strict) {
            if (v < 0) return false;
        } else if (v <= 0) {
            return false;
        }
    }
    return true;
}

bool ConeSystem::contains(const std::vector<Int>& a, bool closed) const {
    std::vector<Rat> q(a.begin(), a.end());
    return contains(q, closed);
}

std::vector<Int> normal_from_b(const std::vector<Int>& c) {
    std::vector<Int> n(c.size() + 1);
    for (size_t j = 0; j < n.size(); ++j) {
        Int v = 0;
        if (j >= 1) v += c[j - 1];       // coefficient of a_j from b_j
        if (j < c.size()) v -= c[j];     // from b_{j+1} = a_{j+1} - a_j
        n[j] = v;
    }
    return n;
}

namespace {

// Dense exact simplex, phase 1 only: minimize the sum of artificials for
// A y = b, y >= 0.  Bland's rule guarantees termination.
class Simplex {
public:
    // rows of A and b; b may have any signs (rows are flipped internally).
    Simplex(std::vector<std::vector<Rat>> a, std::vector<Rat> b) : a_(std::move(a)), b_(std::move(b)) {}

    // Returns the y-solution (without artificials) or nullopt.
    std::optional<std::vector<Rat>> solve() {
        const size_t m = a_.size();
        if (m == 0) return std::vector<Rat>{};
        const size_t n = a_[0].size();
        for (size_t i = 0; i < m; ++i)
            if (b_[i] < 0) {
                for (auto& v : a_[i]) v = -v;
                b_[i] = -b_[i];
            }
        // tableau: columns = n structural + m artificial + rhs
        const size_t cols = n + m;
        tab_.assign(m, std::vector<Rat>(cols + 1, 0));
        basis_.assign(m, 0);
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = 0; j < n; ++j) tab_[i][j] = a_[i][j];
            tab_[i][n + i] = 1;
            tab_[i][cols] = b_[i];
            basis_[i] = n + i;
        }
        // objective: minimize sum of artificials -> reduced cost row
        cost_.assign(cols + 1, 0);
        for (size_t j = n; j < cols; ++j) cost_[j] = 1;
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j <= cols; ++j) cost_[j] -= tab_[i][j];

        for (;;) {
            size_t enter = cols;
            for (size_t j = 0; j < cols; ++j)
                if (cost_[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == cols) break;
            size_t leave = m;
            Rat best;
            for (size_t i = 0; i < m; ++i) {
                if (tab_[i][enter] <= 0) continue;
                Rat ratio = tab_[i][cols] / tab_[i][enter];
                if (leave == m || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == m) throw internal_error("simplex: phase-1 objective unbounded");
            pivot(leave, enter);
        }
        Rat obj = -cost_[cols];
        if (obj != 0) return std::nullopt;
        std::vector<Rat> y(n, 0);
        for (size_t i = 0; i < m; ++i)
            if (basis_[i] < n) y[basis_[i]] = tab_[i][cols];
        return y;
    }

private:
    void pivot(size_t r, size_t c) {
        const size_t cols = tab_[0].size() - 1;
        Rat p = tab_[r][c];
        for (size_t j = 0; j <= cols; ++j) tab_[r][j] /= p;
        for (size_t i = 0; i < tab_.size(); ++i) {
            if (i == r || tab_[i][c] == 0) continue;
            Rat f = tab_[i][c];
            for (size_t j = 0; j <= cols; ++j) tab_[i][j] -= f * tab_[r][j];
        }
        Rat f = cost_[c];
        if (f != 0)
            for (size_t j = 0; j <= cols; ++j) cost_[j] -= f * tab_[r][j];
        basis_[r] = c;
    }

    std::vector<std::vector<Rat>> a_;
    std::vector<Rat> b_;
    std::vector<std::vector<Rat>> tab_;
    std::vector<Rat> cost_;
    std::vector<size_t> basis_;
};

}  // namespace

std::optional<std::vector<Rat>> feasible_point(const std::vector<std::vector<Rat>>& rows,
                                               const std::vector<Rat>& rhs,
                                               const std::vector<std::vector<Rat>>& eqs) {
    size_t dim = 0;
    for (const auto& r : rows) dim = std::max(dim, r.size());
    for (const auto& r : eqs) dim = std::max(dim, r.size());
    if (dim == 0) return std::vector<Rat>{};
    // x = u - v with u, v >= 0; slack s >= 0 per inequality row.
    const size_t nineq = rows.size();
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    for (size_t i = 0; i < nineq; ++i) {
        std::vector<Rat> row(2 * dim + nineq, 0);
        for (size_t j = 0; j < rows[i].size(); ++j) {
            row[j] = rows[i][j];
            row[dim + j] = -rows[i][j];
        }
        row[2 * dim + i] = -1;
        A.push_back(std::move(row));
        b.push_back(rhs[i]);
    }
    for (const auto& e : eqs) {
        std::vector<Rat> row(2 * dim + nineq, 0);
        for (size_t j = 0; j < e.size(); ++j) {
            row[j] = e[j];
            row[dim + j] = -e[j];
        }
        A.push_back(std::move(row));
        b.push_back(0);
    }
    auto y = Simplex(std::move(A), std::move(b)).solve();
    if (!y) return std::nullopt;
    std::vector<Rat> x(dim);
    for (size_t j = 0; j < dim; ++j) x[j] = (*y)[j] - (*y)[dim + j];
    return x;
}

std::optional<std::vector<Rat>> strict_point(const std::vector<std::vector<Int>>& normals, int dim) {
    if (normals.empty()) return std::vector<Rat>(static_cast<size_t>(dim), 0);
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    for (const auto& n : normals) {
        rows.emplace_back(n.begin(), n.end());
        rhs.emplace_back(1);
    }
    auto x = feasible_point(rows, rhs, {});
    if (x) x->resize(static_cast<size_t>(dim), 0);
    return x;
}

bool implies(const std::vector<std::vector<Int>>& closed_system, const std::vector<Int>& n, int dim) {
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    for (const auto& m : closed_system) {
        rows.emplace_back(m.begin(), m.end());
        rhs.emplace_back(0);
    }
    std::vector<Rat> neg;
    for (const Int& v : n) neg.emplace_back(-Rat(v));
    rows.push_back(std::move(neg));
    rhs.emplace_back(1);  // n.x <= -1
    auto x = feasible_point(rows, rhs, {});
    (void)dim;
    return !x.has_value();
}

bool equivalent_systems(const std::vector<std::vector<Int>>& s1, const std::vector<std::vector<Int>>& s2, int dim) {
    for (const auto& n : s2)
        if (!implies(s1, n, dim)) return false;
    for (const auto& n : s1)
        if (!implies(s2, n, dim)) return false;
    return true;
}

std::vector<std::vector<Int>> facet_reduce(std::vector<std::vector<Int>> normals, int dim) {
    for (auto& n : normals) make_primitive(n);
    std::sort(normals.begin(), normals.end());
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
    for (size_t i = 0; i < normals.size();) {
        std::vector<std::vector<Int>> others;
        for (size_t j = 0; j < normals.size(); ++j)
            if (j != i) others.push_back(normals[j]);
        if (implies(others, normals[i], dim))
            normals.erase(normals.begin() + static_cast<long>(i));
        else
            ++i;
    }
    return normals;
}

std::optional<std::vector<Rat>> facet_interior_point(const std::vector<std::vector<Int>>& normals, size_t facet,
                                                     int dim) {
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    for (size_t j = 0; j < normals.size(); ++j) {
        if (j == facet) continue;
        rows.emplace_back(normals[j].begin(), normals[j].end());
        rhs.emplace_back(1);
    }
    std::vector<std::vector<Rat>> eqs{std::vector<Rat>(normals[facet].begin(), normals[facet].end())};
    auto x = feasible_point(rows, rhs, eqs);
    if (x) x->resize(static_cast<size_t>(dim), 0);
    return x;
}

bool fm_feasible(std::vector<Ineq> rows, int dim) {
    auto tidy = [](std::vector<Ineq>& rs) {
        std::set<std::pair<std::vector<Int>, bool>> seen;
        std::vector<Ineq> out;
        for (Ineq& r : rs) {
            make_primitive(r.n);
            bool zero = std::all_of(r.n.begin(), r.n.end(), [](const Int& v) { return v == 0; });
            if (zero && !r.strict) continue;  // 0 >= 0
            if (seen.insert({r.n, r.strict}).second) out.push_back(std::move(r));
        }
        rs = std::move(out);
    };
    tidy(rows);
    for (int var = 0; var < dim; ++var) {
        std::vector<Ineq> pos, neg, rest;
        for (auto& r : rows) {
            Int c = r.n[static_cast<size_t>(var)];
            if (c > 0)
                pos.push_back(std::move(r));
            else if (c < 0)
                neg.push_back(std::move(r));
            else
                rest.push_back(std::move(r));
        }
        for (const Ineq& p : pos)
            for (const Ineq& q : neg) {
                Ineq comb;
                comb.strict = p.strict || q.strict;
                comb.n.resize(static_cast<size_t>(dim));
                Int cp = p.n[static_cast<size_t>(var)], cq = -q.n[static_cast<size_t>(var)];
                for (size_t j = 0; j < comb.n.size(); ++j) comb.n[j] = cq * p.n[j] + cp * q.n[j];
                rest.push_back(std::move(comb));
            }
        rows = std::move(rest);
        tidy(rows);
    }
    for (const Ineq& r : rows) {
        bool zero = std::all_of(r.n.begin(), r.n.end(), [](const Int& v) { return v == 0; });
        if (zero && r.strict) return false;  // derived 0 > 0
        if (!zero) throw internal_error("fm_feasible: variable survived elimination");
    }
    return true;
}

}  // namespace rnc::cone
