#pragma once

#include "rnc/arith.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rnc::tpoly {

/// Exponent vector of a monomial in t_0..t_d (size = number of variables).
using Exp = std::vector<int>;

int total_degree(const Exp& e);
long second_degree(const Exp& e);  // (0,1,..,d) . e
bool divides(const Exp& a, const Exp& b);
Exp mono_lcm(const Exp& a, const Exp& b);
std::string mono_str(const Exp& e);                    // "t0*t2", "t1^2", "1"
Exp parse_monomial(const std::string& s, int nvars);   // accepts "t0*t2", "t3^2"

/// t^lead - t^tail; both sides share total degree and (0,1,..,d)-degree.
struct PureBinomial {
    Exp lead, tail;
    friend bool operator==(const PureBinomial&, const PureBinomial&) = default;
};

std::string binomial_str(const PureBinomial& b);  // "t1^2 - t0*t2", lead first

/// The 2-minors t_{v-1} t_r - t_v t_{r-1} (1 <= v < r <= d) of the Hankel
/// matrix generating the rational normal curve ideal P; empty for d = 1.
std::vector<PureBinomial> rnc_generators(int d);

/// Monomial ideal given by its minimal generators, kept in canonical order
/// (total degree, then descending reverse-lexicographic).
class MonomialIdeal {
public:
    explicit MonomialIdeal(int nvars) : nvars_(nvars) {}
    MonomialIdeal(int nvars, std::vector<Exp> gens);
    static MonomialIdeal parse(const std::string& semicolon_list, int nvars);

    int nvars() const { return nvars_; }
    const std::vector<Exp>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && total_degree(gens_[0]) == 0; }
    bool contains(const Exp& m) const;
    bool contains_ideal(const MonomialIdeal& other) const;

    MonomialIdeal plus(const Exp& extra_gen) const;
    MonomialIdeal colon_var_power_inf(int var) const;  // I : t_var^inf
    MonomialIdeal intersect(const MonomialIdeal& other) const;

    std::string str() const;
    auto operator<=>(const MonomialIdeal& o) const { return gens_ <=> o.gens_; }
    bool operator==(const MonomialIdeal& o) const = default;

private:
    int nvars_;
    std::vector<Exp> gens_;
};

/// Degree-k monomials outside I and their componentwise sum.  Verifies the
/// fiber property: in each (0,1,..,d)-degree v in [0, kd] exactly one
/// standard monomial (so the count is dk+1 for k >= 1); throws
/// fiber_violation otherwise.
struct StdMonomials {
    std::vector<Exp> monomials;
    Exp msum;
};
StdMonomials standard_monomials(const MonomialIdeal& I, int k);

/// Radical, saturation, top-dimensional part, Krull dimension and the
/// irredundant irreducible decomposition of a monomial ideal.
struct Components {
    MonomialIdeal radical;
    MonomialIdeal saturation;
    MonomialIdeal top;
    int dim;
    std::vector<MonomialIdeal> irreducible;
};
Components ideal_components(const MonomialIdeal& I);

/// Tree G on vertex variables V, square variables Q = complement, and an
/// edge assignment phi : Q -> E(G).
struct StructureData {
    int nvars = 0;
    std::vector<int> V;                               // sorted
    std::vector<std::pair<int, int>> edges;           // u < v, sorted
    std::map<int, std::pair<int, int>> phi;           // q -> edge
};

/// I(G,phi) = (non-edges of G) + (Q)^2 + (q*v : v in V outside phi(q)).
/// Squarefree cubics would be required only for graphs with triangles; the
/// input must be a tree, so they never arise.
MonomialIdeal igphi_build(const StructureData& s);

enum class RecognizeFailure {
    NotQuadratic,
    GraphNotTree,
    PhiUndefined,
    ReconstructionMismatch,
};
std::string to_string(RecognizeFailure f);

struct RecognizeResult {
    std::optional<StructureData> structure;
    std::optional<RecognizeFailure> failure;
    std::string detail;
    bool ok() const { return structure.has_value(); }
};

/// Decide whether I = I(G,phi) for a tree G, recovering the structure.
RecognizeResult igphi_recognize(const MonomialIdeal& I);

}  // namespace rnc::tpoly
