#pragma once

#include "rnc/arith.hpp"

#include <string>
#include <vector>

namespace rnc::xy {

/// An m-primary monomial ideal of K[x,y] containing x^d, encoded by its column
/// heights: a_i = least j with x^{d-i} y^j in the ideal.  Weakly increasing,
/// a_0 = 0.  Strictly increasing sequences are exactly the lex-segment ideals.
class ASequence {
public:
    explicit ASequence(std::vector<Int> a);
    static ASequence parse(const std::string& csv);

    int order() const { return static_cast<int>(a_.size()) - 1; }  // d
    const std::vector<Int>& entries() const { return a_; }
    const Int& operator[](int i) const { return a_[static_cast<size_t>(i)]; }
    std::vector<Int> b_sequence() const;  // b_i = a_i - a_{i-1}, i = 1..d
    bool lex_segment() const;             // strictly increasing
    std::string str() const;

    friend bool operator==(const ASequence&, const ASequence&) = default;

private:
    std::vector<Int> a_;
};

/// A non-negative rational weight vector on t_0..t_d (no ordering constraint).
struct RationalWeight {
    std::vector<Rat> w;
    static RationalWeight parse(const std::string& csv);
    int order() const { return static_cast<int>(w.size()) - 1; }
};

/// Local Hilbert data of the ideal: h-polynomial coefficients, Hilbert
/// coefficients e_0,e_1,e_2, colength, and the computed window of H^1 values.
struct HilbertReport {
    std::vector<Int> h;
    Int e0, e1, e2;
    Int colength;
    std::vector<Int> series_window;  // H^1(k) for k = 0..window end
};

struct NewtonHull {
    std::vector<int> vertices;  // indices i_0 = 0 < ... < i_k = d of the lower boundary
    Int e0;
};

/// Shift/scale a weight into a strictly increasing integer sequence without
/// leaving any cone whose inequalities vanish on (1,..,1) and (0,1,..,d):
/// subtract w_0*(1,..,1), clear denominators, add the least k*(0,1,..,d).
ASequence normalize(const RationalWeight& w);

/// Sequence of the product ideal: c_i = min{ a_j + a'_k : j+k = i }.
ASequence minplus_product(const ASequence& a, const ASequence& b);

/// H^1(I,k) = dim_K R/I^{k+1}, via iterated min-plus self-convolution.
Int hilbert_h1(const ASequence& a, int k);

/// Local h-polynomial and Hilbert coefficients from the H^1 series; the
/// window starts at 2d+6 and doubles (at most 10 times) until the series
/// times (1-z)^3 has four trailing zero coefficients.
HilbertReport h_polynomial(const ASequence& a);

/// Lower Newton-boundary vertices of {(d-i, a_i)} and the multiplicity
///   e_0 = a_0 (i_1 - i_0) + sum_t a_{i_t} (i_{t+1} - i_{t-1}) + a_d (i_k - i_{k-1}).
/// Requires a strictly increasing sequence; ties resolved toward the largest index.
NewtonHull newton_multiplicity(const ASequence& a);

/// Deviation V = e_0 - dim(R/I^2) + 2 dim(R/I); zero iff gr_I(R) is
/// Cohen-Macaulay.  Weakly increasing input is handled by running the hull
/// scan on a + (0,1,..,d) (same vertex set, all slopes shift by one) while
/// colengths and the e_0 formula use the raw sequence.
Int deviation(const ASequence& a);

bool is_gr_cm(const ASequence& a);

/// Cohen-Macaulayness of a product of lex-segment ideals placed in pairwise
/// independent coordinate directions: holds iff each factor passes is_gr_cm.
/// Not the same as is_gr_cm of the min-plus product.
bool zariski_product_cm(const std::vector<ASequence>& factors);

}  // namespace rnc::xy
