#pragma once

#include <vector>

#include "pin2/manolescu_set.hpp"
#include "pin2/rational.hpp"
#include "pin2/swf_complex.hpp"

namespace pin2 {

// Formal desuspension of a complex by m copies of R~ and n copies of H.
struct Triple {
    SWFLikeComplex z;
    int m = 0;
    Rational n;
};

struct AbcdValues {
    int a, b, c, d;
};

// Truncated Borel chain complex C(EG) (x)_G Z in normal form, or its S^1
// analogue C(EG) (x)_{C(S^1)} Z.
//
// EG carries one free G-cell e_i per degree i >= 0 with i != 3 mod 4, and
//   d(e_0)      = 0
//   d(e_{4i})   = s(1+j+j^2+j^3) e_{4i-2}
//   d(e_{4i+1}) = (1+j) e_{4i}
//   d(e_{4i+2}) = (1+j) e_{4i+1} + s e_{4i}.
//
// Normal form over G uses the quotient relations (1+j)(a@b) ~ 0 and
// s(a@b) ~ 0 together with freeness of C(EG):
//   (j^a e_i) @ z   ->  e_i @ (j^{4-a} z)
//   (j^a s e_i) @ z ->  e_i @ (j^{2+a} s z)
// so the basis is { e_i @ z_k }. Over C(S^1) only j^2 and s reduce, giving
// basis { e_i @ z_k, j e_i @ z_k }:
//   (j^a e_i) @ z   ->  (j^{a-2} e_i) @ (j^2 z)        for a >= 2
//   (j^a s e_i) @ z ->  (j^{(3a+2)%4} e_i) @ (s z), then the rule above.
class BorelComplex {
  public:
    enum class Kind { G, S1 };

    // Requires trunc >= max_degree(z) + 8.
    BorelComplex(const SWFLikeComplex& z, int trunc, Kind kind);

    int trunc() const { return trunc_; }
    long long chain_dim(int deg) const;

    // Basis position of e_i @ z (delta = 0) or j e_i @ z (delta = 1, S1
    // only) inside the degree-(i + deg z) chain group.
    long long position(int cell, int delta, int32_t z_elem) const;

    // Boundary of the basis element at `pos` in degree `deg`, as positions
    // in degree deg-1.
    F2Vec boundary_column(int deg, long long pos) const;

    // Membership of a degree-`deg` chain in the image of the boundary map
    // from degree deg+1. Deterministic sparse elimination.
    bool is_boundary(int deg, const F2Vec& v) const;

    // Homology dimensions for degrees 0..upto via dense elimination. Only
    // meant for small complexes and cross-checks; also verifies dd = 0.
    std::vector<long long> homology_dims(int upto) const;

    const SWFLikeComplex& complex() const { return *z_; }

  private:
    struct DegreeLayout {
        // Per admissible (cell, delta): first basis position and z-degree.
        std::vector<int> cell;
        std::vector<int> delta;
        std::vector<long long> offset;
        long long total = 0;
    };
    const DegreeLayout& layout(int deg) const;
    void decode(int deg, long long pos, int* cell, int* delta, int32_t* z_elem) const;

    const SWFLikeComplex* z_;
    int trunc_;
    Kind kind_;
    std::vector<std::vector<int32_t>> by_degree_;
    std::vector<int32_t> rank_in_degree_;  // index of a basis element inside its bucket
    mutable std::vector<DegreeLayout> layouts_;
    mutable std::vector<bool> layout_ready_;
};

// First-failure boundary searches realizing the tower criteria. a is the
// least t + 4A with e_{4A} @ f not a boundary, b uses e_{4B+1} @ f, c uses
// e_{4C+2} @ f, all in the G-Borel complex.
AbcdValues abc_values(const SWFLikeComplex& z, int margin = 8);

// d is the least t + 2k whose test class is not a boundary in the S^1-Borel
// complex; the classes alternate e_{2k} @ f and j((1+j)e_{2k} + s e_{2k-1}) @ f.
int d_invariant_chain(const SWFLikeComplex& z, int margin = 8);

// (alpha, beta, gamma, delta) = (a, b, c, d)/2 - m/2 - 2n, exactly.
ManolescuSet manolescu(const Triple& t, int margin = 8);

}  // namespace pin2
