#pragma once

#include <string>
#include <vector>

#include "pin2/f2.hpp"

namespace pin2 {

struct FreeGen {
    std::string name;
    int degree;
    int32_t index;  // basis element generating the orbit
};

// A finite G-chain complex with a distinguished fixed part and a free part,
// closed under tensor product.
//
// The F2-basis is indexed 0..dim()-1. Indices below fixed_count form the
// fixed part (a subcomplex on which s acts by zero and j acts by a basis
// permutation). The remaining basis elements form the free part: the eight
// vectors j^a s^b g attached to the generators g listed in free_gens are a
// basis of it. Directly built complexes lay free orbits out contiguously
// (orbit k occupies orbit_elem(k, a, b) = fixed_count + 8k + 4b + a,
// representing j^a s^b x); tensor products keep the pair basis instead and
// record the orbit generators as metadata, verifying at construction time
// that their monomial translates are again a basis.
//
// The action maps satisfy j^4 = 1, s^2 = 0, s j^2 = j^2 s and the Leibniz
// rule exactly. The remaining Pin(2) relation s j = j^3 s holds on directly
// built complexes; on tensor products it holds up to (1+j^2)-torsion, which
// never enters downstream computations: those apply only the monomial
// operators j^a and j^a s (s first), matching the convention
// s(a@b) = sa@b + j^2 a@sb used to define the action.
//
// The fixed part is required to have one-dimensional homology concentrated
// in degree `level`, generated by the marked j-invariant cycle
// `fundamental`.
struct SWFLikeComplex {
    int level = 0;
    int fixed_count = 0;
    std::vector<int> degree;         // per basis element
    std::vector<std::string> names;  // per basis element
    std::vector<FreeGen> free_gens;
    std::vector<F2Vec> diff;   // per basis element, one degree lower
    std::vector<F2Vec> act_j;  // degree preserving
    std::vector<F2Vec> act_s;  // degree +1
    F2Vec fundamental;         // cycle of degree `level` in the fixed part

    int dim() const { return static_cast<int>(degree.size()); }
    // Valid for directly built complexes (contiguous orbit layout) only.
    int orbit_elem(int k, int a, int b) const { return fixed_count + 8 * k + 4 * b + a; }
    bool is_fixed(int z) const { return z < fixed_count; }
    int max_degree() const;

    F2Vec apply_j(const F2Vec& v, int times = 1) const;
    F2Vec apply_s(const F2Vec& v) const;
    // j^a s^b applied to v (s first, then j^a).
    F2Vec apply_monomial(int a, int b, const F2Vec& v) const;

    // For basis elements whose j-action is a single basis element, follow it
    // `times` steps. All complexes built here have permutation j-actions.
    int chase_j(int z, int times) const;

    std::vector<std::vector<int32_t>> basis_by_degree() const;
};

// C^CW((R~^t)+, pt): cells c_0 and c_i, jc_i for 1 <= i <= t, with
// d(c_1) = c_0 and d(c_i) = (1+j) c_{i-1} for i >= 2. No free part.
SWFLikeComplex make_fixed_complex(int t);

// The H+ cell complex: fixed cell r_0 plus free generators y_1, y_2, y_3
// with d(y_1) = r_0, d(y_2) = (1+j) y_1, d(y_3) = s y_1 + (1+j) y_2.
SWFLikeComplex make_hplus();

// T_D(t): fixed part of level t plus free generators x_{t+2i-1}, i = 1..D,
// with d(x_{t+1}) = fundamental class and d(x_i) = s (1+j^2) x_{i-2} above.
SWFLikeComplex make_T(int D, int t);

SWFLikeComplex suspend_rtilde(const SWFLikeComplex& z);
SWFLikeComplex suspend_h(const SWFLikeComplex& z);

// Tensor over F2: basis = pairs of basis elements, d(a@b) = da@b + a@db,
// action j(a@b) = ja@jb, s(a@b) = sa@b + j^2 a@sb. Level adds; the
// fundamental class is f1@f2. Free orbit representatives: (free generator
// of z1)@(basis element of z2) and (fixed cell of z1)@(free generator of
// z2), in that order.
SWFLikeComplex tensor(const SWFLikeComplex& z1, const SWFLikeComplex& z2);

struct ValidationReport {
    struct Check {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Check> checks;
    bool all_pass() const;
    std::string summary() const;
};

// Checks d.d = 0, Leibniz consistency of the actions, grading, the algebra
// relations satisfied by the action maps, freeness of the free part (the
// monomial translates of the listed generators are a basis of it),
// fixed-part homology (F2 in degree `level`, generated by the fundamental
// class) and j-invariance of the fundamental class.
ValidationReport validate(const SWFLikeComplex& z);

}  // namespace pin2
