#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pin2 {

// An abstract delta sequence: an ordered list of nonzero integers, the first
// one positive. `positions` optionally records where each entry sits inside
// an ambient well-ordered set of integers (used by the Brieskorn pipeline,
// where reduction must remember representative positions).
struct DeltaSequence {
    std::vector<long long> values;
    std::vector<long long> positions;  // empty, or one per value

    bool has_positions() const { return !positions.empty(); }
    std::size_t size() const { return values.size(); }
    bool empty() const { return values.empty(); }
    std::string str() const;
};

// Throws InvalidInputError when entries are zero, the first entry is not
// positive, or positions are inconsistent.
void check_delta_sequence(const DeltaSequence& d);

struct TauFunction {
    std::vector<long long> values;  // length size()+1, tau(0) = 0
    long long min() const;
    long long max() const;
};

TauFunction tau(const DeltaSequence& d);

// Merges each maximal same-sign run into its sum. Idempotent; preserves the
// graded root. Positions follow the representative rule: a merged positive
// run keeps the position of its last entry, a merged negative run keeps the
// position of its first entry.
DeltaSequence reduce(const DeltaSequence& d);

// Replaces entry `index` by `parts`, which must share its sign and sum to it.
DeltaSequence refine(const DeltaSequence& d, std::size_t index,
                     const std::vector<long long>& parts);

// <k_1..k_n>  ->  <k_1..k_n, -k_n..-k_1>
DeltaSequence symmetrize(const DeltaSequence& d);

// Concatenation of the value lists.
DeltaSequence join(const DeltaSequence& d1, const DeltaSequence& d2);

// True iff the reduced form ends negative, every reduced positive entry is
// at most the absolute value of the following negative entry, and the last
// positive entry is strictly below the absolute value of the final negative
// entry. The empty sequence counts as sinking.
bool is_sinking(const DeltaSequence& d);

// The infinite tree glued from the rays R_n at the values of tau. Stored
// compactly through the alternating extrema profile of the tau walk, which
// determines the tree: vertices at grading h are the components of the
// sublevel set {tau <= h}, and a single ray sits above the stem grading.
struct GradedRoot {
    std::vector<long long> profile;  // local extrema of tau, endpoints included
    long long min_chi = 0;           // global minimum of tau
    long long stem_chi = 0;          // maximum of tau; one vertex per grading above
    bool symmetric = false;          // involution attached

    long long vertex_count_at(long long chi) const;
    std::vector<long long> vertex_counts() const;  // for chi in [min_chi, stem_chi]
    bool isomorphic_to(const GradedRoot& o) const;
};

GradedRoot build_root(const DeltaSequence& d);

// The F[U]-module H(Gamma, chi) as towers; a vertex at grading h contributes
// in module grading 2h. One infinite tower plus finite towers (bottom,
// length, multiplicity). Gradings are relative unless a d-invariant anchor
// is supplied, which places the infinite tower's bottom at -d.
struct UModule {
    struct Tower {
        long long bottom;
        long long length;
        long long multiplicity;
    };
    long long infinite_bottom = 0;
    std::vector<Tower> finite;  // sorted by (bottom, length)
    bool absolute = false;

    long long rank_at(long long grading) const;
};

UModule u_module(const GradedRoot& r, std::optional<long long> d_anchor = std::nullopt);

struct DeltaTildeResult {
    long long chi_v;        // grading of the minimal involution-invariant vertex
    long long chi_min;      // global minimum grading
    long long delta_tilde;  // chi_v - chi_min
    bool projective;        // grading-decreasing path from v to a global minimum
};

// Requires a symmetric sequence (even length 2L with values[i] =
// -values[2L-1-i]) or the empty sequence. chi_v is tau(L); the projective
// test asks whether the maximal interval around L with tau <= tau(L)
// reaches the global minimum.
DeltaTildeResult delta_tilde(const DeltaSequence& d);

bool is_symmetric(const DeltaSequence& d);

}  // namespace pin2
