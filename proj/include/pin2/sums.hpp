#pragma once

#include <string>
#include <vector>

#include "pin2/manolescu_set.hpp"
#include "pin2/rational.hpp"
#include "pin2/seifert.hpp"

namespace pin2 {

// E(x) = 2 floor((x+1)/2), round-up-to-even.
long long round_up_even(long long x);

// Closed-form connected-sum invariants: sort delta_tilde ascending, then
//   alpha = E(sum of all) - sum mu_bar
//   beta  = E(sum of all but the largest) - sum mu_bar
//   gamma = E(sum of all but the two largest) - sum mu_bar
//   delta = sum d_i / 2
// Empty prefix sums count as zero. All parts must be of projective type.
ManolescuSet connected_sum_invariants(const std::vector<SeifertInvariants>& parts);

// Independent evaluation through the chain engine: tensors the local
// equivalence classes (T_{delta_tilde_i}(0), 0, mu_bar_i / 2) and extracts
// the invariants from Borel homology. Refuses inputs with total delta_tilde
// beyond the cost limit.
ManolescuSet connected_sum_chain(const std::vector<SeifertInvariants>& parts,
                                 long long cost_limit = 6);

// Orientation reversal: (alpha, beta, gamma, delta) -> (-gamma, -beta,
// -alpha, -delta).
ManolescuSet dualize(const ManolescuSet& m);

struct InequalityReport {
    struct Line {
        std::string name;
        bool pass;
    };
    std::vector<Line> lines;
    bool all_pass() const;
};

// The eight connected-sum inequalities plus the gamma <= delta <= alpha
// sandwich on each of the three sets.
InequalityReport check_sum_inequalities(const ManolescuSet& m1, const ManolescuSet& m2,
                                        const ManolescuSet& m12);

// alpha = beta = gamma.
bool h_split(const ManolescuSet& m);

// True iff at least two parts have delta_tilde >= 2; then the sum is not
// homology cobordant to any Seifert fiber space. When true, the derived
// inequality witnesses (beta - gamma >= 2 and alpha - beta >= 2) are
// asserted as a consistency check; the converse direction is not claimed.
bool non_seifert_witness(const std::vector<SeifertInvariants>& parts);

// The multiset {delta_tilde_i > 0}, sorted: the coordinates of the sum in
// the splitting of the projective Seifert subgroup.
std::vector<long long> psi_coordinates(const std::vector<SeifertInvariants>& parts);

// Recovers the largest delta_tilde of a projective-type sum Y from the
// invariants of Y and of Y # Sigma(2,3,11):
// ((alpha-beta)(Y) + (alpha-beta)(Y#Sigma(2,3,11))) / 2.
long long recover_max_delta_tilde(const ManolescuSet& m_y, const ManolescuSet& m_y_plus);

struct AsymptoticRow {
    long long n;
    Rational alpha_minus_ndelta, beta_minus_ndelta, gamma_minus_ndelta;
};

// Rows (alpha, beta, gamma)(n Y) - n delta(Y) for n = 1..n_max; each column
// is asserted bounded by 2 delta_tilde + 2 |mu_bar| + 2 in absolute value.
std::vector<AsymptoticRow> asymptotic_table(const SeifertInvariants& part, long long n_max);

}  // namespace pin2
