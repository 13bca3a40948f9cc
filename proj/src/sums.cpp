#include "pin2/sums.hpp"

#include <algorithm>
#include <cstdlib>

#include "pin2/errors.hpp"

namespace pin2 {

long long round_up_even(long long x) {
    long long y = x + 1;
    // floor division by 2 for either sign
    long long f = y >= 0 ? y / 2 : -((-y + 1) / 2);
    return 2 * f;
}

namespace {

std::vector<long long> sorted_delta_tildes(const std::vector<SeifertInvariants>& parts) {
    std::vector<long long> dt;
    for (const SeifertInvariants& s : parts) {
        if (!s.projective)
            throw InvalidInputError("connected sums are supported for projective-type parts only");
        dt.push_back(s.delta_tilde);
    }
    std::sort(dt.begin(), dt.end());
    return dt;
}

}  // namespace

ManolescuSet connected_sum_invariants(const std::vector<SeifertInvariants>& parts) {
    if (parts.empty()) throw InvalidInputError("connected_sum_invariants: empty list");
    std::vector<long long> dt = sorted_delta_tildes(parts);
    long long mu_sum = 0, d_sum = 0;
    for (const SeifertInvariants& s : parts) {
        mu_sum += s.mu_bar;
        d_sum += s.d;
    }
    std::size_t n = dt.size();
    auto prefix = [&](std::size_t k) {
        long long sum = 0;
        for (std::size_t i = 0; i < k && i < n; ++i) sum += dt[i];
        return sum;
    };
    ManolescuSet out;
    out.alpha = Rational(round_up_even(prefix(n)) - mu_sum);
    out.beta = Rational(round_up_even(n >= 1 ? prefix(n - 1) : 0) - mu_sum);
    out.gamma = Rational(round_up_even(n >= 2 ? prefix(n - 2) : 0) - mu_sum);
    out.delta = Rational(d_sum, 2);
    if (!out.invariants_hold()) throw InternalCheckError("sum formula ordering violated");
    return out;
}

ManolescuSet connected_sum_chain(const std::vector<SeifertInvariants>& parts,
                                 long long cost_limit) {
    if (parts.empty()) throw InvalidInputError("connected_sum_chain: empty list");
    std::vector<long long> dt = sorted_delta_tildes(parts);
    long long total = 0, mu_sum = 0;
    for (const SeifertInvariants& s : parts) mu_sum += s.mu_bar;
    for (long long x : dt) total += x;
    if (total > cost_limit)
        throw ResourceError("connected_sum_chain: total delta_tilde " + std::to_string(total) +
                            " exceeds the cost limit " + std::to_string(cost_limit));
    Triple t;
    t.z = make_T(static_cast<int>(dt[0]), 0);
    for (std::size_t i = 1; i < dt.size(); ++i)
        t.z = tensor(t.z, make_T(static_cast<int>(dt[i]), 0));
    t.m = 0;
    t.n = Rational(mu_sum, 2);
    return manolescu(t);
}

ManolescuSet dualize(const ManolescuSet& m) {
    return ManolescuSet{-m.gamma, -m.beta, -m.alpha, -m.delta};
}

bool InequalityReport::all_pass() const {
    for (const Line& l : lines)
        if (!l.pass) return false;
    return true;
}

InequalityReport check_sum_inequalities(const ManolescuSet& m1, const ManolescuSet& m2,
                                        const ManolescuSet& m12) {
    InequalityReport rep;
    auto add = [&](const std::string& name, bool pass) { rep.lines.push_back({name, pass}); };
    add("alpha1+gamma2 <= alpha12", m1.alpha + m2.gamma <= m12.alpha);
    add("alpha12 <= alpha1+alpha2", m12.alpha <= m1.alpha + m2.alpha);
    add("gamma1+gamma2 <= gamma12", m1.gamma + m2.gamma <= m12.gamma);
    add("gamma12 <= alpha1+gamma2", m12.gamma <= m1.alpha + m2.gamma);
    add("gamma1+beta2 <= beta12", m1.gamma + m2.beta <= m12.beta);
    add("beta12 <= alpha1+beta2", m12.beta <= m1.alpha + m2.beta);
    add("gamma12 <= beta1+beta2", m12.gamma <= m1.beta + m2.beta);
    add("beta1+beta2 <= alpha12", m1.beta + m2.beta <= m12.alpha);
    add("gamma1 <= delta1 <= alpha1", m1.gamma <= m1.delta && m1.delta <= m1.alpha);
    add("gamma2 <= delta2 <= alpha2", m2.gamma <= m2.delta && m2.delta <= m2.alpha);
    add("gamma12 <= delta12 <= alpha12", m12.gamma <= m12.delta && m12.delta <= m12.alpha);
    return rep;
}

bool h_split(const ManolescuSet& m) { return m.alpha == m.beta && m.beta == m.gamma; }

bool non_seifert_witness(const std::vector<SeifertInvariants>& parts) {
    std::vector<long long> dt = sorted_delta_tildes(parts);
    long long big = std::count_if(dt.begin(), dt.end(), [](long long x) { return x >= 2; });
    bool witness = big >= 2;
    if (witness) {
        ManolescuSet m = connected_sum_invariants(parts);
        bool ineq = m.beta - m.gamma >= Rational(2) && m.alpha - m.beta >= Rational(2);
        if (!ineq)
            throw InternalCheckError("non_seifert_witness: inequality witnesses missing");
    }
    return witness;
}

std::vector<long long> psi_coordinates(const std::vector<SeifertInvariants>& parts) {
    std::vector<long long> out;
    for (long long x : sorted_delta_tildes(parts))
        if (x > 0) out.push_back(x);
    return out;
}

long long recover_max_delta_tilde(const ManolescuSet& m_y, const ManolescuSet& m_y_plus) {
    Rational sum = (m_y.alpha - m_y.beta) + (m_y_plus.alpha - m_y_plus.beta);
    Rational half = sum / Rational(2);
    if (!half.is_integer())
        throw InvalidInputError("recover_max_delta_tilde: inputs are inconsistent");
    return half.numerator();
}

std::vector<AsymptoticRow> asymptotic_table(const SeifertInvariants& part, long long n_max) {
    if (!part.projective)
        throw InvalidInputError("asymptotic_table: projective-type part required");
    std::vector<AsymptoticRow> rows;
    long long dt = part.delta_tilde, mu = part.mu_bar;
    Rational delta = Rational(part.d, 2);
    Rational bound = Rational(2 * dt + 2 * std::llabs(mu) + 2);
    for (long long n = 1; n <= n_max; ++n) {
        Rational alpha = Rational(round_up_even(n * dt) - n * mu);
        Rational beta = Rational(round_up_even((n - 1) * dt) - n * mu);
        Rational gamma = Rational(round_up_even(std::max(n - 2, 0LL) * dt) - n * mu);
        AsymptoticRow row{n, alpha - Rational(n) * delta, beta - Rational(n) * delta,
                          gamma - Rational(n) * delta};
        for (const Rational& col :
             {row.alpha_minus_ndelta, row.beta_minus_ndelta, row.gamma_minus_ndelta}) {
            if (col > bound || -bound > col)
                throw InternalCheckError("asymptotic_table: boundedness violated");
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace pin2
