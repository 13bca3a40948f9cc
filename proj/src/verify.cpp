#include "pin2/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "pin2/borel.hpp"
#include "pin2/errors.hpp"
#include "pin2/roots.hpp"
#include "pin2/seifert.hpp"
#include "pin2/sums.hpp"
#include "pin2/swf_complex.hpp"

namespace pin2 {

namespace {

struct Failure {
    std::string detail;
};

void expect(bool cond, const std::string& detail) {
    if (!cond) throw Failure{detail};
}

std::vector<std::array<long long, 3>> corpus_triples() {
    return {{3, 5, 7}, {5, 9, 11}, {7, 13, 15}, {2, 3, 7}, {2, 3, 5}, {2, 3, 11}};
}

DeltaSequence random_sequence(std::mt19937_64& rng, bool force_even = false) {
    std::uniform_int_distribution<int> len_dist(1, 12);
    std::uniform_int_distribution<long long> mag(1, 4);
    std::uniform_int_distribution<int> sign(0, 1);
    int len = len_dist(rng);
    if (force_even && len % 2) ++len;
    DeltaSequence d;
    for (int i = 0; i < len; ++i) {
        long long v = mag(rng);
        if (i > 0 && sign(rng)) v = -v;
        d.values.push_back(v);
    }
    return d;
}

// All multisets of integers >= 1 with the given total, ascending.
void partitions(long long total, long long max_part, std::vector<long long>& cur,
                std::vector<std::vector<long long>>& out) {
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    for (long long part = std::min(total, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions(total - part, part, cur, out);
        cur.pop_back();
    }
}

void check_family_delta_tilde() {
    for (long long p : {3LL, 5LL, 7LL, 9LL, 11LL, 13LL}) {
        BrieskornData b = BrieskornData::family_yp(p);
        DeltaTildeResult dt = delta_tilde(reduce(brieskorn_delta(b.p, b.q, b.r)));
        expect(dt.delta_tilde == (p - 1) / 2,
               "delta_tilde(Y_" + std::to_string(p) + ") = " + std::to_string(dt.delta_tilde));
        expect(dt.projective, "Y_" + std::to_string(p) + " not flagged projective");
    }
}

void check_family_mu_beta() {
    for (long long p : {3LL, 5LL, 7LL, 9LL, 11LL, 13LL}) {
        SeifertInvariants s = seifert_invariants(p, 2 * p - 1, 2 * p + 1);
        expect(s.d == p - 1, "table d for Y_" + std::to_string(p));
        expect(s.mu_bar == 0, "mu_bar(Y_" + std::to_string(p) + ") != 0");
        expect(s.manolescu.beta == Rational(0), "beta(Y_" + std::to_string(p) + ") != 0");
        expect(s.projective, "Y_" + std::to_string(p) + " not projective");
    }
}

void check_creature_decomposition() {
    for (long long p : {3LL, 5LL, 7LL, 9LL, 11LL}) {
        CreatureDecomposition cd = creature_decompose(p);  // throws on any failure
        if (p == 3) expect(cd.z_part.empty(), "z part of Y_3 should be empty");
        if (p == 5) expect(cd.data.K == 100, "K(Y_5) != 100");
    }
}

void check_family_formula() {
    for (long long q = 3; q <= 21; q += 2) {
        long long g = semigroup_genus(2, q);
        long long got = alpha_count(2, q, g - 1);
        expect(got == (q + 1) / 4,
               "alpha_count(2," + std::to_string(q) + ",g-1) = " + std::to_string(got));
    }
}

void check_sigma237_sums(bool full) {
    SeifertInvariants y = seifert_invariants(2, 3, 7);
    ManolescuSet odd{Rational(1), Rational(-1), Rational(-1), Rational(0)};
    ManolescuSet even{Rational(0), Rational(0), Rational(-2), Rational(0)};
    expect(y.manolescu == odd, "Sigma(2,3,7) invariants");
    for (int k = 1; k <= 10; ++k) {
        std::vector<SeifertInvariants> parts(k, y);
        ManolescuSet m = connected_sum_invariants(parts);
        expect(m == (k % 2 ? odd : even), "formula for " + std::to_string(k) + " summands");
    }
    int chain_max = full ? 4 : 2;
    for (int k = 1; k <= chain_max; ++k) {
        std::vector<SeifertInvariants> parts(k, y);
        ManolescuSet m = connected_sum_chain(parts);
        expect(m == (k % 2 ? odd : even), "chain for " + std::to_string(k) + " summands");
    }
}

void check_tensor_closed_forms() {
    std::vector<std::vector<long long>> cases;
    std::vector<long long> cur;
    for (long long total = 1; total <= 5; ++total) partitions(total, total, cur, cases);
    for (const auto& parts : cases) {
        std::vector<long long> dt(parts.rbegin(), parts.rend());  // ascending
        SWFLikeComplex z = make_T(static_cast<int>(dt[0]), 0);
        for (std::size_t i = 1; i < dt.size(); ++i)
            z = tensor(z, make_T(static_cast<int>(dt[i]), 0));
        AbcdValues got = abc_values(z);
        long long total = 0;
        for (long long x : dt) total += x;
        std::size_t n = dt.size();
        long long s1 = n >= 1 ? total - dt[n - 1] : 0;
        long long s2 = n >= 2 ? s1 - dt[n - 2] : 0;
        std::ostringstream label;
        for (long long x : dt) label << x << ".";
        expect(got.a == 2 * round_up_even(total), "a mismatch at " + label.str());
        expect(got.b == 2 * round_up_even(s1), "b mismatch at " + label.str());
        expect(got.c == 2 * round_up_even(s2), "c mismatch at " + label.str());
        expect(got.d == 2 * total, "d mismatch at " + label.str());
    }
}

void check_property_suites(bool full) {
    // Pairwise connected-sum inequalities over the corpus.
    std::vector<SeifertInvariants> corpus;
    for (const auto& t : corpus_triples()) corpus.push_back(seifert_invariants(t[0], t[1], t[2]));
    for (const SeifertInvariants& s1 : corpus) {
        for (const SeifertInvariants& s2 : corpus) {
            ManolescuSet m12 = connected_sum_invariants({s1, s2});
            InequalityReport rep = check_sum_inequalities(s1.manolescu, s2.manolescu, m12);
            expect(rep.all_pass(), "sum inequalities failed for a corpus pair");
        }
    }
    // Boundedness of the asymptotic columns.
    for (const SeifertInvariants& s : corpus) asymptotic_table(s, 100);  // throws if unbounded
    // Tower complexes: beta = gamma = t/2 and d = 2D + t.
    for (int t = 0; t <= 2; ++t) {
        for (int D = 0; D <= 3; ++D) {
            SWFLikeComplex z = make_T(D, t);
            AbcdValues v = abc_values(z);
            expect(v.b == t && v.c == t,
                   "b,c of T_" + std::to_string(D) + "(" + std::to_string(t) + ")");
            expect(v.d == 2 * D + t, "d of T_" + std::to_string(D) + "(" + std::to_string(t) + ")");
            // Truncation stability at margin +8 versus +12.
            AbcdValues v12 = abc_values(z, 12);
            expect(v.a == v12.a && v.b == v12.b && v.c == v12.c && v.d == v12.d,
                   "truncation instability for T_D(t)");
        }
    }
    if (full) {
        SWFLikeComplex z = tensor(make_T(1, 0), make_T(2, 0));
        AbcdValues v8 = abc_values(z, 8);
        AbcdValues v12 = abc_values(z, 12);
        expect(v8.a == v12.a && v8.b == v12.b && v8.c == v12.c && v8.d == v12.d,
               "truncation instability for a tensor product");
    }
}

void check_root_engine() {
    std::mt19937_64 rng(20240915);
    std::uniform_int_distribution<int> part_count(2, 3);
    for (int trial = 0; trial < 200; ++trial) {
        DeltaSequence d = random_sequence(rng);
        GradedRoot r = build_root(d);
        expect(build_root(reduce(d)).isomorphic_to(r), "reduce changed a graded root");
        std::uniform_int_distribution<std::size_t> idx(0, d.size() - 1);
        std::size_t i = idx(rng);
        long long v = d.values[i];
        if (v > 1 || v < -1) {
            int parts = part_count(rng);
            long long base = v / parts;
            std::vector<long long> split(parts, base);
            split[0] += v - base * parts;
            bool ok = true;
            for (long long s : split)
                if (s == 0 || (s > 0) != (v > 0)) ok = false;
            if (ok)
                expect(build_root(refine(d, i, split)).isomorphic_to(r),
                       "refine changed a graded root");
        }
        // Symmetry of the tau walk after symmetrization.
        DeltaSequence s = symmetrize(d);
        TauFunction ts = tau(s);
        std::size_t n2 = s.size();
        for (std::size_t k = 0; k <= n2; ++k)
            expect(ts.values[k] == ts.values[n2 - k], "tau not symmetric after symmetrize");
    }
    // Sinking sequences bottom out exactly at their last element.
    for (long long p : {3LL, 5LL, 7LL, 9LL, 11LL}) {
        DeltaSequence z = creature_decompose(p).z_part;
        if (z.empty()) continue;
        expect(is_sinking(z), "z part not sinking");
        TauFunction t = tau(z);
        long long m = t.min();
        expect(t.values.back() == m, "sinking walk does not end at its minimum");
        for (std::size_t k = 0; k + 1 < t.values.size(); ++k)
            expect(t.values[k] > m, "sinking walk hits its minimum early");
    }
    // Antisymmetry of the Brieskorn sequences.
    for (const auto& t : corpus_triples()) {
        DeltaSequence d = brieskorn_delta(t[0], t[1], t[2]);
        if (d.empty()) continue;
        long long N = BrieskornData::general(t[0], t[1], t[2]).N;
        std::size_t n = d.size();
        for (std::size_t i = 0; i < n; ++i) {
            expect(d.values[i] == -d.values[n - 1 - i] &&
                       d.positions[i] == N - d.positions[n - 1 - i],
                   "Brieskorn sequence not antisymmetric");
        }
    }
}

}  // namespace

std::vector<VerifyCheck> run_verification(bool full) {
    std::vector<std::pair<std::string, std::function<void()>>> checks = {
        {"delta-tilde family law for Sigma(p,2p-1,2p+1), p in 3..13", [] { check_family_delta_tilde(); }},
        {"family d = p-1, mu_bar = 0, beta = 0, projective", [] { check_family_mu_beta(); }},
        {"creature decomposition of the reduced Y_p sequences, p in 3..11",
         [] { check_creature_decomposition(); }},
        {"alpha_count(2,q,g-1) = floor((q+1)/4) for odd q in 3..21", [] { check_family_formula(); }},
        {"Sigma(2,3,7) sums by formula and chain engine", [full] { check_sigma237_sums(full); }},
        {"closed forms for tensors of towers (full sweep)", [] { check_tensor_closed_forms(); }},
        {"inequality, boundedness, tower and truncation properties",
         [full] { check_property_suites(full); }},
        {"root engine invariants", [] { check_root_engine(); }},
    };

    std::vector<VerifyCheck> out;
    for (auto& [name, fn] : checks) {
        if (!full && name.find("full sweep") != std::string::npos) continue;
        VerifyCheck c{name, true, 0.0, ""};
        auto start = std::chrono::steady_clock::now();
        try {
            fn();
        } catch (const Failure& f) {
            c.pass = false;
            c.detail = f.detail;
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = e.what();
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(c);
    }
    return out;
}

bool verification_passed(const std::vector<VerifyCheck>& checks) {
    for (const VerifyCheck& c : checks)
        if (!c.pass) return false;
    return true;
}

}  // namespace pin2
