#include "pin2/seifert.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

#include "json.hpp"
#include "pin2/errors.hpp"
#include "pin2/sums.hpp"

namespace pin2 {

namespace {

// 32 MB of sieve bits.
constexpr long long kMaxSieveBits = 32LL * 1024 * 1024 * 8;

}  // namespace

std::vector<long long> Bitset::members() const {
    std::vector<long long> out;
    for (long long i = 0; i < size; ++i)
        if (get(i)) out.push_back(i);
    return out;
}

Bitset semigroup_sieve(const std::vector<long long>& gens, long long bound) {
    if (bound < 0) throw InvalidInputError("semigroup_sieve: negative bound");
    for (long long g : gens)
        if (g <= 0) throw InvalidInputError("semigroup_sieve: nonpositive generator");
    Bitset bits(bound + 1);
    bits.set(0);
    for (long long i = 1; i <= bound; ++i) {
        for (long long g : gens) {
            if (i >= g && bits.get(i - g)) {
                bits.set(i);
                break;
            }
        }
    }
    return bits;
}

BrieskornData BrieskornData::general(long long p, long long q, long long r) {
    BrieskornData b;
    b.p = p;
    b.q = q;
    b.r = r;
    b.N = p * q * r - p * q - p * r - q * r;
    return b;
}

BrieskornData BrieskornData::family_yp(long long p) {
    if (p < 3 || p % 2 == 0) throw InvalidInputError("family Y_p requires odd p >= 3");
    BrieskornData b = general(p, 2 * p - 1, 2 * p + 1);
    b.r_minus = p * (2 * p - 1);
    b.r_plus = p * (2 * p + 1);
    b.w = (2 * p - 1) * (2 * p + 1);
    b.xi = (p - 1) / 2;
    b.K = (b.xi - 1) * (b.r_minus + b.r_plus);
    return b;
}

DeltaSequence brieskorn_delta(long long p, long long q, long long r) {
    if (p < 1 || q < 1 || r < 1) throw InvalidInputError("brieskorn_delta: nonpositive index");
    if (std::gcd(p, q) != 1 || std::gcd(p, r) != 1 || std::gcd(q, r) != 1)
        throw InvalidInputError("brieskorn_delta: indices must be pairwise coprime");
    BrieskornData data = BrieskornData::general(p, q, r);
    DeltaSequence out;
    if (data.N < 0) return out;
    if (data.N + 1 > kMaxSieveBits)
        throw ResourceError("brieskorn_delta: sieve would exceed the 32 MB bitset budget");

    Bitset sieve = semigroup_sieve({p * q, p * r, q * r}, data.N);
    std::vector<long long> s = sieve.members();
    std::vector<std::pair<long long, int>> entries;
    entries.reserve(2 * s.size());
    for (long long x : s) entries.push_back({x, +1});
    for (long long x : s) entries.push_back({data.N - x, -1});
    std::sort(entries.begin(), entries.end());
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
        if (entries[i].first == entries[i + 1].first)
            throw InternalCheckError("brieskorn_delta: S and its reflection intersect");
    }
    for (const auto& [pos, sign] : entries) {
        out.positions.push_back(pos);
        out.values.push_back(sign);
    }
    check_delta_sequence(out);
    return out;
}

long long semigroup_genus(long long p, long long q) { return (p - 1) * (q - 1) / 2; }

long long alpha_count(long long p, long long q, long long i) {
    if (std::gcd(p, q) != 1) throw InvalidInputError("alpha_count: gcd(p,q) != 1");
    if (i < -1) throw InvalidInputError("alpha_count: i must be >= -1");
    long long frobenius_bound = p * q - p - q;  // all integers above it are members
    if (frobenius_bound + 1 > kMaxSieveBits)
        throw ResourceError("alpha_count: sieve would exceed the 32 MB bitset budget");
    Bitset sieve = semigroup_sieve({p, q}, std::max(frobenius_bound, 0LL));
    long long count = 0;
    for (long long x = std::max(i + 1, 0LL); x <= frobenius_bound; ++x)
        if (!sieve.get(x)) ++count;
    return count;
}

void DTable::add_override(long long p, long long q, long long r, long long d) {
    overrides_.push_back({p, q, r, d});
}

void DTable::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open d-table file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError("cannot parse d-table file: " + std::string(e.what()));
    }
    if (!doc.is_array()) throw InvalidInputError("d-table file must be a JSON array");
    for (const auto& row : doc) {
        if (!row.contains("p") || !row.contains("q") || !row.contains("r") || !row.contains("d"))
            throw InvalidInputError("d-table rows need fields p, q, r, d");
        add_override(row["p"].get<long long>(), row["q"].get<long long>(),
                     row["r"].get<long long>(), row["d"].get<long long>());
    }
}

namespace {

std::optional<DTable::Entry> builtin_d(long long p, long long q, long long r) {
    std::optional<DTable::Entry> out;
    auto propose = [&](long long d, const std::string& prov) {
        if (out && out->d != d)
            throw InternalCheckError("built-in d-table rules disagree for the same space");
        out = DTable::Entry{d, prov};
    };
    if (p == 2 && q == 3 && r == 5) propose(2, "builtin:Sigma(2,3,5)");
    if (p == 2 && q == 3 && r == 7) propose(0, "builtin:Sigma(2,3,7)");
    if (p == 2 && q == 3 && r == 11) propose(2, "builtin:Sigma(2,3,11)");
    if (p == 2 && q == 3 && r >= 11 && r % 12 == 11) propose(2, "builtin:Sigma(2,3,12k-1)");
    if (p == 2 && q == 3 && r >= 5 && r % 12 == 5) propose(2, "builtin:Sigma(2,3,12k-7)");
    if (p >= 3 && p % 2 == 1 && q == 2 * p - 1 && r == 2 * p + 1)
        propose(p - 1, "builtin:Sigma(p,2p-1,2p+1)");
    if (r > p * q && (r - 1) % (p * q) == 0) propose(0, "builtin:Sigma(p,q,pqn+1)");
    return out;
}

}  // namespace

std::optional<DTable::Entry> DTable::lookup(long long p, long long q, long long r) const {
    for (const Row& row : overrides_) {
        if (row.p == p && row.q == q && row.r == r) return Entry{row.d, "override-file"};
    }
    return builtin_d(p, q, r);
}

SeifertInvariants seifert_invariants(long long p, long long q, long long r,
                                     std::optional<long long> d, const DTable* table) {
    long long ps[3] = {p, q, r};
    std::sort(ps, ps + 3);
    SeifertInvariants out;
    out.p = ps[0];
    out.q = ps[1];
    out.r = ps[2];

    if (d) {
        out.d = *d;
        out.d_provenance = "explicit";
    } else {
        std::optional<DTable::Entry> entry;
        if (table) entry = table->lookup(out.p, out.q, out.r);
        if (!entry) entry = builtin_d(out.p, out.q, out.r);
        if (!entry)
            throw InvalidInputError(
                "absolute grading unknown for Sigma(" + std::to_string(out.p) + "," +
                std::to_string(out.q) + "," + std::to_string(out.r) +
                "): d is not in the built-in table; pass --d or a --d-table file");
        out.d = entry->d;
        out.d_provenance = entry->provenance;
    }
    if (out.d % 2 != 0)
        throw InvalidInputError("d must be even for an integer homology sphere");

    DeltaSequence expanded = brieskorn_delta(out.p, out.q, out.r);
    DeltaTildeResult dt = delta_tilde(reduce(expanded));
    if (dt.delta_tilde < 0) throw InternalCheckError("negative delta_tilde");
    out.delta_tilde = dt.delta_tilde;
    out.projective = dt.projective;
    out.mu_bar = out.delta_tilde - out.d / 2;

    out.manolescu.alpha = Rational(round_up_even(out.delta_tilde) - out.mu_bar);
    out.manolescu.beta = Rational(-out.mu_bar);
    out.manolescu.gamma = Rational(-out.mu_bar);
    out.manolescu.delta = Rational(out.d, 2);
    if (!out.manolescu.invariants_hold())
        throw InternalCheckError("Seifert Manolescu set ordering violated");
    return out;
}

Triple local_class(const SeifertInvariants& s) {
    if (!s.projective)
        throw InvalidInputError("local_class: only Seifert spaces of projective type supported");
    Triple t;
    t.z = make_T(static_cast<int>(s.delta_tilde), 0);
    t.m = 0;
    t.n = Rational(s.mu_bar, 2);
    return t;
}

DeltaSequence creature_delta(long long p) {
    if (p < 3 || p % 2 == 0) throw InvalidInputError("creature_delta: p must be odd and >= 3");
    long long xi = (p - 1) / 2;
    DeltaSequence out;
    for (long long k = xi; k >= 2; --k) {
        out.values.push_back(k);
        out.values.push_back(-k);
    }
    out.values.push_back(1);
    out.values.push_back(-2);
    out.values.push_back(1);
    for (long long k = 2; k <= xi; ++k) {
        out.values.push_back(-k);
        out.values.push_back(k);
    }
    return out;
}

CreatureDecomposition creature_decompose(long long p) {
    CreatureDecomposition out;
    out.data = BrieskornData::family_yp(p);
    const BrieskornData& b = out.data;

    DeltaSequence reduced = reduce(brieskorn_delta(b.p, b.q, b.r));
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::size_t n = reduced.size();
        if (reduced.values[i] != -reduced.values[n - 1 - i] ||
            reduced.positions[i] != b.N - reduced.positions[n - 1 - i])
            throw InternalCheckError("reduced Brieskorn sequence is not position-symmetric");
    }

    // First half: positions below N/2 (never hit, N/2 is not in X).
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        if (2 * reduced.positions[i] > b.N) break;
        DeltaSequence& dst = reduced.positions[i] < b.K ? out.z_part : out.c_part;
        dst.values.push_back(reduced.values[i]);
        dst.positions.push_back(reduced.positions[i]);
        out.reduced_half.values.push_back(reduced.values[i]);
        out.reduced_half.positions.push_back(reduced.positions[i]);
    }

    if (!is_sinking(out.z_part))
        throw InternalCheckError("creature_decompose: left part is not sinking");
    if (out.c_part.values != creature_delta(p).values)
        throw InternalCheckError("creature_decompose: right part is not the creature");
    if (symmetrize(join(out.z_part, out.c_part)).values != reduced.values)
        throw InternalCheckError("creature_decompose: symmetrized join mismatch");

    // Positive support anchor below 2r_- + (p-3) r_+.
    long long bound = 2 * b.r_minus + (p - 3) * b.r_plus;
    std::vector<long long> support;
    for (std::size_t i = 0; i < reduced.size(); ++i)
        if (reduced.values[i] > 0 && reduced.positions[i] <= bound)
            support.push_back(reduced.positions[i]);
    Bitset sieve = semigroup_sieve({b.r_minus, b.r_plus}, bound);
    std::vector<long long> expected;
    for (long long x : sieve.members())
        if (x != (p - 2) * b.r_plus) expected.push_back(x);
    if (support != expected)
        throw InternalCheckError("creature_decompose: semigroup support anchor mismatch");

    return out;
}

}  // namespace pin2
