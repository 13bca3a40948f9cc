#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pin2/borel.hpp"
#include "pin2/manolescu_set.hpp"
#include "pin2/roots.hpp"

namespace pin2 {

// Plain bitset used by the semigroup sieves.
struct Bitset {
    std::vector<uint64_t> words;
    long long size = 0;

    explicit Bitset(long long n = 0) : words((n + 63) / 64, 0), size(n) {}
    bool get(long long i) const { return (words[i / 64] >> (i % 64)) & 1; }
    void set(long long i) { words[i / 64] |= uint64_t(1) << (i % 64); }
    std::vector<long long> members() const;
};

// Bit i set iff i is a non-negative integer combination of the generators,
// for 0 <= i <= bound. Dynamic sieve, O(bound x #generators).
Bitset semigroup_sieve(const std::vector<long long>& gens, long long bound);

// Numerical data of a Brieskorn triple; the r/w/xi/K fields are populated
// for the family Y_p = Sigma(p, 2p-1, 2p+1).
struct BrieskornData {
    long long p, q, r;
    long long N;  // pqr - pq - pr - qr
    long long r_minus = 0, r_plus = 0, w = 0, xi = 0, K = 0;

    static BrieskornData general(long long p, long long q, long long r);
    static BrieskornData family_yp(long long p);  // requires odd p >= 3
};

// The expanded delta sequence of Sigma(p,q,r): +1 on the semigroup points
// S = <pq,pr,qr> in [0,N], -1 on their reflections N - S, carried with
// positions. Empty when N < 0. Throws on non-coprime input; refuses sieves
// beyond the 32 MB bitset budget with a ResourceError.
DeltaSequence brieskorn_delta(long long p, long long q, long long r);

// Number of gaps of the semigroup <p,q> exceeding i.
long long alpha_count(long long p, long long q, long long i);

// g = (p-1)(q-1)/2, the genus of <p,q>.
long long semigroup_genus(long long p, long long q);

// d-invariant lookup: explicit argument beats a user override file beats the
// built-in table. The built-in table knows Sigma(2,3,5), Sigma(2,3,7),
// Sigma(2,3,11), the families Sigma(2,3,12k-1) and Sigma(2,3,12k-7),
// Sigma(p,2p-1,2p+1) for odd p, and Sigma(p,q,pqn+1).
class DTable {
  public:
    struct Entry {
        long long d;
        std::string provenance;
    };
    void add_override(long long p, long long q, long long r, long long d);
    void load_file(const std::string& path);
    std::optional<Entry> lookup(long long p, long long q, long long r) const;

  private:
    struct Row {
        long long p, q, r, d;
    };
    std::vector<Row> overrides_;
};

struct SeifertInvariants {
    long long p, q, r;
    long long d;
    long long delta_tilde;
    long long mu_bar;  // delta_tilde - d/2
    bool projective;
    ManolescuSet manolescu;
    std::string d_provenance;
};

// Runs brieskorn_delta -> reduce -> delta_tilde, then fills the Manolescu
// set by alpha = E(delta_tilde) - mu_bar, beta = gamma = -mu_bar,
// delta = d/2. Throws InvalidInputError when d is unknown.
SeifertInvariants seifert_invariants(long long p, long long q, long long r,
                                     std::optional<long long> d = std::nullopt,
                                     const DTable* table = nullptr);

// The chain local equivalence class (T_{delta_tilde}(0), 0, mu_bar/2).
// Requires the projective flag.
Triple local_class(const SeifertInvariants& s);

// The creature sequence <xi,-xi,...,2,-2,1,-2,1,-2,2,...,xi-1,-xi,xi> with
// xi = (p-1)/2; <1,-2,1> for p = 3.
DeltaSequence creature_delta(long long p);

struct CreatureDecomposition {
    BrieskornData data;
    DeltaSequence reduced_half;  // reduced delta sequence on [0, N/2]
    DeltaSequence z_part;        // positions below K; sinking
    DeltaSequence c_part;        // positions in [K, N/2]; the creature
};

// Splits the reduced first half of the Y_p sequence at K = (xi-1)(r_- + r_+)
// and verifies: the left part sinks, the right part is the creature, the
// symmetrized join reproduces the reduced sequence, and the reduced positive
// support below 2r_- + (p-3) r_+ matches the semigroup <r_-, r_+> minus
// (p-2) r_+. Any failure raises InternalCheckError.
CreatureDecomposition creature_decompose(long long p);

}  // namespace pin2
