#include "pin2/roots.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pin2/errors.hpp"

namespace pin2 {

std::string DeltaSequence::str() const {
    std::string out = "<";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out + ">";
}

void check_delta_sequence(const DeltaSequence& d) {
    if (!d.positions.empty() && d.positions.size() != d.values.size())
        throw InvalidInputError("delta sequence: positions length mismatch");
    for (std::size_t i = 0; i < d.values.size(); ++i) {
        if (d.values[i] == 0) throw InvalidInputError("delta sequence: zero entry");
        if (i > 0 && !d.positions.empty() && d.positions[i] <= d.positions[i - 1])
            throw InvalidInputError("delta sequence: positions not increasing");
    }
    if (!d.values.empty() && d.values[0] < 0)
        throw InvalidInputError("delta sequence: first value must be positive");
}

long long TauFunction::min() const { return *std::min_element(values.begin(), values.end()); }
long long TauFunction::max() const { return *std::max_element(values.begin(), values.end()); }

TauFunction tau(const DeltaSequence& d) {
    check_delta_sequence(d);
    TauFunction t;
    t.values.resize(d.size() + 1);
    t.values[0] = 0;
    for (std::size_t i = 0; i < d.size(); ++i) t.values[i + 1] = t.values[i] + d.values[i];
    return t;
}

DeltaSequence reduce(const DeltaSequence& d) {
    check_delta_sequence(d);
    DeltaSequence out;
    bool pos = d.has_positions();
    for (std::size_t i = 0; i < d.size();) {
        std::size_t j = i;
        long long sum = 0;
        while (j < d.size() && (d.values[j] > 0) == (d.values[i] > 0)) sum += d.values[j++];
        out.values.push_back(sum);
        if (pos) out.positions.push_back(d.values[i] > 0 ? d.positions[j - 1] : d.positions[i]);
        i = j;
    }
    return out;
}

DeltaSequence refine(const DeltaSequence& d, std::size_t index,
                     const std::vector<long long>& parts) {
    check_delta_sequence(d);
    if (index >= d.size()) throw InvalidInputError("refine: index out of range");
    if (parts.empty()) throw InvalidInputError("refine: empty parts");
    long long sum = 0;
    for (long long p : parts) {
        if (p == 0 || (p > 0) != (d.values[index] > 0))
            throw InvalidInputError("refine: parts must share the sign of the entry");
        sum += p;
    }
    if (sum != d.values[index]) throw InvalidInputError("refine: parts must sum to the entry");
    DeltaSequence out;
    out.values.insert(out.values.end(), d.values.begin(), d.values.begin() + index);
    out.values.insert(out.values.end(), parts.begin(), parts.end());
    out.values.insert(out.values.end(), d.values.begin() + index + 1, d.values.end());
    return out;
}

DeltaSequence symmetrize(const DeltaSequence& d) {
    check_delta_sequence(d);
    DeltaSequence out;
    out.values = d.values;
    for (auto it = d.values.rbegin(); it != d.values.rend(); ++it) out.values.push_back(-*it);
    return out;
}

DeltaSequence join(const DeltaSequence& d1, const DeltaSequence& d2) {
    DeltaSequence out;
    out.values = d1.values;
    out.values.insert(out.values.end(), d2.values.begin(), d2.values.end());
    return out;
}

bool is_sinking(const DeltaSequence& d) {
    DeltaSequence r = reduce(d);
    if (r.empty()) return true;
    if (r.values.back() > 0) return false;
    // Reduced entries alternate p_1, -q_1, ..., p_k, -q_k.
    for (std::size_t i = 0; i + 1 < r.size(); i += 2) {
        if (r.values[i] > -r.values[i + 1]) return false;
    }
    std::size_t last_pos = r.size() - 2;
    return r.values[last_pos] < -r.values[last_pos + 1];
}

namespace {

// Alternating local extrema of a walk, endpoints included.
std::vector<long long> extrema_profile(const std::vector<long long>& walk) {
    std::vector<long long> out;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        if (i > 0 && i + 1 < walk.size()) {
            bool up_before = walk[i] > walk[i - 1];
            bool up_after = walk[i + 1] > walk[i];
            if (up_before == up_after) continue;  // monotone through i
        }
        out.push_back(walk[i]);
    }
    return out;
}

}  // namespace

GradedRoot build_root(const DeltaSequence& d) {
    TauFunction t = tau(d);
    GradedRoot r;
    r.profile = extrema_profile(t.values);
    r.min_chi = t.min();
    r.stem_chi = t.max();
    r.symmetric = is_symmetric(d);
    return r;
}

long long GradedRoot::vertex_count_at(long long chi) const {
    if (chi < min_chi) return 0;
    if (chi >= stem_chi) return 1;
    // Components of the sublevel set {tau <= chi}: one per local minimum
    // with value <= chi, merged once per interior local maximum <= chi.
    long long minima = 0, maxima = 0;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        bool is_min = (i % 2 == 0) == (profile.size() < 2 || profile[0] < profile[1]);
        if (is_min) {
            if (profile[i] <= chi) ++minima;
        } else if (i > 0 && i + 1 < profile.size() && profile[i] <= chi) {
            ++maxima;
        }
    }
    return minima - maxima;
}

std::vector<long long> GradedRoot::vertex_counts() const {
    std::vector<long long> out;
    for (long long h = min_chi; h <= stem_chi; ++h) out.push_back(vertex_count_at(h));
    return out;
}

bool GradedRoot::isomorphic_to(const GradedRoot& o) const {
    return profile == o.profile && min_chi == o.min_chi && stem_chi == o.stem_chi;
}

UModule u_module(const GradedRoot& r, std::optional<long long> d_anchor) {
    // Finite towers are the merge-tree bars of the tau walk: valleys are
    // births, interior peaks are merges, the elder component survives.
    const std::vector<long long>& p = r.profile;
    std::vector<long long> valleys;
    std::vector<std::pair<long long, std::size_t>> peaks;  // (value, left valley index)
    bool starts_with_min = p.size() < 2 || p[0] < p[1];
    for (std::size_t i = 0; i < p.size(); ++i) {
        bool is_min = (i % 2 == 0) == starts_with_min;
        if (is_min)
            valleys.push_back(p[i]);
        else if (i > 0 && i + 1 < p.size())
            peaks.push_back({p[i], valleys.size() - 1});
    }
    std::stable_sort(peaks.begin(), peaks.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<std::size_t> parent(valleys.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<long long> comp_min = valleys;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::map<std::pair<long long, long long>, long long> bars;
    for (const auto& [height, left] : peaks) {
        std::size_t a = find(left), b = find(left + 1);
        long long dying = std::max(comp_min[a], comp_min[b]);
        ++bars[{dying, height - dying}];
        parent[a] = b;
        comp_min[b] = std::min(comp_min[a], comp_min[b]);
    }

    UModule m;
    long long shift = 0;
    if (d_anchor) {
        m.absolute = true;
        shift = -(*d_anchor) - 2 * r.min_chi;
    }
    m.infinite_bottom = 2 * r.min_chi + shift;
    for (const auto& [key, mult] : bars)
        m.finite.push_back({2 * key.first + shift, key.second, mult});
    return m;
}

long long UModule::rank_at(long long grading) const {
    long long rank = 0;
    if (grading >= infinite_bottom && (grading - infinite_bottom) % 2 == 0) ++rank;
    for (const Tower& t : finite) {
        if (grading >= t.bottom && grading < t.bottom + 2 * t.length &&
            (grading - t.bottom) % 2 == 0)
            rank += t.multiplicity;
    }
    return rank;
}

bool is_symmetric(const DeltaSequence& d) {
    if (d.size() % 2 != 0) return false;
    std::size_t n = d.size();
    for (std::size_t i = 0; i < n; ++i)
        if (d.values[i] != -d.values[n - 1 - i]) return false;
    return true;
}

DeltaTildeResult delta_tilde(const DeltaSequence& d) {
    if (d.empty()) return {0, 0, 0, true};
    if (!is_symmetric(d))
        throw InvalidInputError("delta_tilde requires a symmetric delta sequence");
    TauFunction t = tau(d);
    std::size_t L = d.size() / 2;
    long long chi_v = t.values[L];
    long long chi_min = t.min();
    // Maximal interval around L on which tau stays at or below tau(L).
    std::size_t lo = L, hi = L;
    while (lo > 0 && t.values[lo - 1] <= chi_v) --lo;
    while (hi + 1 < t.values.size() && t.values[hi + 1] <= chi_v) ++hi;
    long long interval_min = chi_v;
    for (std::size_t k = lo; k <= hi; ++k) interval_min = std::min(interval_min, t.values[k]);
    return {chi_v, chi_min, chi_v - chi_min, interval_min == chi_min};
}

}  // namespace pin2
