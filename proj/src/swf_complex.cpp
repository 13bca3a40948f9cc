#include "pin2/swf_complex.hpp"

#include <algorithm>

#include "pin2/errors.hpp"

namespace pin2 {

int SWFLikeComplex::max_degree() const {
    int m = 0;
    for (int d : degree) m = std::max(m, d);
    return m;
}

F2Vec SWFLikeComplex::apply_j(const F2Vec& v, int times) const {
    F2Vec cur = v;
    for (int t = 0; t < ((times % 4) + 4) % 4; ++t) {
        std::vector<int32_t> terms;
        for (int32_t z : cur)
            for (int32_t w : act_j[z]) terms.push_back(w);
        cur = f2_collect(std::move(terms));
    }
    return cur;
}

F2Vec SWFLikeComplex::apply_s(const F2Vec& v) const {
    std::vector<int32_t> terms;
    for (int32_t z : v)
        for (int32_t w : act_s[z]) terms.push_back(w);
    return f2_collect(std::move(terms));
}

F2Vec SWFLikeComplex::apply_monomial(int a, int b, const F2Vec& v) const {
    return apply_j(b ? apply_s(v) : v, a);
}

int SWFLikeComplex::chase_j(int z, int times) const {
    int cur = z;
    for (int t = 0; t < ((times % 4) + 4) % 4; ++t) {
        if (act_j[cur].size() != 1)
            throw InternalCheckError("chase_j requires a permutation j-action");
        cur = act_j[cur][0];
    }
    return cur;
}

std::vector<std::vector<int32_t>> SWFLikeComplex::basis_by_degree() const {
    std::vector<std::vector<int32_t>> buckets(max_degree() + 1);
    for (int z = 0; z < dim(); ++z) buckets[degree[z]].push_back(z);
    return buckets;
}

namespace {

// Appends one free orbit (eight basis elements) for a generator of the
// given degree, with the structural actions of a free G-module.
int append_free_orbit(SWFLikeComplex& z, const std::string& name, int deg) {
    int k = static_cast<int>(z.free_gens.size());
    z.free_gens.push_back({name, deg, static_cast<int32_t>(z.degree.size())});
    static const char* kPrefix[8] = {"", "j.", "j2.", "j3.", "s.", "js.", "j2s.", "j3s."};
    for (int b = 0; b < 2; ++b) {
        for (int a = 0; a < 4; ++a) {
            z.degree.push_back(deg + b);
            z.names.push_back(std::string(kPrefix[4 * b + a]) + name);
        }
    }
    z.diff.resize(z.degree.size());
    z.act_j.resize(z.degree.size());
    z.act_s.resize(z.degree.size());
    for (int b = 0; b < 2; ++b) {
        for (int a = 0; a < 4; ++a) {
            int e = z.orbit_elem(k, a, b);
            z.act_j[e] = {static_cast<int32_t>(z.orbit_elem(k, (a + 1) % 4, b))};
            if (b == 0) z.act_s[e] = {static_cast<int32_t>(z.orbit_elem(k, (3 * a) % 4, 1))};
        }
    }
    return k;
}

// Differentials of the seven non-generator orbit elements, by the Leibniz
// rule: d(j^a s^b x) = j^a s^b dx + [b=1] (j^a + j^{a+2}) x.
void complete_orbit_diff(SWFLikeComplex& z, int k, const F2Vec& d_gen) {
    z.diff[z.orbit_elem(k, 0, 0)] = d_gen;
    for (int a = 1; a < 4; ++a)
        z.diff[z.orbit_elem(k, a, 0)] = z.apply_j(z.diff[z.orbit_elem(k, a - 1, 0)]);
    for (int a = 0; a < 4; ++a) {
        F2Vec d = z.apply_monomial(a, 1, d_gen);
        d = f2_add(d, f2_collect({static_cast<int32_t>(z.orbit_elem(k, a, 0)),
                                  static_cast<int32_t>(z.orbit_elem(k, (a + 2) % 4, 0))}));
        z.diff[z.orbit_elem(k, a, 1)] = d;
    }
}

}  // namespace

SWFLikeComplex make_fixed_complex(int t) {
    if (t < 0) throw InvalidInputError("make_fixed_complex: negative level");
    SWFLikeComplex z;
    z.level = t;
    z.fixed_count = t == 0 ? 1 : 1 + 2 * t;
    z.degree.assign(z.fixed_count, 0);
    z.names.assign(z.fixed_count, "");
    z.diff.assign(z.fixed_count, {});
    z.act_j.assign(z.fixed_count, {});
    z.act_s.assign(z.fixed_count, {});

    // Index layout: c_0 at 0, c_i at 2i-1, jc_i at 2i.
    auto c = [](int i) { return i == 0 ? 0 : 2 * i - 1; };
    auto jc = [](int i) { return 2 * i; };

    z.names[0] = "c0";
    z.act_j[0] = {0};
    for (int i = 1; i <= t; ++i) {
        z.degree[c(i)] = i;
        z.degree[jc(i)] = i;
        z.names[c(i)] = "c" + std::to_string(i);
        z.names[jc(i)] = "jc" + std::to_string(i);
        z.act_j[c(i)] = {static_cast<int32_t>(jc(i))};
        z.act_j[jc(i)] = {static_cast<int32_t>(c(i))};  // j^2 c_i = c_i
        if (i == 1) {
            z.diff[c(1)] = {0};
            z.diff[jc(1)] = {0};  // d(jc_1) = j c_0 = c_0
        } else {
            z.diff[c(i)] = f2_collect({static_cast<int32_t>(c(i - 1)), static_cast<int32_t>(jc(i - 1))});
            z.diff[jc(i)] = z.apply_j(z.diff[c(i)]);
        }
    }
    if (t == 0)
        z.fundamental = {0};
    else
        z.fundamental = f2_collect({static_cast<int32_t>(c(t)), static_cast<int32_t>(jc(t))});
    return z;
}

SWFLikeComplex make_hplus() {
    SWFLikeComplex z = make_fixed_complex(0);
    z.names[0] = "r0";
    int y1 = append_free_orbit(z, "y1", 1);
    int y2 = append_free_orbit(z, "y2", 2);
    int y3 = append_free_orbit(z, "y3", 3);
    complete_orbit_diff(z, y1, {0});
    complete_orbit_diff(z, y2,
                        f2_collect({static_cast<int32_t>(z.orbit_elem(y1, 0, 0)),
                                    static_cast<int32_t>(z.orbit_elem(y1, 1, 0))}));
    complete_orbit_diff(z, y3,
                        f2_collect({static_cast<int32_t>(z.orbit_elem(y1, 0, 1)),
                                    static_cast<int32_t>(z.orbit_elem(y2, 0, 0)),
                                    static_cast<int32_t>(z.orbit_elem(y2, 1, 0))}));
    return z;
}

SWFLikeComplex make_T(int D, int t) {
    if (D < 0) throw InvalidInputError("make_T: negative tower height");
    SWFLikeComplex z = make_fixed_complex(t);
    std::vector<int> gens;
    for (int i = 1; i <= D; ++i)
        gens.push_back(append_free_orbit(z, "x" + std::to_string(t + 2 * i - 1), t + 2 * i - 1));
    for (int i = 1; i <= D; ++i) {
        if (i == 1) {
            complete_orbit_diff(z, gens[0], z.fundamental);
        } else {
            // d(x_i) = s (1+j^2) x_{i-2} = s x + j^2 s x
            int prev = gens[i - 2];
            complete_orbit_diff(z, gens[i - 1],
                                f2_collect({static_cast<int32_t>(z.orbit_elem(prev, 0, 1)),
                                            static_cast<int32_t>(z.orbit_elem(prev, 2, 1))}));
        }
    }
    return z;
}

SWFLikeComplex suspend_rtilde(const SWFLikeComplex& z) { return tensor(make_fixed_complex(1), z); }

SWFLikeComplex suspend_h(const SWFLikeComplex& z) { return tensor(make_hplus(), z); }

SWFLikeComplex tensor(const SWFLikeComplex& z1, const SWFLikeComplex& z2) {
    int n1 = z1.dim(), n2 = z2.dim();
    int f1 = z1.fixed_count, f2 = z2.fixed_count;

    SWFLikeComplex z;
    z.level = z1.level + z2.level;
    z.fixed_count = f1 * f2;

    // Basis: fixed pairs first, then the remaining pairs, (u,v) lexicographic.
    std::vector<int32_t> imap(static_cast<std::size_t>(n1) * n2);
    int32_t next = 0;
    for (int u = 0; u < f1; ++u)
        for (int v = 0; v < f2; ++v) imap[static_cast<std::size_t>(u) * n2 + v] = next++;
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v)
            if (u >= f1 || v >= f2) imap[static_cast<std::size_t>(u) * n2 + v] = next++;
    auto at = [&](int32_t u, int32_t v) { return imap[static_cast<std::size_t>(u) * n2 + v]; };

    int total = n1 * n2;
    z.degree.assign(total, 0);
    z.names.assign(total, "");
    z.diff.assign(total, {});
    z.act_j.assign(total, {});
    z.act_s.assign(total, {});

    for (int u = 0; u < n1; ++u) {
        for (int v = 0; v < n2; ++v) {
            int32_t p = at(u, v);
            z.degree[p] = z1.degree[u] + z2.degree[v];
            z.names[p] = z1.names[u] + "@" + z2.names[v];
            z.act_j[p] = {at(z1.chase_j(u, 1), z2.chase_j(v, 1))};
            // s(u@v) = su@v + j^2 u@sv; each action map has at most one term.
            std::vector<int32_t> sv;
            for (int32_t t : z1.act_s[u]) sv.push_back(at(t, v));
            for (int32_t t : z2.act_s[v]) sv.push_back(at(z1.chase_j(u, 2), t));
            z.act_s[p] = f2_collect(std::move(sv));
            std::vector<int32_t> d;
            for (int32_t t : z1.diff[u]) d.push_back(at(t, v));
            for (int32_t t : z2.diff[v]) d.push_back(at(u, t));
            z.diff[p] = f2_collect(std::move(d));
        }
    }

    // Orbit generators: (free generator of z1)@(basis element of z2), then
    // (fixed cell of z1)@(free generator of z2).
    for (const FreeGen& x : z1.free_gens) {
        for (int v = 0; v < n2; ++v)
            z.free_gens.push_back(
                {x.name + "@" + z2.names[v], x.degree + z2.degree[v], at(x.index, v)});
    }
    for (int c = 0; c < f1; ++c) {
        for (const FreeGen& y : z2.free_gens)
            z.free_gens.push_back(
                {z1.names[c] + "@" + y.name, z1.degree[c] + y.degree, at(c, y.index)});
    }

    std::vector<int32_t> f;
    for (int32_t u : z1.fundamental)
        for (int32_t v : z2.fundamental) f.push_back(at(u, v));
    z.fundamental = f2_collect(std::move(f));

    // The monomial translates j^a s^b g of the listed generators must form a
    // basis of the part above the fixed pairs. Each translate has at most
    // two terms, so a sparse elimination settles it cheaply.
    {
        long long free_dim = total - z.fixed_count;
        if (static_cast<long long>(z.free_gens.size()) * 8 != free_dim)
            throw InternalCheckError("tensor: free generator count mismatch");
        std::vector<F2Vec> translates;
        translates.reserve(z.free_gens.size() * 8);
        for (const FreeGen& g : z.free_gens)
            for (int b = 0; b < 2; ++b)
                for (int a = 0; a < 4; ++a)
                    translates.push_back(z.apply_monomial(a, b, {g.index}));
        std::vector<int32_t> owner(total, -1);
        std::vector<F2Vec> reduced;
        for (F2Vec col : translates) {
            while (!col.empty() && owner[col.back()] >= 0)
                col = f2_add(col, reduced[owner[col.back()]]);
            if (col.empty()) throw InternalCheckError("tensor: free part is not free");
            for (int32_t t : col)
                if (t < z.fixed_count)
                    throw InternalCheckError("tensor: orbit translate meets the fixed part");
            owner[col.back()] = static_cast<int32_t>(reduced.size());
            reduced.push_back(std::move(col));
        }
    }
    return z;
}

bool ValidationReport::all_pass() const {
    for (const Check& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string ValidationReport::summary() const {
    std::string out;
    for (const Check& c : checks) {
        out += c.pass ? "[pass] " : "[FAIL] ";
        out += c.name;
        if (!c.pass && !c.detail.empty()) out += ": " + c.detail;
        out += "\n";
    }
    return out;
}

ValidationReport validate(const SWFLikeComplex& z) {
    ValidationReport rep;
    auto check = [&](const std::string& name, bool pass, const std::string& detail = "") {
        rep.checks.push_back({name, pass, detail});
    };

    // Grading of the structure maps.
    bool grading = true;
    std::string gdetail;
    for (int e = 0; e < z.dim() && grading; ++e) {
        for (int32_t t : z.diff[e])
            if (z.degree[t] != z.degree[e] - 1) {
                grading = false;
                gdetail = "d(" + z.names[e] + ") hits degree " + std::to_string(z.degree[t]);
                break;
            }
        for (int32_t t : z.act_j[e])
            if (z.degree[t] != z.degree[e]) grading = false;
        for (int32_t t : z.act_s[e])
            if (z.degree[t] != z.degree[e] + 1) grading = false;
    }
    check("grading", grading, gdetail);

    // d d = 0.
    bool dd = true;
    std::string dddetail;
    for (int e = 0; e < z.dim(); ++e) {
        std::vector<int32_t> terms;
        for (int32_t t : z.diff[e])
            for (int32_t t2 : z.diff[t]) terms.push_back(t2);
        if (!f2_collect(std::move(terms)).empty()) {
            dd = false;
            dddetail = "dd(" + z.names[e] + ") != 0";
            break;
        }
    }
    check("dd_zero", dd, dddetail);

    // Leibniz consistency: d(jz) = j dz and d(sz) = s dz + (1+j^2) z.
    bool leib = true;
    std::string ldetail;
    for (int e = 0; e < z.dim() && leib; ++e) {
        F2Vec lhs_j, rhs_j;
        for (int32_t t : z.act_j[e]) lhs_j = f2_add(lhs_j, z.diff[t]);
        rhs_j = z.apply_j(z.diff[e]);
        if (lhs_j != rhs_j) {
            leib = false;
            ldetail = "j action not chain-compatible at " + z.names[e];
        }
        F2Vec lhs_s;
        for (int32_t t : z.act_s[e]) lhs_s = f2_add(lhs_s, z.diff[t]);
        F2Vec rhs_s = z.apply_s(z.diff[e]);
        rhs_s = f2_add(rhs_s, {static_cast<int32_t>(e)});
        rhs_s = f2_add(rhs_s, z.apply_j({static_cast<int32_t>(e)}, 2));
        if (lhs_s != rhs_s) {
            leib = false;
            ldetail = "s action not Leibniz-compatible at " + z.names[e];
        }
    }
    check("leibniz", leib, ldetail);

    // j^4 = 1 and s^2 = 0 on every basis element; j invertible.
    bool rel = true;
    for (int e = 0; e < z.dim() && rel; ++e) {
        if (z.apply_j({static_cast<int32_t>(e)}, 4) != F2Vec{static_cast<int32_t>(e)}) rel = false;
        if (!z.apply_s(z.apply_s({static_cast<int32_t>(e)})).empty()) rel = false;
    }
    check("galgebra_relations", rel);

    // Fixed part: a subcomplex with s = 0.
    bool sub = true;
    for (int e = 0; e < z.fixed_count && sub; ++e) {
        for (int32_t t : z.diff[e])
            if (!z.is_fixed(t)) sub = false;
        for (int32_t t : z.act_j[e])
            if (!z.is_fixed(t)) sub = false;
        if (!z.act_s[e].empty()) sub = false;
    }
    check("fixed_subcomplex", sub);

    // Free part: the eight monomial translates of each listed generator are
    // a basis of everything above the fixed part. Translates have at most
    // two terms (the action maps do), so sparse elimination is cheap.
    {
        bool freeok =
            static_cast<long long>(z.dim()) - z.fixed_count ==
            8 * static_cast<long long>(z.free_gens.size());
        std::string fdetail = freeok ? "" : "free dimension mismatch";
        std::vector<int32_t> owner(z.dim(), -1);
        std::vector<F2Vec> reduced;
        for (const FreeGen& g : z.free_gens) {
            if (!freeok) break;
            if (g.index < z.fixed_count || g.index >= z.dim() || z.degree[g.index] != g.degree) {
                freeok = false;
                fdetail = "bad generator record " + g.name;
                break;
            }
            for (int b = 0; b < 2 && freeok; ++b) {
                for (int a = 0; a < 4 && freeok; ++a) {
                    F2Vec col = z.apply_monomial(a, b, {g.index});
                    while (!col.empty() && owner[col.back()] >= 0)
                        col = f2_add(col, reduced[owner[col.back()]]);
                    if (col.empty()) {
                        freeok = false;
                        fdetail = "translates of " + g.name + " are dependent";
                        break;
                    }
                    if (col.front() < z.fixed_count) {
                        freeok = false;
                        fdetail = "translate of " + g.name + " meets the fixed part";
                        break;
                    }
                    owner[col.back()] = static_cast<int32_t>(reduced.size());
                    reduced.push_back(std::move(col));
                }
            }
        }
        check("free_part_basis", freeok, fdetail);
    }

    // Fundamental class: a j-invariant cycle of degree `level` in the fixed
    // part whose class generates the fixed-part homology (F2, degree level).
    bool fok = !z.fundamental.empty();
    for (int32_t t : z.fundamental) {
        if (!z.is_fixed(t) || z.degree[t] != z.level) fok = false;
    }
    F2Vec df;
    for (int32_t t : z.fundamental) df = f2_add(df, z.diff[t]);
    if (!df.empty()) fok = false;
    if (z.apply_j(z.fundamental) != z.fundamental) fok = false;
    check("fundamental_class", fok);

    // Fixed-part homology by dense linear algebra.
    {
        int maxdeg = 0;
        for (int e = 0; e < z.fixed_count; ++e) maxdeg = std::max(maxdeg, z.degree[e]);
        std::vector<std::vector<int32_t>> bydeg(maxdeg + 1);
        std::vector<int> pos(z.fixed_count, -1);
        for (int e = 0; e < z.fixed_count; ++e) {
            pos[e] = static_cast<int>(bydeg[z.degree[e]].size());
            bydeg[z.degree[e]].push_back(e);
        }
        auto boundary_matrix = [&](int d) {  // C_d -> C_{d-1}
            std::size_t rows = d >= 1 && d - 1 <= maxdeg ? bydeg[d - 1].size() : 0;
            std::size_t cols = d >= 0 && d <= maxdeg ? bydeg[d].size() : 0;
            F2Matrix m(rows, cols);
            if (d >= 1 && d <= maxdeg) {
                for (std::size_t c = 0; c < cols; ++c)
                    for (int32_t t : z.diff[bydeg[d][c]]) m.set(pos[t], c, true);
            }
            return m;
        };
        bool hok = true;
        std::string hdetail;
        for (int d = 0; d <= maxdeg; ++d) {
            long long h = homology_dim(boundary_matrix(d + 1), boundary_matrix(d));
            long long want = d == z.level ? 1 : 0;
            if (h != want) {
                hok = false;
                hdetail = "fixed H_" + std::to_string(d) + " = " + std::to_string(h);
                break;
            }
        }
        if (hok && z.level <= maxdeg) {
            // The fundamental class must not be a boundary.
            F2Matrix bin = boundary_matrix(z.level + 1);
            F2Vec v;
            for (int32_t t : z.fundamental) v.push_back(pos[t]);
            std::sort(v.begin(), v.end());
            if (in_image(bin, v)) {
                hok = false;
                hdetail = "fundamental class is a boundary";
            }
        }
        check("fixed_homology", hok, hdetail);
    }

    return rep;
}

}  // namespace pin2
