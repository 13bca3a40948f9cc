// Command-line front end: graded roots, Manolescu invariants, connected
// sums, tower tensor computations and the verification suites, with JSON or
// CSV output.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pin2/borel.hpp"
#include "pin2/errors.hpp"
#include "pin2/rational.hpp"
#include "pin2/roots.hpp"
#include "pin2/seifert.hpp"
#include "pin2/sums.hpp"
#include "pin2/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";

ordered_json rational_json(const pin2::Rational& r) {
    if (r.is_integer()) return r.numerator();
    return r.str();
}

ordered_json manolescu_json(const pin2::ManolescuSet& m) {
    ordered_json j;
    j["alpha"] = rational_json(m.alpha);
    j["beta"] = rational_json(m.beta);
    j["gamma"] = rational_json(m.gamma);
    j["delta"] = rational_json(m.delta);
    return j;
}

ordered_json sequence_json(const pin2::DeltaSequence& d) {
    ordered_json j;
    if (d.has_positions()) j["positions"] = d.positions;
    j["values"] = d.values;
    return j;
}

ordered_json umodule_json(const pin2::UModule& m) {
    ordered_json j;
    j["convention"] = m.absolute ? "absolute" : "relative";
    j["infinite_tower_bottom"] = m.infinite_bottom;
    ordered_json towers = ordered_json::array();
    for (const auto& t : m.finite) {
        ordered_json tj;
        tj["bottom"] = t.bottom;
        tj["length"] = t.length;
        tj["multiplicity"] = t.multiplicity;
        towers.push_back(tj);
    }
    j["finite_towers"] = towers;
    return j;
}

void flatten_csv(const ordered_json& j, const std::string& prefix, std::string& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten_csv(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (j.is_array()) {
        bool scalar = true;
        for (const auto& v : j)
            if (v.is_object() || v.is_array()) scalar = false;
        if (scalar) {
            std::string joined;
            for (const auto& v : j) {
                if (!joined.empty()) joined += ";";
                joined += v.is_string() ? v.get<std::string>() : v.dump();
            }
            out += prefix + "," + joined + "\n";
        } else {
            int i = 0;
            for (const auto& v : j) flatten_csv(v, prefix + "." + std::to_string(i++), out);
        }
    } else {
        out += prefix + "," + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
    }
}

struct OutputOptions {
    bool json = false;
    bool csv = false;
};

void emit(const std::string& command, const ordered_json& inputs, const ordered_json& result,
          const ordered_json& provenance, const OutputOptions& opts,
          const std::string& human_text) {
    ordered_json record;
    record["command"] = command;
    record["inputs"] = inputs;
    record["result"] = result;
    record["dtable_provenance"] = provenance;
    record["version"] = kVersion;
    if (opts.json) {
        std::cout << record.dump(2) << "\n";
    } else if (opts.csv) {
        std::string out = "key,value\n";
        flatten_csv(record, "", out);
        std::cout << out;
    } else {
        std::cout << human_text;
    }
}

std::vector<std::array<long long, 3>> parse_triples(const std::string& spec) {
    std::vector<std::array<long long, 3>> out;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t end = spec.find(';', start);
        std::string item = spec.substr(start, end == std::string::npos ? end : end - start);
        if (!item.empty()) {
            std::array<long long, 3> t{};
            char extra;
            if (item.find('-') != std::string::npos)
                throw pin2::InvalidInputError(
                    "negative indices are not supported: orientation reversal is handled only "
                    "through the duality identities on invariant quadruples");
            if (std::sscanf(item.c_str(), "%lld,%lld,%lld %c", &t[0], &t[1], &t[2], &extra) != 3)
                throw pin2::InvalidInputError("cannot parse triple '" + item + "'");
            out.push_back(t);
        }
        if (end == std::string::npos) break;
        start = end + 1;
    }
    if (out.empty()) throw pin2::InvalidInputError("no triples given");
    return out;
}

pin2::Rational parse_rational(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            return pin2::Rational(std::stoll(text.substr(0, slash)),
                                  std::stoll(text.substr(slash + 1)));
        }
        std::size_t dot = text.find('.');
        if (dot == std::string::npos) return pin2::Rational(std::stoll(text));
        std::string frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 6)
            throw pin2::InvalidInputError("cannot parse rational '" + text + "'");
        long long den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        long long whole = std::stoll(text.substr(0, dot));
        long long num = std::stoll(frac);
        bool neg = text[0] == '-';
        return pin2::Rational(whole * den + (neg ? -num : num), den);
    } catch (const std::invalid_argument&) {
        throw pin2::InvalidInputError("cannot parse rational '" + text + "'");
    } catch (const std::out_of_range&) {
        throw pin2::InvalidInputError("rational out of range '" + text + "'");
    }
}

pin2::DTable load_dtable(const std::string& path) {
    pin2::DTable table;
    if (!path.empty()) table.load_file(path);
    return table;
}

int cmd_root(long long p, long long q, long long r, bool want_reduced, bool want_expanded,
             const std::string& dtable_path, const OutputOptions& opts) {
    pin2::DTable table = load_dtable(dtable_path);
    pin2::DeltaSequence expanded = pin2::brieskorn_delta(p, q, r);
    pin2::DeltaSequence reduced = pin2::reduce(expanded);
    pin2::TauFunction t = pin2::tau(reduced);
    pin2::GradedRoot root = pin2::build_root(reduced);
    pin2::DeltaTildeResult dt = pin2::delta_tilde(reduced);
    std::optional<pin2::DTable::Entry> dentry = table.lookup(p, q, r);
    std::optional<long long> anchor;
    if (dentry) anchor = dentry->d;
    pin2::UModule um = pin2::u_module(root, anchor);

    if (!want_reduced && !want_expanded) want_reduced = true;

    ordered_json inputs{{"p", p}, {"q", q}, {"r", r}};
    ordered_json result;
    result["N"] = pin2::BrieskornData::general(p, q, r).N;
    if (want_expanded) result["expanded"] = sequence_json(expanded);
    if (want_reduced) result["reduced"] = sequence_json(reduced);
    result["tau"] = t.values;
    ordered_json counts = ordered_json::array();
    {
        std::vector<long long> vc = root.vertex_counts();
        long long chi = root.min_chi;
        for (long long c : vc) {
            ordered_json row;
            row["chi"] = chi++;
            row["count"] = c;
            counts.push_back(row);
        }
    }
    result["vertex_counts"] = counts;
    result["umodule"] = umodule_json(um);
    result["delta_tilde"] = dt.delta_tilde;
    result["projective"] = dt.projective;
    if (dentry) result["d"] = dentry->d;

    ordered_json provenance = ordered_json::object();
    if (dentry)
        provenance[std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r)] =
            dentry->provenance;

    std::string human;
    {
        std::string label = "Sigma(" + std::to_string(p) + "," + std::to_string(q) + "," +
                            std::to_string(r) + ")";
        human += label + "\n";
        if (want_expanded) human += "  expanded: " + expanded.str() + "\n";
        if (want_reduced) human += "  reduced:  " + reduced.str() + "\n";
        human += "  tau:      ";
        for (std::size_t i = 0; i < t.values.size(); ++i)
            human += (i ? "," : "") + std::to_string(t.values[i]);
        human += "\n  vertices per grading (chi " + std::to_string(root.min_chi) + ".." +
                 std::to_string(root.stem_chi) + "): ";
        std::vector<long long> vc = root.vertex_counts();
        for (std::size_t i = 0; i < vc.size(); ++i) human += (i ? "," : "") + std::to_string(vc[i]);
        human += "\n  towers (" + std::string(um.absolute ? "absolute" : "relative") +
                 "): infinite from " + std::to_string(um.infinite_bottom);
        for (const auto& tw : um.finite)
            human += ", " + std::to_string(tw.multiplicity) + "x(bottom " +
                     std::to_string(tw.bottom) + ", len " + std::to_string(tw.length) + ")";
        human += "\n  delta_tilde = " + std::to_string(dt.delta_tilde) +
                 (dt.projective ? " (projective type)" : " (not projective type)") + "\n";
    }
    emit("root", inputs, result, provenance, opts, human);
    return 0;
}

ordered_json seifert_json(const pin2::SeifertInvariants& s) {
    ordered_json j;
    j["p"] = s.p;
    j["q"] = s.q;
    j["r"] = s.r;
    j["d"] = s.d;
    j["delta_tilde"] = s.delta_tilde;
    j["mu_bar"] = s.mu_bar;
    j["projective"] = s.projective;
    j["manolescu"] = manolescu_json(s.manolescu);
    return j;
}

int cmd_invariants(long long p, long long q, long long r, std::optional<long long> d,
                   const std::string& dtable_path, const OutputOptions& opts) {
    pin2::DTable table = load_dtable(dtable_path);
    pin2::SeifertInvariants s = pin2::seifert_invariants(p, q, r, d, &table);
    ordered_json inputs{{"p", p}, {"q", q}, {"r", r}};
    if (d) inputs["d"] = *d;
    ordered_json provenance = ordered_json::object();
    provenance[std::to_string(s.p) + "," + std::to_string(s.q) + "," + std::to_string(s.r)] =
        s.d_provenance;
    std::string human = "Sigma(" + std::to_string(s.p) + "," + std::to_string(s.q) + "," +
                        std::to_string(s.r) + "): alpha=" + s.manolescu.alpha.str() +
                        " beta=" + s.manolescu.beta.str() + " gamma=" + s.manolescu.gamma.str() +
                        " delta=" + s.manolescu.delta.str() + " mu_bar=" + std::to_string(s.mu_bar) +
                        " delta_tilde=" + std::to_string(s.delta_tilde) +
                        (s.projective ? " (projective)" : " (not projective)") + "\n";
    emit("invariants", inputs, seifert_json(s), provenance, opts, human);
    return 0;
}

int cmd_sum(const std::string& spec, const std::string& method, const std::string& dtable_path,
            long long cost_limit, const OutputOptions& opts) {
    if (method != "formula" && method != "chain" && method != "both")
        throw pin2::InvalidInputError("--method must be formula, chain or both");
    pin2::DTable table = load_dtable(dtable_path);
    std::vector<pin2::SeifertInvariants> parts;
    ordered_json provenance = ordered_json::object();
    for (const auto& t : parse_triples(spec)) {
        parts.push_back(pin2::seifert_invariants(t[0], t[1], t[2], std::nullopt, &table));
        provenance[std::to_string(parts.back().p) + "," + std::to_string(parts.back().q) + "," +
                   std::to_string(parts.back().r)] = parts.back().d_provenance;
    }

    ordered_json result;
    ordered_json parts_json = ordered_json::array();
    for (const auto& s : parts) parts_json.push_back(seifert_json(s));
    result["parts"] = parts_json;
    result["method"] = method;

    std::optional<pin2::ManolescuSet> formula, chain;
    if (method == "formula" || method == "both")
        formula = pin2::connected_sum_invariants(parts);
    if (method == "chain" || method == "both") chain = pin2::connected_sum_chain(parts, cost_limit);
    if (formula) result["formula"] = manolescu_json(*formula);
    if (chain) result["chain"] = manolescu_json(*chain);
    if (formula && chain && !(*formula == *chain))
        throw pin2::InternalCheckError("formula and chain pipelines disagree: " + formula->str() +
                                       " vs " + chain->str());
    pin2::ManolescuSet m = formula ? *formula : *chain;
    result["manolescu"] = manolescu_json(m);
    result["h_split"] = pin2::h_split(m);

    std::string human = "sum " + spec + " [" + method + "]: alpha=" + m.alpha.str() +
                        " beta=" + m.beta.str() + " gamma=" + m.gamma.str() +
                        " delta=" + m.delta.str() + "\n";
    if (formula && chain) human += "  formula and chain pipelines agree\n";
    emit("sum", ordered_json{{"spec", spec}, {"method", method}}, result, provenance, opts, human);
    return 0;
}

int cmd_chain(const std::string& spec, long long m, const std::string& n_text,
              long long cost_limit, const OutputOptions& opts) {
    pin2::Rational n = parse_rational(n_text);
    std::vector<std::pair<int, int>> towers;
    std::size_t start = 0;
    long long cost = 0;
    while (start <= spec.size()) {
        std::size_t end = spec.find(';', start);
        std::string item = spec.substr(start, end == std::string::npos ? end : end - start);
        if (!item.empty()) {
            int D, t;
            char extra;
            if (std::sscanf(item.c_str(), "%d:%d %c", &D, &t, &extra) != 2 || D < 0 || t < 0)
                throw pin2::InvalidInputError("cannot parse tower spec '" + item + "'");
            towers.push_back({D, t});
            cost += 2 * D + t;
        }
        if (end == std::string::npos) break;
        start = end + 1;
    }
    if (towers.empty()) throw pin2::InvalidInputError("no towers given");
    if (cost > cost_limit)
        throw pin2::ResourceError("total tower cost " + std::to_string(cost) +
                                  " exceeds the cost limit " + std::to_string(cost_limit));

    pin2::SWFLikeComplex z = pin2::make_T(towers[0].first, towers[0].second);
    for (std::size_t i = 1; i < towers.size(); ++i)
        z = pin2::tensor(z, pin2::make_T(towers[i].first, towers[i].second));
    pin2::AbcdValues v = pin2::abc_values(z);
    pin2::Triple triple{z, static_cast<int>(m), n};
    pin2::ManolescuSet ms = pin2::manolescu(triple);

    ordered_json result;
    result["a"] = v.a;
    result["b"] = v.b;
    result["c"] = v.c;
    result["d"] = v.d;
    result["manolescu"] = manolescu_json(ms);
    std::string human = "chain " + spec + " m=" + std::to_string(m) + " n=" + n.str() +
                        ": (a,b,c,d)=(" + std::to_string(v.a) + "," + std::to_string(v.b) + "," +
                        std::to_string(v.c) + "," + std::to_string(v.d) + ")  alpha=" +
                        ms.alpha.str() + " beta=" + ms.beta.str() + " gamma=" + ms.gamma.str() +
                        " delta=" + ms.delta.str() + "\n";
    emit("chain", ordered_json{{"spec", spec}, {"m", m}, {"n", n.str()}}, result,
         ordered_json::object(), opts, human);
    return 0;
}

int cmd_verify(const std::string& suite, const OutputOptions& opts) {
    if (suite != "quick" && suite != "full")
        throw pin2::InvalidInputError("--suite must be quick or full");
    std::vector<pin2::VerifyCheck> checks = pin2::run_verification(suite == "full");
    bool ok = pin2::verification_passed(checks);

    ordered_json result;
    ordered_json list = ordered_json::array();
    std::string human;
    for (const auto& c : checks) {
        ordered_json row;
        row["name"] = c.name;
        row["pass"] = c.pass;
        row["seconds"] = static_cast<long long>(c.seconds * 1000) / 1000.0;
        if (!c.detail.empty()) row["detail"] = c.detail;
        list.push_back(row);
        char buf[32];
        std::snprintf(buf, sizeof buf, "%7.2fs", c.seconds);
        human += std::string(c.pass ? "[PASS]" : "[FAIL]") + " " + buf + "  " + c.name +
                 (c.detail.empty() ? "" : "  (" + c.detail + ")") + "\n";
    }
    result["checks"] = list;
    result["all_pass"] = ok;
    human += ok ? "all checks passed\n" : "FAILURES present\n";
    emit("verify", ordered_json{{"suite", suite}}, result, ordered_json::object(), opts, human);
    if (!ok) throw pin2::InternalCheckError("verification failed");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Manolescu invariants of Brieskorn spheres and their connected sums"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    OutputOptions opts;

    auto add_output_flags = [&opts](CLI::App* cmd) {
        auto* j = cmd->add_flag("--json", opts.json, "emit a JSON record");
        cmd->add_flag("--csv", opts.csv, "emit CSV key,value rows")->excludes(j);
    };

    // root
    long long p = 0, q = 0, r = 0;
    bool want_reduced = false, want_expanded = false;
    std::string dtable_path;
    CLI::App* root = app.add_subcommand("root", "delta sequence, graded root and F[U]-module");
    root->add_option("p", p)->required();
    root->add_option("q", q)->required();
    root->add_option("r", r)->required();
    root->add_flag("--reduced", want_reduced, "print the reduced sequence");
    root->add_flag("--expanded", want_expanded, "print the expanded sequence");
    root->add_option("--d-table", dtable_path, "JSON override file of {p,q,r,d} records");
    add_output_flags(root);

    // invariants
    long long d_flag = 0;
    bool d_given = false;
    CLI::App* inv = app.add_subcommand("invariants", "Manolescu invariants of one space");
    inv->add_option("p", p)->required();
    inv->add_option("q", q)->required();
    inv->add_option("r", r)->required();
    inv->add_option("--d", d_flag, "d invariant when not in the table")
        ->each([&](const std::string&) { d_given = true; });
    inv->add_option("--d-table", dtable_path, "JSON override file of {p,q,r,d} records");
    add_output_flags(inv);

    // sum
    std::string spec, method = "formula";
    long long cost_limit = 6;
    CLI::App* sum = app.add_subcommand("sum", "connected-sum invariants");
    sum->add_option("spec", spec, "parts as \"p,q,r;p,q,r;...\"")->required();
    sum->add_option("--method", method, "formula | chain | both");
    sum->add_option("--cost-limit", cost_limit, "chain-engine budget (total delta_tilde)");
    sum->add_option("--d-table", dtable_path, "JSON override file of {p,q,r,d} records");
    add_output_flags(sum);

    // chain
    std::string tower_spec, n_text = "0";
    long long m_desusp = 0, chain_cost_limit = 12;
    CLI::App* chain = app.add_subcommand("chain", "invariants of tensors of tower complexes");
    chain->add_option("spec", tower_spec, "towers as \"D:t;D:t;...\"")->required();
    chain->add_option("m", m_desusp, "R~ desuspension count")->required();
    chain->add_option("n", n_text, "H desuspension count (rational, e.g. 0.5 or 1/2)")->required();
    chain->add_option("--cost-limit", chain_cost_limit, "budget for the total of 2D+t");
    add_output_flags(chain);

    // verify
    std::string suite = "quick";
    CLI::App* verify = app.add_subcommand("verify", "run the cross-validation suite");
    verify->add_option("--suite", suite, "quick | full");
    add_output_flags(verify);

    CLI11_PARSE(app, argc, argv);

    try {
        if (root->parsed())
            return cmd_root(p, q, r, want_reduced, want_expanded, dtable_path, opts);
        if (inv->parsed())
            return cmd_invariants(p, q, r, d_given ? std::optional<long long>(d_flag) : std::nullopt,
                                  dtable_path, opts);
        if (sum->parsed()) return cmd_sum(spec, method, dtable_path, cost_limit, opts);
        if (chain->parsed()) return cmd_chain(tower_spec, m_desusp, n_text, chain_cost_limit, opts);
        if (verify->parsed()) return cmd_verify(suite, opts);
    } catch (const pin2::InvalidInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const pin2::InternalCheckError& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 2;
    } catch (const pin2::ResourceError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
