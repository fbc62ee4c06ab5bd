#include "mldeg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mldeg/checks.hpp"
#include "mldeg/coeff_table.hpp"
#include "mldeg/degrees.hpp"
#include "mldeg/lascoux.hpp"
#include "mldeg/poly_n.hpp"
#include "mldeg/qschur.hpp"
#include "mldeg/schur_oracle.hpp"

namespace mldeg::cli {

using json = nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised after the JSON record has been written, to set the exit code.
struct PathDisagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepts "{0,3}", "0,3", or separate tokens "0" "3" (what a shell makes of
// an unquoted {0,3}).
IndexSet parse_set_tokens(const std::vector<std::string>& toks) {
    if (toks.size() == 1 && !toks[0].empty() && toks[0].front() == '{') return IndexSet::parse(toks[0]);
    std::string joined = "{";
    for (std::size_t k = 0; k < toks.size(); ++k) joined += (k ? "," : "") + toks[k];
    return IndexSet::parse(joined + "}");
}

json poly_json(const UniPolyQ& p) {
    json coeffs = json::array();
    for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(to_string(p.coeff(k)));
    return json{{"coefficients", coeffs}, {"degree", p.degree()}, {"text", p.to_string()}};
}

MatrixType parse_type(const std::string& s) {
    if (s == "sym") return MatrixType::symmetric;
    if (s == "a") return MatrixType::general;
    if (s == "d") return MatrixType::skew;
    throw UsageError("unknown matrix type '" + s + "' (expected sym, a or d)");
}

struct Session {
    std::shared_ptr<CoeffTable> table = std::make_shared<CoeffTable>();
    Lascoux lx{table};
    QSchur q;
    Degrees deg{lx, q};
    PolyN poly{deg};
};

// Recomputes one cache record from scratch, without any table.
BigInt recompute(const CoeffRecord& r) {
    Lascoux fresh;
    auto split = [&](char sep) {
        auto p = r.key.find(sep);
        if (p == std::string::npos) throw DomainError("cache key '" + r.key + "' lacks '" + sep + "'");
        return std::make_pair(r.key.substr(0, p), r.key.substr(p + 1));
    };
    switch (r.family) {
        case Family::psi: return fresh.psi(IndexSet::parse(r.key));
        case Family::alpha: return fresh.alpha(IndexSet::parse(r.key));
        case Family::psi_complement: {
            auto [I, n] = split('|');
            return fresh.psi(complement(IndexSet::parse(I), std::stol(n)));
        }
        case Family::dA: {
            auto [I, J] = split(';');
            return d_oracle(IndexSet::parse(I), IndexSet::parse(J));
        }
        case Family::sIJ: {
            auto [I, J] = split(';');
            return sij_oracle(IndexSet::parse(I), IndexSet::parse(J));
        }
    }
    throw DomainError("unknown cache family");
}

// Deterministic 1% sample (at least one record when the cache is nonempty).
json verify_cache(const CoeffTable& t) {
    auto recs = t.records();
    std::vector<std::size_t> idx(recs.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::mt19937_64 rng(20240101);
    std::shuffle(idx.begin(), idx.end(), rng);
    std::size_t take = recs.empty() ? 0 : std::max<std::size_t>(1, recs.size() / 100);
    idx.resize(take);
    std::sort(idx.begin(), idx.end());
    json bad = json::array();
    for (std::size_t k : idx) {
        BigInt v = recompute(recs[k]);
        if (v != recs[k].value)
            bad.push_back(json{{"family", family_name(recs[k].family)}, {"key", recs[k].key},
                               {"cached", to_string(recs[k].value)}, {"recomputed", to_string(v)}});
    }
    return json{{"entries", recs.size()}, {"sampled", take}, {"mismatches", bad}};
}

struct PsiArgs {
    std::string kind = "psi";
    std::vector<std::string> set, set2;
    std::optional<long> complement_n;
    std::string path;
};

json cmd_psi(Session& S, const PsiArgs& a) {
    IndexSet I = parse_set_tokens(a.set);
    std::optional<IndexSet> J;
    if (!a.set2.empty()) J = parse_set_tokens(a.set2);
    const bool two = a.kind == "dA" || a.kind == "sIJ";
    if (two != J.has_value()) throw UsageError("--set2 is required for dA and sIJ and not accepted otherwise");
    std::string path = a.path;
    json query{{"kind", a.kind}, {"set", I.str()}};
    if (J) query["set2"] = J->str();
    if (a.complement_n) query["complement_in"] = *a.complement_n;
    auto bad_path = [&] { return UsageError("path '" + path + "' is not available for " + a.kind); };
    BigInt v;
    if (a.kind == "psi") {
        if (path.empty()) path = "pfaffian";
        IndexSet target = a.complement_n ? complement(I, *a.complement_n) : I;
        if (a.complement_n && !I.within(*a.complement_n)) throw UsageError(I.str() + " is not inside [" + std::to_string(*a.complement_n) + "]");
        if (path == "pfaffian") v = a.complement_n ? S.lx.psi_complement(I, *a.complement_n) : S.lx.psi(I);
        else if (path == "pascal") v = S.lx.psi_pascal(target);
        else if (path == "recursion") v = S.lx.psi_recursion(target);
        else if (path == "oracle") v = psi_oracle(target);
        else throw bad_path();
    } else if (a.kind == "alpha") {
        if (path.empty()) path = "recursion";
        IndexSet target = I;
        if (a.complement_n) {
            if (!I.within(*a.complement_n)) throw UsageError(I.str() + " is not inside [" + std::to_string(*a.complement_n) + "]");
            target = complement(I, *a.complement_n);
        }
        if (path == "recursion") v = S.lx.alpha(target);
        else if (path == "oracle") v = alpha_oracle(target);
        else throw bad_path();
    } else if (a.kind == "dA") {
        if (path.empty()) path = "determinant";
        IndexSet A = I, B = *J;
        if (a.complement_n) {
            if (!I.within(*a.complement_n) || !J->within(*a.complement_n)) throw UsageError("sets are not inside [n]");
            A = complement(I, *a.complement_n);
            B = complement(*J, *a.complement_n);
        }
        if (path == "determinant") v = S.lx.d_A(A, B);
        else if (path == "recursion") v = S.lx.d_A_recursion(A, B);
        else if (path == "oracle") v = d_oracle(A, B);
        else throw bad_path();
    } else if (a.kind == "sIJ") {
        if (a.complement_n) throw UsageError("--complement is not available for sIJ");
        if (path.empty()) path = "determinant";
        if (path == "determinant") v = S.lx.s_ij(I, *J);
        else if (path == "oracle") v = sij_oracle(I, *J);
        else throw bad_path();
    } else {
        throw UsageError("unknown kind '" + a.kind + "'");
    }
    query["path"] = path;
    return json{{"command", "psi"}, {"query", query}, {"result", to_string(v)}, {"paths", json::array({path})}};
}

struct DeltaArgs {
    std::string type = "sym";
    long m = -1, n = -1, r = -1, corank = -1;
    std::string path = "direct";
    bool poly = false;
};

json cmd_delta(Session& S, const DeltaArgs& a, std::ostream& err) {
    MatrixType t = parse_type(a.type);
    if (a.poly) {
        if (a.m <= 0 || a.corank <= 0) throw UsageError("--poly needs -m > 0 and --corank > 0");
        FitResult f = S.poly.delta_fit(t, a.m, a.corank);
        json res = poly_json(f.poly);
        res["escalations"] = f.escalations;
        return json{{"command", "delta"},
                    {"query", {{"type", a.type}, {"m", a.m}, {"corank", a.corank}, {"poly", true}}},
                    {"result", res},
                    {"paths", json::array({"interpolation"})}};
    }
    if (a.m < 0 || a.n < 0 || a.r < 0) throw UsageError("delta needs -m, -n and -r");
    if (a.path != "direct" && a.path != "nrs" && a.path != "both") throw UsageError("--path must be direct, nrs or both");
    json query{{"type", a.type}, {"m", a.m}, {"n", a.n}, {"r", a.r}, {"path", a.path}};
    json paths = json::array();
    std::optional<DegreeResult> direct, nrs;
    if (a.path != "nrs") {
        direct = S.deg.delta(t, a.m, a.n, a.r);
        paths.push_back(json{{"path", path_name(direct->path)}, {"value", to_string(direct->value)}, {"terms", direct->terms_summed}});
    }
    if (a.path != "direct") {
        if (a.m <= 0 || a.n <= 0 || a.r >= a.n || a.r < 0)
            throw UsageError("the nrs path needs m > 0 and 0 <= r < n");
        nrs = S.deg.delta_nrs(t, a.m, a.n, a.r);
        paths.push_back(json{{"path", "nrs"}, {"value", to_string(nrs->value)}, {"terms", nrs->terms_summed}});
    }
    json out{{"command", "delta"}, {"query", query}, {"paths", paths}};
    if (direct && nrs) {
        out["agree"] = direct->value == nrs->value;
        if (direct->value != nrs->value) {
            out["result"] = nullptr;
            err << "path disagreement for delta type=" << a.type << " m=" << a.m << " n=" << a.n << " r=" << a.r
                << ": direct (" << path_name(direct->path) << ", " << direct->terms_summed << " terms) = " << direct->value
                << ", nrs (" << nrs->terms_summed << " terms) = " << nrs->value << "\n";
            return out;
        }
    }
    out["result"] = to_string(direct ? direct->value : nrs->value);
    return out;
}

struct PhiArgs {
    std::string type = "sym";
    long n = -1, d = -1, table = -1;
    bool poly = false;
    std::string format = "json";
};

// CSV rows: d, then coefficients padded with 0 to the widest row.
std::string phi_table_csv(const std::vector<UniPolyQ>& rows) {
    int width = 1;
    for (const auto& p : rows) width = std::max(width, p.degree() + 1);
    std::ostringstream s;
    s << "d";
    for (int k = 0; k < width; ++k) s << ",coeff_" << k;
    s << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        s << i + 1;
        for (int k = 0; k < width; ++k) s << "," << to_string(rows[i].coeff(k));
        s << "\n";
    }
    return s.str();
}

std::string cmd_phi(Session& S, const PhiArgs& a) {
    MatrixType t = parse_type(a.type);
    if (a.format != "json" && a.format != "csv") throw UsageError("--format must be json or csv");
    if (a.format == "csv" && a.table < 0) throw UsageError("csv output is only available with --table");
    if (a.table >= 0) {
        if (a.table < 1) throw UsageError("--table needs dmax >= 1");
        std::vector<UniPolyQ> rows;
        json tab = json::array();
        for (long d = 1; d <= a.table; ++d) {
            FitResult f = S.poly.phi_fit(t, d);
            rows.push_back(f.poly);
            json row = poly_json(f.poly);
            row["d"] = d;
            row["escalations"] = f.escalations;
            tab.push_back(row);
        }
        if (a.format == "csv") return phi_table_csv(rows);
        return json{{"command", "phi"}, {"query", {{"type", a.type}, {"table", a.table}}}, {"result", tab},
                    {"paths", json::array({"interpolation"})}}
                   .dump(2) + "\n";
    }
    if (a.d <= 0) throw UsageError("phi needs -d > 0");
    if (a.poly) {
        FitResult f = S.poly.phi_fit(t, a.d);
        json res = poly_json(f.poly);
        res["escalations"] = f.escalations;
        return json{{"command", "phi"}, {"query", {{"type", a.type}, {"d", a.d}, {"poly", true}}}, {"result", res},
                    {"paths", json::array({"interpolation"})}}
                   .dump(2) + "\n";
    }
    if (a.n <= 0) throw UsageError("phi needs -n > 0 (or --poly / --table)");
    BigInt v = S.deg.phi(t, a.n, a.d);
    return json{{"command", "phi"}, {"query", {{"type", a.type}, {"n", a.n}, {"d", a.d}}}, {"result", to_string(v)},
                {"paths", json::array({"delta-sum"})}}
               .dump(2) + "\n";
}

struct LpArgs {
    std::string kind = "psi";
    std::vector<std::string> set, set2;
};

json cmd_lp(Session& S, const LpArgs& a) {
    IndexSet I = parse_set_tokens(a.set);
    json query{{"kind", a.kind}, {"set", I.str()}};
    json res;
    if (a.kind == "psi") {
        res = poly_json(S.poly.lp_poly(I));
    } else if (a.kind == "dA") {
        if (a.set2.empty()) throw UsageError("lp --kind dA needs --set2");
        IndexSet J = parse_set_tokens(a.set2);
        query["set2"] = J.str();
        FitResult f = S.poly.lp_a_fit(I, J);
        res = poly_json(f.poly);
        res["escalations"] = f.escalations;
    } else if (a.kind == "alpha") {
        QuasiPolyQ q = S.poly.lp_d_quasipoly(I);
        res = json{{"period", q.period}, {"branches", json::array({poly_json(q.branches[0]), poly_json(q.branches[1])})}};
    } else {
        throw UsageError("lp --kind must be psi, dA or alpha");
    }
    return json{{"command", "lp"}, {"query", query}, {"result", res}, {"paths", json::array({"interpolation"})}};
}

struct CheckArgs {
    std::string suite;
    CheckCaps caps;
    std::size_t show = 20;
};

json cmd_check(Session& S, const CheckArgs& a, bool& all_ok) {
    std::vector<std::string> suites;
    if (a.suite == "all") {
        suites = check_suite_names();
        suites.erase(std::remove(suites.begin(), suites.end(), "d-expansion"), suites.end());
    } else if (std::find(check_suite_names().begin(), check_suite_names().end(), a.suite) != check_suite_names().end()) {
        suites = {a.suite};
    } else {
        throw UsageError("unknown suite '" + a.suite + "'");
    }
    json reports = json::array();
    all_ok = true;
    for (const auto& s : suites) {
        CheckReport rep = run_check(s, S.poly, a.caps);
        all_ok = all_ok && rep.ok();
        json fails = json::array();
        for (std::size_t k = 0; k < rep.failures.size() && k < a.show; ++k) fails.push_back(rep.failures[k]);
        reports.push_back(json{{"suite", rep.suite}, {"checked", rep.checked}, {"passed", rep.ok()},
                               {"failure_count", rep.failures.size()}, {"failures", fails}});
    }
    const CheckCaps& c = a.caps;
    return json{{"command", "check"},
                {"query", {{"suite", a.suite}, {"nmax", c.nmax}, {"nmax_ad", c.nmax_ad}, {"sum_max", c.sum_max},
                           {"size_max", c.size_max}, {"kmax", c.kmax}}},
                {"result", reports},
                {"passed", all_ok}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mldeg: exact ML degrees, SDP algebraic degrees and Lascoux coefficients"};
    app.require_subcommand(1);
    app.fallthrough();
    int jobs = 1;
    std::string cache;
    bool verify = false, timing = false;
    app.add_option("--jobs", jobs, "worker threads for sums")->check(CLI::PositiveNumber);
    app.add_option("--cache", cache, "coefficient cache file (read, then appended)")->envname("MLDEG_CACHE");
    app.add_flag("--verify-cache", verify, "recompute a 1% sample of the cache");
    app.add_flag("--timing", timing, "wall time and cache statistics on stderr");

    PsiArgs psi;
    auto* psi_cmd = app.add_subcommand("psi", "a Lascoux coefficient");
    psi_cmd->add_option("--kind", psi.kind, "psi, alpha, dA or sIJ")->check(CLI::IsMember({"psi", "alpha", "dA", "sIJ"}));
    psi_cmd->add_option("--set", psi.set, "index set, e.g. {0,3}")->required()->expected(1, -1)->allow_extra_args();
    psi_cmd->add_option("--set2", psi.set2, "second index set for dA and sIJ")->expected(1, -1);
    psi_cmd->add_option("--complement", psi.complement_n, "take complements inside [n]");
    psi_cmd->add_option("--path", psi.path, "pfaffian, pascal, recursion, determinant or oracle");

    DeltaArgs delta;
    auto* delta_cmd = app.add_subcommand("delta", "algebraic degree of semidefinite programming");
    delta_cmd->add_option("--type", delta.type, "sym, a or d");
    delta_cmd->add_option("-m", delta.m);
    delta_cmd->add_option("-n", delta.n);
    delta_cmd->add_option("-r", delta.r, "rank (half rank for type d)");
    delta_cmd->add_option("--corank", delta.corank, "s for --poly: the polynomial n -> delta(m, n, n - s)");
    delta_cmd->add_option("--path", delta.path, "direct, nrs or both");
    delta_cmd->add_flag("--poly", delta.poly);

    PhiArgs phi;
    auto* phi_cmd = app.add_subcommand("phi", "ML degree");
    phi_cmd->add_option("--type", phi.type, "sym, a or d");
    phi_cmd->add_option("-n", phi.n);
    phi_cmd->add_option("-d", phi.d);
    phi_cmd->add_flag("--poly", phi.poly, "the polynomial n -> phi(n, d)");
    phi_cmd->add_option("--table", phi.table, "polynomials for d = 1..dmax");
    phi_cmd->add_option("--format", phi.format, "json or csv (csv only with --table)");

    LpArgs lp;
    auto* lp_cmd = app.add_subcommand("lp", "complement coefficients as polynomials in n");
    lp_cmd->add_option("--kind", lp.kind, "psi, dA or alpha");
    lp_cmd->add_option("--set", lp.set)->required()->expected(1, -1);
    lp_cmd->add_option("--set2", lp.set2)->expected(1, -1);

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "run an invariant suite");
    std::string suite_help = "all";
    for (const auto& s : check_suite_names()) suite_help += ", " + s;
    check_cmd->add_option("suite", check.suite, suite_help)->required();
    check_cmd->add_option("--nmax", check.caps.nmax);
    check_cmd->add_option("--nmax-ad", check.caps.nmax_ad);
    check_cmd->add_option("--sum-max", check.caps.sum_max);
    check_cmd->add_option("--size-max", check.caps.size_max);
    check_cmd->add_option("--kmax", check.caps.kmax);
    check_cmd->add_option("--show", check.show, "failures listed per suite");

    std::vector<const char*> argv{"mldeg"};
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "mldeg: " << e.what() << "\n";
        return usage;
    }

    const auto t0 = std::chrono::steady_clock::now();
    Session S;
    S.deg.set_jobs(jobs);
    int code = ok;
    try {
        if (!cache.empty()) S.table->load(cache);
        if (verify) {
            json v = verify_cache(*S.table);
            err << "cache verification: " << v.dump() << "\n";
            if (!v["mismatches"].empty()) return disagreement;
        }
        if (*psi_cmd) {
            out << cmd_psi(S, psi).dump(2) << "\n";
        } else if (*delta_cmd) {
            json j = cmd_delta(S, delta, err);
            out << j.dump(2) << "\n";
            if (j.contains("agree") && !j["agree"].get<bool>()) code = disagreement;
        } else if (*phi_cmd) {
            out << cmd_phi(S, phi);
        } else if (*lp_cmd) {
            out << cmd_lp(S, lp).dump(2) << "\n";
        } else if (*check_cmd) {
            bool all_ok = true;
            out << cmd_check(S, check, all_ok).dump(2) << "\n";
            if (!all_ok) code = property_failure;
        }
        if (!cache.empty()) S.table->save(cache);
    } catch (const UsageError& e) {
        err << "mldeg: " << e.what() << "\n";
        return usage;
    } catch (const DomainError& e) {
        err << "mldeg: " << e.what() << "\n";
        return usage;
    } catch (const StructureError& e) {
        err << "mldeg: " << e.what() << "\n";
        return usage;
    } catch (const ConsistencyError& e) {
        err << "mldeg: internal disagreement: " << e.what() << "\n";
        return disagreement;
    } catch (const TruncationError& e) {
        err << "mldeg: internal disagreement: " << e.what() << "\n";
        return disagreement;
    }
    if (timing) {
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        err << "timing: wall_ms=" << ms << " cache_entries=" << S.table->size() << " cache_hits=" << S.table->hits()
            << " jobs=" << jobs << "\n";
    }
    return code;
}

}  // namespace mldeg::cli
