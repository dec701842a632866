#include "stepcert/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "stepcert/bounds.hpp"
#include "stepcert/complexroots.hpp"
#include "stepcert/independence.hpp"
#include "stepcert/oracle.hpp"

namespace stepcert {

namespace {

using nlohmann::json;

json window_json(const BoundReport& b) {
    return json{{"ok", b.window_ok},
                {"above_c1", b.above_c1},
                {"below_c2", b.below_c2},
                {"c1", b.c1.str()},
                {"lhs", b.c2_window_lhs.str()},
                {"rhs", b.c2_window_rhs.str()}};
}

json thm2_json(const BoundReport& b) {
    return json{{"holds", b.bound_holds},
                {"lhs", b.bound_lhs.str()},
                {"rhs", b.bound_rhs.str()},
                {"margin", b.margin.str()},
                {"margin_ratio", b.margin_ratio}};
}

json instance_report_json(const InstanceReport& r) {
    json j{{"status", to_string(r.status)},
           {"p", r.p},
           {"t", r.t},
           {"n", r.n},
           {"m", r.m},
           {"window", window_json(r.bounds)}};
    if (!r.skip_reason.empty()) j["skip_reason"] = r.skip_reason;
    if (r.status == InstanceStatus::Skipped) return j;

    j["M"] = r.M_size;
    j["M_prime"] = r.M_prime_size;
    j["excluded"] = r.excluded_size;
    j["A"] = r.A;
    j["B"] = r.B;
    j["D"] = r.D;
    j["rows"] = r.system_rows;
    j["cols"] = r.system_cols;
    j["deg_psi"] = r.deg_psi;
    j["est_bound"] = r.est_bound;
    j["checks"] = json{{"lambda_nonzero", r.lambda_nonzero},
                       {"psi_nonzero", r.psi_nonzero},
                       {"multiplicities", r.multiplicities_ok},
                       {"sum_multiplicities", r.sum_multiplicities_ok},
                       {"deg_psi_bound", r.deg_psi_in_bound},
                       {"est_bound", r.est_bound_ok},
                       {"thm2_bound", r.bounds.bound_holds}};
    j["thm2"] = thm2_json(r.bounds);
    return j;
}

std::string csv_header() { return "p,t,n,m,M,degPsi,D,est_bound,thm2_ok,status"; }

// ---- shared instance flags -------------------------------------------------

struct InstanceFlags {
    u64 p = 0;
    u64 t = 0;
    std::vector<std::string> polys;
    std::vector<u64> cosets;
    std::string config_path;
};

void load_config_file(InstanceFlags& f) {
    if (f.config_path.empty()) return;
    std::ifstream in(f.config_path);
    if (!in) throw std::runtime_error("cannot open config file " + f.config_path);
    json j = json::parse(in);
    if (f.p == 0 && j.contains("p")) f.p = j["p"].get<u64>();
    if (f.t == 0 && j.contains("t")) f.t = j["t"].get<u64>();
    if (f.polys.empty() && j.contains("polys"))
        f.polys = j["polys"].get<std::vector<std::string>>();
    if (f.cosets.empty() && j.contains("cosets"))
        f.cosets = j["cosets"].get<std::vector<u64>>();
}

Complex parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        return Complex(std::stod(text), 0.0);
    return Complex(std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1)));
}

std::vector<double> parse_real_poly(const std::string& text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(std::stod(text.substr(pos, comma - pos)));
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return out;
}

// ---- subcommands -----------------------------------------------------------

int cmd_admissible(const InstanceFlags& f, std::ostream& out, std::ostream& err) {
    FieldCtx ctx(f.p);
    std::vector<DensePoly> polys;
    for (const auto& text : f.polys) polys.push_back(DensePoly::from_text(ctx, text));
    PolySystem sys(ctx, std::move(polys));
    const AdmissibilityReport rep = check_admissible(sys);

    json per = json::array();
    for (std::size_t i = 0; i < rep.has_private_root.size(); ++i) {
        per.push_back(json{{"index", i + 1},
                           {"private_root", (bool)rep.has_private_root[i]},
                           {"nonzero_at_zero", (bool)rep.nonzero_at_zero[i]}});
    }
    out << json{{"admissible", rep.admissible}, {"per_index", per}}.dump(2) << '\n';
    if (!rep.admissible) {
        for (std::size_t i = 0; i < rep.has_private_root.size(); ++i) {
            if (!rep.nonzero_at_zero[i]) err << "f_" << (i + 1) << "(0)=0\n";
            else if (!rep.has_private_root[i]) err << "f_" << (i + 1) << " has no private root\n";
        }
        return 1;
    }
    return 0;
}

json params_json(const StepanovParams& params) {
    return json{{"t", params.t},
                {"m", params.m},
                {"B", params.B},
                {"A", params.A},
                {"D", params.D},
                {"cond_var_ok", params.cond_var_ok},
                {"degree_ok", params.degree_ok},
                {"ord_t_paper_ok", params.ord_t_paper_ok},
                {"ord_t_proof_ok", params.ord_t_proof_ok},
                {"ord_t_ok", params.ord_t_ok},
                {"gamma_ok", params.gamma_ok},
                {"deg_psi_bound", params.deg_psi_bound.str()},
                {"deg_psi_lt_p", params.deg_psi_lt_p},
                {"d_lt_p", params.d_lt_p}};
}

int cmd_params(const InstanceFlags& f, std::ostream& out, std::ostream&) {
    FieldCtx ctx(f.p);
    std::vector<DensePoly> polys;
    for (const auto& text : f.polys) polys.push_back(DensePoly::from_text(ctx, text));
    PolySystem sys(ctx, std::move(polys));

    const BoundReport window =
        constants_remark1(sys.degrees(), (unsigned)sys.n(), f.p, f.t);
    json j{{"p", f.p}, {"window", window_json(window)}};
    try {
        const StepanovParams params = compute_params(sys, f.t);
        j["params"] = params_json(params);
        j["status"] = window.window_ok && params.construction_ok() ? "OK" : "SKIPPED";
    } catch (const DegenerateParams& e) {
        j["status"] = "SKIPPED";
        j["skip_reason"] = std::string("degenerate-params: ") + e.what();
    }
    out << j.dump(2) << '\n';
    return 0;
}

std::pair<PolySystem, std::vector<CosetSpec>> build_system(const InstanceFlags& f) {
    FieldCtx ctx(f.p);
    std::vector<DensePoly> polys;
    for (const auto& text : f.polys) polys.push_back(DensePoly::from_text(ctx, text));
    PolySystem sys(ctx, std::move(polys));
    if (f.cosets.size() != sys.n())
        throw std::invalid_argument("need exactly one --coset per --poly");
    SubgroupSpec gamma(ctx, f.t);
    std::vector<CosetSpec> cosets;
    for (Elem g : sys.normalize_order(f.cosets)) cosets.emplace_back(gamma, g);
    return {std::move(sys), std::move(cosets)};
}

int cmd_enumerate(const InstanceFlags& f, std::ostream& out, std::ostream&) {
    auto [sys, cosets] = build_system(f);
    const EnumerationResult res = enumerate_M(sys, cosets);
    json j{{"p", f.p},
           {"t", f.t},
           {"M", res.M.size()},
           {"M_prime", res.M_prime.size()},
           {"excluded", res.excluded}};
    if (res.M.size() <= 1000) j["M_elements"] = res.M;
    out << j.dump(2) << '\n';
    return 0;
}

int cmd_construct(const InstanceFlags& f, const std::string& out_path, std::ostream& out,
                  std::ostream& err) {
    auto [sys, cosets] = build_system(f);
    const AdmissibilityReport adm = check_admissible(sys);
    if (!adm.admissible) {
        err << "inadmissible polynomial set\n";
        return 1;
    }
    const StepanovParams params = compute_params(sys, f.t);
    const EnumerationResult oracle = enumerate_M(sys, cosets);
    const PsiCertificate cert = construct_certificate(sys, params, cosets, oracle.M_prime);
    const VerificationOutcome outcome = verify_certificate(cert, oracle.M_prime, sys);

    json lam = json::array();
    for (std::size_t col = 0; col < cert.lambda.size(); ++col)
        if (cert.lambda[col] != 0) lam.push_back(json::array({col, cert.lambda[col]}));

    json j{{"p", f.p},
           {"t", f.t},
           {"A", cert.A},
           {"B", cert.B},
           {"D", cert.D},
           {"deg_psi", cert.psi.degree()},
           {"lambda_nonzero_entries", lam},
           {"psi", cert.psi.to_text()},
           {"per_root", json::object()},
           {"verified", outcome.ok()},
           {"implied_bound", outcome.implied_count_bound}};
    for (const auto& [x, mult] : cert.per_root) j["per_root"][std::to_string(x)] = mult;

    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) throw std::runtime_error("cannot write " + out_path);
        file << j.dump(2) << '\n';
        out << "certificate written to " << out_path << '\n';
    } else {
        out << j.dump(2) << '\n';
    }
    return outcome.ok() ? 0 : 1;
}

int cmd_verify(const InstanceFlags& f, std::ostream& out, std::ostream&) {
    InstanceConfig config;
    config.p = f.p;
    config.t = f.t;
    config.poly_texts = f.polys;
    config.coset_reps = f.cosets;
    const InstanceReport report = verify_instance(config);
    out << instance_report_json(report).dump(2) << '\n';
    return report.status == InstanceStatus::Fail ? 1 : 0;
}

int cmd_intersect(u64 p, u64 t, const std::vector<u64>& shifts, std::ostream& out,
                  std::ostream&) {
    FieldCtx ctx(p);
    const std::vector<Elem> result = coset_intersection(ctx, t, shifts);

    json j{{"p", p}, {"t", t}, {"shifts", shifts}, {"size", result.size()}};
    if (result.size() <= 1000) j["elements"] = result;

    bool failed = false;
    if (shifts.size() == 1) {
        const GvCheck gv = gv_check(t, result.size(), p);
        j["gv"] = json{{"hypothesis_ok", gv.hypothesis_ok},
                       {"bound_ok", gv.bound_ok},
                       {"lhs", gv.lhs.str()},
                       {"rhs", gv.rhs.str()}};
        if (gv.hypothesis_ok && !gv.bound_ok) failed = true;
    }
    const Theorem1Check t1 = theorem1_check(t, (unsigned)shifts.size(), result.size(), p);
    j["thm1"] = json{{"size_hypothesis_ok", t1.size_hypothesis_ok},
                     {"p_hypothesis_ok", t1.p_hypothesis_ok},
                     {"bound_ok", t1.bound_ok},
                     {"bound", t1.bound_value.str()}};
    if (t1.size_hypothesis_ok && t1.p_hypothesis_ok && shifts.size() >= 2 && !t1.bound_ok)
        failed = true;

    // cross-check against the oracle enumeration under the linear embedding
    if (p <= 100000) {
        std::vector<DensePoly> polys;
        polys.push_back(DensePoly::monomial(ctx, 1, 1));  // x
        for (u64 mu : shifts) polys.push_back(DensePoly::linear_root(ctx, mu % p));
        PolySystem sys(ctx, std::move(polys));
        SubgroupSpec gamma(ctx, t);
        std::vector<CosetSpec> cosets(sys.n(), CosetSpec(gamma, 1));
        const EnumerationResult res = enumerate_M(sys, cosets);
        j["cross_check_ok"] = res.M == result;
        if (res.M != result) failed = true;
    }

    out << j.dump(2) << '\n';
    return failed ? 1 : 0;
}

int cmd_lemma1(u64 p, u64 t, u64 A, const std::vector<u64>& B,
               const std::vector<std::string>& poly_texts, std::ostream& out, std::ostream&) {
    FieldCtx ctx(p);
    std::vector<DensePoly> polys;
    for (const auto& text : poly_texts) polys.push_back(DensePoly::from_text(ctx, text));
    const Lemma1Report rep = lemma1_pipeline(ctx, polys, t, A, B);

    json j{{"p", p},
           {"t", rep.t},
           {"A", rep.A},
           {"B", rep.B},
           {"b_product", rep.b_product},
           {"degree_ok", rep.degree_ok},
           {"ord_t_proof_ok", rep.ord_t_proof_ok},
           {"ord_t_paper_ok", rep.ord_t_paper_ok},
           {"products_independent", rep.products_independent},
           {"w_nonzero", rep.w_nonzero},
           {"r_divides_w", rep.r_divides_w},
           {"quotient_degree_ok", rep.quotient_degree_ok},
           {"deg_w", rep.deg_w},
           {"deg_r", rep.deg_r}};
    const bool conditions = rep.degree_ok && rep.ord_t_proof_ok;
    j["status"] = !conditions ? "SKIPPED" : (rep.ok() ? "PASS" : "FAIL");
    out << j.dump(2) << '\n';
    return (conditions && !rep.ok()) ? 1 : 0;
}

int cmd_complex(u64 t, const std::vector<std::string>& poly_texts,
                const std::vector<std::string>& rep_texts, std::ostream& out, std::ostream&) {
    std::vector<std::vector<double>> polys;
    for (const auto& text : poly_texts) polys.push_back(parse_real_poly(text));
    std::vector<Complex> reps;
    for (const auto& text : rep_texts) reps.push_back(parse_complex(text));

    const Theorem3Report rep = verify_theorem3_instance(polys, t, reps);
    json j{{"t", t}, {"n", rep.n}, {"m", rep.m}, {"c1", rep.c1.str()}};
    if (rep.skipped) {
        j["status"] = "SKIPPED";
        j["skip_reason"] = rep.skip_reason;
        out << j.dump(2) << '\n';
        return 0;
    }
    j["M"] = rep.M_size;
    json members = json::array();
    for (const Complex& z : rep.members)
        members.push_back(json::array({z.real(), z.imag()}));
    j["members"] = members;
    j["max_residual"] = rep.max_residual;
    j["bound_ok"] = rep.bound_ok;
    j["bound_lhs"] = rep.bound_lhs.str();
    j["bound_rhs"] = rep.bound_rhs.str();
    j["status"] = rep.bound_ok ? "PASS" : "FAIL";
    out << j.dump(2) << '\n';
    return rep.bound_ok ? 0 : 1;
}

// ---- sweep ------------------------------------------------------------------

struct SweepSpec {
    u64 seed = 1;
    u64 p_lo = 500, p_hi = 50000;
    std::string t_rule = "window_max";
    u64 deg_lo = 1, deg_hi = 1;
    u64 samples = 50;
};

DensePoly random_poly(Rng& rng, const FieldCtx& ctx, u64 degree) {
    std::vector<Elem> coeffs(degree + 1);
    coeffs[0] = rng.range(1, ctx.p() - 1);  // f(0) != 0
    for (u64 i = 1; i < degree; ++i) coeffs[i] = rng.below(ctx.p());
    coeffs[degree] = rng.range(1, ctx.p() - 1);
    return DensePoly(ctx, std::move(coeffs));
}

std::optional<InstanceConfig> generate_instance(const SweepSpec& spec, u64 index) {
    Rng rng(spec.seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    for (int attempt = 0; attempt < 5000; ++attempt) {
        u64 p = spec.p_lo + rng.below(spec.p_hi - spec.p_lo + 1);
        p |= 1;
        if (p < 5 || p > spec.p_hi || !is_prime(p)) continue;

        std::vector<u64> degs{rng.range(spec.deg_lo, spec.deg_hi),
                              rng.range(spec.deg_lo, spec.deg_hi)};
        std::vector<u64> m = degs;
        std::sort(m.begin(), m.end());

        std::vector<u64> ts;
        for (u64 d : divisors(p - 1)) {
            if (d < 2) continue;
            if (constants_remark1(m, 2, p, d).window_ok) ts.push_back(d);
        }
        if (ts.empty()) continue;
        const u64 t = spec.t_rule == "window_random" ? ts[rng.below(ts.size())] : ts.back();

        FieldCtx ctx(p);
        std::vector<DensePoly> polys{random_poly(rng, ctx, degs[0]),
                                     random_poly(rng, ctx, degs[1])};
        PolySystem sys(ctx, polys);
        if (!check_admissible(sys).admissible) continue;

        InstanceConfig config;
        config.p = p;
        config.t = t;
        for (const DensePoly& f : polys) config.poly_texts.push_back(f.to_text());
        config.coset_reps = {rng.range(1, p - 1), rng.range(1, p - 1)};
        return config;
    }
    return std::nullopt;
}

json sweep_row(const SweepSpec& spec, u64 id) {
    json row{{"id", id}, {"seed", spec.seed}};
    const std::optional<InstanceConfig> config = generate_instance(spec, id);
    if (!config) {
        row["status"] = "GEN_FAILED";
        return row;
    }
    row["p"] = config->p;
    row["t"] = config->t;
    row["polys"] = config->poly_texts;
    row["cosets"] = config->coset_reps;
    row["report"] = instance_report_json(verify_instance(*config));
    return row;
}

int cmd_sweep(const std::string& config_path, const std::string& out_path,
              const std::string& csv_path, std::ostream& out, std::ostream& err) {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open config file " + config_path);
    json cfg = json::parse(in);

    SweepSpec spec;
    if (cfg.contains("seed")) spec.seed = cfg["seed"].get<u64>();
    if (cfg.contains("sweep")) {
        const json& s = cfg["sweep"];
        if (s.contains("p_range")) {
            spec.p_lo = s["p_range"][0].get<u64>();
            spec.p_hi = s["p_range"][1].get<u64>();
        }
        if (s.contains("t_rule")) spec.t_rule = s["t_rule"].get<std::string>();
        if (s.contains("poly_degrees")) {
            spec.deg_lo = s["poly_degrees"][0].get<u64>();
            spec.deg_hi = s["poly_degrees"][1].get<u64>();
        }
        if (s.contains("samples")) spec.samples = s["samples"].get<u64>();
    }

    // resume: keep rows already present in the output file, by id
    std::map<u64, json> rows;
    if (!out_path.empty()) {
        std::ifstream existing(out_path);
        std::string line;
        while (existing && std::getline(existing, line)) {
            if (line.empty()) continue;
            try {
                json row = json::parse(line);
                if (!row.contains("id")) continue;
                const u64 id = row["id"].get<u64>();
                rows[id] = std::move(row);
            } catch (const json::parse_error&) {
                // ignore torn trailing line; its id gets recomputed
            }
        }
    }

    std::vector<u64> missing;
    for (u64 id = 0; id < spec.samples; ++id)
        if (!rows.count(id)) missing.push_back(id);

    // worker pool; results gathered per id, emitted in id order
    std::map<u64, json> fresh;
    {
        std::mutex mtx;
        std::atomic<std::size_t> next{0};
        const unsigned workers =
            std::max(1u, std::min<unsigned>(worker_count(), (unsigned)missing.size()));
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= missing.size()) break;
                    json row = sweep_row(spec, missing[i]);
                    std::lock_guard<std::mutex> lock(mtx);
                    fresh[missing[i]] = std::move(row);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::app);
        if (!file) throw std::runtime_error("cannot write " + out_path);
        for (const auto& [id, row] : fresh) file << row.dump() << '\n';
    } else {
        for (const auto& [id, row] : fresh) out << row.dump() << '\n';
    }
    for (auto& [id, row] : fresh) rows[id] = std::move(row);

    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw std::runtime_error("cannot write " + csv_path);
        csv << csv_header() << '\n';
        for (const auto& [id, row] : rows) {
            if (!row.contains("report")) continue;
            const json& r = row["report"];
            csv << r["p"].get<u64>() << ',' << r["t"].get<u64>() << ',' << r["n"].get<u64>()
                << ',';
            const auto& m = r["m"];
            for (std::size_t i = 0; i < m.size(); ++i) csv << (i ? "|" : "") << m[i].get<u64>();
            const bool detailed = r.contains("M");
            csv << ',' << (detailed ? std::to_string(r["M"].get<u64>()) : "")
                << ',' << (detailed ? std::to_string(r["deg_psi"].get<std::int64_t>()) : "")
                << ',' << (detailed ? std::to_string(r["D"].get<u64>()) : "")
                << ',' << (detailed ? std::to_string(r["est_bound"].get<u64>()) : "")
                << ','
                << (detailed ? std::to_string(r["thm2"]["holds"].get<bool>() ? 1 : 0) : "")
                << ',' << r["status"].get<std::string>() << '\n';
        }
    }

    u64 passed = 0, failed = 0, skipped = 0, genfail = 0;
    for (const auto& [id, row] : rows) {
        if (!row.contains("report")) {
            ++genfail;
            continue;
        }
        const std::string status = row["report"]["status"].get<std::string>();
        if (status == "PASS") ++passed;
        else if (status == "FAIL") ++failed;
        else ++skipped;
    }
    out << "sweep: " << passed << " pass, " << failed << " fail, " << skipped << " skipped";
    if (genfail) out << ", " << genfail << " generation failures";
    out << '\n';
    if (genfail) err << "warning: some instances could not be generated\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact certificates for value-set counting over multiplicative subgroups"};
    app.require_subcommand(1);

    InstanceFlags flags;
    std::string out_path, csv_path, config_path;
    u64 A = 0;
    std::vector<u64> B, shifts;
    std::vector<std::string> real_polys, reps;

    auto add_instance = [&](CLI::App* cmd, bool with_t, bool with_cosets) {
        cmd->add_option("--p", flags.p, "prime modulus");
        if (with_t) cmd->add_option("--t", flags.t, "subgroup order (divides p-1)");
        cmd->add_option("--poly", flags.polys,
                        "polynomial, comma-separated coefficients ascending (repeatable)");
        if (with_cosets)
            cmd->add_option("--coset", flags.cosets, "coset representative g_i (repeatable)");
        cmd->add_option("--config", flags.config_path, "JSON instance config file");
    };

    CLI::App* c_adm = app.add_subcommand("admissible", "check a polynomial set");
    add_instance(c_adm, false, false);

    CLI::App* c_params = app.add_subcommand("params", "construction parameters and hypotheses");
    add_instance(c_params, true, false);

    CLI::App* c_enum = app.add_subcommand("enumerate", "oracle enumeration of M and M'");
    add_instance(c_enum, true, true);

    CLI::App* c_construct = app.add_subcommand("construct", "build and emit a certificate");
    add_instance(c_construct, true, true);
    c_construct->add_option("--out", out_path, "write the certificate JSON here");

    CLI::App* c_verify = app.add_subcommand("verify", "full single-instance verification");
    add_instance(c_verify, true, true);

    CLI::App* c_int = app.add_subcommand("intersect", "coset intersection and its bounds");
    c_int->add_option("--p", flags.p, "prime modulus");
    c_int->add_option("--t", flags.t, "subgroup order");
    c_int->add_option("--shift", shifts, "additive shift mu (repeatable)");

    CLI::App* c_lemma = app.add_subcommand("lemma1", "independence pipeline");
    c_lemma->add_option("--p", flags.p, "prime modulus");
    c_lemma->add_option("--t", flags.t, "subgroup order");
    c_lemma->add_option("--A", A, "monomial count A");
    c_lemma->add_option("--B", B, "exponent bound B_i (repeatable)");
    c_lemma->add_option("--poly", flags.polys, "factor polynomial (repeatable)");

    CLI::App* c_complex = app.add_subcommand("complex", "roots-of-unity instance over C");
    c_complex->add_option("--t", flags.t, "order of the root-of-unity group");
    c_complex->add_option("--poly", real_polys,
                          "real-coefficient polynomial, ascending (repeatable)");
    c_complex->add_option("--g", reps, "coset representative as re,im (repeatable)");

    CLI::App* c_sweep = app.add_subcommand("sweep", "batch verification over a config file");
    c_sweep->add_option("--config", config_path, "sweep config JSON")->required();
    c_sweep->add_option("--out", out_path, "JSON-lines results file (resumable)");
    c_sweep->add_option("--csv", csv_path, "CSV projection of the results");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        load_config_file(flags);
        if (c_adm->parsed()) return cmd_admissible(flags, out, err);
        if (c_params->parsed()) return cmd_params(flags, out, err);
        if (c_enum->parsed()) return cmd_enumerate(flags, out, err);
        if (c_construct->parsed()) return cmd_construct(flags, out_path, out, err);
        if (c_verify->parsed()) return cmd_verify(flags, out, err);
        if (c_int->parsed()) return cmd_intersect(flags.p, flags.t, shifts, out, err);
        if (c_lemma->parsed()) return cmd_lemma1(flags.p, flags.t, A, B, flags.polys, out, err);
        if (c_complex->parsed()) return cmd_complex(flags.t, real_polys, reps, out, err);
        if (c_sweep->parsed()) return cmd_sweep(config_path, out_path, csv_path, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace stepcert
