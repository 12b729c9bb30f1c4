#include "b2chain/report.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

namespace b2chain::report {

json complex_to_json(cx z) { return json::array({z.real(), z.imag()}); }

cx complex_from_json(const json& j) { return cx(j.at(0).get<double>(), j.at(1).get<double>()); }

std::string config_hash(const ModelConfig& cfg, uint64_t seed) {
    std::ostringstream os;
    os.precision(17);
    os << "N=" << cfg.N << ";open=" << cfg.open << ";seed=" << seed;
    for (cx t : cfg.theta) os << ";th=" << t.real() << "," << t.imag();
    if (cfg.open)
        os << ";p=" << cfg.bp.c1.real() << "," << cfg.bp.c1.imag() << "," << cfg.bp.c2.real()
           << "," << cfg.bp.c2.imag() << "," << cfg.bp.ct1.real() << "," << cfg.bp.ct1.imag()
           << "," << cfg.bp.ct2.real() << "," << cfg.bp.ct2.imag();
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : os.str()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
    return buf;
}

namespace {

json run_header(const ModelConfig& cfg, uint64_t seed) {
    json run;
    run["seed"] = seed;
    run["config_hash"] = config_hash(cfg, seed);
    run["N"] = cfg.N;
    run["boundary"] = cfg.open ? "open" : "periodic";
    json th = json::array();
    for (cx t : cfg.theta) th.push_back(complex_to_json(t));
    run["theta"] = th;
    if (cfg.open) {
        run["c1"] = complex_to_json(cfg.bp.c1);
        run["c2"] = complex_to_json(cfg.bp.c2);
        run["ct1"] = complex_to_json(cfg.bp.ct1);
        run["ct2"] = complex_to_json(cfg.bp.ct2);
    }
    return run;
}

}  // namespace

json reports_to_json(const std::vector<verify::Report>& reports, const ModelConfig& cfg,
                     uint64_t seed) {
    json j;
    j["run"] = run_header(cfg, seed);
    json checks = json::array();
    int pass = 0, fail = 0;
    for (const auto& r : reports) {
        json c;
        c["id"] = r.id;
        c["anchor"] = r.anchor;
        c["points"] = r.points;
        c["raw_residual"] = r.raw_residual;
        c["fitted_residual"] = r.fitted_residual;
        c["scalar"] = complex_to_json(r.scalar);
        c["tolerance"] = r.tolerance;
        c["pass"] = r.pass;
        if (!r.error.empty()) c["error"] = r.error;
        checks.push_back(std::move(c));
        (r.pass ? pass : fail)++;
    }
    j["checks"] = std::move(checks);
    j["summary"] = json{{"pass", pass}, {"fail", fail}};
    return j;
}

std::vector<verify::Report> reports_from_json(const json& j) {
    std::vector<verify::Report> out;
    for (const auto& c : j.at("checks")) {
        verify::Report r;
        r.id = c.at("id").get<std::string>();
        r.anchor = c.at("anchor").get<std::string>();
        r.points = c.at("points").get<int>();
        r.raw_residual = c.at("raw_residual").get<double>();
        r.fitted_residual = c.at("fitted_residual").get<double>();
        r.scalar = complex_from_json(c.at("scalar"));
        r.tolerance = c.at("tolerance").get<double>();
        r.pass = c.at("pass").get<bool>();
        if (c.contains("error")) r.error = c.at("error").get<std::string>();
        out.push_back(std::move(r));
    }
    return out;
}

json match_report_to_json(const bae::MatchReport& rep, const ModelConfig& cfg, uint64_t seed) {
    json j;
    j["run"] = run_header(cfg, seed);
    json pts = json::array();
    for (cx u : rep.sample_points) pts.push_back(complex_to_json(u));
    j["sample_points"] = std::move(pts);
    json sectors = json::array();
    for (const auto& sect : rep.sectors) {
        json s;
        s["L1"] = sect.l1;
        s["L2"] = sect.l2;
        json sols = json::array();
        for (size_t i = 0; i < sect.solutions.size(); ++i) {
            const auto& sol = sect.solutions[i];
            json js;
            json r1 = json::array(), r2 = json::array();
            for (cx z : sol.roots.roots1) r1.push_back(complex_to_json(z));
            for (cx z : sol.roots.roots2) r2.push_back(complex_to_json(z));
            js["roots1"] = std::move(r1);
            js["roots2"] = std::move(r2);
            if (cfg.open) js["x"] = complex_to_json(sol.roots.x);
            js["converged"] = sol.converged;
            js["bae_residual"] = sol.residual_inf;
            js["matched_branch"] = sect.matched_branch[i];
            sols.push_back(std::move(js));
        }
        s["solutions"] = std::move(sols);
        sectors.push_back(std::move(s));
    }
    j["sectors"] = std::move(sectors);
    j["summary"] = json{{"matched_branches", rep.matched_branches},
                        {"total_branches", rep.total_branches},
                        {"worst_match_error", rep.worst_match_error},
                        {"worst_bae_residual", rep.worst_bae_residual}};
    return j;
}

json spectrum_to_json(const std::vector<cx>& samples, const SpectrumBranches& br,
                      const ModelConfig& cfg, uint64_t seed) {
    json j;
    j["run"] = run_header(cfg, seed);
    json pts = json::array();
    for (cx u : samples) pts.push_back(complex_to_json(u));
    j["samples"] = std::move(pts);
    json branches = json::array();
    for (size_t b = 0; b < br.values.size(); ++b) {
        json row;
        row["cluster"] = br.cluster[b];
        json vals = json::array();
        for (cx v : br.values[b]) vals.push_back(complex_to_json(v));
        row["values"] = std::move(vals);
        branches.push_back(std::move(row));
    }
    j["branches"] = std::move(branches);
    j["anchor_simple"] = br.anchor_simple;
    j["max_membership_residual"] = br.max_membership_residual;
    return j;
}

std::string spectrum_to_csv(const std::vector<cx>& samples, const SpectrumBranches& br) {
    std::ostringstream os;
    os.precision(17);
    os << "u_re,u_im";
    for (size_t b = 0; b < br.values.size(); ++b)
        os << ",branch_" << b << "_re,branch_" << b << "_im";
    os << "\n";
    for (size_t s = 0; s < samples.size(); ++s) {
        os << samples[s].real() << "," << samples[s].imag();
        for (size_t b = 0; b < br.values.size(); ++b)
            os << "," << br.values[b][s].real() << "," << br.values[b][s].imag();
        os << "\n";
    }
    return os.str();
}

}  // namespace b2chain::report
