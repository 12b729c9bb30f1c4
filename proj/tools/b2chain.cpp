// Command-line front end: identity verification, spectrum tables, and
// Bethe-root solving with spectrum matching.
#include "b2chain/bae.hpp"
#include "b2chain/report.hpp"
#include "b2chain/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace b2chain;
using report::json;

namespace {

struct Options {
    std::string command;
    int n = 2;
    uint64_t seed = 42;
    std::vector<double> theta_re, theta_im;
    std::string boundary = "periodic";
    double c1 = 0, c2 = 0, ct1 = 0, ct2 = 0;
    bool have_params = false;
    std::vector<std::string> ids;
    std::string config_file;
    std::string output;
    std::string format = "json";
    double tol_scale = 1.0;
    int samples = 9;
    int max_l1 = -1;
    int multistarts = 50;
};

int fail_config(const std::string& msg) {
    std::cerr << "configuration error: " << msg << "\n";
    return 2;
}

bool load_config_file(Options& o, std::string& err) {
    if (o.config_file.empty()) return true;
    std::ifstream in(o.config_file);
    if (!in.is_open()) {
        err = "cannot open config file " + o.config_file;
        return false;
    }
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        err = std::string("config parse: ") + e.what();
        return false;
    }
    try {
        if (j.contains("command")) o.command = j["command"].get<std::string>();
        if (j.contains("N")) o.n = j["N"].get<int>();
        if (j.contains("seed")) o.seed = j["seed"].get<uint64_t>();
        if (j.contains("theta")) {
            o.theta_re.clear();
            o.theta_im.clear();
            for (const auto& t : j["theta"]) {
                o.theta_re.push_back(t.at(0).get<double>());
                o.theta_im.push_back(t.at(1).get<double>());
            }
        }
        if (j.contains("boundary")) {
            const auto& b = j["boundary"];
            if (b.is_string()) o.boundary = b.get<std::string>();
            else {
                o.boundary = b.at("type").get<std::string>();
                auto grab = [&](const char* key, double& re) {
                    if (b.contains(key)) re = b.at(key).at(0).get<double>();
                };
                grab("c1", o.c1);
                grab("c2", o.c2);
                grab("ct1", o.ct1);
                grab("ct2", o.ct2);
                o.have_params = true;
            }
        }
        if (j.contains("ids")) o.ids = j["ids"].get<std::vector<std::string>>();
        if (j.contains("output")) o.output = j["output"].get<std::string>();
        if (j.contains("format")) o.format = j["format"].get<std::string>();
        if (j.contains("tol_scale")) o.tol_scale = j["tol_scale"].get<double>();
    } catch (const std::exception& e) {
        err = std::string("config schema: ") + e.what();
        return false;
    }
    return true;
}

bool build_model(const Options& o, ModelConfig& cfg, std::string& err) {
    const bool open = o.boundary == "open";
    if (o.boundary != "open" && o.boundary != "periodic") {
        err = "boundary must be 'periodic' or 'open'";
        return false;
    }
    if (o.n < 1 || o.n > 3) {
        err = "N must be 1, 2 or 3";
        return false;
    }
    cfg = open ? make_open(o.n, o.seed) : make_periodic(o.n, o.seed);
    if (!o.theta_re.empty()) {
        if (static_cast<int>(o.theta_re.size()) != o.n) {
            err = "theta list must have N entries";
            return false;
        }
        cfg.theta.clear();
        for (size_t i = 0; i < o.theta_re.size(); ++i)
            cfg.theta.push_back(cx(o.theta_re[i],
                                   i < o.theta_im.size() ? o.theta_im[i] : 0.0));
    }
    if (open && o.have_params) cfg.bp = BoundaryParams{o.c1, o.c2, o.ct1, o.ct2};
    if (open && !cfg.bp.valid()) {
        err = "boundary parameters on the excluded manifold (1 + c1 c2 = 0)";
        return false;
    }
    // the periodic homogeneous point is a legitimate configuration; anything
    // else needs pairwise-distinct inhomogeneities
    bool homogeneous = true;
    for (cx t : cfg.theta)
        if (std::abs(t) > 1e-12) homogeneous = false;
    if (!cfg.valid() && !(homogeneous && !open)) {
        err = "invalid model configuration (coincident or excluded inhomogeneities)";
        return false;
    }
    return true;
}

void write_output(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(o.output, std::ios::binary);
    out << text;
}

int cmd_verify(const Options& o, const ModelConfig& cfg) {
    verify::RunContext ctx = verify::make_context(cfg, o.seed);
    ctx.tol_scale = o.tol_scale;
    auto reports = verify::run_checks(o.ids, ctx);
    json j = report::reports_to_json(reports, cfg, o.seed);
    write_output(o, j.dump(2) + "\n");
    for (const auto& r : reports)
        if (!r.pass) return 1;
    return 0;
}

int cmd_spectrum(const Options& o, const ModelConfig& cfg) {
    auto pts = bae::matching_points(cfg, o.samples, o.seed);
    auto br = spectrum_branches(cfg, TransferKind::T1, pts);
    if (o.format == "csv") {
        write_output(o, report::spectrum_to_csv(pts, br));
    } else {
        json j = report::spectrum_to_json(pts, br, cfg, o.seed);
        write_output(o, j.dump(2) + "\n");
    }
    return br.max_membership_residual <= 1e-8 ? 0 : 1;
}

int cmd_bae(const Options& o, const ModelConfig& cfg) {
    bae::SolveOptions opt;
    opt.seed = o.seed;
    opt.multistarts = o.multistarts;
    auto rep = bae::run_spectrum_match(cfg, opt, o.max_l1);
    json j = report::match_report_to_json(rep, cfg, o.seed);
    write_output(o, j.dump(2) + "\n");
    const int expect = cfg.open ? 1 : rep.total_branches;
    return rep.matched_branches >= expect ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"so(5) chain verification and spectrum toolkit"};
    app.require_subcommand(0, 1);

    Options o;
    app.add_option("--config", o.config_file, "JSON configuration file");
    app.add_option("--N", o.n, "site count (1..3)");
    app.add_option("--seed", o.seed, "deterministic seed");
    app.add_option("--theta", o.theta_re, "inhomogeneity real parts")->delimiter(',');
    app.add_option("--theta-im", o.theta_im, "inhomogeneity imaginary parts")->delimiter(',');
    app.add_option("--boundary", o.boundary, "periodic or open");
    app.add_option("--c1", o.c1, "boundary parameter");
    app.add_option("--c2", o.c2, "boundary parameter");
    app.add_option("--ct1", o.ct1, "dual boundary parameter");
    app.add_option("--ct2", o.ct2, "dual boundary parameter");
    app.add_option("--out", o.output, "output path (default stdout)");
    app.add_option("--format", o.format, "json or csv");
    app.add_option("--tol-scale", o.tol_scale, "tolerance multiplier for verify");

    auto* sub_verify = app.add_subcommand("verify", "run the identity registry");
    sub_verify->fallthrough();
    sub_verify->add_option("--ids", o.ids, "comma-separated check ids (default: all)")
        ->delimiter(',');
    auto* sub_spectrum = app.add_subcommand("spectrum", "write transfer-matrix branch tables");
    sub_spectrum->fallthrough();
    sub_spectrum->add_option("--samples", o.samples, "number of sample points");
    auto* sub_bae = app.add_subcommand("bae", "solve root conditions and match the spectrum");
    sub_bae->fallthrough();
    sub_bae->add_option("--max-L1", o.max_l1, "cap the first-level sector");
    sub_bae->add_option("--multistarts", o.multistarts, "solver start budget");
    auto* sub_all = app.add_subcommand("all", "verify, spectrum and bae in sequence");
    sub_all->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string err;
    if (!load_config_file(o, err)) return fail_config(err);

    for (const auto* name : {"--c1", "--c2", "--ct1", "--ct2"})
        if (app.count(name) > 0) o.have_params = true;

    if (sub_verify->parsed()) o.command = "verify";
    else if (sub_spectrum->parsed()) o.command = "spectrum";
    else if (sub_bae->parsed()) o.command = "bae";
    else if (sub_all->parsed()) o.command = "all";
    if (o.command.empty()) o.command = "verify";

    ModelConfig cfg;
    if (!build_model(o, cfg, err)) return fail_config(err);

    if (o.command == "verify") return cmd_verify(o, cfg);
    if (o.command == "spectrum") return cmd_spectrum(o, cfg);
    if (o.command == "bae") return cmd_bae(o, cfg);
    if (o.command == "all") {
        Options ov = o;
        if (!o.output.empty()) ov.output = o.output + ".verify.json";
        int rc1 = cmd_verify(ov, cfg);
        Options os2 = o;
        if (!o.output.empty())
            os2.output = o.output + ".spectrum." + (o.format == "csv" ? "csv" : "json");
        int rc2 = cmd_spectrum(os2, cfg);
        Options ob = o;
        if (!o.output.empty()) ob.output = o.output + ".bae.json";
        int rc3 = cmd_bae(ob, cfg);
        return (rc1 || rc2 || rc3) ? 1 : 0;
    }
    return fail_config("unknown command " + o.command);
}
