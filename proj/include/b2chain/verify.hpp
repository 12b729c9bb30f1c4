#pragma once

#include "b2chain/cmatrix.hpp"
#include "b2chain/transfer.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace b2chain::verify {

struct RunContext {
    int N = 2;
    uint64_t seed = 42;
    std::map<int, ModelConfig> periodic;  // by site count
    std::map<int, ModelConfig> open;
    double tol_scale = 1.0;

    const ModelConfig& p(int n) const { return periodic.at(n); }
    const ModelConfig& o(int n) const { return open.at(n); }
};

RunContext make_context(int n, uint64_t seed);
// context with caller-supplied configurations for the top-level site count
RunContext make_context(const ModelConfig& cfg, uint64_t seed);

struct CheckOutcome {
    int points = 0;
    double raw = 0.0;     // worst raw residual over the evaluated points
    double fitted = 0.0;  // worst best-fit-scalar residual
    cx scalar = 1.0;      // the fitted scalar at the worst point
};

struct IdentityCheck {
    std::string id;
    std::string anchor;       // where the identity lives in the source text
    double tolerance = 1e-10;
    bool scalar_fit_allowed = false;
    int max_N = 3;            // memory guard: evaluated at min(ctx.N, max_N)
    bool open_chain = false;  // uses the open configuration
    std::function<CheckOutcome(const RunContext&)> run;
};

struct Report {
    std::string id;
    std::string anchor;
    int points = 0;
    double raw_residual = 0.0;
    double fitted_residual = 0.0;
    cx scalar = 1.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string error;  // builder exception text; a failed build never aborts the suite
};

const std::vector<IdentityCheck>& catalog();
std::vector<std::string> catalog_ids();

// run the selected checks (empty filter = all); deterministic in (ids, ctx)
std::vector<Report> run_checks(const std::vector<std::string>& ids, const RunContext& ctx);

}  // namespace b2chain::verify
