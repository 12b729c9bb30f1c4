#pragma once

#include "b2chain/cmatrix.hpp"
#include "b2chain/transfer.hpp"

#include <vector>

namespace b2chain::tq {

// Trial-root data of the T-Q parametrization. In the open chain the trial
// factors pair each root with its negative and the sector sizes are tied by
// L2 = 2 L1 + N + 1; the inhomogeneous weight x rides along.
struct BetheRoots {
    bool open = false;
    std::vector<cx> roots1;
    std::vector<cx> roots2;
    cx x = 0.0;

    int L1() const { return static_cast<int>(roots1.size()); }
    int L2() const { return static_cast<int>(roots2.size()); }
    bool sector_valid(int n) const {
        if (!open) return L1() <= 2 * n && L2() <= 2 * L1();
        // with a vanishing inhomogeneous weight the sector tie dissolves and
        // the diagonal-limit spectrum spreads over the smaller sectors too
        if (x == cx(0.0)) return L1() <= 2 * n && L2() <= 2 * L1() + n + 1;
        return L2() == 2 * L1() + n + 1;
    }
};

cx q_eval(int m, cx u, const BetheRoots& r);

cx x_param(const BoundaryParams& p);

// the five trial-ratio terms and the open inhomogeneous terms
cx z_term(int i, cx u, const BetheRoots& r, const ModelConfig& cfg);
cx f_term(int i, cx u, const BetheRoots& r, const ModelConfig& cfg);

enum class Level { Fundamental, Eleven, Fifteen, Spinor };

// trial eigenvalue of the selected transfer matrix
cx lambda_eval(Level level, cx u, const BetheRoots& r, const ModelConfig& cfg);
// the spinor level has two printed closed forms; branch in {1, 2}
cx lambda_s_branch(int branch, cx u, const BetheRoots& r, const ModelConfig& cfg);

// LHS - RHS of the root condition for roots1[k] (which = 1) or roots2[k]
// (which = 2); zero iff the root satisfies its condition
cx bae_residual(int k, int which, const BetheRoots& r, const ModelConfig& cfg);

}  // namespace b2chain::tq
