#pragma once

#include "b2chain/cmatrix.hpp"
#include "b2chain/kmat.hpp"

#include <vector>

namespace b2chain {

struct ModelConfig {
    int N = 2;
    std::vector<cx> theta;
    bool open = false;
    BoundaryParams bp{0.0, 0.0, 0.0, 0.0};

    size_t quantum_dim() const {
        size_t d = 1;
        for (int i = 0; i < N; ++i) d *= 5;
        return d;
    }
    // inhomogeneities pairwise distinct; for the open chain also distinct
    // from their negatives and nonzero
    bool valid() const;
};

// deterministic generic inhomogeneities and boundary parameters
ModelConfig make_periodic(int n, uint64_t seed);
ModelConfig make_open(int n, uint64_t seed);

enum class TransferKind { T1, T2, T3, TS };
int aux_dimension(TransferKind kind);

// R-matrix of the family on aux (x) V, and the partner used in the
// reversed-row products
CMat family_r(TransferKind kind, cx u);
CMat family_r_hat(TransferKind kind, cx u);

// single monodromy row acting on an arbitrary layout: aux factor at
// `aux_site`, quantum sites occupy the last N factors. `hat` selects the
// reversed-order row with arguments u + theta_j.
void apply_monodromy_row(TransferKind kind, cx u, int aux_site, const std::vector<int>& dims,
                         const ModelConfig& cfg, bool hat, CMat& x);

// monodromy on aux (x) quantum (aux first)
CMat monodromy(TransferKind kind, cx u, const ModelConfig& cfg, bool hat = false);

// transfer matrix on the quantum space; periodic trace or double-row trace
CMat transfer(TransferKind kind, cx u, const ModelConfig& cfg);

// projected multi-row transfer at level m = 2, 3, 4
CMat transfer_bar(int m, cx u, const ModelConfig& cfg);

// fused boundary products on m auxiliary factors, compressed through the
// catalog isometry of the corresponding subspace (open case only)
CMat kbar_minus_compressed(int m, cx u, const ModelConfig& cfg);
CMat kbar_plus_compressed(int m, cx u, const ModelConfig& cfg);

// logarithmic derivative of the transfer matrix at the origin with all
// inhomogeneities at zero; central differences plus one Richardson step
CMat hamiltonian(const ModelConfig& cfg);

struct SpectrumBranches {
    std::vector<std::vector<cx>> values;  // [branch][sample], 5^N branches
    std::vector<int> cluster;             // anchor eigenvalue cluster of each branch
    bool anchor_simple = false;
    double max_membership_residual = 0.0; // worst distance to an exact eigenvalue
};

// anchor-based branch tracking; branches with coinciding anchor eigenvalues
// share a cluster id (the commuting family has u-independent eigenprojectors,
// so the Rayleigh quotient is exact on every cluster)
SpectrumBranches spectrum_branches(const ModelConfig& cfg, TransferKind kind,
                                   const std::vector<cx>& samples);

}  // namespace b2chain
