#pragma once

#include "b2chain/cmatrix.hpp"

// Scalar weight functions of the three R-matrices and the normalization
// factors of the fused ones. These are the standard Boltzmann-weight names
// for this model.
namespace b2chain::weights {

inline cx a1(cx u) { return (1.0 + u) * (u + 1.5); }
inline cx b1(cx u) { return u * (u + 1.5); }
inline cx c1(cx) { return 1.5; }
inline cx d1(cx u) { return -u; }
inline cx e1(cx u) { return u * (u + 0.5); }
inline cx f1(cx u) { return a1(u) + d1(u); }
inline cx g1(cx u) { return u + 1.5; }

inline cx a2(cx u) { return (u + 0.5) * (u + 1.5); }
inline cx b2(cx u) { return u * (u + 1.5); }
inline cx c2(cx u) { return u + 0.75; }
inline cx d2(cx u) { return -0.5 * u; }
inline cx e2(cx u) { return u * (u + 1.0); }
inline cx g2(cx u) { return 0.5 * u + 0.75; }

inline cx a3(cx u) { return u + 1.25; }
inline cx b3(cx u) { return u + 0.25; }
inline cx c3(cx) { return 1.0; }
inline cx e3(cx u) { return u + 0.75; }
inline cx g3(cx) { return 1.0 / std::sqrt(2.0); }

// unitarity scalars
inline cx rho1(cx u) { return a1(u) * a1(-u); }
inline cx rho2(cx u) { return a2(u) * a2(-u); }
inline cx rho3(cx u) { return a3(u) * a3(-u); }

// fused normalizations
inline cx rho_tilde0(cx u) { return (u - 1.0) * (u + 1.5); }
inline cx rho_tilde1(cx u) { return rho_tilde0(u) * rho_tilde0(u - 1.0) * rho_tilde0(u - 2.0); }

// unitarity / crossing-unitarity scalars of the fused R-matrices
inline cx rho_barv(cx u) { return (u + 1.0) * (u - 1.0) * (u + 1.5) * (u - 1.5); }
inline cx rho_tildev(cx u) { return (u + 2.0) * (u - 2.0) * (u + 0.5) * (u - 0.5); }
inline cx rho_tilde_barv(cx u) { return u * (u + 3.0) * (u + 0.5) * (u + 2.5); }
inline cx rho_tilde_tildev(cx u) { return (u + 1.0) * (u + 2.0) * (u - 0.5) * (u + 3.5); }
// crossing-unitarity scalar of the fundamental R-matrix, rho1(u+3/2)
inline cx rho_tilde_v(cx u) { return u * (u + 0.5) * (u + 2.5) * (u + 3.0); }

}  // namespace b2chain::weights
