#include "b2chain/tq.hpp"

#include "b2chain/weights.hpp"

namespace b2chain::tq {

using namespace weights;

cx q_eval(int m, cx u, const BetheRoots& r) {
    const auto& roots = (m == 1) ? r.roots1 : r.roots2;
    const double half = 0.5 * m;
    cx acc = 1.0;
    for (cx root : roots) {
        acc *= (u - root + half);
        if (r.open) acc *= (u + root + half);
    }
    return acc;
}

cx x_param(const BoundaryParams& p) {
    const cx num = 4.0 + 2.0 * p.c1 * p.ct2 + 2.0 * p.c2 * p.ct1;
    const cx den = 2.0 * std::sqrt((1.0 + p.c1 * p.c2) * (1.0 + p.ct1 * p.ct2));
    return num / den - 2.0;
}

namespace {

cx q1(cx u, const BetheRoots& r) { return q_eval(1, u, r); }
cx q2(cx u, const BetheRoots& r) { return q_eval(2, u, r); }

cx site_product(const ModelConfig& cfg, cx u, cx (*w)(cx), bool both_signs) {
    cx acc = 1.0;
    for (cx th : cfg.theta) {
        acc *= w(u - th);
        if (both_signs) acc *= w(u + th);
    }
    return acc;
}

cx boundary_norm(const ModelConfig& cfg) {
    return (1.0 + cfg.bp.c1 * cfg.bp.c2) * (1.0 + cfg.bp.ct1 * cfg.bp.ct2);
}

cx open_H(const ModelConfig& cfg, cx u) {
    cx acc = boundary_norm(cfg);
    for (cx th : cfg.theta) acc *= rho_tilde0(u - th) * rho_tilde0(u + th);
    return acc;
}

}  // namespace

cx z_term(int i, cx u, const BetheRoots& r, const ModelConfig& cfg) {
    if (!r.open) {
        switch (i) {
            case 1:
                return site_product(cfg, u, a1, false) * q1(u - 1.0, r) / q1(u, r);
            case 2:
                return site_product(cfg, u, b1, false) * q1(u + 1.0, r) * q2(u - 1.0, r) /
                       (q1(u, r) * q2(u, r));
            case 3:
                return site_product(cfg, u, b1, false) * q2(u - 1.0, r) * q2(u + 0.5, r) /
                       (q2(u, r) * q2(u - 0.5, r));
            case 4:
                return site_product(cfg, u, b1, false) * q1(u - 0.5, r) * q2(u + 0.5, r) /
                       (q1(u + 0.5, r) * q2(u - 0.5, r));
            case 5:
                return site_product(cfg, u, e1, false) * q1(u + 1.5, r) / q1(u + 0.5, r);
        }
        throw std::invalid_argument("z_term: index");
    }
    const cx bn = boundary_norm(cfg);
    switch (i) {
        case 1:
            return -16.0 * std::pow(u + 0.25, 3) * (u + 1.5) / ((u + 0.5) * (u + 0.75)) *
                   site_product(cfg, u, a1, true) * q1(u - 1.0, r) / q1(u, r) * bn;
        case 2:
            return -16.0 * u * (u + 1.5) * (u + 0.25) * (u + 0.75) / ((u + 1.0) * (u + 0.5)) *
                   site_product(cfg, u, b1, true) * q1(u + 1.0, r) * q2(u - 1.0, r) /
                   (q1(u, r) * q2(u, r)) * bn;
        case 3:
            return -16.0 * u * (u + 1.5) * (u + 0.25) * (u + 1.25) / ((u + 1.0) * (u + 0.5)) *
                   site_product(cfg, u, b1, true) * q2(u - 1.0, r) * q2(u + 0.5, r) /
                   (q2(u, r) * q2(u - 0.5, r)) * bn;
        case 4:
            return -16.0 * u * (u + 1.5) * (u + 0.75) * (u + 1.25) / ((u + 1.0) * (u + 0.5)) *
                   site_product(cfg, u, b1, true) * q1(u - 0.5, r) * q2(u + 0.5, r) /
                   (q1(u + 0.5, r) * q2(u - 0.5, r)) * bn;
        case 5:
            return -16.0 * u * std::pow(u + 1.25, 3) / ((u + 1.0) * (u + 0.75)) *
                   site_product(cfg, u, e1, true) * q1(u + 1.5, r) / q1(u + 0.5, r) * bn;
    }
    throw std::invalid_argument("z_term: index");
}

cx f_term(int i, cx u, const BetheRoots& r, const ModelConfig& cfg) {
    if (!r.open) return 0.0;
    if (r.x == cx(0.0) && i != 0) {
        // the inhomogeneous terms all carry x (or x^2)
        if (i >= 1 && i <= 5) return 0.0;
    }
    const cx bn = boundary_norm(cfg);
    auto shifted = [&](double s) {
        cx acc = 1.0;
        for (cx th : cfg.theta) acc *= (u - th + s) * (u + th + s);
        return acc;
    };
    switch (i) {
        case 1:
            return -16.0 * u * (u + 1.5) * (u + 0.25) * (u + 0.75) * (u + 1.25) / (u + 0.5) *
                   site_product(cfg, u, b1, true) * shifted(1.0) *
                   q1(u + 1.0, r) * q1(u + 0.5, r) * q2(u - 1.0, r) /
                   (q2(u, r) * q2(u - 0.5, r)) * bn * r.x;
        case 2:
            return -16.0 * u * (u + 1.5) * std::pow(u + 0.75, 2) * (u + 1.25) / (u + 0.5) *
                   site_product(cfg, u, b1, true) * shifted(1.0) *
                   q1(u - 0.5, r) * q1(u + 1.0, r) / q2(u - 0.5, r) * bn * r.x;
        case 3:
            return -16.0 * u * (u + 1.5) * (u + 0.25) * std::pow(u + 0.75, 2) * (u + 1.25) *
                   site_product(cfg, u, a1, true) * site_product(cfg, u, e1, true) *
                   q1(u, r) * q1(u + 0.5, r) * q1(u + 1.0, r) * q1(u - 0.5, r) /
                   (q2(u, r) * q2(u - 0.5, r)) * bn * r.x * r.x;
        case 4:
            return -16.0 * u * (u + 1.5) * (u + 0.25) * std::pow(u + 0.75, 2) / (u + 1.0) *
                   site_product(cfg, u, b1, true) * shifted(0.5) *
                   q1(u + 1.0, r) * q1(u - 0.5, r) / q2(u, r) * bn * r.x;
        case 5:
            return -16.0 * u * (u + 1.5) * (u + 0.25) * (u + 0.75) * (u + 1.25) / (u + 1.0) *
                   site_product(cfg, u, b1, true) * shifted(0.5) *
                   q2(u + 0.5, r) * q1(u, r) * q1(u - 0.5, r) /
                   (q2(u, r) * q2(u - 0.5, r)) * bn * r.x;
    }
    throw std::invalid_argument("f_term: index");
}

namespace {

cx zsum(cx u, const BetheRoots& r, const ModelConfig& cfg, std::initializer_list<int> zs,
        std::initializer_list<int> fs) {
    cx acc = 0.0;
    for (int i : zs) acc += z_term(i, u, r, cfg);
    for (int i : fs) acc += f_term(i, u, r, cfg);
    return acc;
}

cx lambda2(cx u, const BetheRoots& r, const ModelConfig& cfg) {
    auto z = [&](int i, cx w) { return z_term(i, w, r, cfg); };
    auto f = [&](int i, cx w) { return f_term(i, w, r, cfg); };
    if (!r.open) {
        cx pref = 1.0;
        for (cx th : cfg.theta) pref *= rho_tilde0(u - th + 0.5);
        cx um = u - 0.5, up = u + 0.5;
        cx tail = z(3, um) + z(4, um) + z(5, um);
        cx val = z(1, up) * (z(2, um) + tail) + z(2, up) * tail + z(3, up) * tail +
                 z(4, up) * z(5, um);
        return val / pref;
    }
    cx um = u - 0.5, up = u + 0.5;
    cx pref = std::pow(2.0, -6) / ((u - 0.5) * (u + 2.0) * std::pow(u + 0.75, 2) *
                                   open_H(cfg, u + 0.5)) *
              rho_tilde_v(2.0 * u);
    cx val = z(1, up) * zsum(um, r, cfg, {2, 3, 4}, {1, 2, 3, 4, 5}) +
             zsum(up, r, cfg, {2, 3, 4}, {1, 2, 3, 4, 5}) * z(5, um) +
             (z(2, up) + z(3, up) + f(1, up)) * (z(3, um) + z(4, um) + f(5, um)) +
             z(1, up) * z(5, um);
    return pref * val;
}

cx lambda3(cx u, const BetheRoots& r, const ModelConfig& cfg) {
    auto z = [&](int i, cx w) { return z_term(i, w, r, cfg); };
    auto f = [&](int i, cx w) { return f_term(i, w, r, cfg); };
    if (!r.open) {
        cx pref = 1.0;
        for (cx th : cfg.theta) pref *= rho_tilde0(u - th + 1.0) * rho_tilde0(u - th);
        cx tail = z(3, u - 1.0) + z(4, u - 1.0) + z(5, u - 1.0);
        cx val = z(1, u + 1.0) * z(2, u) * tail + z(1, u + 1.0) * z(3, u) * tail +
                 z(2, u + 1.0) * z(3, u) * tail + z(3, u + 1.0) * z(3, u) * tail +
                 (z(1, u + 1.0) + z(2, u + 1.0) + z(3, u + 1.0)) * z(4, u) * z(5, u - 1.0);
        return val / pref;
    }
    cx pref = -std::pow(2.0, -18) /
              (std::pow(u + 1.25, 3) * std::pow(u + 0.75, 2) * (u - 0.5) * u * (u - 1.0) *
               std::pow(u + 0.25, 3) * (u + 1.5) * (u + 2.5) * (u + 2.0) * open_H(cfg, u + 1.0) *
               open_H(cfg, u)) *
              rho_tilde_v(2.0 * u + 1.0) * rho_tilde_v(2.0 * u) * rho_tilde_v(2.0 * u - 1.0);
    cx bracket1 = z(1, u + 1.0) * z(2, u) + z(1, u + 1.0) * z(3, u) + z(2, u + 1.0) * z(3, u) +
                  z(3, u + 1.0) * z(3, u) + z(1, u + 1.0) * f(1, u) + f(1, u + 1.0) * z(3, u);
    cx tail1 = z(3, u - 1.0) + z(4, u - 1.0) + f(5, u - 1.0);
    cx val = bracket1 * tail1 +
             z(1, u + 1.0) * zsum(u, r, cfg, {2, 3, 4}, {1, 2, 3, 4, 5}) * z(5, u - 1.0) +
             (z(2, u + 1.0) + z(3, u + 1.0) + f(1, u + 1.0)) * (z(3, u) + z(4, u) + f(5, u)) *
                 z(5, u - 1.0);
    return pref * val;
}

}  // namespace

cx lambda_s_branch(int branch, cx u, const BetheRoots& r, const ModelConfig& cfg) {
    auto z = [&](int i, cx w) { return z_term(i, w, r, cfg); };
    auto f = [&](int i, cx w) { return f_term(i, w, r, cfg); };
    if (!r.open) {
        if (branch == 1) {
            cx pref = 1.0;
            for (cx th : cfg.theta) pref *= (u + 1.75 - th) * b1(u - 0.75 - th);
            cx val = z(1, u + 0.25) * z(2, u - 0.75) + z(1, u + 0.25) * z(3, u - 0.75) +
                     z(2, u + 0.25) * z(3, u - 0.75) + z(3, u + 0.25) * z(3, u - 0.75);
            return q2(u - 1.25, r) / q2(u - 1.75, r) * val / pref;
        }
        cx pref = 1.0;
        for (cx th : cfg.theta) pref *= (u - 0.25 - th) * b1(u + 0.75 - th);
        cx val = z(3, u + 0.75) * z(3, u - 0.25) + z(3, u + 0.75) * z(4, u - 0.25) +
                 z(3, u + 0.75) * z(5, u - 0.25) + z(4, u + 0.75) * z(5, u - 0.25);
        return q2(u + 0.75, r) / q2(u + 1.25, r) * val / pref;
    }
    const cx bn_pow = std::pow(boundary_norm(cfg), -1.5);
    if (branch == 1) {
        cx pref = std::pow(2.0, -8) * (u - 0.25) * (u + 1.0) /
                  ((u + 0.75) * (u + 1.75) * (u - 0.75) * (u - 0.5) * std::pow(u + 0.5, 2)) *
                  bn_pow * q2(u - 1.25, r) / q2(u - 1.75, r);
        cx site = 1.0;
        for (cx th : cfg.theta)
            site *= (u + 1.75 - th) * (u + 1.75 + th) * b1(u - 0.75 - th) * b1(u - 0.75 + th);
        cx val = z(1, u + 0.25) * z(2, u - 0.75) + z(1, u + 0.25) * z(3, u - 0.75) +
                 z(2, u + 0.25) * z(3, u - 0.75) + z(3, u + 0.25) * z(3, u - 0.75) +
                 z(1, u + 0.25) * f(1, u - 0.75) + f(1, u + 0.25) * z(3, u - 0.75);
        return pref / site * val;
    }
    cx pref = std::pow(2.0, -8) * (u + 0.5) * (u + 1.75) /
              ((u - 0.25) * (u + 0.75) * (u + 2.0) * (u + 2.25) * std::pow(u + 1.0, 2)) * bn_pow *
              q2(u + 0.75, r) / q2(u + 1.25, r);
    cx site = 1.0;
    for (cx th : cfg.theta)
        site *= (u - 0.25 - th) * (u - 0.25 + th) * b1(u + 0.75 - th) * b1(u + 0.75 + th);
    cx val = z(3, u + 0.75) * z(3, u - 0.25) + z(3, u + 0.75) * z(4, u - 0.25) +
             z(3, u + 0.75) * z(5, u - 0.25) + z(4, u + 0.75) * z(5, u - 0.25) +
             z(3, u + 0.75) * f(5, u - 0.25) + f(5, u + 0.75) * z(5, u - 0.25);
    return pref / site * val;
}

cx lambda_eval(Level level, cx u, const BetheRoots& r, const ModelConfig& cfg) {
    switch (level) {
        case Level::Fundamental: {
            cx acc = 0.0;
            for (int i = 1; i <= 5; ++i) acc += z_term(i, u, r, cfg);
            if (r.open)
                for (int i = 1; i <= 5; ++i) acc += f_term(i, u, r, cfg);
            return acc;
        }
        case Level::Eleven: return lambda2(u, r, cfg);
        case Level::Fifteen: return lambda3(u, r, cfg);
        case Level::Spinor: return lambda_s_branch(1, u, r, cfg);
    }
    throw std::invalid_argument("lambda_eval: level");
}

cx bae_residual(int k, int which, const BetheRoots& r, const ModelConfig& cfg) {
    if (!r.open) {
        if (which == 1) {
            const cx mu = r.roots1.at(k);
            cx lhs = q1(mu + 0.5, r) * q2(mu - 1.5, r) / (q1(mu - 1.5, r) * q2(mu - 0.5, r));
            cx rhs = 1.0;
            for (cx th : cfg.theta) rhs *= (mu + 0.5 - th) / (mu - 0.5 - th);
            return lhs + rhs;
        }
        const cx mu = r.roots2.at(k);
        cx lhs = q1(mu, r) * q2(mu - 1.5, r) / (q1(mu - 1.0, r) * q2(mu - 0.5, r));
        return lhs + 1.0;
    }
    if (which == 1) {
        const cx la = r.roots1.at(k);
        cx lhs = q1(la + 0.5, r) * q2(la - 1.5, r) / (q1(la - 1.5, r) * q2(la - 0.5, r));
        cx rhs = (la + 0.5) * std::pow(la - 0.25, 2) / ((la - 0.5) * std::pow(la + 0.25, 2));
        for (cx th : cfg.theta)
            rhs *= (la - th + 0.5) * (la + th + 0.5) / ((la - th - 0.5) * (la + th - 0.5));
        return lhs + rhs;
    }
    const cx la = r.roots2.at(k);
    cx t1 = (la - 0.25) / (la + 0.25) * q2(la - 1.5, r) / (q1(la - 1.0, r) * q1(la - 0.5, r));
    cx t2 = q2(la - 0.5, r) / (q1(la, r) * q1(la - 0.5, r));
    cx t3 = r.x * la * (la - 0.25);
    for (cx th : cfg.theta) t3 *= (la - th) * (la + th);
    return t1 + t2 + t3;
}

}  // namespace b2chain::tq
