#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "qpade/casorati.hpp"
#include "qpade/errors.hpp"
#include "qpade/pade.hpp"
#include "qpade/params.hpp"

namespace qpade {

/// Deterministic random instances for sweeps.  Parameters come from a pool
/// of small odd primes and ratios of them, q from a short list of values
/// away from roots of unity.  The guards are necessary but not sufficient,
/// so each candidate is probed through the solver and the shape extraction
/// along probe_depth T-steps; draws that fail anywhere are rejected and
/// retried.  Identical seeds give identical instances.
inline Params random_params(PainleveType type, int m, int n, std::mt19937_64& rng,
                            int probe_depth = 1) {
    static const std::vector<Rat> pool = {
        Rat(3),     Rat(5),     Rat(7),     Rat(11),   Rat(13),   Rat(1, 3), Rat(1, 5),
        Rat(1, 7),  Rat(5, 3),  Rat(3, 5),  Rat(7, 5), Rat(5, 7), Rat(7, 3), Rat(3, 7),
        Rat(11, 3), Rat(13, 5), Rat(11, 7), Rat(13, 3)};
    static const std::vector<Rat> qpool = {Rat(2), Rat(1, 2), Rat(3), Rat(2, 5)};

    auto pick = [&](const std::vector<Rat>& v) {
        return v[std::uniform_int_distribution<size_t>(0, v.size() - 1)(rng)];
    };
    probe_depth = std::clamp(probe_depth, 0, m);

    for (int attempt = 0; attempt < 500; ++attempt) {
        Params p;
        p.type = type;
        p.q = pick(qpool);
        p.m = m;
        p.n = n;
        // distinct values across a and b keep the null space 1-dimensional
        std::vector<Rat> used;
        auto pick_fresh = [&] {
            for (int t = 0; t < 50; ++t) {
                Rat v = pick(pool);
                bool dup = false;
                for (const Rat& u : used)
                    if (u == v) dup = true;
                if (!dup) {
                    used.push_back(v);
                    return v;
                }
            }
            return pick(pool);
        };
        for (size_t i = 0; i < a_count(type); ++i) p.a.push_back(pick_fresh());
        for (size_t i = 0; i < b_count(type); ++i) p.b.push_back(pick_fresh());
        if (has_c(type)) p.c = pick_fresh();
        if (has_d(type)) p.d = pick_fresh();
        if (type == PainleveType::E7)
            p.b[2] = p.a[0] * p.a[1] * p.a[2] * p.q.pow(m - n) / (p.b[0] * p.b[1]);
        try {
            validate(p);
            Params cur = p;
            PadePair pair = solve_linear(cur);
            for (int k = 0; k < probe_depth; ++k) {
                Params next = apply_T(cur, +1);
                PadePair shifted = solve_linear(next);
                CasoratiData cd = compute_D(cur, pair, shifted);
                match_shapes(cur, cd.D1n, cd.D2n, cd.D3n);
                cur = next;
                pair = shifted;
            }
            return p;
        } catch (const Error&) {
            continue;
        }
    }
    throw NonGenericParameters("random_params: could not draw a generic instance");
}

} // namespace qpade
