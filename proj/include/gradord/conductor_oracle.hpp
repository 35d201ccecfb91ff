#pragma once

#include <vector>

#include "gradord/group_algebra.hpp"

namespace gradord {

struct OrbitConductor {
    std::vector<int> rows;     // table rows in the p-adic orbit
    int degree = 1;            // eta(1) of any member
    long long value_field = 1; // d with Q_p(eta) = Q_p(zeta_d)
    long long e = 1;           // ramification of Q_p(eta)/Q_p
    long long f = 1;           // residue degree
    long long valuation = 0;   // lambda-exponent of the conductor component
    long long formula_valuation = 0;  // e * v_p(#H/eta(1)) - d(Q_p(eta)/Q_p)
};

struct ConductorOracleResult {
    long long p = 0;
    int precision = 0;
    std::vector<OrbitConductor> orbits;
};

// Conductor {x in Gamma : x Gamma <= Z_p[H]} of a maximal order into the
// group ring, modeled as an exact lattice computation modulo p^(2 v_p(#H))
// with per-orbit valuations read off through lattice indices.
//
// Components are realized exactly: orbits of linear characters through the
// cyclotomic field they generate, rational-valued higher-degree characters
// through a bundled integral representation. Q8's quaternionic component
// has no such realization and is rejected.
ConductorOracleResult bruteforce_conductor(const CharacterTable& table, long long p,
                                           int precision);

// The conductor component valuation predicted by the block-diagonal
// formula: coefficient #H/eta(1) times the trace dual of the component's
// maximal order.
long long jacobinski_component_valuation(const CharacterTable& table,
                                         const std::vector<int>& orbit, long long p);

}  // namespace gradord
