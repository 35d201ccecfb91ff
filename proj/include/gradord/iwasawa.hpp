#pragma once

#include <string>

#include "gradord/galois.hpp"

namespace gradord {

// Numeric ramification profile of an irreducible character chi of a
// one-dimensional p-adic Lie group (finite H extended by a procyclic
// Gamma), with eta an irreducible constituent of the restriction to H.
struct ChiProfile {
    std::string label = "chi";
    int eta_degree = 1;          // eta(1)
    int s_eta = 1;               // Schur index of eta
    int w_chi = 1;               // orbit length of eta under Gamma
    int v_chi = 1;               // least Gamma-power acting as a Galois map
    long long e_eta_chi = 1;     // ramification index e(F(eta)/F_chi)
    long long d_eta_chi = 0;     // different exponent of F(eta)/F_chi
    long long d_chi_F = 0;       // different exponent of F_chi/F
    long long ram_F_chi = 1;     // e(F_chi/Q_p)
    long long order_H = 1;       // #H
    bool is_direct_product = false;

    int chi_degree() const { return w_chi * eta_degree; }
    void validate(long long p) const;
};

// Exponent of the height-one prime above p in the chi-component of the
// central conductor: -floor(d / e), never positive. The different of the
// unramified top W/F(eta) vanishes, so the numerator is the different
// exponent of F(eta)/F_chi itself.
long long r_chi(const ChiProfile& profile);

// s_chi = s_eta * w_chi / v_chi.
long long s_chi(const ChiProfile& profile);

struct ConductorRow {
    std::string label;
    long long r_chi = 0;
    long long s_chi = 1;
    long long coefficient_valuation = 0;  // ram_F_chi * v_p(#H w / chi(1))
    long long d_chi_F = 0;
    long long pi_exponent = 0;            // coefficient valuation - d(F_chi/F)
    std::string ideal;                    // "pi^E * (p')^r"
};

ConductorRow central_conductor_component(const ChiProfile& profile, long long p);

}  // namespace gradord
