#include "gradord/iwasawa.hpp"

#include <sstream>

namespace gradord {

void ChiProfile::validate(long long p) const {
    if (p < 3 || !is_prime(p)) throw DomainError("p must be an odd prime");
    if (eta_degree < 1 || s_eta < 1 || w_chi < 1 || v_chi < 1)
        throw DomainError("profile " + label + ": degrees and indices must be positive");
    if (w_chi % v_chi != 0)
        throw DomainError("profile " + label + ": v_chi must divide w_chi");
    if (e_eta_chi < 1) throw DomainError("profile " + label + ": ramification index must be >= 1");
    if (d_eta_chi < 0 || d_chi_F < 0)
        throw DomainError("profile " + label + ": different exponents must be >= 0");
    if (ram_F_chi < 1) throw DomainError("profile " + label + ": e(F_chi/Q_p) must be >= 1");
    if (order_H < 1 || order_H % eta_degree != 0)
        throw DomainError("profile " + label + ": eta(1) must divide #H");
    if (is_direct_product && (w_chi != v_chi || e_eta_chi != 1 || d_eta_chi != 0))
        throw DomainError("profile " + label +
                          ": direct products have w = v and a trivial extension F(eta)/F_chi");
}

long long r_chi(const ChiProfile& profile) {
    if (profile.e_eta_chi == 0) throw DomainError("zero ramification index");
    return -(profile.d_eta_chi / profile.e_eta_chi);
}

long long s_chi(const ChiProfile& profile) {
    if (profile.w_chi % profile.v_chi != 0) throw DomainError("v_chi must divide w_chi");
    return (long long)profile.s_eta * (profile.w_chi / profile.v_chi);
}

ConductorRow central_conductor_component(const ChiProfile& profile, long long p) {
    profile.validate(p);
    ConductorRow row;
    row.label = profile.label;
    row.r_chi = r_chi(profile);
    row.s_chi = s_chi(profile);
    // #H w / chi(1) = #H / eta(1), valued in F_chi.
    long long vp = valuation_p(profile.order_H, p) - valuation_p(profile.eta_degree, p);
    if (vp < 0) throw DomainError("profile " + profile.label + ": #H/eta(1) is not p-integral");
    row.coefficient_valuation = profile.ram_F_chi * vp;
    row.d_chi_F = profile.d_chi_F;
    row.pi_exponent = row.coefficient_valuation - profile.d_chi_F;
    std::ostringstream os;
    os << "pi^" << row.pi_exponent << " * (p')^" << row.r_chi;
    row.ideal = os.str();
    return row;
}

}  // namespace gradord
