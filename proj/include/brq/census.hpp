#ifndef BRQ_CENSUS_HPP
#define BRQ_CENSUS_HPP

#include "brq/enriques.hpp"

namespace brq {

struct HypersurfaceRecord {
    Int norm;              // lambda^2 = -2k
    Vec witness;           // in L-coordinates, anti-invariant and primitive
    Vec witness_lminus;    // same vector in L^- basis coordinates
    Int divisibility;      // gcd of (lambda . L^-)
    Signature complement_signature;
};

/// gcd over a basis mu of L^- of |lambda . mu|. lambda in L-coordinates,
/// must be a nonzero element of L^-.
Int divisibility(const EnriquesModel& m, const Vec& lambda);

/// One record per odd k with 3 <= k <= k_max, witness e - k f in the last H
/// summand. Throws if k_max < 3.
std::vector<HypersurfaceRecord> hypersurface_census(const EnriquesModel& m, const Int& k_max);

/// Signature of the saturated complement lambda-perp inside L^-.
/// lambda in L^- basis coordinates, nonzero.
Signature orthogonal_signature_in_lminus(const EnriquesModel& m, const Vec& lambda);

/// omega = re + i*im with exact rational entries in the L^- basis.
struct PeriodPoint {
    RatVec re;
    RatVec im;
};

enum class OmegaVerdict { in_omega, not_in_omega, indeterminate };

struct OmegaReport {
    OmegaVerdict verdict = OmegaVerdict::indeterminate;
    bool isotropic = false;        // (omega . omega) = 0
    bool positive = false;         // (omega . omega-bar) > 0
    std::size_t n_rank = 0;        // rank of N = L^- cap omega-perp
    Signature n_signature;
    std::optional<Vec> failing_root;   // a (-2)-vector of N, L^- coordinates
    std::optional<bool> on_hyperplane; // (lambda_check . omega) = 0
    std::string detail;
};

/// Exact membership test for the period domain: isotropy, positivity, and
/// absence of (-2)-vectors orthogonal to omega. The root condition is decided
/// through the integral sublattice N orthogonal to omega; when N is not
/// negative definite the verdict is indeterminate.
OmegaReport omega_membership(const EnriquesModel& m, const PeriodPoint& omega,
                             const std::optional<Vec>& lambda_check = std::nullopt);

}  // namespace brq

#endif
