#ifndef BRQ_ENRIQUES_HPP
#define BRQ_ENRIQUES_HPP

#include "brq/involution.hpp"
#include "brq/mod2.hpp"

namespace brq {

/// sigma-stable sublattice given by integer generator rows in L-coordinates.
struct PicardSpec {
    IntMat generators;
    std::string label;
};

struct RhoStabilityError : std::invalid_argument {
    std::size_t violating_row;
    explicit RhoStabilityError(std::size_t row);
};

struct DeltaContainmentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class DecisionMethod { picard_witness, transcendental_form };

struct DecisionReport {
    bool vanishes = false;
    DecisionMethod method = DecisionMethod::picard_witness;
    std::optional<Vec> witness;  // L-coordinates
    std::optional<Int> witness_norm;
    std::optional<BitVec> form_values;  // one bit per T-basis vector
    std::optional<bool> consistency;    // set when both methods are run
    std::string clause;                 // decision criterion being instantiated
    std::vector<std::string> warnings;
};

/// Mod-2 model of H^2(S,Z/2): basis xbar_1..xbar_10 (reductions of the fixed
/// E-basis), k_S (index 10), beta0 (index 11). beta0 is well-defined only
/// modulo integral classes; the normalization (beta0 . xbar_i) = 0 is the
/// default, and beta0_shift records any test shift by an integral class.
struct SurfaceMod2Model {
    static constexpr std::size_t dim = 12;
    static constexpr std::size_t ks_index = 10;
    static constexpr std::size_t beta0_index = 11;

    BitMat pairing;        // 12 x 12, nondegenerate
    BitMat pi_star;        // 22 x 12, into E2 + E2 + H2
    BitMat pi_lower_star;  // 12 x 22, pairing-adjoint of pi_star
    BitVec beta0_shift;    // length 11: coefficients on xbar_1..xbar_10, k_S

    BitVec ks() const;
    BitVec beta0() const;
    Bit square(const BitVec& x) const;  // (x . x) under the pairing
};

/// The fixed rank-22 model L = E + E + H with the swap-and-negate involution
/// rho, the diagonal embedding delta : E -> L and the transfer pi_*.
/// Coordinates: 0..9 first E copy, 10..19 second copy, 20 = e, 21 = f,
/// where E = (-E8) + H with E-coordinates 8 = e_E, 9 = f_E.
class EnriquesModel {
public:
    static EnriquesModel build();

    const Lattice& L() const { return rho_.base(); }
    const InvolutiveLattice& rho() const { return rho_; }
    const Lattice& E() const { return e_; }
    const IntMat& delta() const { return delta_; }  // 22 x 10, column action
    std::size_t e_index() const { return 20; }
    std::size_t f_index() const { return 21; }

    Vec delta_apply(const Vec& alpha) const;  // E -> L
    Vec pi_lower_star_integral(const Vec& v) const;  // L -> E, (a,a',b) -> a+a'

    /// Generator rows of delta(E) in L (10 x 22).
    const IntMat& delta_rows() const { return delta_rows_; }
    /// Saturated basis of the (-1)-eigenlattice L^- (12 x 22).
    const IntMat& lminus_basis() const { return lminus_basis_; }
    /// L^- as an abstract lattice in that basis.
    const Lattice& lminus_lattice() const { return lminus_; }

    /// pi_* lambda = 0 (free and torsion parts) and lambda not in (1-sigma)(L).
    bool cor56_condition_i(const Vec& lambda) const;
    /// rho(lambda) = -lambda and lambda^2 = 2 mod 4.
    bool cor56_condition_ii(const Vec& lambda) const;

private:
    EnriquesModel(Lattice e, InvolutiveLattice rho, IntMat delta);
    void verify_invariants() const;

    Lattice e_;
    InvolutiveLattice rho_;
    IntMat delta_;
    IntMat delta_rows_;
    IntMat lminus_basis_;
    Lattice lminus_;
};

/// Saturation of the spec's row span; throws RhoStabilityError if the span is
/// not rho-stable.
IntMat saturate_picard_spec(const EnriquesModel& m, const PicardSpec& pic);

/// Vanishing of the pulled-back Brauer class, decided through a witness in
/// the anti-invariant part of the (saturated) Picard sublattice: vanishes iff
/// some lambda there has lambda^2 = 2 mod 4.
DecisionReport brauer_vanishes_by_picard(const EnriquesModel& m, const PicardSpec& pic);

/// Saturated orthogonal complement of the saturated spec; throws on a
/// degenerate spec span.
IntMat transcendental_complement(const EnriquesModel& m, const PicardSpec& pic);

/// Same decision through the linear form tau -> ((e+f) . tau) mod 2 on the
/// transcendental complement. Requires delta(E) inside the saturated spec.
DecisionReport brauer_vanishes_by_form(const EnriquesModel& m, const PicardSpec& pic);

/// Run both methods and attach the cross-check to the picard report.
DecisionReport brauer_decide_both(const EnriquesModel& m, const PicardSpec& pic);

SurfaceMod2Model build_surface_mod2_model(const EnriquesModel& m, const BitVec& beta0_shift = {});

struct TorsionProfile {
    Int n;
    std::size_t t_rank = 0;             // rank of the transcendental complement
    FiniteAbelianGroup hom_part;        // Hom(T, Z/n) = (Z/n)^t
    FiniteAbelianGroup h3_part;         // n-torsion of the given H^3 torsion
    Int brn_order = 1;                  // n^t * |h3[n]|
    std::optional<FiniteAbelianGroup> brn_exact;  // known when one side is trivial
};

/// Order and sub/quotient structure of Br[n] from the lattice data; the
/// extension class itself is not computed.
TorsionProfile brauer_torsion_profile(const EnriquesModel& m, const PicardSpec& pic,
                                      const Int& n, const FiniteAbelianGroup& h3_torsion);

namespace detail {
/// Test hook: the decision without the mandatory saturation step.
DecisionReport brauer_vanishes_by_picard_unsaturated(const EnriquesModel& m,
                                                     const PicardSpec& pic);
/// Form values against an arbitrary integral lift w of the pairing class.
BitVec form_values_with_lift(const EnriquesModel& m, const IntMat& t_basis, const Vec& w);
}  // namespace detail

}  // namespace brq

#endif
