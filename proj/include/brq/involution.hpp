#ifndef BRQ_INVOLUTION_HPP
#define BRQ_INVOLUTION_HPP

#include "brq/lattice.hpp"

namespace brq {

enum class DegreeParity { odd, even };

/// Lattice with an isometry of finite order n >= 2. Vectors transform as
/// columns: v -> sigma * v.
class InvolutiveLattice {
public:
    InvolutiveLattice(Lattice base, IntMat sigma, std::size_t order);

    const Lattice& base() const { return base_; }
    const IntMat& sigma() const { return sigma_; }
    std::size_t order() const { return order_; }

    Vec apply_sigma(const Vec& v) const { return sigma_.apply(v); }

    /// Saturated Ker(sigma - sign*id), as generator rows. sign = -1 requires
    /// order 2.
    IntMat eigenlattice(int sign) const;

    /// Odd: Ker(Norm)/Im(1-sigma); even: Ker(1-sigma)/Im(Norm), with
    /// Norm = sum of sigma^i.
    FiniteAbelianGroup tate_cohomology(DegreeParity parity) const;

    /// Membership of v in (1-sigma)(Z^n), with a certificate mu satisfying
    /// (1-sigma) mu = v when it exists.
    std::optional<Vec> image_one_minus_sigma_certificate(const Vec& v) const;
    bool in_image_one_minus_sigma(const Vec& v) const {
        return image_one_minus_sigma_certificate(v).has_value();
    }

    const IntMat& one_minus_sigma() const { return one_minus_sigma_; }
    IntMat norm_matrix() const;

private:
    Lattice base_;
    IntMat sigma_;
    std::size_t order_;
    IntMat one_minus_sigma_;
    SmithDecomposition one_minus_sigma_snf_;  // computed once, reused for membership
};

}  // namespace brq

#endif
