#include "brq/involution.hpp"

namespace brq {

InvolutiveLattice::InvolutiveLattice(Lattice base, IntMat sigma, std::size_t order)
    : base_(std::move(base)), sigma_(std::move(sigma)), order_(order),
      one_minus_sigma_(IntMat::identity(base_.rank()) - sigma_),
      one_minus_sigma_snf_(smith_normal_form(one_minus_sigma_)) {
    const std::size_t n = base_.rank();
    if (sigma_.rows() != n || sigma_.cols() != n)
        throw DimensionError("InvolutiveLattice: sigma shape != rank");
    if (order_ < 2) throw std::invalid_argument("InvolutiveLattice: order must be >= 2");
    if (sigma_.transposed() * base_.gram() * sigma_ != base_.gram())
        throw std::invalid_argument("InvolutiveLattice: sigma is not an isometry of the form");
    IntMat p = sigma_;
    for (std::size_t k = 1; k < order_; ++k) p = p * sigma_;
    if (!p.is_identity())
        throw std::invalid_argument("InvolutiveLattice: sigma^order is not the identity");
}

IntMat InvolutiveLattice::eigenlattice(int sign) const {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("eigenlattice: sign must be +1 or -1");
    if (sign == -1 && order_ != 2)
        throw std::invalid_argument("eigenlattice: sign -1 requires an involution (order 2)");
    IntMat m = sigma_;
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) -= sign;
    return IntMat::from_rows(kernel_saturated(m), base_.rank());
}

IntMat InvolutiveLattice::norm_matrix() const {
    IntMat n = IntMat::identity(base_.rank());
    IntMat p = IntMat::identity(base_.rank());
    for (std::size_t k = 1; k < order_; ++k) {
        p = p * sigma_;
        n = n + p;
    }
    return n;
}

FiniteAbelianGroup InvolutiveLattice::tate_cohomology(DegreeParity parity) const {
    const std::size_t n = base_.rank();
    IntMat nm = norm_matrix();
    const IntMat& kernel_of = (parity == DegreeParity::odd) ? nm : one_minus_sigma_;
    const IntMat& image_of = (parity == DegreeParity::odd) ? one_minus_sigma_ : nm;

    IntMat num = IntMat::from_rows(kernel_saturated(kernel_of), n);
    // Image of a matrix as row generators: rows are the images of the basis,
    // i.e. the columns of the matrix.
    IntMat im = image_of.transposed();
    // Im(1-sigma) (resp. Im(Norm)) lies in the corresponding kernel, so the
    // quotient is finite.
    QuotientStructure q = quotient_invariants(n, num, im);
    if (q.free_rank != 0)
        throw std::logic_error("tate_cohomology: quotient unexpectedly has free rank");
    return q.torsion;
}

std::optional<Vec> InvolutiveLattice::image_one_minus_sigma_certificate(const Vec& v) const {
    return solve_integral(one_minus_sigma_snf_, v);
}

}  // namespace brq
