#ifndef BRQ_MOD2_HPP
#define BRQ_MOD2_HPP

#include "brq/lattice.hpp"

#include <cstdint>

namespace brq {

using Bit = std::uint8_t;
using BitVec = std::vector<Bit>;

/// Matrix over F2.
class BitMat {
public:
    BitMat() = default;
    BitMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static BitMat identity(std::size_t n);
    static BitMat from_integer(const IntMat& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Bit& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Bit at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    BitVec apply(const BitVec& v) const;  // M * v
    BitMat operator*(const BitMat& rhs) const;
    BitMat transposed() const;
    bool operator==(const BitMat& rhs) const = default;

    std::size_t rank() const;
    /// Basis of {x : M x = 0}.
    std::vector<BitVec> kernel() const;
    /// Inverse of a square invertible matrix; throws if singular.
    BitMat inverse() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Bit> data_;
};

BitVec bitvec_add(const BitVec& a, const BitVec& b);
bool bitvec_is_zero(const BitVec& v);
BitVec reduce_vec_mod2(const Vec& v);

/// F2 vector space with a symmetric pairing and, when built from an even
/// lattice, the quadratic refinement q(m) = (1/2) m~^2 mod 2.
class Mod2QuadraticSpace {
public:
    Mod2QuadraticSpace(BitMat pairing, std::optional<BitVec> q_on_basis);

    std::size_t dimension() const { return pairing_.rows(); }
    const BitMat& pairing() const { return pairing_; }
    bool has_q() const { return q_on_basis_.has_value(); }
    const BitVec& q_on_basis() const;

    Bit pair(const BitVec& x, const BitVec& y) const;
    /// q extended from the basis by polarization: q(x+y) = q(x)+q(y)+(x.y).
    Bit q_value(const BitVec& x) const;

    /// A vector with q = 1, if one exists. Decision is O(dim^2): q vanishes
    /// identically iff it vanishes on the basis and all pairwise basis
    /// pairings vanish.
    std::optional<BitVec> find_q_one_witness() const;

private:
    BitMat pairing_;
    std::optional<BitVec> q_on_basis_;
};

/// Mod-2 reduction of an even lattice. Throws on an odd lattice.
Mod2QuadraticSpace reduce_mod2(const Lattice& l);

/// m~^2 mod 4 for any lift m~ of x; well-defined on even lattices and equal
/// to 2*q(x) in Z/4. Throws on an odd lattice.
int pontryagin_even(const Lattice& l, const BitVec& x);

}  // namespace brq

#endif
