#ifndef BRQ_LATTICE_HPP
#define BRQ_LATTICE_HPP

#include "brq/intlinalg.hpp"

#include <string>

namespace brq {

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t null = 0;

    bool operator==(const Signature& rhs) const = default;
    std::string to_string() const;
};

/// Free Z-module of finite rank with a symmetric integer bilinear form.
class Lattice {
public:
    Lattice(std::string name, IntMat gram);

    const std::string& name() const { return name_; }
    const IntMat& gram() const { return gram_; }
    std::size_t rank() const { return gram_.rows(); }
    bool is_even() const;

    /// v^T * gram * w, exact.
    Int inner(const Vec& v, const Vec& w) const;
    Int norm(const Vec& v) const { return inner(v, v); }

private:
    std::string name_;
    IntMat gram_;
};

// Standard building blocks. The (-E8) Gram is fixed once and for all in the
// Dynkin-diagram basis (see e8_negative_gram below); all E-coordinates in
// reports refer to this basis.
Lattice e8_negative();
Lattice hyperbolic_h();
Lattice direct_sum(const std::vector<Lattice>& parts, const std::string& name = "");
Lattice twist(const Lattice& l, const Int& n);

IntMat e8_negative_gram();

/// Inertia of the form by exact rational congruence diagonalization.
Signature signature(const Lattice& l);
Signature signature_of_gram(const IntMat& gram);

/// Saturated sublattice orthogonal to all rows of s, as generator rows.
IntMat orthogonal_complement(const Lattice& l, const IntMat& s);

/// Invariant factors of coker(gram). Throws on a degenerate form.
FiniteAbelianGroup discriminant_group(const Lattice& l);

/// All vectors of the given norm in a definite lattice, lexicographically
/// sorted. Throws on an indefinite or degenerate form. A nonzero `limit`
/// truncates the sorted list.
std::vector<Vec> vectors_of_norm(const Lattice& l, const Int& target, std::size_t limit = 0);

bool lex_less(const Vec& a, const Vec& b);

}  // namespace brq

#endif
