#ifndef BRQ_INTLINALG_HPP
#define BRQ_INTLINALG_HPP

#include "brq/intmat.hpp"

#include <optional>

namespace brq {

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ... .
struct SmithDecomposition {
    IntMat U;
    IntMat D;
    IntMat V;
    IntMat Vinv;  // V^-1, tracked during reduction
    std::size_t rank = 0;

    Int diagonal(std::size_t i) const { return D.at(i, i); }
};

struct FiniteAbelianGroup {
    std::vector<Int> invariant_factors;  // each >= 2, factor i divides factor i+1

    bool is_trivial() const { return invariant_factors.empty(); }
    Int order() const;
    bool operator==(const FiniteAbelianGroup& rhs) const = default;
    std::string to_string() const;

    /// n-torsion subgroup of this group.
    FiniteAbelianGroup torsion_part(const Int& n) const;
};

/// Torsion plus free rank of a quotient of free abelian groups.
struct QuotientStructure {
    FiniteAbelianGroup torsion;
    std::size_t free_rank = 0;
    bool operator==(const QuotientStructure& rhs) const = default;
};

SmithDecomposition smith_normal_form(const IntMat& m);

/// Integral solution of A x = b, if any. The decomposition variant reuses a
/// precomputed SNF of A.
std::optional<Vec> solve_integral(const IntMat& a, const Vec& b);
std::optional<Vec> solve_integral(const SmithDecomposition& snf, const Vec& b);

/// Saturated kernel {x : A x = 0}, returned as generator rows (columns of V
/// past the rank, so always a basis of a direct summand).
std::vector<Vec> kernel_saturated(const IntMat& a);

/// Basis of the row-span lattice of S (as rows).
std::vector<Vec> row_basis(const IntMat& s);

/// Basis of the smallest direct summand of Z^n containing the row span of S.
IntMat saturation(const IntMat& s);

/// Invariant factors of (row span of numerator)/(row span of denominator).
/// Throws if a denominator row is not in the numerator span.
QuotientStructure quotient_invariants(std::size_t ambient_rank,
                                      const IntMat& numerator_gens,
                                      const IntMat& denominator_gens);

bool is_primitive_vector(const Vec& v);
/// Primitivity of v inside the sublattice spanned by the rows of basis.
/// Throws if v is not in that sublattice.
bool is_primitive_vector(const Vec& v, const IntMat& basis);

/// Membership of v in the row-span lattice of gens; certificate returns the
/// coefficient vector when it exists.
bool in_row_span(const IntMat& gens, const Vec& v);
std::optional<Vec> row_span_coefficients(const IntMat& gens, const Vec& v);

/// Generators of the intersection of two row-span lattices in the same Z^n.
std::vector<Vec> lattice_intersection(const IntMat& a, const IntMat& b);

Int determinant(const IntMat& m);  // exact, via fraction-free elimination

}  // namespace brq

#endif
