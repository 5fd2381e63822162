#include "brq/census.hpp"

namespace brq {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

Rat rat_inner(const IntMat& gram, const RatVec& x, const RatVec& y) {
    Rat s = 0;
    for (std::size_t i = 0; i < gram.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < gram.cols(); ++j)
            if (y[j] != 0) s += x[i] * Rat(gram.at(i, j)) * y[j];
    }
    return s;
}

// Integer multiple of a rational vector clearing all denominators.
Vec cleared(const RatVec& v) {
    Int m = 1;
    for (const auto& x : v) m = lcm(m, denominator(x));
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = numerator(v[i]) * (m / denominator(v[i]));
    return out;
}

RatVec gram_times(const IntMat& gram, const RatVec& x) {
    RatVec out(gram.rows());
    for (std::size_t i = 0; i < gram.rows(); ++i)
        for (std::size_t j = 0; j < gram.cols(); ++j)
            if (x[j] != 0) out[i] += Rat(gram.at(i, j)) * x[j];
    return out;
}

}  // namespace

Int divisibility(const EnriquesModel& m, const Vec& lambda) {
    if (is_zero_vec(lambda)) throw std::invalid_argument("divisibility: zero vector");
    if (!in_row_span(m.lminus_basis(), lambda))
        throw std::invalid_argument("divisibility: vector is not in L^-");
    Int g = 0;
    for (std::size_t i = 0; i < m.lminus_basis().rows(); ++i)
        g = boost::multiprecision::gcd(g, m.L().inner(lambda, m.lminus_basis().row(i)));
    return g;
}

Signature orthogonal_signature_in_lminus(const EnriquesModel& m, const Vec& lambda) {
    if (lambda.size() != 12)
        throw DimensionError("orthogonal_signature_in_lminus: expected L^- coordinates");
    if (is_zero_vec(lambda))
        throw std::invalid_argument("orthogonal_signature_in_lminus: zero vector");
    const IntMat& gram = m.lminus_lattice().gram();
    IntMat constraint(1, 12);
    Vec gl = gram.apply(lambda);
    for (std::size_t j = 0; j < 12; ++j) constraint.at(0, j) = gl[j];
    IntMat comp = IntMat::from_rows(kernel_saturated(constraint), 12);
    return signature_of_gram(comp * gram * comp.transposed());
}

std::vector<HypersurfaceRecord> hypersurface_census(const EnriquesModel& m, const Int& k_max) {
    if (k_max < 3) throw std::invalid_argument("hypersurface_census: k_max must be >= 3");
    std::vector<HypersurfaceRecord> out;
    for (Int k = 3; k <= k_max; k += 2) {
        HypersurfaceRecord rec;
        rec.witness = Vec(22);
        rec.witness[m.e_index()] = 1;
        rec.witness[m.f_index()] = -k;
        rec.norm = m.L().norm(rec.witness);
        if ((rec.norm + 2 * k) != 0) throw std::logic_error("census: witness norm != -2k");
        if (!is_primitive_vector(rec.witness, m.lminus_basis()))
            throw std::logic_error("census: witness not primitive in L^-");
        rec.divisibility = divisibility(m, rec.witness);
        auto coords = row_span_coefficients(m.lminus_basis(), rec.witness);
        rec.witness_lminus = *coords;
        rec.complement_signature = orthogonal_signature_in_lminus(m, rec.witness_lminus);
        out.push_back(std::move(rec));
    }
    return out;
}

OmegaReport omega_membership(const EnriquesModel& m, const PeriodPoint& omega,
                             const std::optional<Vec>& lambda_check) {
    if (omega.re.size() != 12 || omega.im.size() != 12)
        throw DimensionError("omega_membership: expected rank-12 L^- coordinates");
    const IntMat& gram = m.lminus_lattice().gram();

    OmegaReport rep;
    Rat rr = rat_inner(gram, omega.re, omega.re);
    Rat ii = rat_inner(gram, omega.im, omega.im);
    Rat ri = rat_inner(gram, omega.re, omega.im);
    rep.isotropic = (rr == ii) && (ri == 0);
    rep.positive = rr > 0;

    if (lambda_check) {
        RatVec lam(12);
        for (std::size_t i = 0; i < 12; ++i) lam[i] = Rat((*lambda_check)[i]);
        rep.on_hyperplane =
            rat_inner(gram, lam, omega.re) == 0 && rat_inner(gram, lam, omega.im) == 0;
    }

    if (!rep.isotropic) {
        rep.verdict = OmegaVerdict::not_in_omega;
        rep.detail = "fails (omega.omega) = 0";
        return rep;
    }
    if (!rep.positive) {
        rep.verdict = OmegaVerdict::not_in_omega;
        rep.detail = "fails (omega.omega-bar) > 0";
        return rep;
    }

    // N = saturated {v in L^- : v.re = v.im = 0}; the root condition is
    // decidable exactly when N is negative definite.
    IntMat constraints(2, 12);
    Vec c1 = cleared(gram_times(gram, omega.re));
    Vec c2 = cleared(gram_times(gram, omega.im));
    for (std::size_t j = 0; j < 12; ++j) {
        constraints.at(0, j) = c1[j];
        constraints.at(1, j) = c2[j];
    }
    IntMat n = IntMat::from_rows(kernel_saturated(constraints), 12);
    rep.n_rank = n.rows();
    Lattice nlat("N", n * gram * n.transposed());
    rep.n_signature = signature(nlat);

    if (rep.n_signature.null > 0 || rep.n_signature.positive > 0) {
        rep.verdict = OmegaVerdict::indeterminate;
        rep.detail = "orthogonal sublattice N is not negative definite; root condition "
                     "ranges over an infinite set";
        return rep;
    }
    std::vector<Vec> roots = nlat.rank() ? vectors_of_norm(nlat, -2, 1) : std::vector<Vec>{};
    if (roots.empty()) {
        rep.verdict = OmegaVerdict::in_omega;
        rep.detail = "no (-2)-vector of L^- is orthogonal to omega";
    } else {
        rep.verdict = OmegaVerdict::not_in_omega;
        Vec root(12);
        for (std::size_t i = 0; i < n.rows(); ++i)
            if (roots[0][i] != 0) root = add(root, scaled(n.row(i), roots[0][i]));
        rep.failing_root = root;
        rep.detail = "omega is orthogonal to a (-2)-vector";
    }
    return rep;
}

}  // namespace brq
