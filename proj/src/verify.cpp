#include "brq/verify.hpp"

#include <sstream>

namespace brq {

Vec random_vector(DetRng& rng, std::size_t n, long long lo, long long hi) {
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = rng.range(lo, hi);
    return v;
}

namespace {

BitVec index_vec(std::size_t n, std::size_t i) {
    BitVec v(n, 0);
    v[i] = 1;
    return v;
}

BitVec enumerate_class(std::size_t n, std::uint32_t code) {
    BitVec v(n, 0);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Bit>((code >> i) & 1u);
    return v;
}

CheckResult check_pi_star_image(const SurfaceMod2Model& sm, const EnriquesModel& m) {
    CheckResult r{"image of pi^* mod 2", "Prop 5.3", false, ""};
    // Expected image: delta(E2) plus the eps line, dimension 11.
    BitMat expected(22, 11);
    for (std::size_t i = 0; i < 10; ++i) {
        expected.at(i, i) = 1;
        expected.at(10 + i, i) = 1;
    }
    expected.at(m.e_index(), 10) = 1;
    expected.at(m.f_index(), 10) = 1;

    std::size_t rank_img = sm.pi_star.rank();
    BitMat joint(22, 12 + 11);
    for (std::size_t i = 0; i < 22; ++i) {
        for (std::size_t j = 0; j < 12; ++j) joint.at(i, j) = sm.pi_star.at(i, j);
        for (std::size_t j = 0; j < 11; ++j) joint.at(i, 12 + j) = expected.at(i, j);
    }
    r.pass = rank_img == 11 && expected.rank() == 11 && joint.rank() == 11;
    std::ostringstream os;
    os << "dim Im = " << rank_img << ", joint with delta(E2)+<eps> has rank " << joint.rank();
    r.detail = os.str();
    return r;
}

CheckResult check_pi_star_kernel(const SurfaceMod2Model& sm) {
    CheckResult r{"kernel of pi^* mod 2", "Prop 3.6 (i)", false, ""};
    auto ker = sm.pi_star.kernel();
    r.pass = ker.size() == 1 && ker[0] == sm.ks();
    r.detail = "dim Ker = " + std::to_string(ker.size());
    return r;
}

CheckResult check_pi_lower_star_kernel(const SurfaceMod2Model& sm, const EnriquesModel& m) {
    CheckResult r{"kernel of pi_* on H_2", "Cor 5.5", false, ""};
    BitVec ebar = index_vec(22, m.e_index());
    BitVec fbar = index_vec(22, m.f_index());
    BitVec eps = bitvec_add(ebar, fbar);
    bool e_to_ks = sm.pi_lower_star.apply(ebar) == sm.ks();
    bool f_to_ks = sm.pi_lower_star.apply(fbar) == sm.ks();
    bool eps_to_zero = bitvec_is_zero(sm.pi_lower_star.apply(eps));
    r.pass = e_to_ks && f_to_ks && eps_to_zero;
    r.detail = "pi_*(e) = k_S: " + std::string(e_to_ks ? "yes" : "no") +
               ", pi_*(eps) = 0: " + std::string(eps_to_zero ? "yes" : "no");
    return r;
}

CheckResult check_wu_identity(const SurfaceMod2Model& sm) {
    CheckResult r{"Wu identity (k_S . a) = a^2", "Wu formula (3.2)", true, "all 4096 classes"};
    BitVec ks = sm.ks();
    for (std::uint32_t code = 0; code < (1u << 12); ++code) {
        BitVec a = enumerate_class(12, code);
        Bit lhs = 0;
        for (std::size_t i = 0; i < 12; ++i)
            for (std::size_t j = 0; j < 12; ++j) lhs ^= ks[i] & sm.pairing.at(i, j) & a[j];
        if (lhs != sm.square(a)) {
            r.pass = false;
            r.detail = "violated at class code " + std::to_string(code);
            return r;
        }
    }
    return r;
}

CheckResult check_q_pullback(const SurfaceMod2Model& sm, const EnriquesModel& m) {
    CheckResult r{"q(pi^* a) = a^2", "Lemma 5.4", true, "all 4096 classes"};
    Mod2QuadraticSpace qx = reduce_mod2(m.L());
    for (std::uint32_t code = 0; code < (1u << 12); ++code) {
        BitVec a = enumerate_class(12, code);
        if (qx.q_value(sm.pi_star.apply(a)) != sm.square(a)) {
            r.pass = false;
            r.detail = "violated at class code " + std::to_string(code);
            return r;
        }
    }
    return r;
}

CheckResult check_pontryagin_shadow(const EnriquesModel& m, std::size_t samples, DetRng& rng) {
    CheckResult r{"2q(x) = x~^2 mod 4 on L", "Lemma 5.4 b)", true, ""};
    Mod2QuadraticSpace qx = reduce_mod2(m.L());
    std::size_t n = std::max<std::size_t>(samples, 64);
    for (std::size_t t = 0; t < n; ++t) {
        Vec lift = random_vector(rng, 22, -3, 3);
        BitVec x = reduce_vec_mod2(lift);
        int p = pontryagin_even(m.L(), x);
        Int lifted = m.L().norm(lift) % 4;
        if (lifted < 0) lifted += 4;
        if (p != 2 * qx.q_value(x) || lifted != p) {
            r.pass = false;
            r.detail = "violated at sample " + std::to_string(t);
            return r;
        }
    }
    r.detail = std::to_string(n) + " sampled classes with independent lifts";
    return r;
}

CheckResult check_cor56(const EnriquesModel& m, std::size_t samples, DetRng& rng) {
    CheckResult r{"equivalence of vanishing conditions (i) and (ii)", "Cor 5.6", true, ""};
    std::size_t agree = 0;
    for (std::size_t t = 0; t < samples; ++t) {
        Vec lambda = random_vector(rng, 22, -2, 2);
        if (m.cor56_condition_i(lambda) != m.cor56_condition_ii(lambda)) {
            r.pass = false;
            r.detail = "disagreement at sample " + std::to_string(t);
            return r;
        }
        ++agree;
    }
    // Exhaustive over the last H summand.
    std::size_t exhaustive = 0;
    for (long long a = -5; a <= 5; ++a)
        for (long long b = -5; b <= 5; ++b) {
            Vec lambda(22);
            lambda[m.e_index()] = a;
            lambda[m.f_index()] = b;
            if (m.cor56_condition_i(lambda) != m.cor56_condition_ii(lambda)) {
                r.pass = false;
                std::ostringstream os;
                os << "disagreement at (0,0," << a << "e+" << b << "f)";
                r.detail = os.str();
                return r;
            }
            ++exhaustive;
        }
    std::ostringstream os;
    os << agree << " sampled + " << exhaustive << " exhaustive H-summand vectors agree";
    r.detail = os.str();
    return r;
}

}  // namespace

std::vector<CheckResult> run_lemma_battery(const EnriquesModel& m, std::size_t samples,
                                           std::uint64_t seed, bool corrupt_model) {
    SurfaceMod2Model sm = build_surface_mod2_model(m);
    if (corrupt_model) sm.pairing.at(0, 0) ^= 1;

    DetRng rng(seed);
    std::vector<CheckResult> out;
    out.push_back(check_pi_star_image(sm, m));
    out.push_back(check_pi_star_kernel(sm));
    out.push_back(check_pi_lower_star_kernel(sm, m));
    out.push_back(check_wu_identity(sm));
    out.push_back(check_q_pullback(sm, m));
    out.push_back(check_pontryagin_shadow(m, std::min<std::size_t>(samples, 256), rng));
    out.push_back(check_cor56(m, samples, rng));
    return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace brq
