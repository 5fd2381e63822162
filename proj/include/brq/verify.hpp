#ifndef BRQ_VERIFY_HPP
#define BRQ_VERIFY_HPP

#include "brq/census.hpp"

#include <cstdint>
#include <random>

namespace brq {

struct CheckResult {
    std::string name;
    std::string clause;  // criterion in the underlying analysis ("Cor 5.6", ...)
    bool pass = false;
    std::string detail;
};

/// Deterministic sampling: mt19937_64 has a standardized sequence, and the
/// range map avoids the implementation-defined uniform_int_distribution.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : gen_(seed) {}
    /// Uniform-ish integer in [lo, hi]; bias is irrelevant for sampling tests.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 gen_;
};

Vec random_vector(DetRng& rng, std::size_t n, long long lo, long long hi);

/// The full mod-2 verification battery: image of pi^*, kernels on both
/// sides, the Wu identity, the q-pullback identity, the 2q = Pontryagin
/// shadow, and the sampled equivalence of the two vanishing conditions.
/// corrupt_model flips one pairing bit of the surface model first (test hook).
std::vector<CheckResult> run_lemma_battery(const EnriquesModel& m, std::size_t samples,
                                           std::uint64_t seed, bool corrupt_model = false);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace brq

#endif
