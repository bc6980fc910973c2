#ifndef SUPCONE_AXIOMS_HPP
#define SUPCONE_AXIOMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "supcone/iso.hpp"
#include "supcone/supcomp.hpp"

namespace supcone {

/// The fixed suite PRNG: SplitMix64 (Steele, Lea & Flood's mixer). Seeds are
/// portable: identical seeds yield identical element streams in any
/// implementation of this suite. Bounded draws use plain remainder.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
    long int_in(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    /// True with probability num/den (p in [0,1]).
    bool chance(const Rational& p) {
        std::uint64_t den = denominator(p).convert_to<std::uint64_t>();
        std::uint64_t num = numerator(p).convert_to<std::uint64_t>();
        return below(den) < num;
    }

private:
    std::uint64_t state_;
};

std::uint64_t fnv1a64(const std::string& s);

/// Deterministic per-trial seed: mixes the suite seed, the check name and
/// the trial index. Documented so reproducers are portable.
std::uint64_t trial_seed(std::uint64_t suite_seed, const std::string& check, long trial);

struct GenConfig {
    std::uint64_t seed = 1;
    int max_depth = 4;
    Rational ramp_probability = Rational(1, 3);
    int value_range = 8;  // bound on numerators and denominators
    Rational inf_probability = Rational(1, 6);
    ModelX model = ModelX::Full;
};

Rational gen_rational(const GenConfig& cfg, SplitMix64& rng);
/// A degree >= 1 polynomial with small coefficients; positive leading
/// coefficient when `upward` (the only ramps valid in the bounded model).
Poly gen_ramp_poly(const GenConfig& cfg, SplitMix64& rng, bool upward);
/// A membership-valid tree function for cfg.model.
TreeFn gen_member_fn(const GenConfig& cfg, SplitMix64& rng);
/// A nonnegative membership-valid tree function.
TreeFn gen_positive_fn(const GenConfig& cfg, SplitMix64& rng);
/// An element of X (the ground lattice) for cfg.model.
TreeFn gen_ground_fn(const GenConfig& cfg, SplitMix64& rng);
FlatFn gen_flatfn(const GenConfig& cfg, SplitMix64& rng);

SupElement gen_element(const GenConfig& cfg);
SupElement gen_element(const GenConfig& cfg, SplitMix64& rng);

struct Failure {
    std::string check;
    std::uint64_t seed = 0;
    long trial = 0;
    std::string message;  // includes the counterexample serialization

    std::string replay_command(const GenConfig& cfg) const;
};

struct CheckReport {
    std::string name;
    long trials = 0;
    std::vector<Failure> failures;
};

struct SuiteReport {
    GenConfig config;
    std::vector<CheckReport> checks;

    bool all_passed() const;
    std::string str() const;
};

/// Test-fixture hook: deliberately corrupts the meet operation so the
/// harness can prove it catches violations and emits usable reproducers.
enum class FaultInjection { None, CorruptMeet };

std::vector<std::string> suite_check_names();

/// Runs every registered cone-axiom check `trials` times (or a single named
/// check / single trial when given). Failures are data, not errors.
SuiteReport run_suite(const GenConfig& cfg, long trials,
                      FaultInjection fault = FaultInjection::None,
                      const std::string& only_check = std::string(),
                      std::optional<long> only_trial = std::nullopt);

}  // namespace supcone

#endif  // SUPCONE_AXIOMS_HPP
