#pragma once

#include <cstdint>
#include <vector>

#include "mixbandit/mixing_profile.hpp"

namespace mixbandit {

// Finite ordered set of reward levels in [0,1].
class Alphabet {
  public:
    explicit Alphabet(std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    double value(std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

  private:
    std::vector<double> values_;
};

// Stationary discrete-alphabet generator with a certified mixing profile.
//
// Randomness is counter-based: the draw consumed at clock c is a pure
// function of (seed, c), so skip() and emit() walk the same stream and a
// clone with the same seed reproduces it bit-exactly.
class ArmProcess {
  public:
    enum class Kernel { IID, FiniteRange, Markov };

    // iid symbols with the given law over the alphabet
    static ArmProcess iid(Alphabet alphabet, std::vector<double> probs, std::uint64_t seed);

    // order-r moving window: the symbol at clock c is a quantile transform of
    // max of the r+1 driving uniforms at counters c..c+r, so symbols more
    // than r apart are independent while close ones are strongly dependent
    static ArmProcess finite_range(Alphabet alphabet, long order, std::uint64_t seed);

    // stationary chain started from pi; certified profile geometric(1, 1-delta)
    // with delta the Doeblin coefficient of P.  Rejects chains that are not
    // irreducible and aperiodic or whose Doeblin coefficient vanishes.
    static ArmProcess markov(std::vector<std::vector<double>> transition, Alphabet alphabet,
                             std::uint64_t seed);

    std::vector<double> emit(long n);
    void emit(long n, std::vector<double>& out);
    void emit_indices(long n, std::vector<int>& out);
    void skip(long n);

    long clock() const { return clock_; }
    std::uint64_t seed() const { return seed_; }
    Kernel kernel() const { return kernel_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const MixingProfile& profile() const { return profile_; }
    long order() const { return order_; }

    // marginal law of one symbol (pi for markov, the iid law, uniform for
    // the moving-window kernel)
    const std::vector<double>& stationary() const { return stationary_; }
    const std::vector<std::vector<double>>& transition() const { return transition_; }
    double doeblin() const { return doeblin_; }

    // same generator restarted at clock 0 with the same seed
    ArmProcess clone_reset() const;
    // same generator with a derived seed, for per-run / per-trial instances
    ArmProcess fresh(std::uint64_t tag) const;

  private:
    ArmProcess(Kernel kernel, Alphabet alphabet, std::uint64_t seed);

    int next_index();

    Kernel kernel_;
    Alphabet alphabet_;
    std::uint64_t seed_;
    long clock_ = 0;

    MixingProfile profile_ = MixingProfile::zero();
    std::vector<double> stationary_;
    std::vector<double> cdf_;  // iid sampling
    std::vector<std::vector<double>> transition_;
    std::vector<std::vector<double>> row_cdf_;
    double doeblin_ = 0.0;
    long order_ = 0;
    int state_ = -1;  // last emitted symbol (markov)
};

// Monte Carlo lower estimate of phi(n) over single-symbol events.
struct PhiEstimate {
    double value = 0.0;
    double slack = 0.0;      // statistical allowance, 5/sqrt(samples) or wider
    bool low_counts = false; // some conditioning symbol was rarely observed
};

PhiEstimate empirical_phi(const ArmProcess& arm, long n, long samples);

}  // namespace mixbandit
