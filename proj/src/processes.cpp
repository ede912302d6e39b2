#include "mixbandit/processes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mixbandit/rng.hpp"

namespace mixbandit {

namespace {

std::vector<double> cumulative(const std::vector<double>& probs) {
    std::vector<double> cdf(probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        cdf[i] = acc;
    }
    cdf.back() = 1.0;  // guard against rounding at the top
    return cdf;
}

int sample_cdf(const std::vector<double>& cdf, double u) {
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    const auto idx = static_cast<std::size_t>(it - cdf.begin());
    return static_cast<int>(idx < cdf.size() ? idx : cdf.size() - 1);
}

void check_distribution(const std::vector<double>& probs, std::size_t want) {
    if (probs.size() != want)
        throw std::invalid_argument("arm: distribution size must match alphabet");
    double total = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0)) throw std::invalid_argument("arm: probabilities must be >= 0");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("arm: probabilities must sum to 1");
}

// P^n strictly positive for some n <= dim^2 (boolean reachability)
bool primitive(const std::vector<std::vector<double>>& p) {
    const std::size_t dim = p.size();
    std::vector<std::vector<bool>> reach(dim, std::vector<bool>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) reach[i][j] = p[i][j] > 0.0;
    auto all_positive = [&] {
        for (const auto& row : reach)
            for (bool v : row)
                if (!v) return false;
        return true;
    };
    for (std::size_t n = 1; n <= dim * dim; ++n) {
        if (all_positive()) return true;
        std::vector<std::vector<bool>> next(dim, std::vector<bool>(dim, false));
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t k = 0; k < dim; ++k)
                if (reach[i][k])
                    for (std::size_t j = 0; j < dim; ++j)
                        if (p[k][j] > 0.0) next[i][j] = true;
        reach = std::move(next);
    }
    return all_positive();
}

std::vector<double> stationary_law(const std::vector<std::vector<double>>& p) {
    const std::size_t dim = p.size();
    std::vector<double> pi(dim, 1.0 / static_cast<double>(dim));
    std::vector<double> next(dim);
    for (long iter = 0; iter < 1'000'000; ++iter) {
        for (std::size_t j = 0; j < dim; ++j) {
            double acc = 0.0;
            for (std::size_t i = 0; i < dim; ++i) acc += pi[i] * p[i][j];
            next[j] = acc;
        }
        double residual = 0.0;
        for (std::size_t j = 0; j < dim; ++j) residual = std::max(residual, std::abs(next[j] - pi[j]));
        pi.swap(next);
        if (residual <= 1e-13) break;
    }
    double total = 0.0;
    for (double v : pi) total += v;
    for (double& v : pi) v /= total;
    return pi;
}

double doeblin_coefficient(const std::vector<std::vector<double>>& p) {
    const std::size_t dim = p.size();
    if (dim == 1) return 1.0;
    double best = 1.0;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            double overlap = 0.0;
            for (std::size_t u = 0; u < dim; ++u) overlap += std::min(p[i][u], p[j][u]);
            best = std::min(best, overlap);
        }
    return best;
}

}  // namespace

Alphabet::Alphabet(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2) throw std::invalid_argument("alphabet: need at least 2 values");
    double prev = -1.0;
    for (double v : values_) {
        if (!(v >= 0.0) || v > 1.0) throw std::invalid_argument("alphabet: values must lie in [0,1]");
        if (v <= prev) throw std::invalid_argument("alphabet: values must be strictly increasing");
        prev = v;
    }
}

ArmProcess::ArmProcess(Kernel kernel, Alphabet alphabet, std::uint64_t seed)
    : kernel_(kernel), alphabet_(std::move(alphabet)), seed_(seed) {}

ArmProcess ArmProcess::iid(Alphabet alphabet, std::vector<double> probs, std::uint64_t seed) {
    check_distribution(probs, alphabet.size());
    ArmProcess arm(Kernel::IID, std::move(alphabet), seed);
    arm.cdf_ = cumulative(probs);
    arm.stationary_ = std::move(probs);
    arm.profile_ = MixingProfile::zero();
    return arm;
}

ArmProcess ArmProcess::finite_range(Alphabet alphabet, long order, std::uint64_t seed) {
    if (order < 1) throw std::invalid_argument("arm: order must be >= 1");
    const std::size_t size = alphabet.size();
    ArmProcess arm(Kernel::FiniteRange, std::move(alphabet), seed);
    arm.order_ = order;
    arm.stationary_.assign(size, 1.0 / static_cast<double>(size));
    arm.profile_ = MixingProfile::finite_range(order, 1.0);
    return arm;
}

ArmProcess ArmProcess::markov(std::vector<std::vector<double>> transition, Alphabet alphabet,
                              std::uint64_t seed) {
    const std::size_t dim = alphabet.size();
    if (transition.size() != dim)
        throw std::invalid_argument("arm: transition matrix must match alphabet size");
    for (const auto& row : transition) {
        if (row.size() != dim) throw std::invalid_argument("arm: transition matrix must be square");
        double total = 0.0;
        for (double v : row) {
            if (!(v >= 0.0)) throw std::invalid_argument("arm: transition entries must be >= 0");
            total += v;
        }
        if (std::abs(total - 1.0) > 1e-12)
            throw std::invalid_argument("arm: transition rows must sum to 1");
    }
    if (!primitive(transition))
        throw std::domain_error("arm: chain must be irreducible and aperiodic");
    const double delta = doeblin_coefficient(transition);
    if (!(delta > 0.0))
        throw std::domain_error("arm: Doeblin coefficient is 0, no summable certificate");

    ArmProcess arm(Kernel::Markov, std::move(alphabet), seed);
    arm.stationary_ = stationary_law(transition);
    arm.row_cdf_.reserve(dim);
    for (const auto& row : transition) arm.row_cdf_.push_back(cumulative(row));
    arm.cdf_ = cumulative(arm.stationary_);
    arm.transition_ = std::move(transition);
    arm.doeblin_ = delta;
    arm.profile_ = MixingProfile::geometric(1.0, 1.0 - delta);
    return arm;
}

int ArmProcess::next_index() {
    const auto c = static_cast<std::uint64_t>(clock_);
    int idx = 0;
    switch (kernel_) {
        case Kernel::IID:
            idx = sample_cdf(cdf_, counter_uniform(seed_, c));
            break;
        case Kernel::FiniteRange: {
            double top = 0.0;
            for (long j = 0; j <= order_; ++j)
                top = std::max(top, counter_uniform(seed_, c + static_cast<std::uint64_t>(j)));
            // max^(order+1) is uniform, then quantile-map onto the alphabet
            const double v = std::pow(top, static_cast<double>(order_ + 1));
            idx = std::min(static_cast<int>(alphabet_.size()) - 1,
                           static_cast<int>(v * static_cast<double>(alphabet_.size())));
            break;
        }
        case Kernel::Markov: {
            const double u = counter_uniform(seed_, c);
            idx = state_ < 0 ? sample_cdf(cdf_, u) : sample_cdf(row_cdf_[static_cast<std::size_t>(state_)], u);
            state_ = idx;
            break;
        }
    }
    ++clock_;
    return idx;
}

void ArmProcess::emit_indices(long n, std::vector<int>& out) {
    if (n < 0) throw std::invalid_argument("emit: n must be >= 0");
    out.resize(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = next_index();
}

void ArmProcess::emit(long n, std::vector<double>& out) {
    if (n < 0) throw std::invalid_argument("emit: n must be >= 0");
    out.resize(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = alphabet_.value(static_cast<std::size_t>(next_index()));
}

std::vector<double> ArmProcess::emit(long n) {
    std::vector<double> out;
    emit(n, out);
    return out;
}

void ArmProcess::skip(long n) {
    if (n < 0) throw std::invalid_argument("skip: n must be >= 0");
    if (kernel_ == Kernel::Markov) {
        for (long i = 0; i < n; ++i) next_index();
    } else {
        // symbol at clock c is a pure function of (seed, c); nothing to replay
        clock_ += n;
    }
}

ArmProcess ArmProcess::clone_reset() const {
    ArmProcess arm = *this;
    arm.clock_ = 0;
    arm.state_ = -1;
    return arm;
}

ArmProcess ArmProcess::fresh(std::uint64_t tag) const {
    ArmProcess arm = clone_reset();
    arm.seed_ = derive_seed(seed_, tag);
    return arm;
}

PhiEstimate empirical_phi(const ArmProcess& arm, long n, long samples) {
    if (n < 1) throw std::invalid_argument("empirical_phi: n must be >= 1");
    if (samples < 10'000) throw std::invalid_argument("empirical_phi: need at least 1e4 samples");

    ArmProcess walker = arm.clone_reset();
    std::vector<int> stream;
    walker.emit_indices(samples + n, stream);

    const auto size = arm.alphabet().size();
    std::vector<std::vector<long>> joint(size, std::vector<long>(size, 0));  // [now][later]
    std::vector<long> later_count(size, 0);
    for (long t = 0; t < samples; ++t) {
        const int now = stream[static_cast<std::size_t>(t)];
        const int later = stream[static_cast<std::size_t>(t + n)];
        ++joint[static_cast<std::size_t>(now)][static_cast<std::size_t>(later)];
        ++later_count[static_cast<std::size_t>(later)];
    }

    PhiEstimate est;
    long min_condition = samples;
    for (std::size_t b = 0; b < size; ++b) {
        long cond = 0;
        for (std::size_t a = 0; a < size; ++a) cond += joint[b][a];
        min_condition = std::min(min_condition, cond);
        if (cond == 0) continue;
        for (std::size_t a = 0; a < size; ++a) {
            const double conditional = static_cast<double>(joint[b][a]) / static_cast<double>(cond);
            const double marginal = static_cast<double>(later_count[a]) / static_cast<double>(samples);
            est.value = std::max(est.value, std::abs(conditional - marginal));
        }
    }

    est.slack = 5.0 / std::sqrt(static_cast<double>(samples));
    if (min_condition < 100) {
        est.low_counts = true;
        est.slack = std::max(est.slack, 5.0 / std::sqrt(static_cast<double>(std::max<long>(min_condition, 1))));
    }
    return est;
}

}  // namespace mixbandit
