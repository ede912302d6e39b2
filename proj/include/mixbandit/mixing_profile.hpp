#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mixbandit {

// Certified upper bound n -> phi(n) on the mixing coefficients of a process.
// phi is nonincreasing, takes values in [0,1] and is only defined for n >= 1.
class MixingProfile {
  public:
    enum class Kind { Zero, FiniteRange, Geometric, Algebraic, Tabulated };

    static MixingProfile zero();
    // phi(n) = cap for n <= range, 0 beyond.
    static MixingProfile finite_range(long range, double cap);
    // phi(n) = min(1, c * rho^n), rho in [0, 1).
    static MixingProfile geometric(double c, double rho);
    // phi(n) = min(1, phi0 * n^-p), p > 1.
    static MixingProfile algebraic(double phi0, double p);
    // phi(n) = values[n-1] inside the table, 0 beyond. values nonincreasing in [0,1].
    static MixingProfile tabulated(std::vector<double> values);

    double phi(long n) const;

    // sum_{i >= n} phi(i); exact closed forms where available, otherwise
    // truncated once the analytic remainder drops below 1e-12.
    double tail_sum(long n) const;

    // True iff sum_n phi(n) < infinity. All constructible kinds are summable.
    bool summable() const { return true; }

    Kind kind() const { return kind_; }
    long range() const { return range_; }
    double cap() const { return cap_; }
    double coef() const { return coef_; }       // c or phi0
    double rate() const { return rate_; }       // rho or p
    const std::vector<double>& table() const { return table_; }

    std::string describe() const;

  private:
    MixingProfile() = default;

    Kind kind_ = Kind::Zero;
    long range_ = 0;
    double cap_ = 0.0;
    double coef_ = 0.0;
    double rate_ = 0.0;
    std::vector<double> table_;
};

}  // namespace mixbandit
