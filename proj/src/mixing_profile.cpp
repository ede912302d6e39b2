#include "mixbandit/mixing_profile.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mixbandit {

namespace {

// sum_{i >= n} i^-p via direct summation up to a pivot plus an
// Euler-Maclaurin remainder; the dropped correction is far below 1e-12.
double zeta_tail(long n, double p) {
    if (n < 1) n = 1;
    const long pivot = n > 1000 ? n : 1000;
    double head = 0.0;
    for (long i = n; i < pivot; ++i) head += std::pow(static_cast<double>(i), -p);
    const double x = static_cast<double>(pivot);
    double tail = std::pow(x, 1.0 - p) / (p - 1.0);
    tail += 0.5 * std::pow(x, -p);
    tail += p / 12.0 * std::pow(x, -p - 1.0);
    return head + tail;
}

}  // namespace

MixingProfile MixingProfile::zero() {
    MixingProfile m;
    m.kind_ = Kind::Zero;
    return m;
}

MixingProfile MixingProfile::finite_range(long range, double cap) {
    if (range < 1) throw std::invalid_argument("finite_range: range must be >= 1");
    if (!(cap > 0.0) || cap > 1.0) throw std::invalid_argument("finite_range: cap must be in (0,1]");
    MixingProfile m;
    m.kind_ = Kind::FiniteRange;
    m.range_ = range;
    m.cap_ = cap;
    return m;
}

MixingProfile MixingProfile::geometric(double c, double rho) {
    if (!(c >= 0.0)) throw std::invalid_argument("geometric: c must be >= 0");
    if (!(rho >= 0.0) || rho >= 1.0) throw std::invalid_argument("geometric: rho must be in [0,1)");
    MixingProfile m;
    m.kind_ = Kind::Geometric;
    m.coef_ = c;
    m.rate_ = rho;
    return m;
}

MixingProfile MixingProfile::algebraic(double phi0, double p) {
    if (!(phi0 > 0.0)) throw std::invalid_argument("algebraic: phi0 must be > 0");
    if (!(p > 1.0)) throw std::invalid_argument("algebraic: p must be > 1");
    MixingProfile m;
    m.kind_ = Kind::Algebraic;
    m.coef_ = phi0;
    m.rate_ = p;
    return m;
}

MixingProfile MixingProfile::tabulated(std::vector<double> values) {
    double prev = 1.0;
    for (double v : values) {
        if (!(v >= 0.0) || v > 1.0) throw std::invalid_argument("tabulated: values must be in [0,1]");
        if (v > prev) throw std::invalid_argument("tabulated: values must be nonincreasing");
        prev = v;
    }
    MixingProfile m;
    m.kind_ = Kind::Tabulated;
    m.table_ = std::move(values);
    return m;
}

double MixingProfile::phi(long n) const {
    if (n < 1) throw std::invalid_argument("phi: separation must be >= 1");
    switch (kind_) {
        case Kind::Zero:
            return 0.0;
        case Kind::FiniteRange:
            return n <= range_ ? cap_ : 0.0;
        case Kind::Geometric: {
            if (coef_ == 0.0 || rate_ == 0.0) return 0.0;
            const double v = coef_ * std::pow(rate_, static_cast<double>(n));
            return v < 1.0 ? v : 1.0;
        }
        case Kind::Algebraic: {
            const double v = coef_ * std::pow(static_cast<double>(n), -rate_);
            return v < 1.0 ? v : 1.0;
        }
        case Kind::Tabulated:
            return n <= static_cast<long>(table_.size()) ? table_[static_cast<std::size_t>(n - 1)] : 0.0;
    }
    return 0.0;
}

double MixingProfile::tail_sum(long n) const {
    if (n < 1) n = 1;
    switch (kind_) {
        case Kind::Zero:
            return 0.0;
        case Kind::FiniteRange: {
            const long count = range_ - n + 1;
            return count > 0 ? cap_ * static_cast<double>(count) : 0.0;
        }
        case Kind::Geometric: {
            if (coef_ == 0.0 || rate_ == 0.0) return 0.0;
            // walk past any indices clamped at 1, then geometric series
            long k = n;
            double clamped = 0.0;
            while (coef_ * std::pow(rate_, static_cast<double>(k)) >= 1.0) {
                clamped += 1.0;
                ++k;
            }
            return clamped + coef_ * std::pow(rate_, static_cast<double>(k)) / (1.0 - rate_);
        }
        case Kind::Algebraic: {
            long k = n;
            double clamped = 0.0;
            while (coef_ * std::pow(static_cast<double>(k), -rate_) >= 1.0) {
                clamped += 1.0;
                ++k;
            }
            return clamped + coef_ * zeta_tail(k, rate_);
        }
        case Kind::Tabulated: {
            double s = 0.0;
            for (long i = n; i <= static_cast<long>(table_.size()); ++i)
                s += table_[static_cast<std::size_t>(i - 1)];
            return s;
        }
    }
    return 0.0;
}

std::string MixingProfile::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Zero: os << "zero"; break;
        case Kind::FiniteRange: os << "finite_range(n0=" << range_ << ", c=" << cap_ << ")"; break;
        case Kind::Geometric: os << "geometric(c=" << coef_ << ", rho=" << rate_ << ")"; break;
        case Kind::Algebraic: os << "algebraic(phi0=" << coef_ << ", p=" << rate_ << ")"; break;
        case Kind::Tabulated: os << "tabulated(" << table_.size() << " values)"; break;
    }
    return os.str();
}

}  // namespace mixbandit
