#ifndef CERGRAPH_LOGPROB_HPP
#define CERGRAPH_LOGPROB_HPP

#include <cmath>

#include "cergraph/errors.hpp"

namespace cergraph {

// A probability carried as its base-2 logarithm. Probability zero is a
// tagged state rather than a -inf double, so support violations stay visible
// in the type instead of leaking through float arithmetic.
class LogProb {
public:
    static LogProb zero() { return LogProb(true, 0.0); }
    static LogProb one() { return LogProb(false, 0.0); }
    static LogProb from_log2(double v) { return LogProb(false, v); }
    static LogProb from_prob(double p) {
        return p > 0.0 ? LogProb(false, std::log2(p)) : zero();
    }

    bool is_zero() const { return zero_; }

    // Base-2 log of a nonzero probability.
    double log2_value() const {
        if (zero_) throw InvalidArgument("log2_value() of a zero probability");
        return value_;
    }

    double to_prob() const { return zero_ ? 0.0 : std::exp2(value_); }

    // Product / quotient of probabilities.
    LogProb operator*(const LogProb& o) const {
        if (zero_ || o.zero_) return zero();
        return from_log2(value_ + o.value_);
    }
    LogProb& operator*=(const LogProb& o) { return *this = *this * o; }
    LogProb operator/(const LogProb& o) const {
        if (o.zero_) throw InvalidArgument("division by a zero probability");
        if (zero_) return zero();
        return from_log2(value_ - o.value_);
    }

    friend bool operator==(const LogProb& a, const LogProb& b) {
        return a.zero_ == b.zero_ && (a.zero_ || a.value_ == b.value_);
    }
    friend bool operator<(const LogProb& a, const LogProb& b) {
        if (a.zero_) return !b.zero_;
        if (b.zero_) return false;
        return a.value_ < b.value_;
    }
    friend bool operator>(const LogProb& a, const LogProb& b) { return b < a; }

private:
    LogProb(bool zero, double value) : zero_(zero), value_(zero ? 0.0 : value) {}

    bool zero_;
    double value_;
};

// Streaming log-sum-exp in base 2 with a running maximum. Terms are folded
// in the order they arrive; no linear-space materialization.
class LogSumExp2 {
public:
    void add(const LogProb& p) {
        if (!p.is_zero()) add_log2(p.log2_value());
    }
    void add_log2(double x) {
        if (empty_) {
            max_ = x;
            sum_ = 1.0;
            empty_ = false;
            return;
        }
        if (x > max_) {
            sum_ = sum_ * std::exp2(max_ - x) + 1.0;
            max_ = x;
        } else {
            sum_ += std::exp2(x - max_);
        }
    }

    LogProb result() const {
        if (empty_) return LogProb::zero();
        return LogProb::from_log2(max_ + std::log2(sum_));
    }

private:
    bool empty_ = true;
    double max_ = 0.0;
    double sum_ = 0.0;
};

} // namespace cergraph

#endif
