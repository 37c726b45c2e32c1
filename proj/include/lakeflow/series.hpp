#ifndef LAKEFLOW_SERIES_HPP
#define LAKEFLOW_SERIES_HPP

#include <vector>

#include "lakeflow/core.hpp"

namespace lakeflow {

/**
 * A contiguous monthly scalar series (level in meters or flow in m³/s),
 * addressed by absolute month index (year*12 + month-1).
 */
class MonthlySeries {
  public:
    MonthlySeries() = default;
    MonthlySeries(int start_month, std::vector<double> values)
        : start_(start_month), values_(std::move(values)) {}

    static MonthlySeries constant(int start_month, int n, double value) {
        return MonthlySeries(start_month, std::vector<double>(static_cast<size_t>(n), value));
    }

    int start() const { return start_; }
    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }
    // One past the last covered month.
    int end() const { return start_ + size(); }

    double operator[](int i) const { return values_[static_cast<size_t>(i)]; }
    double& operator[](int i) { return values_[static_cast<size_t>(i)]; }

    int month_at(int i) const { return start_ + i; }
    int calendar_at(int i) const { return calendar_of(start_ + i); }

    bool covers(int month) const { return month >= start_ && month < end(); }
    bool covers(int month, int n) const { return covers(month) && month + n <= end(); }

    double at_month(int month) const {
        if (!covers(month))
            throw PreconditionError("series does not cover month " + format_year_month(month));
        return values_[static_cast<size_t>(month - start_)];
    }

    // Contiguous sub-series of n samples starting at the given month.
    MonthlySeries slice(int month, int n) const {
        if (!covers(month, n))
            throw PreconditionError("series slice [" + format_year_month(month) + ", +" +
                                    std::to_string(n) + ") out of range");
        auto first = values_.begin() + (month - start_);
        return MonthlySeries(month, std::vector<double>(first, first + n));
    }

    void push_back(double v) { values_.push_back(v); }

    const std::vector<double>& values() const { return values_; }

  private:
    int start_ = 0;
    std::vector<double> values_;
};

// A sparse sample (outlier removal leaves gaps).
struct Sample {
    int month = 0;
    double value = 0.0;
};

using SampleList = std::vector<Sample>;

inline SampleList to_samples(const MonthlySeries& s) {
    SampleList out;
    out.reserve(static_cast<size_t>(s.size()));
    for (int i = 0; i < s.size(); ++i)
        out.push_back({s.month_at(i), s[i]});
    return out;
}

} // namespace lakeflow

#endif // LAKEFLOW_SERIES_HPP
