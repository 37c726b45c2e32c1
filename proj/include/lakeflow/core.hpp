#ifndef LAKEFLOW_CORE_HPP
#define LAKEFLOW_CORE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lakeflow {

// ============================================================================
// Network identifiers
// ============================================================================

// The five lakes of the chain, upstream to downstream.
enum class Lake : int {
    Superior = 0,      // id "A"
    MichiganHuron = 1, // id "B"
    StClair = 2,       // id "C"
    Erie = 3,          // id "D"
    Ontario = 4,       // id "E"
};

// Rivers: a..d link consecutive lakes, e drains Ontario. The Ottawa joins
// downstream of e at the Montreal junction and never touches a lake.
enum class River : int {
    StMarys = 0,    // id "a", A -> B, controllable (Compensating Works)
    StClair = 1,    // id "b", B -> C
    Detroit = 2,    // id "c", C -> D
    Niagara = 3,    // id "d", D -> E
    StLawrence = 4, // id "e", E -> Montreal, controllable (Moses-Saunders)
    Ottawa = 5,     // exogenous tributary at the Montreal junction
};

inline constexpr int kLakeCount = 5;
inline constexpr int kChainRiverCount = 5; // a..e
inline constexpr int kRiverCount = 6;      // a..e plus Ottawa

inline constexpr std::array<Lake, kLakeCount> kLakes = {
    Lake::Superior, Lake::MichiganHuron, Lake::StClair, Lake::Erie, Lake::Ontario};

inline int index(Lake l) { return static_cast<int>(l); }
inline int index(River r) { return static_cast<int>(r); }

inline std::string_view lake_id(Lake l) {
    static constexpr std::array<std::string_view, kLakeCount> ids = {"A", "B", "C", "D", "E"};
    return ids[index(l)];
}

inline std::string_view lake_name(Lake l) {
    static constexpr std::array<std::string_view, kLakeCount> names = {
        "Superior", "Michigan-Huron", "St. Clair", "Erie", "Ontario"};
    return names[index(l)];
}

inline std::string_view river_id(River r) {
    static constexpr std::array<std::string_view, kRiverCount> ids = {"a", "b", "c", "d", "e", "ottawa"};
    return ids[index(r)];
}

// River r drains this lake (Ottawa drains none).
inline Lake source_lake(River r) { return static_cast<Lake>(index(r)); }

// ============================================================================
// Time
// ============================================================================

// All dynamics are monthly. A fixed-length month (30.44 days) keeps scenarios
// month-agnostic; no calendar or leap-year handling anywhere.
inline constexpr double kDefaultMonthDays = 30.44;

inline constexpr double month_seconds(double month_days) { return month_days * 86400.0; }

// Months are addressed by an absolute index year*12 + (month-1), so that
// calendar month = index mod 12 (0 = January).
inline int calendar_of(int absolute_month) {
    int c = absolute_month % 12;
    return c < 0 ? c + 12 : c;
}

// Parses "YYYY-MM" into an absolute month index.
inline int parse_year_month(std::string_view s);

inline std::string format_year_month(int absolute_month) {
    int year = absolute_month / 12;
    int cal = absolute_month % 12;
    if (cal < 0) {
        cal += 12;
        year -= 1;
    }
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d", year, cal + 1);
    return buf;
}

// ============================================================================
// Errors
// ============================================================================

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Invalid value fed to a formula (non-finite level, nonpositive baseline, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

// Caller broke an operation's stated precondition (too-short series, wrong
// sample count, misalignment).
class PreconditionError : public Error {
  public:
    using Error::Error;
};

// Input data is structurally valid but unusable (empty calendar-month group,
// degenerate fit).
class DataError : public Error {
  public:
    using Error::Error;
};

// Malformed input file; message carries the offending row/field.
class SchemaError : public Error {
  public:
    using Error::Error;
};

// A control left its configured bounds.
class ConstraintError : public Error {
  public:
    using Error::Error;
};

// Simulation produced a non-finite value.
class NumericalError : public Error {
  public:
    using Error::Error;
};

inline int parse_year_month(std::string_view s) {
    if (s.size() != 7 || s[4] != '-')
        throw SchemaError("bad date '" + std::string(s) + "': expected YYYY-MM");
    for (size_t i : {0u, 1u, 2u, 3u, 5u, 6u})
        if (s[i] < '0' || s[i] > '9')
            throw SchemaError("bad date '" + std::string(s) + "': expected YYYY-MM");
    int year = (s[0] - '0') * 1000 + (s[1] - '0') * 100 + (s[2] - '0') * 10 + (s[3] - '0');
    int month = (s[5] - '0') * 10 + (s[6] - '0');
    if (month < 1 || month > 12)
        throw SchemaError("bad date '" + std::string(s) + "': month out of range");
    return year * 12 + (month - 1);
}

// ============================================================================
// Small statistics helpers
// ============================================================================

inline double mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v)
        s += x;
    return s / static_cast<double>(v.size());
}

// Population standard deviation (divide by n); the grading formulas divide
// the twelve-month sum of squares by 12.
inline double population_stddev(const std::vector<double>& v) {
    double m = mean(v);
    double ss = 0.0;
    for (double x : v)
        ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(v.size()));
}

inline double sample_stddev(const std::vector<double>& v) {
    if (v.size() < 2)
        return 0.0;
    double m = mean(v);
    double ss = 0.0;
    for (double x : v)
        ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

// Linearly interpolated quantile (the "type 7" rule) on a sorted copy.
inline double quantile(std::vector<double> v, double q);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

// Ordinary least squares y ~ slope*x + intercept. Throws DataError when x has
// zero variance.
inline LineFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw PreconditionError("linear_fit: need two equal-length samples");
    const double n = static_cast<double>(x.size());
    double mx = mean(x), my = mean(y);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx <= 0.0)
        throw DataError("linear_fit: regressor has zero variance");
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r_squared = (syy > 0.0) ? (sxy * sxy) / (sxx * syy) : 1.0;
    (void)n;
    return f;
}

inline double quantile(std::vector<double> v, double q) {
    if (v.empty())
        throw PreconditionError("quantile of empty set");
    std::sort(v.begin(), v.end());
    if (v.size() == 1)
        return v[0];
    double pos = q * static_cast<double>(v.size() - 1);
    size_t lo = static_cast<size_t>(pos);
    if (lo >= v.size() - 1)
        return v.back();
    double frac = pos - static_cast<double>(lo);
    return v[lo] + frac * (v[lo + 1] - v[lo]);
}

} // namespace lakeflow

#endif // LAKEFLOW_CORE_HPP
