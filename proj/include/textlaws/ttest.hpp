#pragma once

#include <span>
#include <string>
#include <vector>

namespace textlaws {

struct GroupSummary {
    double mean = 0;
    double stddev = 0;  // sample standard deviation, n-1 denominator
    std::size_t n = 0;
};

struct TTestResult {
    double t = 0;
    double df = 0;
    double p = 1;  // two-sided
    GroupSummary a;
    GroupSummary b;
};

// Fitted exponents or model parameters of one group of texts.
struct ExponentSample {
    std::string group;  // book | speech | synthetic
    std::string law;    // beta | alpha | lambda | k0 | kt | kp
    std::vector<double> values;
};

GroupSummary summarize_sample(std::span<const double> values);  // needs n >= 2
GroupSummary summarize_sample(const ExponentSample& sample);

double student_t_cdf(double x, double df);

// Welch statistic with Welch-Satterthwaite degrees of freedom. Both samples
// with zero variance: equal means give t = 0, p = 1, otherwise p = 0.
TTestResult welch_t_test(std::span<const double> a, std::span<const double> b);
TTestResult welch_t_test(const ExponentSample& a, const ExponentSample& b);

}  // namespace textlaws
