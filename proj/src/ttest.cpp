#include "textlaws/ttest.hpp"

#include <cmath>
#include <limits>

#include <boost/math/distributions/students_t.hpp>

#include "textlaws/error.hpp"

namespace textlaws {

GroupSummary summarize_sample(std::span<const double> values) {
    if (values.size() < 2) throw Error("sample needs at least 2 values");
    GroupSummary s;
    s.n = values.size();
    for (double v : values) {
        if (!std::isfinite(v)) throw Error("sample values must be finite");
        s.mean += v;
    }
    s.mean /= static_cast<double>(s.n);
    double ss = 0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(s.n - 1));
    return s;
}

GroupSummary summarize_sample(const ExponentSample& sample) {
    return summarize_sample(std::span<const double>(sample.values));
}

double student_t_cdf(double x, double df) {
    boost::math::students_t_distribution<double> dist(df);
    return boost::math::cdf(dist, x);
}

TTestResult welch_t_test(std::span<const double> a, std::span<const double> b) {
    TTestResult result;
    result.a = summarize_sample(a);
    result.b = summarize_sample(b);

    const double va = result.a.stddev * result.a.stddev;
    const double vb = result.b.stddev * result.b.stddev;
    const double na = static_cast<double>(result.a.n);
    const double nb = static_cast<double>(result.b.n);

    if (va == 0 && vb == 0) {
        result.df = na + nb - 2;
        if (result.a.mean == result.b.mean) {
            result.t = 0;
            result.p = 1;
        } else {
            result.t = result.a.mean > result.b.mean
                           ? std::numeric_limits<double>::infinity()
                           : -std::numeric_limits<double>::infinity();
            result.p = 0;
        }
        return result;
    }

    const double sa = va / na;
    const double sb = vb / nb;
    result.t = (result.a.mean - result.b.mean) / std::sqrt(sa + sb);
    result.df = (sa + sb) * (sa + sb) / (sa * sa / (na - 1) + sb * sb / (nb - 1));
    result.p = 2.0 * student_t_cdf(-std::abs(result.t), result.df);
    return result;
}

TTestResult welch_t_test(const ExponentSample& a, const ExponentSample& b) {
    return welch_t_test(std::span<const double>(a.values), std::span<const double>(b.values));
}

}  // namespace textlaws
