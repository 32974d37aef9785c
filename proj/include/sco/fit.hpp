#pragma once

#include <vector>

namespace sco {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double se_slope = 0.0;  // OLS standard error of the slope
  int n = 0;
};

// Ordinary least squares y = intercept + slope * x.
LineFit ols_fit(const std::vector<double>& x, const std::vector<double>& y);

// OLS on (log x, log y); every input must be positive.
LineFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

double median(std::vector<double> v);

// Empirical quantile with linear interpolation, q in [0, 1].
double quantile(std::vector<double> v, double q);

}  // namespace sco
