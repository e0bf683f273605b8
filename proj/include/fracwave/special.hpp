#ifndef FRACWAVE_SPECIAL_HPP
#define FRACWAVE_SPECIAL_HPP

#include <cstdint>

namespace fracwave {

// 1/Gamma(x), entire in x: returns exactly 0 at the poles of Gamma
// (nonpositive integers) and decays to 0 for large positive x.
double recip_gamma(double x);

struct MLQuery {
  double alpha;  // > 0
  double beta;   // any real, including <= 0
  double z;      // real argument
};

enum class MLMethod : std::uint8_t { series, asymptotic, recurrence_reduced };

struct MLResult {
  double value = 0.0;
  MLMethod method = MLMethod::series;
  double est_abs_error = 0.0;  // upper bound from the stopping rule
};

struct MLOptions {
  // never use the inverse-power expansion for z above this point
  double z_switch = -20.0;
  // accept the asymptotic result only if its reported error estimate is
  // below this fraction of max(1, |value|)
  double asym_rel_tol = 1e-12;
};

// Two-parameter Mittag-Leffler function E_{alpha,beta}(z), real arguments.
// Power series with pole-skipping for beta <= 0; for strongly negative z the
// series is summed in extended precision (cancellation) or replaced by the
// inverse-power asymptotic expansion, whichever meets the error budget.
// Throws OverflowError if the value leaves the representable range,
// DomainError if alpha <= 0.
MLResult ml(const MLQuery& q, const MLOptions& opt = {});

inline double ml_value(double alpha, double beta, double z) {
  return ml({alpha, beta, z}).value;
}

namespace detail {
// exposed for the series/asymptotic overlap tests
MLResult ml_series(double alpha, double beta, double z);
MLResult ml_series_mp(double alpha, double beta, double z);  // extended precision
MLResult ml_asymptotic(double alpha, double beta, double z);
}  // namespace detail

}  // namespace fracwave

#endif
