#include "fracwave/special.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <vector>

#include "fracwave/errors.hpp"

namespace fracwave {

namespace {

// sin(pi*x) with argument reduction done on x itself
double sin_pi(double x) {
  double n = std::nearbyint(x);
  double r = x - n;
  double s = std::sin(M_PI * r);
  return (std::fmod(std::fabs(n), 2.0) == 1.0) ? -s : s;
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

}  // namespace

double recip_gamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x > 0.0) {
    if (x > 178.0) return 0.0;  // 1/Gamma underflows
    return 1.0 / std::tgamma(x);
  }
  // reflection: 1/Gamma(x) = sin(pi x)/pi * Gamma(1-x)
  double lg = std::lgamma(1.0 - x);  // 1-x >= 1, Gamma positive
  double s = sin_pi(x) / M_PI;
  if (lg > 700.0) {
    double v = s * std::exp(0.5 * lg);
    return v * std::exp(0.5 * lg);  // may overflow to +-inf, as it should
  }
  return s * std::exp(lg);
}

namespace detail {

MLResult ml_series(double alpha, double beta, double z) {
  MLResult r;
  r.method = MLMethod::series;
  double sum = recip_gamma(beta);
  double sum_abs = std::fabs(sum);
  double zk = 1.0;
  double last = 0.0;
  int small_run = 0;
  const double logaz = (z != 0.0) ? std::log(std::fabs(z)) : 0.0;
  const int kmax = 200000;
  int k = 1;
  for (; k <= kmax; ++k) {
    zk *= z;
    double arg = alpha * k + beta;
    double term;
    if (std::isfinite(zk)) {
      term = zk * recip_gamma(arg);
    } else {
      // z^k overflowed; the term itself may still be representable
      if (is_nonpositive_integer(arg)) {
        term = 0.0;
      } else {
        double logt = k * logaz - std::lgamma(arg);
        if (logt > 709.0) throw OverflowError("mittag-leffler series overflow");
        double mag = std::exp(logt);
        term = (z < 0.0 && (k & 1)) ? -mag : mag;
      }
    }
    sum += term;
    sum_abs += std::fabs(term);
    if (std::isinf(sum)) throw OverflowError("mittag-leffler series overflow");
    last = std::fabs(term);
    if (last < 1e-16 * std::fabs(sum) + DBL_MIN) {
      if (++small_run >= 3 && alpha * k + beta > 1.0) break;
    } else {
      small_run = 0;
    }
  }
  r.value = sum;
  r.est_abs_error = 2.0 * last + 4.0 * DBL_EPSILON * sum_abs;
  return r;
}

// series in extended precision, for the cancellation-prone regime z < 0
MLResult ml_series_mp(double alpha, double beta, double z) {
  // largest term of the series is roughly exp(alpha*|z|^{1/alpha})
  double guard = 1.5 * alpha * std::pow(std::fabs(z), 1.0 / alpha) * 1.4427;
  mpfr_prec_t prec = 96 + static_cast<mpfr_prec_t>(std::min(guard, 1.0e6));
  mpfr_t sum, zk, term, arg, g, zz, tol;
  mpfr_inits2(prec, sum, zk, term, arg, g, zz, tol, (mpfr_ptr) nullptr);
  mpfr_set_d(zz, z, MPFR_RNDN);
  mpfr_set_ui(zk, 1, MPFR_RNDN);
  mpfr_set_ui(sum, 0, MPFR_RNDN);
  const int kmax = 500000;
  int small_run = 0;
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) mpfr_mul(zk, zk, zz, MPFR_RNDN);
    mpfr_set_d(arg, alpha, MPFR_RNDN);
    mpfr_mul_ui(arg, arg, static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_add_d(arg, arg, beta, MPFR_RNDN);
    if (mpfr_sgn(arg) <= 0 && mpfr_integer_p(arg)) continue;  // Gamma pole
    mpfr_gamma(g, arg, MPFR_RNDN);
    mpfr_div(term, zk, g, MPFR_RNDN);
    mpfr_add(sum, sum, term, MPFR_RNDN);
    if (k > 1) {
      mpfr_abs(tol, sum, MPFR_RNDN);
      mpfr_add_d(tol, tol, 1.0, MPFR_RNDN);
      mpfr_mul_d(tol, tol, 1e-25, MPFR_RNDN);
      mpfr_abs(term, term, MPFR_RNDN);
      if (mpfr_cmp(term, tol) < 0 && alpha * k + beta > 1.0) {
        if (++small_run >= 3) break;
      } else {
        small_run = 0;
      }
    }
  }
  MLResult r;
  r.method = MLMethod::series;
  r.value = mpfr_get_d(sum, MPFR_RNDN);
  r.est_abs_error = 1e-15 * std::max(1.0, std::fabs(r.value));
  mpfr_clears(sum, zk, term, arg, g, zz, tol, (mpfr_ptr) nullptr);
  if (std::isinf(r.value)) throw OverflowError("mittag-leffler overflow");
  return r;
}

// E_{a,b}(z) ~ -sum_{k>=1} z^{-k}/Gamma(b - a k), z -> -inf, truncated at the
// smallest term; the error estimate is that term's magnitude
MLResult ml_asymptotic(double alpha, double beta, double z) {
  MLResult r;
  r.method = MLMethod::asymptotic;
  // terms in log form through the reflection formula,
  //   z^{-k}/Gamma(beta - a k) = z^{-k} sin(pi(beta - a k))/pi * Gamma(1 - beta + a k),
  // so neither z^{-k} underflow nor 1/Gamma overflow spoils the product.
  // Term magnitudes are not monotone (near-pole sin factors dip to ~0), so
  // truncate on the smooth envelope (the term with |sin| replaced by 1):
  // either when the envelope is below roundoff or at its minimum
  // k* ~ |z|^{1/alpha}.
  double az_root = std::pow(std::fabs(z), 1.0 / alpha);
  int kstop = std::max(2, std::min(400, static_cast<int>(az_root)));
  const double logaz = std::log(std::fabs(z));
  double sum = 0.0, sum_abs = 0.0;
  double cut = std::numeric_limits<double>::infinity();
  for (int k = 1; k < kstop; ++k) {
    double x = beta - alpha * k;
    double sgn_zk = (z < 0.0 && (k & 1)) ? -1.0 : 1.0;
    double env, term;
    if (x > 0.0 && x == std::floor(x)) {
      // Gamma(1-x) pole; 1/Gamma(x) itself is plain here
      env = std::exp(-k * logaz - std::lgamma(x));
      term = sgn_zk * env;
    } else {
      env = std::exp(
          std::min(700.0, -k * logaz + std::lgamma(1.0 - x) - std::log(M_PI)));
      // sign of Gamma(1-x): negative on (-1,0), alternating below
      double gsgn = 1.0;
      if (1.0 - x < 0.0)
        gsgn = (static_cast<long>(std::floor(x - 1.0)) % 2 == 0) ? -1.0 : 1.0;
      term = sin_pi(x) * gsgn * env * sgn_zk;
    }
    if (env < DBL_EPSILON * std::fabs(sum)) {
      cut = env;  // converged to double precision before k*
      break;
    }
    sum -= term;
    sum_abs += std::fabs(term);
    cut = env;
  }
  r.value = sum;
  // the power series in 1/z also misses the exponentially small
  // contribution (2/alpha) |z|^{(1-beta)/alpha} exp(|z|^{1/alpha} cos(pi/alpha))
  // from the pair of saddle points closest to the negative real axis
  double exp_corr =
      (2.0 / alpha) *
      std::exp(std::min(700.0, az_root * std::cos(M_PI / alpha) +
                                   (1.0 - beta) / alpha * logaz));
  r.est_abs_error = 4.0 * cut + exp_corr + 4.0 * DBL_EPSILON * sum_abs;
  return r;
}

}  // namespace detail

namespace {

MLResult ml_positive_beta(double alpha, double beta, double z,
                          const MLOptions& opt) {
  if (z <= opt.z_switch) {
    MLResult a = detail::ml_asymptotic(alpha, beta, z);
    if (a.est_abs_error <=
        opt.asym_rel_tol * std::max(1.0, std::fabs(a.value)))
      return a;
  }
  // cancellation in the alternating series grows like the largest term,
  // exp(alpha |z|^{1/alpha}); beyond that double precision cannot deliver
  // the error budget, go straight to extended precision
  if (z < 0.0 && alpha * std::pow(-z, 1.0 / alpha) > 5.0)
    return detail::ml_series_mp(alpha, beta, z);
  MLResult s = detail::ml_series(alpha, beta, z);
  if (z >= 0.0 ||
      s.est_abs_error <= 1e-13 * std::max(1.0, std::fabs(s.value)))
    return s;
  return detail::ml_series_mp(alpha, beta, z);
}

}  // namespace

MLResult ml(const MLQuery& q, const MLOptions& opt) {
  if (!(q.alpha > 0.0)) throw DomainError("ml: alpha must be positive");
  if (q.z == 0.0) {
    MLResult r;
    r.value = recip_gamma(q.beta);
    r.est_abs_error = 2.0 * DBL_EPSILON * std::max(1.0, std::fabs(r.value));
    return r;
  }
  if (q.beta > 0.0) return ml_positive_beta(q.alpha, q.beta, q.z, opt);

  // beta <= 0: shift into beta > 0 through
  //   E_{a,b}(z) = sum_{i<j} z^i / Gamma(b + i a)  +  z^j E_{a,b+ja}(z),
  // which keeps every remaining Gamma argument away from the poles
  int shifts = static_cast<int>(std::ceil((DBL_EPSILON - q.beta) / q.alpha));
  double beta_shifted = q.beta + shifts * q.alpha;
  MLResult inner = ml_positive_beta(q.alpha, beta_shifted, q.z, opt);
  double poly = 0.0, poly_abs = 0.0, zk = 1.0;
  for (int i = 0; i < shifts; ++i) {
    double c = zk * recip_gamma(q.beta + i * q.alpha);
    poly += c;
    poly_abs += std::fabs(c);
    zk *= q.z;
  }
  MLResult r;
  r.method = MLMethod::recurrence_reduced;
  r.value = poly + zk * inner.value;
  r.est_abs_error = std::fabs(zk) * inner.est_abs_error +
                    4.0 * DBL_EPSILON *
                        (poly_abs + std::fabs(zk * inner.value));
  if (std::isinf(r.value)) throw OverflowError("mittag-leffler overflow");
  return r;
}

}  // namespace fracwave
