#include "fracwave/source.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "fracwave/errors.hpp"

namespace fracwave {

SourceTerm::SourceTerm() : tag_("zero"), eval_([](double) { return 0.0; }) {}

SourceTerm SourceTerm::zero() { return SourceTerm(); }

SourceTerm SourceTerm::constant(double c) {
  SourceTerm s;
  s.tag_ = "constant";
  s.params_ = {c};
  s.eval_ = [c](double) { return c; };
  return s;
}

SourceTerm SourceTerm::power(double p) {
  SourceTerm s;
  s.tag_ = "power";
  s.params_ = {p};
  s.eval_ = [p](double t) { return std::pow(t, p); };
  return s;
}

SourceTerm SourceTerm::exponential(double k) {
  SourceTerm s;
  s.tag_ = "exp";
  s.params_ = {k};
  s.eval_ = [k](double t) { return std::exp(k * t); };
  return s;
}

SourceTerm SourceTerm::table(std::vector<double> t, std::vector<double> v) {
  if (t.size() != v.size() || t.size() < 2)
    throw DomainError("SourceTerm::table: need matching abscissae and values");
  if (!std::is_sorted(t.begin(), t.end()))
    throw DomainError("SourceTerm::table: abscissae must be increasing");
  SourceTerm s;
  s.tag_ = "table";
  auto ts = std::make_shared<std::vector<double>>(std::move(t));
  auto vs = std::make_shared<std::vector<double>>(std::move(v));
  s.eval_ = [ts, vs](double x) {
    if (x <= ts->front()) return vs->front();
    if (x >= ts->back()) return vs->back();
    auto it = std::upper_bound(ts->begin(), ts->end(), x);
    std::size_t i = static_cast<std::size_t>(it - ts->begin());
    double w = (x - (*ts)[i - 1]) / ((*ts)[i] - (*ts)[i - 1]);
    return (1.0 - w) * (*vs)[i - 1] + w * (*vs)[i];
  };
  return s;
}

SourceTerm SourceTerm::callable(std::string tag,
                                std::function<double(double)> f) {
  SourceTerm s;
  s.tag_ = std::move(tag);
  s.eval_ = std::move(f);
  return s;
}

}  // namespace fracwave
