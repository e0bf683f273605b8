#ifndef FRACWAVE_SOURCE_HPP
#define FRACWAVE_SOURCE_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace fracwave {

// Right-hand side f(t) of the scalar equation. Closed registry of tags so
// runs stay reproducible; "table" interpolates a sampled file linearly.
class SourceTerm {
 public:
  SourceTerm();  // zero

  static SourceTerm zero();
  static SourceTerm constant(double c);
  static SourceTerm power(double p);           // t^p
  static SourceTerm exponential(double k);     // exp(k t)
  static SourceTerm table(std::vector<double> t, std::vector<double> v);
  static SourceTerm callable(std::string tag, std::function<double(double)> f);

  double operator()(double t) const { return eval_(t); }
  bool is_zero() const { return tag_ == "zero"; }
  const std::string& tag() const { return tag_; }
  const std::vector<double>& params() const { return params_; }

 private:
  std::string tag_;
  std::vector<double> params_;
  std::function<double(double)> eval_;
};

}  // namespace fracwave

#endif
