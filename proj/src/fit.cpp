#include <cmath>

#include "json.hpp"

#include "nestrec/bounding.hpp"

namespace nestrec {

FitResult fit_power_law(std::span<const Value> values, Index lo, Index hi) {
  if (lo < 1 || hi <= lo || hi > static_cast<Index>(values.size()))
    throw InputError("fit range must satisfy 1 <= lo < hi <= number of values");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto m = static_cast<double>(hi - lo + 1);
  for (Index n = lo; n <= hi; ++n) {
    const Value v = values[static_cast<std::size_t>(n - 1)];
    if (v <= 0) throw InputError("cannot fit a power law through nonpositive value at n = " + std::to_string(n));
    const double x = std::log(static_cast<double>(n));
    const double y = std::log(static_cast<double>(v));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / m;
  double ss = 0;
  for (Index n = lo; n <= hi; ++n) {
    const double r = std::log(static_cast<double>(values[static_cast<std::size_t>(n - 1)])) -
                     (intercept + slope * std::log(static_cast<double>(n)));
    ss += r * r;
  }
  return {std::exp(intercept), slope, std::sqrt(ss / m), lo, hi};
}

std::string fit_to_json(const FitResult& fit) {
  const nlohmann::json j = {{"coefficient", fit.coefficient},
                            {"exponent", fit.exponent},
                            {"rms_residual", fit.rms_residual},
                            {"fit_range", {fit.lo, fit.hi}}};
  return j.dump(2);
}

}  // namespace nestrec
