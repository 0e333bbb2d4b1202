#include <cmath>

#include "critmech/errors.hpp"
#include "critmech/sweep/sweep.hpp"

namespace critmech::sweep {

std::size_t Axis::size() const {
  if (!explicit_values.empty()) return explicit_values.size();
  return count > 0 ? static_cast<std::size_t>(count) : 0;
}

std::vector<double> Axis::values() const {
  if (!explicit_values.empty()) return explicit_values;
  if (count < 2) throw SweepError("axis '" + name + "' needs at least 2 points");
  std::vector<double> out(static_cast<std::size_t>(count));
  const double last = static_cast<double>(count - 1);
  if (spacing == Spacing::Linear) {
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = start + (stop - start) * (i / last);
  } else {
    if (!(start > 0.0) || !(stop > 0.0)) throw SweepError("log axis '" + name + "' must stay positive");
    const double a = std::log10(start);
    const double b = std::log10(stop);
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = std::pow(10.0, a + (b - a) * (i / last));
    out.front() = start;
  }
  out.back() = stop;
  return out;
}

Axis linear_axis(std::string name, double start, double stop, int count) {
  return {std::move(name), start, stop, count, Spacing::Linear, {}};
}

Axis log_axis(std::string name, double start, double stop, int count) {
  return {std::move(name), start, stop, count, Spacing::Log, {}};
}

Axis list_axis(std::string name, std::vector<double> values) {
  Axis a;
  a.name = std::move(name);
  a.count = static_cast<int>(values.size());
  a.explicit_values = std::move(values);
  if (!a.explicit_values.empty()) {
    a.start = a.explicit_values.front();
    a.stop = a.explicit_values.back();
  }
  return a;
}

}  // namespace critmech::sweep
