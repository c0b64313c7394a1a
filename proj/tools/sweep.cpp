#include "sweep.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "quasibell/errors.hpp"

namespace quasibell::cli {
namespace {

template <class T>
T parse_field(const std::string& field, const std::string& what) {
  T value{};
  const char* first = field.data();
  const char* last = first + field.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last) {
    throw DomainError("sweep: cannot parse " + what + " '" + field + "'");
  }
  return value;
}

}  // namespace

std::vector<double> SweepSpec::points() const {
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    out[i] = (i == steps - 1) ? max : min + (max - min) * i / (steps - 1);
  }
  return out;
}

SweepSpec parse_sweep(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 4) throw DomainError("sweep must look like NAME:MIN:MAX:STEPS, got '" + text + "'");
  SweepSpec spec{parts[0], parse_field<double>(parts[1], "min"), parse_field<double>(parts[2], "max"),
                 parse_field<int>(parts[3], "steps")};
  if (!std::isfinite(spec.min) || !std::isfinite(spec.max) || !(spec.min < spec.max)) {
    throw DomainError("sweep needs finite MIN < MAX");
  }
  if (spec.steps < 2) throw DomainError("sweep needs STEPS >= 2");
  return spec;
}

std::vector<double> parameter_values(const std::string& name, const std::optional<double>& fixed,
                                     const std::optional<SweepSpec>& sweep) {
  const bool swept = sweep && sweep->name == name;
  if (swept && fixed) throw DomainError("--" + name + " given together with a sweep over it");
  if (swept) return sweep->points();
  if (!fixed) throw DomainError("--" + name + " is required");
  return {*fixed};
}

std::vector<int> integer_values(const std::vector<double>& values, const std::string& name) {
  std::vector<int> out;
  out.reserve(values.size());
  for (double v : values) {
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-9) {
      std::ostringstream msg;
      msg << name << " must take integer values, sweep produced " << v;
      throw DomainError(msg.str());
    }
    out.push_back(static_cast<int>(r));
  }
  return out;
}

}  // namespace quasibell::cli
