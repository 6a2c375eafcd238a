#include "gravent/cli/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gravent/errors.hpp"
#include "gravent/units.hpp"

namespace gravent::cli {

namespace {

double number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size())
    throw InvalidParameter("grid: cannot read " + what + " from '" + text + "'");
  return v;
}

double lookup(const std::map<std::string, double>& fixed,
              const std::string& key) {
  const auto it = fixed.find(key);
  if (it == fixed.end())
    throw InvalidParameter("sweep: no value for '" + key + "'");
  return it->second;
}

}  // namespace

const std::vector<std::string>& axis_names() {
  static const std::vector<std::string> names = {
      "lambda1", "lambda2", "eta", "mu", "chi", "omega_khz", "tau"};
  return names;
}

void SweepSpec::validate() const {
  if (parallelism == 0)
    throw InvalidParameter("sweep: parallelism must be >= 1");
  if (grid.empty()) throw InvalidParameter("sweep: grid has no axes");
  const auto& names = axis_names();
  for (const Axis& a : grid) {
    if (std::find(names.begin(), names.end(), a.name) == names.end())
      throw InvalidParameter("sweep: unknown axis '" + a.name + "'");
    if (a.count < 2)
      throw InvalidParameter("sweep: axis '" + a.name + "' needs count >= 2");
    if (!std::isfinite(a.min) || !std::isfinite(a.max))
      throw InvalidParameter("sweep: axis '" + a.name + "' bounds not finite");
    if (a.log && !(a.min > 0.0 && a.max > 0.0))
      throw InvalidParameter("sweep: log axis '" + a.name +
                             "' needs positive bounds");
  }
}

std::vector<Axis> parse_grid(const std::string& text) {
  std::vector<Axis> axes;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.empty()) continue;
    std::vector<std::string> parts;
    std::stringstream fields(item);
    std::string f;
    while (std::getline(fields, f, ':')) parts.push_back(f);
    if (parts.size() != 4 && parts.size() != 5)
      throw InvalidParameter("grid: expected name:min:max:count[:log], got '" +
                             item + "'");
    Axis a;
    a.name = parts[0];
    a.min = number(parts[1], "min");
    a.max = number(parts[2], "max");
    const double count = number(parts[3], "count");
    if (count != std::floor(count) || count < 2 || count > 1e7)
      throw InvalidParameter("grid: count must be an integer >= 2");
    a.count = static_cast<int>(count);
    if (parts.size() == 5) {
      if (parts[4] == "log") a.log = true;
      else if (parts[4] != "lin")
        throw InvalidParameter("grid: scale must be 'lin' or 'log'");
    }
    axes.push_back(a);
  }
  if (axes.empty()) throw InvalidParameter("grid: no axes given");
  return axes;
}

std::vector<double> axis_values(const Axis& axis) {
  std::vector<double> v(axis.count);
  const int last = axis.count - 1;
  for (int i = 0; i <= last; ++i) {
    const double s = static_cast<double>(i) / last;
    if (axis.log)
      v[i] = std::exp(std::log(axis.min) +
                      s * (std::log(axis.max) - std::log(axis.min)));
    else
      v[i] = axis.min + s * (axis.max - axis.min);
  }
  v.front() = axis.min;
  v.back() = axis.max;
  return v;
}

std::vector<std::vector<double>> grid_points(const std::vector<Axis>& grid) {
  std::vector<std::vector<double>> values;
  std::size_t total = 1;
  for (const Axis& a : grid) {
    values.push_back(axis_values(a));
    total *= values.back().size();
  }
  std::vector<std::vector<double>> points(total,
                                          std::vector<double>(grid.size()));
  for (std::size_t p = 0; p < total; ++p) {
    std::size_t rest = p;
    for (std::size_t k = grid.size(); k-- > 0;) {
      points[p][k] = values[k][rest % values[k].size()];
      rest /= values[k].size();
    }
  }
  return points;
}

SystemParams params_at(const SweepSpec& spec, const std::vector<double>& point,
                       double* tau) {
  std::map<std::string, double> v = spec.fixed;
  for (std::size_t k = 0; k < spec.grid.size(); ++k)
    v[spec.grid[k].name] = point.at(k);
  if (tau) *tau = lookup(v, "tau");
  return SystemParams(lookup(v, "omega_khz") * units::kHz, lookup(v, "lambda1"),
                      lookup(v, "lambda2"), lookup(v, "eta"), lookup(v, "mu"),
                      lookup(v, "chi"));
}

}  // namespace gravent::cli
