#include "elabc/summaries.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "elabc/errors.hpp"

namespace elabc {

double raw_moment(const Vector& x, double order) {
  if (x.size() < 1) throw LengthError("raw_moment: empty sample");
  if (!(order > 0.0)) throw DomainError("raw_moment: order must be positive");
  const bool integral = (order == std::floor(order));
  if (!integral && (x.array() < 0.0).any()) {
    throw DomainError("raw_moment: fractional order needs non-negative data");
  }
  double acc = 0.0;
  for (Index j = 0; j < x.size(); ++j) acc += std::pow(x[j], order);
  return acc / static_cast<double>(x.size());
}

double quantile_sorted(const Vector& sorted, double level) {
  if (sorted.size() < 1) throw LengthError("quantile: empty sample");
  if (!(level >= 0.0 && level <= 1.0)) {
    throw DomainError("quantile: level must lie in [0,1]");
  }
  const Index n = sorted.size();
  if (n == 1) return sorted[0];
  const double h = static_cast<double>(n - 1) * level;
  const Index j = std::min<Index>(static_cast<Index>(h), n - 2);
  const double frac = h - static_cast<double>(j);
  return sorted[j] + frac * (sorted[j + 1] - sorted[j]);
}

double quantile(const Vector& x, double level) {
  Vector copy = x;
  std::sort(copy.begin(), copy.end());
  return quantile_sorted(copy, level);
}

double up_crossing(const Vector& x, double threshold) {
  if (x.size() < 1) throw LengthError("up_crossing: empty sample");
  return (x.array() >= threshold).cast<double>().mean();
}

double lag1_autocov_squares(const Vector& x) {
  const Index n = x.size();
  if (n < 2) throw LengthError("lag1_autocov_squares: needs at least 2 points");
  const Eigen::ArrayXd sq = x.array().square();
  const double mean_sq = sq.mean();
  double acc = 0.0;
  for (Index j = 0; j + 1 < n; ++j) {
    acc += (sq[j] - mean_sq) * (sq[j + 1] - mean_sq);
  }
  return acc / static_cast<double>(n);
}

SummaryStat SummaryStat::moment(double order) {
  return SummaryStat{Kind::RawMoment, order, {}, {}};
}
SummaryStat SummaryStat::quantile_at(double level) {
  return SummaryStat{Kind::Quantile, level, {}, {}};
}
SummaryStat SummaryStat::up_crossing_at(double threshold) {
  return SummaryStat{Kind::UpCrossing, threshold, {}, {}};
}
SummaryStat SummaryStat::lag1_autocov_sq() {
  return SummaryStat{Kind::Lag1AutocovSquares, 0.0, {}, {}};
}
SummaryStat SummaryStat::abs_quantile_at(double level) {
  return SummaryStat{Kind::QuartilesOfAbs, level, {}, {}};
}
SummaryStat SummaryStat::custom(std::string stat_name) {
  SummaryStat s{Kind::Custom, 0.0, std::move(stat_name), {}};
  s.fn = lookup_custom_stat(s.name);
  return s;
}
SummaryStat SummaryStat::custom(std::string stat_name, CustomStat stat_fn) {
  return SummaryStat{Kind::Custom, 0.0, std::move(stat_name), std::move(stat_fn)};
}

double SummaryStat::evaluate(const Vector& x) const {
  switch (kind) {
    case Kind::RawMoment: return raw_moment(x, param);
    case Kind::Quantile: return quantile(x, param);
    case Kind::UpCrossing: return up_crossing(x, param);
    case Kind::Lag1AutocovSquares: return lag1_autocov_squares(x);
    case Kind::QuartilesOfAbs: return quantile(x.cwiseAbs(), param);
    case Kind::Custom: return fn(x);
  }
  throw DomainError("SummaryStat: unknown kind");
}

namespace {

std::string trim_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

std::string SummaryStat::label() const {
  switch (kind) {
    case Kind::RawMoment: return "moment_" + trim_number(param);
    case Kind::Quantile: return "q_" + trim_number(param);
    case Kind::UpCrossing: return "up_" + trim_number(param);
    case Kind::Lag1AutocovSquares: return "lag1_autocov_sq";
    case Kind::QuartilesOfAbs: return "absq_" + trim_number(param);
    case Kind::Custom: return name;
  }
  return "unknown";
}

void validate_spec(const SummarySpec& spec) {
  if (spec.empty()) throw ConfigError("summary spec must be non-empty");
  for (const auto& s : spec) {
    switch (s.kind) {
      case SummaryStat::Kind::RawMoment:
        if (!(s.param > 0.0)) throw ConfigError("moment order must be positive");
        break;
      case SummaryStat::Kind::Quantile:
      case SummaryStat::Kind::QuartilesOfAbs:
        if (!(s.param >= 0.0 && s.param <= 1.0)) {
          throw ConfigError("quantile level must lie in [0,1]");
        }
        break;
      case SummaryStat::Kind::Custom:
        if (!s.fn) throw ConfigError("custom statistic '" + s.name + "' unresolved");
        break;
      default:
        break;
    }
  }
  auto labels = spec_labels(spec);
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw ConfigError("summary spec labels must be unique");
  }
}

Vector apply_spec_values(const SummarySpec& spec, const Vector& x) {
  Vector out(static_cast<Index>(spec.size()));
  Vector sorted_x, sorted_abs;
  for (std::size_t k = 0; k < spec.size(); ++k) {
    const SummaryStat& s = spec[k];
    switch (s.kind) {
      case SummaryStat::Kind::Quantile:
        if (sorted_x.size() == 0) {
          sorted_x = x;
          std::sort(sorted_x.begin(), sorted_x.end());
        }
        out[static_cast<Index>(k)] = quantile_sorted(sorted_x, s.param);
        break;
      case SummaryStat::Kind::QuartilesOfAbs:
        if (sorted_abs.size() == 0) {
          sorted_abs = x.cwiseAbs();
          std::sort(sorted_abs.begin(), sorted_abs.end());
        }
        out[static_cast<Index>(k)] = quantile_sorted(sorted_abs, s.param);
        break;
      default:
        out[static_cast<Index>(k)] = s.evaluate(x);
        break;
    }
  }
  return out;
}

SummaryVector apply_spec(const SummarySpec& spec, const Vector& x) {
  return SummaryVector{apply_spec_values(spec, x), spec_labels(spec)};
}

std::vector<std::string> spec_labels(const SummarySpec& spec) {
  std::vector<std::string> labels;
  labels.reserve(spec.size());
  for (const auto& s : spec) labels.push_back(s.label());
  return labels;
}

namespace {

std::map<std::string, CustomStat>& custom_registry() {
  static std::map<std::string, CustomStat> registry;
  return registry;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

void register_custom_stat(const std::string& name, CustomStat fn) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  custom_registry()[name] = std::move(fn);
}

CustomStat lookup_custom_stat(const std::string& name) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto it = custom_registry().find(name);
  if (it == custom_registry().end()) {
    throw ConfigError("unknown custom statistic '" + name + "'");
  }
  return it->second;
}

void to_json(nlohmann::json& j, const SummaryStat& s) {
  switch (s.kind) {
    case SummaryStat::Kind::RawMoment:
      j = {{"type", "raw_moment"}, {"order", s.param}};
      break;
    case SummaryStat::Kind::Quantile:
      j = {{"type", "quantile"}, {"level", s.param}};
      break;
    case SummaryStat::Kind::UpCrossing:
      j = {{"type", "up_crossing"}, {"threshold", s.param}};
      break;
    case SummaryStat::Kind::Lag1AutocovSquares:
      j = {{"type", "lag1_autocov_squares"}};
      break;
    case SummaryStat::Kind::QuartilesOfAbs:
      j = {{"type", "abs_quantile"}, {"level", s.param}};
      break;
    case SummaryStat::Kind::Custom:
      j = {{"type", "custom"}, {"name", s.name}};
      break;
  }
}

void from_json(const nlohmann::json& j, SummaryStat& s) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "raw_moment") {
    s = SummaryStat::moment(j.at("order").get<double>());
  } else if (type == "quantile") {
    s = SummaryStat::quantile_at(j.at("level").get<double>());
  } else if (type == "up_crossing") {
    s = SummaryStat::up_crossing_at(j.at("threshold").get<double>());
  } else if (type == "lag1_autocov_squares") {
    s = SummaryStat::lag1_autocov_sq();
  } else if (type == "abs_quantile") {
    s = SummaryStat::abs_quantile_at(j.at("level").get<double>());
  } else if (type == "custom") {
    s = SummaryStat::custom(j.at("name").get<std::string>());
  } else {
    throw ConfigError("unknown summary statistic type '" + type + "'");
  }
}

}  // namespace elabc
