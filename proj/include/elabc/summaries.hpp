#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "elabc/types.hpp"

namespace elabc {

double raw_moment(const Vector& x, double order);

/// Linear-interpolation sample quantile with plotting position
/// (j-1)/(n-1) ("type 7").  Shared by every method in this project so
/// that EL, synthetic likelihood and rejection ABC see the same
/// statistic definitions.
double quantile(const Vector& x, double level);

/// Same rule on data that is already sorted ascending.
double quantile_sorted(const Vector& sorted, double level);

/// Proportion of entries >= threshold.
double up_crossing(const Vector& x, double threshold);

/// Lag-1 sample autocovariance of the squared series, with divisor n.
double lag1_autocov_squares(const Vector& x);

using CustomStat = std::function<double(const Vector&)>;

struct SummaryStat {
  enum class Kind {
    RawMoment,         // param = order
    Quantile,          // param = level in [0,1]
    UpCrossing,        // param = threshold
    Lag1AutocovSquares,
    QuartilesOfAbs,    // param = level; quantile of |x|
    Custom,            // named statistic, resolved via the registry
  };

  Kind kind = Kind::RawMoment;
  double param = 0.0;
  std::string name;  // Custom only
  CustomStat fn;     // Custom only

  static SummaryStat moment(double order);
  static SummaryStat quantile_at(double level);
  static SummaryStat up_crossing_at(double threshold);
  static SummaryStat lag1_autocov_sq();
  static SummaryStat abs_quantile_at(double level);
  static SummaryStat custom(std::string stat_name);
  static SummaryStat custom(std::string stat_name, CustomStat stat_fn);

  double evaluate(const Vector& x) const;
  std::string label() const;
};

using SummarySpec = std::vector<SummaryStat>;

struct SummaryVector {
  Vector values;
  std::vector<std::string> labels;
};

/// Evaluates each descriptor in order.  Sorted copies of x and |x| are
/// built at most once each and shared across quantile-type entries.
Vector apply_spec_values(const SummarySpec& spec, const Vector& x);
SummaryVector apply_spec(const SummarySpec& spec, const Vector& x);
std::vector<std::string> spec_labels(const SummarySpec& spec);

void validate_spec(const SummarySpec& spec);

/// Named-statistic registry backing SummaryStat::Kind::Custom.
void register_custom_stat(const std::string& name, CustomStat fn);
CustomStat lookup_custom_stat(const std::string& name);

void to_json(nlohmann::json& j, const SummaryStat& s);
void from_json(const nlohmann::json& j, SummaryStat& s);

}  // namespace elabc
