#include "limiter/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "limiter/errors.hpp"
#include "limiter/eval.hpp"

namespace limiter {

void OracleConfig::validate() const {
  if (prefix_length < 100) throw DomainError("oracle prefix length must be at least 100");
  if (!(gap_threshold > 0)) throw DomainError("oracle gap threshold must be positive");
  if (!(infinity_threshold > 0)) throw DomainError("oracle infinity threshold must be positive");
  if (!(burn_in_fraction >= 0 && burn_in_fraction < 1)) throw DomainError("oracle burn-in fraction must lie in [0,1)");
}

OracleConfig OracleConfig::from_environment() {
  OracleConfig cfg;
  auto read = [](const char* name) -> const char* {
    const char* v = std::getenv(name);
    return (v != nullptr && *v != '\0') ? v : nullptr;
  };
  try {
    if (const char* v = read("ORACLE_N")) cfg.prefix_length = std::stoull(v);
    if (const char* v = read("ORACLE_DELTA")) cfg.gap_threshold = std::stod(v);
    if (const char* v = read("ORACLE_M")) cfg.infinity_threshold = std::stod(v);
  } catch (const std::logic_error&) {
    throw DomainError("malformed ORACLE_N / ORACLE_DELTA / ORACLE_M value");
  }
  return cfg;
}

double compactify_double(double x, double infinity_threshold) {
  if (x > infinity_threshold) return 1.0;
  if (x < -infinity_threshold) return -1.0;
  return x / (1.0 + std::fabs(x));
}

double decompactify(double u) {
  if (u >= 1.0) return HUGE_VAL;
  if (u <= -1.0) return -HUGE_VAL;
  return u / (1.0 - std::fabs(u));
}

namespace {

std::string format_point(double x) {
  if (std::isinf(x)) return x > 0 ? "+inf" : "-inf";
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

// Largest d(x, b) over x in [lo, hi]: attained at an end of the segment or
// at the middle of a gap of b.
double directed_on_segment(const UnitInterval& seg, const std::vector<UnitInterval>& b) {
  auto dist = [&](double x) {
    double best = HUGE_VAL;
    for (const auto& [lo, hi] : b) {
      if (x >= lo && x <= hi) return 0.0;
      best = std::min(best, x < lo ? lo - x : x - hi);
    }
    return best;
  };
  double worst = std::max(dist(seg.first), dist(seg.second));
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    const double mid = 0.5 * (b[i].second + b[i + 1].first);
    if (mid > seg.first && mid < seg.second) worst = std::max(worst, dist(mid));
  }
  return worst;
}

double directed(const std::vector<UnitInterval>& a, const std::vector<UnitInterval>& b) {
  double worst = 0.0;
  for (const auto& seg : a) worst = std::max(worst, directed_on_segment(seg, b));
  return worst;
}

}  // namespace

ClusterEstimate estimate_cluster(const SequenceExpr& e, const OracleConfig& cfg) {
  cfg.validate();
  const auto first =
      static_cast<std::uint64_t>(std::floor(cfg.burn_in_fraction * static_cast<double>(cfg.prefix_length))) + 1;
  std::vector<double> mapped;
  mapped.reserve(cfg.prefix_length - first + 1);
  for (std::uint64_t n = first; n <= cfg.prefix_length; ++n) {
    mapped.push_back(compactify_double(eval_double(e, n), cfg.infinity_threshold));
  }
  std::sort(mapped.begin(), mapped.end());

  ClusterEstimate est;
  est.sample_count = mapped.size();
  for (double u : mapped) {
    if (!est.intervals.empty() && u - est.intervals.back().second <= cfg.gap_threshold) {
      est.intervals.back().second = u;
    } else {
      est.intervals.emplace_back(u, u);
    }
  }
  // A group lying entirely within one gap of an end of [-1,1] is read as that infinity.
  for (auto& iv : est.intervals) {
    if (iv.first >= 1.0 - cfg.gap_threshold) iv = {1.0, 1.0};
    if (iv.second <= -1.0 + cfg.gap_threshold) iv = {-1.0, -1.0};
  }
  for (const auto& [lo, hi] : est.intervals) {
    if (!est.mapped_back.empty()) est.mapped_back += " ∪ ";
    if (lo == hi) {
      est.mapped_back += "{" + format_point(decompactify(lo)) + "}";
    } else {
      est.mapped_back += "[" + format_point(decompactify(lo)) + "," + format_point(decompactify(hi)) + "]";
    }
  }
  return est;
}

std::vector<UnitInterval> compactified_intervals(const ClusterSet& c) {
  std::vector<UnitInterval> out;
  out.reserve(c.intervals().size());
  for (const auto& iv : c.intervals()) out.emplace_back(compactify(iv.lo).get_d(), compactify(iv.hi).get_d());
  return out;
}

double hausdorff_intervals(const std::vector<UnitInterval>& a, const std::vector<UnitInterval>& b) {
  return std::max(directed(a, b), directed(b, a));
}

double hausdorff_compactified(const ClusterEstimate& a, const ClusterSet& b) {
  return hausdorff_intervals(a.intervals, compactified_intervals(b));
}

nlohmann::json to_json(const ClusterEstimate& est) {
  auto arr = nlohmann::json::array();
  for (const auto& [lo, hi] : est.intervals) arr.push_back({lo, hi});
  return {{"intervals", arr}, {"mappedBack", est.mapped_back}, {"sampleCount", est.sample_count}};
}

}  // namespace limiter
