#include "liardom/instances.hpp"

#include <cmath>
#include <optional>
#include <string>

namespace liardom {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bound must be >= 1");
  const std::uint64_t limit = std::uint64_t(0) - (std::uint64_t(0) - bound) % bound;
  while (true) {
    const std::uint64_t draw = engine_();
    // limit == 0 means 2^64 is a multiple of bound.
    if (limit == 0 || draw < limit) return draw % bound;
  }
}

const char* to_string(PointMode mode) {
  return mode == PointMode::uniform ? "uniform" : "clustered";
}

PointMode parse_point_mode(std::string_view text) {
  if (text == "uniform") return PointMode::uniform;
  if (text == "clustered") return PointMode::clustered;
  throw std::invalid_argument("unknown point mode '" + std::string(text) + "'");
}

RetryBudgetExhausted::RetryBudgetExhausted(int attempts, const Violation& last)
    : std::runtime_error("no feasible instance after " + std::to_string(attempts) +
                         " attempts; last violation: " + last.describe()),
      attempts_(attempts),
      last_(last) {}

namespace {

std::vector<Point2D> sample(const GenSpec& spec, Rng& rng) {
  std::vector<Point2D> pts;
  pts.reserve(spec.n);
  if (spec.mode == PointMode::uniform) {
    for (std::size_t i = 0; i < spec.n; ++i) {
      const double x = rng.uniform(0.0, spec.box);
      const double y = rng.uniform(0.0, spec.box);
      pts.push_back({x, y});
    }
    return pts;
  }
  const auto clusters = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(spec.n))));
  std::vector<Point2D> centres;
  for (std::size_t c = 0; c < clusters; ++c) {
    const double x = rng.uniform(0.0, spec.box);
    const double y = rng.uniform(0.0, spec.box);
    centres.push_back({x, y});
  }
  for (std::size_t i = 0; i < spec.n; ++i) {
    const auto& c = centres[rng.below(clusters)];
    const double x = c.x + rng.uniform(-1.0, 1.0);
    const double y = c.y + rng.uniform(-1.0, 1.0);
    pts.push_back({x, y});
  }
  return pts;
}

std::optional<Violation> infeasibility(const GenSpec& spec, const PointSet& ps) {
  switch (spec.feasibility) {
    case Feasibility::none: return std::nullopt;
    case Feasibility::lds: return lds_feasible(build_udg(ps));
    case Feasibility::kds: return kds_feasible(build_udg(ps), spec.k);
  }
  return std::nullopt;
}

}  // namespace

PointSet gen_points(const GenSpec& spec) {
  if (!(spec.box > 0.0) || !std::isfinite(spec.box)) throw std::invalid_argument("box must be positive");
  if (spec.feasibility == Feasibility::lds && spec.n < 3) {
    throw std::invalid_argument("liar's domination needs at least 3 points");
  }
  if (spec.feasibility == Feasibility::kds && spec.k < 1) throw std::invalid_argument("k must be >= 1");
  if (spec.max_retries < 1) throw std::invalid_argument("max_retries must be >= 1");

  Rng rng(spec.seed);
  Violation last;
  for (int attempt = 1; attempt <= spec.max_retries; ++attempt) {
    PointSet ps(sample(spec, rng));
    auto why = infeasibility(spec, ps);
    if (!why) return ps;
    last = *why;
  }
  throw RetryBudgetExhausted(spec.max_retries, last);
}

}  // namespace liardom
