#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>

#include "liardom/domination.hpp"
#include "liardom/geometry.hpp"

namespace liardom {

/// Seeded source of doubles in [0, 1). The engine is std::mt19937_64, whose
/// constants are fixed by the C++ standard, so streams are identical across
/// platforms; each double takes the top 53 bits of one draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Integer in [0, bound) by rejection, bound >= 1.
  std::uint64_t below(std::uint64_t bound);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

enum class PointMode { uniform, clustered };
enum class Feasibility { none, lds, kds };

const char* to_string(PointMode mode);
PointMode parse_point_mode(std::string_view text);

struct GenSpec {
  std::size_t n = 0;
  double box = 1.0;  // side of the square [0, box]^2
  std::uint64_t seed = 0;
  PointMode mode = PointMode::uniform;
  Feasibility feasibility = Feasibility::none;
  int k = 1;  // used when feasibility == kds
  int max_retries = 1000;
};

class RetryBudgetExhausted : public std::runtime_error {
 public:
  RetryBudgetExhausted(int attempts, const Violation& last);
  const Violation& last() const { return last_; }
  int attempts() const { return attempts_; }

 private:
  int attempts_;
  Violation last_;
};

/// Samples spec.n points. Uniform mode draws each coordinate from [0, box).
/// Clustered mode picks ceil(sqrt(n)) centres uniformly in the box and puts
/// each point at a random centre plus an offset uniform in [-1, 1)^2. With a
/// feasibility requirement the whole set is redrawn from the same stream
/// until the unit disk graph passes the check, at most max_retries times.
PointSet gen_points(const GenSpec& spec);

}  // namespace liardom
