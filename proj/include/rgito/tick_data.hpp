#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace rgito {

using Eigen::ArrayXd;

/// One day of high-frequency observations: intraday times in [i-1, i] and the
/// (possibly noisy) log prices on that grid. Times are strictly increasing;
/// the first grid point is the integer-time observation.
struct TickDay {
  int day_index = 0;       // 1-based day i
  std::string date;        // source date token (empty for synthetic data)
  ArrayXd times;           // absolute times, i-1 + fraction
  ArrayXd prices;          // observed log prices Y

  Eigen::Index n_ticks() const { return times.size(); }
};

using TickPanel = std::vector<TickDay>;

}  // namespace rgito
