// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "anaconda/timing/delay_model.hpp"

#include <algorithm>
#include <cmath>

#include "anaconda/errors.hpp"

namespace anaconda::timing {

DelayModel::DelayModel(double tau_f_seconds, double tau_c_seconds)
    : tau_f(tau_f_seconds), tau_c(tau_c_seconds) {
  if (!(tau_f >= 0.0) || !(tau_c >= 0.0) || !std::isfinite(tau_f) ||
      !std::isfinite(tau_c)) {
    throw InvalidArgument("delays must be finite and >= 0");
  }
}

double anaconda_round_time(int alpha, const DelayModel& model) {
  if (alpha < 0) throw InvalidArgument("alpha must be >= 0");
  return model.tau_f * (2.0 * alpha + 3.0) + model.tau_c;
}

double anaconda_round_time(std::span<const int> alphas,
                           const DelayModel& model) {
  double slowest = 0.0;
  for (int alpha : alphas) {
    slowest = std::max(slowest, anaconda_round_time(alpha, model));
  }
  return slowest;
}

std::int64_t convergence_rounds(double v_bar, double n, double alpha_bar,
                                double m_bar, double epsilon) {
  if (!(v_bar > 0.0) || !(n > 0.0) || !(epsilon > 0.0) || alpha_bar < 0.0 ||
      m_bar < 0.0) {
    throw InvalidArgument("convergence_rounds: invalid parameters");
  }
  const bool neisel = alpha_bar > 0.0 && alpha_bar < m_bar;
  const double per_agent =
      neisel ? alpha_bar * alpha_bar * m_bar + v_bar : v_bar;
  // Guard against ceil(4.0000000001) style round-up from float noise.
  const double t = per_agent * n * n / epsilon;
  return static_cast<std::int64_t>(std::ceil(t - 1e-9 * std::max(1.0, t)));
}

double convergence_time(const ConvergenceParams& p, const DelayModel& model) {
  if (p.sparse) {
    if (!(p.v_bar > 0.0) || !(p.n > 0.0) || !(p.epsilon > 0.0)) {
      throw InvalidArgument("convergence_time: invalid parameters");
    }
    return (model.tau_f * p.alpha_bar + model.tau_c) * p.v_bar * p.n * p.n /
           p.epsilon;
  }
  const double rounds = static_cast<double>(
      convergence_rounds(p.v_bar, p.n, p.alpha_bar, p.m_bar, p.epsilon));
  const double alpha =
      p.alpha_bar >= p.m_bar ? p.m_bar : p.alpha_bar;
  return rounds * (model.tau_f * (2.0 * alpha + 3.0) + model.tau_c);
}

std::int64_t budget_to_rounds(double budget_seconds,
                              double per_round_seconds) {
  if (!(budget_seconds >= 0.0)) {
    throw InvalidArgument("budget must be >= 0");
  }
  if (!(per_round_seconds > 0.0)) {
    throw InfiniteRoundsError(
        "per-round time is zero: a time budget never runs out; give an "
        "explicit round count");
  }
  // 300 / 0.14 evaluates to 2142.857..., but values such as 0.3 / 0.1 land
  // just below an integer; the epsilon keeps exact quotients exact.
  return static_cast<std::int64_t>(
      std::floor(budget_seconds / per_round_seconds + 1e-9));
}

}  // namespace anaconda::timing
