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

#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "anaconda/bandit/exp3.hpp"
#include "anaconda/bandit/rng.hpp"
#include "anaconda/errors.hpp"

using namespace anaconda;
using namespace anaconda::bandit;

namespace {

// Pseudo-regret of Exp3 on Bernoulli arms, averaged over `seeds` runs.
double bernoulli_regret(const std::vector<double>& means, int horizon,
                        int seeds) {
  double best = 0.0;
  for (double m : means) best = std::max(best, m);
  double total = 0.0;
  for (int s = 0; s < seeds; ++s) {
    Exp3 b(static_cast<int>(means.size()), horizon);
    Rng pick = Rng::derive(99, {1, static_cast<std::uint64_t>(s)});
    Rng coin = Rng::derive(99, {2, static_cast<std::uint64_t>(s)});
    for (int t = 0; t < horizon; ++t) {
      const int a = b.sample(pick);
      total += best - means[a];
      b.update(a, coin.uniform01() < means[a] ? 1.0 : 0.0);
    }
  }
  return total / seeds;
}

}  // namespace

TEST_CASE("rng streams are addressable and reproducible") {
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) CHECK(a() == b());
  Rng c(42, 5);
  Rng d(42);
  for (int i = 0; i < 5; ++i) d();
  CHECK(c() == d());
  CHECK(Rng::derive(1, {2, 3}).key() == Rng::derive(1, {2, 3}).key());
  CHECK(Rng::derive(1, {2, 3}).key() != Rng::derive(1, {3, 2}).key());
  CHECK(Rng::derive(1, {2}).key() != Rng::derive(2, {2}).key());
  Rng u(7);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform01();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    CHECK(u.below(7) < 7u);
  }
}

TEST_CASE("exp3 construction") {
  Exp3 b(4, 100);
  CHECK(b.arm_count() == 4);
  for (double w : b.weights()) CHECK(w == 1.0);
  CHECK(b.learning_rate() == doctest::Approx(std::sqrt(2 * std::log(4.0) / 400)));
  CHECK(Exp3::learning_rate_for(16, 3000) ==
        doctest::Approx(0.010746).epsilon(1e-4));
  CHECK_THROWS_AS(Exp3(0, 10), InvalidArgument);
  CHECK_THROWS_AS(Exp3(3, 0), InvalidArgument);
  CHECK_THROWS_AS(Exp3(std::vector<double>{1.0, 0.0}, 10), InvalidArgument);

  Exp3 one(1, 50);
  CHECK(one.learning_rate() == 0.0);
  CHECK(one.distribution() == ProbabilityVector{1.0});
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    CHECK(one.sample(rng) == 0);
    one.update(0, 0.3);
  }
  CHECK(one.distribution() == ProbabilityVector{1.0});
}

TEST_CASE("exp3 distribution") {
  CHECK(Exp3(5, 10).distribution() ==
        ProbabilityVector{0.2, 0.2, 0.2, 0.2, 0.2});
  Exp3 b({2.0, 1.0, 1.0}, 10);
  CHECK(b.distribution() == ProbabilityVector{0.5, 0.25, 0.25});
}

TEST_CASE("exp3 update matches the literal importance-weighted rule") {
  // Uniform two arms, arm 0 earns 0: rhat = (1 - 1/0.5, 1) = (-1, 1).
  Exp3 b(2, 100);
  const double eta = b.learning_rate();
  b.update(0, 0.0);
  CHECK(b.weights()[0] / b.weights()[1] == doctest::Approx(std::exp(-2 * eta)));

  // Several updates against raw weights kept by hand.
  Exp3 c({1.0, 2.0, 3.0}, 50);
  std::vector<double> raw{1.0, 2.0, 3.0};
  Rng rng(17);
  for (int t = 0; t < 40; ++t) {
    const int arm = static_cast<int>(rng.below(3));
    const double r = rng.uniform01();
    double sum = raw[0] + raw[1] + raw[2];
    const double p = raw[arm] / sum;
    for (int a = 0; a < 3; ++a) {
      const double rhat = a == arm ? 1.0 - (1.0 - r) / p : 1.0;
      raw[a] *= std::exp(c.learning_rate() * rhat);
    }
    c.update(arm, r);
    sum = raw[0] + raw[1] + raw[2];
    auto d = c.distribution();
    for (int a = 0; a < 3; ++a) {
      CHECK(d[a] == doctest::Approx(raw[a] / sum).epsilon(1e-9));
    }
  }
}

TEST_CASE("reward 1 leaves the distribution unchanged") {
  Exp3 b({0.3, 1.0, 0.7}, 100);
  const auto before = b.distribution();
  b.update(1, 1.0);
  b.update(0, 1.0);
  CHECK(b.distribution() == before);
}

TEST_CASE("out-of-range rewards are clamped") {
  Exp3 a(3, 10), b(3, 10);
  a.update(1, 1.7);
  b.update(1, 1.0);
  CHECK(a.distribution() == b.distribution());
  a.update(2, -0.4);
  b.update(2, 0.0);
  CHECK(a.distribution() == b.distribution());
}

TEST_CASE("distribution stays valid under a million adversarial updates") {
  Exp3 b(4, 1000);
  Rng rng(5);
  for (int t = 0; t < 1'000'000; ++t) {
    const int a = b.sample(rng);
    b.update(a, a == t % 4 ? 1.0 : 0.0);
    if (t % 50'000 == 0) {
      double sum = 0.0;
      for (double p : b.distribution()) {
        CHECK(p > 0.0);
        CHECK(p <= 1.0);
        sum += p;
      }
      CHECK(std::abs(sum - 1.0) < 1e-12);
    }
  }
  for (double w : b.weights()) {
    CHECK(std::isfinite(w));
    CHECK(w > 0.0);
  }
}

TEST_CASE("uniform sampling frequencies") {
  Exp3 b(4, 10);
  Rng rng(2024);
  std::vector<int> hits(4, 0);
  const int n = 100'000;
  for (int i = 0; i < n; ++i) ++hits[b.sample(rng)];
  const double sigma = std::sqrt(n * 0.25 * 0.75);
  for (int h : hits) CHECK(std::abs(h - n * 0.25) < 3 * sigma);

  Rng r1(9), r2(9);
  for (int i = 0; i < 100; ++i) CHECK(b.sample(r1) == b.sample(r2));
}

TEST_CASE("the consistently better arm takes over") {
  Exp3 b(2, 2000);
  double last = b.probability(0);
  for (int t = 0; t < 2000; ++t) {
    b.update(t % 2, t % 2 == 0 ? 1.0 : 0.0);
    if (t % 200 == 199) {
      CHECK(b.probability(0) >= last);
      last = b.probability(0);
    }
  }
  CHECK(last > 0.95);
}

TEST_CASE("regret per round shrinks with the horizon and obeys the bound") {
  const std::vector<double> means{0.9, 0.1};
  const double r3 = bernoulli_regret(means, 1000, 20);
  const double r4 = bernoulli_regret(means, 10000, 20);
  CHECK(r4 / 10000 < r3 / 1000);
  const double k = 2.0;
  CHECK(r4 <= 3 * std::sqrt(2 * 10000 * k * std::log(k)));
  CHECK(r3 <= 3 * std::sqrt(2 * 1000 * k * std::log(k)));
}
