#include <alc/quantum.hpp>

#include <doctest.h>

#include <cmath>

namespace {

using namespace alc;

TEST_CASE("the shared-pair protocol succeeds on every string pair") {
  const BellProtocolResult bell = bell_protocol();
  CHECK(std::abs(bell.overall - 1.0) <= 1e-12);
  CHECK(bell.min_pair >= 1.0 - 1e-12);
  for (const auto& row : bell.pair_success)
    for (const double v : row) CHECK(std::abs(v - 1.0) <= 1e-12);
}

TEST_CASE("seesaw restarts improve monotonically and plateau below one") {
  const SeesawResult result = product_strategy_search(7, 8, 60);
  CHECK(result.restarts == 8);
  CHECK(result.all_monotone);
  CHECK(result.decoder_valid);
  CHECK(result.best_value < 1.0 - 1e-3);
  CHECK(result.best_value > 0.74);
  CHECK(result.per_restart.size() == 8);
  CHECK(result.best_restart >= 0);
  CHECK(result.per_restart[static_cast<std::size_t>(result.best_restart)].final_value ==
        doctest::Approx(result.best_value).epsilon(1e-12));
}

TEST_CASE("identical seeds reproduce identical trajectories") {
  const SeesawResult a = product_strategy_search(3, 5, 40);
  const SeesawResult b = product_strategy_search(3, 5, 40);
  REQUIRE(a.per_restart.size() == b.per_restart.size());
  CHECK(a.best_value == b.best_value);
  CHECK(a.best_restart == b.best_restart);
  for (std::size_t i = 0; i < a.per_restart.size(); ++i)
    CHECK(a.per_restart[i].final_value == b.per_restart[i].final_value);
}

TEST_CASE("long runs reach the product-strategy plateau") {
  const SeesawResult result = product_strategy_search(1, 20, 120);
  CHECK(result.best_value == doctest::Approx(0.8125).epsilon(1e-9));
}

}  // namespace
