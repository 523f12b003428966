#include <random>

#include "test_support.hpp"

using namespace tore;
using tore::testing::ev;

TEST_CASE("validate_stream keeps sorted input under reject") {
  const std::vector<Event> in{ev(0, 0, 10, +1), ev(1, 1, 20, -1)};
  const auto stream = validate_stream(in, {2, 2}, TimestampPolicy::kReject);
  REQUIRE(stream.size() == 2);
  CHECK(stream[0] == in[0]);
  CHECK(stream[1] == in[1]);
  CHECK(stream.geometry() == SensorGeometry{2, 2});
}

TEST_CASE("validate_stream rejects decreasing timestamps under reject") {
  CHECK_TORE_ERROR(validate_stream({ev(0, 0, 20, +1), ev(0, 0, 10, +1)}, {2, 2},
                                   TimestampPolicy::kReject),
                   ErrorCode::kNonMonotonicTimestamp);
  try {
    validate_stream({ev(0, 0, 5, +1), ev(0, 0, 20, +1), ev(0, 0, 10, +1)}, {2, 2});
  } catch (const Error& err) {
    REQUIRE(err.event_index().has_value());
    CHECK(*err.event_index() == 2);
  }
}

TEST_CASE("validate_stream clamps decreasing timestamps under clamp") {
  const auto stream =
      validate_stream({ev(0, 0, 20, +1), ev(0, 0, 10, +1)}, {2, 2}, TimestampPolicy::kClamp);
  CHECK(stream[0].t == 20);
  CHECK(stream[1].t == 20);
}

TEST_CASE("out-of-bounds events are fatal under either policy") {
  for (auto policy : {TimestampPolicy::kReject, TimestampPolicy::kClamp}) {
    CHECK_TORE_ERROR(validate_stream({ev(2, 0, 1, +1)}, {2, 2}, policy),
                     ErrorCode::kOutOfBoundsEvent);
    CHECK_TORE_ERROR(validate_stream({ev(0, 2, 1, +1)}, {2, 2}, policy),
                     ErrorCode::kOutOfBoundsEvent);
  }
}

TEST_CASE("negative timestamps and bad geometry are rejected") {
  CHECK_TORE_ERROR(validate_stream({ev(0, 0, -1, +1)}, {2, 2}), ErrorCode::kNegativeTimestamp);
  CHECK_TORE_ERROR(validate_stream({}, {0, 4}), ErrorCode::kInvalidGeometry);
  CHECK_TORE_ERROR(validate_stream({}, {70000, 4}), ErrorCode::kInvalidGeometry);
}

TEST_CASE("normalize_polarity") {
  CHECK(normalize_polarity(0, PolarityConvention::kBinary) == Polarity::kNegative);
  CHECK(normalize_polarity(1, PolarityConvention::kBinary) == Polarity::kPositive);
  CHECK(normalize_polarity(-1, PolarityConvention::kSigned) == Polarity::kNegative);
  CHECK(normalize_polarity(1, PolarityConvention::kSigned) == Polarity::kPositive);
  CHECK_TORE_ERROR(normalize_polarity(2, PolarityConvention::kBinary), ErrorCode::kInvalidPolarity);
  CHECK_TORE_ERROR(normalize_polarity(-1, PolarityConvention::kBinary),
                   ErrorCode::kInvalidPolarity);
  CHECK_TORE_ERROR(normalize_polarity(0, PolarityConvention::kSigned), ErrorCode::kInvalidPolarity);
}

TEST_CASE("polarity channel mapping is fixed") {
  CHECK(channel(Polarity::kPositive) == 0);
  CHECK(channel(Polarity::kNegative) == 1);
  CHECK(polarity_from_channel(1) == Polarity::kNegative);
}

TEST_CASE("validation is idempotent and clamp output is non-decreasing") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Event> events(1 + rng() % 64);
    for (auto& e : events) e = ev(rng() % 4, rng() % 3, static_cast<Timestamp>(rng() % 100), 1);
    const auto clamped = validate_stream(events, {4, 3}, TimestampPolicy::kClamp);
    for (std::size_t i = 1; i < clamped.size(); ++i) CHECK(clamped[i - 1].t <= clamped[i].t);

    const std::vector<Event> again(clamped.begin(), clamped.end());
    CHECK(validate_stream(again, {4, 3}, TimestampPolicy::kReject) == clamped);
    CHECK(validate_stream(again, {4, 3}, TimestampPolicy::kClamp) == clamped);
  }
}
