#include <doctest.h>

#include <cmath>
#include <random>

#include "taxicab/core.hpp"
#include "taxicab/trig.hpp"
#include "test_util.hpp"

using namespace taxicab;
using testutil::uniform;

TEST_CASE("piecewise cosine values") {
  CHECK(cos_t(TaxicabAngle(1)) == 0.5);
  CHECK(cos_t(TaxicabAngle(0)) == 1.0);
  CHECK(cos_t(TaxicabAngle(3)) == -0.5);
  CHECK(cos_t(TaxicabAngle(6)) == 0.0);
  CHECK(cos_t(TaxicabAngle(4)) == -1.0);
}

TEST_CASE("piecewise sine values") {
  CHECK(sin_t(TaxicabAngle(1)) == 0.5);
  CHECK(sin_t(TaxicabAngle(2)) == 1.0);
  CHECK(sin_t(TaxicabAngle(7)) == -0.5);
  CHECK(sin_t(TaxicabAngle(0)) == 0.0);
  CHECK(sin_t(TaxicabAngle(6)) == -1.0);
}

TEST_CASE("sine and cosine have period 8") {
  std::mt19937_64 rng(0x5eed0201);
  for (int i = 0; i < 1000; ++i) {
    const double t = uniform(rng, 0.0, 8.0);
    for (int k = -2; k <= 2; ++k) {
      CHECK(std::abs(cos_t(TaxicabAngle(t + 8.0 * k)) -
                     cos_t(TaxicabAngle(t))) <= 1e-12);
      CHECK(std::abs(sin_t(TaxicabAngle(t + 8.0 * k)) -
                     sin_t(TaxicabAngle(t))) <= 1e-12);
    }
  }
}

TEST_CASE("diamond identity |sin| + |cos| = 1") {
  std::mt19937_64 rng(0x5eed0202);
  for (int i = 0; i < 10000; ++i) {
    const TaxicabAngle t(uniform(rng, -16.0, 16.0));
    CHECK(std::abs(std::abs(sin_t(t)) + std::abs(cos_t(t)) - 1.0) <= 1e-12);
  }
}

TEST_CASE("shift and reflection identities") {
  std::mt19937_64 rng(0x5eed0203);
  for (int i = 0; i < 2000; ++i) {
    const double t = uniform(rng, -16.0, 16.0);
    const TaxicabAngle a(t);
    CHECK(std::abs(sin_t(TaxicabAngle(-t)) + sin_t(a)) <= 1e-12);
    CHECK(std::abs(cos_t(TaxicabAngle(-t)) - cos_t(a)) <= 1e-12);
    CHECK(std::abs(sin_t(TaxicabAngle(t + 2)) - cos_t(a)) <= 1e-12);
    CHECK(std::abs(cos_t(TaxicabAngle(t - 2)) - sin_t(a)) <= 1e-12);
    CHECK(std::abs(sin_t(TaxicabAngle(t - 4)) + sin_t(a)) <= 1e-12);
    CHECK(std::abs(cos_t(TaxicabAngle(t - 4)) + cos_t(a)) <= 1e-12);
  }
}

TEST_CASE("quadrant classification") {
  CHECK(quadrant_of(TaxicabAngle(1)) == Quadrant::I);
  CHECK(quadrant_of(TaxicabAngle(5)) == Quadrant::III);
  CHECK(quadrant_of(TaxicabAngle(3)) == Quadrant::II);
  CHECK(quadrant_of(TaxicabAngle(7.5)) == Quadrant::IV);
  // Boundary values classify counterclockwise-ahead.
  CHECK(quadrant_of(TaxicabAngle(0)) == Quadrant::I);
  CHECK(quadrant_of(TaxicabAngle(2)) == Quadrant::II);
  CHECK(quadrant_of(TaxicabAngle(4)) == Quadrant::III);
  CHECK(quadrant_of(TaxicabAngle(6)) == Quadrant::IV);
  CHECK(quadrant_of(TaxicabAngle(9)) == Quadrant::I);
  CHECK(to_string(Quadrant::III) == "III");
}

TEST_CASE("cosine addition formula examples") {
  CHECK(cos_sum(TaxicabAngle(1), TaxicabAngle(1)) == 0.0);
  CHECK(cos_sum(TaxicabAngle(3), TaxicabAngle(5)) == 1.0);
  CHECK(cos_sum(TaxicabAngle(1), TaxicabAngle(7)) == 1.0);
  CHECK(cos_sum_form(Quadrant::I, Quadrant::I) == SumForm::Positive);
  CHECK(cos_sum_form(Quadrant::II, Quadrant::III) == SumForm::Negative);
  CHECK(cos_sum_form_label(SumForm::Negative) == "1-|cos(a)-cos(b)|");
}

TEST_CASE("sine addition formula examples") {
  CHECK(sin_sum(TaxicabAngle(1), TaxicabAngle(1)) == 1.0);
  CHECK(sin_sum(TaxicabAngle(1), TaxicabAngle(5)) == -1.0);
  CHECK(sin_sum(TaxicabAngle(3), TaxicabAngle(7)) == 1.0);
}

TEST_CASE("sine form lookup is order sensitive") {
  // (3,1) and (1,3) dispatch to different forms yet both equal sin_t(4).
  CHECK(sin_sum_form(Quadrant::II, Quadrant::I) == SumForm::Positive);
  CHECK(sin_sum_form(Quadrant::I, Quadrant::II) == SumForm::Negative);
  CHECK(sin_sum(TaxicabAngle(3), TaxicabAngle(1)) == sin_t(TaxicabAngle(4)));
  CHECK(sin_sum(TaxicabAngle(1), TaxicabAngle(3)) == sin_t(TaxicabAngle(4)));
}

TEST_CASE("addition formulas agree with direct evaluation") {
  std::mt19937_64 rng(0x5eed0204);
  for (int i = 0; i < 20000; ++i) {
    const double a = uniform(rng, -16.0, 16.0);
    const double b = uniform(rng, -16.0, 16.0);
    const TaxicabAngle alpha(a);
    const TaxicabAngle beta(b);
    CHECK(std::abs(cos_sum(alpha, beta) - cos_t(TaxicabAngle(a + b))) <=
          1e-12);
    CHECK(std::abs(sin_sum(alpha, beta) - sin_t(TaxicabAngle(a + b))) <=
          1e-12);
  }
}

TEST_CASE("both quadrant classifications agree on boundary angles") {
  std::mt19937_64 rng(0x5eed0205);
  const Quadrant quadrants[4] = {Quadrant::I, Quadrant::II, Quadrant::III,
                                 Quadrant::IV};
  for (int b2 = 0; b2 < 4; ++b2) {
    const double boundary = 2.0 * b2;
    const Quadrant ahead = quadrants[b2];
    const Quadrant behind = quadrants[(b2 + 3) % 4];
    for (int i = 0; i < 400; ++i) {
      const double other = uniform(rng, 0.0, 8.0);
      const Quadrant qo = quadrant_of(TaxicabAngle(other));
      const double cb = cos_t(TaxicabAngle(boundary));
      const double sb = sin_t(TaxicabAngle(boundary));
      const double co = cos_t(TaxicabAngle(other));
      const double so = sin_t(TaxicabAngle(other));
      // boundary angle in the alpha slot
      CHECK(std::abs(apply_sum_form(cos_sum_form(ahead, qo), cb, co) -
                     apply_sum_form(cos_sum_form(behind, qo), cb, co)) <=
            1e-12);
      CHECK(std::abs(apply_sum_form(sin_sum_form(ahead, qo), sb, co) -
                     apply_sum_form(sin_sum_form(behind, qo), sb, co)) <=
            1e-12);
      // boundary angle in the beta slot
      CHECK(std::abs(apply_sum_form(cos_sum_form(qo, ahead), co, cb) -
                     apply_sum_form(cos_sum_form(qo, behind), co, cb)) <=
            1e-12);
      CHECK(std::abs(apply_sum_form(sin_sum_form(qo, ahead), so, cb) -
                     apply_sum_form(sin_sum_form(qo, behind), so, cb)) <=
            1e-12);
    }
  }
}

TEST_CASE("double-angle formulas") {
  CHECK(cos_double(TaxicabAngle(1)) == 0.0);
  CHECK(cos_double(TaxicabAngle(0)) == 1.0);
  CHECK(cos_double(TaxicabAngle(3)) == 0.0);
  CHECK(sin_double(TaxicabAngle(2)) == 0.0);
  CHECK(sin_double(TaxicabAngle(1)) == 1.0);
  CHECK(sin_double(TaxicabAngle(0)) == 0.0);

  std::mt19937_64 rng(0x5eed0206);
  for (int i = 0; i < 5000; ++i) {
    const TaxicabAngle a(uniform(rng, -16.0, 16.0));
    CHECK(std::abs(cos_double(a) - cos_sum(a, a)) <= 1e-12);
    CHECK(std::abs(sin_double(a) - sin_sum(a, a)) <= 1e-12);
    CHECK(std::abs(cos_double(a) - cos_t(TaxicabAngle(2 * a.t()))) <= 1e-12);
    CHECK(std::abs(sin_double(a) - sin_t(TaxicabAngle(2 * a.t()))) <= 1e-12);
  }
}

TEST_CASE("trig pair lies on the unit diamond and matches the circle point") {
  std::mt19937_64 rng(0x5eed0207);
  const Point origin(0, 0);
  for (int i = 0; i < 2000; ++i) {
    const TaxicabAngle t(uniform(rng, 0.0, 8.0));
    const TrigPair p = trig_pair(t);
    CHECK(std::abs(std::abs(p.cos) + std::abs(p.sin) - 1.0) <= 1e-12);
    const Point on = point_on_taxicab_circle(origin, TaxicabLength(1), t);
    CHECK(on.x() == p.cos);
    CHECK(on.y() == p.sin);
  }
}
