#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "taxicab/core.hpp"
#include "taxicab/trig.hpp"
#include "test_util.hpp"

using namespace taxicab;
using testutil::dyadic;
using testutil::uniform;

TEST_CASE("taxicab distance matches the defining examples") {
  CHECK(taxicab_distance(Point(0, 0), Point(1, 1)).value() == 2.0);
  CHECK(taxicab_distance(Point(3, 7), Point(3, 7)).value() == 0.0);
  CHECK(taxicab_distance(Point(0, 0), Point(3, 4)).value() == 7.0);
}

TEST_CASE("euclidean distance examples") {
  CHECK(euclidean_distance(Point(0, 0), Point(1, 1)).value() ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(euclidean_distance(Point(0, 0), Point(3, 4)).value() == 5.0);
  CHECK(euclidean_distance(Point(2, 2), Point(2, 2)).value() == 0.0);
}

TEST_CASE("points on a taxicab circle") {
  const Point p1 = point_on_taxicab_circle(Point(0, 0), TaxicabLength(1),
                                           TaxicabAngle(1));
  CHECK(p1.x() == 0.5);
  CHECK(p1.y() == 0.5);

  const Point p2 = point_on_taxicab_circle(Point(0, 0), TaxicabLength(1),
                                           TaxicabAngle(0));
  CHECK(p2.x() == 1.0);
  CHECK(p2.y() == 0.0);

  const Point p3 = point_on_taxicab_circle(Point(2, -1), TaxicabLength(3),
                                           TaxicabAngle(2));
  CHECK(p3.x() == 2.0);
  CHECK(p3.y() == 2.0);
  CHECK(taxicab_distance(Point(2, -1), p3).value() == 3.0);
}

TEST_CASE("circle points sit at taxicab radius r") {
  std::mt19937_64 rng(0x5eed0001);
  for (int i = 0; i < 2000; ++i) {
    const Point center(uniform(rng, -50, 50), uniform(rng, -50, 50));
    const TaxicabLength r(uniform(rng, 0.0, 20.0));
    const TaxicabAngle theta(uniform(rng, 0.0, 8.0));
    const Point p = point_on_taxicab_circle(center, r, theta);
    CHECK(std::abs(taxicab_distance(center, p).value() - r.value()) <= 1e-12);
  }
}

TEST_CASE("constructors reject bad values") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(Point(nan, 0), DomainError);
  CHECK_THROWS_AS(Point(0, inf), DomainError);
  CHECK_THROWS_AS(Vector(nan, 1), DomainError);
  CHECK_THROWS_AS(TaxicabLength(-1), DomainError);
  CHECK_THROWS_AS(TaxicabLength(inf), DomainError);
  CHECK_THROWS_AS(EuclideanLength(-0.5), DomainError);
  CHECK_THROWS_AS(TaxicabAngle(nan), DomainError);
  CHECK_THROWS_AS(EuclideanAngle(inf), DomainError);
}

TEST_CASE("metric axioms hold on random triples") {
  std::mt19937_64 rng(0x5eed0002);
  for (int i = 0; i < 2000; ++i) {
    const Point p(uniform(rng, -100, 100), uniform(rng, -100, 100));
    const Point q(uniform(rng, -100, 100), uniform(rng, -100, 100));
    const Point r(uniform(rng, -100, 100), uniform(rng, -100, 100));
    const double pq = taxicab_distance(p, q).value();
    const double qp = taxicab_distance(q, p).value();
    const double pr = taxicab_distance(p, r).value();
    const double qr = taxicab_distance(q, r).value();
    CHECK(pq >= 0.0);
    CHECK(pq == qp);  // |a-b| is symmetric exactly
    CHECK(taxicab_distance(p, p).value() == 0.0);
    CHECK(pr <= pq + qr + 1e-12);
  }
}

TEST_CASE("distance is zero only for identical points") {
  CHECK(taxicab_distance(Point(1, 2), Point(1, 2.0000001)).value() > 0.0);
}

TEST_CASE("translation invariance is bit-exact on a dyadic grid") {
  std::mt19937_64 rng(0x5eed0003);
  for (int i = 0; i < 2000; ++i) {
    const Point p(dyadic(rng, -8, 8), dyadic(rng, -8, 8));
    const Point q(dyadic(rng, -8, 8), dyadic(rng, -8, 8));
    const Vector w(dyadic(rng, -64, 64), dyadic(rng, -64, 64));
    CHECK(taxicab_distance(p + w, q + w).value() ==
          taxicab_distance(p, q).value());
  }
}

TEST_CASE("rotation does not preserve taxicab distance") {
  // The segment (0,0)-(1,1) rotated onto the x-axis has length sqrt(2).
  CHECK(taxicab_distance(Point(0, 0), Point(1, 1)).value() == 2.0);
  CHECK(taxicab_distance(Point(0, 0), Point(std::sqrt(2.0), 0)).value() ==
        std::sqrt(2.0));
}
