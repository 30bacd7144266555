#include <doctest.h>

#include <cstdint>
#include <vector>

#include "ckzeta/errors.hpp"
#include "ckzeta/varieties.hpp"

using namespace ckzeta;

namespace {

// Affine sweep over (x, y) plus the point at infinity; quadratic in p and
// fully independent of the table method inside ec_count.
Int ec_count_pair_scan(const EllipticCurve& e, std::uint64_t p) {
  Int n = 1;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t rhs =
        (mul_mod(mul_mod(x, x, p), x, p) +
         mul_mod(mpz_class(e.a() % Int(p) + Int(p)).get_ui() % p, x, p) +
         mpz_class(e.b() % Int(p) + Int(p)).get_ui() % p) %
        p;
    for (std::uint64_t y = 0; y < p; ++y) {
      if (mul_mod(y, y, p) == rhs) ++n;
    }
  }
  return n;
}

const std::vector<EllipticCurve> kCurves = {
    EllipticCurve(Int(0), Int(1)),  EllipticCurve(Int(1), Int(1)),
    EllipticCurve(Int(-1), Int(0)), EllipticCurve(Int(2), Int(3)),
    EllipticCurve(Int(-7), Int(10)),
};

}  // namespace

TEST_CASE("curve construction and parsing") {
  EllipticCurve e(Int(0), Int(1));
  CHECK(e.discriminant() == -432);
  CHECK(e.spec_string() == "ec:a=0,b=1");
  CHECK(EllipticCurve::parse("ec:a=0,b=1").discriminant() == -432);
  CHECK(EllipticCurve::parse("ec:a=-7,b=10").spec_string() == "ec:a=-7,b=10");
  CHECK_THROWS_AS(EllipticCurve(Int(0), Int(0)), std::invalid_argument);
  // 4a^3 + 27b^2 = 0 at (a, b) = (-3, 2)
  CHECK_THROWS_AS(EllipticCurve(Int(-3), Int(2)), std::invalid_argument);
  CHECK_THROWS_AS(EllipticCurve::parse("ec:a=1"), std::invalid_argument);
  CHECK_THROWS_AS(EllipticCurve::parse("a=1,b=2"), std::invalid_argument);
}

TEST_CASE("good_reduction") {
  EllipticCurve e(Int(0), Int(7));  // disc = -16 * 27 * 49
  CHECK_FALSE(e.good_reduction(2));
  CHECK_FALSE(e.good_reduction(3));
  CHECK_FALSE(e.good_reduction(7));
  CHECK(e.good_reduction(5));
  CHECK(e.good_reduction(11));
  CHECK_THROWS_AS(e.good_reduction(6), std::invalid_argument);
  CHECK_THROWS_AS(e.good_reduction(1), std::invalid_argument);
}

TEST_CASE("ec_count matches the quadratic pair scan") {
  for (const auto& e : kCurves) {
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
      if (!e.good_reduction(p)) continue;
      CAPTURE(e.spec_string());
      CAPTURE(p);
      PointCount pc = ec_count(e, p);
      CHECK(pc.count == ec_count_pair_scan(e, p));
      CHECK(pc.trace == Int(p) + 1 - pc.count);
    }
  }
}

TEST_CASE("ec_count stays inside the Hasse window") {
  for (const auto& e : kCurves) {
    for (std::uint64_t p : primes_up_to(97)) {
      if (p <= 3 || !e.good_reduction(p)) continue;
      PointCount pc = ec_count(e, p);
      CHECK(pc.trace * pc.trace <= 4 * Int(p));
    }
  }
}

TEST_CASE("ec_count error taxonomy") {
  EllipticCurve e(Int(0), Int(7));
  CHECK_THROWS_AS(ec_count(e, 4), std::invalid_argument);  // not prime
  CHECK_THROWS_AS(ec_count(e, 2), bad_reduction);
  CHECK_THROWS_AS(ec_count(e, 3), bad_reduction);
  CHECK_THROWS_AS(ec_count(e, 7), bad_reduction);
  try {
    ec_count(e, 7);
    FAIL("expected bad_reduction");
  } catch (const bad_reduction& ex) {
    CHECK(ex.prime == 7);
  }
  CHECK_THROWS_AS(ec_count(e, 101, 50), budget_exceeded);
}

TEST_CASE("extension counts agree with the trace recurrence") {
  for (const auto& e : kCurves) {
    for (std::uint64_t p : {5ull, 7ull, 13ull}) {
      if (!e.good_reduction(p)) continue;
      CAPTURE(e.spec_string());
      CAPTURE(p);
      Int n1 = ec_count(e, p).count;
      Int a = Int(p) + 1 - n1;
      // t_2 = a^2 - 2p, t_3 = a^3 - 3ap
      Int t2 = a * a - 2 * p;
      Int t3 = a * a * a - 3 * a * Int(p);
      CHECK(ec_count_ext(e, p, 1) == n1);
      CHECK(ec_count_ext(e, p, 2) == Int(p) * Int(p) + 1 - t2);
      if (p * p * p <= kDefaultEnumerationBudget)
        CHECK(ec_count_ext(e, p, 3) == int_pow(Int(p), 3) + 1 - t3);
    }
  }
}

TEST_CASE("multi poly parse and eval") {
  Field f = Field::prime_field(7);
  MultiPoly q = MultiPoly::parse_line("1 2 0 0; -1 0 2 0", 3);
  // x^2 - y^2 at (3, 2, 1)
  std::vector<FieldElement> pt = {f.from_integer(Int(3)), f.from_integer(Int(2)),
                                  f.from_integer(Int(1))};
  CHECK(f.index_of(q.eval(f, pt)) == 5);
  CHECK(q.is_homogeneous());
  CHECK(q.total_degree() == 2);
  MultiPoly mixed = MultiPoly::parse_line("1 2 0 0; 1 0 1 0", 3);
  CHECK_FALSE(mixed.is_homogeneous());
  CHECK_THROWS_AS(MultiPoly::parse_line("1 2 0", 3), std::invalid_argument);
  CHECK_THROWS_AS(MultiPoly::parse_line("x 1 1 1", 3), std::invalid_argument);
}

TEST_CASE("projective line inside the plane has q + 1 points") {
  ProjectiveVariety line = ProjectiveVariety::parse("1 1 0 0\n");
  for (const char* spec : {"Fp:5", "Fp:7", "Fq:3^2", "Fq:2^2"}) {
    Field f = Field::parse(spec);
    CAPTURE(spec);
    CHECK(count_projective(line, f) == f.size() + 1);
  }
}

TEST_CASE("smooth conic matches the line count") {
  // xz = y^2 is a rational curve: q + 1 points
  ProjectiveVariety conic = ProjectiveVariety::parse("1 1 0 1; -1 0 2 0\n");
  for (std::uint64_t p : {5ull, 7ull, 11ull}) {
    Field f = Field::prime_field(p);
    CHECK(count_projective(conic, f) == Int(p) + 1);
  }
}

TEST_CASE("homogeneous cubic model agrees with the affine count") {
  for (const auto& e : kCurves) {
    ProjectiveVariety v = e.homogeneous_model();
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
      if (!e.good_reduction(p)) continue;
      CAPTURE(e.spec_string());
      CAPTURE(p);
      Field f = Field::prime_field(p);
      CHECK(count_projective(v, f) == ec_count(e, p).count);
    }
  }
}

TEST_CASE("homogeneous cubic model over extension fields") {
  EllipticCurve e(Int(0), Int(1));
  ProjectiveVariety v = e.homogeneous_model();
  Field f25 = Field::extension(5, 2);
  CHECK(count_projective(v, f25) == ec_count_ext(e, 5, 2));
  Field f49 = Field::extension(7, 2);
  CHECK(count_projective(v, f49) == ec_count_ext(e, 7, 2));
}

TEST_CASE("count_projective budget accounting") {
  ProjectiveVariety line = ProjectiveVariety::parse("1 1 0 0\n");
  Field f = Field::prime_field(101);
  // representative points 101^2 + 101 + 1 exceed a tiny budget
  CHECK_THROWS_AS(count_projective(line, f, 100), budget_exceeded);
  CHECK(count_projective(line, f, 1ull << 20) == 102);
}

TEST_CASE("variety parsing rejects malformed input") {
  CHECK_THROWS_AS(ProjectiveVariety::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(ProjectiveVariety::parse("1 1\n"), std::invalid_argument);
  // inhomogeneous line
  CHECK_THROWS_AS(ProjectiveVariety::parse("1 1 0 0; 1 0 0 0\n"),
                  std::invalid_argument);
  // comment and blank lines are skipped
  ProjectiveVariety v = ProjectiveVariety::parse("# cubic\n\n1 3 0 0; 1 0 3 0; 1 0 0 3\n");
  CHECK(v.polys().size() == 1);
  CHECK(v.n_vars() == 3);
}
