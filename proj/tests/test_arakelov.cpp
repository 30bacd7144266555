#include <doctest.h>

#include <map>
#include <random>
#include <string>
#include <vector>

#include "ckzeta/arakelov.hpp"
#include "ckzeta/cuntz.hpp"

using namespace ckzeta;

namespace {

IntMatrix random_square(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("divisors never store zero coefficients") {
  CompactifiedDivisor d({{"p5", Int(2)}, {"p7", Int(0)}}, {Rat(1, 2)});
  CHECK(d.finite().size() == 1);
  CHECK(d.finite_coeff("p5") == 2);
  CHECK(d.finite_coeff("p7") == 0);
  CHECK(d.finite_coeff("unknown") == 0);
  CHECK(d.places() == 1);
  CHECK_FALSE(d.is_zero());

  CompactifiedDivisor z(2);
  CHECK(z.is_zero());
  CHECK(z.places() == 2);
  CHECK(z.finite().empty());
}

TEST_CASE("divisor addition and negation") {
  CompactifiedDivisor a({{"x", Int(2)}, {"y", Int(-1)}}, {Rat(1, 2), Rat(0)});
  CompactifiedDivisor b({{"y", Int(1)}, {"z", Int(5)}}, {Rat(1, 3), Rat(-2)});
  CompactifiedDivisor sum = divisor_add(a, b);
  CHECK(sum.finite_coeff("x") == 2);
  CHECK(sum.finite_coeff("y") == 0);  // cancelled and pruned
  CHECK(sum.finite().count("y") == 0);
  CHECK(sum.finite_coeff("z") == 5);
  CHECK(sum.infinite() == std::vector<Rat>{Rat(5, 6), Rat(-2)});

  CompactifiedDivisor neg = divisor_negate(a);
  CHECK(neg.finite_coeff("x") == -2);
  CHECK(neg.infinite() == std::vector<Rat>{Rat(-1, 2), Rat(0)});
  CHECK(divisor_add(a, neg).is_zero());
  CHECK(divisor_add(a, CompactifiedDivisor(2)) == a);

  CompactifiedDivisor other_places(1);
  CHECK_THROWS_AS(divisor_add(a, other_places), std::invalid_argument);
}

TEST_CASE("principal divisor assembles supplied data") {
  PrincipalData pd;
  pd.finite_divisor = {{"p2", Int(3)}, {"p3", Int(0)}, {"p5", Int(-1)}};
  pd.v_infinity = {Rat(7, 3)};
  CompactifiedDivisor d = principal_divisor(pd);
  CHECK(d.finite().size() == 2);
  CHECK(d.finite_coeff("p2") == 3);
  CHECK(d.finite_coeff("p5") == -1);
  CHECK(d.infinite() == std::vector<Rat>{Rat(7, 3)});
}

TEST_CASE("divisor json round trip") {
  CompactifiedDivisor d({{"p5", Int(-12)}, {"q", Int(30000000000)}},
                        {Rat(1, 3), Rat(-7, 2), Rat(0)});
  std::string text = divisor_to_json(d);
  CompactifiedDivisor back = divisor_from_json(text);
  CHECK(back == d);

  CompactifiedDivisor z(0);
  CHECK(divisor_from_json(divisor_to_json(z)) == z);

  CHECK_THROWS_AS(divisor_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(divisor_from_json("{\"finite\": {}}"), std::invalid_argument);
  CHECK_THROWS_AS(divisor_from_json("{\"finite\": {\"x\": \"1/2\"}, \"infinite\": []}"),
                  std::invalid_argument);
}

TEST_CASE("pic presentation of fixed matrices") {
  CHECK(pic_presentation(IntMatrix::from_rows({{2}})).is_trivial());
  CHECK(pic_presentation(IntMatrix::from_rows({{4}})) ==
        FgAbelianGroup::from_parts(0, {Int(3)}));
  CHECK(pic_presentation(IntMatrix::identity(3)) ==
        FgAbelianGroup::free_of_rank(3));
  CHECK_THROWS_AS(pic_presentation(IntMatrix(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(pic_presentation(IntMatrix()), std::invalid_argument);
}

TEST_CASE("the two k0 routes agree on random matrices") {
  std::mt19937_64 rng(40321);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int iter = 0; iter < 300; ++iter) {
    IntMatrix m = random_square(rng, dim(rng));
    CAPTURE(m.to_text());
    CHECK(pic_presentation(m) == k_theory(m).k0);
    CHECK(k0_matches_pic(m));
  }
}

TEST_CASE("the two k0 routes agree on point-count blocks") {
  EllipticCurve e(Int(0), Int(1));
  TruncationFamily fam = build_family(e, 60);
  for (std::size_t m = 1; m <= fam.blocks.size(); ++m) {
    IntMatrix a = fam.assembled(m);
    CHECK(k0_matches_pic(a));
    CHECK(group_order(pic_presentation(a)) ==
          conjecture_scan(fam).rows[m - 1].raw_det);
  }
}
