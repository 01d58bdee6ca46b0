#include <doctest.h>

#include <numeric>

#include "qf/form.hpp"
#include "test_util.hpp"

using namespace qf;

TEST_CASE("discriminant") {
  CHECK(Form(1, 1, 1).discriminant() == -3);
  CHECK(Form(1, 0, 0).discriminant() == 0);
  CHECK(Form(1, -1, -57).discriminant() == 229);
  CHECK(Form(1, 0, 3).discriminant() == -12);
}

TEST_CASE("content") {
  CHECK(Form(1, 1, 1).content() == 1);
  CHECK(Form(2, 6, 10).content() == 2);
  CHECK(Form(4, 2, -1).content() == 1);
  CHECK_THROWS_AS(Form(0, 0, 0).content(), domain_error);
}

TEST_CASE("matrix action") {
  Form f(1, 1, 1);
  CHECK(act(f, Mat2::identity()) == f);
  // (X, Y) -> (X + Y, X) carries DW onto dw(2X, Y)
  CHECK(act(Form(1, 0, 3), Mat2{1, 1, 1, 0}) == Form(4, 2, 1));
  // (X, Y) -> (-X, -2X + Y)
  CHECK(act(Form(3, 13, -5), Mat2{-1, 0, -2, 1}) == Form(9, 7, -5));
}

TEST_CASE("dag and ddag") {
  CHECK(dag(Form(1, 1, 1)) == Form(4, 2, 1));
  CHECK(dag(Form(1, 0, 0)) == Form(4, 0, 0));
  CHECK(ddag(Form(1, 1, -1)) == Form(1, 2, -4));
  CHECK(ddag(Form(1, 1, -1)).discriminant() == 20);
}

TEST_CASE("dw(2X,Y) = DW(X+Y,X) coefficient-wise") {
  Form dw(1, 1, 1);
  Form DW(1, 0, 3);
  CHECK(dag(dw) == act(DW, Mat2{1, 1, 1, 0}));
}

TEST_CASE("schering invariants") {
  auto inv = schering_invariants({1, 0, -5});
  CHECK(inv.determinant == 5);
  CHECK(inv.order == 1);
  CHECK(inv.species == 1);

  inv = schering_invariants({2, 1, 2}); // 2X^2 + 2XY + 2Y^2, improperly primitive
  CHECK(inv.determinant == -3);
  CHECK(inv.order == 1);
  CHECK(inv.species == 2);

  inv = schering_invariants({2, 0, -10});
  CHECK(inv.determinant == 20);
  CHECK(inv.order == 2);
  CHECK(inv.species == 1);

  // determinant divisible by order^2
  CHECK(inv.determinant % (inv.order * inv.order) == 0);
}

TEST_CASE("action preserves discriminant and content") {
  std::mt19937 rng(1);
  for (int i = 0; i < 200; i++) {
    Form f = test::random_form(rng);
    Mat2 m = test::random_unimodular(rng);
    Form g = act(f, m);
    CHECK(g.discriminant() == f.discriminant());
    CHECK(g.content() == f.content());
  }
}

TEST_CASE("action composes contravariantly") {
  std::mt19937 rng(2);
  for (int i = 0; i < 200; i++) {
    Form f = test::random_form(rng);
    Mat2 m1 = test::random_unimodular(rng);
    Mat2 m2 = test::random_unimodular(rng);
    CHECK(act(act(f, m1), m2) == act(f, m1 * m2));
  }
}

TEST_CASE("gcd of sampled values of a primitive form is 1") {
  std::mt19937 rng(3);
  int done = 0;
  while (done < 50) {
    Form f = test::random_form(rng);
    if (!f.is_primitive())
      continue;
    done++;
    Int g = 0;
    for (long x = -10; x <= 10; x++)
      for (long y = -10; y <= 10; y++)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f.eval(x, y).get_mpz_t());
    CHECK(g == 1);
  }
}

TEST_CASE("form encoding round trip") {
  CHECK(parse_form("1,-1,-57") == Form(1, -1, -57));
  CHECK(to_string(Form(3, 13, -5)) == "3,13,-5");
  CHECK(parse_form(to_string(Form(-4, 0, 7))) == Form(-4, 0, 7));
  CHECK_THROWS_AS(parse_form("1,2"), domain_error);
  CHECK_THROWS_AS(parse_form("1,2,x"), domain_error);
  CHECK_THROWS_AS(parse_form("1,2,3,4"), domain_error);
}

TEST_CASE("unimodular matrix basics") {
  Mat2 m{1, 2, 3, 7};
  CHECK(m.det() == 1);
  CHECK(m * m.inverse() == Mat2::identity());
  Mat2 flip{1, 0, 0, -1};
  CHECK(flip.det() == -1);
  CHECK(flip * flip.inverse() == Mat2::identity());
  CHECK_THROWS_AS(Mat2(2, 0, 0, 1).inverse(), domain_error);
}
