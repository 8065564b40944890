#include "doctest.h"
#include "omatrix/embed.hpp"
#include "omatrix/hseries.hpp"
#include "omatrix/random.hpp"

using namespace omatrix;

TEST_CASE("rationals parse and print reduced") {
  CHECK(rat_str(parse_rat("4/6")) == "2/3");
  CHECK(rat_str(parse_rat("-4/6")) == "-2/3");
  CHECK(rat_str(parse_rat("7")) == "7");
  CHECK(parse_rat("1/2") + parse_rat("1/3") == parse_rat("5/6"));
  CHECK_THROWS_AS(parse_rat("1/0"), InputError);
  CHECK_THROWS_AS(parse_rat("a"), InputError);
  CHECK_THROWS_AS(parse_rat(""), InputError);
  // canonical form: positive denominator, gcd one
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    Rational a = rng.small() + Rational(1, rng.pick(1, 7));
    Rational b = rng.small() - Rational(1, rng.pick(1, 7));
    Rational c = a * b - a + b;
    CHECK(c.get_den() > 0);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), c.get_num().get_mpz_t(), c.get_den().get_mpz_t());
    CHECK(g == 1);
  }
}

TEST_CASE("tensor product basics") {
  Tensor one({1, 1});
  one.set({0, 0}, Rational(1));
  Tensor t({2, 3});
  t.set({0, 1}, Rational(5));
  t.set({1, 2}, parse_rat("-2/3"));
  Tensor prod = tensor_product(one, t);
  CHECK(prod.shape() == std::vector<int>{1, 1, 2, 3});
  CHECK(prod.at({0, 0, 0, 1}) == 5);
  CHECK(prod.at({0, 0, 1, 2}) == parse_rat("-2/3"));

  Matrix id2 = Matrix::identity(2);
  CHECK(kron(id2, id2) == Matrix::identity(4));

  // e1 (x) e2 in a 2-dimensional space: lone entry at (0, 1)
  Tensor e1({2}), e2({2});
  e1.set({0}, Rational(1));
  e2.set({1}, Rational(1));
  Tensor r1 = tensor_product(e1, e2);
  CHECK(r1.nnz() == 1);
  CHECK(r1.at({0, 1}) == 1);
}

TEST_CASE("zero entries are never stored and iteration is lexicographic") {
  Tensor t({2, 2});
  t.set({1, 1}, Rational(3));
  t.set({0, 1}, Rational(2));
  t.add_at({1, 1}, Rational(-3));
  CHECK(t.nnz() == 1);
  t.set({1, 0}, Rational(1));
  std::vector<MultiIndex> order;
  for (const auto& [idx, v] : t.entries()) order.push_back(idx);
  CHECK(order == std::vector<MultiIndex>{{0, 1}, {1, 0}});
  CHECK_THROWS(t.set({2, 0}, Rational(1)));
}

TEST_CASE("permutation operator squares to one") {
  for (int d = 2; d <= 5; ++d) {
    Matrix p = permutation_operator(d);
    CHECK(p * p == Matrix::identity(d * d));
  }
}

TEST_CASE("pair embeddings: identity case") {
  for (int d = 2; d <= 3; ++d) {
    Matrix id = Matrix::identity(d * d);
    for (Slot s : {Slot::s12, Slot::s13, Slot::s23})
      CHECK(embed_pair(id, s, d) == Matrix::identity(d * d * d));
  }
}

TEST_CASE("slot-swap identities for arbitrary operators") {
  Rng rng(7);
  for (int d = 2; d <= 3; ++d) {
    Matrix p12 = embed_pair(permutation_operator(d), Slot::s12, d);
    Matrix p23 = embed_pair(permutation_operator(d), Slot::s23, d);
    for (int t = 0; t < 4; ++t) {
      Matrix a = rng.matrix(d * d, d * d);
      Matrix a12 = embed_pair(a, Slot::s12, d);
      Matrix a13 = embed_pair(a, Slot::s13, d);
      Matrix a23 = embed_pair(a, Slot::s23, d);
      CHECK(a12 * p23 == p23 * a13);
      CHECK(a13 * p23 == p23 * a12);
      CHECK(a23 * p12 == p12 * a13);
      CHECK(a13 * p12 == p12 * a23);
    }
  }
}

TEST_CASE("middle-slot embedding of the permutation obeys the swap identity") {
  int d = 2;
  Matrix p = permutation_operator(d);
  Matrix p13 = embed_pair(p, Slot::s13, d);
  Matrix p23 = embed_pair(p, Slot::s23, d);
  Matrix p12 = embed_pair(p, Slot::s12, d);
  CHECK(p13 * p23 == p23 * p12);
}

TEST_CASE("mirror operator factors through adjacent swaps") {
  for (int d = 2; d <= 4; ++d) {
    Matrix p12 = embed_pair(permutation_operator(d), Slot::s12, d);
    Matrix p23 = embed_pair(permutation_operator(d), Slot::s23, d);
    Matrix m = mirror_operator(d);
    CHECK(p23 * p12 * p23 == m);
    CHECK(p12 * p23 * p12 == m);
  }
}

TEST_CASE("matrix commutator basics") {
  Rng rng(3);
  Matrix a = rng.matrix(3, 3);
  CHECK(commutator(a, a).is_zero());
  CHECK(commutator(Matrix::identity(3), a).is_zero());
  Matrix e12(2, 2), e21(2, 2);
  e12(0, 1) = 1;
  e21(1, 0) = 1;
  Matrix c = commutator(e12, e21);
  Matrix expected(2, 2);
  expected(0, 0) = 1;
  expected(1, 1) = -1;
  CHECK(c == expected);
}

TEST_CASE("matrix inverse is exact") {
  Rng rng(19);
  for (int t = 0; t < 10; ++t) {
    Matrix m = rng.invertible(3);
    CHECK((m * *m.inverse()) == Matrix::identity(3));
    CHECK((*m.inverse() * m) == Matrix::identity(3));
  }
  Matrix sing(2, 2);
  sing(0, 0) = 1;
  sing(1, 0) = 2;
  CHECK(!sing.inverse());
}

TEST_CASE("truncated series multiplication is associative") {
  Rng rng(23);
  for (int t = 0; t < 8; ++t) {
    HSeries a(rng.matrix(3, 3), rng.matrix(3, 3), rng.matrix(3, 3));
    HSeries b(rng.matrix(3, 3), rng.matrix(3, 3), rng.matrix(3, 3));
    HSeries c(rng.matrix(3, 3), rng.matrix(3, 3), rng.matrix(3, 3));
    CHECK(((a * b) * c) == (a * (b * c)));
  }
}
