#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "ratgk/fp.hpp"

using namespace ratgk;

namespace {

oracle::Mat raw(const FpMatrix& m) {
  oracle::Mat out(m.dim(), std::vector<int>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out[i][j] = m.at(i, j);
  return out;
}

FpMatrix random_matrix(std::mt19937& rng, int p, std::size_t n) {
  std::uniform_int_distribution<int> d(0, p - 1);
  std::vector<int> e(n * n);
  for (auto& x : e) x = d(rng);
  return FpMatrix(p, n, e);
}

}  // namespace

TEST_CASE("modular arithmetic") {
  CHECK(mod_p(-1, 5) == 4);
  CHECK(mod_p(12, 5) == 2);
  for (int p : {2, 3, 5, 7, 11})
    for (int a = 1; a < p; ++a) CHECK(mod_p(static_cast<long long>(a) * inverse_mod(a, p), p) == 1);
}

TEST_CASE("number theory helpers") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(15) == 8);
  CHECK(prime_divisors(1200) == std::vector<unsigned>{2, 3, 5});
  CHECK(p_part(1200, 2) == 16);
  CHECK(p_part(1200, 7) == 1);
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("vector index round trip") {
  for (std::uint64_t i = 0; i < 625; ++i) CHECK(FpVector::from_index(5, 4, i).index() == i);
  CHECK(FpVector(5, {0, 1, 1, 1}).to_string() == "(0,1,1,1)");
}

TEST_CASE("matrix product and determinant agree with the naive oracles") {
  std::mt19937 rng(20261017);
  for (int trial = 0; trial < 200; ++trial) {
    const int p = trial % 2 ? 5 : 3;
    const std::size_t n = 1 + trial % 4;
    const FpMatrix a = random_matrix(rng, p, n), b = random_matrix(rng, p, n);
    CHECK(raw(a * b) == oracle::mat_mul(raw(a), raw(b), p));
    CHECK(a.determinant() == oracle::leibniz_det(raw(a), p));
    if (a.is_invertible()) CHECK(a * a.inverse() == FpMatrix::identity(p, n));
  }
}

TEST_CASE("charpoly agrees with det(xI - M) at every point of the field") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int p = trial % 3 ? 5 : 7;
    const std::size_t n = 1 + trial % 4;
    const FpMatrix m = random_matrix(rng, p, n);
    const FpPolynomial c = m.charpoly();
    REQUIRE(c.degree() == n);
    CHECK(c.coeffs.back() == 1);
    for (int x = 0; x < p; ++x) CHECK(c.evaluate(x) == oracle::charpoly_at(raw(m), x, p));
  }
}

TEST_CASE("charpoly of small known matrices") {
  // trace 0, determinant 1
  const FpMatrix g(5, {{0, 1}, {4, 0}});
  CHECK(g.charpoly().coeffs == std::vector<int>{1, 0, 1});
  CHECK(g.order() == 4);
  const FpMatrix d(5, {{2, 0}, {0, 3}});
  CHECK(d.charpoly().coeffs == std::vector<int>{1, 0, 1});  // (x-2)(x-3) = x^2 + 1 mod 5
  CHECK(FpMatrix::identity(5, 2).charpoly().coeffs == std::vector<int>{1, 3, 1});  // (x-1)^2
  // diag(1,3,1,2): (x-1)^2 (x-3)(x-2) = x^4 - 7x^3 + 17x^2 - 17x + 6
  CHECK(FpMatrix(5, {{1, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 2}}).charpoly().coeffs ==
        std::vector<int>{1, 3, 2, 3, 1});
  CHECK(FpMatrix::identity(5, 3).order() == 1);
  CHECK(FpMatrix::scalar(5, 2, 2).order() == 4);
}

TEST_CASE("rank") {
  std::vector<FpVector> vs{FpVector(5, {1, 2}), FpVector(5, {2, 4})};
  CHECK(rank(vs) == 1);
  vs.push_back(FpVector(5, {0, 1}));
  CHECK(rank(vs) == 2);
}

TEST_CASE("block diagonal and power") {
  const FpMatrix a(5, {{0, 1}, {4, 0}});
  const FpMatrix b = FpMatrix::block_diagonal(a, FpMatrix::identity(5, 1));
  CHECK(b.dim() == 3);
  CHECK(b.order() == 4);
  CHECK(a.power(-1) == a.inverse());
  CHECK(a.power(4) == FpMatrix::identity(5, 2));
  CHECK(a.to_string() == "[[0,1],[4,0]]");
}
