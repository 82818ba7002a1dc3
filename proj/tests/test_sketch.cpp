#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "ssbc/error.hpp"
#include "ssbc/rng.hpp"
#include "ssbc/sketch.hpp"

using namespace ssbc;

namespace {

RowVector row(std::initializer_list<double> v) {
  RowVector r(static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) r(i++) = x;
  return r;
}

bool rows_zero_from(const FdSketch& s, Index first) {
  return s.buffer().bottomRows(s.ell() - first).isZero(0.0);
}

}  // namespace

TEST_CASE("construction") {
  FdSketch a(4, 3);
  CHECK(a.buffer() == Matrix::Zero(4, 3));
  CHECK(a.next_zero_row() == 0);
  CHECK(a.rows_seen() == 0);
  CHECK_THROWS_AS(FdSketch(1, 5), ParameterError);
  CHECK_THROWS_AS(FdSketch(3, 0), ParameterError);
  FdSketch b(20, 100);
  CHECK(b.buffer().isZero(0.0));
  CHECK(b.buffer().rows() == 20);
  CHECK(b.buffer().cols() == 100);
}

TEST_CASE("insert") {
  for (ShrinkMethod method : {ShrinkMethod::gram_eigen, ShrinkMethod::svd}) {
    FdSketch s(2, 2, method);
    s.insert(row({1, 0}));
    CHECK(s.buffer() == Matrix{{1, 0}, {0, 0}});
    CHECK(s.next_zero_row() == 1);
    CHECK(s.shrink_count() == 0);

    s.insert(row({0, 1}));
    CHECK(s.shrink_count() == 1);
    CHECK(s.buffer().isZero(0.0));
    CHECK(s.next_zero_row() == 0);
    CHECK(s.extra_rows_freed() == 1);
  }
  SUBCASE("zero row consumes a slot") {
    FdSketch s(3, 2);
    s.insert(row({1, 2}));
    s.insert(row({0, 0}));
    CHECK(s.next_zero_row() == 2);
    CHECK(s.rows_seen() == 2);
    CHECK(s.buffer() == Matrix{{1, 2}, {0, 0}, {0, 0}});
  }
  SUBCASE("errors") {
    FdSketch s(3, 2);
    CHECK_THROWS_AS(s.insert(row({1, 2, 3})), DimensionError);
    CHECK_THROWS_AS(s.insert(row({1, std::nan("")})), DataError);
    CHECK_THROWS_AS(s.insert(row({INFINITY, 0})), DataError);
    CHECK(s.rows_seen() == 0);
  }
}

TEST_CASE("shrink examples") {
  for (ShrinkMethod method : {ShrinkMethod::gram_eigen, ShrinkMethod::svd}) {
    CAPTURE(static_cast<int>(method));
    FdSketch s(2, 2, method);
    s.insert(row({3, 0}));
    s.insert(row({0, 1}));
    REQUIRE(s.next_zero_row() == 1);
    CHECK(std::abs(std::abs(s.buffer()(0, 0)) - std::sqrt(8.0)) < 1e-12);
    CHECK(std::abs(s.buffer()(0, 1)) < 1e-12);
    CHECK(s.buffer().row(1).isZero(0.0));
  }
}

TEST_CASE("buffer invariants along a random stream") {
  Rng rng(17);
  const Matrix a = gaussian_matrix(200, 12, rng);
  for (ShrinkMethod method : {ShrinkMethod::gram_eigen, ShrinkMethod::svd}) {
    FdSketch s(5, 12, method);
    for (Index i = 0; i < a.rows(); ++i) {
      s.insert(a.row(i));
      REQUIRE(s.next_zero_row() < s.ell());
      REQUIRE(rows_zero_from(s, s.next_zero_row()));
    }
    CHECK(s.rows_seen() == 200);
    CHECK(s.shrink_count() > 0);
  }
}

TEST_CASE("gram and svd shrink routes agree") {
  Rng rng(23);
  const Matrix a = gaussian_matrix(150, 30, rng);
  FdSketch g(8, 30, ShrinkMethod::gram_eigen), v(8, 30, ShrinkMethod::svd);
  for (Index i = 0; i < a.rows(); ++i) {
    g.insert(a.row(i));
    v.insert(a.row(i));
  }
  CHECK(g.next_zero_row() == v.next_zero_row());
  CHECK(g.shrink_count() == v.shrink_count());
  CHECK((g.gram() - v.gram()).norm() <= 1e-9 * v.gram().norm());
}

TEST_CASE("frequent directions guarantee") {
  for (Seed seed = 0; seed < 4; ++seed) {
    Rng rng(seed);
    const Matrix a = gaussian_matrix(120, 20, rng);
    const double frob2 = a.squaredNorm();
    for (Index ell : {3, 6, 12}) {
      FdSketch s(ell, 20);
      for (Index i = 0; i < a.rows(); ++i) s.insert(a.row(i));
      const Matrix diff = a.transpose() * a - s.gram();
      const auto eig = oracle::jacobi_eig(diff);
      CAPTURE(ell);
      CHECK(eig.values(eig.values.size() - 1) >= -1e-9 * frob2);
      CHECK(eig.values(0) <= frob2 / static_cast<double>(ell) * (1 + 1e-12));
    }
  }
}

TEST_CASE("no shrink keeps the exact Gram") {
  Rng rng(2);
  const Matrix a = gaussian_matrix(9, 6, rng);
  FdSketch s(10, 6);
  for (Index i = 0; i < a.rows(); ++i) s.insert(a.row(i));
  CHECK(s.shrink_count() == 0);
  CHECK((s.gram() - a.transpose() * a).norm() < 1e-12);
}

TEST_CASE("basis") {
  SUBCASE("diag(2, 1) gives e1") {
    FdSketch s(3, 2);
    s.insert(row({2, 0}));
    s.insert(row({0, 1}));
    const Matrix v = s.basis(1);
    CHECK(std::abs(std::abs(v(0, 0)) - 1.0) < 1e-12);
    CHECK(std::abs(v(1, 0)) < 1e-12);
  }
  SUBCASE("k = ell is column-orthonormal") {
    Rng rng(4);
    FdSketch s(4, 9);
    const Matrix a = gaussian_matrix(3, 9, rng);
    for (Index i = 0; i < 3; ++i) s.insert(a.row(i));
    const Matrix v = s.basis(4);
    CHECK((v.transpose() * v - Matrix::Identity(4, 4)).norm() < 1e-10);
  }
  SUBCASE("matches the oracle on a random buffer") {
    Rng rng(5);
    const Matrix a = gaussian_matrix(5, 4, rng);
    FdSketch s(6, 4);
    for (Index i = 0; i < 5; ++i) s.insert(a.row(i));
    const Matrix v = s.basis(2);
    const auto o = oracle::jacobi_svd(a);
    for (Index j = 0; j < 2; ++j) CHECK(std::abs(std::abs(v.col(j).dot(o.v.col(j))) - 1.0) < 1e-9);
  }
  SUBCASE("cached vectors after a shrink agree with a fresh SVD") {
    Rng rng(6);
    const Matrix a = gaussian_matrix(40, 15, rng);
    FdSketch s(6, 15);
    for (Index i = 0; i < 36; ++i) s.insert(a.row(i));
    REQUIRE(s.shrink_count() > 0);
    const Matrix v = s.basis(3);
    const auto o = oracle::jacobi_svd(s.buffer());
    for (Index j = 0; j < 3; ++j) CHECK(std::abs(std::abs(v.col(j).dot(o.v.col(j))) - 1.0) < 1e-8);
  }
  SUBCASE("errors") {
    FdSketch s(3, 4);
    CHECK_THROWS_AS(s.basis(1), NumericalError);
    s.insert(row({1, 0, 0, 0}));
    CHECK_THROWS_AS(s.basis(0), ParameterError);
    CHECK_THROWS_AS(s.basis(4), ParameterError);
    CHECK_NOTHROW(s.basis(3));
  }
}
