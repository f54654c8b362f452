#include "doctest.h"

#include "pastures/linalg.hpp"

using namespace pastures;
namespace la = pastures::linalg;

TEST_SUITE_BEGIN("linalg");

static QMat u24_vertices() {
  QMat pts;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      QVec v(4, 0);
      v[i] = 1;
      v[j] = 1;
      pts.push_back(v);
    }
  return pts;
}

TEST_CASE("rref and rank") {
  QMat a = {{1, 2}, {2, 4}};
  CHECK(la::rank(a) == 1);
  auto piv = la::rref(a);
  CHECK(piv == std::vector<int>{0});
  CHECK(a[0][0] == 1);
  CHECK(a[0][1] == 2);
  CHECK(a[1][0] == 0);
  CHECK(a[1][1] == 0);

  QMat id = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(la::rank(id) == 3);
  QMat zero = {{0, 0}, {0, 0}};
  CHECK(la::rank(zero) == 0);
}

TEST_CASE("solve") {
  QMat a = {{2, 0}, {0, 4}};
  QVec b = {1, 1};
  auto x = la::solve(a, b);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(1, 2));
  CHECK((*x)[1] == Rat(1, 4));

  QMat bad = {{1, 1}, {1, 1}};
  CHECK(!la::solve(bad, {0, 1}).has_value());

  // underdetermined: free variables go to zero, residual must vanish
  QMat under = {{1, 1, 1}};
  auto y = la::solve(under, {5});
  REQUIRE(y.has_value());
  Rat s = 0;
  for (const auto& v : *y) s += v;
  CHECK(s == 5);
}

TEST_CASE("nullspace") {
  QMat a = {{1, 1, 0}, {0, 0, 1}};
  auto ns = la::nullspace(a);
  REQUIRE(ns.size() == 1);
  for (const auto& v : ns)
    for (size_t i = 0; i < a.size(); ++i) {
      Rat dot = 0;
      for (size_t j = 0; j < v.size(); ++j) dot += a[i][j] * v[j];
      CHECK(dot == 0);
    }
  QMat full = {{1, 0}, {0, 1}};
  CHECK(la::nullspace(full).empty());
}

TEST_CASE("affine dimension") {
  CHECK(la::affine_dim({}) == -1);
  CHECK(la::affine_dim({{3, 4}}) == 0);
  QMat collinear = {{0, 0}, {1, 1}, {2, 2}};
  CHECK(la::affine_dim(collinear) == 1);
  // the six vertices of the U24 basis polytope span a 3-dim octahedron
  CHECK(la::affine_dim(u24_vertices()) == 3);
}

TEST_CASE("row space membership") {
  la::RowSpace rs(3, {{1, 0, 1}, {0, 1, 1}});
  CHECK(rs.rank() == 2);
  CHECK(rs.contains({1, 1, 2}));
  CHECK(rs.contains({2, -1, 1}));
  CHECK(!rs.contains({0, 0, 1}));
  la::RowSpace trivial(2, {});
  CHECK(trivial.rank() == 0);
  CHECK(trivial.contains({0, 0}));
  CHECK(!trivial.contains({1, 0}));
}

TEST_SUITE_END();
