#include "doctest.h"

#include "pastures/errors.hpp"
#include "pastures/hom.hpp"
#include "pastures/pasture_map.hpp"

using namespace pastures;

namespace {
PasturePresentation resolve(const std::string& s) {
  if (s == "K5") return parse_presentation("F1pm( | 1+1+1, 1+1+1+1+1)", "K5");
  if (s == "P7") return parse_presentation("F1pm( | 1+1+1+1+1+1+1)", "P7");
  return catalog(s);
}

PastureMap parse(const std::string& text) { return map_parse(text, resolve); }
}  // namespace

TEST_SUITE_BEGIN("map");

TEST_CASE("parsing") {
  auto f = parse("map ud\nsource U\ntarget D\nT1 -> T\nT2 -> T\n");
  CHECK(f.name == "ud");
  CHECK(f.source.gens == std::vector<std::string>{"T1", "T2"});
  CHECK(f.target.gens == std::vector<std::string>{"T"});
  REQUIRE(f.images.size() == 2);
  CHECK(f.images[0].sign == 1);
  CHECK(f.images[0].exps == std::vector<long long>{1});

  auto g = parse("map neg\nsource D\ntarget D\nT -> -T\n");
  CHECK(g.images[0].sign == -1);

  CHECK_THROWS_AS(parse("map x\nsource U\ntarget D\nT1 -> T\n"), DomainError);
  CHECK_THROWS_AS(
      parse("map x\nsource U\ntarget D\nT1 -> T\nT2 -> S\n"), DomainError);
  CHECK_THROWS_AS(
      parse("map x\nsource U\ntarget D\nT1 -> T\nT1 -> T\n"), DomainError);
  CHECK_THROWS_AS(parse("source U\ntarget D\n"), DomainError);
  CHECK_THROWS_AS(
      parse("map x\nsource U\ntarget D\nT1 T\nT2 -> T\n"), DomainError);
}

TEST_CASE("validation outcomes") {
  auto ud = parse("map ud\nsource U\ntarget D\nT1 -> T\nT2 -> T\n");
  CHECK(validate_map(ud).status == MapStatus::Valid);

  // T^2 = -1 in the source has no counterpart in the dyadic unit lattice
  auto f5d = parse("map bad\nsource F5\ntarget D\nT -> T\n");
  CHECK(validate_map(f5d).status == MapStatus::BadLattice);

  // 2T - 1 vanishes nowhere on the golden ratio points, e.g. over F11
  auto dg = parse("map bad\nsource D\ntarget G\nT -> T\n");
  CHECK(validate_map(dg).status == MapStatus::BadNullset);

  auto p7k = parse("map stuck\nsource P7\ntarget K5\n");
  CHECK(validate_map(p7k).status == MapStatus::Inconclusive);

  auto f2f3 = parse("map bad\nsource F2\ntarget F3\n");
  CHECK(validate_map(f2f3).status == MapStatus::BadNullset);

  for (const auto& name : catalog_names())
    CHECK(validate_map(identity_map(catalog(name))).status ==
          MapStatus::Valid);
}

TEST_CASE("composition with target points") {
  auto ud = parse("map ud\nsource U\ntarget D\nT1 -> T\nT2 -> T\n");
  auto f7 = FiniteField::make(7);
  CHECK(compose_hom(ud, f7, {4}) == std::vector<int>{4, 4});

  auto neg = parse("map neg\nsource D\ntarget D\nT -> -T\n");
  CHECK(validate_map(neg).status == MapStatus::BadNullset);

  auto idg = identity_map(catalog("G"));
  auto f11 = FiniteField::make(11);
  for (const auto& h : enumerate_homs(catalog("G"), f11))
    CHECK(compose_hom(idg, f11, h) == h);
}

TEST_CASE("induced fibers over a finite field") {
  auto ud = parse("map ud\nsource U\ntarget D\nT1 -> T\nT2 -> T\n");
  auto f7 = FiniteField::make(7);
  auto rep = induced_map_fibers(ud, f7);
  REQUIRE(rep.base_points.size() == 5);
  CHECK(rep.base_points[0] == std::vector<int>{2, 6});
  CHECK(rep.base_points[2] == std::vector<int>{4, 4});
  std::vector<size_t> sizes;
  for (const auto& f : rep.fibers) sizes.push_back(f.size());
  CHECK(sizes == std::vector<size_t>{0, 0, 1, 0, 0});
  CHECK(rep.fibers[2][0] == std::vector<int>{4});
}

TEST_CASE("identity fibers are singletons") {
  auto idu = identity_map(catalog("U"));
  auto f5 = FiniteField::make(5);
  auto rep = induced_map_fibers(idu, f5);
  REQUIRE(rep.base_points.size() == 3);
  for (size_t i = 0; i < rep.base_points.size(); ++i) {
    REQUIRE(rep.fibers[i].size() == 1);
    CHECK(rep.fibers[i][0] == rep.base_points[i]);
  }
}

TEST_SUITE_END();
