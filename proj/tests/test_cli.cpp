#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pastures/cli.hpp"
#include "pastures/matroid.hpp"

using namespace pastures;

namespace {
struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path tmp_file(const std::string& name,
                               const std::string& content) {
  auto dir = std::filesystem::temp_directory_path() / "pastures_cli_tests";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream f(path);
  f << content;
  return path;
}

const std::string kU24Split =
    "pluecker U24\n12 : 0\n13 : 0\n14 : 0\n23 : 0\n24 : 0\n34 : -1\n";
}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("hom reports") {
  auto r = run({"pasture", "homs", "--pasture", "D", "--field", "7"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 hom: T=4\n");

  auto u = run({"pasture", "homs", "--pasture", "U", "--field", "5"});
  CHECK(u.code == 0);
  CHECK(u.out == "3 homs:\nT1=2 T2=4\nT1=3 T2=3\nT1=4 T2=2\n");

  auto none = run({"pasture", "homs", "--pasture", "D", "--field", "2"});
  CHECK(none.code == 0);
  CHECK(none.out == "0 homs\n");

  auto ext = run({"pasture", "homs", "--pasture", "D", "--field", "25"});
  CHECK(ext.code == 0);
  CHECK(ext.out == "1 hom: T=[3,0]\n");

  auto trivial = run({"pasture", "homs", "--pasture", "F1pm", "--field", "7"});
  CHECK(trivial.code == 0);
  CHECK(trivial.out == "1 hom: (trivial)\n");
}

TEST_CASE("tropical reports") {
  auto g = run({"pasture", "trop", "--pasture", "G"});
  CHECK(g.code == 0);
  CHECK(g.out ==
        "dim 0, cells 1\n"
        "cell 0 dim 0 eqs 1 ineqs 0\n"
        "eq 1 = 0\n"
        "trivial point: yes\n");

  auto d = run({"pasture", "trop", "--pasture", "D"});
  CHECK(d.code == 0);
  CHECK(d.out.substr(0, 15) == "dim 1, cells 2\n");
  CHECK(d.out.find("trivial point: yes\n") != std::string::npos);
  CHECK(d.out.find("eq 1 = 0\n") != std::string::npos);
  CHECK(d.out.find("ineq 1 >= 0\n") != std::string::npos);
}

TEST_CASE("pasture files and the file flag") {
  auto path = tmp_file("hexagonal.txt", "F1pm(T | T^3+1, T-T^2-1)\n");
  auto r = run({"pasture", "homs", "--pasture", path.string(), "--field", "7"});
  CHECK(r.code == 0);
  CHECK(r.out == "2 homs:\nT=3\nT=5\n");

  auto forced =
      run({"pasture", "homs", "--pasture", path.string(), "--field", "7",
           "--file"});
  CHECK(forced.code == 0);
  CHECK(forced.out == r.out);

  auto missing =
      run({"pasture", "homs", "--pasture", "./no_such.txt", "--field", "7"});
  CHECK(missing.code == 3);
  CHECK(!missing.err.empty());

  auto garbage_path = tmp_file("garbage.txt", "this is not a presentation\n");
  auto garbage = run(
      {"pasture", "homs", "--pasture", garbage_path.string(), "--field", "7"});
  CHECK(garbage.code == 1);
  CHECK(!garbage.err.empty());
}

TEST_CASE("rigidity reports") {
  auto u24 = run({"matroid", "rigid", "--matroid", "U24"});
  CHECK(u24.code == 0);
  CHECK(u24.out == "rigid: no (dressian dim 5 > lineality dim 4)\n");

  auto u23 = run({"matroid", "rigid", "--matroid", "U23"});
  CHECK(u23.code == 0);
  CHECK(u23.out == "rigid: yes (dressian dim 3 = lineality dim 3)\n");
}

TEST_CASE("subdivision reports and round trip") {
  auto split = tmp_file("split.txt", kU24Split);
  auto r = run(
      {"matroid", "subdivide", "--matroid", "U24", "--pluecker", split.string()});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "pluecker: valid\n"
        "cells 2 trivial no\n"
        "12 13 14 23 24\n"
        "13 14 23 24 34\n"
        "matroidal: yes\n"
        "witness: none\n");
  auto again = run(
      {"matroid", "subdivide", "--matroid", "U24", "--pluecker", split.string()});
  CHECK(again.out == r.out);

  auto tree = tmp_file("tree.txt",
                       "pluecker U24\n12 : 3\n13 : 4\n14 : 5\n23 : 5\n24 : 6\n"
                       "34 : 7\n");
  auto t = run(
      {"matroid", "subdivide", "--matroid", "U24", "--pluecker", tree.string()});
  CHECK(t.code == 0);
  CHECK(t.out ==
        "pluecker: valid\n"
        "cells 1 trivial yes\n"
        "12 13 14 23 24 34\n"
        "matroidal: yes\n"
        "witness: x=(1, 2, 3, 4) c=0\n");

  auto raised = tmp_file(
      "raised.txt",
      "pluecker U24\n12 : 0\n13 : 0\n14 : 0\n23 : 0\n24 : 0\n34 : 1\n");
  auto b = run({"matroid", "subdivide", "--matroid", "U24", "--pluecker",
                raised.string()});
  CHECK(b.code == 0);
  CHECK(b.out ==
        "pluecker: invalid\n"
        "cells 4 trivial no\n"
        "12 13 14 34\n"
        "12 13 23 34\n"
        "12 14 24 34\n"
        "12 23 24 34\n"
        "matroidal: no\n"
        "witness: none\n");

  auto mismatched = tmp_file("mismatched.txt", kU24Split);
  auto bad = run({"matroid", "subdivide", "--matroid", "U25", "--pluecker",
                  mismatched.string()});
  CHECK(bad.code == 1);
}

TEST_CASE("profile report") {
  auto r = run(
      {"pasture", "profile", "--pasture", "U", "--fields", "5,7,11,13"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 44) ==
        "q=5 count=3\nq=7 count=5\nq=11 count=9\nq=13 co");
  CHECK(r.out.find("q=13 count=11\n") != std::string::npos);
  CHECK(r.out.find("growth exponent: 1.1") != std::string::npos);

  auto d = run({"pasture", "profile", "--pasture", "D", "--fields", "3,5,7"});
  CHECK(d.code == 0);
  CHECK(d.out ==
        "q=3 count=1\nq=5 count=1\nq=7 count=1\ngrowth exponent: 0.0000\n");
}

TEST_CASE("fiber reports") {
  auto map = tmp_file("ud.map", "map ud\nsource U\ntarget D\nT1 -> T\nT2 -> T\n");
  auto r = run({"pasture", "fibers", "--map", map.string(), "--field", "7"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "fiber over T1=2 T2=6: size 0\n"
        "fiber over T1=3 T2=5: size 0\n"
        "fiber over T1=4 T2=4: size 1: T=4\n"
        "fiber over T1=5 T2=3: size 0\n"
        "fiber over T1=6 T2=2: size 0\n");

  auto t0 = run({"pasture", "fibers", "--map", map.string(), "--tropical",
                 "--point", "3,3"});
  CHECK(t0.code == 0);
  CHECK(t0.out == "tropical fiber dim: 0\n");

  auto tneg = run({"pasture", "fibers", "--map", map.string(), "--tropical",
                   "--point", "1,2"});
  CHECK(tneg.code == 0);
  CHECK(tneg.out == "tropical fiber dim: -1 (empty)\n");

  auto arity = run({"pasture", "fibers", "--map", map.string(), "--tropical",
                    "--point", "3"});
  CHECK(arity.code == 3);

  auto badmap = tmp_file("dg.map", "map dg\nsource D\ntarget G\nT -> T\n");
  auto bad = run({"pasture", "fibers", "--map", badmap.string(), "--field",
                  "7"});
  CHECK(bad.code == 1);
  CHECK(!bad.err.empty());

  tmp_file("p7.txt", "F1pm( | 1+1+1+1+1+1+1)\n");
  tmp_file("k5.txt", "F1pm( | 1+1+1, 1+1+1+1+1)\n");
  auto stuck_map =
      tmp_file("p7k5.map", "map stuck\nsource p7.txt\ntarget k5.txt\n");
  auto stuck = run(
      {"pasture", "fibers", "--map", stuck_map.string(), "--field", "7"});
  CHECK(stuck.code == 2);
}

TEST_CASE("dressian report") {
  auto r = run({"matroid", "dressian", "--matroid", "U24"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 40) == "coords: 12 13 14 23 24 34\ndim 5 cells 3\n");

  auto cap = run({"matroid", "dressian", "--matroid", "F7"});
  CHECK(cap.code == 2);
  CHECK(!cap.err.empty());
}

TEST_CASE("algebra export") {
  auto r = run({"band", "algebra", "--pasture", "D", "--field", "QQ",
                "--dialect", "m2"});
  CHECK(r.code == 0);
  CHECK(r.out == "R = QQ[T,U]; I = ideal(T*U-1, 2*T-1);\n");

  auto s = run({"band", "algebra", "--pasture", "D", "--field", "F5",
                "--dialect", "singular"});
  CHECK(s.code == 0);
  CHECK(s.out == "ring R = 5, (T,U), dp; ideal I = T*U-1, 2*T-1;\n");

  auto g = run({"band", "algebra", "--pasture", "G"});
  CHECK(g.code == 0);
  CHECK(g.out == "ring QQ[T,U]; ideal (T*U-1, T^2-T-1);\n");

  auto bad = run({"band", "algebra", "--pasture", "D", "--dialect", "maple"});
  CHECK(bad.code == 3);
}

TEST_CASE("exit codes for bad invocations") {
  CHECK(run({}).code == 3);
  CHECK(run({"pasture"}).code == 3);
  CHECK(run({"pasture", "frobnicate"}).code == 3);
  CHECK(run({"pasture", "homs", "--pasture", "D"}).code == 3);
  CHECK(run({"pasture", "homs", "--field", "7"}).code == 3);
  CHECK(run({"pasture", "homs", "--pasture", "D", "--field", "6"}).code == 1);
  CHECK(run({"pasture", "homs", "--pasture", "D", "--field", "0"}).code == 1);
  CHECK(run({"pasture", "homs", "--pasture", "D", "--field", "x"}).code == 3);
  CHECK(run({"matroid", "rigid", "--matroid", "F7"}).code == 2);
  auto zeros = tmp_file(
      "u48.txt", [] {
        std::string s = "pluecker U48\n";
        auto m = uniform_matroid(4, 8);
        for (auto b : m.bases) s += subset_str(b, 8) + " : 0\n";
        return s;
      }());
  CHECK(run({"matroid", "subdivide", "--matroid", "U48", "--pluecker",
             zeros.string()})
            .code == 2);
}

TEST_SUITE_END();
