#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "support/subprocess.hpp"
#include "support/table_fixture.hpp"

using ktile_tests::CmdResult;
using ktile_tests::ktile_bin;
using ktile_tests::run_cmd;

TEST_CASE("table default run reproduces the reference values byte-exactly") {
  CmdResult r = run_cmd(ktile_bin() + " table");
  CHECK(r.exit_code == 0);
  CHECK(r.out == ktile_tests::kGoldenTableText);
}

TEST_CASE("table with a single column") {
  CmdResult r = run_cmd(ktile_bin() + " table --n 0..0");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "n       0\n"
        "F_n     1\n"
        "F(3,n)  1\n"
        "F(4,n)  1\n"
        "L_n     2\n"
        "L(3,n)  1\n"
        "L(4,n)  1\n");
}

TEST_CASE("table csv format") {
  CmdResult r = run_cmd(ktile_bin() + " table --n 9..11 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "n,F_n,F(3,n),F(4,n),L_n,L(3,n),L(4,n)\n"
        "9,89,41,26,76,31,19\n"
        "10,144,60,36,123,46,26\n"
        "11,233,88,50,199,67,34\n");
}

TEST_CASE("table json format") {
  CmdResult r = run_cmd(ktile_bin() + " table --n 10..11 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"label\": \"L(3,n)\"") != std::string::npos);
  CHECK(r.out.find("\"144\"") != std::string::npos);
  CHECK(r.out.find("\"199\"") != std::string::npos);
}

TEST_CASE("table rejects bad ranges") {
  CHECK(run_cmd(ktile_bin() + " table --n 5..2 2>/dev/null").exit_code == 2);
  CHECK(run_cmd(ktile_bin() + " table --n -3 2>/dev/null").exit_code == 2);
}

TEST_CASE("enumerate streams codes with a trailing count") {
  CmdResult r = run_cmd(ktile_bin() + " enumerate --class a --k 2 --n 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "bg\nbww\nwbw\ncount=3\n");

  r = run_cmd(ktile_bin() + " enumerate --class b --k 2 --n 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "bgww\nbwgw\nbwwg\nbwwww\nwbgw\nwbwg\nwbwww\ncount=7\n");

  r = run_cmd(ktile_bin() + " enumerate --class a --k 3 --n 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "b\ncount=1\n");
}

TEST_CASE("enumeration limit handling") {
  CHECK(run_cmd(ktile_bin() + " enumerate --class a --k 2 --n 30 2>/dev/null")
            .exit_code == 2);
  CHECK(run_cmd("KTILE_ENUM_LIMIT=10 " + ktile_bin() +
                " enumerate --class a --k 2 --n 12 2>/dev/null")
            .exit_code == 2);
  CmdResult r = run_cmd("KTILE_ENUM_LIMIT=30 " + ktile_bin() +
                        " enumerate --class a --k 2 --n 30 | tail -1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "count=2178309\n");
  CHECK(run_cmd("KTILE_ENUM_LIMIT=abc " + ktile_bin() +
                " enumerate --class a --k 2 --n 5 2>/dev/null")
            .exit_code == 2);
}

TEST_CASE("decompose prints a single-line record") {
  CmdResult r =
      run_cmd(ktile_bin() + " decompose --kind rightmost-gray --k 2 --code bwgw");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "kind=rightmost-gray k=2 n=4 code=bwgw remainder=bw removed=gw j=1\n");

  r = run_cmd(ktile_bin() + " decompose --kind before-tail --k 3 --code wwbgww");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "kind=before-tail k=3 n=7 code=wwbgww remainder=wwbww removed=g "
        "insert_index=3 remainder_type_b=1\n");

  CHECK(run_cmd(ktile_bin() +
                " decompose --kind rightmost-gray --k 2 --code bww 2>/dev/null")
            .exit_code == 2);
  CHECK(run_cmd(ktile_bin() +
                " decompose --kind sideways --k 2 --code bww 2>/dev/null")
            .exit_code == 2);
}

TEST_CASE("oracle agrees on a small grid") {
  CmdResult r = run_cmd(ktile_bin() + " oracle | tail -1");  // k 2..5, n 0..14
  CHECK(r.exit_code == 0);
  CHECK(r.out == "cells=60 mismatches=0\n");

  r = run_cmd(ktile_bin() + " oracle --k 2..4 --n 0..10 | tail -1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "cells=33 mismatches=0\n");

  r = run_cmd(ktile_bin() + " oracle --k 3 --n 10 | head -1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "k=3 n=10 type_a=60 fib=60 type_b=46 lucas=46 ok\n");

  r = run_cmd(ktile_bin() + " oracle --k 4 --n 9");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "k=4 n=9 type_a=26 fib=26 type_b=19 lucas=19 ok\n"
        "cells=1 mismatches=0\n");

  CHECK(run_cmd(ktile_bin() + " oracle --k 1..3 --n 0..4 2>/dev/null")
            .exit_code == 2);
}

TEST_CASE("verify exit codes") {
  CHECK(run_cmd(ktile_bin() +
                " verify --ids I-3.7 --k 2..4 --n-max 30 >/dev/null")
            .exit_code == 0);
  CHECK(run_cmd(ktile_bin() +
                " verify --ids I-4.2p --k 2 --n-max 10 >/dev/null")
            .exit_code == 1);
  CHECK(run_cmd(ktile_bin() +
                " verify --ids I-3FN --k 2 --n-max 30 >/dev/null")
            .exit_code == 0);
  CHECK(run_cmd(ktile_bin() +
                " verify --ids I-bogus --n-max 5 2>/dev/null")
            .exit_code == 2);
}

TEST_CASE("verify output formats") {
  CmdResult r = run_cmd(ktile_bin() +
                        " verify --ids I-4.2p --k 2 --n-max 6 --format csv");
  CHECK(r.exit_code == 1);
  CHECK(r.out ==
        "identity_id,variant,k,n,lhs,rhs,matched\n"
        "I-4.2p,as-printed,2,4,8,5,false\n"
        "I-4.2p,as-printed,2,5,13,9,false\n"
        "I-4.2p,as-printed,2,6,21,16,false\n");

  r = run_cmd(ktile_bin() +
              " verify --ids I-3.1 --k 2 --n-max 8 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"all_matched\": true") != std::string::npos);

  r = run_cmd(ktile_bin() + " verify --list");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("I-3.8") != std::string::npos);
  CHECK(r.out.find("I-4.5p") != std::string::npos);

  // The classical small-index reading is selectable and still fails.
  r = run_cmd(ktile_bin() +
              " verify --ids I-4.5p --k 2 --n-max 12 --lucas-convention "
              "classic --format csv");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("I-4.5p,as-printed,2,5,11,11,true") != std::string::npos);
  CHECK(r.out.find("I-4.5p,as-printed,2,6,18,19,false") != std::string::npos);
}

TEST_CASE("reports can be written to a file") {
  const std::string path = "ktile_report.tmp";
  std::remove(path.c_str());
  CmdResult r = run_cmd(ktile_bin() +
                        " verify --ids I-3.1 --k 2 --n-max 8 --format csv "
                        "--out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "identity_id,variant,k,n,lhs,rhs,matched");
  std::remove(path.c_str());
}

TEST_CASE("identical runs produce identical bytes") {
  const std::string cmd = ktile_bin() +
                          " verify --ids I-3.6,I-4.2c --k 2..4 --n-max 25 "
                          "--explore --format json";
  CmdResult a = run_cmd(cmd);
  CmdResult b = run_cmd(cmd);
  CHECK(a.exit_code == b.exit_code);
  CHECK(a.out == b.out);
}

TEST_CASE("cache files round trip through the CLI") {
  const std::string cache = "ktile_cli_cache.tmp";
  std::remove(cache.c_str());
  const std::string cmd = ktile_bin() +
                          " verify --ids I-3.7,I-4.2c --k 2..4 --n-max 30 "
                          "--format csv --cache-file " + cache;
  CmdResult cold = run_cmd(cmd);
  CHECK(cold.exit_code == 0);
  std::ifstream saved(cache);
  REQUIRE(saved.good());
  std::string first_line;
  std::getline(saved, first_line);
  CHECK(first_line.rfind("fib,", 0) == 0);

  CmdResult warm = run_cmd(cmd);
  CHECK(warm.exit_code == 0);
  CHECK(warm.out == cold.out);

  CmdResult fresh = run_cmd(cmd + " --no-cache");
  CHECK(fresh.out == cold.out);

  CmdResult table_warm =
      run_cmd(ktile_bin() + " table --cache-file " + cache);
  CHECK(table_warm.exit_code == 0);
  CHECK(table_warm.out == ktile_tests::kGoldenTableText);
  std::remove(cache.c_str());
}
