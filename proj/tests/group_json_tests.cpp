#include "qga/group_json.hpp"
#include "qga/families.hpp"

#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

using namespace qga;

namespace {

std::string temp_path(const char* name) {
  return std::string("qga_test_") + name + ".json";
}

struct TempFile {
  std::string path;
  TempFile(const char* name, const std::string& content) : path(temp_path(name)) {
    std::ofstream f(path);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_SUITE("group_json") {

TEST_CASE("cayley table parse") {
  Group g = parse_group_json(R"({
    "format": "cayley",
    "order": 4,
    "table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]
  })");
  CHECK(g.order() == 4);
  CHECK(g.is_abelian());
  CHECK(g.exponent() == 2);
}

TEST_CASE("permutation generators parse") {
  Group g = parse_group_json(R"({
    "format": "perm",
    "degree": 3,
    "generators": [[1,0,2],[1,2,0]]
  })");
  CHECK(g.order() == 6);
  CHECK_FALSE(g.is_abelian());
}

TEST_CASE("serialize and reparse") {
  Group d8 = build_family(parse_family_spec("dihedral:8"));
  std::string text = serialize_group(d8);
  Group back = parse_group_json(text);
  CHECK(back.order() == d8.order());
  CHECK(back.is_abelian() == d8.is_abelian());
  CHECK(back.exponent() == d8.exponent());
  // serialization is deterministic
  CHECK(serialize_group(d8) == text);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_group_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_json(R"({"format": "nosuch"})"), std::invalid_argument);
  // wrong row length
  CHECK_THROWS_AS(parse_group_json(R"({
    "format": "cayley", "order": 2, "table": [[0,1],[1]]
  })"),
                  std::invalid_argument);
  // repeated entry in a row
  CHECK_THROWS_WITH_AS(parse_group_json(R"({
    "format": "cayley", "order": 3, "table": [[0,1,2],[1,0,0],[2,0,1]]
  })"),
                       "group table is not a Latin square", std::invalid_argument);
  // generator out of range
  CHECK_THROWS_AS(parse_group_json(R"({
    "format": "perm", "degree": 2, "generators": [[0,2]]
  })"),
                  std::invalid_argument);
}

TEST_CASE("permutation closure respects the cap") {
  ParseOptions opts;
  opts.cap = 5;
  CHECK_THROWS_AS(parse_group_json(R"({
    "format": "perm", "degree": 6,
    "generators": [[1,2,3,4,5,0]]
  })",
                                   opts),
                  std::invalid_argument);
}

TEST_CASE("file round trip and missing file") {
  Group q8 = build_family(parse_family_spec("quaternion:8"));
  TempFile f("roundtrip", serialize_group(q8));
  Group back = load_group_file(f.path);
  CHECK(back.order() == 8);
  CHECK(back.exponent() == 4);
  CHECK_THROWS_AS(load_group_file("definitely_missing_file.json"), std::invalid_argument);
}

}
