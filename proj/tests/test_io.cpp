#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "lfc/errors.hpp"
#include "lfc/generate.hpp"
#include "lfc/io.hpp"
#include "lfc/tower.hpp"
#include "support.hpp"

using namespace lfc;
using namespace lfc::test;

TEST_CASE("parse a plain complex") {
  const auto f = parse_complex(R"({"vertices": ["a","b","c"], "maximal_simplices": [[0,1,2]]})");
  CHECK(f.complex == make({{"a", "b", "c"}}));
  const auto listed = parse_complex(R"({"vertices": ["a","b","c"], "simplices": [[0,1],[1,2]]})");
  CHECK(listed.complex == make({{"a", "b"}, {"b", "c"}}));
  const auto strict = parse_complex(R"({"vertices": ["a","b","c"], "simplices": [[0,1,2]]})", {true});
  CHECK_FALSE(validate(strict.complex).closed);
  const auto nested = parse_complex(R"({"vertices": ["a","b","c"], "maximal_simplices": [[0,1],[0,1,2]]})", {true});
  CHECK(nested.strict_violations.size() == 1);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(parse_complex("{"), InputError);
  CHECK_THROWS_AS(parse_complex(R"({"vertices": ["a"], "maximal_simplices": [[0,3]]})"), InputError);
  CHECK_THROWS_AS(parse_complex(R"({"vertices": ["a","b"], "maximal_simplices": [[]]})"), InputError);
  CHECK_THROWS_AS(parse_complex(R"({"vertices": ["a","b"], "maximal_simplices": [[1,1]]})"), InputError);
  CHECK_THROWS_AS(parse_complex(R"({"vertices": ["a","a"], "maximal_simplices": [[0]]})"), InputError);
  CHECK_THROWS_AS(parse_complex(R"({"vertices": ["a"], "level": 1, "maximal_simplices": [[0]]})"), InputError);
  CHECK_THROWS_AS(parse_complex(R"({"vertices": ["a"], "level": 1, "points": [[0,0],[0]], "maximal_simplices": [[0]]})"),
                  InputError);
}

TEST_CASE("round trip and byte stability") {
  std::vector<Complex> corpus = {fixture("torus7"), fixture("klein8"), Complex(abc(), 0), shelled_tree(3, 4, 9)};
  const auto loc = localize(share(fixture("rp2_6")));
  corpus.push_back(*loc.complex);
  corpus.push_back(*loc.tower.levels[1].prime);
  for (const auto& c : corpus) {
    const std::string text = complex_to_text(c, {{"note", "x"}});
    const auto back = parse_complex(text);
    CHECK(back.complex == c);
    CHECK(back.metadata["note"] == "x");
    CHECK(complex_to_text(back.complex, back.metadata) == text);
  }
  CHECK(complex_to_text(*localize(share(fixture("rp2_6"))).complex) == complex_to_text(*loc.complex));
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "lfc_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "torus.json";
  write_text_file(path, complex_to_text(fixture("torus7")));
  CHECK(read_complex_file(path).complex == fixture("torus7"));
  CHECK_THROWS_AS(read_complex_file(dir / "missing.json"), InputError);
  std::filesystem::remove_all(dir);
}
