#include <doctest.h>

#include <sstream>

#include "catmat/construct.hpp"
#include "catmat/error.hpp"
#include "catmat/witness_io.hpp"

using namespace catmat;

TEST_SUITE("witness_io") {
  TEST_CASE("canonical text of the trivial category") {
    CHECK(to_witness_string(trivial_category(), {"hello"})
          == "catmat-witness v1\n# hello\nobjects 1\nhom 1 1 1\nid 1 1\ncomp 1 1 1 1 1 1\n");
  }

  TEST_CASE("record order") {
    auto text = to_witness_string(construct_witness(PosMatrix{{3, 1}, {2, 1}}));
    std::istringstream in(text);
    std::string        line;
    std::vector<std::string> comps;
    while (std::getline(in, line))
      if (line.rfind("comp", 0) == 0) comps.push_back(line);
    // comp i j k f g r, lexicographic in (i, j, k, f, g)
    auto key = [](std::string const& l) {
      std::istringstream s(l.substr(5));
      std::vector<int>   v(5);
      for (auto& x : v) s >> x;
      return v;
    };
    for (std::size_t a = 1; a < comps.size(); ++a) CHECK(key(comps[a - 1]) < key(comps[a]));
    CHECK(text.find("hom 1 1 3\nhom 1 2 1\nhom 2 1 2\nhom 2 2 1\n") != std::string::npos);
  }

  TEST_CASE("round trip") {
    for (auto const& m : {PosMatrix{{1, 2, 2}, {2, 5, 4}, {2, 4, 5}}, PosMatrix{{2, 2}, {2, 2}},
                          PosMatrix{{4, 1, 3}, {2, 2, 1}, {1, 5, 3}}}) {
      auto c = construct_witness(m);
      auto back = parse_witness(to_witness_string(c));
      CHECK(back == c);
      CHECK(verify(back, m).ok());
    }
  }

  TEST_CASE("records in any order, blank lines and comments") {
    std::string text =
        "catmat-witness v1\n\n"
        "comp 1 1 1 1 1 1\n"
        "# note\n"
        "id 1 1\n"
        "hom 1 1 1\n"
        "objects 1\n";
    CHECK(parse_witness(text) == trivial_category());
  }

  TEST_CASE("undefined composites are written as '?' and rejected on read") {
    SemiCategory s(1, {1});
    FinCategory  c(s, {0});
    auto         text = to_witness_string(c);
    CHECK(text.find("comp 1 1 1 1 1 ?") != std::string::npos);
    CHECK_THROWS_AS(parse_witness(text), ParseError);
  }

  TEST_CASE("malformed witness files") {
    std::string const good = to_witness_string(trivial_category());
    CHECK_NOTHROW(parse_witness(good));
    CHECK_THROWS_AS(parse_witness(""), ParseError);
    CHECK_THROWS_AS(parse_witness("objects 1\nhom 1 1 1\nid 1 1\ncomp 1 1 1 1 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_witness("catmat-witness v2\nobjects 1\n"), ParseError);
    // duplicate record
    CHECK_THROWS_AS(parse_witness(good + "comp 1 1 1 1 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_witness(good + "hom 1 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_witness(good + "objects 1\n"), ParseError);
    // missing records
    CHECK_THROWS_AS(parse_witness("catmat-witness v1\nobjects 1\nhom 1 1 1\nid 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_witness("catmat-witness v1\nobjects 1\nhom 1 1 1\ncomp 1 1 1 1 1 1\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_witness("catmat-witness v1\nhom 1 1 1\nid 1 1\ncomp 1 1 1 1 1 1\n"),
                    ParseError);
    // bad arity, indices and keywords
    CHECK_THROWS_AS(parse_witness("catmat-witness v1\nobjects 1\nhom 1 1\nid 1 1\ncomp 1 1 1 1 1 1\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_witness("catmat-witness v1\nobjects 1\nhom 1 2 1\nhom 1 1 1\nid 1 1\ncomp 1 1 1 1 1 1\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_witness("catmat-witness v1\nobjects 1\nhom 1 1 1\nid 1 2\ncomp 1 1 1 1 1 1\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_witness("catmat-witness v1\nobjects 1\nhom 1 1 1\nid 1 1\ncomp 1 1 1 2 1 1\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_witness("catmat-witness v1\nobjects 1\nhom 1 1 1\nid 1 1\ncomp 1 1 1 1 1 0\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_witness(good + "morph 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_witness("catmat-witness v1\nobjects x\n"), ParseError);
    CHECK_THROWS_AS(read_witness_file("/nonexistent/witness.txt"), ParseError);
  }

  TEST_CASE("out-of-range composites parse and then fail verify") {
    auto c = parse_witness("catmat-witness v1\nobjects 1\nhom 1 1 1\nid 1 1\ncomp 1 1 1 1 1 2\n");
    auto r = verify(c);
    REQUIRE_FALSE(r.ok());
    CHECK(std::holds_alternative<ClosureViolation>(r.violations[0]));
  }
}
