#include <doctest.h>

#include <random>
#include <sstream>

#include "ltf/errors.hpp"
#include "ltf/serialize.hpp"
#include "helpers.hpp"

using namespace ltf;
using namespace ltf::test;

TEST_CASE("element round trip") {
  std::mt19937_64 rng(31);
  for (const Field* F : {&Field::eisenstein(3, 2), &Field::unramified(2, 3), &Field::rational(5)}) {
    for (int t = 0; t < 50; ++t) {
      const auto x = random_elem(*F, rng);
      CHECK(parse_elem(*F, format_elem(x)) == x);
    }
  }
}

TEST_CASE("element grammar") {
  const Field& F = Field::eisenstein(3, 2);
  CHECK(parse_elem(F, "1/2;-3") == elem(F, {Q(1, 2), Q(-3)}));
  CHECK(parse_elem(F, " 2/4 ; +5/1 ") == elem(F, {Q(1, 2), Q(5)}));
  CHECK(parse_elem(Field::rational(3), "7") == rat(Field::rational(3), 7));
  CHECK_THROWS_AS(parse_elem(F, "1/2"), ValidationError);
  CHECK_THROWS_AS(parse_elem(F, "1;2;3"), ValidationError);
  CHECK_THROWS_AS(parse_elem(F, "1/0;1"), ValidationError);
  CHECK_THROWS_AS(parse_elem(F, "a;1"), ValidationError);
  CHECK_THROWS_AS(parse_elem(F, "1/-2;1"), ValidationError);
  CHECK_THROWS_AS(parse_elem(F, "1;2;"), ValidationError);
  CHECK_THROWS_AS(parse_elem(F, ""), ValidationError);
}

TEST_CASE("polynomial formatting") {
  const Field& F = Field::rational(3);
  CHECK(format_poly(PolyL(F)) == "0/1");
  CHECK(poly_csv(X(F, 2) * rat(F, 1, 2) + PolyL::constant(rat(F, -1))) == "degree,coeff\n0,-1/1\n1,0/1\n2,1/2\n");
}

TEST_CASE("polynomial CSV round trip") {
  std::mt19937_64 rng(37);
  const Field& F = Field::eisenstein(2, 3);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_poly(F, rng, static_cast<std::size_t>(t));
    std::istringstream in(poly_csv(g));
    CHECK(read_poly_csv(F, in) == g);
  }
}

TEST_CASE("polynomial CSV validation") {
  const Field& F = Field::rational(3);
  auto read = [&](const std::string& s) {
    std::istringstream in(s);
    return read_poly_csv(F, in);
  };
  CHECK(read("degree,coeff\n3,2\n0,1\n") == X(F, 3) * rat(F, 2) + PolyL::constant(F.one()));
  CHECK(read("\ndegree,coeff\n\n1,1/2\n") == X(F) * rat(F, 1, 2));
  CHECK(read("degree,coeff\n").is_zero());
  CHECK_THROWS_AS(read("deg,c\n0,1\n"), ValidationError);
  CHECK_THROWS_AS(read("degree,coeff\n0,1\n0,2\n"), ValidationError);
  CHECK_THROWS_AS(read("degree,coeff\n-1,1\n"), ValidationError);
  CHECK_THROWS_AS(read("degree,coeff\n1234567,1\n"), ValidationError);
  CHECK_THROWS_AS(read("degree,coeff\n0,1,2\n"), ValidationError);
  CHECK_THROWS_AS(read("degree,coeff\n0,x\n"), ValidationError);
}

TEST_CASE("CSV line splitting") {
  CHECK(split_csv_line("a, b ,c") == std::vector<std::string>{"a", "b", "c"});
  CHECK(split_csv_line("a,,") == std::vector<std::string>{"a", "", ""});
  CHECK(split_csv_line("").empty());
}
