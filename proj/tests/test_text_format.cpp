#include <ditlogic/error.hpp>
#include <ditlogic/text_format.hpp>

#include "doctest.h"

using namespace ditlogic;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::parse;
}

std::optional<std::size_t> position_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.position();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("partition text round trip") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& pi : enumerate_partitions(n)) {
      const auto text = format_partition(pi);
      CHECK(parse_partition(text, n) == pi);
    }
  }
  CHECK(format_partition(parse_partition(" 3,1 | 0 ,2 ")) == "0,2|1,3");
  CHECK(parse_partition("0|1|2,3", 4).size() == 4);
  CHECK(parse_partition("1|0").block_count() == 2);
}

TEST_CASE("partition parse errors") {
  CHECK(kind_of([] { parse_partition("   "); }) == ErrorKind::empty_input);
  CHECK(kind_of([] { parse_partition("0,1||2"); }) == ErrorKind::empty_block);
  CHECK(kind_of([] { parse_partition("0,1|1"); }) == ErrorKind::overlap);
  CHECK(kind_of([] { parse_partition("0|2"); }) == ErrorKind::coverage);
  CHECK(kind_of([] { parse_partition("0|5", 3); }) == ErrorKind::element_out_of_range);
  CHECK(kind_of([] { parse_partition("0,x|1"); }) == ErrorKind::parse);
  CHECK(position_of([] { parse_partition("0,x|1"); }) == std::optional<std::size_t>(2));
}

TEST_CASE("number lists") {
  const auto a = parse_number_list("1/2, 0.25 ,1/4");
  CHECK(a.has_fraction);
  REQUIRE(a.values.size() == 3);
  CHECK(a.values[0] == Rational(1, 2));
  CHECK(a.values[1] == Rational(1, 4));

  const auto b = parse_number_list("0.5,0.5");
  CHECK_FALSE(b.has_fraction);
  CHECK(to_doubles(b.values) == std::vector<double>{0.5, 0.5});

  CHECK(parse_number_list("2.5e-1").values[0] == Rational(1, 4));
  CHECK(kind_of([] { parse_number_list(""); }) == ErrorKind::empty_input);
  CHECK(kind_of([] { parse_number_list("0.5,,0.5"); }) == ErrorKind::parse);
  CHECK(kind_of([] { parse_number_list("1/0"); }) == ErrorKind::parse);
  CHECK(position_of([] { parse_number_list("0.5, abc"); }).has_value());
}

TEST_CASE("matrices") {
  const auto m = parse_matrix("1/4,1/4\n1/2,0\n");
  CHECK(m.has_fraction);
  REQUIRE(m.rows.size() == 2);
  CHECK(m.rows[1][0] == Rational(1, 2));

  const auto inline_rows = parse_matrix("0.25,0.25;0.25,0.25");
  CHECK(inline_rows.rows.size() == 2);
  CHECK(to_doubles(inline_rows.rows)[1][1] == 0.25);

  CHECK(kind_of([] { parse_matrix("0.5,0.5\n0.5"); }) == ErrorKind::parse);
  CHECK(kind_of([] { parse_matrix("\n\n"); }) == ErrorKind::empty_input);
}

TEST_CASE("rational text round trip") {
  for (const char* text : {"0", "1", "1/3", "-7/12", "123456789012345678901234567/2"}) {
    CHECK(to_string(parse_rational(text)) == text);
  }
  const auto nums = parse_number_list("1/2,1/3,1/6");
  std::string joined;
  for (const auto& v : nums.values) joined += (joined.empty() ? "" : ",") + to_string(v);
  CHECK(joined == "1/2,1/3,1/6");
  CHECK(to_string(parse_rational("0.125")) == "1/8");
}
