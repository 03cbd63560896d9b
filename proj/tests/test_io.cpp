#include <doctest.h>

#include <sstream>

#include "rasch/errors.hpp"
#include "rasch/response_io.hpp"
#include "rasch/rng.hpp"

using namespace rasch;

TEST_CASE("csv parsing maps NA to missing") {
  std::istringstream in("item1,item2\n1,0\n0,NA\n");
  const ResponseMatrix x = load_responses(in, FileFormat::csv);
  CHECK(x.n_users() == 2);
  CHECK(x.n_items() == 2);
  CHECK(x.at(0, 0) == Response::positive);
  CHECK(x.at(0, 1) == Response::negative);
  CHECK(x.at(1, 0) == Response::negative);
  CHECK(x.at(1, 1) == Response::missing);
  CHECK(x.item_ids() == std::vector<std::string>{"item1", "item2"});
}

TEST_CASE("dense-sentinel parsing maps -99999 to missing") {
  std::istringstream in("1,-99999,0\n");
  const ResponseMatrix x = load_responses(in, FileFormat::dense_sentinel);
  CHECK(x.n_users() == 1);
  CHECK(x.n_items() == 3);
  CHECK(x.at(0, 0) == Response::positive);
  CHECK(x.at(0, 1) == Response::missing);
  CHECK(x.at(0, 2) == Response::negative);
}

TEST_CASE("row of wrong width reports the offending line") {
  std::istringstream in("item1,item2\n1,0\n1,0,1\n");
  try {
    load_responses(in, FileFormat::csv);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("out-of-alphabet cell value is rejected") {
  std::istringstream csv("item1,item2\n1,2\n");
  CHECK_THROWS_AS(load_responses(csv, FileFormat::csv), ParseError);
  std::istringstream sentinel("1,-1\n");
  CHECK_THROWS_AS(load_responses(sentinel, FileFormat::dense_sentinel), ParseError);
}

TEST_CASE("single item column is rejected") {
  std::istringstream in("item1\n1\n");
  CHECK_THROWS_AS(load_responses(in, FileFormat::csv), ParseError);
}

TEST_CASE("missing file raises a contract error") {
  CHECK_THROWS_AS(load_responses_file("/no/such/file.csv", FileFormat::csv), ContractError);
}

namespace {

ResponseMatrix random_matrix(std::uint64_t seed, std::size_t n, std::size_t m) {
  ResponseMatrix x(n, m);
  SplitRng rng(seed);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t i = 0; i < m; ++i) {
      const double v = rng.next_unit();
      x.set(u, i, v < 0.3 ? Response::missing
                          : (v < 0.65 ? Response::negative : Response::positive));
    }
  }
  return x;
}

}  // namespace

TEST_CASE("save then load round-trips bit-exactly in both formats") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const ResponseMatrix x = random_matrix(seed, 7, 5);
    for (FileFormat format : {FileFormat::csv, FileFormat::dense_sentinel}) {
      std::ostringstream first;
      save_responses(x, first, format);
      std::istringstream back(first.str());
      const ResponseMatrix parsed = load_responses(back, format);
      std::ostringstream second;
      save_responses(parsed, second, format);
      CHECK(second.str() == first.str());
      if (format == FileFormat::csv) CHECK(parsed == x);
    }
  }
}

TEST_CASE("format names parse and print") {
  CHECK(parse_format_name("csv") == FileFormat::csv);
  CHECK(parse_format_name("dense-sentinel") == FileFormat::dense_sentinel);
  CHECK_THROWS_AS(parse_format_name("tsv"), ContractError);
  CHECK(format_name(FileFormat::dense_sentinel) == "dense-sentinel");
}
