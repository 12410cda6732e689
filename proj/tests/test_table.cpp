#include <doctest.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mshuffle/table.hpp"

using namespace mshuffle;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

} // namespace

TEST_CASE("table rows up to deck 16") {
  const auto rows = shuffle_group_table(16);
  REQUIRE(rows.size() == 19);

  // ordered by (deck, m); prime decks and m > deck/2 are absent
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const bool ordered = rows[i - 1].deck < rows[i].deck ||
                         (rows[i - 1].deck == rows[i].deck &&
                          rows[i - 1].m < rows[i].m);
    CHECK(ordered);
  }
  for (const TableRow& row : rows) {
    CHECK(row.deck % row.m == 0);
    CHECK(row.m >= 2);
    CHECK(row.m <= row.deck / 2);
  }

  CHECK(rows.front().deck == 4);
  CHECK(rows.front().m == 2);
  CHECK(rows.front().order == 8);
  CHECK(rows.back().deck == 16);
  CHECK(rows.back().m == 8);
  CHECK(rows.back().order == 64);
}

TEST_CASE("table matches the committed golden csv") {
  const std::string golden =
      read_file(std::string(MSHUFFLE_TEST_DATA_DIR) + "/table16.csv");
  CHECK(table_csv(shuffle_group_table(16)) == golden);
}

TEST_CASE("smallest table") {
  const auto rows = shuffle_group_table(4);
  REQUIRE(rows.size() == 1);
  CHECK(rows.front().deck == 4);
  CHECK(rows.front().m == 2);
  CHECK(rows.front().order == 8);
  CHECK(table_csv(rows) == "deck,m,order\n4,2,8\n");
  CHECK_THROWS_AS(shuffle_group_table(3), std::invalid_argument);
}
