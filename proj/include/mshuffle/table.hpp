#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mshuffle/bigint.hpp"

namespace mshuffle {

struct TableRow {
  std::uint32_t deck;
  std::uint32_t m;
  BigNat order;
};

// Orders of <I_m, O_m> for every deck size N in 4..max_deck and every
// m with m | N and 2 <= m <= N/2, ordered by (N, m). Prime deck sizes
// contribute no rows.
std::vector<TableRow> shuffle_group_table(std::uint32_t max_deck);

// "deck,m,order" header plus one decimal row per entry.
std::string table_csv(const std::vector<TableRow>& rows);

} // namespace mshuffle
