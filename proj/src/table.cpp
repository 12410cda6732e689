#include "mshuffle/table.hpp"

#include <sstream>
#include <stdexcept>

#include "mshuffle/group.hpp"
#include "mshuffle/shuffles.hpp"

namespace mshuffle {

std::vector<TableRow> shuffle_group_table(std::uint32_t max_deck) {
  if (max_deck < 4)
    throw std::invalid_argument("shuffle_group_table: max deck must be >= 4");
  std::vector<TableRow> rows;
  for (std::uint32_t deck = 4; deck <= max_deck; ++deck) {
    for (std::uint32_t m = 2; m <= deck / 2; ++m) {
      if (deck % m != 0)
        continue;
      const DeckParams params(m, deck / m);
      const BSGS chain =
          schreier_sims(deck, {in_shuffle(params), out_shuffle(params)});
      rows.push_back({deck, m, chain.order});
    }
  }
  return rows;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "deck,m,order\n";
  for (const TableRow& row : rows)
    os << row.deck << ',' << row.m << ',' << row.order.str() << '\n';
  return os.str();
}

} // namespace mshuffle
