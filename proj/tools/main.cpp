#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mshuffle/cayley.hpp"
#include "mshuffle/errors.hpp"
#include "mshuffle/group.hpp"
#include "mshuffle/structure.hpp"
#include "mshuffle/table.hpp"

using json = nlohmann::json;
using namespace mshuffle;

namespace {

constexpr int kExitVerdictFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

DeckParams deck_params_checked(std::uint32_t deck, std::uint32_t m) {
  if (m < 2)
    throw std::invalid_argument("m must be at least 2");
  if (deck == 0 || deck % m != 0)
    throw std::invalid_argument("m must divide the deck size");
  return DeckParams(m, deck / m);
}

int run_order(std::uint32_t deck, std::uint32_t m, const std::string& engine,
              bool as_json) {
  const DeckParams params = deck_params_checked(deck, m);
  const Perm out = out_shuffle(params);
  const Perm in = in_shuffle(params);

  std::string engine_used = engine;
  BigNat order;
  if (engine == "bfs") {
    const Enumeration e = bfs_enumerate(deck, {in, out});
    if (e.complete) {
      order = e.size();
    } else {
      std::cerr << "note: enumeration hit the element cap, "
                   "falling back to the chain engine\n";
      engine_used = "chain";
      order = schreier_sims(deck, {in, out}).order;
    }
  } else {
    order = schreier_sims(deck, {in, out}).order;
  }

  const BigNat out_order = element_order(out);
  const BigNat in_order = element_order(in);
  if (as_json) {
    json doc{{"schema_version", 1},
             {"deck", deck},
             {"m", m},
             {"engine", engine_used},
             {"order", order.str()},
             {"out_order", out_order.str()},
             {"in_order", in_order.str()}};
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "group <I_" << m << ",O_" << m << "> on deck " << deck << '\n'
              << "group order: " << order << '\n'
              << "element order of O_" << m << ": " << out_order << '\n'
              << "element order of I_" << m << ": " << in_order << '\n'
              << "engine: " << engine_used << '\n';
  }
  return 0;
}

int run_table(std::uint32_t max_deck, bool csv, bool as_json) {
  const std::vector<TableRow> rows = shuffle_group_table(max_deck);
  if (csv) {
    std::cout << table_csv(rows);
  } else if (as_json) {
    json rows_json = json::array();
    for (const TableRow& row : rows)
      rows_json.push_back(
          {{"deck", row.deck}, {"m", row.m}, {"order", row.order.str()}});
    json doc{{"schema_version", 1}, {"max_deck", max_deck}, {"rows", rows_json}};
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "deck  m  order\n";
    for (const TableRow& row : rows)
      std::cout << row.deck << '\t' << row.m << '\t' << row.order << '\n';
  }
  return 0;
}

int run_predict(std::uint32_t m, std::uint32_t k, std::uint32_t y,
                bool as_json) {
  const StructurePrediction p = predict(PowerDeckParams(m, k, y));
  if (as_json) {
    std::cout << to_json(p).dump(2) << '\n';
    return 0;
  }
  const std::uint32_t c = p.params.gcd_exponent_digits();
  std::cout << "deck " << m << "^" << k << " with " << m << "^" << y
            << "-shuffles (c=" << c << ")\n"
            << "structure: (Z2)^" << p.abelian_rank << " : Z" << p.t << " ("
            << action_name(p.action) << " action)\n"
            << "predicted order: " << p.predicted_order << '\n';
  return 0;
}

int run_verify(std::uint32_t m, std::uint32_t k, std::uint32_t y,
               bool as_json) {
  const VerificationReport r = verify(PowerDeckParams(m, k, y));
  if (as_json) {
    std::cout << to_json(r).dump(2) << '\n';
  } else {
    auto yes_no = [](bool b) { return b ? "yes" : "NO"; };
    std::cout << "computed order: " << r.computed_order << '\n'
              << "order matches prediction: " << yes_no(r.order_matches)
              << '\n';
    for (const GeneratorCheck& c : r.generator_checks)
      std::cout << c.label << ": involution " << yes_no(c.involution)
                << ", digit action " << yes_no(c.digit_action_matches) << '\n';
    std::cout << "generators commute: " << yes_no(r.commutation_ok) << '\n'
              << "conjugation action: " << yes_no(r.conjugation_ok) << '\n'
              << "product relation: " << yes_no(r.product_relation_ok) << '\n'
              << "complement factorization: " << yes_no(r.complement_ok)
              << '\n'
              << "verdict: " << (r.verdict ? "PASS" : "FAIL") << '\n';
  }
  return r.verdict ? 0 : kExitVerdictFalse;
}

int run_cayley(std::uint32_t m, std::uint32_t k, std::uint32_t y,
               const std::string& out_path) {
  const PowerDeckParams params(m, k, y);
  const CayleyGraph graph = build_cayley(
      params.deck_size(),
      {{"O", power_shuffle(params, ShuffleKind::Out), ShuffleKind::Out},
       {"I", power_shuffle(params, ShuffleKind::In), ShuffleKind::In}});
  const std::string dot = to_dot(graph);

  std::ostream& info = out_path == "-" ? std::cerr : std::cout;
  info << "vertices: " << graph.vertices.size() << '\n'
       << "edges: " << graph.edges.size() << '\n';
  if (out_path == "-") {
    std::cout << dot;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file)
      throw std::invalid_argument("cannot open output file: " + out_path);
    file << dot;
    info << "wrote " << out_path << '\n';
  }
  return 0;
}

int run_trace(std::uint32_t deck, std::uint32_t m, const std::string& seq,
              std::uint32_t card) {
  const DeckParams params = deck_params_checked(deck, m);
  if (card >= deck)
    throw std::invalid_argument("card index out of range");
  if (seq.empty())
    throw std::invalid_argument("shuffle sequence is empty");
  for (char ch : seq)
    if (ch != 'O' && ch != 'I')
      throw std::invalid_argument("shuffle sequence may only contain O and I");

  const Perm out = out_shuffle(params);
  const Perm in = in_shuffle(params);
  Perm::index_t position = card;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    position = seq[i] == 'O' ? out(position) : in(position);
    std::cout << seq.substr(0, i + 1) << ' ' << position << '\n';
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized perfect shuffle groups: orders, structure, "
               "verification and Cayley graphs"};
  app.require_subcommand(1);

  std::uint32_t deck = 0, m = 0, k = 0, y = 0, card = 0, max_deck = 0;
  std::string engine = "chain", seq, out_path;
  bool as_json = false, as_csv = false;

  CLI::App* order = app.add_subcommand(
      "order", "order of <I_m, O_m> on a deck of N cards");
  order->add_option("--deck", deck, "deck size N")->required();
  order->add_option("--m", m, "number of stacks")->required();
  order->add_option("--engine", engine, "bfs or chain (default chain)")
      ->check(CLI::IsMember({"bfs", "chain"}));
  order->add_flag("--json", as_json, "emit JSON");

  CLI::App* table = app.add_subcommand(
      "table", "orders of all m-shuffle groups for decks 4..D");
  table->add_option("--max-deck", max_deck, "largest deck size")->required();
  CLI::Option* csv_opt = table->add_flag("--csv", as_csv, "emit CSV");
  table->add_flag("--json", as_json, "emit JSON")->excludes(csv_opt);

  CLI::App* predict_cmd = app.add_subcommand(
      "predict", "predicted group structure for m^y-shuffles on m^k cards");
  predict_cmd->add_option("--m", m, "digit base")->required();
  predict_cmd->add_option("--k", k, "digit count (deck m^k)")->required();
  predict_cmd->add_option("--y", y, "shuffle exponent, 1 <= y < k")->required();
  predict_cmd->add_flag("--json", as_json, "emit JSON");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "verify the predicted structure against the computed group");
  verify_cmd->add_option("--m", m, "digit base")->required();
  verify_cmd->add_option("--k", k, "digit count (deck m^k)")->required();
  verify_cmd->add_option("--y", y, "shuffle exponent, 1 <= y < k")->required();
  verify_cmd->add_flag("--json", as_json, "emit JSON");

  CLI::App* cayley_cmd = app.add_subcommand(
      "cayley", "export the Cayley graph of <I_{m^y}, O_{m^y}> as DOT");
  cayley_cmd->add_option("--m", m, "digit base")->required();
  cayley_cmd->add_option("--k", k, "digit count (deck m^k)")->required();
  cayley_cmd->add_option("--y", y, "shuffle exponent, 1 <= y < k")->required();
  cayley_cmd->add_option("--out", out_path, "output path, or - for stdout")
      ->required();

  CLI::App* trace = app.add_subcommand(
      "trace", "positions of one card along a shuffle sequence");
  trace->add_option("--deck", deck, "deck size N")->required();
  trace->add_option("--m", m, "number of stacks")->required();
  trace->add_option("--seq", seq, "shuffle word over O and I, left to right")
      ->required();
  trace->add_option("--card", card, "card index to follow")->required();

  int rc = 0;
  order->callback([&] { rc = run_order(deck, m, engine, as_json); });
  table->callback([&] { rc = run_table(max_deck, as_csv, as_json); });
  predict_cmd->callback([&] { rc = run_predict(m, k, y, as_json); });
  verify_cmd->callback([&] { rc = run_verify(m, k, y, as_json); });
  cayley_cmd->callback([&] { rc = run_cayley(m, k, y, out_path); });
  trace->callback([&] { rc = run_trace(deck, m, seq, card); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return rc;
}
