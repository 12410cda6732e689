#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mshuffle/bigint.hpp"
#include "mshuffle/perm.hpp"
#include "mshuffle/shuffles.hpp"

namespace mshuffle {

enum class ActionKind { CyclicShift, Twisted };

// The group predicted for in/out base^exponent-shuffles on base^digits
// cards: (Z_2)^abelian_rank acted on by Z_t, where t = digits/c and
// c = gcd(exponent, digits). The rank is t when exponent/c is odd and
// t-1 when it is even; the order is 2^abelian_rank * t. Independent of
// the value of `base`.
struct StructurePrediction {
  PowerDeckParams params;
  std::uint32_t t;
  std::uint32_t abelian_rank;
  ActionKind action;
  BigNat predicted_order;
};

StructurePrediction predict(const PowerDeckParams& p);

struct GeneratorCheck {
  std::string label;
  bool involution = false;
  bool digit_action_matches = false;
};

// Ledger of every relation check run by verify(), plus the independently
// computed group order. `verdict` is the conjunction of all checks.
struct VerificationReport {
  PowerDeckParams params;
  BigNat computed_order;
  bool order_matches = false;
  std::vector<GeneratorCheck> generator_checks;
  bool commutation_ok = false;
  bool conjugation_ok = false;
  bool product_relation_ok = false; // vacuously true in the odd case
  bool complement_ok = false;
  bool verdict = false;
};

// Mechanically certifies the predicted semidirect-product structure:
//  (a) Schreier-Sims order of <I_{m^y}, O_{m^y}> equals the prediction,
//  (b) each B_j / C_j generator is an involution with its exact digit action,
//  (c) all generator pairs commute,
//  (d) conjugation by the reduced out shuffle realizes the predicted action
//      (including the wrap case),
//  (e) even case: the ordered product of all C_j is the identity,
//  (f) |<generators>| * |<O_{m^y}>| equals the computed order.
// Generators are built over the base-m^c digit alphabet, i.e. for the
// equivalent (m^c, k/c, y/c) problem.
VerificationReport verify(const PowerDeckParams& p);

// True iff dest[i] + dest[N-1-i] == N-1 for all i. For odd N this forces
// the middle card to stay fixed.
bool central_symmetry(const Perm& p);

// n! * 2^n: the order of the group of all centrally symmetric
// permutations of 2n (or 2n+1) cards, an upper bound for every shuffle
// group on such decks.
BigNat symmetry_bound(std::uint32_t n);

std::string action_name(ActionKind a);

nlohmann::json to_json(const StructurePrediction& p);
nlohmann::json to_json(const VerificationReport& r);

} // namespace mshuffle
