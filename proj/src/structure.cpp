#include "mshuffle/structure.hpp"

#include <cstdint>

#include "mshuffle/group.hpp"

namespace mshuffle {

StructurePrediction predict(const PowerDeckParams& p) {
  const std::uint32_t c = p.gcd_exponent_digits();
  const std::uint32_t t = p.digits / c;
  const bool odd = (p.exponent / c) % 2 == 1;
  const std::uint32_t rank = odd ? t : t - 1;
  BigNat order = BigNat(1) << rank;
  order *= t;
  return StructurePrediction{
      p, t, rank, odd ? ActionKind::CyclicShift : ActionKind::Twisted,
      std::move(order)};
}

namespace {

// Does `g` act on base-m digit tuples by flipping exactly the 1-based
// positions in `flipped` (x -> m-1-x) and nothing else?
bool flips_exactly(const Perm& g, std::uint32_t m, std::uint32_t k,
                   const std::vector<std::uint32_t>& flipped) {
  for (Perm::index_t i = 0; i < g.degree(); ++i) {
    DigitVector expected = index_to_digits(i, m, k);
    for (std::uint32_t pos : flipped)
      expected.digits[pos - 1] = m - 1 - expected.digits[pos - 1];
    if (index_to_digits(g(i), m, k) != expected)
      return false;
  }
  return true;
}

Perm conjugate_by(const Perm& o, const Perm& g) {
  // Left-to-right product o * g * o^-1.
  return compose(o, compose(g, inverse(o)));
}

} // namespace

VerificationReport verify(const PowerDeckParams& p) {
  const std::uint32_t c = p.gcd_exponent_digits();
  const std::uint32_t reduced_digits = p.digits / c;  // k/c
  const bool even_case = (p.exponent / c) % 2 == 0;
  std::uint32_t reduced_base = 1; // m^c
  for (std::uint32_t i = 0; i < c; ++i)
    reduced_base *= p.base;

  const StructurePrediction prediction = predict(p);
  VerificationReport r{p, 0, false, {}, false, false, false, false, false};

  const Perm::index_t deck = p.deck_size();
  const Perm out = power_shuffle(p, ShuffleKind::Out);
  const Perm in = power_shuffle(p, ShuffleKind::In);

  // (a) independent order via the stabilizer chain of <I, O> themselves
  const BSGS chain = schreier_sims(deck, {in, out});
  r.computed_order = chain.order;
  r.order_matches = chain.order == prediction.predicted_order;

  // Generators of the equivalent (m^c, k/c, y/c) problem, digits read in
  // base m^c.
  std::vector<Perm> gens;
  gens.reserve(reduced_digits);
  for (std::uint32_t j = 1; j <= reduced_digits; ++j)
    gens.push_back(even_case ? c_generator(j, reduced_base, reduced_digits)
                             : b_generator(j, reduced_base, reduced_digits));

  // (b) involutions with the exact digit action
  bool generators_ok = true;
  for (std::uint32_t j = 1; j <= reduced_digits; ++j) {
    const Perm& g = gens[j - 1];
    GeneratorCheck check;
    check.label = (even_case ? "C" : "B") + std::to_string(j);
    check.involution = compose(g, g).is_identity();
    std::vector<std::uint32_t> flipped{j};
    if (even_case)
      flipped.push_back(j < reduced_digits ? j + 1 : 1);
    check.digit_action_matches =
        flips_exactly(g, reduced_base, reduced_digits, flipped);
    generators_ok &= check.involution && check.digit_action_matches;
    r.generator_checks.push_back(std::move(check));
  }

  // (c) all generator pairs commute
  r.commutation_ok = true;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      r.commutation_ok &=
          compose(gens[a], gens[b]) == compose(gens[b], gens[a]);

  // (d) conjugation by the reduced out shuffle realizes the action
  const Perm reduced_out =
      out_shuffle(DeckParams(reduced_base, deck / reduced_base));
  r.conjugation_ok = true;
  if (!even_case) {
    for (std::uint32_t j = 1; j <= reduced_digits; ++j) {
      const Perm& expected = gens[j < reduced_digits ? j : 0];
      r.conjugation_ok &= conjugate_by(reduced_out, gens[j - 1]) == expected;
    }
  } else {
    for (std::uint32_t j = 1; j + 1 < reduced_digits; ++j)
      r.conjugation_ok &= conjugate_by(reduced_out, gens[j - 1]) == gens[j];
    Perm tail = identity(deck);
    for (std::uint32_t j = 1; j < reduced_digits; ++j)
      tail = compose(tail, gens[j - 1]);
    r.conjugation_ok &=
        conjugate_by(reduced_out, gens[reduced_digits - 2]) == tail;
  }

  // (e) even case: C_1 C_2 ... C_k = Id
  if (even_case) {
    Perm product = identity(deck);
    for (const Perm& g : gens)
      product = compose(product, g);
    r.product_relation_ok = product.is_identity();
  } else {
    r.product_relation_ok = true;
  }

  // (f) |<flip generators>| * |<O>| = computed order, certifying the
  // trivial intersection of the two factors
  std::vector<Perm> complement(gens.begin(),
                               even_case ? gens.end() - 1 : gens.end());
  const std::size_t expected_size =
      std::size_t{1} << prediction.abelian_rank;
  const Enumeration abelian = bfs_enumerate(deck, complement, expected_size + 1);
  r.complement_ok = abelian.complete &&
                    BigNat(abelian.size()) * element_order(out) ==
                        r.computed_order;

  r.verdict = r.order_matches && generators_ok && r.commutation_ok &&
              r.conjugation_ok && r.product_relation_ok && r.complement_ok;
  return r;
}

bool central_symmetry(const Perm& p) {
  const Perm::index_t n = p.degree();
  for (Perm::index_t i = 0; i < n; ++i)
    if (p(i) + p(n - 1 - i) != n - 1)
      return false;
  return true;
}

BigNat symmetry_bound(std::uint32_t n) {
  if (n < 1)
    throw std::invalid_argument("symmetry_bound: n must be at least 1");
  return factorial(n) << n;
}

std::string action_name(ActionKind a) {
  return a == ActionKind::CyclicShift ? "cyclic-shift" : "twisted";
}

namespace {

nlohmann::json params_json(const PowerDeckParams& p) {
  return {{"m", p.base},
          {"k", p.digits},
          {"y", p.exponent},
          {"c", p.gcd_exponent_digits()}};
}

} // namespace

nlohmann::json to_json(const StructurePrediction& p) {
  return {{"schema_version", 1},
          {"params", params_json(p.params)},
          {"t", p.t},
          {"abelian_rank", p.abelian_rank},
          {"action", action_name(p.action)},
          {"predicted_order", p.predicted_order.str()}};
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const GeneratorCheck& c : r.generator_checks)
    checks.push_back({{"label", c.label},
                      {"involution", c.involution},
                      {"digit_action_matches", c.digit_action_matches}});
  return {{"schema_version", 1},
          {"params", params_json(r.params)},
          {"computed_order", r.computed_order.str()},
          {"order_matches", r.order_matches},
          {"generator_checks", checks},
          {"commutation_ok", r.commutation_ok},
          {"conjugation_ok", r.conjugation_ok},
          {"product_relation_ok", r.product_relation_ok},
          {"complement_ok", r.complement_ok},
          {"verdict", r.verdict}};
}

} // namespace mshuffle
