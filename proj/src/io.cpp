#include "rankmod/io.hpp"

#include "rankmod/errors.hpp"

namespace rankmod {

namespace {

template <typename F> auto guarded(F &&f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception &e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

json words_to_json(const std::vector<MultiPermutation> &words) {
  json out = json::array();
  for (const auto &w : words) out.push_back(w.sequence());
  return out;
}

} // namespace

json to_json(const CheckSequence &c) {
  return {{"h", c.h()}, {"modulus", c.modulus()}, {"radius", c.radius()}};
}

CheckSequence check_sequence_from_json(const json &j) {
  return guarded([&] {
    return CheckSequence(j.at("h").get<std::vector<std::int64_t>>(),
                         j.at("modulus").get<std::int64_t>(), j.at("radius").get<int>());
  });
}

json to_json(const CodeRecipe &recipe) {
  json out;
  out["check"] = recipe.check ? to_json(*recipe.check) : json(nullptr);
  out["residue"] = recipe.residue;
  out["anchor"] = recipe.anchor ? json(*recipe.anchor) : json(nullptr);
  out["parity"] = recipe.parity ? json(*recipe.parity) : json(nullptr);
  return out;
}

CodeRecipe recipe_from_json(const json &j) {
  return guarded([&] {
    CodeRecipe recipe;
    if (j.contains("check") && !j.at("check").is_null())
      recipe.check = check_sequence_from_json(j.at("check"));
    recipe.residue = j.value("residue", std::int64_t{0});
    if (j.contains("anchor") && !j.at("anchor").is_null())
      recipe.anchor = j.at("anchor").get<std::vector<Rank>>();
    if (j.contains("parity") && !j.at("parity").is_null()) recipe.parity = j.at("parity").get<int>();
    return recipe;
  });
}

json to_json(const MultiPermCode &code) {
  return {{"alphabet", code.alphabet().to_string()},
          {"design_distance", code.design_distance()},
          {"recipe", to_json(code.recipe())},
          {"size", code.size()},
          {"codewords", words_to_json(code.codewords())}};
}

MultiPermCode multiperm_code_from_json(const json &j) {
  return guarded([&] {
    MultiSet alphabet = MultiSet::parse(j.at("alphabet").get<std::string>());
    std::vector<MultiPermutation> words;
    for (const auto &w : j.at("codewords"))
      words.emplace_back(alphabet, w.get<std::vector<Rank>>());
    return MultiPermCode(alphabet, std::move(words), j.at("design_distance").get<std::uint64_t>(),
                         j.contains("recipe") ? recipe_from_json(j.at("recipe")) : CodeRecipe{});
  });
}

json to_json(const SystematicCode &code) {
  return {{"k", code.k()},
          {"r", code.r()},
          {"t", code.t()},
          {"h", code.check().h()},
          {"modulus", code.check().modulus()},
          {"rhos", words_to_json(code.rhos())},
          {"info", code.info_alphabet().to_string()},
          {"redundancy", code.redundancy_alphabet().to_string()},
          {"recipe",
           {{"redundancy_code", to_json(code.recipe())},
            {"rho_order", "lexicographic"},
            {"data_ranking", "lexicographic"}}}};
}

SystematicCode systematic_code_from_json(const json &j) {
  return guarded([&] {
    auto k = j.at("k").get<std::size_t>();
    auto r = j.at("r").get<std::size_t>();
    int t = j.at("t").get<int>();
    auto kk = static_cast<Rank>(k);
    MultiSet info = j.contains("info") ? MultiSet::parse(j.at("info").get<std::string>())
                                       : MultiSet::range(1, kk);
    MultiSet redundancy = j.contains("redundancy")
                              ? MultiSet::parse(j.at("redundancy").get<std::string>())
                              : MultiSet::range(kk + 1, kk + static_cast<Rank>(r));
    if (info.size() != k || redundancy.size() != r)
      throw InvalidArgument("k and r disagree with the stored alphabets");
    CheckSequence check(j.at("h").get<std::vector<std::int64_t>>(),
                        j.at("modulus").get<std::int64_t>(), t);
    MultiSet rho_alphabet = disjoint_union(MultiSet({{0, k}}), redundancy);
    std::vector<MultiPermutation> rhos;
    for (const auto &w : j.at("rhos")) rhos.emplace_back(rho_alphabet, w.get<std::vector<Rank>>());
    CodeRecipe recipe;
    if (j.contains("recipe") && j.at("recipe").contains("redundancy_code"))
      recipe = recipe_from_json(j.at("recipe").at("redundancy_code"));
    return SystematicCode(std::move(info), std::move(redundancy), t, std::move(check),
                          std::move(rhos), std::move(recipe));
  });
}

json to_json(const SimReport &report) {
  json channel = {{"error_count", report.channel.error_count}, {"seed", report.channel.seed}};
  if (!report.channel.error_distribution.empty())
    channel["error_distribution"] = report.channel.error_distribution;
  return {{"k", report.k},
          {"r", report.r},
          {"t", report.t},
          {"channel", channel},
          {"trials", report.trials},
          {"corrected", report.corrected},
          {"miscorrected", report.miscorrected},
          {"detected_uncorrectable", report.detected_uncorrectable},
          {"contract_violations", report.contract_violations},
          {"channel_distance_histogram", report.channel_distance_histogram}};
}

json to_json(const PropertyResult &result) {
  json out = {{"property", result.name},
              {"suite", result.suite},
              {"statement", result.statement},
              {"cases", result.cases},
              {"passed", result.passed}};
  if (!result.passed) out["counterexample"] = result.counterexample;
  return out;
}

json to_json(const Advice &advice) {
  json attempts = json::array();
  for (auto [r, size] : advice.attempts) attempts.push_back({{"r", r}, {"redundancy_code_size", size}});
  return {{"k", advice.k},
          {"t", advice.t},
          {"r", advice.r},
          {"modulus", advice.modulus},
          {"redundancy_code_size", advice.redundancy_code_size},
          {"attempts", attempts},
          {"epsilon", advice.epsilon},
          {"mu", advice.mu},
          {"mu_threshold", advice.mu_threshold},
          {"k_minus_2_prime_power", advice.k_minus_2_prime_power},
          {"r_minus_1_prime_power", advice.r_minus_1_prime_power},
          {"in_asymptotic_regime", advice.in_asymptotic_regime}};
}

} // namespace rankmod
