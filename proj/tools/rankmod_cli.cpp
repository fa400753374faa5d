// rankmod: build, use and check systematic codes for rank modulation.
//
// Exit codes: 0 success, 1 verification failure, 2 bad input,
// 3 infeasible parameters.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "rankmod/channel.hpp"
#include "rankmod/errors.hpp"
#include "rankmod/io.hpp"
#include "rankmod/kendall.hpp"
#include "rankmod/verify.hpp"

using namespace rankmod;

namespace {

enum Exit : int { kOk = 0, kFailed = 1, kBadInput = 2, kInfeasible = 3 };

SystematicCode load_code(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception &e) {
    throw InvalidArgument(path + ": " + e.what());
  }
  return systematic_code_from_json(j);
}

BigInt parse_decimal(const std::string &text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw InvalidArgument("expected a non-negative decimal integer, got '" + text + "'");
  return BigInt(text);
}

std::string trim(const std::string &s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

template <typename F> void for_each_input_line(F &&f) {
  std::string line;
  while (std::getline(std::cin, line)) {
    line = trim(line);
    if (!line.empty()) f(line);
  }
}

json word_json(const MultiPermutation &w) { return json(w.sequence()); }

std::vector<double> parse_weights(const std::string &text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      double v = std::stod(item, &used);
      if (trim(item.substr(used)) != "" || v < 0) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error &) {
      throw InvalidArgument("bad weight '" + item + "' in error distribution");
    }
  }
  return out;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Systematic error-correcting codes for permutations under the Kendall tau metric"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Line-delimited JSON output");

  // build
  auto *build = app.add_subcommand("build", "Construct a systematic code");
  std::size_t k = 0, r = 0;
  int t = 1;
  std::string out_path, info_text, redundancy_text;
  std::int64_t search_budget = 4096;
  build->add_option("--k", k, "Information length (permutations of 1..k)");
  build->add_option("--r", r, "Redundancy length");
  build->add_option("--t", t, "Correctable transpositions")->required()->check(CLI::NonNegativeNumber);
  build->add_option("--info", info_text, "Information multi-set, e.g. 1^2+2 (instead of --k)");
  build->add_option("--redundancy", redundancy_text, "Redundancy multi-set, e.g. 3^2 (with --info)");
  build->add_option("--out", out_path, "Write the code here instead of stdout");
  build->add_option("--search-budget", search_budget, "Largest modulus tried for check sequences");

  // encode
  auto *encode = app.add_subcommand("encode", "Encode data integers or information permutations");
  std::string code_path, data_text, perm_text;
  encode->add_option("--code", code_path, "Code file")->required();
  auto *data_opt = encode->add_option("--data", data_text, "Decimal integer below k!");
  encode->add_option("--perm", perm_text, "Information permutation, e.g. 2,4,1,3")->excludes(data_opt);

  // decode
  auto *decode = app.add_subcommand("decode", "Decode received words (stdin lines without --word)");
  std::string word_text;
  decode->add_option("--code", code_path, "Code file")->required();
  decode->add_option("--word", word_text, "Received word");

  // distance
  auto *distance = app.add_subcommand("distance", "Kendall tau distance of two words");
  std::string a_text, b_text, multiset_text;
  distance->add_option("--a", a_text)->required();
  distance->add_option("--b", b_text)->required();
  distance->add_option("--multiset", multiset_text, "Common alphabet, e.g. 0^4+5+6");

  // verify
  auto *verify = app.add_subcommand("verify", "Run the exhaustive property checks");
  VerifyOptions vopts;
  bool manifest = false;
  verify->add_option("--max-n", vopts.max_n, "Largest word length for metric checks")
      ->check(CLI::Range(2, 8));
  verify->add_option("--suite", vopts.suite)->check(CLI::IsMember({"all", "core", "codes"}));
  verify->add_option("--code", code_path, "Audit this code file instead");
  verify->add_flag("--manifest", manifest, "List the properties without running them");

  // simulate
  auto *simulate_cmd = app.add_subcommand("simulate", "Monte Carlo run over the transposition channel");
  ChannelSpec channel;
  std::string weights_text;
  std::uint64_t trials = 10000;
  unsigned threads = 0;
  simulate_cmd->add_option("--code", code_path, "Code file")->required();
  auto *errors_opt = simulate_cmd->add_option("--errors", channel.error_count, "Transpositions per word");
  simulate_cmd->add_option("--error-distribution", weights_text,
                           "Weights w0,w1,... for 0,1,... transpositions")
      ->excludes(errors_opt);
  simulate_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--seed", channel.seed);
  simulate_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");

  // advise
  auto *advise = app.add_subcommand("advise", "Smallest feasible redundancy for k and t");
  std::size_t max_r = 12;
  advise->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  advise->add_option("--t", t)->required()->check(CLI::NonNegativeNumber);
  advise->add_option("--max-r", max_r);

  for (auto *sub : app.get_subcommands([](const CLI::App *) { return true; }))
    sub->add_flag("--json", as_json, "Line-delimited JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*build) {
      BuildOptions bopts;
      bopts.check_search_budget = search_budget;
      std::optional<SystematicCode> code;
      if (!info_text.empty()) {
        if (redundancy_text.empty()) throw InvalidArgument("--info needs --redundancy");
        code = build_general(MultiSet::parse(info_text), MultiSet::parse(redundancy_text), t, bopts);
      } else {
        if (k == 0) throw InvalidArgument("--k must be positive");
        code = build_systematic(k, r, t, bopts);
      }
      json j = to_json(*code);
      if (out_path.empty()) {
        std::cout << (as_json ? j.dump() : j.dump(2)) << '\n';
      } else {
        std::ofstream out(out_path);
        if (!out) throw InvalidArgument("cannot write '" + out_path + "'");
        out << j.dump(2) << '\n';
        if (as_json)
          std::cout << json{{"written", out_path}, {"modulus", code->check().modulus()}}.dump() << '\n';
        else
          std::cout << "wrote " << out_path << ": n=" << code->k() + code->r()
                    << " M=" << code->check().modulus() << '\n';
      }
      return kOk;
    }

    if (*encode) {
      SystematicCode code = load_code(code_path);
      auto emit = [&](const MultiPermutation &info, const MultiPermutation &word) {
        if (as_json)
          std::cout << json{{"info", word_json(info)}, {"codeword", word_json(word)},
                            {"checksum", code.checksum(info)}}
                           .dump()
                    << '\n';
        else
          std::cout << word.to_string() << '\n';
      };
      auto one = [&](const std::string &text, bool is_data) {
        if (is_data) {
          MultiPermutation word = code.encode_data(parse_decimal(text));
          emit(restrict_to(word, code.info_alphabet()), word);
        } else {
          MultiPermutation info = MultiPermutation::parse(text, code.info_alphabet());
          emit(info, code.encode(info));
        }
      };
      if (!data_text.empty()) {
        one(data_text, true);
      } else if (!perm_text.empty()) {
        one(perm_text, false);
      } else {
        for_each_input_line([&](const std::string &line) {
          one(line, line.find_first_of(",[ ") == std::string::npos && code.k() > 1);
        });
      }
      return kOk;
    }

    if (*decode) {
      SystematicCode code = load_code(code_path);
      auto one = [&](const std::string &text) {
        MultiPermutation received = MultiPermutation::parse(text, code.codeword_alphabet());
        auto result = code.decode(received);
        if (as_json) {
          json j = {{"received", word_json(received)}, {"status", result ? "decoded" : "uncorrectable"}};
          if (result) {
            j["info"] = word_json(result->info);
            j["codeword"] = word_json(result->codeword);
            j["distance"] = result->distance;
          }
          std::cout << j.dump() << '\n';
        } else if (result) {
          std::cout << result->info.to_string() << '\n';
        } else {
          std::cout << "uncorrectable\n";
        }
      };
      if (!word_text.empty())
        one(word_text);
      else
        for_each_input_line(one);
      return kOk;
    }

    if (*distance) {
      MultiPermutation a = multiset_text.empty()
                               ? MultiPermutation::parse(a_text)
                               : MultiPermutation::parse(a_text, MultiSet::parse(multiset_text));
      MultiPermutation b = multiset_text.empty()
                               ? MultiPermutation::parse(b_text)
                               : MultiPermutation::parse(b_text, MultiSet::parse(multiset_text));
      std::uint64_t d = kendall_distance(a, b);
      if (as_json)
        std::cout << json{{"a", word_json(a)}, {"b", word_json(b)}, {"distance", d}}.dump() << '\n';
      else
        std::cout << d << '\n';
      return kOk;
    }

    if (*verify) {
      if (manifest) {
        for (const auto &[name, statement] : coverage_manifest()) {
          if (as_json)
            std::cout << json{{"property", name}, {"statement", statement}}.dump() << '\n';
          else
            std::cout << name << ": " << statement << '\n';
        }
        return kOk;
      }
      auto results = code_path.empty() ? verify_all(vopts) : audit_code(load_code(code_path));
      bool all = true;
      for (const auto &res : results) {
        all = all && res.passed;
        if (as_json) {
          std::cout << to_json(res).dump() << std::endl;
        } else {
          std::cout << (res.passed ? "PASS " : "FAIL ") << res.name << " (" << res.cases << " cases)";
          if (!res.passed) std::cout << "\n     counterexample: " << res.counterexample;
          std::cout << std::endl;
        }
      }
      return all ? kOk : kFailed;
    }

    if (*simulate_cmd) {
      SystematicCode code = load_code(code_path);
      if (!weights_text.empty()) channel.error_distribution = parse_weights(weights_text);
      SimReport report = simulate(code, channel, trials, threads);
      if (as_json) {
        std::cout << to_json(report).dump() << '\n';
      } else {
        std::cout << "trials " << report.trials << "\ncorrected " << report.corrected
                  << "\nmiscorrected " << report.miscorrected << "\ndetected_uncorrectable "
                  << report.detected_uncorrectable << "\ncontract_violations "
                  << report.contract_violations << '\n';
      }
      return report.contract_violations == 0 ? kOk : kFailed;
    }

    if (*advise) {
      Advice advice = advise_parameters(k, t, max_r);
      if (as_json)
        std::cout << to_json(advice).dump() << '\n';
      else
        std::cout << "r=" << advice.r << " M=" << advice.modulus
                  << " |C_r|=" << advice.redundancy_code_size << '\n';
      return kOk;
    }
  } catch (const InvalidArgument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const Infeasible &e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const BudgetExceeded &e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const CertificationFailure &e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kFailed;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kOk;
}
