// Command-line front end: parses matrices, dispatches to the classifier,
// the brute-force oracle, the character evaluator, the property suite, and
// the rational-trace lab, and emits text or JSON reports.
//
// Exit codes: 0 success (an OutOfScope verdict is a successful answer),
// 2 malformed input (bad flags, unparseable matrix, unknown fixture),
// 3 structurally invalid input (determinant != 1, elliptic element, or a
//   pair outside an operation's domain),
// 4 verified-claim failure (oracle disagreement, property violation, or an
//   internal consistency check firing).
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sl2jsr/characters.hpp"
#include "sl2jsr/classifier.hpp"
#include "sl2jsr/fixtures.hpp"
#include "sl2jsr/interval.hpp"
#include "sl2jsr/lab.hpp"
#include "sl2jsr/lemmas.hpp"
#include "sl2jsr/mat2.hpp"
#include "sl2jsr/oracle.hpp"
#include "sl2jsr/poly.hpp"
#include "sl2jsr/quadext.hpp"
#include "sl2jsr/scalars.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace sl2jsr;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitMismatch = 4;

struct RunConfig {
  bool json_out = false;
  unsigned long max_len = 10;
  unsigned precision = 15;
  unsigned workers = 1;
};

void emit(const json& j) { std::cout << j.dump() << "\n"; }

json radius_json(const AlgebraicRadius& r, const std::string& approx) {
  return json{{"trace", r.t.str()}, {"root", r.n}, {"approx", approx}};
}

std::string optimal_kind(const OptimalitySet& set) {
  return set.kind == OptimalitySet::Kind::Finite ? "finite" : "all-non-powers";
}

json classify_json(const ClassifyResult& res) {
  json j;
  j["case"] = case_label_str(res.cls.label);
  j["swapped"] = res.cls.swapped;
  if (res.report) {
    j["optimal"] = json{{"kind", optimal_kind(res.report->optimal)},
                        {"words", res.report->optimal.words}};
    j["jsr"] = radius_json(res.report->radius, res.report->float_approx);
  } else {
    j["reason"] = res.cls.reason;
    j["optimal"] = nullptr;
    j["jsr"] = nullptr;
  }
  return j;
}

std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ", ";
    out += w;
  }
  return out;
}

void classify_text(const ClassifyResult& res) {
  std::cout << "case: " << case_label_str(res.cls.label) << "\n";
  if (!res.report) {
    std::cout << "reason: " << res.cls.reason << "\n";
    return;
  }
  std::cout << "swapped: " << (res.cls.swapped ? "yes (a is the second input)" : "no")
            << "\n";
  const OptimalitySet& opt = res.report->optimal;
  if (opt.kind == OptimalitySet::Kind::AllNonPowers) {
    std::cout << "optimal words: every word that is not a proper power "
                 "(representative "
              << opt.representative() << ")\n";
  } else {
    std::cout << "optimal words: " << join_words(opt.words) << "\n";
  }
  std::cout << "jsr: trace " << res.report->radius.t.str() << ", root "
            << res.report->radius.n << ", approx " << res.report->float_approx << "\n";
}

// One "[[a,b],[c,d]] [[a,b],[c,d]]" pair per line; blank lines and lines
// starting with '#' are skipped.
std::pair<Mat2<QuadExt>, Mat2<QuadExt>> parse_pair_line(const std::string& line) {
  std::istringstream in(line);
  std::string first, second, extra;
  if (!(in >> first >> second)) {
    throw sl2jsr::ParseError("expected two matrices per line, got: " + line);
  }
  if (in >> extra) {
    throw sl2jsr::ParseError("trailing text after the two matrices: " + extra);
  }
  return {parse_mat2(first), parse_mat2(second)};
}

int classify_one(const Mat2<QuadExt>& A, const Mat2<QuadExt>& B, const RunConfig& cfg) {
  ClassifyResult res = classify_pair(A, B, cfg.precision);
  if (cfg.json_out) {
    emit(classify_json(res));
  } else {
    classify_text(res);
  }
  return kExitOk;
}

int cmd_classify(const std::string& a_text, const std::string& b_text,
                 const std::string& file, bool use_stdin, const RunConfig& cfg) {
  if (!use_stdin && file.empty()) {
    return classify_one(parse_mat2(a_text), parse_mat2(b_text), cfg);
  }
  std::ifstream fin;
  if (!file.empty()) {
    fin.open(file);
    if (!fin) throw sl2jsr::ParseError("cannot open input file: " + file);
  }
  std::istream& in = file.empty() ? std::cin : fin;
  std::string line;
  unsigned long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    // Re-throw with the line number attached, preserving the exception type
    // so the exit-code mapping still sees it.
    const std::string where = "line " + std::to_string(line_no) + ": ";
    try {
      auto [A, B] = parse_pair_line(line);
      classify_one(A, B, cfg);
    } catch (const sl2jsr::ParseError& e) {
      throw sl2jsr::ParseError(where + e.what());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + e.what());
    } catch (const std::domain_error& e) {
      throw std::domain_error(where + e.what());
    }
  }
  return kExitOk;
}

int cmd_oracle(const std::string& a_text, const std::string& b_text,
               bool with_certificates, const RunConfig& cfg) {
  Mat2<QuadExt> A = parse_mat2(a_text);
  Mat2<QuadExt> B = parse_mat2(b_text);
  OracleReport rep = brute_force_max(A, B, cfg.max_len, cfg.workers, with_certificates);
  std::string approx = radius_decimal(rep.radius, cfg.precision);
  if (cfg.json_out) {
    json j;
    j["max_len"] = cfg.max_len;
    j["max_words"] = rep.max_words;
    j["jsr"] = radius_json(rep.radius, approx);
    if (with_certificates) {
      json certs = json::array();
      for (const auto& c : rep.certificates) {
        certs.push_back(json{{"word", c.word},
                             {"trace", c.trace.str()},
                             {"common_multiple", c.common_multiple},
                             {"lifted_trace", c.lifted_trace.str()},
                             {"lifted_max", c.lifted_max.str()}});
      }
      j["certificates"] = certs;
    }
    emit(j);
  } else {
    std::cout << "max words (length <= " << cfg.max_len
              << "): " << join_words(rep.max_words) << "\n";
    std::cout << "jsr: trace " << rep.radius.t.str() << ", root " << rep.radius.n
              << ", approx " << approx << "\n";
    if (with_certificates) {
      std::cout << "rejected words: " << rep.certificates.size() << "\n";
    }
  }
  return kExitOk;
}

int cmd_verify(const std::string& a_text, const std::string& b_text,
               const RunConfig& cfg) {
  Mat2<QuadExt> A = parse_mat2(a_text);
  Mat2<QuadExt> B = parse_mat2(b_text);
  VerifyResult res = verify_classification(A, B, cfg.max_len, cfg.workers);
  if (cfg.json_out) {
    emit(json{{"ok", res.ok},
              {"skipped", res.skipped},
              {"max_len", cfg.max_len},
              {"detail", res.detail}});
  } else {
    const char* verdict = res.skipped ? "skipped" : (res.ok ? "ok" : "DISCREPANCY");
    std::cout << "verify (length <= " << cfg.max_len << "): " << verdict;
    if (!res.detail.empty()) std::cout << " - " << res.detail;
    std::cout << "\n";
  }
  return res.ok ? kExitOk : kExitMismatch;
}

int cmd_char(const std::string& word, const std::string& a_text,
             const std::string& b_text, const std::string& traces,
             const RunConfig& cfg) {
  QuadExt value(0);
  if (!traces.empty()) {
    std::vector<QuadExt> ts;
    std::string item;
    std::istringstream in(traces);
    while (std::getline(in, item, ',')) ts.push_back(QuadExt::parse(item));
    if (ts.size() != 3) {
      throw sl2jsr::ParseError("--traces needs exactly three values x,y,z");
    }
    auto ctx = CharContext<QuadExt>::triple(ts[0], ts[1], ts[2]);
    value = ctx.char_of(word);
  } else if (!a_text.empty() && !b_text.empty()) {
    auto ctx = CharContext<QuadExt>::matrices(parse_mat2(a_text), parse_mat2(b_text));
    value = ctx.char_of(word);
  } else {
    throw sl2jsr::ParseError("char needs either two matrices or --traces x,y,z");
  }
  if (cfg.json_out) {
    emit(json{{"word", word}, {"value", value.str()}});
  } else {
    std::cout << value.str() << "\n";
  }
  return kExitOk;
}

int cmd_lemmas(unsigned long long seed, unsigned long trials, const RunConfig& cfg) {
  LemmaReport rep = lemma_suite(seed, trials);
  if (cfg.json_out) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
      json jc{{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}};
      if (!c.first_counterexample.empty()) {
        jc["first_counterexample"] = c.first_counterexample;
      }
      checks.push_back(jc);
    }
    emit(json{{"seed", seed},
              {"trials", rep.trials},
              {"all_passed", rep.all_passed()},
              {"checks", checks}});
  } else {
    std::cout << rep.str();
  }
  return rep.all_passed() ? kExitOk : kExitMismatch;
}

json context_json(const TripleContext& ctx) {
  return json{{"trace_a", to_string(ctx.x_a)}, {"delta", to_string(ctx.delta)}};
}

void print_context(const TripleContext& ctx) {
  std::cout << "context: trace(a) = " << to_string(ctx.x_a)
            << ", delta = " << to_string(ctx.delta) << "\n";
}

// Highest-degree coefficient first, matching the displayed polynomial.
std::string coeff_list_text(const RatPoly& p) {
  std::string out;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    if (!out.empty()) out += ", ";
    out += to_string(p.coeff(i));
  }
  return out;
}

// Lowest-degree coefficient first: index i holds the coefficient of x^i.
json coeff_list_json(const RatPoly& p) {
  json arr = json::array();
  for (const Rat& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}

int lab_iv1(const RunConfig& cfg) {
  Iv1Report rep = iv1_counterexample();
  if (cfg.json_out) {
    emit(json{{"case", "iv1"},
              {"context", context_json(rep.ctx)},
              {"words", json::array({"abb", "bbb"})},
              {"difference", coeff_list_json(rep.difference)},
              {"display", rep.difference.str()},
              {"witness", to_string(rep.witness)},
              {"value", to_string(rep.value)},
              {"trace_abb", to_string(rep.trace_abb)},
              {"trace_bbb", to_string(rep.trace_bbb)},
              {"verdict", ordering_str(rep.verdict)}});
    return kExitOk;
  }
  print_context(rep.ctx);
  std::cout << "difference abb vs bbb: " << rep.difference.str() << "\n";
  std::cout << "witness: x = " << to_string(rep.witness) << "\n";
  std::cout << "value: " << to_string(rep.value)
            << " (positive: abb outgrows the pure power)\n";
  std::cout << "trace(abb) = " << to_string(rep.trace_abb)
            << ", trace(bbb) = " << to_string(rep.trace_bbb) << "\n";
  std::cout << "per-letter growth of abb vs b: " << ordering_str(rep.verdict) << "\n";
  return kExitOk;
}

int lab_iv2(const RunConfig& cfg) {
  Iv2Report rep = iv2_counterexample();
  if (cfg.json_out) {
    emit(json{{"case", "iv2"},
              {"context", context_json(rep.ctx)},
              {"words", json::array({"abbabbabbabb", "abbbabbbabbb"})},
              {"difference", coeff_list_json(rep.difference)},
              {"display", rep.difference.str()},
              {"witness", to_string(rep.witness)},
              {"value", to_string(rep.value)}});
    return kExitOk;
  }
  print_context(rep.ctx);
  std::cout << "difference (abb)^4 vs (abbb)^3: " << rep.difference.str() << "\n";
  std::cout << "coefficients (degree " << rep.difference.degree()
            << " down to 0): " << coeff_list_text(rep.difference) << "\n";
  std::cout << "witness: x = " << to_string(rep.witness) << "\n";
  std::cout << "value: " << to_string(rep.value)
            << " (negative: abbb outgrows abb)\n";
  return kExitOk;
}

json certificate_json(const SignCertificate& cert) {
  return json{{"at_lo", to_string(cert.at_lo)},
              {"at_hi", to_string(cert.at_hi)},
              {"slope_bound", to_string(cert.slope_bound)},
              {"negative", cert.negative}};
}

int lab_iv3(const RunConfig& cfg) {
  Iv3Report rep = iv3_counterexample();
  std::string lo_dec = decimal_truncate_exact(rep.lo, cfg.precision + 2);
  std::string hi_dec = decimal_truncate_exact(rep.hi, cfg.precision + 2);
  if (cfg.json_out) {
    emit(json{{"case", "iv3"},
              {"context", context_json(rep.ctx)},
              {"tie_words", json::array({"ababab", "abbabb"})},
              {"tie", coeff_list_json(rep.tie)},
              {"tie_display", rep.tie.str()},
              {"lo", to_string(rep.lo)},
              {"hi", to_string(rep.hi)},
              {"lo_decimal", lo_dec},
              {"hi_decimal", hi_dec},
              {"q8", coeff_list_json(rep.q8)},
              {"q13", coeff_list_json(rep.q13)},
              {"certificate8", certificate_json(rep.cert8)},
              {"certificate13", certificate_json(rep.cert13)}});
    return kExitOk;
  }
  print_context(rep.ctx);
  std::cout << "tie (ab)^3 vs (abb)^2: " << rep.tie.str() << "\n";
  std::cout << "root interval: [" << lo_dec << ", " << hi_dec << "]\n";
  std::cout << "q8  = (ab)^5 vs (ababb)^2, degree " << rep.q8.degree()
            << ": negative on the interval ("
            << (rep.cert8.negative ? "certified" : "NOT certified") << ")\n";
  std::cout << "q13 = (abb)^5 vs (ababb)^3, degree " << rep.q13.degree()
            << ": negative on the interval ("
            << (rep.cert13.negative ? "certified" : "NOT certified") << ")\n";
  std::cout << "verdict: at the tie point, ababb outgrows both ab and abb\n";
  return kExitOk;
}

int lab_nonfree(const RunConfig& cfg) {
  bool ok = nonfree_demo();
  const QuadExt step(Int(0), Int(1), Int(6), Int(6));
  const Mat2<QuadExt> A(QuadExt(1), step, QuadExt(0), QuadExt(1));
  const Mat2<QuadExt> B(QuadExt(1), QuadExt(0), step, QuadExt(1));
  Mat2<QuadExt> common = word_eval("aabbbaa", A, B);
  if (cfg.json_out) {
    emit(json{{"case", "nonfree"},
              {"step", step.str()},
              {"a", mat2_str(A)},
              {"b", mat2_str(B)},
              {"words", json::array({"aabbbaa", "baaaaaab"})},
              {"common_value", mat2_str(common)},
              {"verified", ok}});
    return kExitOk;
  }
  std::cout << "step: " << step.str() << "\n";
  std::cout << "a = " << mat2_str(A) << ", b = " << mat2_str(B) << "\n";
  std::cout << "phi(aabbbaa) = phi(baaaaaab) = " << mat2_str(common) << "\n";
  std::cout << "phi(ab) != phi(ba): the generators do not commute\n";
  std::cout << "verified: " << (ok ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_gen(unsigned long long seed, unsigned long count, unsigned long max_factors,
            const RunConfig& cfg) {
  json items = json::array();
  for (unsigned long i = 0; i < count; ++i) {
    RandomPair p = random_pair(seed + i, max_factors);
    if (cfg.json_out) {
      items.push_back(json{{"seed", seed + i},
                           {"word_a", p.word_a},
                           {"word_b", p.word_b},
                           {"a", mat2_str(p.A)},
                           {"b", mat2_str(p.B)}});
    } else {
      std::cout << mat2_str(p.A) << " " << mat2_str(p.B) << "\n";
    }
  }
  if (cfg.json_out) emit(items);
  return kExitOk;
}

int cmd_fixtures(const std::string& name, const RunConfig& cfg) {
  if (name.empty()) {
    if (cfg.json_out) {
      emit(json(fixture_names()));
    } else {
      std::cout << join_words(fixture_names()) << "\n";
    }
    return kExitOk;
  }
  Mat2<QuadExt> m = named_fixture(name);
  if (cfg.json_out) {
    emit(json{{"name", name}, {"matrix", mat2_str(m)}});
  } else {
    std::cout << mat2_str(m) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact finiteness-optimal products and joint spectral radii for "
               "pairs of unimodular 2x2 matrices"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  RunConfig cfg;
  std::string a_text, b_text, word, traces, file, fixture_name, lab_case;
  bool use_stdin = false;
  bool with_certificates = false;
  unsigned long long seed = 1;
  unsigned long trials = 100;
  unsigned long count = 10;
  unsigned long max_factors = 6;

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* classify = app.add_subcommand("classify", "decide the case label, the "
                                                  "optimal words, and the radius");
  classify->add_option("a", a_text, "first matrix [[a,b],[c,d]]");
  classify->add_option("b", b_text, "second matrix");
  classify->add_option("--file", file, "read one pair per line from a file");
  classify->add_flag("--stdin", use_stdin, "read one pair per line from stdin");
  classify->add_option("--precision", cfg.precision,
                       "decimal digits in float approximations");
  auto* oracle = app.add_subcommand("oracle", "brute-force maximal words by "
                                              "exhaustive enumeration");
  oracle->add_option("a", a_text)->required();
  oracle->add_option("b", b_text)->required();
  oracle->add_option("--max-len", cfg.max_len, "longest enumerated word length");
  oracle->add_option("--workers", cfg.workers, "trace evaluation threads")
      ->envname("SL2JSR_WORKERS");
  oracle->add_flag("--certificates", with_certificates,
                   "include one rejection certificate per non-maximal word");
  oracle->add_option("--precision", cfg.precision);
  auto* verify = app.add_subcommand("verify", "cross-check the classifier "
                                              "against the brute-force oracle");
  verify->add_option("a", a_text)->required();
  verify->add_option("b", b_text)->required();
  verify->add_option("--max-len", cfg.max_len);
  verify->add_option("--workers", cfg.workers)->envname("SL2JSR_WORKERS");
  auto* chr = app.add_subcommand("char", "trace of a group word under a pair "
                                         "or a trace triple");
  chr->add_option("word", word, "group word over a, b, A, B")->required();
  chr->add_option("a", a_text);
  chr->add_option("b", b_text);
  chr->add_option("--traces", traces, "x,y,z for trace(a), trace(b), trace(ab)");
  auto* lemmas = app.add_subcommand("lemmas", "run the randomized property "
                                              "suite");
  lemmas->add_option("--seed", seed);
  lemmas->add_option("--trials", trials);
  auto* lab = app.add_subcommand("lab", "rational-trace failure probes and the "
                                        "non-free parabolic pair");
  lab->add_option("--case", lab_case, "iv1 | iv2 | iv3 | nonfree")
      ->required()
      ->check(CLI::IsMember({"iv1", "iv2", "iv3", "nonfree"}));
  lab->add_option("--precision", cfg.precision);
  auto* gen = app.add_subcommand("gen", "deterministic pseudo-random pairs of "
                                        "nonnegative unimodular matrices");
  gen->add_option("--seed", seed);
  gen->add_option("--count", count);
  gen->add_option("--max-factors", max_factors,
                  "longest generating word per element");
  auto* fixtures = app.add_subcommand("fixtures", "print a named example matrix");
  fixtures->add_option("name", fixture_name, "one of the built-in names");

  for (CLI::App* sub : {classify, oracle, verify, chr, lemmas, lab, gen, fixtures}) {
    add_format(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    // Help and version requests succeed; every other parse problem is a
    // usage error regardless of the library's own exit code.
    return dynamic_cast<const CLI::Success*>(&e) != nullptr ? code : kExitUsage;
  }
  cfg.json_out = (format == "json");

  try {
    if (classify->parsed()) {
      bool have_pair = !a_text.empty() && !b_text.empty();
      if (!have_pair && !use_stdin && file.empty()) {
        throw sl2jsr::ParseError("classify needs two matrices, --file, or --stdin");
      }
      return cmd_classify(a_text, b_text, file, use_stdin, cfg);
    }
    if (oracle->parsed()) return cmd_oracle(a_text, b_text, with_certificates, cfg);
    if (verify->parsed()) return cmd_verify(a_text, b_text, cfg);
    if (chr->parsed()) return cmd_char(word, a_text, b_text, traces, cfg);
    if (lemmas->parsed()) return cmd_lemmas(seed, trials, cfg);
    if (lab->parsed()) {
      if (lab_case == "iv1") return lab_iv1(cfg);
      if (lab_case == "iv2") return lab_iv2(cfg);
      if (lab_case == "iv3") return lab_iv3(cfg);
      return lab_nonfree(cfg);
    }
    if (gen->parsed()) return cmd_gen(seed, count, max_factors, cfg);
    if (fixtures->parsed()) return cmd_fixtures(fixture_name, cfg);
    std::fprintf(stderr, "no subcommand selected\n");
    return kExitUsage;
  } catch (const sl2jsr::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const InconsistencyError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitMismatch;
  } catch (const ScalarError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalid;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalid;
  } catch (const std::runtime_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
}
