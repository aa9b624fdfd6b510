// Command-line surface over the forge core: canonical integer encodings,
// expression evaluation, batch generation, prime sifting by set recurrence,
// rational enumeration, and FCF-vs-SCF length statistics.
//
// Exit codes: 0 success, 2 input error, 3 resource limit, 4 soundness or
// oracle failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "forge/canonical.hpp"
#include "forge/eval.hpp"
#include "forge/fcf_gen.hpp"
#include "forge/metrics.hpp"
#include "forge/notation.hpp"
#include "forge/sieve.hpp"
#include "forge/zeta.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitSoundness = 4;

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::size_t iterations = 0;
  std::uint64_t manipulations = 0;
  std::string output = "-";
  std::string status = "ok";

  void add(const std::string& key, const std::string& value) {
    params.emplace_back(key, value);
  }

  void emit(long long wall_ms) const {
    std::ostringstream os;
    os << "report: command=" << command;
    for (const auto& [k, v] : params) os << ' ' << k << '=' << v;
    os << " iterations=" << iterations << " manipulations=" << manipulations
       << " wall_ms=" << wall_ms << " output=" << output << " status=" << status;
    std::cerr << os.str() << '\n';
  }
};

// Output files appear atomically: write a sibling temp file, then rename.
// On failure the partial file is removed.
template <typename Writer>
void write_file_atomic(const std::string& path, Writer&& writer) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw forge::Error("cannot open output file " + tmp);
    writer(out);
    out.flush();
    if (!out) {
      out.close();
      std::remove(tmp.c_str());
      throw forge::Error("write failed for " + tmp);
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw forge::Error("cannot rename " + tmp + " to " + path);
  }
}

forge::Notation to_notation(const std::string& s) {
  if (s == "infix") return forge::Notation::Infix;
  if (s == "prefix") return forge::Notation::Prefix;
  if (s == "postfix") return forge::Notation::Postfix;
  throw forge::DomainError("unknown notation: " + s);
}

forge::CanonicalForm to_form(const std::string& s) {
  if (s == "fcf") return forge::CanonicalForm::Fcf;
  if (s == "scf") return forge::CanonicalForm::Scf;
  throw forge::DomainError("unknown form: " + s);
}

forge::SizeMetric to_metric(const std::string& s) {
  if (s == "chars") return forge::SizeMetric::Chars;
  if (s == "leaves") return forge::SizeMetric::Leaves;
  if (s == "gates") return forge::SizeMetric::Gates;
  throw forge::DomainError("unknown metric: " + s);
}

std::string format_mean(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// Runs a command body with uniform error mapping; the report is emitted on
// every path, failure included.
template <typename Body>
int run_reported(RunReport& report, Body&& body) {
  auto t0 = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    body();
  } catch (const forge::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    report.status = "input-error";
    code = kExitInput;
  } catch (const forge::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    report.status = "input-error";
    code = kExitInput;
  } catch (const forge::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    report.status = "resource-limit";
    code = kExitResource;
  } catch (const forge::SoundnessError& e) {
    std::cerr << "error: " << e.what() << '\n';
    report.status = "soundness-error";
    code = kExitSoundness;
  } catch (const forge::CompletenessError& e) {
    std::cerr << "error: " << e.what() << '\n';
    report.status = "soundness-error";
    code = kExitSoundness;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    report.status = "error";
    code = kExitInput;
  }
  auto t1 = std::chrono::steady_clock::now();
  report.emit(std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
  return code;
}

std::string read_all_stdin() {
  std::ostringstream os;
  os << std::cin.rdbuf();
  return os.str();
}

// Drives the improved recursion until coverage reaches max_n.
forge::ZetaState improved_until(std::uint64_t max_n, std::size_t* iterations,
                                forge::ManipulationCounters* counters) {
  forge::ZetaState state = forge::zeta_initial();
  while (state.naturals.max_value() < max_n) {
    state = forge::zeta_step_improved(state, counters);
    ++(*iterations);
  }
  return state;
}

int cmd_encode(const std::string& n_text, const std::string& form_text,
               const std::string& notation_text, bool expand_x) {
  RunReport report;
  report.command = "encode";
  report.add("form", form_text);
  report.add("n", n_text);
  return run_reported(report, [&] {
    forge::Natural n = forge::Natural::from_decimal(n_text);
    forge::CanonicalForm form = to_form(form_text);
    const forge::Expr* e = form == forge::CanonicalForm::Fcf ? forge::encode_fcf(n)
                                                             : forge::encode_scf(n);
    std::cout << forge::print(e, to_notation(notation_text), {expand_x}) << '\n';
  });
}

int cmd_eval(const std::string& expr_text, bool from_stdin,
             const std::string& notation_text) {
  RunReport report;
  report.command = "eval";
  return run_reported(report, [&] {
    std::string text = from_stdin ? read_all_stdin() : expr_text;
    const forge::Expr* e = forge::parse(text, to_notation(notation_text));
    std::cout << forge::evaluate(e).str() << '\n';
  });
}

int cmd_generate(const std::string& form_text, std::uint64_t max_n,
                 const std::string& out_path, bool expand_x,
                 std::uint64_t record_cap) {
  RunReport report;
  report.command = "generate";
  report.add("form", form_text);
  report.add("max", std::to_string(max_n));
  report.output = out_path;
  return run_reported(report, [&] {
    forge::CanonicalForm form = to_form(form_text);
    if (max_n == 0) throw forge::DomainError("--max must be >= 1");
    if (max_n > record_cap)
      throw forge::ResourceLimitError("--max exceeds the record cap of " +
                                      std::to_string(record_cap));
    forge::ManipulationCounters counters;
    std::size_t iterations = 0;
    std::vector<forge::ValuedExpr> rows;
    if (form == forge::CanonicalForm::Fcf) {
      forge::FcfGenerateResult r = forge::fcf_generate(max_n, {record_cap});
      iterations = r.iterations;
      counters = r.counters;
      rows = std::move(r.expressions).take();
    } else {
      std::uint64_t before = forge::Registry::instance().insertions();
      forge::ZetaState state = improved_until(max_n, &iterations, &counters);
      counters.new_nodes = forge::Registry::instance().insertions() - before;
      rows.assign(state.naturals.begin(),
                  state.naturals.begin() + static_cast<std::ptrdiff_t>(max_n));
    }
    report.iterations = iterations;
    report.manipulations = counters.total();
    write_file_atomic(out_path, [&](std::ostream& out) {
      for (const forge::ValuedExpr& row : rows) {
        out << row.value << '\t'
            << forge::print(row.expr, forge::Notation::Infix, {expand_x}) << '\n';
      }
    });
  });
}

int cmd_sieve(std::size_t bits, bool compare, const std::string& csv_path) {
  RunReport report;
  report.command = "sieve";
  report.add("bits", std::to_string(bits));
  if (!csv_path.empty()) report.output = csv_path;
  return run_reported(report, [&] {
    forge::SiftResult r = forge::sift_primes(bits);
    report.iterations = r.iterations.size();
    report.manipulations = r.counters.total();

    std::ostringstream line;
    for (std::size_t i = 0; i < r.primes.size(); ++i) {
      if (i) line << ' ';
      line << r.primes[i];
    }
    std::cout << line.str() << '\n';

    if (compare) {
      std::vector<std::uint64_t> oracle = forge::sieve_primes(1ull << bits);
      if (r.primes != oracle)
        throw forge::SoundnessError("sieve oracle mismatch at bits=" +
                                    std::to_string(bits));
      report.add("compare", "match");
    }
    if (!csv_path.empty()) {
      write_file_atomic(csv_path, [&](std::ostream& out) {
        out << "bits,n,manipulations\n";
        for (const forge::SiftIteration& it : r.iterations) {
          out << it.bits << ',' << it.coverage << ',' << it.manipulations << '\n';
        }
      });
    }
  });
}

int cmd_stats(std::uint64_t max_n, const std::string& metric_text,
              const std::string& out_path, std::uint64_t record_cap) {
  RunReport report;
  report.command = "stats";
  report.add("max", std::to_string(max_n));
  report.add("metric", metric_text);
  report.output = out_path;
  return run_reported(report, [&] {
    forge::SizeMetric metric = to_metric(metric_text);
    if (max_n == 0) throw forge::DomainError("--max must be >= 1");
    if (max_n > record_cap)
      throw forge::ResourceLimitError("--max exceeds the record cap of " +
                                      std::to_string(record_cap));
    long double fcf_total = 0, scf_total = 0;
    write_file_atomic(out_path, [&](std::ostream& out) {
      out << "n,fcf_len,scf_len\n";
      for (std::uint64_t n = 1; n <= max_n; ++n) {
        forge::Natural nn(n);
        std::uint64_t f = forge::size(forge::encode_fcf(nn), metric).to_u64();
        std::uint64_t s = forge::size(forge::encode_scf(nn), metric).to_u64();
        fcf_total += f;
        scf_total += s;
        out << n << ',' << f << ',' << s << '\n';
      }
      double fcf_mean = static_cast<double>(fcf_total / max_n);
      double scf_mean = static_cast<double>(scf_total / max_n);
      out << "mean," << format_mean(fcf_mean) << ',' << format_mean(scf_mean) << '\n';
      report.add("mean_fcf", format_mean(fcf_mean));
      report.add("mean_scf", format_mean(scf_mean));
      report.add("smaller", scf_mean < fcf_mean   ? "scf"
                            : fcf_mean < scf_mean ? "fcf"
                                                  : "equal");
    });
  });
}

int cmd_rationals(std::size_t k, std::uint64_t cap) {
  RunReport report;
  report.command = "rationals";
  report.add("k", std::to_string(k));
  report.add("cap", std::to_string(cap));
  return run_reported(report, [&] {
    if (k > 3) throw forge::DomainError("--k is limited to 3 (set explosion)");
    forge::ManipulationCounters counters;
    forge::ZetaState state = forge::zeta_initial();
    for (std::size_t i = 0; i < k; ++i) state = forge::zeta_step_improved(state, &counters);
    std::vector<forge::RationalExpr> rs = forge::rationals(state, cap, &counters);
    report.iterations = k;
    report.manipulations = counters.total();
    for (const forge::RationalExpr& r : rs) {
      std::cout << r.num_value << '/' << r.den_value << '\t'
                << forge::print(r.numerator, forge::Notation::Infix) << '\t'
                << forge::print(r.denominator, forge::Notation::Infix) << '\n';
    }
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic formula-encodings of integers over {1, +, *, ^}"};
  app.require_subcommand(1);

  std::size_t max_bits = 1u << 20;
  if (const char* env = std::getenv("FORMULA_FORGE_MAX_BITS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) max_bits = static_cast<std::size_t>(v);
  }
  app.add_option("--max-bits", max_bits,
                 "evaluation bit-size cap (env FORMULA_FORGE_MAX_BITS)")
      ->capture_default_str();

  // encode
  std::string enc_n, enc_form, enc_notation = "infix";
  bool enc_expand = false;
  CLI::App* enc = app.add_subcommand("encode", "print the canonical encoding of n");
  enc->add_option("n", enc_n, "positive integer, decimal")->required();
  enc->add_option("--form", enc_form, "fcf|scf")->required();
  enc->add_option("--notation", enc_notation, "infix|prefix|postfix");
  enc->add_flag("--expand-x", enc_expand, "render x as (1+1)");

  // eval
  std::string ev_expr, ev_notation = "infix";
  CLI::App* ev = app.add_subcommand("eval", "evaluate an expression (argument or stdin)");
  ev->add_option("expr", ev_expr, "expression text; omit to read stdin");
  ev->add_option("--notation", ev_notation, "infix|prefix|postfix");

  // generate
  std::string gen_form, gen_out;
  std::uint64_t gen_max = 0;
  bool gen_expand = false;
  std::uint64_t gen_cap = 1ull << 24;
  CLI::App* gen = app.add_subcommand(
      "generate", "write value<TAB>expression records for 1..max");
  gen->add_option("--form", gen_form, "fcf|scf")->required();
  gen->add_option("--max", gen_max, "largest value to encode")->required();
  gen->add_option("--out", gen_out, "output path")->required();
  gen->add_flag("--expand-x", gen_expand, "render x as (1+1)");
  gen->add_option("--record-cap", gen_cap, "output record cap")->capture_default_str();

  // sieve
  std::size_t sv_bits = 0;
  bool sv_compare = false;
  std::string sv_csv;
  CLI::App* sv = app.add_subcommand("sieve", "sift primes <= 2^bits by Zeta recursion");
  sv->add_option("--bits", sv_bits, "dyadic coverage, at most 22")->required();
  sv->add_flag("--compare", sv_compare, "check against a classic sieve");
  sv->add_option("--csv", sv_csv, "per-iteration manipulation-count CSV");

  // stats
  std::uint64_t st_max = 0;
  std::string st_metric, st_out;
  std::uint64_t st_cap = 1ull << 24;
  CLI::App* st = app.add_subcommand("stats", "FCF vs SCF length statistics CSV");
  st->add_option("--max", st_max, "largest value")->required();
  st->add_option("--metric", st_metric, "chars|leaves|gates")->required();
  st->add_option("--out", st_out, "CSV path")->required();
  st->add_option("--record-cap", st_cap, "row cap")->capture_default_str();

  // rationals
  std::size_t ra_k = 0;
  std::uint64_t ra_cap = 0;
  CLI::App* ra = app.add_subcommand("rationals", "enumerate Q_k as coprime SCF pairs");
  ra->add_option("--k", ra_k, "iterations (at most 3)")->required();
  ra->add_option("--cap", ra_cap, "numerator/denominator value cap")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  forge::set_default_eval_bit_cap(max_bits);

  if (*enc) return cmd_encode(enc_n, enc_form, enc_notation, enc_expand);
  if (*ev) return cmd_eval(ev_expr, ev->count("expr") == 0, ev_notation);
  if (*gen) return cmd_generate(gen_form, gen_max, gen_out, gen_expand, gen_cap);
  if (*sv) return cmd_sieve(sv_bits, sv_compare, sv_csv);
  if (*st) return cmd_stats(st_max, st_metric, st_out, st_cap);
  if (*ra) return cmd_rationals(ra_k, ra_cap);
  return kExitInput;
}
