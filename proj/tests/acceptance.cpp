// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit status is the number of failures.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "forge/canonical.hpp"
#include "forge/eval.hpp"
#include "forge/fcf_gen.hpp"
#include "forge/metrics.hpp"
#include "forge/notation.hpp"
#include "forge/sieve.hpp"
#include "forge/zeta.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace forge;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

void criterion(int id, const std::string& name, double budget_seconds,
               const std::function<std::string()>& body) {
  Timer timer;
  std::string detail;
  bool ok = true;
  try {
    detail = body();
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  double elapsed = timer.seconds();
  if (ok && elapsed > budget_seconds) {
    ok = false;
    detail += " (over the " + std::to_string(budget_seconds) + "s runtime budget)";
  }
  std::printf("%s  criterion %d (%s): %s [%.2fs]\n", ok ? "PASS" : "FAIL", id,
              name.c_str(), detail.c_str(), elapsed);
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

void require(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

const Expr* infix(const std::string& s) { return parse(s, Notation::Infix); }

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "forge_acceptance";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + FORGE_CLI_BIN + "\" " + args;
  int status = std::system(cmd.c_str());
  return (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
}

// Shared between criteria 3 and 6c; the recursion is deterministic.
SiftResult& sift16() {
  static SiftResult r = sift_primes(16);
  return r;
}

// ---------------------------------------------------------------------
// 1. Three subset-sum iterations reproduce the FCF batch exactly.
std::string criterion1() {
  FcfLevel level = fcf_initial();
  std::size_t expected_sizes[] = {3, 15, 65535};
  for (std::size_t s : expected_sizes) {
    level = fcf_step(level);
    require(level.expressions.size() == s, "cardinality law broken");
  }
  const ExprSet& set = level.expressions;
  require(set.contiguous_from_one(), "values are not exactly 1..65535");
  for (std::uint64_t v = 1; v <= 65535; ++v) {
    if (set[v - 1].expr != encode_fcf(v)) fail("element differs from encode_fcf");
  }
  for (const char* member : {"1", "x", "(x+1)", "x^x", "(x^x+1)"}) {
    std::uint64_t v = infix(member)->small_value();
    require(set[v - 1].expr == infix(member), std::string("missing member ") + member);
  }
  // FCF_3's final listed element: the exact term multiset for 255.
  const Expr* e255 = set.at_value(255);
  std::multiset<const Expr*> got(e255->children().begin(), e255->children().end());
  std::multiset<const Expr*> want;
  for (const char* term : {"x^x", "x^(x^x)", "x", "x^(x^x+x+1)", "x^(x^x+x)",
                           "x^(x^x+1)", "x^(x+1)", "1"}) {
    want.insert(infix(term));
  }
  require(got == want, "255 term multiset differs");
  return "65535 FCF expressions, all identical to encode_fcf, listed members present";
}

// ---------------------------------------------------------------------
// 2. Seven improved Zeta iterations reproduce the SCF batch.
std::string criterion2() {
  ZetaState s = zeta_initial();
  for (int i = 0; i < 7; ++i) s = zeta_step_improved(s);
  require(s.naturals.size() == 256 && s.naturals.contiguous_from_one(),
          "coverage is not exactly 1..256");
  const std::pair<std::uint64_t, const char*> members[] = {
      {2, "x"},           {3, "x+1"},         {4, "x^x"},
      {5, "x^x+1"},       {6, "(x+1)*x"},     {7, "(x+1)*x+1"},
      {255, "(x+1)*(x^x+1)*(x^(x^x)+1)"}};
  for (const auto& [v, text] : members) {
    require(s.naturals.at_value(v) == infix(text),
            "member " + std::to_string(v) + " differs");
  }
  const Expr* e255 = s.naturals.at_value(255);
  std::multiset<std::uint64_t> bases;
  for (const Expr* f : e255->children())
    bases.insert(evaluate(f->kind() == Kind::Power ? f->base() : f).to_u64());
  require(bases == std::multiset<std::uint64_t>{3, 5, 17}, "255 base values differ");
  for (const ValuedExpr& e : s.naturals) {
    if (e.expr != encode_scf(e.value)) fail("element differs from encode_scf");
    if (!is_scf(e.expr)) fail("element fails is_scf");
  }
  return "SCF expressions for 1..256 with all listed members";
}

// ---------------------------------------------------------------------
// 3. Prime sifting at bits=16 equals the Eratosthenes oracle.
std::string criterion3() {
  const SiftResult& r = sift16();
  std::vector<std::uint64_t> oracle = sieve_primes(1ull << 16);
  require(r.primes == oracle, "prime set differs from the sieve oracle");
  // Every prime beyond the initial 2 entered through a gap adjunction whose
  // primality was asserted at adjunction time.
  require(r.adjunction_checks == r.primes.size() - 1,
          "adjunction checks do not cover every adjoined prime");
  return std::to_string(r.primes.size()) + " primes <= 65536 match the sieve; " +
         std::to_string(r.adjunction_checks) + " adjunction primality checks";
}

// ---------------------------------------------------------------------
// 4. Encoder oracles: popcount and factorization, n <= 10^4.
std::string criterion4() {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    Natural nn(n);
    const Expr* f = encode_fcf(nn);
    std::size_t terms = (f->kind() == Kind::Sum && !is_x(f)) ? f->arity() : 1;
    require(terms == nn.popcount(), "FCF term count != popcount");
    require(f->small_value() == n, "FCF value mismatch");

    const Expr* s = encode_scf(nn);
    require(s->small_value() == n, "SCF value mismatch");
    std::vector<std::uint64_t> bases;
    if (s->kind() != Kind::One) {
      std::vector<const Expr*> factors;
      if (s->kind() == Kind::Product && !is_x(s))
        factors.assign(s->children().begin(), s->children().end());
      else
        factors.push_back(s);
      for (const Expr* fac : factors)
        bases.push_back(
            evaluate(fac->kind() == Kind::Power ? fac->base() : fac).to_u64());
    }
    std::vector<std::uint64_t> expected;
    for (const PrimePower& pp : factor(n))
      if (pp.prime != 2) expected.push_back(pp.prime);
    if (n % 2 == 0) expected.push_back(2);
    require(bases == expected, "SCF bases != factorization primes");
  }
  return "popcount and factorization oracles agree for all n <= 10^4";
}

// ---------------------------------------------------------------------
// 5. Canonicity / idempotence property suite over 10^4 random expressions.
std::string criterion5() {
  std::mt19937_64 rng(0x5eed5eedULL);
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    forge_test::RawNode t = forge_test::random_bounded_raw(rng, 4);
    const Expr* e = forge_test::build_smart(t);
    // Evaluation-preserving simplification against the independent route.
    require(evaluate(e) == Natural(forge_test::raw_eval(t)),
            "simplification changed the value");
    // parse . print identity in all three notations.
    for (Notation n : {Notation::Infix, Notation::Prefix, Notation::Postfix}) {
      if (parse(print(e, n), n) != e) fail("round trip failed");
    }
    // normalize idempotence (SCF needs the factorization budget).
    Natural v = evaluate(e);
    const Expr* nf = normalize(e, CanonicalForm::Fcf);
    require(normalize(nf, CanonicalForm::Fcf) == nf, "FCF normalize not idempotent");
    require(evaluate(nf) == v, "FCF normalize changed the value");
    if (v.fits_u64()) {
      const Expr* ns = normalize(e, CanonicalForm::Scf);
      require(normalize(ns, CanonicalForm::Scf) == ns, "SCF normalize not idempotent");
      require(evaluate(ns) == v, "SCF normalize changed the value");
    }
    ++checked;
  }
  return std::to_string(checked) + " random expressions, zero property failures";
}

// ---------------------------------------------------------------------
// 6. Complexity-shape checks via the pinned manipulation-counter model.
std::string criterion6() {
  // (a) Iteration counts equal the tower-coverage minimum.
  const std::pair<std::uint64_t, std::size_t> towers[] = {
      {1, 0}, {3, 1}, {15, 2}, {65535, 3}};
  for (const auto& [target, iters] : towers) {
    require(fcf_generate(target).iterations == iters, "iteration count differs");
  }

  // (b) FCF generation stays within the pinned linear bound C = 4.
  fs::path fcf_csv = scratch_dir() / "fcf_counters.csv";
  {
    std::ofstream out(fcf_csv);
    out << "target,manipulations\n";
    for (std::uint64_t target : {1ull << 8, 1ull << 12, 1ull << 16}) {
      FcfGenerateResult r = fcf_generate(target);
      out << target << ',' << r.counters.total() << '\n';
      require(r.counters.total() <= 4 * target,
              "manipulations exceed 4n at n=" + std::to_string(target));
    }
  }

  // (c) Sieve counters over bits 8..16 fit A*n^2/ln(n) within a factor-of-2
  // band after one-point calibration at bits=8.
  const SiftResult& r = sift16();
  fs::path sieve_csv = scratch_dir() / "sieve_counters.csv";
  std::ofstream out(sieve_csv);
  out << "bits,n,manipulations\n";
  auto model = [](std::size_t bits) {
    double n = std::ldexp(1.0, static_cast<int>(bits));
    return n * n / std::log(n);
  };
  double calibration = 0.0;
  double worst = 1.0;
  for (const SiftIteration& it : r.iterations) {
    out << it.bits << ',' << it.coverage << ',' << it.manipulations << '\n';
    if (it.bits < 8) continue;
    if (it.bits == 8) {
      calibration = static_cast<double>(it.manipulations) / model(8);
      continue;
    }
    double predicted = calibration * model(it.bits);
    double ratio = static_cast<double>(it.manipulations) / predicted;
    worst = std::max(worst, std::max(ratio, 1.0 / ratio));
    if (ratio < 0.5 || ratio > 2.0)
      fail("bits=" + std::to_string(it.bits) + " off the n^2/log n band, ratio " +
           std::to_string(ratio));
  }
  std::ostringstream os;
  os << "iterations match towers; fcf manipulations <= 4n; sieve counters within "
     << "factor " << std::fixed << std::setprecision(2) << worst
     << " of calibrated n^2/ln n (CSVs: " << fcf_csv.string() << ", "
     << sieve_csv.string() << ")";
  return os.str();
}

// ---------------------------------------------------------------------
// 7. Expected-length observation over 1..65536, all three metrics.
std::string criterion7() {
  std::ostringstream summary;
  summary << "direction per metric:";
  for (const char* metric : {"chars", "leaves", "gates"}) {
    fs::path a = scratch_dir() / (std::string("stats_") + metric + "_a.csv");
    fs::path b = scratch_dir() / (std::string("stats_") + metric + "_b.csv");
    std::string base_args = std::string("stats --max 65536 --metric ") + metric;
    require(run_cli(base_args + " --out " + a.string() + " 2>/dev/null") == 0,
            "stats run failed");
    require(run_cli(base_args + " --out " + b.string() + " 2>/dev/null") == 0,
            "stats rerun failed");
    std::string text = slurp(a);
    require(!text.empty() && text == slurp(b), "stats CSV not deterministic");
    require(text.rfind("n,fcf_len,scf_len\n", 0) == 0, "CSV header differs");

    std::size_t footer = text.rfind("mean,");
    require(footer != std::string::npos, "mean footer missing");
    double fcf_mean = 0, scf_mean = 0;
    require(std::sscanf(text.c_str() + footer, "mean,%lf,%lf", &fcf_mean, &scf_mean) == 2,
            "mean footer unparsable");
    // The expected direction is an observation to record, not an assertion.
    summary << ' ' << metric << ": "
            << (scf_mean < fcf_mean   ? "scf<fcf"
                : fcf_mean < scf_mean ? "fcf<scf"
                                      : "equal")
            << " (" << std::fixed << std::setprecision(2) << fcf_mean << " vs "
            << scf_mean << ")";
  }
  return summary.str();
}

// ---------------------------------------------------------------------
// 8. Basic Zeta recursion desk check at cap 100.
std::string criterion8() {
  ZetaState s1 = zeta_step_basic(zeta_initial(), 100);
  std::vector<std::uint64_t> v1;
  for (const ValuedExpr& e : s1.naturals) v1.push_back(e.value);
  require(v1 == std::vector<std::uint64_t>{1, 2, 3, 4}, "k=0 trace differs");
  require(s1.naturals.at_value(3) == infix("x+1"), "3 must be adjoined as x+1");

  ZetaState s2 = zeta_step_basic(s1, 100);
  std::vector<std::uint64_t> v2;
  for (const ValuedExpr& e : s2.naturals) v2.push_back(e.value);
  std::vector<std::uint64_t> expected{1,  2,  3,  4,  5,  6,  7,  8,  9,  12,
                                      16, 17, 18, 24, 27, 36, 48, 54, 72, 81};
  require(v2 == expected, "k=1 trace differs");
  require(s2.naturals.at_value(5) == infix("x^x+1"), "5 must be x^x+1");
  require(s2.naturals.at_value(7) == infix("(x+1)*x+1"), "7 must be (x+1)*x+1");
  require(s2.naturals.at_value(11) == nullptr, "11 must be deferred");
  require(s2.naturals.at_value(13) == nullptr, "13 must be deferred");
  return "k=0 adjoins 3; k=1 adjoins 5 and 7 (and 17); 11 and 13 deferred";
}

}  // namespace

int main() {
  criterion(1, "FCF batch generation", 10.0, criterion1);
  criterion(2, "improved Zeta recursion", 5.0, criterion2);
  criterion(3, "prime sifting vs sieve oracle", 60.0, criterion3);
  criterion(4, "encoder oracle equivalence", 30.0, criterion4);
  criterion(5, "canonicity and idempotence properties", 60.0, criterion5);
  criterion(6, "complexity-shape checks", 60.0, criterion6);
  criterion(7, "expected-length observation", 60.0, criterion7);
  criterion(8, "basic Zeta desk check", 5.0, criterion8);
  if (g_failures == 0) {
    std::printf("all 8 criteria passed\n");
  } else {
    std::printf("%d criterion(s) failed\n", g_failures);
  }
  return g_failures;
}
