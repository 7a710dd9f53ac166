// Command-line front end: construct RM and CSS codes, decide the CSS-T
// property, sweep parameter ranges, and print family rate/distance tables.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rmcsst/asymptotics.hpp"
#include "rmcsst/css.hpp"
#include "rmcsst/csst.hpp"
#include "rmcsst/errors.hpp"
#include "rmcsst/reed_muller.hpp"

namespace {

using namespace rmcsst;

constexpr int kExitOk = 0;
constexpr int kExitSelftestFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDisagreement = 3;
constexpr int kExitResourceCap = 4;

std::string fmt_g6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string fmt_d(const std::optional<std::uint64_t>& d) { return d ? std::to_string(*d) : "inf"; }

std::string verdict_str(bool v) { return v ? "yes" : "no"; }

// ---- rm-info ---------------------------------------------------------------

int cmd_rm_info(int r, unsigned m, bool emit_matrix) {
  const RmParams p = rm_params(r, m);
  std::optional<RmCode> rm;
  if (emit_matrix) rm = rm_code(r, m);

  std::ostringstream line;
  line << "RM(" << r << "," << m << "): [" << p.n << "," << p.k << "," << fmt_d(p.d) << "]";
  if (m <= 5 && r >= 0) {
    const RmCode code = rm ? *rm : rm_code(r, m);
    if (code.code.dim() <= kMinDistanceDimCap) {
      const auto d_brute = min_distance(code.code);
      if (d_brute != p.d) {
        std::cerr << "internal error: brute-force distance disagrees with closed form\n";
        return kExitSelftestFail;
      }
      line << " (d=" << fmt_d(d_brute) << " exact-verified)";
    }
  }
  std::cout << line.str() << "\n";
  if (emit_matrix) std::cout << to_text(rm->code.generator());
  return kExitOk;
}

// ---- csst-check ------------------------------------------------------------

int cmd_csst_check(unsigned m, int r1, int r2, const std::string& method) {
  if (!(0 <= r2 && r2 <= r1 && r1 <= static_cast<int>(m)))
    throw std::invalid_argument("csst-check: need 0 <= r2 <= r1 <= m");

  const bool theorem_applicable = r1 <= static_cast<int>((m - 1) / 2);
  std::vector<std::pair<std::string, bool>> verdicts;
  std::optional<BitVector> witness;

  const bool want_all = method == "all";
  if ((want_all && theorem_applicable) || method == "theorem") {
    verdicts.emplace_back("theorem", check_csst_theorem(m, r1, r2));
  }
  if (want_all || method == "corollary") {
    const CssTReport rep = check_csst_corollary(make_css(rm_code(r1, m).code, rm_code(r2, m).code));
    verdicts.emplace_back("corollary", rep.verdict);
    if (rep.witness) witness = rep.witness;
  }
  if (want_all || method == "bruteforce") {
    const CssTReport rep = check_csst_bruteforce(make_css(rm_code(r1, m).code, rm_code(r2, m).code));
    verdicts.emplace_back("bruteforce", rep.verdict);
    if (rep.witness) witness = rep.witness;
  }
  if (verdicts.empty()) throw std::invalid_argument("csst-check: theorem inapplicable for r1 > floor((m-1)/2); use brute force");

  bool agree = true;
  for (const auto& [name, v] : verdicts) agree = agree && (v == verdicts.front().second);

  if (!agree) {
    for (const auto& [name, v] : verdicts) std::cout << name << ": CSS-T " << verdict_str(v) << "\n";
    std::cout << "DISAGREEMENT between methods\n";
    return kExitDisagreement;
  }

  std::ostringstream names;
  for (std::size_t i = 0; i < verdicts.size(); ++i) names << (i ? ", " : "") << verdicts[i].first;
  std::cout << "CSS-T: " << verdict_str(verdicts.front().second) << " (" << names.str()
            << (verdicts.size() > 1 ? " agree" : "") << (want_all && !theorem_applicable ? "; theorem not applicable" : "")
            << ")\n";
  if (witness) std::cout << "witness: " << witness->to_string() << "\n";
  const CssParams params = rm_css_params(m, r1, r2);
  if (params.k == 0) std::cout << "note: k = 0 (degenerate pair)\n";
  return kExitOk;
}

// ---- csst-search -----------------------------------------------------------

int cmd_csst_search(unsigned m, const std::string& format) {
  if (m < 1 || m > 20) throw std::invalid_argument("csst-search: m must be in [1, 20]");
  const bool with_bruteforce = m <= 5;
  const int half = static_cast<int>((m - 1) / 2);

  struct Row {
    int r1, r2;
    bool theorem, bruteforce;
    CssParams params;
  };
  std::vector<Row> rows;
  for (int r1 = half; r1 >= 0; --r1) {
    for (int r2 = 0; r2 <= r1; ++r2) {
      Row row{r1, r2, check_csst_theorem(m, r1, r2), false, rm_css_params(m, r1, r2)};
      if (with_bruteforce)
        row.bruteforce = check_csst_bruteforce(make_css(rm_code(r1, m).code, rm_code(r2, m).code)).verdict;
      rows.push_back(row);
    }
  }

  if (format == "csv") {
    std::cout << "r1,r2,theorem" << (with_bruteforce ? ",bruteforce" : "") << ",n,k,d_lower\n";
    for (const Row& row : rows) {
      std::cout << row.r1 << "," << row.r2 << "," << verdict_str(row.theorem);
      if (with_bruteforce) std::cout << "," << verdict_str(row.bruteforce);
      std::cout << "," << row.params.n << "," << row.params.k << "," << fmt_d(row.params.d_lower) << "\n";
    }
  } else {
    std::cout << "CSS-T search over CSS(RM(r1," << m << "), RM(r2," << m << ")), r2 <= r1 <= " << half << "\n";
    std::cout << std::setw(4) << "r1" << std::setw(4) << "r2" << std::setw(9) << "theorem";
    if (with_bruteforce) std::cout << std::setw(12) << "bruteforce";
    std::cout << std::setw(8) << "n" << std::setw(8) << "k" << std::setw(9) << "d_lower" << "\n";
    for (const Row& row : rows) {
      std::cout << std::setw(4) << row.r1 << std::setw(4) << row.r2 << std::setw(9) << verdict_str(row.theorem);
      if (with_bruteforce) std::cout << std::setw(12) << verdict_str(row.bruteforce);
      std::cout << std::setw(8) << row.params.n << std::setw(8) << row.params.k << std::setw(9)
                << fmt_d(row.params.d_lower);
      if (row.params.k == 0) std::cout << "  (k=0)";
      std::cout << "\n";
    }
  }
  return kExitOk;
}

// ---- stabilizer ------------------------------------------------------------

int cmd_stabilizer(unsigned m, int r1, int r2, const std::string& out_path) {
  if (r2 > r1) throw std::invalid_argument("stabilizer: need r2 <= r1 so that RM(r2,m) nests in RM(r1,m)");
  const CssPair pair = make_css(rm_code(r1, m).code, rm_code(r2, m).code);
  const CssParams params = rm_css_params(m, r1, r2);
  const BitMatrix gs = stabilizer_matrix(pair);

  std::ostringstream body;
  body << "# CSS(RM(" << r1 << "," << m << "), RM(" << r2 << "," << m << ")) n=" << params.n << " k=" << params.k
       << " d_lower=" << fmt_d(params.d_lower) << "\n"
       << to_text(gs);

  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("stabilizer: cannot open output file " + out_path);
    out << body.str();
  }
  return kExitOk;
}

// ---- family ----------------------------------------------------------------

std::string family_footer_value(const FamilySpec& spec) {
  const std::optional<double> rate = asymptotic_rate(spec);
  if (!rate) return "vanishing";
  if (spec.kind == FamilyKind::SqrtT)
    return "Phi(" + fmt_g6(-2.0 * spec.param) + ") ~= " + fmt_g6(*rate);
  return fmt_g6(*rate);
}

int cmd_family(const std::string& family, double param, unsigned m_max, std::optional<int> explicit_r2,
               const std::string& format, bool with_gamma) {
  FamilySpec spec;
  if (family == "const")
    spec.kind = FamilyKind::ConstantT;
  else if (family == "sqrt")
    spec.kind = FamilyKind::SqrtT;
  else if (family == "linear")
    spec.kind = FamilyKind::LinearT;
  else if (family == "third-order")
    spec.kind = FamilyKind::ThirdOrder;
  else
    throw std::invalid_argument("family: unknown family tag " + family);
  spec.param = param;
  spec.explicit_r2 = explicit_r2;
  if (m_max < 1 || m_max > 62) throw std::invalid_argument("family: m-max must be in [1, 62]");
  if (const auto warning = validate_family(spec)) std::cerr << "warning: " << *warning << "\n";

  auto gamma_str = [&](const FamilyRow& row) -> std::string {
    const auto k = row.k_quantum.to_u64();
    if (!k || *k == 0) return "n/a";
    return fmt_g6(std::log(static_cast<double>(row.n) / static_cast<double>(*k)) /
                  std::log(static_cast<double>(row.d_lower)));
  };

  const bool csv = format == "csv";
  auto human_cell = [](const std::string& s, int width) {
    std::ostringstream os;
    os << "  " << std::setw(width) << s;
    return os.str();
  };
  if (csv) {
    std::cout << "m,r1,r2,n,k,d_lower,rate_c1,rate_q,rel_distance" << (with_gamma ? ",gamma" : "") << "\n";
  } else {
    std::cout << std::setw(4) << "m" << human_cell("r1", 3) << human_cell("r2", 3) << human_cell("n", 10)
              << human_cell("k", 10) << human_cell("d_lower", 7) << human_cell("rate_c1", 14)
              << human_cell("rate_q", 14) << human_cell("rel_dist", 14);
    if (with_gamma) std::cout << human_cell("gamma", 8);
    std::cout << "\n";
  }
  for (unsigned m = 1; m <= m_max; ++m) {
    const FamilyRow row = family_row(spec, m);
    if (csv) {
      if (!row.admissible) {
        std::cout << m << ",n/a,n/a," << row.n << ",n/a,n/a,n/a,n/a,n/a" << (with_gamma ? ",n/a" : "") << "\n";
      } else {
        std::cout << m << "," << row.r1 << "," << row.r2 << "," << row.n << "," << row.k_quantum.to_string() << ","
                  << row.d_lower << "," << row.rate_c1.str() << "," << row.quantum_rate.str() << ","
                  << row.rel_distance.str();
        if (with_gamma) std::cout << "," << gamma_str(row);
        std::cout << "\n";
      }
    } else {
      if (!row.admissible) {
        std::cout << std::setw(4) << m << "  n/a (" << row.reason << ")\n";
      } else {
        std::cout << std::setw(4) << m << human_cell(std::to_string(row.r1), 3)
                  << human_cell(std::to_string(row.r2), 3) << human_cell(std::to_string(row.n), 10)
                  << human_cell(row.k_quantum.to_string(), 10) << human_cell(std::to_string(row.d_lower), 7)
                  << human_cell(row.rate_c1.str(), 14) << human_cell(row.quantum_rate.str(), 14)
                  << human_cell(row.rel_distance.str(), 14);
        if (with_gamma) std::cout << human_cell(gamma_str(row), 8);
        std::cout << "\n";
      }
    }
  }
  if (csv) {
    std::cout << "# k is the CSS dimension k1-k2 = sum_{i=r2+1}^{r1} C(m,i), not the order difference r1-r2\n";
    std::cout << "# asymptotic_rate=" << family_footer_value(spec) << "\n";
  } else {
    std::cout << "note: k is the CSS dimension k1-k2 = sum_{i=r2+1}^{r1} C(m,i), not the order difference r1-r2\n";
    std::cout << "asymptotic rate = " << family_footer_value(spec) << "\n";
  }
  return kExitOk;
}

// ---- selftest ----------------------------------------------------------------

int cmd_selftest(bool quick) {
  // Suite 1: RM dual identity.
  {
    const unsigned m_top = quick ? 5 : 7;
    unsigned total = 0, ok = 0;
    std::string first_fail;
    for (unsigned m = 1; m <= m_top; ++m) {
      for (int r = 0; r < static_cast<int>(m); ++r) {
        ++total;
        if (dual(rm_code(r, m).code).canon() == rm_code(rm_dual_order(r, m), m).code.canon())
          ++ok;
        else if (first_fail.empty())
          first_fail = "RM(" + std::to_string(r) + "," + std::to_string(m) + ")";
      }
    }
    std::cout << "rm-dual-identity: " << ok << "/" << total << " exact (m <= " << m_top << ")\n";
    if (ok != total) {
      std::cout << "counterexample: dual(" << first_fail << ")\n";
      return kExitSelftestFail;
    }
  }

  // Suite 2: shorten/puncture duality on RM codes and random codes.
  {
    unsigned total = 0, ok = 0;
    std::string first_fail;
    auto check = [&](const LinearCode& c, const SupportSet& i, const std::string& label) {
      ++total;
      if (dual(shorten(c, i)).canon() == puncture(dual(c), i).canon())
        ++ok;
      else if (first_fail.empty())
        first_fail = label;
    };
    for (unsigned m = 1; m <= 4; ++m) {
      for (int r = -1; r <= static_cast<int>(m); ++r) {
        const LinearCode c = rm_code(r, m).code;
        const std::size_t n = c.length();
        for (std::size_t a = 0; a < n; ++a) {
          check(c, SupportSet({a}), "RM singleton");
          for (std::size_t b = a + 1; b < n; ++b) {
            if (n > 2) check(c, SupportSet({a, b}), "RM pair");  // |I| = n is rejected by contract
          }
        }
      }
    }
    std::mt19937_64 rng(20240517);
    const unsigned random_checks = quick ? 50 : 200;
    for (unsigned i = 0; i < random_checks; ++i) {
      std::uniform_int_distribution<std::size_t> n_dist(2, 12);
      const std::size_t n = n_dist(rng);
      std::uniform_int_distribution<std::size_t> rows_dist(1, n);
      BitMatrix gen(rows_dist(rng), n);
      std::bernoulli_distribution bit;
      for (std::size_t r = 0; r < gen.rows(); ++r)
        for (std::size_t c = 0; c < n; ++c) gen.set(r, c, bit(rng));
      const LinearCode c(gen);
      std::uniform_int_distribution<std::size_t> size_dist(0, n - 1);
      std::vector<std::size_t> idx(n);
      std::iota(idx.begin(), idx.end(), std::size_t{0});
      std::shuffle(idx.begin(), idx.end(), rng);
      idx.resize(size_dist(rng));
      check(c, SupportSet(idx), "random");
    }
    std::cout << "shorten-puncture-duality: " << ok << "/" << total << " agree\n";
    if (ok != total) {
      std::cout << "counterexample: " << first_fail << "\n";
      return kExitSelftestFail;
    }
  }

  // Suite 3: closed form vs brute force.
  {
    const unsigned m_top = quick ? 4 : 5;
    const auto rows = cross_validate(m_top);
    unsigned ok = 0;
    const CrossRow* bad = nullptr;
    for (const CrossRow& row : rows) {
      if (row.theorem_verdict == row.bruteforce_verdict)
        ++ok;
      else if (!bad)
        bad = &row;
    }
    std::cout << "theorem-vs-bruteforce: " << ok << "/" << rows.size() << " agree (m <= " << m_top << ")\n";
    if (bad) {
      std::cout << "counterexample: (m=" << bad->m << ", r1=" << bad->r1 << ", r2=" << bad->r2
                << ") theorem=" << verdict_str(bad->theorem_verdict)
                << " bruteforce=" << verdict_str(bad->bruteforce_verdict) << "\n";
      return kExitSelftestFail;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reed-Muller / CSS-T code toolkit"};
  app.require_subcommand(1);

  int r = 0, r1 = 0, r2 = 0;
  unsigned m = 1, m_max = 10;
  bool matrix_flag = false, quick = false, gamma_flag = false;
  std::string method = "all", format = "human", out_path, family_tag;
  double param = 0.0;
  int r2_opt = -1;

  CLI::App* rm_info = app.add_subcommand("rm-info", "Parameters (and generator) of RM(r,m)");
  rm_info->add_option("r", r, "order")->required();
  rm_info->add_option("m", m, "number of variables")->required();
  rm_info->add_flag("--matrix", matrix_flag, "emit the generator matrix in matrix text format");

  CLI::App* csst_check = app.add_subcommand("csst-check", "Decide whether CSS(RM(r1,m), RM(r2,m)) is CSS-T");
  csst_check->add_option("m", m)->required();
  csst_check->add_option("r1", r1)->required();
  csst_check->add_option("r2", r2)->required();
  csst_check->add_option("--method", method, "theorem|corollary|bruteforce|all")
      ->check(CLI::IsMember({"theorem", "corollary", "bruteforce", "all"}));

  CLI::App* csst_search = app.add_subcommand("csst-search", "Sweep all (r1, r2) for a given m");
  csst_search->add_option("m", m)->required();
  csst_search->add_option("--format", format)->check(CLI::IsMember({"human", "csv"}));

  CLI::App* stabilizer = app.add_subcommand("stabilizer", "Emit the stabilizer generator matrix of a CSS pair");
  stabilizer->add_option("m", m)->required();
  stabilizer->add_option("r1", r1)->required();
  stabilizer->add_option("r2", r2)->required();
  stabilizer->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* family = app.add_subcommand("family", "Rate/distance table of a CSS-T family");
  family->add_option("--family", family_tag, "const|sqrt|linear|third-order")->required();
  family->add_option("--param", param, "t0 (const), c (sqrt) or a (linear)");
  family->add_option("--m-max", m_max, "largest m in the table")->required();
  family->add_option("--r2", r2_opt, "explicit r2 (default: largest the parity rule allows)")
      ->check(CLI::NonNegativeNumber);
  family->add_flag("--gamma", gamma_flag, "append the distillation-overhead exponent log(n/k)/log(d)");
  family->add_option("--format", format)->check(CLI::IsMember({"human", "csv"}));

  CLI::App* selftest = app.add_subcommand("selftest", "Run the embedded consistency suites");
  selftest->add_flag("--quick", quick, "reduced ranges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (rm_info->parsed()) return cmd_rm_info(r, m, matrix_flag);
    if (csst_check->parsed()) return cmd_csst_check(m, r1, r2, method);
    if (csst_search->parsed()) return cmd_csst_search(m, format);
    if (stabilizer->parsed()) return cmd_stabilizer(m, r1, r2, out_path);
    if (family->parsed())
      return cmd_family(family_tag, param, m_max, r2_opt >= 0 ? std::optional<int>(r2_opt) : std::nullopt, format,
                        gamma_flag);
    if (selftest->parsed()) return cmd_selftest(quick);
  } catch (const EnumerationCapError& e) {
    std::cerr << "error (resource cap): " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSelftestFail;
  }
  return kExitUsage;
}
