#include "etaphi/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "etaphi/analysis.hpp"
#include "etaphi/reference_table.hpp"
#include "etaphi/reports.hpp"

namespace etaphi::cli {

using nlohmann::json;

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string weight_string(std::int64_t twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

EtaQuotientSpec target_spec(const RunConfig& c, std::int64_t default_h) {
  const int given = (c.h ? 1 : 0) + (c.spec ? 1 : 0) + (c.corpus ? 1 : 0);
  if (given > 1) throw UsageError("give at most one of --h, --spec, --corpus");
  if (c.spec) return EtaQuotientSpec::parse(*c.spec);
  if (c.corpus) {
    if (auto s = corpus_lookup(*c.corpus)) return *s;
    throw UsageError("unknown corpus entry '" + *c.corpus + "'");
  }
  if (c.h) return phi_spec(*c.h);
  if (default_h > 0) return phi_spec(default_h);
  throw UsageError("one of --h, --spec, --corpus is required");
}

RunResult run_expand(const RunConfig& c) {
  const EtaQuotientSpec spec = target_spec(c, 0);
  const QSeries s = expand(spec, c.n_max);
  const bool integral = s.is_integral();
  const bool annotate = spec == phi_spec(7);

  struct Row {
    std::int64_t key;  // n, or exponent in 1/24 units when fractional
    Int coeff;
  };
  std::vector<Row> rows;
  for (std::int64_t k = 0; k < s.trunc(); ++k) {
    const std::int64_t e24 = s.order24() + 24 * k;
    if (e24 > 24 * c.n_max) break;
    rows.push_back({integral ? e24 / 24 : e24, s.coeffs()[k]});
  }
  std::vector<reference::Discrepancy> flagged;
  if (annotate && integral)
    for (const auto& d : reference::known_discrepancies())
      if (d.n <= c.n_max) flagged.push_back(d);

  std::ostringstream os;
  const char* key_name = integral ? "n" : "exponent24";
  switch (c.format) {
    case Format::Json: {
      json coeffs = json::array();
      for (const auto& r : rows) coeffs.push_back(json{{key_name, r.key}, {"coefficient", int_to_json(r.coeff)}});
      json j{{"command", "expand"},
             {"spec", spec.to_string()},
             {"order24", s.order24()},
             {"weight_twice", spec.weight_twice()},
             {"integral", integral},
             {"n_max", c.n_max},
             {"coefficients", coeffs}};
      if (annotate) {
        json d = json::array();
        for (const auto& f : flagged) d.push_back(json{{"n", f.n}, {"published", f.published}, {"computed", f.computed}});
        j["paper_discrepancy"] = d;
      }
      os << dump(j);
      break;
    }
    case Format::Csv:
      os << key_name << ",coefficient\n";
      for (const auto& r : rows) os << r.key << ',' << to_string(r.coeff) << '\n';
      break;
    case Format::Text:
      os << "# eta-quotient " << spec.to_string() << "  order24=" << s.order24()
         << "  weight=" << weight_string(spec.weight_twice());
      if (!integral) os << "  (fractional leading exponent; first column is the exponent in 1/24 units)";
      os << '\n';
      for (const auto& r : rows) {
        os << r.key << ' ' << to_string(r.coeff);
        for (const auto& f : flagged)
          if (f.n == r.key) os << "  # paper_discrepancy: published " << f.published;
        os << '\n';
      }
      break;
  }
  return {kExitOk, os.str()};
}

RunResult run_coeffs(const RunConfig& c) {
  const auto n = static_cast<std::uint64_t>(c.n_max);
  const CoeffTable a = a_table(n, c.workers);
  const CoeffTable b = b_table(n, c.workers);
  const CoeffTable cc = c_table(n, c.workers);
  std::ostringstream os;
  switch (c.format) {
    case Format::Json: {
      json rows = json::array();
      for (std::uint64_t i = 1; i <= n; ++i)
        rows.push_back(json{{"n", i}, {"a", int_to_json(a.values[i])}, {"b", int_to_json(b.values[i])}, {"c", int_to_json(cc.values[i])}});
      os << dump(json{{"command", "coeffs"}, {"n_max", c.n_max}, {"rows", rows}});
      break;
    }
    case Format::Csv:
    case Format::Text: {
      const char sep = c.format == Format::Csv ? ',' : ' ';
      os << 'n' << sep << 'a' << sep << 'b' << sep << "c\n";
      for (std::uint64_t i = 1; i <= n; ++i)
        os << i << sep << to_string(a.values[i]) << sep << to_string(b.values[i]) << sep << to_string(cc.values[i]) << '\n';
      break;
    }
  }
  return {kExitOk, os.str()};
}

RunResult run_verify(const RunConfig& c) {
  const IdentityReport r = verify_identity(c.n_max, c.workers);
  std::ostringstream os;
  switch (c.format) {
    case Format::Json:
      os << dump(json{{"command", "verify"}, {"report", r}});
      break;
    case Format::Csv:
      os << "n_max,holds,first_mismatch,mismatch_count\n"
         << r.n_max << ',' << (r.holds ? "true" : "false") << ','
         << (r.first_mismatch ? std::to_string(*r.first_mismatch) : "") << ',' << r.mismatch_count << '\n';
      break;
    case Format::Text:
      if (r.holds)
        os << "identity c=(a-b)/8 holds on [1," << r.n_max << "]\n";
      else
        os << "identity c=(a-b)/8 FAILS: first mismatch at n=" << *r.first_mismatch << " (" << r.mismatch_count
           << " mismatches on [1," << r.n_max << "])\n";
      break;
  }
  return {r.holds ? kExitOk : kExitRefuted, os.str()};
}

RunResult run_positivity(const RunConfig& c) {
  const PositivityReport r = check_positivity(c.n_max);
  std::ostringstream os;
  switch (c.format) {
    case Format::Json:
      os << dump(json{{"command", "positivity"}, {"report", r}});
      break;
    case Format::Csv:
      os << "p,k,class,a,abs_b,holds\n";
      for (const auto& m : r.casewise)
        os << m.p << ',' << m.k << ',' << to_string(m.cls) << ',' << m.a.get_str() << ',' << m.abs_b.get_str() << ','
           << (m.holds ? "true" : "false") << '\n';
      break;
    case Format::Text: {
      std::size_t bad_cases = 0;
      for (const auto& m : r.casewise) bad_cases += m.holds ? 0 : 1;
      os << "c(n) > 0 for 2 <= n <= " << r.n_max << ": " << (r.failures.empty() ? "yes" : "NO") << '\n';
      if (!r.failures.empty()) os << "first failure at n=" << r.failures.front() << '\n';
      os << "prime-power case bounds: " << r.casewise.size() - bad_cases << '/' << r.casewise.size() << " hold\n";
      break;
    }
  }
  return {r.verified() ? kExitOk : kExitRefuted, os.str()};
}

RunResult run_nondecomp(const RunConfig& c) {
  if (!c.p) throw UsageError("nondecomp requires --p");
  const NondecompWitness w = nondecomp_witness(*c.p);
  std::ostringstream os;
  switch (c.format) {
    case Format::Json:
      os << dump(json(w));
      break;
    case Format::Csv:
      os << "p,bound,m,zero_range_ok,nonzero_range_ok,c2_zero,c2m_nonzero,valid\n"
         << w.p << ',' << w.bound << ',' << (w.m ? std::to_string(*w.m) : "") << ',' << w.zero_range_ok << ','
         << w.nonzero_range_ok << ',' << w.c2_zero << ',' << w.c2m_nonzero << ',' << w.valid() << '\n';
      break;
    case Format::Text:
      os << "p=" << w.p << " bound=" << w.bound << " m=" << (w.m ? std::to_string(*w.m) : "none") << ": "
         << (w.valid() ? "witness valid" : "witness FAILS (" + w.failed_condition + ")") << '\n';
      break;
  }
  return {w.valid() ? kExitOk : kExitRefuted, os.str()};
}

RunResult run_uniqueness(const RunConfig& c) {
  const EtaQuotientSpec spec = target_spec(c, 7);
  const CoeffTable table = coefficients_of(spec, c.n_max);
  const UniquenessWitness w = uniqueness_hypotheses(table);
  const bool ok = w.c1_zero && w.found();
  std::ostringstream os;
  switch (c.format) {
    case Format::Json:
      os << dump(json{{"command", "uniqueness"}, {"spec", spec.to_string()}, {"witness", w}});
      break;
    case Format::Csv:
      os << "n,c\n";
      for (std::size_t i = 0; i < w.indices.size(); ++i) os << w.indices[i] << ',' << to_string(w.coeffs[i]) << '\n';
      break;
    case Format::Text:
      os << "c(1)=0: " << (w.c1_zero ? "yes" : "no") << '\n';
      os << "pairwise coprime indices with c != 0:";
      for (std::size_t i = 0; i < w.indices.size(); ++i) os << ' ' << w.indices[i] << "(" << to_string(w.coeffs[i]) << ")";
      os << '\n' << (ok ? "hypotheses verified" : "hypotheses unverified within n <= " + std::to_string(w.search_bound)) << '\n';
      break;
  }
  return {ok ? kExitOk : kExitRefuted, os.str()};
}

RunResult run_scan(const RunConfig& c) {
  const std::int64_t h_max = c.h_max.value_or(24);
  const auto entries = conjecture_scan(h_max, c.n_max, c.workers);
  bool any_negative = false;
  for (const auto& e : entries) any_negative |= e.first_negative_index.has_value();
  std::ostringstream os;
  switch (c.format) {
    case Format::Json:
      os << dump(json{{"command", "scan"}, {"entries", entries}});
      break;
    case Format::Csv:
      os << "h,n_max,order24,first_negative_index,truncation_limited\n";
      for (const auto& e : entries)
        os << e.h << ',' << e.n_max << ',' << e.order24 << ','
           << (e.first_negative_index ? std::to_string(*e.first_negative_index) : "") << ','
           << (e.truncation_limited ? "true" : "false") << '\n';
      break;
    case Format::Text:
      for (const auto& e : entries)
        os << "h=" << e.h << ": "
           << (e.first_negative_index
                   ? "negative coefficient at q^(" + std::to_string(e.order24 + 24 * *e.first_negative_index) + "/24)"
                                : "no negative coefficient through n=" + std::to_string(e.n_max) + " (evidence only)")
           << '\n';
      break;
  }
  return {any_negative ? kExitRefuted : kExitOk, os.str()};
}

}  // namespace

RunResult run(const RunConfig& config) {
  if (config.n_max < 1 && config.command != Command::Nondecomp) throw UsageError("--n-max must be at least 1");
  switch (config.command) {
    case Command::Expand:
      return run_expand(config);
    case Command::Coeffs:
      return run_coeffs(config);
    case Command::Verify:
      return run_verify(config);
    case Command::Positivity:
      return run_positivity(config);
    case Command::Nondecomp:
      return run_nondecomp(config);
    case Command::Uniqueness:
      return run_uniqueness(config);
    case Command::Scan:
      return run_scan(config);
  }
  throw UsageError("unknown command");
}

namespace {

std::int64_t default_n_max(Command c) {
  if (const char* env = std::getenv(kNMaxEnv)) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::logic_error&) {
    }
    throw UsageError(std::string(kNMaxEnv) + " is not an integer");
  }
  switch (c) {
    case Command::Verify:
    case Command::Positivity:
      return 100000;
    case Command::Scan:
      return 2000;
    default:
      return 50;
  }
}

}  // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fourier coefficients of eta-quotients and the L-function checks for eta(7t)^7/eta(t)", "etaphi"};
  app.set_help_flag("--help", "print this help");
  app.require_subcommand(1);

  RunConfig config;
  std::optional<std::int64_t> n_max;
  std::string format = "text";
  std::int64_t h = 0, p = 0, h_max = 0;
  std::string spec, corpus, output;

  const std::map<std::string, Command> commands = {
      {"expand", Command::Expand},         {"coeffs", Command::Coeffs}, {"verify", Command::Verify},
      {"positivity", Command::Positivity}, {"nondecomp", Command::Nondecomp},
      {"uniqueness", Command::Uniqueness}, {"scan", Command::Scan}};
  const std::map<std::string, std::string> help = {
      {"expand", "q-expansion of an eta-quotient (rows: n, coefficient)"},
      {"coeffs", "a(n), b(n), c(n) from the closed formulas"},
      {"verify", "check c = (a - b)/8 against the q-expansion"},
      {"positivity", "c(n) > 0 and the prime-power case bounds"},
      {"nondecomp", "non-decomposability witness for eta(p t)^p/eta(t)"},
      {"uniqueness", "search for the uniqueness-lemma hypotheses"},
      {"scan", "scan eta_{Phi_h} for negative coefficients"}};

  std::map<CLI::App*, Command> by_app;
  for (const auto& [name, cmd] : commands) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    by_app[sub] = cmd;
    sub->add_option("--n-max", n_max, "truncation degree");
    sub->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--output,-o", output, "write the report to this file");
    sub->add_option("--workers", config.workers, "worker threads");
    if (cmd == Command::Expand || cmd == Command::Uniqueness) {
      sub->add_option("--h", h, "eta_{Phi_h}");
      sub->add_option("--spec", spec, "eta-quotient as scale:exponent,...");
      sub->add_option("--corpus", corpus, "named eta-quotient");
    }
    if (cmd == Command::Nondecomp) sub->add_option("--p", p, "prime >= 11")->required();
    if (cmd == Command::Scan) sub->add_option("--h-max", h_max, "largest h scanned");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    for (const auto& [sub, cmd] : by_app) {
      if (!sub->parsed()) continue;
      auto given = [sub](const char* name) {
        const CLI::Option* o = sub->get_option_no_throw(name);
        return o != nullptr && o->count() > 0;
      };
      config.command = cmd;
      if (given("--h")) config.h = h;
      if (given("--spec")) config.spec = spec;
      if (given("--corpus")) config.corpus = corpus;
      if (cmd == Command::Nondecomp) config.p = p;
      if (given("--h-max")) config.h_max = h_max;
      if (given("--output")) config.output = output;
    }
    config.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
    config.n_max = n_max ? *n_max : default_n_max(config.command);

    const RunResult result = run(config);
    if (config.output) {
      std::ofstream file(*config.output, std::ios::binary);
      if (!file) throw UsageError("cannot open output file " + *config.output);
      file << result.report;
    } else {
      out << result.report;
    }
    return result.exit_code;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IdentityViolation& e) {
    err << "identity violated: " << e.what() << '\n';
    return kExitRefuted;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kExitRefuted;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace etaphi::cli
