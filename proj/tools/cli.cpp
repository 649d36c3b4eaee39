#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "repseq/bench.hpp"
#include "repseq/drivers.hpp"
#include "repseq/errors.hpp"
#include "repseq/oracle.hpp"
#include "repseq/period.hpp"

namespace repseq::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModeInfo {
  SourceMode source;
  ExponentDomain domain;
};

const std::map<std::string, ModeInfo>& modes() {
  static const std::map<std::string, ModeInfo> table{
      {"nonint", {SourceMode::NonInteger, ExponentDomain::NonInteger}},
      {"periodic", {SourceMode::Periodic, ExponentDomain::Periodic}},
      {"square", {SourceMode::Square, ExponentDomain::Even}},
      {"any", {SourceMode::AnyRepetition, ExponentDomain::AnyRepetition}},
      {"d3", {SourceMode::D3, ExponentDomain::SquareToCube}},
      {"d4", {SourceMode::D4, ExponentDomain::CubeToQuartic}},
  };
  return table;
}

std::vector<std::string> mode_tokens() {
  std::vector<std::string> out;
  for (const auto& [name, _] : modes()) out.push_back(name);
  return out;
}

RepetitionResult solve(SourceMode mode, std::string_view text, const DriverOptions& opts) {
  switch (mode) {
    case SourceMode::NonInteger: return d2_driver(text, opts);
    case SourceMode::D3: return d3_driver(text, opts);
    case SourceMode::D4: return d4_driver(text, opts);
    case SourceMode::Periodic: return longest_periodic(text, opts);
    case SourceMode::Square: return longest_square(text, opts);
    case SourceMode::AnyRepetition: return longest_any_repetition(text, opts);
    case SourceMode::Oracle: break;
  }
  throw std::logic_error("no driver for mode");
}

// Bytes >= 0x80 are escaped as the code point of the same value, so every
// input byte survives a round trip and the output is plain ASCII.
std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (const char ch : s) {
    const auto c = static_cast<unsigned char>(ch);
    if (c == '"') {
      out += "\\\"";
    } else if (c == '\\') {
      out += "\\\\";
    } else if (c < 0x20 || c >= 0x7f) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\u%04x", c);
      out += buf;
    } else {
      out.push_back(ch);
    }
  }
  return out + "\"";
}

std::string json_rational(const ExactRational& r) {
  return "{\"num\":" + std::to_string(r.num()) + ",\"den\":" + std::to_string(r.den()) + "}";
}

template <class Seq, class F>
std::string joined(const Seq& seq, std::string_view sep, F&& fmt) {
  std::string out;
  bool first = true;
  for (const auto& v : seq) {
    if (!first) out += sep;
    first = false;
    out += fmt(v);
  }
  return out;
}

auto to_str = [](std::size_t v) { return std::to_string(v); };

void print_result(std::ostream& out, bool json, const std::string& mode, std::size_t n, const RepetitionResult& r,
                  bool witness) {
  if (json) {
    out << "{\"mode\":" << json_string(mode) << ",\"n\":" << n << ",\"length\":" << r.length;
    if (witness) {
      out << ",\"witness\":";
      if (!r.witness) {
        out << "null";
      } else {
        const auto& w = *r.witness;
        out << "{\"positions\":[" << joined(w.positions, ",", to_str) << "],\"string\":" << json_string(w.content)
            << ",\"minPeriod\":" << w.min_period << ",\"maxExponent\":" << json_rational(w.max_exponent)
            << ",\"domainExponent\":" << json_rational(w.domain_exponent) << "}";
      }
    }
    out << "}\n";
    return;
  }
  out << "mode " << mode << "\nn " << n << "\nlength " << r.length << '\n';
  if (witness && r.witness) {
    const auto& w = *r.witness;
    out << "positions " << joined(w.positions, ",", to_str) << "\nstring " << w.content << "\nminPeriod "
        << w.min_period << "\nmaxExponent " << w.max_exponent << "\ndomainExponent " << w.domain_exponent << '\n';
  }
}

struct InputArgs {
  std::optional<std::string> text;
  std::optional<std::string> file;
  bool no_trim = false;
};

void add_input_options(CLI::App& cmd, InputArgs& in) {
  auto* t = cmd.add_option("--text", in.text, "Input text given inline");
  auto* f = cmd.add_option("--file", in.file, "Read the input text from a file");
  t->excludes(f);
  cmd.add_flag("--trim-newline", "Strip one trailing newline from file/stdin input (default)");
  cmd.add_flag("--no-trim", in.no_trim, "Keep file/stdin input byte-exact");
}

std::string read_input(const InputArgs& args, std::istream& in) {
  if (args.text) return *args.text;
  std::string data;
  if (args.file) {
    std::ifstream f(*args.file, std::ios::binary);
    if (!f) throw IoError("cannot open '" + *args.file + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    if (f.bad()) throw IoError("cannot read '" + *args.file + "'");
    data = std::move(ss).str();
  } else {
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("cannot read standard input");
    data = std::move(ss).str();
  }
  if (!args.no_trim && !data.empty() && data.back() == '\n') {
    data.pop_back();
    if (!data.empty() && data.back() == '\r') data.pop_back();
  }
  return data;
}

unsigned parse_threads(const Environment& env, unsigned fallback) {
  if (!env.threads) return fallback;
  const auto& s = *env.threads;
  char* end = nullptr;
  const auto v = std::strtoul(s.c_str(), &end, 10);
  if (s.empty() || *end != '\0' || v == 0 || v > 4096)
    throw UsageError("REPSEQ_THREADS must be a positive integer, got '" + s + "'");
  return static_cast<unsigned>(v);
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("--sizes expects comma-separated integers, got '" + s + "'");
    out.push_back(std::stoull(tok));
  }
  if (out.empty()) throw UsageError("--sizes is empty");
  return out;
}

}  // namespace

Environment environment_from_process() {
  Environment env;
  if (const char* t = std::getenv("REPSEQ_THREADS")) env.threads = t;
  return env;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const Environment& env) {
  CLI::App app{"Longest subsequences with prescribed repetition exponents", "repseq"};
  app.require_subcommand(1);
  const auto mode_check = CLI::IsMember(mode_tokens());
  const auto format_check = CLI::IsMember({"text", "json"});

  std::string mode, format = "text";
  InputArgs input;
  bool witness = false, paper_literal = false;
  std::optional<std::size_t> max_n;
  std::size_t limit = kOracleLimit;

  auto* find = app.add_subcommand("find", "Longest subsequence with an exponent in the mode's domain");
  find->add_option("--mode", mode, "nonint|periodic|square|any|d3|d4")->required()->check(mode_check);
  add_input_options(*find, input);
  find->add_flag("--witness", witness, "Report positions and exponents of one longest subsequence");
  find->add_option("--format", format)->check(format_check);
  find->add_flag("--paper-literal", paper_literal, "Gate the two-factor anchor on L[y-1][z-1] (stricter)");
  find->add_option("--max-n", max_n, "Override the mode's input-length limit");

  auto* analyze = app.add_subcommand("analyze", "Periods, exponents and class of the input itself");
  add_input_options(*analyze, input);
  analyze->add_option("--format", format)->check(format_check);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive search over all subsequences (small inputs)");
  oracle->add_option("--mode", mode)->required()->check(mode_check);
  add_input_options(*oracle, input);
  oracle->add_option("--limit", limit, "Lower the input-length limit (at most 22)");
  oracle->add_flag("--witness", witness, "Report the witness record");
  oracle->add_option("--format", format)->check(format_check);

  std::string sizes, out_path, kind_name = "random";
  unsigned sigma = 2;
  std::uint64_t seed = 0;
  std::size_t reps = 3;
  auto* bench = app.add_subcommand("bench", "Time a mode over generated inputs and write CSV");
  bench->add_option("--mode", mode)->required()->check(mode_check);
  bench->add_option("--sizes", sizes, "Comma-separated ascending input lengths")->required();
  bench->add_option("--alphabet", sigma)->required()->check(CLI::Range(1u, 256u));
  bench->add_option("--seed", seed)->required();
  bench->add_option("--reps", reps)->check(CLI::PositiveNumber);
  bench->add_option("--out", out_path)->required();
  bench->add_option("--kind", kind_name)->check(CLI::IsMember({"random", "unary", "periodic-planted"}));
  bench->add_option("--max-n", max_n, "Override the mode's input-length limit");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "repseq: " << e.what() << '\n';
    return kUsage;
  }

  const bool json = format == "json";
  try {
    if (find->parsed()) {
      const auto& info = modes().at(mode);
      const auto text = read_input(input, in);
      DriverOptions opts;
      opts.reconstruct = witness;
      opts.gate = paper_literal ? D2Gate::PaperLiteral : D2Gate::Corrected;
      opts.threads = parse_threads(env, 0);
      opts.max_n = max_n;
      print_result(out, json, mode, text.size(), solve(info.source, text, opts), witness);
      return kOk;
    }
    if (analyze->parsed()) {
      const auto text = read_input(input, in);
      if (text.empty()) throw UsageError("analyze needs a non-empty text");
      const auto prof = profile(text);
      const auto cls = classification_name(classify(text));
      if (json) {
        out << "{\"n\":" << prof.length << ",\"periods\":[" << joined(prof.periods, ",", to_str)
            << "],\"exponents\":[" << joined(prof.exponents, ",", json_rational) << "],\"class\":\"" << cls
            << "\"}\n";
      } else {
        out << "n " << prof.length << "\nperiods " << joined(prof.periods, ",", to_str) << "\nexponents "
            << joined(prof.exponents, ",", [](const ExactRational& r) { return r.str(); }) << "\nclass " << cls
            << '\n';
      }
      return kOk;
    }
    if (oracle->parsed()) {
      if (limit > kOracleLimit)
        throw UsageError("--limit may only lower the oracle limit of " + std::to_string(kOracleLimit));
      const auto& info = modes().at(mode);
      const auto text = read_input(input, in);
      print_result(out, json, mode, text.size(), oracle_longest(text, info.domain, limit), witness);
      return kOk;
    }
    if (bench->parsed()) {
      const auto& info = modes().at(mode);
      ScalingConfig cfg;
      cfg.mode = mode;
      cfg.sizes = parse_sizes(sizes);
      cfg.sigma = sigma;
      cfg.seed = seed;
      cfg.reps = reps;
      cfg.kind = *parse_string_kind(kind_name);
      if (!std::is_sorted(cfg.sizes.begin(), cfg.sizes.end())) throw UsageError("--sizes must be ascending");
      const auto cap = max_n.value_or(default_limit(info.source));
      for (auto n : cfg.sizes)
        if (n > cap) throw GuardError(mode, n, cap);

      DriverOptions opts;
      opts.threads = parse_threads(env, 1);
      opts.max_n = max_n;
      const auto report =
          run_scaling(cfg, [&](std::string_view t) { return solve(info.source, t, opts).length; });
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw IoError("cannot open '" + out_path + "' for writing");
      write_csv(f, report.rows, opts.threads > 1 ? opts.threads : 0);
      f.close();
      if (!f) throw IoError("cannot write '" + out_path + "'");
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.4f", report.slope);
      out << "rows " << report.rows.size() << "\nslope " << buf << '\n';
      return kOk;
    }
  } catch (const GuardError& e) {
    err << "repseq: " << e.what()
        << (e.guard() == "oracle" ? " (--limit can only lower it)" : "; raise it with --max-n") << '\n';
    return kGuard;
  } catch (const IoError& e) {
    err << "repseq: " << e.what() << '\n';
    return kIo;
  } catch (const UsageError& e) {
    err << "repseq: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "repseq: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace repseq::cli
