#include "realpoincare/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "realpoincare/errors.hpp"
#include "realpoincare/report.hpp"

namespace realpoincare {

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int fail(std::ostream& err, int code, const std::string& kind, const std::string& msg) {
  err << "error (" << kind << "): " << msg << "\n";
  return code;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    auto text = read_file(cfg.input_path);
    if (!text) return fail(err, exit_code::parse, "input", "cannot open '" + cfg.input_path + "'");
    InputFile in = parse_input(*text);
    Outcome o;
    if (cfg.command == "analyze") o = cmd_analyze(in, cfg.options);
    else if (cfg.command == "series") o = cmd_series(in, cfg.options);
    else if (cfg.command == "verify") o = cmd_verify(in, cfg.options);
    else if (cfg.command == "conjugate") o = cmd_conjugate(in, cfg.options);
    else return fail(err, exit_code::usage, "usage", "unknown command '" + cfg.command + "'");

    o.doc["exit_code"] = o.code;
    if (cfg.json) out << o.doc.dump(2) << "\n";
    else out << render_text(o.doc);
    if (o.code == exit_code::domain && o.doc.contains("refusal"))
      err << "error (domain): " << o.doc["refusal"].get<std::string>() << "\n";
    return o.code;
  } catch (const ParseError& e) {
    return fail(err, exit_code::parse, "parse", e.what());
  } catch (const ValidationError& e) {
    return fail(err, exit_code::domain, "validation", e.what());
  } catch (const DomainError& e) {
    return fail(err, exit_code::domain, "domain", e.what());
  } catch (const PrecisionExhausted& e) {
    return fail(err, exit_code::resource, "precision", e.what());
  } catch (const ResourceLimit& e) {
    return fail(err, exit_code::resource, "resource", e.what());
  } catch (const InvariantViolation& e) {
    return fail(err, exit_code::mismatch, "invariant", e.what());
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real and classical Poincare series of a plane branch x = t^n, y = sum a_j t^j over Q(i)"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string which = "all";
  const std::map<std::string, std::string> help = {
      {"analyze", "resolution data, splitting point and real semigroup generators"},
      {"series", "P^S, P and P^R in cyclotomic form with expansions"},
      {"verify", "check every identity against enumeration and the jet-matrix oracle"},
      {"conjugate", "branch whose complex semigroup equals the real one"}};
  for (const auto& [name, text] : help) {
    CLI::App* sub = app.add_subcommand(name, text);
    sub->add_option("file", cfg.input_path, "branch file (n = ..., y = ...)")->required();
    sub->add_option("--order", cfg.options.order, "series expansion order (default c + 2 m_rho + 16)");
    sub->add_option("--max-order", cfg.options.max_order, "verification range (default c + m_rho + 10)");
    sub->add_option("--which", which, "series to print")->check(CLI::IsMember({"s", "classical", "real", "all"}));
    sub->add_flag("--json", cfg.json, "emit JSON");
    sub->add_option("--size-cap", cfg.options.size_cap, "oracle matrix row/column cap");
    sub->callback([&cfg, name = name] { cfg.command = name; });
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : exit_code::usage;
  }
  cfg.options.which = which == "s"           ? Which::s
                      : which == "classical" ? Which::classical
                      : which == "real"      ? Which::real
                                             : Which::all;
  return run(cfg, out, err);
}

}  // namespace realpoincare
