// hexmatch: orbit census, equivariant matching optimisation, King Wen checks
// and the general-width sweep. Reports go to stdout, diagnostics to stderr.
//
// Exit codes: 0 ok, 1 usage, 2 table parse error, 3 infeasible kinds,
// 4 verification failure.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hexmatch/report.hpp"

namespace {

using hexmatch::report::Format;
namespace rep = hexmatch::report;

int emit(const rep::Rendered& r) {
  std::cout << r.output;
  std::cout.flush();
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"K4-equivariant perfect matchings on the Boolean hypercube"};
  app.require_subcommand(1);

  unsigned width = 6;
  std::string kinds_text = "comp,rev";
  std::string format_text = "json";
  std::string table_path;
  unsigned width_from = 1;
  unsigned width_to = 10;

  const auto formats = CLI::IsMember({"json", "csv", "text"});
  const auto widths = CLI::Range(1U, hexmatch::max_exhaustive_width);

  auto* orbits = app.add_subcommand("orbits", "orbit census and orbit list");
  orbits->add_option("--n", width, "word width")->check(widths);
  orbits->add_option("--format", format_text)->check(formats);

  auto* optimize = app.add_subcommand("optimize", "minimum-cost equivariant matching");
  optimize->add_option("--n", width, "word width")->check(widths);
  optimize->add_option("--kinds", kinds_text, "allowed pairings, subset of comp,rev,comprev");
  optimize->add_option("--format", format_text)->check(formats);

  auto* kingwen = app.add_subcommand("kingwen", "check the King Wen pairing");
  kingwen->add_option("--table", table_path, "CSV table (kw,binary); default is built in");
  kingwen->add_option("--format", format_text)->check(formats);

  auto* conjecture = app.add_subcommand("conjecture", "compare optimum and reverse-priority per width");
  conjecture->add_option("--from", width_from)->check(widths);
  conjecture->add_option("--to", width_to)->check(widths);
  conjecture->add_option("--format", format_text)->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return rep::kUsage;
  }

  const Format format = *rep::parse_format(format_text);

  try {
    if (*orbits) return emit(rep::render_orbits(width, format));

    if (*optimize) return emit(rep::render_optimize(width, rep::parse_kinds(kinds_text), format));

    if (*kingwen) {
      if (table_path.empty()) {
        return emit(rep::render_kingwen(hexmatch::default_table(), "default", format));
      }
      std::ifstream in(table_path);
      if (!in) {
        std::cerr << "error: cannot open " << table_path << "\n";
        return rep::kUsage;
      }
      const auto table = hexmatch::parse_table(in);
      const auto r = rep::render_kingwen(table, table_path, format);
      if (r.exit_code != rep::kOk) std::cerr << "error: King Wen verification failed\n";
      return emit(r);
    }

    if (*conjecture) return emit(rep::render_conjecture(width_from, width_to, format));
  } catch (const hexmatch::ParseError& e) {
    std::cerr << "error: " << table_path << ": " << e.what() << "\n";
    return rep::kParse;
  } catch (const hexmatch::InfeasibleSpace& e) {
    std::cerr << "error: " << e.what() << "\n";
    return rep::kInfeasible;
  } catch (const hexmatch::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return rep::kUsage;
  }
  return rep::kUsage;
}
