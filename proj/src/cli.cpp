#include "diffca/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "diffca/compare.hpp"
#include "diffca/eca.hpp"
#include "diffca/engine.hpp"
#include "diffca/error.hpp"
#include "diffca/expression.hpp"
#include "diffca/fixtures.hpp"
#include "diffca/pattern.hpp"
#include "diffca/render.hpp"

namespace diffca {

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Failure tagged with the component that produced it.
struct Failure {
  int status;
  std::string component;
  std::string message;
};

struct OutputOptions {
  Format format = Format::ascii;
  std::string out_path;
  std::size_t cell_px = 4;
};

struct RunOptions {
  std::string input;
  std::string file;
  std::string fixture;
  std::string pattern;
  bool symmetric = false;
  std::optional<std::size_t> max_generations;
  Alignment alignment = Alignment::centered;
  bool dots = false;
  OutputOptions output;
};

struct EcaOptions {
  int rule = 0;
  std::optional<long long> width;
  std::size_t generations = 16;
  Boundary boundary = Boundary::zero_padded;
  std::string initial;
  OutputOptions output;
};

struct CompareOptions {
  std::string fixture;
  std::string pattern;
  int rule = 0;
  OutputOptions output;
};

void add_output_flags(CLI::App* cmd, OutputOptions& o) {
  const std::map<std::string, Format> formats{{"ascii", Format::ascii},
                                              {"pbm", Format::pbm},
                                              {"pgm", Format::pgm},
                                              {"svg", Format::svg}};
  cmd->add_option("--format", o.format, "ascii, pbm, pgm or svg")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd->add_option("-o,--out", o.out_path, "output path (default: stdout)");
  cmd->add_option("--cell-px", o.cell_px, "pixels per cell")
      ->check(CLI::PositiveNumber);
}

RenderSpec make_spec(const OutputOptions& o) {
  RenderSpec spec;
  spec.format = o.format;
  spec.cell_px = o.cell_px;
  return spec;
}

void write_artifact(const std::string& data, const std::string& path,
                    std::ostream& out) {
  if (path.empty()) {
    out << data;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !file.write(data.data(), static_cast<std::streamsize>(data.size()))) {
    throw Failure{kExitFailure, "io", "cannot write '" + path + "'"};
  }
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Failure{kExitFailure, "io", "cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

// Runs `fn`, rewrapping library errors with the component name.
template <typename Fn>
auto guarded(std::string_view component, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Failure{kExitFailure, std::string(component),
                  std::string(to_string(e.code())) + ": " + e.what()};
  }
}

int cmd_run(const RunOptions& o, std::ostream& out) {
  const int sources =
      !o.input.empty() + !o.file.empty() + !o.fixture.empty();
  if (sources != 1) {
    throw Failure{kExitUsage, "run",
                  "exactly one of --input, --file, --fixture is required"};
  }
  if (o.output.format == Format::pbm && o.pattern.empty()) {
    throw Failure{kExitUsage, "run", "--format pbm needs --pattern"};
  }

  InputExpression p;
  if (!o.fixture.empty()) {
    p = guarded("fixtures", [&] { return load_fixture(o.fixture); });
  } else {
    const std::string text = o.file.empty() ? o.input : read_file(o.file);
    p = guarded("parser", [&] { return parse_expression(text); });
  }
  if (o.symmetric) p = make_symmetric(p);

  const Pyramid pyramid =
      guarded("engine", [&] { return evolve(p.terms, o.max_generations); });

  std::optional<HighlightMask> mask;
  if (!o.pattern.empty()) {
    const Pattern s(
        guarded("parser", [&] { return parse_expression(o.pattern); }).terms);
    mask = highlight_pyramid(pyramid, s);
  }

  RenderSpec spec = make_spec(o.output);
  spec.alignment = o.alignment;
  spec.ascii_dots = o.dots;
  const std::string artifact = guarded("render", [&] {
    return render_pyramid(pyramid, mask ? &*mask : nullptr, spec);
  });
  write_artifact(artifact, o.output.out_path, out);
  return 0;
}

int cmd_eca(const EcaOptions& o, std::ostream& out) {
  const EcaRule rule = guarded("eca", [&] { return EcaRule(o.rule); });

  Row initial;
  if (!o.initial.empty()) {
    initial = guarded("parser", [&] { return parse_expression(o.initial); }).terms;
    if (o.width && *o.width != static_cast<long long>(initial.size())) {
      throw Failure{kExitUsage, "eca", "--width disagrees with --initial"};
    }
  } else {
    const long long width =
        o.width.value_or(2 * static_cast<long long>(o.generations) + 1);
    if (width < 1) {
      throw Failure{kExitFailure, "eca",
                    "width must be at least 1, got " + std::to_string(width)};
    }
    initial = impulse_row(static_cast<std::size_t>(width));
  }

  const EcaDiagram d = guarded(
      "eca", [&] { return eca_evolve(initial, rule, o.generations, o.boundary); });
  write_artifact(guarded("render", [&] { return render_eca(d, make_spec(o.output)); }),
                 o.output.out_path, out);
  return 0;
}

int cmd_compare(const CompareOptions& o, std::ostream& out, std::ostream& err) {
  if (o.fixture != "a1" && o.fixture != "a2") {
    throw Failure{kExitFailure, "compare",
                  "fixture must be a1 or a2, got '" + o.fixture + "'"};
  }
  const EcaRule rule = guarded("eca", [&] { return EcaRule(o.rule); });
  const InputExpression p = load_fixture(o.fixture);
  const Pattern s(
      guarded("parser", [&] { return parse_expression(o.pattern); }).terms);

  const Pyramid pyramid = evolve(p.terms);
  const HighlightMask mask = highlight_pyramid(pyramid, s);
  const ComparisonSetup setup = comparison_setup(p.terms);
  const EcaDiagram d = eca_evolve(setup.initial, rule, setup.generations);

  write_artifact(guarded("render", [&] {
                   return render_comparison(d, pyramid, mask, make_spec(o.output));
                 }),
                 o.output.out_path, out);

  if (impulse_index(p.terms)) {
    const ConeAgreement a = cone_agreement(mask, d, setup.alignment);
    std::ostringstream line;
    line << "agreement rule=" << rule.number() << " pattern="
         << serialize_expression(s.values()) << " in-cone " << a.matching << "/"
         << a.total << " = " << std::fixed << std::setprecision(6) << a.ratio()
         << "\n";
    // Keep stdout artifact-only when the artifact is going there.
    (o.output.out_path.empty() ? err : out) << line.str();
  }
  return 0;
}

int cmd_selfcheck(std::ostream& out, std::ostream& err) {
  const Pyramid pyramid = evolve(load_fixture("default-p").terms);
  const std::vector<Row> expected = figure2_rows();
  bool ok = pyramid.height() == expected.size();
  for (std::size_t t = 0; ok && t < expected.size(); ++t) {
    if (pyramid[t] != expected[t]) {
      err << "selfcheck: generation " << t << " differs: got "
          << serialize_expression(pyramid[t]) << ", expected "
          << serialize_expression(expected[t]) << "\n";
      ok = false;
    }
  }
  if (pyramid.height() != expected.size()) {
    err << "selfcheck: " << pyramid.height() << " generations, expected "
        << expected.size() << "\n";
  }

  const InputExpression p1 = load_fixture("p1");
  if (make_symmetric(p1) != load_fixture("p1-new")) {
    err << "selfcheck: p1-new is not p1 followed by its reverse\n";
    ok = false;
  }
  const Row a1 = load_fixture("a1").terms;
  if (impulse_index(a1) != std::optional<std::size_t>(a1.size() / 2)) {
    err << "selfcheck: a1 is not a centered impulse\n";
    ok = false;
  }

  if (!ok) return kExitFailure;
  out << "selfcheck: ok (" << expected.size() << " generations of default-p)\n";
  return 0;
}

int cmd_fixtures(std::ostream& out) {
  for (const FixtureInfo& f : fixtures()) {
    out << f.id << '\t' << serialize_expression(load_fixture(f.id)) << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Absolute-difference cellular automaton toolkit", "diffca"};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "evolve an input and render it");
  run_cmd->add_option("-i,--input", run.input, "expression such as 2-0-1-4");
  run_cmd->add_option("-f,--file", run.file, "file holding one expression");
  run_cmd->add_option("--fixture", run.fixture, "built-in input id");
  run_cmd->add_option("-s,--pattern", run.pattern, "values to highlight, e.g. 0-");
  run_cmd->add_flag("--symmetric", run.symmetric,
                    "append the reversed input before evolving");
  run_cmd->add_option("--max-generations", run.max_generations,
                      "stop after this many steps");
  run_cmd->add_option("--align", run.alignment, "centered or left")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Alignment>{{"centered", Alignment::centered},
                                           {"left", Alignment::left}},
          CLI::ignore_case));
  run_cmd->add_flag("--dots", run.dots, "print unmatched cells as '.'");
  add_output_flags(run_cmd, run.output);

  EcaOptions eca;
  auto* eca_cmd = app.add_subcommand("eca", "render an elementary CA diagram");
  eca_cmd->add_option("--rule", eca.rule, "Wolfram rule number 0-255")->required();
  eca_cmd->add_option("--width", eca.width,
                      "row width (default 2 * generations + 1)");
  eca_cmd->add_option("--generations", eca.generations, "number of steps");
  eca_cmd->add_option("--boundary", eca.boundary, "zero or periodic")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Boundary>{{"zero", Boundary::zero_padded},
                                          {"periodic", Boundary::periodic}},
          CLI::ignore_case));
  eca_cmd->add_option("--initial", eca.initial,
                      "binary start row such as 0-1-0 (default: centered impulse)");
  add_output_flags(eca_cmd, eca.output);

  CompareOptions cmp;
  auto* cmp_cmd = app.add_subcommand(
      "compare", "ECA diagram next to the highlighted pyramid of a fixture");
  cmp_cmd->add_option("--fixture", cmp.fixture, "a1 or a2")->required();
  cmp_cmd->add_option("-s,--pattern", cmp.pattern, "values to highlight")->required();
  cmp_cmd->add_option("--rule", cmp.rule, "Wolfram rule number 0-255")->required();
  add_output_flags(cmp_cmd, cmp.output);

  auto* self_cmd =
      app.add_subcommand("selfcheck", "verify the built-in reproduction data");
  auto* fix_cmd = app.add_subcommand("fixtures", "list built-in inputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(run_cmd)) return cmd_run(run, out);
    if (app.got_subcommand(eca_cmd)) return cmd_eca(eca, out);
    if (app.got_subcommand(cmp_cmd)) return cmd_compare(cmp, out, err);
    if (app.got_subcommand(self_cmd)) return cmd_selfcheck(out, err);
    if (app.got_subcommand(fix_cmd)) return cmd_fixtures(out);
  } catch (const Failure& f) {
    err << "diffca " << f.component << ": " << f.message << "\n";
    return f.status;
  } catch (const Error& e) {
    err << "diffca: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  std::vector<const char*> argv{"diffca"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace diffca
