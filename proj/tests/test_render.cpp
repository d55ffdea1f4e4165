#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "diffca/engine.hpp"
#include "diffca/error.hpp"
#include "diffca/expression.hpp"
#include "diffca/fixtures.hpp"
#include "diffca/render.hpp"
#include "test_support.hpp"

using namespace diffca;
using diffca::testing::count_of;
using diffca::testing::Gen;
using diffca::testing::max_line_length;
using diffca::testing::parse_plain_pbm;

namespace {

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(DIFFCA_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

HighlightMask mask_of(std::vector<std::vector<bool>> rows) {
  return HighlightMask(std::move(rows));
}

RenderSpec spec_of(Format f, std::size_t px = 1) {
  RenderSpec s;
  s.format = f;
  s.cell_px = px;
  return s;
}

}  // namespace

TEST_CASE("render_ascii") {
  const RenderSpec spec;
  CHECK(render_ascii(evolve(Row{2, 0}), nullptr, spec) == "2 0\n 2\n");
  CHECK(render_ascii(evolve(Row{7}), nullptr, spec) == "7\n");

  RenderSpec left;
  left.alignment = Alignment::left;
  CHECK(render_ascii(evolve(Row{2, 0}), nullptr, left) == "2 0\n2\n");

  // Multi-digit values get a uniform column width.
  CHECK(render_ascii(evolve(Row{10, 3, 3}), nullptr, spec) ==
        "10  3  3\n  7  0\n    7\n");

  const Pyramid ones = evolve(Row{1, 1});
  const HighlightMask zeros = highlight_pyramid(ones, Pattern({0}));
  CHECK(render_ascii(ones, &zeros, spec) == "1 1\n #\n");
  RenderSpec dots;
  dots.ascii_dots = true;
  CHECK(render_ascii(ones, &zeros, dots) == ". .\n #\n");

  const HighlightMask wrong = highlight_pyramid(evolve(Row{1, 1, 1}), Pattern({0}));
  try {
    render_ascii(ones, &wrong, spec);
    FAIL("expected ShapeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::shape_mismatch);
  }
}

TEST_CASE("ASCII default-p lines carry the published rows") {
  const std::string text =
      render_ascii(evolve(load_fixture("default-p").terms), nullptr, RenderSpec{});
  const auto lines = lines_of(text);
  const auto expected = figure2_rows();
  REQUIRE(lines.size() == 19);
  for (std::size_t t = 0; t < 19; ++t) {
    std::vector<std::string> want;
    for (Cell c : expected[t]) want.push_back(std::to_string(c));
    CHECK(tokens_of(lines[t]) == want);
    CHECK(lines[t].find_first_not_of(' ') == t);
  }
}

TEST_CASE("render_pbm") {
  CHECK(render_pbm(mask_of({{true}}), spec_of(Format::pbm)) == "P1\n1 1\n1\n");
  CHECK(render_pbm(mask_of({{false}}), spec_of(Format::pbm)) == "P1\n1 1\n0\n");

  // [1,0,1] with s=[1]: row 0 lit at the ends, row 1 = [1,1] shifted by
  // floor(2/2) = 1 pixel at 2 px per cell.
  const Pyramid p = evolve(Row{1, 0, 1});
  const HighlightMask m = highlight_pyramid(p, Pattern({1}));
  CHECK(render_pbm(m, spec_of(Format::pbm, 2)) ==
        "P1\n6 6\n"
        "110011\n110011\n"
        "011110\n011110\n"
        "000000\n000000\n");

  RenderSpec zero_px = spec_of(Format::pbm, 0);
  CHECK_THROWS_AS(render_pbm(m, zero_px), Error);
  CHECK_THROWS_AS(render_pbm(mask_of({{true, true}, {true, true}}),
                             spec_of(Format::pbm)),
                  Error);
}

TEST_CASE("PBM output re-parses to the mask") {
  Gen gen(0xb17);
  for (int n = 0; n < 200; ++n) {
    const Pyramid p = evolve(gen.row(1, 90, 3));
    const HighlightMask m = highlight_pyramid(p, Pattern(gen.row(1, 2, 3)));
    RenderSpec spec = spec_of(Format::pbm, gen.uniform(1, 4));
    spec.alignment = n % 3 ? Alignment::centered : Alignment::left;
    const std::string text = render_pbm(m, spec);

    REQUIRE(max_line_length(text) <= 70);
    const auto bmp = parse_plain_pbm(text);
    const std::size_t px = spec.cell_px;
    REQUIRE(bmp.width == p.width() * px);
    REQUIRE(bmp.height == p.height() * px);

    std::size_t lit = 0;
    for (int v : bmp.pixels) lit += v;
    std::size_t marked = 0;
    for (std::size_t t = 0; t < m.height(); ++t) {
      const std::size_t off =
          spec.alignment == Alignment::centered ? t * px / 2 : 0;
      for (std::size_t i = 0; i < m[t].size(); ++i) {
        marked += m[t][i];
        for (std::size_t dy = 0; dy < px; ++dy)
          for (std::size_t dx = 0; dx < px; ++dx)
            REQUIRE(bmp.at(off + i * px + dx, t * px + dy) == m[t][i]);
      }
    }
    REQUIRE(lit == marked * px * px);
    REQUIRE(render_pbm(m, spec) == text);
  }
}

TEST_CASE("golden PBM for a1 with s=[1] over 32 generations") {
  const Pyramid p = evolve(load_fixture("a1").terms, 32);
  const HighlightMask m = highlight_pyramid(p, Pattern({1}));
  const std::string text = render_pbm(m, spec_of(Format::pbm));
  CHECK(text == read_golden("a1_s1_g32.pbm"));

  const auto bmp = parse_plain_pbm(text);
  for (std::size_t t = 0; t <= 32; ++t) {
    for (std::size_t i = 50 - t; i <= 50; ++i) {
      CHECK(bmp.at(t / 2 + i, t) == pascal_mod2(t, 50 - i));
    }
  }
}

TEST_CASE("render_pgm") {
  const Pyramid p = evolve(Row{4, 0, 2});
  // Row 0 max 4: 0, 255, 127; row 1 = [4, 2]: 0, 127; row 2 = [2]: 0,
  // shifted by floor(2 / 2) = 1 pixel.
  CHECK(render_pgm(p, nullptr, spec_of(Format::pgm)) ==
        "P2\n3 3\n255\n0 255 127\n0 127 255\n255 0 255\n");

  const Pyramid flat = evolve(Row{3, 3});
  CHECK(render_pgm(flat, nullptr, spec_of(Format::pgm)) ==
        "P2\n2 2\n255\n0 0\n255 255\n");

  const HighlightMask m = highlight_pyramid(p, Pattern({2}));
  CHECK(render_pgm(p, &m, spec_of(Format::pgm)) ==
        "P2\n3 3\n255\n255 255 0\n255 0 255\n255 0 255\n");

  const Pyramid wide = evolve(load_fixture("a2").terms);
  CHECK(max_line_length(render_pgm(wide, nullptr, spec_of(Format::pgm, 3))) <= 70);
}

TEST_CASE("render_svg") {
  const RenderSpec spec = spec_of(Format::svg, 10);
  const std::string one = render_svg(evolve(Row{5}), nullptr, spec);
  CHECK(count_of(one, "<rect") == 1);
  CHECK(one.rfind("<?xml", 0) == 0);
  CHECK(one.find("</svg>") != std::string::npos);

  const Pyramid p = evolve(Row{1, 1});
  const HighlightMask m = highlight_pyramid(p, Pattern({0}));
  const std::string two = render_svg(p, &m, spec);
  CHECK(count_of(two, "<rect") == 3);
  CHECK(count_of(two, "fill=\"#000000\"") == 1);
  CHECK(count_of(two, "fill=\"#ffffff\"") == 2);
  // Row-major order: the highlighted apex comes last, shifted half a cell.
  CHECK(two.find("<rect x=\"5\" y=\"10\"") > two.find("<rect x=\"10\" y=\"0\""));

  const Pyramid fig = evolve(load_fixture("default-p").terms);
  const HighlightMask zeros = highlight_pyramid(fig, Pattern({0}));
  const std::string big = render_svg(fig, &zeros, spec);
  std::size_t zero_cells = 0;
  for (const Row& r : fig)
    for (Cell c : r) zero_cells += c == 0;
  CHECK(count_of(big, "<rect") == 19 * 20 / 2);
  CHECK(count_of(big, "fill=\"#000000\"") == zero_cells);
  CHECK(render_svg(fig, &zeros, spec) == big);
}

TEST_CASE("render_eca") {
  EcaDiagram d{{{0, 1, 0}}, Boundary::zero_padded};
  CHECK(render_eca(d, RenderSpec{}) == ".#.\n");
  CHECK(render_eca(d, spec_of(Format::pbm)) == "P1\n3 1\n010\n");
  CHECK(render_eca(d, spec_of(Format::pgm)) == "P2\n3 1\n255\n255 0 255\n");
  CHECK(count_of(render_eca(d, spec_of(Format::svg, 4)), "<rect") == 3);

  const EcaDiagram r90 = eca_evolve(impulse_row(33), EcaRule(90), 16);
  CHECK(render_eca(r90, spec_of(Format::pbm)) == read_golden("rule90_impulse_g16.pbm"));

  const EcaDiagram blank = eca_evolve(Row{1, 1, 0, 1}, EcaRule(0), 3);
  CHECK(render_eca(blank, RenderSpec{}) == "##.#\n....\n....\n....\n");
}

TEST_CASE("render_comparison") {
  const Row a1 = load_fixture("a1").terms;
  const Pyramid p = evolve(a1);
  const HighlightMask m = highlight_pyramid(p, Pattern({1}));
  const EcaDiagram d = eca_evolve(impulse_row(201), EcaRule(90), 100);

  const std::string text = render_comparison(d, p, m, RenderSpec{});
  const auto lines = lines_of(text);
  REQUIRE(lines.size() == 101 + 1 + 101);
  CHECK(lines[101].empty());
  // The stacked panels line up: pyramid cell (t, i) is drawn at character
  // t + 2i, which is also its ECA column 100 + t - 2(50 - i).
  for (std::size_t t = 0; t < 40; ++t) {
    for (std::size_t i = 50 - t; i <= 50; ++i) {
      CHECK(lines[t][t + 2 * i] == lines[102 + t][t + 2 * i]);
    }
  }

  const auto bmp = parse_plain_pbm(render_comparison(d, p, m, spec_of(Format::pbm, 2)));
  CHECK(bmp.width == (201 + 2 + 101) * 2);
  CHECK(bmp.height == 101 * 2);
}
