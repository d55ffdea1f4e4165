#pragma once

#include <cstddef>
#include <string>

#include "diffca/eca.hpp"
#include "diffca/engine.hpp"
#include "diffca/pattern.hpp"

namespace diffca {

enum class Format { ascii, pbm, pgm, svg };
enum class Alignment { centered, left };

struct Palette {
  std::string on = "#000000";
  std::string off = "#ffffff";
  std::string stroke = "#9e9e9e";
};

struct RenderSpec {
  Format format = Format::ascii;
  std::size_t cell_px = 1;  // raster and SVG pixels per cell, >= 1
  Alignment alignment = Alignment::centered;
  Palette palette;
  bool ascii_dots = false;  // unmatched cells print '.' instead of the value
};

// Pyramid text, one line per generation. With centered alignment row t is
// shifted by t half-cells so each child sits between its parents. Matched
// cells print as '#'. Throws shape_mismatch if the mask is not congruent.
std::string render_ascii(const Pyramid& p, const HighlightMask* mask,
                         const RenderSpec& spec);

// Plain "P1" bitmap, width * cell_px by height * cell_px. Matched cells are
// black; row t is shifted right by floor(t * cell_px / 2) when centered.
std::string render_pbm(const HighlightMask& mask, const RenderSpec& spec);

// Plain "P2" graymap. Without a mask a cell of value v in a row with
// maximum m gets 255 * (m - v) / m, and all-zero rows are white.
std::string render_pgm(const Pyramid& p, const HighlightMask* mask,
                       const RenderSpec& spec);

// SVG 1.1, one <rect> per cell in row-major order.
std::string render_svg(const Pyramid& p, const HighlightMask* mask,
                       const RenderSpec& spec);

// Dispatches on spec.format. PBM needs a mask (invalid_argument otherwise).
std::string render_pyramid(const Pyramid& p, const HighlightMask* mask,
                           const RenderSpec& spec);

// Rectangular diagram, 1 = black / '#'. Alignment is ignored.
std::string render_eca(const EcaDiagram& d, const RenderSpec& spec);

// Two-panel figure: the ECA diagram, then the highlighted pyramid. ASCII
// stacks the panels with a blank line between them; the other formats put
// them side by side with a two-cell gutter.
std::string render_comparison(const EcaDiagram& d, const Pyramid& p,
                              const HighlightMask& mask,
                              const RenderSpec& spec);

}  // namespace diffca
