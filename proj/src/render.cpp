#include "diffca/render.hpp"

#include <algorithm>
#include <cstdint>
#include <string_view>
#include <vector>

#include "diffca/error.hpp"

namespace diffca {

namespace {

// Plain netpbm files should keep lines at or under 70 characters.
constexpr std::size_t kMaxLine = 70;
constexpr std::size_t kGutterCells = 2;

struct PlacedCell {
  std::size_t x;
  std::size_t y;
  std::uint8_t gray;  // 0 = black, 255 = white
};

// Pixel geometry shared by every raster and vector writer.
struct Scene {
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t px = 1;
  bool binary = true;     // cells are either on (gray 0) or off (gray 255)
  bool outlined = false;  // SVG draws cell borders
  std::vector<PlacedCell> cells;
};

void check_spec(const RenderSpec& spec) {
  if (spec.cell_px == 0) {
    throw Error(Errc::invalid_argument, "cell_px must be at least 1");
  }
}

void check_triangular(const HighlightMask& mask) {
  const std::size_t n = mask.width();
  if (mask.height() > n) {
    throw Error(Errc::shape_mismatch, "mask has more rows than cells");
  }
  for (std::size_t t = 0; t < mask.height(); ++t) {
    if (mask[t].size() != n - t) {
      throw Error(Errc::shape_mismatch,
                  "mask row " + std::to_string(t) + " is not triangular");
    }
  }
}

void check_congruent(const Pyramid& p, const HighlightMask* mask) {
  if (mask && !mask->congruent_to(p)) {
    throw Error(Errc::shape_mismatch, "mask shape differs from the pyramid");
  }
}

__extension__ using Wide = unsigned __int128;

std::uint8_t value_gray(Cell v, Cell row_max) {
  if (row_max == 0) return 255;
  const Wide scaled = static_cast<Wide>(255) * (row_max - v) / row_max;
  return static_cast<std::uint8_t>(scaled);
}

std::size_t row_offset(std::size_t t, std::size_t px, Alignment a) {
  return a == Alignment::centered ? t * px / 2 : 0;
}

Scene mask_scene(const HighlightMask& mask, const RenderSpec& spec) {
  Scene s;
  s.px = spec.cell_px;
  s.width = mask.width() * s.px;
  s.height = mask.height() * s.px;
  s.outlined = true;
  for (std::size_t t = 0; t < mask.height(); ++t) {
    const std::size_t off = row_offset(t, s.px, spec.alignment);
    for (std::size_t i = 0; i < mask[t].size(); ++i) {
      s.cells.push_back({off + i * s.px, t * s.px,
                         static_cast<std::uint8_t>(mask[t][i] ? 0 : 255)});
    }
  }
  return s;
}

Scene pyramid_scene(const Pyramid& p, const HighlightMask* mask,
                    const RenderSpec& spec) {
  if (mask) return mask_scene(*mask, spec);
  Scene s;
  s.px = spec.cell_px;
  s.width = p.width() * s.px;
  s.height = p.height() * s.px;
  s.binary = false;
  s.outlined = true;
  for (std::size_t t = 0; t < p.height(); ++t) {
    const std::size_t off = row_offset(t, s.px, spec.alignment);
    const Cell m = max_state(p[t]);
    for (std::size_t i = 0; i < p[t].size(); ++i) {
      s.cells.push_back({off + i * s.px, t * s.px, value_gray(p[t][i], m)});
    }
  }
  return s;
}

Scene eca_scene(const EcaDiagram& d, const RenderSpec& spec) {
  Scene s;
  s.px = spec.cell_px;
  s.width = d.width() * s.px;
  s.height = d.rows.size() * s.px;
  for (std::size_t t = 0; t < d.rows.size(); ++t) {
    for (std::size_t i = 0; i < d.rows[t].size(); ++i) {
      s.cells.push_back({i * s.px, t * s.px,
                         static_cast<std::uint8_t>(d.rows[t][i] ? 0 : 255)});
    }
  }
  return s;
}

Scene side_by_side(const Scene& left, const Scene& right) {
  Scene s;
  s.px = left.px;
  const std::size_t shift = left.width + kGutterCells * left.px;
  s.width = shift + right.width;
  s.height = std::max(left.height, right.height);
  s.binary = left.binary && right.binary;
  s.cells = left.cells;
  for (PlacedCell c : right.cells) {
    c.x += shift;
    s.cells.push_back(c);
  }
  return s;
}

std::vector<std::uint8_t> rasterize(const Scene& s, std::uint8_t background) {
  std::vector<std::uint8_t> pixels(s.width * s.height, background);
  for (const PlacedCell& c : s.cells) {
    for (std::size_t y = c.y; y < c.y + s.px; ++y) {
      std::fill_n(pixels.begin() + y * s.width + c.x, s.px, c.gray);
    }
  }
  return pixels;
}

std::string header(std::string_view magic, const Scene& s) {
  return std::string(magic) + "\n" + std::to_string(s.width) + " " +
         std::to_string(s.height) + "\n";
}

std::string emit_pbm(const Scene& s) {
  const auto pixels = rasterize(s, 255);
  std::string out = header("P1", s);
  for (std::size_t y = 0; y < s.height; ++y) {
    std::size_t col = 0;
    for (std::size_t x = 0; x < s.width; ++x) {
      if (col == kMaxLine) {
        out += '\n';
        col = 0;
      }
      out += pixels[y * s.width + x] < 128 ? '1' : '0';
      ++col;
    }
    out += '\n';
  }
  return out;
}

std::string emit_pgm(const Scene& s) {
  const auto pixels = rasterize(s, 255);
  std::string out = header("P2", s) + "255\n";
  for (std::size_t y = 0; y < s.height; ++y) {
    std::size_t col = 0;
    for (std::size_t x = 0; x < s.width; ++x) {
      const std::string token = std::to_string(pixels[y * s.width + x]);
      if (col > 0 && col + 1 + token.size() > kMaxLine) {
        out += '\n';
        col = 0;
      }
      if (col > 0) {
        out += ' ';
        ++col;
      }
      out += token;
      col += token.size();
    }
    out += '\n';
  }
  return out;
}

std::string gray_hex(std::uint8_t g) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out = "#";
  for (int k = 0; k < 3; ++k) {
    out += kDigits[g >> 4];
    out += kDigits[g & 0xf];
  }
  return out;
}

std::string emit_svg(const Scene& s, const Palette& palette) {
  const std::string w = std::to_string(s.width);
  const std::string h = std::to_string(s.height);
  const std::string px = std::to_string(s.px);
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
      w + "\" height=\"" + h + "\" viewBox=\"0 0 " + w + " " + h +
      "\" shape-rendering=\"crispEdges\">\n";
  for (const PlacedCell& c : s.cells) {
    const std::string fill = s.binary
                                 ? (c.gray == 0 ? palette.on : palette.off)
                                 : gray_hex(c.gray);
    out += "<rect x=\"" + std::to_string(c.x) + "\" y=\"" +
           std::to_string(c.y) + "\" width=\"" + px + "\" height=\"" + px +
           "\" fill=\"" + fill + "\"";
    if (s.outlined) out += " stroke=\"" + palette.stroke + "\"";
    out += "/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string emit(const Scene& s, const RenderSpec& spec) {
  switch (spec.format) {
    case Format::pbm: return emit_pbm(s);
    case Format::pgm: return emit_pgm(s);
    case Format::svg: return emit_svg(s, spec.palette);
    case Format::ascii: break;
  }
  throw Error(Errc::invalid_argument, "ASCII output has no pixel form");
}

std::string eca_ascii(const EcaDiagram& d) {
  std::string out;
  for (const Row& r : d.rows) {
    for (Cell c : r) out += c ? '#' : '.';
    out += '\n';
  }
  return out;
}

}  // namespace

std::string render_ascii(const Pyramid& p, const HighlightMask* mask,
                         const RenderSpec& spec) {
  check_congruent(p, mask);
  // Row 0 holds the largest value of the whole pyramid.
  const std::size_t w = std::to_string(max_state(p[0])).size();
  const std::size_t pitch = w + 1;
  const std::string filled(w, '#');
  const std::string dot = std::string(w - 1, ' ') + '.';

  std::string out;
  for (std::size_t t = 0; t < p.height(); ++t) {
    std::string line(spec.alignment == Alignment::centered ? t * pitch / 2 : 0,
                     ' ');
    for (std::size_t i = 0; i < p[t].size(); ++i) {
      if (i) line += ' ';
      if (mask && (*mask)[t][i]) {
        line += filled;
      } else if (mask && spec.ascii_dots) {
        line += dot;
      } else {
        const std::string v = std::to_string(p[t][i]);
        line += std::string(w - v.size(), ' ') + v;
      }
    }
    out += line;
    out += '\n';
  }
  return out;
}

std::string render_pbm(const HighlightMask& mask, const RenderSpec& spec) {
  check_spec(spec);
  check_triangular(mask);
  return emit_pbm(mask_scene(mask, spec));
}

std::string render_pgm(const Pyramid& p, const HighlightMask* mask,
                       const RenderSpec& spec) {
  check_spec(spec);
  check_congruent(p, mask);
  return emit_pgm(pyramid_scene(p, mask, spec));
}

std::string render_svg(const Pyramid& p, const HighlightMask* mask,
                       const RenderSpec& spec) {
  check_spec(spec);
  check_congruent(p, mask);
  return emit_svg(pyramid_scene(p, mask, spec), spec.palette);
}

std::string render_pyramid(const Pyramid& p, const HighlightMask* mask,
                           const RenderSpec& spec) {
  switch (spec.format) {
    case Format::ascii: return render_ascii(p, mask, spec);
    case Format::pgm: return render_pgm(p, mask, spec);
    case Format::svg: return render_svg(p, mask, spec);
    case Format::pbm:
      if (!mask) {
        throw Error(Errc::invalid_argument, "PBM output needs a pattern mask");
      }
      check_congruent(p, mask);
      return render_pbm(*mask, spec);
  }
  throw Error(Errc::invalid_argument, "unknown format");
}

std::string render_eca(const EcaDiagram& d, const RenderSpec& spec) {
  if (spec.format == Format::ascii) return eca_ascii(d);
  check_spec(spec);
  return emit(eca_scene(d, spec), spec);
}

std::string render_comparison(const EcaDiagram& d, const Pyramid& p,
                              const HighlightMask& mask,
                              const RenderSpec& spec) {
  check_congruent(p, &mask);
  if (spec.format == Format::ascii) {
    RenderSpec text = spec;
    text.ascii_dots = true;
    return eca_ascii(d) + "\n" + render_ascii(p, &mask, text);
  }
  check_spec(spec);
  return emit(side_by_side(eca_scene(d, spec), mask_scene(mask, spec)), spec);
}

}  // namespace diffca
