// Text serialization: bundle description documents (exact "num/den"
// rationals, bit-exact round-trip) and polygon CSV/SVG export.
#pragma once

#include "avb/bundle.hpp"
#include "avb/slopes.hpp"

#include <string>

namespace avb::io {

// Line-oriented UTF-8 document:
//   rank: <n>
//   finite.matrix: <n*n rationals, row-major>
//   arch.kind: gram|lp|hpoly|vpoly|ellipsoid
//   arch.gram: <n*n rationals>            (kind gram, ellipsoid)
//   arch.p: <real or "inf">               (kind lp)
//   arch.facet: <offset> <n rationals>    (kind hpoly, one line per facet)
//   arch.vertex: <n rationals>            (kind vpoly, one line per vertex)
// '#' starts a comment; blank lines ignored.
std::string to_text(const bundles::AdelicBundle& b);
bundles::AdelicBundle parse_bundle(const std::string& text);
bundles::AdelicBundle load_bundle(const std::string& path);

// CSV rows "rank,value", one vertex per line, header included.
std::string polygon_csv(const slopes::CanonicalPolygon& pg);
// Standalone SVG of the concave polygon, axes labeled (rank, P(rank)).
std::string polygon_svg(const slopes::CanonicalPolygon& pg);

}  // namespace avb::io
