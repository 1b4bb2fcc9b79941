#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "capdual/chain_algebra.hpp"
#include "capdual/dual_cellulation.hpp"
#include "capdual/duality.hpp"
#include "capdual/level_sets.hpp"
#include "capdual/simplicial_complex.hpp"
#include "capdual/types.hpp"

namespace capdual {

/// Complex file format: UTF-8 text, '#' starts a comment line, every other
/// non-blank line lists the vertex indices of one top-dimensional simplex.
std::vector<std::vector<long>> parse_complex_lines(std::istream& in);
SimplicialComplex load_complex_file(const std::string& path);

/// Cocycle file format: lines "u v value" for edges with a nonzero value,
/// all other edges zero; u, v are original vertex labels. The cochain is
/// validated as a cocycle on load.
Cochain load_cocycle_file(const SimplicialComplex& k, const std::string& path, Ring ring);

/// Exact rational parser for "p/q" (or a plain integer); floating-point
/// input is rejected.
Rat parse_rational(const std::string& text);
std::string rational_string(const Rat& r);

uint64_t fnv1a64_file(const std::string& path);

// --- report rendering (line-oriented text and structured JSON) ---

struct HomologyTable {
    std::string complex_name;
    Ring ring = Ring::Integers;
    bool cohomology = false;
    std::vector<HomologyGroup> groups;
};

void render_homology_text(std::ostream& out, const HomologyTable& table);
std::string render_homology_json(const HomologyTable& table);

void render_certificate_text(std::ostream& out, const SimplicialComplex& k,
                             const ManifoldCertificate& cert);
std::string render_certificate_json(const SimplicialComplex& k, const ManifoldCertificate& cert);

void render_duality_text(std::ostream& out, const DualityReport& report);
std::string render_duality_json(const DualityReport& report);

void render_dual_complex_text(std::ostream& out, const DualComplex& dual,
                              const DualCorrespondence& corr);
std::string render_dual_complex_json(const DualComplex& dual, const DualCorrespondence& corr);

// --- geometry export: exact rational positions on edges, then connectivity ---

void export_curve(std::ostream& out, const SimplicialComplex& k, const NormalCurve& curve);
void export_surface(std::ostream& out, const SimplicialComplex& k, const NormalSurface& surface);

}  // namespace capdual
