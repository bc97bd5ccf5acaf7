#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parkfact/arch.hpp"
#include "parkfact/parking.hpp"

namespace parkfact {

/// Self-contained SVG of a labelled path with the diagonal, optionally with
/// the bounce path through the given diagonal contacts.
std::string render_path_svg(const LabelledDyckPath& path, const std::optional<std::vector<int>>& bounce_contacts = std::nullopt);
/// Lattice points drawn as '.', path points as '+', labels on horizontal
/// steps, '|' on vertical steps, bounce contacts as '*'.
std::string render_path_ascii(const LabelledDyckPath& path, const std::optional<std::vector<int>>& bounce_contacts = std::nullopt);

/// Vertices on a baseline, arcs as semicircles labelled at their apexes.
/// Vertices carry sigma-labels when a cycle is given, positions otherwise.
std::string render_arch_svg(const ArchDiagram& a, const FullCycle* sigma = nullptr);
/// One row per nesting level, outermost on top.
std::string render_arch_ascii(const ArchDiagram& a, const FullCycle* sigma = nullptr);

}  // namespace parkfact
