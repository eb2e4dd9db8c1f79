#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <vector>

#include "rachsim/prach.hpp"
#include "rachsim/rng.hpp"
#include "rachsim/topology.hpp"

namespace rachsim {

/// Site id -> PRACH-ConfigIndex.
using Assignment = std::map<int, PrachConfigIndex>;

Assignment assign_same(const std::vector<CellSite>& sites, PrachConfigIndex index = PrachConfigIndex(1));

/// Two value pairs, (a, b) for even rows and (c, d) for odd rows. Each time a
/// pair is reused its order flips:
///   row 0: a b a b ...   row 1: c d c d ...
///   row 2: b a b a ...   row 3: d c d c ...
/// Throws std::invalid_argument unless the palette has 4 distinct values.
Assignment assign_alternating_rows(const std::vector<std::vector<int>>& rows,
                                   std::span<const PrachConfigIndex> palette);

/// Greedy coloring: vertices by descending degree then id, each takes the first
/// palette entry unused by its already-colored neighbors. `rng` is unused for now.
/// Throws AssignmentInfeasible naming the first vertex left without a value.
Assignment assign_greedy_coloring(const NeighborGraph& graph,
                                  std::span<const PrachConfigIndex> palette, Rng* rng = nullptr);

/// True iff no edge joins two sites with the same index. Throws
/// std::invalid_argument if a graph vertex is missing from `a`.
bool verify_neighbor_distinct(const NeighborGraph& graph, const Assignment& a);

/// Reads `site_id,prach_index` lines. Blank lines and lines starting with '#' are
/// skipped. Every value must be in `palette` and every site 0..n_sites-1 present.
Assignment load_assignment_file(const std::filesystem::path& path, int n_sites,
                                std::span<const PrachConfigIndex> palette);

std::vector<PrachConfigIndex> default_palette();

}  // namespace rachsim
