#include "rachsim/assignment.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rachsim/error.hpp"

namespace rachsim {

std::vector<PrachConfigIndex> default_palette() {
    std::vector<PrachConfigIndex> palette;
    for (int v : kUsableIndices) palette.emplace_back(v);
    return palette;
}

Assignment assign_same(const std::vector<CellSite>& sites, PrachConfigIndex index) {
    Assignment a;
    for (const CellSite& s : sites) a.emplace(s.id, index);
    return a;
}

Assignment assign_alternating_rows(const std::vector<std::vector<int>>& rows,
                                   std::span<const PrachConfigIndex> palette) {
    if (palette.size() != 4) throw std::invalid_argument("alternating rows needs a palette of 4");
    std::set<PrachConfigIndex> distinct(palette.begin(), palette.end());
    if (distinct.size() != 4) throw std::invalid_argument("palette values must be distinct");

    Assignment a;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::size_t pair = (r % 2) * 2;    // (a,b) on even rows, (c,d) on odd rows
        const std::size_t flip = (r / 2) % 2;    // every reuse of a pair inverts it
        for (std::size_t k = 0; k < rows[r].size(); ++k)
            a.emplace(rows[r][k], palette[pair + ((k + flip) % 2)]);
    }
    return a;
}

Assignment assign_greedy_coloring(const NeighborGraph& graph,
                                  std::span<const PrachConfigIndex> palette, Rng* /*rng*/) {
    std::vector<int> order(static_cast<std::size_t>(graph.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return graph.degree(a) > graph.degree(b); });

    std::vector<int> color(order.size(), -1);
    for (int v : order) {
        std::vector<bool> taken(palette.size(), false);
        for (int w : graph.neighbors(v))
            if (color[static_cast<std::size_t>(w)] >= 0) taken[static_cast<std::size_t>(color[static_cast<std::size_t>(w)])] = true;
        const auto free = std::find(taken.begin(), taken.end(), false);
        if (free == taken.end())
            throw AssignmentInfeasible(v, "no palette value available for site " + std::to_string(v));
        color[static_cast<std::size_t>(v)] = static_cast<int>(free - taken.begin());
    }

    Assignment a;
    for (int v = 0; v < graph.size(); ++v)
        a.emplace(v, palette[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])]);
    return a;
}

bool verify_neighbor_distinct(const NeighborGraph& graph, const Assignment& a) {
    for (int v = 0; v < graph.size(); ++v)
        if (!a.contains(v))
            throw std::invalid_argument("assignment is missing site " + std::to_string(v));
    for (const auto& [u, w] : graph.edges())
        if (a.at(u) == a.at(w)) return false;
    return true;
}

Assignment load_assignment_file(const std::filesystem::path& path, int n_sites,
                                std::span<const PrachConfigIndex> palette) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open assignment file " + path.string());

    Assignment a;
    std::string line;
    for (int line_no = 1; std::getline(in, line); ++line_no) {
        if (line.empty() || line.front() == '#') continue;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream fields(line);
        int site = -1, value = -1;
        char comma = 0;
        if (!(fields >> site >> comma >> value) || comma != ',')
            throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": expected site_id,prach_index");
        if (site < 0 || site >= n_sites)
            throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": unknown site " + std::to_string(site));
        const auto index = PrachConfigIndex::try_make(value);
        if (!index || std::find(palette.begin(), palette.end(), *index) == palette.end())
            throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": index " +
                              std::to_string(value) + " not in palette");
        if (!a.emplace(site, *index).second)
            throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": duplicate site " + std::to_string(site));
    }
    for (int s = 0; s < n_sites; ++s)
        if (!a.contains(s)) throw ConfigError(path.string() + ": no index for site " + std::to_string(s));
    return a;
}

}  // namespace rachsim
