#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rachsim/prach.hpp"
#include "rachsim/rng.hpp"

namespace rachsim {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const Point2&, const Point2&) = default;
};

double distance(Point2 a, Point2 b);

struct CellSite {
    int id = 0;
    Point2 position;
    double antenna_height_m = 30.0;
    std::optional<PrachConfigIndex> prach_index;
};

struct UeNode {
    int id = 0;
    Point2 position;
    double height_m = 1.0;
};

/// Simple polygon, vertices in order. Used as the UE drop area.
struct Region {
    std::vector<Point2> vertices;

    static Region rectangle(double x0, double y0, double x1, double y1);
    bool contains(Point2 p) const;
    std::pair<Point2, Point2> bounding_box() const;
    double area() const;
    Point2 centroid() const;
};

/// Undirected, irreflexive site adjacency.
class NeighborGraph {
public:
    explicit NeighborGraph(int n_vertices = 0);

    /// Ignores self loops and duplicates.
    void add_edge(int a, int b);

    int size() const { return static_cast<int>(adjacency_.size()); }
    const std::vector<int>& neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int a, int b) const;

    /// Each edge once, as (lo, hi), sorted.
    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<std::vector<int>> adjacency_;
};

/// Hexagonal site layout built ring by ring around a center site at the origin.
/// Within each ring sites are ordered counter-clockwise starting east, so n = 2
/// gives two sites on the x axis. Rows are horizontal: row level r sits at
/// y = r * isd * sqrt(3)/2 and odd levels are offset by isd/2 in x.
std::vector<CellSite> hex_grid(int n_cells, double isd_m, double antenna_height_m = 30.0);

/// Number of sites in a hexagon with the given number of complete rings.
constexpr int hex_cells_for_rings(int rings) { return 1 + 3 * rings * (rings + 1); }

/// Site ids grouped by row, rows bottom to top, each row left to right.
std::vector<std::vector<int>> hex_rows(const std::vector<CellSite>& sites, double isd_m);

/// Bounding box of the sites expanded by isd/2 on every side.
Region simulated_region(const std::vector<CellSite>& sites, double isd_m);

/// i.i.d. uniform drop over `region`; ids 0..n-1. Draws are consumed in UE order,
/// so the first k UEs do not depend on n.
std::vector<UeNode> place_ues_uniform(int n_ues, const Region& region, Rng& rng,
                                      double height_m = 1.0);

/// Edge iff the site distance is isd within a relative 1e-6.
NeighborGraph neighbor_graph(const std::vector<CellSite>& sites, double isd_m);

using LinkLossFn = std::function<double(const UeNode&, const CellSite&)>;

/// Site with the smallest path loss; ties go to the lowest id.
int serving_cell(const UeNode& ue, const std::vector<CellSite>& sites, const LinkLossFn& path_loss);

}  // namespace rachsim
