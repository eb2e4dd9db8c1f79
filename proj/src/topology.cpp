#include "rachsim/topology.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace rachsim {

namespace {

const double kRowPitch = std::sqrt(3.0) / 2.0;

Point2 axial_to_point(int q, int r, double isd) {
    return Point2{isd * (q + 0.5 * r), isd * kRowPitch * r};
}

}  // namespace

double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

Region Region::rectangle(double x0, double y0, double x1, double y1) {
    if (!(x1 > x0) || !(y1 > y0)) throw std::invalid_argument("degenerate rectangle");
    return Region{{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
}

bool Region::contains(Point2 p) const {
    // Even-odd rule; boundary points on the lower/left edges count as inside.
    bool inside = false;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point2 a = vertices[i];
        const Point2 b = vertices[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x_cross) inside = !inside;
        }
    }
    return inside;
}

std::pair<Point2, Point2> Region::bounding_box() const {
    if (vertices.empty()) throw std::invalid_argument("empty region");
    Point2 lo = vertices.front();
    Point2 hi = vertices.front();
    for (const Point2& v : vertices) {
        lo.x = std::min(lo.x, v.x);
        lo.y = std::min(lo.y, v.y);
        hi.x = std::max(hi.x, v.x);
        hi.y = std::max(hi.y, v.y);
    }
    return {lo, hi};
}

double Region::area() const {
    double twice = 0.0;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++)
        twice += vertices[j].x * vertices[i].y - vertices[i].x * vertices[j].y;
    return std::abs(twice) / 2.0;
}

Point2 Region::centroid() const {
    double twice = 0.0, cx = 0.0, cy = 0.0;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const double cross = vertices[j].x * vertices[i].y - vertices[i].x * vertices[j].y;
        twice += cross;
        cx += (vertices[j].x + vertices[i].x) * cross;
        cy += (vertices[j].y + vertices[i].y) * cross;
    }
    return Point2{cx / (3.0 * twice), cy / (3.0 * twice)};
}

NeighborGraph::NeighborGraph(int n_vertices) : adjacency_(static_cast<std::size_t>(n_vertices)) {
    if (n_vertices < 0) throw std::invalid_argument("negative vertex count");
}

void NeighborGraph::add_edge(int a, int b) {
    if (a == b || has_edge(a, b)) return;
    auto& na = adjacency_.at(static_cast<std::size_t>(a));
    auto& nb = adjacency_.at(static_cast<std::size_t>(b));
    na.insert(std::upper_bound(na.begin(), na.end(), b), b);
    nb.insert(std::upper_bound(nb.begin(), nb.end(), a), a);
}

bool NeighborGraph::has_edge(int a, int b) const {
    const auto& na = neighbors(a);
    return std::binary_search(na.begin(), na.end(), b);
}

std::vector<std::pair<int, int>> NeighborGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < size(); ++v)
        for (int w : neighbors(v))
            if (v < w) out.emplace_back(v, w);
    return out;
}

std::vector<CellSite> hex_grid(int n_cells, double isd_m, double antenna_height_m) {
    if (n_cells < 1) throw std::invalid_argument("hex_grid needs at least one cell");
    if (!(isd_m > 0.0)) throw std::invalid_argument("inter-site distance must be positive");

    // Walk each ring counter-clockwise from its east corner.
    static constexpr int kDirections[6][2] = {{-1, 1}, {-1, 0}, {0, -1}, {1, -1}, {1, 0}, {0, 1}};

    std::vector<CellSite> sites;
    sites.reserve(static_cast<std::size_t>(n_cells));
    auto push = [&](int q, int r) {
        const int id = static_cast<int>(sites.size());
        sites.push_back(CellSite{id, axial_to_point(q, r, isd_m), antenna_height_m, std::nullopt});
    };

    push(0, 0);
    for (int ring = 1; static_cast<int>(sites.size()) < n_cells; ++ring) {
        int q = ring, r = 0;
        for (const auto& dir : kDirections) {
            for (int step = 0; step < ring; ++step) {
                if (static_cast<int>(sites.size()) == n_cells) return sites;
                push(q, r);
                q += dir[0];
                r += dir[1];
            }
        }
    }
    return sites;
}

std::vector<std::vector<int>> hex_rows(const std::vector<CellSite>& sites, double isd_m) {
    std::map<long, std::vector<const CellSite*>> by_level;
    for (const CellSite& s : sites)
        by_level[std::lround(s.position.y / (isd_m * kRowPitch))].push_back(&s);

    std::vector<std::vector<int>> rows;
    for (auto& [level, members] : by_level) {
        std::sort(members.begin(), members.end(), [](const CellSite* a, const CellSite* b) {
            return a->position.x < b->position.x;
        });
        std::vector<int> row;
        for (const CellSite* s : members) row.push_back(s->id);
        rows.push_back(std::move(row));
    }
    return rows;
}

Region simulated_region(const std::vector<CellSite>& sites, double isd_m) {
    if (sites.empty()) throw std::invalid_argument("no sites");
    double x0 = sites.front().position.x, x1 = x0;
    double y0 = sites.front().position.y, y1 = y0;
    for (const CellSite& s : sites) {
        x0 = std::min(x0, s.position.x);
        x1 = std::max(x1, s.position.x);
        y0 = std::min(y0, s.position.y);
        y1 = std::max(y1, s.position.y);
    }
    const double pad = isd_m / 2.0;
    return Region::rectangle(x0 - pad, y0 - pad, x1 + pad, y1 + pad);
}

std::vector<UeNode> place_ues_uniform(int n_ues, const Region& region, Rng& rng, double height_m) {
    if (n_ues < 0) throw std::invalid_argument("negative UE count");
    if (region.vertices.size() < 3 || !(region.area() > 0.0))
        throw std::invalid_argument("degenerate region");
    const auto [lo, hi] = region.bounding_box();

    std::vector<UeNode> ues;
    ues.reserve(static_cast<std::size_t>(n_ues));
    while (static_cast<int>(ues.size()) < n_ues) {
        const Point2 p{rng.uniform(lo.x, hi.x), rng.uniform(lo.y, hi.y)};
        if (!region.contains(p)) continue;
        ues.push_back(UeNode{static_cast<int>(ues.size()), p, height_m});
    }
    return ues;
}

NeighborGraph neighbor_graph(const std::vector<CellSite>& sites, double isd_m) {
    NeighborGraph g(static_cast<int>(sites.size()));
    const double lo = isd_m * (1.0 - 1e-6);
    const double hi = isd_m * (1.0 + 1e-6);
    for (std::size_t i = 0; i < sites.size(); ++i) {
        for (std::size_t j = i + 1; j < sites.size(); ++j) {
            const double d = distance(sites[i].position, sites[j].position);
            if (d >= lo && d <= hi) g.add_edge(sites[i].id, sites[j].id);
        }
    }
    return g;
}

int serving_cell(const UeNode& ue, const std::vector<CellSite>& sites, const LinkLossFn& path_loss) {
    if (sites.empty()) throw std::invalid_argument("serving_cell needs at least one site");
    int best = -1;
    double best_loss = 0.0;
    for (const CellSite& s : sites) {
        const double loss = path_loss(ue, s);
        if (best < 0 || loss < best_loss || (loss == best_loss && s.id < best)) {
            best = s.id;
            best_loss = loss;
        }
    }
    return best;
}

}  // namespace rachsim
