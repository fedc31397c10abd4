#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "locunc/instance.hpp"

namespace locunc {

using Point2 = std::array<double, 2>;

// The Steiner "format" graph with kappa stacked copies. Copy c >= 1 reuses the
// top row (two vertices) of copy c - 1 as its bottom row and is shifted up by
// 4.5 * c. U_i holds sigma points on a circle of radius rho_i ~ U[0, delta * dbar]
// around the vertex, at angles 2k pi / sigma for k = 1..sigma; rho_i = 0 gives
// a single point. dbar is the mean pairwise distance of the vertex positions.
Instance gen_format(int kappa, double delta, int sigma, std::uint64_t seed);

// vertex positions of format(kappa)
std::vector<Point2> format_positions(int kappa);

struct RoadNet {
  Instance instance;            // clients 0..|I|-1, sites |I|..|I|+|J|-1
  std::vector<Point2> points;   // road vertex positions in [0,1]^2
  std::vector<Edge> roads;      // straight-line planar road edges
  std::vector<int> road_vertex; // instance vertex -> road vertex
};

// n uniform points, Euclidean MST plus m - n + 1 non-crossing extra roads drawn
// with probability proportional to |u_i - u_j|^-2, graph-induced metric,
// disjoint random client and site sets, U_i = the sigma road vertices closest
// to i by road distance (ties by index). Throws InvalidSize on impossible sizes.
RoadNet gen_planar_roadnet(int n, int m, int n_clients, int n_sites, int p, int sigma, std::uint64_t seed);

// true when the closed segments ab and cd meet anywhere other than at a
// shared endpoint
bool segments_cross(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

}  // namespace locunc
