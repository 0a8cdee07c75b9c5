#pragma once

#include <functional>
#include <vector>

namespace msp::harmonic {

struct QuadNode {
  double x;
  double w;
};

/// Gauss-Legendre rule with n nodes on [-1, 1], nodes ascending.
std::vector<QuadNode> gauss_legendre(int n);

/// Composite 16-point rule on [lo, hi] with `panels` equal panels.
double integrate(const std::function<double(double)>& f, double lo, double hi, int panels);

/// (1/2pi) * integral of g over [-pi, pi] on uniform 16-point panels, about n_quad nodes.
double circle_mean(const std::function<double(double)>& g, int n_quad);

// Nodes for integrals over the gap s in (0, pi] with an integrable log
// singularity at s = 0: uniform panels on [pi/8, pi] carrying about n_quad
// nodes, then 30 panels halving toward 0 and one last panel down to 0.
std::vector<QuadNode> graded_rule(int n_quad);

}  // namespace msp::harmonic
