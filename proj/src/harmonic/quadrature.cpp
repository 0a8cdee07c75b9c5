#include "msp/harmonic/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace msp::harmonic {

namespace {

constexpr int kOrder = 16;
constexpr int kGradedDepth = 30;
constexpr double kGradedWidth = std::numbers::pi / 8;

const std::vector<QuadNode>& gl16() {
  static const std::vector<QuadNode> rule = gauss_legendre(kOrder);
  return rule;
}

void add_panel(std::vector<QuadNode>& out, double lo, double hi) {
  const double half = (hi - lo) / 2;
  const double centre = (hi + lo) / 2;
  for (const QuadNode& n : gl16()) out.push_back({centre + half * n.x, half * n.w});
}

int panel_count(int n_quad) {
  if (n_quad < 64) throw std::invalid_argument("quadrature needs at least 64 nodes");
  return (n_quad + kOrder - 1) / kOrder;
}

}  // namespace

std::vector<QuadNode> gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre order must be positive");
  std::vector<QuadNode> nodes(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) p0 = 1;
      dp = n * (x * p1 - p0) / (x * x - 1);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2 / ((1 - x * x) * dp * dp);
    nodes[static_cast<std::size_t>(i)] = {-x, w};
    nodes[static_cast<std::size_t>(n - 1 - i)] = {x, w};
  }
  return nodes;
}

double integrate(const std::function<double(double)>& f, double lo, double hi, int panels) {
  if (panels < 1) throw std::invalid_argument("need at least one panel");
  std::vector<QuadNode> nodes;
  const double width = (hi - lo) / panels;
  for (int k = 0; k < panels; ++k) add_panel(nodes, lo + k * width, k + 1 == panels ? hi : lo + (k + 1) * width);
  double sum = 0;
  for (const QuadNode& n : nodes) sum += n.w * f(n.x);
  return sum;
}

double circle_mean(const std::function<double(double)>& g, int n_quad) {
  const double pi = std::numbers::pi;
  return integrate(g, -pi, pi, panel_count(n_quad)) / (2 * pi);
}

std::vector<QuadNode> graded_rule(int n_quad) {
  const int panels = panel_count(n_quad);
  const double pi = std::numbers::pi;
  std::vector<QuadNode> nodes;
  const double width = (pi - kGradedWidth) / panels;
  for (int k = 0; k < panels; ++k) add_panel(nodes, kGradedWidth + k * width, kGradedWidth + (k + 1) * width);
  double hi = kGradedWidth;
  for (int k = 0; k < kGradedDepth; ++k) {
    add_panel(nodes, hi / 2, hi);
    hi /= 2;
  }
  add_panel(nodes, 0, hi);
  return nodes;
}

}  // namespace msp::harmonic
