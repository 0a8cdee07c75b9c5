#include <vector>

#include "msp/engine/certify.hpp"

namespace msp::engine {

SupResult bound_sup_abs(const RigorFn& f, const Dyadic& a, const Dyadic& b, const Dyadic& threshold, Precision p,
                        int max_depth) {
  if (!(a < b)) throw std::invalid_argument("bound_sup_abs needs a < b");
  if (threshold.sign() <= 0) throw std::invalid_argument("threshold must be positive");
  if (max_depth < 0) throw std::invalid_argument("max_depth must be non-negative");

  struct Box {
    Interval x;
    int depth;
  };
  SupResult result;
  std::vector<Box> stack{{Interval(a, b), 0}};
  std::optional<Box> deepest;
  while (!stack.empty()) {
    const Box box = stack.back();
    stack.pop_back();
    ++result.boxes;
    const Interval y = f.eval(box.x, p);
    if (-threshold < y.lo() && y.hi() < threshold) continue;
    if (y.lo() >= threshold || y.hi() <= -threshold) {
      result.status = SupStatus::failed;
      result.witness = box.x;
      return result;
    }
    if (box.depth >= max_depth) {
      if (!deepest) deepest = box;
      continue;
    }
    const Dyadic mid = box.x.midpoint();
    stack.push_back({Interval(mid, box.x.hi()), box.depth + 1});
    stack.push_back({Interval(box.x.lo(), mid), box.depth + 1});
  }
  if (deepest) {
    result.status = SupStatus::depth_exceeded;
    result.witness = deepest->x;
    return result;
  }
  result.status = SupStatus::proved;
  return result;
}

}  // namespace msp::engine
