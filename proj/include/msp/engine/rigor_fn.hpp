#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "msp/rigor/interval.hpp"

namespace msp::engine {

using rigor::Dyadic;
using rigor::Interval;
using rigor::Precision;
using rigor::Rational;

/// A real function with a rigorous interval extension: eval(x, p) must contain
/// f(t) for every t in x, and must be deterministic in (x, p).
struct RigorFn {
  std::string name;
  std::function<Interval(const Interval&, Precision)> eval;
};

class UnknownFunction : public std::out_of_range {
 public:
  explicit UnknownFunction(const std::string& name) : std::out_of_range("unknown function '" + name + "'") {}
};

/// Name -> function lookup used by the certificate verifier.
class Registry {
 public:
  /// Throws std::invalid_argument on a duplicate name.
  void add(RigorFn fn);
  bool contains(const std::string& name) const { return fns_.count(name) != 0; }
  /// Throws UnknownFunction.
  const RigorFn& at(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, RigorFn> fns_;
};

}  // namespace msp::engine
