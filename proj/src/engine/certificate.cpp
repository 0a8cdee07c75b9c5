#include "msp/engine/certificate.hpp"

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace msp::engine {

void Registry::add(RigorFn fn) {
  if (contains(fn.name)) throw std::invalid_argument("duplicate function '" + fn.name + "'");
  std::string name = fn.name;
  fns_.emplace(std::move(name), std::move(fn));
}

const RigorFn& Registry::at(const std::string& name) const {
  const auto it = fns_.find(name);
  if (it == fns_.end()) throw UnknownFunction(name);
  return it->second;
}

std::vector<std::string> Registry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, fn] : fns_) out.push_back(name);
  return out;
}

SlopeBound SlopeBound::constant(Dyadic bound) {
  SlopeBound s;
  s.constant_ = std::move(bound);
  return s;
}

SlopeBound SlopeBound::table(std::vector<SlopePiece> pieces) {
  if (pieces.empty()) throw std::invalid_argument("empty slope table");
  std::sort(pieces.begin(), pieces.end(), [](const SlopePiece& x, const SlopePiece& y) { return x.lo < y.lo; });
  SlopeBound s;
  s.pieces_ = std::move(pieces);
  return s;
}

void SlopeBound::validate(const Dyadic& a, const Dyadic& b) const {
  if (is_constant()) {
    if (constant_.sign() <= 0) throw std::invalid_argument("slope bound must be positive");
    return;
  }
  for (const SlopePiece& piece : pieces_) {
    if (piece.bound.sign() <= 0) throw std::invalid_argument("slope bound must be positive");
    if (piece.hi < piece.lo) throw std::invalid_argument("slope piece with lo > hi");
  }
  if (pieces_.front().lo > a) throw std::invalid_argument("slope table starts after a");
  Dyadic reach = pieces_.front().hi;
  for (std::size_t i = 1; i < pieces_.size() && reach < b; ++i) {
    if (pieces_[i].lo > reach) throw std::invalid_argument("gap in slope table at " + reach.str());
    reach = max(reach, pieces_[i].hi);
  }
  if (reach < b) throw std::invalid_argument("slope table ends before b");
}

Dyadic SlopeBound::max_over(const Dyadic& lo, const Dyadic& hi) const {
  if (is_constant()) return constant_;
  std::optional<Dyadic> best;
  for (const SlopePiece& piece : pieces_) {
    if (piece.hi < lo || piece.lo > hi) continue;
    if (!best || *best < piece.bound) best = piece.bound;
  }
  if (!best) throw std::invalid_argument("slope table does not cover " + lo.str() + ".." + hi.str());
  return *best;
}

void write_certificate(std::ostream& out, const Certificate& cert) {
  out << "MSPCERT v1\n";
  out << "fn: " << cert.fn_name << '\n';
  out << "a: " << cert.a.str() << '\n';
  out << "b: " << cert.b.str() << '\n';
  if (cert.slope.is_constant()) {
    out << "slope: const " << cert.slope.constant_bound().str() << '\n';
  } else {
    out << "slope: table " << cert.slope.pieces().size() << '\n';
    for (const SlopePiece& piece : cert.slope.pieces()) {
      out << piece.lo.str() << ' ' << piece.hi.str() << ' ' << piece.bound.str() << '\n';
    }
  }
  out << "prec: " << cert.precision_bits << '\n';
  out << "points: " << cert.points.size() << '\n';
  for (const CertPoint& point : cert.points) out << point.t.str() << ' ' << point.lower.str() << '\n';
}

std::string to_text(const Certificate& cert) {
  std::ostringstream out;
  write_certificate(out, cert);
  return out.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::string next() {
    std::string line;
    ++line_no_;
    if (!std::getline(in_, line)) fail("unexpected end of file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }

  // "key: value" -> value
  std::string field(const std::string& key) {
    const std::string line = next();
    const std::string prefix = key + ": ";
    if (line.rfind(prefix, 0) != 0) fail("expected '" + prefix + "'");
    return line.substr(prefix.size());
  }

  std::vector<std::string> words(std::size_t expected) {
    std::istringstream row(next());
    std::vector<std::string> out;
    for (std::string w; row >> w;) out.push_back(w);
    if (out.size() != expected) fail("expected " + std::to_string(expected) + " fields");
    return out;
  }

  Dyadic dyadic(const std::string& text) {
    try {
      return Dyadic::parse(text);
    } catch (const rigor::ParseError& e) {
      fail(e.what());
    }
  }

  long integer(const std::string& text) {
    try {
      std::size_t used = 0;
      const long v = std::stol(text, &used);
      if (used != text.size()) fail("trailing characters in '" + text + "'");
      return v;
    } catch (const std::logic_error&) {
      fail("not an integer: '" + text + "'");
    }
  }

  [[noreturn]] void fail(const std::string& what) const { throw CertificateFormatError(line_no_, what); }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

}  // namespace

Certificate read_certificate(std::istream& in) {
  LineReader reader(in);
  if (reader.next() != "MSPCERT v1") reader.fail("missing 'MSPCERT v1' header");
  Certificate cert;
  cert.fn_name = reader.field("fn");
  if (cert.fn_name.empty()) reader.fail("empty function name");
  cert.a = reader.dyadic(reader.field("a"));
  cert.b = reader.dyadic(reader.field("b"));
  const std::string slope = reader.field("slope");
  if (slope.rfind("const ", 0) == 0) {
    cert.slope = SlopeBound::constant(reader.dyadic(slope.substr(6)));
  } else if (slope.rfind("table ", 0) == 0) {
    const long n = reader.integer(slope.substr(6));
    if (n <= 0) reader.fail("slope table needs at least one row");
    std::vector<SlopePiece> pieces;
    for (long i = 0; i < n; ++i) {
      const auto w = reader.words(3);
      pieces.push_back({reader.dyadic(w[0]), reader.dyadic(w[1]), reader.dyadic(w[2])});
    }
    cert.slope = SlopeBound::table(std::move(pieces));
  } else {
    reader.fail("slope must be 'const <dyadic>' or 'table <n>'");
  }
  const long bits = reader.integer(reader.field("prec"));
  if (bits < Precision::kMinBits || bits > 1'000'000) reader.fail("precision out of range");
  cert.precision_bits = static_cast<int>(bits);
  const long m = reader.integer(reader.field("points"));
  if (m < 0) reader.fail("negative point count");
  cert.points.reserve(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) {
    const auto w = reader.words(2);
    cert.points.push_back({reader.dyadic(w[0]), reader.dyadic(w[1])});
  }
  return cert;
}

Certificate from_text(const std::string& text) {
  std::istringstream in(text);
  return read_certificate(in);
}

}  // namespace msp::engine
