#include "cofiso/format.hpp"

#include <cctype>
#include <sstream>

namespace cofiso {

namespace {

template <typename T>
std::string to_string_of(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Point point() {
    const std::size_t start = pos_;
    expect('(');
    std::vector<std::int64_t> coords;
    coords.push_back(coordinate());
    while (peek() == ',') {
      ++pos_;
      coords.push_back(coordinate());
    }
    expect(')');
    if (coords.size() < 2)
      fail_at(start, "points require at least two coordinates");
    return Point(std::move(coords));
  }

  FinPointSet point_set() {
    expect('{');
    std::vector<Point> pts;
    std::vector<std::size_t> starts;
    if (peek() != '}') {
      for (;;) {
        starts.push_back(pos_);
        pts.push_back(point());
        if (peek() != ';') break;
        ++pos_;
      }
    }
    expect('}');
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i].dimension() != pts[0].dimension())
        fail_at(starts[i], "point dimension differs within set");
      for (std::size_t j = 0; j < i; ++j)
        if (pts[i] == pts[j]) fail_at(starts[i], "duplicate point in set");
    }
    return FinPointSet(std::move(pts));
  }

  Perm perm() {
    const std::size_t start = pos_;
    expect('[');
    std::vector<int> images;
    images.push_back(image());
    while (peek() == ',') {
      ++pos_;
      images.push_back(image());
    }
    expect(']');
    try {
      return Perm(images);
    } catch (const Error&) {
      fail_at(start, "permutation images are not a bijection of 1..n");
    }
  }

  Element element() {
    const std::size_t start = pos_;
    expect('(');
    Perm sigma = perm();
    expect('|');
    const std::size_t set_start = pos_;
    FinPointSet excluded = point_set();
    expect(')');
    if (!excluded.empty() && excluded.dimension() != sigma.degree())
      fail_at(set_start, "point dimension differs from permutation degree");
    try {
      return Element(std::move(sigma), std::move(excluded));
    } catch (const Error& e) {
      fail_at(start, e.what());
    }
  }

  void expect_end() {
    if (pos_ != text_.size()) fail_at(pos_, "trailing input");
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c)
      fail_at(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t number() {
    const std::size_t start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail_at(pos_, "expected a number");
    std::int64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000000000000000000) fail_at(start, "number too large");
      ++pos_;
    }
    return value;
  }

  std::int64_t coordinate() {
    const std::size_t start = pos_;
    const std::int64_t v = number();
    if (v < 1) fail_at(start, "coordinates must be positive");
    return v;
  }

  int image() {
    const std::size_t start = pos_;
    const std::int64_t v = number();
    if (v < 1 || v > 1000000) fail_at(start, "permutation entry out of range");
    return static_cast<int>(v);
  }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const {
    throw ParseError(what, pos + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format(const Point& p) { return to_string_of(p); }
std::string format(const FinPointSet& s) { return to_string_of(s); }
std::string format(const Perm& sigma) { return to_string_of(sigma); }
std::string format(const Element& a) { return to_string_of(a); }
std::string format(const SemidirectPair& p) { return to_string_of(p); }

Point parse_point(std::string_view text) {
  Parser parser(text);
  Point p = parser.point();
  parser.expect_end();
  return p;
}

FinPointSet parse_point_set(std::string_view text) {
  Parser parser(text);
  FinPointSet s = parser.point_set();
  parser.expect_end();
  return s;
}

Perm parse_perm(std::string_view text) {
  Parser parser(text);
  Perm sigma = parser.perm();
  parser.expect_end();
  return sigma;
}

Element parse_element(std::string_view text) {
  Parser parser(text);
  Element a = parser.element();
  parser.expect_end();
  return a;
}

}  // namespace cofiso
