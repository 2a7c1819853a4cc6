#include "toricfrob/catalog.hpp"

#include <cctype>

namespace toricfrob {

Fan projective_space(std::size_t d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "projective space needs d >= 1");
  Fan fan{d, {}, {}, "projective(" + std::to_string(d) + ")"};
  IntVector last(d, Integer(-1));
  for (std::size_t i = 0; i < d; ++i) {
    IntVector e(d);
    e[i] = 1;
    fan.rays.push_back(std::move(e));
  }
  fan.rays.push_back(std::move(last));
  for (std::size_t skip = 0; skip <= d; ++skip) {
    IndexSet cone;
    for (std::size_t i = 0; i <= d; ++i)
      if (i != skip) cone.push_back(i);
    fan.max_cones.push_back(std::move(cone));
  }
  return fan;
}

Fan product_of_projective(const std::vector<std::size_t>& dims) {
  if (dims.empty()) throw Error(ErrorCode::InvalidArgument, "product needs at least one factor");
  Fan fan = projective_space(dims.front());
  std::string name = "product(" + std::to_string(dims.front());
  for (std::size_t i = 1; i < dims.size(); ++i) {
    fan = product(fan, projective_space(dims[i]));
    name += "," + std::to_string(dims[i]);
  }
  fan.name = name + ")";
  return fan;
}

Fan hirzebruch(unsigned n) {
  const long k = static_cast<long>(n);
  return make_fan(2, {{1, 0}, {0, 1}, {-1, k}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}},
                  "hirzebruch(" + std::to_string(n) + ")");
}

Fan del_pezzo(unsigned k) {
  if (k > 3) throw Error(ErrorCode::UnknownName, "toric del Pezzo blowups stop at three points");
  static const std::vector<IntVector> points{{1, 1}, {-1, 0}, {0, -1}};
  Fan fan = projective_space(2);
  for (unsigned i = 0; i < k; ++i) fan = star_subdivision(fan, points[i]);
  fan.name = "delpezzo(" + std::to_string(k) + ")";
  return fan;
}

Fan fatal_example() {
  Fan fan = star_subdivision(projective_space(3), IntVector{0, 3, 2});
  fan.name = "fatal_example";
  return fan;
}

Fan zero_nef_surface() {
  std::vector<IntVector> rays{{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  std::vector<IndexSet> cones;
  for (std::size_t i = 0; i < rays.size(); ++i) cones.push_back({i, (i + 1) % rays.size()});
  return make_fan(2, std::move(rays), std::move(cones), "zero_nef_surface");
}

Fan weighted_projective(const std::vector<Integer>& weights) {
  const std::size_t n = weights.size();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "weighted projective space needs two weights");
  Integer g = 0;
  for (const auto& w : weights) {
    if (w <= 0) throw Error(ErrorCode::InvalidArgument, "weights must be positive");
    g = gcd(g, w);
  }
  if (g != 1) throw Error(ErrorCode::InvalidArgument, "weights must be coprime");
  IntMatrix column(n, 1);
  for (std::size_t i = 0; i < n; ++i) column(i, 0) = weights[i];
  const auto snf = smith_normal_form(column);
  // Rows 1.. of U give coordinates on Z^n / Z w; columns are the ray images.
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector u;
    for (std::size_t j = 1; j < n; ++j) u.push_back(snf.U(j, i));
    rays.push_back(std::move(u));
  }
  std::vector<IndexSet> cones;
  for (std::size_t skip = 0; skip < n; ++skip) {
    IndexSet cone;
    for (std::size_t i = 0; i < n; ++i)
      if (i != skip) cone.push_back(i);
    cones.push_back(std::move(cone));
  }
  std::string name = "weighted_projective(";
  for (std::size_t i = 0; i < n; ++i) name += (i ? "," : "") + weights[i].get_str();
  return make_fan(n - 1, std::move(rays), std::move(cones), name + ")");
}

namespace {

struct Expr {
  std::string head;
  std::vector<Integer> ints;
  std::vector<IntVector> vectors;
  std::vector<std::string> names;  // nested expressions, kept as text
};

class ExprParser {
 public:
  explicit ExprParser(const std::string& text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  Expr parse() {
    Expr e;
    e.head = identifier();
    if (at_end()) return e;
    expect('(');
    if (peek() != ')') {
      for (;;) {
        if (peek() == '[') {
          e.vectors.push_back(vector());
        } else if (peek() == '-' || std::isdigit(static_cast<unsigned char>(peek()))) {
          e.ints.push_back(integer());
        } else {
          e.names.push_back(nested());
        }
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect(')');
    if (!at_end()) fail("trailing characters");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, "catalog expression '" + s_ + "': " + what + " at offset " +
                                           std::to_string(pos_));
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string identifier() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    if (start == pos_) fail("expected a name");
    return s_.substr(start, pos_ - start);
  }
  Integer integer() {
    const std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_ || (pos_ == start + 1 && s_[start] == '-')) fail("expected an integer");
    return Integer(s_.substr(start, pos_ - start));
  }
  IntVector vector() {
    expect('[');
    IntVector v;
    if (peek() != ']') {
      v.push_back(integer());
      while (peek() == ',') {
        ++pos_;
        v.push_back(integer());
      }
    }
    expect(']');
    return v;
  }
  // Balanced-parenthesis slice for a nested expression.
  std::string nested() {
    const std::size_t start = pos_;
    int depth = 0;
    while (!at_end()) {
      const char c = peek();
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      if (c == ',' && depth == 0) break;
      ++pos_;
    }
    if (start == pos_) fail("expected an argument");
    return s_.substr(start, pos_ - start);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

std::size_t small(const Integer& v, const char* what) {
  if (v < 0 || v > 64) throw Error(ErrorCode::InvalidArgument, std::string(what) + " out of range");
  return v.get_ui();
}

void arity(const Expr& e, std::size_t ints, std::size_t vectors, std::size_t names) {
  if (e.ints.size() != ints || e.vectors.size() != vectors || e.names.size() != names) {
    throw Error(ErrorCode::ParseError, "wrong arguments for '" + e.head + "'");
  }
}

}  // namespace

Fan catalog(const std::string& expression) {
  const Expr e = ExprParser(expression).parse();
  if (e.head == "projective" || e.head == "P") {
    arity(e, 1, 0, 0);
    return projective_space(small(e.ints[0], "dimension"));
  }
  if (e.head == "product") {
    if (e.ints.empty() || !e.vectors.empty() || !e.names.empty()) arity(e, 1, 0, 0);
    std::vector<std::size_t> dims;
    for (const auto& v : e.ints) dims.push_back(small(v, "dimension"));
    return product_of_projective(dims);
  }
  if (e.head == "hirzebruch") {
    arity(e, 1, 0, 0);
    return hirzebruch(static_cast<unsigned>(small(e.ints[0], "twist")));
  }
  if (e.head == "delpezzo") {
    arity(e, 1, 0, 0);
    return del_pezzo(static_cast<unsigned>(small(e.ints[0], "point count")));
  }
  if (e.head == "fatal_example") {
    arity(e, 0, 0, 0);
    return fatal_example();
  }
  if (e.head == "zero_nef_surface") {
    arity(e, 0, 0, 0);
    return zero_nef_surface();
  }
  if (e.head == "weighted_projective") {
    if (e.ints.size() < 2 || !e.vectors.empty() || !e.names.empty()) arity(e, 2, 0, 0);
    return weighted_projective(e.ints);
  }
  if (e.head == "blowup") {
    if (e.names.size() != 1 || e.vectors.empty() || !e.ints.empty()) arity(e, 0, 1, 1);
    Fan fan = catalog(e.names[0]);
    std::string name = "blowup(" + fan.name;
    for (const auto& v : e.vectors) {
      fan = star_subdivision(fan, v);
      name += ",[";
      for (std::size_t i = 0; i < v.size(); ++i) name += (i ? "," : "") + v[i].get_str();
      name += "]";
    }
    fan.name = name + ")";
    return fan;
  }
  throw Error(ErrorCode::UnknownName, "no catalog entry named '" + e.head + "'");
}

std::vector<std::string> catalog_listing() {
  return {
      "projective(d)                 projective space P^d",
      "product(d1,d2,...)            product of projective spaces",
      "hirzebruch(n)                 Hirzebruch surface, rays (1,0),(0,1),(-1,n),(0,-1)",
      "delpezzo(k)                   P^2 blown up in k = 0..3 torus-fixed points",
      "fatal_example                 P^3 star-subdivided at (0,3,2)",
      "zero_nef_surface              seven-ray surface (1,0),(1,1),(0,1),(-1,0),(-1,-1),(0,-1),(1,-1)",
      "weighted_projective(w0,...)   weighted projective space",
      "blowup(name,[v],...)          successive star subdivisions of a catalog fan",
  };
}

std::vector<std::string> smooth_catalog() {
  return {"projective(1)", "projective(2)", "projective(3)", "projective(4)",
          "product(1,1)",  "product(1,2)",  "product(1,1,1)", "product(2,2)",
          "hirzebruch(1)", "hirzebruch(2)", "hirzebruch(3)",
          "delpezzo(1)",   "delpezzo(2)",   "delpezzo(3)",
          "blowup(projective(3),[1,1,0])"};
}

std::vector<std::string> full_catalog() {
  auto names = smooth_catalog();
  for (const char* extra : {"fatal_example", "zero_nef_surface", "weighted_projective(1,1,2)",
                            "weighted_projective(1,2,3)", "hirzebruch(4)", "hirzebruch(5)",
                            "hirzebruch(6)"}) {
    names.emplace_back(extra);
  }
  return names;
}

}  // namespace toricfrob
