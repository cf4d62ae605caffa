#include "tauhh/presentation_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "tauhh/errors.hpp"

namespace tauhh {

namespace {

class Cursor {
 public:
  Cursor(const std::string& text, std::size_t line) : text_(text), line_(line) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return pos_ + 1; }
  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  /// Identifier: letter or '_' followed by letters, digits, '_' or '\''.
  std::string ident(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_' || text_[pos_] == '\'')) {
        ++pos_;
      }
    }
    if (start == pos_) fail(std::string("expected ") + what);
    return text_.substr(start, pos_ - start);
  }

  /// Unsigned decimal integer.
  mpz_class integer(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return mpz_class(text_.substr(start, pos_ - start));
  }

  bool digit_next() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::string rest() {
    skip_ws();
    std::string r = text_.substr(pos_);
    pos_ = text_.size();
    return r;
  }

  void done() {
    if (!at_end()) fail("unexpected trailing text");
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_ + 1); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t column) const {
    throw PresentationError(what, line_, column);
  }

 private:
  const std::string& text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

struct DimEntry {
  std::size_t y, x, d, line, column;
};

struct ActEntry {
  bool left;
  std::size_t arrow, y, x;
  DenseMatrix matrix;
  std::size_t line, column;
};

class Parser {
 public:
  PresentationFile run(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
      ++line_no;
      std::string line = raw.substr(0, raw.find('#'));
      Cursor c(line, line_no);
      if (c.at_end()) continue;
      directive(c);
    }
    return finish();
  }

 private:
  PresentationFile file_;
  bool field_seen_ = false;
  bool field_locked_ = false;
  bool have_bimodule_ = false;
  std::vector<DimEntry> dims_;
  std::vector<ActEntry> acts_;

  Quiver& quiver() { return file_.presentation.quiver; }
  const Field& field() const { return file_.presentation.field; }

  void directive(Cursor& c) {
    std::size_t col = c.column();
    std::string word = c.ident("a directive");
    if (word == "field") {
      field_directive(c, col);
    } else if (word == "vertex") {
      std::size_t at = (c.skip_ws(), c.column());
      std::string name = c.ident("a vertex name");
      c.done();
      wrap(c, at, [&] { quiver().add_vertex(name); });
    } else if (word == "arrow") {
      std::size_t at = (c.skip_ws(), c.column());
      std::string name = c.ident("an arrow name");
      std::size_t s = vertex(c), t = vertex(c);
      c.done();
      wrap(c, at, [&] { quiver().add_arrow(name, s, t); });
    } else if (word == "relation") {
      field_locked_ = true;
      relation(c);
    } else if (word == "cap") {
      mpz_class v = c.integer("a positive integer");
      if (v <= 0 || !v.fits_ulong_p()) c.fail("cap must be a positive integer");
      c.done();
      file_.presentation.degree_cap = v.get_ui();
    } else if (word == "bimodule") {
      field_locked_ = true;
      have_bimodule_ = true;
      bimodule(c);
    } else {
      c.fail_at("unknown directive '" + word + "'", col);
    }
  }

  template <class F>
  void wrap(const Cursor& c, std::size_t column, F&& f) {
    try {
      f();
    } catch (const PresentationError& e) {
      c.fail_at(e.what(), column);
    }
  }

  void field_directive(Cursor& c, std::size_t col) {
    if (field_seen_) c.fail_at("field declared twice", col);
    if (field_locked_) c.fail_at("field must precede relations and bimodule data", col);
    field_seen_ = true;
    std::string kind = c.ident("Q or GF");
    if (kind == "Q") {
      file_.presentation.field = Field::rationals();
    } else if (kind == "GF") {
      std::size_t at = (c.skip_ws(), c.column());
      mpz_class p = c.integer("a prime modulus");
      if (!p.fits_ulong_p() || p.get_ui() >= (1UL << 31) || !is_prime(p.get_ui())) {
        c.fail_at("modulus " + p.get_str() + " is not a prime below 2^31", at);
      }
      file_.presentation.field = Field::prime(static_cast<std::uint32_t>(p.get_ui()));
    } else {
      c.fail("expected Q or GF");
    }
    c.done();
  }

  std::size_t vertex(Cursor& c) {
    std::size_t at = (c.skip_ws(), c.column());
    std::string name = c.ident("a vertex name");
    auto v = quiver().find_vertex(name);
    if (!v) c.fail_at("undefined vertex '" + name + "'", at);
    return *v;
  }

  std::size_t arrow(Cursor& c) {
    std::size_t at = (c.skip_ws(), c.column());
    std::string name = c.ident("an arrow name");
    auto a = quiver().find_arrow(name);
    if (!a) c.fail_at("undefined arrow '" + name + "'", at);
    return *a;
  }

  /// coef := integer | integer '/' positive-integer (the latter over Q only).
  Scalar coefficient(Cursor& c) {
    std::size_t at = (c.skip_ws(), c.column());
    mpz_class num = c.integer("a coefficient");
    mpz_class den = 1;
    if (c.accept('/')) {
      if (!field().is_rational()) c.fail_at("fractions are only allowed over Q", at);
      den = c.integer("a denominator");
      if (den == 0) c.fail_at("zero denominator", at);
    }
    return field().from_fraction(num, den);
  }

  Scalar signed_coefficient(Cursor& c) {
    bool negative = c.accept('-');
    Scalar v = coefficient(c);
    return negative ? -v : v;
  }

  /// mono := ident ('*' ident)*, written with the last traversed arrow first.
  Path monomial(Cursor& c) {
    std::vector<std::pair<std::size_t, std::size_t>> written;
    do {
      std::size_t at = (c.skip_ws(), c.column());
      written.push_back({arrow(c), at});
    } while (c.accept('*'));
    Path p = quiver().arrow_path(written.back().first);
    for (std::size_t i = written.size() - 1; i-- > 0;) {
      const Arrow& next = quiver().arrow(written[i].first);
      if (next.source != p.target) {
        c.fail_at("arrow '" + next.name + "' does not compose with the path to its right",
                  written[i].second);
      }
      p.arrows.push_back(written[i].first);
      p.target = next.target;
    }
    return p;
  }

  void relation(Cursor& c) {
    std::size_t start = (c.skip_ws(), c.column());
    PathVector v;
    std::optional<std::pair<std::size_t, std::size_t>> ends;
    bool first = true;
    while (true) {
      Scalar sign = field().one();
      if (first) {
        if (c.accept('-')) sign = -sign;
      } else if (c.accept('-')) {
        sign = -sign;
      } else if (!c.accept('+')) {
        c.fail("expected '+' or '-'");
      }
      std::size_t at = (c.skip_ws(), c.column());
      Scalar coef = field().one();
      if (c.digit_next()) {
        coef = coefficient(c);
        c.expect('*');
      }
      Path p = monomial(c);
      if (p.length() < 2) c.fail_at("relation term of length < 2", at);
      if (ends && (ends->first != p.source || ends->second != p.target)) {
        c.fail_at("relation mixes endpoints", at);
      }
      ends = std::make_pair(p.source, p.target);
      v.add(p, sign * coef);
      first = false;
      if (c.at_end()) break;
    }
    if (v.is_zero()) c.fail_at("relation is zero", start);
    file_.presentation.relations.push_back(std::move(v));
  }

  DenseMatrix matrix(Cursor& c) {
    std::size_t at = (c.skip_ws(), c.column());
    std::string text = c.rest();
    if (text.empty()) c.fail_at("expected matrix rows", at);
    std::vector<std::vector<Scalar>> rows;
    std::string row_text;
    std::istringstream rows_in(text);
    while (std::getline(rows_in, row_text, ';')) {
      std::vector<Scalar> row;
      std::string entry;
      std::istringstream entries(row_text);
      while (std::getline(entries, entry, ',')) {
        Cursor ec(entry, c.line());
        Scalar s = signed_coefficient(ec);
        if (!ec.at_end()) c.fail_at("bad matrix entry '" + entry + "'", at);
        row.push_back(s);
      }
      if (!rows.empty() && row.size() != rows.front().size()) {
        c.fail_at("matrix rows have different lengths", at);
      }
      rows.push_back(std::move(row));
    }
    DenseMatrix m(field(), rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  void bimodule(Cursor& c) {
    std::size_t col = (c.skip_ws(), c.column());
    std::string kind = c.ident("dim or act");
    if (kind == "dim") {
      std::size_t y = vertex(c), x = vertex(c);
      mpz_class d = c.integer("a dimension");
      if (!d.fits_ulong_p()) c.fail("dimension too large");
      c.done();
      dims_.push_back({y, x, d.get_ui(), c.line(), col});
    } else if (kind == "act") {
      std::size_t side_at = (c.skip_ws(), c.column());
      std::string side = c.ident("left or right");
      if (side != "left" && side != "right") c.fail_at("expected left or right", side_at);
      std::size_t a = arrow(c);
      std::size_t y_at = (c.skip_ws(), c.column());
      std::size_t y = vertex(c);
      std::size_t x_at = (c.skip_ws(), c.column());
      std::size_t x = vertex(c);
      const Arrow& arr = quiver().arrow(a);
      bool left = side == "left";
      if (left && y != arr.source) c.fail_at("left action of '" + arr.name + "' starts at its source", y_at);
      if (!left && x != arr.target) c.fail_at("right action of '" + arr.name + "' starts at its target", x_at);
      acts_.push_back({left, a, y, x, matrix(c), c.line(), col});
    } else {
      c.fail_at("expected dim or act", col);
    }
  }

  PresentationFile finish() {
    if (!have_bimodule_) return std::move(file_);
    Bimodule b(quiver(), field());
    for (const auto& d : dims_) b.set_dim(d.y, d.x, d.d);
    for (const auto& act : acts_) {
      try {
        if (act.left) {
          b.set_left(act.arrow, act.x, act.matrix);
        } else {
          b.set_right(act.arrow, act.y, act.matrix);
        }
      } catch (const PresentationError& e) {
        throw PresentationError(e.what(), act.line, act.column);
      }
    }
    file_.bimodule = std::move(b);
    return std::move(file_);
  }
};

std::string matrix_text(const DenseMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ';';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ',';
      s += m(i, j).to_string();
    }
  }
  return s;
}

}  // namespace

PresentationFile parse_presentation(const std::string& text) {
  Parser p;
  PresentationFile f = p.run(text);
  validate_presentation(f.presentation);
  return f;
}

PresentationFile load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PresentationError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

std::string emit_presentation(const PresentationFile& file) {
  const AlgebraPresentation& p = file.presentation;
  const Quiver& q = p.quiver;
  std::ostringstream out;
  out << "field " << (p.field.is_rational() ? "Q" : "GF " + std::to_string(p.field.characteristic()))
      << '\n';
  for (const auto& v : q.vertices()) out << "vertex " << v << '\n';
  for (const auto& a : q.arrows()) {
    out << "arrow " << a.name << ' ' << q.vertex_name(a.source) << ' ' << q.vertex_name(a.target)
        << '\n';
  }
  for (const auto& r : p.relations) out << "relation " << format_path_vector(q, r) << '\n';
  out << "cap " << p.degree_cap << '\n';
  if (file.bimodule) {
    const Bimodule& b = *file.bimodule;
    bool any = false;
    for (std::size_t y = 0; y < q.num_vertices(); ++y) {
      for (std::size_t x = 0; x < q.num_vertices(); ++x) {
        if (b.dim(y, x) == 0) continue;
        any = true;
        out << "bimodule dim " << q.vertex_name(y) << ' ' << q.vertex_name(x) << ' ' << b.dim(y, x)
            << '\n';
      }
    }
    if (!any && q.num_vertices() > 0) {
      out << "bimodule dim " << q.vertex_name(0) << ' ' << q.vertex_name(0) << " 0\n";
    }
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
      const Arrow& arr = q.arrow(a);
      for (std::size_t x = 0; x < q.num_vertices(); ++x) {
        const DenseMatrix& m = b.left(a, x);
        if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) continue;
        out << "bimodule act left " << arr.name << ' ' << q.vertex_name(arr.source) << ' '
            << q.vertex_name(x) << ' ' << matrix_text(m) << '\n';
      }
      for (std::size_t y = 0; y < q.num_vertices(); ++y) {
        const DenseMatrix& m = b.right(a, y);
        if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) continue;
        out << "bimodule act right " << arr.name << ' ' << q.vertex_name(y) << ' '
            << q.vertex_name(arr.target) << ' ' << matrix_text(m) << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace tauhh
