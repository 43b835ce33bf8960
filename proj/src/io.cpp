#include "coquiver/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "coquiver/fixtures.hpp"

namespace coquiver {

namespace {

bool is_label_char(char ch) {
  return !std::isspace(static_cast<unsigned char>(ch)) && ch != ',' && ch != '(' && ch != ')' && ch != '=' &&
         ch != '*' && ch != '#';
}

struct Line {
  std::string text;
  int number = 0;
};

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int n = 0;
  while (std::getline(in, raw)) {
    ++n;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    bool blank = true;
    for (char ch : raw)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (!blank) out.push_back({raw, n});
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(const Line& l) : s_(l.text), line_(l.number) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_space();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  int column() const { return static_cast<int>(pos_) + 1; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column()); }

  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }
  std::string word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && is_label_char(s_[pos_])) ++pos_;
    if (start == pos_) fail("expected a name");
    return s_.substr(start, pos_ - start);
  }
  std::string number_token() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
    if (start == pos_) fail("expected a coefficient");
    return s_.substr(start, pos_ - start);
  }
  // the rest of the line, trimmed; names may contain brackets and commas
  std::string rest() {
    skip_space();
    std::size_t end = s_.size();
    while (end > pos_ && std::isspace(static_cast<unsigned char>(s_[end - 1]))) --end;
    if (end == pos_) fail("expected a name");
    std::string out = s_.substr(pos_, end - pos_);
    pos_ = s_.size();
    return out;
  }
  void seek_back(std::size_t n) { pos_ -= n; }
  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t p) { pos_ = p; }
  const std::string& text() const { return s_; }
  int line() const { return line_; }

 private:
  const std::string& s_;
  int line_;
  std::size_t pos_ = 0;
};

Scalar parse_scalar_at(Cursor& cur, bool negative, Field field) {
  int col = cur.column();
  std::string tok = cur.number_token();
  try {
    Scalar v = Scalar::parse((negative ? "-" : "") + tok, field);
    return v;
  } catch (const Error& e) {
    throw ParseError(e.what(), cur.line(), col);
  }
}

std::string format_scalar(const Scalar& s) { return s.to_string(); }

}  // namespace

Coalgebra parse_coalgebra(const std::string& text, std::optional<Field> field_override) {
  std::string name = "coalgebra";
  Field field;
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  std::vector<std::optional<std::vector<Term>>> delta;
  std::vector<std::optional<Scalar>> counit;
  bool seen_basis = false, seen_name = false, seen_field = false;

  auto lookup = [&](Cursor& cur) {
    cur.skip_space();
    int col = cur.column();
    std::string l = cur.word();
    auto it = index.find(l);
    if (it == index.end()) throw ParseError("unknown basis element '" + l + "'", cur.line(), col);
    return it->second;
  };

  for (const Line& line : content_lines(text)) {
    Cursor cur(line);
    cur.skip_space();
    int kw_col = cur.column();
    std::string kw = cur.word();
    if (kw == "coalgebra") {
      if (seen_name) throw ParseError("repeated coalgebra header", line.number, kw_col);
      name = cur.rest();
      seen_name = true;
    } else if (kw == "field") {
      if (seen_field || seen_basis) throw ParseError("field must come once, before the basis", line.number, kw_col);
      int col = cur.column();
      std::string f = cur.word();
      try {
        field = Field::parse(f);
      } catch (const Error& e) {
        throw ParseError(e.what(), line.number, col + 1);
      }
      if (field_override) field = *field_override;
      seen_field = true;
    } else if (kw == "basis") {
      if (!delta.empty() && std::any_of(delta.begin(), delta.end(), [](const auto& d) { return d.has_value(); }))
        throw ParseError("basis must precede delta lines", line.number, kw_col);
      while (!cur.at_end()) {
        cur.skip_space();
        int col = cur.column();
        std::string l = cur.word();
        if (index.count(l)) throw ParseError("duplicate basis element '" + l + "'", line.number, col);
        index[l] = labels.size();
        labels.push_back(l);
        delta.emplace_back();
        counit.emplace_back();
      }
      seen_basis = true;
    } else if (kw == "delta") {
      if (!seen_basis) throw ParseError("delta before basis", line.number, kw_col);
      cur.skip_space();
      int col = cur.column();
      std::size_t k = lookup(cur);
      if (delta[k]) throw ParseError("second delta line for '" + labels[k] + "'", line.number, col);
      cur.expect('=');
      std::vector<Term> terms;
      if (cur.peek() == '0') {
        std::size_t save = cur.pos();
        cur.set_pos(cur.pos() + 1);
        if (cur.at_end()) {
          delta[k] = terms;
          continue;
        }
        cur.set_pos(save);
      }
      bool first = true;
      while (true) {
        bool negative = false;
        char ch = cur.peek();
        if (ch == '+' || ch == '-') {
          negative = ch == '-';
          cur.set_pos(cur.pos() + 1);
        } else if (!first) {
          cur.fail("expected '+' or '-'");
        }
        first = false;
        Scalar q = Scalar(negative ? -1 : 1).in(field);
        if (cur.peek() != '(') {
          q = parse_scalar_at(cur, negative, field);
          cur.expect('*');
        }
        cur.expect('(');
        std::size_t i = lookup(cur);
        cur.expect(',');
        std::size_t j = lookup(cur);
        cur.expect(')');
        terms.push_back({i, j, q});
        if (cur.at_end()) break;
      }
      delta[k] = terms;
    } else if (kw == "counit") {
      if (!seen_basis) throw ParseError("counit before basis", line.number, kw_col);
      cur.skip_space();
      int col = cur.column();
      std::size_t k = lookup(cur);
      if (counit[k]) throw ParseError("second counit line for '" + labels[k] + "'", line.number, col);
      cur.expect('=');
      bool negative = false;
      if (cur.peek() == '-' || cur.peek() == '+') {
        negative = cur.peek() == '-';
        cur.set_pos(cur.pos() + 1);
      }
      counit[k] = parse_scalar_at(cur, negative, field);
      if (!cur.at_end()) cur.fail("trailing text");
    } else {
      throw ParseError("unknown keyword '" + kw + "'", line.number, kw_col);
    }
    if (kw == "coalgebra" && !cur.at_end()) cur.fail("trailing text");
    if (kw == "field" && !cur.at_end()) cur.fail("trailing text");
  }
  if (!seen_basis) throw ParseError("missing basis line", 0);
  if (field_override) field = *field_override;
  std::vector<std::vector<Term>> d;
  Vector eps;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    std::vector<Term> ts = delta[k].value_or(std::vector<Term>{});
    for (auto& t : ts) t.q = t.q.in(field);
    d.push_back(std::move(ts));
    eps.push_back(counit[k].value_or(Scalar(0)).in(field));
  }
  Coalgebra c(name, labels, std::move(d), std::move(eps), field);
  AxiomReport report = c.check_axioms();
  if (!report.ok()) throw AxiomError(report.to_string(c.labels()));
  return c;
}

std::string emit_coalgebra(const Coalgebra& c) {
  std::ostringstream out;
  out << "coalgebra " << (c.name().empty() ? "coalgebra" : c.name()) << "\n";
  out << "field " << c.field().to_string() << "\n";
  out << "basis";
  for (const auto& l : c.labels()) out << " " << l;
  out << "\n";
  for (std::size_t k = 0; k < c.dim(); ++k) {
    out << "delta " << c.labels()[k] << " =";
    const auto& ts = c.delta(k);
    if (ts.empty()) out << " 0";
    for (std::size_t t = 0; t < ts.size(); ++t) {
      std::string q = format_scalar(ts[t].q);
      bool negative = !q.empty() && q[0] == '-';
      if (negative) q = q.substr(1);
      if (t == 0)
        out << " " << (negative ? "-" : "");
      else
        out << (negative ? " - " : " + ");
      out << q << "*(" << c.labels()[ts[t].i] << "," << c.labels()[ts[t].j] << ")";
    }
    out << "\n";
  }
  for (std::size_t k = 0; k < c.dim(); ++k)
    if (!c.counit()[k].is_zero()) out << "counit " << c.labels()[k] << " = " << format_scalar(c.counit()[k]) << "\n";
  return out.str();
}

Quiver parse_quiver(const std::string& text) {
  std::string name = "quiver";
  std::vector<std::string> vertices;
  std::map<std::string, std::size_t> vindex;
  std::vector<Arrow> arrows;
  std::set<std::string> arrow_names;
  for (const Line& line : content_lines(text)) {
    Cursor cur(line);
    cur.skip_space();
    int col = cur.column();
    std::string first = cur.word();
    if (first == "quiver" && cur.peek() != ':') {
      name = cur.rest();
    } else if ((first == "vertex" || first == "vertices") && cur.peek() != ':') {
      while (!cur.at_end()) {
        cur.skip_space();
        int vc = cur.column();
        std::string v = cur.word();
        if (vindex.count(v)) throw ParseError("duplicate vertex '" + v + "'", line.number, vc);
        vindex[v] = vertices.size();
        vertices.push_back(v);
      }
    } else {
      if (arrow_names.count(first)) throw ParseError("duplicate arrow '" + first + "'", line.number, col);
      cur.expect(':');
      auto endpoint = [&]() {
        cur.skip_space();
        int vc = cur.column();
        std::string v = cur.word();
        // "v->w" without spaces: split at the arrow
        auto dash = v.find("->");
        if (dash != std::string::npos) {
          cur.seek_back(v.size() - dash);
          v = v.substr(0, dash);
        }
        auto it = vindex.find(v);
        if (it == vindex.end()) throw ParseError("undeclared vertex '" + v + "'", line.number, vc);
        return it->second;
      };
      std::size_t s = endpoint();
      cur.skip_space();
      if (cur.text().compare(cur.pos(), 2, "->") != 0) cur.fail("expected '->'");
      cur.set_pos(cur.pos() + 2);
      std::size_t t = endpoint();
      if (!cur.at_end()) cur.fail("trailing text");
      arrow_names.insert(first);
      arrows.push_back({first, s, t});
    }
  }
  return Quiver(name, vertices, arrows);
}

std::string emit_quiver(const Quiver& q) {
  std::ostringstream out;
  out << "quiver " << (q.name().empty() ? "quiver" : q.name()) << "\n";
  out << "vertex";
  for (const auto& v : q.vertices()) out << " " << v;
  out << "\n";
  for (const auto& a : q.arrows())
    out << a.name << " : " << q.vertices()[a.source] << " -> " << q.vertices()[a.target] << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Coalgebra load_coalgebra(const std::string& spec, std::optional<Field> field) {
  std::ifstream probe(spec);
  if (probe.good()) return parse_coalgebra(read_file(spec), field);
  Coalgebra c = fixture(spec);
  if (!field || field->is_rational()) return c;
  return parse_coalgebra(emit_coalgebra(c), field);
}

Quiver load_quiver(const std::string& spec) {
  std::ifstream probe(spec);
  if (probe.good()) return parse_quiver(read_file(spec));
  return quiver_fixture(spec);
}

}  // namespace coquiver
