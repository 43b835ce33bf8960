#include "coquiver/fixtures.hpp"

#include <charconv>
#include <functional>

namespace coquiver {

namespace {

std::size_t parse_count(const std::string& s, const std::string& whole) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw PreconditionError("bad size in fixture name " + whole);
  if (v == 0) throw PreconditionError("fixture sizes start at 1: " + whole);
  return v;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

// "f(a,b)" -> ("f", {"a", "b"}) splitting at top-level commas
bool split_call(const std::string& s, std::string* head, std::vector<std::string>* args) {
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') return false;
  *head = s.substr(0, open);
  args->clear();
  int depth = 0;
  std::string cur;
  for (std::size_t i = open + 1; i + 1 < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      args->push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  args->push_back(cur);
  return depth == 0;
}

std::vector<std::string> vertex_names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back("e" + std::to_string(i));
  return v;
}

}  // namespace

Coalgebra grouplike(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::vector<Term>> delta(n);
  Vector counit(n, Scalar(1));
  for (std::size_t k = 0; k < n; ++k) {
    labels.push_back(k == 0 ? "1" : k == 1 ? "g" : "g" + std::to_string(k));
    delta[k].push_back({k, k, Scalar(1)});
  }
  return Coalgebra("grouplike_" + std::to_string(n), labels, delta, counit);
}

Coalgebra divided(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::vector<Term>> delta(n);
  Vector counit(n);
  if (n > 0) counit[0] = 1;
  for (std::size_t m = 0; m < n; ++m) {
    labels.push_back("c" + std::to_string(m));
    for (std::size_t i = 0; i <= m; ++i) delta[m].push_back({i, m - i, Scalar(1)});
  }
  return Coalgebra("divided_" + std::to_string(n), labels, delta, counit);
}

Coalgebra sweedler4() {
  std::vector<std::vector<Term>> delta = {
      {{0, 0, Scalar(1)}},
      {{1, 1, Scalar(1)}},
      {{2, 0, Scalar(1)}, {1, 2, Scalar(1)}},
      {{3, 1, Scalar(1)}, {0, 3, Scalar(1)}},
  };
  return Coalgebra("sweedler4", {"1", "g", "x", "gx"}, delta, Vector{Scalar(1), Scalar(1), Scalar(0), Scalar(0)});
}

Coalgebra matrix_coalgebra(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::vector<Term>> delta(n * n);
  Vector counit(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      labels.push_back("e" + std::to_string(p + 1) + std::to_string(q + 1));
      for (std::size_t k = 0; k < n; ++k) delta[p * n + q].push_back({p * n + k, k * n + q, Scalar(1)});
      if (p == q) counit[p * n + q] = 1;
    }
  return Coalgebra("matrix_" + std::to_string(n), labels, delta, counit);
}

Coalgebra tri_block() {
  const std::vector<std::pair<int, int>> allowed = {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}, {3, 3}};
  auto index = [&](int p, int q) -> long {
    for (std::size_t i = 0; i < allowed.size(); ++i)
      if (allowed[i] == std::make_pair(p, q)) return static_cast<long>(i);
    return -1;
  };
  std::vector<std::string> labels;
  std::vector<std::vector<Term>> delta(allowed.size());
  Vector counit(allowed.size());
  for (std::size_t t = 0; t < allowed.size(); ++t) {
    auto [p, q] = allowed[t];
    labels.push_back("e" + std::to_string(p) + std::to_string(q));
    if (p == q) counit[t] = 1;
    for (int k = 1; k <= 3; ++k) {
      long a = index(p, k), b = index(k, q);
      if (a >= 0 && b >= 0) delta[t].push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b), Scalar(1)});
    }
  }
  return Coalgebra("tri_block", labels, delta, counit);
}

Coalgebra group_dual(const std::vector<std::size_t>& orders) {
  std::size_t n = 1;
  for (auto o : orders) {
    if (o == 0) throw PreconditionError("group_dual: zero order");
    n *= o;
  }
  // mixed-radix digits, first factor most significant
  auto digits = [&](std::size_t g) {
    std::vector<std::size_t> d(orders.size());
    for (std::size_t f = orders.size(); f-- > 0;) {
      d[f] = g % orders[f];
      g /= orders[f];
    }
    return d;
  };
  auto sub = [&](std::size_t g, std::size_t h) {
    auto a = digits(g), b = digits(h);
    std::size_t r = 0;
    for (std::size_t f = 0; f < orders.size(); ++f) r = r * orders[f] + (a[f] + orders[f] - b[f]) % orders[f];
    return r;
  };
  std::vector<std::string> labels;
  std::vector<std::vector<Term>> delta(n);
  Vector counit(n);
  counit[0] = 1;
  std::string name = "groupdual_";
  for (std::size_t f = 0; f < orders.size(); ++f) name += (f ? "x" : "") + std::to_string(orders[f]);
  for (std::size_t g = 0; g < n; ++g) {
    std::string l = "d";
    auto d = digits(g);
    for (std::size_t f = 0; f < d.size(); ++f) l += (f ? "_" : "") + std::to_string(d[f]);
    labels.push_back(l);
    for (std::size_t h = 0; h < n; ++h) delta[g].push_back({h, sub(g, h), Scalar(1)});
  }
  return Coalgebra(name, labels, delta, counit);
}

Coalgebra rad_square_zero_dual(const Quiver& q) {
  const std::size_t nv = q.vertex_count(), na = q.arrow_count(), n = nv + na;
  std::vector<SparseVector> table(n * n);
  for (std::size_t v = 0; v < nv; ++v) table[v * n + v].push_back({v, Scalar(1)});
  for (std::size_t a = 0; a < na; ++a) {
    const Arrow& arr = q.arrows()[a];
    table[arr.target * n + (nv + a)].push_back({nv + a, Scalar(1)});
    table[(nv + a) * n + arr.source].push_back({nv + a, Scalar(1)});
  }
  Vector unit(n);
  for (std::size_t v = 0; v < nv; ++v) unit[v] = 1;
  std::vector<std::string> labels = q.vertices();
  for (const auto& a : q.arrows()) labels.push_back(a.name);
  return coalgebra_from_algebra(Algebra(n, table, unit), "rad_square_zero_dual(" + q.name() + ")", labels);
}

Quiver quiver_fixture(const std::string& name) {
  std::string tail;
  auto numbered = [&](const std::string& prefix) {
    if (!starts_with(name, prefix)) return false;
    tail = name.substr(prefix.size());
    return true;
  };
  if (name == "loop") return Quiver(name, {"e1"}, {{"a", 0, 0}});
  if (name == "kronecker") return Quiver(name, {"e1", "e2"}, {{"a", 0, 1}, {"b", 0, 1}});
  if (numbered("a_")) {
    std::size_t n = parse_count(tail, name);
    if (n == 0) throw PreconditionError("a_N needs N >= 1");
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i + 1 < n; ++i) arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
    return Quiver(name, vertex_names(n), arrows);
  }
  if (numbered("cycle_")) {
    std::size_t n = parse_count(tail, name);
    if (n == 0) throw PreconditionError("cycle_N needs N >= 1");
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < n; ++i) arrows.push_back({"a" + std::to_string(i + 1), i, (i + 1) % n});
    return Quiver(name, vertex_names(n), arrows);
  }
  if (numbered("loops_")) {
    std::size_t n = parse_count(tail, name);
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < n; ++i) arrows.push_back({"a" + std::to_string(i + 1), 0, 0});
    return Quiver(name, {"e1"}, arrows);
  }
  if (numbered("empty_")) return Quiver(name, vertex_names(parse_count(tail, name)), {});
  throw PreconditionError("unknown quiver fixture " + name);
}

bool is_quiver_fixture(const std::string& name) {
  try {
    quiver_fixture(name);
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}

Coalgebra fixture(const std::string& name) {
  std::string head;
  std::vector<std::string> args;
  if (split_call(name, &head, &args)) {
    if (head == "pathcoalg" && args.size() == 2) {
      PathCoalgebra p = path_coalgebra(quiver_fixture(args[0]), parse_count(args[1], name));
      p.coalgebra.set_name(name);
      return p.coalgebra;
    }
    if (head == "rad_square_zero_dual" && args.size() == 1) return rad_square_zero_dual(quiver_fixture(args[0]));
    if ((head == "sum" || head == "tensor") && args.size() == 2) {
      Coalgebra a = fixture(args[0]), b = fixture(args[1]);
      Coalgebra c = head == "sum" ? direct_sum(a, b) : tensor_coalgebra(a, b);
      c.set_name(name);
      return c;
    }
    throw PreconditionError("unknown fixture " + name);
  }
  auto numbered = [&](const std::string& prefix, std::size_t* n) {
    if (!starts_with(name, prefix)) return false;
    *n = parse_count(name.substr(prefix.size()), name);
    return true;
  };
  std::size_t n = 0;
  if (name == "sweedler4") return sweedler4();
  if (name == "tri_block") return tri_block();
  if (starts_with(name, "groupdual_")) {
    std::vector<std::size_t> orders;
    std::string rest = name.substr(10), cur;
    for (char ch : rest + "x") {
      if (ch == 'x') {
        orders.push_back(parse_count(cur, name));
        cur.clear();
      } else {
        cur += ch;
      }
    }
    return group_dual(orders);
  }
  if (numbered("grouplike_", &n)) return grouplike(n);
  if (numbered("divided_", &n)) return divided(n);
  if (numbered("matrix_", &n)) return matrix_coalgebra(n);
  throw PreconditionError("unknown fixture " + name);
}

std::vector<std::string> builtin_fixture_names() {
  return {"grouplike_2",
          "grouplike_3",
          "divided_2",
          "divided_3",
          "divided_4",
          "sweedler4",
          "matrix_2",
          "matrix_3",
          "tri_block",
          "groupdual_2",
          "groupdual_3",
          "groupdual_2x2",
          "pathcoalg(kronecker,2)",
          "pathcoalg(a_3,2)",
          "pathcoalg(cycle_2,3)",
          "rad_square_zero_dual(cycle_3)",
          "rad_square_zero_dual(loops_2)",
          "sum(sweedler4,matrix_2)",
          "tensor(sweedler4,divided_2)",
          "tensor(groupdual_3,divided_2)"};
}

}  // namespace coquiver
