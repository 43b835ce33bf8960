#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "coquiver/embedding.hpp"
#include "coquiver/fixtures.hpp"
#include "coquiver/frobenius.hpp"
#include "coquiver/io.hpp"
#include "coquiver/oracle.hpp"

using namespace coquiver;

namespace {

constexpr int kOk = 0, kInput = 1, kCrossCheck = 2;

// a cross-check disagreement detected by the tool itself
struct CrossCheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string format = "text";
  std::string field = "q";
};

std::string join_counts(const CountMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ";";
    for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? "," : "") + std::to_string(m[i][j]);
  }
  return s;
}

template <class T>
std::string join(const std::vector<T>& xs, const std::string& sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

std::string format_vector(const std::vector<std::string>& labels, const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string q = v[i].to_string();
    bool negative = q[0] == '-';
    if (negative) q = q.substr(1);
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (q != "1") out += q + "*";
    out += labels[i];
  }
  return out.empty() ? "0" : out;
}

std::string format_subspace(const std::vector<std::string>& labels, const Subspace& s) {
  std::vector<std::string> parts;
  for (std::size_t r = 0; r < s.dim(); ++r) parts.push_back(format_vector(labels, s.vector(r)));
  return "span{" + join(parts, ", ") + "}";
}

std::vector<std::size_t> dims(const std::vector<Subspace>& steps) {
  std::vector<std::size_t> out;
  for (const auto& s : steps) out.push_back(s.dim());
  return out;
}

std::string quiver_text(const Quiver& q) {
  std::ostringstream os;
  os << "  vertices: " << join(q.vertices(), " ") << "\n";
  auto c = q.counts();
  bool any = false;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[i][j]) {
        os << "  " << q.vertices()[i] << " -> " << q.vertices()[j] << "  x" << c[i][j] << "\n";
        any = true;
      }
  if (!any) os << "  (no arrows)\n";
  return os.str();
}

Coalgebra load(const Options& o) { return load_coalgebra(o.input, Field::parse(o.field)); }

void require_format(const Options& o, bool dot_allowed) {
  if (o.format == "dot" && !dot_allowed) throw PreconditionError("--format dot applies to the quiver command only");
}

int cmd_check(const Options& o) {
  require_format(o, false);
  Coalgebra c = load(o);
  AxiomReport r = c.check_axioms();
  if (o.format == "machine") {
    std::cout << "name=" << c.name() << "\nfield=" << c.field().to_string() << "\ndim=" << c.dim()
              << "\naxioms=" << (r.ok() ? "ok" : r.to_string(c.labels())) << "\n";
  } else {
    std::cout << c.name() << " over " << c.field().to_string() << ", dimension " << c.dim() << "\n";
    std::cout << "axioms: " << r.to_string(c.labels()) << "\n";
  }
  return r.ok() ? kOk : kInput;
}

int cmd_filtration(const Options& o) {
  require_format(o, false);
  Structure s = analyze(load(o));
  const auto& labels = s.coalgebra.labels();
  bool graded = filtration_is_coalgebra_filtration(s.coalgebra, s.filtration);
  if (o.format == "machine") {
    std::cout << "filtration=" << join(dims(s.filtration)) << "\n";
    std::cout << "blocks=" << s.block_count() << "\n";
    for (const auto& b : s.blocks)
      std::cout << "block." << b.index + 1 << "=dim:" << b.subspace.dim() << ",n:" << b.n << ",d:" << b.d
                << ",certified:" << (b.certified ? "yes" : "no") << "\n";
    std::cout << "coalgebra_filtration=" << (graded ? "yes" : "no") << "\n";
  } else {
    std::cout << "coradical filtration dims: " << join(dims(s.filtration), " ") << "\n";
    std::cout << "C0 = " << format_subspace(labels, s.c0) << "\n";
    for (const auto& b : s.blocks)
      std::cout << "D" << b.index + 1 << ": dim " << b.subspace.dim() << ", n = " << b.n << ", d = " << b.d
                << (b.certified ? "" : " (primitivity sampled)") << "; " << format_subspace(labels, b.subspace) << "\n";
    std::cout << "Delta(C_n) in sum C_i (x) C_(n-i): " << (graded ? "yes" : "no") << "\n";
  }
  if (!graded) throw CrossCheckFailure("filtration is not a coalgebra filtration");
  return kOk;
}

int cmd_quiver(const Options& o, const std::string& method) {
  Structure s = analyze(load(o));
  std::vector<Quiver> qs;
  if (method == "gabriel" || method == "all") qs.push_back(gabriel_quiver(s));
  if (method == "ext" || method == "all") qs.push_back(ext_quiver(s));
  if (method == "link" || method == "all") qs.push_back(link_quiver(s));
  bool agree = true;
  for (const auto& q : qs) agree = agree && q.counts() == qs.front().counts();
  const std::string verdict = agree ? "AGREE" : "DISAGREE";
  if (o.format == "dot") {
    for (const auto& q : qs) std::cout << q.to_dot();
  } else if (o.format == "machine") {
    for (const auto& q : qs) {
      std::string kind = q.name().substr(q.name().rfind(':') + 1);
      std::cout << "quiver." << kind << ".vertices=" << join(q.vertices()) << "\n";
      std::cout << "quiver." << kind << ".counts=" << join_counts(q.counts()) << "\n";
    }
    if (qs.size() > 1) std::cout << "verdict=" << verdict << "\n";
  } else {
    std::cout << "orientation: arrows i -> j count dim Ext^1(S_i, S_j)\n";
    for (const auto& q : qs) std::cout << q.name() << "\n" << quiver_text(q);
    if (qs.size() > 1) std::cout << "verdict: " << verdict << "\n";
  }
  if (!agree) throw CrossCheckFailure("quiver constructions disagree");
  return kOk;
}

int cmd_taftwilson(const Options& o) {
  require_format(o, false);
  Structure s = analyze(load(o));
  TaftWilsonReport r = taft_wilson(s);
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  if (o.format == "machine") {
    std::cout << "c0_dim=" << r.c0_dim << "\nc1_dim=" << r.c1_dim << "\nwedge_sum_dim=" << r.wedge_sum_dim << "\n";
    for (const auto& p : r.pairs)
      std::cout << "pair." << p.i + 1 << "." << p.j + 1 << "=wedge:" << p.wedge_dim << ",overlap:" << p.overlap_dim
                << ",sum:" << p.sum_dim << ",quotient:" << p.quotient_dim << ",block:" << p.block_dim << "\n";
    std::cout << "sum_is_c1=" << yes(r.sum_is_c1) << "\nquotients_ok=" << yes(r.quotients_ok)
              << "\nblocks_ok=" << yes(r.blocks_ok) << "\n";
    if (r.pointed.applicable) std::cout << "pointed_decomposition=" << yes(r.pointed.decomposition_ok) << "\n";
    std::cout << "verdict=" << (r.ok() ? "OK" : "FAIL") << "\n";
  } else {
    std::cout << "dim C0 = " << r.c0_dim << ", dim C1 = " << r.c1_dim << ", dim sum of wedges = " << r.wedge_sum_dim
              << "\n";
    std::cout << " i  j  wedge  overlap  D^i+D^j  quotient  ^i(C1/C0)^j\n";
    for (const auto& p : r.pairs) {
      char line[128];
      std::snprintf(line, sizeof line, "%2zu %2zu %6zu %8zu %8zu %9zu %12zu", p.i + 1, p.j + 1, p.wedge_dim,
                    p.overlap_dim, p.sum_dim, p.quotient_dim, p.block_dim);
      std::cout << line << "\n";
    }
    std::cout << "(i) sum of wedges = C1: " << yes(r.sum_is_c1) << "\n";
    bool overlaps = std::all_of(r.pairs.begin(), r.pairs.end(), [](const auto& p) { return p.overlap_ok; });
    std::cout << "(ii) wedge cap C0 = D^i + D^j: " << yes(overlaps) << "\n";
    std::cout << "(iii) quotient dims sum to dim C1/C0: " << yes(r.quotients_ok) << "\n";
    std::cout << "(iv) blockwise match: " << yes(r.blocks_ok) << "\n";
    if (r.pointed.applicable) {
      std::cout << "pointed: C1 = KG + sum P'_{g,h}: " << yes(r.pointed.decomposition_ok) << "\n";
      const auto& labels = s.coalgebra.labels();
      for (std::size_t i = 0; i < r.pointed.grouplikes.size(); ++i)
        for (std::size_t j = 0; j < r.pointed.grouplikes.size(); ++j) {
          Subspace p = primitives(s.coalgebra, r.pointed.grouplikes[i], r.pointed.grouplikes[j]);
          std::cout << "  P(" << format_vector(labels, r.pointed.grouplikes[i]) << ", "
                    << format_vector(labels, r.pointed.grouplikes[j]) << ") = " << format_subspace(labels, p) << "\n";
        }
    }
    std::cout << "verdict: " << (r.ok() ? "OK" : "FAIL") << "\n";
  }
  if (!r.ok()) throw CrossCheckFailure("Taft-Wilson identities fail");
  return kOk;
}

int cmd_embed(const Options& o, std::optional<std::size_t> truncate) {
  require_format(o, false);
  Structure s = analyze(load(o));
  EmbeddingResult r = dual_gabriel_embedding(s, truncate);
  const std::size_t level = r.target.max_degree;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  if (o.format == "machine") {
    std::cout << "truncation=" << level << "\ncoideal_dim=" << r.splitting.coideal.dim()
              << "\ncoalgebra_map=" << yes(r.coalgebra_map) << "\nrank=" << r.rank << "\ndim=" << s.coalgebra.dim()
              << "\ninjective=" << yes(r.injective) << "\nrank_on_c1=" << r.rank_on_c1
              << "\ninjective_on_c1=" << yes(r.injective_on_c1) << "\nimage_top_degree=" << r.image_top_degree
              << "\nc1_image_is_degree_le_1=" << yes(r.c1_to_degree1) << "\n";
    std::vector<std::size_t> dd;
    for (std::size_t k = 0; k <= level; ++k) dd.push_back(r.target.degree_dim(k));
    std::cout << "target_degree_dims=" << join(dd) << "\n";
  } else {
    std::cout << "target: Cot_{C0}(C1/C0) truncated at degree " << level << ", degree dims";
    for (std::size_t k = 0; k <= level; ++k) std::cout << " " << r.target.degree_dim(k);
    std::cout << "\n";
    std::cout << "coideal I = " << format_subspace(s.coalgebra.labels(), r.splitting.coideal) << "\n";
    std::cout << "coalgebra map: " << yes(r.coalgebra_map) << "; rank " << r.rank << " of " << s.coalgebra.dim()
              << "; rank on C1 " << r.rank_on_c1 << " of " << s.c1().dim() << "\n";
    std::cout << "injective: " << yes(r.injective) << "; image degrees ≤ " << r.image_top_degree
              << "; F(C1) = " << (r.c1_to_degree1 ? "degrees ≤ 1" : "not degrees ≤ 1") << "\n";
    std::cout << "Heyneman-Radford cross-check: " << (r.injective == r.injective_on_c1 ? "agrees" : "DISAGREES")
              << "\n";
  }
  if (!r.ok() || r.injective != r.injective_on_c1) throw CrossCheckFailure("embedding checks fail");
  return kOk;
}

int cmd_qf(const Options& o) {
  require_format(o, false);
  Structure s = analyze(load(o));
  QFTheoremReport r = qf_quiver_theorem(s);
  auto nak = [](const std::vector<std::optional<std::size_t>>& v) {
    std::vector<std::string> parts;
    for (const auto& x : v) parts.push_back(x ? std::to_string(*x + 1) : "-");
    return join(parts);
  };
  if (o.format == "machine") {
    std::cout << "qf=" << (r.qf.is_qf ? "yes" : "no") << "\nleft_socles=" << join_counts(r.qf.left_socle)
              << "\nright_socles=" << join_counts(r.qf.right_socle) << "\nleft_nakayama=" << nak(r.qf.left_nakayama)
              << "\nright_nakayama=" << nak(r.qf.right_nakayama) << "\ncomponents=" << r.components.size() << "\n";
    for (std::size_t k = 0; k < r.components.size(); ++k) {
      const auto& c = r.components[k];
      std::vector<std::size_t> blocks;
      for (auto b : c.blocks) blocks.push_back(b + 1);
      std::cout << "component." << k + 1 << "=blocks:" << join(blocks, "+") << ",qf:" << (c.qf ? "yes" : "no")
                << ",simple:" << (c.simple ? "yes" : "no") << ",sources:" << c.sources.size()
                << ",sinks:" << c.sinks.size() << ",verdict:" << c.verdict << "\n";
    }
    std::cout << "indecomposable=" << (r.components.size() == 1 ? "yes" : "no") << "\n";
  } else {
    std::cout << "C* quasi-Frobenius: " << (r.qf.is_qf ? "yes" : "no") << "\n";
    std::cout << "soc(A f_i) multiplicities: " << join_counts(r.qf.left_socle) << "; Nakayama " << nak(r.qf.left_nakayama)
              << "\n";
    std::cout << "soc(f_i A) multiplicities: " << join_counts(r.qf.right_socle) << "; Nakayama "
              << nak(r.qf.right_nakayama) << "\n";
    std::cout << "components: " << r.components.size() << (r.components.size() == 1 ? " (indecomposable)" : "") << "\n";
    for (std::size_t k = 0; k < r.components.size(); ++k) {
      const auto& c = r.components[k];
      std::vector<std::size_t> blocks;
      for (auto b : c.blocks) blocks.push_back(b + 1);
      std::cout << "  component " << k + 1 << " (blocks " << join(blocks, ",") << "): qf " << (c.qf ? "yes" : "no")
                << ", simple " << (c.simple ? "yes" : "no") << ", sources " << c.sources.size() << ", sinks "
                << c.sinks.size() << " -> " << c.verdict << "\n";
    }
  }
  if (!r.ok()) throw CrossCheckFailure("a quasi-coFrobenius component has a source or a sink");
  return kOk;
}

Subspace parse_sub(const Structure& s, const std::string& spec) {
  const auto& labels = s.coalgebra.labels();
  std::vector<std::string> tokens;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) tokens.push_back(tok);
  std::vector<Vector> vs;
  bool all_labels = !tokens.empty();
  for (const auto& t : tokens) {
    auto it = std::find(labels.begin(), labels.end(), t);
    if (it == labels.end()) {
      all_labels = false;
      break;
    }
    vs.push_back(unit_vector(labels.size(), static_cast<std::size_t>(it - labels.begin())));
  }
  if (all_labels) return Subspace::span(vs, labels.size());
  if (spec == "C" || spec == "all") return Subspace::full(labels.size());
  auto number = [&](std::size_t from) -> std::size_t {
    std::size_t v = 0;
    for (std::size_t i = from; i < spec.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(spec[i]))) throw PreconditionError("bad subspace '" + spec + "'");
      v = v * 10 + static_cast<std::size_t>(spec[i] - '0');
    }
    if (from >= spec.size()) throw PreconditionError("bad subspace '" + spec + "'");
    return v;
  };
  if (spec[0] == 'C') {
    std::size_t k = number(1);
    return s.filtration[std::min(k, s.filtration.size() - 1)];
  }
  if (spec[0] == 'D') {
    std::size_t k = number(1);
    if (k == 0 || k > s.blocks.size()) throw PreconditionError("no block " + spec);
    return s.blocks[k - 1].subspace;
  }
  throw PreconditionError("bad subspace '" + spec + "' (labels a,b,..., C<n>, D<i> or C)");
}

int cmd_wedge(const Options& o, const std::string& a, const std::string& b) {
  require_format(o, false);
  Structure s = analyze(load(o));
  Subspace va = parse_sub(s, a), vb = parse_sub(s, b);
  Subspace w = wedge(s.coalgebra, va, vb);
  // V + W sits inside V ^ W only for subcoalgebras; other subspaces skip the check
  const bool subcoalgebras = is_subcoalgebra(s.coalgebra, va) && is_subcoalgebra(s.coalgebra, vb);
  if (subcoalgebras && !w.contains(sum(va, vb))) throw CrossCheckFailure("wedge does not contain V + W");
  if (o.format == "machine") {
    std::cout << "dim_a=" << va.dim() << "\ndim_b=" << vb.dim() << "\ndim_wedge=" << w.dim()
              << "\nwedge=" << format_subspace(s.coalgebra.labels(), w) << "\n";
  } else {
    std::cout << "V = " << format_subspace(s.coalgebra.labels(), va) << "\n";
    std::cout << "W = " << format_subspace(s.coalgebra.labels(), vb) << "\n";
    std::cout << "V ^ W = " << format_subspace(s.coalgebra.labels(), w) << " (dim " << w.dim() << ")\n";
  }
  return kOk;
}

int cmd_oracle(const Options& o, std::size_t count, std::uint64_t seed) {
  require_format(o, false);
  OracleGenerator gen(seed);
  std::size_t good = 0;
  for (std::size_t k = 0; k < count; ++k) {
    OracleInstance inst = gen.next();
    OracleOutcome r = run_oracle(inst);
    if (r.matches) ++good;
    if (o.format == "machine")
      std::cout << "instance." << k + 1 << "=" << inst.description() << ",dim:" << inst.coalgebra.dim()
                << ",counts:" << join_counts(r.gabriel) << ",verdict:" << (r.matches ? "AGREE" : "DISAGREE") << "\n";
    else
      std::cout << std::to_string(k + 1) << ". " << inst.description() << " dim " << inst.coalgebra.dim() << ": "
                << (r.matches ? "AGREE" : "DISAGREE") << "\n";
  }
  if (o.format == "machine")
    std::cout << "agree=" << good << "\ntotal=" << count << "\n";
  else
    std::cout << good << "/" << count << " AGREE\n";
  if (good != count) throw CrossCheckFailure("oracle disagreement");
  return kOk;
}

int cmd_export(const Options& o, std::optional<std::size_t> cot, bool path, std::size_t length) {
  require_format(o, false);
  if (path) {
    PathCoalgebra p = path_coalgebra(load_quiver(o.input), length);
    std::cout << emit_coalgebra(p.coalgebra);
    return kOk;
  }
  Coalgebra c = load(o);
  if (!cot) {
    std::cout << emit_coalgebra(c);
    return kOk;
  }
  Structure s = analyze(c);
  QuotientBicomodule qb = c1_over_c0(s);
  CotensorCoalgebra t = cotensor_coalgebra(s.c0_coalgebra, qb.m, *cot);
  t.assembled.set_name("cot_" + std::to_string(*cot));
  std::cout << emit_coalgebra(t.assembled);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coquiver: coradical filtrations and quivers of finite-dimensional coalgebras"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "text, dot (quiver only) or machine")
      ->check(CLI::IsMember({"text", "dot", "machine"}));
  app.add_option("--field", o.field, "q or fp:P");

  auto input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "fixture name or coalgebra file")->required();
  };
  auto* check = app.add_subcommand("check", "parse and check the coalgebra axioms");
  input(check);
  auto* filtration = app.add_subcommand("filtration", "coradical filtration and simple blocks");
  input(filtration);
  std::string method = "all";
  auto* quiver = app.add_subcommand("quiver", "Gabriel, Ext and link quivers");
  input(quiver);
  quiver->add_option("--method", method)->check(CLI::IsMember({"gabriel", "ext", "link", "all"}));
  auto* tw = app.add_subcommand("taftwilson", "wedge decomposition of C1");
  input(tw);
  std::optional<std::size_t> truncate;
  auto* embed = app.add_subcommand("embed", "embedding into the cotensor coalgebra over C0");
  input(embed);
  embed->add_option("--truncate", truncate, "truncation degree (default: filtration length)");
  auto* qf = app.add_subcommand("qf", "quasi-coFrobenius check and the source/sink property");
  input(qf);
  std::string wa, wb;
  auto* wedge_cmd = app.add_subcommand("wedge", "V ^ W = Delta^-1(V (x) C + C (x) W)");
  input(wedge_cmd);
  wedge_cmd->add_option("--a", wa, "labels a,b,..., C<n>, D<i> or C")->required();
  wedge_cmd->add_option("--b", wb, "labels a,b,..., C<n>, D<i> or C")->required();
  std::size_t random = 25;
  std::uint64_t seed = 7;
  auto* oracle = app.add_subcommand("oracle", "random instances with known quivers");
  oracle->add_option("--random", random);
  oracle->add_option("--seed", seed);
  std::optional<std::size_t> cot;
  bool path = false;
  std::size_t length = 1;
  auto* exp = app.add_subcommand("export", "normalized coalgebra file");
  input(exp);
  exp->add_option("--cotensor", cot, "emit Cot_{C0}(C1/C0) truncated at this degree instead");
  exp->add_flag("--path", path, "treat the input as a quiver and emit its path coalgebra");
  exp->add_option("--length", length, "path length bound for --path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*check) return cmd_check(o);
    if (*filtration) return cmd_filtration(o);
    if (*quiver) {
      if (o.format == "dot" || o.format == "machine" || o.format == "text") return cmd_quiver(o, method);
    }
    if (*tw) return cmd_taftwilson(o);
    if (*embed) return cmd_embed(o, truncate);
    if (*qf) return cmd_qf(o);
    if (*wedge_cmd) return cmd_wedge(o, wa, wb);
    if (*oracle) return cmd_oracle(o, random, seed);
    if (*exp) return cmd_export(o, cot, path, length);
  } catch (const CrossCheckFailure& e) {
    std::cout.flush();
    std::cerr << "cross-check failed: " << e.what() << "\n";
    return kCrossCheck;
  } catch (const InvariantError& e) {
    std::cout.flush();
    std::cerr << "cross-check failed: " << e.what() << "\n";
    return kCrossCheck;
  } catch (const std::exception& e) {
    std::cout.flush();
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
