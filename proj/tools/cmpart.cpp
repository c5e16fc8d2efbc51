// cmpart: command-line front end for the cmpart library.
//
// Exit codes: 0 positive verdict or pass, 1 negative verdict, 2 usage or
// input error, 3 search budget exhausted (inconclusive).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cmpart/cmpart.hpp"
#include "claims.hpp"

namespace {

using namespace cmpart;

constexpr int kPositive = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kInconclusive = 3;

// `@Name` selects a built-in construction, anything else is a file path.
ComplexFile load(const std::string& input) {
  if (!input.empty() && input[0] == '@') return build_named(input.substr(1));
  if (input == "-") return read_complex(std::cin);
  return read_complex_file(input);
}

SimplicialComplex load_absolute(const std::string& input) {
  auto f = load(input);
  if (f.removed) throw InputError(input + ": expected a simplicial complex, got a relative one");
  return f.total;
}

Face parse_face_arg(const std::string& text) {
  std::string t = text;
  for (auto& ch : t)
    if (ch == ',') ch = ' ';
  return detail::parse_face(t, 0);
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

struct Args {
  std::string input, second, output, certificate, emit, budget, edge, new_vertex, json_path = "verify-paper.json";
  std::vector<std::string> faces;
  unsigned field = 2;
  int copies = 2;
  bool relative = false, inject_fault = false;
};

int cmd_build(const Args& a) {
  write_or_print(a.output, build_text(a.input));
  return kPositive;
}

int cmd_fvector(const Args& a) {
  auto f = load(a.input);
  std::cout << (f.removed ? f.as_relative().f_vector() : f.total.f_vector()).to_string() << '\n';
  return kPositive;
}

int cmd_hvector(const Args& a) {
  auto f = load(a.input);
  std::cout << h_vector(f.removed ? f.as_relative().f_vector() : f.total.f_vector()).to_string() << '\n';
  return kPositive;
}

int cmd_balance(const Args& a) {
  auto c = load_absolute(a.input);
  auto r = is_balanced(c);
  if (r.warning) std::cerr << "warning: " << *r.warning << '\n';
  if (!r.balanced) {
    std::cout << "not balanced (no proper " << r.colors << "-coloring)\n";
    return kNegative;
  }
  std::cout << "balanced (" << r.colors << " colors)\n";
  for (const auto& [v, col] : *r.witness) std::cout << v << ' ' << col << '\n';
  return kPositive;
}

int cmd_critical(const Args& a) {
  auto crit = critical_vertices(load_absolute(a.input));
  for (const auto& v : crit) std::cout << v << '\n';
  if (crit.empty()) std::cout << "no critical vertices\n";
  return crit.empty() ? kPositive : kNegative;
}

int cmd_homology(const Args& a) {
  auto c = load_absolute(a.input);
  std::vector<Face> faces;
  for (const auto& f : a.faces) faces.push_back(parse_face_arg(f));
  if (faces.empty()) faces.push_back(Face{});
  for (const auto& rec : betti_table(c, faces, FieldSpec(a.field))) {
    std::string name = rec.face.size() == 0 ? "{}" : "{" + rec.face.to_string() + "}";
    std::cout << name << " link-dim " << rec.link_dimension << " betti";
    for (int i = -1; i <= rec.betti.top(); ++i) std::cout << ' ' << rec.betti.at(i);
    std::cout << '\n';
  }
  return kPositive;
}

int cmd_cm_check(const Args& a) {
  auto c = load_absolute(a.input);
  auto r = is_cohen_macaulay(c, FieldSpec(a.field));
  if (r.cohen_macaulay) {
    std::cout << "PASS Cohen-Macaulay over GF(" << a.field << "), " << r.faces_checked << " faces checked\n";
    return kPositive;
  }
  const auto& rec = *r.refutation;
  std::cout << "FAIL face {" << rec.face.to_string() << "} link-dim " << rec.link_dimension << " betti";
  for (int i = -1; i <= rec.betti.top(); ++i) std::cout << ' ' << rec.betti.at(i);
  std::cout << '\n';
  return kNegative;
}

Budget budget_of(const Args& a) { return a.budget.empty() ? Budget{} : Budget::parse(a.budget); }

int cmd_shelling(const Args& a) {
  auto c = load_absolute(a.input);
  auto v = shelling_search(c, budget_of(a));
  std::cout << to_string(v.status) << " (" << v.nodes << " nodes)\n";
  if (!v.order) return v.status == ShellingStatus::kNotShellable ? kNegative : kInconclusive;
  auto p = partition_from_shelling(c, *v.order);
  std::ostringstream os;
  for (const auto& f : *v.order) os << f.to_string() << '\n';
  std::cout << os.str();
  if (!a.certificate.empty()) {
    std::ostringstream cert;
    write_certificate(cert, p.partition());
    write_or_print(a.certificate, cert.str());
  }
  return kPositive;
}

int cmd_partition(const Args& a) {
  auto x = load(a.input).as_relative();
  if (a.emit == "exact-cover") {
    std::ostringstream os;
    write_exact_cover(os, x);
    write_or_print(a.output, os.str());
    return kPositive;
  }
  if (!a.emit.empty()) throw InputError("--emit supports only exact-cover");
  PartitionOptions opts;
  opts.budget = budget_of(a);
  auto v = decide_partitionable(x, opts);
  std::cout << to_string(v.status) << " (" << v.nodes << " nodes, " << std::fixed << std::setprecision(2)
            << v.seconds << " s)\n";
  if (v.certificate) {
    std::ostringstream cert;
    write_certificate(cert, v.certificate->partition());
    if (!a.certificate.empty()) write_or_print(a.certificate, cert.str());
    std::cout << "h from partition: " << h_from_partition(*v.certificate, x.dimension() + 1).to_string() << '\n';
    return kPositive;
  }
  return v.status == PartitionStatus::kNotPartitionable ? kNegative : kInconclusive;
}

int cmd_check_certificate(const Args& a) {
  auto x = load(a.input).as_relative();
  std::ifstream in(a.second);
  if (!in) throw InputError("cannot open " + a.second);
  auto check = verify_partition(x, read_certificate(in));
  if (!check) {
    std::cout << "invalid: " << *check.violation << '\n';
    return kNegative;
  }
  std::cout << "valid partition, h = " << h_from_partition(*check.verified, x.dimension() + 1).to_string() << '\n';
  return kPositive;
}

int cmd_glue(const Args& a) {
  auto q = load_absolute(a.input);
  auto sub = load_absolute(a.second);
  if (gluing_codimension(q, sub) > 1)
    std::cerr << "warning: the shared subcomplex has codimension " << gluing_codimension(q, sub) << '\n';
  auto c = glue_copies(q, sub, a.copies);
  std::ostringstream os;
  if (a.relative) write_relative(os, c, sub);
  else write_complex(os, c);
  write_or_print(a.output, os.str());
  return kPositive;
}

int cmd_subdivide(const Args& a) {
  auto c = load_absolute(a.input);
  Face e = parse_face_arg(a.edge);
  VertexLabel w = a.new_vertex.empty() ? fresh_vertex(c) : VertexLabel::parse(a.new_vertex);
  write_or_print(a.output, to_text(subdivide_edge(c, e, w)));
  return kPositive;
}

int cmd_sd(const Args& a) {
  write_or_print(a.output, to_text(barycentric_subdivision(load_absolute(a.input))));
  return kPositive;
}

int cmd_verify_paper(const Args& a) {
  tools::ClaimOptions opts;
  opts.field = a.field;
  opts.budget = budget_of(a);
  opts.workers = worker_count();
  opts.corrupt = a.inject_fault;
  auto records = tools::run_claims(opts);
  nlohmann::json report = nlohmann::json::array();
  bool all = true;
  for (const auto& r : records) {
    std::cout << "CLAIM " << r.id << ' ' << (r.pass ? "PASS" : "FAIL") << " expected=" << r.expected
              << " got=" << r.got << ' ' << std::fixed << std::setprecision(1) << r.ms << "ms\n";
    report.push_back({{"id", r.id},
                      {"expected", r.expected},
                      {"source", r.source},
                      {"got", r.got},
                      {"pass", r.pass},
                      {"ms", r.ms}});
    all = all && r.pass;
  }
  if (!a.json_path.empty()) {
    nlohmann::json doc{{"field", a.field}, {"claims", report}, {"all_pass", all}};
    write_or_print(a.json_path, doc.dump(2) + "\n");
  }
  return all ? kPositive : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cmpart: simplicial complexes, partitionability, shellability, Cohen-Macaulayness"};
  app.require_subcommand(1);
  Args a;
  const std::string input_help = "facet-list file, - for stdin, or @Name for a built-in";

  auto* build = app.add_subcommand("build", "write a built-in construction (Q, A, Q-star, A-star, X, C<n>)");
  build->add_option("name", a.input)->required();
  build->add_option("-o,--output", a.output);

  auto* fvector = app.add_subcommand("fvector", "print the f-vector");
  fvector->add_option("input", a.input, input_help)->required();
  auto* hvector = app.add_subcommand("hvector", "print the h-vector");
  hvector->add_option("input", a.input, input_help)->required();

  auto* balance = app.add_subcommand("balance", "decide balancedness; prints `vertex color` lines");
  balance->add_option("input", a.input, input_help)->required();
  auto* critical = app.add_subcommand("critical", "list vertices whose links are not balanced");
  critical->add_option("input", a.input, input_help)->required();

  auto* homology = app.add_subcommand("homology", "reduced Betti numbers of links (default: the complex)");
  homology->add_option("input", a.input, input_help)->required();
  homology->add_option("--face", a.faces, "face whose link is used, e.g. \"1 2\" or {}");
  homology->add_option("--field", a.field, "prime characteristic")->default_val(2);

  auto* cm = app.add_subcommand("cm-check", "Reisner's Cohen-Macaulay test");
  cm->add_option("input", a.input, input_help)->required();
  cm->add_option("--field", a.field, "prime characteristic")->default_val(2);

  auto* shelling = app.add_subcommand("shelling", "search for a shelling order");
  shelling->add_option("input", a.input, input_help)->required();
  shelling->add_option("--budget", a.budget, "e.g. 60s or 1000000 (nodes)");
  shelling->add_option("--certificate", a.certificate, "write the induced partition as `R | F` lines");

  auto* partition = app.add_subcommand("partition", "decide partitionability (relative files via ---)");
  partition->add_option("input", a.input, input_help)->required();
  partition->add_option("--budget", a.budget, "e.g. 60s or 1000000 (nodes)");
  partition->add_option("--certificate", a.certificate, "write intervals as `R | F` lines");
  partition->add_option("--emit", a.emit, "exact-cover: dump the incidence matrix instead of solving");
  partition->add_option("-o,--output", a.output, "destination for --emit");

  auto* check = app.add_subcommand("check-certificate", "verify an `R | F` interval partition");
  check->add_option("input", a.input, input_help)->required();
  check->add_option("certificate", a.second)->required();

  auto* glue = app.add_subcommand("glue", "identify copies of a complex along an induced subcomplex");
  glue->add_option("complex", a.input, input_help)->required();
  glue->add_option("subcomplex", a.second, input_help)->required();
  glue->add_option("--copies", a.copies)->default_val(2);
  glue->add_flag("--relative", a.relative, "write the pair (glued, subcomplex) as a relative complex");
  glue->add_option("-o,--output", a.output);

  auto* subdivide = app.add_subcommand("subdivide", "subdivide an edge");
  subdivide->add_option("input", a.input, input_help)->required();
  subdivide->add_option("--edge", a.edge, "\"u v\"")->required();
  subdivide->add_option("--new-vertex", a.new_vertex, "label of the new vertex (default s<k>)");
  subdivide->add_option("-o,--output", a.output);

  auto* sd = app.add_subcommand("sd", "barycentric subdivision");
  sd->add_option("input", a.input, input_help)->required();
  sd->add_option("-o,--output", a.output);

  auto* verify = app.add_subcommand("verify-paper", "reproduce every claim; one CLAIM line each");
  verify->add_option("--field", a.field, "prime characteristic for the CM claims")->default_val(2);
  verify->add_option("--budget", a.budget, "budget for each partition search");
  verify->add_option("--json", a.json_path, "structured report path (empty to skip)");
  verify->add_flag("--inject-fault", a.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*build) return cmd_build(a);
    if (*fvector) return cmd_fvector(a);
    if (*hvector) return cmd_hvector(a);
    if (*balance) return cmd_balance(a);
    if (*critical) return cmd_critical(a);
    if (*homology) return cmd_homology(a);
    if (*cm) return cmd_cm_check(a);
    if (*shelling) return cmd_shelling(a);
    if (*partition) return cmd_partition(a);
    if (*check) return cmd_check_certificate(a);
    if (*glue) return cmd_glue(a);
    if (*subdivide) return cmd_subdivide(a);
    if (*sd) return cmd_sd(a);
    if (*verify) return cmd_verify_paper(a);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
