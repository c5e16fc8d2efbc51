#pragma once
// The reproduction report behind `cmpart verify-paper`.

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cmpart/cmpart.hpp"

namespace cmpart::tools {

struct ClaimRecord {
  std::string id;
  std::string expected;
  std::string source;  ///< where the expected value comes from
  std::string got;
  bool pass = false;
  double ms = 0;
};

struct ClaimOptions {
  unsigned field = 2;
  Budget budget;
  unsigned workers = 1;
  bool corrupt = false;  ///< drop one facet of Q before building (fault injection)
};

namespace detail {

inline std::string list(const std::vector<VertexLabel>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + vs[i].to_string();
  return s + "}";
}

inline std::string paren(const std::string& spaced) {
  std::string s = spaced;
  for (auto& ch : s)
    if (ch == ' ') ch = ',';
  return "(" + s + ")";
}

inline std::string verdict_text(const PartitionVerdict& v) {
  std::string s = to_string(v.status);
  if (v.certificate) s += "+verified";
  return s;
}

}  // namespace detail

/// Runs every claim in a fixed order; claims may execute concurrently but
/// the returned records are always in that order.
inline std::vector<ClaimRecord> run_claims(const ClaimOptions& opts) {
  using detail::paren;
  const named::Complexes c = named::build(opts.corrupt);
  const FieldSpec field(opts.field);
  const std::string gf = "GF(" + std::to_string(opts.field) + ")";

  struct Claim {
    std::string id, expected, source;
    std::function<std::string()> compute;
  };
  std::vector<Claim> claims;
  auto add = [&](std::string id, std::string expected, std::string source, std::function<std::string()> f) {
    claims.push_back({std::move(id), std::move(expected), std::move(source), std::move(f)});
  };
  auto fv = [](const auto& x) { return paren(x.f_vector().to_string()); };
  auto cm = [field](const SimplicialComplex& x) {
    auto r = is_cohen_macaulay(x, field, 1);
    if (r.cohen_macaulay) return std::string("CM");
    return "not CM at {" + r.refutation->face.to_string() + "}";
  };
  auto balanced = [](const SimplicialComplex& x) {
    auto r = is_balanced(x);
    if (!r.balanced) return std::string("not balanced");
    return coloring_violation(x, *r.witness, r.colors) ? std::string("bad witness") : std::string("balanced");
  };
  auto shelled_h = [](const SimplicialComplex& x) {
    auto v = shelling_search(x);
    if (!v.order) return std::string(to_string(v.status));
    auto p = partition_from_shelling(x, *v.order);
    return "shellable h=" + paren(h_from_partition(p, x.dimension() + 1).to_string());
  };
  auto decide = [&](const RelativeComplex& x) {
    PartitionOptions po;
    po.budget = opts.budget;
    po.workers = opts.workers;
    return detail::verdict_text(decide_partitionable(x, po));
  };

  add("fvector.Q-star", "(1,14,45,52,20)", "f-vector list", [&] { return fv(c.q_star); });
  add("fvector.A-star", "(1,10,17,8)", "f-vector list", [&] { return fv(c.a_star); });
  add("fvector.X", "(0,4,28,44,20)", "f-vector list", [&] { return fv(RelativeComplex(c.q_star, c.a_star)); });
  add("fvector.C3", "(1,22,101,140,60)", "f-vector of C_3", [&] { return fv(named::glued(c, 3)); });
  add("faces.A-star", "36", "total number of faces of A*",
      [&] { return std::to_string(c.a_star.f_vector().total()); });
  add("fvector.X-difference", "f(Q*)-f(A*)", "f-vector list", [&] {
    RelativeComplex x(c.q_star, c.a_star);
    return x.f_vector() == c.q_star.f_vector() - c.a_star.f_vector() ? std::string("f(Q*)-f(A*)")
                                                                      : paren(x.f_vector().to_string());
  });
  add("balanced.Q", "not balanced", "Q is not balanced", [&] { return balanced(c.q); });
  add("balanced.Q-star", "balanced", "Q* is balanced", [&] { return balanced(c.q_star); });
  add("balanced.C3", "balanced", "main theorem on C_3", [&] { return balanced(named::glued(c, 3)); });
  add("balanced.C37", "balanced", "main theorem on C_37", [&] { return balanced(named::glued(c, 37)); });
  add("critical.Q", "{1,2,4,5,6,8,9}", "0,3,7 are uncritical", [&] { return detail::list(critical_vertices(c.q)); });
  add("critical.Q-star", "{}", "Q* has only uncritical vertices",
      [&] { return detail::list(critical_vertices(c.q_star)); });
  auto autom = [](const SimplicialComplex& x, const VertexMap& m) {
    return std::string(is_automorphism(x, m.restricted_to(x.vertices())) ? "automorphism" : "not an automorphism");
  };
  add("automorphism.tau.Q", "automorphism", "tau on Q", [&] { return autom(c.q, named::tau()); });
  add("automorphism.tau.A", "automorphism", "tau on A", [&] { return autom(c.a, named::tau()); });
  add("automorphism.tau-prime.Q-star", "automorphism", "tau' on Q*", [&] { return autom(c.q_star, named::tau_prime()); });
  add("automorphism.tau-prime.A-star", "automorphism", "tau' on A*", [&] { return autom(c.a_star, named::tau_prime()); });
  add("shelling.Q-star", "shellable h=(1,10,9,0,0)", "Q* shellable; h from the f/h identity",
      [&] { return shelled_h(c.q_star); });
  add("shelling.A-star", "shellable h=(1,7,0,0)", "A* shellable; h from the f/h identity",
      [&] { return shelled_h(c.a_star); });
  add("cm.Q-star", "CM", "shellable implies CM over " + gf, [&] { return cm(c.q_star); });
  add("cm.A-star", "CM", "shellable implies CM over " + gf, [&] { return cm(c.a_star); });
  add("cm.C3", "CM", "main theorem on C_3, over " + gf, [&] { return cm(named::glued(c, 3)); });
  add("cm.C37", "CM", "main theorem on C_37, over " + gf, [&] { return cm(named::glued(c, 37)); });
  add("partition.X", "not partitionable", "X is not partitionable",
      [&] { return decide(RelativeComplex(c.q_star, c.a_star)); });
  add("partition.C2", "partitionable+verified", "C_2 is partitionable",
      [&] { return decide(RelativeComplex(named::glued(c, 2))); });
  add("partition.C3", "not partitionable", "main theorem on C_3",
      [&] { return decide(RelativeComplex(named::glued(c, 3))); });

  std::vector<ClaimRecord> out(claims.size());
  parallel_for(claims.size(), opts.workers, [&](std::size_t i) {
    auto t0 = std::chrono::steady_clock::now();
    ClaimRecord r{claims[i].id, claims[i].expected, claims[i].source, {}, false, 0};
    try {
      r.got = claims[i].compute();
    } catch (const std::exception& e) {
      r.got = std::string("error: ") + e.what();
    }
    r.pass = r.got == r.expected;
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out[i] = std::move(r);
  });
  return out;
}

}  // namespace cmpart::tools
