// fibered: command-line front end.
//
// Exit codes: 0 success (for scan: no obstruction found), 3 scan found a
// NonMonic/Zero witness, 2 invalid input, 1 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fibered/fibered.hpp"
#include "json.hpp"

using namespace fibered;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitWitness = 3;
constexpr int kExitInvalid = 2;

struct Options {
  std::string input;
  std::string u_rows;
  std::size_t max_degree = 3;
  std::size_t cap = kDefaultMaxDegree;
  std::string cutoff;
  bool json = false;
  std::uint64_t seed = 0;
  bool all = false;
  std::string images;
  std::string deleted;
  // nv / cyclo operands
  std::string series, y, x, d;
  std::string p, q;
  std::vector<unsigned long> indices;
  unsigned long n = 0, from = 2, to = 20;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

GroupPresentation load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

std::string hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json rows_json(const WeightFunctional& u) {
  Json rows = Json::array();
  for (const auto& r : u.rows()) {
    Json row = Json::array();
    for (const auto& v : r) row.push_back(v.get_str());
    rows.push_back(row);
  }
  return rows;
}

WeightFunctional weight_for(const Options& o, const GroupPresentation& g, const AbelianizationData& ab) {
  if (!o.u_rows.empty()) return validate_u(g, ab, parse_weight_rows(o.u_rows));
  if (ab.rank() == 0) throw ZeroFunctional();
  return WeightFunctional::lexicographic(ab.rank());
}

// u for series operands: explicit rows, or the identity rows in `nvars` variables.
WeightFunctional series_weight(const Options& o, std::size_t nvars) {
  if (!o.u_rows.empty()) {
    auto rows = parse_weight_rows(o.u_rows);
    return WeightFunctional(rows.front().size(), std::move(rows));
  }
  return WeightFunctional::lexicographic(nvars);
}

// "1 0 2;0 2 1" or "1,0,2;0,2,1"
FiniteQuotient parse_quotient(const std::string& text, const GroupPresentation& g) {
  std::vector<Permutation> images;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    for (auto& c : row)
      if (c == ',') c = ' ';
    std::istringstream in(row);
    Permutation perm;
    int v;
    while (in >> v) perm.push_back(v);
    if (!in.eof()) throw InvalidInput("bad permutation '" + row + "'");
    images.push_back(perm);
  }
  if (images.size() != g.num_generators())
    throw InvalidInput("need one permutation per generator");
  const std::size_t k = images.front().size();
  for (const auto& perm : images) {
    std::vector<bool> seen(k, false);
    for (int v : perm) {
      if (perm.size() != k || v < 0 || static_cast<std::size_t>(v) >= k || seen[v])
        throw InvalidInput("not a permutation of 0.." + std::to_string(k - 1));
      seen[v] = true;
    }
  }
  FiniteQuotient fq(k, images);
  if (!fq.kills(g)) throw InvalidInput("the permutations do not satisfy the relators");
  return fq;
}

std::optional<std::size_t> parse_deleted(const std::string& s, const GroupPresentation& g) {
  if (s.empty()) return std::nullopt;
  for (std::size_t i = 0; i < g.generators.size(); ++i)
    if (g.generators[i] == s) return i;
  throw InvalidInput("unknown generator '" + s + "'");
}

Json quotient_json(const FiniteQuotient& fq) {
  Json images = Json::array();
  for (const auto& p : fq.images()) images.push_back(p);
  return Json{{"degree", fq.degree()}, {"images", images}};
}

std::string quotient_text(const FiniteQuotient& fq) {
  std::string s;
  for (const auto& p : fq.images()) {
    s += s.empty() ? "[" : " [";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    s += "]";
  }
  return s;
}

Json verdict_json(const MonicityVerdict& v, const GroupPresentation& g) {
  return Json{{"order", v.order.to_string()},
              {"verdict", to_string(v.verdict)},
              {"minimal-part", v.minimal_part.to_string()},
              {"deleted", g.generators[v.deleted]},
              {"caveat", kOrderCaveat}};
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_alexander(const Options& o) {
  const auto g = load(o.input);
  const auto ab = abelianize(g);
  const auto u = weight_for(o, g, ab);
  const auto v = alexander_order(g, ab.psi, u);
  const bool monic = v.verdict == Verdict::Monic;
  std::optional<LaurentPoly> spec;
  std::vector<long> w;
  if (ab.rank() > 1) {
    w = u.primitive_first_row();
    spec = normalize(specialize(v.order, w));
  }
  if (o.json) {
    Json j{{"presentation-hash", hex(g.hash())}, {"u", rows_json(u)}, {"rank", ab.rank()},
           {"torsion", Json::array()}};
    for (const auto& t : ab.torsion) j["torsion"].push_back(t.get_str());
    j.update(verdict_json(v, g));
    j["monic"] = monic;
    if (spec) j["specialized"] = Json{{"weights", w}, {"order", spec->to_string()}};
    emit(j);
  } else {
    std::cout << "order: " << v.order.to_string() << ", monic: " << (monic ? "true" : "false") << '\n';
    if (spec) {
      std::cout << "specialized (t_i -> t^w_i, w =";
      for (long x : w) std::cout << ' ' << x;
      std::cout << "): " << spec->to_string() << '\n';
    }
  }
  return 0;
}

int cmd_twisted(const Options& o) {
  const auto g = load(o.input);
  const auto ab = abelianize(g);
  const auto u = weight_for(o, g, ab);
  const auto fq = o.images.empty() ? trivial_quotient(g.num_generators()) : parse_quotient(o.images, g);
  const auto v = twisted_order(g, ab.psi, fq, u, parse_deleted(o.deleted, g));
  if (o.json) {
    Json j{{"presentation-hash", hex(g.hash())}, {"u", rows_json(u)}, {"quotient", quotient_json(fq)},
           {"index", fq.order()}};
    j.update(verdict_json(v, g));
    emit(j);
  } else {
    std::cout << "quotient: " << quotient_text(fq) << " (index " << fq.order() << ")\n"
              << "deleted generator: " << g.generators[v.deleted] << '\n'
              << "order: " << v.order.to_string() << '\n'
              << "verdict: " << to_string(v.verdict) << '\n'
              << "note: " << kOrderCaveat << '\n';
  }
  return 0;
}

int cmd_scan(const Options& o) {
  const auto g = load(o.input);
  const auto ab = abelianize(g);
  const auto u = weight_for(o, g, ab);
  const auto rep = fibered_obstruction_scan(g, ab.psi, u, o.max_degree, !o.all, o.cap);
  if (o.json) {
    Json verdicts = Json::array();
    for (const auto& e : rep.verdicts)
      verdicts.push_back(Json{{"quotient", quotient_json(e.quotient)},
                              {"index", e.quotient.order()},
                              {"order", e.verdict.order.to_string()},
                              {"verdict", to_string(e.verdict.verdict)}});
    Json j{{"presentation-hash", hex(g.hash())}, {"u", rows_json(u)}, {"degree-bound", rep.degree_bound},
           {"verdicts", verdicts}, {"conclusion", rep.conclusion()}};
    j["witness"] = rep.witness ? Json(*rep.witness) : Json(nullptr);
    emit(j);
  } else {
    for (const auto& e : rep.verdicts)
      std::cout << "degree " << e.quotient.degree() << "  index " << e.quotient.order() << "  "
                << quotient_text(e.quotient) << "  " << to_string(e.verdict.verdict) << "  "
                << e.verdict.order.to_string() << '\n';
    if (rep.witness) {
      const auto& e = rep.verdicts[*rep.witness];
      std::cout << "witness: index " << e.quotient.order() << " " << quotient_text(e.quotient) << '\n';
    }
    std::cout << "conclusion: " << rep.conclusion() << '\n';
  }
  return rep.not_fibered() ? kExitWitness : 0;
}

int cmd_quotients(const Options& o) {
  const auto g = load(o.input);
  const auto qs = enumerate_quotients(g, o.max_degree, o.cap);
  if (o.json) {
    Json list = Json::array();
    for (const auto& fq : qs) {
      Json j = quotient_json(fq);
      j["index"] = fq.order();
      list.push_back(j);
    }
    emit(Json{{"presentation-hash", hex(g.hash())}, {"max-degree", o.max_degree}, {"quotients", list}});
  } else {
    for (const auto& fq : qs)
      std::cout << "degree " << fq.degree() << "  index " << fq.order() << "  " << quotient_text(fq) << '\n';
    std::cout << qs.size() << " quotients up to degree " << o.max_degree << '\n';
  }
  return 0;
}

int cmd_rs(const Options& o) {
  const auto g = load(o.input);
  const auto ab = abelianize(g);
  if (o.images.empty()) throw InvalidInput("rs needs --images");
  const auto fq = parse_quotient(o.images, g);
  const auto sp = reidemeister_schreier(g, fq, ab.psi);
  const auto& h = sp.presentation;
  if (o.json) {
    Json gens = Json::array();
    for (std::size_t i = 0; i < h.generators.size(); ++i)
      gens.push_back(Json{{"name", h.generators[i]},
                          {"word", sp.inclusion[i].to_string(g.generators)},
                          {"psi", sp.psi.images[i]}});
    Json rels = Json::array();
    for (const auto& r : h.relators) rels.push_back(r.to_string(h.generators));
    emit(Json{{"presentation-hash", hex(g.hash())}, {"quotient", quotient_json(fq)}, {"index", fq.order()},
              {"generators", gens}, {"relators", rels}});
  } else {
    std::cout << h.to_text();
    std::cout << "# Schreier generators as words in G, with psi:\n";
    for (std::size_t i = 0; i < h.generators.size(); ++i) {
      std::cout << "#   " << h.generators[i] << " = " << sp.inclusion[i].to_string(g.generators) << "  psi =";
      for (auto x : sp.psi.images[i]) std::cout << ' ' << x;
      std::cout << '\n';
    }
  }
  return 0;
}

void print_series(const Options& o, const NovikovSeries& s, const WeightFunctional& u) {
  if (o.json) {
    Json j{{"series", render_by_level(s.poly(), u)}, {"u", rows_json(u)}};
    j["cutoff"] = s.cutoff() ? Json(to_string(*s.cutoff())) : Json(nullptr);
    j["exact"] = s.is_exact();
    emit(j);
  } else {
    std::cout << render_by_level(s.poly(), u) << '\n';
    if (s.cutoff())
      std::cout << "exact modulo terms with u > " << to_string(*s.cutoff()) << '\n';
    else
      std::cout << "exact\n";
  }
}

LaurentPoly parse_operand(const std::string& text, std::optional<std::size_t> nvars) {
  return nvars ? parse_laurent(text, *nvars) : parse_laurent(text);
}

std::optional<std::size_t> operand_vars(const Options& o) {
  if (o.u_rows.empty()) return std::nullopt;
  return parse_weight_rows(o.u_rows).front().size();
}

int cmd_nv_invert(const Options& o) {
  const auto a = parse_operand(o.series, operand_vars(o));
  const auto u = series_weight(o, a.nvars());
  print_series(o, nv_invert_unit(NovikovSeries(a, u), parse_level(o.cutoff)), u);
  return 0;
}

int cmd_nv_divide(const Options& o) {
  auto nv = operand_vars(o);
  const auto y = parse_operand(o.y, nv);
  if (!nv) nv = y.nvars();
  const auto x = parse_operand(o.x, nv);
  const auto u = series_weight(o, y.nvars());
  print_series(o, nv_divide(NovikovSeries(y, u), NovikovSeries(x, u), parse_level(o.cutoff)), u);
  return 0;
}

LaurentMatrix parse_matrix(const std::string& text, std::size_t nvars) {
  const Json j = Json::parse(text);
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw InvalidInput("matrix must be a JSON array of rows");
  LaurentMatrix m = zero_matrix(j.size(), j[0].size(), nvars);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != m.cols()) throw InvalidInput("ragged matrix");
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const auto& e = j[i][k];
      m(i, k) = parse_laurent(e.is_string() ? e.get<std::string>() : e.dump(), nvars);
    }
  }
  return m;
}

Json matrix_json(const LaurentMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
    rows.push_back(row);
  }
  return rows;
}

// Verifies X against D, or builds the inverse-truncation certificate when X
// is not given.
int cmd_nv_certify(const Options& o) {
  const std::size_t nv = operand_vars(o).value_or(1);
  const auto u = series_weight(o, nv);
  const auto d = parse_matrix(o.d, nv);
  bool built = false;
  LaurentMatrix x;
  if (o.x.empty()) {
    if (!d.is_square()) throw InvalidInput("certificate construction needs a square D");
    if (!square_invertibility(d, u)) throw InvalidInput("det(D) is not u-monic; no certificate exists");
    x = inverse_truncation_certificate(d, u);
    built = true;
  } else {
    x = parse_matrix(o.x, nv);
  }
  const bool ok = verify_certificate(x, d, u);
  if (o.json) {
    emit(Json{{"u", rows_json(u)}, {"x", matrix_json(x)}, {"constructed", built}, {"valid", ok}});
  } else {
    if (built) std::cout << "X = " << matrix_json(x).dump() << '\n';
    std::cout << "certificate: " << (ok ? "valid" : "invalid") << '\n';
  }
  return 0;
}

IntPoly int_operand(const std::string& s, const char* name) {
  if (s.empty()) throw InvalidInput(std::string("missing --") + name);
  return parse_int_poly(s);
}

int cmd_cyclo_res(const Options& o) {
  IntPoly p, q;
  if (!o.indices.empty()) {
    if (o.indices.size() != 2) throw InvalidInput("cyclo res takes two cyclotomic indices");
    if (o.indices[0] == 0 || o.indices[1] == 0) throw InvalidInput("cyclotomic indices must be positive");
    p = cyclotomic_poly(o.indices[0]);
    q = cyclotomic_poly(o.indices[1]);
  } else {
    p = int_operand(o.p, "p");
    q = int_operand(o.q, "q");
  }
  const Integer r = resultant(p, q);
  if (o.json)
    emit(Json{{"p", p.to_string()}, {"q", q.to_string()}, {"resultant", r.get_str()}});
  else
    std::cout << r.get_str() << '\n';
  return 0;
}

int cmd_cyclo_divides(const Options& o) {
  const auto p = int_operand(o.p, "p"), q = int_operand(o.q, "q");
  if (o.n == 0) throw InvalidInput("--n must be positive");
  const bool ok = divides_in_cyclotomic_ring(p, q, o.n);
  if (o.json)
    emit(Json{{"p", p.to_string()}, {"q", q.to_string()}, {"n", o.n}, {"divides", ok}});
  else
    std::cout << (ok ? "true" : "false") << '\n';
  return 0;
}

int cmd_cyclo_scan(const Options& o) {
  const auto p = int_operand(o.p, "p"), q = int_operand(o.q, "q");
  if (o.from == 0 || o.to < o.from) throw InvalidInput("need 1 <= --from <= --to");
  const auto s = divisibility_scan(p, q, o.from, o.to);
  if (o.json) {
    Json rows = Json::array();
    for (const auto& [n, v] : s.rows) rows.push_back(Json{{"n", n}, {"divides", v ? Json(*v) : Json(nullptr)}});
    Json j{{"p", p.to_string()}, {"q", q.to_string()}, {"rows", rows}, {"all-pass", s.all_pass}};
    j["first-failure"] = s.first_failure ? Json(*s.first_failure) : Json(nullptr);
    j["divides-in-Z[t]"] = s.divides_in_zt;
    emit(j);
  } else {
    for (const auto& [n, v] : s.rows)
      std::cout << "n=" << n << "  " << (v ? (*v ? "true" : "false") : "skipped (Phi_n | P)") << '\n';
    std::cout << "all tested n pass: " << (s.all_pass ? "true" : "false") << '\n';
    if (s.first_failure) std::cout << "first failure: n=" << *s.first_failure << '\n';
    std::cout << "P | Q in Z[t]: " << (s.divides_in_zt ? "true" : "false") << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted Alexander monicity scans, Novikov-ring and cyclotomic utilities"};
  app.require_subcommand(1);
  Options o;

  auto weight_opt = [&](CLI::App* s) {
    s->add_option("--u", o.u_rows, "weight rows, e.g. \"1\" or \"1,0;0,1\"");
  };
  auto output_opts = [&](CLI::App* s) {
    s->add_flag("--json", o.json, "JSON output");
    s->add_option("--seed", o.seed, "seed (no command is randomized; accepted for scripting)");
  };
  auto group_cmd = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("input", o.input, "presentation file")->required();
    weight_opt(s);
    output_opts(s);
    return s;
  };

  int rc = 0;
  auto* alex = group_cmd("alexander", "classical (multivariable) Alexander order and monicity");
  alex->callback([&] { rc = cmd_alexander(o); });

  auto* tw = group_cmd("twisted", "twisted Alexander order for one finite quotient");
  tw->add_option("--images", o.images, "generator images, e.g. \"1 0 2;0 2 1\" (default: trivial)");
  tw->add_option("--delete", o.deleted, "generator whose Fox column is deleted");
  tw->callback([&] { rc = cmd_twisted(o); });

  auto* sc = group_cmd("scan", "fibered-obstruction scan over all quotients up to --max-degree");
  sc->add_option("--max-degree", o.max_degree, "largest permutation degree")->capture_default_str();
  sc->add_option("--cap", o.cap, "hard bound on --max-degree")->capture_default_str();
  sc->add_flag("--all", o.all, "keep scanning after a witness");
  sc->callback([&] { rc = cmd_scan(o); });

  auto* qu = group_cmd("quotients", "list homomorphisms to S_k up to conjugation");
  qu->add_option("--max-degree", o.max_degree, "largest permutation degree")->capture_default_str();
  qu->add_option("--cap", o.cap, "hard bound on --max-degree")->capture_default_str();
  qu->callback([&] { rc = cmd_quotients(o); });

  auto* rs = group_cmd("rs", "Reidemeister-Schreier presentation of a finite-index kernel");
  rs->add_option("--images", o.images, "generator images, e.g. \"1 0;1 0\"")->required();
  rs->callback([&] { rc = cmd_rs(o); });

  auto* nv = app.add_subcommand("nv", "Novikov-ring arithmetic");
  nv->require_subcommand(1);
  auto* inv = nv->add_subcommand("invert", "inverse of a u-monic series");
  inv->add_option("--series", o.series, "Laurent polynomial")->required();
  inv->add_option("--cutoff", o.cutoff, "u-level C")->required();
  weight_opt(inv);
  output_opts(inv);
  inv->callback([&] { rc = cmd_nv_invert(o); });
  auto* div = nv->add_subcommand("divide", "q with y = q x modulo u > C");
  div->add_option("--y", o.y, "dividend")->required();
  div->add_option("--x", o.x, "divisor")->required();
  div->add_option("--cutoff", o.cutoff, "u-level C")->required();
  weight_opt(div);
  output_opts(div);
  div->callback([&] { rc = cmd_nv_divide(o); });
  auto* cert = nv->add_subcommand("certify", "check (or build) X with X D - I supported in u > 0");
  cert->add_option("--d", o.d, "D as JSON rows of polynomial strings")->required();
  cert->add_option("--x", o.x, "X as JSON rows (omit to construct)");
  weight_opt(cert);
  output_opts(cert);
  cert->callback([&] { rc = cmd_nv_certify(o); });

  auto* cy = app.add_subcommand("cyclo", "cyclotomic resultants and divisibility");
  cy->require_subcommand(1);
  auto* res = cy->add_subcommand("res", "res(Phi_M, Phi_N), or res(P, Q) with --p/--q");
  res->add_option("indices", o.indices, "cyclotomic indices M N");
  res->add_option("--p", o.p, "polynomial P in Z[t]");
  res->add_option("--q", o.q, "polynomial Q in Z[t]");
  output_opts(res);
  res->callback([&] { rc = cmd_cyclo_res(o); });
  auto* dv = cy->add_subcommand("divides", "does P(z) divide Q(z) in Z[z], z a primitive n-th root");
  dv->add_option("--p", o.p)->required();
  dv->add_option("--q", o.q)->required();
  dv->add_option("--n", o.n)->required();
  output_opts(dv);
  dv->callback([&] { rc = cmd_cyclo_divides(o); });
  auto* cs = cy->add_subcommand("scan", "divisibility for n in [--from, --to] and in Z[t]");
  cs->add_option("--p", o.p)->required();
  cs->add_option("--q", o.q)->required();
  cs->add_option("--from", o.from)->capture_default_str();
  cs->add_option("--to", o.to)->capture_default_str();
  output_opts(cs);
  cs->callback([&] { rc = cmd_cyclo_scan(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
