#include "khb/report.hpp"

#include "khb/khovanskii.hpp"
#include "khb/okounkov.hpp"
#include "khb/sagbi.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <memory>

namespace khb {

using Json = nlohmann::ordered_json;

Json matrix_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_json(m.row(i)));
  return rows;
}

Json vector_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

namespace {

Json int_vector_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::string monomial_text(const Exponent& a, const std::vector<std::string>& vars) {
  return to_string(Polynomial::monomial(a), vars);
}

Json exponent_json(const Exponent& a) { return Json(a); }

}  // namespace

Json polynomial_json(const Polynomial& f, const std::vector<std::string>& vars, const MonomialOrder* order) {
  Json out;
  out["text"] = order ? to_string(f, vars, *order) : to_string(f, vars);
  Json terms = Json::array();
  for (const auto& t : order ? sorted_terms(f, *order) : f.terms())
    terms.push_back({{"coefficient", to_string(t.coefficient)},
                     {"monomial", monomial_text(t.exponent, vars)},
                     {"exponent", exponent_json(t.exponent)}});
  out["terms"] = terms;
  return out;
}

Json polytope_json(const Polytope& p) {
  Json out;
  out["ambient_dim"] = p.ambient_dim;
  out["dim"] = p.dim;
  Json verts = Json::array();
  for (const auto& v : p.vertices) verts.push_back(vector_json(v));
  out["vertices"] = verts;
  Json facets = Json::array();
  for (const auto& f : p.facets) facets.push_back({{"normal", vector_json(f.normal)}, {"offset", to_string(f.offset)}});
  out["facets"] = facets;
  out["euclidean_volume"] = to_string(volume(p));
  return out;
}

namespace {

struct CommandError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Runner {
 public:
  Runner(const Session& s, const RunOptions& o) : s_(s), opt_(o) {
    for (const auto& [name, b] : s.ideals)
      if (b.value) ideals_[name] = *b.value;
  }

  RunResult run() {
    RunResult res;
    Json commands = Json::array();
    std::size_t index = 0;
    for (const auto* c : s_.commands()) {
      ++index;
      Json entry;
      entry["index"] = index;
      entry["command"] = print_statement(s_, *c);
      auto t0 = std::chrono::steady_clock::now();
      try {
        current_index_ = index;
        svg_names_.clear();
        Json result = dispatch(*c);
        entry["status"] = "ok";
        entry["result"] = result;
        if (!svg_names_.empty()) entry["svg"] = svg_names_;
      } catch (const std::exception& e) {
        entry["status"] = "error";
        entry["error"] = c->verb + ": " + e.what();
        res.all_ok = false;
      }
      if (opt_.timing)
        entry["elapsed_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      commands.push_back(entry);
    }
    Json settings;
    settings["degree_bound"] = opt_.degree_bound ? Json(*opt_.degree_bound) : Json("default: 2 * max basis degree");
    settings["seed"] = opt_.seed;
    res.report["settings"] = settings;
    res.report["commands"] = commands;
    res.report["all_ok"] = res.all_ok;
    res.svg_files = svg_files_;
    return res;
  }

 private:
  Json dispatch(const CommandStmt& c) {
    const std::string& v = c.verb;
    if (v == "groebner") return groebner(c);
    if (v == "kernel") return kernel(c);
    if (v == "normalform") return normalform(c);
    if (v == "subduct") return subduct(c);
    if (v == "sagbi-vars") return sagbi_vars(c);
    if (v == "toric-lattice") return toric_lattice(c);
    if (v == "mu") return mu_cmd(c);
    if (v == "certificate") return certificate(c);
    if (v == "nobody-direct") return nobody_direct_cmd(c);
    if (v == "nobody-alg1") return nobody_alg1(c);
    if (v == "affine-check") return affine_check(c);
    throw CommandError("unknown command");
  }

  // Lookups ------------------------------------------------------------

  const std::vector<std::string>& vars_of(const std::string& ring) const { return s_.rings.at(ring).vars; }

  const Ideal& ideal(const std::string& name) const {
    auto it = ideals_.find(name);
    if (it == ideals_.end()) throw CommandError("ideal '" + name + "' has no value (did its kernel command fail?)");
    return it->second;
  }

  const std::string& ideal_ring(const std::string& name) const { return s_.ideals.at(name).ring; }
  const MonomialOrder& order(const std::string& name) const { return s_.orders.at(name).order; }
  const ValuationTable& table(const std::string& name) const { return s_.valuations.at(name).table; }
  const Polynomial& poly(const std::string& name) const { return s_.polys.at(name).value; }

  std::shared_ptr<const GroebnerBasis> gb(const std::string& ideal_name, const std::string& order_name) {
    auto key = std::make_pair(ideal_name, order_name);
    auto it = gbs_.find(key);
    if (it != gbs_.end()) return it->second;
    auto G = std::make_shared<const GroebnerBasis>(buchberger(ideal(ideal_name), order(order_name)));
    gbs_.emplace(key, G);
    return G;
  }

  int bound_for(const CommandStmt& c, const GroebnerBasis& G) const {
    if (c.has("bound")) return static_cast<int>(c.at("bound").number);
    if (opt_.degree_bound) return *opt_.degree_bound;
    return default_degree_bound(G);
  }

  Json basis_json(const GroebnerBasis& G, const std::vector<std::string>& vars) const {
    Json out = Json::array();
    for (const auto& g : G.elements()) out.push_back(polynomial_json(g, vars, &G.order()));
    return out;
  }

  void write_svg(const Polytope& p, const std::string& suffix, const std::string& title) {
    if (!opt_.svg_dir || p.ambient_dim != 2) return;
    char prefix[16];
    std::snprintf(prefix, sizeof prefix, "%02zu", current_index_);
    std::string file = std::string(prefix) + "-" + suffix + ".svg";
    std::filesystem::create_directories(*opt_.svg_dir);
    std::ofstream out(*opt_.svg_dir / file, std::ios::binary);
    if (!out) throw CommandError("cannot write " + (*opt_.svg_dir / file).string());
    out << svg_of(p, title);
    svg_names_.push_back(file);
    svg_files_.push_back(*opt_.svg_dir / file);
  }

  // Commands ------------------------------------------------------------

  Json groebner(const CommandStmt& c) {
    const auto& in = c.at("ideal").name;
    auto G = gb(in, c.at("order").name);
    const auto& vars = vars_of(ideal_ring(in));
    Json out;
    out["order"] = G->order().describe();
    out["basis"] = basis_json(*G, vars);
    Json lms = Json::array();
    for (const auto& a : G->leading_monomials()) lms.push_back(monomial_text(a, vars));
    out["leading_monomials"] = lms;
    return out;
  }

  Json kernel(const CommandStmt& c) {
    const std::string& source = c.at("source").name;
    std::vector<Polynomial> targets;
    for (const auto& t : c.at("targets").names) targets.push_back(poly(t));
    const std::size_t n = vars_of(source).size();
    MonomialOrder ord = c.has("order") ? order(c.at("order").name) : MonomialOrder::grevlex(n);
    GroebnerBasis G = kernel_groebner(targets, ord);
    ideals_[c.at("as").name] = G.ideal();
    Json out;
    out["ideal"] = c.at("as").name;
    out["order"] = ord.describe();
    out["generators"] = basis_json(G, vars_of(source));
    out["principal"] = G.size() == 1;
    return out;
  }

  Json normalform(const CommandStmt& c) {
    const auto& in = c.at("ideal").name;
    auto G = gb(in, c.at("order").name);
    const auto& vars = vars_of(ideal_ring(in));
    Polynomial nf = normal_form(poly(c.at("poly").name), *G);
    Json out;
    out["order"] = G->order().describe();
    out["input"] = polynomial_json(poly(c.at("poly").name), vars, &G->order());
    out["normal_form"] = polynomial_json(nf, vars, &G->order());
    out["in_ideal"] = nf.is_zero();
    return out;
  }

  Json expansion_json(const SubductionResult& r, const std::vector<std::string>& basis_names) const {
    Json out = Json::array();
    for (const auto& [alpha, coeff] : r.expansion) {
      std::string product;
      for (std::size_t j = 0; j < alpha.size(); ++j) {
        if (alpha[j] == 0) continue;
        if (!product.empty()) product += "*";
        product += basis_names[j] + (alpha[j] > 1 ? "^" + std::to_string(alpha[j]) : "");
      }
      out.push_back({{"coefficient", to_string(coeff)}, {"multi_index", alpha}, {"product", product.empty() ? "1" : product}});
    }
    return out;
  }

  Json subduct(const CommandStmt& c) {
    const auto& names = c.at("basis").names;
    const auto& ord = order(c.at("order").name);
    const auto& vars = vars_of(s_.polys.at(c.at("poly").name).ring);
    std::vector<Polynomial> basis;
    for (const auto& b : names) basis.push_back(poly(b));
    Json out;
    out["order"] = ord.describe();
    if (!c.has("ideal")) {
      const Polynomial& f = poly(c.at("poly").name);
      SubductionResult r = subduction(f, basis, ord);
      auto violations = verify_subduction(f, basis, ord, r);
      out["form"] = "ambient";
      out["expansion"] = expansion_json(r, names);
      out["remainder"] = polynomial_json(r.remainder, vars, &ord);
      out["violations"] = violations;
      return out;
    }
    auto G = gb(c.at("ideal").name, c.at("order").name);
    QuotientElement e(G, poly(c.at("poly").name));
    std::vector<QuotientElement> qb;
    std::vector<Polynomial> reps;
    for (const auto& b : basis) {
      qb.emplace_back(G, b);
      reps.push_back(qb.back().representative());
    }
    for (std::size_t j = 0; j < qb.size(); ++j)
      if (qb[j].is_zero()) throw CommandError("basis element '" + names[j] + "' is zero in the quotient");
    SubductionResult r = subduction_quotient(e, qb);
    auto violations = verify_subduction(e.representative(), reps, ord, r, G.get());
    out["form"] = "quotient";
    out["normal_form"] = polynomial_json(e.representative(), vars, &ord);
    out["expansion"] = expansion_json(r, names);
    out["remainder"] = polynomial_json(r.remainder, vars, &ord);
    out["ideal_part"] = polynomial_json(r.ideal_part, vars, &ord);
    out["violations"] = violations;
    return out;
  }

  Json sagbi_vars(const CommandStmt& c) {
    const auto& in = c.at("ideal").name;
    auto G = gb(in, c.at("order").name);
    const auto& vars = vars_of(ideal_ring(in));
    auto S = standard_variable_set(*G);
    Json out;
    out["order"] = G->order().describe();
    Json names = Json::array();
    for (auto i : S) names.push_back(vars[i]);
    out["standard_variables"] = names;
    out["complete"] = S.size() == vars.size();
    if (c.has("valuation")) {
      auto m = minimality_reduce(ideal(in), S, table(c.at("valuation").name), order(c.at("tiebreak").name));
      Json kept = Json::array(), dropped = Json::array();
      for (auto i : m.kept) kept.push_back(vars[i]);
      for (auto i : m.dropped) dropped.push_back(vars[i]);
      out["minimal"] = {{"kept", kept}, {"dropped", dropped}};
    }
    return out;
  }

  Json lattice_json(const Lattice& L) const {
    Json rows = Json::array();
    for (const auto& v : L.basis_vectors()) rows.push_back(vector_json(v));
    return {{"rank", L.rank()}, {"basis", rows}};
  }

  Json toric_lattice(const CommandStmt& c) {
    auto G = gb(c.at("ideal").name, c.at("order").name);
    Json out;
    out["order"] = G->order().describe();
    Json tor = Json::array();
    for (const auto& g : G->elements()) {
      if (g.is_monomial())
        throw CommandError("basis contains the monomial " + to_string(g, vars_of(ideal_ring(c.at("ideal").name))) +
                           "; the ideal must be prime and monomial-free");
      tor.push_back(int_vector_json(toric_exponent(g, G->order())));
    }
    out["toric_exponents"] = tor;
    Lattice K = lattice_K(*G);
    out["K"] = lattice_json(K);
    if (c.has("valuation")) {
      int bound = c.has("bound") ? static_cast<int>(c.at("bound").number)
                                 : opt_.degree_bound.value_or(std::max(1, G->max_degree()));
      Lattice Kv = lattice_K_from_valuation(table(c.at("valuation").name), bound);
      out["valuation_cross_check"] = {{"degree_bound", bound},
                                      {"lattice", lattice_json(Kv)},
                                      {"contained_in_K", K.contains(Kv)},
                                      {"contains_K", Kv.contains(K)}};
    }
    return out;
  }

  std::optional<IntVector> degrees_of(const CommandStmt& c) const {
    if (!c.has("valuation")) return std::nullopt;
    return table(c.at("valuation").name).degrees;
  }

  Json mu_cmd(const CommandStmt& c) {
    auto G = gb(c.at("ideal").name, c.at("order").name);
    MuContext ctx = build_mu_context(G, MuOptions{degrees_of(c), std::nullopt, std::nullopt});
    QuotientElement e(G, poly(c.at("poly").name));
    MuValue v = mu(e, ctx);
    const auto& vars = vars_of(ideal_ring(c.at("ideal").name));
    Json out;
    out["order"] = G->order().describe();
    out["leading_monomial"] = monomial_text(leading_monomial(e.representative(), G->order()), vars);
    out["mu"] = vector_json(v.coords);
    out["ell"] = ctx.ell;
    out["W"] = matrix_json(ctx.W);
    return out;
  }

  Json certificate_json(const KhovanskiiCertificate& cert, const GroebnerBasis& G, const ValuationTable& t,
                        const std::vector<std::string>& vars) const {
    Json out;
    out["verdict"] = to_string(cert.verdict);
    Json ties = Json::array();
    for (const auto& tp : cert.attained_twice.ties) {
      Json tie{{"element", to_string(G.elements()[tp.element], vars, G.order())},
               {"first", monomial_text(tp.first, vars)},
               {"second", monomial_text(tp.second, vars)},
               {"value", vector_json(tp.value)}};
      if (t.degrees) tie["degree"] = to_string(t.degree(tp.first));
      ties.push_back(tie);
    }
    Json at{{"pass", cert.attained_twice.pass}, {"ties", ties}};
    if (cert.attained_twice.witness)
      at["witness"] = polynomial_json(G.elements()[*cert.attained_twice.witness], vars, &G.order());
    out["attained_twice"] = at;
    if (cert.attained_twice.pass) {
      Json lv{{"pass", cert.leaves.pass}, {"degree_bound", cert.leaves.degree_bound}, {"classes", cert.leaves.classes}};
      if (cert.leaves.witness)
        lv["witness"] = {monomial_text(cert.leaves.witness->first, vars), monomial_text(cert.leaves.witness->second, vars)};
      out["leaves"] = lv;
    }
    out["standard_vars_complete"] = cert.standard_vars_complete;
    out["leaves_ok_up_to"] = cert.leaves_ok_up_to;
    if (!cert.witness_description.empty()) out["witness"] = cert.witness_description;
    return out;
  }

  Json certificate(const CommandStmt& c) {
    const auto& in = c.at("ideal").name;
    auto G = gb(in, c.at("order").name);
    const auto& t = table(c.at("valuation").name);
    MuContext ctx = build_mu_context(G, MuOptions{t.degrees, std::nullopt, std::nullopt});
    int bound = bound_for(c, *G);
    auto cert = khovanskii_certificate(*G, t, ctx, bound);
    Json out;
    out["order"] = G->order().describe();
    out["degree_bound"] = bound;
    out["certificate"] = certificate_json(cert, *G, t, vars_of(ideal_ring(in)));
    return out;
  }

  Json direct_json(const DirectBody& d) const {
    Json out;
    out["body"] = polytope_json(d.body);
    out["euclidean_volume"] = to_string(volume(d.body));
    out["degree_gcd"] = to_string(d.degree_gcd);
    out["value_lattice_index"] = d.value_lattice_index ? Json(to_string(*d.value_lattice_index)) : Json(nullptr);
    out["normalized_volume"] = d.normalized_volume ? Json(to_string(*d.normalized_volume)) : Json(nullptr);
    return out;
  }

  Json nobody_direct_cmd(const CommandStmt& c) {
    DirectBody d = nobody_direct_report(table(c.at("valuation").name));
    write_svg(d.body, "nobody-direct", "conv{nu'(g_i)/d_i}");
    return direct_json(d);
  }

  Json alg1_json(const NOBodyReport& r) const {
    Json out;
    out["m"] = r.m;
    out["ell"] = r.ell;
    out["W"] = matrix_json(r.W);
    out["W_inverse"] = matrix_json(r.Winv);
    out["V"] = matrix_json(r.V);
    out["L_prime"] = matrix_json(r.L_prime);
    out["body"] = polytope_json(r.body);
    out["euclidean_volume"] = to_string(r.euclidean_volume);
    out["lattice_det"] = to_string(r.lattice_det);
    out["degree_gcd"] = to_string(r.degree_gcd);
    out["d_norm_squared"] = to_string(r.d_norm_sq);
    out["factorial"] = to_string(r.factorial);
    out["normalized_volume"] = to_string(r.normalized_volume);
    out["point_body"] = r.point_body;
    out["degree_normalized_view"] = matrix_json(r.degree_normalized_view);
    return out;
  }

  // Normalized volume under three randomized extensions.
  Json invariance_json(const MuContext& ctx, const Rational& reference) const {
    Json vols = Json::array();
    bool same = true;
    for (std::uint64_t k = 0; k < 3; ++k) {
      auto ext = randomized_extension(ctx, opt_.seed + k);
      MuContext alt = ctx.gb ? build_mu_context(ctx.gb, MuOptions{ctx.degrees, ext, std::nullopt})
                             : build_mu_context(ctx.K, MuOptions{ctx.degrees, ext, std::nullopt});
      Rational v = algorithm1_from_context(alt).normalized_volume;
      same = same && v == reference;
      vols.push_back(to_string(v));
    }
    return {{"seed", opt_.seed}, {"normalized_volumes", vols}, {"identical", same}};
  }

  Json nobody_alg1(const CommandStmt& c) {
    std::optional<RatMatrix> W;
    if (c.has("W")) W = c.at("W").matrix;
    Json out;
    if (c.has("lattice")) {
      const IntVector& d = c.at("degrees").vector;
      const RatMatrix& L = c.at("lattice").matrix;
      std::vector<RatVector> gens;
      for (std::size_t i = 0; i < L.rows(); ++i) gens.push_back(L.row(i));
      Lattice K = Lattice::from_generators(gens, d.size());
      MuContext ctx = build_mu_context(K, MuOptions{d, std::nullopt, W});
      NOBodyReport r = algorithm1_from_context(ctx);
      out["input"] = "lattice";
      out["report"] = alg1_json(r);
      if (!W) out["invariance"] = invariance_json(ctx, r.normalized_volume);
      write_svg(r.body, "nobody-alg1", "conv(V)");
      return out;
    }
    auto G = gb(c.at("ideal").name, c.at("order").name);
    const auto& t = table(c.at("valuation").name);
    int bound = bound_for(c, *G);
    NOBodyReport r = algorithm1_volume(G, t, Algorithm1Options{W, std::nullopt, bound});
    out["input"] = "groebner";
    out["order"] = G->order().describe();
    out["degree_bound"] = bound;
    out["certificate"] = certificate_json(*r.certificate, *G, t, vars_of(ideal_ring(c.at("ideal").name)));
    out["report"] = alg1_json(r);
    if (!W) {
      MuContext ctx = build_mu_context(G, MuOptions{t.degrees, std::nullopt, std::nullopt});
      out["invariance"] = invariance_json(ctx, r.normalized_volume);
    }
    write_svg(r.body, "nobody-alg1", "conv(V)");
    return out;
  }

  Json affine_check(const CommandStmt& c) {
    auto G = gb(c.at("ideal").name, c.at("order").name);
    const auto& t = table(c.at("valuation").name);
    int bound = bound_for(c, *G);
    NOBodyReport r = algorithm1_volume(G, t, Algorithm1Options{std::nullopt, std::nullopt, bound});
    DirectBody d = nobody_direct_report(t);
    MuContext ctx = build_mu_context(G, MuOptions{t.degrees, std::nullopt, std::nullopt});
    PhiResult phi = phi_transformation(t, ctx);
    AffineCheck chk = affine_equivalence(r.body, d.body, phi.phi);
    Json out;
    out["order"] = G->order().describe();
    out["degree_bound"] = bound;
    out["phi"] = matrix_json(phi.phi);
    out["phi_consistent"] = phi.consistent();
    out["pass"] = chk.pass;
    if (!chk.reason.empty()) out["reason"] = chk.reason;
    if (chk.map) out["map"] = {{"M", matrix_json(chk.map->M)}, {"b", vector_json(chk.map->b)}};
    out["mu_body"] = polytope_json(r.body);
    out["nu_body"] = polytope_json(d.body);
    out["normalized_volume_mu"] = to_string(r.normalized_volume);
    out["normalized_volume_nu"] = d.normalized_volume ? Json(to_string(*d.normalized_volume)) : Json(nullptr);
    write_svg(r.body, "affine-check-mu", "conv(V)");
    write_svg(d.body, "affine-check-nu", "conv{nu'(g_i)/d_i}");
    return out;
  }

  const Session& s_;
  RunOptions opt_;
  std::map<std::string, Ideal> ideals_;
  std::map<std::pair<std::string, std::string>, std::shared_ptr<const GroebnerBasis>> gbs_;
  std::size_t current_index_ = 0;
  std::vector<std::string> svg_names_;
  std::vector<std::filesystem::path> svg_files_;
};

}  // namespace

RunResult run_session(const Session& session, const RunOptions& options) { return Runner(session, options).run(); }

}  // namespace khb
