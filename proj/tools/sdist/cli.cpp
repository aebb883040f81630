#include "sdist/cli.hpp"

#include "sdist/io.hpp"

#include <sdist/bounds.hpp>
#include <sdist/errors.hpp>
#include <sdist/families.hpp>
#include <sdist/groebner.hpp>
#include <sdist/hilbert.hpp>
#include <sdist/parse.hpp>
#include <sdist/search.hpp>
#include <sdist/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

namespace sdist::cli {

namespace {

using nlohmann::json;

json integer_json(const Integer& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

json point_json(const Point& p) {
  json out = json::array();
  for (const auto& x : p) out.push_back(to_string(x));
  return out;
}

json polynomials_json(const std::vector<Polynomial>& polys, TermOrder order) {
  json out = json::array();
  for (const auto& f : polys) out.push_back(format_polynomial(f, order));
  return out;
}

TermOrder parse_order(const std::string& name) {
  if (name == "lex") return TermOrder::Lex;
  if (name == "deglex") return TermOrder::DegLex;
  throw InputError("--order must be lex or deglex, got '" + name + "'");
}

std::vector<Rational> parse_value_list(const std::string& text, const std::string& option) {
  std::vector<Rational> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    try {
      values.push_back(parse_rational(item));
    } catch (const ParseError&) {
      throw InputError(option + ": bad value '" + item + "'");
    }
  }
  if (values.empty()) throw InputError(option + ": empty value list");
  return values;
}

IdealFile load_ideal(const std::string& path, std::size_t arity) {
  return parse_ideal(read_file(path), arity, path);
}

PointSet load_points(const std::string& path) { return parse_point_set(read_file(path), path); }

struct BoundOptions {
  std::string family;
  long n = 0, s = 0, d = 0, p = 0, q = 0;
  std::string ideal;
  std::size_t arity = 0;
  bool grid = false;
};

struct HilbertOptions {
  std::string ideal;
  std::size_t arity = 0;
  long s = -1;
  bool estimate = false;
  long s_lo = 0, s_hi = 10;
};

struct BasisOptions {
  std::string input;
  std::string order = "deglex";
  std::size_t arity = 0;
};

struct VerifyOptions {
  std::string points;
  std::string family;
  std::string ideal;
  long d = 0, p = 0, q = 0;
  bool pp_check = false;
  long s = -1;
  std::string poly;
};

struct SearchOptions {
  std::string generator;
  long n = 0, d = 0, q = 2, s = 0;
  std::string values;
  std::size_t cap = 0;
  std::size_t count = 0;
  std::string radius2 = "1";
  std::optional<std::uint64_t> seed;
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int bound(const BoundOptions& o, const CLI::App& cmd) {
    BoundFamily fam{parse_family(o.family), {}, {}};
    json params{{"family", o.family}, {"s", o.s}};
    if (cmd.count("--d")) fam.parameters["d"] = o.d;
    if (cmd.count("--p")) fam.parameters["p"] = o.p;
    if (cmd.count("--q")) fam.parameters["q"] = o.q;
    if (fam.family == Family::GeneralIdeal) {
      if (o.ideal.empty()) throw InputError("--family general needs --ideal FILE");
      IdealFile ideal = load_ideal(o.ideal, o.arity);
      if (cmd.count("--n") && static_cast<std::size_t>(o.n) != ideal.arity) {
        throw InputError("--n " + std::to_string(o.n) + " does not match the ideal arity " +
                         std::to_string(ideal.arity));
      }
      fam.generators = std::move(ideal.generators);
      fam.parameters["n"] = static_cast<long>(ideal.arity);
      params["ideal"] = o.ideal;
    } else {
      if (!cmd.count("--n")) throw InputError("--n is required for --family " + o.family);
      fam.parameters["n"] = o.n;
    }
    for (const auto& [k, v] : fam.parameters) params[k] = v;
    report_["parameters"] = params;

    json results;
    if (o.grid) {
      const bool from_zero = fam.family == Family::Box || fam.family == Family::Permutation ||
                             fam.family == Family::Uniform || fam.family == Family::GeneralIdeal;
      json table = json::array();
      for (long s = from_zero ? 0 : 1; s <= o.s; ++s) {
        const BoundReport r = evaluate_bound(fam, s);
        table.push_back({{"s", s}, {"value", integer_json(r.value)}, {"formula", r.formula_text}});
      }
      results["table"] = table;
      summary_ = "bound " + o.family + ": tabulated " + std::to_string(table.size()) + " values";
    } else {
      const BoundReport r = evaluate_bound(fam, o.s);
      results["value"] = integer_json(r.value);
      results["formula"] = r.formula_text;
      summary_ = "bound " + o.family + " = " + to_string(r.value) + "  [" + r.formula_text + "]";
    }
    report_["results"] = results;
    return kExitOk;
  }

  int hilbert(const HilbertOptions& o) {
    const IdealFile ideal = load_ideal(o.ideal, o.arity);
    report_["parameters"] = {{"ideal", o.ideal}, {"arity", ideal.arity}};
    json results;
    int code = kExitOk;
    if (o.s >= 0) {
      report_["parameters"]["s"] = o.s;
      const HilbertTable table = hilbert_table(ideal.generators, ideal.arity, static_cast<unsigned>(o.s));
      json values = json::array();
      for (const auto& v : table.values()) values.push_back(integer_json(v));
      results["h"] = integer_json(table(static_cast<unsigned>(o.s)));
      results["table"] = values;
      summary_ = "h(" + std::to_string(o.s) + ") = " + to_string(table(static_cast<unsigned>(o.s)));
    }
    if (o.estimate) {
      if (o.s_lo < 0 || o.s_hi < o.s_lo) throw InputError("--s-lo/--s-hi must satisfy 0 <= s-lo <= s-hi");
      report_["parameters"]["s_lo"] = o.s_lo;
      report_["parameters"]["s_hi"] = o.s_hi;
      const auto est = hilbert_poly_estimate(ideal.generators, ideal.arity, static_cast<unsigned>(o.s_lo),
                                             static_cast<unsigned>(o.s_hi));
      json e{{"stabilized", est.stabilized}};
      json values = json::array();
      for (const auto& v : est.values) values.push_back(integer_json(v));
      e["values"] = values;
      if (est.stabilized) {
        e["dimension"] = est.dimension;
        e["degree"] = integer_json(est.degree);
        e["stable_from"] = est.stable_from;
        json coeffs = json::array();
        for (const auto& c : est.coefficients) coeffs.push_back(to_string(c));
        e["coefficients"] = coeffs;
        if (!summary_.empty()) summary_ += "; ";
        summary_ += "Hilbert polynomial: dimension " + std::to_string(est.dimension) + ", degree " +
                    to_string(est.degree);
      } else {
        e["diagnostic"] = est.diagnostic;
        err_ << "error: " << est.diagnostic << "\n";
        code = kExitHypothesis;
      }
      results["estimate"] = e;
    }
    if (o.s < 0 && !o.estimate) throw InputError("hilbert needs --s or --estimate-poly");
    report_["results"] = results;
    return code;
  }

  int groebner(const BasisOptions& o) {
    const TermOrder order = parse_order(o.order);
    const IdealFile ideal = load_ideal(o.input, o.arity);
    report_["parameters"] = {{"ideal", o.input}, {"order", o.order}, {"arity", ideal.arity}};
    const GroebnerBasis basis = buchberger(ideal.generators, order);
    json leads = json::array();
    for (const auto& m : basis.leading_monomials()) leads.push_back(to_string(m));
    report_["results"] = {{"basis", polynomials_json(basis.elements(), order)},
                          {"leading_monomials", leads},
                          {"size", basis.size()}};
    summary_ = "reduced Groebner basis with " + std::to_string(basis.size()) + " elements";
    return kExitOk;
  }

  int vanishing(const BasisOptions& o) {
    const TermOrder order = parse_order(o.order);
    const PointSet points = load_points(o.input);
    report_["parameters"] = {{"points", o.input}, {"order", o.order}, {"arity", points.arity()},
                             {"size", points.size()}};
    const GroebnerBasis basis = vanishing_ideal(points, order);
    const auto standard = standard_monomials_leq(basis, static_cast<unsigned>(points.size()));
    json sm = json::array();
    for (const auto& m : standard.monomials) sm.push_back(to_string(m));
    report_["results"] = {{"basis", polynomials_json(basis.elements(), order)},
                          {"standard_monomials", sm},
                          {"standard_count", standard.monomials.size()}};
    summary_ = "I(X): " + std::to_string(basis.size()) + " generators, " +
               std::to_string(standard.monomials.size()) + " standard monomials";
    return kExitOk;
  }

  int verify(const VerifyOptions& o, const CLI::App& cmd) {
    const PointSet points = load_points(o.points);
    json params{{"points", o.points}, {"size", points.size()}, {"n", points.arity()}};
    if (o.family.empty() && o.ideal.empty()) throw InputError("verify needs --family or --ideal");

    BoundFamily fam{o.family.empty() ? Family::GeneralIdeal : parse_family(o.family), {}, {}};
    params["family"] = to_string(fam.family);
    if (cmd.count("--d")) fam.parameters["d"] = o.d;
    if (cmd.count("--p")) fam.parameters["p"] = o.p;
    if (cmd.count("--q")) fam.parameters["q"] = o.q;
    if (!o.ideal.empty()) {
      fam.generators = load_ideal(o.ideal, points.arity()).generators;
      params["ideal"] = o.ideal;
    }
    for (const auto& [k, v] : fam.parameters) params[k] = v;

    const DistanceBoundReport check = check_distance_bound(points, fam);
    json results{{"s", check.s},
                 {"size", check.size},
                 {"bound", integer_json(check.bound.value)},
                 {"formula", check.bound.formula_text},
                 {"holds", check.holds}};
    summary_ = "s = " + std::to_string(check.s) + ", |A| = " + std::to_string(check.size) +
               ", bound = " + to_string(check.bound.value) + (check.holds ? ", holds" : ", VIOLATED");
    int code = check.holds ? kExitOk : kExitHypothesis;

    if (o.pp_check) {
      PpCheckReport pp;
      if (o.poly.empty()) {
        pp = check_canonical_pp(points);
        params["pp_polynomial"] = "canonical";
      } else {
        const IdealFile p = load_ideal(o.poly, 2 * points.arity());
        if (p.generators.size() != 1) throw InputError(o.poly + ": expected exactly one polynomial");
        if (o.s < 0) throw InputError("--pp-check with --poly needs --s");
        pp = check_pp_theorem(points, p.generators.front(), static_cast<unsigned>(o.s));
        params["pp_polynomial"] = o.poly;
      }
      params["pp_s"] = pp.s;
      results["pp"] = {{"s", pp.s},
                       {"h", pp.h_value},
                       {"rank", pp.rank},
                       {"r_plus", pp.inertia.r_plus},
                       {"r_minus", pp.inertia.r_minus},
                       {"r_zero", pp.inertia.r_zero},
                       {"symmetric", pp.symmetric_input},
                       {"rank_ok", pp.rank_ok},
                       {"inertia_ok", pp.inertia_ok}};
      summary_ += "; pp: rank " + std::to_string(pp.rank) + " <= 2h = " + std::to_string(2 * pp.h_value) +
                  ", max(r+,r-) = " + std::to_string(std::max(pp.inertia.r_plus, pp.inertia.r_minus)) +
                  " <= h = " + std::to_string(pp.h_value);
      if (!pp.rank_ok || !pp.inertia_ok) code = kExitHypothesis;
    }
    report_["parameters"] = params;
    report_["results"] = results;
    return code;
  }

  int search(const SearchOptions& o, const CLI::App& cmd) {
    json params{{"generator", o.generator}, {"s", o.s}};
    if (o.s < 0) throw InputError("--s must be non-negative");
    auto need = [&](const char* opt) {
      if (!cmd.count(opt)) throw InputError("--generator " + o.generator + " needs " + opt);
    };
    std::optional<PointSet> candidates;
    std::optional<Integer> bound;
    if (o.generator == "box") {
      need("--n");
      std::vector<Rational> values;
      if (cmd.count("--values")) {
        values = parse_value_list(o.values, "--values");
        params["values"] = o.values;
      } else {
        for (long v = 0; v < o.q; ++v) values.emplace_back(v);
        params["q"] = o.q;
      }
      candidates = generate_family(BoxSpec{std::vector<std::vector<Rational>>(o.n, values)});
      bound = box_bound(o.n, static_cast<long>(values.size()), o.s);
    } else if (o.generator == "uniform") {
      need("--n");
      need("--d");
      params["d"] = o.d;
      candidates = generate_family(UniformLayerSpec{static_cast<std::size_t>(o.n), static_cast<std::size_t>(o.d)});
      if (o.s <= std::min(o.d, o.n - o.d)) bound = uniform_bound(o.n, o.d, o.s);
    } else if (o.generator == "perm") {
      std::vector<Rational> values;
      if (cmd.count("--values")) {
        values = parse_value_list(o.values, "--values");
        params["values"] = o.values;
      } else {
        need("--n");
        for (long v = 1; v <= o.n; ++v) values.emplace_back(v);
      }
      candidates = generate_family(PermutationSpec{values});
      bound = permutation_bound(static_cast<long>(values.size()), o.s);
    } else if (o.generator == "even-weight") {
      need("--n");
      candidates = generate_family(EvenWeightSpec{static_cast<std::size_t>(o.n)});
      bound = box_bound(o.n, 2, o.s);
    } else if (o.generator == "sphere") {
      need("--n");
      need("--count");
      std::uint64_t seed = 0;
      if (o.seed) {
        seed = *o.seed;
      } else if (const char* env = std::getenv("SDIST_SEED")) {
        try {
          seed = std::stoull(env);
        } catch (const std::exception&) {
          throw InputError("SDIST_SEED must be an unsigned integer, got '" + std::string(env) + "'");
        }
      }
      Rational r2;
      try {
        r2 = parse_rational(o.radius2);
      } catch (const ParseError&) {
        throw InputError("--radius2: bad value '" + o.radius2 + "'");
      }
      params["count"] = o.count;
      params["radius2"] = to_string(r2);
      params["seed"] = seed;
      candidates = generate_family(
          SphereSampleSpec{Point(static_cast<std::size_t>(o.n), Rational(0)), r2, o.count, seed});
      if (o.n >= 2 && o.s >= 1) bound = dgs_bound(o.n, o.s);
    } else {
      throw InputError("unknown generator '" + o.generator + "'");
    }
    params["n"] = candidates->arity();
    if (o.cap) params["cap"] = o.cap;
    report_["parameters"] = params;

    const SearchResult result = brute_force_max_sdist(*candidates, static_cast<std::size_t>(o.s), o.cap);
    json witness = json::array();
    for (std::size_t i : result.witness) witness.push_back(point_json((*candidates)[i]));
    json results{{"candidates", candidates->size()}, {"max_size", result.max_size}, {"witness", witness}};
    summary_ = "largest " + std::to_string(o.s) + "-distance subset: " + std::to_string(result.max_size) +
               " of " + std::to_string(candidates->size()) + " candidates";
    int code = kExitOk;
    if (bound) {
      const bool holds = Integer(static_cast<unsigned long>(result.max_size)) <= *bound;
      results["bound"] = integer_json(*bound);
      results["holds"] = holds;
      summary_ += ", bound " + to_string(*bound);
      if (!holds) code = kExitHypothesis;
    }
    report_["results"] = results;
    return code;
  }

  json& report() { return report_; }
  const std::string& summary() const { return summary_; }

 private:
  std::ostream& out_;
  std::ostream& err_;
  json report_ = json::object();
  std::string summary_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact upper bounds for s-distance sets via Groebner bases and Hilbert functions", "sdist"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Include wall-clock timing_ms in the report");

  BoundOptions bo;
  auto* bound = app.add_subcommand("bound", "Evaluate a closed-form or Hilbert-function bound");
  bound->add_option("--family", bo.family, "bbs|dgs|hypersurface|spheres|box|perm|uniform|general")
      ->required()
      ->check(CLI::IsMember({"bbs", "dgs", "hypersurface", "spheres", "box", "perm", "uniform", "general"}));
  bound->add_option("--n", bo.n, "Ambient dimension");
  bound->add_option("--s", bo.s, "Number of distances")->required();
  bound->add_option("--d", bo.d, "Hypersurface degree / layer weight");
  bound->add_option("--p", bo.p, "Number of spheres");
  bound->add_option("--q", bo.q, "Box side size");
  bound->add_option("--ideal", bo.ideal, "Ideal file for --family general");
  bound->add_option("--arity", bo.arity, "Override the inferred ideal arity");
  bound->add_flag("--grid", bo.grid, "Tabulate the bound for every s up to --s");

  HilbertOptions ho;
  auto* hilbert = app.add_subcommand("hilbert", "Affine Hilbert function of an ideal");
  hilbert->add_option("--ideal", ho.ideal, "Ideal file")->required();
  hilbert->add_option("--arity", ho.arity, "Override the inferred arity");
  hilbert->add_option("--s", ho.s, "Degree bound");
  hilbert->add_flag("--estimate-poly", ho.estimate, "Estimate the eventual Hilbert polynomial");
  hilbert->add_option("--s-lo", ho.s_lo, "Window start for --estimate-poly");
  hilbert->add_option("--s-hi", ho.s_hi, "Window end for --estimate-poly");

  BasisOptions go;
  auto* groebner = app.add_subcommand("groebner", "Reduced Groebner basis of an ideal");
  groebner->add_option("--ideal", go.input, "Ideal file")->required();
  groebner->add_option("--order", go.order, "lex|deglex");
  groebner->add_option("--arity", go.arity, "Override the inferred arity");

  BasisOptions vo;
  auto* vanishing = app.add_subcommand("vanishing-ideal", "Reduced Groebner basis of I(X) for a point set");
  vanishing->add_option("--points", vo.input, "Point file")->required();
  vanishing->add_option("--order", vo.order, "lex|deglex");

  VerifyOptions wo;
  auto* verify = app.add_subcommand("verify", "Check a bound (and optionally the rank/inertia inequalities) on a point set");
  verify->add_option("--points", wo.points, "Point file")->required();
  verify->add_option("--family", wo.family, "Bound family")
      ->check(CLI::IsMember({"bbs", "dgs", "hypersurface", "spheres", "box", "perm", "uniform", "general"}));
  verify->add_option("--ideal", wo.ideal, "Ideal file whose generators must vanish on the points");
  verify->add_option("--d", wo.d, "Hypersurface degree / layer weight");
  verify->add_option("--p", wo.p, "Number of spheres");
  verify->add_option("--q", wo.q, "Box side size");
  verify->add_flag("--pp-check", wo.pp_check, "Check rank(M) <= 2h(s) and max(r+, r-) <= h(s)");
  verify->add_option("--s", wo.s, "s for --pp-check with --poly");
  verify->add_option("--poly", wo.poly, "File with p(x, y) in 2n variables (default: distance product)");

  SearchOptions so;
  auto* search = app.add_subcommand("search", "Exhaustive search for the largest s-distance subset");
  search->add_option("--generator", so.generator, "box|uniform|perm|even-weight|sphere")
      ->required()
      ->check(CLI::IsMember({"box", "uniform", "perm", "even-weight", "sphere"}));
  search->add_option("--s", so.s, "Number of distances")->required();
  search->add_option("--n", so.n, "Dimension");
  search->add_option("--d", so.d, "Layer weight (uniform)");
  search->add_option("--q", so.q, "Values 0..q-1 per coordinate (box)");
  search->add_option("--values", so.values, "Comma-separated coordinate values (box, perm)");
  search->add_option("--cap", so.cap, "Stop once a subset of this size is found");
  search->add_option("--count", so.count, "Number of sampled points (sphere)");
  search->add_option("--radius2", so.radius2, "Squared radius, a rational square (sphere)");
  search->add_option("--seed", so.seed, "Sampling seed (default: $SDIST_SEED or 0)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  Runner runner(out, err);
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  std::string verb;
  try {
    if (bound->parsed()) {
      verb = "bound";
      code = runner.bound(bo, *bound);
    } else if (hilbert->parsed()) {
      verb = "hilbert";
      code = runner.hilbert(ho);
    } else if (groebner->parsed()) {
      verb = "groebner";
      code = runner.groebner(go);
    } else if (vanishing->parsed()) {
      verb = "vanishing-ideal";
      code = runner.vanishing(vo);
    } else if (verify->parsed()) {
      verb = "verify";
      code = runner.verify(wo, *verify);
    } else if (search->parsed()) {
      verb = "search";
      code = runner.search(so, *search);
    }
  } catch (const HypothesisError& e) {
    err << "error: hypothesis violated: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }

  auto& report = runner.report();
  report["verb"] = verb;
  if (timing) {
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  out << report.dump(2) << "\n";
  if (!runner.summary().empty()) err << runner.summary() << "\n";
  return code;
}

}  // namespace sdist::cli
