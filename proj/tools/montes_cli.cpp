// Command-line front end: factor, irreducible, invariants, polygon.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "montes/json_io.hpp"
#include "montes/parse.hpp"

using namespace montes;

namespace {

struct Options {
  std::string prime;
  std::string poly;
  long precision = 0;
  std::uint64_t seed = 0;
  bool text = false;
  bool no_lift = false;
  long level = 1;
  std::string type_file;
  std::size_t leaf = 0;
  std::string phi;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Prime read_prime(const Options& o) {
  Integer p;
  if (o.prime.empty() || p.set_str(o.prime, 10) != 0) throw UsageError("--prime must be a decimal integer");
  try {
    return Prime(p);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

IntPoly read_poly(const Options& o) { return parse_poly(o.poly); }

void emit(const Json& j, bool text, const std::string& plain) {
  if (text)
    std::cout << plain;
  else
    std::cout << j.dump(2) << "\n";
}

std::string slope_text(const OMLevel& L) {
  if (L.exact) return "-inf";
  return to_string(Rational(-L.h, L.e));
}

int cmd_factor(const Options& o) {
  const Prime p = read_prime(o);
  const IntPoly F = read_poly(o);
  MontesOutput out = montes::montes(F, p, o.seed);
  const long nu = o.precision > 0 ? o.precision : out.delta.value() + 1;
  std::optional<LiftedFactorization> lifted;
  if (!o.no_lift) lifted = lift_factorization(F, out, static_cast<unsigned long>(nu));

  Json j;
  j["n"] = out.n;
  j["p"] = p.value().get_str();
  j["delta"] = out.delta.value();
  j["nu_used"] = nu;
  Json leaves = Json::array();
  std::ostringstream txt;
  txt << "F = " << F << "  p = " << p.value().get_str() << "  n = " << out.n << "  delta = " << out.delta << "\n";
  txt << out.reps.size() << " leaf(s)\n";
  for (std::size_t s = 0; s < out.reps.size(); ++s) {
    const OMRep& rep = out.reps[s];
    Json leaf;
    leaf["depth"] = rep.depth();
    leaf["exact"] = rep.exact();
    Json t = to_json(rep.type);
    leaf["psi0"] = t["psi0"];
    leaf["levels"] = t["levels"];
    leaf["okutsu_factor"] = to_json(rep.okutsu_factor());
    leaf["lifted_factor"] = lifted ? to_json(lifted->factors[s]) : Json(nullptr);
    leaves.push_back(leaf);

    txt << "leaf " << s << ": depth " << rep.depth() << (rep.exact() ? " (exact)" : "") << "\n";
    txt << "  psi0 = " << to_string(rep.type.psi0()) << "\n";
    for (std::size_t i = 1; i <= rep.type.order(); ++i) {
      const OMLevel& L = rep.type.level(i);
      txt << "  level " << i << ": phi = " << L.phi << ", lambda = " << slope_text(L);
      if (!L.exact) txt << ", psi = " << to_string(L.psi);
      txt << ", V = " << L.V << "\n";
    }
    if (lifted) txt << "  factor mod p^" << nu << ": " << lifted->factors[s] << "\n";
  }
  j["leaves"] = leaves;
  emit(j, o.text, txt.str());
  return 0;
}

int cmd_irreducible(const Options& o) {
  const Prime p = read_prime(o);
  const IntPoly F = read_poly(o);
  IrreducibilityResult r = irreducibility_test(F, p, o.seed);
  const long nu = irreducibility_precision(F, p);
  Json j;
  j["irreducible"] = r.irreducible;
  j["witness"] = to_json(r.witness);
  j["nu_needed"] = nu;
  std::ostringstream txt;
  txt << (r.irreducible ? "irreducible" : "reducible") << " (witness: " << kind_name(r.witness.kind) << " at level "
      << r.witness.level << "), precision needed: " << nu << "\n";
  emit(j, o.text, txt.str());
  return 0;
}

int cmd_invariants(const Options& o) {
  const Prime p = read_prime(o);
  const IntPoly F = read_poly(o);
  MontesOutput out = montes::montes(F, p, o.seed);
  if (out.reps.size() != 1) throw Error(ErrorKind::NotIrreducible, "invariants are reported for irreducible input");
  InvariantReport R = okutsu_data(out.reps[0], out.delta);
  Json j = to_json(R);
  j["irreducibility_precision"] = irreducibility_precision(F, p);
  j["factorization_precision"] = factorization_precision(F, p);
  std::ostringstream txt;
  txt << "n = " << R.n << ", depth = " << R.depth << ", e = " << R.e << ", f = " << R.f << "\n"
      << "mu = " << to_string(R.mu) << ", delta0 = " << to_string(R.delta0) << ", delta = " << R.delta
      << ", rho = " << to_string(R.rho) << "\nwidth = [";
  for (std::size_t i = 0; i < R.width.size(); ++i) txt << (i ? ", " : "") << R.width[i];
  txt << "]\n";
  emit(j, o.text, txt.str());
  return 0;
}

Json polygon_json(const OMType& t, const IntPoly& phi, const IntPoly& F, std::string& ascii) {
  Expansion ex = expand(t, t.order() + 1, phi, F);
  NewtonPolygon N = lower_hull(ex.cloud());
  ascii = render_ascii(N, ex.cloud());
  Json j;
  j["level"] = t.order() + 1;
  j["phi"] = to_json(phi);
  Json pts = Json::array();
  for (const auto& pt : ex.cloud())
    pts.push_back({pt.x, pt.y.is_infinite() ? Json("inf") : Json(pt.y.value())});
  j["points"] = pts;
  Json sides = Json::array();
  for (const auto& s : N.sides()) sides.push_back(to_json(s));
  j["sides"] = sides;
  j["ascii"] = ascii;
  return j;
}

int cmd_polygon(const Options& o) {
  const Prime p = read_prime(o);
  const IntPoly F = read_poly(o);
  validate_input(F, p);
  Json j = Json::array();
  std::string all;
  auto add = [&](const OMType& t, const IntPoly& phi) {
    std::string ascii;
    j.push_back(polygon_json(t, phi, F, ascii));
    all += "N_" + std::to_string(t.order() + 1) + " w.r.t. phi = " + to_string(phi) + "\n" + ascii;
  };
  if (!o.type_file.empty()) {
    std::ifstream in(o.type_file);
    if (!in) throw UsageError("cannot read " + o.type_file);
    Json doc = Json::parse(in);
    const Json& leaves = doc.at("leaves");
    if (o.leaf >= leaves.size()) throw UsageError("--leaf out of range");
    OMType t = om_type_from_json(leaves[o.leaf], p);
    if (o.level < 1 || static_cast<std::size_t>(o.level) > t.order()) throw UsageError("--level out of range");
    const auto i = static_cast<std::size_t>(o.level);
    add(t.truncated(i - 1), t.level(i).phi);
  } else if (!o.phi.empty()) {
    IntPoly phi = parse_poly(o.phi);
    if (!phi.is_monic()) throw Error(ErrorKind::NonMonic, "phi must be monic");
    FieldHandle Fp = Field::prime_field(p);
    add(OMType(p, reduce_mod_p(phi, Fp)), phi);
  } else {
    FieldHandle Fp = Field::prime_field(p);
    for (const auto& fac : ff_factor(reduce_mod_p(F, Fp), o.seed)) add(OMType(p, fac.factor), lift_to_z(fac.factor));
  }
  emit(j, o.text, all);
  return 0;
}

int fail(int code, const std::string& kind, const std::string& msg, bool text) {
  if (text) {
    std::cerr << "error (" << kind << "): " << msg << "\n";
  } else {
    Json j;
    j["error"] = {{"kind", kind}, {"message", msg}};
    std::cout << j.dump(2) << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic polynomial factorization"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--prime", o.prime, "prime p")->required();
    c->add_option("--poly", o.poly, "monic polynomial, e.g. \"x^4+5*x^2+25\" or \"[25,0,5,0,1]\"")->required();
    c->add_option("--seed", o.seed, "seed for randomized finite-field factorization");
    auto* fj = c->add_flag("--json", "JSON output (default)");
    auto* ft = c->add_flag("--text", o.text, "plain text output");
    fj->excludes(ft);
  };
  auto* factor = app.add_subcommand("factor", "OM factorization and lifted factors");
  common(factor);
  factor->add_option("--precision,--nu", o.precision, "target precision nu (default delta+1)")->check(CLI::PositiveNumber);
  factor->add_flag("--no-lift", o.no_lift, "skip the lifting stage");
  auto* irred = app.add_subcommand("irreducible", "irreducibility test");
  common(irred);
  auto* inv = app.add_subcommand("invariants", "Okutsu invariants of an irreducible polynomial");
  common(inv);
  auto* poly = app.add_subcommand("polygon", "ASCII Newton polygon");
  common(poly);
  poly->add_option("--level", o.level, "level i of the supplied type");
  poly->add_option("--type", o.type_file, "JSON output of a previous factor run");
  poly->add_option("--leaf", o.leaf, "leaf index in the supplied JSON");
  poly->add_option("--phi", o.phi, "explicit first-order phi");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(2, "UsageError", e.what(), o.text);
  }

  try {
    if (factor->parsed()) return cmd_factor(o);
    if (irred->parsed()) return cmd_irreducible(o);
    if (inv->parsed()) return cmd_invariants(o);
    return cmd_polygon(o);
  } catch (const UsageError& e) {
    return fail(2, "UsageError", e.what(), o.text);
  } catch (const ParseError& e) {
    return fail(2, kind_name(e.kind()), e.what(), o.text);
  } catch (const Error& e) {
    return fail(1, kind_name(e.kind()), e.what(), o.text);
  } catch (const nlohmann::json::exception& e) {
    return fail(2, "UsageError", e.what(), o.text);
  }
}
