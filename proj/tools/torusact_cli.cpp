// torusact: JSON front end to the library. Exit 0 on success, 1 when a
// verification fails, 2 on malformed input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "torusact/torusact.hpp"

namespace {

  using torusact::io::json;

  constexpr int exit_ok        = 0;
  constexpr int exit_failed    = 1;
  constexpr int exit_malformed = 2;

  // Inline JSON when the argument starts with '{' or '[', else a file path.
  json read_json(std::string const& arg) {
    std::string text = arg;
    auto first = arg.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || (arg[first] != '{' && arg[first] != '[')) {
      std::ifstream in(arg);
      if (!in) {
        torusact::raise(torusact::errc::parse_error, "cannot read '" + arg + "'");
      }
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    try {
      return json::parse(text);
    } catch (json::exception const& e) {
      torusact::raise(torusact::errc::parse_error, e.what());
    }
  }

  bool parse_bool(std::string const& s) {
    if (s == "true" || s == "1") {
      return true;
    }
    if (s == "false" || s == "0") {
      return false;
    }
    torusact::raise(torusact::errc::parse_error, "expected true or false, got '" + s + "'");
  }

  torusact::TorsionOrder parse_order(std::string const& s) {
    if (s == "unbounded") {
      return std::nullopt;
    }
    return torusact::parse_integer(s);
  }

  std::vector<torusact::Dyadic> parse_profile(std::string const& s) {
    std::vector<torusact::Dyadic> out;
    std::stringstream             ss(s);
    std::string                   item;
    while (std::getline(ss, item, ',')) {
      out.push_back(torusact::parse_dyadic(item));
    }
    return out;
  }

  struct Options {
    std::string output;
    // gen-element
    std::uint64_t n = 0, sym = 0, seed = 0, size = 8;
    std::int64_t  q = 1;
    std::string   profile;
    bool          random = false;
    // certificates
    std::string   cert, cert_g, cert_f, element;
    std::uint64_t degree = 4, max_pairs = 2, max_depth = 3, budget = 0;
    bool          search = false;
    std::int64_t  m = 1, k = 1;
    // loops
    std::string loop, rotation;
    // matrices, manifolds
    std::string   matrix, graph, order1, order2;
    std::string   irreducible, euler_injective, solid_torus;
    std::string   kk, nn;
    std::uint64_t degree_h = 0;
  };

  int emit(Options const& o, json const& out, int code) {
    std::string const text = out.dump() + "\n";
    if (o.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(o.output);
      f << text;
    }
    return code;
  }

}  // namespace

int main(int argc, char** argv) {
  using namespace torusact;
  CLI::App app{"Exact Thompson group circle maps, certificates and obstruction bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--output,-o", o.output, "write JSON here instead of stdout");

  auto* gen = app.add_subcommand("gen-element", "finite order element, or a random element");
  gen->add_option("--n", o.n, "number of intervals");
  gen->add_option("--q", o.q, "shift, coprime to n");
  gen->add_option("--sym", o.sym, "rotational symmetry (power of two dividing n)");
  gen->add_option("--profile", o.profile, "comma separated dyadic lengths");
  gen->add_flag("--random", o.random, "random element instead");
  gen->add_option("--seed", o.seed, "seed for --random");
  gen->add_option("--size", o.size, "maximal node count for --random");

  auto* ver = app.add_subcommand("verify-cert", "check a commutator certificate");
  ver->add_option("--cert", o.cert, "certificate JSON or path")->required();

  auto* lift = app.add_subcommand("lift-cert", "lift a certificate to a cover");
  lift->add_option("--cert", o.cert, "certificate JSON or path")->required();
  lift->add_option("--degree", o.degree, "cover degree, a power of two");

  auto* cert = app.add_subcommand("certify", "produce a commutator certificate");
  cert->add_option("--element", o.element, "element JSON or path")->required();
  cert->add_flag("--search", o.search, "bounded word search instead of factorization");
  cert->add_option("--max-pairs", o.max_pairs);
  cert->add_option("--max-depth", o.max_depth);
  cert->add_option("--budget", o.budget, "candidate commutator limit, 0 for none");

  auto* p26 = app.add_subcommand("prop26", "the torus element r = (s, t) and its checks");
  p26->add_option("--m", o.m);
  p26->add_option("--k", o.k);
  p26->add_option("--cert-g", o.cert_g, "certificate for the order 2|m| element");
  p26->add_option("--cert-f", o.cert_f, "certificate for the order 2|k| element");

  auto* curve = app.add_subcommand("curve-check", "invariance and class of a torus loop");
  curve->add_option("--loop", o.loop, "loop JSON or path")->required();
  curve->add_option("--rotation", o.rotation, "rotation amount p/q")->required();

  auto* root = app.add_subcommand("sl2z-root", "largest root in SL2(Z)");
  root->add_option("--matrix", o.matrix, "a,b,c,d row-major")->required();

  auto* bounds = app.add_subcommand("bounds", "j, k, l, t and the threshold");
  bounds->add_option("--graph", o.graph, "manifold JSON or path")->required();

  auto* vt = app.add_subcommand("verdict-torsion", "torsion obstruction verdict");
  vt->add_option("--graph", o.graph, "manifold JSON or path")->required();
  vt->add_option("--order1", o.order1, "integer or 'unbounded'")->required();
  vt->add_option("--order2", o.order2, "integer or 'unbounded'")->required();

  auto* ve = app.add_subcommand("verdict-euler", "Euler class injectivity verdict");
  ve->add_option("--irreducible", o.irreducible)->required();
  ve->add_option("--euler-injective", o.euler_injective)->required();
  ve->add_option("--solid-torus", o.solid_torus)->required();

  auto* eo = app.add_subcommand("euler-order", "order of e^n over Z/k");
  eo->add_option("--k", o.kk)->required();
  eo->add_option("--n", o.nn)->required();

  auto* cr = app.add_subcommand("cohomology-rank", "rank of Z[alpha, chi]/(alpha chi)");
  cr->add_option("--degree", o.degree_h)->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_malformed;
  }

  try {
    if (*gen) {
      if (o.random) {
        std::mt19937_64 rng(o.seed);
        return emit(o, io::element_to_json(random_element(rng, o.size)), exit_ok);
      }
      if (o.n == 0) {
        raise(errc::bad_input, "--n is required unless --random is given");
      }
      std::optional<std::uint64_t>       sym;
      std::optional<std::vector<Dyadic>> profile;
      if (o.sym != 0) {
        sym = o.sym;
      }
      if (!o.profile.empty()) {
        profile = parse_profile(o.profile);
      }
      return emit(o, io::element_to_json(finite_order_element(o.n, o.q, sym, profile)),
                  exit_ok);
    }
    if (*ver) {
      auto rep = verify_certificate(io::certificate_from_json(read_json(o.cert)));
      return emit(o, io::verification_to_json(rep), rep.verified ? exit_ok : exit_failed);
    }
    if (*lift) {
      auto c = io::certificate_from_json(read_json(o.cert));
      if (!verify_certificate(c).verified) {
        std::cerr << "NotVerified: certificate does not multiply to its target\n";
        return exit_failed;
      }
      auto lc = lift_certificate(c, o.degree);
      return emit(o, io::lifted_certificate_to_json(lc),
                  lc.report.projects_to_target ? exit_ok : exit_failed);
    }
    if (*cert) {
      auto target = io::element_from_json(read_json(o.element));
      if (o.search) {
        auto res = find_certificate(target, o.max_pairs, o.max_depth, {o.budget});
        if (!res.certificate) {
          return emit(o, json{{"found", false}, {"exhausted", res.exhausted}}, exit_failed);
        }
        return emit(o, io::certificate_to_json(*res.certificate), exit_ok);
      }
      return emit(o, io::certificate_to_json(constructive_certificate(target)), exit_ok);
    }
    if (*p26) {
      if (o.m == 0 || o.k == 0) {
        raise(errc::bad_input, "m and k must be nonzero");
      }
      auto make = [](std::string const& path, std::int64_t v) {
        if (!path.empty()) {
          return io::certificate_from_json(read_json(path));
        }
        auto const n = static_cast<std::uint64_t>(2 * (v < 0 ? -v : v));
        return constructive_certificate(finite_order_element(n, 1, 2));
      };
      auto rep = build_torus_rotation(make(o.cert_g, o.m), make(o.cert_f, o.k), o.m, o.k);
      json out = io::torus_report_to_json(rep);
      out.erase("r");
      out.erase("power");
      return emit(o, out, rep.all_checks_pass() ? exit_ok : exit_failed);
    }
    if (*curve) {
      auto rep = invariant_curve_check(io::loop_from_json(read_json(o.loop)),
                                       parse_rational(o.rotation));
      return emit(o, io::curve_check_to_json(rep), rep.consistent() ? exit_ok : exit_failed);
    }
    if (*root) {
      return emit(o, io::root_to_json(sl2z_largest_root(parse_matrix(o.matrix))), exit_ok);
    }
    if (*bounds) {
      return emit(o, io::bounds_to_json(compute_bounds(io::graph_from_json(read_json(o.graph)))),
                  exit_ok);
    }
    if (*vt) {
      auto v = torsion_extension_verdict(io::graph_from_json(read_json(o.graph)),
                                         parse_order(o.order1), parse_order(o.order2));
      return emit(o, io::verdict_to_json(v), exit_ok);
    }
    if (*ve) {
      auto v = euler_injectivity_verdict(parse_bool(o.irreducible),
                                         parse_bool(o.euler_injective),
                                         parse_bool(o.solid_torus));
      return emit(o, io::verdict_to_json(v), exit_ok);
    }
    if (*eo) {
      return emit(o,
                  json{{"order", io::integer_to_json(euler_power_order(
                                     parse_integer(o.kk), parse_integer(o.nn)))}},
                  exit_ok);
    }
    if (*cr) {
      return emit(o, json{{"rank", thompson_cohomology_rank(o.degree_h)}}, exit_ok);
    }
  } catch (torusact::error const& e) {
    std::cerr << e.what() << "\n";
    return e.code() == errc::not_verified ? exit_failed : exit_malformed;
  } catch (json::exception const& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
    return exit_malformed;
  }
  return exit_malformed;
}
