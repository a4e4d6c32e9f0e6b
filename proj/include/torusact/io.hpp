#pragma once

// JSON forms of the library types. Exact numbers are strings ("n/2^e" for
// dyadics, "p/q" for rationals); integers are JSON numbers when they fit in
// 64 bits and decimal strings otherwise. nlohmann::json keeps object keys
// sorted, so dumps are deterministic.

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "certificate.hpp"
#include "finite_order.hpp"
#include "loops.hpp"
#include "matrix.hpp"
#include "obstruction.hpp"
#include "torus.hpp"

namespace torusact::io {

  using json = nlohmann::json;

  [[noreturn]] inline void malformed(std::string const& what) {
    raise(errc::parse_error, what);
  }

  inline json const& field(json const& j, char const* key) {
    if (!j.is_object() || !j.contains(key)) {
      malformed(std::string("missing field '") + key + "'");
    }
    return j.at(key);
  }

  // ---- scalars ------------------------------------------------------------

  inline json integer_to_json(Integer const& n) {
    if (n >= std::numeric_limits<std::int64_t>::min()
        && n <= std::numeric_limits<std::int64_t>::max()) {
      return json(static_cast<std::int64_t>(n));
    }
    return json(n.str());
  }

  inline Integer integer_from_json(json const& j) {
    if (j.is_number_integer()) {
      return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>())
                                    : Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
      return parse_integer(j.get<std::string>());
    }
    malformed("expected an integer");
  }

  inline std::uint64_t u64_from_json(json const& j) {
    Integer n = integer_from_json(j);
    if (n < 0 || n > std::numeric_limits<std::uint64_t>::max()) {
      malformed("expected a non-negative 64-bit integer");
    }
    return static_cast<std::uint64_t>(n);
  }

  inline json dyadic_to_json(Dyadic const& d) {
    return d.to_string();
  }

  inline Dyadic dyadic_from_json(json const& j) {
    if (j.is_string()) {
      return parse_dyadic(j.get<std::string>());
    }
    return Dyadic(integer_from_json(j));
  }

  inline json rational_to_json(Rational const& r) {
    return r.to_string();
  }

  inline Rational rational_from_json(json const& j) {
    if (j.is_string()) {
      return parse_rational(j.get<std::string>());
    }
    return Rational(integer_from_json(j));
  }

  // ---- elements and certificates ------------------------------------------

  inline json element_to_json(CircleLift const& f) {
    json nodes = json::array();
    for (auto const& n : f.nodes()) {
      nodes.push_back(json::array({dyadic_to_json(n.x), dyadic_to_json(n.y)}));
    }
    return json{{"nodes", nodes}};
  }

  inline CircleLift lift_from_json(json const& j) {
    json const& nodes = field(j, "nodes");
    if (!nodes.is_array()) {
      malformed("'nodes' must be an array");
    }
    std::vector<Node> out;
    for (auto const& n : nodes) {
      if (!n.is_array() || n.size() != 2) {
        malformed("each node must be a pair [x, y]");
      }
      out.push_back(Node{dyadic_from_json(n[0]), dyadic_from_json(n[1])});
    }
    return CircleLift::from_nodes(std::move(out));
  }

  inline ThompsonElement element_from_json(json const& j) {
    return ThompsonElement(lift_from_json(j));
  }

  inline json pairs_to_json(std::vector<ElementPair> const& pairs) {
    json out = json::array();
    for (auto const& [a, b] : pairs) {
      out.push_back(json::array({element_to_json(a), element_to_json(b)}));
    }
    return out;
  }

  inline std::vector<ElementPair> pairs_from_json(json const& j) {
    if (!j.is_array()) {
      malformed("'pairs' must be an array");
    }
    std::vector<ElementPair> out;
    for (auto const& p : j) {
      if (!p.is_array() || p.size() != 2) {
        malformed("each pair must hold two elements");
      }
      out.emplace_back(element_from_json(p[0]), element_from_json(p[1]));
    }
    return out;
  }

  inline json certificate_to_json(CommutatorCertificate const& c) {
    return json{{"target", element_to_json(c.target)},
                {"pairs", pairs_to_json(c.pairs)}};
  }

  inline CommutatorCertificate certificate_from_json(json const& j) {
    return {element_from_json(field(j, "target")),
            pairs_from_json(field(j, "pairs"))};
  }

  inline json verification_to_json(VerificationReport const& r) {
    json checks = json::array();
    for (auto const& [a, b] : r.pairs_in_thompson) {
      checks.push_back(json::array({a, b}));
    }
    return json{{"verified", r.verified},
                {"product", element_to_json(r.product)},
                {"target_in_thompson", r.target_in_thompson},
                {"pairs_in_thompson", checks}};
  }

  inline json rotation_to_json(RotationNumber const& r) {
    if (r.resolved) {
      return json{{"resolved", true},
                  {"value", rational_to_json(r.value)},
                  {"period", r.period},
                  {"displacement", integer_to_json(r.displacement)},
                  {"witness", rational_to_json(r.witness)}};
    }
    json conv = json::array();
    for (auto const& c : r.convergents) {
      conv.push_back(rational_to_json(c));
    }
    return json{{"resolved", false},
                {"estimate", r.estimate},
                {"convergents", conv},
                {"authoritative", false}};
  }

  inline RotationNumber rotation_from_json(json const& j) {
    RotationNumber r;
    r.resolved = field(j, "resolved").get<bool>();
    if (r.resolved) {
      r.value        = rational_from_json(field(j, "value"));
      r.period       = u64_from_json(field(j, "period"));
      r.displacement = integer_from_json(field(j, "displacement"));
      r.witness      = rational_from_json(field(j, "witness"));
    } else {
      r.estimate = field(j, "estimate").get<double>();
      for (auto const& c : field(j, "convergents")) {
        r.convergents.push_back(rational_from_json(c));
      }
    }
    return r;
  }

  inline json lift_report_to_json(LiftReport const& r) {
    json out{{"rotation", rotation_to_json(r.rotation)},
             {"projects_to_target", r.projects_to_target},
             {"order", r.order ? json(*r.order) : json(nullptr)}};
    if (r.deck_power) {
      out["deck_power"] = json{{"power_of_product", r.deck_power->power_of_product},
                               {"deck_exponent", r.deck_power->deck_exponent},
                               {"order", r.deck_power->order}};
    } else {
      out["deck_power"] = nullptr;
    }
    return out;
  }

  inline LiftReport lift_report_from_json(json const& j) {
    LiftReport r;
    r.rotation           = rotation_from_json(field(j, "rotation"));
    r.projects_to_target = field(j, "projects_to_target").get<bool>();
    if (!field(j, "order").is_null()) {
      r.order = u64_from_json(j.at("order"));
    }
    if (!field(j, "deck_power").is_null()) {
      json const& d = j.at("deck_power");
      r.deck_power  = DeckPower{u64_from_json(field(d, "power_of_product")),
                               u64_from_json(field(d, "deck_exponent")),
                               u64_from_json(field(d, "order"))};
    }
    return r;
  }

  inline json lifted_certificate_to_json(LiftedCertificate const& c) {
    json out         = certificate_to_json(c.base);
    out["degree"]       = c.degree;
    out["lifted_pairs"] = pairs_to_json(c.lifted_pairs);
    out["product"]      = element_to_json(c.product);
    out["report"]       = lift_report_to_json(c.report);
    return out;
  }

  inline LiftedCertificate lifted_certificate_from_json(json const& j) {
    LiftedCertificate c;
    c.base         = certificate_from_json(j);
    c.degree       = u64_from_json(field(j, "degree"));
    c.lifted_pairs = pairs_from_json(field(j, "lifted_pairs"));
    c.product      = element_from_json(field(j, "product"));
    c.report       = lift_report_from_json(field(j, "report"));
    return c;
  }

  // ---- torus --------------------------------------------------------------

  inline json pair_map_to_json(PairMap const& p) {
    return json{{"first", element_to_json(p.first)},
                {"second", element_to_json(p.second)}};
  }

  inline json torus_report_to_json(TorusRotationReport const& r) {
    json checks = json::array();
    for (auto const& c : r.commutation_checks) {
      checks.push_back(json::array({c.first_pair, c.second_pair}));
    }
    json deck = nullptr;
    if (r.power_in_deck) {
      deck = json{{"first_exponent", r.power_in_deck->first_exponent},
                  {"second_exponent", r.power_in_deck->second_exponent},
                  {"order", r.power_in_deck->order}};
    }
    return json{{"m", r.m},
                {"k", r.k},
                {"r", pair_map_to_json(r.r)},
                {"expected_order", r.expected_order},
                {"order_r", r.order_r ? json(*r.order_r) : json(nullptr)},
                {"rotation_pair",
                 json::array({rotation_to_json(r.rotation_pair.first),
                              rotation_to_json(r.rotation_pair.second)})},
                {"power_exponent", r.power_exponent},
                {"power", pair_map_to_json(r.power)},
                {"power_in_deck", deck},
                {"commutation_checks", checks},
                {"all_checks_pass", r.all_checks_pass()}};
  }

  inline TorusLoop loop_from_json(json const& j) {
    json const& v = field(j, "vertices");
    if (!v.is_array()) {
      malformed("'vertices' must be an array");
    }
    TorusLoop loop;
    for (auto const& p : v) {
      if (!p.is_array() || p.size() != 2) {
        malformed("each vertex must be a pair [x, y]");
      }
      loop.vertices.push_back(Point{rational_from_json(p[0]), rational_from_json(p[1])});
    }
    return loop;
  }

  inline json loop_to_json(TorusLoop const& loop) {
    json v = json::array();
    for (auto const& p : loop.vertices) {
      v.push_back(json::array({rational_to_json(p.x), rational_to_json(p.y)}));
    }
    return json{{"vertices", v}};
  }

  inline json curve_check_to_json(CurveCheckReport const& r) {
    json out{{"invariant", r.invariant}};
    if (r.homology) {
      out["class"] = json::array({integer_to_json(r.homology->first),
                                  integer_to_json(r.homology->second)});
    }
    if (r.divisible) {
      out["divisible"] = *r.divisible;
    }
    return out;
  }

  inline CurveCheckReport curve_check_from_json(json const& j) {
    CurveCheckReport r;
    r.invariant = field(j, "invariant").get<bool>();
    if (j.contains("class")) {
      r.homology = std::make_pair(integer_from_json(j.at("class").at(0)),
                                  integer_from_json(j.at("class").at(1)));
    }
    if (j.contains("divisible")) {
      r.divisible = j.at("divisible").get<bool>();
    }
    return r;
  }

  // ---- matrices and manifolds ---------------------------------------------

  inline json matrix_to_json(IntMatrix2x2 const& m) {
    json out = json::array();
    for (auto const& e : m.row_major()) {
      out.push_back(integer_to_json(e));
    }
    return out;
  }

  inline IntMatrix2x2 matrix_from_json(json const& j) {
    if (!j.is_array() || j.size() != 4) {
      malformed("a matrix is a row-major array of four integers");
    }
    return {integer_from_json(j[0]), integer_from_json(j[1]),
            integer_from_json(j[2]), integer_from_json(j[3])};
  }

  inline json root_to_json(MatrixRoot const& r) {
    return json{{"r", r.r}, {"root", matrix_to_json(r.root)}};
  }

  inline MatrixRoot root_from_json(json const& j) {
    return {u64_from_json(field(j, "r")), matrix_from_json(field(j, "root"))};
  }

  inline JSJGraph graph_from_json(json const& j) {
    JSJGraph g;
    json const& pieces = field(j, "pieces");
    if (!pieces.is_array()) {
      malformed("'pieces' must be an array");
    }
    for (auto const& p : pieces) {
      std::string const kind = field(p, "kind").get<std::string>();
      if (kind == "hyperbolic") {
        g.pieces.emplace_back(HyperbolicPiece{integer_from_json(field(p, "isom_bound"))});
      } else if (kind == "sol") {
        g.pieces.emplace_back(SolPiece{matrix_from_json(field(p, "monodromy"))});
      } else if (kind == "seifert") {
        SeifertPiece s;
        s.base_order_bound = integer_from_json(field(p, "d"));
        if (p.contains("solid_torus")) {
          s.is_solid_torus = p.at("solid_torus").get<bool>();
        }
        if (p.contains("fiberings")) {
          json const& f = p.at("fiberings");
          if (f.is_string() && f.get<std::string>() == "infinite") {
            s.fiberings = std::nullopt;
          } else {
            s.fiberings = integer_from_json(f);
          }
        } else {
          s.fiberings = Integer(1);
        }
        g.pieces.emplace_back(s);
      } else {
        malformed("unknown piece kind '" + kind + "'");
      }
    }
    g.boundary_piece = j.contains("boundary_piece") ? u64_from_json(j.at("boundary_piece")) : 0;
    if (j.contains("adjacent_v")) {
      for (auto const& v : j.at("adjacent_v")) {
        g.adjacent_fiber_exponents.push_back(integer_from_json(v));
      }
    }
    return g;
  }

  inline json bounds_to_json(BoundSet const& b) {
    return json{{"j", integer_to_json(b.j)},
                {"k", integer_to_json(b.k)},
                {"l", integer_to_json(b.l)},
                {"t", integer_to_json(b.t)},
                {"threshold", integer_to_json(b.threshold())}};
  }

  inline BoundSet bounds_from_json(json const& j) {
    BoundSet b{integer_from_json(field(j, "j")), integer_from_json(field(j, "k")),
               integer_from_json(field(j, "l")), integer_from_json(field(j, "t"))};
    if (b.threshold() != integer_from_json(field(j, "threshold"))) {
      malformed("threshold does not match t l k j!");
    }
    return b;
  }

  inline json verdict_to_json(Verdict const& v) {
    json trace = json::array();
    for (auto const& e : v.trace) {
      json entry{{"rule", e.rule}, {"value", integer_to_json(e.value)}};
      if (e.piece) {
        entry["piece"] = *e.piece;
      }
      if (!e.note.empty()) {
        entry["note"] = e.note;
      }
      trace.push_back(entry);
    }
    return json{{"ruled_out", v.ruled_out},
                {"reason", v.reason},
                {"required_conclusion",
                 v.required_conclusion ? json(*v.required_conclusion) : json(nullptr)},
                {"trace", trace}};
  }

  inline Verdict verdict_from_json(json const& j) {
    Verdict v;
    v.ruled_out = field(j, "ruled_out").get<bool>();
    v.reason    = field(j, "reason").get<std::string>();
    if (!field(j, "required_conclusion").is_null()) {
      v.required_conclusion = j.at("required_conclusion").get<std::string>();
    }
    for (auto const& e : field(j, "trace")) {
      TraceEntry t;
      t.rule  = field(e, "rule").get<std::string>();
      t.value = integer_from_json(field(e, "value"));
      if (e.contains("piece")) {
        t.piece = e.at("piece").get<std::size_t>();
      }
      if (e.contains("note")) {
        t.note = e.at("note").get<std::string>();
      }
      v.trace.push_back(std::move(t));
    }
    return v;
  }

}  // namespace torusact::io
