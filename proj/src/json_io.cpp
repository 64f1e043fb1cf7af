#include "gerst/json_io.hpp"

#include <fstream>

#include "gerst/parser.hpp"

namespace gerst {

using nlohmann::json;

std::string generator_name(FGen g) {
  return "e" + std::to_string(g.p) + "*e" + std::to_string(g.q) + "'";
}

std::string generator_display(FGen g) {
  return "e" + std::to_string(g.p) + "\xE2\x8A\x97" + "e" + std::to_string(g.q) + "'";
}

FGen generator_from_name(const std::string& s) {
  for (int p = 0; p <= 1; ++p)
    for (int q = 0; q <= 1; ++q)
      if (s == generator_name(FGen{p, q})) return FGen{p, q};
  throw std::invalid_argument("unknown generator name '" + s + "'");
}

json cochain_to_json(const Cochain& c) {
  json values = json::object();
  for (const auto& [g, v] : c.values)
    if (!v.is_zero()) values[generator_name(g)] = format_polynomial(v);
  return json{{"hom_degree", c.m}, {"values", values}};
}

Cochain cochain_from_json(const json& j, const RewriteEngine& eng) {
  Cochain c;
  c.m = j.at("hom_degree").get<int>();
  if (c.m < 0 || c.m > 2) throw std::invalid_argument("hom_degree must be 0, 1 or 2");
  for (const auto& [name, poly] : j.at("values").items()) {
    FGen g = generator_from_name(name);
    if (g.degree() != c.m)
      throw std::invalid_argument("generator " + name + " has the wrong homological degree");
    c.set(g, parse_polynomial(poly.get<std::string>(), eng));
  }
  return c;
}

Cochain read_cocycle_file(const std::string& path, const RewriteEngine& eng) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  json j;
  in >> j;
  return cochain_from_json(j, eng);
}

json bimod_to_json(const BimodElement& el) {
  json arr = json::array();
  for (const auto& [k, c] : el.terms()) {
    arr.push_back(json{{"left", format_polynomial(AlgebraElement(k.l))},
                       {"generator", generator_name(k.g)},
                       {"right", format_polynomial(AlgebraElement(k.r))},
                       {"coefficient", to_string(c)}});
  }
  return arr;
}

json hh_report_to_json(const GradedCohomologyReport& rep) {
  json arr = json::array();
  for (const auto& e : rep.entries) {
    json reps = json::array();
    for (const auto& r : e.representatives) reps.push_back(cochain_to_json(r));
    arr.push_back(json{{"hom_degree", e.hom_degree},
                       {"internal_degree", e.internal_degree},
                       {"dimension", e.dimension},
                       {"representatives", reps}});
  }
  return json{{"bound", rep.bound}, {"entries", arr}};
}

json check_report_to_json(const Report& rep) {
  json lines = json::array();
  for (const auto& l : rep.lines)
    lines.push_back(json{{"check", l.label}, {"pass", l.pass}, {"detail", l.detail}});
  return json{{"suite", rep.suite}, {"pass", rep.ok()}, {"checks", lines}};
}

namespace {

json flip_to_json(const FlipElement& el) {
  json arr = json::array();
  for (const auto& [k, c] : el.terms()) {
    arr.push_back(json{{"left", format_polynomial_op(OpElement(k.l))},
                       {"generator", "e" + std::to_string(k.g.q) + "'*e" + std::to_string(k.g.p)},
                       {"right", format_polynomial_op(OpElement(k.r))},
                       {"coefficient", to_string(c)}});
  }
  return arr;
}

json chain2_to_json(const Chain2& el) {
  json arr = json::array();
  for (const auto& [k, c] : el.terms()) {
    arr.push_back(json{{"left", format_polynomial(AlgebraElement(k.m0))},
                       {"generator_1", generator_name(k.g1)},
                       {"middle", format_polynomial(AlgebraElement(k.m1))},
                       {"generator_2", generator_name(k.g2)},
                       {"right", format_polynomial(AlgebraElement(k.m2))},
                       {"coefficient", to_string(c)}});
  }
  return arr;
}

}  // namespace

json resolution_to_json(const TtpComplex& ttp, const DiagonalMap& diag, const ChainLift& lift) {
  json d = json::object();
  for (int h = 1; h <= 2; ++h)
    for (FGen g : ttp.gens(h))
      d[generator_name(g)] = bimod_to_json(ttp.differential_gen(g));
  json dhat = json::object();
  for (QPGen g : {QPGen{1, 0}, QPGen{0, 1}, QPGen{1, 1}}) {
    std::string name = "e" + std::to_string(g.q) + "'*e" + std::to_string(g.p);
    dhat[name] = flip_to_json(ttp.flipped_differential_gen(g));
  }
  json delta = json::object();
  for (int h = 0; h <= 2; ++h)
    for (FGen g : ttp.gens(h)) delta[generator_name(g)] = chain2_to_json(diag.delta_gen(g));
  json tau = json::object();
  for (const auto& [g, v] : lift.forward) {
    std::string name = "e" + std::to_string(g.q) + "'*e" + std::to_string(g.p);
    tau[name] = bimod_to_json(v);
  }
  return json{{"differentials", d},
              {"flipped_differentials", dhat},
              {"diagonal", delta},
              {"chain_lift", tau}};
}

}  // namespace gerst
