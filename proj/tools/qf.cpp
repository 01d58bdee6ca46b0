#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qf/classgroup.hpp"
#include "qf/classify.hpp"
#include "qf/form.hpp"
#include "qf/pell.hpp"
#include "qf/reduction.hpp"
#include "qf/survey.hpp"
#include "qf/valuesets.hpp"

using json = nlohmann::ordered_json;

namespace {

/* Exact integers go out as JSON numbers when they fit in 64 bits and as
 * base-10 strings otherwise (fundamental-unit coordinates can be huge). */
json emit_int(const qf::Int &v) {
  if (v.fits_slong_p())
    return v.get_si();
  return v.get_str();
}

json emit_form(const qf::Form &f) { return qf::to_string(f); }

json emit_ratio(const qf::Rational &r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", r.approx());
  return json{{"num", emit_int(r.num)}, {"den", emit_int(r.den)}, {"decimal", buf}};
}

int emit(const json &payload) {
  std::cout << payload.dump() << "\n";
  return 0;
}

qf::Int parse_int(const std::string &s) {
  try {
    return qf::Int(s);
  } catch (const std::invalid_argument &) {
    throw qf::domain_error("parse_error", "bad integer: " + s);
  }
}

int cmd_classify(const std::string &form_str) {
  qf::Form f = qf::parse_form(form_str);
  qf::Classification cls = qf::classify(f);
  const qf::Certificate &c = cls.certificate;
  json cert{{"d", emit_int(c.d)},
            {"content", emit_int(c.content)},
            {"d_reduced", emit_int(c.d_reduced)},
            {"residue_mod_32", c.residue},
            {"reason", qf::to_string(c.reason)}};
  if (c.h_low >= 0) {
    cert["h_plus_low"] = c.h_low;
    cert["h_plus_high"] = c.h_high;
  }
  if (c.unit_parity)
    cert["unit_parity"] = *c.unit_parity;
  json out{{"command", "classify"},
           {"input", form_str},
           {"verdict", qf::to_string(cls.verdict)}};
  if (cls.partner)
    out["partner"] = emit_form(*cls.partner);
  out["certificate"] = cert;
  return emit(out);
}

int cmd_valequiv(const std::string &s1, const std::string &s2, long cap) {
  qf::Form f = qf::parse_form(s1), g = qf::parse_form(s2);
  qf::ValEquivResult res = qf::val_equivalent(f, g);
  json out{{"command", "valequiv"},
           {"input", json::array({s1, s2})},
           {"equal", res.equal},
           {"reason", qf::to_string(res.reason)}};
  if (!res.equal && cap > 0) {
    if (auto w = qf::find_value_witness(f, g, cap))
      out["witness"] = emit_int(*w);
  }
  return emit(out);
}

int cmd_classnum(const std::string &d_str, long bound) {
  qf::Int d = parse_int(d_str);
  const qf::ClassData &cd = qf::class_data(d, qf::Int(bound));
  json reps = json::array();
  for (const qf::Form &f : cd.reps)
    reps.push_back(emit_form(f));
  json out{{"command", "classnum"}, {"d", emit_int(cd.d)},
           {"h_plus", cd.h_plus},   {"h", cd.h_ord},
           {"h_star", cd.h_star},   {"reps", reps}};
  if (cd.unit_norm != 0)
    out["unit_norm"] = cd.unit_norm;
  return emit(out);
}

int cmd_unit(const std::string &d_str) {
  qf::Int d = parse_int(d_str);
  qf::FundamentalUnit u = qf::fundamental_unit(d);
  json out{{"command", "unit"},
           {"d", emit_int(u.d)},
           {"x", emit_int(u.x)},
           {"y", emit_int(u.y)},
           {"norm", u.norm}};
  qf::Int r = d % 8;
  if (r < 0)
    r += 8;
  out["parity_criterion"] =
      r == 5 ? json(qf::unit_parity_criterion(d)) : json(nullptr);
  return emit(out);
}

int cmd_valueset(const std::string &form_str, long max, bool primitive) {
  qf::Form f = qf::parse_form(form_str);
  json values = json::array();
  if (primitive) {
    for (long n = -max; n <= max; n++)
      if (qf::represents_primitively(f, qf::Int(n)).represented)
        values.push_back(n);
  } else {
    qf::ValueWindow win = qf::value_window(f, max);
    for (const qf::Int &v : win.values)
      values.push_back(emit_int(v));
  }
  return emit(values);
}

int cmd_imagemod(const std::string &form_str, long m, const std::string &restr) {
  qf::Form f = qf::parse_form(form_str);
  qf::PairRestriction r = qf::PairRestriction::AllPairs;
  if (restr == "coprime")
    r = qf::PairRestriction::CoprimePairs;
  else if (restr == "equal-parity")
    r = qf::PairRestriction::EqualParity;
  else if (restr == "first-even")
    r = qf::PairRestriction::FirstEven;
  else if (restr != "all")
    throw qf::domain_error("bad_restriction", "unknown restriction: " + restr);
  qf::ResidueImage img = qf::image_mod(f, m, r);
  json out{{"command", "imagemod"},
           {"modulus", img.modulus},
           {"restriction", restr},
           {"values", img.values}};
  return emit(out);
}

int cmd_survey(long max, const std::string &csv_path) {
  qf::SurveyReport rep = qf::survey(max, !csv_path.empty());
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv)
      throw qf::domain_error("io_error", "cannot open " + csv_path);
    qf::write_survey_csv(rep, csv);
  }
  json out{{"command", "survey"},
           {"x", rep.x},
           {"d58", rep.d58},
           {"s58", rep.s58},
           {"g58", rep.g58},
           {"eisenstein", rep.eis},
           {"d58_density", emit_ratio(rep.d58_density())},
           {"g58_density", emit_ratio(rep.g58_density())},
           {"s58_over_g58", emit_ratio(rep.s58_over_g58())},
           {"eisenstein_ratio", emit_ratio(rep.eisenstein_ratio())},
           {"crosscheck_samples", rep.crosscheck_samples},
           {"crosscheck_ok", rep.crosscheck_ok}};
  return emit(out);
}

int cmd_schering(const std::string &form_str) {
  qf::Form f = qf::parse_form(form_str); // coefficients a, b, c of aX^2+2bXY+cY^2
  qf::ScheringInvariants inv = qf::schering_invariants({f.a, f.b, f.c});
  json out{{"command", "schering"},
           {"input", form_str},
           {"determinant", emit_int(inv.determinant)},
           {"order", emit_int(inv.order)},
           {"species", inv.species}};
  return emit(out);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"binary quadratic form value-set toolkit"};
  app.require_subcommand(1);

  std::string form1, form2, d_str, csv_path, restriction = "all";
  long max_n = 100, bound = 2000000, witness_cap = 100, modulus = 32;
  long survey_max = 100000;
  bool primitive = false;

  auto *classify = app.add_subcommand("classify", "classify a form");
  classify->add_option("form", form1, "form as a,b,c")->required();

  auto *valequiv = app.add_subcommand("valequiv", "decide Im(f) = Im(g)");
  valequiv->add_option("form1", form1)->required();
  valequiv->add_option("form2", form2)->required();
  valequiv->add_option("--witness-cap", witness_cap,
                       "search bound for a refutation witness");

  auto *classnum = app.add_subcommand("classnum", "class data for d");
  classnum->add_option("d", d_str)->required();
  classnum->add_option("--bound", bound, "cap on |d|");

  auto *unit = app.add_subcommand("unit", "fundamental unit of O_d");
  unit->add_option("d", d_str)->required();

  auto *valueset = app.add_subcommand("valueset", "windowed value set");
  valueset->add_option("form", form1)->required();
  valueset->add_option("--max", max_n, "window bound");
  valueset->add_flag("--primitive", primitive, "primitive representations only");

  auto *imagemod = app.add_subcommand("imagemod", "residue image mod m");
  imagemod->add_option("form", form1)->required();
  imagemod->add_option("m", modulus)->required();
  imagemod->add_option("--restriction", restriction,
                       "all|coprime|equal-parity|first-even");

  auto *survey = app.add_subcommand("survey", "discriminant density sweep");
  survey->add_option("--max", survey_max, "sweep bound");
  survey->add_option("--csv", csv_path, "write per-d rows to a CSV file");

  auto *schering = app.add_subcommand("schering", "legacy invariants of aX^2+2bXY+cY^2");
  schering->add_option("form", form1, "coefficients a,b,c")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    if (classify->parsed())
      return cmd_classify(form1);
    if (valequiv->parsed())
      return cmd_valequiv(form1, form2, witness_cap);
    if (classnum->parsed())
      return cmd_classnum(d_str, bound);
    if (unit->parsed())
      return cmd_unit(d_str);
    if (valueset->parsed())
      return cmd_valueset(form1, max_n, primitive);
    if (imagemod->parsed())
      return cmd_imagemod(form1, modulus, restriction);
    if (survey->parsed())
      return cmd_survey(survey_max, csv_path);
    if (schering->parsed())
      return cmd_schering(form1);
  } catch (const qf::domain_error &e) {
    std::cout << json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 2;
}
