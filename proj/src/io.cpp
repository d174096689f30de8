#include "padiclift/io.hpp"

#include <fstream>
#include <sstream>

#include "padiclift/error.hpp"

namespace padiclift::io {

namespace {

std::string s(const BigInt& n) { return n.get_str(); }
std::string s(std::int64_t n) { return std::to_string(n); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::kParse, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::string text_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw Error(ErrorCode::kParse, std::string("field \"") + key + "\" must be a string or integer");
}

BigInt integer_field(const Json& j, const char* key) {
  const Rational q = rational_field(j, key);
  if (!q.is_integer()) {
    throw Error(ErrorCode::kParse, std::string("field \"") + key + "\" must be an integer");
  }
  return q.num();
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

Rational rational_field(const Json& j, const char* key) { return Rational::parse(text_field(j, key)); }

CurveInput curve_from_json(const Json& j) {
  if (j.is_object() && j.contains("a1")) {
    const GeneralWeierstrass g{rational_field(j, "a1"), rational_field(j, "a2"),
                               rational_field(j, "a3"), rational_field(j, "a4"),
                               rational_field(j, "a6")};
    ShortForm form = to_short(g);
    ShortWeierstrass curve = form.curve;
    return {std::move(curve), std::move(form)};
  }
  return {ShortWeierstrass(rational_field(j, "a"), rational_field(j, "b")), std::nullopt};
}

ProjPointQ point_from_json(const Json& j, const CurveInput& curve) {
  ProjPointQ P = ProjPointQ::infinity();
  if (j.is_object() && j.contains("infinity")) {
    if (!j.at("infinity").is_boolean() || !j.at("infinity").get<bool>()) {
      throw Error(ErrorCode::kParse, "\"infinity\" must be true when present");
    }
  } else if (j.is_object() && j.contains("Z")) {
    P = ProjPointQ::from_projective(integer_field(j, "Z"), integer_field(j, "X"),
                                    integer_field(j, "Y"));
  } else {
    P = ProjPointQ::from_affine(rational_field(j, "x"), rational_field(j, "y"));
  }
  if (curve.transform) P = curve.transform->map_point(P);
  if (!on_curve(curve.curve, P)) {
    throw Error(ErrorCode::kOffCurve, P.to_string() + " is not on " + curve.curve.to_string());
  }
  return P;
}

QHyperelliptic hyperelliptic_from_json(const Json& j) {
  const QPoly h = j.contains("h") ? parse_poly(text_field(j, "h")) : QPoly(RationalField{});
  return QHyperelliptic(parse_poly(text_field(j, "f")), h);
}

QDivisor divisor_from_json(const Json& j) {
  return {parse_poly(text_field(j, "u")), parse_poly(text_field(j, "v"))};
}

Json to_json(const ShortWeierstrass& curve) {
  return Json{{"a", curve.a().to_string()}, {"b", curve.b().to_string()}};
}

Json to_json(const ProjPointQ& P) {
  if (P.is_infinity()) return Json{{"infinity", true}};
  return Json{{"x", P.x().to_string()}, {"y", P.y().to_string()}};
}

Json to_json(const PointModPk& P) {
  const PointModPk c = P.canonical();
  return Json{{"p", s(c.prime())}, {"k", s(c.precision())}, {"Z", s(c.Z())},
              {"X", s(c.X())},     {"Y", s(c.Y())}};
}

Json to_json(const AttackTranscript& tr) {
  Json rows = Json::array();
  for (const AttackRow& r : tr.rows) {
    rows.push_back(Json{{"k", s(r.k)},
                        {"log_tP", s(r.log_tP)},
                        {"c", s(r.c)},
                        {"l1", s(r.l1)},
                        {"log_QhP", s(r.log_QhP)},
                        {"d", s(r.d)},
                        {"l2", s(r.l2)},
                        {"n_precision", s(r.n_precision)},
                        {"n", s(r.n)},
                        {"h", s(r.h_candidate)},
                        {"increase_k", r.increase_k}});
  }
  Json out{{"p", s(tr.p)}, {"t", s(tr.t)}, {"h_bar", s(tr.h_bar)}, {"rows", rows},
           {"h", s(tr.h)}, {"verified", tr.verified},
           {"stabilization_index", s(tr.stabilization_index)}};
  out["repeat_index"] = tr.repeat_index ? Json(s(*tr.repeat_index)) : Json(nullptr);
  out["step_bound"] = s(tr.step_bound);
  out["within_step_bound"] = tr.within_step_bound;
  return out;
}

Json to_json(const GeneralizedReport& rep) {
  return Json{{"b", s(rep.b)},
              {"ord", s(rep.ord)},
              {"a", s(rep.a)},
              {"lift_arrow", rep.lift_arrow},
              {"small_arrow", rep.small_arrow},
              {"transcript", to_json(rep.transcript)}};
}

std::string table_tsv(const AttackTranscript& tr) {
  std::ostringstream out;
  out << "k\tlog_tP\tl1\tlog_QhP\tl2\tn\th\n";
  for (const AttackRow& r : tr.rows) {
    out << r.k << '\t' << r.log_tP << '\t' << r.l1 << '\t' << r.log_QhP << '\t' << r.l2 << '\t'
        << r.n << '\t' << r.h_candidate << '\n';
  }
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace padiclift::io
