#include "dswan/io/json.hpp"

#include <sstream>

#include "dswan/expr.hpp"

namespace dswan::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text(const Json& j, const char* what) {
  if (!j.is_string()) throw FormatError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

long integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
  return j.get<long>();
}

bool boolean(const Json& j, const char* what) {
  if (!j.is_boolean()) throw FormatError(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  return j;
}

RatFunc expr_from(const Json& j, const Context& ctx) {
  if (j.is_number_integer()) return RatFunc(ctx, j.get<long>());
  return parse_expr(text(j, "expression"), ctx);
}

Json rationals_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(rational_json(q));
  return a;
}

std::vector<Rational> rationals_from(const Json& j) {
  std::vector<Rational> out;
  for (const auto& x : array(j, "rational list")) out.push_back(rational_from(x));
  return out;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? rational_json(*v) : Json(nullptr);
}

std::optional<Rational> optional_rational(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return rational_from(j.at(key));
}

swan::FitMode fit_mode_from(const std::string& s) {
  for (auto m : {swan::FitMode::ThroughOrigin, swan::FitMode::Affine, swan::FitMode::NonLinear})
    if (swan::to_string(m) == s) return m;
  throw FormatError("unknown fit mode '" + s + "'");
}

}  // namespace

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(text(j, "rational"));
}

Json valuation_json(const Valuation& v) { return v.is_infinite() ? Json("inf") : rational_json(v.value()); }

Valuation valuation_from(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Valuation::infinity();
  return rational_from(j);
}

unsigned axis_from(const Json& j, const Context& ctx) {
  if (j.is_number_integer()) {
    long a = j.get<long>();
    if (a < 0 || a > static_cast<long>(ctx.n)) throw FormatError("axis out of range");
    return static_cast<unsigned>(a);
  }
  std::string s = text(j, "axis");
  if (s == "t") return ctx.t_axis();
  if (s.size() >= 2 && (s[0] == 'u' || s[0] == 'b')) {
    try {
      std::size_t used = 0;
      long k = std::stol(s.substr(1), &used);
      if (used + 1 == s.size() && k >= 1 && k <= static_cast<long>(ctx.n)) return static_cast<unsigned>(k - 1);
    } catch (const std::logic_error&) {
    }
  }
  throw FormatError("unknown axis '" + s + "'");
}

Json to_json(const Context& ctx) { return Json{{"p", ctx.p}, {"n", ctx.n}, {"uses_pi", ctx.uses_pi}}; }

Context context_from(const Json& j, const Context& fallback) {
  Context ctx = fallback;
  if (j.contains("p")) {
    long p = integer(j.at("p"), "p");
    if (p < 2) throw FormatError("p must be a prime");
    ctx.p = static_cast<unsigned>(p);
  }
  if (j.contains("n")) {
    long n = integer(j.at("n"), "n");
    if (n < 0) throw FormatError("n must be nonnegative");
    ctx.n = static_cast<unsigned>(n);
  }
  if (j.contains("uses_pi")) ctx.uses_pi = boolean(j.at("uses_pi"), "uses_pi");
  ctx.validate();
  return ctx;
}

Json to_json(const ore::TwistedPoly& p) {
  const auto& d = p.diff_context();
  Json j = to_json(d.ctx);
  j["axis"] = d.ctx.axis_name(d.axis);
  j["r"] = rational_json(d.r);
  if (d.sign != 1) j["sign"] = d.sign;
  Json c = Json::array();
  for (const auto& a : p.coeffs()) c.push_back(a.to_string());
  j["coeffs"] = c;
  return j;
}

ore::TwistedPoly twisted_from(const Json& j, const Context& fallback) {
  ore::DiffContext d;
  d.ctx = context_from(j, fallback);
  d.axis = j.contains("axis") ? axis_from(j.at("axis"), d.ctx) : d.ctx.t_axis();
  d.r = rational_from(field(j, "r"));
  if (j.contains("sign")) {
    long s = integer(j.at("sign"), "sign");
    if (s != 1 && s != -1) throw FormatError("sign must be 1 or -1");
    d.sign = static_cast<int>(s);
  }
  d.validate();
  std::vector<RatFunc> coeffs;
  for (const auto& c : array(field(j, "coeffs"), "coeffs")) coeffs.push_back(expr_from(c, d.ctx));
  return {d, coeffs};
}

Json to_json(const ore::NewtonPolygon& np) {
  Json v = Json::array();
  for (const auto& h : np.vertices) v.push_back(Json::array({h.x, rational_json(h.y)}));
  Json s = Json::array();
  for (const auto& seg : np.slopes)
    s.push_back({{"slope", rational_json(seg.slope)}, {"mult", seg.multiplicity}, {"readable", seg.readable}});
  return {{"vertices", v}, {"slopes", s}, {"threshold", rational_json(np.threshold)}};
}

ore::NewtonPolygon polygon_from(const Json& j) {
  ore::NewtonPolygon np;
  for (const auto& v : array(field(j, "vertices"), "vertices")) {
    if (!v.is_array() || v.size() != 2) throw FormatError("vertex must be [x, y]");
    np.vertices.push_back({static_cast<int>(integer(v[0], "vertex x")), rational_from(v[1])});
  }
  for (const auto& s : array(field(j, "slopes"), "slopes")) {
    long mult = integer(field(s, "mult"), "mult");
    if (mult <= 0) throw FormatError("mult must be positive");
    np.slopes.push_back(
        {rational_from(field(s, "slope")), static_cast<unsigned>(mult), boolean(field(s, "readable"), "readable")});
  }
  np.threshold = rational_from(field(j, "threshold"));
  return np;
}

Json to_json(const ore::HenselResult& h) {
  Json f = Json::array();
  for (const auto& s : h.factors) {
    Json e = to_json(s.poly);
    e["slope"] = optional_json(s.slope);
    f.push_back(e);
  }
  return {{"factors", f},
          {"achieved", valuation_json(h.achieved)},
          {"reached", h.reached},
          {"iterations", h.iterations}};
}

ore::HenselResult hensel_from(const Json& j, const Context& fallback) {
  ore::HenselResult h;
  for (const auto& f : array(field(j, "factors"), "factors"))
    h.factors.push_back({twisted_from(f, fallback), optional_rational(f, "slope")});
  h.achieved = valuation_from(field(j, "achieved"));
  h.reached = boolean(field(j, "reached"), "reached");
  h.iterations = static_cast<unsigned>(integer(field(j, "iterations"), "iterations"));
  return h;
}

Json to_json(const diffmod::DiffModule& m) {
  Json j = to_json(m.context());
  j["rank"] = m.rank();
  Json mats = Json::array();
  for (const auto& a : m.matrices()) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < a.cols(); ++k) row.push_back(a(i, k).to_string());
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  j["matrices"] = mats;
  return j;
}

diffmod::DiffModule module_from(const Json& j, const Context& fallback) {
  const Context ctx = context_from(j, fallback);
  const long rank = integer(field(j, "rank"), "rank");
  if (rank < 0) throw FormatError("rank must be nonnegative");
  std::vector<diffmod::RatMatrix> mats;
  for (const auto& a : array(field(j, "matrices"), "matrices")) {
    if (!a.is_array() || static_cast<long>(a.size()) != rank) throw FormatError("matrix must have rank rows");
    diffmod::RatMatrix m(ctx, rank, rank);
    for (long i = 0; i < rank; ++i) {
      if (!a[i].is_array() || static_cast<long>(a[i].size()) != rank)
        throw FormatError("matrix row must have rank entries");
      for (long k = 0; k < rank; ++k) m(i, k) = expr_from(a[i][k], ctx);
    }
    mats.push_back(std::move(m));
  }
  if (mats.size() != ctx.num_axes())
    throw FormatError("expected " + std::to_string(ctx.num_axes()) + " matrices, one per axis");
  return {ctx, std::move(mats)};
}

Json to_json(const diffmod::Substitution& s) {
  Json u = Json::array();
  const auto& im = s.images();
  for (unsigned i = 0; i < s.source().n; ++i) u.push_back(im[i].to_string());
  Json j{{"u_images", u}, {"t_image", im.back().to_string()}};
  if (s.target().n != s.source().n) j["n_target"] = s.target().n;
  return j;
}

diffmod::Substitution substitution_from(const Json& j, const Context& source) {
  Context target = source;
  if (j.contains("n_target")) {
    long n = integer(j.at("n_target"), "n_target");
    if (n < 0) throw FormatError("n_target must be nonnegative");
    target.n = static_cast<unsigned>(n);
  }
  const Json& u = array(field(j, "u_images"), "u_images");
  if (u.size() != source.n) throw FormatError("expected one u-image per source variable");
  std::vector<RatFunc> images;
  for (const auto& e : u) images.push_back(expr_from(e, target));
  images.push_back(expr_from(field(j, "t_image"), target));
  return {source, target, std::move(images)};
}

Json to_json(const diffmod::ScaleReport& s) {
  Json e = Json::array();
  for (const auto& x : s.entries) e.push_back({{"scale_logp", rational_json(x.scale_logp)}, {"mult", x.multiplicity}});
  return {{"axis", s.axis},
          {"r", rational_json(s.r)},
          {"rank", s.rank},
          {"polygon", to_json(s.polygon)},
          {"sp_val", rational_json(s.sp_val)},
          {"readable", s.readable},
          {"entries", e},
          {"unreadable", s.unreadable},
          {"unreadable_bound", rational_json(s.unreadable_bound)}};
}

diffmod::ScaleReport scale_report_from(const Json& j, const Context& ctx) {
  diffmod::ScaleReport s;
  s.axis = axis_from(field(j, "axis"), ctx);
  s.r = rational_from(field(j, "r"));
  s.rank = static_cast<std::size_t>(integer(field(j, "rank"), "rank"));
  s.polygon = polygon_from(field(j, "polygon"));
  s.sp_val = rational_from(field(j, "sp_val"));
  s.readable = boolean(field(j, "readable"), "readable");
  for (const auto& e : array(field(j, "entries"), "entries"))
    s.entries.push_back(
        {rational_from(field(e, "scale_logp")), static_cast<unsigned>(integer(field(e, "mult"), "mult"))});
  s.unreadable = static_cast<unsigned>(integer(field(j, "unreadable"), "unreadable"));
  s.unreadable_bound = rational_from(field(j, "unreadable_bound"));
  return s;
}

Json to_json(const swan::BreakFit& f) {
  return {{"mode", swan::to_string(f.mode)},
          {"b", rational_json(f.b)},
          {"intercept", rational_json(f.intercept)},
          {"lattice_ok", f.lattice_ok},
          {"window", rationals_json(f.window)},
          {"residuals", rationals_json(f.residuals)}};
}

swan::BreakFit fit_from(const Json& j) {
  swan::BreakFit f;
  f.mode = fit_mode_from(text(field(j, "mode"), "mode"));
  f.b = rational_from(field(j, "b"));
  f.intercept = rational_from(field(j, "intercept"));
  f.lattice_ok = boolean(field(j, "lattice_ok"), "lattice_ok");
  f.window = rationals_from(field(j, "window"));
  f.residuals = rationals_from(field(j, "residuals"));
  return f;
}

Json to_json(const swan::SwanReport& s) {
  Json fits = Json::array();
  for (const auto& f : s.fits) fits.push_back(to_json(f));
  Json dom = Json::array();
  for (const auto& d : s.dominance) dom.push_back({{"axis", d.axis}, {"dominant", d.dominant}});
  return {{"rank", s.rank},
          {"breaks", rationals_json(s.breaks)},
          {"swan", optional_json(s.swan)},
          {"hasse_arf", s.hasse_arf},
          {"ok", s.ok},
          {"fits", fits},
          {"dominance", dom},
          {"window", rationals_json(s.window)},
          {"break0_at", optional_json(s.break0_at)},
          {"break0_needed", optional_json(s.break0_needed)},
          {"blocks", s.blocks},
          {"heuristic", s.heuristic},
          {"diagnostics", s.diagnostics}};
}

swan::SwanReport swan_report_from(const Json& j) {
  swan::SwanReport s;
  s.rank = static_cast<std::size_t>(integer(field(j, "rank"), "rank"));
  s.breaks = rationals_from(field(j, "breaks"));
  s.swan = optional_rational(j, "swan");
  s.hasse_arf = boolean(field(j, "hasse_arf"), "hasse_arf");
  s.ok = boolean(field(j, "ok"), "ok");
  for (const auto& f : array(field(j, "fits"), "fits")) s.fits.push_back(fit_from(f));
  for (const auto& d : array(field(j, "dominance"), "dominance"))
    s.dominance.push_back(
        {static_cast<unsigned>(integer(field(d, "axis"), "axis")), boolean(field(d, "dominant"), "dominant")});
  s.window = rationals_from(field(j, "window"));
  s.break0_at = optional_rational(j, "break0_at");
  s.break0_needed = optional_rational(j, "break0_needed");
  s.blocks = static_cast<std::size_t>(integer(field(j, "blocks"), "blocks"));
  s.heuristic = boolean(field(j, "heuristic"), "heuristic");
  for (const auto& d : array(field(j, "diagnostics"), "diagnostics")) s.diagnostics.push_back(text(d, "diagnostic"));
  return s;
}

Json to_json(const galois::ASCharacter& c) { return {{"p", c.p()}, {"n", c.n()}, {"f", c.f.to_string()}}; }

galois::ASCharacter character_from(const Json& j, const Context& fallback) {
  Context ctx = context_from(j, fallback);
  const Json& f = field(j, "f");
  return {galois::FpLaurent::parse(f.is_number_integer() ? std::to_string(f.get<long>()) : text(f, "f"), ctx.p,
                                   ctx.n)};
}

Json to_json(const galois::KatoReport& k) {
  return {{"swan", k.swan},
          {"reduced", k.reduced.to_string()},
          {"witness", k.witness.to_string()},
          {"steps", k.steps},
          {"obstruction", k.obstruction ? Json(k.obstruction->to_string()) : Json(nullptr)}};
}

galois::KatoReport kato_from(const Json& j, unsigned p, unsigned n) {
  galois::KatoReport k;
  k.swan = static_cast<unsigned>(integer(field(j, "swan"), "swan"));
  k.reduced = galois::FpLaurent::parse(text(field(j, "reduced"), "reduced"), p, n);
  k.witness = galois::FpLaurent::parse(text(field(j, "witness"), "witness"), p, n);
  for (const auto& s : array(field(j, "steps"), "steps")) k.steps.push_back(text(s, "step"));
  if (j.contains("obstruction") && !j.at("obstruction").is_null())
    k.obstruction = galois::FpLaurent::parse(text(j.at("obstruction"), "obstruction"), p, n);
  return k;
}

Json to_json(const galois::Comparison& c) {
  return {{"kato", to_json(c.kato)},
          {"differential", to_json(c.differential)},
          {"equal", c.equal},
          {"naive", c.naive ? to_json(*c.naive) : Json(nullptr)}};
}

galois::Comparison comparison_from(const Json& j, unsigned p, unsigned n) {
  galois::Comparison c;
  c.kato = kato_from(field(j, "kato"), p, n);
  c.differential = swan_report_from(field(j, "differential"));
  c.equal = boolean(field(j, "equal"), "equal");
  if (j.contains("naive") && !j.at("naive").is_null()) c.naive = swan_report_from(j.at("naive"));
  return c;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
}

std::string profile_csv(const swan::Profile& profile, const Context& ctx) {
  std::ostringstream out;
  out << "r,axis,value,readable\n";
  for (const auto& s : profile.samples)
    for (const auto& a : s.axes) {
      const std::string lead = to_string(s.r) + "," + ctx.axis_name(a.axis) + ",";
      for (const auto& e : a.entries)
        for (unsigned k = 0; k < e.multiplicity; ++k) out << lead << to_string(e.scale_logp) << ",true\n";
      for (unsigned k = 0; k < a.unreadable; ++k) out << lead << to_string(a.unreadable_bound) << ",false\n";
    }
  return out.str();
}

}  // namespace dswan::io
