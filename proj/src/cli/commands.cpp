#include "dswan/cli/commands.hpp"

#include <atomic>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "dswan/error.hpp"
#include "dswan/expr.hpp"
#include "dswan/io/json.hpp"

namespace dswan::cli {

namespace {

using io::Json;

Format format_or(const RunConfig& cfg, Format fallback) { return cfg.format.value_or(fallback); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'", 0);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json read_json(const std::string& path) { return io::parse(read_file(path)); }

Context base_context(const RunConfig& cfg) { return Context{cfg.p, cfg.n, cfg.uses_pi}; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json error_json(const char* kind, const std::string& message) { return {{"error", kind}, {"message", message}}; }

void require_json_or_table(const RunConfig& cfg, const char* cmd) {
  if (format_or(cfg, Format::Json) == Format::Csv)
    throw ParseError(std::string("csv output is only available for profile, not ") + cmd, 0);
}

/// Runs a command body, translating exceptions into exit codes.
Outcome guarded(const std::function<Outcome()>& body) {
  try {
    return body();
  } catch (const ore::ThresholdCollision& e) {
    Json j = error_json("threshold_collision", e.what());
    j["slope"] = io::rational_json(e.slope());
    return {kPrecondition, "", dump(j)};
  } catch (const ParseError& e) {
    Json j = error_json("parse", e.what());
    j["position"] = e.position();
    return {kParse, "", dump(j)};
  } catch (const PreconditionError& e) {
    return {kPrecondition, "", dump(error_json("precondition", e.what()))};
  }
}

ore::TwistedPoly load_twisted(const RunConfig& cfg) {
  const Context ctx = base_context(cfg);
  if (cfg.input) {
    Json j = read_json(*cfg.input);
    if (!cfg.rs.empty()) j["r"] = io::rational_json(cfg.rs.front());
    if (cfg.axis) j["axis"] = *cfg.axis;
    return io::twisted_from(j, ctx);
  }
  if (cfg.coeffs.empty()) throw ParseError("give --input or --coeffs", 0);
  ore::DiffContext d{ctx, cfg.axis ? io::axis_from(*cfg.axis, ctx) : ctx.t_axis(),
                     cfg.rs.empty() ? Rational(1) : cfg.rs.front()};
  d.validate();
  std::vector<RatFunc> coeffs;
  for (const auto& c : cfg.coeffs) coeffs.push_back(parse_expr(c, ctx));
  return {d, coeffs};
}

diffmod::DiffModule load_module(const RunConfig& cfg) {
  Context ctx = base_context(cfg);
  std::optional<diffmod::DiffModule> m;
  if (cfg.dwork) {
    if (cfg.input) throw ParseError("give only one of --input and --dwork", 0);
    ctx.uses_pi = true;
    m = diffmod::DiffModule::dwork(ctx, parse_laurent(*cfg.dwork, ctx));
  } else if (cfg.input) {
    m = io::module_from(read_json(*cfg.input), ctx);
  } else {
    throw ParseError("give --input or --dwork", 0);
  }
  if (cfg.pullback) m = diffmod::pullback(*m, io::substitution_from(read_json(*cfg.pullback), m->context()));
  if (cfg.rotate)
    m = diffmod::pullback(*m, diffmod::Substitution::rotation(m->context(), io::axis_from(*cfg.rotate, m->context())));
  if (cfg.generic_rotation) m = diffmod::pullback(*m, diffmod::Substitution::generic_rotation(m->context()));
  if (cfg.tame) m = diffmod::pullback(*m, diffmod::Substitution::tame(m->context(), *cfg.tame));
  if (cfg.frobenius) m = diffmod::pullback(*m, diffmod::Substitution::frobenius(m->context(), *cfg.frobenius));
  return *m;
}

swan::BreakOptions break_options(const RunConfig& cfg) {
  swan::BreakOptions opts;
  if (!cfg.rs.empty()) opts.rs = cfg.rs;
  opts.fixed_grid = cfg.fixed_grid;
  opts.seed = cfg.seed;
  return opts;
}

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s;
}

std::string swan_table(const swan::SwanReport& r) {
  std::ostringstream o;
  o << "rank       " << r.rank << "\n";
  o << "breaks     " << (r.ok ? join(r.breaks) : "(incomplete)") << "\n";
  o << "swan       " << (r.swan ? to_string(*r.swan) : "-") << "\n";
  o << "hasse-arf  " << (r.hasse_arf ? "yes" : "no") << "\n";
  o << "window     " << join(r.window) << "\n";
  for (const auto& f : r.fits)
    o << "fit        " << swan::to_string(f.mode) << " b=" << to_string(f.b) << " c=" << to_string(f.intercept)
      << "\n";
  for (const auto& d : r.diagnostics) o << "note       " << d << "\n";
  return o.str();
}

Json corpus_item(const std::string& line, const RunConfig& cfg, bool& parse_failure) {
  Json item;
  try {
    const galois::ASCharacter chi = io::character_from(io::parse(line), base_context(cfg));
    item["character"] = io::to_json(chi);
    const galois::Comparison c = galois::compare(chi, break_options(cfg));
    item["kato"] = c.kato.swan;
    item["differential"] = c.differential.swan ? io::rational_json(*c.differential.swan) : Json(nullptr);
    item["fit"] = c.differential.fits.empty() ? Json(nullptr) : Json(swan::to_string(c.differential.fits.front().mode));
    item["equal"] = c.equal;
  } catch (const ParseError& e) {
    parse_failure = true;
    item["error"] = e.what();
    item["equal"] = false;
  } catch (const PreconditionError& e) {
    item["error"] = e.what();
    item["equal"] = false;
  }
  return item;
}

Outcome run_corpus(const RunConfig& cfg) {
  std::vector<std::string> lines;
  {
    std::istringstream in(read_file(*cfg.corpus));
    for (std::string l; std::getline(in, l);)
      if (l.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(l);
  }
  std::vector<Json> items(lines.size());
  std::vector<char> parse_failures(lines.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < lines.size();) {
      bool bad = false;
      items[i] = corpus_item(lines[i], cfg, bad);
      parse_failures[i] = bad;
    }
  };
  unsigned jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, std::max<std::size_t>(1, lines.size()));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t passed = 0;
  bool any_parse = false;
  for (std::size_t i = 0; i < items.size(); ++i) {
    passed += items[i]["equal"].get<bool>();
    any_parse = any_parse || parse_failures[i];
  }
  const std::size_t failed = items.size() - passed;
  Outcome out;
  out.code = any_parse ? kParse : failed ? kDiagnostic : kOk;
  if (format_or(cfg, Format::Json) == Format::Table) {
    std::ostringstream o;
    for (const auto& it : items)
      o << (it["equal"].get<bool>() ? "pass  " : "FAIL  ")
        << (it.contains("character") ? it["character"]["f"].get<std::string>() : it["error"].get<std::string>())
        << "\n";
    o << passed << " passed, " << failed << " failed\n";
    out.out = o.str();
  } else {
    out.out = dump({{"items", items}, {"passed", passed}, {"failed", failed}});
  }
  return out;
}

}  // namespace

void validate(const RunConfig& cfg) {
  base_context(cfg).validate();
  if (cfg.prec <= 0) throw PreconditionError("precision must be positive");
  for (const auto& r : cfg.rs)
    if (r <= 0) throw PreconditionError("radius parameters must be positive");
  if (cfg.s_max == 0) throw PreconditionError("s_max must be positive");
}

Outcome cmd_np(const RunConfig& cfg) {
  return guarded([&] {
    validate(cfg);
    require_json_or_table(cfg, "np");
    const ore::NewtonPolygon np = ore::newton_polygon(load_twisted(cfg));
    if (format_or(cfg, Format::Json) == Format::Json) return Outcome{kOk, dump(io::to_json(np)), ""};
    std::ostringstream o;
    for (const auto& s : np.slopes)
      o << to_string(s.slope) << " x" << s.multiplicity << (s.readable ? "" : " (unreadable)") << "\n";
    o << "threshold " << to_string(np.threshold) << "\n";
    return Outcome{kOk, o.str(), ""};
  });
}

Outcome cmd_factor(const RunConfig& cfg) {
  return guarded([&] {
    validate(cfg);
    require_json_or_table(cfg, "factor");
    const ore::TwistedPoly p = load_twisted(cfg);
    const ore::HenselResult h = ore::hensel_slope_factor(p, {cfg.prec, cfg.budget});
    Outcome out{h.reached ? kOk : kDiagnostic, "", ""};
    if (!h.reached) out.err = dump(error_json("precision_not_reached", "iteration budget exhausted"));
    if (format_or(cfg, Format::Json) == Format::Json) {
      out.out = dump(io::to_json(h));
    } else {
      std::ostringstream o;
      for (const auto& f : h.factors) {
        o << (f.slope ? "slope " + to_string(*f.slope) : std::string("plus part")) << ":";
        for (const auto& c : f.poly.coeffs()) o << " [" << c.to_string() << "]";
        o << "\n";
      }
      o << "achieved " << h.achieved.to_string() << "\n";
      out.out = o.str();
    }
    return out;
  });
}

Outcome cmd_breaks(const RunConfig& cfg) {
  return guarded([&] {
    validate(cfg);
    require_json_or_table(cfg, "breaks");
    const diffmod::DiffModule m = load_module(cfg);
    const swan::BreakOptions opts = break_options(cfg);
    const swan::SwanReport r = swan::break_multiset(m, opts);
    Outcome out{r.ok ? kOk : kDiagnostic, "", ""};
    Json j = io::to_json(r);
    std::optional<swan::BreakFit> axis_fit;
    if (cfg.axis) {
      axis_fit = swan::axis_break(m, io::axis_from(*cfg.axis, m.context()), opts.rs);
      j["axis_fit"] = io::to_json(*axis_fit);
    }
    if (format_or(cfg, Format::Json) == Format::Json) {
      out.out = dump(j);
    } else {
      out.out = swan_table(r);
      if (axis_fit)
        out.out += "axis fit   " + swan::to_string(axis_fit->mode) + " b=" + to_string(axis_fit->b) + "\n";
    }
    if (!r.ok) out.err = dump(error_json("diagnostic", "no certified break multiset on this window"));
    return out;
  });
}

Outcome cmd_profile(const RunConfig& cfg) {
  return guarded([&] {
    validate(cfg);
    const diffmod::DiffModule m = load_module(cfg);
    std::vector<unsigned> axes;
    if (cfg.axis) axes.push_back(io::axis_from(*cfg.axis, m.context()));
    const swan::Profile prof = swan::sample_profile(m, axes, break_options(cfg).rs);
    Outcome out{prof.violations.empty() ? kOk : kDiagnostic, "", ""};
    switch (format_or(cfg, Format::Csv)) {
      case Format::Csv:
        out.out = io::profile_csv(prof, m.context());
        break;
      case Format::Json: {
        Json samples = Json::array();
        for (const auto& s : prof.samples) {
          Json axes_j = Json::array();
          for (const auto& a : s.axes) axes_j.push_back(io::to_json(a));
          samples.push_back({{"r", io::rational_json(s.r)}, {"axes", axes_j}});
        }
        Json v = Json::array();
        for (const auto& c : prof.violations)
          v.push_back({{"axis", c.axis},
                       {"r", {io::rational_json(c.r1), io::rational_json(c.r2), io::rational_json(c.r3)}}});
        out.out = dump({{"samples", samples}, {"violations", v}, {"break0_candidate", prof.break0_candidate}});
        break;
      }
      case Format::Table: {
        std::ostringstream o;
        for (const auto& s : prof.samples)
          for (const auto& a : s.axes)
            o << to_string(s.r) << "\t" << m.context().axis_name(a.axis) << "\t" << to_string(a.scale_logp())
              << (a.readable ? "" : " (bound)") << "\n";
        out.out = o.str();
        break;
      }
    }
    if (!prof.violations.empty()) out.err = dump(error_json("diagnostic", "convexity violated"));
    return out;
  });
}

Outcome cmd_swan_as(const RunConfig& cfg) {
  return guarded([&] {
    validate(cfg);
    require_json_or_table(cfg, "swan-as");
    if (cfg.corpus) return run_corpus(cfg);
    galois::ASCharacter chi;
    if (cfg.f && cfg.input) throw ParseError("give only one of --input and --f", 0);
    if (cfg.f)
      chi = {galois::FpLaurent::parse(*cfg.f, cfg.p, cfg.n)};
    else if (cfg.input)
      chi = io::character_from(read_json(*cfg.input), base_context(cfg));
    else
      throw ParseError("give --f, --input or --corpus", 0);
    const galois::Comparison c = galois::compare(chi, break_options(cfg));
    Outcome out{c.equal ? kOk : kDiagnostic, "", ""};
    if (format_or(cfg, Format::Json) == Format::Json) {
      Json j = io::to_json(c);
      j["character"] = io::to_json(chi);
      out.out = dump(j);
    } else {
      std::ostringstream o;
      o << "character     " << chi.f.to_string() << "\n";
      o << "reduced       " << c.kato.reduced.to_string() << "\n";
      o << "kato swan     " << c.kato.swan << "\n";
      o << "differential  " << (c.differential.swan ? to_string(*c.differential.swan) : "-") << "\n";
      o << "equal         " << (c.equal ? "yes" : "no") << "\n";
      out.out = o.str();
    }
    if (!c.equal) out.err = dump(error_json("diagnostic", "conductors disagree or were not certified"));
    return out;
  });
}

Outcome run(const RunConfig& cfg) {
  if (cfg.subcommand == "np") return cmd_np(cfg);
  if (cfg.subcommand == "factor") return cmd_factor(cfg);
  if (cfg.subcommand == "breaks") return cmd_breaks(cfg);
  if (cfg.subcommand == "profile") return cmd_profile(cfg);
  if (cfg.subcommand == "swan-as") return cmd_swan_as(cfg);
  return {kParse, "", dump(error_json("parse", "unknown subcommand '" + cfg.subcommand + "'"))};
}

std::vector<Rational> parse_grid(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      out.push_back(parse_rational(piece));
    } catch (const ParseError& e) {
      throw ParseError("bad rational '" + piece + "'", start + e.position());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace dswan::cli
