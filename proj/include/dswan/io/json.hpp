#pragma once

// JSON and CSV forms of the library's values. Rationals are written as
// "a/b" strings and polynomials in the expression grammar, so everything
// emitted here parses back to an equal value.

#include <optional>
#include <string>

#include <json.hpp>

#include "dswan/diffmod/substitution.hpp"
#include "dswan/galois/artin_schreier.hpp"
#include "dswan/ore/hensel.hpp"
#include "dswan/swan/breaks.hpp"

namespace dswan::io {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent JSON document.
class FormatError : public ParseError {
 public:
  explicit FormatError(const std::string& what) : ParseError(what, 0) {}
};

Json rational_json(const Rational& q);
Rational rational_from(const Json& j);
Json valuation_json(const Valuation& v);  ///< "inf" when infinite
Valuation valuation_from(const Json& j);

/// Axis names "u1".."un", "t"; also accepts "b1".."bn" and plain indices.
unsigned axis_from(const Json& j, const Context& ctx);

Json to_json(const Context& ctx);
/// Fields absent from `j` are taken from `fallback`.
Context context_from(const Json& j, const Context& fallback = {});

Json to_json(const ore::TwistedPoly& p);
ore::TwistedPoly twisted_from(const Json& j, const Context& fallback = {});

Json to_json(const ore::NewtonPolygon& np);
ore::NewtonPolygon polygon_from(const Json& j);

Json to_json(const ore::HenselResult& h);
ore::HenselResult hensel_from(const Json& j, const Context& fallback = {});

Json to_json(const diffmod::DiffModule& m);
diffmod::DiffModule module_from(const Json& j, const Context& fallback = {});

/// {u_images, t_image, n_target?}; n_target is written only when it
/// differs from the source's n.
Json to_json(const diffmod::Substitution& s);
diffmod::Substitution substitution_from(const Json& j, const Context& source);

Json to_json(const diffmod::ScaleReport& s);
diffmod::ScaleReport scale_report_from(const Json& j, const Context& ctx);

Json to_json(const swan::BreakFit& f);
swan::BreakFit fit_from(const Json& j);
Json to_json(const swan::SwanReport& s);
swan::SwanReport swan_report_from(const Json& j);

Json to_json(const galois::ASCharacter& c);
galois::ASCharacter character_from(const Json& j, const Context& fallback = {});
Json to_json(const galois::KatoReport& k);
galois::KatoReport kato_from(const Json& j, unsigned p, unsigned n);
Json to_json(const galois::Comparison& c);
galois::Comparison comparison_from(const Json& j, unsigned p, unsigned n);

/// Parses a whole document, mapping syntax errors to ParseError.
Json parse(const std::string& text);

/// Header "r,axis,value,readable"; one row per multiset position at each
/// sampled radius and axis. Unreadable rows carry the upper bound.
std::string profile_csv(const swan::Profile& profile, const Context& ctx);

}  // namespace dswan::io
