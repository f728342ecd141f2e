#pragma once

#include <string>
#include <string_view>

#include "gt/automorphism.hpp"
#include "gt/bialgebra.hpp"
#include "gt/completion.hpp"
#include "gt/framings.hpp"
#include "json.hpp"

namespace gt::io {

using nlohmann::json;

// "@path" reads the file; anything else is returned unchanged.
std::string resolve_text(std::string_view arg);
// Parses JSON, mapping syntax errors to ParseError.
json parse_json(std::string_view text);

Rational rational_from_json(const json& j);
std::string rational_text(const Rational& q);

json surface_json(const Surface& s);
Framing framing_from_json(const Surface& s, const json& j);
json framing_json(const Framing& xi);

// Accepts [{"coef","word"}...], {"terms": [...]} or a bare word string.
LoopCombo combo_from_json(const Surface& s, const json& j);
// Inline JSON, @file, an existing file path, or a plain word.
LoopCombo combo_from_arg(const Surface& s, std::string_view arg);
json combo_json(const Surface& s, const LoopCombo& a);
json bicombo_json(const Surface& s, const BiLoopCombo& t);

FreeGroupAuto auto_from_json(const Surface& s, const json& j);
json auto_json(const FreeGroupAuto& psi);

json series_json(const Surface& s, const Series& x);
json series_json(const Surface& s, const CyclicSeries& x);
json invariants_json(const OrbitInvariants& inv);

std::string render_combo(const Surface& s, const LoopCombo& a);
std::string render_bicombo(const Surface& s, const BiLoopCombo& t);
std::string render_series(const Surface& s, const std::vector<Series::Component>& comps);

}  // namespace gt::io
