#include "json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gt/error.hpp"

namespace gt::io {

namespace {

Error parse_error(const std::string& msg) { return Error(ErrorCode::ParseError, msg); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string resolve_text(std::string_view arg) {
  if (!arg.empty() && arg.front() == '@') return read_file(std::string(arg.substr(1)));
  return std::string(arg);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("bad JSON: ") + e.what());
  }
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return rational_of(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw parse_error("coefficient must be an integer or a string");
}

std::string rational_text(const Rational& q) { return q.get_str(); }

json surface_json(const Surface& s) {
  json j{{"g", s.genus()}, {"n", s.n()}};
  j["generators"] = s.generator_names();
  json b = json::array();
  for (const CyclicWord& w : s.boundary_words()) b.push_back(s.format(w));
  j["boundary"] = b;
  return j;
}

Framing framing_from_json(const Surface& s, const json& j) {
  if (!j.is_object()) throw parse_error("framing must be an object");
  std::vector<long long> t(s.rank(), 0);
  if (j.contains("t")) {
    const json& tw = j.at("t");
    if (!tw.is_object()) throw parse_error("framing \"t\" must be an object");
    for (const auto& [name, v] : tw.items()) {
      const Letter l = s.parse_letter(name);
      if (l.inverse) throw parse_error("framing keys are lowercase generator names");
      if (!v.is_number_integer()) throw parse_error("twists must be integers");
      t[l.gen] = v.get<long long>();
    }
  }
  return Framing(s, std::move(t));
}

json framing_json(const Framing& xi) {
  json t = json::object();
  const Surface& s = xi.surface();
  for (int g = 0; g < s.rank(); ++g) t[s.generator_name(g)] = xi.twist(g);
  return json{{"t", t}};
}

LoopCombo combo_from_json(const Surface& s, const json& j) {
  if (j.is_string()) return LoopCombo::single(s.parse_cyclic(j.get<std::string>()));
  const json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("terms")) throw parse_error("combo object needs \"terms\"");
    arr = &j.at("terms");
  }
  if (!arr->is_array()) throw parse_error("combo must be an array of terms");
  LoopCombo out;
  for (const json& term : *arr) {
    if (!term.is_object() || !term.contains("word")) throw parse_error("combo term needs \"word\"");
    const Rational c = term.contains("coef") ? rational_from_json(term.at("coef")) : Rational(1);
    if (!term.at("word").is_string()) throw parse_error("word must be a string");
    out.add(s.parse_cyclic(term.at("word").get<std::string>()), c);
  }
  return out;
}

LoopCombo combo_from_arg(const Surface& s, std::string_view arg) {
  std::string text;
  if (!arg.empty() && arg.front() == '@') {
    text = resolve_text(arg);
  } else if (std::filesystem::is_regular_file(std::string(arg))) {
    text = read_file(std::string(arg));
  } else {
    text = std::string(arg);
  }
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{' || text[first] == '"'))
    return combo_from_json(s, parse_json(text));
  return LoopCombo::single(s.parse_cyclic(text));
}

json combo_json(const Surface& s, const LoopCombo& a) {
  json out = json::array();
  for (const auto& [w, c] : a.terms()) out.push_back({{"coef", rational_text(c)}, {"word", s.format(w)}});
  return out;
}

json bicombo_json(const Surface& s, const BiLoopCombo& t) {
  json out = json::array();
  for (const auto& [k, c] : t.terms())
    out.push_back(
        {{"coef", rational_text(c)}, {"left", s.format(k.first)}, {"right", s.format(k.second)}});
  return out;
}

FreeGroupAuto auto_from_json(const Surface& s, const json& j) {
  if (!j.is_object() || !j.contains("images") || !j.at("images").is_object())
    throw parse_error("automorphism needs an \"images\" object");
  std::vector<Word> images;
  for (int g = 0; g < s.rank(); ++g) images.push_back(Word{Letter{g, false}});
  for (const auto& [name, v] : j.at("images").items()) {
    const Letter l = s.parse_letter(name);
    if (l.inverse) throw parse_error("image keys are lowercase generator names");
    if (!v.is_string()) throw parse_error("images must be word strings");
    images[l.gen] = free_reduce(s.parse_word(v.get<std::string>()));
  }
  return FreeGroupAuto::from_images(s, std::move(images));
}

json auto_json(const FreeGroupAuto& psi) {
  const Surface& s = psi.surface();
  json im = json::object();
  for (int g = 0; g < s.rank(); ++g) im[s.generator_name(g)] = s.format_word(psi.images()[g]);
  return json{{"images", im}};
}

namespace {

json components_json(const Surface& s, const std::vector<Series::Component>& comps, int N) {
  json c = json::object();
  for (int k = 0; k < static_cast<int>(comps.size()); ++k) {
    if (comps[k].empty()) continue;
    json terms = json::array();
    for (const auto& [m, q] : comps[k]) {
      json mono = json::array();
      for (int g : m) mono.push_back(series_letter_name(s, g));
      terms.push_back({{"coef", rational_text(q)}, {"mono", mono}});
    }
    c[std::to_string(k)] = terms;
  }
  return json{{"N", N}, {"components", c}};
}

}  // namespace

json series_json(const Surface& s, const Series& x) {
  return components_json(s, x.components(), x.truncation());
}

json series_json(const Surface& s, const CyclicSeries& x) {
  json j = components_json(s, x.components(), x.truncation());
  j["cyclic"] = true;
  return j;
}

json invariants_json(const OrbitInvariants& inv) {
  json j{{"d", inv.d}};
  j["arf"] = inv.arf ? json(*inv.arf) : json(nullptr);
  j["A"] = inv.a_inv ? json(*inv.a_inv) : json(nullptr);
  return j;
}

namespace {

std::string signed_term(bool first, const Rational& c, const std::string& body) {
  std::string out;
  Rational a = c;
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (a < 0) a = -a;
  if (a != 1) out += a.get_str() + " ";
  return out + body;
}

}  // namespace

std::string render_combo(const Surface& s, const LoopCombo& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    out += signed_term(first, c, "(" + s.format(w) + ")");
    first = false;
  }
  return out;
}

std::string render_bicombo(const Surface& s, const BiLoopCombo& t) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : t.terms()) {
    out += signed_term(first, c, "(" + s.format(k.first) + ") ⊗ (" + s.format(k.second) + ")");
    first = false;
  }
  return out;
}

std::string render_series(const Surface& s, const std::vector<Series::Component>& comps) {
  std::string out;
  bool first = true;
  for (const auto& comp : comps)
    for (const auto& [m, c] : comp) {
      std::string body;
      for (int g : m) body += series_letter_name(s, g);
      if (body.empty()) body = "1";
      out += signed_term(first, c, body);
      first = false;
    }
  return out.empty() ? "0" : out;
}

}  // namespace gt::io
