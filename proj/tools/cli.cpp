#include "cli.hpp"

#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gt/checks.hpp"
#include "gt/error.hpp"
#include "json_io.hpp"

namespace gt::cli {

namespace {

using io::json;

struct Common {
  int g = -1;
  int n = -1;
  std::string framing;
  bool pretty = false;
};

struct Args {
  Common c;
  std::vector<std::string> combos;
  std::string word;
  std::string other;
  std::string images;
  bool unframed = false;
  unsigned threads = 1;
  int puncture = 0;
  int N = 4;
  std::string expansion = "exp";
  bool log = false;
  bool cyclic = false;
  long long box = 2;
  std::vector<std::string> surfaces;
  int samples = 25;
  std::uint64_t seed = 1;
};

void add_common(CLI::App* sub, Common& c, bool need_surface = true) {
  auto* g = sub->add_option("--g", c.g, "genus")->check(CLI::NonNegativeNumber);
  auto* n = sub->add_option("--n", c.n, "number of marked punctures besides the outer one")
                ->check(CLI::NonNegativeNumber);
  if (need_surface) {
    g->required();
    n->required();
  }
  sub->add_option("--framing", c.framing, "framing JSON or @file");
  sub->add_flag("--pretty", c.pretty, "add a human-readable rendering");
}

Surface surface_of(const Common& c) { return build_surface(c.g, c.n); }

Framing framing_of(const Surface& s, const std::string& text) {
  if (text.empty()) return Framing(s);
  return io::framing_from_json(s, io::parse_json(io::resolve_text(text)));
}

Expansion expansion_of(const Surface& s, const Args& a) {
  if (a.expansion == "exp") return exp_expansion(s, a.N);
  if (a.expansion == "boundary") return boundary_adapted_expansion(s, a.N);
  throw Error(ErrorCode::ParseError, "unknown expansion " + a.expansion);
}

json level_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

json excess_json(const std::vector<WeightCount>& e) {
  json out = json::array();
  for (const WeightCount& w : e) out.push_back({{"weight", w.weight}, {"terms", w.terms}});
  return out;
}

std::pair<int, int> parse_surface_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "surface must be g,n");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "surface must be g,n");
  }
}

json dispatch(const std::string& cmd, const Args& a) {
  json out{{"v", 1}};
  if (cmd == "check") {
    std::vector<std::pair<int, int>> list;
    for (const auto& t : a.surfaces) list.push_back(parse_surface_pair(t));
    if (a.c.g >= 0 && a.c.n >= 0) list.emplace_back(a.c.g, a.c.n);
    if (list.empty()) list = {{1, 0}, {0, 2}, {1, 1}, {2, 0}};
    json surfaces = json::array();
    bool ok = true;
    for (auto [g, n] : list) {
      const Surface s = build_surface(g, n);
      json suites = json::object();
      for (const auto& [name, t] : run_invariant_suite(s, a.samples, a.seed)) {
        suites[name] = {{"pass", t.pass}, {"fail", t.fail}};
        ok = ok && t.fail == 0;
      }
      surfaces.push_back({{"g", g}, {"n", n}, {"suites", suites}});
    }
    out["surfaces"] = surfaces;
    out["ok"] = ok;
    return out;
  }

  const Surface s = surface_of(a.c);
  const Framing xi = framing_of(s, a.c.framing);
  auto pretty = [&](const std::string& text) {
    if (a.c.pretty) out["pretty"] = text;
  };

  if (cmd == "bracket") {
    const LoopCombo r = goldman_bracket(s, io::combo_from_arg(s, a.combos.at(0)),
                                        io::combo_from_arg(s, a.combos.at(1)), a.threads);
    out["terms"] = io::combo_json(s, r);
    pretty(io::render_combo(s, r));
  } else if (cmd == "cobracket") {
    const LoopCombo x = io::combo_from_arg(s, a.combos.at(0));
    const BiLoopCombo r = a.unframed ? unframed_cobracket(s, x) : turaev_cobracket(xi, x);
    out["terms"] = io::bicombo_json(s, r);
    out["framed"] = !a.unframed;
    pretty(io::render_bicombo(s, r));
  } else if (cmd == "rot") {
    out["rot"] = rotation_number(xi, s.parse_cyclic(a.word));
  } else if (cmd == "degrees") {
    out["d"] = local_degrees(xi);
  } else if (cmd == "classify") {
    const OrbitInvariants inv = orbit_invariants(xi);
    out.update(io::invariants_json(inv));
    const Framing other = a.other.empty() ? Framing(s) : framing_of(s, a.other);
    out["same_orbit"] = same_mcg_orbit(xi, other);
    out["quasi_algebraic"] = quasi_algebraic_framing_exists(xi);
  } else if (cmd == "orbit") {
    const std::vector<Framing> orbit = orbit_in_box(xi, a.box);
    json members = json::array();
    for (const Framing& f : orbit) members.push_back(io::framing_json(f));
    out["box"] = a.box;
    out["size"] = orbit.size();
    out["members"] = members;
    out["invariants"] = io::invariants_json(orbit_invariants(xi));
  } else if (cmd == "exists-qaf") {
    out["exists"] = quasi_algebraic_framing_exists(xi);
  } else if (cmd == "push") {
    const FreeGroupAuto psi = point_push_automorphism(s, a.puncture, s.parse_word(a.word));
    out.update(io::auto_json(psi));
  } else if (cmd == "cocycle") {
    FreeGroupAuto psi = FreeGroupAuto::identity(s);
    if (!a.images.empty()) {
      psi = io::auto_from_json(s, io::parse_json(io::resolve_text(a.images)));
    } else if (a.puncture > 0) {
      psi = point_push_automorphism(s, a.puncture, s.parse_word(a.word));
    } else {
      throw Error(ErrorCode::ParseError, "cocycle needs --images or --puncture with --word");
    }
    require_mapping_class(psi);
    const auto f = framing_cocycle(psi, xi);
    json cf = json::object();
    for (int i = 1; i <= s.genus(); ++i) {
      cf[s.generator_name(s.x(i))] = f[2 * (i - 1)];
      cf[s.generator_name(s.y(i))] = f[2 * (i - 1) + 1];
    }
    out["cocycle"] = cf;
    out["pushforward"] = io::framing_json(pushforward_framing(psi, xi));
  } else if (cmd == "expand") {
    const Expansion th = expansion_of(s, a);
    if (a.cyclic) {
      const CyclicSeries r = expand_loop(th, s.parse_cyclic(a.word));
      out["series"] = io::series_json(s, r);
      pretty(io::render_series(s, r.components()));
    } else {
      Series r = expand_word(th, s.parse_word(a.word));
      if (a.log) r = series_log(r);
      out["series"] = io::series_json(s, r);
      out["log"] = a.log;
      pretty(io::render_series(s, r.components()));
    }
  } else if (cmd == "boundary-defect") {
    const BoundaryDefect d = boundary_defect(expansion_of(s, a));
    out["defect"] = io::series_json(s, d.defect);
    out["weight2"] = io::series_json(s, d.weight2);
    out["weight2_ok"] = d.weight2_ok;
    out["zero"] = d.defect.is_zero();
    pretty(io::render_series(s, d.defect.components()));
  } else if (cmd == "filtration-report") {
    const LoopCombo x = io::combo_from_arg(s, a.combos.at(0));
    const LoopCombo y = a.combos.size() > 1 ? io::combo_from_arg(s, a.combos.at(1))
                                            : LoopCombo::single(CyclicWord{});
    const FiltrationReport r = filtration_report(expansion_of(s, a), xi, x, y);
    out["p"] = level_json(r.p);
    out["q"] = level_json(r.q);
    out["bracket"] = {{"level", level_json(r.bracket_level)},
                      {"bound", level_json(r.bracket_bound)},
                      {"ok", r.bracket_ok},
                      {"excess", excess_json(r.bracket_excess)}};
    out["cobracket"] = {{"level", level_json(r.cobracket_level)},
                        {"bound", level_json(r.cobracket_bound)},
                        {"ok", r.cobracket_ok},
                        {"excess", excess_json(r.cobracket_excess)}};
    out["boundary_condition"] = r.boundary_ok;
    out["ok"] = r.bracket_ok && r.cobracket_ok;
  }
  return out;
}

json error_json(std::string_view code, const std::string& msg) {
  return json{{"v", 1}, {"error", code}, {"message", msg}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Goldman-Turaev bialgebra toolkit", "gt"};
  app.require_subcommand(1);
  Args a;
  std::map<std::string, CLI::App*> subs;
  auto sub = [&](const std::string& name, const std::string& help, bool need_surface = true) {
    CLI::App* s = app.add_subcommand(name, help);
    add_common(s, a.c, need_surface);
    subs[name] = s;
    return s;
  };

  auto* br = sub("bracket", "Goldman bracket of two combinations");
  br->add_option("combos", a.combos, "two combinations: JSON, @file, file path or word")
      ->required()
      ->expected(2);
  br->add_option("--threads", a.threads, "worker threads")->check(CLI::PositiveNumber);

  auto* co = sub("cobracket", "framed Turaev cobracket");
  co->add_option("combo", a.combos, "combination")->required()->expected(1);
  co->add_flag("--unframed", a.unframed, "drop terms containing the constant class");

  sub("rot", "rotation number")->add_option("--word", a.word, "word")->required();
  sub("degrees", "local degrees d_0..d_n");
  sub("classify", "mapping class orbit invariants")
      ->add_option("--other", a.other, "framing to compare against (default: zero twists)");
  sub("orbit", "orbit under elementary moves inside a twist box")
      ->add_option("--box", a.box, "twist bound")
      ->check(CLI::NonNegativeNumber);
  sub("exists-qaf", "existence of a quasi-algebraic framing in the orbit");

  auto* pu = sub("push", "point-pushing automorphism");
  pu->add_option("--puncture", a.puncture, "puncture index j")->required();
  pu->add_option("--word", a.word, "loop to push along")->required();

  auto* cc = sub("cocycle", "framing cocycle of an automorphism");
  cc->add_option("--images", a.images, "automorphism JSON or @file");
  cc->add_option("--puncture", a.puncture, "push this puncture instead");
  cc->add_option("--word", a.word, "loop for --puncture");

  auto add_expansion = [&](CLI::App* s) {
    s->add_option("--N", a.N, "truncation weight")->check(CLI::Range(2, 12));
    s->add_option("--expansion", a.expansion, "exp or boundary")
        ->check(CLI::IsMember({"exp", "boundary"}));
  };
  auto* ex = sub("expand", "expand a word into truncated series");
  add_expansion(ex);
  ex->add_option("--word", a.word, "word")->required();
  ex->add_flag("--log", a.log, "output the logarithm");
  ex->add_flag("--cyclic", a.cyclic, "project to the cyclic quotient");
  add_expansion(sub("boundary-defect", "defect of the outer boundary image"));
  auto* fr = sub("filtration-report", "weight-level checks for bracket and cobracket");
  add_expansion(fr);
  fr->add_option("combos", a.combos, "a [b]")->required()->expected(1, 2);
  fr->add_option("--threads", a.threads, "unused; accepted for symmetry");

  auto* ck = sub("check", "run the invariant suites", false);
  ck->add_option("--surface", a.surfaces, "g,n (repeatable)");
  ck->add_option("--samples", a.samples, "samples per surface")->check(CLI::PositiveNumber);
  ck->add_option("--seed", a.seed, "random seed");

  std::vector<const char*> argv{"gt"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    out << error_json("ParseError", e.what()).dump() << "\n";
    return 1;
  }

  std::string cmd;
  for (const auto& [name, s] : subs)
    if (s->parsed()) cmd = name;
  const int indent = a.c.pretty ? 2 : -1;
  try {
    out << dispatch(cmd, a).dump(indent) << "\n";
    return 0;
  } catch (const Error& e) {
    out << error_json(error_name(e.code()), e.what()).dump() << "\n";
    return e.code() == ErrorCode::ParseError ? 1 : 2;
  } catch (const InternalError& e) {
    out << error_json("InternalError", e.what()).dump() << "\n";
    return 2;
  }
}

}  // namespace gt::cli
