#include "parkfact/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <iterator>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "parkfact/arch.hpp"
#include "parkfact/factorization.hpp"
#include "parkfact/inverse_maps.hpp"
#include "parkfact/parking.hpp"
#include "parkfact/permutation.hpp"
#include "parkfact/render.hpp"
#include "parkfact/serialize.hpp"
#include "parkfact/tree.hpp"
#include "parkfact/verify.hpp"

namespace parkfact {

namespace {

constexpr int kDefaultMaxN = 8;
constexpr int kDefaultExploreMaxN = 6;

struct Args {
  std::string kind;
  std::string sigma;
  std::string input;
  std::string from;
  std::string via;
  std::string name;
  std::string suite = "all";
  std::string format = "text";
  int n = -1;
  int k = 0;
  bool bounce = false;
  bool extended = false;
};

struct Context {
  const Args& args;
  std::ostream& out;
  std::istream& in;
};

class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int env_limit(int fallback) {
  const char* raw = std::getenv("PARKFACT_MAX_N");
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    std::size_t used = 0;
    const int v = std::stoi(raw, &used);
    if (used != std::string(raw).size() || v < 0) throw std::invalid_argument("bad");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("PARKFACT_MAX_N must be a nonnegative integer, got \"") + raw + "\"");
  }
}

void check_limit(int n, int limit) {
  if (n > limit) {
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the safety limit " + std::to_string(limit) +
                                " (set PARKFACT_MAX_N to raise it)");
  }
}

std::string read_input(const Context& ctx) {
  if (ctx.args.input == "-") {
    return trim(std::string(std::istreambuf_iterator<char>(ctx.in), std::istreambuf_iterator<char>()));
  }
  if (ctx.args.input.empty()) throw std::invalid_argument("--input is required");
  return trim(ctx.args.input);
}

bool looks_like_json(const std::string& s) { return !s.empty() && (s.front() == '{' || s.front() == '['); }

int require_n(const Args& a) {
  if (a.n < 0) throw std::invalid_argument("--n is required");
  return a.n;
}

// --sigma if given, else sigma_n; n is taken from whichever is present
FullCycle resolve_sigma(const Args& a, int n_hint) {
  if (!a.sigma.empty()) {
    auto sigma = FullCycle::parse(a.sigma);
    if (n_hint >= 0 && sigma.n() != n_hint) {
      throw std::invalid_argument("sigma acts on [" + std::to_string(sigma.n()) + "] but n = " + std::to_string(n_hint));
    }
    return sigma;
  }
  if (n_hint < 0) throw std::invalid_argument("give --n or --sigma");
  return FullCycle::canonical(n_hint);
}

int sigma_n(const Args& a) { return a.sigma.empty() ? -1 : FullCycle::parse(a.sigma).n(); }

ParkingFunction read_parking(const std::string& text) {
  if (looks_like_json(text)) return Json::parse(text).get<ParkingFunction>();
  return ParkingFunction::parse(text);
}

MajorSequence read_major(const std::string& text) {
  if (looks_like_json(text)) return Json::parse(text).get<MajorSequence>();
  return MajorSequence::parse(text);
}

LabelledTree read_tree(const std::string& text) {
  if (looks_like_json(text)) return Json::parse(text).get<LabelledTree>();
  return LabelledTree::parse(text);
}

Factorization read_factorization(const Args& a, const std::string& text) {
  if (looks_like_json(text)) return Json::parse(text).get<Factorization>();
  const auto factors = parse_transpositions(text);
  int n = a.n >= 0 ? a.n : sigma_n(a);
  if (n < 0) n = static_cast<int>(factors.size());
  return Factorization(n, factors);
}

ArchDiagram read_arch(const Args& a, const std::string& text) {
  if (looks_like_json(text)) return Json::parse(text).get<ArchDiagram>();
  int n = a.n >= 0 ? a.n : sigma_n(a);
  if (n < 0) n = static_cast<int>(std::count(text.begin(), text.end(), '('));
  return parse_arch(text, n);
}

/// Ordered key/value output; text prints "key: value" lines.
class Report {
 public:
  void add(std::string key, Json value) { rows_.emplace_back(std::move(key), std::move(value)); }

  void print(std::ostream& out, const std::string& format) const {
    if (format == "json") {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (const auto& [k, v] : rows_) obj[k] = nlohmann::ordered_json::parse(v.dump());
      out << obj.dump(2) << "\n";
      return;
    }
    for (const auto& [k, v] : rows_) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }

 private:
  std::vector<std::pair<std::string, Json>> rows_;
};

template <typename T>
void emit(const Context& ctx, const T& value, const std::string& text) {
  if (ctx.args.format == "json") {
    ctx.out << Json(value).dump() << "\n";
  } else {
    ctx.out << text << "\n";
  }
}

// ---------------------------------------------------------------- enumerate

template <typename T>
void emit_list(const Context& ctx, const std::vector<T>& items) {
  if (ctx.args.format == "json") {
    ctx.out << Json(items).dump() << "\n";
    return;
  }
  for (const auto& item : items) ctx.out << item.to_string() << "\n";
}

void cmd_enumerate(const Context& ctx) {
  const auto& a = ctx.args;
  const int n = a.n >= 0 ? a.n : sigma_n(a);
  if (n < 0) throw std::invalid_argument("--n is required");
  check_limit(n, env_limit(kDefaultMaxN));
  const auto kind = lowercase(a.kind);
  if (kind == "trees" || kind == "tree") {
    emit_list(ctx, enumerate_trees(n));
  } else if (kind == "parking") {
    emit_list(ctx, enumerate_parking_functions(n));
  } else if (kind == "major") {
    std::vector<MajorSequence> items;
    for_each_major_sequence(n, [&](const MajorSequence& m) { items.push_back(m); });
    emit_list(ctx, items);
  } else if (kind == "factorizations" || kind == "factorization") {
    emit_list(ctx, enumerate_factorizations(resolve_sigma(a, n)));
  } else if (kind == "arch") {
    const auto sigma = resolve_sigma(a, n);
    std::vector<ArchDiagram> items;
    for_each_factorization(sigma, [&](const Factorization& f) { items.push_back(sigma_diagram(f, sigma)); });
    emit_list(ctx, items);
  } else {
    throw std::invalid_argument("unknown kind \"" + a.kind + "\" (trees, parking, major, factorizations, arch)");
  }
}

// ---------------------------------------------------------------- stats

void cmd_stats(const Context& ctx) {
  const auto& a = ctx.args;
  const auto text = read_input(ctx);
  const auto kind = lowercase(a.kind);
  Report r;
  if (kind == "tree") {
    const auto t = read_tree(text);
    const auto s = tree_stats(t);
    r.add("tree", t.to_string());
    r.add("n", t.n());
    r.add("inv", s.inv);
    r.add("coinv", s.coinv);
    r.add("depth", s.depth);
    r.add("theta_inverse", theta_inverse(t).to_string());
  } else if (kind == "parking") {
    const auto p = read_parking(text);
    const auto ps = pinv_stats(p);
    const auto park = park_process(p);
    r.add("parking", p.to_string());
    r.add("n", p.n());
    r.add("area", area(p));
    r.add("bounce", bounce(p));
    r.add("bounce_contacts", format_sequence(bounce_contacts(p)));
    r.add("pinv", ps.pinv);
    r.add("copinv", ps.copinv);
    r.add("jump", park.jump);
    r.add("cojump", park.cojump);
    r.add("stalls", format_sequence(park.stalls));
    r.add("theta", theta(p).to_string());
    r.add("complement", complement(p).to_string());
  } else if (kind == "major") {
    const auto m = read_major(text);
    r.add("major", m.to_string());
    r.add("n", m.n());
    r.add("area", area(m));
    r.add("complement", complement(m).to_string());
  } else if (kind == "factorization") {
    const auto f = read_factorization(a, text);
    const auto pi = product(f);
    r.add("factorization", f.to_string());
    r.add("n", f.n());
    r.add("product", pi.to_string());
    r.add("minimal", is_minimal_for(f, pi));
    r.add("lower", format_sequence(lower(f)));
    r.add("upper", format_sequence(upper(f)));
    if (static_cast<int>(f.size()) == f.n() && pi.is_full_cycle() && is_minimal_for(f, pi)) {
      const auto ar = areas(f);
      r.add("area_L", ar.lower);
      r.add("area_U", ar.upper);
      r.add("total_difference", ar.difference());
      r.add("simple", is_simple(f));
      if (is_simple(f)) r.add("simple_index", simple_index(f));
      if (!a.sigma.empty()) r.add("in_F_sigma", pi == resolve_sigma(a, f.n()).to_permutation());
    }
  } else if (kind == "arch") {
    const auto d = read_arch(a, text);
    const bool valid = is_valid_arch(d);
    r.add("arch", d.to_string());
    r.add("n", d.n());
    r.add("valid", valid);
    Json cap_labels = Json::array();
    for (const auto& c : caps(d)) cap_labels.push_back(c.label);
    r.add("caps", cap_labels);
    Json rot = Json::array();
    for (int v = 0; v <= d.n(); ++v) rot.push_back(rotator(d, v).labels);
    r.add("rotators", rot);
  } else {
    throw std::invalid_argument("unknown kind \"" + a.kind + "\" (tree, parking, major, factorization, arch)");
  }
  r.print(ctx.out, a.format);
}

// ---------------------------------------------------------------- map

void expect_from(const Args& a, std::initializer_list<const char*> allowed) {
  if (a.from.empty()) return;
  const auto from = lowercase(a.from);
  for (const char* k : allowed) {
    if (from == k) return;
  }
  std::string list;
  for (const char* k : allowed) list += std::string(list.empty() ? "" : ", ") + k;
  throw std::invalid_argument("--via " + a.via + " expects --from " + list + ", got \"" + a.from + "\"");
}

void cmd_map(const Context& ctx) {
  const auto& a = ctx.args;
  const auto via = lowercase(a.via);
  const auto text = read_input(ctx);
  if (via == "l" || via == "u") {
    expect_from(a, {"factorization"});
    const auto f = read_factorization(a, text);
    const auto sigma = resolve_sigma(a, f.n());
    if (!is_minimal_for(f, sigma.to_permutation())) throw std::invalid_argument(f.to_string() + " is not in F_sigma");
    if (via == "l") {
      const ParkingFunction p(lower(f));
      emit(ctx, p, p.to_string());
    } else {
      const MajorSequence m(upper(f));
      emit(ctx, m, m.to_string());
    }
  } else if (via == "l-inverse") {
    expect_from(a, {"parking"});
    const auto p = read_parking(text);
    const auto f = l_inverse(p, resolve_sigma(a, p.n()));
    emit(ctx, f, f.to_string());
  } else if (via == "u-inverse") {
    expect_from(a, {"major"});
    const auto m = read_major(text);
    const auto f = u_inverse(m, resolve_sigma(a, m.n()));
    emit(ctx, f, f.to_string());
  } else if (via == "theta") {
    expect_from(a, {"parking"});
    const auto t = theta(read_parking(text));
    emit(ctx, t, t.to_string());
  } else if (via == "theta-inverse") {
    expect_from(a, {"tree"});
    const auto p = theta_inverse(read_tree(text));
    emit(ctx, p, p.to_string());
  } else if (via == "phi-k") {
    expect_from(a, {"factorization"});
    const auto f = read_factorization(a, text);
    const std::size_t k = a.k > 0 ? static_cast<std::size_t>(a.k) : simple_index(f);
    const auto g = phi_k(f, k);
    emit(ctx, g, g.to_string());
  } else if (via == "phi-k-inverse") {
    expect_from(a, {"factorization"});
    if (a.k <= 0) throw std::invalid_argument("--k is required for phi-k-inverse");
    const auto g = read_factorization(Args{}, text);
    const auto f = phi_k_inverse(g, static_cast<std::size_t>(a.k), g.n() + 1);
    emit(ctx, f, f.to_string());
  } else if (via == "arch") {
    expect_from(a, {"factorization"});
    const auto f = read_factorization(a, text);
    const auto d = factorization_to_arch(f, resolve_sigma(a, f.n()));
    emit(ctx, d, d.to_string());
  } else if (via == "fact") {
    expect_from(a, {"arch"});
    const auto d = read_arch(a, text);
    const auto f = arch_to_factorization(d, resolve_sigma(a, d.n()));
    emit(ctx, f, f.to_string());
  } else if (via == "push") {
    expect_from(a, {"parking"});
    const auto m = push_heights(to_path(read_parking(text)));
    emit(ctx, m, m.to_string());
  } else if (via == "reflect") {
    expect_from(a, {"factorization", "parking", "major"});
    const auto from = lowercase(a.from);
    if (from == "parking") {
      const auto m = complement(read_parking(text));
      emit(ctx, m, m.to_string());
    } else if (from == "major") {
      const auto p = complement(read_major(text));
      emit(ctx, p, p.to_string());
    } else {
      const auto g = reflect_reverse(read_factorization(a, text));
      emit(ctx, g, g.to_string());
    }
  } else {
    throw std::invalid_argument("unknown map \"" + a.via +
                                "\" (l, u, l-inverse, u-inverse, theta, theta-inverse, phi-k, phi-k-inverse, arch, fact, "
                                "push, reflect)");
  }
}

// ---------------------------------------------------------------- poly

BivariatePoly named_poly(const Args& a, int n) {
  static const std::map<std::string, std::string> aliases = {
      {"f̂", "fhat"}, {"f→", "finc"}, {"f←", "fdec"}, {"simple", "fhat"}, {"increasing", "finc"},
      {"decreasing", "fdec"}, {"max", "fmax"}, {"perm", "fperm"}};
  auto name = lowercase(a.name);
  if (auto it = aliases.find(name); it != aliases.end()) name = it->second;
  const auto un = static_cast<unsigned>(n);
  if (name == "i") return inversion_enumerator(n);
  if (name == "f") return factorization_enumerator(resolve_sigma(a, n));
  if (name == "b") return parking_enumerators(n).pinv_copinv;
  if (name == "d") return depth_enumerator(n);
  if (name == "c") return catalan_qt(un);
  if (name == "area") return parking_enumerators(n).area;
  if (name == "bounce") return parking_enumerators(n).bounce;
  if (name == "jump") return parking_enumerators(n).jump_cojump;
  if (name == "fhat" || name == "finc" || name == "fdec" || name == "fmax" || name == "fperm") {
    const auto e = restricted_enumerators(n);
    if (name == "fhat") return e.simple;
    if (name == "finc") return e.increasing;
    if (name == "fdec") return e.decreasing;
    if (name == "fmax") return e.max_difference;
    return e.permutation_lower;
  }
  throw std::invalid_argument("unknown polynomial \"" + a.name +
                              "\" (I, F, B, D, C, Fhat, Finc, Fdec, Fmax, Fperm, area, bounce, jump)");
}

void cmd_poly(const Context& ctx) {
  const auto& a = ctx.args;
  const int n = a.n >= 0 ? a.n : sigma_n(a);
  if (n < 0) throw std::invalid_argument("--n is required");
  check_limit(n, env_limit(kDefaultMaxN));
  const auto p = named_poly(a, n);
  emit(ctx, p, p.to_string());
}

// ---------------------------------------------------------------- verify

void cmd_verify(const Context& ctx) {
  const auto& a = ctx.args;
  VerifyOptions options;
  options.max_n = a.n;
  options.extended = a.extended;
  if (a.n >= 0) check_limit(a.n, env_limit(kDefaultMaxN));
  const auto results = run_suites(a.suite, options);
  bool ok = true;
  if (a.format == "json") {
    Json arr = Json::array();
    for (const auto& r : results) {
      Json item = {{"suite", r.name}, {"passed", r.passed}, {"checks", r.checks}};
      if (!r.passed) item["counterexample"] = Json::parse(r.counterexample);
      arr.push_back(item);
      ok = ok && r.passed;
    }
    ctx.out << arr.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      ctx.out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks): " << r.title << "\n";
      if (!r.passed) ctx.out << "  counterexample: " << r.counterexample << "\n";
      ok = ok && r.passed;
    }
  }
  if (!ok) throw VerificationFailed("verification failed");
}

// ---------------------------------------------------------------- render

void cmd_render(const Context& ctx) {
  const auto& a = ctx.args;
  const auto text = read_input(ctx);
  const auto kind = lowercase(a.kind);
  const bool svg = a.format != "text";
  if (kind == "parking") {
    const auto p = read_parking(text);
    std::optional<std::vector<int>> contacts;
    if (a.bounce) contacts = bounce_contacts(p);
    ctx.out << (svg ? render_path_svg(to_path(p), contacts) : render_path_ascii(to_path(p), contacts));
  } else if (kind == "major") {
    if (a.bounce) throw std::invalid_argument("--bounce applies to parking functions");
    const auto m = read_major(text);
    ctx.out << (svg ? render_path_svg(to_path(m)) : render_path_ascii(to_path(m)));
  } else if (kind == "arch" || kind == "factorization") {
    ArchDiagram d;
    std::optional<FullCycle> sigma;
    if (kind == "arch") {
      d = read_arch(a, text);
      if (!a.sigma.empty()) sigma = resolve_sigma(a, d.n());
    } else {
      const auto f = read_factorization(a, text);
      sigma = resolve_sigma(a, f.n());
      d = sigma_diagram(f, *sigma);
    }
    const FullCycle* s = sigma ? &*sigma : nullptr;
    ctx.out << (svg ? render_arch_svg(d, s) : render_arch_ascii(d, s));
  } else {
    throw std::invalid_argument("unknown kind \"" + a.kind + "\" (parking, major, arch, factorization)");
  }
}

// ---------------------------------------------------------------- explore

void cmd_explore(const Context& ctx) {
  const auto& a = ctx.args;
  const int n = require_n(a);
  check_limit(n, env_limit(kDefaultExploreMaxN));
  const auto classes = explore_unimodal(n);
  const auto inversion = inversion_enumerator(n);
  if (a.format == "json") {
    Json arr = Json::array();
    for (const auto& c : classes) {
      Json cycles = Json::array();
      for (const auto& s : c.cycles) cycles.push_back(s.to_string());
      arr.push_back({{"equals_I", c.equals_inversion}, {"enumerator", c.enumerator}, {"cycles", cycles}});
    }
    ctx.out << Json{{"n", n}, {"I", inversion}, {"classes", arr}}.dump(2) << "\n";
    return;
  }
  std::size_t total = 0;
  for (const auto& c : classes) total += c.cycles.size();
  ctx.out << "n = " << n << ": " << total << " unimodal cycles in " << classes.size() << " classes\n";
  ctx.out << "I_n = " << inversion.to_string() << "\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    ctx.out << "class " << i + 1 << " [" << (c.equals_inversion ? "equal" : "unequal") << "], " << c.cycles.size()
            << " cycles\n";
    ctx.out << "  F = " << c.enumerator.to_string() << "\n";
    for (const auto& s : c.cycles) ctx.out << "  " << s.to_string() << "\n";
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
  Args args;
  CLI::App app{"Parking functions, labelled trees and minimal factorizations of full cycles", "parkfact"};
  app.require_subcommand(1);
  const std::vector<std::string> text_json{"text", "json"};

  auto* enumerate = app.add_subcommand("enumerate", "List every object of a family");
  enumerate->add_option("--kind", args.kind, "trees, parking, major, factorizations, arch")->required();
  enumerate->add_option("--n", args.n, "size");
  enumerate->add_option("--sigma", args.sigma, "full cycle as a visit word, \"0 2 3 1\"");
  enumerate->add_option("--format", args.format)->check(CLI::IsMember(text_json));

  auto* stats = app.add_subcommand("stats", "Print every statistic of one object");
  stats->add_option("--kind", args.kind, "tree, parking, major, factorization, arch")->required();
  stats->add_option("--input", args.input, "object text or JSON; '-' reads stdin")->required();
  stats->add_option("--n", args.n);
  stats->add_option("--sigma", args.sigma);
  stats->add_option("--format", args.format)->check(CLI::IsMember(text_json));

  auto* map = app.add_subcommand("map", "Apply a bijection");
  map->add_option("--from", args.from, "input kind: parking, major, tree, factorization, arch");
  map->add_option("--via", args.via, "l, u, l-inverse, u-inverse, theta, theta-inverse, phi-k, phi-k-inverse, arch, fact, push, reflect")
      ->required();
  map->add_option("--input", args.input, "object text or JSON; '-' reads stdin")->required();
  map->add_option("--sigma", args.sigma);
  map->add_option("--n", args.n);
  map->add_option("--k", args.k, "position of (0 n) for phi-k");
  map->add_option("--format", args.format)->check(CLI::IsMember(text_json));

  auto* poly = app.add_subcommand("poly", "Print a named enumerator");
  poly->add_option("--name", args.name, "I, F, B, D, C, Fhat, Finc, Fdec, Fmax, Fperm, area, bounce, jump")->required();
  poly->add_option("--n", args.n);
  poly->add_option("--sigma", args.sigma, "cycle for F");
  poly->add_option("--format", args.format)->check(CLI::IsMember(text_json));

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", args.suite, "suite name or 'all'");
  verify->add_option("--n", args.n, "cap on exhaustive sizes");
  verify->add_flag("--extended", args.extended, "include optional larger instances");
  verify->add_option("--format", args.format)->check(CLI::IsMember(text_json));

  auto* render = app.add_subcommand("render", "Draw a path or an arch diagram");
  render->add_option("--kind", args.kind, "parking, major, arch, factorization")->required();
  render->add_option("--input", args.input)->required();
  render->add_option("--sigma", args.sigma);
  render->add_option("--n", args.n);
  render->add_flag("--bounce", args.bounce, "overlay the bounce path");
  args.format = "svg";
  render->add_option("--format", args.format)->check(CLI::IsMember({"svg", "text"}));

  auto* explore = app.add_subcommand("explore", "Compare F_sigma with I_n over unimodal cycles");
  explore->add_option("--n", args.n)->required();
  explore->add_option("--format", args.format)->check(CLI::IsMember(text_json));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  if (!render->parsed() && args.format == "svg") args.format = "text";

  const Context ctx{args, out, in};
  try {
    if (enumerate->parsed()) cmd_enumerate(ctx);
    if (stats->parsed()) cmd_stats(ctx);
    if (map->parsed()) cmd_map(ctx);
    if (poly->parsed()) cmd_poly(ctx);
    if (verify->parsed()) cmd_verify(ctx);
    if (render->parsed()) cmd_render(ctx);
    if (explore->parsed()) cmd_explore(ctx);
  } catch (const VerificationFailed&) {
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace parkfact
