// SPDX-License-Identifier: Apache-2.0
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "ergochain/scenario.hpp"

namespace ergochain::scenario {

using nlohmann::json;

namespace {

constexpr std::pair<Kind, std::string_view> kKinds[] = {
    {Kind::TransportSweep, "transport-sweep"}, {Kind::ThetaSweep, "theta-sweep"}, {Kind::Disorder, "disorder"},
    {Kind::WorkDist, "workdist"},              {Kind::BesselCompare, "bessel-compare"},
};

const std::map<std::string, std::set<std::string>, std::less<>> kSchema = {
    {"", {"scenario"}},
    {"chain", {"N", "alpha", "delta", "B", "J", "seed", "convention"}},
    {"initial", {"theta", "q", "erg_in", "matched", "phi"}},
    {"run", {"time_window", "time_step", "realizations", "bins", "densities", "density_points", "max_n"}},
    {"output", {"format", "dir"}},
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<double> parse_number(std::string_view s) {
  double v = 0.0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  const auto res = std::from_chars(first, s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Rounds a + i*step to 15 significant digits so 0:0.3:0.05 yields 0.15, not 0.15000000000000002.
double snap(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 15);
  double out = x;
  std::from_chars(buf, res.ptr, out);
  return out;
}

// "a:b" or "a:b:step", inclusive. Empty optional when `s` is not a range.
std::optional<json> parse_range(std::string_view s, std::string& error) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ':') {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (parts.size() < 2 || parts.size() > 3) return std::nullopt;
  std::vector<double> v;
  for (const auto& p : parts) {
    auto x = parse_number(p);
    if (!x) return std::nullopt;
    v.push_back(*x);
  }
  const bool integral = std::all_of(parts.begin(), parts.end(), [](const auto& p) { return is_integer_literal(p); });
  const double step = v.size() == 3 ? v[2] : 1.0;
  if (!(step > 0.0) || v[1] < v[0]) {
    error = "range '" + std::string(s) + "' needs start <= stop and step > 0";
    return json();
  }
  const auto count = static_cast<long long>(std::floor((v[1] - v[0]) / step + 1e-9)) + 1;
  if (count > 1000000) {
    error = "range '" + std::string(s) + "' expands to too many values";
    return json();
  }
  json out = json::array();
  for (long long i = 0; i < count; ++i) {
    if (integral)
      out.push_back(static_cast<long long>(std::llround(v[0] + static_cast<double>(i) * step)));
    else
      out.push_back(snap(v[0] + static_cast<double>(i) * step));
  }
  return out;
}

json parse_scalar(const std::string& raw, std::string& error) {
  if (raw.size() >= 2 && raw.front() == '"' && raw.back() == '"') return raw.substr(1, raw.size() - 2);
  if (raw == "true") return true;
  if (raw == "false") return false;
  if (auto r = parse_range(raw, error)) return *r;
  if (auto x = parse_number(raw)) {
    if (is_integer_literal(raw)) return static_cast<long long>(std::llround(*x));
    return *x;
  }
  return raw;
}

json parse_value(const std::string& raw, std::string& error) {
  if (!raw.empty() && raw.front() == '[') {
    if (raw.back() != ']') {
      error = "unterminated list";
      return json();
    }
    json out = json::array();
    const std::string body = raw.substr(1, raw.size() - 2);
    if (trim(body).empty()) return out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const json v = parse_scalar(trim(item), error);
      if (!error.empty()) return json();
      if (v.is_array())
        for (const auto& x : v) out.push_back(x);
      else
        out.push_back(v);
    }
    return out;
  }
  return parse_scalar(raw, error);
}

std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (!quoted && (line[i] == '#' || line[i] == ';') && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t'))
      return line.substr(0, i);
  }
  return line;
}

struct Document {
  json root = json::object();
  std::map<std::string, std::string> where;  // "section.key" -> "origin:line"
  std::string origin;

  std::string locate(const std::string& section, const std::string& key) const {
    const std::string path = section.empty() ? key : section + "." + key;
    auto it = where.find(path);
    return (it != where.end() ? it->second : origin) + ": " + path + ": ";
  }
};

Document parse_ini(std::string_view text, std::string_view origin) {
  Document doc;
  doc.origin = std::string(origin);
  std::string section;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string loc = doc.origin + ":" + std::to_string(lineno);
    const std::string s = trim(strip_comment(line));
    if (s.empty()) continue;
    if (s.front() == '[' && s.back() == ']' && s.find('=') == std::string::npos) {
      section = trim(s.substr(1, s.size() - 2));
      if (section.empty() || !kSchema.contains(section)) throw ConfigError(loc + ": unknown section [" + section + "]");
      if (!doc.root.contains(section)) doc.root[section] = json::object();
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError(loc + ": expected 'key = value'");
    const std::string key = trim(s.substr(0, eq));
    const std::string raw = trim(s.substr(eq + 1));
    const std::string path = section.empty() ? key : section + "." + key;
    if (!kSchema.at(section).contains(key)) throw ConfigError(loc + ": " + path + ": unknown key");
    json& target = section.empty() ? doc.root : doc.root[section];
    if (target.contains(key)) throw ConfigError(loc + ": " + path + ": duplicate key");
    std::string error;
    json value = parse_value(raw, error);
    if (!error.empty()) throw ConfigError(loc + ": " + path + ": " + error);
    target[key] = std::move(value);
    doc.where[path] = loc;
  }
  return doc;
}

// Expands range strings inside JSON lists.
json expand_json(const json& v, const std::string& where) {
  if (v.is_string()) {
    std::string error;
    if (auto r = parse_range(v.get<std::string>(), error)) {
      if (!error.empty()) throw ConfigError(where + error);
      return *r;
    }
    return v;
  }
  if (v.is_array()) {
    json out = json::array();
    for (const auto& x : v) {
      json e = expand_json(x, where);
      if (e.is_array())
        for (const auto& y : e) out.push_back(y);
      else
        out.push_back(e);
    }
    return out;
  }
  return v;
}

Document parse_json_doc(std::string_view text, std::string_view origin) {
  Document doc;
  doc.origin = std::string(origin);
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(doc.origin + ": " + e.what());
  }
  if (!parsed.is_object()) throw ConfigError(doc.origin + ": top level must be an object");
  for (auto& [key, value] : parsed.items()) {
    if (kSchema.contains(key) && !key.empty()) {
      if (!value.is_object()) throw ConfigError(doc.origin + ": " + key + ": section must be an object");
      for (auto& [k2, v2] : value.items()) {
        if (!kSchema.at(key).contains(k2)) throw ConfigError(doc.origin + ": " + key + "." + k2 + ": unknown key");
        doc.root[key][k2] = expand_json(v2, doc.origin + ": " + key + "." + k2 + ": ");
      }
    } else if (kSchema.at("").contains(key)) {
      doc.root[key] = value;
    } else {
      throw ConfigError(doc.origin + ": " + key + ": unknown key");
    }
  }
  return doc;
}

class Reader {
 public:
  explicit Reader(const Document& doc) : doc_(doc) {}

  const json* find(const std::string& section, const std::string& key) const {
    const json& base = section.empty() ? doc_.root : (doc_.root.contains(section) ? doc_.root.at(section) : empty_);
    if (!base.is_object() || !base.contains(key)) return nullptr;
    return &base.at(key);
  }

  [[noreturn]] void error(const std::string& section, const std::string& key, const std::string& msg) const {
    throw ConfigError(doc_.locate(section, key) + msg);
  }

  std::optional<double> number(const std::string& section, const std::string& key) const {
    const json* v = find(section, key);
    if (!v) return std::nullopt;
    if (!v->is_number()) error(section, key, "expected a number");
    return v->get<double>();
  }

  std::optional<long long> integer(const std::string& section, const std::string& key) const {
    const json* v = find(section, key);
    if (!v) return std::nullopt;
    if (!v->is_number_integer()) error(section, key, "expected an integer");
    return v->get<long long>();
  }

  std::optional<bool> boolean(const std::string& section, const std::string& key) const {
    const json* v = find(section, key);
    if (!v) return std::nullopt;
    if (!v->is_boolean()) error(section, key, "expected true or false");
    return v->get<bool>();
  }

  std::optional<std::string> string(const std::string& section, const std::string& key) const {
    const json* v = find(section, key);
    if (!v) return std::nullopt;
    if (!v->is_string()) error(section, key, "expected a string");
    return v->get<std::string>();
  }

  std::optional<std::vector<double>> numbers(const std::string& section, const std::string& key) const {
    const json* v = find(section, key);
    if (!v) return std::nullopt;
    std::vector<double> out;
    auto take = [&](const json& x) {
      if (!x.is_number()) error(section, key, "expected numbers");
      out.push_back(x.get<double>());
    };
    if (v->is_array())
      for (const auto& x : *v) take(x);
    else
      take(*v);
    if (out.empty()) error(section, key, "list must not be empty");
    return out;
  }

  std::optional<std::vector<int>> integers(const std::string& section, const std::string& key) const {
    const json* v = find(section, key);
    if (!v) return std::nullopt;
    std::vector<int> out;
    auto take = [&](const json& x) {
      if (!x.is_number_integer()) error(section, key, "expected integers");
      out.push_back(x.get<int>());
    };
    if (v->is_array())
      for (const auto& x : *v) take(x);
    else
      take(*v);
    if (out.empty()) error(section, key, "list must not be empty");
    return out;
  }

 private:
  const Document& doc_;
  json empty_ = json::object();
};

ScenarioConfig resolve(const Document& doc, Kind kind) {
  const Reader r(doc);
  ScenarioConfig c;
  c.kind = kind;

  if (auto name = r.string("", "scenario")) {
    const auto parsed = parse_kind(*name);
    if (!parsed) r.error("", "scenario", "unknown scenario '" + *name + "'");
    if (*parsed != kind)
      r.error("", "scenario", "config is for '" + *name + "' but '" + std::string(kind_name(kind)) + "' was requested");
  }

  c.max_n = static_cast<int>(r.integer("run", "max_n").value_or(kind == Kind::WorkDist ? 64 : 256));
  if (c.max_n < 2) r.error("run", "max_n", "must be >= 2");

  auto ns = r.integers("chain", "N");
  if (!ns) r.error("chain", "N", "required");
  c.n = *ns;
  for (int n : c.n) {
    if (n < 2) r.error("chain", "N", "chain length must be >= 2, got " + std::to_string(n));
    if (n > c.max_n)
      r.error("chain", "N", "chain length " + std::to_string(n) + " exceeds run.max_n = " + std::to_string(c.max_n));
  }

  c.alpha = r.numbers("chain", "alpha").value_or(std::vector<double>{kind == Kind::Disorder ? 1.0 : 0.0});
  for (double a : c.alpha)
    if (!(a >= 0.0 && a <= 1.0)) r.error("chain", "alpha", "values must lie in [0, 1]");
  c.delta = r.numbers("chain", "delta").value_or(std::vector<double>{0.0});
  for (double d : c.delta)
    if (!(d >= 0.0)) r.error("chain", "delta", "values must be >= 0");

  c.b = r.number("chain", "B").value_or(1.0);
  if (!(c.b > 0.0) || !std::isfinite(c.b)) r.error("chain", "B", "must be > 0");
  c.j = r.number("chain", "J").value_or(1.0);
  if (!(c.j > 0.0) || !std::isfinite(c.j)) r.error("chain", "J", "must be > 0");
  if (auto seed = r.integer("chain", "seed")) {
    if (*seed < 0) r.error("chain", "seed", "must be >= 0");
    c.seed = static_cast<std::uint64_t>(*seed);
  }
  if (auto conv = r.string("chain", "convention")) {
    if (*conv == "printed")
      c.convention = CouplingConvention::Printed;
    else if (*conv == "positive")
      c.convention = CouplingConvention::Positive;
    else
      r.error("chain", "convention", "expected 'printed' or 'positive'");
  }

  c.theta = r.numbers("initial", "theta").value_or(std::vector<double>{});
  for (double t : c.theta)
    if (!(t >= 0.0 && t <= std::numbers::pi + 1e-12)) r.error("initial", "theta", "values must lie in [0, pi]");
  c.q = r.numbers("initial", "q").value_or(std::vector<double>{});
  for (double q : c.q)
    if (!(q >= 0.0 && q <= 1.0)) r.error("initial", "q", "values must lie in [0, 1]");
  c.erg_in = r.numbers("initial", "erg_in").value_or(std::vector<double>{});
  for (double e : c.erg_in)
    if (!(e >= 0.0 && e <= 2.0 * c.b * (1.0 + 1e-12))) r.error("initial", "erg_in", "values must lie in [0, 2B]");
  c.matched = r.boolean("initial", "matched").value_or(true);
  c.phi = r.number("initial", "phi").value_or(0.0);

  if (auto w = r.number("run", "time_window")) {
    if (!(*w > 0.0)) r.error("run", "time_window", "must be > 0");
    c.time_window = *w;
  }
  c.time_step = r.number("run", "time_step").value_or(0.01);
  if (!(c.time_step > 0.0)) r.error("run", "time_step", "must be > 0");
  c.realizations = static_cast<int>(r.integer("run", "realizations").value_or(1000));
  if (c.realizations < 1) r.error("run", "realizations", "must be >= 1");
  c.bins = static_cast<int>(r.integer("run", "bins").value_or(101));
  if (c.bins < 1) r.error("run", "bins", "must be >= 1");
  c.densities = r.boolean("run", "densities").value_or(true);
  c.density_points = static_cast<int>(r.integer("run", "density_points").value_or(401));
  if (c.density_points < 2) r.error("run", "density_points", "must be >= 2");

  if (auto fmt = r.string("output", "format")) {
    if (*fmt == "csv")
      c.format = OutputFormat::Csv;
    else if (*fmt == "json")
      c.format = OutputFormat::Json;
    else
      r.error("output", "format", "expected 'csv' or 'json'");
  }
  c.output_dir = r.string("output", "dir").value_or(".");

  const bool has_states = !c.theta.empty() || !c.q.empty() || !c.erg_in.empty();
  const bool clean = std::all_of(c.delta.begin(), c.delta.end(), [](double d) { return d == 0.0; });
  switch (kind) {
    case Kind::TransportSweep:
    case Kind::ThetaSweep:
    case Kind::WorkDist:
      if (!has_states) r.error("initial", "theta", "no initial states: give theta, q or erg_in");
      if (!clean) r.error("chain", "delta", "this scenario evaluates clean chains; use the disorder scenario");
      break;
    case Kind::Disorder:
      if (c.theta.empty() && c.erg_in.empty()) r.error("initial", "theta", "disorder needs theta or erg_in");
      if (!c.q.empty()) r.error("initial", "q", "disorder compares matched pairs; give theta or erg_in");
      if (c.alpha != std::vector<double>{1.0}) r.error("chain", "alpha", "disorder runs at alpha = 1");
      break;
    case Kind::BesselCompare:
      if (c.alpha != std::vector<double>{0.0}) r.error("chain", "alpha", "bessel-compare runs at alpha = 0");
      if (!clean) r.error("chain", "delta", "bessel-compare evaluates clean chains");
      break;
  }
  if (c.time_window && kind != Kind::TransportSweep)
    r.error("run", "time_window", "only used by transport-sweep");
  return c;
}

}  // namespace

std::optional<Kind> parse_kind(std::string_view name) {
  for (const auto& [k, n] : kKinds)
    if (n == name) return k;
  return std::nullopt;
}

std::string_view kind_name(Kind kind) {
  for (const auto& [k, n] : kKinds)
    if (k == kind) return n;
  return "unknown";
}

ChainConfig ScenarioConfig::chain(int n_value, double alpha_value, double delta_value) const {
  ChainConfig cfg;
  cfg.n = n_value;
  cfg.alpha = alpha_value;
  cfg.delta = delta_value;
  cfg.b = b;
  cfg.j = j;
  cfg.seed = seed;
  cfg.convention = convention;
  return cfg;
}

std::string ScenarioConfig::canonical() const {
  json c;
  c["scenario"] = std::string(kind_name(kind));
  c["chain"] = {{"N", n},
                {"alpha", alpha},
                {"delta", delta},
                {"B", b},
                {"J", j},
                {"seed", seed},
                {"convention", convention == CouplingConvention::Printed ? "printed" : "positive"}};
  c["initial"] = {{"theta", theta}, {"q", q}, {"erg_in", erg_in}, {"matched", matched}, {"phi", phi}};
  c["run"] = {{"time_window", time_window ? json(*time_window) : json(nullptr)},
              {"time_step", time_step},
              {"realizations", realizations},
              {"bins", bins},
              {"densities", densities},
              {"density_points", density_points},
              {"max_n", max_n}};
  c["output"] = {{"format", format == OutputFormat::Csv ? "csv" : "json"}};
  return c.dump();
}

std::string ScenarioConfig::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ScenarioConfig parse_config(std::string_view text, Kind kind, std::string_view origin) {
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool is_json = first != std::string_view::npos && text[first] == '{';
  const Document doc = is_json ? parse_json_doc(text, origin) : parse_ini(text, origin);
  return resolve(doc, kind);
}

ScenarioConfig load_config(const std::filesystem::path& path, Kind kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string() + ": cannot open config file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), kind, path.string());
}

}  // namespace ergochain::scenario
