#include "k3stab/io/parse.hpp"

#include <cctype>

namespace k3stab::io {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Rational rational_field(const std::string& tok, std::string_view whole) {
  try {
    return parse_rational(tok);
  } catch (const std::exception&) {
    throw ConfigError("'" + tok + "' in '" + std::string(whole) + "' is not a rational number");
  }
}

Vec<Rational> named_class(const SurfaceConfig& cfg, const std::string& name, std::string_view whole) {
  const int rho = cfg.picard_rank();
  if (name == "H") return cfg.ample().cast<Rational>();
  auto index = [&](std::size_t from) -> int {
    if (name.size() == from) return 1;
    for (std::size_t k = from; k < name.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(name[k]))) return 0;
    return std::stoi(name.substr(from));
  };
  if (name[0] == 'C') {
    int k = index(1);
    if (k < 1 || k > static_cast<int>(cfg.curves().size()))
      throw ConfigError("no configured curve " + name + " in '" + std::string(whole) + "'");
    return cfg.curves()[k - 1].cast<Rational>();
  }
  if (name[0] == 'e' && name.size() > 1) {
    int k = index(1);
    if (k < 1 || k > rho) throw ConfigError("basis class " + name + " out of range in '" + std::string(whole) + "'");
    Vec<Rational> v = Vec<Rational>::Zero(rho);
    v(k - 1) = 1;
    return v;
  }
  throw ConfigError("unknown class name '" + name + "' in '" + std::string(whole) + "'");
}

}  // namespace

std::vector<Rational> parse_rational_list(std::string_view text, char sep) {
  std::vector<Rational> out;
  for (const auto& tok : split(strip(text), sep)) out.push_back(rational_field(tok, text));
  return out;
}

MukaiVec parse_mukai(const SurfaceConfig& cfg, std::string_view text) {
  auto parts = split(strip(text), ',');
  if (static_cast<int>(parts.size()) != cfg.mukai_dim())
    throw ConfigError("Mukai vector '" + std::string(text) + "' needs " + std::to_string(cfg.mukai_dim()) +
                      " comma-separated integers");
  Vec<Integer> v(cfg.mukai_dim());
  for (std::size_t k = 0; k < parts.size(); ++k) {
    try {
      v(k) = parse_integer(parts[k]);
    } catch (const std::exception&) {
      throw ConfigError("'" + parts[k] + "' in '" + std::string(text) + "' is not an integer");
    }
  }
  return MukaiVec(v);
}

Vec<Rational> parse_ns_class(const SurfaceConfig& cfg, std::string_view text) {
  const std::string s = strip(text);
  const int rho = cfg.picard_rank();
  if (s.empty()) throw ConfigError("empty NS class");
  bool named = false;
  for (char c : s) named = named || std::isalpha(static_cast<unsigned char>(c));
  if (!named) {
    auto xs = parse_rational_list(s);
    if (xs.size() == 1 && xs[0] == 0) return Vec<Rational>::Zero(rho);
    if (static_cast<int>(xs.size()) != rho)
      throw ConfigError("NS class '" + s + "' needs " + std::to_string(rho) + " coordinates");
    Vec<Rational> v(rho);
    for (int k = 0; k < rho; ++k) v(k) = xs[k];
    return v;
  }
  // Terms: [sign][coefficient][*]name, or a bare 0.
  Vec<Rational> sum = Vec<Rational>::Zero(rho);
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') sign = s[i++] == '-' ? -1 : 1;
    std::size_t j = i;
    while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/' || s[j] == '.')) ++j;
    Rational coef = j > i ? rational_field(s.substr(i, j - i), text) : Rational(1);
    if (j < s.size() && s[j] == '*') ++j;
    std::size_t k = j;
    while (k < s.size() && std::isalnum(static_cast<unsigned char>(s[k]))) ++k;
    if (k == j) {
      if (coef != 0) throw ConfigError("term without a class name in '" + s + "'");
    } else {
      sum += named_class(cfg, s.substr(j, k - j), text) * Rational(coef * sign);
    }
    if (k == i) throw ConfigError("cannot parse NS class '" + s + "'");
    i = k;
  }
  return sum;
}

TubePointQ parse_point(const SurfaceConfig& cfg, std::string_view text) {
  std::optional<Vec<Rational>> beta, omega;
  for (const auto& part : split(text, ';')) {
    if (strip(part).empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string::npos) throw ConfigError("point component '" + part + "' must read key=value");
    std::string key = strip(part.substr(0, eq));
    Vec<Rational> val = parse_ns_class(cfg, part.substr(eq + 1));
    if (key == "beta") beta = val;
    else if (key == "omega") omega = val;
    else throw ConfigError("unknown point component '" + key + "' (expected beta, omega)");
  }
  if (!omega) throw ConfigError("point '" + std::string(text) + "' is missing omega");
  if (!beta) beta = Vec<Rational>::Zero(cfg.picard_rank());
  return make_tube_point(cfg, *beta, *omega);
}

Rect parse_window(std::string_view text) {
  auto xs = parse_rational_list(text);
  if (xs.size() != 4) throw ConfigError("window '" + std::string(text) + "' needs x0,x1,y0,y1");
  Rect r{xs[0], xs[1], xs[2], xs[3]};
  if (!(r.x0 < r.x1 && r.y0 < r.y1)) throw ConfigError("window '" + std::string(text) + "' needs x0 < x1 and y0 < y1");
  return r;
}

IsometryWord parse_word(const SurfaceConfig& cfg, std::string_view text) {
  std::vector<std::pair<std::string, std::vector<std::string>>> gens;
  for (const auto& tok : split(strip(text), ',')) {
    if (tok.empty()) throw ConfigError("empty token in word '" + std::string(text) + "'");
    if (std::isalpha(static_cast<unsigned char>(tok[0]))) {
      auto colon = tok.find(':');
      gens.push_back({tok.substr(0, colon), {}});
      if (colon != std::string::npos) gens.back().second.push_back(tok.substr(colon + 1));
    } else {
      if (gens.empty()) throw ConfigError("word '" + std::string(text) + "' must start with a generator name");
      gens.back().second.push_back(tok);
    }
  }
  IsometryWord w;
  for (const auto& [name, args] : gens) {
    std::string joined;
    for (const auto& a : args) joined += (joined.empty() ? "" : ",") + a;
    if (name == "shift") {
      if (!args.empty()) throw ConfigError("shift takes no arguments");
      w.append(cfg, Shift{});
    } else if (name == "twist") {
      Vec<Rational> ell = parse_ns_class(cfg, joined);
      w.append(cfg, LineBundleTwist{to_integral(ell, "twist class")});
    } else if (name == "refl") {
      w.append(cfg, SphericalReflection{parse_mukai(cfg, joined)});
    } else {
      throw ConfigError("unknown generator '" + name + "' (expected shift, twist, refl)");
    }
  }
  return w;
}

std::string to_string(Relation rel) {
  switch (rel) {
    case Relation::Negative: return "<0";
    case Relation::NonPositive: return "<=0";
    case Relation::Zero: return "=0";
    case Relation::NonZero: return "!=0";
    case Relation::NonNegative: return ">=0";
    case Relation::Positive: return ">0";
  }
  return "?";
}

Relation parse_relation(std::string_view text) {
  for (Relation r : {Relation::Negative, Relation::NonPositive, Relation::Zero, Relation::NonZero,
                     Relation::NonNegative, Relation::Positive})
    if (to_string(r) == text) return r;
  throw ConfigError("unknown relation '" + std::string(text) + "'");
}

}  // namespace k3stab::io
