#include "k3stab/io/config.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace k3stab::io {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<Integer> integers(const std::string& line, const std::string& where) {
  std::istringstream in(line);
  std::vector<Integer> out;
  std::string tok;
  while (in >> tok) {
    try {
      out.push_back(parse_integer(tok));
    } catch (const std::exception&) {
      throw ConfigError(where + ": '" + tok + "' is not an integer");
    }
  }
  return out;
}

struct Entry {
  std::string value;
  std::vector<std::string> block;
  int line = 0;
};

}  // namespace

SurfaceConfig parse_config(const std::string& text, const std::string& origin) {
  std::map<std::string, Entry> entries;
  std::istringstream in(text);
  std::string raw;
  std::string current;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    if (trim(line).empty()) continue;
    const bool indented = line[0] == ' ' || line[0] == '\t';
    auto eq = line.find('=');
    if (indented && eq == std::string::npos) {
      if (current.empty() || !entries[current].value.empty())
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": indented line outside a block");
      entries[current].block.push_back(trim(line));
      continue;
    }
    if (eq == std::string::npos) throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
    current = trim(line.substr(0, eq));
    if (entries.count(current)) throw ConfigError(origin + ":" + std::to_string(lineno) + ": duplicate key '" + current + "'");
    entries[current] = {trim(line.substr(eq + 1)), {}, lineno};
  }

  auto need = [&](const std::string& key) -> Entry& {
    auto it = entries.find(key);
    if (it == entries.end()) throw ConfigError(origin + ": missing key '" + key + "'");
    return it->second;
  };
  for (const auto& [key, e] : entries)
    if (key != "surface_type" && key != "rank" && key != "gram" && key != "ample" && key != "curves")
      throw ConfigError(origin + ":" + std::to_string(e.line) + ": unknown key '" + key + "'");

  std::string type = need("surface_type").value;
  for (auto& c : type) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  SurfaceType st;
  if (type == "k3") st = SurfaceType::K3;
  else if (type == "abelian") st = SurfaceType::Abelian;
  else throw ConfigError(origin + ": surface_type must be k3 or abelian, got '" + need("surface_type").value + "'");

  auto rank_v = integers(need("rank").value, origin + ": rank");
  if (rank_v.size() != 1 || rank_v[0] < 1 || rank_v[0] > 20)
    throw ConfigError(origin + ": rank must be a single integer in [1, 20]");
  const int rho = static_cast<int>(rank_v[0]);

  Entry& g = need("gram");
  std::vector<std::string> rows = g.block;
  if (!g.value.empty()) rows.insert(rows.begin(), g.value);
  if (static_cast<int>(rows.size()) != rho)
    throw ConfigError(origin + ": gram needs " + std::to_string(rho) + " rows, got " + std::to_string(rows.size()));
  Mat<Integer> gram(rho, rho);
  for (int i = 0; i < rho; ++i) {
    auto row = integers(rows[i], origin + ": gram row " + std::to_string(i + 1));
    if (static_cast<int>(row.size()) != rho)
      throw ConfigError(origin + ": gram row " + std::to_string(i + 1) + " needs " + std::to_string(rho) + " entries");
    for (int j = 0; j < rho; ++j) gram(i, j) = row[j];
  }

  auto to_vec = [&](const std::vector<Integer>& xs, const std::string& what) {
    if (static_cast<int>(xs.size()) != rho)
      throw ConfigError(origin + ": " + what + " needs " + std::to_string(rho) + " coordinates");
    Vec<Integer> v(rho);
    for (int i = 0; i < rho; ++i) v(i) = xs[i];
    return v;
  };
  Vec<Integer> ample = to_vec(integers(need("ample").value, origin + ": ample"), "ample");

  std::vector<Vec<Integer>> curves;
  if (auto it = entries.find("curves"); it != entries.end()) {
    if (!it->second.value.empty()) throw ConfigError(origin + ": curves takes an indented block, one class per line");
    for (std::size_t k = 0; k < it->second.block.size(); ++k)
      curves.push_back(to_vec(integers(it->second.block[k], origin + ": curve"), "curve " + std::to_string(k + 1)));
  }
  return SurfaceConfig(st, gram, ample, curves);
}

SurfaceConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.string());
}

std::string config_text(const SurfaceConfig& cfg) {
  std::ostringstream out;
  out << "surface_type = " << to_string(cfg.type()) << "\n";
  out << "rank = " << cfg.picard_rank() << "\n";
  out << "gram =\n";
  for (int i = 0; i < cfg.picard_rank(); ++i) {
    out << " ";
    for (int j = 0; j < cfg.picard_rank(); ++j) out << " " << cfg.ns_gram()(i, j);
    out << "\n";
  }
  out << "ample =";
  for (int i = 0; i < cfg.picard_rank(); ++i) out << " " << cfg.ample()(i);
  out << "\n";
  if (!cfg.curves().empty()) {
    out << "curves =\n";
    for (const auto& c : cfg.curves()) {
      out << " ";
      for (int i = 0; i < cfg.picard_rank(); ++i) out << " " << c(i);
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace k3stab::io
