#include "k3stab/io/csv.hpp"

#include "k3stab/io/parse.hpp"

#include <sstream>

namespace k3stab::io {

namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string vec_field(const MukaiVec& v) {
  std::string out;
  for (Eigen::Index k = 0; k < v.coords().size(); ++k) out += (k ? "," : "") + v.coords()(k).str();
  return out;
}

std::string dense_field(const Poly2& p) {
  std::string out;
  for (const auto& c : p.dense_listing()) out += (out.empty() ? "" : " ") + c.str();
  return out;
}

Poly2 dense_parse(const std::string& s) {
  std::istringstream in(s);
  std::vector<Rational> xs;
  std::string tok;
  while (in >> tok) xs.push_back(parse_rational(tok));
  if (xs.size() != Poly2::monomial_names().size()) throw ConfigError("polynomial listing '" + s + "' has the wrong length");
  return Poly2::from_dense_listing(xs);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
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

}  // namespace

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t k = 0; k < header.size(); ++k)
    if (header[k] == name) return k;
  throw ConfigError("CSV has no column '" + name + "'");
}

std::string write_csv(const CsvTable& t) {
  std::string out;
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t k = 0; k < fields.size(); ++k) out += (k ? "," : "") + quote(fields[k]);
    out += "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  for (const auto& c : t.comments) out += "# " + c + "\n";
  return out;
}

CsvTable read_csv(const std::string& text) {
  CsvTable t;
  std::vector<std::vector<std::string>> records;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '#') {
      std::size_t e = text.find('\n', i);
      std::string c = text.substr(i + 1, e == std::string::npos ? std::string::npos : e - i - 1);
      if (!c.empty() && c[0] == ' ') c.erase(0, 1);
      if (!c.empty() && c.back() == '\r') c.pop_back();
      t.comments.push_back(c);
      i = e == std::string::npos ? text.size() : e + 1;
      continue;
    }
    std::vector<std::string> rec;
    std::string field;
    bool quoted = false;
    for (;;) {
      if (i >= text.size()) {
        rec.push_back(field);
        break;
      }
      char c = text[i++];
      if (quoted) {
        if (c == '"') {
          if (i < text.size() && text[i] == '"') {
            field += '"';
            ++i;
          } else {
            quoted = false;
          }
        } else {
          field += c;
        }
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        rec.push_back(field);
        field.clear();
      } else if (c == '\n') {
        rec.push_back(field);
        break;
      } else if (c != '\r') {
        field += c;
      }
    }
    if (quoted) throw ConfigError("unterminated quoted CSV field");
    records.push_back(std::move(rec));
  }
  if (records.empty()) throw ConfigError("CSV has no header row");
  t.header = records.front();
  for (std::size_t k = 1; k < records.size(); ++k) {
    if (records[k].size() != t.header.size())
      throw ConfigError("CSV row " + std::to_string(k) + " has " + std::to_string(records[k].size()) + " fields, header has " +
                        std::to_string(t.header.size()));
    t.rows.push_back(std::move(records[k]));
  }
  return t;
}

CsvTable roots_table(const SurfaceConfig& cfg, const EnumerationResult& res) {
  CsvTable t;
  t.header.push_back("r");
  for (int k = 1; k <= cfg.picard_rank(); ++k) t.header.push_back("d" + std::to_string(k));
  t.header.push_back("s");
  for (const auto& v : res.vectors) {
    std::vector<std::string> row;
    for (Eigen::Index k = 0; k < v.coords().size(); ++k) row.push_back(v.coords()(k).str());
    t.rows.push_back(std::move(row));
  }
  std::string box;
  for (const auto& b : res.box) box += (box.empty() ? "" : " ") + b.str();
  t.comments.push_back("count " + std::to_string(res.vectors.size()));
  t.comments.push_back("radius " + res.radius.str() + " required " + res.required_radius.str());
  t.comments.push_back("k_upper " + res.k_upper.str());
  t.comments.push_back("box half-widths " + box + " volume " + res.box_volume.str());
  t.comments.push_back(std::string("complete ") + (res.complete ? "yes" : "no"));
  if (res.abelian_policy) t.comments.push_back("abelian surface: no spherical classes by policy");
  return t;
}

std::vector<MukaiVec> roots_from_table(const SurfaceConfig& cfg, const CsvTable& t) {
  if (static_cast<int>(t.header.size()) != cfg.mukai_dim()) throw ConfigError("roots CSV width does not match the config");
  std::vector<MukaiVec> out;
  for (const auto& row : t.rows) {
    Vec<Integer> v(cfg.mukai_dim());
    for (int k = 0; k < cfg.mukai_dim(); ++k) v(k) = parse_integer(row[k]);
    out.emplace_back(v);
  }
  return out;
}

CsvTable walls_table(const std::vector<Wall>& walls) {
  CsvTable t;
  t.header = {"kind", "status", "witness", "partner"};
  for (const auto& m : Poly2::monomial_names()) t.header.push_back("locus_" + m);
  for (const char* h : {"conditions", "tolerance", "certified", "segments"}) t.header.push_back(h);
  for (const auto& w : walls) {
    std::vector<std::string> row{to_string(w.kind), "potential", vec_field(w.witness),
                                 w.partner ? vec_field(*w.partner) : ""};
    for (const auto& c : w.locus.dense_listing()) row.push_back(c.str());
    std::string conds;
    for (const auto& c : w.conditions) conds += (conds.empty() ? "" : ";") + to_string(c.rel) + "[" + dense_field(c.poly) + "]";
    row.push_back(conds);
    row.push_back(w.tolerance.str());
    row.push_back(w.certified_active ? "1" : "0");
    std::string segs;
    for (const auto& line : w.segments) {
      std::string s;
      for (const auto& p : line) s += (s.empty() ? "" : ";") + p.x.str() + " " + p.y.str() + (p.exact ? "" : "~");
      segs += (segs.empty() ? "" : "|") + s;
    }
    row.push_back(segs);
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<Wall> walls_from_table(const SurfaceConfig& cfg, const CsvTable& t) {
  std::vector<Wall> out;
  const auto names = Poly2::monomial_names();
  const std::size_t kind = t.column("kind"), wit = t.column("witness"), part = t.column("partner");
  const std::size_t conds = t.column("conditions"), tol = t.column("tolerance"), cert = t.column("certified");
  const std::size_t segs = t.column("segments");
  std::vector<std::size_t> locus;
  for (const auto& m : names) locus.push_back(t.column("locus_" + m));
  for (const auto& row : t.rows) {
    Wall w;
    if (row[kind] == "hole") w.kind = WallKind::HoleBoundary;
    else if (row[kind] == "numerical") w.kind = WallKind::NumericalWall;
    else throw ConfigError("unknown wall kind '" + row[kind] + "'");
    w.witness = parse_mukai(cfg, row[wit]);
    if (!row[part].empty()) w.partner = parse_mukai(cfg, row[part]);
    std::vector<Rational> coeffs;
    for (auto c : locus) coeffs.push_back(parse_rational(row[c]));
    w.locus = Poly2::from_dense_listing(coeffs);
    for (const auto& c : split(row[conds], ';')) {
      auto lb = c.find('[');
      if (lb == std::string::npos || c.back() != ']') throw ConfigError("malformed condition '" + c + "'");
      w.conditions.push_back({dense_parse(c.substr(lb + 1, c.size() - lb - 2)), parse_relation(c.substr(0, lb))});
    }
    w.tolerance = parse_rational(row[tol]);
    w.certified_active = row[cert] == "1";
    for (const auto& line : split(row[segs], '|')) {
      Polyline pl;
      for (auto p : split(line, ';')) {
        SegmentPoint sp;
        if (!p.empty() && p.back() == '~') {
          sp.exact = false;
          p.pop_back();
        }
        auto sp_at = p.find(' ');
        if (sp_at == std::string::npos) throw ConfigError("malformed segment point '" + p + "'");
        sp.x = parse_rational(p.substr(0, sp_at));
        sp.y = parse_rational(p.substr(sp_at + 1));
        pl.push_back(sp);
      }
      w.segments.push_back(std::move(pl));
    }
    out.push_back(std::move(w));
  }
  return out;
}

MockSheaf mock_sheaf_from_table(const SurfaceConfig& cfg, const CsvTable& t) {
  if (static_cast<int>(t.header.size()) != cfg.mukai_dim() + 1 || t.header[0] != "kind")
    throw ConfigError("mock sheaf CSV needs columns kind, r, d1.., s");
  MockSheaf m;
  for (const auto& row : t.rows) {
    Vec<Integer> v(cfg.mukai_dim());
    for (int k = 0; k < cfg.mukai_dim(); ++k) v(k) = parse_integer(row[k + 1]);
    m.factors.push_back({MukaiVec(v), parse_factor_kind(row[0])});
  }
  return m;
}

CsvTable mock_sheaf_table(const SurfaceConfig& cfg, const MockSheaf& m) {
  CsvTable t;
  t.header = {"kind", "r"};
  for (int k = 1; k <= cfg.picard_rank(); ++k) t.header.push_back("d" + std::to_string(k));
  t.header.push_back("s");
  for (const auto& f : m.factors) {
    std::vector<std::string> row{to_string(f.kind)};
    for (Eigen::Index k = 0; k < f.v.coords().size(); ++k) row.push_back(f.v.coords()(k).str());
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace k3stab::io
