#include "k3stab/io/manifest.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <cstdio>
#include <ctime>
#include <fstream>

namespace k3stab::io {

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", md[k]);
    out += buf;
  }
  return out;
}

void RunManifest::emit(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << bytes;
  outputs.emplace_back(path.string(), sha256_hex(bytes));
}

std::string RunManifest::json() const {
  nlohmann::ordered_json j;
  j["config_path"] = config_path;
  j["command"] = command;
  j["parameters"] = parameters;
  j["library_version"] = library_version;
  auto& outs = j["outputs"] = nlohmann::ordered_json::array();
  for (const auto& [p, h] : outputs) outs.push_back({{"path", p}, {"sha256", h}});
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);
  j["created_utc"] = stamp;
  return j.dump(2) + "\n";
}

}  // namespace k3stab::io
