// Run manifest: what was run and the SHA-256 of everything it wrote.
#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace k3stab::io {

std::string sha256_hex(const std::string& bytes);

struct RunManifest {
  std::string config_path;
  std::string command;
  std::map<std::string, std::string> parameters;
  std::string library_version;
  std::vector<std::pair<std::string, std::string>> outputs;  // path, sha256

  /// Writes bytes to path and records the hash.
  void emit(const std::filesystem::path& path, const std::string& bytes);
  /// JSON with a UTC timestamp; the only place a timestamp appears.
  std::string json() const;
};

}  // namespace k3stab::io
