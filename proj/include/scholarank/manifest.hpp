#pragma once

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include <json.hpp>

#include "scholarank/citations.hpp"
#include "scholarank/error.hpp"

namespace scholarank {

inline constexpr const char* kToolVersion = "0.1.0";

inline std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "' for hashing");
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) throw Error("sha256 init failed");
  std::vector<char> buf(1 << 16);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &len);
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

// SOURCE_DATE_EPOCH, when set, pins the timestamp so reruns are byte-identical.
inline Timestamp manifest_time() {
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch && *epoch)
    return Timestamp(std::chrono::seconds(std::strtoll(epoch, nullptr, 10)));
  return std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
}

struct RunManifest {
  std::string command;
  std::vector<std::string> arguments;
  nlohmann::json config = nlohmann::json::object();
  std::vector<std::string> inputs;  // digested at write time

  nlohmann::json to_json(const std::string& output) const {
    nlohmann::json digests = nlohmann::json::array();
    for (const auto& path : inputs) digests.push_back({{"path", path}, {"sha256", sha256_file(path)}});
    return {{"command", command},
            {"arguments", arguments},
            {"config", config},
            {"inputs", digests},
            {"output", output},
            {"tool_version", kToolVersion},
            {"timestamp", format_utc(manifest_time())}};
  }

  // Writes `<output>.manifest.json` next to the output file.
  void write_for(const std::string& output) const {
    const std::string path = output + ".manifest.json";
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write manifest '" + path + "'");
    out << to_json(output).dump(2) << '\n';
  }
};

}  // namespace scholarank
