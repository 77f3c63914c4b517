#include "oligodyn/artifacts.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <utility>

#include "json.hpp"

namespace oligodyn {

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::uint64_t fnv1a64(std::string_view text, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

ArtifactWriter::ArtifactWriter(std::filesystem::path directory, std::string command)
    : directory_(std::move(directory)),
      command_(std::move(command)),
      hash_(fnv1a64(command_)) {
  std::filesystem::create_directories(directory_);
}

void ArtifactWriter::add_input(std::string_view token) {
  hash_ = fnv1a64(token, fnv1a64("|", hash_));
}

void ArtifactWriter::write_file(const std::string& name, std::string_view content) {
  const std::filesystem::path target = directory_ / name;
  std::ofstream out(target, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write artifact: " + target.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error("write failed: " + target.string());
  files_.push_back(name);
}

RunArtifacts ArtifactWriter::finish() {
  char digest[24];
  std::snprintf(digest, sizeof digest, "%016llx",
                static_cast<unsigned long long>(hash_));

  nlohmann::json manifest;
  manifest["command"] = command_;
  manifest["input_hash"] = digest;
  manifest["files"] = files_;
  write_file("manifest.json", manifest.dump(2) + "\n");

  RunArtifacts out;
  out.directory = directory_;
  out.input_hash = digest;
  out.files = std::move(files_);
  return out;
}

}  // namespace oligodyn
