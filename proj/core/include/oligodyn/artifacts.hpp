#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "oligodyn/errors.hpp"

namespace oligodyn {

/// Shortest-round-trip style serialization used in every CSV: 17
/// significant digits via %.17g, infinities as "inf"/"-inf".
std::string format_number(double v);

/// FNV-1a 64-bit hash.
std::uint64_t fnv1a64(std::string_view text, std::uint64_t seed = 14695981039346656037ull);

struct RunArtifacts {
  std::filesystem::path directory;
  std::vector<std::string> files;  // relative names in emission order
  std::string input_hash;          // 16 hex digits
};

/// Collects the files of one command run.  Every write is recorded and a
/// manifest.json naming the command, the input hash and the emitted files
/// is produced at the end.  All output is byte-deterministic for a fixed
/// input.
class ArtifactWriter {
 public:
  ArtifactWriter(std::filesystem::path directory, std::string command);

  /// Feeds a token of the run's input into the manifest hash.
  void add_input(std::string_view token);

  /// Writes `content` to `name` inside the artifact directory.
  void write_file(const std::string& name, std::string_view content);

  /// Writes manifest.json and returns the collected metadata.
  RunArtifacts finish();

 private:
  std::filesystem::path directory_;
  std::string command_;
  std::uint64_t hash_;
  std::vector<std::string> files_;
};

}  // namespace oligodyn
