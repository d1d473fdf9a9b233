#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bakerlab {

// shortest round-trip decimal form, '.' decimal point, locale-independent
std::string fmt_double(double v);

class CsvWriter {
 public:
  explicit CsvWriter(std::string path);
  void header(const std::vector<std::string>& cols);
  void row(const std::vector<std::string>& cells);
  void close();  // writes the file; rows are buffered for atomic output
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::string buf_;
  bool closed_ = false;
};

uint64_t fnv1a64(const std::string& s);

struct Manifest {
  std::string config_hash;
  uint64_t seed = 0;
  std::string version;
  long wall_time_ms = 0;
  unsigned threads = 0;
  std::vector<std::string> outputs;
};

void write_manifest(const Manifest& m, const std::string& path);

}  // namespace bakerlab
