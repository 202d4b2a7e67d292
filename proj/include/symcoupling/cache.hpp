#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

#include "symcoupling/volume.hpp"

namespace symcoupling {

/// On-disk spectrum cache, one JSON file per (canonical quadrilateral,
/// representation, tool version). Readers never see partial files: writes
/// go to a temporary file that is renamed into place. Writes from one
/// process are serialized; concurrent readers are safe.
class SpectrumCache {
 public:
  /// An empty directory disables the cache.
  SpectrumCache(std::filesystem::path dir, std::string tool_version);

  bool enabled() const { return !dir_.empty(); }
  std::filesystem::path path_for(const Quadrilateral& canonical, Representation rep) const;

  /// nullopt when absent, unreadable, or written by another tool version.
  std::optional<VolumeSpectrum> load(const Quadrilateral& canonical, Representation rep) const;
  void store(const VolumeSpectrum& s);

  /// Spectrum of canonicalize(q).quad; hit reports whether it came from disk.
  VolumeSpectrum get_or_compute(const Quadrilateral& q, Representation rep, double tol, bool* hit = nullptr);

 private:
  std::filesystem::path dir_;
  std::string version_;
  std::mutex write_mutex_;
};

/// $SYMCOUPLING_CACHE_DIR, else $XDG_CACHE_HOME/symcoupling, else ~/.cache/symcoupling.
std::filesystem::path default_cache_dir();

}  // namespace symcoupling
