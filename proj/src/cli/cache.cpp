#include "symcoupling/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "symcoupling/errors.hpp"
#include "symcoupling/serialize.hpp"

namespace symcoupling {

namespace fs = std::filesystem;

SpectrumCache::SpectrumCache(fs::path dir, std::string tool_version)
    : dir_(std::move(dir)), version_(std::move(tool_version)) {}

fs::path SpectrumCache::path_for(const Quadrilateral& canonical, Representation rep) const {
  const auto t = canonical.twice();
  std::ostringstream name;
  name << "spectrum-" << t[0] << "_" << t[1] << "_" << t[2] << "_" << t[3] << "-" << to_string(rep) << "-v"
       << version_ << ".json";
  return dir_ / name.str();
}

std::optional<VolumeSpectrum> SpectrumCache::load(const Quadrilateral& canonical, Representation rep) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(canonical, rep));
  if (!in) return std::nullopt;
  try {
    const Json j = Json::parse(in);
    if (j.value("tool_version", "") != version_) return std::nullopt;
    VolumeSpectrum s = spectrum_from_json(j);
    if (!s.quad.same_labels(canonical) || s.rep != rep) return std::nullopt;
    s.quad.canonical = true;
    return s;
  } catch (const std::exception&) {
    return std::nullopt;  // corrupt entries are recomputed and overwritten
  }
}

void SpectrumCache::store(const VolumeSpectrum& s) {
  if (!enabled()) return;
  std::lock_guard lock(write_mutex_);
  fs::create_directories(dir_);
  const fs::path target = path_for(s.quad, s.rep);
  std::ostringstream tmp_name;
  tmp_name << target.filename().string() << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id());
  const fs::path tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw DomainError("cannot write cache file " + tmp.string());
    write_json(out, to_json(s, version_));
    if (!out.flush()) throw DomainError("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, target);
}

VolumeSpectrum SpectrumCache::get_or_compute(const Quadrilateral& q, Representation rep, double tol, bool* hit) {
  const Quadrilateral canonical = canonicalize(q).quad;
  if (auto cached = load(canonical, rep)) {
    if (hit) *hit = true;
    return *cached;
  }
  if (hit) *hit = false;
  VolumeSpectrum s = spectrum(build_matrix(canonical, rep), tol);
  store(s);
  return s;
}

fs::path default_cache_dir() {
  if (const char* env = std::getenv("SYMCOUPLING_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "symcoupling";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "symcoupling";
  return {};
}

}  // namespace symcoupling
