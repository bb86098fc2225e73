// Copyright 2026 The Cayci Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cayci/cache.hpp"

#include <bit>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cayci/errors.hpp"

namespace cayci {
namespace {

constexpr const char* kMagic = "cayci-cache 1";

std::uint64_t Fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string Serialize(const std::string& key, const CertifiedSet& value) {
  std::ostringstream out;
  out << kMagic << '\n'
      << "key " << key << '\n'
      << "cert " << value.certificate.ToHex() << '\n'
      << "aut " << value.aut_order.str() << '\n';
  return out.str();
}

std::optional<CertifiedSet> Deserialize(const std::string& key, std::istream& in) {
  std::string magic, key_line, cert_line, aut_line, extra;
  if (!std::getline(in, magic) || magic != kMagic) return std::nullopt;
  if (!std::getline(in, key_line) || key_line != "key " + key) return std::nullopt;
  if (!std::getline(in, cert_line) || cert_line.rfind("cert ", 0) != 0) return std::nullopt;
  if (!std::getline(in, aut_line) || aut_line.rfind("aut ", 0) != 0) return std::nullopt;
  if (std::getline(in, extra) && !extra.empty()) return std::nullopt;
  try {
    CertifiedSet value{Certificate::FromHex(cert_line.substr(5)), Order(aut_line.substr(4))};
    if (value.aut_order <= 0) return std::nullopt;
    return value;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

DiskCache::DiskCache(std::filesystem::path directory, bool verify)
    : directory_(std::move(directory)), verify_(verify) {
  std::filesystem::create_directories(directory_);
}

std::string DiskCache::Key(const GroupSpec& spec, std::uint64_t mask) {
  std::string key = spec.ToString() + "|";
  bool first = true;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    if (!first) key += ',';
    key += std::to_string(std::countr_zero(m));
    first = false;
  }
  return key;
}

std::filesystem::path DiskCache::PathFor(const std::string& key) const {
  char name[17];
  std::snprintf(name, sizeof(name), "%016llx", static_cast<unsigned long long>(Fnv1a(key)));
  return directory_ / name;
}

std::optional<CertifiedSet> DiskCache::Get(const GroupSpec& spec, std::uint64_t mask) {
  const std::string key = Key(spec, mask);
  const auto path = PathFor(key);
  std::ifstream in(path);
  std::lock_guard lock(mu_);
  if (!in) {
    ++stats_.misses;
    return std::nullopt;
  }
  std::optional<CertifiedSet> value = Deserialize(key, in);
  if (!value) {
    ++stats_.corrupt;
    ++stats_.misses;
    warnings_.push_back("corrupt cache entry " + path.string() + " for " + key +
                        "; recomputing");
    return std::nullopt;
  }
  ++stats_.hits;
  if (verify_ && (stats_.hits - 1) % 100 == 0) {
    ++stats_.verified;
    const CertifiedSet fresh = CertifySet(spec, mask);
    if (!(fresh == *value)) {
      ++stats_.verify_failures;
      warnings_.push_back("cache entry for " + key + " differs from recomputation");
      return fresh;
    }
  }
  return value;
}

void DiskCache::Put(const GroupSpec& spec, std::uint64_t mask, const CertifiedSet& value) {
  const std::string key = Key(spec, mask);
  const auto path = PathFor(key);
  std::lock_guard lock(mu_);
  const auto temp = directory_ / (path.filename().string() + ".tmp." +
                                  std::to_string(::getpid()) + "." +
                                  std::to_string(temp_counter_++));
  {
    std::ofstream out(temp, std::ios::trunc);
    out << Serialize(key, value);
    if (!out) {
      warnings_.push_back("could not write cache entry " + temp.string());
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::filesystem::remove(temp, ec);
    warnings_.push_back("could not install cache entry " + path.string());
    return;
  }
  ++stats_.writes;
}

DiskCache::Stats DiskCache::stats() const {
  std::lock_guard lock(mu_);
  return stats_;
}

std::vector<std::string> DiskCache::TakeWarnings() {
  std::lock_guard lock(mu_);
  return std::exchange(warnings_, {});
}

std::filesystem::path DefaultCacheDirectory() {
  if (const char* env = std::getenv("CAYCI_CACHE_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return ".cayci-cache";
}

}  // namespace cayci
