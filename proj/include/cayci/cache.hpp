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

#ifndef CAYCI_CACHE_HPP_
#define CAYCI_CACHE_HPP_

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cayci/citester.hpp"

namespace cayci {

// On-disk certificate store, one file per key, named by the FNV-1a hash of
// the key. Entries are written to a temporary file and renamed into place.
class DiskCache : public CertificateStore {
 public:
  struct Stats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
    std::uint64_t writes = 0;
    std::uint64_t corrupt = 0;
    std::uint64_t verified = 0;
    std::uint64_t verify_failures = 0;
  };

  // With `verify`, the first hit and every 100th after it are recomputed
  // and compared bit for bit.
  explicit DiskCache(std::filesystem::path directory, bool verify = false);

  std::optional<CertifiedSet> Get(const GroupSpec& spec, std::uint64_t mask) override;
  void Put(const GroupSpec& spec, std::uint64_t mask, const CertifiedSet& value) override;

  // "dihedral:9|1,3,4,7" with the set given by element indices.
  static std::string Key(const GroupSpec& spec, std::uint64_t mask);
  std::filesystem::path PathFor(const std::string& key) const;

  const std::filesystem::path& directory() const { return directory_; }
  Stats stats() const;
  std::vector<std::string> TakeWarnings();

 private:
  std::filesystem::path directory_;
  bool verify_;
  mutable std::mutex mu_;
  Stats stats_;
  std::uint64_t temp_counter_ = 0;
  std::vector<std::string> warnings_;
};

// $CAYCI_CACHE_DIR, or ".cayci-cache" under the working directory.
std::filesystem::path DefaultCacheDirectory();

}  // namespace cayci

#endif  // CAYCI_CACHE_HPP_
