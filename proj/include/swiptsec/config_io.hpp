// swiptsec - secrecy performance of SWIPT downlinks over kappa-mu fading
// Copyright (C) 2026 the swiptsec authors
//
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

#pragma once

#include "swiptsec/secrecy.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace swiptsec::cli {

// Configuration error with the offending key path, e.g. "numerics.rel_tol".
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::string key_path, const std::string& what)
        : std::runtime_error(key_path.empty() ? what : key_path + ": " + what),
          key_path_(std::move(key_path)) {}

    const std::string& key_path() const { return key_path_; }

  private:
    std::string key_path_;
};

// A fully resolved run configuration: the JSON document with every default
// filled in (the display form, dB fields as given) plus the derived linear
// system and numerics structs.
struct ResolvedConfig {
    nlohmann::json doc;
    secrecy::SystemConfig system;
    secrecy::NumericsConfig numerics;
};

// Parse a (possibly partial) JSON config object. Unknown keys, wrong types,
// and out-of-range values raise ConfigError naming the key. An empty object
// yields the documented defaults.
ResolvedConfig parse_config(const nlohmann::json& doc);
ResolvedConfig parse_config_text(const std::string& text);

// Apply one override to an already-resolved config; `path` uses dots for
// nesting ("numerics.rel_tol"). Value types and ranges are checked the same
// way as parse_config.
void apply_value(ResolvedConfig& cfg, const std::string& path, const nlohmann::json& value);

// Apply a command-line "key=value" override; the value text is parsed as
// JSON when possible and treated as a string otherwise.
void apply_set(ResolvedConfig& cfg, const std::string& assignment);

// True when `path` names a numeric scalar field that a sweep may vary.
bool sweepable(const std::string& path);
// True when `path` is given in decibels (sweep output adds a linear column).
bool is_db_key(const std::string& path);

// Canonical serialized form (sorted keys, no whitespace padding) used in the
// "# config:" echo lines.
std::string resolved_text(const ResolvedConfig& cfg);

} // namespace swiptsec::cli
