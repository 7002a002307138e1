// Copyright 2026 The DILC Authors
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

#include "dilc/config.h"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "json.hpp"

namespace dilc::harness {

using design::Design;
using design::NormKind;
using Json = nlohmann::json;

ConfigError::ConfigError(std::string field, const std::string& message)
    : std::runtime_error(field.empty() ? message : field + ": " + message),
      field_(std::move(field)) {}

std::pair<Design, Design> parse_design_pair(std::string_view name) {
  if (name == "gg") return {Design::kGradient, Design::kGradient};
  if (name == "gno") return {Design::kGradient, Design::kNormOptimal};
  if (name == "nog") return {Design::kNormOptimal, Design::kGradient};
  if (name == "nono") return {Design::kNormOptimal, Design::kNormOptimal};
  throw ConfigError("design", "unknown design pair '" + std::string(name) +
                                  "', expected gg, gno, nog or nono");
}

std::string design_pair_name(Design iml, Design ilc) {
  auto part = [](Design d) { return d == Design::kGradient ? "g" : "no"; };
  return std::string(part(iml)) + part(ilc);
}

namespace {

void flatten(const Json& node, const std::string& prefix,
             std::map<std::string, Json>& out) {
  for (const auto& [key, value] : node.items()) {
    const std::string path = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      flatten(value, path, out);
    } else if (!out.emplace(path, value).second) {
      throw ConfigError(path, "duplicate key");
    }
  }
}

double as_real(const std::string& key, const Json& v) {
  if (!v.is_number()) throw ConfigError(key, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError(key, "expected a finite number");
  return d;
}

std::uint64_t as_unsigned(const std::string& key, const Json& v) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    throw ConfigError(key, "expected a non-negative integer");
  }
  throw ConfigError(key, "expected an integer");
}

Index as_index(const std::string& key, const Json& v) {
  if (!v.is_number_integer()) throw ConfigError(key, "expected an integer");
  return static_cast<Index>(v.get<std::int64_t>());
}

std::string as_string(const std::string& key, const Json& v) {
  if (!v.is_string()) throw ConfigError(key, "expected a string");
  return v.get<std::string>();
}

bool as_bool(const std::string& key, const Json& v) {
  if (!v.is_boolean()) throw ConfigError(key, "expected true or false");
  return v.get<bool>();
}

NormKind parse_norm(const std::string& key, const std::string& name) {
  if (name == "spectral") return NormKind::kSpectral;
  if (name == "frobenius") return NormKind::kFrobenius;
  throw ConfigError(key, "expected 'spectral' or 'frobenius'");
}

using Setter = std::function<void(ExperimentConfig&, const std::string&,
                                  const Json&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"plant.name", [](auto& c, auto& k, auto& v) { c.plant.name = as_string(k, v); }},
      {"plant.seed", [](auto& c, auto& k, auto& v) { c.plant.seed = as_unsigned(k, v); }},
      {"plant.state_dim", [](auto& c, auto& k, auto& v) { c.plant.state_dim = as_index(k, v); }},
      {"plant.spectral_radius", [](auto& c, auto& k, auto& v) { c.plant.spectral_radius = as_real(k, v); }},
      {"plant.arm.mass1", [](auto& c, auto& k, auto& v) { c.plant.arm.mass1 = as_real(k, v); }},
      {"plant.arm.mass2", [](auto& c, auto& k, auto& v) { c.plant.arm.mass2 = as_real(k, v); }},
      {"plant.arm.length1", [](auto& c, auto& k, auto& v) { c.plant.arm.length1 = as_real(k, v); }},
      {"plant.arm.length2", [](auto& c, auto& k, auto& v) { c.plant.arm.length2 = as_real(k, v); }},
      {"plant.arm.friction1", [](auto& c, auto& k, auto& v) { c.plant.arm.friction1 = as_real(k, v); }},
      {"plant.arm.friction2", [](auto& c, auto& k, auto& v) { c.plant.arm.friction2 = as_real(k, v); }},
      {"plant.arm.sample_time", [](auto& c, auto& k, auto& v) { c.plant.arm.sample_time = as_real(k, v); }},
      {"plant.arm.substeps", [](auto& c, auto& k, auto& v) { c.plant.arm.substeps = static_cast<int>(as_index(k, v)); }},
      {"reference.name", [](auto& c, auto& k, auto& v) { c.reference.name = as_string(k, v); }},
      {"reference.amplitude", [](auto& c, auto& k, auto& v) { c.reference.amplitude = as_real(k, v); }},
      {"channels", [](auto& c, auto& k, auto& v) { c.channels = as_index(k, v); }},
      {"samples", [](auto& c, auto& k, auto& v) { c.samples = as_index(k, v); }},
      {"trials", [](auto& c, auto& k, auto& v) {
         if (!v.is_number_integer()) throw ConfigError(k, "expected an integer");
         const auto t = v.template get<std::int64_t>();
         if (t < 1) throw ConfigError(k, "must be at least 1");
         c.trials = static_cast<std::size_t>(t);
       }},
      {"design", [](auto& c, auto& k, auto& v) {
         std::tie(c.iml_design, c.ilc_design) = parse_design_pair(as_string(k, v));
       }},
      {"norm", [](auto& c, auto& k, auto& v) { c.norm = parse_norm(k, as_string(k, v)); }},
      {"norm_floor", [](auto& c, auto& k, auto& v) { c.norm_floor = as_real(k, v); }},
      {"initial_input_stddev", [](auto& c, auto& k, auto& v) { c.initial_input_stddev = as_real(k, v); }},
      {"noise_sigma", [](auto& c, auto& k, auto& v) { c.noise_sigma = as_real(k, v); }},
      {"seed", [](auto& c, auto& k, auto& v) { c.seed = as_unsigned(k, v); }},
      {"output_dir", [](auto& c, auto& k, auto& v) { c.output_dir = as_string(k, v); }},
      {"contraction_diagnostics", [](auto& c, auto& k, auto& v) { c.contraction_diagnostics = as_bool(k, v); }},
      {"excitation_dither", [](auto& c, auto& k, auto& v) { c.excitation_dither = as_real(k, v); }},
  };
  return table;
}

bool known_reference(const std::string& name) {
  return name == "zero" || name == "sine" || name == "multisine" ||
         name == "step";
}

}  // namespace

ExperimentConfig parse_config_text(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ConfigError("", std::string("parse error: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("", "config must be a JSON object");

  std::map<std::string, Json> flat;
  flatten(doc, "", flat);
  for (const char* required : {"plant.name", "reference.name", "trials"}) {
    if (!flat.contains(required)) throw ConfigError(required, "missing required key");
  }
  ExperimentConfig config;
  const auto& table = setters();
  for (const auto& [key, value] : flat) {
    auto it = table.find(key);
    if (it == table.end()) throw ConfigError(key, "unknown key");
    it->second(config, key, value);
  }
  validate(config);
  return config;
}

ExperimentConfig parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot read config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

void validate(const ExperimentConfig& c) {
  if (c.plant.name != "random_lti" && c.plant.name != "two_link_arm") {
    throw ConfigError("plant.name", "unknown plant '" + c.plant.name +
                                        "', expected random_lti or two_link_arm");
  }
  if (!known_reference(c.reference.name)) {
    throw ConfigError("reference.name",
                      "unknown reference '" + c.reference.name +
                          "', expected zero, sine, multisine or step");
  }
  if (c.channels < 1) throw ConfigError("channels", "must be at least 1");
  if (c.samples < 1) throw ConfigError("samples", "must be at least 1");
  if (c.trials < 1) throw ConfigError("trials", "must be at least 1");
  if (c.plant.name == "random_lti") {
    if (c.plant.state_dim < c.channels) {
      throw ConfigError("plant.state_dim", "must be at least channels");
    }
    if (!(c.plant.spectral_radius >= 0.0 && c.plant.spectral_radius < 1.0)) {
      throw ConfigError("plant.spectral_radius", "must lie in [0, 1)");
    }
  } else {
    if (c.channels != 2) {
      throw ConfigError("channels", "two_link_arm has exactly 2 channels");
    }
    const auto& a = c.plant.arm;
    if (!(a.mass1 > 0)) throw ConfigError("plant.arm.mass1", "must be positive");
    if (!(a.mass2 > 0)) throw ConfigError("plant.arm.mass2", "must be positive");
    if (!(a.length1 > 0)) throw ConfigError("plant.arm.length1", "must be positive");
    if (!(a.length2 > 0)) throw ConfigError("plant.arm.length2", "must be positive");
    if (!(a.friction1 >= 0)) throw ConfigError("plant.arm.friction1", "must be non-negative");
    if (!(a.friction2 >= 0)) throw ConfigError("plant.arm.friction2", "must be non-negative");
    if (!(a.sample_time > 0)) throw ConfigError("plant.arm.sample_time", "must be positive");
    if (a.substeps < 1) throw ConfigError("plant.arm.substeps", "must be at least 1");
  }
  if (!(c.norm_floor > 0)) throw ConfigError("norm_floor", "must be positive");
  if (!(c.initial_input_stddev >= 0)) {
    throw ConfigError("initial_input_stddev", "must be non-negative");
  }
  if (!(c.noise_sigma >= 0)) throw ConfigError("noise_sigma", "must be non-negative");
  if (!(c.excitation_dither >= 0)) {
    throw ConfigError("excitation_dither", "must be non-negative");
  }
  if (c.output_dir.empty()) throw ConfigError("output_dir", "must not be empty");
}

std::string to_json(const ExperimentConfig& c) {
  nlohmann::ordered_json j;
  j["plant.name"] = c.plant.name;
  if (c.plant.seed) j["plant.seed"] = *c.plant.seed;
  j["plant.state_dim"] = c.plant.state_dim;
  j["plant.spectral_radius"] = c.plant.spectral_radius;
  j["plant.arm.mass1"] = c.plant.arm.mass1;
  j["plant.arm.mass2"] = c.plant.arm.mass2;
  j["plant.arm.length1"] = c.plant.arm.length1;
  j["plant.arm.length2"] = c.plant.arm.length2;
  j["plant.arm.friction1"] = c.plant.arm.friction1;
  j["plant.arm.friction2"] = c.plant.arm.friction2;
  j["plant.arm.sample_time"] = c.plant.arm.sample_time;
  j["plant.arm.substeps"] = c.plant.arm.substeps;
  j["reference.name"] = c.reference.name;
  j["reference.amplitude"] = c.reference.amplitude;
  j["channels"] = c.channels;
  j["samples"] = c.samples;
  j["trials"] = c.trials;
  j["design"] = design_pair_name(c.iml_design, c.ilc_design);
  j["norm"] = std::string(design::to_string(c.norm));
  j["norm_floor"] = c.norm_floor;
  j["initial_input_stddev"] = c.initial_input_stddev;
  j["noise_sigma"] = c.noise_sigma;
  j["seed"] = c.seed;
  j["output_dir"] = c.output_dir.string();
  j["contraction_diagnostics"] = c.contraction_diagnostics;
  j["excitation_dither"] = c.excitation_dither;
  return j.dump(2) + "\n";
}

}  // namespace dilc::harness
