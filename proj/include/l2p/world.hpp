// Copyright 2026 The l2p Authors
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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "l2p/common.hpp"

namespace l2p {

enum class Domain { Scene, Alchemy, Tangrams };

Domain parse_domain(const std::string& name);
std::string domain_name(Domain d);

enum class Color : uint8_t { Red, Orange, Yellow, Green, Blue, Purple, Brown };

char color_code(Color c);
/// Domain-aware: 'b' is blue in Scene and brown in Alchemy.
std::optional<Color> color_from_code(Domain d, char code);
const std::vector<Color>& domain_colors(Domain d);

constexpr int kScenePositions = 10;
constexpr int kAlchemyBeakers = 7;
constexpr int kBeakerCapacity = 4;
constexpr int kTangramSlots = 5;
constexpr int kTangramShapes = 5;

struct Person {
  Color shirt;
  std::optional<Color> hat;
  friend bool operator==(const Person&, const Person&) = default;
};

/// Ten ordered positions, each empty or holding one person.
struct SceneWorld {
  std::array<std::optional<Person>, kScenePositions> slots{};
  friend bool operator==(const SceneWorld&, const SceneWorld&) = default;
};

/// Seven beakers, each an ordered bottom-to-top column of at most four units.
struct AlchemyWorld {
  std::array<SmallVec<Color, kBeakerCapacity>, kAlchemyBeakers> beakers{};
  friend bool operator==(const AlchemyWorld&, const AlchemyWorld&) = default;
};

/// Up to five figures in a row; shape ids 0..4, each present at most once.
struct TangramsWorld {
  SmallVec<uint8_t, kTangramSlots> figures{};
  friend bool operator==(const TangramsWorld&, const TangramsWorld&) = default;
};

class WorldState {
 public:
  WorldState() : v_(SceneWorld{}) {}
  explicit WorldState(SceneWorld w) : v_(std::move(w)) {}
  explicit WorldState(AlchemyWorld w) : v_(std::move(w)) {}
  explicit WorldState(TangramsWorld w) : v_(std::move(w)) {}

  Domain domain() const {
    if (std::holds_alternative<SceneWorld>(v_)) return Domain::Scene;
    if (std::holds_alternative<AlchemyWorld>(v_)) return Domain::Alchemy;
    return Domain::Tangrams;
  }

  const SceneWorld& scene() const { return std::get<SceneWorld>(v_); }
  SceneWorld& scene() { return std::get<SceneWorld>(v_); }
  const AlchemyWorld& alchemy() const { return std::get<AlchemyWorld>(v_); }
  AlchemyWorld& alchemy() { return std::get<AlchemyWorld>(v_); }
  const TangramsWorld& tangrams() const { return std::get<TangramsWorld>(v_); }
  TangramsWorld& tangrams() { return std::get<TangramsWorld>(v_); }

  friend bool operator==(const WorldState&, const WorldState&) = default;

 private:
  std::variant<SceneWorld, AlchemyWorld, TangramsWorld> v_;
};

/// Decodes the single-line world format; throws ParseError naming the
/// offending field and column on malformed input.
WorldState parse_world(const std::string& text, Domain domain);

/// Canonical single-line form; inverse of parse_world on canonical text.
std::string serialize_world(const WorldState& w);

/// Appends a compact byte encoding of `w` (used by state keys).
void append_world_key(std::string& out, const WorldState& w);

/// One training instance: initial world, M utterances, final target world.
/// Intermediate worlds are kept only for validation and truncation.
struct Example {
  std::string id;
  WorldState initial;
  std::vector<std::vector<std::string>> utterances;
  WorldState target;
  std::vector<WorldState> intermediates;  // w^1 .. w^{M-1}

  Domain domain() const { return initial.domain(); }
  int num_utterances() const { return static_cast<int>(utterances.size()); }

  /// World after the first `cutoff` utterances (cutoff == M gives target).
  const WorldState& world_at(int cutoff) const;
};

/// Uniformly random world, used by property tests and the data generator.
WorldState random_world(Domain d, Rng& rng);

}  // namespace l2p
