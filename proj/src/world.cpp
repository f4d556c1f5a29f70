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

#include "l2p/world.hpp"

#include <sstream>

namespace l2p {

Domain parse_domain(const std::string& name) {
  if (name == "scene") return Domain::Scene;
  if (name == "alchemy") return Domain::Alchemy;
  if (name == "tangrams") return Domain::Tangrams;
  throw ParseError("unknown domain '" + name + "'");
}

std::string domain_name(Domain d) {
  switch (d) {
    case Domain::Scene: return "scene";
    case Domain::Alchemy: return "alchemy";
    case Domain::Tangrams: return "tangrams";
  }
  return "?";
}

char color_code(Color c) {
  switch (c) {
    case Color::Red: return 'r';
    case Color::Orange: return 'o';
    case Color::Yellow: return 'y';
    case Color::Green: return 'g';
    case Color::Blue: return 'b';
    case Color::Purple: return 'p';
    case Color::Brown: return 'b';
  }
  return '?';
}

const std::vector<Color>& domain_colors(Domain d) {
  static const std::vector<Color> scene = {Color::Red,   Color::Orange,
                                           Color::Yellow, Color::Green,
                                           Color::Blue,  Color::Purple};
  static const std::vector<Color> alchemy = {Color::Green,  Color::Orange,
                                             Color::Purple, Color::Red,
                                             Color::Yellow, Color::Brown};
  if (d == Domain::Scene) return scene;
  if (d == Domain::Alchemy) return alchemy;
  static const std::vector<Color> none = {};
  return none;
}

std::optional<Color> color_from_code(Domain d, char code) {
  for (Color c : domain_colors(d))
    if (color_code(c) == code) return c;
  return std::nullopt;
}

namespace {

[[noreturn]] void fail_at(const std::string& what, size_t col) {
  throw ParseError(what + " at column " + std::to_string(col + 1));
}

// Splits "p:payload", checks the 1-based position prefix, returns payload.
std::string field_payload(const std::string& field, size_t col, int want_pos) {
  auto colon = field.find(':');
  if (colon == std::string::npos) fail_at("missing ':' in field '" + field + "'", col);
  int pos = 0;
  try {
    pos = std::stoi(field.substr(0, colon));
  } catch (...) {
    fail_at("bad position in field '" + field + "'", col);
  }
  if (pos != want_pos) fail_at("expected position " + std::to_string(want_pos), col);
  return field.substr(colon + 1);
}

std::vector<std::pair<std::string, size_t>> split_fields(const std::string& text) {
  std::vector<std::pair<std::string, size_t>> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    if (i >= text.size()) break;
    size_t start = i;
    while (i < text.size() && text[i] != ' ') ++i;
    out.emplace_back(text.substr(start, i - start), start);
  }
  return out;
}

}  // namespace

WorldState parse_world(const std::string& text, Domain domain) {
  auto fields = split_fields(text);
  switch (domain) {
    case Domain::Scene: {
      if (fields.size() != kScenePositions)
        throw ParseError("scene world needs " + std::to_string(kScenePositions) +
                         " fields, got " + std::to_string(fields.size()));
      SceneWorld w;
      for (int p = 0; p < kScenePositions; ++p) {
        auto [field, col] = fields[static_cast<size_t>(p)];
        std::string payload = field_payload(field, col, p + 1);
        if (payload.size() != 2) fail_at("scene payload must be 2 chars", col);
        if (payload == "__") continue;
        auto shirt = color_from_code(Domain::Scene, payload[0]);
        if (!shirt) fail_at(std::string("unknown shirt color '") + payload[0] + "'", col);
        Person person{*shirt, std::nullopt};
        if (payload[1] != '_') {
          auto hat = color_from_code(Domain::Scene, payload[1]);
          if (!hat) fail_at(std::string("unknown hat color '") + payload[1] + "'", col);
          person.hat = *hat;
        }
        w.slots[static_cast<size_t>(p)] = person;
      }
      return WorldState(w);
    }
    case Domain::Alchemy: {
      if (fields.size() != kAlchemyBeakers)
        throw ParseError("alchemy world needs " + std::to_string(kAlchemyBeakers) +
                         " fields, got " + std::to_string(fields.size()));
      AlchemyWorld w;
      for (int p = 0; p < kAlchemyBeakers; ++p) {
        auto [field, col] = fields[static_cast<size_t>(p)];
        std::string payload = field_payload(field, col, p + 1);
        if (payload == "_") continue;
        if (payload.size() > kBeakerCapacity) fail_at("beaker exceeds capacity", col);
        for (char ch : payload) {
          auto c = color_from_code(Domain::Alchemy, ch);
          if (!c) fail_at(std::string("unknown chemical color '") + ch + "'", col);
          w.beakers[static_cast<size_t>(p)].push_back(*c);
        }
      }
      return WorldState(w);
    }
    case Domain::Tangrams: {
      if (fields.size() > kTangramSlots)
        throw ParseError("tangrams world holds at most " +
                         std::to_string(kTangramSlots) + " figures");
      TangramsWorld w;
      bool seen[kTangramShapes] = {};
      for (size_t p = 0; p < fields.size(); ++p) {
        auto [field, col] = fields[p];
        std::string payload = field_payload(field, col, static_cast<int>(p) + 1);
        if (payload.size() != 1 || payload[0] < '0' ||
            payload[0] >= '0' + kTangramShapes)
          fail_at("shape id must be 0.." + std::to_string(kTangramShapes - 1), col);
        int shape = payload[0] - '0';
        if (seen[shape]) fail_at("duplicate shape id", col);
        seen[shape] = true;
        w.figures.push_back(static_cast<uint8_t>(shape));
      }
      return WorldState(w);
    }
  }
  throw ParseError("bad domain");
}

std::string serialize_world(const WorldState& w) {
  std::ostringstream out;
  switch (w.domain()) {
    case Domain::Scene: {
      const auto& s = w.scene();
      for (int p = 0; p < kScenePositions; ++p) {
        if (p) out << ' ';
        out << (p + 1) << ':';
        const auto& slot = s.slots[static_cast<size_t>(p)];
        if (!slot) {
          out << "__";
        } else {
          out << color_code(slot->shirt)
              << (slot->hat ? color_code(*slot->hat) : '_');
        }
      }
      break;
    }
    case Domain::Alchemy: {
      const auto& a = w.alchemy();
      for (int p = 0; p < kAlchemyBeakers; ++p) {
        if (p) out << ' ';
        out << (p + 1) << ':';
        const auto& bk = a.beakers[static_cast<size_t>(p)];
        if (bk.empty()) {
          out << '_';
        } else {
          for (Color c : bk) out << color_code(c);
        }
      }
      break;
    }
    case Domain::Tangrams: {
      const auto& t = w.tangrams();
      for (int p = 0; p < t.figures.size(); ++p) {
        if (p) out << ' ';
        out << (p + 1) << ':' << static_cast<int>(t.figures[p]);
      }
      break;
    }
  }
  return out.str();
}

void append_world_key(std::string& out, const WorldState& w) {
  switch (w.domain()) {
    case Domain::Scene: {
      out.push_back('S');
      for (const auto& slot : w.scene().slots) {
        if (!slot) {
          out.push_back('\xff');
          out.push_back('\xff');
        } else {
          out.push_back(static_cast<char>(slot->shirt));
          out.push_back(slot->hat ? static_cast<char>(*slot->hat) : '\xfe');
        }
      }
      break;
    }
    case Domain::Alchemy: {
      out.push_back('A');
      for (const auto& bk : w.alchemy().beakers) {
        out.push_back(static_cast<char>(bk.size()));
        for (Color c : bk) out.push_back(static_cast<char>(c));
      }
      break;
    }
    case Domain::Tangrams: {
      out.push_back('T');
      const auto& figs = w.tangrams().figures;
      out.push_back(static_cast<char>(figs.size()));
      for (int i = 0; i < figs.size(); ++i) out.push_back(static_cast<char>(figs[i]));
      break;
    }
  }
}

const WorldState& Example::world_at(int cutoff) const {
  if (cutoff < 1 || cutoff > num_utterances())
    throw std::out_of_range("cutoff out of range");
  if (cutoff == num_utterances()) return target;
  return intermediates[static_cast<size_t>(cutoff - 1)];
}

WorldState random_world(Domain d, Rng& rng) {
  switch (d) {
    case Domain::Scene: {
      SceneWorld w;
      const auto& colors = domain_colors(d);
      for (auto& slot : w.slots) {
        if (rng.bernoulli(0.5)) {
          Person p{colors[static_cast<size_t>(rng.uniform_int(static_cast<int>(colors.size())))],
                   std::nullopt};
          if (rng.bernoulli(0.4))
            p.hat = colors[static_cast<size_t>(rng.uniform_int(static_cast<int>(colors.size())))];
          slot = p;
        }
      }
      return WorldState(w);
    }
    case Domain::Alchemy: {
      AlchemyWorld w;
      const auto& colors = domain_colors(d);
      for (auto& bk : w.beakers) {
        int n = rng.uniform_int(kBeakerCapacity + 1);
        for (int i = 0; i < n; ++i)
          bk.push_back(colors[static_cast<size_t>(rng.uniform_int(static_cast<int>(colors.size())))]);
      }
      return WorldState(w);
    }
    case Domain::Tangrams: {
      TangramsWorld w;
      int n = 1 + rng.uniform_int(kTangramSlots);
      std::array<uint8_t, kTangramShapes> shapes = {0, 1, 2, 3, 4};
      for (int i = kTangramShapes - 1; i > 0; --i) {
        int j = rng.uniform_int(i + 1);
        std::swap(shapes[static_cast<size_t>(i)], shapes[static_cast<size_t>(j)]);
      }
      for (int i = 0; i < n; ++i) w.figures.push_back(shapes[static_cast<size_t>(i)]);
      return WorldState(w);
    }
  }
  throw std::logic_error("bad domain");
}

}  // namespace l2p
