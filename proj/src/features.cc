// Copyright 2026 The Earlymod Authors.
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

#include "earlymod/features.h"

#include <array>
#include <utility>

#include "earlymod/text.h"

namespace earlymod {
namespace {

struct AxisValue {
  std::string_view value;
  std::string_view axis;
};

constexpr std::array<AxisValue, 13> kBareValues = {{
    {"INF", FeatureSet::kTense}, {"PR", FeatureSet::kTense},
    {"PT", FeatureSet::kTense},  {"PP", FeatureSet::kTense},
    {"G", FeatureSet::kTense},   {"1", FeatureSet::kPerson},
    {"2", FeatureSet::kPerson},  {"3", FeatureSet::kPerson},
    {"s", FeatureSet::kNumber},  {"p", FeatureSet::kNumber},
    {"m", FeatureSet::kGender},  {"f", FeatureSet::kGender},
    {"n", FeatureSet::kGender},
}};

std::string_view AxisOf(std::string_view value) {
  for (const AxisValue &av : kBareValues) {
    if (av.value == value) return av.axis;
  }
  return {};
}

bool IsAxis(std::string_view key) {
  return key == FeatureSet::kTense || key == FeatureSet::kPerson ||
         key == FeatureSet::kNumber || key == FeatureSet::kGender;
}

}  // namespace

std::string_view PosName(Pos pos) {
  switch (pos) {
    case Pos::kN: return "N";
    case Pos::kV: return "V";
    case Pos::kA: return "A";
    case Pos::kAdv: return "ADV";
    case Pos::kPro: return "PRO";
    case Pos::kConj: return "CONJ";
    case Pos::kPrep: return "PREP";
    case Pos::kDet: return "DET";
    case Pos::kInterj: return "INTERJ";
  }
  return "?";
}

std::optional<Pos> ParsePos(std::string_view tag) {
  static constexpr std::array<Pos, 9> kAll = {
      Pos::kN, Pos::kV, Pos::kA, Pos::kAdv, Pos::kPro,
      Pos::kConj, Pos::kPrep, Pos::kDet, Pos::kInterj};
  for (Pos p : kAll) {
    if (PosName(p) == tag) return p;
  }
  return std::nullopt;
}

bool IsInflectable(Pos pos) {
  return pos == Pos::kN || pos == Pos::kV || pos == Pos::kA;
}

FeatureSet FeatureSet::Parse(std::string_view text) {
  FeatureSet fs;
  text = Trim(text);
  if (text.empty()) return fs;
  for (std::string_view item : SplitUnquoted(text, '+')) {
    item = Trim(item);
    if (item.empty()) continue;
    if (!fs.Add(item)) {
      throw FeatureError("conflicting feature '" + std::string(item) +
                         "' in bundle '" + std::string(text) + "'");
    }
  }
  return fs;
}

bool FeatureSet::Add(std::string_view item) {
  std::string key, value;
  size_t eq = item.find('=');
  if (eq != std::string_view::npos) {
    key = std::string(Trim(item.substr(0, eq)));
    value = std::string(Trim(item.substr(eq + 1)));
  } else {
    std::string_view axis = AxisOf(item);
    if (axis.empty()) {
      traits_.insert(std::string(item));
      return true;
    }
    key = std::string(axis);
    value = std::string(item);
  }
  auto it = values_.find(key);
  if (it != values_.end()) return it->second == value;
  values_.emplace(std::move(key), std::move(value));
  return true;
}

void FeatureSet::Set(std::string_view key, std::string_view value) {
  values_[std::string(key)] = std::string(value);
}

void FeatureSet::AddTrait(std::string_view trait) {
  traits_.insert(std::string(trait));
}

void FeatureSet::Erase(std::string_view key) {
  values_.erase(std::string(key));
  traits_.erase(std::string(key));
}

std::optional<std::string> FeatureSet::Get(std::string_view key) const {
  auto it = values_.find(std::string(key));
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

bool FeatureSet::Has(std::string_view key, std::string_view value) const {
  auto it = values_.find(std::string(key));
  return it != values_.end() && it->second == value;
}

bool FeatureSet::HasTrait(std::string_view trait) const {
  return traits_.count(std::string(trait)) > 0;
}

FeatureSet FeatureSet::Merged(const FeatureSet &other) const {
  FeatureSet out = *this;
  for (const auto &[k, v] : other.values_) out.values_[k] = v;
  out.traits_.insert(other.traits_.begin(), other.traits_.end());
  return out;
}

bool FeatureSet::SubsetOf(const FeatureSet &other) const {
  for (const auto &[k, v] : values_) {
    if (!other.Has(k, v)) return false;
  }
  for (const std::string &t : traits_) {
    if (!other.HasTrait(t)) return false;
  }
  return true;
}

bool FeatureSet::CompatibleWith(const FeatureSet &other) const {
  for (const auto &[k, v] : values_) {
    auto o = other.Get(k);
    if (o && *o != v) return false;
  }
  return true;
}

std::string FeatureSet::Format() const {
  std::string out;
  auto append = [&out](std::string_view s) {
    if (!out.empty()) out.push_back('+');
    out.append(s);
  };
  for (std::string_view axis : {kTense, kPerson, kNumber, kGender}) {
    if (auto v = Get(axis)) {
      // Bare values are only unambiguous when they belong to this axis.
      if (AxisOf(*v) == axis) {
        append(*v);
      } else {
        append(std::string(axis) + "=" + *v);
      }
    }
  }
  for (const auto &[k, v] : values_) {
    if (IsAxis(k)) continue;
    append(k + "=" + v);
  }
  for (const std::string &t : traits_) append(t);
  return out;
}

FeatureSet InflectionalProjection(Pos pos, const FeatureSet &features) {
  FeatureSet out;
  auto copy = [&](std::string_view key) {
    if (auto v = features.Get(key)) out.Set(key, *v);
  };
  switch (pos) {
    case Pos::kV:
      copy(FeatureSet::kTense);
      copy(FeatureSet::kPerson);
      copy(FeatureSet::kNumber);
      break;
    case Pos::kN:
      copy(FeatureSet::kNumber);
      break;
    default:
      break;
  }
  return out;
}

bool IsBaseBundle(const FeatureSet &projected) {
  if (projected.empty()) return true;
  if (projected.size() != 1) return false;
  return projected.Has(FeatureSet::kTense, "INF") ||
         projected.Has(FeatureSet::kNumber, "s");
}

}  // namespace earlymod
