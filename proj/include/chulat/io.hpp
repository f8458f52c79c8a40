// Copyright 2026 The chulat Authors
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

// JSON and DOT serialization, and the instance-name grammar:
//
//   mo:N | powerset:N | chain2 | ortho:M:D1,D2,... | subspace:Q:D | <file.json>

#ifndef CHULAT_IO_HPP_
#define CHULAT_IO_HPP_

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "chulat/chu.hpp"
#include "chulat/closure_space.hpp"
#include "chulat/error.hpp"
#include "chulat/instances.hpp"
#include "chulat/morphisms.hpp"
#include "chulat/tensor.hpp"

namespace chulat {

using json = nlohmann::json;

inline json lattice_to_json(const ClosureSpace& l) {
  json closed = json::array();
  for (const AtomSet& c : l.family()) closed.push_back(c.indices());
  return json{{"name", l.name()}, {"atoms", l.labels()}, {"closed", closed}};
}

namespace detail {

inline AtomSet atoms_from_json(const json& j, std::size_t n) {
  if (!j.is_array()) throw Error(ErrorCode::kParseError, "expected an array of atom indices");
  AtomSet s;
  for (const json& v : j) {
    if (!v.is_number_unsigned() || v.get<std::size_t>() >= n) {
      throw Error(ErrorCode::kParseError, "atom index out of range: " + v.dump());
    }
    s.set(v.get<std::size_t>());
  }
  return s;
}

}  // namespace detail

/// Accepts "closed" (the full family) or "coatoms" (closed under meets).
inline ClosureSpace lattice_from_json(const json& j, const Limits& limits = {}) {
  if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array()) {
    throw Error(ErrorCode::kParseError, "lattice JSON needs an \"atoms\" array");
  }
  std::vector<std::string> labels;
  for (const json& a : j["atoms"]) labels.push_back(a.is_string() ? a.get<std::string>() : a.dump());
  const std::size_t n = labels.size();
  const std::string name = j.value("name", std::string{});
  std::vector<AtomSet> sets;
  if (j.contains("closed")) {
    for (const json& c : j["closed"]) sets.push_back(detail::atoms_from_json(c, n));
    return ClosureSpace::from_family(n, std::move(sets), name, std::move(labels));
  }
  if (j.contains("coatoms")) {
    for (const json& c : j["coatoms"]) sets.push_back(detail::atoms_from_json(c, n));
    return build_space(n, sets, name, std::move(labels), limits);
  }
  throw Error(ErrorCode::kParseError, "lattice JSON needs \"closed\" or \"coatoms\"");
}

inline json arrow_to_json(const AtomMap& f) {
  json img = json::array();
  for (const AtomImage& v : f.image) img.push_back(v ? json(*v) : json(nullptr));
  return json{{"source", f.source ? f.source->name() : ""},
              {"target", f.target ? f.target->name() : ""},
              {"image", img}};
}

/// Image array only; source and target are supplied by the caller.
inline AtomMap arrow_from_json(const json& j, const ClosureSpace& source,
                               const ClosureSpace& target) {
  if (!j.contains("image") || !j["image"].is_array()) {
    throw Error(ErrorCode::kParseError, "arrow JSON needs an \"image\" array");
  }
  AtomMap f{&source, &target, {}};
  for (const json& v : j["image"]) {
    if (v.is_null()) {
      f.image.push_back(kZero);
    } else if (v.is_number_unsigned()) {
      f.image.emplace_back(v.get<std::size_t>());
    } else {
      throw Error(ErrorCode::kParseError, "arrow image entries are indices or null");
    }
  }
  return f;
}

inline json chu_to_json(const ChuObject& o) {
  json rows = json::array();
  for (std::size_t i = 0; i < o.a; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < o.x; ++k) row.push_back(static_cast<int>(o.at(i, k)));
    rows.push_back(row);
  }
  return json{{"A", o.a}, {"X", o.x}, {"pointed", o.pointed}, {"r", rows}};
}

inline ChuObject chu_from_json(const json& j) {
  try {
    ChuObject o = ChuObject::zeros(j.at("A").get<std::size_t>(), j.at("X").get<std::size_t>(),
                                   j.at("pointed").get<bool>());
    const json& rows = j.at("r");
    if (rows.size() != o.a) throw Error(ErrorCode::kParseError, "row count differs from A");
    for (std::size_t i = 0; i < o.a; ++i) {
      if (rows[i].size() != o.x) throw Error(ErrorCode::kParseError, "row length differs from X");
      for (std::size_t k = 0; k < o.x; ++k) o.put(i, k, rows[i][k].get<int>() != 0);
    }
    validate(o);
    return o;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

inline json relation_to_json(const Relation& r) {
  json cells = json::array();
  r.cells.for_each([&](std::size_t c) { cells.push_back({c / r.n2, c % r.n2}); });
  return json{{"n1", r.n1}, {"n2", r.n2}, {"cells", cells}};
}

inline Relation relation_from_json(const json& j) {
  try {
    Relation r = Relation::empty(j.at("n1").get<std::size_t>(), j.at("n2").get<std::size_t>());
    for (const json& c : j.at("cells")) r.set(c.at(0).get<std::size_t>(), c.at(1).get<std::size_t>());
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

/// Hasse diagram: one node per closed set, one edge per cover.
inline std::string to_dot(const ClosureSpace& l) {
  std::ostringstream out;
  out << "digraph \"" << (l.name().empty() ? "L" : l.name()) << "\" {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < l.size(); ++i) {
    std::string label = "{";
    bool first = true;
    l.family()[i].for_each([&](std::size_t a) {
      if (!first) label += ',';
      label += l.labels()[a];
      first = false;
    });
    out << "  n" << i << " [label=\"" << label << "}\"];\n";
  }
  for (auto [lo, hi] : covers(l)) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto k = s.find(sep);
    out.push_back(s.substr(0, k));
    if (k == std::string_view::npos) return out;
    s.remove_prefix(k + 1);
  }
}

inline std::size_t parse_count(std::string_view s, std::string_view spec) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParseError,
                "expected a number, got \"" + std::string(s) + "\" in " + std::string(spec));
  }
  return v;
}

}  // namespace detail

/// Builds a lattice from the instance grammar or a lattice JSON file.
inline ClosureSpace make_instance(std::string_view spec, const Limits& limits = {}) {
  const auto parts = detail::split(spec, ':');
  const std::string_view kind = parts[0];
  auto arity = [&](std::size_t n) {
    if (parts.size() != n) {
      throw Error(ErrorCode::kParseError, "malformed instance \"" + std::string(spec) + "\"");
    }
  };
  if (kind == "chain2" || kind == "2") {
    arity(1);
    return chain2();
  }
  if (kind == "mo") {
    arity(2);
    const std::size_t n = detail::parse_count(parts[1], spec);
    if (n == 0) throw Error(ErrorCode::kParseError, "mo needs at least one atom");
    return mo(n);
  }
  if (kind == "powerset") {
    arity(2);
    const std::size_t n = detail::parse_count(parts[1], spec);
    if (n == 0) throw Error(ErrorCode::kParseError, "powerset needs at least one atom");
    return powerset(n);
  }
  if (kind == "ortho") {
    arity(3);
    std::vector<std::size_t> diffs;
    for (std::string_view d : detail::split(parts[2], ','))
      diffs.push_back(detail::parse_count(d, spec));
    return ortho_space(detail::parse_count(parts[1], spec), diffs).space;
  }
  if (kind == "subspace") {
    arity(3);
    return subspace_lattice(static_cast<int>(detail::parse_count(parts[1], spec)),
                            detail::parse_count(parts[2], spec), limits)
        .space;
  }
  std::ifstream in{std::string(spec)};
  if (!in) throw Error(ErrorCode::kParseError, "unknown instance \"" + std::string(spec) + "\"");
  try {
    return lattice_from_json(json::parse(in), limits);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string(spec) + ": " + e.what());
  }
}

}  // namespace chulat

#endif  // CHULAT_IO_HPP_
