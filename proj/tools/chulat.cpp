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

// Command-line front end. Exit codes: 0 ok, 1 check failure or library
// error, 2 parse error, 3 size guard.

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include "CLI11.hpp"
#endif
#include "chulat/chulat.hpp"

namespace {

using chulat::ClosureSpace;
using chulat::json;

constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;

std::string coatom_labels(const ClosureSpace& l, const chulat::AtomSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t a) {
    if (!first) out += ',';
    out += l.labels()[a];
    first = false;
  });
  return out + "}";
}

std::optional<chulat::OrthoSpace> ortho_of(const std::string& spec) {
  if (spec.rfind("ortho:", 0) != 0) return std::nullopt;
  const auto parts = chulat::detail::split(spec, ':');
  if (parts.size() != 3) return std::nullopt;
  std::vector<std::size_t> diffs;
  for (auto d : chulat::detail::split(parts[2], ',')) diffs.push_back(chulat::detail::parse_count(d, spec));
  return chulat::ortho_space(chulat::detail::parse_count(parts[1], spec), diffs);
}

json info(const std::string& spec, const chulat::Limits& limits) {
  const auto ortho = ortho_of(spec);
  const ClosureSpace l = ortho ? ortho->space : chulat::make_instance(spec, limits);
  json coatoms = json::array();
  for (const auto& x : l.coatoms()) coatoms.push_back(coatom_labels(l, x));
  const chulat::A0Report a0 = ortho ? chulat::check_A0(*ortho) : chulat::check_A0(l);
  json j{{"name", l.name()},
         {"atoms", l.atom_count()},
         {"elements", l.size()},
         {"coatoms", coatoms},
         {"coatomistic", l.is_coatomistic()},
         {"A0", a0.a0},
         {"A0_dual", a0.a0_op}};
  if (a0.witness_a0) {
    const auto& [x, y] = *a0.witness_a0;
    if (ortho) {
      j["A0_witness"] = {std::to_string(*chulat::perp_name(*ortho, x)) + "'",
                         std::to_string(*chulat::perp_name(*ortho, y)) + "'"};
    } else {
      j["A0_witness"] = {coatom_labels(l, x), coatom_labels(l, y)};
    }
  }
  if (a0.witness_a0_op) j["A0_dual_witness"] = {a0.witness_a0_op->first, a0.witness_a0_op->second};
  try {
    j["irreducible"] = chulat::is_irreducible(l, limits);
  } catch (const chulat::Error& e) {
    if (e.code() != chulat::ErrorCode::kSizeGuard) throw;
    j["irreducible"] = nullptr;
  }
  return j;
}

ClosureSpace tensor(const std::string& op, const ClosureSpace& a, const ClosureSpace& b,
                    const chulat::Limits& limits) {
  if (op == "star") return chulat::star_tensor(a, b, limits);
  if (op == "wedge") return chulat::wedge(a, b, limits);
  if (op == "vee") return chulat::vee(a, b, limits);
  return chulat::lollipop(a, b, limits);
}

struct NamedCheck {
  std::string name;
  std::function<chulat::CheckReport()> run;
};

std::vector<NamedCheck> suite(const chulat::Limits& limits, std::uint32_t seed) {
  using namespace chulat;
  std::vector<NamedCheck> out;
  const std::vector<std::pair<std::string, std::function<ClosureSpace()>>> zoo = {
      {"2", chain2}, {"mo:3", [] { return mo(3); }}, {"mo:4", [] { return mo(4); }}};
  for (const auto& [n1, f1] : zoo)
    for (const auto& [n2, f2] : zoo)
      out.push_back({"functor", [=] { return verify_functor(f1(), f2(), limits); }});
  const std::vector<std::pair<ClosureSpace (*)(), ClosureSpace (*)()>> alpha_pairs = {
      {[] { return mo(3); }, [] { return mo(4); }},
      {[] { return mo(3); }, chain2},
      {chain2, chain2}};
  for (const auto& [f1, f2] : alpha_pairs)
    out.push_back({"alpha", [=] { return verify_alpha(f1(), f2(), limits, seed); }});
  out.push_back({"G_vee", [=] { return verify_G_vee(chain2(), chain2(), limits); }});
  out.push_back({"G_vee", [=] { return verify_G_vee(mo(2), mo(2), limits); }});
  out.push_back({"G_vee", [=] { return verify_G_vee(mo(3), chain2(), limits); }});
  out.push_back({"G_functor", [=] { return verify_G_functor(mo(3), mo(3), limits); }});
  out.push_back({"universal", [=] { return verify_universal(mo(3), chain2(), mo(3), limits); }});
  out.push_back({"universal", [=] { return verify_universal(chain2(), chain2(), mo(3), limits); }});
  out.push_back({"classify", [=] { return classify_star_coatoms(2, 2, limits); }});
  out.push_back({"classify", [=] { return classify_star_coatoms(2, 3, limits); }});
  out.push_back({"injection", [=] { return verify_injection(2, 2, limits); }});
  out.push_back({"coherence", [=] {
                   return check_coherence({chu_top(), functor_F(chain2()), functor_F(mo(3))},
                                          limits);
                 }});
  out.push_back({"examples", [=] { return example_powerset(limits); }});
  out.push_back({"examples", [=] { return example_z6(limits); }});
  out.push_back({"examples", [=] { return example_z12(limits); }});
  out.push_back({"examples", [=] { return example_mo3_mo4(limits); }});
  return out;
}

int emit_reports(const std::vector<chulat::CheckReport>& reports) {
  int code = 0;
  for (const auto& r : reports) {
    std::cout << r.to_json().dump() << '\n';
    if (r.failed()) code = kExitFail;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chulat: finite lattices, their tensor products and Chu spaces"};
  app.require_subcommand(1);
  chulat::Limits limits;
  std::uint32_t seed = 20260101;
  app.add_option("--max-nodes", limits.max_nodes, "Backtracking node budget per search");
  app.add_option("--max-cells", limits.max_cells, "Largest grid for materializing vee");
  app.add_option("--seed", seed, "Seed for sampled naturality checks");

  std::string spec1, spec2, op = "star", only, format = "json";

  auto* info_cmd = app.add_subcommand("info", "Atoms, coatoms, A0 and irreducibility");
  info_cmd->add_option("spec", spec1)->required();
  auto* dual_cmd = app.add_subcommand("dual", "Dual lattice as JSON");
  dual_cmd->add_option("spec", spec1)->required();
  auto* tensor_cmd = app.add_subcommand("tensor", "Tensor product as JSON");
  tensor_cmd->add_option("--op", op)->check(CLI::IsMember({"star", "wedge", "vee", "lollipop"}));
  tensor_cmd->add_option("spec1", spec1)->required();
  tensor_cmd->add_option("spec2", spec2)->required();
  auto* homs_cmd = app.add_subcommand("homs", "Arrows between two lattices");
  homs_cmd->add_option("spec1", spec1)->required();
  homs_cmd->add_option("spec2", spec2)->required();
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
  verify_cmd->add_option("--only", only, "Run only checks of this kind");
  auto* examples_cmd = app.add_subcommand("examples", "Run the four worked examples");
  auto* emit_cmd = app.add_subcommand("emit", "Serialize a lattice");
  emit_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  emit_cmd->add_option("spec", spec1)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*info_cmd) {
      std::cout << info(spec1, limits).dump(2) << '\n';
    } else if (*dual_cmd) {
      std::cout << chulat::lattice_to_json(chulat::dual_space(chulat::make_instance(spec1, limits)))
                       .dump()
                << '\n';
    } else if (*tensor_cmd) {
      const ClosureSpace a = chulat::make_instance(spec1, limits);
      const ClosureSpace b = chulat::make_instance(spec2, limits);
      std::cout << chulat::lattice_to_json(tensor(op, a, b, limits)).dump() << '\n';
    } else if (*homs_cmd) {
      const ClosureSpace a = chulat::make_instance(spec1, limits);
      const ClosureSpace b = chulat::make_instance(spec2, limits);
      const auto homs = chulat::enumerate_homs(a, b, limits);
      json list = json::array();
      for (const auto& f : homs) list.push_back(chulat::arrow_to_json(f));
      std::cout << json{{"count", homs.size()}, {"homs", list}}.dump() << '\n';
    } else if (*verify_cmd) {
      std::vector<chulat::CheckReport> reports;
      bool known = only.empty();
      for (const auto& c : suite(limits, seed)) {
        if (!only.empty() && c.name != only) continue;
        known = true;
        reports.push_back(c.run());
      }
      if (!known) {
        std::cerr << "ParseError: no check named \"" << only << "\"\n";
        return kExitParse;
      }
      return emit_reports(reports);
    } else if (*examples_cmd) {
      return emit_reports(chulat::run_worked_examples(limits));
    } else if (*emit_cmd) {
      const ClosureSpace l = chulat::make_instance(spec1, limits);
      if (format == "dot") {
        std::cout << chulat::to_dot(l);
      } else {
        std::cout << chulat::lattice_to_json(l).dump() << '\n';
      }
    }
  } catch (const chulat::Error& e) {
    std::cerr << e.what() << '\n';
    if (e.code() == chulat::ErrorCode::kParseError) return kExitParse;
    if (e.code() == chulat::ErrorCode::kSizeGuard) return kExitGuard;
    return kExitFail;
  }
  return 0;
}
