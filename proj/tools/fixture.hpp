#ifndef HOCX_TOOLS_FIXTURE_HPP
#define HOCX_TOOLS_FIXTURE_HPP

#include "hocx/builders.hpp"
#include "hocx/galois.hpp"
#include "hocx/groupoid.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace hocx::cli {

using json = nlohmann::ordered_json;

// Malformed input; `where` is "line L, column C" for syntax errors and a JSON
// pointer for schema errors.
struct ParseError : std::runtime_error {
  std::string where;
  ParseError(std::string w, const std::string& what) : std::runtime_error(w + ": " + what), where(std::move(w)) {}
};
struct UnknownBuiltin : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json parse_text(const std::string& text);
json read_file(const std::string& path);

// Top-level "kind": groupoid | coalgebra | xhopf | sayd | coextension | hopf_coextension.
std::string kind_of(const json& doc);

FiniteGroup load_group(const json& j, const std::string& at);
FiniteGroupoid load_groupoid(const json& j, const std::string& at);
// "id", or one morphism index per object.
Theta load_theta(const json& j, const FiniteGroupoid& g, const std::string& at);
Coalgebra load_coalgebra(const json& j, const std::string& at);
HopfAlgebra load_hopf(const json& j, const std::string& at);

// x-Hopf structures come in either chirality.
struct AnyXHopf {
  std::optional<LeftXHopf> left;
  std::optional<RightXHopf> right;
  std::string name;
};
AnyXHopf load_xhopf(const json& j, const std::string& at);

struct AnySayd {
  std::optional<SaydLR> lr;
  std::optional<SaydRL> rl;
  std::string name;
};
AnySayd load_sayd(const json& j, const std::string& at);

// T = B over S^e (the self-coextension) with M = S induced by the identity.
struct CoextensionInput {
  EquivariantCoextension x;
  SaydLR m;
};
CoextensionInput load_coextension(const json& j);

struct HopfCoextensionInput {
  HopfAlgebra h;
  ModuleCoalgebra c;
};
HopfCoextensionInput load_hopf_coextension(const json& j);

}  // namespace hocx::cli

#endif
