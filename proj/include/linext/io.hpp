#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include "linext/abelian.hpp"
#include "linext/constructions.hpp"
#include "linext/extension.hpp"
#include "linext/loop.hpp"

namespace linext {

/// "2,2" / "4"; whitespace around entries is ignored.
AbelianGroup parse_group_spec(const std::string& text, std::size_t cap = kDefaultGroupCap);

// Loop file:
//   loop <l>
//   <l rows of l space-separated 0-based indices>
// Lines starting with '#' and blank lines are ignored.

FiniteLoop parse_loop(std::istream& in);
FiniteLoop parse_loop_file(const std::string& path);
std::string emit_loop(const FiniteLoop& loop);

// Cocycle file:
//   cocycle l=<l> group=<orders>
//   P
//   <l rows of l canonical Aut(A) indices>
//   Q
//   <l rows>

struct CocycleHeader {
  std::size_t order = 0;
  std::string group;
};

struct CocycleParseOptions {
  AutEnumOptions aut;
  /// Reused when its group matches the header; enumerated otherwise.
  std::shared_ptr<const AutomorphismGroup> automorphisms;
};

CocycleHeader parse_cocycle_header(const std::string& line, std::size_t line_number = 1);
LoopCocycle parse_cocycle(std::istream& in, const FiniteLoop& loop, const CocycleParseOptions& options = {});
LoopCocycle parse_cocycle_file(const std::string& path, const FiniteLoop& loop,
                               const CocycleParseOptions& options = {});
std::string emit_cocycle(const LoopCocycle& cocycle);

/// Loop file of F(P, Q) with a comment header recording l, A and the pair encoding.
std::string emit_extension(const ExtensionLoop& extension);

/// Human-readable orbit table with the cocycle value at every member.
std::string orbit_report(const LoopCocycle& cocycle, const OrbitDecomposition& orbits);

/// 64-bit FNV-1a, printed as "fnv1a64:<16 hex digits>".
std::string fingerprint(const std::string& content);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace linext
