#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grouplab/group.hpp"

namespace grouplab {

// Parsed form of the line-oriented group file format:
//   group <name>
//   degree <n>
//   gen <cycles>          e.g. gen (1 2 3)(4 5)   ("gen ()" is the identity)
//   end
// '#' starts a comment; points are 1-based and bounded by the degree.
struct GroupFile {
  std::string name;
  Point degree = 0;
  std::vector<Perm> generators;
};

GroupFile parse_group_file(const std::string& text);  // throws ParseError
GroupPtr group_from_file_text(const std::string& text);
GroupPtr group_from_path(const std::string& path);
std::string write_group_file(const Group& g);

// Built-in constructors, by token:
//   cyclicN, dihedralN (N = order, even, >= 4), symmetricN (N <= 6),
//   alternatingN (N <= 6), quaternion8, elementary_abelianN (N = p^k),
//   product(a,b) with built-in tokens as arguments (disjoint points).
GroupPtr builtin(const std::string& token);

// Loads the order-216 fixture from a group file and validates the profile
// it must satisfy: order 216, solvable, Sylow 3-subgroup of order 27 with
// nilpotency class 2, N_G(P) 3-supersolvable, G not 3-supersolvable.
// Any failure is a hard error.
GroupPtr fixture_216_153(const std::string& path);

struct CatalogEntry {
  enum class Source { builtin, file, fixture };
  std::string name;
  Source source = Source::builtin;
  std::string spec;  // builtin token, or a resolved file path
  std::optional<std::size_t> expected_order;
};

// Constructs the entry's group and checks the expected order when given.
GroupPtr materialize(const CatalogEntry& entry);

// Reads a catalog directory: <dir>/catalog.list when present (lines of
// "builtin <token> [order]", "file <relpath> [order]",
// "fixture <relpath> [order]"), otherwise every *.grp file in sorted order.
std::vector<CatalogEntry> load_catalog_dir(const std::string& dir);

// The built-in scan catalog: every constructor family instantiated through
// order 120 plus direct products through order 216.
std::vector<CatalogEntry> default_catalog();

} // namespace grouplab
