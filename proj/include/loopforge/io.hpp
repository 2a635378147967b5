#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loopforge/extension.hpp"

namespace loopforge {

// Text formats. Loop file: order n, then n rows of n indices. Map file:
// n, then n images. Subset file: parent order n, then the members.
// '#' starts a comment anywhere. Writers emit the canonical form (no
// comments, single spaces, trailing newline); parsing a canonical file and
// rewriting it is byte-identical.
//
// Loaders accept tables whose identity is not element 0 and re-index by
// swapping it to 0.

CayleyTable read_loop_file(const std::string& path);
void write_loop_file(const std::string& path, const CayleyTable& table);

Mapping read_map_file(const std::string& path);
void write_map_file(const std::string& path, const Mapping& map);

struct LoadedSubset {
  int order = 0;  // declared parent order
  std::vector<int> members;
};

LoadedSubset read_subset_file(const std::string& path);
void write_subset_file(const std::string& path, int order,
                       const std::vector<int>& members);

// JSON mirrors ({"order":n,"table":[[...]],"name":...} etc.); selected by a
// .json extension in the generic readers/writers above.
std::string loop_to_json(const CayleyTable& table);
CayleyTable loop_from_json(const std::string& text);

// Descriptor for extensions kept lazy: {"kind":"semidirect","base":path,
// "h":h,"action":path}. Referenced paths resolve relative to the
// descriptor's directory.
void write_extension_descriptor(const std::string& path,
                                const std::string& base_path, int h,
                                const std::string& action_path);

ExtensionSpec load_extension_descriptor(const std::string& path);

// Either a dense table or a lazy extension, depending on the file.
struct LoadedLoop {
  std::optional<CayleyTable> table;
  std::optional<ExtensionSpec> spec;
};

LoadedLoop load_loop_any(const std::string& path);

}  // namespace loopforge
