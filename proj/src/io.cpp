#include "loopforge/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace loopforge {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::malformed, "cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::malformed, "cannot write " + path);
  out << text;
}

std::string strip_comments(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  bool comment = false;
  for (char c : text) {
    if (c == '#') comment = true;
    if (c == '\n') comment = false;
    out.push_back(comment ? ' ' : c);
  }
  return out;
}

std::vector<long long> tokenize(const std::string& path, const std::string& raw) {
  std::istringstream in(strip_comments(raw));
  std::vector<long long> tokens;
  std::string word;
  while (in >> word) {
    try {
      std::size_t used = 0;
      tokens.push_back(std::stoll(word, &used));
      if (used != word.size()) throw std::invalid_argument(word);
    } catch (...) {
      fail(errc::malformed, path + ": non-integer token '" + word + "'");
    }
  }
  return tokens;
}

bool has_extension(const std::string& path, const char* ext) {
  return std::filesystem::path(path).extension() == ext;
}

// Re-indexes so the two-sided identity sits at 0, as the loaders promise.
CayleyTable canonicalize_identity(int n, std::vector<int> flat,
                                  const std::string& context) {
  int e = -1;
  for (int cand = 0; cand < n && e < 0; ++cand) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = flat[static_cast<std::size_t>(cand) * n + x] == x &&
           flat[static_cast<std::size_t>(x) * n + cand] == x;
    if (ok) e = cand;
  }
  if (e < 0) fail(errc::no_identity, context + ": no two-sided identity");
  if (e == 0) return CayleyTable(n, std::move(flat));
  // Swap labels 0 and e before construction; the constructor demands the
  // identity at index 0.
  const auto swap0e = [e](int i) { return i == 0 ? e : i == e ? 0 : i; };
  std::vector<int> relabeled(flat.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      relabeled[static_cast<std::size_t>(x) * n + y] = swap0e(
          flat[static_cast<std::size_t>(swap0e(x)) * n + swap0e(y)]);
  return CayleyTable(n, std::move(relabeled));
}

CayleyTable loop_from_tokens(const std::string& path,
                             const std::vector<long long>& tokens) {
  if (tokens.empty()) fail(errc::malformed, path + ": empty loop file");
  const long long n = tokens[0];
  if (n < 1 || n > 4096) fail(errc::malformed, path + ": bad order");
  if (tokens.size() != static_cast<std::size_t>(n) * n + 1)
    fail(errc::malformed, path + ": expected " + std::to_string(n * n) +
                              " entries, found " +
                              std::to_string(tokens.size() - 1));
  std::vector<int> flat(tokens.size() - 1);
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (tokens[i + 1] < 0 || tokens[i + 1] >= n)
      fail(errc::malformed, path + ": entry out of range");
    flat[i] = static_cast<int>(tokens[i + 1]);
  }
  return canonicalize_identity(static_cast<int>(n), std::move(flat), path);
}

}  // namespace

CayleyTable read_loop_file(const std::string& path) {
  if (has_extension(path, ".json")) return loop_from_json(slurp(path));
  return loop_from_tokens(path, tokenize(path, slurp(path)));
}

void write_loop_file(const std::string& path, const CayleyTable& table) {
  if (has_extension(path, ".json")) {
    spit(path, loop_to_json(table));
    return;
  }
  std::ostringstream out;
  const int n = table.order();
  out << n << "\n";
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) out << (y ? " " : "") << table.mul(x, y);
    out << "\n";
  }
  spit(path, out.str());
}

Mapping read_map_file(const std::string& path) {
  if (has_extension(path, ".json")) {
    const auto j = nlohmann::json::parse(slurp(path), nullptr, false);
    if (j.is_discarded() || !j.contains("images"))
      fail(errc::malformed, path + ": bad map json");
    return make_mapping(j["images"].get<std::vector<int>>());
  }
  const auto tokens = tokenize(path, slurp(path));
  if (tokens.empty()) fail(errc::malformed, path + ": empty map file");
  const long long n = tokens[0];
  if (n < 1 || tokens.size() != static_cast<std::size_t>(n) + 1)
    fail(errc::malformed, path + ": expected " + std::to_string(n) + " images");
  std::vector<int> images(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = static_cast<int>(tokens[i + 1]);
  return make_mapping(std::move(images));
}

void write_map_file(const std::string& path, const Mapping& map) {
  if (has_extension(path, ".json")) {
    nlohmann::json j;
    j["order"] = map.degree();
    j["images"] = map.images;
    spit(path, j.dump(2) + "\n");
    return;
  }
  std::ostringstream out;
  out << map.degree() << "\n";
  for (int i = 0; i < map.degree(); ++i) out << (i ? " " : "") << map.images[i];
  out << "\n";
  spit(path, out.str());
}

LoadedSubset read_subset_file(const std::string& path) {
  const auto tokens = tokenize(path, slurp(path));
  if (tokens.empty()) fail(errc::malformed, path + ": empty subset file");
  LoadedSubset out;
  out.order = static_cast<int>(tokens[0]);
  if (out.order < 1) fail(errc::malformed, path + ": bad parent order");
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    if (tokens[i] < 0 || tokens[i] >= out.order)
      fail(errc::malformed, path + ": member out of range");
    out.members.push_back(static_cast<int>(tokens[i]));
  }
  return out;
}

void write_subset_file(const std::string& path, int order,
                       const std::vector<int>& members) {
  std::ostringstream out;
  out << order << "\n";
  for (std::size_t i = 0; i < members.size(); ++i)
    out << (i ? " " : "") << members[i];
  out << "\n";
  spit(path, out.str());
}

std::string loop_to_json(const CayleyTable& table) {
  nlohmann::json j;
  j["order"] = table.order();
  auto rows = nlohmann::json::array();
  for (int x = 0; x < table.order(); ++x) {
    auto row = nlohmann::json::array();
    for (int y = 0; y < table.order(); ++y) row.push_back(table.mul(x, y));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  if (!table.name().empty()) j["name"] = table.name();
  return j.dump(2) + "\n";
}

CayleyTable loop_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.contains("table"))
    fail(errc::malformed, "bad loop json");
  const auto& rows = j["table"];
  const int n = static_cast<int>(rows.size());
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      fail(errc::malformed, "loop json is not square");
    for (const auto& v : row) {
      if (!v.is_number_integer()) fail(errc::malformed, "loop json entry type");
      flat.push_back(v.get<int>());
    }
  }
  for (int v : flat)
    if (v < 0 || v >= n) fail(errc::malformed, "loop json entry out of range");
  CayleyTable table = canonicalize_identity(n, std::move(flat), "loop json");
  if (j.contains("name") && j["name"].is_string())
    table = table.with_name(j["name"].get<std::string>());
  return table;
}

void write_extension_descriptor(const std::string& path,
                                const std::string& base_path, int h,
                                const std::string& action_path) {
  nlohmann::json j;
  j["kind"] = "semidirect";
  j["base"] = base_path;
  j["h"] = h;
  j["action"] = action_path;
  spit(path, j.dump(2) + "\n");
}

ExtensionSpec load_extension_descriptor(const std::string& path) {
  const auto j = nlohmann::json::parse(slurp(path), nullptr, false);
  if (j.is_discarded() || j.value("kind", "") != "semidirect")
    fail(errc::malformed, path + ": not an extension descriptor");
  const auto resolve = [&](const std::string& ref) {
    std::filesystem::path p(ref);
    if (p.is_absolute()) return ref;
    return (std::filesystem::path(path).parent_path() / p).string();
  };
  const CayleyTable base = read_loop_file(resolve(j.at("base").get<std::string>()));
  const Mapping action = read_map_file(resolve(j.at("action").get<std::string>()));
  return ExtensionSpec(base, j.at("h").get<int>(), action);
}

LoadedLoop load_loop_any(const std::string& path) {
  LoadedLoop out;
  if (has_extension(path, ".json")) {
    const auto j = nlohmann::json::parse(slurp(path), nullptr, false);
    if (!j.is_discarded() && j.value("kind", "") == "semidirect") {
      out.spec = load_extension_descriptor(path);
      return out;
    }
  }
  out.table = read_loop_file(path);
  return out;
}

}  // namespace loopforge
