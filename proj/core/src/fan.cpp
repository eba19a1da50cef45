#include "toric/fan.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "toric/errors.hpp"
#include "toric/lattice.hpp"

namespace toric {

std::vector<RayMask> Fan::cone_masks() const {
  std::vector<RayMask> out;
  out.reserve(max_cones.size());
  for (const auto& cone : max_cones) {
    RayMask m = 0;
    for (auto i : cone) m |= RayMask{1} << i;
    out.push_back(m);
  }
  return out;
}

namespace {

// Source line numbers for diagnostics; empty when built programmatically.
struct LineInfo {
  std::vector<std::size_t> ray_lines;
  std::vector<std::size_t> cone_lines;
  std::size_t cone_header = 0;

  std::size_t ray(std::size_t i) const { return i < ray_lines.size() ? ray_lines[i] : 0; }
  std::size_t cone(std::size_t i) const { return i < cone_lines.size() ? cone_lines[i] : 0; }
};

Fan build_fan(std::size_t dim, std::vector<IntVector> rays,
              std::vector<std::vector<std::size_t>> cones, std::string name,
              const LineInfo& lines) {
  if (dim == 0) throw ValidationError(0, "ambient dimension must be positive");
  if (rays.empty()) throw ValidationError(0, "fan has no rays");
  if (rays.size() > kMaxRays)
    throw ValidationError(0, "at most " + std::to_string(kMaxRays) + " rays are supported");

  std::map<IntVector, std::size_t> seen;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const auto& v = rays[i];
    if (v.size() != dim)
      throw ValidationError(lines.ray(i), "ray " + std::to_string(i) + " has " +
                                              std::to_string(v.size()) + " coordinates, expected " +
                                              std::to_string(dim));
    const auto g = content(v);
    if (g == 0) throw ValidationError(lines.ray(i), "zero ray " + std::to_string(i));
    if (g != 1)
      throw ValidationError(lines.ray(i), "non-primitive ray " + std::to_string(i) + " " + format_vector(v));
    auto [it, inserted] = seen.emplace(v, i);
    if (!inserted)
      throw ValidationError(lines.ray(i), "duplicate ray " + std::to_string(i) + " (same as ray " +
                                              std::to_string(it->second) + ")");
  }

  if (cones.empty()) throw ValidationError(lines.cone_header, "empty cone list");
  std::vector<bool> used(rays.size(), false);
  for (std::size_t c = 0; c < cones.size(); ++c) {
    auto& cone = cones[c];
    if (cone.empty()) throw ValidationError(lines.cone(c), "cone " + std::to_string(c) + " is empty");
    for (auto i : cone) {
      if (i >= rays.size())
        throw ValidationError(lines.cone(c), "cone " + std::to_string(c) + " refers to missing ray " +
                                                 std::to_string(i));
      used[i] = true;
    }
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
      throw ValidationError(lines.cone(c), "cone " + std::to_string(c) + " repeats a ray index");
  }
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (!used[i]) throw ValidationError(lines.ray(i), "ray " + std::to_string(i) + " is in no maximal cone");

  for (std::size_t a = 0; a < cones.size(); ++a)
    for (std::size_t b = 0; b < cones.size(); ++b) {
      if (a == b) continue;
      if (std::includes(cones[b].begin(), cones[b].end(), cones[a].begin(), cones[a].end()))
        throw ValidationError(lines.cone(a), "cone " + std::to_string(a) + " is contained in cone " +
                                                 std::to_string(b));
    }

  return Fan{std::move(name), dim, std::move(rays), std::move(cones)};
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

template <class T>
std::vector<T> parse_numbers(std::string_view s, std::size_t line) {
  std::vector<T> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    if (pos >= s.size()) break;
    std::size_t end = pos;
    while (end < s.size() && s[end] != ' ' && s[end] != '\t') ++end;
    T value{};
    auto token = s.substr(pos, end - pos);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError(line, "expected an integer, found '" + std::string(token) + "'");
    out.push_back(value);
    pos = end;
  }
  return out;
}

}  // namespace

Fan make_fan(std::size_t dim, std::vector<IntVector> rays,
             std::vector<std::vector<std::size_t>> max_cones, std::string name) {
  return build_fan(dim, std::move(rays), std::move(max_cones), std::move(name), {});
}

Fan parse_fan(std::string_view text) {
  enum class Section { Header, Rays, Cones };
  Section section = Section::Header;
  std::optional<std::string> name;
  std::optional<std::size_t> dim;
  bool saw_rays = false;
  bool saw_cones = false;
  std::vector<IntVector> rays;
  std::vector<std::vector<std::size_t>> cones;
  LineInfo lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    auto hash = raw.find('#');
    std::string_view line = trim(hash == std::string_view::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;

    auto colon = line.find(':');
    if (colon != std::string_view::npos) {
      std::string_view key = trim(line.substr(0, colon));
      std::string_view value = trim(line.substr(colon + 1));
      if (key == "name") {
        if (section != Section::Header || name || dim)
          throw ParseError(line_no, "'name:' must be the first entry");
        name = std::string(value);
      } else if (key == "dim") {
        if (section != Section::Header || dim) throw ParseError(line_no, "unexpected 'dim:'");
        auto v = parse_numbers<std::size_t>(value, line_no);
        if (v.size() != 1) throw ParseError(line_no, "'dim:' takes exactly one integer");
        dim = v[0];
      } else if (key == "rays") {
        if (!dim) throw ParseError(line_no, "'rays:' before 'dim:'");
        if (saw_rays) throw ParseError(line_no, "duplicate 'rays:' section");
        if (!value.empty()) throw ParseError(line_no, "'rays:' must be followed by a line break");
        saw_rays = true;
        section = Section::Rays;
      } else if (key == "max_cones") {
        if (!saw_rays) throw ParseError(line_no, "'max_cones:' before 'rays:'");
        if (saw_cones) throw ParseError(line_no, "duplicate 'max_cones:' section");
        if (!value.empty()) throw ParseError(line_no, "'max_cones:' must be followed by a line break");
        saw_cones = true;
        lines.cone_header = line_no;
        section = Section::Cones;
      } else {
        throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
      }
      continue;
    }

    switch (section) {
      case Section::Header:
        throw ParseError(line_no, "unexpected data outside a section");
      case Section::Rays:
        rays.push_back(parse_numbers<std::int64_t>(line, line_no));
        lines.ray_lines.push_back(line_no);
        break;
      case Section::Cones:
        cones.push_back(parse_numbers<std::size_t>(line, line_no));
        lines.cone_lines.push_back(line_no);
        break;
    }
  }

  if (!dim) throw ParseError(0, "missing 'dim:'");
  if (!saw_rays) throw ParseError(0, "missing 'rays:' section");
  if (!saw_cones) throw ParseError(0, "missing 'max_cones:' section");
  return build_fan(*dim, std::move(rays), std::move(cones), name.value_or(""), lines);
}

Fan load_fan(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot read fan file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_fan(ss.str());
}

std::string serialize_fan(const Fan& fan) {
  std::ostringstream os;
  if (!fan.name.empty()) os << "name: " << fan.name << '\n';
  os << "dim: " << fan.dim << '\n';
  os << "rays:\n";
  for (const auto& ray : fan.rays) {
    for (std::size_t j = 0; j < ray.size(); ++j) os << (j ? " " : "") << ray[j];
    os << '\n';
  }
  os << "max_cones:\n";
  for (const auto& cone : fan.max_cones) {
    for (std::size_t j = 0; j < cone.size(); ++j) os << (j ? " " : "") << cone[j];
    os << '\n';
  }
  return os.str();
}

namespace {

IntMatrix cone_matrix(const Fan& fan, const std::vector<std::size_t>& cone) {
  std::vector<IntVector> rows;
  for (auto i : cone) rows.push_back(fan.rays[i]);
  return IntMatrix::from_rows(rows, fan.dim);
}

// Coefficients of `target` in the basis given by the rays of a full cone.
std::optional<RationalVector> cone_coordinates(const Fan& fan,
                                               const std::vector<std::size_t>& cone,
                                               const RationalVector& target) {
  return solve_rational(cone_matrix(fan, cone).transpose(), target);
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Combinatorial completeness test for a simplicial fan.
std::string completeness_failure(const Fan& fan) {
  const std::size_t n = fan.dim;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c)
    if (fan.max_cones[c].size() != n)
      return "fan not complete: cone " + std::to_string(c) + " is not full-dimensional";

  // facet (sorted ray indices) -> cones containing it
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> facets;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& cone = fan.max_cones[c];
    for (std::size_t drop = 0; drop < cone.size(); ++drop) {
      std::vector<std::size_t> f;
      for (std::size_t k = 0; k < cone.size(); ++k)
        if (k != drop) f.push_back(cone[k]);
      facets[f].push_back(c);
    }
  }

  std::vector<std::size_t> parent(fan.max_cones.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [facet, owners] : facets) {
    if (owners.size() != 2)
      return "fan not complete: a facet lies in " + std::to_string(owners.size()) + " maximal cone(s)";
    // The two cones must sit on opposite sides of the shared facet.
    const auto& a = fan.max_cones[owners[0]];
    const auto& b = fan.max_cones[owners[1]];
    std::size_t apex_a = 0, apex_b = 0;
    for (auto i : a)
      if (!std::binary_search(facet.begin(), facet.end(), i)) apex_a = i;
    for (auto i : b)
      if (!std::binary_search(facet.begin(), facet.end(), i)) apex_b = i;
    auto coords = cone_coordinates(fan, a, to_rational(fan.rays[apex_b]));
    if (!coords) return "fan not complete: degenerate cone";
    const auto pos = static_cast<std::size_t>(std::find(a.begin(), a.end(), apex_a) - a.begin());
    if ((*coords)[pos] >= 0) return "fan not complete: adjacent cones overlap";
    parent[find_root(parent, owners[0])] = find_root(parent, owners[1]);
  }
  for (std::size_t c = 0; c < parent.size(); ++c)
    if (find_root(parent, c) != find_root(parent, 0)) return "fan not complete: cones are not facet-connected";

  // A connected closed pseudomanifold can still wrap around more than once;
  // an interior point of the first cone must lie in no other cone.
  RationalVector probe(n, 0);
  for (auto i : fan.max_cones[0])
    for (std::size_t j = 0; j < n; ++j) probe[j] += fan.rays[i][j];
  for (std::size_t c = 1; c < fan.max_cones.size(); ++c) {
    auto coords = cone_coordinates(fan, fan.max_cones[c], probe);
    if (coords && std::all_of(coords->begin(), coords->end(), [](const Rational& x) { return x >= 0; }))
      return "fan not complete: cones cover the space more than once";
  }
  return {};
}

}  // namespace

FanProperties validate(const Fan& fan) {
  FanProperties p;
  p.dim = fan.dim;
  p.is_simplicial = true;
  p.is_smooth = true;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    IntMatrix m = cone_matrix(fan, fan.max_cones[c]);
    if (matrix_rank(m) != fan.max_cones[c].size()) {
      p.is_simplicial = false;
      p.is_smooth = false;
      if (p.diagnostic.empty()) p.diagnostic = "fan not simplicial: cone " + std::to_string(c);
      break;
    }
    if (!is_unimodular_row_set(m)) {
      p.is_smooth = false;
      if (p.diagnostic.empty()) p.diagnostic = "fan not smooth: cone " + std::to_string(c);
    }
  }
  if (p.is_simplicial) {
    std::string failure = completeness_failure(fan);
    p.is_complete = failure.empty();
    if (!p.is_complete && p.diagnostic.empty()) p.diagnostic = failure;
  } else {
    // Not decided for non-simplicial fans; they are refused downstream anyway.
    p.is_complete = false;
  }
  return p;
}

void require_smooth_complete(const Fan& fan) {
  FanProperties p = validate(fan);
  auto message = [&](const std::string& verdict) {
    return p.diagnostic.starts_with(verdict) ? p.diagnostic : verdict + " (" + p.diagnostic + ")";
  };
  if (!p.is_smooth) throw FanNotSmoothComplete(message("fan not smooth"));
  if (!p.is_complete) throw FanNotSmoothComplete(message("fan not complete"));
}

bool SimplicialComplex::contains(RayMask face) const {
  return std::binary_search(faces.begin(), faces.end(), face);
}

bool SimplicialComplex::is_downward_closed() const {
  for (RayMask f : faces) {
    if ((f & ~vertices) != 0) return false;
    for (RayMask s = f;; s = (s - 1) & f) {
      if (!contains(s)) return false;
      if (s == 0) break;
    }
  }
  return true;
}

std::size_t SimplicialComplex::face_count_of_size(std::size_t size) const {
  return static_cast<std::size_t>(std::count_if(faces.begin(), faces.end(), [&](RayMask f) {
    return static_cast<std::size_t>(std::popcount(f)) == size;
  }));
}

SimplicialComplex boundary_divisor_complex(const Fan& fan, RayMask subset) {
  SimplicialComplex k;
  k.vertices = subset & fan.all_rays();
  std::set<RayMask> faces{0};
  for (RayMask cone : fan.cone_masks()) {
    const RayMask m = cone & k.vertices;
    for (RayMask s = m;; s = (s - 1) & m) {
      faces.insert(s);
      if (s == 0) break;
    }
  }
  k.faces.assign(faces.begin(), faces.end());
  return k;
}

std::string format_mask(RayMask mask, std::size_t ray_count) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < ray_count; ++i)
    if (mask >> i & 1u) {
      out += (first ? "" : ",") + std::to_string(i);
      first = false;
    }
  return out + "}";
}

}  // namespace toric
