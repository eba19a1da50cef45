#include "toric/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "toric/borisov_hua.hpp"
#include "toric/class_map.hpp"
#include "toric/cohomology.hpp"
#include "toric/errors.hpp"
#include "toric/fan.hpp"
#include "toric/frobenius.hpp"
#include "toric/series.hpp"

namespace toric::cli {

namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A failed verification whose report has already been written.
class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::map<std::string, Command>& command_table() {
  static const std::map<std::string, Command> table{
      {"validate", Command::Validate},     {"classes", Command::Classes},
      {"decompose", Command::Decompose},   {"verify-identity", Command::VerifyIdentity},
      {"cohomology", Command::Cohomology}, {"regions", Command::Regions},
      {"hk", Command::Hk},                 {"selftest", Command::Selftest},
  };
  return table;
}

json strings(const IntVector& v) {
  json a = json::array();
  for (auto x : v) a.push_back(std::to_string(x));
  return a;
}

json class_json(const ClassLattice& lat, const PicClass& c) {
  return {{"class", strings(c.coordinates)}, {"divisor", strings(lat.representative(c).coefficients)}};
}

json mask_json(RayMask s, std::size_t r) {
  json a = json::array();
  for (std::size_t i = 0; i < r; ++i)
    if (s >> i & 1u) a.push_back(std::to_string(i));
  return a;
}

void emit(std::ostream& out, json body) {
  body["schema"] = kSchema;
  out << body.dump(2) << '\n';
}

Fan load(const RunConfig& config) {
  if (config.fan_path && config.catalog_name) throw UsageError("give either a fan file or --catalog, not both");
  if (config.fan_path) return load_fan(*config.fan_path);
  if (config.catalog_name) {
    try {
      return catalog_entry(*config.catalog_name).fan;
    } catch (const std::out_of_range&) {
      throw UsageError("unknown catalog fan '" + *config.catalog_name + "'");
    }
  }
  throw UsageError("no fan given");
}

struct Source {
  PicClass cls;
  TDivisor divisor;
};

Source source(const RunConfig& config, const ClassLattice& lat) {
  if (config.pic_class && config.divisor) throw UsageError("give either --class or --divisor, not both");
  if (config.pic_class) {
    PicClass c{*config.pic_class};
    if (c.size() != lat.rank())
      throw UsageError("--class needs " + std::to_string(lat.rank()) + " coordinates");
    return {c, lat.representative(c)};
  }
  if (config.divisor) {
    TDivisor d{*config.divisor};
    if (d.size() != lat.ray_count())
      throw UsageError("--divisor needs " + std::to_string(lat.ray_count()) + " coefficients");
    return {lat.divisor_class(d), d};
  }
  throw UsageError("this command needs --class or --divisor");
}

std::uint64_t require_ell(const RunConfig& config) {
  if (!config.ell) throw UsageError("this command needs --ell");
  if (*config.ell < 2) throw UsageError("--ell must be at least 2");
  return *config.ell;
}

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Fan fan = load(config);
  const FanProperties p = validate(fan);
  const bool ok = p.is_smooth && p.is_complete;
  std::string verdict;
  if (!p.is_smooth) verdict = "fan not smooth";
  else if (!p.is_complete) verdict = "fan not complete";
  if (config.format == Format::Json) {
    emit(out, {{"command", "validate"},
               {"name", fan.name},
               {"dim", std::to_string(fan.dim)},
               {"rays", std::to_string(fan.ray_count())},
               {"max_cones", std::to_string(fan.max_cones.size())},
               {"simplicial", p.is_simplicial},
               {"smooth", p.is_smooth},
               {"complete", p.is_complete},
               {"diagnostic", p.diagnostic}});
  } else {
    out << "fan " << (fan.name.empty() ? "(unnamed)" : fan.name) << ": dim " << fan.dim << ", "
        << fan.ray_count() << " rays, " << fan.max_cones.size() << " maximal cones\n"
        << "simplicial=" << (p.is_simplicial ? "yes" : "no") << " smooth=" << (p.is_smooth ? "yes" : "no")
        << " complete=" << (p.is_complete ? "yes" : "no") << '\n';
  }
  if (!ok) {
    err << (p.diagnostic.empty() ? verdict : p.diagnostic) << '\n';
    return kRefused;
  }
  return kOk;
}

int cmd_classes(const RunConfig& config, std::ostream& out) {
  const ClassLattice lat(load(config));
  const GradingFunctional theta = grading_functional(lat);
  if (config.format == Format::Json) {
    json rays = json::array();
    for (std::size_t i = 0; i < lat.ray_count(); ++i)
      rays.push_back({{"ray", strings(lat.fan().rays[i])}, {"class", strings(lat.ray_classes()[i].coordinates)}});
    json lift = json::array();
    for (std::size_t j = 0; j < lat.rank(); ++j) {
      IntVector e(lat.rank(), 0);
      e[j] = 1;
      lift.push_back(strings(lat.representative(PicClass{e}).coefficients));
    }
    emit(out, {{"command", "classes"},
               {"rank", std::to_string(lat.rank())},
               {"rays", rays},
               {"basis_divisors", lift},
               {"grading", strings(theta.weights)}});
    return kOk;
  }
  out << "Pic rank " << lat.rank() << '\n';
  for (std::size_t i = 0; i < lat.ray_count(); ++i)
    out << "ray " << i << ' ' << format_vector(lat.fan().rays[i]) << " -> class "
        << to_string(lat.ray_classes()[i]) << '\n';
  for (std::size_t j = 0; j < lat.rank(); ++j) {
    IntVector e(lat.rank(), 0);
    e[j] = 1;
    out << "basis " << j << " = divisor " << to_string(lat.representative(PicClass{e})) << '\n';
  }
  out << "grading " << format_vector(theta.weights) << '\n';
  return kOk;
}

int cmd_decompose(const RunConfig& config, std::ostream& out) {
  const ClassLattice lat(load(config));
  const std::uint64_t ell = require_ell(config);
  if (config.power < 1) throw UsageError("--power must be at least 1");
  const Source src = source(config, lat);
  const FrobeniusOptions options{config.budget, config.threads};
  const Decomposition d = config.power == 1 ? decompose(lat, src.cls, ell, options)
                                            : iterated_decompose(lat, src.cls, ell, config.power, options);
  // Largest class first.
  std::vector<std::pair<PicClass, std::uint64_t>> summands(d.summands.rbegin(), d.summands.rend());

  if (config.format == Format::Json) {
    json list = json::array();
    for (const auto& [c, m] : summands) {
      json e = class_json(lat, c);
      e["multiplicity"] = std::to_string(m);
      list.push_back(e);
    }
    emit(out, {{"command", "decompose"},
               {"ell", std::to_string(d.ell)},
               {"source", class_json(lat, src.cls)},
               {"summands", list},
               {"rank", std::to_string(d.total_multiplicity())}});
    return kOk;
  }
  for (std::size_t i = 0; i < summands.size(); ++i)
    out << (i ? ", " : "") << to_string(summands[i].first) << ':' << summands[i].second;
  out << '\n';
  out << "ell " << d.ell << ", source " << to_string(src.cls) << " = divisor " << to_string(src.divisor) << ", rank "
      << d.total_multiplicity() << '\n';
  for (const auto& [c, m] : summands)
    out << "  " << to_string(c) << " = divisor " << to_string(lat.representative(c)) << " x" << m << '\n';
  return kOk;
}

int cmd_verify_identity(const RunConfig& config, std::ostream& out) {
  const ClassLattice lat(load(config));
  const std::uint64_t ell = require_ell(config);
  const GradingFunctional theta = grading_functional(lat);
  const IdentityReport report = verify_identity(lat, theta, ell, config.bound);
  if (config.format == Format::Json) {
    json rows = json::array();
    for (const auto& row : report.rows)
      rows.push_back({{"class", strings(row.cls.coordinates)}, {"lhs", row.lhs.get_str()}, {"rhs", row.rhs.get_str()}});
    json body{{"command", "verify-identity"},
              {"ell", std::to_string(report.ell)},
              {"bound", std::to_string(report.bound)},
              {"grading", strings(theta.weights)},
              {"passed", report.passed},
              {"rows", rows}};
    if (report.first_failure) body["first_failure"] = strings(report.first_failure->coordinates);
    emit(out, body);
  } else {
    out << "identity ell=" << report.ell << " bound=" << report.bound << " grading " << format_vector(theta.weights)
        << ": " << (report.passed ? "pass" : "FAIL") << " (" << report.rows.size() << " coefficients)\n";
    if (report.first_failure) {
      out << "first failure at " << to_string(*report.first_failure) << "\nclass lhs rhs\n";
      for (const auto& row : report.rows)
        if (row.lhs != row.rhs) out << to_string(row.cls) << ' ' << row.lhs.get_str() << ' ' << row.rhs.get_str() << '\n';
    }
  }
  if (!report.passed) throw CheckFailed("generating identity failed");
  return kOk;
}

int cmd_cohomology(const RunConfig& config, std::ostream& out) {
  const ClassLattice lat(load(config));
  const Source src = source(config, lat);
  const CohomologyTable t = CohomologyOracle(lat).table(src.divisor);
  if (config.format == Format::Json) {
    json dims = json::array();
    for (auto h : t.dims) dims.push_back(std::to_string(h));
    emit(out, {{"command", "cohomology"},
               {"class", strings(t.cls.coordinates)},
               {"divisor", strings(t.divisor.coefficients)},
               {"h", dims}});
    return kOk;
  }
  out << "h(" << to_string(t.cls) << ") = (";
  for (std::size_t k = 0; k < t.dims.size(); ++k) out << (k ? "," : "") << t.dims[k];
  out << ")\ndivisor " << to_string(t.divisor) << '\n';
  return kOk;
}

int cmd_regions(const RunConfig& config, std::ostream& out) {
  const ClassLattice lat(load(config));
  const CohomologyOracle oracle(lat);
  const KPolytope K = compute_K(lat);
  const BkSets bk = compute_Bk(oracle, K);
  const std::size_t r = lat.ray_count();

  if (config.format == Format::Json) {
    json vertices = json::array();
    for (RayMask s : K.vertices)
      vertices.push_back({{"subset", mask_json(s, r)}, {"class", strings(K.points[s].coordinates)}});
    json regions = json::array();
    for (std::size_t k = 0; k < bk.sets.size(); ++k) {
      json cones = json::array();
      for (const auto& e : bk.sets[k]) {
        const TranslatedCone c = translated_cone(K, e.subset, ConeGenerators::Extremal);
        json gens = json::array();
        for (const auto& g : c.generators) gens.push_back(strings(g));
        cones.push_back({{"subset", mask_json(e.subset, r)},
                         {"h", std::to_string(e.dimension)},
                         {"apex", strings(c.apex.coordinates)},
                         {"generators", gens}});
      }
      regions.push_back({{"k", std::to_string(k)}, {"cones", cones}});
    }
    emit(out, {{"command", "regions"}, {"vertices", vertices}, {"regions", regions}});
    return kOk;
  }
  out << "K vertices:\n";
  for (RayMask s : K.vertices) out << "  " << format_mask(s, r) << ' ' << to_string(K.points[s]) << '\n';
  for (std::size_t k = 0; k < bk.sets.size(); ++k) {
    out << "B_" << k << ':';
    for (const auto& e : bk.sets[k]) out << ' ' << format_mask(e.subset, r) << ":h=" << e.dimension;
    out << '\n';
    for (const auto& e : bk.sets[k]) {
      const TranslatedCone c = translated_cone(K, e.subset, ConeGenerators::Extremal);
      out << "  C" << format_mask(e.subset, r) << " = " << to_string(c.apex) << " + cone(";
      for (std::size_t g = 0; g < c.generators.size(); ++g) out << (g ? ", " : "") << format_vector(c.generators[g]);
      out << ")\n";
    }
  }
  return kOk;
}

int cmd_hk(const RunConfig& config, std::ostream& out) {
  const ClassLattice lat(load(config));
  if (!config.k) throw UsageError("hk needs --k");
  const std::size_t k = *config.k;
  const Source src = source(config, lat);
  const CohomologyOracle oracle(lat);
  const KPolytope K = compute_K(lat);
  const BkSets bk = compute_Bk(oracle, K);
  const std::uint64_t h = oracle.hk(src.divisor, k);
  const MultiplicityResult mu = hk_via_multiplicities(lat, K, bk, src.cls, k, {config.max_ell});
  const bool agree = h == mu.value;
  const bool region = region_membership(K, bk, src.cls, k);
  if (config.format == Format::Json) {
    emit(out, {{"command", "hk"},
               {"k", std::to_string(k)},
               {"source", class_json(lat, src.cls)},
               {"oracle", std::to_string(h)},
               {"multiplicities", std::to_string(mu.value)},
               {"ell", std::to_string(mu.ell)},
               {"in_region", region},
               {"agree", agree}});
  } else {
    out << "oracle=" << h << " multiplicities=" << mu.value << " agree=" << (agree ? "true" : "false") << '\n';
    out << "class " << to_string(src.cls) << " divisor " << to_string(src.divisor) << " k=" << k
        << " in_region=" << (region ? "true" : "false");
    if (mu.ell) out << " stabilized_at_ell=" << mu.ell;
    out << '\n';
  }
  if (!agree) throw CheckFailed("oracle and multiplicity method disagree");
  return kOk;
}

int cmd_selftest(const RunConfig& config, std::ostream& out) {
  SelftestOptions options;
  options.threads = config.threads;
  const SelftestReport report = selftest(builtin_catalog(), options);
  if (config.format == Format::Json) {
    json rows = json::array();
    for (const auto& r : report.results)
      rows.push_back({{"fan", r.fan}, {"property", r.property}, {"passed", r.passed}, {"detail", r.detail}});
    emit(out, {{"command", "selftest"}, {"results", rows}, {"passed", report.passed()}});
  } else {
    for (const auto& r : report.results)
      out << r.fan << ' ' << r.property << ' ' << (r.passed ? "PASS" : "FAIL")
          << (r.detail.empty() ? "" : " (" + r.detail + ")") << '\n';
    out << (report.passed() ? "selftest passed" : "selftest FAILED") << '\n';
  }
  return report.passed() ? kOk : kCheckFailed;
}

// Iterates the integer box [-w, w]^size.
template <class Visit>
void for_each_grid_point(std::size_t size, std::int64_t w, Visit&& visit) {
  IntVector c(size, -w);
  for (;;) {
    visit(c);
    std::size_t j = 0;
    for (; j < size; ++j) {
      if (c[j] < w) {
        ++c[j];
        break;
      }
      c[j] = -w;
    }
    if (j == size) return;
  }
}

}  // namespace

Command parse_command(const std::string& name) {
  auto it = command_table().find(name);
  if (it == command_table().end()) throw std::invalid_argument("unknown command '" + name + "'");
  return it->second;
}

std::string command_name(Command c) {
  for (const auto& [name, value] : command_table())
    if (value == c) return name;
  return "?";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.threads < 1) throw UsageError("--threads must be at least 1");
    switch (config.command) {
      case Command::Validate: return cmd_validate(config, out, err);
      case Command::Classes: return cmd_classes(config, out);
      case Command::Decompose: return cmd_decompose(config, out);
      case Command::VerifyIdentity: return cmd_verify_identity(config, out);
      case Command::Cohomology: return cmd_cohomology(config, out);
      case Command::Regions: return cmd_regions(config, out);
      case Command::Hk: return cmd_hk(config, out);
      case Command::Selftest: return cmd_selftest(config, out);
    }
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const CheckFailed& e) {
    err << e.what() << '\n';
    return kCheckFailed;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const FanNotSmoothComplete& e) {
    err << e.what() << '\n';
    return kRefused;
  } catch (const EffectiveConeNotPointed& e) {
    err << e.what() << '\n';
    return kRefused;
  } catch (const DimensionMismatch& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const NonStabilized& e) {
    err << "not stabilized: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

bool SelftestReport::passed() const {
  return !results.empty() &&
         std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed; });
}

SelftestReport selftest(const std::vector<CatalogEntry>& catalog, const SelftestOptions& options) {
  if (catalog.empty()) throw std::invalid_argument("no fans");
  SelftestReport report;
  for (const auto& entry : catalog) {
    const std::string name = entry.fan.name;
    auto record = [&](const std::string& property, auto&& check) {
      PropertyResult r{name, property, false, {}};
      try {
        r.detail = check();
        r.passed = r.detail.empty();
      } catch (const std::exception& e) {
        r.detail = e.what();
      }
      report.results.push_back(std::move(r));
      return report.results.back().passed;
    };

    if (!record("load", [&]() -> std::string {
          require_smooth_complete(entry.fan);
          if (entry.fan.max_cones.size() != entry.euler_characteristic)
            return std::to_string(entry.fan.max_cones.size()) + " maximal cones, expected " +
                   std::to_string(entry.euler_characteristic);
          return {};
        }))
      continue;

    const ClassLattice lat(entry.fan);
    const std::size_t n = lat.dim();
    const std::size_t rho = lat.rank();

    record("round-trip", [&]() -> std::string {
      return parse_fan(serialize_fan(entry.fan)) == entry.fan ? "" : "parse(serialize(fan)) differs";
    });

    record("rank-law", [&]() -> std::string {
      std::vector<PicClass> sources{lat.zero_class()};
      for (const auto& w : lat.ray_classes()) sources.push_back(w);
      sources.push_back(lat.divisor_class(negated_boundary(lat.fan().all_rays(), lat.ray_count())));
      for (std::uint64_t ell : {2, 3}) {
        const ClassHistogram hist = cube_class_histogram(lat, ell, {100'000'000, options.threads});
        for (const auto& d : sources) {
          const Decomposition dec = decompose_from_histogram(lat, hist, d, ell);
          if (dec.total_multiplicity() != checked_pow(ell, n))
            return "rank " + std::to_string(dec.total_multiplicity()) + " at " + to_string(d);
        }
        if (decompose_from_histogram(lat, hist, lat.zero_class(), ell).multiplicity(lat.zero_class()) != 1)
          return "O_X is not a summand of multiplicity 1 of its push-forward";
      }
      return {};
    });

    record("identity", [&]() -> std::string {
      const GradingFunctional theta = grading_functional(lat);
      for (std::uint64_t ell : {2, 3}) {
        const IdentityReport rep = verify_identity(lat, theta, ell, options.identity_bound);
        if (!rep.passed) return "ell=" + std::to_string(ell) + " fails at " + to_string(*rep.first_failure);
      }
      return {};
    });

    const CohomologyOracle oracle(lat);
    const KPolytope K = compute_K(lat);
    const BkSets bk = compute_Bk(oracle, K);

    record("oracle-vs-region", [&]() -> std::string {
      std::string failure;
      for_each_grid_point(rho, options.grid, [&](const IntVector& c) {
        if (!failure.empty()) return;
        const PicClass d{c};
        const TDivisor a = lat.representative(d);
        for (std::size_t k = 0; k <= n; ++k)
          if (region_membership(K, bk, d, k) != (oracle.hk(a, k) != 0)) {
            failure = "class " + to_string(d) + " k=" + std::to_string(k);
            return;
          }
      });
      return failure;
    });

    record("oracle-vs-multiplicities", [&]() -> std::string {
      std::string failure;
      for_each_grid_point(rho, options.grid, [&](const IntVector& c) {
        if (!failure.empty()) return;
        const PicClass d{c};
        const TDivisor a = lat.representative(d);
        for (std::size_t k = 0; k <= n; ++k)
          if (hk_via_multiplicities(lat, K, bk, d, k).value != oracle.hk(a, k)) {
            failure = "class " + to_string(d) + " k=" + std::to_string(k);
            return;
          }
      });
      return failure;
    });

    record("serre-duality", [&]() -> std::string {
      std::string failure;
      const TDivisor canonical = negated_boundary(lat.fan().all_rays(), lat.ray_count());
      for_each_grid_point(lat.ray_count(), options.serre, [&](const IntVector& c) {
        if (!failure.empty()) return;
        const TDivisor a{c};
        const TDivisor dual = canonical + (-a);
        for (std::size_t k = 0; k <= n; ++k)
          if (oracle.hk(a, k) != oracle.hk(dual, n - k)) {
            failure = "divisor " + to_string(a) + " k=" + std::to_string(k);
            return;
          }
      });
      return failure;
    });
  }
  return report;
}

}  // namespace toric::cli
