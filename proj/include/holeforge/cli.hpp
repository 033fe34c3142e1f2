/**
 * Command-line front end. `run` is the whole program minus process setup so
 * tests can drive it with plain strings.
 *
 * Exit codes: 0 verified / true, 1 falsified / not a member / rejected,
 * 2 usage or resource error.
 */
#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "holeforge/certificates.hpp"
#include "holeforge/good_triples.hpp"
#include "holeforge/lattice_core.hpp"
#include "holeforge/lifting.hpp"
#include "holeforge/rect_simplex.hpp"
#include "holeforge/semigroup_oracle.hpp"

namespace holeforge::cli {

enum ExitCode : int { kOk = 0, kFalse = 1, kUsage = 2 };

enum class Format { Text, Json, Csv };

struct CliConfig {
  std::string subcommand;
  Format format = Format::Text;
  std::string output_path;  // empty: stdout
  SemigroupOracle::Limits limits;
  std::optional<BigInt> max_skew_height;
  unsigned threads = 1;
};

namespace detail {

using nlohmann::json;

inline std::vector<BigInt> integers(const std::vector<std::string>& words, const char* what) {
  std::vector<BigInt> out;
  for (const auto& w : words) {
    auto v = parse_integer(w);
    if (!v) throw ArgumentError(std::string(what) + ": '" + w + "' is not an integer");
    out.push_back(*v);
  }
  return out;
}

inline json ints(const std::vector<BigInt>& v) { return cert_json::ints(v); }

inline std::string joined(const std::vector<BigInt>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].str();
  return s + ")";
}

inline std::string form_str(const LinearForm& f) { return joined(f.coeffs()); }

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ResourceError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

}  // namespace detail

inline int cmd_simplex(const CliConfig& cfg, const std::vector<BigInt>& lambdas, std::ostream& out) {
  const RectSimplex s(lambdas);
  const auto gens = degree_one_generators(s, cfg.limits.max_generators);
  if (cfg.format == Format::Json) {
    nlohmann::json j;
    j["lambdas"] = detail::ints(lambdas);
    j["lcm"] = s.lcm().str();
    j["vertices"] = cert_json::points(s.vertices());
    nlohmann::json forms = nlohmann::json::object();
    for (auto f : s.facets()) forms[f.name()] = detail::ints(s.form(f).coeffs());
    j["facet_forms"] = forms;
    j["generator_count"] = std::to_string(gens.size());
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "lambda = " << detail::joined(lambdas) << "\n";
  out << "L = " << s.lcm() << "\n";
  for (std::size_t i = 0; i < s.vertices().size(); ++i) out << "v_" << i << " = " << s.vertex(i) << "\n";
  for (auto f : s.facets()) out << "sigma(" << f.name() << ") = " << detail::form_str(s.form(f)) << "\n";
  out << "degree-1 generators: " << gens.size() << "\n";
  return kOk;
}

inline int cmd_member(const CliConfig& cfg, const std::vector<BigInt>& lambdas, const LatticePoint& z,
                      std::ostream& out) {
  const RectSimplex s(lambdas);
  s.check_point(z);
  const bool saturated = in_saturation(s, z);
  std::optional<MembershipWitness> w;
  if (saturated) {
    SemigroupOracle oracle(s, cfg.limits);
    w = oracle.member(z);
  }
  if (cfg.format == Format::Json) {
    nlohmann::json j;
    j["lambdas"] = detail::ints(lambdas);
    j["point"] = cert_json::point(z);
    j["in_saturation"] = saturated;
    j["member"] = w.has_value();
    j["hole"] = saturated && !w;
    j["witness"] = w ? cert_json::points(w->summands) : nlohmann::json(nullptr);
    out << j.dump(2) << "\n";
  } else if (w) {
    out << "in Q(lambda); witness:";
    if (w->summands.empty()) out << " (empty sum)";
    for (std::size_t k = 0; k < w->summands.size(); ++k) out << (k ? " + " : " ") << w->summands[k];
    out << "\n";
  } else if (saturated) {
    out << "not in Q(lambda); in saturation; hole\n";
  } else {
    out << "not in Q(lambda); not in saturation\n";
  }
  return w ? kOk : kFalse;
}

inline int cmd_holes(const CliConfig& cfg, const std::vector<BigInt>& lambdas, std::ostream& out) {
  const RectSimplex s(lambdas);
  const BigInt bound = cfg.max_skew_height.value_or(s.lcm());
  const auto result = enumerate_holes(s, bound, cfg.threads, cfg.limits);
  const std::size_t n = s.dimension();
  if (cfg.format == Format::Csv) {
    for (std::size_t i = 1; i <= n; ++i) out << "z" << i << ",";
    out << "degree,skew_height";
    for (std::size_t i = 1; i <= n; ++i) out << ",height_F" << i;
    out << "\n";
    for (const auto& h : result.holes) {
      for (std::size_t i = 1; i <= n; ++i) out << h.point.coord(i) << ",";
      out << h.point.degree() << "," << h.skew_height();
      for (std::size_t i = 1; i <= n; ++i) out << "," << h.heights.at(FacetId::coordinate(i));
      out << "\n";
    }
  } else if (cfg.format == Format::Json) {
    nlohmann::json j;
    j["lambdas"] = detail::ints(lambdas);
    j["max_skew_height"] = bound.str();
    j["complete_up_to_bound"] = true;
    j["representatives"] = "reduced";
    nlohmann::json holes = nlohmann::json::array();
    for (const auto& h : result.holes) {
      nlohmann::json heights = nlohmann::json::object();
      for (const auto& [f, v] : h.heights) heights[f.name()] = v.str();
      holes.push_back({{"point", cert_json::point(h.point)}, {"heights", heights}, {"reduced", h.reduced}});
    }
    j["holes"] = holes;
    out << j.dump(2) << "\n";
  } else {
    out << "reduced holes of Q" << detail::joined(lambdas) << " with skew height <= " << bound
        << " (no claim beyond this bound):\n";
    for (const auto& h : result.holes) {
      out << "  " << h.point << "  skew height " << h.skew_height();
      for (std::size_t i = 1; i <= n; ++i) out << "  F_" << i << " " << h.heights.at(FacetId::coordinate(i));
      out << "\n";
    }
    out << result.holes.size() << " hole(s); every other hole is a reduced hole plus a sum of v_1..v_n\n";
  }
  return kOk;
}

inline std::string triple_str(const GoodTriple& t) { return detail::joined(t.lambdas()); }

inline int cmd_good_triple(const CliConfig& cfg, const std::optional<std::string>& from,
                           const std::vector<std::string>& check, const std::optional<std::string>& search,
                           std::ostream& out) {
  const int given = int(from.has_value()) + int(!check.empty()) + int(search.has_value());
  if (given != 1) throw CLI::ValidationError("good-triple", "give exactly one of --from-lambda1, --check, --search");
  const bool json = cfg.format == Format::Json;
  if (from) {
    auto m = detail::integers({*from}, "--from-lambda1").front();
    auto t = family(m);
    if (json)
      out << nlohmann::json{{"lambdas", detail::ints(t.lambdas())}}.dump(2) << "\n";
    else
      out << triple_str(t) << "\n";
    return kOk;
  }
  if (!check.empty()) {
    auto l = detail::integers(check, "--check");
    auto r = is_good_triple(l);
    if (json)
      out << nlohmann::json{{"lambdas", detail::ints(l)}, {"good", r.good}, {"failed_condition", r.failed_condition},
                            {"reason", r.reason}}
                 .dump(2)
          << "\n";
    else
      out << detail::joined(l) << ": " << r.reason << "\n";
    return r.good ? kOk : kFalse;
  }
  auto bound = detail::integers({*search}, "--search").front();
  if (bound > 1'000'000) throw ResourceError("--search bound above 1000000");
  auto found = search_good_triples(bound.convert_to<std::int64_t>());
  if (json) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& t : found) a.push_back(detail::ints(t.lambdas()));
    out << nlohmann::json{{"max_lambda3", bound.str()}, {"triples", a}}.dump(2) << "\n";
  } else {
    for (const auto& t : found) out << triple_str(t) << "\n";
    out << found.size() << " good triple(s) with lambda3 <= " << bound << "\n";
  }
  return kOk;
}

inline int write_certificate(const CliConfig& cfg, const Certificate& c, std::ostream& out) {
  detail::Sink sink(cfg.output_path, out);
  sink.stream() << emit(c);
  return kOk;
}

inline int cmd_lift(const CliConfig& cfg, const std::vector<BigInt>& lambdas, std::size_t facet, std::size_t times,
                    const std::optional<LatticePoint>& point, std::ostream& out) {
  std::vector<BigInt> current = lambdas;
  std::optional<LatticePoint> z = point;
  if (z && z->size() != lambdas.size() + 1) throw DimensionError("point must have n+1 coordinates");
  nlohmann::json steps = nlohmann::json::array();
  for (std::size_t t = 0; t < times; ++t) {
    auto step = lift_lambda(current, facet);
    nlohmann::json j{{"facet", std::to_string(facet)},
                     {"ell", step.ell.str()},
                     {"lambdas_before", detail::ints(step.lambda_before)},
                     {"lambdas_after", detail::ints(step.lambda_after)},
                     {"beta", detail::ints(step.beta_coeffs.coeffs())}};
    if (cfg.format != Format::Json)
      out << "step " << t + 1 << ": facet " << facet << ", ell = " << step.ell << ", "
          << detail::joined(step.lambda_before) << " -> " << detail::joined(step.lambda_after) << "\n";
    if (z) {
      const BigInt b = beta(step, *z);
      const BigInt before = RectSimplex(step.lambda_before).skew_height(*z);
      z = alpha(step, *z);
      const BigInt after = RectSimplex(step.lambda_after).skew_height(*z);
      j["beta_of_point"] = b.str();
      j["point_after"] = cert_json::point(*z);
      if (cfg.format != Format::Json)
        out << "  beta = " << b << ", alpha(z) = " << *z << ", skew height " << before << " -> " << after << "\n";
    }
    steps.push_back(j);
    current = step.lambda_after;
  }
  if (cfg.format == Format::Json)
    out << nlohmann::json{{"steps", steps}, {"final_lambdas", detail::ints(current)}}.dump(2) << "\n";
  return kOk;
}

inline int cmd_verify(const std::string& path, const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "cannot read " << path << "\n";
    return kUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  const Verdict v = verify(buf.str());
  if (cfg.format == Format::Json) {
    const char* status = v.accepted() ? "accepted" : (v.status == Verdict::Status::Malformed ? "malformed" : "rejected");
    out << nlohmann::json{{"status", status}, {"clause", v.clause}, {"detail", v.detail}}.dump(2) << "\n";
  } else if (v.accepted()) {
    out << "accepted\n";
  } else if (v.status == Verdict::Status::Malformed) {
    out << "malformed: " << v.detail << "\n";
  } else {
    out << "rejected: clause " << v.clause << ": " << v.detail << "\n";
  }
  if (v.status == Verdict::Status::Malformed) return kUsage;
  return v.accepted() ? kOk : kFalse;
}

/// Runs the CLI on `args` (without the program name).
inline int run(std::vector<std::string> args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  // Everything after a bare "--" is a point; negative coordinates would
  // otherwise look like flags.
  std::vector<std::string> tail;
  if (auto it = std::find(args.begin(), args.end(), "--"); it != args.end()) {
    tail.assign(it + 1, args.end());
    args.erase(it, args.end());
  }

  CliConfig cfg;
  CLI::App app{"holeforge: holes of rectangular-simplex semigroups Q(lambda)", "holeforge"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  std::optional<std::size_t> max_generators;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--max-generators", max_generators,
                 "Generator guard (default 5000000 or HOLEFORGE_MAX_GENERATORS)");
  app.add_option("--max-degree", cfg.limits.max_degree, "Largest degree the membership oracle accepts");

  std::vector<std::string> lambda_words, check_words;
  std::string file, h_text, k_text;
  std::optional<std::string> from, search;
  std::size_t facet = 0, times = 1;

  auto* simplex = app.add_subcommand("simplex", "Vertices, L, facet forms and generator count");
  simplex->add_option("lambdas", lambda_words)->required();

  auto* member = app.add_subcommand("member", "Membership of a point: member l1 .. ln -- z1 .. zn+1");
  member->add_option("lambdas", lambda_words)->required();

  auto* holes = app.add_subcommand("holes", "Reduced holes up to a skew height");
  holes->add_option("lambdas", lambda_words)->required();
  holes->add_option("--max-skew-height", h_text, "Bound on skew height (default L)");
  holes->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  holes->add_option("-o,--output", cfg.output_path, "Write to file instead of stdout");

  auto* good = app.add_subcommand("good-triple", "Good-triple family, check, or search");
  good->add_option("--from-lambda1", from, "Family member for odd lambda1 >= 5");
  good->add_option("--check", check_words, "Check a sorted triple")->expected(3);
  good->add_option("--search", search, "All good triples with lambda3 <= N");

  auto* cert = app.add_subcommand("certify", "Certificate for a good triple");
  cert->add_option("lambdas", lambda_words)->required()->expected(3);
  cert->add_option("-o,--output", cfg.output_path, "Write to file instead of stdout");

  auto* lift = app.add_subcommand("lift", "Lift lambda along a coordinate facet; optional point after --");
  lift->add_option("lambdas", lambda_words)->required();
  lift->add_option("--facet", facet, "Facet index i (1-based)")->required();
  lift->add_option("--times", times, "Number of lift steps");

  auto* construct = app.add_subcommand("construct", "Simplex with all holes at height >= k");
  construct->add_option("--k", k_text, "Target height")->required();
  construct->add_option("-o,--output", cfg.output_path, "Write to file instead of stdout");

  auto* ver = app.add_subcommand("verify", "Check a certificate file");
  ver->add_option("file", file)->required();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
  try {
    if (max_generators) cfg.limits.max_generators = *max_generators;
    else cfg.limits.max_generators = default_generator_limit();
    if (!h_text.empty()) cfg.max_skew_height = detail::integers({h_text}, "--max-skew-height").front();

    if (!tail.empty() && !member->parsed() && !lift->parsed())
      throw CLI::ValidationError("--", "only member and lift take a point after --");

    if (simplex->parsed()) return cmd_simplex(cfg, detail::integers(lambda_words, "lambda"), out);
    if (member->parsed()) {
      if (tail.empty()) throw CLI::ValidationError("member", "point coordinates go after --");
      return cmd_member(cfg, detail::integers(lambda_words, "lambda"),
                        LatticePoint(detail::integers(tail, "point")), out);
    }
    if (holes->parsed()) {
      detail::Sink sink(cfg.output_path, out);
      return cmd_holes(cfg, detail::integers(lambda_words, "lambda"), sink.stream());
    }
    if (good->parsed()) return cmd_good_triple(cfg, from, check_words, search, out);
    if (cert->parsed()) return write_certificate(cfg, certify(GoodTriple(detail::integers(lambda_words, "lambda"))), out);
    if (lift->parsed()) {
      std::optional<LatticePoint> z;
      if (!tail.empty()) z = LatticePoint(detail::integers(tail, "point"));
      return cmd_lift(cfg, detail::integers(lambda_words, "lambda"), facet, times, z, out);
    }
    if (construct->parsed()) {
      const BigInt k = detail::integers({k_text}, "--k").front();
      auto c = deep_hole_construction(k);
      write_certificate(cfg, c.certificate, out);
      if (!cfg.output_path.empty())
        out << "k = " << k << ": lambda = " << detail::joined(c.simplex.lambdas()) << ", all holes at height >= "
            << c.certificate.claims.min_height_all_facets << ", certificate written to " << cfg.output_path << "\n";
      return kOk;
    }
    if (ver->parsed()) return cmd_verify(file, cfg, out, err);
  } catch (const CLI::Error& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const CertificationError& e) {
    err << "certification failed: " << e.what() << "\n";
    return kFalse;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace holeforge::cli
