// locuskit command-line front end.
//
// Every subcommand prints a single-line JSON envelope
//   {"status":"ok","command":...,"params":...,"result":...,"diagnostics":...}
// by default; `--format plain` gives key = value lines and `--format csv`
// (scan only) emits the raw alpha grid. Output is deterministic: fields are
// emitted in a fixed order and floating-point values are printed with 17
// significant digits, which round-trips IEEE doubles exactly.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "locuskit/locuskit.hpp"

namespace {

using namespace locuskit;

// ── output formatting ────────────────────────────────────────────────────

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size() + 2);
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string json_string(const std::string& text) {
  return "\"" + json_escape(text) + "\"";
}

// Order-preserving JSON object assembly.
class JsonObject {
 public:
  JsonObject& raw(const char* key, const std::string& value) {
    if (!body_.empty()) body_ += ',';
    body_ += '"';
    body_ += key;
    body_ += "\":";
    body_ += value;
    return *this;
  }
  JsonObject& num(const char* key, double v) { return raw(key, fmt_double(v)); }
  JsonObject& integer(const char* key, long long v) {
    return raw(key, std::to_string(v));
  }
  JsonObject& str(const char* key, const std::string& v) {
    return raw(key, json_string(v));
  }
  JsonObject& boolean(const char* key, bool v) {
    return raw(key, v ? "true" : "false");
  }
  std::string done() const { return "{" + body_ + "}"; }

 private:
  std::string body_;
};

std::string json_array(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += ',';
    out += items[i];
  }
  return out + "]";
}

// ── errors local to the front end ────────────────────────────────────────

struct CliParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::DomainMGeN:
    case ErrorCode::DomainInvalid:
      return 3;
    case ErrorCode::Overflow:
      return 4;
    case ErrorCode::NoRoot:
      return 5;
  }
  return 3;
}

const char* code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DomainMGeN: return "DOMAIN_M_GE_N";
    case ErrorCode::DomainInvalid: return "DOMAIN_INVALID";
    case ErrorCode::Overflow: return "OVERFLOW";
    case ErrorCode::NoRoot: return "NO_ROOT";
  }
  return "DOMAIN_INVALID";
}

void print_error_envelope(const std::string& command, const std::string& code,
                          const std::string& message) {
  JsonObject error;
  error.str("code", code).str("message", message);
  JsonObject envelope;
  envelope.str("status", "error");
  envelope.str("command", command);
  envelope.raw("error", error.done());
  std::cout << envelope.done() << "\n";
}

// ── input parsing helpers ────────────────────────────────────────────────

double parse_double_token(const std::string& token) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw CliParseError("invalid number '" + token + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

std::vector<PlanarPoint> parse_points(const std::string& text) {
  if (text.empty()) throw CliParseError("--points must not be empty");
  std::vector<PlanarPoint> points;
  for (const std::string& pair : split(text, ';')) {
    const std::vector<std::string> coords = split(pair, ',');
    if (coords.size() != 2) {
      throw CliParseError("point '" + pair + "' is not of the form x,y");
    }
    points.push_back(
        {parse_double_token(coords[0]), parse_double_token(coords[1])});
  }
  return points;
}

std::vector<double> parse_weights(const std::string& text) {
  if (text.empty()) throw CliParseError("--weights must not be empty");
  std::vector<double> weights;
  for (const std::string& token : split(text, ',')) {
    weights.push_back(parse_double_token(token));
  }
  return weights;
}

// ── request state ────────────────────────────────────────────────────────

struct Request {
  int n = 0;
  int m = 0;
  int samples = 256;
  double r = 0.0;
  double ell = 0.0;
  double alpha = 0.0;
  double sum = 0.0;
  bool degrees = false;
  std::string points_text;
  std::string weights_text;
  std::string format = "json";
  std::optional<double> rel_tol;

  double alpha_radians() const {
    return degrees ? alpha * std::numbers::pi / 180.0 : alpha;
  }

  double resolve_rel_tol(double fallback) const {
    if (rel_tol) return *rel_tol;
    if (const char* env = std::getenv("LOCUSKIT_REL_TOL")) {
      return parse_double_token(env);
    }
    return fallback;
  }
};

struct Output {
  std::string params;
  std::string result;
  std::string diagnostics = "{}";
  std::string plain;
  std::string csv;  // nonempty only for scan
};

// ── result rendering shared by classify and weighted ────────────────────

const char* kind_name(LocusKind kind) {
  switch (kind) {
    case LocusKind::Circle: return "circle";
    case LocusKind::Point: return "point";
    case LocusKind::Empty: return "empty";
    case LocusKind::Line: return "line";
    case LocusKind::WholePlane: return "whole_plane";
  }
  return "empty";
}

std::string locus_result_json(const LocusResult& result) {
  JsonObject out;
  out.str("kind", kind_name(result.kind));
  if (result.kind == LocusKind::Circle || result.kind == LocusKind::Point) {
    JsonObject center;
    center.num("x", result.circle_center.x).num("y", result.circle_center.y);
    out.raw("center", center.done());
  }
  if (result.kind == LocusKind::Circle) {
    out.num("radius", result.circle_radius);
  }
  if (result.kind == LocusKind::Line) {
    JsonObject line;
    line.num("a", result.line_coeffs[0])
        .num("b", result.line_coeffs[1])
        .num("c", result.line_coeffs[2]);
    out.raw("line", line.done());
  }
  return out.done();
}

std::string locus_result_plain(const LocusResult& result) {
  std::string out = std::string("kind = ") + kind_name(result.kind) + "\n";
  if (result.kind == LocusKind::Circle || result.kind == LocusKind::Point) {
    out += "center = (" + fmt_double(result.circle_center.x) + ", " +
           fmt_double(result.circle_center.y) + ")\n";
  }
  if (result.kind == LocusKind::Circle) {
    out += "radius = " + fmt_double(result.circle_radius) + "\n";
  }
  if (result.kind == LocusKind::Line) {
    out += "line = " + fmt_double(result.line_coeffs[0]) + " x + " +
           fmt_double(result.line_coeffs[1]) + " y + " +
           fmt_double(result.line_coeffs[2]) + " = 0\n";
  }
  return out;
}

// ── subcommand handlers ──────────────────────────────────────────────────

Output handle_eval(const Request& req) {
  const double sum = power_sum_closed(PowerSumSpec(req.n, req.m), req.r, req.ell);
  Output out;
  out.params = JsonObject()
                   .integer("n", req.n)
                   .integer("m", req.m)
                   .num("r", req.r)
                   .num("ell", req.ell)
                   .done();
  out.result = JsonObject().num("sum", sum).done();
  out.plain = "sum = " + fmt_double(sum) + "\n";
  return out;
}

Output handle_oracle(const Request& req) {
  RegularPolygon poly(req.n, req.r);
  const double sum =
      power_sum_direct(poly, ProbePoint(req.ell, req.alpha_radians()), req.m);
  Output out;
  out.params = JsonObject()
                   .integer("n", req.n)
                   .integer("m", req.m)
                   .num("r", req.r)
                   .num("ell", req.ell)
                   .num("alpha", req.alpha)
                   .boolean("degrees", req.degrees)
                   .done();
  out.result = JsonObject().num("sum", sum).done();
  out.plain = "sum = " + fmt_double(sum) + "\n";
  return out;
}

Output handle_terms(const Request& req) {
  const std::vector<ClosedFormTerm> terms = closed_form_terms(req.m);
  std::vector<std::string> items;
  std::string plain;
  for (const ClosedFormTerm& term : terms) {
    items.push_back(JsonObject()
                        .integer("k", term.k)
                        .str("coeff", to_decimal_string(term.coeff))
                        .num("coeff_double", term.coeff_as_double())
                        .done());
    plain += "k = " + std::to_string(term.k) +
             ", coeff = " + to_decimal_string(term.coeff) + "\n";
  }
  Output out;
  out.params = JsonObject().integer("m", req.m).done();
  out.result = JsonObject()
                   .integer("m", req.m)
                   .integer("count", static_cast<long long>(terms.size()))
                   .raw("terms", json_array(items))
                   .done();
  out.plain = plain.empty() ? "no terms (m = 1)\n" : plain;
  return out;
}

Output handle_solve(const Request& req) {
  const PowerSumSpec spec(req.n, req.m);
  const double rel_tol_u = req.resolve_rel_tol(tol::kBisectionRelU);
  int iterations = 0;
  const double ell = solve_radius(spec, req.r, req.sum, rel_tol_u, &iterations);
  const double residual =
      std::abs(power_sum_closed(spec, req.r, ell) - req.sum) /
      std::abs(req.sum);
  Output out;
  out.params = JsonObject()
                   .integer("n", req.n)
                   .integer("m", req.m)
                   .num("r", req.r)
                   .num("sum", req.sum)
                   .done();
  out.result = JsonObject().num("ell", ell).done();
  out.diagnostics = JsonObject()
                        .integer("iterations", iterations)
                        .num("residual_rel", residual)
                        .num("rel_tol_u", rel_tol_u)
                        .done();
  out.plain = "ell = " + fmt_double(ell) + "\n";
  return out;
}

Output handle_classify(const Request& req) {
  const PowerSumSpec spec(req.n, req.m);
  const double band = req.resolve_rel_tol(tol::kPointBandRel);
  const LocusResult result = classify_power_locus(spec, req.r, req.sum, band);
  Output out;
  out.params = JsonObject()
                   .integer("n", req.n)
                   .integer("m", req.m)
                   .num("r", req.r)
                   .num("sum", req.sum)
                   .done();
  out.result = locus_result_json(result);
  out.diagnostics = JsonObject()
                        .num("band_rel", band)
                        .num("center_sum", spec.n * int_pow(req.r * req.r, spec.m))
                        .done();
  out.plain = locus_result_plain(result);
  return out;
}

Output handle_weighted(const Request& req) {
  WeightedPointSet wps;
  wps.points = parse_points(req.points_text);
  wps.weights = parse_weights(req.weights_text);
  wps.target = req.sum;
  const double eps = req.resolve_rel_tol(tol::kWeightedEps);
  const LocusResult result = classify_weighted_locus(wps, eps);

  double lambda_sum = 0.0;
  for (double w : wps.weights) lambda_sum += w;

  std::vector<std::string> point_items;
  for (const PlanarPoint& p : wps.points) {
    point_items.push_back("[" + fmt_double(p.x) + "," + fmt_double(p.y) + "]");
  }
  std::vector<std::string> weight_items;
  for (double w : wps.weights) weight_items.push_back(fmt_double(w));

  Output out;
  out.params = JsonObject()
                   .raw("points", json_array(point_items))
                   .raw("weights", json_array(weight_items))
                   .num("sum", req.sum)
                   .done();
  out.result = locus_result_json(result);
  out.diagnostics =
      JsonObject().num("lambda_sum", lambda_sum).num("eps", eps).done();
  out.plain = locus_result_plain(result);
  return out;
}

Output lemma_output(const Request& req, double analytic, double direct) {
  const double residual = std::abs(analytic - direct);
  const double tolerance = req.resolve_rel_tol(tol::kLemmaAbs) * req.n;
  Output out;
  out.params = JsonObject()
                   .integer("n", req.n)
                   .integer("m", req.m)
                   .num("alpha", req.alpha)
                   .boolean("degrees", req.degrees)
                   .done();
  out.result = JsonObject()
                   .num("analytic", analytic)
                   .num("direct", direct)
                   .num("residual", residual)
                   .done();
  out.diagnostics = JsonObject()
                        .num("tolerance", tolerance)
                        .boolean("within_tolerance", residual <= tolerance)
                        .done();
  out.plain = "analytic = " + fmt_double(analytic) +
              "\ndirect = " + fmt_double(direct) +
              "\nresidual = " + fmt_double(residual) + "\n";
  return out;
}

Output handle_lemma1(const Request& req) {
  const double alpha = req.alpha_radians();
  return lemma_output(req, cosine_multiple_sum(req.n, req.m, alpha),
                      cosine_multiple_sum_direct(req.n, req.m, alpha));
}

Output handle_lemma2(const Request& req) {
  const double alpha = req.alpha_radians();
  return lemma_output(req, cosine_power_sum(req.n, req.m, alpha),
                      cosine_power_sum_direct(req.n, req.m, alpha));
}

Output handle_reduce(const Request& req) {
  const PowerReductionExpansion expansion = power_reduction(req.m);
  std::vector<std::string> items;
  std::string plain = "constant = " + to_decimal_string(expansion.constant_term.num) +
                      "/2^" + std::to_string(expansion.constant_term.den_pow2) +
                      " = " + fmt_double(expansion.constant_term.value()) + "\n";
  for (const Harmonic& h : expansion.harmonics) {
    items.push_back(JsonObject()
                        .integer("frequency", h.frequency)
                        .str("num", to_decimal_string(h.weight.num))
                        .integer("den_pow2", h.weight.den_pow2)
                        .num("value", h.weight.value())
                        .done());
    plain += "cos(" + std::to_string(h.frequency) + " theta) weight = " +
             to_decimal_string(h.weight.num) + "/2^" +
             std::to_string(h.weight.den_pow2) + " = " +
             fmt_double(h.weight.value()) + "\n";
  }
  Output out;
  out.params = JsonObject().integer("m", req.m).done();
  out.result =
      JsonObject()
          .integer("m", req.m)
          .raw("constant", JsonObject()
                               .str("num", to_decimal_string(
                                               expansion.constant_term.num))
                               .integer("den_pow2",
                                        expansion.constant_term.den_pow2)
                               .num("value", expansion.constant_term.value())
                               .done())
          .raw("harmonics", json_array(items))
          .done();
  out.plain = plain;
  return out;
}

Output handle_scan(const Request& req) {
  RegularPolygon poly(req.n, req.r);
  const AlphaScanReport report =
      alpha_scan(poly, req.ell, req.m, req.samples);
  const double rel_tol = req.resolve_rel_tol(tol::kAlphaIndependenceRel);
  const bool applies = req.m <= req.n - 1;

  Output out;
  out.params = JsonObject()
                   .integer("n", req.n)
                   .integer("m", req.m)
                   .num("r", req.r)
                   .num("ell", req.ell)
                   .integer("samples", req.samples)
                   .done();
  out.result = JsonObject()
                   .num("s_min", report.s_min)
                   .num("s_max", report.s_max)
                   .num("amplitude", report.amplitude)
                   .num("relative_amplitude", report.relative_amplitude)
                   .done();
  JsonObject diag;
  diag.num("rel_tol", rel_tol);
  diag.boolean("circle_theorem_applies", applies);
  if (applies) {
    diag.boolean("alpha_independent", report.relative_amplitude <= rel_tol);
  }
  out.diagnostics = diag.done();
  out.plain = "s_min = " + fmt_double(report.s_min) +
              "\ns_max = " + fmt_double(report.s_max) +
              "\namplitude = " + fmt_double(report.amplitude) +
              "\nrelative_amplitude = " + fmt_double(report.relative_amplitude) +
              "\n";

  if (req.format == "csv") {
    const std::vector<AlphaSample> grid =
        alpha_scan_samples(poly, req.ell, req.m, req.samples);
    out.csv = "alpha,sum\n";
    for (const AlphaSample& sample : grid) {
      out.csv +=
          fmt_double(sample.alpha) + "," + fmt_double(sample.sum) + "\n";
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "locuskit: sums of (2m)-th powers of distances to regular n-gon "
      "vertices, the circle loci they define, and the cosine-sum identities "
      "behind them"};
  app.require_subcommand(1);

  Request req;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", req.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    cmd->add_option("--rel-tol", req.rel_tol,
                    "Override the command's default tolerance");
  };
  const auto add_angle = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--alpha", req.alpha,
                                "Angular position (radians unless --degrees)");
    if (required) opt->required();
    cmd->add_flag("--degrees", req.degrees, "Interpret --alpha in degrees");
  };

  CLI::App* eval = app.add_subcommand(
      "eval", "Closed-form power sum (requires m <= n-1)");
  eval->add_option("--n", req.n, "Vertex count")->required();
  eval->add_option("--m", req.m, "Half-power (distance power is 2m)")->required();
  eval->add_option("--r", req.r, "Circumradius")->required();
  eval->add_option("--ell", req.ell, "Probe distance from the center")->required();
  add_common(eval);

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Brute-force power sum over the vertices (any m)");
  oracle->add_option("--n", req.n, "Vertex count")->required();
  oracle->add_option("--m", req.m, "Half-power")->required();
  oracle->add_option("--r", req.r, "Circumradius")->required();
  oracle->add_option("--ell", req.ell, "Probe distance from the center")->required();
  add_angle(oracle, false);
  add_common(oracle);

  CLI::App* terms = app.add_subcommand(
      "terms", "Exact closed-form coefficients C(m,2k) C(2k,k)");
  terms->add_option("--m", req.m, "Half-power")->required();
  add_common(terms);

  CLI::App* solve = app.add_subcommand(
      "solve", "Invert the closed form: recover the circle radius from the sum");
  solve->add_option("--n", req.n, "Vertex count")->required();
  solve->add_option("--m", req.m, "Half-power")->required();
  solve->add_option("--r", req.r, "Circumradius")->required();
  solve->add_option("--sum", req.sum, "Target sum")->required();
  add_common(solve);

  CLI::App* classify = app.add_subcommand(
      "classify", "Classify the locus of a constant power sum");
  classify->add_option("--n", req.n, "Vertex count")->required();
  classify->add_option("--m", req.m, "Half-power")->required();
  classify->add_option("--r", req.r, "Circumradius")->required();
  classify->add_option("--sum", req.sum, "Target sum")->required();
  add_common(classify);

  CLI::App* weighted = app.add_subcommand(
      "weighted", "Classify the locus of a weighted sum of squared distances");
  weighted->add_option("--points", req.points_text, "Points as x1,y1;x2,y2;...")
      ->required();
  weighted->add_option("--weights", req.weights_text, "Weights as w1,w2,...")
      ->required();
  weighted->add_option("--sum", req.sum, "Target sum")->required();
  add_common(weighted);

  CLI::App* lemma1 = app.add_subcommand(
      "lemma1", "Multiple-argument cosine sum: analytic vs direct");
  lemma1->add_option("--n", req.n, "Direction count")->required();
  lemma1->add_option("--m", req.m, "Angle multiplier")->required();
  add_angle(lemma1, true);
  add_common(lemma1);

  CLI::App* lemma2 = app.add_subcommand(
      "lemma2", "Cosine power sum: analytic (m < n) vs direct");
  lemma2->add_option("--n", req.n, "Direction count")->required();
  lemma2->add_option("--m", req.m, "Cosine power")->required();
  add_angle(lemma2, true);
  add_common(lemma2);

  CLI::App* reduce = app.add_subcommand(
      "reduce", "Power-reduction expansion of cos^m with exact coefficients");
  reduce->add_option("--m", req.m, "Cosine power")->required();
  add_common(reduce);

  CLI::App* scan = app.add_subcommand(
      "scan", "Sweep the direct sum over one symmetry period of alpha");
  scan->add_option("--n", req.n, "Vertex count")->required();
  scan->add_option("--m", req.m, "Half-power")->required();
  scan->add_option("--r", req.r, "Circumradius")->required();
  scan->add_option("--ell", req.ell, "Probe distance from the center")->required();
  scan->add_option("--samples", req.samples, "Grid size (default 256)");
  add_common(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    const auto parsed = app.get_subcommands();
    print_error_envelope(parsed.empty() ? "" : parsed.front()->get_name(),
                         "PARSE_ERROR", e.what());
    return 2;
  }

  CLI::App* active = app.get_subcommands().front();
  const std::string command = active->get_name();

  try {
    if (req.format == "csv" && command != "scan") {
      throw CliParseError("csv output is only available for scan");
    }

    Output out;
    if (command == "eval") out = handle_eval(req);
    else if (command == "oracle") out = handle_oracle(req);
    else if (command == "terms") out = handle_terms(req);
    else if (command == "solve") out = handle_solve(req);
    else if (command == "classify") out = handle_classify(req);
    else if (command == "weighted") out = handle_weighted(req);
    else if (command == "lemma1") out = handle_lemma1(req);
    else if (command == "lemma2") out = handle_lemma2(req);
    else if (command == "reduce") out = handle_reduce(req);
    else out = handle_scan(req);

    if (req.format == "csv") {
      std::cout << out.csv;
    } else if (req.format == "plain") {
      std::cout << out.plain;
    } else {
      JsonObject envelope;
      envelope.str("status", "ok");
      envelope.str("command", command);
      envelope.raw("params", out.params);
      envelope.raw("result", out.result);
      envelope.raw("diagnostics", out.diagnostics);
      std::cout << envelope.done() << "\n";
    }
    return 0;
  } catch (const CliParseError& e) {
    print_error_envelope(command, "PARSE_ERROR", e.what());
    return 2;
  } catch (const Error& e) {
    print_error_envelope(command, code_name(e.code()), e.what());
    return exit_code_for(e.code());
  }
}
