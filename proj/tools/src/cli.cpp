#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <numeric>

#include "codespec.hpp"
#include "mtdual/duals.hpp"
#include "mtdual/error.hpp"
#include "mtdual/oracle.hpp"

namespace mtdual::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct Options {
  std::string input;
  bool json = false;
  bool steps = false;
  int kappa = 0;
  std::string side = "right";
  std::uint64_t cap = oracle::kDefaultDistanceCap;
};

std::string join_shifts(const std::vector<FieldElement>& shifts) {
  std::string s;
  for (std::size_t i = 0; i < shifts.size(); ++i) s += (i ? ", " : "") + shifts[i].to_string();
  return s;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

ordered_json matrix_json(const PolyMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json matrix_json(const LaurentMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json shifts_json(const std::vector<FieldElement>& shifts) {
  ordered_json a = ordered_json::array();
  for (const auto& s : shifts) a.push_back(s.to_string());
  return a;
}

ordered_json report_head(const std::string& construction, const MTCode& c) {
  ordered_json r;
  r["construction"] = construction;
  r["field"] = c.field().describe();
  r["shifts"] = shifts_json(c.shifts());
  r["block_lengths"] = c.block_lengths();
  r["input_gpm"] = matrix_json(c.gpm());
  return r;
}

void print_block(std::ostream& out, const std::string& title, const std::string& block) {
  out << title << ":\n" << block;
}

void print_code(std::ostream& out, const MTCode& c) {
  out << "shifts: " << join_shifts(c.shifts()) << "\n";
  out << "block lengths: " << join_ints(c.block_lengths()) << "\n";
  out << "length: " << c.length() << "\n";
  out << "dimension: " << c.dimension() << "\n";
  print_block(out, "gpm", c.gpm().to_string());
}

int cmd_info(const Options& o, std::ostream& out) {
  const CodeSpec spec = load_codespec(o.input);
  const MTCode c = spec.code();
  if (o.json) {
    ordered_json r = report_head("info", c);
    r["companion"] = matrix_json(c.companion());
    r["dimensions"] = {{"length", c.length()}, {"input", c.dimension()}};
    out << r.dump(2) << "\n";
    return kOk;
  }
  out << "field: " << c.field().describe() << "\n";
  print_code(out, c);
  print_block(out, "companion", c.companion().to_string());
  return kOk;
}

int cmd_hnf(const Options& o, std::ostream& out) {
  const CodeSpec spec = load_codespec(o.input);
  PolyMatrix raw(spec.field, spec.rows.size(), spec.block_lengths.size());
  for (std::size_t i = 0; i < spec.rows.size(); ++i) {
    if (spec.rows[i].size() != spec.block_lengths.size()) throw PreconditionError("row length differs from l");
    for (std::size_t j = 0; j < spec.rows[i].size(); ++j) raw.at(i, j) = spec.rows[i][j];
  }
  const HNFResult h = hermite_normal_form(raw);
  const MTCode c = spec.code();
  if (o.json) {
    ordered_json r = report_head("hnf", c);
    r["raw_rows"] = matrix_json(raw);
    r["raw_hnf"] = matrix_json(h.hnf);
    r["rank"] = h.rank;
    r["output_gpm"] = matrix_json(c.gpm());
    out << r.dump(2) << "\n";
    return kOk;
  }
  out << "rank of rows: " << h.rank << "\n";
  print_block(out, "hnf of rows", h.hnf.to_string());
  print_block(out, "reduced gpm", c.gpm().to_string());
  return kOk;
}

int cmd_dual(const Options& o, std::ostream& out) {
  const MTCode c = load_codespec(o.input).code();
  const EuclideanDualSteps s = euclidean_dual_steps(c);
  const MTCode d = euclidean_dual(c);
  if (o.json) {
    ordered_json r = report_head("euclidean_dual", c);
    r["output_shifts"] = shifts_json(d.shifts());
    r["output_gpm"] = matrix_json(d.gpm());
    r["output_companion"] = matrix_json(d.companion());
    if (o.steps) {
      r["steps"] = {{"A", matrix_json(s.a)},
                    {"A(1/x)", matrix_json(s.a_inverse)},
                    {"A*", matrix_json(s.a_star)},
                    {"A**", matrix_json(s.a_double_star)},
                    {"H", matrix_json(s.h)}};
    }
    r["dimensions"] = {{"length", c.length()}, {"input", c.dimension()}, {"output", d.dimension()}};
    out << r.dump(2) << "\n";
    return kOk;
  }
  if (o.steps) {
    print_block(out, "A", s.a.to_string());
    print_block(out, "A(1/x)", s.a_inverse.to_string());
    print_block(out, "A*", s.a_star.to_string());
    print_block(out, "A**", s.a_double_star.to_string());
    print_block(out, "H", s.h.to_string());
  }
  print_code(out, d);
  print_block(out, "companion", d.companion().to_string());
  return kOk;
}

int cmd_galois(const Options& o, std::ostream& out) {
  if (o.side != "right" && o.side != "left") throw ParseError("--side must be right or left");
  const MTCode c = load_codespec(o.input).code();
  const MTCode d = o.side == "right" ? right_galois_dual(c, o.kappa) : left_galois_dual(c, o.kappa);
  const auto checks = galois_identities_check(c, o.kappa);
  if (o.json) {
    ordered_json r = report_head(o.side + "_galois_dual", c);
    r["kappa"] = o.kappa;
    r["output_shifts"] = shifts_json(d.shifts());
    r["output_gpm"] = matrix_json(d.gpm());
    r["output_companion"] = matrix_json(d.companion());
    r["dimensions"] = {{"length", c.length()}, {"input", c.dimension()}, {"output", d.dimension()}};
    ordered_json ids = ordered_json::array();
    for (const auto& ic : checks) ids.push_back({{"name", ic.name}, {"holds", ic.holds}});
    r["identity_checks"] = ids;
    out << r.dump(2) << "\n";
    return kOk;
  }
  print_code(out, d);
  print_block(out, "companion", d.companion().to_string());
  out << "identities:\n";
  for (const auto& ic : checks) out << (ic.holds ? "  PASS " : "  FAIL ") << ic.name << "\n";
  return kOk;
}

int cmd_two_sided(const Options& o, std::ostream& out) {
  const MTCode c = load_codespec(o.input).code();
  const IntersectionResult res = two_sided_galois_dual(c, o.kappa);
  const DualCertificate& cert = res.certificate;
  const bool trace_ok = trace_auxiliary_check(cert, res.b_image);
  const PolyMatrix trace_rhs = trace_matrix(res.b_image, cert.upsilon);
  if (o.json) {
    ordered_json r = report_head("two_sided_galois_dual", c);
    r["kappa"] = o.kappa;
    r["output_shifts"] = shifts_json(res.code.shifts());
    r["output_gpm"] = matrix_json(res.code.gpm());
    r["certificate"] = {{"upsilon", cert.upsilon},
                        {"X", matrix_json(cert.x_matrix)},
                        {"Y", matrix_json(cert.y_matrix)},
                        {"Y_sigma_H", matrix_json(cert.gpm_product)},
                        {"sigma_H", matrix_json(res.h_image)},
                        {"sigma_B", matrix_json(res.b_image)}};
    r["trace_equation"] = {{"holds", trace_ok}, {"trace_sigma_B", matrix_json(trace_rhs)}};
    r["dimensions"] = {{"length", c.length()}, {"input", c.dimension()}, {"output", res.code.dimension()}};
    out << r.dump(2) << "\n";
    return kOk;
  }
  print_code(out, res.code);
  out << "upsilon: " << cert.upsilon << "\n";
  print_block(out, "X", cert.x_matrix.to_string());
  print_block(out, "Y", cert.y_matrix.to_string());
  print_block(out, "Y*sigma(H)", cert.gpm_product.to_string());
  print_block(out, "Tr(sigma(B))", trace_rhs.to_string());
  out << "trace equation: " << (trace_ok ? "holds" : "fails") << "\n";
  return kOk;
}

std::vector<std::pair<std::string, bool>> verify_checks(const MTCode& c) {
  using oracle::DualSide;
  std::vector<std::pair<std::string, bool>> out;
  const oracle::ExpandedCode ex = oracle::expand(c);
  out.emplace_back("expanded rank equals dimension", ex.k() == c.dimension());
  const MTCode perp = euclidean_dual(c);
  out.emplace_back("euclidean dual", oracle::expand(perp) == oracle::nullspace_dual(ex, 0, DualSide::euclidean));
  out.emplace_back("double dual", euclidean_dual(perp) == c);
  const int e = c.field().degree();
  for (int kappa = 0; kappa < e; ++kappa) {
    const std::string k = " kappa=" + std::to_string(kappa);
    const auto right = oracle::nullspace_dual(ex, kappa, DualSide::right);
    const auto left = oracle::nullspace_dual(ex, kappa, DualSide::left);
    out.emplace_back("right dual" + k, oracle::expand(right_galois_dual(c, kappa)) == right);
    out.emplace_back("left dual" + k, oracle::expand(left_galois_dual(c, kappa)) == left);
    for (const auto& ic : galois_identities_check(c, kappa)) out.emplace_back(ic.name + k, ic.holds);
    const int upsilon = std::gcd(e, (2 * kappa) % e);
    const bool applicable = (4 * kappa) % e == 0 &&
                            std::all_of(c.shifts().begin(), c.shifts().end(),
                                        [&](const FieldElement& l) { return l.in_subfield(upsilon); });
    if (!applicable) continue;
    const IntersectionResult two = two_sided_galois_dual(c, kappa);
    out.emplace_back("two-sided dual" + k, oracle::expand(two.code) == oracle::intersect(right, left));
    out.emplace_back("certificate" + k, certificate_holds(two.certificate, two.h_image, two.b_image));
    out.emplace_back("trace equation" + k, trace_auxiliary_check(two.certificate, two.b_image));
  }
  return out;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const MTCode c = load_codespec(o.input).code();
  const auto checks = verify_checks(c);
  const bool all = std::all_of(checks.begin(), checks.end(), [](const auto& p) { return p.second; });
  if (o.json) {
    ordered_json r = report_head("verify", c);
    ordered_json list = ordered_json::array();
    for (const auto& [name, ok] : checks) list.push_back({{"name", name}, {"holds", ok}});
    r["checks"] = list;
    r["passed"] = all;
    out << r.dump(2) << "\n";
  } else {
    for (const auto& [name, ok] : checks) out << (ok ? "PASS " : "FAIL ") << name << "\n";
    out << (all ? "all checks passed" : "some checks failed") << "\n";
  }
  return all ? kOk : kInvariantError;
}

int cmd_distance(const Options& o, std::ostream& out) {
  const MTCode c = load_codespec(o.input).code();
  const int d = oracle::min_distance(oracle::expand(c), o.cap);
  if (o.json) {
    ordered_json r = report_head("min_distance", c);
    r["dimensions"] = {{"length", c.length()}, {"input", c.dimension()}};
    r["min_distance"] = d;
    out << r.dump(2) << "\n";
    return kOk;
  }
  out << "length: " << c.length() << "\n";
  out << "dimension: " << c.dimension() << "\n";
  out << "minimum distance: " << d << "\n";
  return kOk;
}

}  // namespace

int report_exception(std::exception_ptr error, std::ostream& err) {
  try {
    std::rethrow_exception(error);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kPreconditionError;
  } catch (const InvariantError& e) {
    err << "internal invariant failed: " << e.what() << "\n";
    return kInvariantError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariantError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-twisted codes: reduced GPMs, Euclidean and Galois duals"};
  app.name("mtdual");
  app.require_subcommand(1);
  Options o;

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "CodeSpec JSON file")->required();
    sub->add_flag("--json", o.json, "Emit the JSON report");
    return sub;
  };
  CLI::App* info = add("info", "Field, shifts, reduced GPM, companion matrix and dimension");
  CLI::App* hnf = add("hnf", "Hermite normal form of the raw generator rows");
  CLI::App* dual = add("dual", "Euclidean dual");
  dual->add_flag("--steps", o.steps, "Also print A, A(1/x), A*, A** and H");
  CLI::App* galois = add("galois", "Right or left kappa-Galois dual");
  galois->add_option("--kappa", o.kappa, "Galois exponent, 0 <= kappa < e")->required();
  galois->add_option("--side", o.side, "right or left")->check(CLI::IsMember({"right", "left"}));
  CLI::App* two = add("two-sided", "Two-sided kappa-Galois dual with its (X, Y) certificate");
  two->add_option("--kappa", o.kappa, "Galois exponent, 0 <= kappa < e")->required();
  CLI::App* verify = add("verify", "Compare every construction against the brute-force oracle");
  CLI::App* distance = add("distance", "Minimum distance by enumeration");
  distance->add_option("--cap", o.cap, "Largest number of codewords to enumerate");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (info->parsed()) return cmd_info(o, out);
    if (hnf->parsed()) return cmd_hnf(o, out);
    if (dual->parsed()) return cmd_dual(o, out);
    if (galois->parsed()) return cmd_galois(o, out);
    if (two->parsed()) return cmd_two_sided(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (distance->parsed()) return cmd_distance(o, out);
  } catch (...) {
    return report_exception(std::current_exception(), err);
  }
  return kParseError;
}

}  // namespace mtdual::cli
