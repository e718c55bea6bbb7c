// superali: scans and verification for antisymmetrizer identities on matrix
// and vectorial Lie (super)algebras.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "superali/report.hpp"
#include "superali/verify.hpp"

using namespace superali;

namespace {

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

/// One vect(1) field per line; a field is a sum of terms
///   coef * x^a * d/dx
/// with rational coef ("3", "-1/2"), optional "x^a" (a >= 0, "x" alone means
/// a = 1), and terms joined by + or -.
DiffOp parse_field_line(const SuperDomain& dom, const std::string& line) {
  GenId x = dom.even_coord(0);
  SuperScalar coeff(Rational(0), &dom.table());
  std::size_t pos = 0;
  auto skip_ws = [&]() {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
  };
  skip_ws();
  if (pos == line.size()) throw parse_error("empty field line");
  while (pos < line.size()) {
    int sign = 1;
    skip_ws();
    if (line[pos] == '+' || line[pos] == '-') {
      if (line[pos] == '-') sign = -1;
      ++pos;
      skip_ws();
    }
    // coefficient (optional, defaults to 1)
    Rational c = rat(sign);
    if (pos < line.size() && (std::isdigit(static_cast<unsigned char>(line[pos])))) {
      std::size_t start = pos;
      while (pos < line.size() &&
             (std::isdigit(static_cast<unsigned char>(line[pos])) || line[pos] == '/'))
        ++pos;
      c = rat_parse(line.substr(start, pos - start)) * rat(sign);
      skip_ws();
      if (pos < line.size() && line[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    // x^a (optional)
    std::uint32_t a = 0;
    if (pos < line.size() && line[pos] == 'x') {
      ++pos;
      a = 1;
      if (pos < line.size() && line[pos] == '^') {
        ++pos;
        std::size_t start = pos;
        while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
        if (start == pos) throw parse_error("missing exponent after '^'");
        a = static_cast<std::uint32_t>(std::stoul(line.substr(start, pos - start)));
      }
      skip_ws();
      if (pos < line.size() && line[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    // d/dx (required)
    if (line.compare(pos, 4, "d/dx") != 0)
      throw parse_error("field term grammar is coef*x^a*d/dx; got '" + line + "'");
    pos += 4;
    coeff = coeff + SuperScalar::from_terms(dom.table(),
                                            {SuperScalar::Term{Monomial::power(x, a), c}}) ;
    skip_ws();
  }
  DiffOp f(dom);
  f.add_term(Monomial::generator(x), coeff);
  return f;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"superali: antisymmetrizer identities on matrix and vectorial Lie (super)algebras"};
  app.require_subcommand(1);

  // span
  std::string span_algebra, span_format = "text";
  std::uint32_t span_kmax = 8;
  auto* span = app.add_subcommand("span", "scan which antisymmetrizers survive on an algebra");
  span->add_option("--algebra", span_algebra,
                   "matrix algebra: gl(m), gl(m|n), sl(m), sl(m|n), o(k), sp(2k), osp(m|2n), "
                   "pe(n), q(n), sq(n)")
      ->required();
  span->add_option("--kmax", span_kmax, "largest antisymmetrizer index");
  span->add_option("--format", span_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  // matrix-identity
  std::string mi_algebra;
  std::uint32_t mi_r = 2;
  auto* mi = app.add_subcommand("matrix-identity", "test X^r = 0 for the generic element");
  mi->add_option("--algebra", mi_algebra, "matrix algebra spec")->required();
  mi->add_option("--r", mi_r, "power")->required();

  // vect-critical
  std::string vc_algebra;
  std::uint32_t vc_degree = 2, vc_nmin = 2, vc_nmax = 6;
  bool vc_long = false;
  std::string vc_format = "text";
  auto* vc = app.add_subcommand("vect-critical",
                                "classify D^N on a vectorial algebra at a truncation degree");
  vc->add_option("--algebra", vc_algebra, "vectorial algebra: vect(n), svect(n), h(2n)")
      ->required();
  vc->add_option("--degree", vc_degree, "coefficient degree cap d");
  vc->add_option("--nmin", vc_nmin, "first N");
  vc->add_option("--nmax", vc_nmax, "last N");
  vc->add_flag("--long", vc_long, "allow long-running scans (vect(3) and larger)");
  vc->add_option("--format", vc_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  // subcritical
  std::string sc_file;
  auto* sc = app.add_subcommand(
      "subcritical", "evaluate the triple adjoint antisymmetrizer on vect(1) fields");
  sc->add_option("--fields", sc_file,
                 "file with four vect(1) fields (X1, X2, X3, Y), one per line; term grammar "
                 "coef*x^a*d/dx")
      ->required();

  // verify
  std::string vf_suite = "all";
  auto* vf = app.add_subcommand("verify", "run a named acceptance suite");
  {
    std::string names;
    for (const auto& s : suites()) names += std::string(names.empty() ? "" : ", ") + s.name;
    vf->add_option("--suite", vf_suite, "one of: " + names);
  }

  // bench
  std::string bn_algebra, bn_method;
  std::uint32_t bn_r = 6;
  auto* bn = app.add_subcommand("bench", "time the naive factorial sum against generic powers");
  bn->add_option("--algebra", bn_algebra, "matrix algebra spec")->required();
  bn->add_option("--r", bn_r, "power")->required();
  bn->add_option("--method", bn_method, "naive or generic")
      ->required()
      ->check(CLI::IsMember({"naive", "generic"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (span->parsed()) {
      auto spec = MatrixAlgebraSpec::parse(span_algebra);
      double t0 = now_ms();
      auto rep = span_scan(spec, span_kmax);
      double ms = now_ms() - t0;
      if (span_format == "json") {
        print_json(span_report_json(rep, Json{{"total_ms", ms}}));
      } else {
        std::printf("%s scanned to k = %u\n", spec.to_string().c_str(), rep.kmax);
        std::printf("  nonvanishing in-algebra: %s\n",
                    verify_detail::set_string(rep.nonvanishing).c_str());
        for (auto& [k, c] : rep.closure)
          std::printf("  a_%u: nonzero, %s\n", k, closure_name(c));
        if (rep.minimal_identity)
          std::printf("  least identically-zero power: %u\n", *rep.minimal_identity);
      }
      return 0;
    }
    if (mi->parsed()) {
      auto spec = MatrixAlgebraSpec::parse(mi_algebra);
      double t0 = now_ms();
      auto gp = antisymmetrize_generic(spec, mi_r);
      double ms = now_ms() - t0;
      bool zero = gp.power.is_zero();
      std::size_t terms = 0;
      for (std::uint32_t i = 0; i < gp.power.format().total(); ++i)
        for (std::uint32_t j = 0; j < gp.power.format().total(); ++j)
          terms += gp.power.at(i, j).term_count();
      print_json(matrix_identity_json(spec, mi_r, zero, terms, Json{{"total_ms", ms}}));
      return 0;
    }
    if (vc->parsed()) {
      auto spec = VectorialSpec::parse(vc_algebra, vc_degree);
      if (requires_long_run(spec, vc_nmax) && !vc_long) {
        std::fprintf(stderr,
                     "%s scans are not desk-scale; re-run with --long to compute anyway\n",
                     spec.to_string().c_str());
        return 2;
      }
      double t0 = now_ms();
      auto rep = critical_scan(spec, vc_nmin, vc_nmax);
      double ms = now_ms() - t0;
      if (vc_format == "json") {
        print_json(critical_report_json(rep, Json{{"total_ms", ms}}));
      } else {
        std::printf("%s at truncation degree %u\n", spec.to_string().c_str(), rep.degree);
        for (const auto& item : rep.items)
          std::printf("  D^%u: %s (order %d)\n", item.N, power_class_name(item.classification),
                      item.order);
      }
      return 0;
    }
    if (sc->parsed()) {
      std::ifstream in(sc_file);
      if (!in) {
        std::fprintf(stderr, "cannot open '%s'\n", sc_file.c_str());
        return 2;
      }
      SuperDomain dom(1, 0);
      std::vector<DiffOp> fields;
      std::string line;
      while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        fields.push_back(parse_field_line(dom, line));
      }
      if (fields.size() != 4) {
        std::fprintf(stderr, "need four fields (X1, X2, X3, Y); got %zu\n", fields.size());
        return 2;
      }
      auto res = subcritical_eval({fields[0], fields[1], fields[2]}, fields[3]);
      Json j;
      j["command"] = "subcritical";
      j["multiplier"] = res.multiplier.to_string();
      j["multiplier_terms"] = scalar_to_json(res.multiplier);
      j["matches_minus_two_wronskian_times_y"] = res.equals_multiplier_times_y;
      j["version"] = version;
      print_json(j);
      return res.equals_multiplier_times_y ? 0 : 1;
    }
    if (vf->parsed()) {
      auto results = run_suite(vf_suite);
      int failures = 0;
      for (const auto& r : results) {
        std::printf("%s Criterion %2d: %s (%.0f ms)\n", r.pass() ? "PASS" : "FAIL", r.id,
                    r.title.c_str(), r.ms);
        for (const auto& c : r.checks)
          std::printf("    %s %s%s%s\n", c.pass ? "ok  " : "FAIL", c.name.c_str(),
                      c.details.empty() ? "" : " -- ", c.details.c_str());
        if (!r.pass()) ++failures;
      }
      return failures ? 1 : 0;
    }
    if (bn->parsed()) {
      auto spec = MatrixAlgebraSpec::parse(bn_algebra);
      Json j;
      j["command"] = "bench";
      j["spec"] = spec.to_string();
      j["parameters"] = Json{{"r", bn_r}, {"method", bn_method}};
      if (bn_method == "naive") {
        auto st = verify_detail::bench_naive(spec, bn_r);
        j["results"] = Json{{"zero", st.zero},
                            {"naive_multiplications", st.naive_multiplications}};
        j["version"] = version;
        j["timing"] = Json{{"total_ms", st.ms}};
      } else {
        auto st = verify_detail::bench_generic(spec, bn_r);
        j["results"] = Json{{"zero", st.zero}, {"generic_terms", st.generic_terms}};
        j["version"] = version;
        j["timing"] = Json{{"total_ms", st.ms}};
      }
      print_json(j);
      return 0;
    }
  } catch (const parse_error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  } catch (const error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
