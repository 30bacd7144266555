#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ckzeta/abelian.hpp"
#include "ckzeta/arakelov.hpp"
#include "ckzeta/cuntz.hpp"
#include "ckzeta/errors.hpp"
#include "ckzeta/int_matrix.hpp"
#include "ckzeta/linalg.hpp"
#include "ckzeta/numeric.hpp"
#include "ckzeta/real.hpp"
#include "ckzeta/varieties.hpp"
#include "ckzeta/zeta.hpp"

using json = nlohmann::ordered_json;
using namespace ckzeta;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + out_path);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

json mat_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json group_json(const FgAbelianGroup& g) {
  json torsion = json::array();
  for (const auto& d : g.torsion) torsion.push_back(d.get_str());
  return json{{"group", g.to_string()},
              {"free_rank", g.free_rank},
              {"torsion", std::move(torsion)}};
}

json family_json(const TruncationFamily& fam) {
  json blocks = json::array();
  for (const auto& b : fam.blocks) {
    blocks.push_back(json{{"prime", b.prime},
                          {"point_count", b.point_count.get_str()},
                          {"matrix", mat_json(b.matrix)}});
  }
  json skipped = json::array();
  for (const auto& s : fam.skipped)
    skipped.push_back(json{{"prime", s.prime}, {"reason", s.reason}});
  return json{{"blocks", std::move(blocks)}, {"skipped", std::move(skipped)}};
}

json scan_rows_json(const ScanReport& report) {
  const std::vector<ScanRow>& rows = report.rows;
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back(json{{"prime", r.prime},
                       {"point_count", r.point_count.get_str()},
                       {"raw_det", r.raw_det.get_str()},
                       {"normalized", decimal_string(r.normalized, 30)},
                       {"zero_flag", r.zero_flag}});
  }
  return arr;
}

std::string scan_rows_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out << "prime,point_count,raw_det,normalized,zero_flag\n";
  for (const auto& r : rows) {
    out << r.prime << ',' << r.point_count.get_str() << ',' << r.raw_det.get_str()
        << ',' << decimal_string(r.normalized, 30) << ','
        << (r.zero_flag ? "true" : "false") << '\n';
  }
  return out.str();
}

int run(int argc, char** argv) {
  CLI::App app{"K-theory and zeta-function toolkit for Cuntz-Krieger algebras"};
  app.require_subcommand(1);

  std::string matrix_path;
  std::string curve_spec;
  std::string s_text = "1";
  std::string out_path;
  std::string format = "json";
  std::uint64_t p_value = 0;
  std::uint64_t bound = 0;
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::size_t ext_degree = 1;
  std::size_t order = 7;
  std::size_t window = 3;
  std::size_t threads = 1;
  long prec = 128;

  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("--matrix", matrix_path, "matrix file (text or JSON)")->required();
  snf->add_option("--out", out_path, "write the report here instead of stdout");

  auto* ktheory = app.add_subcommand("ktheory", "K-groups of the Cuntz-Krieger algebra of a matrix");
  ktheory->add_option("--matrix", matrix_path, "matrix file (text or JSON)")->required();
  ktheory->add_option("--out", out_path, "write the report here instead of stdout");

  auto* count = app.add_subcommand("count", "points of an elliptic curve over a finite field");
  count->add_option("--curve", curve_spec, "curve spec, e.g. ec:a=0,b=1")->required();
  count->add_option("--p", p_value, "prime of good reduction")->required();
  count->add_option("--ext", ext_degree, "field extension degree (default 1)");
  count->add_option("--budget", budget, "enumeration budget");
  count->add_option("--out", out_path, "write the report here instead of stdout");

  auto* zeta = app.add_subcommand("zeta", "local zeta data of an elliptic curve at a prime");
  zeta->add_option("--curve", curve_spec, "curve spec, e.g. ec:a=0,b=1")->required();
  zeta->add_option("--p", p_value, "prime of good reduction")->required();
  zeta->add_option("--order", order, "number of extension-field counts to report (default 7)");
  zeta->add_option("--out", out_path, "write the report here instead of stdout");

  auto* factors = app.add_subcommand("factors", "truncated Euler products up to a prime bound");
  factors->add_option("--curve", curve_spec, "curve spec, e.g. ec:a=0,b=1")->required();
  factors->add_option("--s", s_text, "rational evaluation point (default 1)");
  factors->add_option("--bound", bound, "largest prime to include")->required();
  factors->add_option("--prec", prec, "working precision in bits (default 128)");
  factors->add_option("--out", out_path, "write the report here instead of stdout");

  auto* family = app.add_subcommand("family", "block family of point-count matrices up to a bound");
  family->add_option("--curve", curve_spec, "curve spec, e.g. ec:a=0,b=1")->required();
  family->add_option("--bound", bound, "largest prime to include")->required();
  family->add_option("--threads", threads, "worker threads (default 1)");
  family->add_option("--out", out_path, "write the report here instead of stdout");

  auto* scan = app.add_subcommand("scan", "determinant scan and K-group stabilization report");
  scan->add_option("--curve", curve_spec, "curve spec, e.g. ec:a=0,b=1")->required();
  scan->add_option("--bound", bound, "largest prime to include")->required();
  scan->add_option("--prec", prec, "working precision in bits (default 128)");
  scan->add_option("--window", window, "stabilization window (default 3)");
  scan->add_option("--threads", threads, "worker threads (default 1)");
  scan->add_option("--format", format, "json or csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));
  scan->add_option("--out", out_path, "write the report here instead of stdout");

  auto* verify = app.add_subcommand("verify-t11", "compare the two presentations of the K0 group");
  verify->add_option("--matrix", matrix_path, "matrix file (text or JSON)")->required();
  verify->add_option("--out", out_path, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (snf->parsed()) {
    IntMatrix m = IntMatrix::parse(slurp(matrix_path));
    SmithDecomposition sd = smith_normal_form(m);
    json doc{{"matrix", mat_json(m)},
             {"D", mat_json(sd.D)},
             {"U", mat_json(sd.U)},
             {"V", mat_json(sd.V)}};
    emit(doc.dump(2), out_path);
    return 0;
  }

  if (ktheory->parsed()) {
    IntMatrix m = IntMatrix::parse(slurp(matrix_path));
    CKValidation v = validate_ck(m);
    KTheoryPair kt = k_theory(m);
    json doc{{"matrix", mat_json(m)},
             {"validation",
              json{{"nonnegative", v.nonnegative},
                   {"irreducible", v.irreducible},
                   {"permutation", v.permutation}}},
             {"k0", group_json(kt.k0)},
             {"k1", group_json(kt.k1)}};
    emit(doc.dump(2), out_path);
    return 0;
  }

  if (count->parsed()) {
    EllipticCurve e = EllipticCurve::parse(curve_spec);
    if (ext_degree == 0) throw std::invalid_argument("--ext must be at least 1");
    Int n_points, trace;
    if (ext_degree == 1) {
      PointCount pc = ec_count(e, p_value, budget);
      n_points = pc.count;
      trace = pc.trace;
    } else {
      n_points = ec_count_ext(e, p_value, static_cast<unsigned>(ext_degree), budget);
      Int q = int_pow(Int(p_value), static_cast<unsigned long>(ext_degree));
      trace = q + 1 - n_points;
    }
    json doc{{"curve", e.spec_string()},
             {"p", p_value},
             {"ext", ext_degree},
             {"count", n_points.get_str()},
             {"trace", trace.get_str()}};
    if (ext_degree == 1) doc["a_p"] = trace.get_str();
    emit(doc.dump(2), out_path);
    return 0;
  }

  if (zeta->parsed()) {
    EllipticCurve e = EllipticCurve::parse(curve_spec);
    if (order == 0) throw std::invalid_argument("--order must be at least 1");
    LocalZeta lz = local_factors(e, p_value);
    std::vector<Int> counts = lefschetz_counts(lz, order);
    Int a_p = -lz.P1.coeff(1);
    json p1 = json::array();
    for (int k = 0; k <= 2; ++k) p1.push_back(lz.P1.coeff(k).get_str());
    json ns = json::array();
    for (const auto& n : counts) ns.push_back(n.get_str());
    json doc{{"curve", e.spec_string()},
             {"p", p_value},
             {"a_p", a_p.get_str()},
             {"P1", std::move(p1)},
             {"N", std::move(ns)}};
    emit(doc.dump(2), out_path);
    return 0;
  }

  if (factors->parsed()) {
    EllipticCurve e = EllipticCurve::parse(curve_spec);
    Rat s = parse_rat(s_text);
    PartialProducts pp = hasse_weil_partial(e, s, bound, prec);
    json skipped = json::array();
    for (auto q : pp.skipped) skipped.push_back(q);
    json doc{{"curve", e.spec_string()},
             {"s", s.get_str()},
             {"bound", bound},
             {"precision_bits", static_cast<std::int64_t>(pp.precision)},
             {"zeta_partial", pp.zeta_partial.to_string(30)},
             {"l_partial", pp.l_partial.to_string(30)},
             {"skipped_primes", std::move(skipped)}};
    emit(doc.dump(2), out_path);
    return 0;
  }

  if (family->parsed()) {
    EllipticCurve e = EllipticCurve::parse(curve_spec);
    if (threads == 0) throw std::invalid_argument("--threads must be at least 1");
    TruncationFamily fam = build_family(e, bound, threads);
    json doc{{"curve", e.spec_string()}, {"bound", bound}, {"family", family_json(fam)}};
    emit(doc.dump(2), out_path);
    return 0;
  }

  if (scan->parsed()) {
    EllipticCurve e = EllipticCurve::parse(curve_spec);
    if (threads == 0) throw std::invalid_argument("--threads must be at least 1");
    if (window < 2) throw std::invalid_argument("--window must be at least 2");
    TruncationFamily fam = build_family(e, bound, static_cast<unsigned>(threads));
    ScanReport report = conjecture_scan(fam);

    if (format == "csv") {
      emit(scan_rows_csv(report.rows), out_path);
      return 0;
    }

    GroupSequence gs = k0_sequence(fam);
    json entries = json::array();
    for (const auto& ent : gs.entries()) {
      json entry{{"index", ent.index}};
      json g = group_json(ent.group);
      for (auto& [key, val] : g.items()) entry[key] = val;
      entries.push_back(std::move(entry));
    }
    json stab{{"window", window}, {"evaluated", false}, {"stable", false}, {"limit", nullptr}};
    if (gs.size() >= window) {
      StabilizationResult sr = limit_stabilization(gs, window);
      stab["evaluated"] = true;
      stab["stable"] = sr.stable;
      if (sr.stable) stab["limit"] = sr.limit->to_string();
    }

    EulerProductPart lp = euler_l_partial(e, Rat(1), bound, prec);
    json skipped = json::array();
    for (auto q : lp.skipped) skipped.push_back(q);
    json hw{{"s", "1"}};
    if (fam.blocks.empty()) {
      hw["zeta_partial"] = Real::of(Rat(1), prec < kMinProductPrecision
                                                ? kMinProductPrecision
                                                : static_cast<mpfr_prec_t>(prec))
                               .to_string(30);
      hw["zeta_pole"] = false;
    } else {
      hw["zeta_partial"] = nullptr;
      hw["zeta_pole"] = true;
    }
    hw["l_partial"] = lp.value.to_string(30);
    hw["skipped_primes"] = std::move(skipped);

    json doc{{"curve", e.spec_string()},
             {"bound", bound},
             {"precision_bits", static_cast<std::int64_t>(lp.precision)},
             {"family", family_json(fam)},
             {"k0_sequence", json{{"entries", std::move(entries)}, {"stabilization", std::move(stab)}}},
             {"scan", scan_rows_json(report)},
             {"hasse_weil", std::move(hw)}};
    emit(doc.dump(2), out_path);
    return 0;
  }

  if (verify->parsed()) {
    IntMatrix m = IntMatrix::parse(slurp(matrix_path));
    FgAbelianGroup pic = pic_presentation(m);
    KTheoryPair kt = k_theory(m);
    json doc{{"matrix", mat_json(m)},
             {"group", kt.k0.to_string()},
             {"k0", group_json(kt.k0)},
             {"pic", group_json(pic)},
             {"isomorphic", k0_matches_pic(m)}};
    emit(doc.dump(2), out_path);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ckzeta::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
