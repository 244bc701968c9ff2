#include "gtkey/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "gtkey/cache.hpp"
#include "gtkey/io.hpp"
#include "gtkey/kogan.hpp"
#include "gtkey/lattice.hpp"
#include "gtkey/polyops.hpp"
#include "gtkey/scan.hpp"
#include "gtkey/verify.hpp"

namespace gtkey {

namespace {

enum class Format { text, json, csv };

struct Options {
  std::string format = "text";
  std::string out;
  std::string cache;
  std::string lambda, mu, nu, sigma, word, cells;
  std::string method = "both";
  std::string object = "gt";
  std::string family, ranges;
  std::string suite = "all";
  std::string data;
  int n = 0;
  Entry k = 1;
  int degree = -1;
  bool list = false;
};

Format format_of(const Options& o) {
  if (o.format == "json") return Format::json;
  if (o.format == "csv") return Format::csv;
  return Format::text;
}

Partition need_lambda(const Options& o) {
  if (o.lambda.empty()) throw input_error("--lambda is required");
  return parse_partition(o.lambda);
}

Permutation need_sigma(const Options& o) {
  if (o.sigma.empty()) throw input_error("--sigma is required");
  return parse_permutation(o.sigma);
}

std::vector<EqualityCell> parse_cells(const std::string& text) {
  std::vector<EqualityCell> cells;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    const auto v = parse_entries(item);
    if (v.size() != 2) throw input_error("cell '" + item + "' must be i,j");
    cells.emplace_back(static_cast<int>(v[0]), static_cast<int>(v[1]));
  }
  return cells;
}

std::string cells_string(const KoganFace& f) {
  std::string s;
  for (const auto& [i, j] : f.cells) s += (s.empty() ? "" : ";") + std::to_string(i) + "," + std::to_string(j);
  return s.empty() ? "-" : s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void poly_csv(std::ostream& os, const MultiPoly& f) {
  os << "coeff";
  for (int i = 1; i <= f.nvars(); ++i) os << ",z" << i;
  os << '\n';
  for (const auto& [e, c] : f.terms()) {
    os << c.get_str();
    for (int x : e) os << ',' << x;
    os << '\n';
  }
}

// The object named by --object and the shape flags.
CountedObject object_from(const Options& o, const std::string& kind_name) {
  const ObjectKind kind = parse_object_kind(kind_name);
  const Partition lambda = need_lambda(o);
  switch (kind) {
    case ObjectKind::gt: return CountedObject::gt(lambda);
    case ObjectKind::skew: {
      const Partition mu = parse_partition(o.mu);
      return CountedObject::skew(lambda, mu, o.n > 0 ? o.n : static_cast<int>(std::max(lambda.size(), mu.size())));
    }
    case ObjectKind::gt_weight:
      if (o.nu.empty()) throw input_error("--nu (the weight) is required");
      return CountedObject::gt_weight(lambda, parse_weight(o.nu));
    case ObjectKind::skew_weight:
      if (o.nu.empty()) throw input_error("--nu (the weight) is required");
      return CountedObject::skew_weight(lambda, parse_partition(o.mu), parse_weight(o.nu));
    case ObjectKind::key_complex: return CountedObject::key_complex(lambda, need_sigma(o));
    case ObjectKind::kogan_face:
      return CountedObject::kogan_face(lambda, KoganFace::make(static_cast<int>(lambda.size()), parse_cells(o.cells)));
  }
  throw input_error("unsupported object");
}

// --- subcommands ------------------------------------------------------------

int cmd_key(const Options& o, Format fmt, std::ostream& os) {
  const Partition lambda = need_lambda(o);
  const Permutation sigma = need_sigma(o);
  if (o.method != "operators" && o.method != "faces" && o.method != "both")
    throw input_error("--method must be operators, faces or both");
  std::optional<MultiPoly> ops, faces;
  if (o.method != "faces") ops = key_via_operators(lambda, sigma);
  if (o.method != "operators") faces = key_via_faces(lambda, sigma);
  const MultiPoly& f = ops ? *ops : *faces;
  const bool both = ops && faces;
  const bool equal = !both || *ops == *faces;
  if (fmt == Format::json) {
    Json j{{"lambda", to_json(lambda)}, {"sigma", to_json(sigma)}, {"method", o.method}, {"poly", to_json(f)},
           {"string", f.to_string()},   {"terms", f.num_terms()},   {"value_at_ones", eval_ones(f).get_str()}};
    if (both) {
      j["equal"] = equal;
      if (!equal) j["faces_poly"] = to_json(*faces);
    }
    os << j.dump(2) << '\n';
  } else if (fmt == Format::csv) {
    poly_csv(os, f);
  } else {
    os << "kappa = " << f.to_string() << '\n';
    os << "terms: " << f.num_terms() << '\n';
    os << "value at ones: " << eval_ones(f).get_str() << '\n';
    if (both) {
      os << "methods agree: " << yes_no(equal) << '\n';
      if (!equal) os << "faces: " << faces->to_string() << '\n';
    }
  }
  return equal ? exit_ok : exit_violation;
}

int cmd_schur(const Options& o, Format fmt, std::ostream& os) {
  const Partition lambda = need_lambda(o);
  const bool skew = !o.mu.empty();
  const Partition mu = parse_partition(o.mu);
  const int n = o.n > 0 ? o.n : static_cast<int>(lambda.size());
  const MultiPoly f = skew ? skew_schur(lambda, mu, n) : schur(lambda, n);
  require_nonnegative_integral(f, "Schur polynomial");
  if (fmt == Format::json) {
    Json j{{"lambda", to_json(lambda)}};
    if (skew) j["mu"] = to_json(mu);
    j["n"] = n;
    j["poly"] = to_json(f);
    j["string"] = f.to_string();
    j["terms"] = f.num_terms();
    j["value_at_ones"] = eval_ones(f).get_str();
    os << j.dump(2) << '\n';
  } else if (fmt == Format::csv) {
    poly_csv(os, f);
  } else {
    os << (skew ? "s_lambda/mu = " : "s_lambda = ") << f.to_string() << '\n';
    os << "terms: " << f.num_terms() << '\n';
    os << "value at ones: " << eval_ones(f).get_str() << '\n';
  }
  return exit_ok;
}

void count_report(std::ostream& os, Format fmt, const CountedObject& obj, Entry k, const Integer& count,
                  const Json* points, const std::vector<std::string>* displays) {
  if (fmt == Format::json) {
    Json j{{"spec", to_json(obj)}, {"k", k}, {"count", count.get_str()}};
    if (points) j["points"] = *points;
    os << j.dump(2) << '\n';
  } else if (fmt == Format::csv) {
    if (points) {
      os << "index,rows\n";
      std::size_t i = 0;
      for (const auto& p : *points) os << i++ << ',' << csv_field(p.at("rows").dump()) << '\n';
    } else {
      os << "object,k,count\n" << csv_field(obj.label()) << ',' << k << ',' << count.get_str() << '\n';
    }
  } else {
    os << obj.label() << '\n' << "k: " << k << '\n' << "count: " << count.get_str() << '\n';
    if (displays)
      for (const auto& d : *displays) os << '\n' << d;
  }
}

int cmd_kostka(const Options& o, Format fmt, std::ostream& os) {
  if (o.k < 0) throw input_error("--k must be non-negative");
  // K_{lambda,mu} takes the weight from --mu; the skew form K_{lambda/mu,nu} from --nu.
  CountedObject obj;
  if (o.nu.empty()) {
    if (o.mu.empty()) throw input_error("--mu (the weight) is required");
    obj = CountedObject::gt_weight(need_lambda(o), parse_weight(o.mu));
  } else {
    obj = object_from(o, "skew_weight");
  }
  count_report(os, fmt, obj, o.k, obj.count(o.k), nullptr, nullptr);
  return exit_ok;
}

int cmd_points(const Options& o, Format fmt, std::ostream& os) {
  if (o.k < 0) throw input_error("--k must be non-negative");
  std::string kind = "gt";
  if (!o.sigma.empty())
    kind = "key_complex";
  else if (!o.cells.empty())
    kind = "kogan_face";
  else if (!o.mu.empty())
    kind = o.nu.empty() ? "skew" : "skew_weight";
  else if (!o.nu.empty())
    kind = "gt_weight";
  const CountedObject obj = object_from(o, kind);
  const Integer count = obj.count(o.k);
  if (!o.list) {
    count_report(os, fmt, obj, o.k, count, nullptr, nullptr);
    return exit_ok;
  }
  Json pts = Json::array();
  std::vector<std::string> displays;
  auto keep = [&](const auto& p) {
    pts.push_back(to_json(p));
    displays.push_back(to_display_string(p));
  };
  switch (obj.kind) {
    case ObjectKind::key_complex:
      for (const auto& p : complex_points(obj.lambda, obj.sigma, o.k)) keep(p);
      break;
    case ObjectKind::kogan_face:
      for (const auto& p : face_points(obj.lambda, obj.face, o.k)) keep(p);
      break;
    case ObjectKind::gt:
    case ObjectKind::gt_weight:
      for (const auto& p : enumerate_points(PolytopeSpec::triangular(obj.lambda, obj.kind == ObjectKind::gt_weight
                                                                                      ? std::optional(obj.weight)
                                                                                      : std::nullopt)
                                                .dilated(o.k)))
        keep(p);
      break;
    case ObjectKind::skew:
    case ObjectKind::skew_weight:
      for (const auto& p : enumerate_skew_points(PolytopeSpec::skew(obj.lambda, obj.mu, obj.n,
                                                                    obj.kind == ObjectKind::skew_weight
                                                                        ? std::optional(obj.weight)
                                                                        : std::nullopt)
                                                     .dilated(o.k)))
        keep(p);
      break;
  }
  if (Integer(static_cast<unsigned long>(pts.size())) != count)
    throw std::logic_error("listed points disagree with the count");
  count_report(os, fmt, obj, o.k, count, &pts, &displays);
  return exit_ok;
}

int cmd_faces(const Options& o, Format fmt, std::ostream& os) {
  if (o.n < 1) throw input_error("--n is required");
  const int n = o.n;
  std::vector<KoganFace> faces;
  Json filter = Json::object();
  if (!o.sigma.empty()) {
    const Permutation tau = parse_permutation(o.sigma);
    filter["type"] = to_json(tau);
    faces = enumerate_reduced_faces(n, tau);
  } else {
    faces = all_reduced_faces(n);
  }
  if (!o.word.empty()) {
    const Word w = parse_word(o.word);
    filter["word"] = to_json(w);
    if (!is_reduced(w, n)) {
      // Non-reduced words: scan every subset of cells.
      faces.clear();
      const auto cells = all_cells(n);
      for (std::uint32_t m = 0; m < (1u << cells.size()); ++m) {
        std::vector<EqualityCell> cs;
        for (std::size_t b = 0; b < cells.size(); ++b)
          if (m >> b & 1u) cs.push_back(cells[b]);
        KoganFace f = KoganFace::make(n, cs);
        if (face_word(f) == w) faces.push_back(std::move(f));
      }
      std::sort(faces.begin(), faces.end());
    } else {
      std::erase_if(faces, [&](const KoganFace& f) { return face_word(f) != w; });
    }
  }
  if (fmt == Format::json) {
    Json list = Json::array();
    for (const auto& f : faces) {
      const auto t = face_type(f);
      list.push_back({{"face", to_json(f)},
                      {"word", to_json(face_word(f))},
                      {"reduced", t.has_value()},
                      {"type", t ? to_json(*t) : Json(nullptr)},
                      {"dimension", face_dimension(f)}});
    }
    os << Json{{"n", n}, {"filter", filter}, {"count", faces.size()}, {"faces", list}}.dump(2) << '\n';
  } else if (fmt == Format::csv) {
    os << "cells,word,reduced,type,dimension\n";
    for (const auto& f : faces) {
      const auto t = face_type(f);
      os << csv_field(cells_string(f)) << ',' << csv_field(to_string(face_word(f))) << ',' << (t ? "true" : "false")
         << ',' << csv_field(t ? to_string(*t) : "") << ',' << face_dimension(f) << '\n';
    }
  } else {
    os << faces.size() << " face" << (faces.size() == 1 ? "" : "s") << '\n';
    for (const auto& f : faces) {
      const auto t = face_type(f);
      const Word w = face_word(f);
      os << "cells " << cells_string(f) << "  word " << (w.empty() ? "-" : to_string(w)) << "  "
         << (t ? "type " + to_string(*t) : std::string("not reduced")) << "  dim " << face_dimension(f) << '\n';
    }
  }
  return exit_ok;
}

int cmd_ehrhart(const Options& o, Format fmt, std::ostream& os, ResultCache* cache) {
  const CountedObject obj = object_from(o, o.object);
  EhrhartResult r;
  if (o.degree >= 0) {
    r = ehrhart_of(obj, o.degree);
  } else {
    r = cached_ehrhart(obj, cache);
  }
  if (fmt == Format::json) {
    os << to_json(r).dump(2) << '\n';
  } else if (fmt == Format::csv) {
    std::string coeffs;
    for (const auto& c : r.poly.coeff_strings()) coeffs += (coeffs.empty() ? "" : ";") + c;
    os << "object,degree_bound,valid,nonneg,empty,poly,coeffs\n"
       << csv_field(obj.label()) << ',' << r.degree_bound << ',' << std::boolalpha << r.valid << ',' << r.nonneg << ',' << r.empty << std::noboolalpha << ','
       << csv_field(r.poly.to_scaled_string()) << ',' << csv_field(coeffs) << '\n';
  } else {
    os << "object: " << obj.label() << '\n';
    os << "polynomial: " << r.poly.to_scaled_string() << '\n';
    os << "coefficients (k^0 first):";
    for (const auto& c : r.poly.coeff_strings()) os << ' ' << c;
    os << '\n' << "degree bound: " << r.degree_bound << '\n' << "samples:";
    for (const auto& [k, c] : r.samples) os << ' ' << k << ':' << c.get_str();
    os << '\n';
    for (const auto& v : r.verify_points)
      os << "verify k=" << v.k << ": count " << v.count.get_str() << ", predicted " << v.predicted.get_str() << ", "
         << (v.matched ? "match" : "MISMATCH") << '\n';
    if (r.empty) os << "empty: every dilate with k >= 1 has no points\n";
    const auto neg = r.poly.negative_indices();
    os << "non-negative: " << yes_no(r.nonneg);
    if (!neg.empty()) {
      os << " (negative at k^";
      for (std::size_t i = 0; i < neg.size(); ++i) os << (i ? ", k^" : "") << neg[i];
      os << ')';
    }
    os << '\n' << "valid: " << yes_no(r.valid) << '\n';
  }
  return r.valid ? exit_ok : exit_violation;
}

int cmd_scan(const Options& o, Format fmt, std::ostream& os, ResultCache* cache) {
  if (o.family.empty()) throw input_error("--family is required");
  const ScanFamily fam = parse_scan_family(o.family);
  const ScanReport rep = scan(fam, parse_ranges(o.ranges), cache);
  if (fmt == Format::json) {
    Json results = Json::array();
    for (const auto& r : rep.results)
      results.push_back({{"object", to_json(r.object)},
                         {"coeffs", r.poly.coeff_strings()},
                         {"scaled", r.poly.to_scaled_string()},
                         {"nonneg", r.nonneg},
                         {"valid", r.valid},
                         {"empty", r.empty}});
    os << Json{{"family", to_string(fam)},
               {"ranges", rep.ranges},
               {"status", to_string(rep.status())},
               {"objects", rep.results.size()},
               {"violations", rep.violations},
               {"failures", rep.failures},
               {"results", results}}
              .dump(2)
       << '\n';
  } else if (fmt == Format::csv) {
    os << "family,object,poly,coeffs,nonneg,valid,empty\n";
    for (const auto& r : rep.results) {
      std::string coeffs;
      for (const auto& c : r.poly.coeff_strings()) coeffs += (coeffs.empty() ? "" : ";") + c;
      os << to_string(fam) << ',' << csv_field(r.object.label()) << ',' << csv_field(r.poly.to_scaled_string()) << ','
         << csv_field(coeffs) << ',' << std::boolalpha << r.nonneg << ',' << r.valid << ',' << r.empty << std::noboolalpha << '\n';
    }
  } else {
    os << "family: " << to_string(fam) << '\n' << "ranges:";
    for (const auto& [k, v] : rep.ranges) os << ' ' << k << '=' << v;
    os << '\n' << "objects: " << rep.results.size() << '\n';
    os << "violations: " << rep.violations << '\n' << "verification failures: " << rep.failures << '\n';
    for (const auto& r : rep.results)
      if (!r.valid || !r.nonneg)
        os << (r.valid ? "VIOLATION " : "FAILURE ") << r.object.label() << ": " << r.poly.to_scaled_string() << '\n';
    os << "status: " << to_string(rep.status()) << '\n';
  }
  return rep.status() == ScanStatus::ok ? exit_ok : exit_violation;
}

int cmd_verify(const Options& o, Format fmt, std::ostream& os) {
  const std::string dir = o.data.empty() ? default_data_dir() : o.data;
  const auto checks = run_suite(o.suite, dir);
  int passed = 0;
  for (const auto& c : checks) passed += c.passed;
  const int failed = static_cast<int>(checks.size()) - passed;
  if (fmt == Format::json) {
    Json list = Json::array();
    for (const auto& c : checks)
      list.push_back({{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    os << Json{{"suite", o.suite}, {"passed", passed}, {"failed", failed}, {"checks", list}}.dump(2) << '\n';
  } else if (fmt == Format::csv) {
    os << "suite,check,status,detail\n";
    for (const auto& c : checks)
      os << c.suite << ',' << csv_field(c.name) << ',' << (c.passed ? "pass" : "fail") << ',' << csv_field(c.detail)
         << '\n';
  } else {
    for (const auto& c : checks)
      os << (c.passed ? "PASS " : "FAIL ") << c.suite << ": " << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]")
         << '\n';
    os << passed << " passed, " << failed << " failed\n";
  }
  return failed ? exit_violation : exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Key polynomials, Gelfand-Tsetlin polytopes and their Ehrhart polynomials", "gtkey"};
  app.require_subcommand(1, 1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", o.out, "Write the report to this file");
    sub->add_option("--cache", o.cache, "JSON-lines cache of sampled counts (GTKEY_CACHE overrides)");
  };
  auto shape = [&](CLI::App* sub) {
    sub->add_option("--lambda", o.lambda, "Partition, e.g. 2,1,0,0");
    sub->add_option("--mu", o.mu, "Inner partition (skew) or weight (kostka)");
    sub->add_option("--nu", o.nu, "Weight vector");
    sub->add_option("--n", o.n, "Number of letters / rows");
  };

  auto* key = app.add_subcommand("key", "Key polynomial kappa_{lambda,sigma}");
  common(key);
  key->add_option("--lambda", o.lambda, "Partition with n parts")->required();
  key->add_option("--sigma", o.sigma, "Permutation, e.g. [2,4,3,1]")->required();
  key->add_option("--method", o.method, "operators, faces or both")
      ->check(CLI::IsMember({"operators", "faces", "both"}));

  auto* schur_cmd = app.add_subcommand("schur", "Schur or skew Schur polynomial");
  common(schur_cmd);
  shape(schur_cmd);

  auto* kostka_cmd = app.add_subcommand("kostka", "Kostka number K_{lambda,mu} or skew K_{lambda/mu,nu}");
  common(kostka_cmd);
  shape(kostka_cmd);
  kostka_cmd->add_option("--k", o.k, "Dilation factor");

  auto* faces = app.add_subcommand("faces", "Reduced Kogan faces");
  common(faces);
  faces->add_option("--n", o.n, "Size of the pattern")->required();
  faces->add_option("--sigma", o.sigma, "Only faces of this type");
  faces->add_option("--word", o.word, "Only faces with this word");

  auto* points = app.add_subcommand("points", "Count or list lattice points");
  common(points);
  shape(points);
  points->add_option("--sigma", o.sigma, "Points of the key complex GT(lambda, sigma)");
  points->add_option("--cells", o.cells, "Points of the Kogan face with these cells, e.g. 1,1;3,2");
  points->add_option("--k", o.k, "Dilation factor");
  points->add_flag("--list", o.list, "List the points");

  auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial by interpolation");
  common(ehrhart);
  shape(ehrhart);
  ehrhart->add_option("--object", o.object, "gt, skew, gt_weight, skew_weight, key_complex or kogan_face");
  ehrhart->add_option("--sigma", o.sigma, "Permutation for key_complex");
  ehrhart->add_option("--cells", o.cells, "Cells for kogan_face, e.g. 1,1;3,2");
  ehrhart->add_option("--degree", o.degree, "Override the degree bound");

  auto* scan_cmd = app.add_subcommand("scan", "Non-negativity scan over a family");
  common(scan_cmd);
  scan_cmd->add_option("--family", o.family, "skew_gt, skew_kostka, stretched_kostka or key_complex")->required();
  scan_cmd->add_option("--ranges", o.ranges, "key=value;key=value");

  auto* verify = app.add_subcommand("verify", "Run a regression suite against the table fixtures");
  common(verify);
  verify->add_option("--suite", o.suite, "table1, table3, example-gtkey, weyl, determinant or all");
  verify->add_option("--data", o.data, "Fixture directory");

  std::vector<std::string> argv_store{"gtkey"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  std::ostringstream report;
  int code = exit_ok;
  try {
    const Format fmt = format_of(o);
    std::string cache_path = o.cache;
    if (const char* env = std::getenv("GTKEY_CACHE"); env && *env) cache_path = env;
    std::unique_ptr<ResultCache> cache;
    if (!cache_path.empty()) cache = std::make_unique<ResultCache>(cache_path);

    if (key->parsed())
      code = cmd_key(o, fmt, report);
    else if (schur_cmd->parsed())
      code = cmd_schur(o, fmt, report);
    else if (kostka_cmd->parsed())
      code = cmd_kostka(o, fmt, report);
    else if (faces->parsed())
      code = cmd_faces(o, fmt, report);
    else if (points->parsed())
      code = cmd_points(o, fmt, report);
    else if (ehrhart->parsed())
      code = cmd_ehrhart(o, fmt, report, cache.get());
    else if (scan_cmd->parsed())
      code = cmd_scan(o, fmt, report, cache.get());
    else if (verify->parsed())
      code = cmd_verify(o, fmt, report);
  } catch (const input_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::logic_error& e) {
    err << "violation: " << e.what() << '\n';
    return exit_violation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  if (o.out.empty()) {
    out << report.str();
  } else {
    std::ofstream f(o.out);
    if (!f) {
      err << "error: cannot write " << o.out << '\n';
      return exit_usage;
    }
    f << report.str();
  }
  return code;
}

}  // namespace gtkey
