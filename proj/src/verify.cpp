#include "gtkey/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>

#include "gtkey/ehrhart.hpp"
#include "gtkey/io.hpp"
#include "gtkey/kogan.hpp"
#include "gtkey/lattice.hpp"
#include "gtkey/polyops.hpp"

namespace gtkey {

std::string default_data_dir() {
  if (const char* env = std::getenv("GTKEY_DATA")) return env;
  return GTKEY_DATA_DIR;
}

std::vector<std::string> suite_names() { return {"table1", "table3", "example-gtkey", "weyl", "determinant"}; }

namespace {

Json load(const std::string& dir, const std::string& file) {
  std::ifstream in(dir + "/" + file);
  if (!in) throw input_error("cannot open fixture " + dir + "/" + file);
  return Json::parse(in);
}

void add(std::vector<Check>& out, const std::string& suite, std::string name, bool ok, std::string detail = "") {
  out.push_back({suite, std::move(name), ok, std::move(detail)});
}

std::vector<Check> table1(const std::string& dir) {
  std::vector<Check> out;
  const Json data = load(dir, "table1.json");
  std::map<std::vector<std::string>, std::vector<std::string>> groups;
  for (const auto& row : data.at("rows")) {
    const Partition lambda = parse_partition(row.at("lambda").get<std::string>());
    const Partition mu = parse_partition(row.at("mu").get<std::string>());
    const int n = row.at("n").get<int>();
    const auto expected = row.at("coeffs").get<std::vector<std::string>>();
    const EhrhartResult r = ehrhart_of(CountedObject::skew(lambda, mu, n));
    const std::string name = to_string(lambda) + "/" + (mu.empty() ? "-" : to_string(mu));
    add(out, "table1", name, r.valid && r.poly.coeff_strings() == expected, r.poly.to_scaled_string());
    groups[expected].push_back(name);
  }
  for (const auto& [coeffs, names] : groups) {
    std::string joined;
    for (const auto& s : names) joined += (joined.empty() ? "" : " = ") + s;
    add(out, "table1", "coincidence " + joined, true, "shapes sharing this polynomial: " + std::to_string(names.size()));
  }
  return out;
}

UniPoly abk_at(const MultiPoly& abk, int a, int b) {
  std::vector<Rational> c;
  for (const auto& [e, v] : abk.terms()) {
    Rational t = v;
    for (int i = 0; i < e[0]; ++i) t *= a;
    for (int i = 0; i < e[1]; ++i) t *= b;
    const auto d = static_cast<std::size_t>(e[2]);
    if (c.size() <= d) c.resize(d + 1);
    c[d] += t;
  }
  return UniPoly(std::move(c));
}

std::vector<Check> table23(const std::string& dir) {
  std::vector<Check> out;
  const Json data = load(dir, "table23.json");
  for (const auto& row : data.at("rows")) {
    const std::string label = row.at("label").get<std::string>();
    const Permutation sigma = parse_permutation(row.at("sigma").get<std::string>());
    const std::string tag = label + " (sigma " + to_string(sigma) + ")";
    int key_ok = 0, key_total = 0;
    std::string key_fail;
    for (const auto& s : row.at("key_samples")) {
      const int a = s.at("a").get<int>(), b = s.at("b").get<int>();
      const Partition lambda({a + b, a, 0});
      const MultiPoly expected = poly_from_json(s.at("poly"), 3);
      const MultiPoly ops = key_via_operators(lambda, sigma);
      const MultiPoly faces = key_via_faces(lambda, sigma);
      ++key_total;
      if (ops == expected && faces == expected)
        ++key_ok;
      else if (key_fail.empty())
        key_fail = " first mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b);
    }
    add(out, "table3", "key " + tag, key_ok == key_total,
        std::to_string(key_ok) + "/" + std::to_string(key_total) + " samples" + key_fail);

    const MultiPoly abk = poly_from_json(row.at("ehrhart_abk"), 3);
    int e_ok = 0, e_total = 0;
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) {
        const EhrhartResult r = ehrhart_of(CountedObject::key_complex(Partition({a + b, a, 0}), sigma));
        ++e_total;
        if (r.valid && r.poly == abk_at(abk, a, b)) ++e_ok;
      }
    add(out, "table3", "ehrhart " + tag, e_ok == e_total,
        row.at("ehrhart").get<std::string>() + ", " + std::to_string(e_ok) + "/" + std::to_string(e_total) + " samples");

    const MultiPoly fit = fit_key_complex_abk(sigma);
    add(out, "table3", "fit in (a,b,k) " + tag, fit == abk && fit.has_nonnegative_coefficients(),
        fit.to_string({"a", "b", "k"}));

    if (sigma == longest_element(3)) {
      bool ok = true;
      for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) ok = ok && ehrhart_gt_product(Partition({a + b, a, 0})) == abk_at(abk, a, b);
      add(out, "table3", "product formula " + tag, ok, "prod (k(l_i-l_j)+j-i)/(j-i)");
    }
  }
  return out;
}

std::vector<Entry> top_down(const GTPattern& p) {
  std::vector<Entry> v;
  for (auto r = p.rows().rbegin(); r != p.rows().rend(); ++r) v.insert(v.end(), r->begin(), r->end());
  return v;
}

std::vector<Check> example_gtkey(const std::string& dir) {
  std::vector<Check> out;
  const std::string s = "example-gtkey";
  const Json data = load(dir, "example_gtkey.json");
  const Partition lambda = parse_partition(data.at("lambda").get<std::string>());
  const Permutation sigma = parse_permutation(data.at("sigma").get<std::string>());
  const int n = static_cast<int>(lambda.size());
  const MultiPoly expected = poly_from_json(data.at("key"), n);

  const MultiPoly ops = key_via_operators(lambda, sigma), faces = key_via_faces(lambda, sigma);
  add(out, s, "operators", ops == expected, std::to_string(ops.num_terms()) + " terms");
  add(out, s, "faces", faces == expected, std::to_string(faces.num_terms()) + " terms");

  const Permutation type = parse_permutation(data.at("type").get<std::string>());
  add(out, s, "w0 sigma", longest_times(sigma) == type, to_string(longest_times(sigma)));

  std::map<std::string, KoganFace> named;
  for (const auto& [name, cells] : data.at("faces").items()) {
    std::vector<EqualityCell> cs;
    for (const auto& c : cells) cs.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
    named.emplace(name, KoganFace::make(n, cs));
  }
  std::set<KoganFace> want;
  for (const auto& [name, f] : named) want.insert(f);
  const auto found = enumerate_reduced_faces(n, type);
  add(out, s, "three faces A B C", std::set<KoganFace>(found.begin(), found.end()) == want,
      std::to_string(found.size()) + " faces");
  const Word word = parse_word(data.at("word").get<std::string>());
  bool words = true;
  for (const auto& f : found) words = words && face_word(f) == word;
  add(out, s, "common word " + to_string(word), words && !found.empty());

  const auto pts = complex_points(lambda, sigma, 1);
  std::set<std::vector<Entry>> got;
  for (const auto& p : pts) got.insert(top_down(p));
  std::set<std::vector<Entry>> listed;
  bool monomials = true, membership = true;
  for (const auto& p : data.at("points")) {
    std::vector<Entry> flat;
    for (const auto& r : p.at("rows_top_down"))
      for (const auto& x : r) flat.push_back(x.get<Entry>());
    listed.insert(flat);
    std::vector<std::vector<Entry>> rows;
    for (auto r = p.at("rows_top_down").rbegin(); r != p.at("rows_top_down").rend(); ++r)
      rows.push_back(r->get<std::vector<Entry>>());
    const GTPattern g(rows);
    std::vector<Entry> exp = p.at("exp").get<std::vector<Entry>>();
    monomials = monomials && weight(g).vec() == exp;
    std::string member;
    for (const auto& [name, f] : named) {
      bool in = true;
      for (const auto& [i, j] : f.cells) in = in && g.at(i, j) == g.at(i + 1, j);
      if (in) member += name;
    }
    const std::string listed_faces = p.at("faces").get<std::string>();
    const std::string printed = p.value("printed_faces", listed_faces);
    membership = membership && member == listed_faces &&
                 std::all_of(printed.begin(), printed.end(), [&](char c) { return member.find(c) != std::string::npos; });
  }
  add(out, s, "nine lattice points", got == listed && pts.size() == 9, std::to_string(pts.size()) + " points");
  add(out, s, "displayed monomials", monomials);
  add(out, s, "face membership", membership);
  return out;
}

std::vector<Check> weyl() {
  std::vector<Check> out;
  int total = 0, ok = 0;
  std::string fail;
  for (int n = 1; n <= 4; ++n)
    for (const Partition& lambda : partitions_bounded(static_cast<std::size_t>(n), 4)) {
      ++total;
      const Integer ones = eval_ones(schur(lambda, n));
      const Integer pts = count_points(PolytopeSpec::triangular(lambda));
      const Rational prod = ehrhart_gt_product(lambda)(Rational(1));
      if (ones == pts && Rational(pts) == prod)
        ++ok;
      else if (fail.empty())
        fail = " first failure " + to_string(lambda);
    }
  add(out, "weyl", "parts <= 4, n <= 4", ok == total, std::to_string(ok) + "/" + std::to_string(total) + fail);
  return out;
}

std::vector<Check> determinant() {
  std::vector<Check> out;
  const Permutation p231({2, 3, 1});
  for (const Partition& lambda : {Partition({2, 1, 0}), Partition({3, 1, 0}), Partition({3, 2, 0})}) {
    // Equal polynomials (e.g. k+1 twice at lambda = (2,1,0)) share flags, so
    // ask for some assignment of pairwise distinct matching flags.
    std::vector<std::vector<std::vector<int>>> options;
    bool all = true;
    std::string detail;
    for (const Permutation& sigma : all_permutations(3)) {
      if (!avoids_pattern(sigma, p231)) continue;
      options.push_back(flag_matches(lambda, sigma));
      all = all && !options.back().empty();
      detail += to_string(sigma) + ":";
      for (const auto& b : options.back()) {
        for (int x : b) detail += std::to_string(x);
        detail += '/';
      }
      if (options.back().empty()) detail += "none";
      detail += ' ';
    }
    std::set<std::vector<int>> used;
    auto assign = [&](auto&& self, std::size_t i) -> bool {
      if (i == options.size()) return true;
      for (const auto& b : options[i]) {
        if (used.count(b)) continue;
        used.insert(b);
        if (self(self, i + 1)) return true;
        used.erase(b);
      }
      return false;
    };
    add(out, "determinant", "flags for lambda " + to_string(lambda), all && assign(assign, 0), detail);
  }
  for (int n = 1; n <= 6; ++n) {
    const auto count = flag_sequences(n).size();
    add(out, "determinant", "flag count n=" + std::to_string(n), Integer(static_cast<unsigned long>(count)) == catalan(static_cast<unsigned>(n)),
        std::to_string(count));
  }
  return out;
}

}  // namespace

std::vector<Check> run_suite(const std::string& name, const std::string& dir) {
  if (name == "all") {
    std::vector<Check> out;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s, dir);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (name == "table1") return table1(dir);
  if (name == "table3") return table23(dir);
  if (name == "example-gtkey") return example_gtkey(dir);
  if (name == "weyl") return weyl();
  if (name == "determinant") return determinant();
  throw input_error("unknown suite '" + name + "'");
}

}  // namespace gtkey
