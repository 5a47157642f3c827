// Acceptance gate: nine end-to-end criteria over the finished toolkit, each
// reporting one [criterion N] PASS/FAIL line.  Criteria 1 and 5 compare
// against an external reference table that contains two internal
// inconsistencies (details at the assertions); the computed values are
// asserted both literally against that reference (failing honestly) and
// against the corrected values (passing), so the output documents exactly
// which cells disagree and why.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "latin_util.hpp"
#include "loops/classify.hpp"
#include "loops/constructions.hpp"
#include "loops/errors.hpp"
#include "loops/invariants.hpp"
#include "loops/loop_table.hpp"
#include "loops/search.hpp"

using namespace loops;
using nlohmann::json;

// Evaluates once, feeds both the criterion verdict and a doctest assertion.
#define ACC(cond)                              \
  do {                                         \
    bool acc_ok_ = static_cast<bool>(cond);    \
    ok &= acc_ok_;                             \
    CHECK_MESSAGE(acc_ok_, #cond);             \
  } while (0)

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("[criterion %d] %s — %s\n", criterion, pass ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
}

json run_tool(const std::string& args) {
  std::string cmd = std::string(LOOPTOOL_PATH) + " --json " + args +
                    " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe.get())) > 0)
    out.append(buf, got);
  return json::parse(out);
}

std::string catalog_tag(const LoopTable& q) {
  for (const auto& name : catalog_names())
    if (q.order() == 27 && are_isomorphic(q, make_loop(name)).isomorphic)
      return name;
  return "";
}

const std::vector<std::string>& b_names() {
  static const std::vector<std::string> n = {"B1", "B2", "B3", "B4", "B5",
                                             "B6", "B7", "B8", "B9", "B10"};
  return n;
}

}  // namespace

TEST_CASE("criterion 1: invariant table of B1..B10") {
  bool ok = true;
  auto t0 = std::chrono::steady_clock::now();
  json t = run_tool("table1");
  double secs = seconds_since(t0);

  // the reference table as printed: 13 rows x 10 columns
  const std::map<std::string, std::vector<long>> printed_numeric = {
      {"center_order", {3, 3, 3, 3, 3, 3, 3, 3, 1, 1}},
      {"exponent", {9, 9, 9, 9, 9, 9, 9, 9, 3, 3}},
      {"order3_count", {2, 14, 8, 2, 20, 14, 8, 2, 26, 26}},
      {"derived_order", {3, 3, 3, 3, 3, 3, 3, 3, 9, 9}},
      {"left_nucleus_order", {9, 9, 9, 9, 9, 9, 9, 9, 9, 9}},
      {"left_nucleus_exponent", {9, 3, 9, 9, 9, 3, 9, 9, 3, 3}},
      {"commuting_pairs",
       {459, 459, 459, 459, 405, 405, 405, 405, 153, 153}},
      {"right_mlt_order", {81, 81, 81, 81, 81, 81, 81, 81, 243, 243}},
      {"left_mlt_order",
       {243, 243, 243, 243, 243, 243, 243, 243, 139968, 139968}},
      {"mlt_order",
       {2187, 2187, 2187, 2187, 2187, 2187, 2187, 2187, 139968, 139968}},
      {"aut_order", {54, 18, 18, 27, 108, 36, 36, 54, 72, 144}},
  };
  const std::vector<std::string> printed_bruck = {"no",  "no",  "no",  "no",
                                                  "yes", "yes", "yes", "yes",
                                                  "no",  "no"};
  const std::vector<std::string> printed_assoc = {
      "B5", "B6", "B7", "B8", "B5", "B6", "B7", "B8", "Z3^3", "Z3^3"};

  REQUIRE(t["columns"].get<std::vector<std::string>>() == b_names());

  int match = 0, total = 0;
  std::string mismatches;
  auto tally = [&](const std::string& row, int col, bool same,
                   const std::string& got, const std::string& want) {
    ++total;
    if (same) {
      ++match;
    } else {
      mismatches += " [" + row + ", " + b_names()[col] + "]: computed " + got +
                    ", printed " + want + ";";
    }
  };
  for (const auto& [row, vals] : printed_numeric) {
    auto got = t[row].get<std::vector<long>>();
    REQUIRE(got.size() == 10);
    for (int i = 0; i < 10; ++i)
      tally(row, i, got[i] == vals[i], std::to_string(got[i]),
            std::to_string(vals[i]));
  }
  {
    auto got = t["right_bruck"].get<std::vector<std::string>>();
    for (int i = 0; i < 10; ++i)
      tally("right_bruck", i, got[i] == printed_bruck[i], got[i],
            printed_bruck[i]);
    auto gota = t["associated_right_bruck"].get<std::vector<std::string>>();
    for (int i = 0; i < 10; ++i)
      tally("associated_right_bruck", i, gota[i] == printed_assoc[i], gota[i],
            printed_assoc[i]);
  }
  ACC(total == 130);
  // literal comparison against the reference as printed: one cell disagrees.
  // The printed order3_count for B1 is 2; the computed value for the loop
  // the same reference column otherwise describes exactly (and for the loop
  // the catalog construction yields) is 20.  A value of 2 with 459 commuting
  // pairs occurs in this family only with automorphism group order 27, never
  // 54, so no loop realizes the printed column; 20 also restores the
  // stated property that (aut_order, order3_count) separates all columns.
  ACC(match == 130);

  // the corrected reference (that single cell read as 20) must match fully
  auto corrected = printed_numeric;
  corrected.at("order3_count")[0] = 20;
  bool corrected_match = true;
  for (const auto& [row, vals] : corrected)
    corrected_match &= t[row].get<std::vector<long>>() == vals;
  corrected_match &=
      t["right_bruck"].get<std::vector<std::string>>() == printed_bruck;
  corrected_match &=
      t["associated_right_bruck"].get<std::vector<std::string>>() ==
      printed_assoc;
  CHECK(corrected_match);
  CHECK_MESSAGE(secs < 60.0, "runtime budget");

  report(1, ok && secs < 60.0,
         "table of 13 rows x 10 columns, " + std::to_string(match) +
             "/130 cells equal the reference as printed;" + mismatches +
             std::string(corrected_match
                             ? " with that one cell corrected to 20 all 130 "
                               "cells match"
                             : " corrected table STILL mismatches") +
             " (" + std::to_string(secs) + " s)");
}

TEST_CASE("criterion 2: right multiplication groups of B1..B10") {
  bool ok = true;
  auto t0 = std::chrono::steady_clock::now();
  json t = run_tool("table2");
  double secs = seconds_since(t0);

  ACC(t["columns"].get<std::vector<std::string>>() == b_names());
  ACC(t["order"].get<std::vector<long>>() ==
      std::vector<long>({81, 81, 81, 81, 81, 81, 81, 81, 243, 243}));
  ACC(t["exponent"].get<std::vector<long>>() ==
      std::vector<long>({9, 9, 9, 9, 9, 9, 9, 9, 3, 3}));
  ACC(t["center_order"].get<std::vector<long>>() ==
      std::vector<long>({3, 3, 3, 3, 3, 3, 3, 3, 9, 9}));
  ACC(t["isomorphism_classes"].get<std::vector<std::vector<std::string>>>() ==
      std::vector<std::vector<std::string>>({{"B1", "B5"},
                                             {"B2", "B6"},
                                             {"B3", "B7"},
                                             {"B4", "B8"},
                                             {"B9", "B10"}}));
  ACC(secs < 120.0);
  report(2, ok,
         "orders/exponents/centers of the ten right multiplication groups "
         "and the five isomorphism pairs all match (" +
             std::to_string(secs) + " s)");
}

TEST_CASE("criterion 3: central extension searches for p = 3, 5, 7") {
  bool ok = true;
  std::string detail;
  struct Want {
    int p;
    std::size_t classes;
    int assoc;
    double budget;
  };
  for (const Want& w :
       {Want{3, 12, 4, 10.0}, Want{5, 14, 4, 300.0}, Want{7, 16, 4, 3600.0}}) {
    auto t0 = std::chrono::steady_clock::now();
    auto ext = central_extensions_in_variety(w.p);
    double secs = seconds_since(t0);
    ACC(ext.size() == w.classes);
    int assoc = 0;
    bool all_bol = true, never_cyclic = true;
    for (const auto& q : ext) {
      assoc += is_associative(q);
      all_bol &= is_right_bol(q);
      // the cyclic group of order p^3 needs an element of order p^3; these
      // extensions have exponent at most p^2
      never_cyclic &= exponent(q) < w.p * w.p * w.p;
    }
    ACC(assoc == w.assoc);
    ACC(all_bol);
    ACC(never_cyclic);
    ACC(secs < w.budget);
    if (w.p == 3) {
      std::multiset<std::string> na;
      for (const auto& q : ext)
        if (!is_associative(q)) na.insert(catalog_tag(q));
      ACC(na == std::multiset<std::string>({"B1", "B2", "B3", "B4", "B5",
                                            "B6", "B7", "B8"}));
    }
    detail += "p=" + std::to_string(w.p) + ": " + std::to_string(ext.size()) +
              " classes (" + std::to_string(assoc) + " groups) in " +
              std::to_string(secs) + " s; ";
  }
  report(3, ok, detail + "p=3 nonassociative classes are exactly B1..B8");
}

TEST_CASE("criterion 4: centrally nilpotent census for p = 3, 5, 7") {
  bool ok = true;
  std::string detail;
  for (int p : {3, 5, 7}) {
    auto ext = central_extensions_in_variety(p);
    bool all_nilpotent = true;
    for (const auto& q : ext)
      all_nilpotent &= central_nilpotence(q).nilpotent;
    ACC(all_nilpotent);
    // the cyclic group joins the census on top of the extension classes
    LoopTable cyc = cyclic_group(p * p * p);
    ACC(central_nilpotence(cyc).nilpotent);
    bool cyclic_absent = true;
    for (const auto& q : ext) cyclic_absent &= exponent(q) != p * p * p;
    ACC(cyclic_absent);
    std::size_t census = ext.size() + 1;
    std::size_t want = p == 3 ? 13 : p == 5 ? 15 : 17;
    ACC(census == want);
    detail += "p=" + std::to_string(p) + ": " + std::to_string(census) +
              " centrally nilpotent classes; ";
  }
  report(4, ok, detail + "(extension classes plus the cyclic group)");
}

TEST_CASE("criterion 5: trivial-center model searches") {
  bool ok = true;
  auto t0 = std::chrono::steady_clock::now();
  auto ea_models = model_search(trivial_center_spec(MCase::elementary_abelian),
                                /*jobs=*/2);
  double ea_secs = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  auto cy_models = model_search(trivial_center_spec(MCase::cyclic),
                                /*jobs=*/2);
  double cy_secs = seconds_since(t0);

  auto ea_classes = up_to_isomorphism(ea_models);
  auto cy_classes = up_to_isomorphism(cy_models);

  // Literal statement under test: elementary-abelian case reduces to 11
  // classes and the cyclic case to 12.  The computed totals are the other
  // way around (12 and 11): the elementary-abelian search finds 4 groups
  // and the cyclic search 3 (only two abelian groups contain C9), while
  // both find 8 nonassociative loops.  The raw model counts (177 and 87)
  // equal the reference's own reported raw counts for the respective
  // prescribed subloops, so the two totals were exchanged in prose.
  {
    bool literal_ea = ea_classes.size() == 11;
    bool literal_cy = cy_classes.size() == 12;
    ok &= literal_ea && literal_cy;
    CHECK_MESSAGE(literal_ea,
                  "elementary-abelian case: stated 11 classes, computed "
                      << ea_classes.size());
    CHECK_MESSAGE(literal_cy, "cyclic case: stated 12 classes, computed "
                                  << cy_classes.size());
  }

  // substance checks (these all hold)
  int ea_na = 0, cy_na = 0;
  std::set<std::string> merged;
  for (const auto& q : ea_classes)
    if (!is_associative(q)) ++ea_na, merged.insert(catalog_tag(q));
  for (const auto& q : cy_classes)
    if (!is_associative(q)) ++cy_na, merged.insert(catalog_tag(q));
  ACC(ea_na == 8);
  ACC(cy_na == 8);
  ACC(std::multiset<std::size_t>({ea_classes.size(), cy_classes.size()}) ==
      std::multiset<std::size_t>({11, 12}));
  ACC(merged == std::set<std::string>(b_names().begin(), b_names().end()));
  ACC(ea_secs < 2700.0);
  ACC(cy_secs < 2700.0);

  // machine-checked coverage argument: every trivial-center catalog loop is
  // reachable by one of the two prescribed-subloop searches
  auto rows = justify_trivial_center_coverage();
  bool coverage = rows.size() == 15;
  int trivial = 0;
  for (const auto& r : rows) {
    coverage &= r.ok;
    trivial += r.trivial_center;
  }
  coverage &= trivial == 2;
  ACC(coverage);

  report(5, ok,
         "computed " + std::to_string(ea_classes.size()) +
             " classes (elementary-abelian case, stated 11) and " +
             std::to_string(cy_classes.size()) +
             " (cyclic case, stated 12): the stated totals are exchanged; "
             "raw model counts 177/87 equal the reference's own per-case "
             "counts; substance holds: 8 nonassociative classes per case, "
             "merged nonassociative set = B1..B10, coverage argument "
             "verified (" +
             std::to_string(ea_secs) + " s + " + std::to_string(cy_secs) +
             " s)");
}

TEST_CASE("criterion 6: full census via the command line") {
  bool ok = true;
  json c = run_tool("classify-all");
  ACC(c["count"].get<int>() == 15);
  ACC(c["associative"].get<int>() == 5);
  ACC(c["abelian"].get<int>() == 3);
  ACC(c["centrally_nilpotent"].get<int>() == 13);
  ACC(c["trivial_center"].get<int>() == 2);
  std::multiset<std::string> labels;
  for (const auto& cls : c["classes"])
    labels.insert(cls["label"].get<std::string>());
  std::multiset<std::string> expect(catalog_names().begin(),
                                    catalog_names().end());
  ACC(labels == expect);
  report(6, ok,
         "15 isomorphism classes: 5 associative, 3 abelian, 13 centrally "
         "nilpotent, 2 with trivial center; labels cover the whole catalog");
}

TEST_CASE("criterion 7: isotopy classes among B1..B10") {
  bool ok = true;
  auto t0 = std::chrono::steady_clock::now();
  const std::set<std::pair<int, int>> paired = {
      {0, 4}, {1, 5}, {2, 6}, {3, 7}, {8, 9}};
  std::vector<LoopTable> b;
  for (const auto& n : b_names()) b.push_back(make_loop(n));
  int wrong = 0;
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      IsotopyResult r = are_isotopic(b[i], b[j]);
      bool expect = paired.count({i, j}) > 0;
      if (r.isotopic != expect) ++wrong;
      if (r.isotopic) {
        // verify the witness
        bool valid =
            are_isomorphic(principal_isotope(b[i], r.a, r.b), b[j]).isomorphic;
        if (!valid) ++wrong;
      }
    }
  double secs = seconds_since(t0);
  ACC(wrong == 0);
  ACC(secs < 600.0);
  report(7, ok,
         "exactly the five pairs (B1,B5),(B2,B6),(B3,B7),(B4,B8),(B9,B10) "
         "are isotopic, all 40 other unordered pairs are not, witnesses "
         "verified (" +
             std::to_string(secs) + " s)");
}

TEST_CASE("criterion 8: structural property suite over the catalog") {
  bool ok = true;
  for (const auto& name : catalog_names()) {
    LoopTable q = make_loop(name);
    CAPTURE(name);
    int n = q.order();

    // right inverse property: (x y) y^-1 = x
    bool rip = true;
    for (int x = 0; x < n && rip; ++x)
      for (int y = 0; y < n; ++y)
        if (q.mul(q.mul(x, y), inverse_of(q, y)) != x) {
          rip = false;
          break;
        }
    ACC(rip);

    // right power alternative: (x y^m) y^k = x y^(m+k) for m, k in -4..4
    bool rpa = true;
    for (int x = 0; x < n && rpa; ++x)
      for (int y = 0; y < n && rpa; ++y)
        for (int m = -4; m <= 4 && rpa; ++m)
          for (int k = -4; k <= 4; ++k)
            if (q.mul(q.mul(x, power(q, y, m)), power(q, y, k)) !=
                q.mul(x, power(q, y, m + k))) {
              rpa = false;
              break;
            }
    ACC(rpa);

    // trichotomy: associative, or centrally nilpotent of class 2, or
    // trivial center -- exactly one of the three
    Nilpotence nil = central_nilpotence(q);
    int z = (int)center(q).size();
    bool assoc = is_associative(q);
    int branches = (assoc ? 1 : 0) +
                   (!assoc && nil.nilpotent && nil.cls == 2 ? 1 : 0) +
                   (z == 1 ? 1 : 0);
    ACC(branches == 1);

    // every normal subloop of order 3 lies inside the center
    auto zset = center(q);
    for (const auto& h : all_normal_subloops(q))
      if (h.size() == 3) {
        bool central = true;
        for (Elt e : h)
          central &= std::find(zset.begin(), zset.end(), e) != zset.end();
        ACC(central);
      }

    // a normal subloop of order 9 exists
    bool has9 = false;
    for (const auto& h : all_normal_subloops(q)) has9 |= h.size() == 9;
    ACC(has9);

    // trivial center forces |Q'| = 9
    auto der = derived_subloop(q);
    if (z == 1) ACC(der.size() == 9);

    // Q' = Z(Q) as soon as either has order 3
    if (der.size() == 3 || z == 3) {
      auto a = der;
      auto b = zset;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      ACC(a == b);
    }

    // the commutant is a subloop
    ACC(is_subloop(q, commutant(q)));

    // |Q| and |Mlt_rho(Q)| have the same prime divisors
    unsigned long long rm = right_mlt(q).order();
    auto primes = [](unsigned long long v) {
      std::set<unsigned long long> p;
      for (unsigned long long d = 2; d * d <= v; ++d)
        while (v % d == 0) p.insert(d), v /= d;
      if (v > 1) p.insert(v);
      return p;
    };
    ACC(primes(rm) == primes((unsigned long long)n));
  }
  report(8, ok,
         "right inverse property, right power alternative (exponents -4..4), "
         "trichotomy, central order-3 normal subloops, order-9 normal "
         "subloops, trivial-center derived order, derived-equals-center, "
         "commutant subloop, and prime-set agreement all hold on the "
         "15-loop catalog");
}

TEST_CASE("criterion 9: oracle equivalence") {
  bool ok = true;
  auto t0 = std::chrono::steady_clock::now();

  // (a) isomorphism testing vs all-bijection testing on every loop of
  // order <= 6: full pairwise up to order 5, representative-scan at order 6
  // with every fast verdict cross-checked naively
  std::vector<LoopTable> small;
  for (int n = 1; n <= 5; ++n)
    testutil::enumerate_normalized_squares(
        n, [&](const LoopTable& q) { small.push_back(q); });
  bool small_ok = small.size() == 63;
  for (std::size_t i = 0; i < small.size() && small_ok; ++i)
    for (std::size_t j = i; j < small.size(); ++j)
      if (are_isomorphic(small[i], small[j]).isomorphic !=
          are_isomorphic_naive(small[i], small[j])) {
        small_ok = false;
        break;
      }
  ACC(small_ok);

  int order6 = 0, disagreements = 0;
  std::vector<LoopTable> reps;
  std::vector<std::unique_ptr<IsoTester>> testers;
  testutil::enumerate_normalized_squares(6, [&](const LoopTable& q) {
    ++order6;
    bool matched = false;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      bool fast = testers[i]->find(q).has_value();
      bool naive = are_isomorphic_naive(reps[i], q);
      if (fast != naive) ++disagreements;
      if (fast) {
        matched = true;
        break;
      }
    }
    if (!matched) {
      reps.push_back(q);
      testers.push_back(std::make_unique<IsoTester>(q));
    }
  });
  ACC(order6 == 9408);
  ACC(disagreements == 0);
  ACC(reps.size() == 109);  // the known number of loops of order 6

  // (b) right Bol detection vs the direct triple-loop oracle on 1000
  // pseudo-random latin squares of orders 5..8
  int squares = 0, bol_disagreements = 0, bol_hits = 0;
  for (int n = 5; n <= 8; ++n)
    for (std::uint32_t seed = 0; seed < 250; ++seed) {
      LoopTable q = testutil::random_normalized_square(
          n, seed * 2654435761u + (std::uint32_t)n);
      ++squares;
      bool direct = true;
      for (int x = 0; x < n && direct; ++x)
        for (int y = 0; y < n && direct; ++y)
          for (int z = 0; z < n; ++z)
            if (q.mul(q.mul(q.mul(x, y), z), y) !=
                q.mul(x, q.mul(q.mul(y, z), y))) {
              direct = false;
              break;
            }
      if (direct != is_right_bol(q)) ++bol_disagreements;
      if (direct != testutil::right_bol_by_translations(q))
        ++bol_disagreements;
      bol_hits += direct;
    }
  ACC(squares == 1000);
  ACC(bol_disagreements == 0);

  double secs = seconds_since(t0);
  report(9, ok,
         "isomorphism vs exhaustive bijections: agreement on all loops of "
         "order <= 6 (9471 squares, 109 classes at order 6); right Bol "
         "detection vs the direct triple-loop oracle: agreement on 1000 "
         "random latin squares of orders 5..8 (" +
             std::to_string(bol_hits) + " Bol hits, " + std::to_string(secs) +
             " s)");
}
