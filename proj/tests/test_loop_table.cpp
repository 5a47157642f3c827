#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "doctest.h"
#include "latin_util.hpp"
#include "loops/constructions.hpp"
#include "loops/errors.hpp"
#include "loops/loop_table.hpp"

using namespace loops;
using testutil::code_of;

namespace {

// The catalog loop used as a general-purpose nonassociative fixture.
LoopTable b1() { return make_loop("B1"); }

// A normalized latin square of order 5 that is neither right nor left Bol.
LoopTable non_bol5() {
  return LoopTable::validate_flat(5, {0, 1, 2, 3, 4,  //
                                      1, 0, 4, 2, 3,  //
                                      2, 4, 3, 1, 0,  //
                                      3, 2, 0, 4, 1,  //
                                      4, 3, 1, 0, 2});
}

std::map<int, int> spectrum_histogram(const LoopTable& q) {
  std::map<int, int> h;
  for (int o : order_spectrum(q)) ++h[o];
  return h;
}

}  // namespace

TEST_CASE("validation accepts the catalog and rejects malformed tables") {
  for (const auto& name : catalog_names()) {
    LoopTable q = make_loop(name);
    CHECK(q.order() == 27);
  }

  // entry out of range (checked before anything else)
  CHECK(code_of([] {
          LoopTable::validate_flat(3, {0, 1, 2, 1, 99, 0, 2, 0, 1});
        }) == errc::bad_entry);
  // wrong number of entries
  CHECK(code_of([] { LoopTable::validate_flat(3, {0, 1, 2}); }) ==
        errc::bad_entry);
  // repeated value in a row
  CHECK(code_of([] {
          LoopTable::validate_flat(3, {0, 1, 2, 1, 1, 2, 2, 0, 1});
        }) == errc::not_latin);
  // rows are permutations but column 0 repeats a value
  CHECK(code_of([] {
          LoopTable::validate_flat(3, {0, 1, 2, 1, 2, 0, 1, 0, 2});
        }) == errc::not_latin);
  // a latin square whose row 0 is the identity but column 0 is not
  CHECK(code_of([] {
          LoopTable::validate_flat(3, {0, 1, 2, 2, 0, 1, 1, 2, 0});
        }) == errc::no_identity);
  // empty and ragged input through the row-based entry point
  CHECK(code_of([] { LoopTable::validate({}); }) == errc::bad_entry);
  CHECK(code_of([] {
          LoopTable::validate({{0, 1}, {1}});
        }) == errc::bad_entry);
}

TEST_CASE("division tables invert multiplication") {
  for (const auto& name : {"Z27", "Heis3", "B1", "B9"}) {
    LoopTable q = make_loop(name);
    int n = q.order();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        CHECK(q.ldiv(x, q.mul(x, y)) == y);   // x \ (x y) = y
        CHECK(q.mul(x, q.ldiv(x, y)) == y);   // x (x \ y) = y
        CHECK(q.rdiv(q.mul(x, y), y) == x);   // (x y) / y = x
        CHECK(q.mul(q.rdiv(x, y), y) == x);   // (x / y) y = x
      }
  }
}

TEST_CASE("identity checks by exhaustive definition agree with known examples") {
  // Groups satisfy everything; the B loops are right Bol only.
  for (const auto& name : catalog_names()) {
    LoopTable q = make_loop(name);
    bool group = name[0] != 'B';
    CHECK(is_right_bol(q));
    CHECK(is_associative(q) == group);
    CHECK(is_left_bol(q) == group);
    CHECK(is_moufang(q) == group);
  }
  CHECK(is_commutative(make_loop("Z27")));
  CHECK(is_commutative(make_loop("Z3^3")));
  CHECK_FALSE(is_commutative(make_loop("Heis3")));
  CHECK_FALSE(is_commutative(b1()));

  LoopTable q5 = non_bol5();
  CHECK_FALSE(is_right_bol(q5));
  CHECK_FALSE(is_left_bol(q5));
}

TEST_CASE("right Bol detection matches the translation-composition oracle") {
  // on the catalog (all true) ...
  for (const auto& name : catalog_names()) {
    LoopTable q = make_loop(name);
    CHECK(testutil::right_bol_by_translations(q) == is_right_bol(q));
  }
  // ... on a frozen negative ...
  CHECK_FALSE(testutil::right_bol_by_translations(non_bol5()));
  // ... and on pseudo-random squares of orders 5..8.
  int bol_seen = 0;
  for (int n = 5; n <= 8; ++n)
    for (std::uint32_t seed = 0; seed < 50; ++seed) {
      LoopTable q = testutil::random_normalized_square(n, seed * 7919u + n);
      bool direct = is_right_bol(q);
      CHECK(testutil::right_bol_by_translations(q) == direct);
      bol_seen += direct;
    }
  // deterministic given the seeds; the hits are small orders (mostly
  // order 5, where a sizable fraction of normalized squares is the
  // cyclic group)
  CHECK(bol_seen == 13);
}

TEST_CASE("opposite mirrors the table and swaps the Bol identities") {
  LoopTable q = b1();
  LoopTable o = opposite(q);
  for (int x = 0; x < 27; ++x)
    for (int y = 0; y < 27; ++y) CHECK(o.mul(x, y) == q.mul(y, x));
  CHECK(opposite(o) == q);
  CHECK(is_left_bol(o));
  CHECK_FALSE(is_right_bol(o));  // B1 is not Moufang
  CHECK(opposite(make_loop("Z27")) == make_loop("Z27"));
}

TEST_CASE("relabel conjugates the table and validates its input") {
  LoopTable q = make_loop("Z9xZ3");
  std::vector<int> sigma(27);
  for (int i = 0; i < 27; ++i) sigma[i] = i;
  std::swap(sigma[3], sigma[17]);
  std::swap(sigma[5], sigma[11]);
  LoopTable r = relabel(q, sigma);
  for (int x = 0; x < 27; ++x)
    for (int y = 0; y < 27; ++y)
      CHECK(r.mul(sigma[x], sigma[y]) == sigma[q.mul(x, y)]);
  CHECK(count_commuting_pairs(r) == count_commuting_pairs(q));
  CHECK(spectrum_histogram(r) == spectrum_histogram(q));

  CHECK(code_of([&] { relabel(q, {0, 1, 2}); }) == errc::degree_mismatch);
  std::vector<int> moves0 = sigma;
  std::swap(moves0[0], moves0[1]);
  CHECK(code_of([&] { relabel(q, moves0); }) == errc::no_identity);
  std::vector<int> dup = sigma;
  dup[1] = dup[2];
  CHECK(code_of([&] { relabel(q, dup); }) == errc::bad_entry);
}

TEST_CASE("two-sided inverses and left-normed powers") {
  for (const auto& name : catalog_names()) {
    LoopTable q = make_loop(name);
    CHECK(has_two_sided_inverses(q));
    for (int x = 0; x < q.order(); ++x) {
      int xi = inverse_of(q, x);
      CHECK(q.mul(x, xi) == 0);
      CHECK(q.mul(xi, x) == 0);
      CHECK(power(q, x, -1) == xi);
      CHECK(power(q, x, 0) == 0);
      for (int k = 1; k <= 5; ++k)
        CHECK(power(q, x, k) == q.mul(power(q, x, k - 1), x));
      CHECK(power(q, x, -3) == inverse_of(q, power(q, x, 3)));
    }
  }
  // x*x = 0 for x != 0 in this square, yet 0 has distinct one-sided inverses
  // nowhere; instead check a square with a genuinely one-sided inverse:
  LoopTable q5 = non_bol5();
  // element 2: 2*3 = 1 (not id) ... find an element whose left and right
  // inverses differ and check the reported error.
  bool found = false;
  for (int x = 0; x < 5 && !found; ++x) {
    int li = -1, ri = -1;
    for (int y = 0; y < 5; ++y) {
      if (q5.mul(y, x) == 0) li = y;
      if (q5.mul(x, y) == 0) ri = y;
    }
    if (li != ri) {
      found = true;
      CHECK(code_of([&] { inverse_of(q5, x); }) == errc::no_inverse);
    }
  }
  CHECK(found);
  CHECK_FALSE(has_two_sided_inverses(q5));
}

TEST_CASE("element orders, exponent and order spectra match frozen values") {
  using H = std::map<int, int>;
  const std::vector<std::pair<std::string, H>> expected = {
      {"Z27", H{{1, 1}, {3, 2}, {9, 6}, {27, 18}}},
      {"Z9xZ3", H{{1, 1}, {3, 8}, {9, 18}}},
      {"Z3^3", H{{1, 1}, {3, 26}}},
      {"Heis3", H{{1, 1}, {3, 26}}},
      {"Z9:Z3", H{{1, 1}, {3, 8}, {9, 18}}},
      {"B1", H{{1, 1}, {3, 20}, {9, 6}}},
      {"B2", H{{1, 1}, {3, 14}, {9, 12}}},
      {"B3", H{{1, 1}, {3, 8}, {9, 18}}},
      {"B4", H{{1, 1}, {3, 2}, {9, 24}}},
      {"B5", H{{1, 1}, {3, 20}, {9, 6}}},
      {"B6", H{{1, 1}, {3, 14}, {9, 12}}},
      {"B7", H{{1, 1}, {3, 8}, {9, 18}}},
      {"B8", H{{1, 1}, {3, 2}, {9, 24}}},
      {"B9", H{{1, 1}, {3, 26}}},
      {"B10", H{{1, 1}, {3, 26}}},
  };
  for (const auto& [name, hist] : expected) {
    LoopTable q = make_loop(name);
    CAPTURE(name);
    CHECK(spectrum_histogram(q) == hist);
    CHECK(exponent(q) == hist.rbegin()->first);
  }
  LoopTable z = make_loop("Z27");
  CHECK(element_order(z, 1) == 27);
  CHECK(element_order(z, 3) == 9);
  CHECK(element_order(z, 9) == 3);
  LoopTable q = b1();
  CHECK(element_order(q, 1) == 9);
  CHECK(element_order(q, 3) == 3);
  CHECK(element_order(q, 9) == 3);
}

TEST_CASE("generated subloops are closed and have expected sizes") {
  LoopTable z = make_loop("Z27");
  CHECK(subloop_generated(z, {}) == std::vector<Elt>{0});
  CHECK(subloop_generated(z, {3}).size() == 9);
  CHECK(subloop_generated(z, {1}).size() == 27);

  LoopTable q = b1();
  for (const std::vector<Elt>& gens :
       {std::vector<Elt>{1}, {3}, {9}, {1, 9}, {10}}) {
    auto h = subloop_generated(q, gens);
    // closure under multiplication
    for (Elt a : h)
      for (Elt b : h)
        CHECK(std::find(h.begin(), h.end(), q.mul(a, b)) != h.end());
    CHECK(27 % h.size() == 0);  // Lagrange holds in this catalog
  }
  CHECK(subloop_generated(q, {1}).size() == 9);
  CHECK(subloop_generated(q, {1, 9}).size() == 27);
  CHECK(code_of([&] { subloop_generated(q, {42}); }) == errc::bad_entry);
}

TEST_CASE("commuting pair counts match frozen values") {
  const std::vector<std::pair<std::string, long>> expected = {
      {"Z27", 729},  {"Z9xZ3", 729}, {"Z3^3", 729}, {"Heis3", 297},
      {"Z9:Z3", 297}, {"B1", 459},    {"B2", 459},   {"B3", 459},
      {"B4", 459},   {"B5", 405},    {"B6", 405},   {"B7", 405},
      {"B8", 405},   {"B9", 153},    {"B10", 153},
  };
  for (const auto& [name, c] : expected) {
    CAPTURE(name);
    CHECK(count_commuting_pairs(make_loop(name)) == c);
  }
}

TEST_CASE("text format round-trips and rejects malformed input") {
  LoopTable q = make_loop("B9");
  std::string text = to_text(q);
  std::istringstream in(text);
  CHECK(read_loop(in) == q);

  // comments and blank lines are ignored
  std::istringstream commented("# a loop of order 3\n\n3\n0 1 2\n1 2 0\n\n2 0 1\n");
  CHECK(read_loop(commented) == cyclic_group(3));

  auto reads = [](const std::string& s) {
    std::istringstream is(s);
    read_loop(is);
  };
  CHECK(code_of([&] { reads(""); }) == errc::io_error);
  CHECK(code_of([&] { reads("x\n"); }) == errc::io_error);
  CHECK(code_of([&] { reads("2 2\n0 1\n1 0\n"); }) == errc::io_error);
  CHECK(code_of([&] { reads("3\n0 1 2\n1 2 0\n"); }) == errc::io_error);
  CHECK(code_of([&] { reads("2\n0 1\n1 0 0\n"); }) == errc::io_error);
  // numerically well-formed but not a loop: reported by validation
  CHECK(code_of([&] { reads("2\n0 1\n1 1\n"); }) == errc::not_latin);

  std::string path = "tmp_round_trip_loop.txt";
  write_loop_file(path, q);
  CHECK(read_loop_file(path) == q);
  std::remove(path.c_str());
  CHECK(code_of([] { read_loop_file("no/such/dir/loop.txt"); }) ==
        errc::io_error);
}

TEST_CASE("normalizing a latin square moves its identity to element 0") {
  // C3 with the roles of 0 and 2 interchanged: identity element is 2.
  std::vector<std::vector<int>> rows = {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  LoopTable q = normalize_latin_square(rows);
  CHECK(q == cyclic_group(3));

  // a latin square without a two-sided identity
  std::vector<std::vector<int>> no_id = {{1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
  CHECK(code_of([&] { normalize_latin_square(no_id); }) == errc::no_identity);

  // relabeled catalog loop comes back isomorphic-as-table after normalizing
  LoopTable b = b1();
  std::vector<std::vector<int>> shuffled(27, std::vector<int>(27));
  std::vector<int> sigma(27);
  for (int i = 0; i < 27; ++i) sigma[i] = (i + 5) % 27;
  for (int x = 0; x < 27; ++x)
    for (int y = 0; y < 27; ++y)
      shuffled[sigma[x]][sigma[y]] = sigma[b.mul(x, y)];
  LoopTable back = normalize_latin_square(shuffled);
  CHECK(back.order() == 27);
  CHECK(is_right_bol(back));
  CHECK(spectrum_histogram(back) == spectrum_histogram(b));
}

TEST_CASE("right Bruck holds exactly for the abelian groups and B5..B8") {
  const std::vector<std::string> bruck = {"Z27", "Z9xZ3", "Z3^3",
                                          "B5",  "B6",    "B7",  "B8"};
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    bool expect =
        std::find(bruck.begin(), bruck.end(), name) != bruck.end();
    CHECK(is_right_bruck(make_loop(name)) == expect);
  }
}

TEST_CASE("frozen table rows of two catalog loops") {
  // one row each from a parameterized-family loop and a block-matrix loop
  const std::vector<int> b1_row10 = {10, 11, 12, 13, 14, 15, 16, 17, 9,
                                     19, 23, 18, 22, 26, 21, 25, 20, 24,
                                     1,  8,  6,  4,  2,  0,  7,  5,  3};
  const std::vector<int> b9_row10 = {10, 13, 16, 11, 14, 17, 9,  12, 15,
                                     19, 21, 26, 25, 18, 23, 22, 24, 20,
                                     1,  6,  5,  0,  8,  4,  2,  7,  3};
  LoopTable q1 = b1();
  LoopTable q9 = make_loop("B9");
  for (int j = 0; j < 27; ++j) {
    CHECK(q1.mul(10, j) == b1_row10[j]);
    CHECK(q9.mul(10, j) == b9_row10[j]);
  }
}

TEST_CASE("normalized latin square enumeration counts and generator sanity") {
  const int counts[] = {0, 1, 1, 1, 4, 56};
  for (int n = 1; n <= 5; ++n) {
    int seen = 0;
    testutil::enumerate_normalized_squares(
        n, [&](const LoopTable& q) {
          ++seen;
          CHECK(q.order() == n);
        });
    CHECK(seen == counts[n]);
  }
  for (std::uint32_t seed = 0; seed < 10; ++seed) {
    LoopTable q = testutil::random_normalized_square(7, seed);
    CHECK(q.order() == 7);  // construction already validated it
  }
}
