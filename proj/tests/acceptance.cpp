// Acceptance gate: one check per shipped claim, one PASS/FAIL line each.
// Exits 0 only if every check passes. Run through ctest or directly.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <moore2/moore2.hpp>

using namespace moore2;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

std::string fmt_int_set(const std::set<int64_t>& s) {
  std::string out = "{";
  bool first = true;
  for (auto v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

const std::vector<int64_t> kFamilyQ = {2, 3, 4, 5, 7, 8, 9, 11, 13};

// ---- 1: orders, degree histograms and diameters of both families ----

void check_family_parameters() {
  for (int64_t q : kFamilyQ) {
    int64_t n = q * q + q + 1;
    std::map<int64_t, int64_t> want{{q, q + 1}, {q + 1, q * q}};
    auto check_one = [&](const std::string& name, const Graph& G) {
      expect(G.order() == n, name + "(" + std::to_string(q) + ") order " +
                                 std::to_string(G.order()) + " != " + std::to_string(n));
      expect(degree_histogram(G) == want,
             name + "(" + std::to_string(q) + ") degree histogram mismatch");
      auto d = diameter(G);
      expect(d && *d == 2, name + "(" + std::to_string(q) + ") diameter != 2");
    };
    check_one("diff", diff_graph(singer_set(q)));
    check_one("brown", brown_graph(q));
  }
}

// ---- 2: the certified bijection exists and survives external checking ----

void check_certified_bijections() {
  for (int64_t q : kFamilyQ) {
    auto f = singer_to_brown(q);
    expect(f.verified, "bijection for q=" + std::to_string(q) + " not marked verified");
    auto rep = verify_bijection(diff_graph(singer_brown_set(q)), brown_graph(q), f);
    expect(rep.valid, "external verification failed for q=" + std::to_string(q));
  }
}

// ---- 3: the basis change really diagonalizes the product form ----

void check_matrix_identity() {
  auto run_one = [](int64_t q, int64_t want_gamma) {
    auto T = CubicTower::make(q);
    FieldSpec K = T.base();
    auto B = form_matrix(T.alpha());
    auto [A, gamma] = diagonalizing_matrix(T.alpha());
    expect(gamma == K.scalar(want_gamma),
           "q=" + std::to_string(q) + ": gamma != " + std::to_string(want_gamma));
    auto P = A.transpose() * B * A;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        FieldElement want = (i == j) ? gamma : K.zero();
        expect(P.at(i, j) == want,
               "q=" + std::to_string(q) + ": (AtBA)[" + std::to_string(i) + "][" +
                   std::to_string(j) + "] is off the diagonal form");
      }
  };
  for (int64_t q : {3, 5, 7, 9, 11, 13}) run_one(q, -1);
  for (int64_t q : {2, 8, 16}) run_one(q, 1);
}

// ---- 4: the frozen order-21 example, edge for edge ----

void check_reference_graph() {
  auto G = diff_graph(DifferenceSet(21, {0, 1, 4, 14, 16}));
  expect(G.edge_count() == 50,
         "edge count " + std::to_string(G.edge_count()) + " != 50");

  static const int kExpected[50][2] = {
      {0, 1},   {0, 4},   {0, 14},  {0, 16},  {1, 3},   {1, 13},  {1, 15},  {1, 20},
      {2, 12},  {2, 14},  {2, 19},  {2, 20},  {3, 11},  {3, 13},  {3, 18},  {3, 19},
      {4, 10},  {4, 12},  {4, 17},  {4, 18},  {5, 9},   {5, 11},  {5, 16},  {5, 17},
      {5, 20},  {6, 8},   {6, 10},  {6, 15},  {6, 16},  {6, 19},  {7, 9},   {7, 14},
      {7, 15},  {7, 18},  {8, 13},  {8, 14},  {8, 17},  {9, 12},  {9, 13},  {9, 16},
      {10, 11}, {10, 12}, {10, 15}, {11, 14}, {12, 13}, {15, 20}, {16, 19}, {17, 18},
      {17, 20}, {18, 19}};
  std::set<std::pair<int64_t, int64_t>> want_edges;
  for (auto& e : kExpected) want_edges.insert({e[0], e[1]});
  expect(want_edges.size() == 50, "reference edge list has a duplicate");
  for (int64_t u = 0; u < 21; ++u)
    for (int64_t v = u + 1; v < 21; ++v) {
      bool wanted = want_edges.count({u, v}) > 0;
      expect(G.adjacent(u, v) == wanted,
             "edge (" + std::to_string(u) + "," + std::to_string(v) + ") " +
                 (wanted ? "expected but absent" : "present but unexpected"));
    }

  std::set<int64_t> deg4;
  for (int64_t v = 0; v < 21; ++v)
    if (G.degree(v) == 4) deg4.insert(v);
  std::set<int64_t> want{0, 2, 7, 8, 11};
  expect(deg4 == want, "degree-4 vertices are " + fmt_int_set(deg4) + ", want " +
                           fmt_int_set(want));
  for (int64_t v : want)
    expect(G.adjacent(14, v), "vertex 14 not adjacent to " + std::to_string(v));
}

// ---- 5: the stored q=4 certificate, plus a perturbed negative ----

void check_stored_certificate() {
  auto f = singer_to_brown(4);
  auto G = diff_graph(reference_set_q4());
  auto H = brown_graph(4);
  expect(verify_bijection(G, H, f).valid, "stored q=4 mapping failed verification");

  auto g = f;
  std::swap(g.map[0], g.map[1]);
  auto rep = verify_bijection(G, H, g);
  expect(!rep.valid, "perturbed mapping was accepted");
  expect(!rep.failures.empty(), "perturbed mapping produced no counterexample");
}

// ---- 6: even-q augmentation ----

void check_augmentation() {
  for (int64_t q : {2, 4, 8}) {
    auto G = brown_augmented(q);
    expect(G.order() == q * q + q + 2, "order wrong for q=" + std::to_string(q));
    auto hist = degree_histogram(G);
    expect(hist.size() == 1 && hist.count(q + 1) == 1,
           "augmented graph not (q+1)-regular for q=" + std::to_string(q));
    auto d = diameter(G);
    expect(d && *d == 2, "diameter != 2 for q=" + std::to_string(q));
  }
}

// ---- 7: hybrid graphs and the two-step reachability of their core ----

bool within_two(const Graph& G, int64_t u, int64_t v) {
  if (u == v || G.adjacent(u, v)) return true;
  const uint64_t* a = G.row(u);
  const uint64_t* b = G.row(v);
  for (size_t w = 0; w < G.words_per_row(); ++w)
    if (a[w] & b[w]) return true;
  return false;
}

void check_hybrid() {
  const std::map<int64_t, int64_t> qp{{2, 7}, {3, 13}, {5, 31}, {8, 73}};
  for (auto [q, p] : qp) {
    auto H = hybrid_graph(q);
    expect(H.order() == p * p, "hybrid order wrong for q=" + std::to_string(q));
    expect(max_degree(H) == p + q + 1,
           "hybrid max degree " + std::to_string(max_degree(H)) + " != " +
               std::to_string(p + q + 1) + " for q=" + std::to_string(q));
    auto d = diameter(H);
    expect(d && *d == 2, "hybrid diameter != 2 for q=" + std::to_string(q));

    auto core = rds_sum_graph(quadratic_rds(p));
    if (p <= 13) {
      for (int64_t u = 0; u < core.order(); ++u)
        for (int64_t v = u + 1; v < core.order(); ++v) {
          if (u / p == v / p) continue;  // same row: covered by the other edge kind
          expect(within_two(core, u, v),
                 "core pair (" + std::to_string(u) + "," + std::to_string(v) +
                     ") not within distance 2, p=" + std::to_string(p));
        }
    } else {
      std::mt19937 rng(20260817 + static_cast<uint32_t>(p));
      std::uniform_int_distribution<int64_t> pick(0, core.order() - 1);
      int64_t done = 0;
      while (done < 10000) {
        int64_t u = pick(rng), v = pick(rng);
        if (u == v || u / p == v / p) continue;
        expect(within_two(core, u, v),
               "sampled core pair (" + std::to_string(u) + "," + std::to_string(v) +
                   ") not within distance 2, p=" + std::to_string(p));
        ++done;
      }
    }
  }
}

// ---- 8: set verifiers accept the constructions and reject the negatives ----

void check_set_verifiers() {
  for (int64_t q : kFamilyQ)
    expect(verify_perfect(singer_set(q)).valid,
           "singer set rejected for q=" + std::to_string(q));
  auto neg = verify_perfect(DifferenceSet(7, {0, 1, 2}));
  expect(!neg.valid && !neg.failures.empty(), "bad difference set accepted");
  expect(neg.multiplicities[1] == 2, "negative case multiplicity surprise");

  for (int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47})
    expect(verify_rds(quadratic_rds(p)).valid,
           "quadratic construction rejected for p=" + std::to_string(p));
  RelativeDifferenceSet R(3, {{0, 0}, {1, 1}, {2, 2}}, 1);
  auto nrep = verify_rds(R);
  expect(!nrep.valid && !nrep.failures.empty(), "bad relative difference set accepted");
}

// ---- 9: translates and dilates stay perfect and give isomorphic graphs ----

void check_equivalence_suite() {
  std::mt19937 rng(9021);
  for (auto [n, q] : std::vector<std::pair<int64_t, int64_t>>{{7, 2}, {13, 3}, {21, 4}}) {
    auto base = singer_set(q);
    auto G = diff_graph(base);
    std::uniform_int_distribution<int64_t> pick_m(0, n - 1);
    std::uniform_int_distribution<int64_t> pick_r(1, n - 1);
    for (int trial = 0; trial < 20; ++trial) {
      int64_t m = pick_m(rng);
      int64_t r = pick_r(rng);
      while (std::gcd(r, n) != 1) r = pick_r(rng);
      auto T = dilate(translate(base, m), r);
      expect(verify_perfect(T).valid,
             "transformed set not perfect, n=" + std::to_string(n));
      auto H = diff_graph(T);
      auto w = general_isomorphism(G, H);
      expect(w.has_value(), "no isomorphism found, n=" + std::to_string(n));
      expect(verify_bijection(G, H, *w).valid,
             "witness failed verification, n=" + std::to_string(n));
    }
  }
}

// ---- 10: the generic search agrees with the constructive map ----

void check_oracle_concordance() {
  for (int64_t q : {2, 3, 4, 5}) {
    auto G = diff_graph(singer_brown_set(q));
    auto H = brown_graph(q);
    auto w = general_isomorphism(G, H);
    expect(w.has_value(), "search found nothing for q=" + std::to_string(q));
    expect(verify_bijection(G, H, *w).valid,
           "search witness invalid for q=" + std::to_string(q));
    expect(verify_bijection(G, H, singer_to_brown(q)).valid,
           "constructive witness invalid for q=" + std::to_string(q));
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void()> body;
  };
  const std::vector<Criterion> criteria = {
      {"family parameters: order, degrees, diameter for q in {2..13}", check_family_parameters},
      {"certified bijection between both families for q in {2..13}", check_certified_bijections},
      {"basis change diagonalizes the product form (gamma = +-1)", check_matrix_identity},
      {"order-21 reference graph matched edge for edge", check_reference_graph},
      {"stored q=4 certificate valid, perturbed copy rejected", check_stored_certificate},
      {"even-q augmented graphs regular with diameter 2", check_augmentation},
      {"hybrid graphs: order p^2, degree p+q+1, diameter 2, core reach", check_hybrid},
      {"set verifiers accept constructions, reject negatives", check_set_verifiers},
      {"translate/dilate keeps sets perfect and graphs isomorphic", check_equivalence_suite},
      {"generic isomorphism search agrees with the constructive map", check_oracle_concordance},
  };

  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      criteria[i].body();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << "  " << std::setw(2) << (i + 1) << "  "
         << criteria[i].name << "  [" << std::fixed << std::setprecision(2) << dt << "s]";
    if (!ok) line << "\n      " << detail;
    std::cout << line.str() << "\n";
    if (!ok) ++failed;
  }
  std::cout << "acceptance: " << (criteria.size() - failed) << "/" << criteria.size()
            << " passed\n";
  return failed == 0 ? 0 : 1;
}
