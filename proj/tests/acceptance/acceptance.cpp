// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "catmat/category.hpp"
#include "catmat/construct.hpp"
#include "catmat/decide.hpp"
#include "catmat/matrix.hpp"
#include "catmat/oracle.hpp"
#include "catmat/witness_io.hpp"

using namespace catmat;

namespace {
  struct Outcome {
    bool        pass = true;
    std::string detail;

    void fail(std::string const& why) {
      if (pass) detail.clear();
      if (!detail.empty()) detail += "; ";
      pass = false;
      detail += why;
    }
  };

  // Witnesses produced along the way, replayed by criterion 12.
  struct Produced {
    int         criterion;
    PosMatrix   matrix;
    FinCategory witness;
  };
  std::vector<Produced> produced;

  void keep(int criterion, PosMatrix const& m, FinCategory const& c) {
    produced.push_back({criterion, m, c});
  }

  bool is_exhausted(SearchOutcome const& o) {
    return std::holds_alternative<Exhausted>(o);
  }

  void for_each_matrix(std::size_t n, Entry lo, Entry hi,
                       std::function<void(PosMatrix const&)> const& fn) {
    std::vector<Entry> e(n * n, lo);
    for (;;) {
      PosMatrix m(n);
      for (std::size_t a = 0; a < e.size(); ++a) m.set(a / n, a % n, e[a]);
      fn(m);
      std::size_t a = 0;
      while (a < e.size() && e[a] == hi) e[a++] = lo;
      if (a == e.size()) return;
      ++e[a];
    }
  }

  bool two_by_two_rule(PosMatrix const& m) {
    Entry a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
    return (a == 1 && b == 1 && c == 1 && d == 1) || (a == 1 && d > b * c)
           || (d == 1 && a > b * c) || (a > 1 && d > 1);
  }

  // The one-unit inequalities with the unit at index 0.
  bool one_unit_inequalities(PosMatrix const& m) {
    for (std::size_t i = 1; i < m.size(); ++i) {
      if (m(i, i) <= m(0, i) * m(i, 0)) return false;
      for (std::size_t j = 1; j < m.size(); ++j)
        if (i != j && m(i, j) < m(i, 0) * m(0, j)) return false;
    }
    return true;
  }

  PosMatrix random_matrix(std::mt19937_64& rng, std::size_t n, Entry lo, Entry hi) {
    std::uniform_int_distribution<Entry> d(lo, hi);
    PosMatrix                            m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, d(rng));
    return m;
  }

  PosMatrix pin(Entry a, Entry b, Entry c, Entry p) {
    return PosMatrix{{1, a, b}, {c, a * c + 1, b * c}, {p, a * p, b * p + 1}};
  }

  ////////////////////////////////////////////////////////////////////////

  Outcome criterion1() {
    Outcome   r;
    PosMatrix m{{2, 2}, {1, 1}};
    auto      v = decide(m);
    auto      o = search(m);
    if (v.realizable()) r.fail("decide says realizable");
    if (!is_exhausted(o)) r.fail(std::string("oracle ") + outcome_name(o));
    if (r.pass)
      r.detail = to_string(v) + ", oracle EXHAUSTED after " + std::to_string(nodes_used(o))
                 + " nodes";
    return r;
  }

  Outcome criterion2() {
    Outcome r;
    int     count = 0, realizable = 0;
    for_each_matrix(2, 1, 4, [&](PosMatrix const& m) {
      ++count;
      bool d = decide(m).realizable();
      if (d != two_by_two_rule(m)) r.fail("mismatch at " + to_string(m));
      if (!d) return;
      ++realizable;
      auto c = construct_witness(m);
      if (!verify(c, m).ok()) r.fail("witness fails at " + to_string(m));
      keep(2, m, c);
    });
    if (count != 256) r.fail("enumerated " + std::to_string(count));
    if (r.pass)
      r.detail = "256 matrices match the four-case rule, " + std::to_string(realizable)
                 + " witnesses verified";
    return r;
  }

  Outcome criterion3() {
    Outcome       r;
    int           agree = 0, exhausted = 0;
    std::uint64_t worst = 0;
    for_each_matrix(2, 1, 2, [&](PosMatrix const& m) {
      auto x = cross_validate(m);
      if (x.agreement != Agreement::agree) r.fail(to_string(x) + " at " + to_string(m));
      else ++agree;
      if (is_exhausted(x.outcome)) {
        ++exhausted;
        worst = std::max(worst, nodes_used(x.outcome));
      }
    });
    if (r.pass)
      r.detail = std::to_string(agree) + "/16 AGREE, " + std::to_string(exhausted)
                 + " EXHAUSTED, largest exhausted search " + std::to_string(worst) + " nodes";
    return r;
  }

  Outcome criterion4() {
    Outcome                r;
    std::vector<PosMatrix> cases{PosMatrix{{1, 2}, {2, 2}},
                                 PosMatrix{{2, 1}, {2, 1}},
                                 PosMatrix{{1, 2}, {1, 2}},
                                 PosMatrix{{1, 1}, {2, 2}},
                                 PosMatrix{{2, 2}, {1, 1}},
                                 PosMatrix{{1, 2, 1}, {2, 2, 1}, {1, 1, 2}}};
    std::string nodes;
    for (auto const& m : cases) {
      auto x = cross_validate(m);
      if (!is_exhausted(x.outcome) || x.agreement != Agreement::agree)
        r.fail(to_string(x) + " at " + to_string(m));
      nodes += (nodes.empty() ? "" : ",") + std::to_string(nodes_used(x.outcome));
    }
    auto v = decide(cases.back());
    if (v.realizable() || v.reason().kind != ReasonKind::diag_violation || v.reason().i != 1)
      r.fail("3x3 case: " + to_string(v));
    if (r.pass) r.detail = "6 instances EXHAUSTED and AGREE, nodes " + nodes;
    return r;
  }

  Outcome criterion5() {
    Outcome r;
    int     count = 0, in_domain = 0, domain_yes = 0, outside_yes = 0;
    std::vector<Entry> e(8, 1);
    for (;;) {
      PosMatrix m(3);
      for (std::size_t a = 0; a < 8; ++a) m.set((a + 1) / 3, (a + 1) % 3, e[a]);
      ++count;
      bool d = decide(m).realizable();
      if (m(1, 1) > 1 && m(2, 2) > 1) {
        ++in_domain;
        if (d != one_unit_inequalities(m)) r.fail("mismatch at " + to_string(m));
        if (d) {
          ++domain_yes;
          auto c = construct_one_unit(m);
          if (!verify(c, m).ok() || matrix_of(c) != m) r.fail("witness fails at " + to_string(m));
          keep(5, m, c);
        }
      } else {
        // a second diagonal 1: outside the one-unit hypothesis, where the
        // inequalities can never hold
        if (one_unit_inequalities(m)) r.fail("inequalities hold at " + to_string(m));
        if (d) {
          ++outside_yes;
          auto c = construct_witness(m);
          if (!verify(c, m).ok() || matrix_of(c) != m) r.fail("witness fails at " + to_string(m));
          keep(5, m, c);
        }
      }
      std::size_t a = 0;
      while (a < 8 && e[a] == 3) e[a++] = 1;
      if (a == 8) break;
      ++e[a];
    }
    if (count != 6561) r.fail("enumerated " + std::to_string(count));
    if (r.pass)
      r.detail = std::to_string(in_domain) + " matrices with other diagonal > 1 match exactly ("
                 + std::to_string(domain_yes) + " realizable, one-unit witnesses verified); "
                 + std::to_string(count - in_domain) + " with a second diagonal 1: "
                 + std::to_string(outside_yes) + " realizable by reduction, witnesses verified";
    return r;
  }

  Outcome criterion6() {
    Outcome r;
    int     count = 0;
    for (Entry a = 1; a <= 3; ++a)
      for (Entry b = 1; b <= 3; ++b)
        for (Entry c = 1; c <= 3; ++c)
          for (Entry p = 1; p <= 3; ++p) {
            auto m = pin(a, b, c, p);
            ++count;
            auto v = decide(m);
            if (!v.realizable()) {
              r.fail(to_string(v) + " at " + to_string(m));
              continue;
            }
            auto w = construct_witness(m);
            if (!verify(w, m).ok()) r.fail("witness fails at " + to_string(m));
            keep(6, m, w);
          }
    if (r.pass) r.detail = std::to_string(count) + " matrices realizable, witnesses verified";
    return r;
  }

  Outcome criterion7() {
    Outcome         r;
    std::mt19937_64 rng(20261016);
    int             made = 0, realizable = 0, merged_pairs = 0;
    while (made < 200) {
      std::size_t n = 2 + rng() % 5;          // 2..6
      std::size_t k = 1 + rng() % (n - 1);    // 1..n-1 classes
      // a reduced base with a fair share of diagonal 1s
      PosMatrix base(k);
      do {
        base = random_matrix(rng, k, 1, 4);
        for (std::size_t i = 0; i < k; ++i)
          if (rng() % 3 == 0) base.set(i, i, 1);
      } while (!is_reduced(base));
      // every class used at least once, then shuffled
      std::vector<std::size_t> cls(n);
      for (std::size_t i = 0; i < n; ++i) cls[i] = i < k ? i : rng() % k;
      std::shuffle(cls.begin(), cls.end(), rng);
      PosMatrix m(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, base(cls[i], cls[j]));
      ++made;

      auto red = reduce(m);
      if (is_reduced(m) || red.classes.size() != k) {
        r.fail("construction did not produce the expected classes at " + to_string(m));
        continue;
      }
      bool dm = decide(m).realizable();
      bool dr = decide(red.reduced).realizable();
      if (dm != dr) r.fail("decide differs at " + to_string(m));
      if (!dm) continue;
      ++realizable;
      auto b = construct_witness(red.reduced);
      auto c = expand_reduced(b, red);
      if (!verify(c, m).ok()) r.fail("expansion fails at " + to_string(m));
      keep(7, m, c);
      for (auto const& cl : red.classes)
        for (std::size_t a = 1; a < cl.size(); ++a) {
          std::size_t x = cl[0], y = cl[a];
          bool        iso = false;
          for (std::size_t f = 0; f < c.hom_size(x, y) && !iso; ++f)
            for (std::size_t g = 0; g < c.hom_size(y, x) && !iso; ++g)
              iso = c.compose(x, y, x, g, f) == c.identity(x)
                    && c.compose(y, x, y, f, g) == c.identity(y);
          ++merged_pairs;
          if (!iso) r.fail("objects " + std::to_string(x + 1) + "," + std::to_string(y + 1)
                           + " not isomorphic at " + to_string(m));
        }
    }
    if (r.pass)
      r.detail = "200 non-reduced matrices, " + std::to_string(realizable)
                 + " realizable with verified expansions, " + std::to_string(merged_pairs)
                 + " merged pairs isomorphic";
    return r;
  }

  Outcome criterion8() {
    Outcome       r;
    std::uint64_t seen = 0, oracle_runs = 0, worst = 0;
    for (std::size_t n = 2; n <= 4; ++n) {
      std::size_t const  N = n * n;
      std::vector<Entry> e(N, 1);
      PosMatrix          m(n);
      for (;;) {
        int units = 0;
        for (std::size_t i = 0; i < n; ++i) units += e[i * n + i] == 1;
        if (units >= 2) {
          for (std::size_t a = 0; a < N; ++a) m.set(a / n, a % n, e[a]);
          if (is_reduced(m)) {
            ++seen;
            if (decide(m).realizable()) r.fail("declared realizable: " + to_string(m));
            if (m.total() <= 14) {
              ++oracle_runs;
              auto o = search(m);
              worst  = std::max(worst, nodes_used(o));
              if (!is_exhausted(o))
                r.fail(std::string("oracle ") + outcome_name(o) + " at " + to_string(m));
            }
          }
        }
        std::size_t a = 0;
        while (a < N && e[a] == 3) e[a++] = 1;
        if (a == N) break;
        ++e[a];
      }
    }
    if (r.pass)
      r.detail = std::to_string(seen) + " reduced matrices with two diagonal 1s rejected; "
                 + std::to_string(oracle_runs) + " with total <= 14 EXHAUSTED (largest search "
                 + std::to_string(worst) + " nodes)";
    return r;
  }

  Outcome criterion9() {
    Outcome         r;
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; ++t) {
      std::size_t n = 1 + rng() % 5;
      auto        m = random_matrix(rng, n, 1, 5);
      for (std::size_t i = 0; i < n; ++i) m.set(i, i, 2 + rng() % 4);
      auto c = construct_leinster(m);
      if (!verify(c, m).ok() || matrix_of(c) != m) r.fail("fails at " + to_string(m));
      keep(9, m, c);
    }
    if (r.pass) r.detail = "100 matrices, witnesses verified";
    return r;
  }

  Outcome criterion10() {
    Outcome         r;
    std::mt19937_64 rng(10);
    int             yes = 0, bad = 0;
    std::ofstream   dump;
    for (int t = 0; t < 1000; ++t) {
      std::size_t n = 3 + rng() % 4;
      auto        m = random_matrix(rng, n, 1, 4);
      // bias towards diagonal 1s so that every decision branch is exercised
      for (std::size_t i = 0; i < n; ++i)
        if (rng() % 4 == 0) m.set(i, i, 1);
      bool d = decide(m).realizable();
      yes += d;
      if (check_by_submatrices(m) != d) {
        if (!dump.is_open()) dump.open("criterion10_counterexamples.txt");
        std::ostringstream os;
        os << "# decide: " << to_string(decide(m)) << "\n";
        write_matrix(os, m);
        dump << os.str() << '\n';
        std::cerr << "criterion 10 counterexample:\n" << os.str();
        ++bad;
      }
    }
    if (bad > 0)
      r.fail(std::to_string(bad)
             + " counterexamples, dumped to criterion10_counterexamples.txt");
    else
      r.detail = "1000 matrices agree (" + std::to_string(yes) + " realizable)";
    return r;
  }

  Outcome criterion11() {
    Outcome r;
    int     count = 0;
    for (Entry a = 1; a <= 3; ++a)
      for (Entry b = 1; b <= 3; ++b)
        for (Entry c = 1; c <= 3; ++c)
          for (Entry p = 1; p <= 3; ++p) {
            auto m    = pin(a, b, c, p);
            auto base = construct_one_unit(m);
            for (Entry z = 2; z <= 3; ++z) {
              auto want = m;
              want.set(0, 0, z);
              auto aug = augment_unit(base, z);
              ++count;
              if (!verify(aug, want).ok()) r.fail("fails at " + to_string(want));
              keep(11, want, aug);
            }
          }
    if (r.pass) r.detail = std::to_string(count) + " augmented witnesses verified";
    return r;
  }

  Outcome criterion12() {
    Outcome          r;
    std::vector<int> per(13, 0);
    for (auto const& p : produced) {
      auto text = to_witness_string(p.witness);
      auto back = parse_witness(text);
      if (back != p.witness || to_witness_string(back) != text || !verify(back, p.matrix).ok())
        r.fail("criterion " + std::to_string(p.criterion) + " witness for "
               + to_string(p.matrix));
      ++per[p.criterion];
    }
    for (int c : {2, 5, 6, 7, 9, 11})
      if (per[c] == 0) r.fail("no witnesses from criterion " + std::to_string(c));
    if (r.pass) {
      r.detail = std::to_string(produced.size()) + " witnesses round-tripped (";
      bool first = true;
      for (int c : {2, 5, 6, 7, 9, 11}) {
        r.detail += (first ? "" : ", ") + std::to_string(c) + ":" + std::to_string(per[c]);
        first = false;
      }
      r.detail += ")";
    }
    return r;
  }

  struct Criterion {
    int                      id;
    std::function<Outcome()> run;
    double                   limit_seconds;  // 0: none
  };
}  // namespace

int main() {
  std::vector<Criterion> all{
      {1, criterion1, 1.0},   {2, criterion2, 10.0}, {3, criterion3, 60.0},
      {4, criterion4, 0.0},   {5, criterion5, 120.0}, {6, criterion6, 0.0},
      {7, criterion7, 0.0},   {8, criterion8, 0.0},  {9, criterion9, 0.0},
      {10, criterion10, 0.0}, {11, criterion11, 0.0}, {12, criterion12, 0.0},
  };
  int passed = 0;
  for (auto const& c : all) {
    auto    t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = c.run();
    } catch (std::exception const& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && dt >= c.limit_seconds) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "took %.2fs, limit %.0fs", dt, c.limit_seconds);
      r.fail(buf);
    }
    char t[32];
    std::snprintf(t, sizeof t, "%.3fs", dt);
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << c.id << " [" << t << "] "
              << r.detail << std::endl;
    passed += r.pass;
  }
  std::cout << passed << "/" << all.size() << " criteria passed" << std::endl;
  return passed == static_cast<int>(all.size()) ? 0 : 1;
}
