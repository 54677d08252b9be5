#include "catmat/category.hpp"

#include <algorithm>  // for sort, find
#include <stdexcept>  // for invalid_argument
#include <utility>    // for move

namespace catmat {

  std::string to_string(MorphId const& m) {
    return std::to_string(m.src + 1) + "->" + std::to_string(m.dst + 1) + "#"
           + std::to_string(m.local + 1);
  }

  ////////////////////////////////////////////////////////////////////////
  // SemiCategory
  ////////////////////////////////////////////////////////////////////////

  SemiCategory::SemiCategory(std::size_t n, std::vector<std::size_t> hom_sizes)
      : _n(n), _hom(std::move(hom_sizes)), _offset(n * n * n, 0) {
    if (_hom.size() != n * n) {
      throw std::invalid_argument("SemiCategory: hom_sizes must have n*n entries");
    }
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          _offset[(i * n + j) * n + k] = total;
          total += hom_size(i, j) * hom_size(j, k);
        }
      }
    }
    _comp.assign(total, undefined);
  }

  std::size_t SemiCategory::morphism_count() const noexcept {
    std::size_t t = 0;
    for (auto h : _hom) {
      t += h;
    }
    return t;
  }

  MorphId SemiCategory::compose(MorphId const& g, MorphId const& f) const {
    if (f.dst != g.src || f.src >= _n || g.dst >= _n || g.src >= _n
        || f.local >= hom_size(f.src, f.dst) || g.local >= hom_size(g.src, g.dst)) {
      throw std::invalid_argument("compose: " + to_string(g) + " and "
                                  + to_string(f) + " are not composable");
    }
    return {f.src, g.dst, compose(f.src, f.dst, g.dst, g.local, f.local)};
  }

  void SemiCategory::set_compose(std::size_t i,
                                 std::size_t j,
                                 std::size_t k,
                                 std::size_t g,
                                 std::size_t f,
                                 std::size_t result) {
    if (i >= _n || j >= _n || k >= _n || g >= hom_size(j, k) || f >= hom_size(i, j)) {
      throw std::invalid_argument("set_compose: index out of range");
    }
    _comp[slot(i, j, k, g, f)] = result;
  }

  bool SemiCategory::is_total() const noexcept {
    return std::find(_comp.begin(), _comp.end(), undefined) == _comp.end();
  }

  FinCategory::FinCategory(SemiCategory table, std::vector<std::size_t> identities)
      : SemiCategory(std::move(table)), _identity(std::move(identities)) {
    if (_identity.size() != objects()) {
      throw std::invalid_argument("FinCategory: one identity per object required");
    }
    for (std::size_t i = 0; i < objects(); ++i) {
      if (_identity[i] >= hom_size(i, i)) {
        throw std::invalid_argument("FinCategory: identity index out of range");
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(Violation const& v) {
    struct Printer {
      std::string operator()(ClosureViolation const& x) const {
        return "closure g=" + to_string(x.g) + " f=" + to_string(x.f) + " result="
               + (x.bad_result == SemiCategory::undefined
                      ? std::string("undefined")
                      : std::to_string(x.bad_result + 1));
      }
      std::string operator()(IdentityLeftViolation const& x) const {
        return "identity-left f=" + to_string(x.f);
      }
      std::string operator()(IdentityRightViolation const& x) const {
        return "identity-right f=" + to_string(x.f);
      }
      std::string operator()(AssociativityViolation const& x) const {
        return "associativity h=" + to_string(x.h) + " g=" + to_string(x.g)
               + " f=" + to_string(x.f) + " left=" + to_string(x.left)
               + " right=" + to_string(x.right);
      }
      std::string operator()(CardinalityViolation const& x) const {
        return "cardinality i=" + std::to_string(x.i + 1) + " j="
               + std::to_string(x.j + 1) + " expected=" + std::to_string(x.expected)
               + " actual=" + std::to_string(x.actual);
      }
      std::string operator()(ObjectCountViolation const& x) const {
        return "object-count expected=" + std::to_string(x.expected)
               + " actual=" + std::to_string(x.actual);
      }
    };
    return std::visit(Printer{}, v);
  }

  namespace {
    // Returns true when the caller should stop (fail-fast hit).
    class Checker {
     public:
      Checker(SemiCategory const& s, VerifyOptions opts) : _s(s), _opts(opts) {}

      bool add(Violation v) {
        _report.violations.push_back(std::move(v));
        return _opts.fail_fast;
      }

      bool valid(std::size_t i, std::size_t k, std::size_t r) const noexcept {
        return r != SemiCategory::undefined && r < _s.hom_size(i, k);
      }

      bool closure() {
        std::size_t const n = _s.objects();
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
              for (std::size_t g = 0; g < _s.hom_size(j, k); ++g) {
                for (std::size_t f = 0; f < _s.hom_size(i, j); ++f) {
                  auto r = _s.compose(i, j, k, g, f);
                  if (!valid(i, k, r) && add(ClosureViolation{{j, k, g}, {i, j, f}, r})) {
                    return true;
                  }
                }
              }
            }
          }
        }
        return false;
      }

      bool associativity() {
        std::size_t const n = _s.objects();
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
              for (std::size_t l = 0; l < n; ++l) {
                if (triples(i, j, k, l)) {
                  return true;
                }
              }
            }
          }
        }
        return false;
      }

      VerificationReport take() {
        std::sort(_report.violations.begin(), _report.violations.end());
        return std::move(_report);
      }

     private:
      bool triples(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        for (std::size_t f = 0; f < _s.hom_size(i, j); ++f) {
          for (std::size_t g = 0; g < _s.hom_size(j, k); ++g) {
            auto gf = _s.compose(i, j, k, g, f);
            if (!valid(i, k, gf)) {
              continue;
            }
            for (std::size_t h = 0; h < _s.hom_size(k, l); ++h) {
              auto hg = _s.compose(j, k, l, h, g);
              if (!valid(j, l, hg)) {
                continue;
              }
              auto left  = _s.compose(i, j, l, hg, f);
              auto right = _s.compose(i, k, l, h, gf);
              if (!valid(i, l, left) || !valid(i, l, right) || left == right) {
                continue;
              }
              if (add(AssociativityViolation{
                      {k, l, h}, {j, k, g}, {i, j, f}, {i, l, left}, {i, l, right}})) {
                return true;
              }
            }
          }
        }
        return false;
      }

      SemiCategory const& _s;
      VerifyOptions       _opts;
      VerificationReport  _report;
    };
  }  // namespace

  VerificationReport verify(FinCategory const&              c,
                            std::optional<PosMatrix> const& expected,
                            VerifyOptions                   opts) {
    Checker     check(c, opts);
    std::size_t n = c.objects();
    auto        run = [&]() {
      if (expected) {
        if (expected->size() != n) {
          if (check.add(ObjectCountViolation{expected->size(), n})) {
            return;
          }
        } else {
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              if ((*expected)(i, j) != c.hom_size(i, j)
                  && check.add(
                      CardinalityViolation{i, j, (*expected)(i, j), c.hom_size(i, j)})) {
                return;
              }
            }
          }
        }
      }
      if (check.closure()) {
        return;
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t f = 0; f < c.hom_size(i, j); ++f) {
            if (c.compose(i, j, j, c.identity(j), f) != f
                && check.add(IdentityLeftViolation{{i, j, f}})) {
              return;
            }
            if (c.compose(i, i, j, f, c.identity(i)) != f
                && check.add(IdentityRightViolation{{i, j, f}})) {
              return;
            }
          }
        }
      }
      check.associativity();
    };
    run();
    return check.take();
  }

  VerificationReport verify_semi(SemiCategory const& s, VerifyOptions opts) {
    Checker check(s, opts);
    if (!check.closure()) {
      check.associativity();
    }
    return check.take();
  }

  PosMatrix matrix_of(SemiCategory const& c) {
    PosMatrix m(c.objects());
    for (std::size_t i = 0; i < c.objects(); ++i) {
      for (std::size_t j = 0; j < c.objects(); ++j) {
        if (c.hom_size(i, j) == 0) {
          throw std::invalid_argument("matrix_of: empty hom-set");
        }
        m.set(i, j, static_cast<Entry>(c.hom_size(i, j)));
      }
    }
    return m;
  }

  ////////////////////////////////////////////////////////////////////////
  // Identities and relabelling
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::size_t> find_identity(SemiCategory const& s, std::size_t i) {
    std::size_t const n = s.objects();
    for (std::size_t e = 0; e < s.hom_size(i, i); ++e) {
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) {
        for (std::size_t f = 0; f < s.hom_size(j, i) && ok; ++f) {
          ok = s.compose(j, i, i, e, f) == f;
        }
        for (std::size_t g = 0; g < s.hom_size(i, j) && ok; ++g) {
          ok = s.compose(i, i, j, g, e) == g;
        }
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  FinCategory add_identities(SemiCategory const&          s,
                             std::span<std::size_t const> objects) {
    std::size_t const n = s.objects();
    std::vector<bool> fresh(n, false);
    for (auto i : objects) {
      if (i >= n) {
        throw std::invalid_argument("add_identities: object out of range");
      }
      fresh[i] = true;
    }
    std::vector<std::size_t> ids(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (fresh[i]) {
        continue;
      }
      auto e = find_identity(s, i);
      if (!e) {
        throw std::invalid_argument("add_identities: object "
                                    + std::to_string(i + 1)
                                    + " has no two-sided identity");
      }
      ids[i] = *e;
    }

    auto shift = [&](std::size_t i, std::size_t j) -> std::size_t {
      return (i == j && fresh[i]) ? 1 : 0;
    };
    std::vector<std::size_t> sizes(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        sizes[i * n + j] = s.hom_size(i, j) + shift(i, j);
      }
    }
    SemiCategory t(n, sizes);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t g = 0; g < t.hom_size(j, k); ++g) {
            for (std::size_t f = 0; f < t.hom_size(i, j); ++f) {
              if (j == k && fresh[k] && g == 0) {
                t.set_compose(i, j, k, g, f, f);
              } else if (i == j && fresh[i] && f == 0) {
                t.set_compose(i, j, k, g, f, g);
              } else {
                auto r = s.compose(i, j, k, g - shift(j, k), f - shift(i, j));
                if (r != SemiCategory::undefined) {
                  t.set_compose(i, j, k, g, f, r + shift(i, k));
                }
              }
            }
          }
        }
      }
    }
    return FinCategory(std::move(t), std::move(ids));
  }

  FinCategory permute_objects(FinCategory const& c, std::span<std::size_t const> perm) {
    std::size_t const n = c.objects();
    // permute() validates the bijection for us.
    (void) permute(PosMatrix(n), perm);
    std::vector<std::size_t> sizes(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        sizes[i * n + j] = c.hom_size(perm[i], perm[j]);
      }
    }
    SemiCategory t(n, sizes);
    std::vector<std::size_t> ids(n);
    for (std::size_t i = 0; i < n; ++i) {
      ids[i] = c.identity(perm[i]);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t g = 0; g < t.hom_size(j, k); ++g) {
            for (std::size_t f = 0; f < t.hom_size(i, j); ++f) {
              auto r = c.compose(perm[i], perm[j], perm[k], g, f);
              if (r != SemiCategory::undefined) {
                t.set_compose(i, j, k, g, f, r);
              }
            }
          }
        }
      }
    }
    return FinCategory(std::move(t), std::move(ids));
  }

}  // namespace catmat
