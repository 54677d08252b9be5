#include "catmat/construct.hpp"

#include <numeric>    // for iota
#include <stdexcept>  // for invalid_argument
#include <utility>    // for move

#include "catmat/decide.hpp"

namespace catmat {

  ExtraCounts::ExtraCounts(PosMatrix const& m)
      : _n(m.size()), _endo(m.size(), 0), _hetero(m.size() * m.size(), 0) {
    for (std::size_t i = 1; i < _n; ++i) {
      _endo[i] = static_cast<std::int64_t>(m(i, i))
                 - static_cast<std::int64_t>(m(0, i)) * m(i, 0) - 1;
      for (std::size_t j = 1; j < _n; ++j) {
        if (i != j) {
          _hetero[i * _n + j] = static_cast<std::int64_t>(m(i, j))
                                - static_cast<std::int64_t>(m(i, 0)) * m(0, j);
        }
      }
    }
  }

  std::optional<std::string> ExtraCounts::first_negative() const {
    for (std::size_t i = 1; i < _n; ++i) {
      if (_endo[i] < 0) {
        return "s(" + std::to_string(i + 1) + ") = " + std::to_string(_endo[i]);
      }
    }
    for (std::size_t i = 1; i < _n; ++i) {
      for (std::size_t j = 1; j < _n; ++j) {
        if (i != j && hetero(i, j) < 0) {
          return "t(" + std::to_string(i + 1) + "," + std::to_string(j + 1)
                 + ") = " + std::to_string(hetero(i, j));
        }
      }
    }
    return std::nullopt;
  }

  std::size_t OneUnitLayout::core(std::size_t i,
                                  std::size_t j,
                                  std::size_t a,
                                  std::size_t b) const noexcept {
    if (i == 0) {
      return j == 0 ? 0 : a;
    }
    if (j == 0) {
      return b;
    }
    return (i == j ? 1 : 0) + a * _m(i, 0) + b;
  }

  std::size_t OneUnitLayout::endo_extra(std::size_t i, std::size_t k) const noexcept {
    return 1 + std::size_t{_m(0, i)} * _m(i, 0) + k;
  }

  std::size_t OneUnitLayout::hetero_extra(std::size_t i,
                                          std::size_t j,
                                          std::size_t k) const noexcept {
    return std::size_t{_m(0, j)} * _m(i, 0) + k;
  }

  FinCategory trivial_category() {
    SemiCategory s(1, {1});
    s.set_compose(0, 0, 0, 0, 0, 0);
    return FinCategory(std::move(s), {0});
  }

  ////////////////////////////////////////////////////////////////////////
  // Constant composition
  ////////////////////////////////////////////////////////////////////////

  SemiCategory leinster_semicategory(PosMatrix const& m) {
    std::size_t const        n = m.size();
    std::vector<std::size_t> sizes(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (m(i, i) < 2) {
        throw std::invalid_argument("construct_leinster: diagonal entry "
                                    + std::to_string(i + 1) + " is below 2");
      }
      for (std::size_t j = 0; j < n; ++j) {
        sizes[i * n + j] = m(i, j) - (i == j ? 1 : 0);
      }
    }
    SemiCategory s(n, sizes);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t g = 0; g < s.hom_size(j, k); ++g) {
            for (std::size_t f = 0; f < s.hom_size(i, j); ++f) {
              s.set_compose(i, j, k, g, f, 0);
            }
          }
        }
      }
    }
    return s;
  }

  FinCategory construct_leinster(PosMatrix const& m) {
    std::vector<std::size_t> all(m.size());
    std::iota(all.begin(), all.end(), 0);
    return add_identities(leinster_semicategory(m), all);
  }

  ////////////////////////////////////////////////////////////////////////
  // One diagonal unit
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Every morphism of the one-unit semicategory is read as a pair
    // (out, in): `out` selects the f[j, out] it ends with, `in` the g[i, in]
    // it starts with. Composition keeps the out-part of the left factor and
    // the in-part of the right one, the g o f in the middle cancelling to u.
    // An extra reads as (0, 0) on the left and as (max, max) on the right.
    class OneUnitTable {
     public:
      OneUnitTable(PosMatrix const& m, bool with_extras)
          : _m(m), _n(m.size()), _extra(m) {
        if (m(0, 0) != 1) {
          throw std::invalid_argument("construct_one_unit: entry (1,1) must be 1");
        }
        if (with_extras) {
          if (auto neg = _extra.first_negative()) {
            throw std::invalid_argument("construct_one_unit: negative extra count " + *neg);
          }
        }
        _with_extras = with_extras;
      }

      std::size_t core_size(std::size_t i, std::size_t j) const noexcept {
        return std::size_t{i == 0 ? 1u : _m(i, 0)} * (j == 0 ? 1u : _m(0, j));
      }

      std::size_t extras(std::size_t i, std::size_t j) const noexcept {
        if (!_with_extras || i == 0 || j == 0) {
          return 0;
        }
        return static_cast<std::size_t>(i == j ? _extra.endo(i) : _extra.hetero(i, j));
      }

      std::size_t size(std::size_t i, std::size_t j) const noexcept {
        return core_size(i, j) + extras(i, j);
      }

      std::size_t in_count(std::size_t i) const noexcept {
        return i == 0 ? 1 : _m(i, 0);
      }

      std::size_t out_count(std::size_t j) const noexcept {
        return j == 0 ? 1 : _m(0, j);
      }

      bool is_extra(std::size_t i, std::size_t j, std::size_t x) const noexcept {
        return x >= core_size(i, j);
      }

      std::size_t out_as_left(std::size_t i, std::size_t j, std::size_t x) const noexcept {
        return is_extra(i, j, x) ? 0 : x / in_count(i);
      }

      std::size_t in_as_right(std::size_t i, std::size_t j, std::size_t x) const noexcept {
        return is_extra(i, j, x) ? in_count(i) - 1 : x % in_count(i);
      }

      std::size_t compose(std::size_t i,
                          std::size_t j,
                          std::size_t k,
                          std::size_t g,
                          std::size_t f) const noexcept {
        if (i == j && j == k && g == f && is_extra(i, i, g)) {
          return g;  // extra endomorphisms are idempotent
        }
        std::size_t const out = out_as_left(j, k, g);
        std::size_t const in  = in_as_right(i, j, f);
        return out * in_count(i) + in;
      }

      SemiCategory build() const {
        std::vector<std::size_t> sizes(_n * _n);
        for (std::size_t i = 0; i < _n; ++i) {
          for (std::size_t j = 0; j < _n; ++j) {
            sizes[i * _n + j] = size(i, j);
          }
        }
        SemiCategory s(_n, sizes);
        for (std::size_t i = 0; i < _n; ++i) {
          for (std::size_t j = 0; j < _n; ++j) {
            for (std::size_t k = 0; k < _n; ++k) {
              for (std::size_t g = 0; g < s.hom_size(j, k); ++g) {
                for (std::size_t f = 0; f < s.hom_size(i, j); ++f) {
                  s.set_compose(i, j, k, g, f, compose(i, j, k, g, f));
                }
              }
            }
          }
        }
        return s;
      }

     private:
      PosMatrix const& _m;
      std::size_t      _n;
      ExtraCounts      _extra;
      bool             _with_extras = true;
    };
  }  // namespace

  SemiCategory one_unit_semicategory(PosMatrix const& m, bool with_extras) {
    return OneUnitTable(m, with_extras).build();
  }

  FinCategory construct_one_unit(PosMatrix const& m) {
    std::vector<std::size_t> rest(m.size() - 1);
    std::iota(rest.begin(), rest.end(), 1);
    return add_identities(one_unit_semicategory(m, true), rest);
  }

  ////////////////////////////////////////////////////////////////////////
  // Extra endomorphisms at the unit object
  ////////////////////////////////////////////////////////////////////////

  FinCategory augment_unit(FinCategory const& c, std::size_t z) {
    if (c.objects() == 0 || c.hom_size(0, 0) != 1) {
      throw std::invalid_argument("augment_unit: hom(1,1) must be a singleton");
    }
    if (z == 0) {
      throw std::invalid_argument("augment_unit: z must be at least 1");
    }
    if (z == 1) {
      return c;
    }
    std::size_t const n     = c.objects();
    auto              sizes = c.hom_sizes();
    sizes[0]                = z;
    SemiCategory t(n, sizes);
    // Local 0 stays the identity, n_a sits at local a.
    auto base = [](std::size_t i, std::size_t j, std::size_t x) {
      return i == 0 && j == 0 ? 0 : x;
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t g = 0; g < t.hom_size(j, k); ++g) {
            for (std::size_t f = 0; f < t.hom_size(i, j); ++f) {
              std::size_t r;
              if (i == 0 && j == 0 && k == 0) {
                r = g == 0 ? f : f == 0 ? g : g == f ? g : 1;
              } else if (i == 0 && k == 0) {
                r = 1;
              } else {
                r = c.compose(i, j, k, base(j, k, g), base(i, j, f));
              }
              t.set_compose(i, j, k, g, f, r);
            }
          }
        }
      }
    }
    return FinCategory(std::move(t), c.identities());
  }

  ////////////////////////////////////////////////////////////////////////
  // Reduction and dispatch
  ////////////////////////////////////////////////////////////////////////

  FinCategory expand_reduced(FinCategory const& b, Reduction const& red) {
    if (b.objects() != red.reduced.size() || matrix_of(b) != red.reduced) {
      throw std::invalid_argument("expand_reduced: category does not match the reduced matrix");
    }
    std::size_t const        n = red.class_map.size();
    auto const&              c = red.class_map;
    std::vector<std::size_t> sizes(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        sizes[i * n + j] = b.hom_size(c[i], c[j]);
      }
    }
    SemiCategory             t(n, sizes);
    std::vector<std::size_t> ids(n);
    for (std::size_t i = 0; i < n; ++i) {
      ids[i] = b.identity(c[i]);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t g = 0; g < t.hom_size(j, k); ++g) {
            for (std::size_t f = 0; f < t.hom_size(i, j); ++f) {
              t.set_compose(i, j, k, g, f, b.compose(c[i], c[j], c[k], g, f));
            }
          }
        }
      }
    }
    return FinCategory(std::move(t), std::move(ids));
  }

  FinCategory construct_witness(PosMatrix const& m) {
    auto verdict = decide(m);
    if (!verdict.realizable()) {
      throw std::invalid_argument("construct_witness: " + to_string(verdict));
    }
    auto const& route = verdict.route();
    switch (route.kind) {
      case RouteKind::trivial:
        return trivial_category();
      case RouteKind::leinster:
        return construct_leinster(m);
      case RouteKind::one_unit: {
        auto perm = swap_to_front(m.size(), *route.unit);
        auto c    = construct_one_unit(permute(m, perm));
        return permute_objects(c, inverse_permutation(perm));
      }
      case RouteKind::reduce_then: {
        auto red = reduce(m);
        return expand_reduced(construct_witness(red.reduced), red);
      }
    }
    throw std::logic_error("construct_witness: unknown route");
  }

}  // namespace catmat
