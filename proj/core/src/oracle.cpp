#include "catmat/oracle.hpp"

#include <algorithm>  // for sort
#include <atomic>     // for atomic
#include <cstdint>    // for int32_t
#include <optional>   // for optional
#include <stdexcept>  // for logic_error
#include <thread>     // for thread
#include <tuple>      // for tie
#include <utility>    // for pair

namespace catmat {

  char const* outcome_name(SearchOutcome const& o) noexcept {
    switch (o.index()) {
      case 0:
        return "FOUND";
      case 1:
        return "EXHAUSTED";
      default:
        return "INCONCLUSIVE";
    }
  }

  std::uint64_t nodes_used(SearchOutcome const& o) noexcept {
    return std::visit([](auto const& x) { return x.nodes; }, o);
  }

  char const* to_string(Agreement a) noexcept {
    switch (a) {
      case Agreement::agree:
        return "AGREE";
      case Agreement::disagree:
        return "DISAGREE";
      case Agreement::undecided:
        return "UNDECIDED";
    }
    return "?";
  }

  namespace {
    using Id = std::int32_t;

    constexpr Id none = -1;

    // Immutable description shared by all workers.
    struct Problem {
      explicit Problem(PosMatrix const& m) : n(m.size()), offset(n * n), sizes(n * n) {
        Id total = 0;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            offset[i * n + j] = total;
            sizes[i * n + j]  = m(i, j);
            for (std::size_t x = 0; x < m(i, j); ++x) {
              morphs.push_back({i, j, x});
            }
            total += static_cast<Id>(m(i, j));
          }
        }
        size = static_cast<std::size_t>(total);
        into.resize(n);
        out_of.resize(n);
        for (std::size_t id = 0; id < size; ++id) {
          auto const& mo = morphs[id];
          if (!is_identity(static_cast<Id>(id))) {
            into[mo.dst].push_back(static_cast<Id>(id));
            out_of[mo.src].push_back(static_cast<Id>(id));
          }
        }
        // Variables in (k, j, i, g, f) order.
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) {
              for (std::size_t g = 0; g < m(j, k); ++g) {
                for (std::size_t f = 0; f < m(i, j); ++f) {
                  Id gid = id(j, k, g);
                  Id fid = id(i, j, f);
                  if (!is_identity(gid) && !is_identity(fid)) {
                    vars.push_back({gid, fid, id(i, k, 0), static_cast<Id>(m(i, k))});
                  }
                }
              }
            }
          }
        }
      }

      Id id(std::size_t i, std::size_t j, std::size_t local) const noexcept {
        return offset[i * n + j] + static_cast<Id>(local);
      }

      bool is_identity(Id x) const noexcept {
        auto const& mo = morphs[static_cast<std::size_t>(x)];
        return mo.src == mo.dst && mo.local == 0;
      }

      struct Var {
        Id g;
        Id f;
        Id first;  // global id of local 0 in the target hom-set
        Id count;
      };

      std::size_t          n;
      std::size_t          size = 0;
      std::vector<Id>      offset;
      std::vector<std::size_t> sizes;
      std::vector<MorphId> morphs;
      std::vector<std::vector<Id>> into;    // non-identities by target
      std::vector<std::vector<Id>> out_of;  // non-identities by source
      std::vector<Var>     vars;
    };

    struct Shared {
      std::uint64_t              budget;
      std::atomic<std::uint64_t> nodes{0};
      std::atomic<bool>          found{false};
      std::atomic<bool>          over_budget{false};
    };

    enum class Status { found, exhausted, aborted };

    class Worker {
     public:
      Worker(Problem const& p, Shared& shared)
          : _p(p), _shared(shared), _comp(p.size * p.size, none), _producers(p.size) {
        for (std::size_t x = 0; x < p.size; ++x) {
          auto const& mo = p.morphs[x];
          Id const    id = static_cast<Id>(x);
          // id o x = x and x o id = x
          at(p.id(mo.dst, mo.dst, 0), id) = id;
          at(id, p.id(mo.src, mo.src, 0)) = id;
        }
      }

      // Explores the values of variable 0 in [begin, count) stepping by stride.
      Status run(Id begin, Id stride) {
        if (_p.vars.empty()) {
          return Status::found;  // only unit-law composites
        }
        auto const& v = _p.vars[0];
        for (Id val = begin; val < v.count; val += stride) {
          if (auto s = try_value(0, v.first + val); s != Status::exhausted) {
            return s;
          }
        }
        return Status::exhausted;
      }

      FinCategory witness() const {
        SemiCategory s(_p.n, _p.sizes);
        for (std::size_t g = 0; g < _p.size; ++g) {
          for (std::size_t f = 0; f < _p.size; ++f) {
            auto const& mg = _p.morphs[g];
            auto const& mf = _p.morphs[f];
            if (mf.dst != mg.src) {
              continue;
            }
            Id r = _comp[g * _p.size + f];
            s.set_compose(mf.src, mf.dst, mg.dst, mg.local, mf.local,
                          _p.morphs[static_cast<std::size_t>(r)].local);
          }
        }
        return FinCategory(std::move(s), std::vector<std::size_t>(_p.n, 0));
      }

     private:
      Id& at(Id g, Id f) noexcept {
        return _comp[static_cast<std::size_t>(g) * _p.size + static_cast<std::size_t>(f)];
      }

      Id get(Id g, Id f) const noexcept {
        return _comp[static_cast<std::size_t>(g) * _p.size + static_cast<std::size_t>(f)];
      }

      Status try_value(std::size_t depth, Id value) {
        if (_shared.found.load(std::memory_order_relaxed)) {
          return Status::aborted;
        }
        if (_shared.nodes.fetch_add(1, std::memory_order_relaxed) >= _shared.budget) {
          _shared.over_budget.store(true, std::memory_order_relaxed);
          return Status::aborted;
        }
        auto const& v = _p.vars[depth];
        at(v.g, v.f)  = value;
        _producers[static_cast<std::size_t>(value)].emplace_back(v.g, v.f);
        Status s = Status::exhausted;
        if (consistent(v.g, v.f, value)) {
          s = descend(depth + 1);
        }
        if (s == Status::found) {
          return s;
        }
        _producers[static_cast<std::size_t>(value)].pop_back();
        at(v.g, v.f) = none;
        return s;
      }

      Status descend(std::size_t depth) {
        if (depth == _p.vars.size()) {
          return Status::found;
        }
        auto const& v = _p.vars[depth];
        for (Id val = 0; val < v.count; ++val) {
          if (auto s = try_value(depth, v.first + val); s != Status::exhausted) {
            return s;
          }
        }
        return Status::exhausted;
      }

      static bool clash(Id a, Id b) noexcept {
        return a != none && b != none && a != b;
      }

      // Checks every triple in which (x o y = v) is one of the four
      // composites needed to compare (h o g) o f with h o (g o f).
      bool consistent(Id x, Id y, Id v) const {
        auto const& my = _p.morphs[static_cast<std::size_t>(y)];
        auto const& mx = _p.morphs[static_cast<std::size_t>(x)];
        // (x, y) as (h, g)
        for (Id f : _p.into[my.src]) {
          Id gf = get(y, f);
          if (gf != none && clash(get(v, f), get(x, gf))) {
            return false;
          }
        }
        // (x, y) as (g, f)
        for (Id h : _p.out_of[mx.dst]) {
          Id hg = get(h, x);
          if (hg != none && clash(get(hg, y), get(h, v))) {
            return false;
          }
        }
        // x = h o g, so v = (h o g) o y
        for (auto const& [h, g] : _producers[static_cast<std::size_t>(x)]) {
          Id gy = get(g, y);
          if (gy != none && clash(v, get(h, gy))) {
            return false;
          }
        }
        // y = g o f, so v = x o (g o f)
        for (auto const& [g, f] : _producers[static_cast<std::size_t>(y)]) {
          Id xg = get(x, g);
          if (xg != none && clash(v, get(xg, f))) {
            return false;
          }
        }
        return true;
      }

      Problem const&                              _p;
      Shared&                                     _shared;
      std::vector<Id>                             _comp;
      std::vector<std::vector<std::pair<Id, Id>>> _producers;
    };
  }  // namespace

  SearchOutcome search(PosMatrix const& m, SearchConfig const& cfg) {
    Problem const p(m);
    Shared        shared;
    shared.budget = cfg.node_budget;

    std::size_t width = std::max<std::size_t>(1, cfg.parallel_width);
    if (!p.vars.empty()) {
      width = std::min<std::size_t>(width, static_cast<std::size_t>(p.vars[0].count));
    } else {
      width = 1;
    }

    std::vector<std::optional<Worker>> workers(width);
    std::vector<Status>                status(width, Status::exhausted);
    auto                               body = [&](std::size_t w) {
      workers[w].emplace(p, shared);
      status[w] = workers[w]->run(static_cast<Id>(w), static_cast<Id>(width));
      if (status[w] == Status::found) {
        shared.found.store(true, std::memory_order_relaxed);
      }
    };
    if (width == 1) {
      body(0);
    } else {
      std::vector<std::thread> threads;
      for (std::size_t w = 0; w < width; ++w) {
        threads.emplace_back(body, w);
      }
      for (auto& t : threads) {
        t.join();
      }
    }

    std::uint64_t const nodes = shared.nodes.load();
    for (std::size_t w = 0; w < width; ++w) {
      if (status[w] == Status::found) {
        auto c = workers[w]->witness();
        if (!verify(c, m, VerifyOptions{cfg.fail_fast}).ok()) {
          throw std::logic_error("search: produced a table that fails verification");
        }
        return Found{std::move(c), nodes};
      }
    }
    if (shared.over_budget.load()) {
      return Inconclusive{nodes};
    }
    return Exhausted{nodes};
  }

  CrossReport cross_validate(PosMatrix const& m, SearchConfig const& cfg) {
    auto      verdict = decide(m);
    auto      outcome = search(m, cfg);
    Agreement a       = Agreement::undecided;
    if (std::holds_alternative<Found>(outcome)) {
      a = verdict.realizable() ? Agreement::agree : Agreement::disagree;
    } else if (std::holds_alternative<Exhausted>(outcome)) {
      a = verdict.realizable() ? Agreement::disagree : Agreement::agree;
    }
    return CrossReport{a, std::move(verdict), std::move(outcome)};
  }

  std::string to_string(CrossReport const& r) {
    return std::string(to_string(r.agreement)) + " decide=" + to_string(r.verdict)
           + " oracle=" + outcome_name(r.outcome);
  }

}  // namespace catmat
