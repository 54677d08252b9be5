#ifndef CATMAT_ORACLE_HPP_
#define CATMAT_ORACLE_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <string>   // for string
#include <variant>  // for variant

#include "catmat/category.hpp"
#include "catmat/decide.hpp"
#include "catmat/matrix.hpp"

namespace catmat {

  struct SearchConfig {
    std::uint64_t node_budget = 10'000'000;
    // Stop verification of a found witness at the first violation.
    bool fail_fast = true;
    // Number of workers sharing the value range of the first variable.
    std::size_t parallel_width = 1;
  };

  struct Found {
    FinCategory   witness;
    std::uint64_t nodes = 0;
  };

  struct Exhausted {
    std::uint64_t nodes = 0;
  };

  struct Inconclusive {
    std::uint64_t nodes = 0;
  };

  using SearchOutcome = std::variant<Found, Exhausted, Inconclusive>;

  // "FOUND", "EXHAUSTED" or "INCONCLUSIVE".
  char const* outcome_name(SearchOutcome const& o) noexcept;

  std::uint64_t nodes_used(SearchOutcome const& o) noexcept;

  // Exhaustive search over composition tables with hom-set sizes m.
  //
  // The identity of hom(i, i) is pinned to local index 0; composites involving
  // an identity are fixed by the unit laws. Every other composite g o f is a
  // variable, taken in (k, j, i, g, f) order (f: i -> j, g: j -> k), with
  // values tried in ascending order. After each assignment every triple whose
  // two bracketings are both determined is checked.
  //
  // Exhausted means no category with matrix m exists; Found carries the first
  // witness in search order (with parallel_width = 1) and has passed verify.
  SearchOutcome search(PosMatrix const& m, SearchConfig const& cfg = {});

  enum class Agreement { agree, disagree, undecided };

  char const* to_string(Agreement a) noexcept;

  struct CrossReport {
    Agreement     agreement;
    Verdict       verdict;
    SearchOutcome outcome;
  };

  // Runs decide() and search() on the same matrix.
  CrossReport cross_validate(PosMatrix const& m, SearchConfig const& cfg = {});

  // "AGREE ...", "DISAGREE decide=... oracle=..." or "UNDECIDED ...".
  std::string to_string(CrossReport const& r);

}  // namespace catmat

#endif  // CATMAT_ORACLE_HPP_
