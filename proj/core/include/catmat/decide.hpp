#ifndef CATMAT_DECIDE_HPP_
#define CATMAT_DECIDE_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>    // for string
#include <variant>   // for variant

#include "catmat/matrix.hpp"

namespace catmat {

  enum class RouteKind {
    trivial,      // n = 1, entry 1
    leinster,     // every diagonal entry >= 2
    one_unit,     // exactly one diagonal 1
    reduce_then,  // several diagonal 1s that merge under reduction
  };

  // How a realizable matrix is realized. For reduce_then, `base` is the route
  // taken on the reduced matrix (never reduce_then itself). `unit` is the
  // index of the diagonal 1 for one_unit, in the matrix that route applies to
  // (the reduced one under reduce_then).
  struct Route {
    RouteKind                  kind = RouteKind::trivial;
    RouteKind                  base = RouteKind::trivial;
    std::optional<std::size_t> unit;

    bool operator==(Route const&) const = default;
  };

  enum class ReasonKind {
    diag_violation,     // M(i,i) <= M(i,k) M(k,i) with M(k,k) = 1
    offdiag_violation,  // M(i,j) <  M(i,k) M(k,j) with M(k,k) = 1
    reduced_two_units,  // reduced matrix with M(i,i) = M(j,j) = 1
  };

  // Indices refer to the input matrix. Unused fields stay empty.
  struct Reason {
    ReasonKind                 kind = ReasonKind::diag_violation;
    std::size_t                i    = 0;
    std::optional<std::size_t> j;
    std::optional<std::size_t> k;

    bool operator==(Reason const&) const = default;
  };

  class Verdict {
   public:
    explicit Verdict(Route r) : _v(r) {}
    explicit Verdict(Reason r) : _v(r) {}

    [[nodiscard]] bool realizable() const noexcept {
      return std::holds_alternative<Route>(_v);
    }

    [[nodiscard]] Route const& route() const {
      return std::get<Route>(_v);
    }

    [[nodiscard]] Reason const& reason() const {
      return std::get<Reason>(_v);
    }

    bool operator==(Verdict const&) const = default;

   private:
    std::variant<Route, Reason> _v;
  };

  char const* to_string(RouteKind r) noexcept;
  char const* to_string(ReasonKind r) noexcept;

  // "one_unit", "reduce_then(trivial)", ...
  std::string to_string(Route const& r);

  // "REALIZABLE route=<route>" or
  // "NOT_REALIZABLE reason=<name> i=<i> [j=<j>] [k=<k>]" with 1-based indices.
  std::string to_string(Verdict const& v);

  // Decides whether some finite category has hom-set cardinalities m.
  Verdict decide(PosMatrix const& m);

  // Conjunction of decide() over all 3x3 principal submatrices. Throws
  // std::invalid_argument when m.size() < 3.
  bool check_by_submatrices(PosMatrix const& m);

}  // namespace catmat

#endif  // CATMAT_DECIDE_HPP_
