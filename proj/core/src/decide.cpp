#include "catmat/decide.hpp"

#include <array>      // for array
#include <cstdint>    // for uint64_t
#include <stdexcept>  // for invalid_argument

namespace catmat {

  char const* to_string(RouteKind r) noexcept {
    switch (r) {
      case RouteKind::trivial:
        return "trivial";
      case RouteKind::leinster:
        return "leinster";
      case RouteKind::one_unit:
        return "one_unit";
      case RouteKind::reduce_then:
        return "reduce_then";
    }
    return "?";
  }

  char const* to_string(ReasonKind r) noexcept {
    switch (r) {
      case ReasonKind::diag_violation:
        return "diag_violation";
      case ReasonKind::offdiag_violation:
        return "offdiag_violation";
      case ReasonKind::reduced_two_units:
        return "reduced_two_units";
    }
    return "?";
  }

  std::string to_string(Route const& r) {
    std::string out = to_string(r.kind);
    if (r.kind == RouteKind::reduce_then) {
      out += "(";
      out += to_string(r.base);
      out += ")";
    }
    return out;
  }

  std::string to_string(Verdict const& v) {
    if (v.realizable()) {
      return "REALIZABLE route=" + to_string(v.route());
    }
    auto const& r   = v.reason();
    std::string out = "NOT_REALIZABLE reason=";
    out += to_string(r.kind);
    out += " i=" + std::to_string(r.i + 1);
    if (r.j) {
      out += " j=" + std::to_string(*r.j + 1);
    }
    if (r.k) {
      out += " k=" + std::to_string(*r.k + 1);
    }
    return out;
  }

  namespace {
    std::uint64_t through(PosMatrix const& m, std::size_t i, std::size_t k, std::size_t j) {
      return static_cast<std::uint64_t>(m(i, k)) * m(k, j);
    }

    // With m(k, k) the only diagonal 1: every other endomorphism count must
    // exceed the number of loops through k, and every other hom-set must be
    // at least as large as the set of composites through k.
    std::optional<Reason> unit_violation(PosMatrix const& m, std::size_t k) {
      std::size_t const n = m.size();
      for (std::size_t i = 0; i < n; ++i) {
        if (i != k && m(i, i) <= through(m, i, k, i)) {
          return Reason{ReasonKind::diag_violation, i, std::nullopt, k};
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i != k && j != k && i != j && m(i, j) < through(m, i, k, j)) {
            return Reason{ReasonKind::offdiag_violation, i, j, k};
          }
        }
      }
      return std::nullopt;
    }

    // Matrices with at most one diagonal 1.
    Verdict decide_unreduced(PosMatrix const& m, std::vector<std::size_t> const& units) {
      if (units.empty()) {
        return Verdict(Route{RouteKind::leinster, RouteKind::leinster, std::nullopt});
      }
      std::size_t const k = units.front();
      if (m.size() == 1) {
        return Verdict(Route{RouteKind::trivial, RouteKind::trivial, std::nullopt});
      }
      if (auto why = unit_violation(m, k)) {
        return Verdict(*why);
      }
      return Verdict(Route{RouteKind::one_unit, RouteKind::one_unit, k});
    }
  }  // namespace

  Verdict decide(PosMatrix const& m) {
    auto units = m.unit_diagonal();
    if (units.size() <= 1) {
      return decide_unreduced(m, units);
    }

    auto red       = reduce(m);
    auto red_units = red.reduced.unit_diagonal();
    auto const& r  = red.representatives;
    if (red_units.size() >= 2) {
      return Verdict(Reason{
          ReasonKind::reduced_two_units, r[red_units[0]], r[red_units[1]], std::nullopt});
    }
    // Several units merged into one class: the reduced matrix has exactly one.
    auto inner = decide_unreduced(red.reduced, red_units);
    if (inner.realizable()) {
      return Verdict(Route{RouteKind::reduce_then, inner.route().kind, inner.route().unit});
    }
    Reason why = inner.reason();
    why.i      = r[why.i];
    if (why.j) {
      why.j = r[*why.j];
    }
    if (why.k) {
      why.k = r[*why.k];
    }
    return Verdict(why);
  }

  bool check_by_submatrices(PosMatrix const& m) {
    std::size_t const n = m.size();
    if (n < 3) {
      throw std::invalid_argument("check_by_submatrices: matrix must be at least 3x3");
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        for (std::size_t c = b + 1; c < n; ++c) {
          std::array<std::size_t, 3> idx{a, b, c};
          if (!decide(principal_submatrix(m, idx)).realizable()) {
            return false;
          }
        }
      }
    }
    return true;
  }

}  // namespace catmat
