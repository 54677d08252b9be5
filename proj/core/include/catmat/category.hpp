#ifndef CATMAT_CATEGORY_HPP_
#define CATMAT_CATEGORY_HPP_

#include <compare>   // for operator<=>
#include <cstddef>   // for size_t
#include <limits>    // for numeric_limits
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <variant>   // for variant
#include <vector>    // for vector

#include "catmat/matrix.hpp"

namespace catmat {

  // A morphism named by its hom-set and its position inside it (0-based).
  struct MorphId {
    std::size_t src   = 0;
    std::size_t dst   = 0;
    std::size_t local = 0;

    auto operator<=>(MorphId const&) const = default;
  };

  // "i->j#k" with 1-based indices.
  std::string to_string(MorphId const& m);

  // Finite composition table. compose(g, f) is g after f: f in hom(i, j),
  // g in hom(j, k), result in hom(i, k).
  class SemiCategory {
   public:
    static constexpr std::size_t undefined = std::numeric_limits<std::size_t>::max();

    SemiCategory() = default;

    // hom_sizes is n x n row-major. Every composite starts out undefined.
    SemiCategory(std::size_t n, std::vector<std::size_t> hom_sizes);

    [[nodiscard]] std::size_t objects() const noexcept {
      return _n;
    }

    [[nodiscard]] std::size_t hom_size(std::size_t i, std::size_t j) const noexcept {
      return _hom[i * _n + j];
    }

    [[nodiscard]] std::vector<std::size_t> const& hom_sizes() const noexcept {
      return _hom;
    }

    [[nodiscard]] std::size_t morphism_count() const noexcept;

    // Raw local index of g o f, or undefined.
    [[nodiscard]] std::size_t compose(std::size_t i,
                                      std::size_t j,
                                      std::size_t k,
                                      std::size_t g,
                                      std::size_t f) const noexcept {
      return _comp[slot(i, j, k, g, f)];
    }

    // Throws std::invalid_argument when g and f are not composable.
    [[nodiscard]] MorphId compose(MorphId const& g, MorphId const& f) const;

    // The result is stored unchecked so that verify() can report closure
    // failures of hand-written tables.
    void set_compose(std::size_t i,
                     std::size_t j,
                     std::size_t k,
                     std::size_t g,
                     std::size_t f,
                     std::size_t result);

    [[nodiscard]] bool is_total() const noexcept;

    bool operator==(SemiCategory const&) const = default;

   private:
    [[nodiscard]] std::size_t slot(std::size_t i,
                                   std::size_t j,
                                   std::size_t k,
                                   std::size_t g,
                                   std::size_t f) const noexcept {
      return _offset[(i * _n + j) * _n + k] + g * hom_size(i, j) + f;
    }

    std::size_t              _n = 0;
    std::vector<std::size_t> _hom;
    std::vector<std::size_t> _offset;
    std::vector<std::size_t> _comp;
  };

  // A SemiCategory with a designated identity in every hom(i, i).
  class FinCategory : public SemiCategory {
   public:
    FinCategory() = default;
    FinCategory(SemiCategory table, std::vector<std::size_t> identities);

    [[nodiscard]] std::size_t identity(std::size_t i) const noexcept {
      return _identity[i];
    }

    [[nodiscard]] MorphId identity_morphism(std::size_t i) const noexcept {
      return {i, i, _identity[i]};
    }

    [[nodiscard]] std::vector<std::size_t> const& identities() const noexcept {
      return _identity;
    }

    bool operator==(FinCategory const&) const = default;

   private:
    std::vector<std::size_t> _identity;
  };

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  struct ClosureViolation {
    MorphId     g;
    MorphId     f;
    std::size_t bad_result = 0;  // SemiCategory::undefined when missing
    auto        operator<=>(ClosureViolation const&) const = default;
  };

  struct IdentityLeftViolation {
    MorphId f;
    auto    operator<=>(IdentityLeftViolation const&) const = default;
  };

  struct IdentityRightViolation {
    MorphId f;
    auto    operator<=>(IdentityRightViolation const&) const = default;
  };

  struct AssociativityViolation {
    MorphId h;
    MorphId g;
    MorphId f;
    MorphId left;   // (h o g) o f
    MorphId right;  // h o (g o f)
    auto    operator<=>(AssociativityViolation const&) const = default;
  };

  struct CardinalityViolation {
    std::size_t i        = 0;
    std::size_t j        = 0;
    std::size_t expected = 0;
    std::size_t actual   = 0;
    auto        operator<=>(CardinalityViolation const&) const = default;
  };

  struct ObjectCountViolation {
    std::size_t expected = 0;
    std::size_t actual   = 0;
    auto        operator<=>(ObjectCountViolation const&) const = default;
  };

  using Violation = std::variant<ClosureViolation,
                                 IdentityLeftViolation,
                                 IdentityRightViolation,
                                 AssociativityViolation,
                                 CardinalityViolation,
                                 ObjectCountViolation>;

  std::string to_string(Violation const& v);

  struct VerificationReport {
    std::vector<Violation> violations;

    [[nodiscard]] bool ok() const noexcept {
      return violations.empty();
    }
  };

  struct VerifyOptions {
    // Stop at the first violation instead of listing all of them.
    bool fail_fast = false;
  };

  // Checks closure, both identity laws, associativity over every composable
  // triple and, when given, hom-set cardinalities against expected.
  // Violations are returned sorted.
  VerificationReport verify(FinCategory const&              c,
                            std::optional<PosMatrix> const& expected = std::nullopt,
                            VerifyOptions                   opts     = {});

  // Closure and associativity only.
  VerificationReport verify_semi(SemiCategory const& s, VerifyOptions opts = {});

  // Throws std::invalid_argument if some hom-set is empty.
  PosMatrix matrix_of(SemiCategory const& c);

  // Adds a fresh identity at local index 0 of hom(i, i) for each i in
  // objects, shifting the existing members up by one. Every other object
  // must already own a two-sided identity; the least such local index is
  // used. Throws std::invalid_argument otherwise.
  FinCategory add_identities(SemiCategory const&          s,
                             std::span<std::size_t const> objects);

  // Local index of the least two-sided identity in hom(i, i), if any.
  std::optional<std::size_t> find_identity(SemiCategory const& s, std::size_t i);

  // Relabels objects: object i of the result is object perm[i] of c, so that
  // matrix_of(permute_objects(c, p)) == permute(matrix_of(c), p).
  FinCategory permute_objects(FinCategory const& c, std::span<std::size_t const> perm);

}  // namespace catmat

#endif  // CATMAT_CATEGORY_HPP_
