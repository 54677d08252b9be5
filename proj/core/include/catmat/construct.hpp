#ifndef CATMAT_CONSTRUCT_HPP_
#define CATMAT_CONSTRUCT_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for int64_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "catmat/category.hpp"
#include "catmat/matrix.hpp"

namespace catmat {

  // Morphisms that the one-unit construction adds on top of the morphisms
  // factoring through object 0, for a matrix with m(0, 0) = 1:
  //
  //   endo(i)     = m(i, i) - m(0, i) m(i, 0) - 1   (the identity is excluded)
  //   hetero(i,j) = m(i, j) - m(i, 0) m(0, j)       (i != j)
  //
  // for i, j >= 1. All counts are >= 0 exactly when the matrix is realizable.
  class ExtraCounts {
   public:
    explicit ExtraCounts(PosMatrix const& m);

    [[nodiscard]] std::int64_t endo(std::size_t i) const noexcept {
      return _endo[i];
    }

    [[nodiscard]] std::int64_t hetero(std::size_t i, std::size_t j) const noexcept {
      return _hetero[i * _n + j];
    }

    // First negative count, described with 1-based indices.
    [[nodiscard]] std::optional<std::string> first_negative() const;

   private:
    std::size_t               _n;
    std::vector<std::int64_t> _endo;
    std::vector<std::int64_t> _hetero;
  };

  // Local-index layout of construct_one_unit(m). Object 0 is the unit object.
  //
  //   hom(0, 0) = {u}
  //   hom(0, j) : f[j, a] at a                     (a < m(0, j))
  //   hom(i, 0) : g[i, b] at b                     (b < m(i, 0))
  //   hom(i, j) : core p[i, j, a, b] = f[j, a] o g[i, b], ordered by (a, b),
  //               then extras; in hom(i, i) everything is shifted by one to
  //               make room for the identity at 0.
  class OneUnitLayout {
   public:
    explicit OneUnitLayout(PosMatrix const& m) : _m(m) {}

    [[nodiscard]] std::size_t core(std::size_t i,
                                   std::size_t j,
                                   std::size_t a,
                                   std::size_t b) const noexcept;
    [[nodiscard]] std::size_t endo_extra(std::size_t i, std::size_t k) const noexcept;
    [[nodiscard]] std::size_t hetero_extra(std::size_t i,
                                           std::size_t j,
                                           std::size_t k) const noexcept;

   private:
    PosMatrix _m;
  };

  // One object, one morphism.
  FinCategory trivial_category();

  // Constant-composition semicategory with m(i, i) - 1 endomorphisms per
  // object: every composite from i to k is the morphism at local index 0.
  SemiCategory leinster_semicategory(PosMatrix const& m);

  // Requires every diagonal entry >= 2. Identities sit at local 0 of each
  // hom(i, i); the constant composite sits at local 1 on the diagonal and at
  // local 0 elsewhere.
  FinCategory construct_leinster(PosMatrix const& m);

  // The semicategory behind construct_one_unit, before identities are added
  // at objects 1..n-1. With with_extras = false only the morphisms factoring
  // through object 0 are present (hom(i, j) has m(i, 0) m(0, j) elements).
  // Requires m(0, 0) = 1 and, with extras, all ExtraCounts >= 0.
  SemiCategory one_unit_semicategory(PosMatrix const& m, bool with_extras = true);

  // Witness for a matrix with m(0, 0) = 1 and nonnegative ExtraCounts.
  // Throws std::invalid_argument naming the first negative count otherwise.
  FinCategory construct_one_unit(PosMatrix const& m);

  // Enlarges hom(0, 0) = {id} to {id, n_1, ..., n_{z-1}} with n_a n_a = n_a,
  // n_a n_b = n_1 (a != b), and each n_a acting as the identity on every
  // other morphism. Composites that leave object 0 and come back, which were
  // forced to be the identity before, become n_1. Requires hom(0, 0) to be a
  // singleton and z >= 1.
  FinCategory augment_unit(FinCategory const& c, std::size_t z);

  // Category on the unreduced index set: hom(i, j) is a copy of
  // hom_b(class(i), class(j)) and composition is inherited. Requires
  // matrix_of(b) == red.reduced.
  FinCategory expand_reduced(FinCategory const& b, Reduction const& red);

  // Builds a witness along decide(m).route(). Throws std::invalid_argument if
  // m is not realizable.
  FinCategory construct_witness(PosMatrix const& m);

}  // namespace catmat

#endif  // CATMAT_CONSTRUCT_HPP_
