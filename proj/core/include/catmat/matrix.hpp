#ifndef CATMAT_MATRIX_HPP_
#define CATMAT_MATRIX_HPP_

#include <cstddef>           // for size_t
#include <cstdint>           // for uint32_t
#include <initializer_list>  // for initializer_list
#include <iosfwd>            // for istream, ostream
#include <span>              // for span
#include <string>            // for string
#include <string_view>       // for string_view
#include <vector>            // for vector

#include "catmat/error.hpp"

namespace catmat {

  using Entry = std::uint32_t;

  // Square matrix of strictly positive integers; entry (i, j) is the intended
  // cardinality of hom(x_i, x_j). Indices are 0-based in the C++ API and
  // 1-based in every text format.
  class PosMatrix {
   public:
    PosMatrix() = default;

    // n x n matrix with every entry equal to fill.
    explicit PosMatrix(std::size_t n, Entry fill = 1);

    PosMatrix(std::initializer_list<std::initializer_list<Entry>> rows);

    static PosMatrix from_rows(std::vector<std::vector<Entry>> const& rows);

    [[nodiscard]] std::size_t size() const noexcept {
      return _n;
    }

    [[nodiscard]] Entry operator()(std::size_t i, std::size_t j) const noexcept {
      return _data[i * _n + j];
    }

    // Throws std::invalid_argument on a zero entry or an index out of range.
    void set(std::size_t i, std::size_t j, Entry value);

    [[nodiscard]] std::span<Entry const> row_major() const noexcept {
      return _data;
    }

    // Indices i with entry (i, i) == 1.
    [[nodiscard]] std::vector<std::size_t> unit_diagonal() const;

    [[nodiscard]] std::uint64_t total() const noexcept;

    bool operator==(PosMatrix const&) const = default;

   private:
    std::size_t        _n = 0;
    std::vector<Entry> _data;
  };

  // Equivalence classes of indices with identical rows and identical columns.
  // Classes are ordered by their minimum, which is the representative.
  struct Reduction {
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t>              representatives;
    std::vector<std::size_t>              class_map;
    PosMatrix                             reduced;

    [[nodiscard]] bool is_trivial() const noexcept {
      return classes.size() == class_map.size();
    }
  };

  // Parses the line-based matrix format: '#' comment lines, then n, then n*n
  // entries in row-major order. Throws ParseError.
  PosMatrix parse_matrix(std::istream& in);
  PosMatrix parse_matrix(std::string_view text);
  PosMatrix read_matrix_file(std::string const& path);

  void        write_matrix(std::ostream& out, PosMatrix const& m);
  std::string to_string(PosMatrix const& m);

  bool indices_equivalent(PosMatrix const& m, std::size_t i, std::size_t j);

  [[nodiscard]] bool is_reduced(PosMatrix const& m);

  Reduction reduce(PosMatrix const& m);

  // idx must be nonempty, strictly increasing and in range.
  PosMatrix principal_submatrix(PosMatrix const&             m,
                                std::span<std::size_t const> idx);

  // Result (i, j) = m(perm[i], perm[j]). perm must be a bijection on 0..n-1.
  PosMatrix permute(PosMatrix const& m, std::span<std::size_t const> perm);

  std::vector<std::size_t> inverse_permutation(std::span<std::size_t const> perm);

  // Transposition of 0 and k on n points.
  std::vector<std::size_t> swap_to_front(std::size_t n, std::size_t k);

}  // namespace catmat

#endif  // CATMAT_MATRIX_HPP_
