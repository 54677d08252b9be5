#ifndef CATMAT_WITNESS_IO_HPP_
#define CATMAT_WITNESS_IO_HPP_

#include <iosfwd>       // for istream, ostream
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "catmat/category.hpp"

namespace catmat {

  inline constexpr std::string_view witness_header = "catmat-witness v1";

  // Writes the canonical witness text:
  //
  //   catmat-witness v1
  //   # <comment lines, if any>
  //   objects <n>
  //   hom <i> <j> <count>                         (lexicographic in (i, j))
  //   id <i> <local>
  //   comp <i> <j> <k> <f> <g> <g o f>            (lexicographic in (i, j, k, f, g))
  //
  // All indices are 1-based.
  void write_witness(std::ostream&                   out,
                     FinCategory const&              c,
                     std::vector<std::string> const& comments = {});

  std::string to_witness_string(FinCategory const&              c,
                                std::vector<std::string> const& comments = {});

  // Accepts the records in any order after the header. Requires every hom,
  // id and comp record exactly once and rejects duplicates. Composite values
  // are range-checked by verify(), not here. Throws ParseError.
  FinCategory read_witness(std::istream& in);
  FinCategory parse_witness(std::string_view text);
  FinCategory read_witness_file(std::string const& path);

}  // namespace catmat

#endif  // CATMAT_WITNESS_IO_HPP_
