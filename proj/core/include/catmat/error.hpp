#ifndef CATMAT_ERROR_HPP_
#define CATMAT_ERROR_HPP_

#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace catmat {

  //! Thrown by the text readers (matrix and witness formats).
  class ParseError : public std::runtime_error {
   public:
    explicit ParseError(std::string const& what) : std::runtime_error(what) {}
  };

}  // namespace catmat

#endif  // CATMAT_ERROR_HPP_
