#include "catmat/matrix.hpp"

#include <algorithm>  // for all_of, sort
#include <charconv>   // for from_chars
#include <fstream>    // for ifstream
#include <istream>    // for istream
#include <iterator>   // for istreambuf_iterator
#include <limits>     // for numeric_limits
#include <numeric>    // for iota
#include <ostream>    // for ostream
#include <sstream>    // for ostringstream
#include <stdexcept>  // for invalid_argument

namespace catmat {

  PosMatrix::PosMatrix(std::size_t n, Entry fill) : _n(n), _data(n * n, fill) {
    if (n == 0) {
      throw std::invalid_argument("PosMatrix: size must be at least 1");
    }
    if (fill == 0) {
      throw std::invalid_argument("PosMatrix: entries must be strictly positive");
    }
  }

  PosMatrix::PosMatrix(std::initializer_list<std::initializer_list<Entry>> rows) {
    std::vector<std::vector<Entry>> v;
    v.reserve(rows.size());
    for (auto const& r : rows) {
      v.emplace_back(r);
    }
    *this = from_rows(v);
  }

  PosMatrix PosMatrix::from_rows(std::vector<std::vector<Entry>> const& rows) {
    PosMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) {
        throw std::invalid_argument("PosMatrix: matrix must be square");
      }
      for (std::size_t j = 0; j < rows.size(); ++j) {
        m.set(i, j, rows[i][j]);
      }
    }
    return m;
  }

  void PosMatrix::set(std::size_t i, std::size_t j, Entry value) {
    if (i >= _n || j >= _n) {
      throw std::invalid_argument("PosMatrix: index out of range");
    }
    if (value == 0) {
      throw std::invalid_argument("PosMatrix: entries must be strictly positive");
    }
    _data[i * _n + j] = value;
  }

  std::vector<std::size_t> PosMatrix::unit_diagonal() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < _n; ++i) {
      if ((*this)(i, i) == 1) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::uint64_t PosMatrix::total() const noexcept {
    std::uint64_t t = 0;
    for (auto x : _data) {
      t += x;
    }
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct Token {
      std::string_view text;
      std::size_t      line;
    };

    std::vector<Token> significant_tokens(std::string_view text) {
      std::vector<Token> tokens;
      std::size_t        line_no = 0;
      while (!text.empty()) {
        ++line_no;
        auto             nl   = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        auto first = line.find_first_not_of(" \t\r\f\v");
        if (first == std::string_view::npos || line[first] == '#') {
          continue;
        }
        std::size_t pos = first;
        while (pos < line.size()) {
          auto start = line.find_first_not_of(" \t\r\f\v", pos);
          if (start == std::string_view::npos) {
            break;
          }
          auto end = line.find_first_of(" \t\r\f\v", start);
          if (end == std::string_view::npos) {
            end = line.size();
          }
          tokens.push_back({line.substr(start, end - start), line_no});
          pos = end;
        }
      }
      return tokens;
    }

    std::string where(Token const& t) {
      return "line " + std::to_string(t.line) + ": ";
    }

    Entry parse_positive(Token const& t, char const* what) {
      long long v   = 0;
      auto      beg = t.text.data();
      auto      end = t.text.data() + t.text.size();
      auto [ptr, ec] = std::from_chars(beg, end, v);
      if (ec == std::errc::result_out_of_range) {
        throw ParseError(where(t) + what + " '" + std::string(t.text)
                         + "' is too large");
      }
      if (ec != std::errc{} || ptr != end) {
        throw ParseError(where(t) + "malformed token '" + std::string(t.text)
                         + "'");
      }
      if (v == 0) {
        throw ParseError(where(t) + "zero " + what
                         + ": only strictly positive matrices are supported");
      }
      if (v < 0) {
        throw ParseError(where(t) + "negative " + what + " '"
                         + std::string(t.text) + "'");
      }
      if (v > static_cast<long long>(std::numeric_limits<Entry>::max())) {
        throw ParseError(where(t) + what + " '" + std::string(t.text)
                         + "' is too large");
      }
      return static_cast<Entry>(v);
    }
  }  // namespace

  PosMatrix parse_matrix(std::string_view text) {
    auto tokens = significant_tokens(text);
    if (tokens.empty()) {
      throw ParseError("empty matrix file: expected the size n");
    }
    std::size_t n = parse_positive(tokens[0], "size");
    // n * n must be representable; absurd sizes fail on the count check.
    if (n > 65535 || tokens.size() - 1 < n * n) {
      throw ParseError("expected " + std::to_string(n) + "*" + std::to_string(n)
                       + " entries, found " + std::to_string(tokens.size() - 1));
    }
    if (tokens.size() - 1 > n * n) {
      throw ParseError(where(tokens[n * n + 1]) + "unexpected trailing token '"
                       + std::string(tokens[n * n + 1].text) + "'");
    }
    PosMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m.set(i, j, parse_positive(tokens[1 + i * n + j], "entry"));
      }
    }
    return m;
  }

  PosMatrix parse_matrix(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>()};
    return parse_matrix(std::string_view(text));
  }

  PosMatrix read_matrix_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open matrix file '" + path + "'");
    }
    return parse_matrix(in);
  }

  void write_matrix(std::ostream& out, PosMatrix const& m) {
    out << m.size() << '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        out << (j == 0 ? "" : " ") << m(i, j);
      }
      out << '\n';
    }
  }

  std::string to_string(PosMatrix const& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.size(); ++i) {
      os << (i == 0 ? "[" : ",[");
      for (std::size_t j = 0; j < m.size(); ++j) {
        os << (j == 0 ? "" : ",") << m(i, j);
      }
      os << ']';
    }
    os << ']';
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Reduction
  ////////////////////////////////////////////////////////////////////////

  bool indices_equivalent(PosMatrix const& m, std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m(i, k) != m(j, k) || m(k, i) != m(k, j)) {
        return false;
      }
    }
    return true;
  }

  bool is_reduced(PosMatrix const& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        if (indices_equivalent(m, i, j)) {
          return false;
        }
      }
    }
    return true;
  }

  Reduction reduce(PosMatrix const& m) {
    std::size_t const n = m.size();
    Reduction         r;
    r.class_map.assign(n, n);
    // Scanning i upwards makes the first member of each class its minimum, so
    // classes come out ordered by representative.
    for (std::size_t i = 0; i < n; ++i) {
      if (r.class_map[i] != n) {
        continue;
      }
      std::size_t const a = r.classes.size();
      r.classes.emplace_back();
      r.representatives.push_back(i);
      for (std::size_t j = i; j < n; ++j) {
        if (r.class_map[j] == n && indices_equivalent(m, i, j)) {
          r.class_map[j] = a;
          r.classes[a].push_back(j);
        }
      }
    }
    r.reduced = principal_submatrix(m, r.representatives);
    return r;
  }

  PosMatrix principal_submatrix(PosMatrix const&             m,
                                std::span<std::size_t const> idx) {
    if (idx.empty()) {
      throw std::invalid_argument("principal_submatrix: empty index set");
    }
    for (std::size_t a = 0; a < idx.size(); ++a) {
      if (idx[a] >= m.size() || (a > 0 && idx[a] <= idx[a - 1])) {
        throw std::invalid_argument(
            "principal_submatrix: indices must be strictly increasing and in "
            "range");
      }
    }
    PosMatrix out(idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = 0; b < idx.size(); ++b) {
        out.set(a, b, m(idx[a], idx[b]));
      }
    }
    return out;
  }

  namespace {
    void check_bijection(std::span<std::size_t const> perm, std::size_t n) {
      if (perm.size() != n) {
        throw std::invalid_argument("permutation has the wrong length");
      }
      std::vector<bool> seen(n, false);
      for (auto p : perm) {
        if (p >= n || seen[p]) {
          throw std::invalid_argument("permutation is not a bijection");
        }
        seen[p] = true;
      }
    }
  }  // namespace

  PosMatrix permute(PosMatrix const& m, std::span<std::size_t const> perm) {
    check_bijection(perm, m.size());
    PosMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        out.set(i, j, m(perm[i], perm[j]));
      }
    }
    return out;
  }

  std::vector<std::size_t> inverse_permutation(std::span<std::size_t const> perm) {
    check_bijection(perm, perm.size());
    std::vector<std::size_t> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      inv[perm[i]] = i;
    }
    return inv;
  }

  std::vector<std::size_t> swap_to_front(std::size_t n, std::size_t k) {
    if (k >= n) {
      throw std::invalid_argument("swap_to_front: index out of range");
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[k]);
    return perm;
  }

}  // namespace catmat
