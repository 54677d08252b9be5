#include "catmat/witness_io.hpp"

#include <array>      // for array
#include <charconv>   // for from_chars
#include <fstream>    // for ifstream
#include <istream>    // for istream
#include <iterator>   // for istreambuf_iterator
#include <optional>   // for optional
#include <ostream>    // for ostream
#include <sstream>    // for ostringstream

#include "catmat/error.hpp"

namespace catmat {

  void write_witness(std::ostream&                   out,
                     FinCategory const&              c,
                     std::vector<std::string> const& comments) {
    std::size_t const n = c.objects();
    out << witness_header << '\n';
    for (auto const& line : comments) {
      out << "# " << line << '\n';
    }
    out << "objects " << n << '\n';
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out << "hom " << i + 1 << ' ' << j + 1 << ' ' << c.hom_size(i, j) << '\n';
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      out << "id " << i + 1 << ' ' << c.identity(i) + 1 << '\n';
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t f = 0; f < c.hom_size(i, j); ++f) {
            for (std::size_t g = 0; g < c.hom_size(j, k); ++g) {
              auto r = c.compose(i, j, k, g, f);
              out << "comp " << i + 1 << ' ' << j + 1 << ' ' << k + 1 << ' ' << f + 1
                  << ' ' << g + 1 << ' ';
              if (r == SemiCategory::undefined) {
                out << '?';
              } else {
                out << r + 1;
              }
              out << '\n';
            }
          }
        }
      }
    }
  }

  std::string to_witness_string(FinCategory const&              c,
                                std::vector<std::string> const& comments) {
    std::ostringstream os;
    write_witness(os, c, comments);
    return os.str();
  }

  namespace {
    struct Record {
      std::string_view              keyword;
      std::vector<std::size_t>      args;
      std::size_t                   line;
    };

    [[noreturn]] void fail(std::size_t line, std::string const& msg) {
      throw ParseError("line " + std::to_string(line) + ": " + msg);
    }

    std::vector<std::string_view> split(std::string_view line) {
      std::vector<std::string_view> out;
      std::size_t                   pos = 0;
      while (true) {
        auto start = line.find_first_not_of(" \t\r", pos);
        if (start == std::string_view::npos) {
          break;
        }
        auto end = line.find_first_of(" \t\r", start);
        if (end == std::string_view::npos) {
          end = line.size();
        }
        out.push_back(line.substr(start, end - start));
        pos = end;
      }
      return out;
    }

    std::size_t number(std::string_view tok, std::size_t line) {
      std::size_t v   = 0;
      auto        end = tok.data() + tok.size();
      auto [ptr, ec]  = std::from_chars(tok.data(), end, v);
      if (ec != std::errc{} || ptr != end) {
        fail(line, "malformed number '" + std::string(tok) + "'");
      }
      return v;
    }

    // 1-based index in [1, bound] converted to 0-based.
    std::size_t index(std::size_t v, std::size_t bound, std::size_t line, char const* what) {
      if (v == 0 || v > bound) {
        fail(line, std::string(what) + " " + std::to_string(v) + " out of range");
      }
      return v - 1;
    }
  }  // namespace

  FinCategory parse_witness(std::string_view text) {
    std::vector<Record> records;
    bool                header_seen = false;
    std::size_t         line_no     = 0;
    while (!text.empty()) {
      ++line_no;
      auto             nl   = text.find('\n');
      std::string_view line = text.substr(0, nl);
      text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
      auto toks = split(line);
      if (toks.empty() || toks[0].front() == '#') {
        continue;
      }
      if (!header_seen) {
        if (toks.size() != 2 || toks[0] != "catmat-witness" || toks[1] != "v1") {
          fail(line_no, "expected header '" + std::string(witness_header) + "'");
        }
        header_seen = true;
        continue;
      }
      static constexpr std::array<std::pair<std::string_view, std::size_t>, 4> arity{
          {{"objects", 1}, {"hom", 3}, {"id", 2}, {"comp", 6}}};
      Record rec{toks[0], {}, line_no};
      bool   known = false;
      for (auto const& [kw, count] : arity) {
        if (kw == toks[0]) {
          known = true;
          if (toks.size() != count + 1) {
            fail(line_no, "'" + std::string(kw) + "' takes " + std::to_string(count)
                              + " arguments");
          }
        }
      }
      if (!known) {
        fail(line_no, "unknown record '" + std::string(toks[0]) + "'");
      }
      for (std::size_t t = 1; t < toks.size(); ++t) {
        rec.args.push_back(number(toks[t], line_no));
      }
      records.push_back(std::move(rec));
    }
    if (!header_seen) {
      throw ParseError("empty witness file");
    }

    std::optional<std::size_t> n;
    for (auto const& r : records) {
      if (r.keyword == "objects") {
        if (n) {
          fail(r.line, "duplicate 'objects' record");
        }
        if (r.args[0] == 0) {
          fail(r.line, "a category needs at least one object");
        }
        n = r.args[0];
      }
    }
    if (!n) {
      throw ParseError("missing 'objects' record");
    }
    std::size_t const                       N = *n;
    std::vector<std::optional<std::size_t>> hom(N * N);
    for (auto const& r : records) {
      if (r.keyword == "hom") {
        auto i = index(r.args[0], N, r.line, "object");
        auto j = index(r.args[1], N, r.line, "object");
        if (hom[i * N + j]) {
          fail(r.line, "duplicate hom record");
        }
        hom[i * N + j] = r.args[2];
      }
    }
    std::vector<std::size_t> sizes(N * N);
    for (std::size_t p = 0; p < N * N; ++p) {
      if (!hom[p]) {
        throw ParseError("missing hom record for " + std::to_string(p / N + 1) + " "
                         + std::to_string(p % N + 1));
      }
      sizes[p] = *hom[p];
    }

    SemiCategory                            table(N, sizes);
    std::vector<std::optional<std::size_t>> ids(N);
    std::size_t                             comps = 0;
    for (auto const& r : records) {
      if (r.keyword == "id") {
        auto i = index(r.args[0], N, r.line, "object");
        if (ids[i]) {
          fail(r.line, "duplicate id record");
        }
        ids[i] = index(r.args[1], table.hom_size(i, i), r.line, "identity");
      } else if (r.keyword == "comp") {
        auto i = index(r.args[0], N, r.line, "object");
        auto j = index(r.args[1], N, r.line, "object");
        auto k = index(r.args[2], N, r.line, "object");
        auto f = index(r.args[3], table.hom_size(i, j), r.line, "morphism");
        auto g = index(r.args[4], table.hom_size(j, k), r.line, "morphism");
        if (table.compose(i, j, k, g, f) != SemiCategory::undefined) {
          fail(r.line, "duplicate comp record");
        }
        if (r.args[5] == 0) {
          fail(r.line, "composite index must be at least 1");
        }
        table.set_compose(i, j, k, g, f, r.args[5] - 1);
        ++comps;
      }
    }
    std::vector<std::size_t> identity(N);
    for (std::size_t i = 0; i < N; ++i) {
      if (!ids[i]) {
        throw ParseError("missing id record for object " + std::to_string(i + 1));
      }
      identity[i] = *ids[i];
    }
    if (!table.is_total()) {
      throw ParseError("composition table is not total (" + std::to_string(comps)
                       + " comp records)");
    }
    return FinCategory(std::move(table), std::move(identity));
  }

  FinCategory read_witness(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>()};
    return parse_witness(text);
  }

  FinCategory read_witness_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open witness file '" + path + "'");
    }
    return read_witness(in);
  }

}  // namespace catmat
