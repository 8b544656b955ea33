#ifndef IMPLAT_FILES_HPP
#define IMPLAT_FILES_HPP

#include <array>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "implat/frame.hpp"
#include "implat/lattice.hpp"

namespace implat {

/// GLATTICE 1: line-oriented lattice document. Lines: "elements" with the
/// element names in index order; either "order" lines with a<=b pairs (the
/// reflexive-transitive closure is taken) or "matrix" lines with raw 0/1
/// rows; optional "arrow" lines, one row of element names per line; an
/// optional "flags" line. '#' starts a comment.
struct LatticeDoc {
  FiniteLattice lat;
  std::optional<bool> expect_distributive, expect_heyting;
};

/// GFRAME 1: "X" and "Y" name lines, "gal" lines with x|y pairs and "T"
/// lines with y,x,v triples.
struct FrameDoc {
  ImplicativeFrame frame;
  std::vector<std::string> xnames, ynames;

  int x_index(std::string_view s) const {
    for (std::size_t i = 0; i < xnames.size(); ++i)
      if (xnames[i] == s) return static_cast<int>(i);
    return -1;
  }
  int y_index(std::string_view s) const {
    for (std::size_t i = 0; i < ynames.size(); ++i)
      if (ynames[i] == s) return static_cast<int>(i);
    return -1;
  }
};

namespace detail {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    std::string tok;
    while (ss >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

inline void check_names(const std::vector<std::string>& names, int line) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (char c : names[i])
      if (c == '|' || c == ',')
        fail(Errc::parse_error, "name '" + names[i] + "' contains a separator", line);
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j])
        fail(Errc::parse_error, "duplicate name '" + names[i] + "'", line);
  }
}

inline int name_index(const std::vector<std::string>& names, std::string_view s, int line) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == s) return static_cast<int>(i);
  fail(Errc::parse_error, "unknown name '" + std::string(s) + "'", line);
}

}  // namespace detail

inline LatticeDoc parse_lattice_file(std::istream& in) {
  auto lines = detail::read_lines(in);
  if (lines.empty() || lines[0].tokens != std::vector<std::string>{"GLATTICE", "1"})
    fail(Errc::parse_error, "missing GLATTICE 1 header", lines.empty() ? 1 : lines[0].number);

  std::vector<std::string> names;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<bool>> matrix;
  std::vector<std::vector<std::string>> arrow_rows;
  LatticeDoc doc;
  bool saw_order = false, saw_matrix = false;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& line = lines[li];
    const std::string& key = line.tokens[0];
    if (key == "elements") {
      names.assign(line.tokens.begin() + 1, line.tokens.end());
      detail::check_names(names, line.number);
      if (names.empty()) fail(Errc::parse_error, "empty elements line", line.number);
    } else if (key == "order") {
      if (names.empty()) fail(Errc::parse_error, "order before elements", line.number);
      if (saw_matrix) fail(Errc::parse_error, "order and matrix lines mixed", line.number);
      saw_order = true;
      for (std::size_t t = 1; t < line.tokens.size(); ++t) {
        const std::string& tok = line.tokens[t];
        auto sep = tok.find("<=");
        if (sep == std::string::npos)
          fail(Errc::parse_error, "order token '" + tok + "' is not a<=b", line.number);
        pairs.emplace_back(detail::name_index(names, tok.substr(0, sep), line.number),
                           detail::name_index(names, tok.substr(sep + 2), line.number));
      }
    } else if (key == "matrix") {
      if (names.empty()) fail(Errc::parse_error, "matrix before elements", line.number);
      if (saw_order) fail(Errc::parse_error, "order and matrix lines mixed", line.number);
      saw_matrix = true;
      std::vector<bool> row;
      for (std::size_t t = 1; t < line.tokens.size(); ++t) {
        if (line.tokens[t] != "0" && line.tokens[t] != "1")
          fail(Errc::parse_error, "matrix entries must be 0 or 1", line.number);
        row.push_back(line.tokens[t] == "1");
      }
      if (row.size() != names.size())
        fail(Errc::parse_error, "matrix row has wrong width", line.number);
      matrix.push_back(std::move(row));
    } else if (key == "arrow") {
      if (names.empty()) fail(Errc::parse_error, "arrow before elements", line.number);
      if (line.tokens.size() - 1 != names.size())
        fail(Errc::parse_error, "arrow row has wrong width", line.number);
      arrow_rows.emplace_back(line.tokens.begin() + 1, line.tokens.end());
    } else if (key == "flags") {
      for (std::size_t t = 1; t < line.tokens.size(); ++t) {
        if (line.tokens[t] == "distributive-expected")
          doc.expect_distributive = true;
        else if (line.tokens[t] == "heyting-expected")
          doc.expect_heyting = true;
        else
          fail(Errc::parse_error, "unknown flag '" + line.tokens[t] + "'", line.number);
      }
    } else {
      fail(Errc::parse_error, "unknown keyword '" + key + "'", line.number);
    }
  }
  if (names.empty()) fail(Errc::parse_error, "missing elements line", 1);

  const int n = static_cast<int>(names.size());
  std::vector<std::vector<bool>> order(n, std::vector<bool>(n, false));
  if (saw_matrix) {
    if (static_cast<int>(matrix.size()) != n)
      fail(Errc::parse_error, "matrix has wrong number of rows", lines.back().number);
    order = matrix;
  } else {
    for (int a = 0; a < n; ++a) order[a][a] = true;
    for (auto [a, b] : pairs) order[a][b] = true;
    for (bool changed = true; changed;) {  // transitive closure
      changed = false;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (order[a][b])
            for (int c = 0; c < n; ++c)
              if (order[b][c] && !order[a][c]) {
                order[a][c] = true;
                changed = true;
              }
    }
  }

  doc.lat = validate_lattice(order);
  doc.lat.names = names;
  if (!arrow_rows.empty()) {
    if (static_cast<int>(arrow_rows.size()) != n)
      fail(Errc::parse_error, "arrow table has wrong number of rows", lines.back().number);
    doc.lat.arrow_tab.assign(static_cast<std::size_t>(n) * n, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        doc.lat.arrow_tab[a * n + b] = detail::name_index(names, arrow_rows[a][b], 1);
  }
  return doc;
}

inline LatticeDoc parse_lattice_file(const std::string& text) {
  std::istringstream in(text);
  return parse_lattice_file(in);
}

inline std::string emit_lattice_file(const LatticeDoc& doc) {
  const FiniteLattice& lat = doc.lat;
  std::string out = "GLATTICE 1\n";
  out += "elements";
  for (int a = 0; a < lat.n; ++a) out += " " + lat.name_of(a);
  out += "\n";
  for (int a = 0; a < lat.n; ++a) {
    out += "matrix";
    for (int b = 0; b < lat.n; ++b) out += lat.leq(a, b) ? " 1" : " 0";
    out += "\n";
  }
  if (lat.has_arrow())
    for (int a = 0; a < lat.n; ++a) {
      out += "arrow";
      for (int b = 0; b < lat.n; ++b) out += " " + lat.name_of(lat.arrow(a, b));
      out += "\n";
    }
  if (doc.expect_distributive.value_or(false) || doc.expect_heyting.value_or(false)) {
    out += "flags";
    if (doc.expect_distributive.value_or(false)) out += " distributive-expected";
    if (doc.expect_heyting.value_or(false)) out += " heyting-expected";
    out += "\n";
  }
  return out;
}

inline FrameDoc parse_frame_file(std::istream& in) {
  auto lines = detail::read_lines(in);
  if (lines.empty() || lines[0].tokens != std::vector<std::string>{"GFRAME", "1"})
    fail(Errc::parse_error, "missing GFRAME 1 header", lines.empty() ? 1 : lines[0].number);

  std::vector<std::string> xnames, ynames;
  std::vector<std::pair<int, int>> gal;
  std::vector<std::array<int, 3>> triples;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& line = lines[li];
    const std::string& key = line.tokens[0];
    if (key == "X") {
      xnames.assign(line.tokens.begin() + 1, line.tokens.end());
      detail::check_names(xnames, line.number);
    } else if (key == "Y") {
      ynames.assign(line.tokens.begin() + 1, line.tokens.end());
      detail::check_names(ynames, line.number);
    } else if (key == "gal") {
      if (xnames.empty() || ynames.empty())
        fail(Errc::parse_error, "gal before X and Y", line.number);
      for (std::size_t t = 1; t < line.tokens.size(); ++t) {
        const std::string& tok = line.tokens[t];
        auto sep = tok.find('|');
        if (sep == std::string::npos)
          fail(Errc::parse_error, "gal token '" + tok + "' is not x|y", line.number);
        gal.emplace_back(detail::name_index(xnames, tok.substr(0, sep), line.number),
                         detail::name_index(ynames, tok.substr(sep + 1), line.number));
      }
    } else if (key == "T") {
      if (xnames.empty() || ynames.empty())
        fail(Errc::parse_error, "T before X and Y", line.number);
      for (std::size_t t = 1; t < line.tokens.size(); ++t) {
        const std::string& tok = line.tokens[t];
        auto c1 = tok.find(',');
        auto c2 = c1 == std::string::npos ? std::string::npos : tok.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
          fail(Errc::parse_error, "T token '" + tok + "' is not y,x,v", line.number);
        triples.push_back(
            {detail::name_index(ynames, tok.substr(0, c1), line.number),
             detail::name_index(xnames, tok.substr(c1 + 1, c2 - c1 - 1), line.number),
             detail::name_index(ynames, tok.substr(c2 + 1), line.number)});
      }
    } else {
      fail(Errc::parse_error, "unknown keyword '" + key + "'", line.number);
    }
  }
  if (xnames.empty() || ynames.empty())
    fail(Errc::parse_error, "missing X or Y line", 1);

  Polarity pol = Polarity::from_pairs(static_cast<int>(xnames.size()),
                                      static_cast<int>(ynames.size()), gal);
  SortedRelation t(pol, ImplicativeFrame::t_sorts());
  for (const auto& tr : triples) t.add({tr[0], tr[1], tr[2]});
  return FrameDoc{ImplicativeFrame{std::move(pol), std::move(t)}, std::move(xnames),
                  std::move(ynames)};
}

inline FrameDoc parse_frame_file(const std::string& text) {
  std::istringstream in(text);
  return parse_frame_file(in);
}

inline std::string emit_frame_file(const FrameDoc& doc) {
  const Polarity& pol = doc.frame.pol;
  std::string out = "GFRAME 1\n";
  out += "X";
  for (const auto& n : doc.xnames) out += " " + n;
  out += "\nY";
  for (const auto& n : doc.ynames) out += " " + n;
  out += "\n";
  for (int x = 0; x < pol.nx(); ++x) {
    std::string line;
    for (int y = 0; y < pol.ny(); ++y)
      if (pol.gal(x, y)) line += " " + doc.xnames[x] + "|" + doc.ynames[y];
    if (!line.empty()) out += "gal" + line + "\n";
  }
  doc.frame.T.for_each_input([&](std::span<const int> in_t, Mask sec) {
    std::string line;
    bits::for_each(sec, [&](int y) {
      line += " " + doc.ynames[y] + "," + doc.xnames[in_t[0]] + "," + doc.ynames[in_t[1]];
    });
    if (!line.empty()) out += "T" + line + "\n";
  });
  return out;
}

}  // namespace implat

#endif  // IMPLAT_FILES_HPP
