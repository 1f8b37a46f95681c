#include "qmom/problem_io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qmom/error.hpp"

namespace qmom {

namespace {

struct Token {
  std::string text;
  int col = 0; // 1-based
};

// Splits one line on blanks; '#' starts a comment. The trailing '\r' of CRLF
// input is stripped before this is called.
std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#')
      break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != '#')
      ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

[[noreturn]] void fail(const std::string& origin, int line, int col,
                       const std::string& msg) {
  throw Error(Error::Kind::parse, origin + ":" + std::to_string(line) + ":" +
                                      std::to_string(col) + ": " + msg);
}

int parse_dim(const std::string& origin, int line, const Token& tok) {
  const std::string& s = tok.text;
  std::size_t i = (s.size() > 1 && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  if (i == s.size())
    fail(origin, line, tok.col, "malformed dimension \"" + s + "\"");
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      fail(origin, line, tok.col, "malformed dimension \"" + s + "\"");
  return std::atoi(s.c_str());
}

double parse_double_strict(const std::string& s, bool& ok) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  ok = (errno == 0 && end == s.c_str() + s.size() && !s.empty());
  return v;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (const char c : text) {
    if (c == '\n') {
      if (!cur.empty() && cur.back() == '\r')
        cur.pop_back();
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty() && cur.back() == '\r')
    cur.pop_back();
  lines.push_back(cur);
  return lines;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(Error::Kind::io, "cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

Problem parse_problem(const std::string& text, const std::string& origin) {
  Problem p;
  enum class Section { none, vertices, arrows, options };
  Section section = Section::none;

  const auto lines = split_lines(text);
  for (int ln = 1; ln <= static_cast<int>(lines.size()); ++ln) {
    const auto toks = tokenize(lines[ln - 1]);
    if (toks.empty())
      continue;

    if (toks[0].text.front() == '[') {
      if (toks.size() != 1)
        fail(origin, ln, toks[1].col, "unexpected token after section header");
      const std::string& h = toks[0].text;
      if (h == "[vertices]")
        section = Section::vertices;
      else if (h == "[arrows]")
        section = Section::arrows;
      else if (h == "[options]")
        section = Section::options;
      else
        fail(origin, ln, toks[0].col, "unknown section " + h);
      continue;
    }

    switch (section) {
    case Section::none:
      fail(origin, ln, toks[0].col, "content before the first section header");
    case Section::vertices: {
      if (toks.size() != 3)
        fail(origin, ln, toks[0].col,
             "vertex line must be: <id> <dim> <theta>");
      const std::string& id = toks[0].text;
      p.quiver.vertices.push_back(id);
      p.dims.dims[id] = parse_dim(origin, ln, toks[1]);
      try {
        p.theta.theta[id] = parse_rational(toks[2].text);
      } catch (const Error& e) {
        fail(origin, ln, toks[2].col, e.what());
      }
      break;
    }
    case Section::arrows: {
      if (toks.size() != 3)
        fail(origin, ln, toks[0].col, "arrow line must be: <id> <src> <tgt>");
      p.quiver.arrows.push_back({toks[0].text, toks[1].text, toks[2].text});
      break;
    }
    case Section::options: {
      if (toks.size() != 2)
        fail(origin, ln, toks[0].col, "option line must be: <name> <value>");
      if (toks[0].text == "seed") {
        errno = 0;
        char* end = nullptr;
        const unsigned long long v = std::strtoull(toks[1].text.c_str(), &end, 10);
        if (errno != 0 || end != toks[1].text.c_str() + toks[1].text.size())
          fail(origin, ln, toks[1].col, "malformed seed \"" + toks[1].text + "\"");
        p.seed = v;
      } else if (toks[0].text == "tolerance") {
        bool ok = false;
        const double v = parse_double_strict(toks[1].text, ok);
        if (!ok || !(v > 0.0))
          fail(origin, ln, toks[1].col,
               "malformed tolerance \"" + toks[1].text + "\"");
        p.tol_scale = v;
      } else {
        fail(origin, ln, toks[0].col, "unknown option \"" + toks[0].text + "\"");
      }
      break;
    }
    }
  }
  return p;
}

Problem load_problem(const std::string& path) {
  return parse_problem(read_file(path), path);
}

std::string serialize_problem(const Problem& p) {
  std::ostringstream out;
  out << "[vertices]\n";
  for (const auto& v : p.quiver.vertices) {
    out << v << " ";
    auto dit = p.dims.dims.find(v);
    out << (dit == p.dims.dims.end() ? 0 : dit->second) << " ";
    auto tit = p.theta.theta.find(v);
    out << (tit == p.theta.theta.end() ? "0" : to_string(tit->second)) << "\n";
  }
  out << "[arrows]\n";
  for (const auto& a : p.quiver.arrows)
    out << a.id << " " << a.src << " " << a.tgt << "\n";
  if (p.seed || p.tol_scale) {
    out << "[options]\n";
    if (p.seed)
      out << "seed " << *p.seed << "\n";
    if (p.tol_scale) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.17g", *p.tol_scale);
      out << "tolerance " << buf << "\n";
    }
  }
  return out.str();
}

Complex parse_complex(const std::string& token) {
  if (token.empty())
    throw Error(Error::Kind::parse, "empty complex literal");

  if (token.back() != 'i') {
    bool ok = false;
    const double re = parse_double_strict(token, ok);
    if (!ok)
      throw Error(Error::Kind::parse, "malformed complex literal \"" + token + "\"");
    return {re, 0.0};
  }

  const std::string body = token.substr(0, token.size() - 1);
  // Find the sign separating the real and imaginary parts: the last '+'/'-'
  // that is neither leading nor part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') &&
        body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }

  auto parse_imag_text = [&](const std::string& s) -> double {
    if (s.empty() || s == "+")
      return 1.0;
    if (s == "-")
      return -1.0;
    bool ok = false;
    const double v = parse_double_strict(s, ok);
    if (!ok)
      throw Error(Error::Kind::parse, "malformed complex literal \"" + token + "\"");
    return v;
  };

  if (split == std::string::npos)
    return {0.0, parse_imag_text(body)};

  bool ok = false;
  const double re = parse_double_strict(body.substr(0, split), ok);
  if (!ok)
    throw Error(Error::Kind::parse, "malformed complex literal \"" + token + "\"");
  const std::string imag_text = body.substr(split);
  return {re, parse_imag_text(imag_text)};
}

std::string format_complex(const Complex& z) {
  char buf[80];
  // + 0.0 turns negative zeros into plain zeros
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real() + 0.0, z.imag() + 0.0);
  return buf;
}

RepPoint parse_rep(const RepSpace& sp, const std::string& text,
                   const std::string& origin) {
  RepPoint rep = sp.zero_point();
  std::vector<bool> seen(sp.arrow_count(), false);

  const auto lines = split_lines(text);
  int ln = 0;
  const int total = static_cast<int>(lines.size());

  auto next_tokens = [&]() -> std::vector<Token> {
    while (ln < total) {
      auto toks = tokenize(lines[ln]);
      ++ln;
      if (!toks.empty())
        return toks;
    }
    return {};
  };

  for (;;) {
    const auto head = next_tokens();
    if (head.empty())
      break;
    if (head.size() != 1)
      fail(origin, ln, head[1].col, "expected a lone arrow id");
    const std::string& id = head[0].text;
    int a = -1;
    try {
      a = sp.arrow_index(id);
    } catch (const Error&) {
      fail(origin, ln, head[0].col, "unknown arrow \"" + id + "\"");
    }
    if (seen[a])
      fail(origin, ln, head[0].col, "arrow \"" + id + "\" given twice");
    seen[a] = true;

    const int nrows = sp.rows(a);
    const int ncols = sp.cols(a);
    if (nrows == 0 || ncols == 0)
      continue; // no data for zero-dimensional blocks
    for (int r = 0; r < nrows; ++r) {
      const auto row = next_tokens();
      if (row.empty())
        throw Error(Error::Kind::shape,
                    origin + ": arrow \"" + id + "\" expects a " +
                        std::to_string(nrows) + "x" + std::to_string(ncols) +
                        " matrix; row " + std::to_string(r + 1) + " is missing");
      if (static_cast<int>(row.size()) != ncols)
        throw Error(Error::Kind::shape,
                    origin + ":" + std::to_string(ln) + ": arrow \"" + id +
                        "\" expects a " + std::to_string(nrows) + "x" +
                        std::to_string(ncols) + " matrix; row has " +
                        std::to_string(row.size()) + " entries");
      for (int c = 0; c < ncols; ++c) {
        try {
          rep.mats[a](r, c) = parse_complex(row[c].text);
        } catch (const Error& e) {
          fail(origin, ln, row[c].col, e.what());
        }
      }
    }
  }

  for (int a = 0; a < sp.arrow_count(); ++a)
    if (!seen[a])
      throw Error(Error::Kind::shape, origin + ": arrow \"" + sp.arrow_id(a) +
                                          "\" has no matrix (expected " +
                                          std::to_string(sp.rows(a)) + "x" +
                                          std::to_string(sp.cols(a)) + ")");
  return rep;
}

RepPoint load_rep(const RepSpace& sp, const std::string& path) {
  return parse_rep(sp, read_file(path), path);
}

std::string serialize_rep(const RepSpace& sp, const RepPoint& rho) {
  std::ostringstream out;
  for (int a = 0; a < sp.arrow_count(); ++a) {
    out << sp.arrow_id(a) << "\n";
    for (int r = 0; r < sp.rows(a); ++r) {
      for (int c = 0; c < sp.cols(a); ++c)
        out << (c ? " " : "") << format_complex(rho.mats[a](r, c));
      out << "\n";
    }
  }
  return out.str();
}

} // namespace qmom
