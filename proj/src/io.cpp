#include "polymat/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace polymat::io {

namespace {

// Whitespace token stream with '#' line comments.
class Tokens {
 public:
  explicit Tokens(std::istream& in) : in_(in) {}

  bool next(std::string& tok) {
    while (in_ >> tok) {
      if (tok[0] == '#') {
        std::string rest;
        std::getline(in_, rest);
        continue;
      }
      return true;
    }
    return false;
  }

  std::string expect(const char* what) {
    std::string tok;
    if (!next(tok))
      throw ParseError(std::string("unexpected end of input, expected ") +
                       what);
    return tok;
  }

  long expect_long(const char* what) {
    const std::string tok = expect(what);
    try {
      std::size_t used = 0;
      const long v = std::stol(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      throw ParseError("expected integer for " + std::string(what) +
                       ", got '" + tok + "'");
    }
  }

  void expect_keyword(const char* kw) {
    const std::string tok = expect(kw);
    if (tok != kw)
      throw ParseError("expected keyword '" + std::string(kw) + "', got '" +
                       tok + "'");
  }

 private:
  std::istream& in_;
};

}  // namespace

SetFunction read_setfn(std::istream& in) {
  Tokens toks(in);
  toks.expect_keyword("n");
  const long n = toks.expect_long("n");
  if (n < 1 || n > kDenseCap)
    throw ParseError("n out of range [1, " + std::to_string(kDenseCap) + "]");

  toks.expect_keyword("elements");
  std::vector<std::string> labels;
  for (long i = 0; i < n; ++i) labels.push_back(toks.expect("element name"));

  toks.expect_keyword("values");
  const std::size_t count = std::size_t{1} << n;
  QVec v(static_cast<Eigen::Index>(count));
  for (std::size_t i = 0; i < count; ++i) {
    const std::string tok = toks.expect("value");
    try {
      v[static_cast<Eigen::Index>(i)] = parse_rat(tok);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }

  try {
    return SetFunction(GroundSet(std::move(labels)), std::move(v));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

SetFunction read_setfn_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_setfn(in);
}

void write_setfn(std::ostream& out, const SetFunction& f) {
  out << "n " << f.n() << "\n";
  out << "elements";
  for (const auto& l : f.ground().labels()) out << ' ' << l;
  out << "\n";
  out << "values\n";
  const Eigen::Index count = f.values().size();
  for (Eigen::Index i = 0; i < count; ++i) {
    out << to_string(f.values()[i]);
    out << (((i + 1) % 16 == 0 || i + 1 == count) ? '\n' : ' ');
  }
}

RayFile read_rays(std::istream& in) {
  Tokens toks(in);
  RayFile rf;
  const long n = toks.expect_long("n");
  if (n < 1 || n > kDenseCap) throw ParseError("ray header: n out of range");
  const long count = toks.expect_long("count");
  if (count < 0) throw ParseError("ray header: negative count");
  rf.n = static_cast<int>(n);
  const Eigen::Index table = Eigen::Index{1} << n;
  for (long r = 0; r < count; ++r) {
    Ray ray;
    ray.values = ZVec(table);
    for (Eigen::Index i = 0; i < table; ++i) {
      const std::string tok = toks.expect("ray value");
      try {
        Rat q = parse_rat(tok);
        if (q.get_den() != 1) throw std::invalid_argument("not an integer");
        ray.values[i] = q.get_num();
      } catch (const std::invalid_argument&) {
        throw ParseError("ray values must be integers, got '" + tok + "'");
      }
      if (ray.values[i] < 0)
        throw ParseError("ray values must be nonnegative");
    }
    if (ray.values[0] != 0) throw ParseError("ray value at {} must be 0");
    rf.rays.push_back(std::move(ray));
  }
  return rf;
}

RayFile read_rays_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_rays(in);
}

void write_rays(std::ostream& out, int n, const std::vector<Ray>& rays) {
  out << n << ' ' << rays.size() << "\n";
  for (const Ray& r : rays) {
    for (Eigen::Index i = 0; i < r.values.size(); ++i) {
      if (i) out << ' ';
      out << to_string(r.values[i]);
    }
    out << "\n";
  }
}

}  // namespace polymat::io
