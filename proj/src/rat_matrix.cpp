#include "amm/rat_matrix.hpp"

#include <sstream>

#include "json.hpp"

#include "amm/errors.hpp"

namespace amm {

int bareiss_rank(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Integer prev = 1;
  std::size_t r = 0;
  Integer tmp;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Integer& pivot = m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        // m(i,j) = (pivot * m(i,j) - m(i,c) * m(r,j)) / prev, exact
        mpz_mul(tmp.get_mpz_t(), pivot.get_mpz_t(), m(i, j).get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), m(i, c).get_mpz_t(), m(r, j).get_mpz_t());
        mpz_divexact(m(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = pivot;
    ++r;
  }
  return static_cast<int>(r);
}

IntMatrix clear_denominators(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (const auto& x : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = m(i, j);
      Integer scaled;
      mpz_divexact(scaled.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
      out(i, j) = scaled * x.get_num();
    }
  }
  return out;
}

int exact_rank(const RatMatrix& m) { return bareiss_rank(clear_denominators(m)); }

std::vector<std::vector<Rational>> kernel_exact(const RatMatrix& m) {
  RatMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivot_cols) is_pivot[c] = 1;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rational> multiply(const RatMatrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (v[j] != 0) out[i] += m(i, j) * v[j];
  return out;
}

bool is_symmetric(const RatMatrix& m) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

std::string to_csv(const RatMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += m(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

namespace {

Rational parse_rational(const std::string& s, std::size_t row, std::size_t col) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw InputError("bad rational '" + s + "' at row " + std::to_string(row) + ", column " + std::to_string(col));
  q.canonicalize();
  return q;
}

}  // namespace

RatMatrix parse_rat_csv(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<Rational> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(parse_rational(cell, rows.size(), row.size()));
    if (!rows.empty() && row.size() != rows.front().size())
      throw InputError("ragged matrix CSV at row " + std::to_string(rows.size()));
    rows.push_back(std::move(row));
  }
  RatMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

std::string to_json(const RatMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back({{"num", m(i, j).get_num().get_str()}, {"den", m(i, j).get_den().get_str()}});
    entries.push_back(std::move(row));
  }
  nlohmann::json doc = {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
  return doc.dump();
}

RatMatrix parse_rat_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("matrix JSON: ") + e.what());
  }
  const auto rows = doc.at("rows").get<std::size_t>();
  const auto cols = doc.at("cols").get<std::size_t>();
  RatMatrix m(rows, cols);
  const auto& entries = doc.at("entries");
  if (entries.size() != rows) throw InputError("matrix JSON: row count mismatch");
  for (std::size_t i = 0; i < rows; ++i) {
    if (entries[i].size() != cols) throw InputError("matrix JSON: column count mismatch in row " + std::to_string(i));
    for (std::size_t j = 0; j < cols; ++j) {
      const auto& e = entries[i][j];
      m(i, j) = parse_rational(e.at("num").get<std::string>() + "/" + e.at("den").get<std::string>(), i, j);
    }
  }
  return m;
}

}  // namespace amm
