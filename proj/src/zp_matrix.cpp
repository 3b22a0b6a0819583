#include "bqalg/zp_matrix.hpp"

#include <string>

#include "bqalg/error.hpp"

namespace bqalg {

  PrimeField::PrimeField(std::uint32_t p) : _p(p) {
    bool prime = p >= 2 && p < (1u << 31);
    for (std::uint32_t d = 2; prime && std::uint64_t{d} * d <= p; ++d) {
      prime = p % d != 0;
    }
    if (!prime) {
      throw InvalidInput("field modulus " + std::to_string(p) + " is not a prime below 2^31");
    }
  }

  std::uint32_t PrimeField::inv(std::uint32_t x) const {
    if (x % _p == 0) {
      throw InvalidInput("zero has no inverse");
    }
    // Fermat
    std::uint64_t result = 1;
    std::uint64_t base   = x % _p;
    std::uint32_t e      = _p - 2;
    while (e != 0) {
      if (e & 1u) {
        result = result * base % _p;
      }
      base = base * base % _p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
  }

  ZpMatrix ZpMatrix::identity(std::size_t n) {
    ZpMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      m(k, k) = 1;
    }
    return m;
  }

  bool ZpMatrix::is_zero() const noexcept {
    for (auto x : _data) {
      if (x != 0) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::uint32_t> ZpMatrix::column(std::size_t c) const {
    std::vector<std::uint32_t> v(_rows);
    for (std::size_t r = 0; r < _rows; ++r) {
      v[r] = (*this)(r, c);
    }
    return v;
  }

  void ZpMatrix::set_column(std::size_t c, std::vector<std::uint32_t> const& v) {
    for (std::size_t r = 0; r < _rows; ++r) {
      (*this)(r, c) = v[r];
    }
  }

  ZpMatrix multiply(PrimeField const& f, ZpMatrix const& a, ZpMatrix const& b) {
    if (a.cols() != b.rows()) {
      throw InternalError("matrix product with mismatched shapes");
    }
    ZpMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        std::uint32_t const x = a(i, k);
        if (x == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
        }
      }
    }
    return c;
  }

  ZpMatrix hconcat(std::size_t rows, std::vector<ZpMatrix> const& blocks) {
    std::size_t cols = 0;
    for (auto const& b : blocks) {
      if (b.rows() != rows) {
        throw InternalError("hconcat with mismatched row counts");
      }
      cols += b.cols();
    }
    ZpMatrix m(rows, cols);
    std::size_t offset = 0;
    for (auto const& b : blocks) {
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
          m(r, offset + c) = b(r, c);
        }
      }
      offset += b.cols();
    }
    return m;
  }

  RowEchelon row_echelon(PrimeField const& f, ZpMatrix m) {
    RowEchelon  result;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
      std::size_t pivot = row;
      while (pivot < m.rows() && m(pivot, col) == 0) {
        ++pivot;
      }
      if (pivot == m.rows()) {
        continue;
      }
      if (pivot != row) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
          std::swap(m(pivot, c), m(row, c));
        }
      }
      std::uint32_t const scale = f.inv(m(row, col));
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(row, c) = f.mul(m(row, c), scale);
      }
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r == row || m(r, col) == 0) {
          continue;
        }
        std::uint32_t const factor = m(r, col);
        for (std::size_t c = col; c < m.cols(); ++c) {
          m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
        }
      }
      result.pivots.push_back(col);
      ++row;
    }
    result.reduced = std::move(m);
    return result;
  }

  std::size_t rank(PrimeField const& f, ZpMatrix const& m) {
    return row_echelon(f, m).pivots.size();
  }

  ZpMatrix nullspace(PrimeField const& f, ZpMatrix const& m) {
    RowEchelon const  e = row_echelon(f, m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) {
      is_pivot[c] = true;
    }
    ZpMatrix    basis(m.cols(), m.cols() - e.pivots.size());
    std::size_t k = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
      if (is_pivot[free]) {
        continue;
      }
      basis(free, k) = 1;
      for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        basis(e.pivots[r], k) = f.neg(e.reduced(r, free));
      }
      ++k;
    }
    return basis;
  }

  ZpMatrix column_basis(PrimeField const& f, ZpMatrix const& m) {
    RowEchelon const e = row_echelon(f, m);
    ZpMatrix         basis(m.rows(), e.pivots.size());
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
      basis.set_column(k, m.column(e.pivots[k]));
    }
    return basis;
  }

  ZpMatrix solve(PrimeField const& f, ZpMatrix const& basis, ZpMatrix const& rhs) {
    if (basis.rows() != rhs.rows()) {
      throw InternalError("solve with mismatched row counts");
    }
    std::size_t const k = basis.cols();
    RowEchelon const  e = row_echelon(f, hconcat(basis.rows(), {basis, rhs}));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      if (e.pivots[r] >= k) {
        throw InternalError("vector outside the span of the basis");
      }
    }
    if (e.pivots.size() != k) {
      throw InternalError("basis columns are linearly dependent");
    }
    ZpMatrix x(k, rhs.cols());
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < rhs.cols(); ++c) {
        x(r, c) = e.reduced(r, k + c);
      }
    }
    return x;
  }

}  // namespace bqalg
