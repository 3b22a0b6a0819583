#ifndef BQALG_ZP_MATRIX_HPP_
#define BQALG_ZP_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bqalg {

  // Arithmetic in Z/pZ for a prime p < 2^31.
  class PrimeField {
   public:
    static constexpr std::uint32_t default_modulus = 101;

    // Throws InvalidInput unless p is a prime below 2^31.
    explicit PrimeField(std::uint32_t p = default_modulus);

    [[nodiscard]] std::uint32_t modulus() const noexcept {
      return _p;
    }
    [[nodiscard]] std::uint32_t add(std::uint32_t x, std::uint32_t y) const noexcept {
      std::uint64_t const s = std::uint64_t{x} + y;
      return static_cast<std::uint32_t>(s >= _p ? s - _p : s);
    }
    [[nodiscard]] std::uint32_t sub(std::uint32_t x, std::uint32_t y) const noexcept {
      return x >= y ? x - y : static_cast<std::uint32_t>(std::uint64_t{x} + _p - y);
    }
    [[nodiscard]] std::uint32_t mul(std::uint32_t x, std::uint32_t y) const noexcept {
      return static_cast<std::uint32_t>(std::uint64_t{x} * y % _p);
    }
    [[nodiscard]] std::uint32_t neg(std::uint32_t x) const noexcept {
      return x == 0 ? 0 : _p - x;
    }
    // x != 0
    [[nodiscard]] std::uint32_t inv(std::uint32_t x) const;

    bool operator==(PrimeField const&) const = default;

   private:
    std::uint32_t _p;
  };

  // Dense row-major matrix over Z/p. Vectors are columns.
  class ZpMatrix {
   public:
    ZpMatrix() = default;
    ZpMatrix(std::size_t rows, std::size_t cols) : _rows(rows), _cols(cols), _data(rows * cols, 0) {}

    static ZpMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const noexcept {
      return _rows;
    }
    [[nodiscard]] std::size_t cols() const noexcept {
      return _cols;
    }
    std::uint32_t& operator()(std::size_t r, std::size_t c) {
      return _data[r * _cols + c];
    }
    std::uint32_t operator()(std::size_t r, std::size_t c) const {
      return _data[r * _cols + c];
    }

    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] std::vector<std::uint32_t> column(std::size_t c) const;
    void set_column(std::size_t c, std::vector<std::uint32_t> const& v);

    bool operator==(ZpMatrix const&) const = default;

   private:
    std::size_t                _rows = 0;
    std::size_t                _cols = 0;
    std::vector<std::uint32_t> _data;
  };

  [[nodiscard]] ZpMatrix multiply(PrimeField const& f, ZpMatrix const& a, ZpMatrix const& b);

  // Horizontal concatenation; all blocks must have `rows` rows.
  [[nodiscard]] ZpMatrix hconcat(std::size_t rows, std::vector<ZpMatrix> const& blocks);

  struct RowEchelon {
    ZpMatrix                 reduced;  // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  };

  // Gauss-Jordan elimination, always choosing the first nonzero entry in a
  // column as pivot, so results are reproducible.
  [[nodiscard]] RowEchelon row_echelon(PrimeField const& f, ZpMatrix m);

  [[nodiscard]] std::size_t rank(PrimeField const& f, ZpMatrix const& m);

  // Columns form a basis of the nullspace {x : m x = 0}; one basis vector
  // per free column, in column order.
  [[nodiscard]] ZpMatrix nullspace(PrimeField const& f, ZpMatrix const& m);

  // The linearly independent columns of m, chosen greedily left to right.
  [[nodiscard]] ZpMatrix column_basis(PrimeField const& f, ZpMatrix const& m);

  // X with basis * X = rhs, where basis has full column rank and every
  // column of rhs lies in its column space. Throws InternalError otherwise.
  [[nodiscard]] ZpMatrix solve(PrimeField const& f, ZpMatrix const& basis, ZpMatrix const& rhs);

}  // namespace bqalg

#endif  // BQALG_ZP_MATRIX_HPP_
