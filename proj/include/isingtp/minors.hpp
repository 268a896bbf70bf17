#pragma once

#include "isingtp/matrices.hpp"

#include <string>
#include <vector>

namespace isingtp {

struct MinorRecord {
  std::vector<int> rows;  // indices into the matrix
  std::vector<int> cols;
  Rational value;
};

struct MinorReport {
  std::vector<MinorRecord> minors;  // every square submatrix, rows-major order
  Rational min_value;
  std::vector<int> min_rows, min_cols;
  bool nonnegative = true;
  bool totally_positive = true;
};

// Every minor exactly; at most 6 rows and columns.
MinorReport all_minors_nonneg(const CorrelationMatrix& m);
MinorReport all_minors_nonneg_serial(const CorrelationMatrix& m);

// "row_subset,col_subset,minor" with vertex ids joined by '+'.
std::string minors_csv(const CorrelationMatrix& m, const MinorReport& r);

}  // namespace isingtp
