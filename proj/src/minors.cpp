#include "isingtp/minors.hpp"

#include "isingtp/errors.hpp"

#include <bit>
#include <cstdint>

namespace isingtp {

namespace {

std::vector<int> bits_of(std::uint32_t m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> square_subsets(const CorrelationMatrix& m) {
  const std::size_t r = m.entries.size();
  const std::size_t c = r ? m.entries[0].size() : 0;
  if (r > 6 || c > 6) throw CapacityError("minor enumeration limited to 6 rows and columns");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t rm = 1; rm < (1u << r); ++rm)
    for (std::uint32_t cm = 1; cm < (1u << c); ++cm)
      if (std::popcount(rm) == std::popcount(cm)) out.emplace_back(rm, cm);
  return out;
}

MinorRecord minor_of(const CorrelationMatrix& m, std::uint32_t rm, std::uint32_t cm) {
  MinorRecord rec{bits_of(rm), bits_of(cm), 0};
  RationalMatrix sub;
  for (int i : rec.rows) {
    std::vector<Rational> row;
    for (int j : rec.cols) row.push_back(m.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    sub.push_back(std::move(row));
  }
  rec.value = det_exact(sub);
  return rec;
}

MinorReport summarize(std::vector<MinorRecord> minors) {
  MinorReport r;
  r.minors = std::move(minors);
  for (std::size_t i = 0; i < r.minors.size(); ++i) {
    const auto& rec = r.minors[i];
    if (i == 0 || rec.value < r.min_value) {
      r.min_value = rec.value;
      r.min_rows = rec.rows;
      r.min_cols = rec.cols;
    }
    if (rec.value < 0) r.nonnegative = false;
    if (rec.value <= 0) r.totally_positive = false;
  }
  return r;
}

}  // namespace

MinorReport all_minors_nonneg_serial(const CorrelationMatrix& m) {
  std::vector<MinorRecord> minors;
  for (auto [rm, cm] : square_subsets(m)) minors.push_back(minor_of(m, rm, cm));
  return summarize(std::move(minors));
}

MinorReport all_minors_nonneg(const CorrelationMatrix& m) {
  const auto subsets = square_subsets(m);
  std::vector<MinorRecord> minors(subsets.size());
  const long count = static_cast<long>(subsets.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i)
    minors[static_cast<std::size_t>(i)] =
        minor_of(m, subsets[static_cast<std::size_t>(i)].first, subsets[static_cast<std::size_t>(i)].second);
  return summarize(std::move(minors));
}

std::string minors_csv(const CorrelationMatrix& m, const MinorReport& r) {
  auto join = [](const std::vector<int>& idx, const std::vector<int>& labels) {
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) s += "+";
      s += std::to_string(labels[static_cast<std::size_t>(idx[i])]);
    }
    return s;
  };
  std::string s = "row_subset,col_subset,minor\n";
  for (const auto& rec : r.minors) s += join(rec.rows, m.rows) + "," + join(rec.cols, m.cols) + "," + to_string(rec.value) + "\n";
  return s;
}

}  // namespace isingtp
