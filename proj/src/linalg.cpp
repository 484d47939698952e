#include "gla/linalg.hpp"

#include <algorithm>

#include "gla/error.hpp"

namespace gla {

SparseVec make_vec(const Field& field,
                   std::vector<std::pair<int, Scalar>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [col, c] : terms) {
    Scalar cc = field.reduce(c);
    if (field.is_zero(cc)) continue;
    if (!out.entries.empty() && out.entries.back().first == col) {
      Scalar s = field.add(out.entries.back().second, cc);
      if (field.is_zero(s))
        out.entries.pop_back();
      else
        out.entries.back().second = std::move(s);
    } else {
      out.push(col, std::move(cc));
    }
  }
  return out;
}

SparseVec vec_add(const Field& field, const SparseVec& a, const SparseVec& b) {
  SparseVec out;
  size_t i = 0, j = 0;
  while (i < a.entries.size() || j < b.entries.size()) {
    if (j >= b.entries.size() ||
        (i < a.entries.size() && a.entries[i].first < b.entries[j].first)) {
      out.entries.push_back(a.entries[i++]);
    } else if (i >= a.entries.size() ||
               b.entries[j].first < a.entries[i].first) {
      out.entries.push_back(b.entries[j++]);
    } else {
      Scalar s = field.add(a.entries[i].second, b.entries[j].second);
      if (!field.is_zero(s)) out.entries.emplace_back(a.entries[i].first, s);
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec vec_scale(const Field& field, const SparseVec& a, const Scalar& c) {
  SparseVec out;
  if (field.is_zero(c)) return out;
  out.entries.reserve(a.entries.size());
  for (const auto& [col, v] : a.entries)
    out.entries.emplace_back(col, field.mul(v, c));
  return out;
}

void RowReducer::normalize(SparseVec& v) const {
  if (v.empty()) return;
  if (field_.kind() == Field::Kind::Prime) {
    // monic
    Scalar inv = field_.inv(v.lead_coeff());
    for (auto& [c, x] : v.entries) x = field_.mul(x, inv);
    return;
  }
  // Rationals: primitive integer vector with positive leading coefficient.
  mpz_class den_lcm = 1;
  for (auto& [c, x] : v.entries)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            x.get_den().get_mpz_t());
  mpz_class num_gcd = 0;
  std::vector<mpz_class> nums;
  nums.reserve(v.entries.size());
  for (auto& [c, x] : v.entries) {
    mpz_class n = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    nums.push_back(std::move(n));
  }
  bool flip = nums.front() < 0;
  for (size_t i = 0; i < nums.size(); ++i) {
    mpz_class n = nums[i] / num_gcd;
    if (flip) n = -n;
    v.entries[i].second = Scalar(n);
  }
}

bool RowReducer::insert(SparseVec row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  normalize(row);
  int lead = row.lead();
  lead_to_row_[lead] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

SparseVec RowReducer::reduce(SparseVec v) const {
  // Eliminate left-to-right; each step either retires the leading entry for
  // good or cancels it against the unique stored row with that pivot.
  std::vector<std::pair<int, Scalar>> done;
  while (!v.entries.empty()) {
    auto it = lead_to_row_.find(v.entries.front().first);
    if (it == lead_to_row_.end()) {
      done.push_back(std::move(v.entries.front()));
      v.entries.erase(v.entries.begin());
      continue;
    }
    const SparseVec& r = rows_[it->second];
    // v := v - (v_lead / r_lead) * r  (exact)
    Scalar factor = field_.neg(field_.div(v.entries.front().second,
                                          r.lead_coeff()));
    v = vec_add(field_, v, vec_scale(field_, r, factor));
  }
  SparseVec out;
  out.entries = std::move(done);
  return out;
}

void RowReducer::to_rref() {
  // Clean rows against later pivots, walking pivots right-to-left so each
  // row needs a single pass; then make pivots 1.
  std::vector<std::pair<int, int>> pivots(lead_to_row_.begin(),
                                          lead_to_row_.end());
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    int col = it->first;
    const SparseVec cleaner = rows_[it->second];  // copy: rows_ mutates below
    for (auto& row : rows_) {
      if (row.lead() == col) continue;
      // find entry at col
      auto pos = std::lower_bound(
          row.entries.begin(), row.entries.end(), col,
          [](const auto& e, int c) { return e.first < c; });
      if (pos == row.entries.end() || pos->first != col) continue;
      Scalar factor =
          field_.neg(field_.div(pos->second, cleaner.lead_coeff()));
      row = vec_add(field_, row, vec_scale(field_, cleaner, factor));
    }
  }
  for (auto& row : rows_) {
    Scalar inv = field_.inv(row.lead_coeff());
    for (auto& [c, x] : row.entries) x = field_.mul(x, inv);
  }
  // normalization may have changed nothing structural; rebuild the lead map
  lead_to_row_.clear();
  for (size_t i = 0; i < rows_.size(); ++i)
    lead_to_row_[rows_[i].lead()] = static_cast<int>(i);
}

std::vector<const SparseVec*> RowReducer::sorted_rows() const {
  std::vector<const SparseVec*> out;
  out.reserve(rows_.size());
  for (const auto& [lead, idx] : lead_to_row_) out.push_back(&rows_[idx]);
  return out;
}

std::vector<int> RowReducer::pivot_columns() const {
  std::vector<int> out;
  out.reserve(lead_to_row_.size());
  for (const auto& [lead, idx] : lead_to_row_) out.push_back(lead);
  return out;
}

MapKernel map_rank_kernel(const Field& field, int target_cols,
                          const std::vector<SparseVec>& images,
                          bool want_kernel) {
  MapKernel out;
  if (!want_kernel) {
    RowReducer red(field, target_cols);
    for (const auto& img : images) red.insert(img);
    out.rank = red.rank();
    return out;
  }
  // Augment [image | e_i]: rows that die in the target block expose the
  // dependency among domain vectors in the augmented block.
  int n = static_cast<int>(images.size());
  RowReducer red(field, target_cols + n);
  for (int i = 0; i < n; ++i) {
    SparseVec row = images[i];
    row.push(target_cols + i, field.one());
    if (!red.insert(std::move(row))) continue;
  }
  for (const SparseVec* row : red.sorted_rows()) {
    if (row->lead() >= target_cols) {
      SparseVec k;
      for (const auto& [col, c] : row->entries)
        k.push(col - target_cols, c);
      out.kernel.push_back(std::move(k));
    }
  }
  out.rank = n - static_cast<int>(out.kernel.size());
  return out;
}

}  // namespace gla
