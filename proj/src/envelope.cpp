#include "gla/envelope.hpp"

#include <algorithm>
#include <utility>

#include "gla/error.hpp"
#include "gla/series.hpp"

namespace gla {

namespace {

// Appends every weakly increasing extension of `prefix` by letters >= lo
// whose degrees sum to `remaining`, strict at odd-degree letters.
void enumerate(const GradedLieAlgebra& L, int lo, int remaining,
               std::vector<int>& prefix,
               std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int i = lo; i < L.size(); ++i) {
    int d = L.element(i).degree;
    if (d > remaining) continue;
    bool odd = L.parity(i) == 1;
    if (odd && !prefix.empty() && prefix.back() == i) continue;
    prefix.push_back(i);
    enumerate(L, i, remaining - d, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

EnvelopeBasis::EnvelopeBasis(GradedLieAlgebra L, int truncation)
    : algebra_(std::move(L)), truncation_(truncation) {
  if (truncation_ < 0)
    fail(ErrorKind::BadInput, "envelope window must be nonnegative");
  if (truncation_ > algebra_.truncation())
    fail(ErrorKind::Truncation,
         "envelope window " + std::to_string(truncation_) +
             " exceeds the algebra's known range [0, " +
             std::to_string(algebra_.truncation()) + "]");
  by_degree_.resize(truncation_ + 1);
  for (int d = 0; d <= truncation_; ++d) {
    std::vector<std::vector<int>> monos;
    std::vector<int> prefix;
    enumerate(algebra_, 0, d, prefix, monos);
    std::sort(monos.begin(), monos.end());
    for (auto& m : monos) {
      int k = static_cast<int>(letters_.size());
      index_.emplace(m, k);
      by_degree_[d].push_back(k);
      degree_.push_back(d);
      letters_.push_back(std::move(m));
    }
  }
  DimensionSequence expect = pbw_series(algebra_.dims());
  for (int d = 0; d <= truncation_; ++d)
    if (expect.at(d) != BigInt(static_cast<long>(by_degree_[d].size())))
      fail(ErrorKind::Internal,
           "monomial count disagrees with the enveloping series at degree " +
               std::to_string(d));
}

const std::vector<int>& EnvelopeBasis::at_degree(int d) const {
  if (d < 0 || d > truncation_)
    fail(ErrorKind::Truncation,
         "degree " + std::to_string(d) + " is outside the window [0, " +
             std::to_string(truncation_) + "]");
  return by_degree_[d];
}

int EnvelopeBasis::find(const std::vector<int>& letters) const {
  auto it = index_.find(letters);
  return it == index_.end() ? -1 : it->second;
}

DimensionSequence EnvelopeBasis::dims() const {
  DimensionSequence out = DimensionSequence::zeros(truncation_);
  for (int d = 0; d <= truncation_; ++d)
    out.set(d, BigInt(static_cast<long>(by_degree_[d].size())));
  return out;
}

std::string EnvelopeBasis::name(int k) const {
  const auto& word = letters_.at(k);
  if (word.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < word.size();) {
    size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    if (!out.empty()) out += "*";
    out += algebra_.element(word[i]).name;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

const SparseVec& EnvelopeBasis::left_mult(int lie, int k) const {
  if (lie < 0 || lie >= algebra_.size())
    fail(ErrorKind::BadInput, "lie index out of range");
  auto key = std::make_pair(lie, k);
  auto it = mult_cache_.find(key);
  if (it != mult_cache_.end()) return it->second;
  int target = algebra_.element(lie).degree + degree_.at(k);
  if (target > truncation_)
    fail(ErrorKind::Truncation,
         "product degree " + std::to_string(target) +
             " leaves the envelope window [0, " + std::to_string(truncation_) +
             "]");
  const Field& F = algebra_.field();
  const std::vector<int>& word = letters_[k];
  SparseVec out;
  if (word.empty()) {
    out.push(find({lie}), F.one());
  } else {
    int j = word[0];
    if (lie < j || (lie == j && algebra_.parity(lie) == 0)) {
      std::vector<int> nw;
      nw.reserve(word.size() + 1);
      nw.push_back(lie);
      nw.insert(nw.end(), word.begin(), word.end());
      out.push(find(nw), F.one());
    } else {
      std::vector<int> rest(word.begin() + 1, word.end());
      int rk = find(rest);
      if (lie == j) {
        // Square of an odd element: x*x = [x,x]/2.
        Scalar half = F.inv(F.from_long(2));
        SparseVec br = algebra_.basis_bracket(lie, lie);
        for (const auto& [f, c] : br.entries)
          out = vec_add(F, out,
                        vec_scale(F, left_mult(f, rk), F.mul(half, c)));
      } else {
        // x_i x_j = (-1)^{|i||j|} x_j x_i + [x_i, x_j] with i > j.
        SparseVec t1 = left_mult_vec(j, left_mult(lie, rk));
        if (algebra_.parity(lie) && algebra_.parity(j))
          t1 = vec_scale(F, t1, F.neg(F.one()));
        out = t1;
        SparseVec br = algebra_.basis_bracket(lie, j);
        for (const auto& [f, c] : br.entries)
          out = vec_add(F, out, vec_scale(F, left_mult(f, rk), c));
      }
    }
  }
  return mult_cache_.emplace(key, std::move(out)).first->second;
}

SparseVec EnvelopeBasis::left_mult_vec(int lie, const SparseVec& v) const {
  const Field& F = algebra_.field();
  SparseVec out;
  for (const auto& [k, c] : v.entries)
    out = vec_add(F, out, vec_scale(F, left_mult(lie, k), c));
  return out;
}

}  // namespace gla
