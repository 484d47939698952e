#include "gla/ce.hpp"

#include <algorithm>
#include <utility>

#include "gla/error.hpp"

namespace gla {

namespace {

// Suspended parity of a letter: a Lie element of degree n suspends to
// degree n + 1, so the letter is exterior (parity 1) exactly when n is
// even and divided-power (parity 0) when n is odd.
int letter_parity(const GradedLieAlgebra& L, int i) {
  return (L.element(i).degree + 1) & 1;
}

void enumerate_letters(const GradedLieAlgebra& L, int lo, int remaining_deg,
                       int remaining_cnt, std::vector<int>& prefix,
                       std::vector<std::vector<int>>& out) {
  if (remaining_cnt == 0) {
    if (remaining_deg == 0) out.push_back(prefix);
    return;
  }
  for (int i = lo; i < L.size(); ++i) {
    int d = L.element(i).degree;
    if (d > remaining_deg) continue;
    if (letter_parity(L, i) == 1 && !prefix.empty() && prefix.back() == i)
      continue;
    prefix.push_back(i);
    enumerate_letters(L, i, remaining_deg - d, remaining_cnt - 1, prefix, out);
    prefix.pop_back();
  }
}

std::vector<int> remove_one(const std::vector<int>& w, int value) {
  std::vector<int> out;
  out.reserve(w.size() - 1);
  bool removed = false;
  for (int c : w) {
    if (!removed && c == value) {
      removed = true;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace

int ChainComplex::dim(int q, int d) const {
  check_range(q, d);
  return static_cast<int>(basis_[q][d].size());
}

const std::vector<CEBasisElement>& ChainComplex::basis(int q, int d) const {
  check_range(q, d);
  return basis_[q][d];
}

const std::vector<SparseVec>& ChainComplex::boundary(int q, int d) const {
  check_range(q, d);
  if (q < 1)
    fail(ErrorKind::BadInput, "no boundary leaves homological degree 0");
  return boundary_[q][d];
}

int ChainComplex::boundary_rank(int q, int d) const {
  check_range(q, d);
  if (q < 1) return 0;
  int& slot = rank_[q][d];
  if (slot < 0)
    slot = map_rank_kernel(field_, dim(q - 1, d), boundary_[q][d], false).rank;
  return slot;
}

std::string ChainComplex::describe(int q, int d, int k) const {
  const CEBasisElement& e = basis(q, d).at(k);
  std::string out = "[";
  for (size_t i = 0; i < e.letters.size(); ++i) {
    if (i) out += " ";
    out += letter_names_[e.letters[i]];
  }
  out += "|";
  out += mod_names_[e.mod];
  out += "]";
  return out;
}

void ChainComplex::check_range(int q, int d) const {
  if (q < 0 || q > q_max_ + 1)
    fail(ErrorKind::BadInput,
         "homological degree " + std::to_string(q) +
             " is outside the built range [0, " + std::to_string(q_max_ + 1) +
             "]");
  if (d < 0 || d > d_max_)
    fail(ErrorKind::Truncation,
         "internal degree " + std::to_string(d) +
             " is outside the built range [0, " + std::to_string(d_max_) +
             "]");
}

ChainComplex ce_chain_complex(const GradedLieAlgebra& L, const GradedModule& M,
                              int q_max, int d_max) {
  if (q_max < 0 || d_max < 0)
    fail(ErrorKind::BadInput, "the complex needs nonnegative bounds");
  if (L.field().kind() != M.field().kind() ||
      L.field().characteristic() != M.field().characteristic())
    fail(ErrorKind::BadInput,
         "the module and the algebra live over different fields");
  if (!L.complete() && d_max > L.truncation())
    fail(ErrorKind::Truncation,
         "internal bound " + std::to_string(d_max) +
             " exceeds the truncated algebra's known range [0, " +
             std::to_string(L.truncation()) + "]");
  if (!M.complete() && d_max > M.truncation())
    fail(ErrorKind::Truncation,
         "internal bound " + std::to_string(d_max) +
             " exceeds the module window [0, " +
             std::to_string(M.truncation()) + "]");
  const Field& F = L.field();

  ChainComplex C;
  C.field_ = F;
  C.q_max_ = q_max;
  C.d_max_ = d_max;
  for (int i = 0; i < L.size(); ++i)
    C.letter_names_.push_back("s" + L.element(i).name);
  for (int m = 0; m < M.size(); ++m)
    C.mod_names_.push_back(M.element(m).name);

  int q_top = q_max + 1;
  std::vector<std::vector<int>> mod_at(d_max + 1);
  for (int m = 0; m < M.size(); ++m)
    if (M.element(m).degree <= d_max) mod_at[M.element(m).degree].push_back(m);

  C.basis_.assign(q_top + 1, {});
  std::vector<std::vector<std::map<std::pair<std::vector<int>, int>, int>>>
      index(q_top + 1);
  for (int q = 0; q <= q_top; ++q) {
    C.basis_[q].assign(d_max + 1, {});
    index[q].resize(d_max + 1);
    for (int e = 0; e <= d_max; ++e) {
      std::vector<std::vector<int>> monos;
      std::vector<int> prefix;
      enumerate_letters(L, 0, e, q, prefix, monos);
      if (monos.empty()) continue;
      std::sort(monos.begin(), monos.end());
      for (const auto& w : monos)
        for (int d = e; d <= d_max; ++d)
          for (int m : mod_at[d - e]) {
            index[q][d][{w, m}] = static_cast<int>(C.basis_[q][d].size());
            C.basis_[q][d].push_back({w, m});
          }
    }
  }

  auto prefix_parity = [&](const std::vector<int>& w, int below) {
    int s = 0;
    for (int c : w)
      if (c < below) s ^= letter_parity(L, c);
    return s;
  };

  // Merging the two copies of a repeated divided-power letter carries 1/2:
  // the C(k,2) transposition count folded into gamma_k / gamma_{k-2} leaves
  // exactly that factor, independent of the multiplicity k.
  const Scalar half = F.inv(F.from_long(2));
  C.boundary_.assign(q_top + 1, {});
  for (int q = 0; q <= q_top; ++q) {
    C.boundary_[q].assign(d_max + 1, {});
    if (q == 0) continue;
    for (int d = 0; d <= d_max; ++d) {
      auto& mats = C.boundary_[q][d];
      mats.reserve(C.basis_[q][d].size());
      for (const CEBasisElement& elt : C.basis_[q][d]) {
        const std::vector<int>& w = elt.letters;
        std::vector<std::pair<int, Scalar>> terms;
        auto emit = [&](const std::vector<int>& letters, int mod, int exponent,
                        const Scalar& c) {
          auto it = index[q - 1][d].find({letters, mod});
          if (it == index[q - 1][d].end())
            fail(ErrorKind::Internal,
                 "a boundary term left its internal degree; the algebra or "
                 "module is not homogeneous");
          Scalar v = (exponent & 1) ? F.neg(c) : c;
          terms.emplace_back(it->second, v);
        };
        int total_parity = 0;
        for (int c : w) total_parity ^= letter_parity(L, c);
        // Action terms: one per distinct letter value.
        for (size_t t = 0; t < w.size(); ++t) {
          if (t + 1 < w.size() && w[t + 1] == w[t]) continue;  // last copy
          int a = w[t];
          int pa = letter_parity(L, a);
          int suffix = 0;
          for (size_t u = t + 1; u < w.size(); ++u)
            suffix ^= letter_parity(L, w[u]);
          int exponent = (pa & suffix) ^ (total_parity ^ pa);
          std::vector<int> rest = remove_one(w, a);
          const SparseVec& av = M.act(L, a, elt.mod);
          for (const auto& [m2, cm] : av.entries)
            emit(rest, m2, exponent, cm);
        }
        // Merge terms: one per unordered pair of letter values.
        for (size_t t = 0; t < w.size(); ++t) {
          if (t > 0 && w[t] == w[t - 1]) continue;  // first copy of a
          int a = w[t];
          int pa = letter_parity(L, a);
          for (size_t u = t + 1; u < w.size(); ++u) {
            if (u > t + 1 && w[u] == w[u - 1]) continue;  // first copy of b
            int b = w[u];
            int pb = letter_parity(L, b);
            int ka = pa & prefix_parity(w, a);
            int kb = pb & (prefix_parity(w, b) ^ (a < b ? pa : 0));
            int ib = (pa + 1) & 1;
            std::vector<int> rest = remove_one(remove_one(w, a), b);
            SparseVec br = L.basis_bracket(a, b);
            for (const auto& [f, cf] : br.entries) {
              int pf = letter_parity(L, f);
              int count = static_cast<int>(
                  std::count(rest.begin(), rest.end(), f));
              if (pf == 1 && count > 0) continue;
              int kf = pf & prefix_parity(rest, f);
              std::vector<int> merged = rest;
              merged.insert(
                  std::upper_bound(merged.begin(), merged.end(), f), f);
              Scalar coeff = cf;
              if (a == b) coeff = F.mul(coeff, half);
              if (pf == 0 && count > 0)
                coeff = F.mul(coeff, F.from_long(count + 1));
              emit(merged, elt.mod, ka ^ kb ^ ib ^ kf, coeff);
            }
          }
        }
        mats.push_back(make_vec(F, std::move(terms)));
      }
    }
  }

  // The boundary must square to zero on every basis element.
  for (int q = 2; q <= q_top; ++q)
    for (int d = 0; d <= d_max; ++d)
      for (size_t k = 0; k < C.basis_[q][d].size(); ++k) {
        SparseVec acc;
        for (const auto& [t, c] : C.boundary_[q][d][k].entries)
          acc = vec_add(F, acc, vec_scale(F, C.boundary_[q - 1][d][t], c));
        if (!acc.empty())
          fail(ErrorKind::Internal,
               "the boundary fails to square to zero on " +
                   C.describe(q, d, static_cast<int>(k)));
      }

  C.rank_.assign(q_top + 1, std::vector<int>(d_max + 1, -1));
  return C;
}

std::vector<DimensionSequence> homology_dims(const ChainComplex& C) {
  std::vector<DimensionSequence> out;
  for (int q = 0; q <= C.q_max(); ++q) {
    DimensionSequence row = DimensionSequence::zeros(C.d_max());
    for (int d = 0; d <= C.d_max(); ++d) {
      long h = C.dim(q, d) - C.boundary_rank(q, d) - C.boundary_rank(q + 1, d);
      row.set(d, h);
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace gla
