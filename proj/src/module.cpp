#include "gla/module.hpp"

#include <algorithm>
#include <limits>

#include "gla/error.hpp"

namespace gla {

namespace {

const SparseVec& empty_vec() {
  static const SparseVec v;
  return v;
}

int min_degree(const GradedModule& M) {
  int out = std::numeric_limits<int>::max();
  for (int i = 0; i < M.size(); ++i)
    out = std::min(out, M.element(i).degree);
  return M.size() == 0 ? 0 : out;
}

}  // namespace

GradedModule::GradedModule(Field field, std::vector<BasisElement> basis,
                           std::vector<ActionEntry> entries, int truncation,
                           bool complete)
    : field_(std::move(field)),
      basis_(std::move(basis)),
      truncation_(truncation),
      complete_(complete) {
  if (truncation_ < 0)
    fail(ErrorKind::BadInput, "module truncation must be nonnegative");
  for (int i = 0; i < size(); ++i) {
    const auto& b = basis_[i];
    if (b.name.empty())
      fail(ErrorKind::BadInput, "module basis element without a name");
    if (b.degree < 0)
      fail(ErrorKind::BadInput,
           "module basis element " + b.name + " has negative degree");
    if (b.degree > truncation_)
      fail(ErrorKind::BadInput, "module basis element " + b.name +
                                    " lives past the truncation " +
                                    std::to_string(truncation_));
    if (!name_index_.emplace(b.name, i).second)
      fail(ErrorKind::BadInput, "duplicate module basis name: " + b.name);
    top_degree_ = std::max(top_degree_, b.degree);
  }
  for (auto& e : entries) {
    if (e.mod < 0 || e.mod >= size())
      fail(ErrorKind::BadInput, "action entry names no module basis element");
    if (e.lie < 0)
      fail(ErrorKind::BadInput, "action entry names no algebra element");
    for (const auto& [col, c] : e.value.entries) {
      if (col < 0 || col >= size())
        fail(ErrorKind::BadInput, "action value leaves the module basis");
      (void)c;
    }
    if (e.value.empty()) continue;
    if (!table_.emplace(std::make_pair(e.lie, e.mod), std::move(e.value))
             .second)
      fail(ErrorKind::BadInput, "conflicting double action assignment");
  }
}

int GradedModule::find(const std::string& name) const {
  auto it = name_index_.find(name);
  return it == name_index_.end() ? -1 : it->second;
}

DimensionSequence GradedModule::dims() const {
  DimensionSequence out = DimensionSequence::zeros(truncation_);
  for (const auto& b : basis_) out.set(b.degree, out.at(b.degree) + 1);
  return out;
}

const SparseVec& GradedModule::act(const GradedLieAlgebra& L, int lie,
                                   int mod) const {
  if (lie < 0 || lie >= L.size())
    fail(ErrorKind::BadInput, "no such algebra basis element");
  if (mod < 0 || mod >= size())
    fail(ErrorKind::BadInput, "no such module basis element");
  auto it = table_.find(std::make_pair(lie, mod));
  if (it != table_.end()) return it->second;
  int target = L.element(lie).degree + basis_[mod].degree;
  if (complete_ || target <= truncation_) return empty_vec();
  fail(ErrorKind::Truncation,
       "action target degree " + std::to_string(target) +
           " is past the module window [0, " + std::to_string(truncation_) +
           "]");
}

SparseVec GradedModule::act_vec(const GradedLieAlgebra& L, int lie,
                                const SparseVec& v) const {
  SparseVec out;
  for (const auto& [m, c] : v.entries)
    out = vec_add(field_, out, vec_scale(field_, act(L, lie, m), c));
  return out;
}

std::vector<Violation> GradedModule::validate(
    const GradedLieAlgebra& L) const {
  if (L.field().kind() != field_.kind() ||
      L.field().characteristic() != field_.characteristic())
    fail(ErrorKind::BadInput,
         "the module and the algebra live over different fields");
  std::vector<Violation> out;
  for (const auto& [key, v] : table_) {
    auto [i, m] = key;
    if (i >= L.size()) {
      out.push_back({"range", {std::to_string(i), element(m).name}, v});
      continue;
    }
    int target = L.element(i).degree + basis_[m].degree;
    if (target > truncation_) {
      out.push_back({"range", {L.element(i).name, element(m).name}, v});
      continue;
    }
    bool homogeneous = true;
    for (const auto& [col, c] : v.entries) {
      (void)c;
      if (basis_[col].degree != target) homogeneous = false;
    }
    if (!homogeneous)
      out.push_back(
          {"homogeneity", {L.element(i).name, element(m).name}, v});
  }
  const Field& F = field_;
  for (int i = 0; i < L.size(); ++i) {
    for (int j = i; j < L.size(); ++j) {
      int bracket_degree = L.element(i).degree + L.element(j).degree;
      if (bracket_degree > L.truncation()) continue;
      SparseVec br = L.basis_bracket(i, j);
      for (int m = 0; m < size(); ++m) {
        int target = bracket_degree + basis_[m].degree;
        if (!complete_ && target > truncation_) continue;
        SparseVec lhs = act_vec(L, i, act(L, j, m));
        SparseVec rhs = act_vec(L, j, act(L, i, m));
        Scalar sign = (L.parity(i) && L.parity(j)) ? F.neg(F.one()) : F.one();
        SparseVec defect =
            vec_add(F, lhs, vec_scale(F, rhs, F.neg(sign)));
        for (const auto& [f, c] : br.entries)
          defect = vec_add(
              F, defect, vec_scale(F, act(L, f, m), F.neg(c)));
        if (!defect.empty())
          out.push_back({"module",
                         {L.element(i).name, L.element(j).name,
                          element(m).name},
                         defect});
      }
    }
  }
  return out;
}

GradedModule trivial_module(const Field& field) {
  return GradedModule(field, {{"1", 0}}, {}, 0, true);
}

GradedModule adjoint_module(const GradedLieAlgebra& L) {
  std::vector<ActionEntry> entries;
  for (int i = 0; i < L.size(); ++i)
    for (int j = 0; j < L.size(); ++j) {
      if (L.element(i).degree + L.element(j).degree > L.truncation())
        continue;
      SparseVec v = L.basis_bracket(i, j);
      if (!v.empty()) entries.push_back({i, j, std::move(v)});
    }
  return GradedModule(L.field(), L.basis(), std::move(entries),
                      L.truncation(), L.complete());
}

GradedModule envelope_module(const EnvelopeBasis& B) {
  const GradedLieAlgebra& L = B.algebra();
  std::vector<BasisElement> basis;
  basis.reserve(B.size());
  for (int k = 0; k < B.size(); ++k)
    basis.push_back({B.name(k), B.degree(k)});
  std::vector<ActionEntry> entries;
  for (int i = 0; i < L.size(); ++i)
    for (int k = 0; k < B.size(); ++k) {
      if (L.element(i).degree + B.degree(k) > B.truncation()) continue;
      SparseVec v = B.left_mult(i, k);
      if (!v.empty()) entries.push_back({i, k, std::move(v)});
    }
  int degree_sum = 0;
  bool all_odd = true;
  for (int i = 0; i < L.size(); ++i) {
    degree_sum += L.element(i).degree;
    if (L.parity(i) == 0) all_odd = false;
  }
  bool complete =
      L.complete() && all_odd && B.truncation() >= degree_sum;
  return GradedModule(L.field(), std::move(basis), std::move(entries),
                      B.truncation(), complete);
}

int dual_shift(const GradedModule& M) {
  int t = M.truncation();
  return t + (t & 1);
}

GradedModule dual_module(const GradedLieAlgebra& L, const GradedModule& M) {
  const Field& F = M.field();
  int S = dual_shift(M);
  std::vector<BasisElement> basis;
  basis.reserve(M.size());
  for (int j = 0; j < M.size(); ++j)
    basis.push_back({M.element(j).name + "^", S - M.element(j).degree});
  std::vector<ActionEntry> entries;
  for (int i = 0; i < L.size(); ++i) {
    int di = L.element(i).degree;
    // Scatter the action table: the coefficient of m_j in x_i.m_k feeds
    // the theta_k coefficient of x_i.theta_j.
    std::map<int, std::vector<std::pair<int, Scalar>>> rows;
    for (int k = 0; k < M.size(); ++k) {
      if (di + M.element(k).degree > M.truncation() && !M.complete())
        continue;
      const SparseVec& v = M.act(L, i, k);
      for (const auto& [j, c] : v.entries) rows[j].emplace_back(k, c);
    }
    for (auto& [j, terms] : rows) {
      // -(-1)^{|x_i| |theta_j|}; theta_j's parity equals m_j's.
      bool both_odd = L.parity(i) == 1 && M.parity(j) == 1;
      Scalar scale = both_odd ? F.one() : F.neg(F.one());
      for (auto& [k, c] : terms) c = F.mul(c, scale);
      entries.push_back({i, j, make_vec(F, std::move(terms))});
    }
  }
  return GradedModule(F, std::move(basis), std::move(entries), S, true);
}

namespace {

GradedModule tensor_like(const GradedLieAlgebra& ambient,
                         const GradedLieAlgebra& LA, const GradedModule& A,
                         const GradedLieAlgebra& LB, const GradedModule& B,
                         int lie_split) {
  // lie_split < 0: every ambient element acts diagonally on both factors
  // (LA and LB are the ambient algebra itself).  Otherwise ambient indices
  // below the split act on the left factor through LA and the rest act on
  // the right factor through LB (external tensor over a direct sum).
  const Field& F = A.field();
  if (B.field().kind() != F.kind() ||
      B.field().characteristic() != F.characteristic())
    fail(ErrorKind::BadInput,
         "tensor factors live over different fields");
  long top = A.top_degree() + B.top_degree();
  long bound = std::numeric_limits<int>::max();
  if (!A.complete())
    bound = std::min(bound, static_cast<long>(A.truncation()) +
                                (B.size() ? min_degree(B) : 0));
  if (!B.complete())
    bound = std::min(bound, static_cast<long>(B.truncation()) +
                                (A.size() ? min_degree(A) : 0));
  bool complete = A.complete() && B.complete();
  int truncation = static_cast<int>(std::min(bound, top));
  if (!A.size() || !B.size()) truncation = 0;
  if (truncation < 0)
    fail(ErrorKind::Truncation,
         "the factor windows leave no degrees for the tensor product");
  std::vector<BasisElement> basis;
  std::map<std::pair<int, int>, int> pair_index;
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < B.size(); ++b) {
      int d = A.element(a).degree + B.element(b).degree;
      if (d > truncation) continue;
      pair_index[{a, b}] = static_cast<int>(basis.size());
      basis.push_back(
          {A.element(a).name + "⊗" + B.element(b).name, d});
    }
  std::vector<ActionEntry> entries;
  for (const auto& [key, idx] : pair_index) {
    auto [a, b] = key;
    (void)idx;
    int da = A.element(a).degree, db = B.element(b).degree;
    for (int i = 0; i < ambient.size(); ++i) {
      int di = ambient.element(i).degree;
      if (da + db + di > truncation) continue;
      std::vector<std::pair<int, Scalar>> terms;
      if (lie_split < 0 || i < lie_split) {
        const SparseVec& va = A.act(LA, i, a);
        for (const auto& [a2, c] : va.entries)
          terms.emplace_back(pair_index.at({a2, b}), c);
      }
      if (lie_split < 0 || i >= lie_split) {
        int ib = lie_split < 0 ? i : i - lie_split;
        bool koszul = ambient.parity(i) == 1 && (da & 1) == 1;
        Scalar s = koszul ? F.neg(F.one()) : F.one();
        const SparseVec& vb = B.act(LB, ib, b);
        for (const auto& [b2, c] : vb.entries)
          terms.emplace_back(pair_index.at({a, b2}), F.mul(s, c));
      }
      if (!terms.empty())
        entries.push_back(
            {i, pair_index.at({a, b}), make_vec(F, std::move(terms))});
    }
  }
  return GradedModule(F, std::move(basis), std::move(entries), truncation,
                      complete);
}

}  // namespace

GradedModule tensor_module(const GradedLieAlgebra& L, const GradedModule& A,
                           const GradedModule& B) {
  return tensor_like(L, L, A, L, B, -1);
}

GradedModule external_tensor(const GradedLieAlgebra& sum,
                             const GradedLieAlgebra& L1, const GradedModule& A,
                             const GradedLieAlgebra& L2,
                             const GradedModule& B) {
  if (sum.size() != L1.size() + L2.size())
    fail(ErrorKind::BadInput,
         "the ambient algebra is not the direct sum of the two summands");
  for (int i = 0; i < L1.size(); ++i)
    if (sum.element(i).degree != L1.element(i).degree)
      fail(ErrorKind::BadInput,
           "left summand degrees disagree with the ambient algebra");
  for (int i = 0; i < L2.size(); ++i)
    if (sum.element(L1.size() + i).degree != L2.element(i).degree)
      fail(ErrorKind::BadInput,
           "right summand degrees disagree with the ambient algebra");
  return tensor_like(sum, L1, A, L2, B, L1.size());
}

}  // namespace gla
