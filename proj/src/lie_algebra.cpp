#include "gla/lie_algebra.hpp"

#include <algorithm>

#include "gla/error.hpp"

namespace gla {

namespace {

const std::vector<int> kNoIndices;

}  // namespace

GradedLieAlgebra::GradedLieAlgebra(Field field, std::vector<BasisElement> basis,
                                   std::vector<BracketEntry> entries,
                                   int truncation)
    : field_(std::move(field)),
      basis_(std::move(basis)),
      truncation_(truncation),
      raw_(std::move(entries)) {
  if (truncation_ < 0)
    fail(ErrorKind::BadInput, "truncation must be nonnegative");
  for (int i = 0; i < size(); ++i) {
    const BasisElement& b = basis_[i];
    if (b.name.empty())
      fail(ErrorKind::BadInput, "basis element without a name");
    if (b.degree < 1)
      fail(ErrorKind::BadInput,
           "basis element " + b.name + " has degree " +
               std::to_string(b.degree) + "; degrees start at 1");
    if (b.degree > truncation_)
      fail(ErrorKind::BadInput,
           "basis element " + b.name + " has degree " +
               std::to_string(b.degree) + " beyond the truncation " +
               std::to_string(truncation_));
    if (!name_index_.emplace(b.name, i).second)
      fail(ErrorKind::BadInput, "duplicate basis name " + b.name);
    top_degree_ = std::max(top_degree_, b.degree);
  }
  by_degree_.assign(truncation_ + 1, {});
  for (int i = 0; i < size(); ++i) by_degree_[basis_[i].degree].push_back(i);

  // Canonicalize to (i <= j) slots.  Entries given with left > right are
  // mirrored by the sign rule; a slot already holding a direct entry keeps
  // it (the validator compares both claims).
  std::map<std::pair<int, int>, bool> slot_is_direct;
  for (const BracketEntry& e : raw_) {
    if (e.left < 0 || e.left >= size() || e.right < 0 || e.right >= size())
      fail(ErrorKind::BadInput, "bracket entry references a missing element");
    int target = basis_[e.left].degree + basis_[e.right].degree;
    if (target > truncation_)
      fail(ErrorKind::BadInput,
           "bracket [" + basis_[e.left].name + ", " + basis_[e.right].name +
               "] has degree " + std::to_string(target) +
               " beyond the truncation; it is unknown, not assignable");
    for (const auto& [col, c] : e.value.entries)
      if (col < 0 || col >= size())
        fail(ErrorKind::BadInput,
             "bracket value references a missing element");
    bool direct = e.left <= e.right;
    std::pair<int, int> slot = direct ? std::make_pair(e.left, e.right)
                                      : std::make_pair(e.right, e.left);
    auto it = slot_is_direct.find(slot);
    if (it != slot_is_direct.end()) {
      if (it->second == direct)
        fail(ErrorKind::BadInput,
             "duplicate bracket entry for (" + basis_[e.left].name + ", " +
                 basis_[e.right].name + ")");
      // Mirror of an already-stored slot: keep the direct claim in the
      // table; validate() checks the pair for consistency.
      if (direct) table_[slot] = e.value;
      it->second = it->second || direct;
      continue;
    }
    slot_is_direct.emplace(slot, direct);
    if (direct) {
      table_[slot] = e.value;
    } else {
      // [x_j, x_i] given: derive [x_i, x_j] = -(-1)^{|i||j|} [x_j, x_i].
      Scalar s = (parity(e.left) && parity(e.right)) ? field_.one()
                                                     : field_.neg(field_.one());
      table_[slot] = vec_scale(field_, e.value, s);
    }
  }
  // Drop zero values so absence always means zero-in-range.
  for (auto it = table_.begin(); it != table_.end();)
    it = it->second.empty() ? table_.erase(it) : std::next(it);
}

int GradedLieAlgebra::find(const std::string& name) const {
  auto it = name_index_.find(name);
  return it == name_index_.end() ? -1 : it->second;
}

const std::vector<int>& GradedLieAlgebra::degree_indices(int degree) const {
  if (degree < 0 || degree > truncation_) return kNoIndices;
  return by_degree_[degree];
}

DimensionSequence GradedLieAlgebra::dims() const {
  DimensionSequence out = DimensionSequence::zeros(truncation_);
  for (int d = 1; d <= truncation_; ++d)
    out.set(d, static_cast<long>(by_degree_[d].size()));
  return out;
}

SparseVec GradedLieAlgebra::basis_bracket(int i, int j) const {
  int target = basis_.at(i).degree + basis_.at(j).degree;
  if (target > truncation_)
    fail(ErrorKind::Truncation,
         "bracket [" + basis_[i].name + ", " + basis_[j].name +
             "] lands in degree " + std::to_string(target) +
             ", beyond the truncation " + std::to_string(truncation_));
  if (i <= j) {
    auto it = table_.find({i, j});
    return it == table_.end() ? SparseVec{} : it->second;
  }
  auto it = table_.find({j, i});
  if (it == table_.end()) return {};
  Scalar s = (parity(i) && parity(j)) ? field_.one() : field_.neg(field_.one());
  return vec_scale(field_, it->second, s);
}

int GradedLieAlgebra::vector_degree(const SparseVec& v) const {
  if (v.empty()) return -1;
  int deg = basis_.at(v.entries.front().first).degree;
  for (const auto& [col, c] : v.entries)
    if (basis_.at(col).degree != deg)
      fail(ErrorKind::BadInput, "vector is not homogeneous");
  return deg;
}

SparseVec GradedLieAlgebra::ad_basis(int i, const SparseVec& v) const {
  SparseVec out;
  for (const auto& [col, c] : v.entries)
    out = vec_add(field_, out, vec_scale(field_, basis_bracket(i, col), c));
  return out;
}

SparseVec GradedLieAlgebra::bracket(const SparseVec& u,
                                    const SparseVec& v) const {
  if (u.empty() || v.empty()) return {};
  int du = vector_degree(u), dv = vector_degree(v);
  if (du + dv > truncation_)
    fail(ErrorKind::Truncation,
         "bracket lands in degree " + std::to_string(du + dv) +
             ", beyond the truncation " + std::to_string(truncation_));
  SparseVec out;
  for (const auto& [i, a] : u.entries)
    out = vec_add(field_, out, vec_scale(field_, ad_basis(i, v), a));
  return out;
}

std::vector<Violation> GradedLieAlgebra::validate() const {
  std::vector<Violation> out;

  // Homogeneity of every supplied entry, as given.
  for (const BracketEntry& e : raw_) {
    int target = basis_[e.left].degree + basis_[e.right].degree;
    SparseVec off;
    for (const auto& [col, c] : e.value.entries)
      if (basis_[col].degree != target) off.push(col, c);
    if (!off.empty())
      out.push_back({"homogeneity",
                     {basis_[e.left].name, basis_[e.right].name},
                     std::move(off)});
  }

  // Antisymmetry can only fail where the caller made two claims about one
  // unordered pair, or assigned an even self-bracket.
  std::map<std::pair<int, int>, const SparseVec*> seen;
  for (const BracketEntry& e : raw_) {
    if (e.left == e.right) {
      if (parity(e.left) == 0 && !e.value.empty()) {
        // [x,x] for even x: defect [x,x] + [x,x].
        out.push_back({"antisymmetry",
                       {basis_[e.left].name, basis_[e.left].name},
                       vec_scale(field_, e.value, field_.from_long(2))});
      }
      continue;
    }
    auto key = std::minmax(e.left, e.right);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, &e.value);
      continue;
    }
    // Two claims: defect = [x,y] + (-1)^{|x||y|}[y,x], evaluated with the
    // first-seen value as the (x,y) claim.
    Scalar s = (parity(e.left) && parity(e.right)) ? field_.neg(field_.one())
                                                   : field_.one();
    SparseVec defect =
        vec_add(field_, *it->second, vec_scale(field_, e.value, s));
    if (!defect.empty())
      out.push_back({"antisymmetry",
                     {basis_[key.first].name, basis_[key.second].name},
                     std::move(defect)});
  }

  // Graded Jacobi on ordered triples with target degree in range:
  // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]].
  for (int i = 0; i < size(); ++i)
    for (int j = i; j < size(); ++j) {
      int dij = basis_[i].degree + basis_[j].degree;
      if (dij > truncation_) continue;
      for (int k = j; k < size(); ++k) {
        if (dij + basis_[k].degree > truncation_) continue;
        SparseVec lhs = ad_basis(i, basis_bracket(j, k));
        SparseVec t1 = bracket_right(basis_bracket(i, j), k);
        SparseVec t2 = ad_basis(j, basis_bracket(i, k));
        Scalar s = (parity(i) && parity(j)) ? field_.neg(field_.one())
                                            : field_.one();
        SparseVec rhs = vec_add(field_, t1, vec_scale(field_, t2, s));
        SparseVec defect =
            vec_add(field_, lhs, vec_scale(field_, rhs, field_.from_long(-1)));
        if (!defect.empty())
          out.push_back(
              {"jacobi",
               {basis_[i].name, basis_[j].name, basis_[k].name},
               std::move(defect)});
      }
    }

  // In characteristic 3 the cube law is an independent axiom; elsewhere it
  // follows from Jacobi on (x,x,x) and is already covered above.
  if (field_.characteristic() == 3) {
    for (int i = 0; i < size(); ++i) {
      if (parity(i) == 0 || 3 * basis_[i].degree > truncation_) continue;
      SparseVec cube = ad_basis(i, basis_bracket(i, i));
      if (!cube.empty())
        out.push_back({"cube",
                       {basis_[i].name, basis_[i].name, basis_[i].name},
                       std::move(cube)});
    }
  }
  return out;
}

SparseVec GradedLieAlgebra::bracket_right(const SparseVec& v, int k) const {
  SparseVec out;
  for (const auto& [col, c] : v.entries)
    out = vec_add(field_, out, vec_scale(field_, basis_bracket(col, k), c));
  return out;
}

GradedLieAlgebra direct_sum(const GradedLieAlgebra& a,
                            const GradedLieAlgebra& b) {
  if (!(a.field() == b.field()))
    fail(ErrorKind::BadInput,
         "direct sum requires both algebras over the same field");
  int truncation = std::min(a.truncation(), b.truncation());
  std::vector<BasisElement> basis;
  std::map<std::string, bool> taken;
  auto add_name = [&](std::string name, int degree) {
    while (taken.count(name)) name += "'";
    taken.emplace(name, true);
    basis.push_back({std::move(name), degree});
  };
  for (int i = 0; i < a.size(); ++i) {
    if (a.element(i).degree > truncation)
      fail(ErrorKind::BadInput,
           "direct sum truncation cuts a basis element of the left summand");
    add_name(a.element(i).name, a.element(i).degree);
  }
  for (int i = 0; i < b.size(); ++i) {
    if (b.element(i).degree > truncation)
      fail(ErrorKind::BadInput,
           "direct sum truncation cuts a basis element of the right summand");
    add_name(b.element(i).name, b.element(i).degree);
  }
  int shift = a.size();
  std::vector<BracketEntry> entries;
  for (const auto& [slot, value] : a.table()) {
    if (a.element(slot.first).degree + a.element(slot.second).degree >
        truncation)
      continue;
    entries.push_back({slot.first, slot.second, value});
  }
  for (const auto& [slot, value] : b.table()) {
    if (b.element(slot.first).degree + b.element(slot.second).degree >
        truncation)
      continue;
    SparseVec shifted;
    for (const auto& [col, c] : value.entries) shifted.push(col + shift, c);
    entries.push_back({slot.first + shift, slot.second + shift,
                       std::move(shifted)});
  }
  return GradedLieAlgebra(a.field(), std::move(basis), std::move(entries),
                          truncation);
}

}  // namespace gla
