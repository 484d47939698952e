#include "gla/subspace.hpp"

#include <algorithm>

#include "gla/error.hpp"

namespace gla {

bool GradedSubspace::insert(const SparseVec& v) {
  if (v.empty()) return false;
  int degree = parent_->vector_degree(v);
  auto it = by_degree_.find(degree);
  if (it == by_degree_.end())
    it = by_degree_
             .emplace(std::piecewise_construct, std::forward_as_tuple(degree),
                      std::forward_as_tuple(parent_->field(), parent_->size()))
             .first;
  return it->second.insert(v);
}

bool GradedSubspace::contains(const SparseVec& v) const {
  return reduce(v).empty();
}

SparseVec GradedSubspace::reduce(const SparseVec& v) const {
  if (v.empty()) return {};
  auto it = by_degree_.find(parent_->vector_degree(v));
  if (it == by_degree_.end()) return v;
  return it->second.reduce(v);
}

int GradedSubspace::dim(int degree) const {
  auto it = by_degree_.find(degree);
  return it == by_degree_.end() ? 0 : it->second.rank();
}

int GradedSubspace::total_dim() const {
  int total = 0;
  for (const auto& [deg, red] : by_degree_) total += red.rank();
  return total;
}

DimensionSequence GradedSubspace::dims() const {
  DimensionSequence out = DimensionSequence::zeros(parent_->truncation());
  for (const auto& [deg, red] : by_degree_) out.set(deg, red.rank());
  return out;
}

std::vector<std::pair<int, SparseVec>> GradedSubspace::rows() const {
  std::vector<std::pair<int, SparseVec>> out;
  for (const auto& [deg, red] : by_degree_)
    for (const SparseVec* row : red.sorted_rows()) out.emplace_back(deg, *row);
  return out;
}

GradedSubspace GradedSubspace::full(const GradedLieAlgebra& parent) {
  GradedSubspace out(parent);
  for (int i = 0; i < parent.size(); ++i) {
    SparseVec e;
    e.push(i, parent.field().one());
    out.insert(e);
  }
  return out;
}

GradedSubspace GradedSubspace::of_indices(const GradedLieAlgebra& parent,
                                          const std::vector<int>& indices) {
  GradedSubspace out(parent);
  for (int i : indices) {
    SparseVec e;
    e.push(i, parent.field().one());
    out.insert(e);
  }
  return out;
}

GradedSubspace subalgebra_generated(const GradedLieAlgebra& L,
                                    const std::vector<SparseVec>& generators) {
  GradedSubspace span(L);
  std::vector<SparseVec> all;
  std::vector<size_t> todo;
  for (const SparseVec& g : generators) {
    if (span.insert(g)) {
      all.push_back(g);
      todo.push_back(all.size() - 1);
    }
  }
  int N = L.truncation();
  while (!todo.empty()) {
    size_t r = todo.front();
    todo.erase(todo.begin());
    // Bracket the fresh vector against everything seen so far (including
    // itself); one order suffices, the other differs by a sign.
    for (size_t s = 0; s < all.size(); ++s) {
      int target =
          L.vector_degree(all[r]) + L.vector_degree(all[s]);
      if (target > N) continue;
      SparseVec b = L.bracket(all[r], all[s]);
      if (span.insert(b)) {
        all.push_back(std::move(b));
        todo.push_back(all.size() - 1);
      }
    }
  }
  return span;
}

GradedSubspace ideal_generated(const GradedLieAlgebra& L,
                               const std::vector<SparseVec>& generators) {
  GradedSubspace span(L);
  std::vector<SparseVec> all;
  std::vector<size_t> todo;
  for (const SparseVec& g : generators) {
    if (span.insert(g)) {
      all.push_back(g);
      todo.push_back(all.size() - 1);
    }
  }
  int N = L.truncation();
  while (!todo.empty()) {
    size_t r = todo.front();
    todo.erase(todo.begin());
    int rd = L.vector_degree(all[r]);
    for (int b = 0; b < L.size(); ++b) {
      if (L.element(b).degree + rd > N) continue;
      SparseVec v = L.ad_basis(b, all[r]);
      if (span.insert(v)) {
        all.push_back(std::move(v));
        todo.push_back(all.size() - 1);
      }
    }
  }
  return span;
}

namespace {

/// Coefficients expressing v in the given rows of its degree (leads are
/// unique).  Fails when v leaves their span.
SparseVec coords_in_rows(const Field& field,
                         const std::vector<std::pair<int, const SparseVec*>>&
                             rows_by_lead,
                         SparseVec v, const std::string& what) {
  std::vector<std::pair<int, Scalar>> terms;
  while (!v.empty()) {
    const SparseVec* row = nullptr;
    int row_index = -1;
    for (const auto& [index, r] : rows_by_lead) {
      if (r->lead() == v.lead()) {
        row = r;
        row_index = index;
        break;
      }
    }
    if (!row) fail(ErrorKind::BadInput, what);
    Scalar c = field.div(v.lead_coeff(), row->lead_coeff());
    v = vec_add(field, v, vec_scale(field, *row, field.neg(c)));
    terms.emplace_back(row_index, std::move(c));
  }
  return make_vec(field, std::move(terms));
}

}  // namespace

GradedLieAlgebra algebra_from_rows(const GradedLieAlgebra& L,
                                   const GradedSubspace& S,
                                   const std::string& prefix) {
  auto rows = S.rows();  // degree ascending, leads ascending
  std::vector<BasisElement> basis;
  std::map<std::string, int> used;
  for (size_t k = 0; k < rows.size(); ++k) {
    std::string name = rows[k].second.entries.size() == 1
                           ? L.element(rows[k].second.lead()).name
                           : prefix + std::to_string(k + 1);
    while (used.count(name)) name += "'";
    used[name] = 1;
    basis.push_back({name, rows[k].first});
  }
  // Row indices of each degree, for coordinate extraction.
  std::map<int, std::vector<std::pair<int, const SparseVec*>>> by_degree;
  for (size_t k = 0; k < rows.size(); ++k)
    by_degree[rows[k].first].emplace_back(static_cast<int>(k),
                                          &rows[k].second);
  std::vector<BracketEntry> entries;
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = i; j < rows.size(); ++j) {
      int target = rows[i].first + rows[j].first;
      if (target > L.truncation()) continue;
      SparseVec b = L.bracket(rows[i].second, rows[j].second);
      if (b.empty()) continue;
      SparseVec coords =
          coords_in_rows(L.field(), by_degree[target], std::move(b),
                         "the subspace is not closed under the bracket");
      entries.push_back(
          {static_cast<int>(i), static_cast<int>(j), std::move(coords)});
    }
  return GradedLieAlgebra(L.field(), std::move(basis), std::move(entries),
                          L.truncation());
}

namespace {

/// One bracket step of a series: the span of [u, v] over u in `left`, v in
/// `right`, pairs beyond the truncation flagged instead of computed.
GradedSubspace bracket_span(const GradedLieAlgebra& L,
                            const GradedSubspace& left,
                            const GradedSubspace& right, bool self,
                            bool* complete) {
  GradedSubspace out(L);
  auto lrows = left.rows(), rrows = right.rows();
  for (size_t i = 0; i < lrows.size(); ++i) {
    // For a self-bracket [S,S] each unordered pair once is enough.
    size_t j0 = self ? i : 0;
    for (size_t j = j0; j < rrows.size(); ++j) {
      if (lrows[i].first + rrows[j].first > L.truncation()) {
        *complete = false;
        continue;
      }
      out.insert(L.bracket(lrows[i].second, rrows[j].second));
    }
  }
  return out;
}

SeriesReport run_series(const GradedLieAlgebra& L, const GradedSubspace& start,
                        bool derived) {
  SeriesReport rep;
  rep.certified = true;
  rep.terms.push_back(start);
  int guard = L.truncation() + 2;
  while (!rep.terms.back().empty()) {
    if (--guard < 0)
      fail(ErrorKind::Internal, "descending series failed to terminate");
    const GradedSubspace& cur = rep.terms.back();
    bool complete = true;
    GradedSubspace next =
        derived ? bracket_span(L, cur, cur, true, &complete)
                : bracket_span(L, rep.terms.front(), cur, false, &complete);
    if (!complete) rep.certified = false;
    rep.terms.push_back(std::move(next));
  }
  rep.length = static_cast<int>(rep.terms.size()) - 1;
  for (const GradedSubspace& t : rep.terms) rep.term_dims.push_back(t.dims());
  rep.note = rep.certified
                 ? "every bracket stayed within the truncation"
                 : "some brackets land beyond the truncation: later terms "
                   "are lower bounds and the vanishing is not certified";
  return rep;
}

}  // namespace

SeriesReport derived_series(const GradedLieAlgebra& L,
                            const GradedSubspace& S) {
  return run_series(L, S, true);
}

SeriesReport derived_series(const GradedLieAlgebra& L) {
  return run_series(L, GradedSubspace::full(L), true);
}

SeriesReport lower_central_series(const GradedLieAlgebra& L,
                                  const GradedSubspace& S) {
  return run_series(L, S, false);
}

SeriesReport lower_central_series(const GradedLieAlgebra& L) {
  return run_series(L, GradedSubspace::full(L), false);
}

NilpotentSpanReport nilpotent_even_span(const GradedLieAlgebra& L) {
  NilpotentSpanReport rep(L);
  int N = L.truncation();
  for (int i = 0; i < L.size(); ++i) {
    if (L.parity(i) != 0) continue;
    int d = L.element(i).degree;
    bool ok = true;
    for (int b = 0; b < L.size() && ok; ++b) {
      SparseVec w;
      w.push(b, L.field().one());
      while (!w.empty()) {
        if (L.vector_degree(w) + d > N) {
          ok = false;  // next step would leave the known range
          break;
        }
        w = L.ad_basis(i, w);
      }
    }
    if (ok) {
      rep.certified.push_back(i);
      SparseVec e;
      e.push(i, L.field().one());
      rep.span.insert(e);
    } else {
      rep.unknown.push_back(i);
    }
  }
  rep.exact = L.complete();
  rep.note = rep.exact
                 ? "complete algebra: adjoint action raises degree, so the "
                   "span is exactly the even part"
             : rep.unknown.empty()
                 ? "all even basis elements certified within the truncation"
                 : "some orbits reach the truncation edge; those elements "
                   "are reported unknown, not excluded";
  return rep;
}

DimensionSequence orbit_dims(const GradedLieAlgebra& L, const GradedSubspace& E,
                             const SparseVec& x) {
  GradedSubspace orbit(L);
  if (!orbit.insert(x)) return orbit.dims();
  std::vector<SparseVec> todo = {x};
  auto actors = E.rows();
  int N = L.truncation();
  while (!todo.empty()) {
    SparseVec w = std::move(todo.front());
    todo.erase(todo.begin());
    int wd = L.vector_degree(w);
    for (const auto& [ed, ev] : actors) {
      if (ed + wd > N) continue;
      SparseVec y = L.bracket(ev, w);
      if (orbit.insert(y)) todo.push_back(std::move(y));
    }
  }
  return orbit.dims();
}

TruncationSplit truncation_ideal(const GradedLieAlgebra& L, int n) {
  if (n < 0 || n >= L.truncation())
    fail(ErrorKind::BadInput,
         "truncation ideal needs 0 <= n < truncation; got n = " +
             std::to_string(n));
  std::vector<int> above, kept;
  std::vector<int> remap(L.size(), -1);
  for (int i = 0; i < L.size(); ++i) {
    if (L.element(i).degree > n) {
      above.push_back(i);
    } else {
      remap[i] = static_cast<int>(kept.size());
      kept.push_back(i);
    }
  }
  std::vector<BasisElement> basis;
  int top = 0;
  for (int i : kept) {
    basis.push_back(L.element(i));
    top = std::max(top, L.element(i).degree);
  }
  std::vector<BracketEntry> entries;
  for (const auto& [slot, value] : L.table()) {
    if (remap[slot.first] < 0 || remap[slot.second] < 0) continue;
    if (L.element(slot.first).degree + L.element(slot.second).degree > n)
      continue;
    SparseVec projected;
    for (const auto& [col, c] : value.entries)
      if (remap[col] >= 0) projected.push(remap[col], c);
    if (projected.empty()) continue;
    entries.push_back({remap[slot.first], remap[slot.second],
                       std::move(projected)});
  }
  // Every bracket of the quotient is determined: targets above n vanish
  // there, so the truncation may honestly extend to cover all pairs.
  int q_trunc = std::max(n, 2 * top);
  return TruncationSplit{GradedSubspace::of_indices(L, above),
                         GradedLieAlgebra(L.field(), std::move(basis),
                                          std::move(entries), q_trunc)};
}

}  // namespace gla
