#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thv/central_poly.hpp"
#include "thv/enveloping.hpp"
#include "thv/errors.hpp"
#include "thv/exec.hpp"
#include "thv/lie_element.hpp"
#include "thv/linalg.hpp"
#include "thv/structure.hpp"

namespace thv {

/// Vector in a truncated weight module: finite map from basis id to exact
/// rational coefficient, no stored zeros.
class ModuleVector {
 public:
  using Terms = std::map<std::size_t, Rational>;

  ModuleVector() = default;
  static ModuleVector basis_vector(std::size_t id);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(std::size_t id, const Rational& r);
  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  ModuleVector& operator*=(const Rational& r);

  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend ModuleVector operator*(ModuleVector a, const Rational& r) { return a *= r; }
  friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

struct VermaParams {
  Rational lambda;  // highest L_0-weight
  Rational h_i;     // I_0 scalar
  Rational c;
  Rational c_i;
  Rational c_li;
  int depth = 0;  // truncation depth N >= 0
};

/// Highest-weight module truncated at depth N: for each n in 0..N the basis
/// consists of the PBW monomials in {L_-k, I_-k : k >= 1} of grade -n
/// (applied to the highest-weight vector), under the default order. The
/// weight-space dimension at lambda-n is the number of 2-colored partitions
/// of n.
class TruncatedVermaModule {
 public:
  explicit TruncatedVermaModule(VermaParams params);

  const VermaParams& params() const { return params_; }
  int depth() const { return params_.depth; }
  Rational base_weight() const { return params_.lambda; }

  std::size_t basis_size() const { return words_.size(); }
  std::size_t dim_at_depth(int n) const;
  const std::vector<Word>& basis_at_depth(int n) const;

  std::size_t flat_id(int n, std::size_t pos) const;
  const Word& basis_word(std::size_t id) const { return words_.at(id); }
  int depth_of(std::size_t id) const;
  Rational weight_of(std::size_t id) const { return params_.lambda - depth_of(id); }
  /// "vac" for the highest-weight vector, else "L[-1]*I[-2]*vac".
  std::string basis_label(std::size_t id) const;
  /// Basis ids of the weight space at lambda + j.
  std::vector<std::size_t> basis_ids_at_offset(std::int64_t j) const;
  std::optional<std::size_t> find_basis(const Word& w) const;

  Rational eval_centrals(const CentralPoly& p) const {
    return p.evaluate(params_.c, params_.c_i, params_.c_li);
  }

 private:
  VermaParams params_;
  std::vector<std::vector<Word>> by_depth_;  // words grouped by depth
  std::vector<Word> words_;                  // flat view, depth-major
  std::vector<std::size_t> depth_start_;     // flat id of first word per depth
  std::map<Word, std::size_t, CanonicalWordLess> index_;
};

struct IntermediateSeriesParams {
  Rational alpha;
  Rational beta;
  Rational f;
  int window = 1;  // basis v_k for |k| <= window
};

/// Intermediate-series module on basis v_k, |k| <= W:
///   L_m v_k = (alpha + k + m*beta) v_{m+k},   I_m v_k = f v_{m+k},
/// centrals act as 0. This action formula is validated by
/// check_module_axioms, not assumed.
class IntermediateSeriesModule {
 public:
  explicit IntermediateSeriesModule(IntermediateSeriesParams params);

  const IntermediateSeriesParams& params() const { return params_; }
  int window() const { return params_.window; }
  Rational base_weight() const { return params_.alpha; }

  std::size_t basis_size() const { return 2 * static_cast<std::size_t>(params_.window) + 1; }
  std::size_t flat_id(std::int64_t k) const;
  std::int64_t k_of(std::size_t id) const;
  Rational weight_of(std::size_t id) const { return params_.alpha + k_of(id); }
  std::string basis_label(std::size_t id) const;  // "v[3]"
  std::vector<std::size_t> basis_ids_at_offset(std::int64_t j) const;

  Rational eval_centrals(const CentralPoly& p) const {
    return p.evaluate(Rational(0), Rational(0), Rational(0));
  }

 private:
  IntermediateSeriesParams params_;
};

// --- actions ---------------------------------------------------------------

/// g . (basis vector). Throws TruncationError when the image leaves the
/// truncated basis (never silently drops).
ModuleVector act_generator(const TruncatedVermaModule& m, const Generator& g, std::size_t id,
                           const RewriteOptions& opts = {});
ModuleVector act_generator(const IntermediateSeriesModule& m, const Generator& g, std::size_t id,
                           const RewriteOptions& opts = {});

ModuleVector act(const TruncatedVermaModule& m, const EnvelopingElement& x, const ModuleVector& v,
                 const RewriteOptions& opts = {});
ModuleVector act(const TruncatedVermaModule& m, const LieElement& x, const ModuleVector& v,
                 const RewriteOptions& opts = {});
ModuleVector act(const IntermediateSeriesModule& m, const EnvelopingElement& x,
                 const ModuleVector& v, const RewriteOptions& opts = {});
ModuleVector act(const IntermediateSeriesModule& m, const LieElement& x, const ModuleVector& v,
                 const RewriteOptions& opts = {});

// --- generic weight-module queries ------------------------------------------

template <typename M>
concept WeightModule = requires(const M& m, const CentralPoly& p, const Generator& g,
                                std::size_t id, std::int64_t j) {
  { m.basis_size() } -> std::convertible_to<std::size_t>;
  { m.base_weight() } -> std::convertible_to<Rational>;
  { m.weight_of(id) } -> std::convertible_to<Rational>;
  { m.basis_label(id) } -> std::convertible_to<std::string>;
  { m.basis_ids_at_offset(j) } -> std::convertible_to<std::vector<std::size_t>>;
  { m.eval_centrals(p) } -> std::convertible_to<Rational>;
  { act_generator(m, g, id) } -> std::convertible_to<ModuleVector>;
};

struct SupportRow {
  std::int64_t offset = 0;
  Rational weight;
  std::size_t dim = 0;
  friend bool operator==(const SupportRow&, const SupportRow&) = default;
};

struct SupportReport {
  Rational base;
  std::vector<SupportRow> rows;
  friend bool operator==(const SupportReport&, const SupportReport&) = default;
};

struct HarishChandraReport {
  bool harish_chandra = true;
  std::size_t max_dim = 0;
  SupportReport support;
};

struct AxiomViolation {
  std::string x, y, vector_label, detail;
  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

struct AxiomCheckReport {
  std::uint64_t checks = 0;
  std::uint64_t skipped = 0;  // checks that would escape the truncation
  std::vector<AxiomViolation> violations;
  bool pass() const { return violations.empty(); }
  friend bool operator==(const AxiomCheckReport&, const AxiomCheckReport&) = default;
};

template <WeightModule M>
std::size_t weight_space_dim(const M& m, const Rational& weight) {
  const Rational diff = weight - m.base_weight();
  if (denominator(diff) != 1) return 0;  // Supp(M) is contained in base + Z
  const Integer j = numerator(diff);
  if (j < -Integer(kMaxIndex) || j > Integer(kMaxIndex)) return 0;
  return m.basis_ids_at_offset(static_cast<std::int64_t>(j)).size();
}

template <WeightModule M>
SupportReport support(const M& m, std::int64_t lo, std::int64_t hi) {
  SupportReport report;
  report.base = m.base_weight();
  for (std::int64_t j = lo; j <= hi; ++j)
    report.rows.push_back(SupportRow{j, m.base_weight() + j, m.basis_ids_at_offset(j).size()});
  return report;
}

template <WeightModule M>
HarishChandraReport is_harish_chandra_window(const M& m, std::int64_t lo, std::int64_t hi) {
  HarishChandraReport report;
  report.support = support(m, lo, hi);
  for (const SupportRow& row : report.support.rows)
    report.max_dim = std::max(report.max_dim, row.dim);
  // Every reported dimension is a finite exact count, so the verdict is
  // affirmative by construction; the point of the report is the explicit
  // dimension list.
  report.harish_chandra = true;
  return report;
}

namespace detail {

using ActionColumn = std::vector<std::optional<ModuleVector>>;

/// col[id] = g . e_id, or nullopt when the image escapes the truncation.
template <WeightModule M>
ActionColumn action_column(const M& m, const Generator& g) {
  ActionColumn col(m.basis_size());
  for (std::size_t id = 0; id < m.basis_size(); ++id) {
    try {
      col[id] = act_generator(m, g, id);
    } catch (const TruncationError&) {
      col[id] = std::nullopt;
    }
  }
  return col;
}

std::optional<ModuleVector> apply_column(const ActionColumn& col, const ModuleVector& v);

AxiomCheckReport check_module_axioms_impl(
    const std::vector<Generator>& window_gens, const std::vector<Generator>& ext_gens,
    const std::vector<ActionColumn>& cols, const std::vector<std::size_t>& samples,
    const std::function<Rational(const CentralPoly&)>& eval_centrals,
    const std::function<std::string(std::size_t)>& label, Exec exec);

}  // namespace detail

/// Exact check of x(y.v) - y(x.v) = [x,y].v for every generator pair with
/// indices in [gen_lo, gen_hi] (both kinds) against the structure constants,
/// on every sample vector (default: the whole basis). Checks whose
/// intermediate actions would escape the truncation are skipped and counted,
/// not failed.
template <WeightModule M>
AxiomCheckReport check_module_axioms(const M& m, std::int64_t gen_lo, std::int64_t gen_hi,
                                     std::vector<std::size_t> samples = {},
                                     Exec exec = Exec::Parallel) {
  if (gen_lo > gen_hi) throw UsageError("empty generator window");
  if (samples.empty())
    for (std::size_t id = 0; id < m.basis_size(); ++id) samples.push_back(id);

  // Bracket results live in the doubled window; precompute columns there.
  const std::int64_t ext_lo = std::min(gen_lo, checked_index_sum(gen_lo, gen_lo));
  const std::int64_t ext_hi = std::max(gen_hi, checked_index_sum(gen_hi, gen_hi));
  std::vector<Generator> ext_gens;
  for (std::int64_t i = ext_lo; i <= ext_hi; ++i) {
    ext_gens.push_back(gen_l(i));
    ext_gens.push_back(gen_i(i));
  }
  std::vector<detail::ActionColumn> cols(ext_gens.size());
  for (std::size_t gi = 0; gi < ext_gens.size(); ++gi)
    cols[gi] = detail::action_column(m, ext_gens[gi]);

  std::vector<Generator> window_gens;
  for (std::int64_t i = gen_lo; i <= gen_hi; ++i) {
    window_gens.push_back(gen_l(i));
    window_gens.push_back(gen_i(i));
  }

  return detail::check_module_axioms_impl(
      window_gens, ext_gens, cols, samples,
      [&m](const CentralPoly& p) { return m.eval_centrals(p); },
      [&m](std::size_t id) { return m.basis_label(id); }, exec);
}

/// Exact basis of the joint kernel of the annihilators on the weight space,
/// via fraction-free elimination. An empty annihilator list yields the whole
/// weight space; a weight outside the support yields the empty basis.
template <WeightModule M>
std::vector<ModuleVector> find_annihilated_vectors(const M& m,
                                                   const std::vector<Generator>& annihilators,
                                                   const Rational& weight) {
  const Rational diff = weight - m.base_weight();
  std::vector<std::size_t> source;
  if (denominator(diff) == 1 && numerator(diff) >= -Integer(kMaxIndex) &&
      numerator(diff) <= Integer(kMaxIndex))
    source = m.basis_ids_at_offset(static_cast<std::int64_t>(numerator(diff)));
  if (source.empty()) return {};

  std::map<std::size_t, std::size_t> source_pos;
  for (std::size_t s = 0; s < source.size(); ++s) source_pos[source[s]] = s;

  std::vector<std::vector<Rational>> rows;
  for (const Generator& g : annihilators) {
    // Row block: one row per target basis vector appearing in g . e_s.
    std::map<std::size_t, std::vector<Rational>> block;
    for (std::size_t s = 0; s < source.size(); ++s) {
      const ModuleVector img = act_generator(m, g, source[s]);
      for (const auto& [t, coeff] : img.terms()) {
        auto [it, inserted] = block.emplace(t, std::vector<Rational>());
        if (inserted) it->second.assign(source.size(), Rational(0));
        it->second[s] = coeff;
      }
    }
    for (auto& [t, row] : block) rows.push_back(std::move(row));
  }

  std::vector<ModuleVector> basis;
  for (const auto& k : kernel_basis(rows, source.size())) {
    ModuleVector v;
    for (std::size_t s = 0; s < source.size(); ++s) v.add(source[s], k[s]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace thv
