#include "thv/modules.hpp"

#include <algorithm>
#include <cassert>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace thv {

ModuleVector ModuleVector::basis_vector(std::size_t id) {
  ModuleVector v;
  v.terms_.emplace(id, Rational(1));
  return v;
}

void ModuleVector::add(std::size_t id, const Rational& r) {
  if (r == 0) return;
  auto [it, inserted] = terms_.emplace(id, r);
  if (!inserted) {
    it->second += r;
    if (it->second == 0) terms_.erase(it);
  }
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  for (const auto& [id, r] : o.terms_) add(id, r);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  for (const auto& [id, r] : o.terms_) add(id, -r);
  return *this;
}

ModuleVector& ModuleVector::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [id, coeff] : terms_) coeff *= r;
  return *this;
}

namespace {

constexpr std::size_t kMaxVermaBasis = 1'000'000;

void partitions_rec(int n, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(n, cap); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(n - part, part, cur, out);
    cur.pop_back();
  }
}

// Partitions of n, parts descending, enumerated largest-first. partitions_of(0) = { [] }.
std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, std::max(n, 1), cur, out);
  return out;
}

Rational pow_rational(const Rational& base, std::size_t e) {
  Rational r(1);
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

TruncatedVermaModule::TruncatedVermaModule(VermaParams params) : params_(std::move(params)) {
  if (params_.depth < 0) throw UsageError("verma depth must be nonnegative");
  std::vector<std::vector<std::vector<int>>> parts(params_.depth + 1);
  for (int n = 0; n <= params_.depth; ++n) parts[n] = partitions_of(n);

  std::size_t total = 0;
  for (int n = 0; n <= params_.depth; ++n) {
    std::vector<Word> words;
    for (int s = n; s >= 0; --s) {
      for (const auto& lpart : parts[s]) {
        for (const auto& ipart : parts[n - s]) {
          Word w;
          w.reserve(lpart.size() + ipart.size());
          for (int a : lpart) w.push_back(gen_l(-a));
          for (int b : ipart) w.push_back(gen_i(-b));
          assert(is_sorted_word(w, GeneratorOrder()));
          words.push_back(std::move(w));
        }
      }
    }
    total += words.size();
    if (total > kMaxVermaBasis)
      throw UsageError("verma depth exceeds the resource budget (basis too large)");
    by_depth_.push_back(std::move(words));
  }

  depth_start_.resize(by_depth_.size());
  for (std::size_t n = 0; n < by_depth_.size(); ++n) {
    depth_start_[n] = words_.size();
    for (const Word& w : by_depth_[n]) {
      index_.emplace(w, words_.size());
      words_.push_back(w);
    }
  }
}

std::size_t TruncatedVermaModule::dim_at_depth(int n) const {
  if (n < 0 || n > params_.depth) return 0;
  return by_depth_[static_cast<std::size_t>(n)].size();
}

const std::vector<Word>& TruncatedVermaModule::basis_at_depth(int n) const {
  if (n < 0 || n > params_.depth) throw UsageError("depth outside the truncation");
  return by_depth_[static_cast<std::size_t>(n)];
}

std::size_t TruncatedVermaModule::flat_id(int n, std::size_t pos) const {
  if (n < 0 || n > params_.depth || pos >= dim_at_depth(n))
    throw UsageError("basis position outside the truncation");
  return depth_start_[static_cast<std::size_t>(n)] + pos;
}

int TruncatedVermaModule::depth_of(std::size_t id) const {
  if (id >= words_.size()) throw UsageError("basis id out of range");
  auto it = std::upper_bound(depth_start_.begin(), depth_start_.end(), id);
  return static_cast<int>(it - depth_start_.begin()) - 1;
}

std::string TruncatedVermaModule::basis_label(std::size_t id) const {
  const Word& w = basis_word(id);
  if (w.empty()) return "vac";
  return word_text(w) + "*vac";
}

std::vector<std::size_t> TruncatedVermaModule::basis_ids_at_offset(std::int64_t j) const {
  std::vector<std::size_t> ids;
  if (j > 0 || j < -static_cast<std::int64_t>(params_.depth)) return ids;
  const int n = static_cast<int>(-j);
  for (std::size_t pos = 0; pos < dim_at_depth(n); ++pos) ids.push_back(flat_id(n, pos));
  return ids;
}

std::optional<std::size_t> TruncatedVermaModule::find_basis(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

// Order used for evaluation on the highest-weight vector: zero- and
// positive-index generators are promoted above everything, so each sorted
// monomial ends with the letters that act as scalars or annihilate.
GeneratorOrder evaluation_order(std::int64_t max_pos) {
  std::vector<Generator> last;
  last.push_back(gen_l(0));
  last.push_back(gen_i(0));
  for (std::int64_t m = 1; m <= max_pos; ++m) {
    last.push_back(gen_l(m));
    last.push_back(gen_i(m));
  }
  return GeneratorOrder::with_last_set(std::move(last));
}

ModuleVector act_word_verma(const TruncatedVermaModule& m, const Word& prefix,
                            const CentralPoly& coeff, std::size_t id,
                            const RewriteOptions& opts) {
  Word full = prefix;
  const Word& base = m.basis_word(id);
  full.insert(full.end(), base.begin(), base.end());

  std::int64_t pos_sum = 0;
  for (const Generator& g : full)
    if (g.index() > 0) pos_sum = checked_index_sum(pos_sum, g.index());

  EnvelopingElement nf = normal_order(full, evaluation_order(pos_sum), opts);
  nf *= coeff;

  ModuleVector out;
  for (const auto& [w, poly] : nf.terms()) {
    bool has_positive = false;
    std::size_t n_l0 = 0, n_i0 = 0;
    Word negatives;
    for (const Generator& g : w) {
      if (g.index() > 0) {
        has_positive = true;  // annihilates the highest-weight vector
        break;
      }
      if (g.index() == 0)
        (g.kind() == Kind::L ? n_l0 : n_i0)++;
      else
        negatives.push_back(g);
    }
    if (has_positive) continue;

    Rational r = m.eval_centrals(poly);
    if (r == 0) continue;
    r *= pow_rational(m.params().lambda, n_l0);
    r *= pow_rational(m.params().h_i, n_i0);
    if (r == 0) continue;

    const std::int64_t d = -word_grade(negatives);
    assert(d >= 0);
    if (d > m.depth())
      throw TruncationError("action leaves the depth-" + std::to_string(m.depth()) +
                            " truncation (needs depth " + std::to_string(d) + ")");
    auto target = m.find_basis(negatives);
    assert(target.has_value());
    out.add(*target, r);
  }
  return out;
}

}  // namespace

ModuleVector act_generator(const TruncatedVermaModule& m, const Generator& g, std::size_t id,
                           const RewriteOptions& opts) {
  return act_word_verma(m, Word{g}, CentralPoly::one(), id, opts);
}

ModuleVector act(const TruncatedVermaModule& m, const EnvelopingElement& x, const ModuleVector& v,
                 const RewriteOptions& opts) {
  ModuleVector out;
  for (const auto& [w, coeff] : x.terms())
    for (const auto& [id, r] : v.terms()) out += act_word_verma(m, w, coeff, id, opts) * r;
  return out;
}

ModuleVector act(const TruncatedVermaModule& m, const LieElement& x, const ModuleVector& v,
                 const RewriteOptions& opts) {
  return act(m, lift(x), v, opts);
}

IntermediateSeriesModule::IntermediateSeriesModule(IntermediateSeriesParams params)
    : params_(std::move(params)) {
  if (params_.window < 1) throw UsageError("series window must be >= 1");
}

std::size_t IntermediateSeriesModule::flat_id(std::int64_t k) const {
  if (k < -params_.window || k > params_.window)
    throw UsageError("series basis index outside the window");
  return static_cast<std::size_t>(k + params_.window);
}

std::int64_t IntermediateSeriesModule::k_of(std::size_t id) const {
  if (id >= basis_size()) throw UsageError("basis id out of range");
  return static_cast<std::int64_t>(id) - params_.window;
}

std::string IntermediateSeriesModule::basis_label(std::size_t id) const {
  return "v[" + std::to_string(k_of(id)) + "]";
}

std::vector<std::size_t> IntermediateSeriesModule::basis_ids_at_offset(std::int64_t j) const {
  std::vector<std::size_t> ids;
  if (j >= -params_.window && j <= params_.window) ids.push_back(flat_id(j));
  return ids;
}

ModuleVector act_generator(const IntermediateSeriesModule& m, const Generator& g, std::size_t id,
                           const RewriteOptions&) {
  const std::int64_t k = m.k_of(id);
  const std::int64_t target = checked_index_sum(k, g.index());
  if (target < -m.window() || target > m.window())
    throw TruncationError("action leaves the series window [-" + std::to_string(m.window()) +
                          ", " + std::to_string(m.window()) + "]");
  ModuleVector out;
  if (g.kind() == Kind::L)
    out.add(m.flat_id(target), m.params().alpha + k + Rational(g.index()) * m.params().beta);
  else
    out.add(m.flat_id(target), m.params().f);
  return out;
}

ModuleVector act(const IntermediateSeriesModule& m, const EnvelopingElement& x,
                 const ModuleVector& v, const RewriteOptions& opts) {
  ModuleVector out;
  for (const auto& [w, coeff] : x.terms()) {
    const Rational scalar = m.eval_centrals(coeff);
    if (scalar == 0) continue;
    ModuleVector cur = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      ModuleVector next;
      for (const auto& [id, r] : cur.terms()) next += act_generator(m, *it, id, opts) * r;
      cur = std::move(next);
    }
    out += cur * scalar;
  }
  return out;
}

ModuleVector act(const IntermediateSeriesModule& m, const LieElement& x, const ModuleVector& v,
                 const RewriteOptions& opts) {
  return act(m, lift(x), v, opts);
}

namespace detail {

std::optional<ModuleVector> apply_column(const ActionColumn& col, const ModuleVector& v) {
  ModuleVector out;
  for (const auto& [id, coeff] : v.terms()) {
    if (!col[id]) return std::nullopt;
    out += *col[id] * coeff;
  }
  return out;
}

namespace {

struct TaskResult {
  // 0 = ok, 1 = skipped, 2 = violation
  std::uint8_t status = 0;
  std::string detail;
};

std::string vector_text(const ModuleVector& v, const std::function<std::string(std::size_t)>& label) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [id, r] : v.terms()) {
    if (!s.empty()) s += " + ";
    s += to_string(r) + "*" + label(id);
  }
  return s;
}

}  // namespace

AxiomCheckReport check_module_axioms_impl(
    const std::vector<Generator>& window_gens, const std::vector<Generator>& ext_gens,
    const std::vector<ActionColumn>& cols, const std::vector<std::size_t>& samples,
    const std::function<Rational(const CentralPoly&)>& eval_centrals,
    const std::function<std::string(std::size_t)>& label, Exec exec) {
  std::map<std::pair<std::uint8_t, std::int64_t>, std::size_t> pos;
  for (std::size_t i = 0; i < ext_gens.size(); ++i)
    pos[{static_cast<std::uint8_t>(ext_gens[i].kind()), ext_gens[i].index()}] = i;
  auto col_of = [&](const Generator& g) -> const ActionColumn& {
    return cols[pos.at({static_cast<std::uint8_t>(g.kind()), g.index()})];
  };

  // Unordered pairs (antisymmetry makes the transposes redundant).
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < window_gens.size(); ++i)
    for (std::size_t j = i; j < window_gens.size(); ++j) pairs.emplace_back(i, j);

  const std::size_t ntasks = pairs.size() * samples.size();
  std::vector<TaskResult> results(ntasks);

  auto run_task = [&](std::size_t t) {
    const auto [pi, pj] = pairs[t / samples.size()];
    const std::size_t s = samples[t % samples.size()];
    const Generator& x = window_gens[pi];
    const Generator& y = window_gens[pj];
    TaskResult& res = results[t];

    const ActionColumn& cx = col_of(x);
    const ActionColumn& cy = col_of(y);
    if (!cx[s] || !cy[s]) {
      res.status = 1;
      return;
    }
    const auto xy = apply_column(cx, *cy[s]);
    const auto yx = apply_column(cy, *cx[s]);
    if (!xy || !yx) {
      res.status = 1;
      return;
    }
    ModuleVector lhs = *xy - *yx;

    ModuleVector rhs;
    const LieElement br = bracket_basis(x, y);
    for (const auto& [g, poly] : br.generator_terms()) {
      const Rational coeff = eval_centrals(poly);
      if (coeff == 0) continue;
      const ActionColumn& cg = col_of(g);
      if (!cg[s]) {
        res.status = 1;
        return;
      }
      rhs += *cg[s] * coeff;
    }
    rhs.add(s, eval_centrals(br.central_term()));

    if (!(lhs == rhs)) {
      res.status = 2;
      res.detail = "x(y.v) - y(x.v) = " + vector_text(lhs, label) +
                   ", [x,y].v = " + vector_text(rhs, label);
    }
  };

  const std::int64_t nt = static_cast<std::int64_t>(ntasks);
#ifdef _OPENMP
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t t = 0; t < nt; ++t) run_task(static_cast<std::size_t>(t));
  } else {
    for (std::int64_t t = 0; t < nt; ++t) run_task(static_cast<std::size_t>(t));
  }
#else
  (void)exec;
  for (std::int64_t t = 0; t < nt; ++t) run_task(static_cast<std::size_t>(t));
#endif

  AxiomCheckReport report;
  for (std::size_t t = 0; t < ntasks; ++t) {
    const auto [pi, pj] = pairs[t / samples.size()];
    switch (results[t].status) {
      case 0: ++report.checks; break;
      case 1: ++report.skipped; break;
      default:
        ++report.checks;
        report.violations.push_back(AxiomViolation{
            to_string(window_gens[pi]), to_string(window_gens[pj]),
            label(samples[t % samples.size()]), results[t].detail});
    }
  }
  return report;
}

}  // namespace detail

}  // namespace thv
