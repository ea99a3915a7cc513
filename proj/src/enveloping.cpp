#include "thv/enveloping.hpp"

#include <algorithm>
#include <cassert>

#include "thv/errors.hpp"
#include "thv/structure.hpp"

namespace thv {

bool CanonicalWordLess::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() > b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    return CanonicalGenLess{}(a[i], b[i]);
  }
  return false;
}

std::int64_t word_grade(const Word& w) {
  std::int64_t g = 0;
  for (const Generator& x : w) g = checked_index_sum(g, x.index());
  return g;
}

std::string word_text(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!s.empty()) s += "*";
    s += to_string(w[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

bool is_sorted_word(const Word& w, const GeneratorOrder& order) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (order.less(w[i + 1], w[i])) return false;
  return true;
}

std::uint64_t inversion_count(const Word& w, const GeneratorOrder& order) {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (order.less(w[j], w[i])) ++n;
  return n;
}

EnvelopingElement EnvelopingElement::zero(GeneratorOrder order) {
  return EnvelopingElement(std::move(order));
}

EnvelopingElement EnvelopingElement::unit(GeneratorOrder order) {
  return central(CentralPoly::one(), std::move(order));
}

EnvelopingElement EnvelopingElement::central(CentralPoly p, GeneratorOrder order) {
  EnvelopingElement a(std::move(order));
  a.add_term(Word{}, p);
  return a;
}

EnvelopingElement EnvelopingElement::generator(const Generator& g, GeneratorOrder order) {
  EnvelopingElement a(std::move(order));
  a.add_term(Word{g}, CentralPoly::one());
  return a;
}

EnvelopingElement EnvelopingElement::monomial(Word w, CentralPoly coeff, GeneratorOrder order) {
  if (!is_sorted_word(w, order))
    throw UsageError("monomial word is not sorted under the given order");
  EnvelopingElement a(std::move(order));
  a.add_term(w, coeff);
  return a;
}

void EnvelopingElement::add_term(const Word& w, const CentralPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

EnvelopingElement& EnvelopingElement::operator+=(const EnvelopingElement& o) {
  if (!(order_ == o.order_))
    throw UsageError("generator order mismatch; renormalize first");
  for (const auto& [w, coeff] : o.terms_) add_term(w, coeff);
  return *this;
}

EnvelopingElement& EnvelopingElement::operator-=(const EnvelopingElement& o) {
  if (!(order_ == o.order_))
    throw UsageError("generator order mismatch; renormalize first");
  for (const auto& [w, coeff] : o.terms_) add_term(w, -coeff);
  return *this;
}

EnvelopingElement EnvelopingElement::operator-() const {
  EnvelopingElement a(order_);
  for (const auto& [w, coeff] : terms_) a.terms_.emplace(w, -coeff);
  return a;
}

EnvelopingElement& EnvelopingElement::operator*=(const CentralPoly& p) {
  if (p.is_zero()) {
    terms_.clear();
    return *this;
  }
  Terms out;
  for (auto& [w, coeff] : terms_) {
    CentralPoly c = coeff * p;
    if (!c.is_zero()) out.emplace(w, std::move(c));
  }
  terms_ = std::move(out);
  return *this;
}

EnvelopingElement& EnvelopingElement::operator*=(const Rational& r) {
  return *this *= CentralPoly::constant(r);
}

namespace {

// Worklist key: words are processed in strictly decreasing (length, inversion
// count) order, so every distinct word is rewritten at most once and equal
// words arising along different branches share one coefficient.
struct WorkKey {
  std::size_t len;
  std::uint64_t inv;
  Word word;
};

struct WorkKeyLess {
  bool operator()(const WorkKey& a, const WorkKey& b) const {
    if (a.len != b.len) return a.len > b.len;
    if (a.inv != b.inv) return a.inv > b.inv;
    return CanonicalWordLess{}(a.word, b.word);
  }
};

class Straightener {
 public:
  Straightener(const GeneratorOrder& order, const RewriteOptions& opts)
      : order_(order), opts_(opts) {}

  void push(Word w, const CentralPoly& coeff) {
    if (coeff.is_zero()) return;
    WorkKey key{w.size(), inversion_count(w, order_), std::move(w)};
    auto [it, inserted] = pending_.emplace(std::move(key), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) pending_.erase(it);
    }
  }

  EnvelopingElement run() {
    EnvelopingElement out(order_);
    std::uint64_t steps = 0;
    while (!pending_.empty()) {
      auto node = pending_.extract(pending_.begin());
      const Word& w = node.key().word;
      const std::uint64_t inv = node.key().inv;
      const CentralPoly& coeff = node.mapped();
      if (inv == 0) {
        out.add_term(w, coeff);
        continue;
      }
      if (opts_.step_budget != 0 && ++steps > opts_.step_budget)
        throw StepBudgetError("rewrite step budget exceeded");
      rewrite(w, inv, coeff);
    }
    return out;
  }

 private:
  void rewrite(const Word& w, std::uint64_t inv, const CentralPoly& coeff) {
    std::size_t pos = w.size();  // adjacent inversion to rewrite
    if (opts_.strategy == RewriteStrategy::RightmostFirst) {
      for (std::size_t i = w.size() - 1; i-- > 0;)
        if (order_.less(w[i + 1], w[i])) {
          pos = i;
          break;
        }
    } else {
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (order_.less(w[i + 1], w[i])) {
          pos = i;
          break;
        }
    }
    assert(pos < w.size());

    // x.y -> y.x + [x,y]
    Word swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    assert(inversion_count(swapped, order_) == inv - 1);
    (void)inv;
    push(std::move(swapped), coeff);

    const LieElement br = bracket_basis(w[pos], w[pos + 1]);
    if (br.is_zero()) return;
    Word shorter;
    shorter.reserve(w.size() - 1);
    shorter.insert(shorter.end(), w.begin(), w.begin() + pos);
    shorter.insert(shorter.end(), w.begin() + pos + 2, w.end());
    for (const auto& [g, gc] : br.generator_terms()) {
      Word replaced = shorter;
      replaced.insert(replaced.begin() + pos, g);
      push(std::move(replaced), coeff * gc);
    }
    if (!br.central_term().is_zero()) push(std::move(shorter), coeff * br.central_term());
  }

  const GeneratorOrder& order_;
  const RewriteOptions& opts_;
  std::map<WorkKey, CentralPoly, WorkKeyLess> pending_;
};

}  // namespace

EnvelopingElement normal_order(const Word& w, const GeneratorOrder& order,
                               const RewriteOptions& opts) {
  Straightener s(order, opts);
  s.push(w, CentralPoly::one());
  return s.run();
}

EnvelopingElement normal_order(const EnvelopingElement& a, const RewriteOptions& opts) {
  Straightener s(a.order(), opts);
  for (const auto& [w, coeff] : a.terms()) s.push(w, coeff);
  return s.run();
}

EnvelopingElement multiply(const EnvelopingElement& a, const EnvelopingElement& b,
                           const RewriteOptions& opts) {
  if (!(a.order() == b.order()))
    throw UsageError("generator order mismatch; renormalize first");
  Straightener s(a.order(), opts);
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      s.push(std::move(w), ca * cb);
    }
  }
  return s.run();
}

EnvelopingElement renormalize(const EnvelopingElement& a, const GeneratorOrder& new_order,
                              const RewriteOptions& opts) {
  Straightener s(new_order, opts);
  for (const auto& [w, coeff] : a.terms()) s.push(w, coeff);
  return s.run();
}

LeftIdeal LeftIdeal::all_i() {
  LeftIdeal ideal;
  ideal.all_i_ = true;
  return ideal;
}

LeftIdeal LeftIdeal::from_generators(std::vector<Generator> gens) {
  if (gens.empty()) throw UsageError("left ideal needs at least one generator");
  std::sort(gens.begin(), gens.end(), CanonicalGenLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  LeftIdeal ideal;
  ideal.gens_ = std::move(gens);
  return ideal;
}

bool LeftIdeal::selects(const Generator& g) const {
  if (all_i_) return g.kind() == Kind::I;
  return std::find(gens_.begin(), gens_.end(), g) != gens_.end();
}

GeneratorOrder LeftIdeal::adapted_order() const {
  if (all_i_) return GeneratorOrder();  // I-block is already maximal
  return GeneratorOrder::with_last_set(gens_);
}

std::array<bool, 3> LeftIdeal::captured_centrals() const {
  std::array<bool, 3> captured{false, false, false};
  if (all_i_) {
    // [I_n, I_-n] = n C_I with both sides selected, any n >= 1.
    captured[static_cast<std::size_t>(CentralVar::CI)] = true;
    return captured;
  }
  for (const Generator& g : gens_) {
    for (const Generator& h : gens_) {
      const LieElement br = bracket_basis(g, h);
      for (const auto& [e, coeff] : br.central_term().terms()) {
        if (e.c > 0) captured[0] = true;
        if (e.ci > 0) captured[1] = true;
        if (e.cli > 0) captured[2] = true;
      }
    }
  }
  return captured;
}

std::string LeftIdeal::describe() const {
  if (all_i_) return "all-I";
  std::string s = "gens=";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ",";
    s += to_string(gens_[i]);
  }
  return s;
}

EnvelopingElement reduce_mod_left_ideal(const EnvelopingElement& a, const LeftIdeal& ideal,
                                        const RewriteOptions& opts) {
  const GeneratorOrder adapted = ideal.adapted_order();
  const EnvelopingElement b = a.order() == adapted ? a : renormalize(a, adapted, opts);

  const auto captured = ideal.captured_centrals();
  const std::optional<Rational> zero(Rational(0));
  const auto kill_c = captured[0] ? zero : std::optional<Rational>();
  const auto kill_ci = captured[1] ? zero : std::optional<Rational>();
  const auto kill_cli = captured[2] ? zero : std::optional<Rational>();

  EnvelopingElement out(adapted);
  for (const auto& [w, coeff] : b.terms()) {
    if (!w.empty() && ideal.selects(w.back())) continue;  // left multiple of a selected generator
    out.add_term(w, coeff.substitute(kill_c, kill_ci, kill_cli));
  }
  return out;
}

EnvelopingElement specialize_centrals(const EnvelopingElement& a,
                                      const std::optional<Rational>& c,
                                      const std::optional<Rational>& ci,
                                      const std::optional<Rational>& cli) {
  EnvelopingElement out(a.order());
  for (const auto& [w, coeff] : a.terms()) out.add_term(w, coeff.substitute(c, ci, cli));
  return out;
}

std::size_t filtration_degree(const EnvelopingElement& a) {
  std::size_t d = 0;
  for (const auto& [w, coeff] : a.terms()) d = std::max(d, w.size());
  return d;
}

EnvelopingElement lift(const LieElement& x, GeneratorOrder order) {
  EnvelopingElement out(std::move(order));
  for (const auto& [g, coeff] : x.generator_terms()) out.add_term(Word{g}, coeff);
  out.add_term(Word{}, x.central_term());
  return out;
}

std::optional<LieElement> to_lie(const EnvelopingElement& a) {
  if (filtration_degree(a) > 1) return std::nullopt;
  LieElement x;
  for (const auto& [w, coeff] : a.terms()) {
    if (w.empty())
      x.add_central_term(coeff);
    else
      x.add_generator_term(w[0], coeff);
  }
  return x;
}

}  // namespace thv
