#include "thv/structure.hpp"

#include <limits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "thv/errors.hpp"

namespace thv {

LieElement bracket_basis(const Generator& x, const Generator& y) {
  const std::int64_t n = x.index();
  const std::int64_t m = y.index();
  LieElement out;

  if (x.kind() == Kind::L && y.kind() == Kind::L) {
    if (m != n)
      out.add_generator_term(Generator(Kind::L, checked_index_sum(n, m)),
                             CentralPoly::constant(Rational(m - n)));
    if (n == -m) {
      // (n^3 - n)/12, computed in big integers: n^3 overflows int64 near the
      // index bound.
      Integer nn(n);
      Rational coeff(nn * nn * nn - nn, Integer(12));
      if (coeff != 0) out.add_central_term(CentralPoly::variable(CentralVar::C) * coeff);
    }
    return out;
  }

  if (x.kind() == Kind::L && y.kind() == Kind::I) {
    if (m != 0)
      out.add_generator_term(Generator(Kind::I, checked_index_sum(n, m)),
                             CentralPoly::constant(Rational(m)));
    if (n == -m) {
      Integer nn(n);
      Rational coeff(nn * nn + nn);
      if (coeff != 0) out.add_central_term(CentralPoly::variable(CentralVar::CLI) * coeff);
    }
    return out;
  }

  if (x.kind() == Kind::I && y.kind() == Kind::L) return -bracket_basis(y, x);

  // I, I
  if (n == -m && n != 0)
    out.add_central_term(CentralPoly::variable(CentralVar::CI) * Rational(n));
  return out;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  LieElement out;
  for (const auto& [gx, cx] : x.generator_terms())
    for (const auto& [gy, cy] : y.generator_terms()) out += bracket_basis(gx, gy) * (cx * cy);
  return out;
}

namespace {

bool antisymmetry_ok(const Generator& x, const Generator& y) {
  return (bracket_basis(x, y) + bracket_basis(y, x)).is_zero();
}

bool jacobi_ok(const Generator& x, const Generator& y, const Generator& z) {
  LieElement sum = bracket(LieElement::generator(x), bracket_basis(y, z));
  sum += bracket(LieElement::generator(y), bracket_basis(z, x));
  sum += bracket(LieElement::generator(z), bracket_basis(x, y));
  return sum.is_zero();
}

std::vector<Generator> window_generators(std::int64_t lo, std::int64_t hi) {
  std::vector<Generator> gens;
  for (std::int64_t m = lo; m <= hi; ++m) gens.push_back(gen_l(m));
  for (std::int64_t m = lo; m <= hi; ++m) gens.push_back(gen_i(m));
  return gens;
}

}  // namespace

StructureCheckReport verify_structure_window(std::int64_t lo, std::int64_t hi, Exec exec) {
  if (lo > hi) throw UsageError("empty index window");
  StructureCheckReport report;
  report.window_lo = lo;
  report.window_hi = hi;

  const std::vector<Generator> gens = window_generators(lo, hi);
  const std::int64_t g = static_cast<std::int64_t>(gens.size());
  const std::int64_t npairs = g * g;
  const std::int64_t ntriples = g * g * g;
  report.pairs_checked = static_cast<std::uint64_t>(npairs);
  report.triples_checked = static_cast<std::uint64_t>(ntriples);

  constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();
  std::int64_t first_bad_pair = kNone;
  std::int64_t first_bad_triple = kNone;

#ifdef _OPENMP
  const bool par = exec == Exec::Parallel;
#else
  const bool par = false;
  (void)exec;
#endif

  if (par) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(min : first_bad_pair)
    for (std::int64_t p = 0; p < npairs; ++p)
      if (!antisymmetry_ok(gens[p / g], gens[p % g])) first_bad_pair = std::min(first_bad_pair, p);
#pragma omp parallel for schedule(static) reduction(min : first_bad_triple)
    for (std::int64_t t = 0; t < ntriples; ++t)
      if (!jacobi_ok(gens[t / (g * g)], gens[(t / g) % g], gens[t % g]))
        first_bad_triple = std::min(first_bad_triple, t);
#endif
  } else {
    for (std::int64_t p = 0; p < npairs && first_bad_pair == kNone; ++p)
      if (!antisymmetry_ok(gens[p / g], gens[p % g])) first_bad_pair = p;
    for (std::int64_t t = 0; t < ntriples && first_bad_triple == kNone; ++t)
      if (!jacobi_ok(gens[t / (g * g)], gens[(t / g) % g], gens[t % g])) first_bad_triple = t;
  }

  if (first_bad_pair != kNone) {
    report.ok = false;
    report.first_violation = "antisymmetry fails for (" + to_string(gens[first_bad_pair / g]) +
                             ", " + to_string(gens[first_bad_pair % g]) + ")";
  } else if (first_bad_triple != kNone) {
    report.ok = false;
    const std::int64_t t = first_bad_triple;
    report.first_violation = "jacobi fails for (" + to_string(gens[t / (g * g)]) + ", " +
                             to_string(gens[(t / g) % g]) + ", " + to_string(gens[t % g]) + ")";
  }
  return report;
}

}  // namespace thv
