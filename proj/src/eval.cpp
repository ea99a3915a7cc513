#include "thv/eval.hpp"

#include "thv/structure.hpp"

namespace thv {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

EnvelopingElement eval(const Expression& e, const GeneratorOrder& order,
                       const RewriteOptions& opts) {
  return std::visit(
      Overloaded{
          [&](const Expression::GeneratorAtom& a) {
            return EnvelopingElement::generator(a.g, order);
          },
          [&](const Expression::CentralAtom& a) {
            return EnvelopingElement::central(CentralPoly::variable(a.v), order);
          },
          [&](const Expression::RationalLit& a) {
            return EnvelopingElement::central(CentralPoly::constant(a.value), order);
          },
          [&](const Expression::Bracket& b) {
            const EnvelopingElement lhs = eval(*b.lhs, order, opts);
            const EnvelopingElement rhs = eval(*b.rhs, order, opts);
            const auto x = to_lie(lhs);
            const auto y = to_lie(rhs);
            if (x && y) return lift(bracket(*x, *y), order);
            return multiply(lhs, rhs, opts) - multiply(rhs, lhs, opts);
          },
          [&](const Expression::Product& p) {
            return multiply(eval(*p.lhs, order, opts), eval(*p.rhs, order, opts), opts);
          },
          [&](const Expression::Power& p) {
            const EnvelopingElement base = eval(*p.base, order, opts);
            EnvelopingElement out = EnvelopingElement::unit(order);
            for (std::uint32_t i = 0; i < p.exponent; ++i) out = multiply(out, base, opts);
            return out;
          },
          [&](const Expression::Sum& s) {
            return eval(*s.lhs, order, opts) + eval(*s.rhs, order, opts);
          },
          [&](const Expression::Difference& d) {
            return eval(*d.lhs, order, opts) - eval(*d.rhs, order, opts);
          },
          [&](const Expression::Negate& n) { return -eval(*n.operand, order, opts); },
      },
      e.node);
}

}  // namespace thv
