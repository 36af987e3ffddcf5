#pragma once

// Derivative towers [e, e', e'', ...] with respect to one implicit variable.
//
// A tower is either a compact constant (value followed by zero derivatives)
// or value :> tail, where the tail is the tower of the derivative. Arithmetic
// and the elementary functions follow the Leibniz rule and the chain rule
// co-recursively; nothing about the expression is stored, the derivatives are
// produced on demand and memoized.

#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "corec/coeff.hpp"
#include "corec/lazy.hpp"
#include "corec/series.hpp"

namespace corec {

template <class C>
class Dif {
public:
    using value_type = C;

    struct Node {
        C value;
        bool constant;  // value followed by zero derivatives; next is null
        detail::CellPtr<Node> next;
    };
    using CellPtr = detail::CellPtr<Node>;

    /// Constant zero.
    Dif() : Dif(constant(C{})) {}
    explicit Dif(CellPtr cell) : cell_(std::move(cell)) {}

    static Dif constant(C c) { return Dif(detail::make_ready(Node{std::move(c), true, nullptr}, "const")); }

    /// The differentiation variable at x0: [x0, 1, 0, 0, ...].
    static Dif variable(C x0) { return cons(std::move(x0), constant(from_int<C>(1))); }

    static Dif cons(C value, const Dif& derivative) {
        return Dif(detail::make_ready(Node{std::move(value), false, derivative.cell_}, "cons"));
    }

    template <class F>
    static Dif from_producer(const char* label, F&& producer) {
        return Dif(detail::make_deferred<Node>(label, std::forward<F>(producer)));
    }

    template <class F>
    static Dif lazy(F make, const char* label = "lazy") {
        return from_producer(label, [make = std::move(make)]() -> Node {
            Dif d = make();
            return detail::force(d.cell_);
        });
    }

    static Dif declare(const char* label = "dif") { return Dif(detail::declare<Node>(label)); }
    void define(const Dif& expr) const { detail::define(cell_, expr.cell_); }

    const Node& node() const { return detail::force(cell_); }

    C value() const { return node().value; }
    bool is_constant() const { return node().constant; }

    /// The derivative tower; a constant's derivative is the constant zero.
    Dif derivative() const {
        const Node& n = node();
        return n.constant ? constant(from_int<C>(0)) : Dif(n.next);
    }

    /// k-th derivative value.
    C element(std::size_t k) const {
        const CellPtr* cur = &cell_;
        for (std::size_t i = 0;; ++i) {
            const Node& n = detail::force(*cur);
            if (i == k) return n.value;
            if (n.constant) return from_int<C>(0);
            cur = &n.next;
        }
    }

    std::vector<C> take(std::size_t count) const {
        std::vector<C> out;
        out.reserve(count);
        for (std::size_t k = 0; k < count; ++k) out.push_back(element(k));
        return out;
    }

    /// Number of leading tower elements already evaluated; forces nothing.
    std::size_t evaluated_depth() const noexcept {
        std::size_t n = 0;
        const detail::Cell<Node>* c = cell_.get();
        while (c && c->state == CellState::evaluated) {
            ++n;
            if (c->node->constant) break;
            c = c->node->next.get();
        }
        return n;
    }

    /// Constant zero by construction (evaluated compact zero).
    bool known_zero() const noexcept {
        return cell_->state == CellState::evaluated && cell_->node->constant &&
               coeff_traits<C>::is_zero(cell_->node->value);
    }

    CellState state() const noexcept { return cell_->state; }
    const CellPtr& cell() const noexcept { return cell_; }

private:
    CellPtr cell_;
};

template <class C>
struct coeff_traits<Dif<C>> {
    static Dif<C> from_int(long long n) { return Dif<C>::constant(coeff_traits<C>::from_int(n)); }
    static bool is_zero(const Dif<C>& d) { return d.known_zero(); }
};

template <class C>
std::vector<C> take(std::size_t n, const Dif<C>& d) {
    return d.take(n);
}

// ---------------------------------------------------------------------------
// Arithmetic

template <class C>
Dif<C> add(const Dif<C>& x, const Dif<C>& y);
template <class C>
Dif<C> sub(const Dif<C>& x, const Dif<C>& y);
template <class C>
Dif<C> neg(const Dif<C>& x);
template <class C>
Dif<C> scale(const C& c, const Dif<C>& x);
template <class C>
Dif<C> mul(const Dif<C>& x, const Dif<C>& y);
template <class C>
Dif<C> sqr(const Dif<C>& x);
template <class C>
Dif<C> recip(const Dif<C>& x);
template <class C>
Dif<C> div(const Dif<C>& x, const Dif<C>& y);

template <class C>
Dif<C> add(const Dif<C>& x, const Dif<C>& y) {
    using Node = typename Dif<C>::Node;
    return Dif<C>::from_producer("add", [x, y]() -> Node {
        const Node& a = x.node();
        const Node& b = y.node();
        C v = a.value + b.value;
        if (a.constant && b.constant) return Node{std::move(v), true, nullptr};
        if (a.constant) return Node{std::move(v), false, b.next};
        if (b.constant) return Node{std::move(v), false, a.next};
        return Node{std::move(v), false, add(Dif<C>(a.next), Dif<C>(b.next)).cell()};
    });
}

template <class C>
Dif<C> neg(const Dif<C>& x) {
    using Node = typename Dif<C>::Node;
    return Dif<C>::from_producer("neg", [x]() -> Node {
        const Node& a = x.node();
        if (a.constant) return Node{-a.value, true, nullptr};
        return Node{-a.value, false, neg(Dif<C>(a.next)).cell()};
    });
}

template <class C>
Dif<C> sub(const Dif<C>& x, const Dif<C>& y) {
    using Node = typename Dif<C>::Node;
    return Dif<C>::from_producer("sub", [x, y]() -> Node {
        const Node& a = x.node();
        const Node& b = y.node();
        C v = a.value - b.value;
        if (a.constant && b.constant) return Node{std::move(v), true, nullptr};
        if (a.constant) return Node{std::move(v), false, neg(Dif<C>(b.next)).cell()};
        if (b.constant) return Node{std::move(v), false, a.next};
        return Node{std::move(v), false, sub(Dif<C>(a.next), Dif<C>(b.next)).cell()};
    });
}

template <class C>
Dif<C> scale(const C& c, const Dif<C>& x) {
    using Node = typename Dif<C>::Node;
    return Dif<C>::from_producer("scale", [c, x]() -> Node {
        const Node& a = x.node();
        if (a.constant) return Node{c * a.value, true, nullptr};
        return Node{c * a.value, false, scale(c, Dif<C>(a.next)).cell()};
    });
}

/// Leibniz: (x·y)' = x·y' + x'·y.
template <class C>
Dif<C> mul(const Dif<C>& x, const Dif<C>& y) {
    using Node = typename Dif<C>::Node;
    return Dif<C>::from_producer("mul", [x, y]() -> Node {
        const Node& a = x.node();
        const Node& b = y.node();
        if (a.constant) return scale(a.value, y).node();
        if (b.constant) return scale(b.value, x).node();
        Dif<C> xq(a.next);
        Dif<C> yq(b.next);
        return Node{a.value * b.value, false, add(mul(x, yq), mul(xq, y)).cell()};
    });
}

/// x² :> 2·(x'·x); kept separate from mul(x, x).
template <class C>
Dif<C> sqr(const Dif<C>& x) {
    using Node = typename Dif<C>::Node;
    return Dif<C>::from_producer("sqr", [x]() -> Node {
        const Node& a = x.node();
        if (a.constant) return Node{a.value * a.value, true, nullptr};
        return Node{a.value * a.value, false, scale(from_int<C>(2), mul(Dif<C>(a.next), x)).cell()};
    });
}

/// ip = 1/x :> −x'·ip².
template <class C>
Dif<C> recip(const Dif<C>& x) {
    using Node = typename Dif<C>::Node;
    return Dif<C>::from_producer("recip", [x]() -> Node {
        const Node& a = x.node();
        if (is_zero(a.value)) throw DomainError("recip: pole (value is zero)");
        C r = from_int<C>(1) / a.value;
        if (a.constant) return Node{std::move(r), true, nullptr};
        Dif<C> ip = Dif<C>::declare("recip");
        ip.define(Dif<C>::cons(std::move(r), neg(mul(Dif<C>(a.next), sqr(ip)))));
        return ip.node();
    });
}

namespace detail {
// Bound on the number of levels the vanishing-numerator-and-denominator branch
// of division strips before giving up on an everywhere-zero tower.
inline constexpr std::size_t lhopital_depth_limit = 4096;
}

/// w = x/y :> x'/y − w·y'/y. When both values vanish the tails are divided
/// instead (l'Hôpital); only the value of that result is the limit, its
/// derivatives are not those of the continuous extension.
template <class C>
Dif<C> div(const Dif<C>& x, const Dif<C>& y) {
    using Node = typename Dif<C>::Node;
    return Dif<C>::from_producer("div", [x, y]() -> Node {
        Dif<C> num = x;
        Dif<C> den = y;
        for (std::size_t level = 0;; ++level) {
            const Node& a = num.node();
            const Node& b = den.node();
            if (!is_zero(a.value) || !is_zero(b.value)) break;
            if (a.constant && b.constant) return Node{from_int<C>(0), true, nullptr};
            if (level == detail::lhopital_depth_limit) {
                throw DomainError("div: numerator and denominator vanish to order " +
                                  std::to_string(level));
            }
            num = num.derivative();
            den = den.derivative();
        }
        const Node& a = num.node();
        const Node& b = den.node();
        if (is_zero(b.value)) throw DomainError("div: pole (denominator vanishes, numerator does not)");
        if (b.constant) return scale(from_int<C>(1) / b.value, num).node();
        if (a.constant) return scale(a.value, recip(den)).node();
        Dif<C> w = Dif<C>::declare("div");
        w.define(Dif<C>::cons(a.value / b.value,
                              sub(div(Dif<C>(a.next), den), div(mul(w, Dif<C>(b.next)), den))));
        return w.node();
    });
}

template <class C>
Dif<C> operator+(const Dif<C>& x, const Dif<C>& y) {
    return add(x, y);
}
template <class C>
Dif<C> operator-(const Dif<C>& x, const Dif<C>& y) {
    return sub(x, y);
}
template <class C>
Dif<C> operator-(const Dif<C>& x) {
    return neg(x);
}
template <class C>
Dif<C> operator*(const Dif<C>& x, const Dif<C>& y) {
    return mul(x, y);
}
template <class C>
Dif<C> operator/(const Dif<C>& x, const Dif<C>& y) {
    return div(x, y);
}

// ---------------------------------------------------------------------------
// Elementary functions

template <class C>
Dif<C> sin(const Dif<C>& x);
template <class C>
Dif<C> cos(const Dif<C>& x);

/// w = exp x :> x'·w.
template <class C>
Dif<C> exp(const Dif<C>& x) {
    using Node = typename Dif<C>::Node;
    return Dif<C>::from_producer("exp", [x]() -> Node {
        const Node& a = x.node();
        C e = elementary<C>::exp(a.value);
        if (a.constant) return Node{std::move(e), true, nullptr};
        Dif<C> w = Dif<C>::declare("exp");
        w.define(Dif<C>::cons(std::move(e), mul(Dif<C>(a.next), w)));
        return w.node();
    });
}

template <class C>
Dif<C> log(const Dif<C>& x) {
    using Node = typename Dif<C>::Node;
    return Dif<C>::from_producer("log", [x]() -> Node {
        const Node& a = x.node();
        C l = elementary<C>::log(a.value);
        if (a.constant) return Node{std::move(l), true, nullptr};
        return Node{std::move(l), false, div(Dif<C>(a.next), x).cell()};
    });
}

/// w = sqrt x :> ½·x'/w.
template <class C>
Dif<C> sqrt(const Dif<C>& x) {
    using Node = typename Dif<C>::Node;
    return Dif<C>::from_producer("sqrt", [x]() -> Node {
        const Node& a = x.node();
        C r = elementary<C>::sqrt(a.value);
        if (a.constant) return Node{std::move(r), true, nullptr};
        if (is_zero(a.value)) throw DomainError("sqrt: derivative tower singular at zero");
        Dif<C> w = Dif<C>::declare("sqrt");
        const C half = from_int<C>(1) / from_int<C>(2);
        w.define(Dif<C>::cons(std::move(r), scale(half, div(Dif<C>(a.next), w))));
        return w.node();
    });
}

template <class C>
Dif<C> sin(const Dif<C>& x) {
    using Node = typename Dif<C>::Node;
    return Dif<C>::from_producer("sin", [x]() -> Node {
        const Node& a = x.node();
        C s = elementary<C>::sin(a.value);
        if (a.constant) return Node{std::move(s), true, nullptr};
        return Node{std::move(s), false, mul(Dif<C>(a.next), cos(x)).cell()};
    });
}

template <class C>
Dif<C> cos(const Dif<C>& x) {
    using Node = typename Dif<C>::Node;
    return Dif<C>::from_producer("cos", [x]() -> Node {
        const Node& a = x.node();
        C c = elementary<C>::cos(a.value);
        if (a.constant) return Node{std::move(c), true, nullptr};
        return Node{std::move(c), false, neg(mul(Dif<C>(a.next), sin(x))).cell()};
    });
}

/// atan x :> x'/(1 + x²).
template <class C>
Dif<C> atan(const Dif<C>& x) {
    using Node = typename Dif<C>::Node;
    return Dif<C>::from_producer("atan", [x]() -> Node {
        const Node& a = x.node();
        C t = elementary<C>::atan(a.value);
        if (a.constant) return Node{std::move(t), true, nullptr};
        auto one = Dif<C>::constant(from_int<C>(1));
        return Node{std::move(t), false, div(Dif<C>(a.next), add(one, sqr(x))).cell()};
    });
}

/// asin x :> x'/sqrt(1 − x²).
template <class C>
Dif<C> asin(const Dif<C>& x) {
    using Node = typename Dif<C>::Node;
    return Dif<C>::from_producer("asin", [x]() -> Node {
        const Node& a = x.node();
        C s = elementary<C>::asin(a.value);
        if (a.constant) return Node{std::move(s), true, nullptr};
        auto one = Dif<C>::constant(from_int<C>(1));
        return Node{std::move(s), false, div(Dif<C>(a.next), sqrt(sub(one, sqr(x)))).cell()};
    });
}

/// Lets towers serve as series coefficients under the elementary functions.
template <class C>
struct elementary<Dif<C>> {
    static Dif<C> exp(const Dif<C>& x) { return corec::exp(x); }
    static Dif<C> log(const Dif<C>& x) { return corec::log(x); }
    static Dif<C> sqrt(const Dif<C>& x) { return corec::sqrt(x); }
    static Dif<C> sin(const Dif<C>& x) { return corec::sin(x); }
    static Dif<C> cos(const Dif<C>& x) { return corec::cos(x); }
    static Dif<C> atan(const Dif<C>& x) { return corec::atan(x); }
    static Dif<C> asin(const Dif<C>& x) { return corec::asin(x); }
    static Dif<C> pow(const Dif<C>& x, const Dif<C>& a) { return corec::exp(mul(a, corec::log(x))); }
};

// ---------------------------------------------------------------------------
// Tower utilities

/// The derivation: drop the value, keep the derivatives.
template <class C>
Dif<C> shift(const Dif<C>& x) {
    return Dif<C>::lazy([x] { return x.derivative(); }, "shift");
}

template <class C>
C main_value(const Dif<C>& x) {
    return x.value();
}

/// Taylor coefficients at the expansion point: element k / k!.
template <class C>
Series<C> taylor_coefficients(const Dif<C>& x) {
    struct Walk {
        static Series<C> from(const Dif<C>& d, long long k, C factorial) {
            using Node = typename Series<C>::Node;
            return Series<C>::from_producer("taylor", [d, k, factorial]() -> Node {
                const auto& n = d.node();
                C coeff = n.value / factorial;
                if (n.constant) return Series<C>::constant(std::move(coeff)).node();
                C next_factorial = factorial * from_int<C>(k + 1);
                return Node{false, std::move(coeff),
                            from(Dif<C>(n.next), k + 1, std::move(next_factorial)).cell()};
            });
        }
    };
    return Walk::from(x, 0, from_int<C>(1));
}

/// Tower of sin(x)·e^{-x} for a variable-style x, via the coupled linear pair
/// p = sin(x0)e^{-x0} :> q − p,  q = cos(x0)e^{-x0} :> −p − q.
template <class C>
Dif<C> exsn(const Dif<C>& x) {
    return Dif<C>::lazy(
        [x] {
            const C x0 = x.value();
            const C ex = elementary<C>::exp(-x0);
            Dif<C> p = Dif<C>::declare("exsn.p");
            Dif<C> q = Dif<C>::declare("exsn.q");
            p.define(Dif<C>::cons(elementary<C>::sin(x0) * ex, sub(q, p)));
            q.define(Dif<C>::cons(elementary<C>::cos(x0) * ex, sub(neg(p), q)));
            return p;
        },
        "exsn");
}

/// Derivatives of the Lambert function at 0, from W' = e^{-W}/(1 + W), W(0) = 0.
inline Dif<double> lambert_w() {
    Dif<double> w = Dif<double>::declare("lambertW");
    w.define(Dif<double>::cons(0.0, div(exp(neg(w)), add(Dif<double>::constant(1.0), w))));
    return w;
}

}  // namespace corec
