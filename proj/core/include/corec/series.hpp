#pragma once

// Formal power series as lazy coefficient chains.
//
// A Series is either the compact zero series (ZeroTail) or head :* tail.
// All operations build new lazy cells without forcing their operands; the
// co-recursive definitions below touch coefficient k of a result only after
// the coefficients it depends on exist. Series<C> is itself a valid
// coefficient type, so Series<Series<C>> gives two-variable expansions.

#include <cstddef>
#include <initializer_list>
#include <type_traits>
#include <utility>
#include <vector>

#include "corec/coeff.hpp"
#include "corec/lazy.hpp"

namespace corec {

template <class C>
class Series {
public:
    using coefficient_type = C;

    struct Node {
        bool end;  // ZeroTail: no head, no tail
        C head;
        detail::CellPtr<Node> next;
    };
    using CellPtr = detail::CellPtr<Node>;

    /// The compact zero series.
    Series() : cell_(detail::make_ready(end_node(), "zero")) {}
    explicit Series(CellPtr cell) : cell_(std::move(cell)) {}

    static Node end_node() { return Node{true, C{}, nullptr}; }

    static Series zero() { return Series(); }

    /// c, then ZeroTail.
    static Series constant(C c) { return cons(std::move(c), Series()); }

    /// Finite series; the coefficients after the last are zero.
    static Series from(std::vector<C> coeffs) {
        Series s;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = cons(std::move(*it), s);
        return s;
    }
    static Series from(std::initializer_list<C> coeffs) { return from(std::vector<C>(coeffs)); }

    static Series cons(C head, const Series& tail) {
        return Series(detail::make_ready(Node{false, std::move(head), tail.cell_}, "cons"));
    }

    template <class F>
        requires std::is_invocable_r_v<Series, F&>
    static Series cons(C head, F make_tail) {
        return cons(std::move(head), lazy(std::move(make_tail), "cons.tail"));
    }

    template <class F>
    static Series from_producer(const char* label, F&& producer) {
        return Series(detail::make_deferred<Node>(label, std::forward<F>(producer)));
    }

    /// Deferred series expression, built when its first coefficient is needed.
    template <class F>
    static Series lazy(F make, const char* label = "lazy") {
        return from_producer(label, [make = std::move(make)]() -> Node {
            Series s = make();
            return detail::force(s.cell_);
        });
    }

    static Series declare(const char* label = "series") { return Series(detail::declare<Node>(label)); }
    void define(const Series& expr) const { detail::define(cell_, expr.cell_); }

    template <class F>
    static Series fix(F f, const char* label = "fix") {
        Series self = declare(label);
        self.define(f(self));
        return self;
    }

    const Node& node() const { return detail::force(cell_); }

    /// Forces the first cell only.
    bool is_zero_tail() const { return node().end; }

    C head() const {
        const Node& n = node();
        return n.end ? C{} : n.head;
    }

    Series tail() const {
        const Node& n = node();
        return n.end ? Series() : Series(n.next);
    }

    /// Coefficient of x^k.
    C coeff(std::size_t k) const {
        const CellPtr* cur = &cell_;
        for (std::size_t i = 0;; ++i) {
            const Node& n = detail::force(*cur);
            if (n.end) return C{};
            if (i == k) return n.head;
            cur = &n.next;
        }
    }

    std::vector<C> take(std::size_t n) const {
        std::vector<C> out;
        out.reserve(n);
        const CellPtr* cur = &cell_;
        bool ended = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (!ended) {
                const Node& node = detail::force(*cur);
                if (node.end) {
                    ended = true;
                } else {
                    out.push_back(node.head);
                    cur = &node.next;
                    continue;
                }
            }
            out.push_back(C{});
        }
        return out;
    }

    /// Leading cells already evaluated; forces nothing.
    std::size_t evaluated_prefix() const noexcept {
        std::size_t n = 0;
        const detail::Cell<Node>* c = cell_.get();
        while (c && c->state == CellState::evaluated && !c->node->end) {
            ++n;
            c = c->node->next.get();
        }
        return n;
    }

    /// True only if the first cell is evaluated and is ZeroTail.
    bool known_zero() const noexcept {
        return cell_->state == CellState::evaluated && cell_->node->end;
    }

    CellState state() const noexcept { return cell_->state; }
    const CellPtr& cell() const noexcept { return cell_; }

private:
    CellPtr cell_;
};

template <class C>
struct coeff_traits<Series<C>> {
    static Series<C> from_int(long long n) {
        return n == 0 ? Series<C>() : Series<C>::constant(coeff_traits<C>::from_int(n));
    }
    static bool is_zero(const Series<C>& s) { return s.known_zero(); }
};

template <class C>
std::vector<C> take(std::size_t n, const Series<C>& s) {
    return s.take(n);
}

// ---------------------------------------------------------------------------
// Ring operations

template <class C>
Series<C> add(const Series<C>& u, const Series<C>& v);
template <class C>
Series<C> sub(const Series<C>& u, const Series<C>& v);
template <class C>
Series<C> neg(const Series<C>& u);
template <class C>
Series<C> scale(const C& c, const Series<C>& u);
template <class C>
Series<C> mul(const Series<C>& u, const Series<C>& v);
template <class C>
Series<C> div(const Series<C>& u, const Series<C>& v);

template <class C>
Series<C> add(const Series<C>& u, const Series<C>& v) {
    using Node = typename Series<C>::Node;
    return Series<C>::from_producer("add", [u, v]() -> Node {
        const Node& un = u.node();
        if (un.end) return v.node();
        const Node& vn = v.node();
        if (vn.end) return un;
        return Node{false, un.head + vn.head, add(Series<C>(un.next), Series<C>(vn.next)).cell()};
    });
}

template <class C>
Series<C> neg(const Series<C>& u) {
    using Node = typename Series<C>::Node;
    return Series<C>::from_producer("neg", [u]() -> Node {
        const Node& un = u.node();
        if (un.end) return un;
        return Node{false, -un.head, neg(Series<C>(un.next)).cell()};
    });
}

template <class C>
Series<C> sub(const Series<C>& u, const Series<C>& v) {
    using Node = typename Series<C>::Node;
    return Series<C>::from_producer("sub", [u, v]() -> Node {
        const Node& un = u.node();
        if (un.end) return neg(v).node();
        const Node& vn = v.node();
        if (vn.end) return un;
        return Node{false, un.head - vn.head, sub(Series<C>(un.next), Series<C>(vn.next)).cell()};
    });
}

template <class C>
Series<C> scale(const C& c, const Series<C>& u) {
    using Node = typename Series<C>::Node;
    return Series<C>::from_producer("scale", [c, u]() -> Node {
        const Node& un = u.node();
        if (un.end) return un;
        return Node{false, c * un.head, scale(c, Series<C>(un.next)).cell()};
    });
}

/// Cauchy product: u0*v0 :* (u0*>vq + uq*v).
template <class C>
Series<C> mul(const Series<C>& u, const Series<C>& v) {
    using Node = typename Series<C>::Node;
    return Series<C>::from_producer("mul", [u, v]() -> Node {
        const Node& un = u.node();
        if (un.end) return un;
        const Node& vn = v.node();
        if (vn.end) return vn;
        Series<C> uq(un.next);
        // Shortcuts keep products with monomials linear: 0*v0 :* uq*v, and
        // u0*>v when u's tail is already known to be ZeroTail.
        if (is_zero(un.head)) return Node{false, un.head, mul(uq, v).cell()};
        if (uq.known_zero()) return scale(un.head, v).node();
        return Node{false, un.head * vn.head,
                    add(scale(un.head, Series<C>(vn.next)), mul(uq, v)).cell()};
    });
}

/// w0 :* (uq - w0*>vq)/v with w0 = u0/v0.
template <class C>
Series<C> div(const Series<C>& u, const Series<C>& v) {
    using Node = typename Series<C>::Node;
    return Series<C>::from_producer("div", [u, v]() -> Node {
        const Node& vn = v.node();
        if (vn.end || is_zero(vn.head)) {
            throw ArithmeticError("series division: divisor has a zero leading coefficient");
        }
        const Node& un = u.node();
        if (un.end) return un;
        C w0 = un.head / vn.head;
        auto rest = div(sub(Series<C>(un.next), scale(w0, Series<C>(vn.next))), v);
        return Node{false, std::move(w0), rest.cell()};
    });
}

template <class C>
Series<C> operator+(const Series<C>& u, const Series<C>& v) {
    return add(u, v);
}
template <class C>
Series<C> operator-(const Series<C>& u, const Series<C>& v) {
    return sub(u, v);
}
template <class C>
Series<C> operator-(const Series<C>& u) {
    return neg(u);
}
template <class C>
Series<C> operator*(const Series<C>& u, const Series<C>& v) {
    return mul(u, v);
}
template <class C>
Series<C> operator/(const Series<C>& u, const Series<C>& v) {
    return div(u, v);
}

/// Coefficientwise map. Assumes f(0) = 0: ZeroTail maps to ZeroTail.
template <class C, class F>
auto smap(F f, const Series<C>& u) -> Series<std::decay_t<std::invoke_result_t<F&, const C&>>> {
    using D = std::decay_t<std::invoke_result_t<F&, const C&>>;
    using Node = typename Series<D>::Node;
    return Series<D>::from_producer("map", [f = std::move(f), u]() mutable -> Node {
        const auto& un = u.node();
        if (un.end) return Series<D>::end_node();
        D value = f(un.head);
        return Node{false, std::move(value), smap(f, Series<C>(un.next)).cell()};
    });
}

// ---------------------------------------------------------------------------
// Calculus

namespace detail {

template <class C>
Series<C> derivative_from(const Series<C>& uq, long long k) {
    using Node = typename Series<C>::Node;
    return Series<C>::from_producer("derivative", [uq, k]() -> Node {
        const Node& n = uq.node();
        if (n.end) return n;
        return Node{false, from_int<C>(k) * n.head, derivative_from(Series<C>(n.next), k + 1).cell()};
    });
}

template <class C>
Series<C> integral_from(const Series<C>& u, long long k) {
    using Node = typename Series<C>::Node;
    return Series<C>::from_producer("integral", [u, k]() -> Node {
        const Node& n = u.node();
        if (n.end) return n;
        return Node{false, n.head / from_int<C>(k), integral_from(Series<C>(n.next), k + 1).cell()};
    });
}

}  // namespace detail

/// Coefficient k of the result is (k+1)·u_{k+1}.
template <class C>
Series<C> derivative(const Series<C>& u) {
    using Node = typename Series<C>::Node;
    return Series<C>::from_producer("derivative", [u]() -> Node {
        const Node& un = u.node();
        if (un.end) return un;
        return detail::derivative_from(Series<C>(un.next), 1).node();
    });
}

/// c :* (u_k / (k+1)). The head is available without forcing u, which is what
/// makes integral equations such as w = integral(c, f(w)) productive.
template <class C>
Series<C> integral(C c, const Series<C>& u) {
    return Series<C>::cons(std::move(c), detail::integral_from(u, 1));
}

// ---------------------------------------------------------------------------
// Elementary functions, each defined by an integral equation.

/// w = ∫ w·u' with w0 = exp(u0).
template <class C>
Series<C> exp(const Series<C>& u) {
    using Node = typename Series<C>::Node;
    return Series<C>::from_producer("exp", [u]() -> Node {
        Series<C> w = Series<C>::declare("exp");
        w.define(integral(elementary<C>::exp(u.head()), mul(derivative(u), w)));
        return w.node();
    });
}

/// ∫ u'/u with head log(u0).
template <class C>
Series<C> log(const Series<C>& u) {
    using Node = typename Series<C>::Node;
    return Series<C>::from_producer("log", [u]() -> Node {
        return integral(elementary<C>::log(u.head()), div(derivative(u), u)).node();
    });
}

/// w = sqrt(u0) + ∫ u'/(2w).
template <class C>
Series<C> sqrt(const Series<C>& u) {
    using Node = typename Series<C>::Node;
    return Series<C>::from_producer("sqrt", [u]() -> Node {
        C u0 = u.head();
        if (is_zero(u0)) throw DomainError("series sqrt: singular head (u0 = 0)");
        Series<C> w = Series<C>::declare("sqrt");
        w.define(integral(elementary<C>::sqrt(u0), div(derivative(u), scale(from_int<C>(2), w))));
        return w.node();
    });
}

/// w = u0^a + ∫ a·u'·w/u.
template <class C>
Series<C> pow(const Series<C>& u, const C& a) {
    using Node = typename Series<C>::Node;
    return Series<C>::from_producer("pow", [u, a]() -> Node {
        C u0 = u.head();
        if (is_zero(u0)) throw DomainError("series pow: singular head (u0 = 0)");
        Series<C> w = Series<C>::declare("pow");
        w.define(integral(elementary<C>::pow(u0, a), scale(a, div(mul(derivative(u), w), u))));
        return w.node();
    });
}

/// The coupled pair s = sin(u0) + ∫ c·u', c = cos(u0) − ∫ s·u'.
template <class C>
std::pair<Series<C>, Series<C>> sin_cos(const Series<C>& u) {
    auto build = [u]() {
        C u0 = u.head();
        Series<C> du = derivative(u);
        Series<C> s = Series<C>::declare("sin");
        Series<C> c = Series<C>::declare("cos");
        s.define(integral(elementary<C>::sin(u0), mul(c, du)));
        c.define(integral(elementary<C>::cos(u0), neg(mul(s, du))));
        return std::pair{s, c};
    };
    return {Series<C>::lazy([build] { return build().first; }, "sin"),
            Series<C>::lazy([build] { return build().second; }, "cos")};
}

template <class C>
Series<C> sin(const Series<C>& u) {
    return sin_cos(u).first;
}

template <class C>
Series<C> cos(const Series<C>& u) {
    return sin_cos(u).second;
}

// ---------------------------------------------------------------------------
// Composition and reversion

namespace detail {

// u0 :* vbar·(u1 + vbar·(u2 + ...)), the infinite Horner scheme.
template <class C>
Series<C> horner(const Series<C>& u, const Series<C>& vbar) {
    using Node = typename Series<C>::Node;
    return Series<C>::from_producer("compose", [u, vbar]() -> Node {
        const Node& un = u.node();
        if (un.end) return un;
        return Node{false, un.head, mul(vbar, horner(Series<C>(un.next), vbar)).cell()};
    });
}

}  // namespace detail

/// u(v(x)); requires v0 = 0 (checked when the first coefficient is forced).
template <class C>
Series<C> compose(const Series<C>& u, const Series<C>& v) {
    using Node = typename Series<C>::Node;
    return Series<C>::from_producer("compose", [u, v]() -> Node {
        if (!is_zero(v.head())) throw DomainError("compose: inner series must have a zero constant term");
        return detail::horner(u, v.tail()).node();
    });
}

/// Functional inverse t of v = x + v2 x^2 + ...: compose(v, t) = x.
/// With t = x·p: p = 1 − p²·(v2 + v3 t + ...)·x.
template <class C>
Series<C> revert(const Series<C>& v) {
    using Node = typename Series<C>::Node;
    return Series<C>::from_producer("revert", [v]() -> Node {
        if (!is_zero(v.head()) || v.coeff(1) != from_int<C>(1)) {
            throw DomainError("revert: series must have the form x + v2 x^2 + ...");
        }
        Series<C> vb = v.tail().tail();
        Series<C> p = Series<C>::declare("revert");
        Series<C> t = Series<C>::cons(from_int<C>(0), p);
        p.define(Series<C>::cons(from_int<C>(1), neg(mul(mul(p, p), compose(vb, t)))));
        return t.node();
    });
}

/// x^m.
template <class C>
Series<C> monomial(std::size_t m) {
    std::vector<C> coeffs(m + 1, from_int<C>(0));
    coeffs[m] = from_int<C>(1);
    return Series<C>::from(std::move(coeffs));
}

/// Swap the two variables of a double series: result (i, j) = input (j, i).
template <class C>
Series<Series<C>> transpose(const Series<Series<C>>& m) {
    using Outer = Series<Series<C>>;
    using Node = typename Outer::Node;
    return Outer::from_producer("transpose", [m]() -> Node {
        const Node& mn = m.node();
        if (mn.end) return mn;
        auto row = smap([](const Series<C>& s) { return s.head(); }, m);
        auto rest = smap([](const Series<C>& s) { return s.tail(); }, m);
        return Node{false, row, transpose(rest).cell()};
    });
}

}  // namespace corec
