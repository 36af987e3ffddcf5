#pragma once

// Memoized lazy cells and the infinite Stream built on them.
//
// A cell starts unevaluated, holding a producer. Forcing it runs the producer
// exactly once and stores the resulting node; the producer is then released.
// A node carries one element plus a link to the next cell, so a chain of cells
// is a lazily grown, shared, memoized sequence. Self-referential definitions
// are written with declare()/define(): the handle exists before its content,
// and may be captured by the expression that defines it.
//
// Forcing is single-threaded. A cell that is re-entered while its producer
// runs raises NonProductiveError instead of recursing forever.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "corec/errors.hpp"

namespace corec {

enum class CellState : unsigned char { unevaluated, in_progress, evaluated };

namespace stats {

namespace detail {
inline thread_local std::size_t forced_cells = 0;
}

/// Number of cells evaluated on the calling thread since start (or reset).
inline std::size_t cells_forced() noexcept { return detail::forced_cells; }
inline void reset_cells_forced() noexcept { detail::forced_cells = 0; }

}  // namespace stats

namespace detail {

inline constexpr std::size_t unindexed = static_cast<std::size_t>(-1);

// Node types must expose a `next` member of type std::shared_ptr<Cell<Node>>
// (null when the chain ends).
template <class Node>
struct Cell {
    using Ptr = std::shared_ptr<Cell>;

    CellState state = CellState::unevaluated;
    const char* label = "cell";
    std::size_t index = unindexed;
    std::function<Node()> producer;
    std::optional<Node> node;

    Cell() = default;
    Cell(const Cell&) = delete;
    Cell& operator=(const Cell&) = delete;

    // Long forced chains would otherwise be torn down recursively.
    ~Cell() {
        if (!node) return;
        Ptr next = std::move(node->next);
        while (next && next.use_count() == 1) {
            Ptr after = next->node ? std::move(next->node->next) : Ptr{};
            next = std::move(after);
        }
    }
};

template <class Node>
using CellPtr = std::shared_ptr<Cell<Node>>;

template <class Node>
CellPtr<Node> make_ready(Node node, const char* label = "cell") {
    auto cell = std::make_shared<Cell<Node>>();
    cell->label = label;
    cell->state = CellState::evaluated;
    cell->node.emplace(std::move(node));
    return cell;
}

template <class Node, class F>
CellPtr<Node> make_deferred(const char* label, F&& producer) {
    auto cell = std::make_shared<Cell<Node>>();
    cell->label = label;
    cell->producer = std::forward<F>(producer);
    return cell;
}

template <class Node>
const Node& force(const CellPtr<Node>& ptr) {
    Cell<Node>& cell = *ptr;
    switch (cell.state) {
        case CellState::evaluated:
            return *cell.node;
        case CellState::in_progress:
            throw NonProductiveError(cell.label, cell.index == unindexed ? 0 : cell.index);
        case CellState::unevaluated:
            break;
    }
    if (!cell.producer) {
        throw std::logic_error(std::string("forward-declared ") + cell.label +
                               " forced before being defined");
    }
    // The producer may drop the last outside reference to this cell.
    CellPtr<Node> keep = ptr;
    cell.state = CellState::in_progress;
    try {
        cell.node.emplace(cell.producer());
    } catch (...) {
        cell.state = CellState::unevaluated;
        throw;
    }
    cell.state = CellState::evaluated;
    cell.producer = nullptr;
    ++stats::detail::forced_cells;
    const std::size_t here = cell.index == unindexed ? 0 : cell.index;
    if (cell.node->next && cell.node->next->index == unindexed) {
        cell.node->next->index = here + 1;
    }
    return *cell.node;
}

template <class Node>
CellPtr<Node> declare(const char* label) {
    auto cell = std::make_shared<Cell<Node>>();
    cell->label = label;
    return cell;
}

template <class Node>
void define(const CellPtr<Node>& placeholder, CellPtr<Node> target) {
    if (placeholder->state != CellState::unevaluated || placeholder->producer) {
        throw std::logic_error(std::string(placeholder->label) + " defined twice");
    }
    placeholder->producer = [target = std::move(target)]() { return force(target); };
}

}  // namespace detail

/// Infinite, memoized, lazily produced sequence.
template <class T>
class Stream {
public:
    using value_type = T;

    struct Node {
        T head;
        detail::CellPtr<Node> next;
    };
    using CellPtr = detail::CellPtr<Node>;

    explicit Stream(CellPtr cell) : cell_(std::move(cell)) {}

    /// Stream whose first node is computed by `producer` (returning Node) on demand.
    template <class F>
    static Stream from_producer(const char* label, F&& producer) {
        return Stream(detail::make_deferred<Node>(label, std::forward<F>(producer)));
    }

    /// Deferred stream expression: `make` runs when the first element is needed.
    template <class F>
    static Stream lazy(F make, const char* label = "lazy") {
        return from_producer(label, [make = std::move(make)]() -> Node {
            Stream s = make();
            return detail::force(s.cell_);
        });
    }

    /// Handle with no content yet; complete it with define().
    static Stream declare(const char* label = "stream") {
        return Stream(detail::declare<Node>(label));
    }

    void define(const Stream& expr) const { detail::define(cell_, expr.cell_); }

    /// Knot-tying helper: returns s such that s = f(s).
    template <class F>
    static Stream fix(F f, const char* label = "fix") {
        Stream self = declare(label);
        self.define(f(self));
        return self;
    }

    const Node& node() const { return detail::force(cell_); }
    const T& head() const { return node().head; }
    Stream tail() const { return Stream(node().next); }

    /// Element k (0-based); forces cells 0..k.
    const T& at(std::size_t k) const {
        const CellPtr* cur = &cell_;
        for (std::size_t i = 0; i < k; ++i) cur = &detail::force(*cur).next;
        return detail::force(*cur).head;
    }

    CellState state() const noexcept { return cell_->state; }

    /// Number of leading cells already evaluated, without forcing anything.
    std::size_t evaluated_prefix() const noexcept {
        std::size_t n = 0;
        const detail::Cell<Node>* c = cell_.get();
        while (c && c->state == CellState::evaluated) {
            ++n;
            c = c->node->next.get();
        }
        return n;
    }

    const CellPtr& cell() const noexcept { return cell_; }

private:
    CellPtr cell_;
};

template <class T>
Stream<T> cons(T head, Stream<T> tail) {
    using Node = typename Stream<T>::Node;
    return Stream<T>(detail::make_ready(Node{std::move(head), tail.cell()}, "cons"));
}

/// cons with a deferred tail: `make_tail` runs once, when the tail is first forced.
template <class T, class F>
    requires std::is_invocable_r_v<Stream<T>, F&>
Stream<T> cons(T head, F make_tail) {
    using Node = typename Stream<T>::Node;
    return Stream<T>(detail::make_ready(
        Node{std::move(head), Stream<T>::lazy(std::move(make_tail), "cons.tail").cell()}, "cons"));
}

template <class T>
Stream<T> repeat(T value) {
    return Stream<T>::fix([value](const Stream<T>& self) { return cons(value, self); }, "repeat");
}

template <class T, class F>
auto smap(F f, const Stream<T>& s) -> Stream<std::decay_t<std::invoke_result_t<F&, const T&>>> {
    using U = std::decay_t<std::invoke_result_t<F&, const T&>>;
    using Node = typename Stream<U>::Node;
    return Stream<U>::from_producer("map", [f = std::move(f), s]() mutable -> Node {
        const auto& n = s.node();
        U value = f(n.head);
        return Node{std::move(value), smap(f, Stream<T>(n.next)).cell()};
    });
}

template <class T, class U, class F>
auto zip_with(F f, const Stream<T>& a, const Stream<U>& b)
    -> Stream<std::decay_t<std::invoke_result_t<F&, const T&, const U&>>> {
    using V = std::decay_t<std::invoke_result_t<F&, const T&, const U&>>;
    using Node = typename Stream<V>::Node;
    return Stream<V>::from_producer("zip", [f = std::move(f), a, b]() mutable -> Node {
        const auto& na = a.node();
        const auto& nb = b.node();
        V value = f(na.head, nb.head);
        return Node{std::move(value), zip_with(f, Stream<T>(na.next), Stream<U>(nb.next)).cell()};
    });
}

template <class T>
Stream<T> operator+(const Stream<T>& a, const Stream<T>& b) {
    return zip_with([](const T& x, const T& y) { return T(x + y); }, a, b);
}

template <class T>
Stream<T> operator-(const Stream<T>& a, const Stream<T>& b) {
    return zip_with([](const T& x, const T& y) { return T(x - y); }, a, b);
}

template <class T>
Stream<T> operator-(const Stream<T>& a) {
    return smap([](const T& x) { return T(-x); }, a);
}

/// Elementwise product.
template <class T>
Stream<T> operator*(const Stream<T>& a, const Stream<T>& b) {
    return zip_with([](const T& x, const T& y) { return T(x * y); }, a, b);
}

template <class T>
Stream<T> scale(T c, const Stream<T>& s) {
    return smap([c = std::move(c)](const T& x) { return T(c * x); }, s);
}

/// `m` copies of `fill`, then `s`.
template <class T>
Stream<T> delay(std::size_t m, const Stream<T>& s, T fill = T{}) {
    if (m == 0) return s;
    using Node = typename Stream<T>::Node;
    return Stream<T>::from_producer("delay", [m, s, fill]() -> Node {
        return Node{fill, delay(m - 1, s, fill).cell()};
    });
}

template <class T>
Stream<T> append_prefix(std::vector<T> prefix, const Stream<T>& s) {
    if (prefix.empty()) return s;
    using Node = typename Stream<T>::Node;
    auto shared = std::make_shared<const std::vector<T>>(std::move(prefix));
    struct Step {
        static Stream<T> from(std::shared_ptr<const std::vector<T>> p, std::size_t i,
                              const Stream<T>& rest) {
            if (i == p->size()) return rest;
            return Stream<T>::from_producer("prefix", [p, i, rest]() -> Node {
                return Node{(*p)[i], from(p, i + 1, rest).cell()};
            });
        }
    };
    return Step::from(std::move(shared), 0, s);
}

/// First n elements.
template <class T>
std::vector<T> take(std::size_t n, const Stream<T>& s) {
    std::vector<T> out;
    out.reserve(n);
    const typename Stream<T>::CellPtr* cur = &s.cell();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& node = detail::force(*cur);
        out.push_back(node.head);
        if (i + 1 < n) cur = &node.next;
    }
    return out;
}

/// Stream of step(state).first, threading step(state).second forward.
template <class State, class F>
auto unfold(State seed, F step)
    -> Stream<std::decay_t<decltype(std::declval<F&>()(std::declval<const State&>()).first)>> {
    using T = std::decay_t<decltype(step(seed).first)>;
    using Node = typename Stream<T>::Node;
    return Stream<T>::from_producer("unfold", [seed = std::move(seed), step]() -> Node {
        auto [value, next_state] = step(seed);
        return Node{std::move(value), unfold(std::move(next_state), step).cell()};
    });
}

}  // namespace corec
