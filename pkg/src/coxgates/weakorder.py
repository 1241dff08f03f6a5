"""Right weak order: prefixes, suffixes, bounded joins, canonical join data.

The module keeps one lazily grown level-by-level enumeration of the group
per system (the "universe"). Elements are identified by their inversion
sets, children extend the stored matrix columns by one reflection, and the
first word reaching an element in the breadth-first, generator-ordered
sweep is automatically its ShortLex normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import Element
from .inversions import right_descent_roots, short_inversions


def _child_cols(sys, cols, s):
    """Columns of x*s from the columns of x: one reflection of the basis."""
    out = []
    for t in range(sys.rank):
        if t == s:
            out.append(-cols[s])
            continue
        g = sys.gram[t][s]
        if g.is_zero():
            out.append(cols[t])
        else:
            c = g + g
            out.append(sys.intern_root([a - c * b for a, b in zip(cols[t].coeffs, cols[s].coeffs)]))
    return tuple(out)


class WeakOrderUniverse:
    """Levelized enumeration of W deduplicated by inversion set."""

    def __init__(self, system):
        self.system = system
        self.levels = [[((), frozenset())]]
        self._seen = {frozenset()}
        self._frontier = [((), frozenset(), tuple(system.simple_roots))]
        self._exhausted = False

    def _grow(self):
        if self._exhausted:
            self.levels.append([])
            return
        new_frontier = []
        entries = []
        for word, inv, cols in self._frontier:
            for s in range(self.system.rank):
                col = cols[s]
                if col.is_positive():
                    newinv = inv | {col.index}
                    if newinv not in self._seen:
                        self._seen.add(newinv)
                        child = word + (s,)
                        entries.append((child, newinv))
                        new_frontier.append((child, newinv, _child_cols(self.system, cols, s)))
        self._frontier = new_frontier
        self.levels.append(entries)
        if not new_frontier:
            self._exhausted = True

    def level(self, n):
        while len(self.levels) <= n:
            self._grow()
        return self.levels[n]

    def levels_up_to(self, n):
        return [self.level(i) for i in range(n + 1)]

    def elements_up_to(self, n):
        out = []
        for level in self.levels_up_to(n):
            for word, _ in level:
                out.append(Element(self.system, word, _trusted=True))
        return out


def universe(system):
    return system.cached("universe", lambda: WeakOrderUniverse(system))


# -- prefix/suffix ----------------------------------------------------------


def is_prefix(x, y):
    """x is a prefix of y iff the lengths add along x then x^{-1}y."""
    return y.length == x.length + (x.inverse() * y).length


def is_suffix(x, y):
    """x is a suffix of y iff the lengths add along yx^{-1} then x."""
    return y.length == (y * x.inverse()).length + x.length


def weak_le(x, y):
    """Prefix order via inversion-set containment (equivalent to is_prefix)."""
    return x.inversion_ids() <= y.inversion_ids()


def prefixes(x):
    """All prefixes of x (the weak-order interval from e to x)."""
    sys = x.system
    out = set()
    stack = [x]
    while stack:
        y = stack.pop()
        if y in out:
            continue
        out.add(y)
        for s in y.descents_right():
            stack.append(y * sys.generator(s))
    return out


def suffixes(x):
    """All suffixes of x: closure under removing a left descent."""
    sys = x.system
    out = set()
    stack = [x]
    while stack:
        y = stack.pop()
        if y in out:
            continue
        out.add(y)
        seq = y.rootseq()
        pos = {r.index: i for i, r in enumerate(seq)}
        for s in y.descents_left():
            i = pos[sys._simple_ids[s]]
            stack.append(sys.normalize(y.word[:i] + y.word[i + 1 :]))
    return out


# -- joins ------------------------------------------------------------------


@dataclass(frozen=True)
class JoinResult:
    value: Optional[Element]
    status: str  # "found" or "no-upper-bound-within-cap"

    @property
    def found(self):
        return self.status == "found"


def join(elements, cap=None):
    """Least upper bound of the set within the length cap.

    Scans the universe level by level, collects every upper bound up to the
    cap, returns the minimum-length one and asserts it sits below all the
    others (minimal upper bounds in weak order are unique). An empty result
    is reported via status, never silently.
    """
    elements = list(elements)
    if not elements:
        raise ValueError("join of an empty set is not defined")
    sys = elements[0].system
    if any(e.system is not sys for e in elements):
        raise ValueError("join requires elements of one system")
    maxlen = max(e.length for e in elements)
    if cap is None:
        cap = 2 * maxlen + 4
    if cap < maxlen:
        raise ValueError("join cap must be at least the maximum input length")
    target = frozenset().union(*(e.inversion_ids() for e in elements))
    uni = universe(sys)
    bounds = []
    for n in range(cap + 1):
        for word, inv in uni.level(n):
            if target <= inv:
                bounds.append((word, inv))
    if not bounds:
        return JoinResult(None, "no-upper-bound-within-cap")
    best_word, best_inv = bounds[0]
    for word, inv in bounds[1:]:
        if not best_inv <= inv:
            raise AssertionError("minimal upper bound is not below another upper bound")
    return JoinResult(Element(sys, best_word, _trusted=True), "found")


def join_in_pool(elements, pool):
    """Join against a sorted candidate pool known to contain it when bounded.

    pool entries are (length, inversion-id frozenset, Element) sorted by
    length. Returns None when no pool element bounds the inputs.
    """
    target = frozenset().union(*(e.inversion_ids() for e in elements))
    best = None
    for length, inv, elem in pool:
        if target <= inv:
            if best is None:
                best = (length, inv, elem)
            else:
                if length == best[0] and inv != best[1]:
                    raise AssertionError("two distinct minimal upper bounds in pool")
                if not best[1] <= inv:
                    raise AssertionError("pool upper bound does not dominate the minimal one")
    return None if best is None else best[2]


# -- minimal prefixes and canonical join representations ---------------------


def min_prefix_containing(w, beta):
    """The unique minimal-length prefix z of w with beta in Phi(z).

    Breadth-first search of the full prefix poset of w (the minimal prefix
    need not lie on the canonical word). Asserts uniqueness at the minimal
    length and that the final root of the result is exactly beta.
    """
    sys = w.system
    phi = w.inversion_ids()
    if beta.index not in phi:
        raise ValueError("the root is not an inversion of the element")
    target = beta.index
    frontier = [((), frozenset(), tuple(sys.simple_roots))]
    seen = {frozenset()}
    while frontier:
        hits = [node for node in frontier if target in node[1]]
        if hits:
            if len(hits) != 1:
                raise AssertionError("minimal prefix containing the root is not unique")
            word = hits[0][0]
            z = Element(sys, word, _trusted=True)
            if right_descent_roots(z) != {beta}:
                raise AssertionError("minimal prefix has an unexpected final-root set")
            return z
        new = []
        for word, inv, cols in frontier:
            for s in range(sys.rank):
                col = cols[s]
                if col.index in phi and col.is_positive():
                    newinv = inv | {col.index}
                    if newinv not in seen:
                        seen.add(newinv)
                        new.append((word + (s,), newinv, _child_cols(sys, cols, s)))
        frontier = new
    raise AssertionError("prefix search exhausted without finding the root")


def canonical_join_representation(w):
    """Canonical joinands {j_beta : beta final root of w}; their join is w."""
    members = frozenset(min_prefix_containing(w, beta) for beta in right_descent_roots(w))
    for j in members:
        if len(right_descent_roots(j)) != 1:
            raise AssertionError("canonical joinand is not join-irreducible")
    if members:
        result = join(members, cap=w.length)
        if not result.found or result.value != w:
            raise AssertionError("canonical join representation does not join back to the element")
    return members


def phi1_decomposition(w):
    """Map each short inversion to its unique minimal prefix; joins back to w."""
    out = {}
    for beta in short_inversions(w):
        out[beta] = min_prefix_containing(w, beta)
    if len(set(out.values())) != len(out):
        raise AssertionError("minimal prefixes of short inversions are not distinct")
    if out:
        result = join(list(out.values()), cap=w.length)
        if not result.found or result.value != w:
            raise AssertionError("short-inversion decomposition does not join back")
    return out


# -- geodesics and convexity -------------------------------------------------


def geodesic_elements(x, y, cap=None):
    """All elements on geodesics between x and y in the Cayley graph."""
    d = x.inverse() * y
    if cap is not None and d.length > cap:
        raise ValueError("geodesic distance exceeds the cap")
    return {x * v for v in prefixes(d)}


def is_convex(group_subset):
    """True iff the set contains every geodesic between each of its pairs."""
    elems = list(group_subset)
    pool = set(elems)
    for i, x in enumerate(elems):
        for y in elems[i + 1 :]:
            if not geodesic_elements(x, y) <= pool:
                return False
    return True
