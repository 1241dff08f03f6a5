"""Low elements, tight gates, witnesses, and Garside shadows.

The central computation is the concurrent discovery of tight gates and
super-elementary roots: a breadth-first sweep that grows the pool of tight
low elements (single final root, lying among the elementary roots) by left
extension and pairs two pool members whenever their inversion sets meet in
exactly the shared final root. The pool doubles as a complete witness
index: the minimal witness of a root is always a tight gate, so scanning
pool members with the given final root by length either finds it or
certifies that none exists.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Optional

from .core import Element, Root
from .inversions import elementary_ids, right_descent_roots, short_inversions
from .weakorder import join, join_in_pool, prefixes, suffixes, weak_le


@dataclass(frozen=True)
class ShadowSet:
    """A distinguished subset of the group (low elements, gates, ...)."""

    elements: frozenset
    kind: str

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __iter__(self):
        return iter(self.elements)

    def sorted_elements(self):
        return sorted(self.elements)

    def to_json(self):
        return {
            "kind": self.kind,
            "elements": [
                {
                    "word": str(x),
                    "final_roots": [r.to_json() for r in sorted(right_descent_roots(x), key=lambda r: r.key())],
                }
                for x in self.sorted_elements()
            ],
        }


def is_suffix_closed(shadow):
    pool = set(shadow)
    return all(suffixes(x) <= pool for x in shadow)


# -- low elements ------------------------------------------------------------


def _low_bfs(system):
    """Left-extension sweep keeping elements whose short inversions are all
    elementary. Nodes carry a reduced word, its root sequence, and the
    short-inversion set maintained by the extension recurrence."""
    e_ids = elementary_ids(system)
    simple = system.simple_roots
    seen = {frozenset()}
    nodes = [((), (), ())]  # (word, rootseq, phi1)
    frontier = list(nodes)
    while frontier:
        new = []
        for word, rootseq, phi1 in frontier:
            inv = frozenset(r.index for r in rootseq)
            pos = {r.index: i for i, r in enumerate(rootseq)}
            for s in range(system.rank):
                if system._simple_ids[s] in inv:
                    continue  # s is a left descent
                alpha = simple[s]
                kept = [alpha]
                low = True
                for beta in phi1:
                    deleted = word[: pos[beta.index]] + word[pos[beta.index] + 1 :]
                    image = system.act_word(tuple(reversed(deleted)), alpha)
                    if image.is_positive():
                        gamma = system.reflect(s, beta)
                        if gamma.index not in e_ids:
                            low = False
                            break
                        kept.append(gamma)
                if not low:
                    continue
                new_seq = (alpha,) + tuple(system.reflect(s, r) for r in rootseq)
                new_inv = frozenset(r.index for r in new_seq)
                if new_inv in seen:
                    continue
                seen.add(new_inv)
                child = ((s,) + word, new_seq, tuple(kept))
                nodes.append(child)
                new.append(child)
        frontier = new
    return nodes


def low_elements(system):
    """The low elements: short inversions contained in the elementary roots."""

    def compute():
        elems = frozenset(system.normalize(word) for word, _, _ in _low_bfs(system))
        return ShadowSet(elems, "low")

    return system.cached("low_elements", compute)


def low_pool_entries(system):
    """Low elements as (length, inversion ids, element), sorted by length."""

    def compute():
        entries = [(x.length, x.inversion_ids(), x) for x in low_elements(system)]
        entries.sort(key=lambda t: (t[0], t[2].word))
        return entries

    return system.cached("low_pool_entries", compute)


def tight(shadow):
    """Members with exactly one final root."""
    kind = {"low": "tight-low", "gates": "tight-gates"}.get(shadow.kind, "custom")
    return ShadowSet(frozenset(x for x in shadow if len(x.descents_right()) == 1), kind)


# -- tight gates and super-elementary roots ----------------------------------


@dataclass(frozen=True)
class TightGateData:
    tight_gates: ShadowSet
    super_elementary: frozenset
    pool_by_root: dict  # final-root id -> elements sorted by length
    pool: frozenset


def _algorithm1_data(system):
    def compute():
        e_ids = elementary_ids(system)
        simples = system.simple_elements()
        pool_by_root = defaultdict(list)
        pool = set()
        super_roots = set(system.simple_roots)
        gates = set()
        level = []
        for s, x in enumerate(simples):
            pool.add(x)
            pool_by_root[system._simple_ids[s]].append(x)
            level.append(x)
        seen = set(pool)
        while level:
            next_level = []
            for x in level:
                for s in range(system.rank):
                    if s in x.descents_left():
                        continue
                    y = system.normalize((s,) + x.word)
                    if y in seen:
                        continue
                    seen.add(y)
                    descents = y.descents_right()
                    if len(descents) != 1:
                        continue
                    (t,) = descents
                    beta = -y.act(system.simple_roots[t])
                    if beta.index not in e_ids:
                        continue
                    pool.add(y)
                    next_level.append(y)
                    y_ids = y.inversion_ids()
                    for z in pool_by_root[beta.index]:
                        if z != y and (z.inversion_ids() & y_ids) == {beta.index}:
                            super_roots.add(beta)
                            gates.add(y)
                            gates.add(z)
                    pool_by_root[beta.index].append(y)
            level = next_level
        for x in simples:
            gates.add(x)  # each generator is its own witness
        by_root = {k: sorted(v, key=lambda e: (e.length, e.word)) for k, v in pool_by_root.items()}
        return TightGateData(
            ShadowSet(frozenset(gates), "tight-gates"),
            frozenset(super_roots),
            by_root,
            frozenset(pool),
        )

    return system.cached("algorithm1", compute)


def algorithm1(system):
    """Tight gates and super-elementary roots by the paired-extension sweep."""
    data = _algorithm1_data(system)
    return data.tight_gates, data.super_elementary


def super_elementary_roots(system):
    return _algorithm1_data(system).super_elementary


def tight_low_elements(system):
    """The ambient pool of the sweep; equals the tight low elements."""
    return ShadowSet(_algorithm1_data(system).pool, "tight-low")


# -- witnesses ---------------------------------------------------------------


@dataclass(frozen=True)
class WitnessRecord:
    subject: Element
    root: Root
    witness: Optional[Element]
    search_cap: int


def minimal_witness(x, beta, cap=None):
    """The unique minimal-length y with Phi(x) & Phi(y) = {beta}, or None.

    The minimal witness, when it exists, is a tight gate carrying beta as
    its final root, hence a member of the tight-low pool; exhausting the
    pool certifies nonexistence. The minimum-length hit is checked unique.
    """
    sys = x.system
    if beta.index not in x.inversion_ids():
        raise ValueError("the root is not an inversion of the element")
    data = _algorithm1_data(sys)
    candidates = data.pool_by_root.get(beta.index, [])
    x_ids = x.inversion_ids()
    hits = []
    best_len = None
    for y in candidates:
        if best_len is not None and y.length > best_len:
            break
        if (y.inversion_ids() & x_ids) == {beta.index}:
            hits.append(y)
            best_len = y.length
    if not hits:
        return None
    if len(hits) != 1:
        raise AssertionError("minimal witness is not unique")
    return hits[0]


def witness_record(x, beta, cap=None):
    w = minimal_witness(x, beta, cap)
    if cap is None:
        cap = max((e.length for e in tight_low_elements(x.system)), default=1) + 2
    return WitnessRecord(x, beta, w, cap)


def _witness_search(x, beta, cap):
    """Levels of the prefix-closed region Phi(y) & Phi(x) <= {beta}.

    Returns (levels, exhausted) where each level lists (word, has_beta)
    and exhausted is True when the whole region fits under the cap.
    """
    from .weakorder import _child_cols

    sys = x.system
    blocked = x.inversion_ids() - {beta.index}
    frontier = [((), frozenset(), tuple(sys.simple_roots))]
    seen = {frozenset()}
    levels = []
    for _ in range(cap):
        new = []
        for word, inv, cols in frontier:
            for s in range(sys.rank):
                col = cols[s]
                if col.is_positive() and col.index not in blocked:
                    newinv = inv | {col.index}
                    if newinv not in seen:
                        seen.add(newinv)
                        new.append((word + (s,), newinv, _child_cols(sys, cols, s)))
        levels.append([(word, beta.index in inv) for word, inv, _ in new])
        frontier = new
        if not frontier:
            return levels, True
    return levels, False


def witnesses_up_to(x, beta, cap):
    """All witnesses of beta with respect to x up to the length cap."""
    levels, _ = _witness_search(x, beta, cap)
    sys = x.system
    return [Element(sys, word, _trusted=True) for level in levels for word, hit in level if hit]


def minimal_witness_bfs(x, beta, cap):
    """Independent capped search for the minimal witness.

    Returns the minimal witness or None; None is only returned when the
    search region was exhausted below the cap, otherwise the truncation is
    reported by raising.
    """
    sys = x.system
    if beta.index not in x.inversion_ids():
        raise ValueError("the root is not an inversion of the element")
    levels, exhausted = _witness_search(x, beta, cap)
    for level in levels:
        hits = [word for word, hit in level if hit]
        if hits:
            if len(hits) != 1:
                raise AssertionError("minimal witness is not unique")
            return Element(sys, hits[0], _trusted=True)
    if not exhausted:
        raise RuntimeError("witness search cap exhausted without a certificate")
    return None


def boundary_roots(x):
    """Roots beta with some y satisfying Phi(x) & Phi(y) = {beta}.

    Such roots are short inversions of x and elementary, so the candidates
    are Phi^1(x) intersected with the elementary roots.
    """
    e_ids = elementary_ids(x.system)
    out = set()
    for beta in short_inversions(x):
        if beta.index in e_ids and minimal_witness(x, beta) is not None:
            out.add(beta)
    return frozenset(out)


def is_gate(x):
    """Every final root of x admits a witness."""
    return all(minimal_witness(x, beta) is not None for beta in right_descent_roots(x))


def is_ultra_low(x):
    """Every short inversion of x admits a witness."""
    e_ids = elementary_ids(x.system)
    for beta in short_inversions(x):
        if beta.index not in e_ids or minimal_witness(x, beta) is None:
            return False
    return True


# -- Garside shadows ---------------------------------------------------------


def garside_projection(shadow, x):
    """The longest prefix of x inside the (suffix-closed) shadow."""
    members = set(shadow)
    if x.system.identity not in members:
        raise ValueError("a Garside shadow must contain the identity")
    best = [p for p in prefixes(x) if p in members]
    top = max(p.length for p in best)
    winners = [p for p in best if p.length == top]
    if len(winners) != 1:
        raise AssertionError("longest prefix in the shadow is not unique")
    return winners[0]


def smallest_garside_shadow(system, cap=None, pool=None):
    """Closure of the generators under suffixes and bounded joins.

    Joins are located inside a candidate pool that provably contains the
    closure; the default pool is the low elements, which form a Garside
    shadow containing the smallest one. Passing pool=False forces the
    generic capped join search instead (cap grows with the working set).
    """
    use_pool = pool is not False
    if use_pool and pool is None:
        pool = low_pool_entries(system)
    work = {system.identity}
    items = [system.identity]
    queue = []

    def add(x):
        for y in suffixes(x):
            if y not in work:
                work.add(y)
                for other in items:
                    queue.append((other, y))
                items.append(y)

    for s in system.simple_elements():
        add(s)
    while queue:
        x, y = queue.pop()
        if weak_le(x, y) or weak_le(y, x):
            continue
        if use_pool:
            j = join_in_pool([x, y], pool)
        else:
            current_max = max(e.length for e in work)
            limit = cap if cap is not None else 2 * current_max + 4
            res = join([x, y], cap=max(limit, x.length, y.length))
            j = res.value if res.found else None
        if j is not None:
            add(j)
    return ShadowSet(frozenset(work), "smallest-garside")
