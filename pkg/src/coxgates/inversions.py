"""Inversion-set combinatorics: short inversions, dominance, elementary roots.

Left inversion sets are used throughout; right-sided notions go through
inverses. Short inversions have two independent implementations (the
length-condition filter and the left-extension recurrence), dominance is
decided inside the rank-2 root subsystem spanned by the pair, and the
elementary (small) roots are the closure of the simple roots under
reflections with pairing strictly between -1 and 1.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .core import Element


@dataclass(frozen=True)
class InversionData:
    """Ordered inversion roots of an element with short/descent markings."""

    owner: Element
    roots: tuple
    short: frozenset
    right_descent_roots: frozenset
    left_descent_roots: frozenset


def inversion_set(w):
    """Left inversion set in word order: entry i is s1..s_{i-1} alpha_{s_i}."""
    return list(w.rootseq())


def inversion_data(w):
    roots = tuple(w.rootseq())
    short = short_inversions(w)
    right = right_descent_roots(w)
    left = left_descent_roots(w)
    assert right <= short <= set(roots)
    assert left <= set(roots)
    return InversionData(w, roots, short, right, left)


def contains_inversion(w, beta):
    """Membership test beta in Phi(w), i.e. w^{-1} beta < 0."""
    image = w.system.act_word(tuple(reversed(w.word)), beta)
    return not image.is_positive()


def _deleted_word(w, i):
    """Word of s_beta w for beta the i-th root-sequence entry of w."""
    return w.word[:i] + w.word[i + 1 :]


def short_inversions(w, method="evolution"):
    """Inversions whose reflection shortens w by exactly one."""
    if method == "direct":
        sys = w.system
        out = set()
        for i, beta in enumerate(w.rootseq()):
            if sys.normalize(_deleted_word(w, i)).length == w.length - 1:
                out.add(beta)
        return frozenset(out)
    if method == "evolution":
        return _short_inversions_evolution(w)
    raise ValueError(f"unknown method {method!r}")


def _short_inversions_evolution(w):
    """Recurrence over left extension: for ls > l,
    Phi^1(sv) = {alpha_s} | s{beta in Phi^1(v) : s_beta v < s s_beta v}."""
    sys = w.system

    def compute(word):
        if not word:
            return frozenset()
        key = ("phi1", word)
        cached = sys._cache.get(key)
        if cached is not None:
            return cached
        s = word[0]
        rest = word[1:]
        prev = compute(rest)
        kept = [sys.simple_roots[s]]
        if prev:
            v = Element(sys, rest, _trusted=True)
            seq = v.rootseq()
            pos = {r.index: i for i, r in enumerate(seq)}
            alpha_s = sys.simple_roots[s]
            for beta in prev:
                deleted = _deleted_word(v, pos[beta.index])
                image = sys.act_word(tuple(reversed(deleted)), alpha_s)
                if image.is_positive():
                    kept.append(sys.reflect(s, beta))
        result = frozenset(kept)
        sys._cache[key] = result
        return result

    return compute(w.word)


def right_descent_roots(w):
    """Final roots {-w(alpha_s) : s in D_R(w)}."""
    sys = w.system
    return frozenset(-w.act(sys.simple_roots[s]) for s in w.descents_right())


def left_descent_roots(w):
    """Initial roots: the simple roots contained in Phi(w)."""
    sys = w.system
    ids = w.inversion_ids()
    return frozenset(sys.simple_roots[s] for s in w.descents_left() if sys._simple_ids[s] in ids)


def support(beta):
    """Generators whose simple-root coordinate in beta is nonzero."""
    return frozenset(i for i, c in enumerate(beta.coeffs) if not c.is_zero())


def depth(beta):
    """Minimal length of an element sending beta negative.

    Any generator with <alpha_s, beta> > 0 lowers the depth by exactly one,
    so a greedy descent is exact.
    """
    if not beta.is_positive():
        raise ValueError("depth is defined for positive roots")
    sys = beta.system
    cache = sys._cache.setdefault("depth", {})
    out = cache.get(beta.index)
    if out is not None:
        return out
    trail = []
    current = beta
    while True:
        known = cache.get(current.index)
        if known is not None:
            break
        if current.index in sys._simple_ids:
            cache[current.index] = known = 1
            break
        for s in range(sys.rank):
            if sys.pair_with_simple(current, s).sign() > 0:
                trail.append(current)
                current = sys.reflect(s, current)
                break
        else:
            raise AssertionError("positive non-simple root with no depth descent")
    for r in reversed(trail):
        known += 1
        cache[r.index] = known
    return cache[beta.index]


# -- dominance -------------------------------------------------------------


def _rank2_orbit(system, alpha, beta, radius):
    """Positive roots of the reflection subgroup <s_alpha, s_beta> within a
    reflection-word ball of the given radius around {alpha, beta}."""
    seen = {alpha, beta}
    frontier = [alpha, beta]
    for _ in range(radius):
        new = []
        for gamma in frontier:
            for mirror in (alpha, beta):
                image = system.reflect_in_root(mirror, gamma)
                if not image.is_positive():
                    image = -image
                if image not in seen:
                    seen.add(image)
                    new.append(image)
        if not new:
            break
        frontier = new
    return seen


def _chain(system, start, other, limit):
    """Depth-increasing chain of the infinite dihedral subsystem from one
    simple root: start, s_start(other), then x_{k+1} = |s_{x_k}(x_{k-1})|."""
    chain = [start, system.reflect_in_root(start, other)]
    while len(chain) < limit:
        image = system.reflect_in_root(chain[-1], chain[-2])
        if not image.is_positive():
            image = -image
        chain.append(image)
    return chain


def _rank2_simples(system, alpha, beta):
    """Canonical simple pair of the rank-2 subsystem containing alpha, beta.

    A root is simple in the subsystem when its reflection keeps every other
    positive subsystem root positive; the candidates are certified by
    regenerating the orbit ball from the candidate pair's two chains.
    """
    radius = 3
    while radius <= 48:
        ball = _rank2_orbit(system, alpha, beta, radius)
        simples = [
            g
            for g in ball
            if all(system.reflect_in_root(g, d).is_positive() for d in ball if d != g)
        ]
        if len(simples) == 2:
            d1, d2 = simples
            if (system.form(d1, d2) + system.field.one).sign() <= 0:
                limit = 4 * radius + 8
                c1 = _chain(system, d1, d2, limit)
                c2 = _chain(system, d2, d1, limit)
                covered = set(c1) | set(c2)
                if ball <= covered and alpha in covered and beta in covered:
                    return d1, d2, c1, c2
        radius *= 2
    raise AssertionError("rank-2 subsystem basis search did not converge")


def dominates(beta, alpha):
    """True iff beta dominates alpha (every element sending beta negative
    sends alpha negative) and alpha != beta."""
    if not (alpha.is_positive() and beta.is_positive()):
        raise ValueError("dominance is defined for positive roots")
    if alpha == beta:
        return False
    sys = beta.system
    c = sys.form(alpha, beta)
    if (c - sys.field.one).sign() < 0:
        return False
    _, _, chain1, chain2 = _rank2_simples(sys, alpha, beta)
    for chain in (chain1, chain2):
        if alpha in chain and beta in chain:
            return chain.index(beta) > chain.index(alpha)
    return False


def dominates_bruteforce(beta, alpha, length_cap=8):
    """Definitional oracle: scan all w up to the length cap."""
    from .weakorder import universe  # local import to avoid a cycle

    sys = beta.system
    uni = universe(sys)
    for level in uni.levels_up_to(length_cap):
        for word, _ in level:
            rev = tuple(reversed(word))
            if not sys.act_word(rev, beta).is_positive():
                if sys.act_word(rev, alpha).is_positive():
                    return False
    return True


# -- elementary roots ------------------------------------------------------


def _thread_count():
    raw = os.environ.get("COXGATES_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def elementary_roots(system):
    """The finite set of dominance-minimal positive roots.

    Closure of the simple roots under beta -> s(beta) whenever beta is not
    alpha_s and -1 < <alpha_s, beta> < 1; reflections with pairing <= -1
    produce roots dominating alpha_s, reflections with pairing >= 1 lower
    depth, so the closure is exactly the elementary roots.
    """

    def compute():
        one = system.field.one

        def expand(beta):
            out = []
            for s in range(system.rank):
                if beta.index == system._simple_ids[s]:
                    continue
                c = system.pair_with_simple(beta, s)
                if (c + one).sign() > 0 and (c - one).sign() < 0:
                    out.append(system.reflect(s, beta))
            return out

        found = set(system.simple_roots)
        frontier = list(system.simple_roots)
        threads = _thread_count()
        pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
        try:
            while frontier:
                if pool is None:
                    batches = map(expand, frontier)
                else:
                    batches = pool.map(expand, frontier)
                new = []
                for batch in batches:
                    for gamma in batch:
                        if gamma not in found:
                            found.add(gamma)
                            new.append(gamma)
                frontier = new
        finally:
            if pool is not None:
                pool.shutdown()
        return frozenset(found)

    return system.cached("elementary_roots", compute)


def elementary_ids(system):
    return system.cached("elementary_ids", lambda: frozenset(r.index for r in elementary_roots(system)))


# -- exact cone membership -------------------------------------------------


def cone_membership(beta, roots):
    """Exact feasibility of beta as a nonnegative combination of the roots.

    Gaussian elimination parametrizes the solutions of the linear system;
    Fourier-Motzkin elimination on the free parameters decides whether the
    nonnegativity constraints can be met. All arithmetic is in the field.
    """
    roots = list(roots)
    sys = beta.system
    field = sys.field
    if not roots:
        return all(c.is_zero() for c in beta.coeffs)
    ncols = len(roots)
    rows = [[roots[j].coeffs[i] for j in range(ncols)] + [beta.coeffs[i]] for i in range(sys.rank)]

    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if not rows[i][col].is_zero()), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = field.inv(rows[r][col])
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    for i in range(r, len(rows)):
        if not rows[i][ncols].is_zero():
            return False  # inconsistent system

    free = [c for c in range(ncols) if c not in pivots]
    # lambda_pivot = rhs - sum over free columns; lambda_free = t_j
    ineqs = []
    for idx, col in enumerate(pivots):
        coeffs = [-rows[idx][fc] for fc in free]
        ineqs.append((coeffs, rows[idx][ncols]))
    for j in range(len(free)):
        unit = [field.one if k == j else field.zero for k in range(len(free))]
        ineqs.append((unit, field.zero))
    return _fourier_motzkin_feasible(field, ineqs, len(free))


def _fourier_motzkin_feasible(field, ineqs, nvars):
    """Feasibility of a system of linear inequalities sum c_j t_j + d >= 0."""
    for var in range(nvars):
        pos, neg, rest = [], [], []
        for coeffs, const in ineqs:
            s = coeffs[var].sign()
            if s > 0:
                pos.append((coeffs, const))
            elif s < 0:
                neg.append((coeffs, const))
            else:
                rest.append((coeffs, const))
        new = rest
        for pc, pd in pos:
            for nc, nd in neg:
                scale_p = -nc[var]
                scale_n = pc[var]
                coeffs = [scale_p * a + scale_n * b for a, b in zip(pc, nc)]
                new.append((coeffs, scale_p * pd + scale_n * nd))
        ineqs = new
    return all(const.sign() >= 0 for _, const in ineqs)


def cone_membership_ids(system, beta, root_ids):
    return cone_membership(beta, [system.root_by_id(i) for i in root_ids])
