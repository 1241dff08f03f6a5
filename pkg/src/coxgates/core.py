"""Coxeter systems, the reflection action on roots, and canonical elements.

Group elements are stored as ShortLex-least reduced words (generator order
is the declaration order), so equal elements have identical words. Word
reduction uses the exchange condition located through root sequences, and
canonicalization greedily extracts the least left descent. All root
arithmetic is exact over the group's shared real cyclotomic field; roots
are interned per system so reflections memoize to dictionary lookups.
"""

from __future__ import annotations

import json
import math
import threading

from .field import RealCyclotomicField

INFINITY = math.inf

_DEFAULT_NAMES = "stuvwxyz"


def _default_names(rank):
    if rank <= len(_DEFAULT_NAMES):
        return tuple(_DEFAULT_NAMES[:rank])
    return tuple(f"g{i+1}" for i in range(rank))


class CoxeterMatrix:
    """Symmetric matrix of labels m(s,t); diagonal 1, off-diagonal >= 2 or inf."""

    def __init__(self, entries):
        entries = [list(row) for row in entries]
        rank = len(entries)
        for i, row in enumerate(entries):
            if len(row) != rank:
                raise ValueError("Coxeter matrix must be square")
            for j, m in enumerate(row):
                if i == j:
                    if m != 1:
                        raise ValueError("diagonal Coxeter labels must be 1")
                elif m != INFINITY and (int(m) != m or m < 2):
                    raise ValueError(f"off-diagonal label m({i},{j})={m} must be an integer >= 2 or infinity")
                if entries[j][i] != m:
                    raise ValueError("Coxeter matrix must be symmetric")
        self.rank = rank
        self.entries = tuple(tuple(m if m == INFINITY else int(m) for m in row) for row in entries)

    def entry(self, i, j):
        return self.entries[i][j]

    def finite_labels(self):
        out = set()
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                m = self.entries[i][j]
                if m != INFINITY:
                    out.add(m)
        return out

    def __eq__(self, other):
        return isinstance(other, CoxeterMatrix) and self.entries == other.entries

    def __repr__(self):
        return f"CoxeterMatrix({[list(r) for r in self.entries]})"


class Root:
    """Root vector in the simple-root basis; interned and hashed per system."""

    __slots__ = ("system", "coeffs", "index", "_sign")

    def __init__(self, system, coeffs, index):
        self.system = system
        self.coeffs = coeffs
        self.index = index
        self._sign = None

    def key(self):
        return tuple(c.coeffs for c in self.coeffs)

    def sign(self):
        """+1 for positive roots, -1 for negative; mixed signs are a bug."""
        if self._sign is None:
            signs = {c.sign() for c in self.coeffs}
            if signs <= {0, 1} and 1 in signs:
                self._sign = 1
            elif signs <= {0, -1} and -1 in signs:
                self._sign = -1
            elif signs == {0}:
                self._sign = 0
            else:
                raise ValueError(f"root with mixed-sign coordinates: {self}")
        return self._sign

    def is_positive(self):
        return self.sign() > 0

    def __eq__(self, other):
        if not isinstance(other, Root):
            return NotImplemented
        return self.system is other.system and self.index == other.index

    def __hash__(self):
        return hash((id(self.system), self.index))

    def __neg__(self):
        return self.system.intern_root([-c for c in self.coeffs])

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coeffs) + ")"

    def __repr__(self):
        return f"Root{self}"

    def to_json(self):
        return {
            "coeffs": [[[c.numerator, c.denominator] for c in coord.coeffs] for coord in self.coeffs],
            "approx": [float(coord) for coord in self.coeffs],
        }


class CoxeterSystem:
    """A finitely generated Coxeter system with its geometric representation."""

    def __init__(self, matrix, generators=None):
        if not isinstance(matrix, CoxeterMatrix):
            matrix = CoxeterMatrix(matrix)
        self.matrix = matrix
        self.rank = matrix.rank
        self.generators = tuple(generators) if generators else _default_names(self.rank)
        if len(self.generators) != self.rank:
            raise ValueError("generator name count must match matrix rank")
        if len(set(self.generators)) != self.rank:
            raise ValueError("generator names must be distinct")
        labels = matrix.finite_labels()
        n = 1
        for m in labels:
            n = n * m // math.gcd(n, m)
        self.field = RealCyclotomicField(max(n, 2))
        f = self.field
        self.gram = tuple(
            tuple(f.one if i == j else f.embed_cos(matrix.entry(i, j)) for j in range(self.rank))
            for i in range(self.rank)
        )
        self._roots = []
        self._root_index = {}
        self._refl = [dict() for _ in range(self.rank)]
        self._refl_in = {}
        self.simple_roots = tuple(
            self.intern_root([f.one if j == i else f.zero for j in range(self.rank)]) for i in range(self.rank)
        )
        self._simple_ids = tuple(r.index for r in self.simple_roots)
        self._cache = {}
        self._cache_lock = threading.RLock()
        self.identity = Element(self, ())

    def __repr__(self):
        return f"CoxeterSystem({','.join(self.generators)})"

    def cached(self, key, compute):
        with self._cache_lock:
            if key not in self._cache:
                self._cache[key] = compute()
            return self._cache[key]

    # -- roots ---------------------------------------------------------

    def intern_root(self, coeffs):
        coeffs = tuple(coeffs)
        key = tuple(c.coeffs for c in coeffs)
        root = self._root_index.get(key)
        if root is None:
            root = Root(self, coeffs, len(self._roots))
            self._roots.append(root)
            self._root_index[key] = root
        return root

    def root_by_id(self, index):
        return self._roots[index]

    def form(self, u, v):
        """Bilinear form value <u, v> of two roots."""
        total = self.field.zero
        for i, ui in enumerate(u.coeffs):
            if not ui.is_zero():
                row = self.gram[i]
                for j, vj in enumerate(v.coeffs):
                    if not vj.is_zero():
                        total = total + ui * vj * row[j]
        return total

    def pair_with_simple(self, v, s):
        """<v, alpha_s> computed from the Gram column of s."""
        total = self.field.zero
        for t, c in enumerate(v.coeffs):
            if not c.is_zero():
                g = self.gram[t][s]
                if not g.is_zero():
                    total = total + c * g
        return total

    def reflect(self, s, v):
        """Image of v under the simple reflection s: v - 2<v,alpha_s> alpha_s."""
        cache = self._refl[s]
        out = cache.get(v.index)
        if out is None:
            c = self.pair_with_simple(v, s)
            coeffs = list(v.coeffs)
            coeffs[s] = coeffs[s] - (c + c)
            out = self.intern_root(coeffs)
            cache[v.index] = out
            cache.setdefault(out.index, v)  # the reflection is an involution
        return out

    def reflect_in_root(self, gamma, v):
        """Image of v under the reflection in an arbitrary root gamma."""
        key = (gamma.index, v.index)
        out = self._refl_in.get(key)
        if out is None:
            c = self.form(v, gamma)
            two_c = c + c
            out = self.intern_root([a - two_c * b for a, b in zip(v.coeffs, gamma.coeffs)])
            self._refl_in[key] = out
        return out

    def act_word(self, word, v):
        """Apply the element with the given word to v (letters act right to left)."""
        for s in reversed(word):
            v = self.reflect(s, v)
        return v

    # -- words and elements --------------------------------------------

    def _append_letter(self, word, rootseq, s):
        """Right-multiply the reduced word by s, maintaining its root sequence."""
        rho = self.act_word(word, self.simple_roots[s])
        if rho.is_positive():
            word.append(s)
            rootseq.append(rho)
            return
        self._delete_at(word, rootseq, rootseq.index(-rho))

    def _delete_at(self, word, rootseq, i):
        """Remove letter i; later root-sequence entries reflect through entry i."""
        gamma = rootseq[i]
        del word[i]
        del rootseq[i]
        for j in range(i, len(rootseq)):
            rootseq[j] = self.reflect_in_root(gamma, rootseq[j])

    def _canonical_from_reduced(self, word, rootseq):
        """ShortLex normal form of a reduced word: peel least left descents."""
        out = []
        word = list(word)
        rootseq = list(rootseq)
        while word:
            pos = {r.index: i for i, r in enumerate(rootseq)}
            s = min(t for t in range(self.rank) if self._simple_ids[t] in pos)
            out.append(s)
            self._delete_at(word, rootseq, pos[self._simple_ids[s]])
        return tuple(out)

    def normalize(self, letters):
        """Reduce an arbitrary word and return the canonical Element."""
        word, rootseq = [], []
        for s in letters:
            if not 0 <= s < self.rank:
                raise ValueError(f"unknown generator index {s}")
            self._append_letter(word, rootseq, s)
        return Element(self, self._canonical_from_reduced(word, rootseq), _trusted=True)

    def element(self, word):
        """Element from a word given as a string or an iterable of indices/names."""
        if isinstance(word, str):
            word = self.parse_word(word)
        else:
            word = [self.generators.index(x) if isinstance(x, str) else x for x in word]
        return self.normalize(word)

    def generator(self, i):
        return Element(self, (i,), _trusted=True)

    def simple_elements(self):
        return [self.generator(i) for i in range(self.rank)]

    def parse_word(self, text):
        """Parse generator names: one char per letter, or comma-separated."""
        text = text.strip()
        if text in ("", "e", "1"):
            return []
        names = self.generators
        parts = text.split(",") if "," in text else list(text)
        out = []
        for p in parts:
            p = p.strip()
            if p not in names:
                raise ValueError(f"unknown generator name {p!r}")
            out.append(names.index(p))
        return out

    def format_word(self, word):
        if not word:
            return "e"
        names = [self.generators[s] for s in word]
        return "".join(names) if all(len(n) == 1 for n in self.generators) else ",".join(names)

    def to_json(self):
        enc = lambda m: 0 if m == INFINITY else m
        return {
            "generators": list(self.generators),
            "matrix": [[enc(m) for m in row] for row in self.matrix.entries],
        }


def system_from_json(data):
    """Build a system from the group definition mapping (0 encodes infinity)."""
    if isinstance(data, str):
        data = json.loads(data)
    try:
        gens = data["generators"]
        raw = data["matrix"]
    except (KeyError, TypeError) as exc:
        raise ValueError("group definition needs 'generators' and 'matrix'") from exc
    entries = [[INFINITY if m == 0 else m for m in row] for row in raw]
    return CoxeterSystem(CoxeterMatrix(entries), tuple(gens))


class Element:
    """Group element as its ShortLex-least reduced word, with cached root data."""

    __slots__ = ("system", "word", "_rootseq", "_inv_ids", "_descL", "_descR", "_hash")

    def __init__(self, system, word, _trusted=False):
        if not _trusted:
            canonical = system.normalize(word)
            word = canonical.word
        self.system = system
        self.word = tuple(word)
        self._rootseq = None
        self._inv_ids = None
        self._descL = None
        self._descR = None
        self._hash = None

    @property
    def length(self):
        return len(self.word)

    def rootseq(self):
        """Root sequence of the canonical word: entry i is s1..s_{i-1} alpha_{s_i}."""
        if self._rootseq is None:
            sys = self.system
            seq = []
            prefix = []
            for s in self.word:
                seq.append(sys.act_word(prefix, sys.simple_roots[s]))
                prefix.append(s)
            self._rootseq = tuple(seq)
        return self._rootseq

    def inversion_ids(self):
        if self._inv_ids is None:
            self._inv_ids = frozenset(r.index for r in self.rootseq())
        return self._inv_ids

    def descents_left(self):
        """Generators s with alpha_s in the inversion set."""
        if self._descL is None:
            ids = self.inversion_ids()
            self._descL = frozenset(s for s, i in enumerate(self.system._simple_ids) if i in ids)
        return self._descL

    def descents_right(self):
        """Generators s with w(alpha_s) negative."""
        if self._descR is None:
            sys = self.system
            self._descR = frozenset(
                s for s in range(sys.rank) if not sys.act_word(self.word, sys.simple_roots[s]).is_positive()
            )
        return self._descR

    def act(self, root):
        return self.system.act_word(self.word, root)

    def inverse(self):
        return self.system.normalize(tuple(reversed(self.word)))

    def __mul__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if other.system is not self.system:
            raise ValueError("cannot multiply elements of different Coxeter systems")
        word = list(self.word)
        rootseq = list(self.rootseq())
        for s in other.word:
            self.system._append_letter(word, rootseq, s)
        return Element(self.system, self.system._canonical_from_reduced(word, rootseq), _trusted=True)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.system is other.system and self.word == other.word

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash((id(self.system), self.word))
        return h

    def __lt__(self, other):
        return (len(self.word), self.word) < (len(other.word), other.word)

    def __le__(self, other):
        return (len(self.word), self.word) <= (len(other.word), other.word)

    def __str__(self):
        return self.system.format_word(self.word)

    def __repr__(self):
        return f"Element({self})"


def reflect(system, s, v):
    return system.reflect(s, v)


def act(w, v):
    return w.act(v)


def normalize(system, letters):
    return system.normalize(letters)


def multiply(x, y):
    return x * y


def inverse(x):
    return x.inverse()


def length(x):
    return x.length


def descents_left(x):
    return x.descents_left()


def descents_right(x):
    return x.descents_right()


def shortlex_key(x):
    return (len(x.word), x.word)
