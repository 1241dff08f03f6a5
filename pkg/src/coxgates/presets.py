"""Named group presets: affine families, dihedral, rank-3 diagrams, graphs.

Preset strings (case-insensitive family names, ':'-separated parameters):

    affine-A1 .. affine-A5, affine-B3 .. affine-B5, affine-C2 .. affine-C5,
    affine-D4, affine-D5, affine-G2, affine-F4
    I2:m                dihedral with label m (integer >= 2, or "inf")
    rank3:I:a:b         linear s-a-t-b-u with a=3, b >= 7
    rank3:II:a:b        a, b >= 5
    rank3:III:a:b       a=4, b >= 5       (b may be "inf" in all three)
    linear:l1:...:lk    chain with the given labels
    right-angled:st,tu  listed pairs get label inf, all others 2
    complete:m12:m13:m23...   complete graph, labels in pair-lex order
"""

from __future__ import annotations

import functools

from .core import INFINITY, CoxeterMatrix, CoxeterSystem, _default_names


def _label(text):
    if text.lower() in ("inf", "infinity", "oo", "0"):
        return INFINITY
    try:
        value = int(text)
    except ValueError:
        raise ValueError(f"bad Coxeter label {text!r}") from None
    if value < 2:
        raise ValueError(f"bad Coxeter label {text!r}")
    return value


def _matrix_from_edges(rank, edges):
    m = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
    for i, j, label in edges:
        m[i][j] = m[j][i] = label
    return m


def _chain(labels):
    rank = len(labels) + 1
    return _matrix_from_edges(rank, [(i, i + 1, lab) for i, lab in enumerate(labels)])


def _cycle(rank, label=3):
    edges = [(i, (i + 1) % rank, label) for i in range(rank)]
    return _matrix_from_edges(rank, edges)


def _affine(family, n):
    if family == "a":
        if n == 1:
            return _chain([INFINITY])
        if 2 <= n <= 5:
            return _cycle(n + 1)
    elif family == "b":
        if n == 2:
            return _chain([4, 4])
        # two leaves joined to a node, then a chain ending in a 4-bond
        if 3 <= n <= 5:
            edges = [(0, 2, 3), (1, 2, 3)]
            edges += [(i, i + 1, 3) for i in range(2, n - 1)]
            edges.append((n - 1, n, 4))
            return _matrix_from_edges(n + 1, edges)
    elif family == "c":
        if 2 <= n <= 5:
            return _chain([4] + [3] * (n - 2) + [4])
    elif family == "d":
        # forks at both ends of a chain of 3-bonds
        if 4 <= n <= 5:
            edges = [(0, 2, 3), (1, 2, 3), (n - 1, n, 3), (n - 1, n - 2, 3)]
            edges += [(i, i + 1, 3) for i in range(2, n - 2)]
            return _matrix_from_edges(n + 1, edges)
    elif family == "g" and n == 2:
        return _chain([6, 3])
    elif family == "f" and n == 4:
        return _chain([3, 3, 4, 3])
    raise ValueError(f"unknown affine preset {family.upper()}{n}")


_RANK3_RANGES = {
    "I": lambda a, b: a == 3 and b >= 7,
    "II": lambda a, b: a >= 5 and b >= 5,
    "III": lambda a, b: a == 4 and b >= 5,
}


def _parse(name):
    parts = name.strip().split(":")
    head = parts[0].strip().lower()
    if head.startswith("affine-") and len(parts) == 1:
        tail = head[len("affine-") :]
        return _affine(tail[0], int(tail[1:])), None
    if head == "i2":
        if len(parts) != 2:
            raise ValueError("I2 preset needs one label, e.g. I2:5 or I2:inf")
        return _chain([_label(parts[1])]), None
    if head == "rank3":
        if len(parts) != 4:
            raise ValueError("rank3 preset is rank3:TYPE:a:b")
        kind = parts[1].strip().upper()
        if kind not in _RANK3_RANGES:
            raise ValueError(f"rank3 type must be I, II or III, not {parts[1]!r}")
        a, b = _label(parts[2]), _label(parts[3])
        if not _RANK3_RANGES[kind](a, b):
            raise ValueError(f"labels ({parts[2]},{parts[3]}) outside the range of type {kind}")
        return _chain([a, b]), None
    if head == "linear":
        if len(parts) < 2:
            raise ValueError("linear preset needs at least one label")
        return _chain([_label(p) for p in parts[1:]]), None
    if head == "right-angled":
        if len(parts) != 2:
            raise ValueError("right-angled preset is right-angled:st,tu,...")
        pair_texts = [p.strip() for p in parts[1].split(",") if p.strip()]
        names = []
        for p in pair_texts:
            if len(p) != 2:
                raise ValueError(f"right-angled edge {p!r} must name two single-letter generators")
            for ch in p:
                if ch not in names:
                    names.append(ch)
        idx = {ch: i for i, ch in enumerate(names)}
        edges = [(idx[p[0]], idx[p[1]], INFINITY) for p in pair_texts]
        return _matrix_from_edges(len(names), edges), tuple(names)
    if head == "complete":
        labels = [_label(p) for p in parts[1:]]
        rank = 2
        while rank * (rank - 1) // 2 < len(labels):
            rank += 1
        if rank * (rank - 1) // 2 != len(labels) or rank < 3:
            raise ValueError("complete preset needs k(k-1)/2 labels for some rank k >= 3")
        if any(lab == 2 for lab in labels):
            raise ValueError("complete-graph labels must be at least 3")
        pairs = [(i, j) for i in range(rank) for j in range(i + 1, rank)]
        return _matrix_from_edges(rank, [(i, j, lab) for (i, j), lab in zip(pairs, labels)]), None
    raise ValueError(f"unknown preset {name!r}")


@functools.lru_cache(maxsize=None)
def preset(name):
    """Shared CoxeterSystem for a preset string (one instance per name)."""
    matrix, names = _parse(name)
    rank = len(matrix)
    return CoxeterSystem(CoxeterMatrix(matrix), names or _default_names(rank))


def preset_names_for_table():
    """Affine presets whose published count-table rows are reproduced."""
    return ["affine-A2", "affine-B2", "affine-G2", "affine-A3", "affine-B3", "affine-C3"]
