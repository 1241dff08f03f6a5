"""The reduced-word automaton, its minimization, gates, and exports.

States of the raw automaton are elementary inversion sets: reading a word
for x left to right arrives at the elementary part of Phi(x^{-1}), and a
letter s extends a reduced word exactly when alpha_s is outside the state.
Moore partition refinement (with an implicit rejecting sink for missing
transitions) collapses states to the Myhill-Nerode classes of the language
of reduced words; those classes are the cone types, and breadth-first
ShortLex search through the quotient finds each class's unique minimal
word, whose inverse is the gate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import Element
from .inversions import elementary_ids
from .shadows import algorithm1, ShadowSet
from .weakorder import universe


class ReducedWordAutomaton:
    """Deterministic partial automaton over the generators; every state accepts."""

    def __init__(self, system, kind, alphabet, start, delta, state_roots=None, class_of_raw=None):
        self.system = system
        self.kind = kind  # "raw" or "min"
        self.alphabet = tuple(alphabet)
        self.start = start
        self.delta = [dict(d) for d in delta]
        self.state_roots = state_roots  # raw: tuple of root-id tuples
        self.class_of_raw = class_of_raw  # min: raw state -> class
        self.gate_words = None  # filled by gates()

    @property
    def num_states(self):
        return len(self.delta)

    def step(self, state, letter):
        return self.delta[state].get(letter)

    def accepts(self, word):
        state = self.start
        for s in word:
            state = self.delta[state].get(s)
            if state is None:
                return False
        return True

    def state_of_word(self, word):
        state = self.start
        for s in word:
            state = self.delta[state].get(s)
            if state is None:
                raise ValueError("word is not reduced: no transition")
        return state

    def edges(self):
        out = []
        for q, row in enumerate(self.delta):
            for s in sorted(row):
                out.append((q, s, row[s]))
        return out


def build_bh_automaton(system):
    """Automaton on elementary inversion sets recognizing the reduced words."""

    def compute():
        e_ids = elementary_ids(system)
        simple_ids = system._simple_ids
        refl = [dict() for _ in range(system.rank)]
        for rid in e_ids:
            root = system.root_by_id(rid)
            for s in range(system.rank):
                refl[s][rid] = system.reflect(s, root).index
        start_key = frozenset()
        index = {start_key: 0}
        states = [start_key]
        delta = [dict()]
        frontier = [start_key]
        while frontier:
            new = []
            for key in frontier:
                q = index[key]
                for s in range(system.rank):
                    if simple_ids[s] in key:
                        continue
                    target = {simple_ids[s]}
                    for rid in key:
                        image = refl[s][rid]
                        if image in e_ids:
                            target.add(image)
                    target = frozenset(target)
                    t = index.get(target)
                    if t is None:
                        t = index[target] = len(states)
                        states.append(target)
                        delta.append(dict())
                        new.append(target)
                    delta[q][s] = t
            frontier = new
        sort_key = {rid: system.root_by_id(rid).key() for key in states for rid in key}
        state_roots = tuple(tuple(sorted(key, key=sort_key.get)) for key in states)
        return ReducedWordAutomaton(system, "raw", system.generators, 0, delta, state_roots=state_roots)

    return system.cached("bh_automaton", compute)


def minimize(automaton):
    """Moore partition refinement; missing transitions go to an implicit sink.

    Returns the quotient automaton together with the raw-to-class map; the
    classes are the Nerode classes of the reduced-word language.
    """
    n = automaton.num_states
    letters = range(len(automaton.alphabet))
    block = [0] * n
    while True:
        sigs = {}
        new_block = [0] * n
        for q in range(n):
            sig = (block[q], tuple(block[t] if (t := automaton.delta[q].get(s)) is not None else -1 for s in letters))
            if sig not in sigs:
                sigs[sig] = len(sigs)
            new_block[q] = sigs[sig]
        if new_block == block:
            break
        block = new_block
    nclasses = max(block) + 1
    delta = [dict() for _ in range(nclasses)]
    for q in range(n):
        for s, t in automaton.delta[q].items():
            delta[block[q]][s] = block[t]
    return ReducedWordAutomaton(
        automaton.system,
        "min",
        automaton.alphabet,
        block[automaton.start],
        delta,
        class_of_raw=tuple(block),
    )


def minimized_automaton(system):
    return system.cached("min_automaton", lambda: minimize(build_bh_automaton(system)))


@dataclass
class GateTable:
    """Minimal words per cone-type class and their inverses, the gates."""

    automaton: ReducedWordAutomaton
    min_words: tuple
    gate_elements: tuple
    _boundary: dict = field(default_factory=dict)

    def gates(self):
        return ShadowSet(frozenset(self.gate_elements), "gates")

    def boundary(self, cls):
        """Boundary roots of the class's cone type, via its gate."""
        if cls not in self._boundary:
            from .shadows import boundary_roots

            self._boundary[cls] = boundary_roots(self.gate_elements[cls])
        return self._boundary[cls]


def gates(system):
    """Gate table of the minimized automaton.

    ShortLex breadth-first search assigns each class the first element
    reaching it; a second distinct element arriving at the same class at
    the same length would contradict gate uniqueness and raises.
    """

    def compute():
        auto = minimized_automaton(system)
        uni = universe(system)
        nclasses = auto.num_states
        min_words = [None] * nclasses
        min_words[auto.start] = ()
        remaining = nclasses - 1
        state_of_prev = {(): auto.start}
        n = 0
        while remaining > 0:
            n += 1
            state_of = {}
            level = uni.level(n)
            if not level and remaining:
                raise AssertionError("automaton class untouched by any element")
            for word, _ in level:
                st = auto.delta[state_of_prev[word[:-1]]][word[-1]]
                state_of[word] = st
                if min_words[st] is None:
                    min_words[st] = word
                    remaining -= 1
                elif len(min_words[st]) == len(word) and min_words[st] != word:
                    raise AssertionError("two minimal-length words reach one cone type")
            state_of_prev = state_of
        gate_elements = tuple(system.normalize(tuple(reversed(w))) for w in min_words)
        auto.gate_words = tuple(min_words)
        return GateTable(auto, tuple(min_words), gate_elements)

    return system.cached("gate_table", compute)


def gate_set(system):
    return gates(system).gates()


def cone_type_class(system, x):
    """Class of T(x) in the minimized automaton."""
    return minimized_automaton(system).state_of_word(x.word)


def cone_type_equal(x, y, check=True):
    """Whether T(x) = T(y).

    Primary route: compare minimized-automaton classes. When check is on, a
    second decision through tight-gate membership profiles (x is in T(w^-1)
    iff the lengths of x and w add, iff Phi(x^-1) misses Phi(w)) must agree.
    """
    sys = x.system
    if y.system is not sys:
        raise ValueError("cone types live in one system")
    by_class = cone_type_class(sys, x) == cone_type_class(sys, y)
    if check:
        tight_gates, _ = algorithm1(sys)
        xinv = x.inverse().inversion_ids()
        yinv = y.inverse().inversion_ids()
        profile_x = frozenset(w for w in tight_gates if not (w.inversion_ids() & xinv))
        profile_y = frozenset(w for w in tight_gates if not (w.inversion_ids() & yinv))
        if (profile_x == profile_y) != by_class:
            raise AssertionError("automaton and tight-gate profiles disagree on cone types")
    return by_class


def growth_series(automaton, n):
    """Numbers of accepted words of each length 0..n (transfer iteration)."""
    counts = [1]
    vec = {automaton.start: 1}
    for _ in range(n):
        nxt = {}
        for q, c in vec.items():
            for t in automaton.delta[q].values():
                nxt[t] = nxt.get(t, 0) + c
        vec = nxt
        counts.append(sum(vec.values()))
    return counts


# -- serialization -----------------------------------------------------------


def export(automaton, fmt):
    """Deterministic DOT or JSON text for the automaton."""
    if fmt == "dot":
        return _to_dot(automaton)
    if fmt == "json":
        return json.dumps(_to_jsonable(automaton), indent=2, sort_keys=True)
    raise ValueError(f"unknown export format {fmt!r}")


def _state_label(automaton, q):
    if automaton.kind == "raw":
        roots = automaton.state_roots[q]
        names = ", ".join(str(automaton.system.root_by_id(r)) for r in roots)
        return "{" + names + "}"
    label = f"class {q}"
    if automaton.gate_words is not None:
        label += " m=" + automaton.system.format_word(automaton.gate_words[q])
    return label


def _to_dot(automaton):
    lines = ["digraph reduced_words {", "  rankdir=LR;"]
    for q in range(automaton.num_states):
        shape = "doublecircle" if q == automaton.start else "circle"
        lines.append(f'  q{q} [shape={shape} label="{_state_label(automaton, q)}"];')
    for q, s, t in automaton.edges():
        lines.append(f'  q{q} -> q{t} [label="{automaton.alphabet[s]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _to_jsonable(automaton):
    states = []
    for q in range(automaton.num_states):
        if automaton.kind == "raw":
            entry = {
                "id": q,
                "roots": [automaton.system.root_by_id(r).to_json() for r in automaton.state_roots[q]],
            }
        else:
            entry = {"id": q, "class": q}
            if automaton.gate_words is not None:
                entry["gate_word"] = automaton.system.format_word(automaton.gate_words[q])
        states.append(entry)
    return {
        "alphabet": list(automaton.alphabet),
        "start": automaton.start,
        "states": states,
        "edges": [[q, automaton.alphabet[s], t] for q, s, t in automaton.edges()],
    }


def automaton_from_json(text, system=None):
    """Rebuild the transition structure from exported JSON."""
    data = json.loads(text) if isinstance(text, str) else text
    alphabet = tuple(data["alphabet"])
    letter = {name: i for i, name in enumerate(alphabet)}
    nstates = len(data["states"])
    delta = [dict() for _ in range(nstates)]
    for q, name, t in data["edges"]:
        delta[q][letter[name]] = t
    kind = "raw" if data["states"] and "roots" in data["states"][0] else "min"
    return ReducedWordAutomaton(system, kind, alphabet, data["start"], delta)


def isomorphic(a, b):
    """Structure equality after synchronized reachability traversal."""
    if a.alphabet != b.alphabet:
        return False
    pair_map = {a.start: b.start}
    stack = [a.start]
    while stack:
        qa = stack.pop()
        qb = pair_map[qa]
        if set(a.delta[qa]) != set(b.delta[qb]):
            return False
        for s, ta in a.delta[qa].items():
            tb = b.delta[qb][s]
            if ta in pair_map:
                if pair_map[ta] != tb:
                    return False
            else:
                pair_map[ta] = tb
                stack.append(ta)
    return len(pair_map) == a.num_states == b.num_states
