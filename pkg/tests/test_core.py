"""Core tests: reflection action, word reduction, canonical forms, descents."""

import itertools
import random

import pytest

from coxgates.core import INFINITY, CoxeterMatrix, CoxeterSystem, system_from_json


def a2():
    return CoxeterSystem([[1, 3], [3, 1]])


def b2():
    return CoxeterSystem([[1, 4], [4, 1]])


def affine_a1():
    return CoxeterSystem([[1, INFINITY], [INFINITY, 1]])


def rank3_257():
    return CoxeterSystem([[1, 2, 5], [2, 1, 7], [5, 7, 1]])


def coeffs(system, root):
    return tuple(root.coeffs)


def test_matrix_validation():
    with pytest.raises(ValueError):
        CoxeterMatrix([[1, 2], [3, 1]])  # not symmetric
    with pytest.raises(ValueError):
        CoxeterMatrix([[2, 3], [3, 1]])  # bad diagonal
    with pytest.raises(ValueError):
        CoxeterMatrix([[1, 1], [1, 1]])  # off-diagonal below 2


def test_reflect_examples():
    sys = a2()
    f = sys.field
    a_s, a_t = sys.simple_roots
    assert sys.reflect(0, a_s) == -a_s
    assert sys.reflect(0, a_t) == sys.intern_root([f.one, f.one])  # alpha_s + alpha_t

    aff = affine_a1()
    g = aff.field
    b_s, b_t = aff.simple_roots
    assert aff.reflect(0, b_t) == aff.intern_root([g.from_rational(2), g.one])  # 2a_s + a_t


def test_act_examples():
    sys = a2()
    a_s, a_t = sys.simple_roots
    e = sys.identity
    assert e.act(a_t) == a_t
    st = sys.element("st")
    assert st.act(a_t) == -sys.intern_root([sys.field.one, sys.field.one])
    wo = sys.element("sts")
    assert wo.act(a_s) == -a_t  # longest element of A2 negates and swaps simples


def test_normalize_examples():
    sys = a2()
    assert sys.element("ss").word == ()
    assert sys.element("tst").word == (0, 1, 0)  # braid move, ShortLex prefers s first
    assert sys.element("stst").word == (1, 0)  # stst = ts
    # verify stst == ts by action on all simples
    x, y = sys.element("stst"), sys.element("ts")
    for r in sys.simple_roots:
        assert x.act(r) == y.act(r)
    with pytest.raises(ValueError):
        sys.normalize([5])


def test_multiply_inverse_length_descents():
    sys = a2()
    s, t = sys.simple_elements()
    st = s * t
    assert st.word == (0, 1)
    assert st.descents_right() == {1}
    assert st.inverse().word == (1, 0)
    assert sys.element("sts").length == 3  # longest element has all 3 inversions
    assert (s * t * s).descents_left() == {0, 1}
    other = b2()
    with pytest.raises(ValueError):
        s * other.simple_elements()[0]


def enumerate_all(system, max_len):
    """All elements up to the given length by brute-force multiplication."""
    seen = {system.identity}
    frontier = [system.identity]
    for _ in range(max_len):
        new = []
        for x in frontier:
            for i in range(system.rank):
                y = x * system.generator(i)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return seen


def test_a2_group_structure():
    sys = a2()
    elements = enumerate_all(sys, 4)
    assert len(elements) == 6
    words = sorted(x.word for x in elements)
    assert words == [(), (0,), (0, 1), (0, 1, 0), (1,), (1, 0)]


def test_b2_group_structure():
    assert len(enumerate_all(b2(), 6)) == 8


@pytest.mark.parametrize("build", [a2, b2, affine_a1, rank3_257])
def test_word_properties_random(build):
    sys = build()
    rng = random.Random(42)
    for _ in range(30):
        word = [rng.randrange(sys.rank) for _ in range(rng.randint(0, 10))]
        w = sys.normalize(word)
        assert w.length == len(set(w.inversion_ids()))
        assert w.length == w.inverse().length
        # normalize is idempotent
        assert sys.normalize(w.word) == w
        # positivity dichotomy: acting on simples yields one-signed roots
        for r in sys.simple_roots:
            w.act(r).sign()  # raises on mixed signs


@pytest.mark.parametrize("build", [a2, affine_a1, rank3_257])
def test_reflect_involution_and_form(build):
    sys = build()
    rng = random.Random(3)
    roots = list(sys.simple_roots)
    for _ in range(20):
        s = rng.randrange(sys.rank)
        v = roots[rng.randrange(len(roots))]
        image = sys.reflect(s, v)
        roots.append(image)
        assert sys.reflect(s, image) == v
        u = roots[rng.randrange(len(roots))]
        assert sys.form(sys.reflect(s, v), sys.reflect(s, u)) == sys.form(v, u)


@pytest.mark.parametrize("build", [a2, affine_a1])
def test_multiplication_associative(build):
    sys = build()
    rng = random.Random(11)
    pool = [sys.normalize([rng.randrange(sys.rank) for _ in range(rng.randint(0, 6))]) for _ in range(12)]
    for x, y, z in itertools.islice(itertools.product(pool, pool, pool), 0, 600, 7):
        assert (x * y) * z == x * (y * z)


def test_gram_matrix_values():
    sys = rank3_257()
    f = sys.field
    assert sys.gram[0][0] == f.one
    assert sys.gram[0][1] == f.zero  # label 2
    assert sys.gram[0][2] == f.embed_cos(5)
    assert sys.gram[1][2] == f.embed_cos(7)
    assert sys.gram[2][1] == sys.gram[1][2]


def test_field_degree_matches_lcm():
    assert a2().field.n == max(3, 2) and a2().field.degree == 1
    assert affine_a1().field.n == 2
    assert rank3_257().field.n == 70  # lcm(2,5,7)


def test_group_json_round_trip():
    sys = system_from_json({"generators": ["s", "t", "u"], "matrix": [[1, 3, 2], [3, 1, 0], [2, 0, 1]]})
    assert sys.matrix.entry(1, 2) == INFINITY
    data = sys.to_json()
    again = system_from_json(data)
    assert again.matrix == sys.matrix
    assert again.generators == sys.generators
    with pytest.raises(ValueError):
        system_from_json({"generators": ["s"]})


def test_word_parsing_and_formatting():
    sys = a2()
    assert sys.parse_word("sts") == [0, 1, 0]
    assert sys.parse_word("s,t") == [0, 1]
    assert sys.parse_word("e") == []
    assert sys.format_word(()) == "e"
    assert sys.format_word((0, 1)) == "st"
    with pytest.raises(ValueError):
        sys.parse_word("sx")
    multi = CoxeterSystem([[1, 3], [3, 1]], generators=("s1", "s2"))
    assert multi.parse_word("s1,s2") == [0, 1]
    assert multi.format_word((0, 1)) == "s1,s2"


def test_root_serialization():
    sys = a2()
    data = sys.simple_roots[0].to_json()
    assert data["coeffs"] == [[[1, 1]], [[0, 1]]]
    assert data["approx"] == [1.0, 0.0]


def test_rank_one_degenerate():
    sys = CoxeterSystem([[1]])
    s = sys.generator(0)
    assert (s * s).word == ()
    assert s.descents_left() == {0} == s.descents_right()
