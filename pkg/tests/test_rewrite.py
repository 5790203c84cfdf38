"""Redex detection, single steps, measures, and full normalization."""

import random

import pytest

from kumjian_pask.algebra import is_basis_word
from kumjian_pask.freealg import Element, IntegerRing, letter
from kumjian_pask.kgraph import (Path, StandardKGraph, compose, degrees_upto,
                                 factorize, leq, meet, norm, vadd, vsub,
                                 vertex)
from kumjian_pask.rewrite import (RedexMatch, RuleId, TerminationFault,
                                  all_redexes, apply_rule, find_redex,
                                  match_at, normalize, valid_expansions,
                                  word_measure)

ZZ = IntegerRing()
G22 = StandardKGraph(2, 2)


def elem(*letters, coeff=1):
    return Element.from_word(ZZ, tuple(letters), coeff)


def test_word_measure_examples():
    rep = Path((1, 1), (1, 0), (2,))
    w = (letter(rep), letter(rep, ghost=True))
    assert word_measure(w) == (2, 1, 1, 0, 0)
    nonrep = Path((1, 1), (0, 1), (2,))
    w2 = (letter(nonrep), letter(nonrep, ghost=True))
    assert word_measure(w2) == (2, 1, 1, 0, 1)
    assert word_measure((letter(vertex((0, 0))),)) == (1, 0, 0, 0, 0)


def test_word_measure_counts_only_plain_paths():
    lam = Path((1, 1), (0, 0), (1, 2))
    w = (letter(lam, ghost=True), letter(lam), letter(vertex((0, 0))))
    # only the middle letter is a nonzero-degree non-ghost path
    assert word_measure(w) == (3, 2, 2, 1, 0)


def test_find_redex_r1_r2_r3():
    lam = Path((1, 1), (1, 0), (2,))
    mu = Path((1, 0), (0, 0), (1,))
    m = find_redex((letter(lam), letter(mu)))
    assert m == RedexMatch(RuleId.R1_COMPOSE, 0)
    m = find_redex((letter(lam), letter(lam)))   # sources/ranges mismatch
    assert m == RedexMatch(RuleId.R2_ORTHO, 0)
    nu = Path((1, 1), (0, 1), (1,))
    m = find_redex((letter(lam, ghost=True), letter(nu)))
    assert m.rule is RuleId.R3_GHOST_PATH and m.pos == 0


def test_find_redex_r4_instance():
    lam = Path((1, 0), (0, 0), (1,))
    m = find_redex((letter(lam), letter(lam, ghost=True)))
    assert m.rule is RuleId.R4_EXPAND and m.expand_degree == (1, 0)


def test_find_redex_r5_and_irreducible():
    nonrep = Path((1, 1), (0, 1), (2,))
    m = find_redex((letter(nonrep), letter(nonrep, ghost=True)))
    assert m.rule is RuleId.R5_REPRESENTATIVE
    rep = Path((1, 1), (1, 0), (2,))
    assert find_redex((letter(rep), letter(rep, ghost=True))) is None
    assert find_redex((letter(rep),)) is None


def test_find_redex_leftmost():
    v = vertex((0, 0))
    lam = Path((0, 0), (-1, 0), (1,))
    w = (letter(v), letter(v), letter(lam))
    m = find_redex(w)
    assert m.pos == 0 and m.rule is RuleId.R1_COMPOSE


def test_apply_rule_examples():
    v, w = vertex((0, 0)), vertex((1, 0))
    same = apply_rule(G22, ZZ, (letter(v), letter(v)),
                      find_redex((letter(v), letter(v))))
    assert same == elem(letter(v))
    zero = apply_rule(G22, ZZ, (letter(v), letter(w)),
                      find_redex((letter(v), letter(w))))
    assert zero.is_zero()
    lam = Path((1, 1), (1, 0), (2,))
    word = (letter(lam, ghost=True), letter(lam))
    one_step = apply_rule(G22, ZZ, word, find_redex(word))
    src = vertex((1, 0))
    assert one_step == elem(letter(src), letter(src))
    assert normalize(G22, elem(*word)) == elem(letter(src))


def test_apply_rule_ghost_compose():
    lam = Path((1, 1), (1, 0), (2,))
    mu = Path((1, 0), (0, 0), (1,))
    word = (letter(mu, ghost=True), letter(lam, ghost=True))
    m = find_redex(word)
    assert m.rule is RuleId.R1_COMPOSE
    got = apply_rule(G22, ZZ, word, m)
    assert got == elem(letter(compose(lam, mu), ghost=True))


def test_apply_rule_r4_expansion():
    lam = Path((1, 0), (0, 0), (1,))
    word = (letter(lam), letter(lam, ghost=True))
    m = find_redex(word)
    got = apply_rule(G22, ZZ, word, m)
    v = vertex((1, 0))
    xi = Path((1, 0), (0, 0), (2,))
    expected = elem(letter(v), letter(v)) - elem(letter(xi), letter(xi, ghost=True))
    assert got == expected


def test_apply_rule_rejects_stale_match():
    v = vertex((0, 0))
    with pytest.raises(Exception):
        apply_rule(G22, ZZ, (letter(v), letter(v)),
                   RedexMatch(RuleId.R3_GHOST_PATH, 0))


def test_normalize_spec_examples():
    g11 = StandardKGraph(1, 1)
    lam = Path((1,), (0,), (1,))
    assert (normalize(g11, Element.from_word(ZZ, (letter(lam), letter(lam, ghost=True))))
            == Element.from_word(ZZ, (letter(vertex((1,))),)))

    nonrep = Path((1, 1), (0, 1), (2,))
    rep = Path((1, 1), (1, 0), (2,))
    got = normalize(G22, elem(letter(nonrep), letter(nonrep, ghost=True)))
    assert got == elem(letter(rep), letter(rep, ghost=True))

    lam2 = Path((1, 0), (0, 0), (1,))
    got2 = normalize(G22, elem(letter(lam2), letter(lam2, ghost=True)))
    xi = Path((1, 0), (1, -1), (2,))
    assert got2 == (elem(letter(vertex((1, 0))))
                    - elem(letter(xi), letter(xi, ghost=True)))


def test_normalize_zero_and_coefficients():
    assert normalize(G22, Element.zero(ZZ)).is_zero()
    lam = Path((1, 0), (0, 0), (1,))
    x = elem(letter(lam), letter(lam, ghost=True), coeff=3)
    nf = normalize(G22, x)
    assert nf.terms[(letter(vertex((1, 0))),)] == 3


def _rand_path(rng, graph, lo=0, hi=3, range_v=None, source_v=None):
    n = rng.choice(degrees_upto(graph.k, hi, lo))
    if range_v is not None:
        r = range_v
    elif source_v is not None:
        r = vadd(source_v, n)
    else:
        r = tuple(rng.randint(-3, 3) for _ in range(graph.k))
    return Path(r, vsub(r, n),
                tuple(rng.randint(1, graph.level) for _ in range(norm(n))))


def _rand_element(rng, graph, max_letters=4):
    terms = []
    for _ in range(rng.randint(1, 2)):
        letters = []
        for _ in range(rng.randint(1, max_letters)):
            ghost = rng.random() < 0.4
            if letters and rng.random() < 0.7:
                prev = letters[-1]
                anchor = prev.path.range if prev.ghost else prev.path.source
                if (not prev.ghost and not prev.path.is_vertex and ghost
                        and rng.random() < 0.5):
                    p = _rand_path(rng, graph, 1, 3, source_v=prev.path.source)
                elif ghost:
                    p = _rand_path(rng, graph, 0, 3, source_v=anchor)
                else:
                    p = _rand_path(rng, graph, 0, 3, range_v=anchor)
            else:
                p = _rand_path(rng, graph)
            letters.append(letter(p, ghost=ghost))
        terms.append((tuple(letters), rng.choice((-2, -1, 1, 2))))
    return Element.from_terms(ZZ, terms)


def test_normalize_idempotent_and_basis_shaped():
    rng = random.Random("idempotent")
    for _ in range(400):
        graph = StandardKGraph(rng.choice((1, 2)), rng.choice((1, 2)))
        x = _rand_element(rng, graph)
        nf = normalize(graph, x)
        assert normalize(graph, nf) == nf
        assert all(is_basis_word(w) for w in nf.terms)


def test_every_step_strictly_decreases_measure():
    rng = random.Random("monotone")
    violations = 0
    for _ in range(300):
        graph = StandardKGraph(rng.choice((1, 2)), rng.choice((1, 2)))
        x = _rand_element(rng, graph)
        steps = []
        normalize(graph, x, trace=steps.append)
        for step in steps:
            for produced in step.produced:
                if not produced < step.measure:
                    violations += 1
    assert violations == 0


def test_r5_decrements_nonrep_count_by_one_in_any_context():
    rng = random.Random("h-context")
    nonrep = Path((1, 1), (0, 1), (2,))
    base = (letter(nonrep), letter(nonrep, ghost=True))
    for _ in range(200):
        left = tuple(letter(_rand_path(rng, G22, 0, 2),
                            ghost=rng.random() < 0.5) for _ in range(rng.randint(0, 2)))
        right = tuple(letter(_rand_path(rng, G22, 0, 2),
                             ghost=rng.random() < 0.5) for _ in range(rng.randint(0, 2)))
        w = left + base + right
        m = match_at(w, len(left))
        assert m.rule is RuleId.R5_REPRESENTATIVE
        out = apply_rule(G22, ZZ, w, m)
        (w2, c2), = out.terms.items()
        before, after = word_measure(w), word_measure(w2)
        assert after.ar_value == before.ar_value - 1
        assert after[:4] == before[:4]


def test_valid_expansions_oracle():
    rng = random.Random("expansions")
    for _ in range(200):
        graph = StandardKGraph(rng.choice((1, 2)), rng.choice((1, 2)))
        v = tuple(rng.randint(-2, 2) for _ in range(graph.k))
        lam = _rand_path(rng, graph, 0, 2, source_v=v)
        mu = _rand_path(rng, graph, 0, 2, source_v=v)
        t = rng.choice(degrees_upto(graph.k, 2))
        ones = graph.all_ones_path(v, t)
        lam, mu = compose(lam, ones), compose(mu, ones)
        if lam.is_vertex or mu.is_vertex:
            continue
        got = valid_expansions(lam, mu)
        for n in degrees_upto(graph.k, 4, 1):
            ok = (leq(n, meet(lam.degree, mu.degree))
                  and all(e == 1 for e in lam.levels[len(lam.levels) - norm(n):])
                  and all(e == 1 for e in mu.levels[len(mu.levels) - norm(n):]))
            assert (n in got) == ok
        # every valid expansion strips an all-ones factor
        for n in got:
            assert factorize(lam, vsub(lam.degree, n), n)[1].levels == (1,) * norm(n)


def test_all_redexes_covers_r4_instances():
    lam0 = Path((2, 0), (1, 0), (2,))
    v = (1, 0)
    ones = G22.all_ones_path(v, (1, 0))
    lam = compose(lam0, ones)
    word = (letter(lam), letter(lam, ghost=True))
    ms = all_redexes(word)
    assert all(m.rule is RuleId.R4_EXPAND for m in ms)
    assert {m.expand_degree for m in ms} == {(1, 0)}
    # two trailing ones in the first coordinate only: two instances
    ones2 = G22.all_ones_path((2, 0), (2, 0))
    lam2 = compose(Path((3, 0), (2, 0), (2,)), ones2)
    word2 = (letter(lam2), letter(lam2, ghost=True))
    got = {m.expand_degree for m in all_redexes(word2)}
    assert got == {(1, 0), (2, 0)}


def test_randomized_strategy_agrees():
    rng = random.Random("strategy")
    for i in range(300):
        graph = StandardKGraph(rng.choice((1, 2)), rng.choice((1, 2)))
        x = _rand_element(rng, graph)
        det = normalize(graph, x)
        rand = normalize(graph, x, rng=random.Random(f"inner:{i}"))
        assert det == rand


def test_step_guard_raises_termination_fault():
    v = vertex((0, 0))
    with pytest.raises(TerminationFault):
        normalize(G22, elem(letter(v), letter(v)), step_guard=0)


def test_normalize_merges_across_terms():
    # two different spellings of the same class member collapse to one term
    a = Path((1, 1), (0, 1), (2,))
    b = Path((1, 1), (1, 0), (2,))
    x = (elem(letter(a), letter(a, ghost=True))
         + elem(letter(b), letter(b, ghost=True)))
    nf = normalize(G22, x)
    assert nf.terms == {(letter(b), letter(b, ghost=True)): 2}


def test_normalize_is_linear():
    # splitting an element, normalizing the parts, and re-summing gives the
    # same result as normalizing the whole element
    rng = random.Random("linearity")
    for _ in range(200):
        graph = StandardKGraph(rng.choice((1, 2)), rng.choice((1, 2)))
        x = _rand_element(rng, graph)
        y = _rand_element(rng, graph)
        assert normalize(graph, x + y) == normalize(graph, x) + normalize(graph, y)
