"""Executable checks of the algebra's defining identities and empirical
confluence of the reduction system.

Each check runs seeded cases; a case derives its own RNG from the string
"<seed>:<name>:<index>" so any failure is reproducible from the report
alone.  Element equality is exact; there are no tolerances.

check_kp_relations is exhaustive over a window (no randomness); the lemma
checks and the confluence check are randomized samplers.  The confluence
sampler rotates through the two-rule overlap families (compose/compose
through expand/expand), builds a word admitting two competing first
reductions, applies each, and requires identical normal forms.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import canonical
from .freealg import Element, IntegerRing, Ring, Word, letter
from .kgraph import (Coords, Path, StandardKGraph, compose, degrees_upto,
                     join, meet, norm, vadd, vsub)
from .rewrite import (RedexMatch, RuleId, _inner, _outer, apply_rule,
                      match_at, normalize, valid_expansions)
from .algebra import Window, uniform_window
from .syntax import format_element, format_word


@dataclass
class CaseFailure:
    index: int
    case_seed: str
    input_text: str
    detail: str


@dataclass
class CheckReport:
    name: str
    cases: int
    seed: int
    failures: list[CaseFailure] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def text_lines(self) -> list[str]:
        lines = [f"name={self.name} cases={self.cases} "
                 f"failures={len(self.failures)} seed={self.seed}"]
        for f in self.failures:
            lines.append(f"failure index={f.index} seed={f.case_seed} "
                         f"input={f.input_text} detail={f.detail}")
        return lines

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "cases": self.cases,
            "seed": self.seed,
            "failures": [
                {"index": f.index, "seed": f.case_seed,
                 "input": f.input_text, "detail": f.detail}
                for f in self.failures
            ],
        }


def _case_rng(seed: int, name: str, index: int) -> random.Random:
    return random.Random(f"{seed}:{name}:{index}")


def _default_window(graph: StandardKGraph,
                    window: Window | None) -> Window:
    if window is None:
        return uniform_window(graph.k, -3, 3, 3)
    return window


def _rand_vertex(rng: random.Random, window: Window) -> Coords:
    return tuple(rng.randint(a, b) for a, b in zip(window.lo, window.hi))


def _rand_degree(rng: random.Random, k: int, hi_norm: int,
                 lo_norm: int = 0) -> Coords:
    return rng.choice(degrees_upto(k, hi_norm, lo_norm))


def _rand_levels(rng: random.Random, graph: StandardKGraph,
                 count: int) -> Coords:
    return tuple(rng.randint(1, graph.level) for _ in range(count))


def _rand_path(rng: random.Random, graph: StandardKGraph, window: Window,
               lo_norm: int = 0, hi_norm: int | None = None,
               range_v: Coords | None = None,
               source_v: Coords | None = None) -> Path:
    hi = min(window.degree_bound, 3) if hi_norm is None else hi_norm
    n = _rand_degree(rng, graph.k, hi, lo_norm)
    if range_v is not None:
        r = range_v
    elif source_v is not None:
        r = vadd(source_v, n)
    else:
        r = _rand_vertex(rng, window)
    return Path(r, vsub(r, n), _rand_levels(rng, graph, norm(n)))


def _pair_word(lam: Path, mu: Path) -> Word:
    """The two-letter word lam . mu* (letters canonicalize vertices)."""
    return (letter(lam), letter(mu, ghost=True))


def _ghost_word(lam: Path, mu: Path) -> Word:
    """The two-letter word lam* . mu."""
    return (letter(lam, ghost=True), letter(mu))


# --------------------------------------------------------------------------
# Identity checks
# --------------------------------------------------------------------------

def _run_cases(name, graph, seed, cases, window, ring, case_index, body):
    window = _default_window(graph, window)
    ring = ring if ring is not None else IntegerRing()
    report = CheckReport(name=name, cases=0, seed=seed)
    start = time.perf_counter()
    indices = range(cases) if case_index is None else [case_index]
    for i in indices:
        rng = _case_rng(seed, name, i)
        report.cases += 1
        outcome = body(rng, graph, window, ring)
        if outcome is not None:
            input_text, detail = outcome
            report.failures.append(CaseFailure(
                index=i, case_seed=f"{seed}:{name}:{i}",
                input_text=input_text, detail=detail))
    report.elapsed = time.perf_counter() - start
    return report


def check_lemma3(graph: StandardKGraph, seed: int, cases: int,
                 window: Window | None = None, ring: Ring | None = None,
                 case_index: int | None = None) -> CheckReport:
    """ghost(lam) * mu equals the sum of alpha beta* over all common
    extensions of any fixed degree q >= d(lam) join d(mu), with the sum
    built by brute-force pair search."""

    def body(rng, graph, window, ring):
        hi = min(window.degree_bound, 3)
        v = _rand_vertex(rng, window)
        lam = _rand_path(rng, graph, window, 0, hi, range_v=v)
        mu = _rand_path(rng, graph, window, 0, hi, range_v=v)
        extra = _rand_degree(rng, graph.k, 1)
        q = vadd(join(lam.degree, mu.degree), extra)
        lhs = Element.from_word(ring, _ghost_word(lam, mu))
        terms = []
        for alpha in graph.paths(lam.source, vsub(q, lam.degree)):
            for beta in graph.paths(mu.source, vsub(q, mu.degree)):
                if compose(lam, alpha) == compose(mu, beta):
                    terms.append((_pair_word(alpha, beta), ring.one))
        rhs = Element.from_terms(ring, terms)
        if normalize(graph, lhs) != normalize(graph, rhs):
            return (format_element(lhs),
                    f"mismatch against brute-force sum at q={q}")
        return None

    return _run_cases("lemma3", graph, seed, cases, window, ring,
                      case_index, body)


def _rand_key(rng: random.Random, graph: StandardKGraph, window: Window,
              tries: int = 64) -> canonical.ClassKey | None:
    hi = min(window.degree_bound, 3)
    for _ in range(tries):
        rl = _rand_vertex(rng, window)
        rr = _rand_vertex(rng, window)
        a = rng.randint(1, hi)
        b = a + norm(rr) - norm(rl)
        if not 1 <= b <= hi:
            continue
        key = canonical.ClassKey(rl, rr, _rand_levels(rng, graph, a),
                                 _rand_levels(rng, graph, b))
        try:
            canonical.rep_source(key)
        except canonical.UnrealizableKeyError:
            continue
        return key
    return None


def _rand_nonrep_pair(rng: random.Random, graph: StandardKGraph,
                      window: Window,
                      tries: int = 64) -> canonical.PathPair | None:
    """A reduced pair that is not its class representative (needs level >= 2)."""
    if graph.level < 2:
        return None
    hi = min(window.degree_bound, 3)
    for _ in range(tries):
        rl = _rand_vertex(rng, window)
        rr = _rand_vertex(rng, window)
        a = rng.randint(1, hi)
        b = a + norm(rr) - norm(rl)
        if not 1 <= b <= hi:
            continue
        lvl = list(_rand_levels(rng, graph, a))
        lvr = list(_rand_levels(rng, graph, b))
        if lvl[-1] == 1 and lvr[-1] == 1:
            # force reducedness for every member source
            if rng.random() < 0.5:
                lvl[-1] = rng.randint(2, graph.level)
            else:
                lvr[-1] = rng.randint(2, graph.level)
        key = canonical.ClassKey(rl, rr, tuple(lvl), tuple(lvr))
        try:
            sources = canonical.member_sources(key)
        except canonical.UnrealizableKeyError:
            continue
        if len(sources) < 2:
            continue
        return canonical.pair_for_source(key, rng.choice(sources[1:]))
    return None


def check_lemma8(graph: StandardKGraph, seed: int, cases: int,
                 window: Window | None = None, ring: Ring | None = None,
                 case_index: int | None = None) -> CheckReport:
    """Two members of one equivalence class have equal pair words in the
    quotient: their normal forms coincide."""

    def body(rng, graph, window, ring):
        key = _rand_key(rng, graph, window)
        if key is None:
            return None
        sources = canonical.member_sources(key)
        if len(sources) >= 2:
            s1, s2 = rng.sample(sources, 2)
        else:
            s1 = s2 = sources[0]
        a = canonical.pair_for_source(key, s1)
        b = canonical.pair_for_source(key, s2)
        lhs = Element.from_word(ring, _pair_word(*a))
        rhs = Element.from_word(ring, _pair_word(*b))
        if normalize(graph, lhs) != normalize(graph, rhs):
            return (f"{format_element(lhs)} vs {format_element(rhs)}",
                    "class members have different normal forms")
        return None

    return _run_cases("lemma8", graph, seed, cases, window, ring,
                      case_index, body)


def check_lemma12(graph: StandardKGraph, seed: int, cases: int,
                  window: Window | None = None, ring: Ring | None = None,
                  case_index: int | None = None) -> CheckReport:
    """Shrinking both degrees of an S-set by a common n-hat below the meet
    leaves the pair-word sum unchanged in the quotient."""

    def body(rng, graph, window, ring):
        hi = min(window.degree_bound, 3)
        v = _rand_vertex(rng, window)
        m = _rand_degree(rng, graph.k, hi)
        sp = rng.randint(0, norm(m))
        shared = norm(m) - sp
        n = rng.choice([d for d in degrees_upto(graph.k, hi)
                        if norm(d) >= shared])
        t = norm(n) - shared
        p = _rand_levels(rng, graph, sp)
        q = _rand_levels(rng, graph, t)
        if rng.random() < 0.8:
            w = vadd(vsub(v, m), n)
        else:
            w = _rand_vertex(rng, window)
        cap = meet(m, n)
        candidates = [d for d in degrees_upto(graph.k, max(cap))
                      if all(x <= y for x, y in zip(d, cap))
                      and norm(d) <= shared]
        nhat = rng.choice(candidates) if candidates else (0,) * graph.k
        one = Element.from_terms(ring, [
            (_pair_word(alpha, beta), ring.one)
            for alpha, beta in graph.s_set(v, w, m, n, p, q)])
        two = Element.from_terms(ring, [
            (_pair_word(alpha, beta), ring.one)
            for alpha, beta in graph.s_set(v, w, vsub(m, nhat),
                                           vsub(n, nhat), p, q)])
        if normalize(graph, one) != normalize(graph, two):
            return (format_element(one),
                    f"S-set sums differ after shrinking by {nhat}")
        return None

    return _run_cases("lemma12", graph, seed, cases, window, ring,
                      case_index, body)


def check_lemma13(graph: StandardKGraph, seed: int, cases: int,
                  window: Window | None = None, ring: Ring | None = None,
                  case_index: int | None = None) -> CheckReport:
    """The sum over all non-all-ones extensions of degree n telescopes to
    the staircase of single-non-one-entry extensions."""

    def body(rng, graph, window, ring):
        v = _rand_vertex(rng, window)
        n = _rand_degree(rng, graph.k, min(window.degree_bound, 3), 1)
        lam = _rand_path(rng, graph, window, 0, 2, source_v=v)
        mu = _rand_path(rng, graph, window, 0, 2, source_v=v)
        ones = (1,) * norm(n)
        lhs = Element.from_terms(ring, [
            (_pair_word(compose(lam, xi), compose(mu, xi)), ring.one)
            for xi in graph.paths(v, n) if xi.levels != ones])
        indices = [i for i in range(graph.k) for _ in range(n[i])]
        terms = []
        for p in range(1, norm(n) + 1):
            delta = [0] * graph.k
            for i in indices[-p:]:
                delta[i] += 1
            for q in range(2, graph.level + 1):
                xi = Path(v, vsub(v, tuple(delta)), (1,) * (p - 1) + (q,))
                terms.append((_pair_word(compose(lam, xi), compose(mu, xi)),
                              ring.one))
        rhs = Element.from_terms(ring, terms)
        if normalize(graph, lhs) != normalize(graph, rhs):
            return (format_element(lhs),
                    f"telescoping mismatch for n={n}")
        return None

    return _run_cases("lemma13", graph, seed, cases, window, ring,
                      case_index, body)


# --------------------------------------------------------------------------
# Confluence sampling
# --------------------------------------------------------------------------

def _expandable_pair(rng, graph, window) -> tuple[Path, Path]:
    """A path/ghost pair carrying a common trailing all-ones factor."""
    v = _rand_vertex(rng, window)
    t = _rand_degree(rng, graph.k, min(window.degree_bound, 2), 1)
    lam0 = _rand_path(rng, graph, window, 0, 2, source_v=v)
    mu0 = _rand_path(rng, graph, window, 0, 2, source_v=v)
    ones = graph.all_ones_path(v, t)
    return compose(lam0, ones), compose(mu0, ones)


def _random_letter(rng, graph, window, lo_norm=0):
    p = _rand_path(rng, graph, window, lo_norm, 2)
    return letter(p, ghost=rng.random() < 0.5)


def _gen_11(rng, graph, window):
    if rng.random() < 0.5:
        x = _rand_path(rng, graph, window, 0, 2)
        y = _rand_path(rng, graph, window, 0, 2, range_v=x.source)
        z = _rand_path(rng, graph, window, 0, 2, range_v=y.source)
        word = (letter(x), letter(y), letter(z))
    else:
        x = _rand_path(rng, graph, window, 0, 2)
        y = _rand_path(rng, graph, window, 0, 2, source_v=x.range)
        z = _rand_path(rng, graph, window, 0, 2, source_v=y.range)
        word = (letter(x, True), letter(y, True), letter(z, True))
    return word, (RuleId.R1_COMPOSE, 0), (RuleId.R1_COMPOSE, 1)


def _gen_12(rng, graph, window):
    x = _rand_path(rng, graph, window, 0, 2)
    y = _rand_path(rng, graph, window, 0, 2, range_v=x.source)
    while True:
        z = _random_letter(rng, graph, window)
        if _outer(z) != y.source:
            break
    word = (letter(x), letter(y), z)
    return word, (RuleId.R1_COMPOSE, 0), (RuleId.R2_ORTHO, 1)


def _gen_13(rng, graph, window):
    if rng.random() < 0.5:
        lam = _rand_path(rng, graph, window, 1, 2)
        mu = _rand_path(rng, graph, window, 1, 2, range_v=lam.range)
        xi = _rand_path(rng, graph, window, 0, 2, range_v=mu.source)
        word = (letter(lam, True), letter(mu), letter(xi))
        return word, (RuleId.R3_GHOST_PATH, 0), (RuleId.R1_COMPOSE, 1)
    lam = _rand_path(rng, graph, window, 1, 2)
    zeta = _rand_path(rng, graph, window, 0, 2, range_v=lam.source)
    mu = _rand_path(rng, graph, window, 1, 2, range_v=lam.range)
    word = (letter(zeta, True), letter(lam, True), letter(mu))
    return word, (RuleId.R1_COMPOSE, 0), (RuleId.R3_GHOST_PATH, 1)


def _gen_14(rng, graph, window):
    lam, mu = _expandable_pair(rng, graph, window)
    if rng.random() < 0.5:
        xi = _rand_path(rng, graph, window, 0, 2, source_v=lam.range)
        word = (letter(xi), letter(lam), letter(mu, True))
        return word, (RuleId.R1_COMPOSE, 0), (RuleId.R4_EXPAND, 1)
    zeta = _rand_path(rng, graph, window, 0, 2, source_v=mu.range)
    word = (letter(lam), letter(mu, True), letter(zeta, True))
    return word, (RuleId.R4_EXPAND, 0), (RuleId.R1_COMPOSE, 1)


def _gen_15(rng, graph, window):
    pair = _rand_nonrep_pair(rng, graph, window)
    if pair is None:
        return None
    lam, mu = pair
    if rng.random() < 0.5:
        xi = _rand_path(rng, graph, window, 0, 2, source_v=lam.range)
        word = (letter(xi), letter(lam), letter(mu, True))
        return word, (RuleId.R1_COMPOSE, 0), (RuleId.R5_REPRESENTATIVE, 1)
    zeta = _rand_path(rng, graph, window, 0, 2, source_v=mu.range)
    word = (letter(lam), letter(mu, True), letter(zeta, True))
    return word, (RuleId.R5_REPRESENTATIVE, 0), (RuleId.R1_COMPOSE, 1)


def _gen_22(rng, graph, window):
    while True:
        a = _random_letter(rng, graph, window)
        b = _random_letter(rng, graph, window)
        c = _random_letter(rng, graph, window)
        if _inner(a) != _outer(b) and _inner(b) != _outer(c):
            return ((a, b, c), (RuleId.R2_ORTHO, 0), (RuleId.R2_ORTHO, 1))


def _gen_23(rng, graph, window):
    lam = _rand_path(rng, graph, window, 1, 2)
    mu = _rand_path(rng, graph, window, 1, 2, range_v=lam.range)
    while True:
        xi = _random_letter(rng, graph, window)
        if _outer(xi) != mu.source:
            break
    word = (letter(lam, True), letter(mu), xi)
    return word, (RuleId.R3_GHOST_PATH, 0), (RuleId.R2_ORTHO, 1)


def _gen_24(rng, graph, window):
    lam, mu = _expandable_pair(rng, graph, window)
    if rng.random() < 0.5:
        while True:
            xi = _random_letter(rng, graph, window)
            if _outer(xi) != mu.range:
                break
        word = (letter(lam), letter(mu, True), xi)
        return word, (RuleId.R4_EXPAND, 0), (RuleId.R2_ORTHO, 1)
    while True:
        xi = _random_letter(rng, graph, window)
        if _inner(xi) != lam.range:
            break
    word = (xi, letter(lam), letter(mu, True))
    return word, (RuleId.R2_ORTHO, 0), (RuleId.R4_EXPAND, 1)


def _gen_25(rng, graph, window):
    pair = _rand_nonrep_pair(rng, graph, window)
    if pair is None:
        return None
    lam, mu = pair
    if rng.random() < 0.5:
        while True:
            xi = _random_letter(rng, graph, window)
            if _outer(xi) != mu.range:
                break
        word = (letter(lam), letter(mu, True), xi)
        return word, (RuleId.R5_REPRESENTATIVE, 0), (RuleId.R2_ORTHO, 1)
    while True:
        xi = _random_letter(rng, graph, window)
        if _inner(xi) != lam.range:
            break
    word = (xi, letter(lam), letter(mu, True))
    return word, (RuleId.R2_ORTHO, 0), (RuleId.R5_REPRESENTATIVE, 1)


def _gen_34(rng, graph, window):
    lam, mu = _expandable_pair(rng, graph, window)
    if rng.random() < 0.5:
        zeta = _rand_path(rng, graph, window, 1, 2, range_v=mu.range)
        word = (letter(lam), letter(mu, True), letter(zeta))
        return word, (RuleId.R4_EXPAND, 0), (RuleId.R3_GHOST_PATH, 1)
    xi = _rand_path(rng, graph, window, 1, 2, range_v=lam.range)
    word = (letter(xi, True), letter(lam), letter(mu, True))
    return word, (RuleId.R3_GHOST_PATH, 0), (RuleId.R4_EXPAND, 1)


def _gen_35(rng, graph, window):
    pair = _rand_nonrep_pair(rng, graph, window)
    if pair is None:
        return None
    lam, mu = pair
    if rng.random() < 0.5:
        zeta = _rand_path(rng, graph, window, 1, 2, range_v=mu.range)
        word = (letter(lam), letter(mu, True), letter(zeta))
        return word, (RuleId.R5_REPRESENTATIVE, 0), (RuleId.R3_GHOST_PATH, 1)
    xi = _rand_path(rng, graph, window, 1, 2, range_v=lam.range)
    word = (letter(xi, True), letter(lam), letter(mu, True))
    return word, (RuleId.R3_GHOST_PATH, 0), (RuleId.R5_REPRESENTATIVE, 1)


def _gen_44(rng, graph, window):
    v = _rand_vertex(rng, window)
    t = rng.choice([d for d in degrees_upto(graph.k, 3, 2)])
    lam0 = _rand_path(rng, graph, window, 0, 2, source_v=v)
    mu0 = _rand_path(rng, graph, window, 0, 2, source_v=v)
    ones = graph.all_ones_path(v, t)
    lam, mu = compose(lam0, ones), compose(mu0, ones)
    word = (letter(lam), letter(mu, True))
    n1, n2 = rng.sample(valid_expansions(lam, mu), 2)
    return (word,
            RedexMatch(RuleId.R4_EXPAND, 0, expand_degree=n1),
            RedexMatch(RuleId.R4_EXPAND, 0, expand_degree=n2))


_FAMILIES = [
    ("11", _gen_11), ("12", _gen_12), ("13", _gen_13), ("14", _gen_14),
    ("15", _gen_15), ("22", _gen_22), ("23", _gen_23), ("24", _gen_24),
    ("25", _gen_25), ("34", _gen_34), ("35", _gen_35), ("44", _gen_44),
]


def _as_match(word: Word, spec) -> RedexMatch:
    if isinstance(spec, RedexMatch):
        return spec
    rule, pos = spec
    m = match_at(word, pos)
    if m is None or m.rule is not rule:
        raise AssertionError(
            f"confluence generator expected {rule} at {pos}, got {m}")
    return m


def check_confluence(graph: StandardKGraph, seed: int, cases: int,
                     window: Window | None = None, ring: Ring | None = None,
                     case_index: int | None = None) -> CheckReport:
    """Each sampled overlap word is reduced by both competing first steps;
    the two normal forms (and the direct normal form) must coincide."""

    def body(rng, graph, window, ring):
        name, gen = _FAMILIES[rng.randrange(len(_FAMILIES))]
        made = gen(rng, graph, window)
        if made is None:
            return None
        word, spec_a, spec_b = made
        ma, mb = _as_match(word, spec_a), _as_match(word, spec_b)
        one = normalize(graph, apply_rule(graph, ring, word, ma))
        two = normalize(graph, apply_rule(graph, ring, word, mb))
        direct = normalize(graph, Element.from_word(ring, word))
        if one != two or one != direct:
            return (format_word(word),
                    f"family {name}: routes {ma} / {mb} diverge")
        return None

    return _run_cases("confluence", graph, seed, cases, window, ring,
                      case_index, body)


# --------------------------------------------------------------------------
# Exhaustive defining-relation check
# --------------------------------------------------------------------------

def check_kp_relations(graph: StandardKGraph,
                       window: Window | None = None,
                       ring: Ring | None = None) -> CheckReport:
    """Every defining-relation instance anchored in the window normalizes
    to zero: vertex orthogonality/idempotency, unit laws and composition,
    same-degree ghost products, and the vertex expansion identity with
    |n| <= 2.  Path degrees are capped at |d| <= 2."""
    window = _default_window(graph, window)
    ring = ring if ring is not None else IntegerRing()
    report = CheckReport(name="kp", cases=0, seed=0)
    start = time.perf_counter()
    verts = window.vertices()
    cap = min(window.degree_bound, 2)
    degs = degrees_upto(graph.k, cap, 1)

    def run(element: Element, label: str) -> None:
        report.cases += 1
        result = normalize(graph, element)
        if not result.is_zero():
            report.failures.append(CaseFailure(
                index=report.cases - 1, case_seed="exhaustive",
                input_text=label,
                detail=f"normal form {format_element(result)} is not 0"))

    def wrd(*letters) -> Element:
        return Element.from_word(ring, tuple(letters))

    paths_from = {
        v: [p for n in degs for p in graph.paths(v, n)
            if window.contains(p.source)]
        for v in verts
    }
    paths_into = {v: [] for v in verts}
    for v in verts:
        for p in paths_from[v]:
            paths_into[p.source].append(p)

    for v in verts:
        lv = letter(graph.vertex(v))
        for w in verts:
            elem = wrd(lv, letter(graph.vertex(w)))
            if v == w:
                elem = elem - wrd(lv)
            run(elem, f"KP1 v={v} w={w}")

    for v in verts:
        for p in paths_from[v]:
            lp, gp = letter(p), letter(p, ghost=True)
            rv, sv = letter(graph.vertex(p.range)), letter(graph.vertex(p.source))
            run(wrd(rv, lp) - wrd(lp), f"KP2 unit r(p)p p={format_word((lp,))}")
            run(wrd(lp, sv) - wrd(lp), f"KP2 unit ps(p) p={format_word((lp,))}")
            run(wrd(sv, gp) - wrd(gp), f"KP2 unit s(p)p* p={format_word((lp,))}")
            run(wrd(gp, rv) - wrd(gp), f"KP2 unit p*r(p) p={format_word((lp,))}")

    for v in verts:
        for lam in paths_into[v]:
            for mu in paths_from[v]:
                comp = letter(compose(lam, mu))
                run(wrd(letter(lam), letter(mu)) - wrd(comp),
                    f"KP2 compose {format_word((letter(lam), letter(mu)))}")
                run(wrd(letter(mu, True), letter(lam, True))
                    - wrd(letter(compose(lam, mu), True)),
                    f"KP2 ghost compose "
                    f"{format_word((letter(mu, True), letter(lam, True)))}")

    for v in verts:
        for n in degs:
            group = graph.paths(v, n)
            for lam in group:
                if not window.contains(lam.source):
                    continue
                for mu in group:
                    elem = wrd(letter(lam, True), letter(mu))
                    if lam == mu:
                        elem = elem - wrd(letter(graph.vertex(lam.source)))
                    run(elem, f"KP3 {format_word((letter(lam, True), letter(mu)))}")

    for v in verts:
        for n in degs:
            elem = wrd(letter(graph.vertex(v)))
            for lam in graph.paths(v, n):
                elem = elem - wrd(letter(lam), letter(lam, True))
            run(elem, f"KP4 v={v} n={n}")

    report.elapsed = time.perf_counter() - start
    return report


CHECKS = {
    "lemma3": check_lemma3,
    "lemma8": check_lemma8,
    "lemma12": check_lemma12,
    "lemma13": check_lemma13,
    "confluence": check_confluence,
}


def run_all(graph: StandardKGraph, seed: int, cases: int,
            window: Window | None = None, ring: Ring | None = None,
            case_index: int | None = None) -> list[CheckReport]:
    reports = [check(graph, seed, cases, window, ring, case_index)
               for check in CHECKS.values()]
    reports.append(check_kp_relations(graph, window, ring))
    return reports
