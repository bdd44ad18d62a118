"""Knot and link invariants computed from Gauss codes.

Two independent routes to the degree-2 Conway coefficient are kept side by
side: a skein-relation evaluator for the whole Conway polynomial (the
oracle, exponential in the worst case but fine at the sizes used here) and
a quadratic-time Gauss-diagram count used by the statistical censuses.
Tests force agreement between the two on a corpus of sampled knots.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .multigraph import GraphError


@dataclass(frozen=True)
class Passage:
    crossing: int
    over: bool
    sign: int  # +1 or -1


Component = tuple[Passage, ...]


@dataclass(frozen=True)
class GaussLink:
    components: tuple[Component, ...]

    def validate(self) -> None:
        seen: dict[int, list[Passage]] = {}
        for comp in self.components:
            for p in comp:
                if p.sign not in (-1, 1):
                    raise GraphError(f"bad sign on crossing {p.crossing}")
                seen.setdefault(p.crossing, []).append(p)
        for cid, ps in seen.items():
            if len(ps) != 2:
                raise GraphError(f"crossing {cid} appears {len(ps)} times")
            if ps[0].over == ps[1].over:
                raise GraphError(f"crossing {cid} lacks an over and an under passage")
            if ps[0].sign != ps[1].sign:
                raise GraphError(f"crossing {cid} has inconsistent signs")

    @property
    def crossing_ids(self) -> frozenset[int]:
        return frozenset(p.crossing for c in self.components for p in c)


# -- text form -----------------------------------------------------------------

_TOKEN = re.compile(r"^c(\d+)([ou])([+-])$")


def format_gauss(link: GaussLink) -> str:
    """Components as space-separated c<id><o|u><+|-> tokens joined by ' / '.

    Crossing ids are renumbered from 1 in order of first appearance.
    """
    renum: dict[int, int] = {}
    parts = []
    for comp in link.components:
        toks = []
        for p in comp:
            if p.crossing not in renum:
                renum[p.crossing] = len(renum) + 1
            toks.append(
                f"c{renum[p.crossing]}{'o' if p.over else 'u'}{'+' if p.sign > 0 else '-'}"
            )
        parts.append(" ".join(toks) if toks else "-")
    return " / ".join(parts)


def parse_gauss(text: str) -> GaussLink:
    comps = []
    for chunk in text.strip().split("/"):
        chunk = chunk.strip()
        if chunk in ("", "-"):
            comps.append(())
            continue
        passages = []
        for tok in chunk.split():
            m = _TOKEN.match(tok)
            if not m:
                raise GraphError(f"bad gauss token {tok!r}")
            cid, ou, sgn = m.groups()
            passages.append(Passage(int(cid), ou == "o", 1 if sgn == "+" else -1))
        comps.append(tuple(passages))
    link = GaussLink(tuple(comps))
    link.validate()
    return link


def gauss_link(*component_specs: Sequence[tuple[int, str, int]]) -> GaussLink:
    """Build a link from (crossing, 'o'|'u', sign) triples per component."""
    comps = []
    for spec in component_specs:
        comps.append(tuple(Passage(c, ou == "o", s) for c, ou, s in spec))
    link = GaussLink(tuple(comps))
    link.validate()
    return link


# -- linking number ------------------------------------------------------------


def linking_number(link: GaussLink) -> int:
    """Half the signed count of inter-component crossings of a 2-component
    link."""
    if len(link.components) != 2:
        raise GraphError("linking number needs exactly two components")
    ids_a = {p.crossing for p in link.components[0]}
    total = 0
    for p in link.components[1]:
        if p.crossing in ids_a:
            total += p.sign
    if total % 2 != 0:
        raise GraphError("odd inter-component crossing sum; code is inconsistent")
    return total // 2


# -- Conway polynomial by the descending algorithm ------------------------------


def _padd(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
        if out[k] == 0:
            del out[k]
    return out


def _pzshift(a: dict, scale: int) -> dict:
    return {k + 1: v * scale for k, v in a.items() if v != 0}


def poly_str(p: dict) -> str:
    if not p:
        return "0"
    terms = []
    for k in sorted(p):
        c = p[k]
        base = "1" if k == 0 else ("z" if k == 1 else f"z^{k}")
        if k == 0:
            terms.append(f"{c}")
        elif c == 1:
            terms.append(base)
        elif c == -1:
            terms.append(f"-{base}")
        else:
            terms.append(f"{c}{base}")
    return " + ".join(terms).replace("+ -", "- ")


_RawComp = tuple[tuple[int, bool, int], ...]


def conway_polynomial(link: GaussLink, max_crossings: int = 24) -> dict[int, int]:
    """Conway polynomial as {degree: coefficient}.

    Descending algorithm: repeatedly locate the first passage met as an
    undercrossing before its partner, then resolve it by the skein relation.
    A descending diagram is an unlink, and split diagrams evaluate to zero.
    Exponential in the worst case, hence the crossing-count guard.
    """
    link.validate()
    if len(link.crossing_ids) > max_crossings:
        raise GraphError(
            f"{len(link.crossing_ids)} crossings exceed the skein guard"
        )
    comps = tuple(
        tuple((p.crossing, p.over, p.sign) for p in c) for c in link.components
    )
    return dict(_conway(comps, {}))


def _conway(comps: tuple[_RawComp, ...], memo: dict) -> dict:
    key = comps
    if key in memo:
        return memo[key]

    if len(comps) > 1 and _is_split(comps):
        memo[key] = {}
        return {}

    bad = _first_bad(comps)
    if bad is None:
        memo[key] = {0: 1} if len(comps) == 1 else {}
        return memo[key]

    cid, sign = bad
    switched = _switch(comps, cid)
    smoothed = _smooth(comps, cid)
    res = _padd(_conway(switched, memo), _pzshift(_conway(smoothed, memo), sign))
    memo[key] = res
    return res


def _is_split(comps) -> bool:
    # components sharing no crossings with the rest form a split part
    n = len(comps)
    idsets = [frozenset(c for c, _, _ in comp) for comp in comps]
    seen = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for j in range(n):
            if j not in seen and idsets[i] & idsets[j]:
                seen.add(j)
                frontier.append(j)
    return len(seen) != n


def _first_bad(comps) -> Optional[tuple[int, int]]:
    seen: set[int] = set()
    for comp in comps:
        for cid, over, sign in comp:
            if cid in seen:
                continue
            if not over:
                return (cid, sign)
            seen.add(cid)
    return None


def _switch(comps, cid):
    return tuple(
        tuple((c, (not o) if c == cid else o, -s if c == cid else s) for c, o, s in comp)
        for comp in comps
    )


def _smooth(comps, cid):
    where = []
    for i, comp in enumerate(comps):
        for p, (c, _, _) in enumerate(comp):
            if c == cid:
                where.append((i, p))
    (i1, p1), (i2, p2) = where
    if i1 == i2:
        comp = comps[i1]
        first = comp[p1 + 1 : p2]
        second = comp[p2 + 1 :] + comp[:p1]
        out = list(comps)
        out[i1 : i1 + 1] = [first, second]
        return tuple(out)
    a, b = comps[i1], comps[i2]
    merged = a[:p1] + b[p2 + 1 :] + b[:p2] + a[p1 + 1 :]
    out = [c for k, c in enumerate(comps) if k not in (i1, i2)]
    out.insert(min(i1, i2), merged)
    return tuple(out)


# -- degree-2 coefficient by Gauss-diagram counting ------------------------------

# Interleaved pairs are classified by whether each crossing is first met as an
# over- or under-passage.  Calibration against the skein evaluator on 120
# sampled knots leaves exactly the two mirror-dual classes (under, over) and
# (over, under) agreeing with the z^2 coefficient everywhere; the first is
# pinned here and the agreement is enforced by tests.
A2_CLASS = (False, True)  # (first passage of earlier crossing, of later one)


def interleave_class_sums(knot: GaussLink) -> dict[tuple[bool, bool], int]:
    """Signed counts of interleaved crossing pairs, split into the four
    first-passage classes.  Single-component links only."""
    if len(knot.components) != 1:
        raise GraphError("interleave counting needs a knot")
    comp = knot.components[0]
    spans: dict[int, list[int]] = {}
    first_over: dict[int, bool] = {}
    sign: dict[int, int] = {}
    for idx, p in enumerate(comp):
        if p.crossing not in spans:
            spans[p.crossing] = [idx, idx]
            first_over[p.crossing] = p.over
            sign[p.crossing] = p.sign
        else:
            spans[p.crossing][1] = idx
    sums = {(x, y): 0 for x in (False, True) for y in (False, True)}
    items = sorted(spans.items(), key=lambda kv: kv[1][0])
    for i, (p, (a1, a2)) in enumerate(items):
        for q, (b1, b2) in items[i + 1 :]:
            if a1 < b1 < a2 < b2:
                sums[(first_over[p], first_over[q])] += sign[p] * sign[q]
    return sums


def a2(knot: GaussLink) -> int:
    """Degree-2 Conway coefficient of a knot, by Gauss-diagram counting."""
    return interleave_class_sums(knot)[A2_CLASS]


# -- diagram-level censuses ------------------------------------------------------


def cycle_a2(d, cycle) -> int:
    from .diagrams import extract_gauss

    return a2(extract_gauss(d, [cycle]))


def pair_lk(d, ca, cb) -> int:
    from .diagrams import extract_gauss

    return linking_number(extract_gauss(d, [ca, cb]))


@dataclass(frozen=True)
class Census:
    parity: int
    values: tuple[int, ...]
    odd: tuple


def a2_census(d, cycles: Iterable) -> Census:
    items = list(cycles)
    values = tuple(cycle_a2(d, c) for c in items)
    odd = tuple(c for c, v in zip(items, values) if v % 2)
    return Census(sum(values) % 2, values, odd)


def lk_census(d, pairs: Iterable) -> Census:
    items = [tuple(sorted(p, key=sorted)) for p in pairs]
    values = tuple(pair_lk(d, a, b) for a, b in items)
    odd = tuple(p for p, v in zip(items, values) if v % 2)
    return Census(sum(values) % 2, values, odd)


def parity_census(d, mode: str, scope: Iterable) -> Census:
    """Mod-2 sum of an invariant over a scope of constituent links.

    mode "a2_over_cycles" scopes over single cycles, "lk_over_pairs" over
    unordered pairs of disjoint cycles.
    """
    if mode == "a2_over_cycles":
        return a2_census(d, scope)
    if mode == "lk_over_pairs":
        return lk_census(d, scope)
    raise GraphError(f"unknown census mode {mode!r}")


def alpha(d, model=None) -> int:
    """Mod-2 sum of a2 over the four-edge cycles of a doubled four-cycle,
    read off a diagram of the shape itself or, through a minor model, off a
    diagram of a host graph."""
    from .cycles import all_cycles, lift_cycle
    from .diagrams import extract_gauss

    if model is None:
        graph = d.graph
        quads = [c for c in all_cycles(graph) if len(c) == 4]
        lifted = quads
    else:
        quads = [c for c in all_cycles(model.pattern) if len(c) == 4]
        lifted = [lift_cycle(model, c) for c in quads]
    if len(quads) != 16:
        raise GraphError(f"expected 16 four-edge cycles, found {len(quads)}")
    total = 0
    for c in lifted:
        total += a2(extract_gauss(d, [c]))
    return total % 2


@dataclass(frozen=True)
class DichotomyWitness:
    kind: str  # "knot" or "link"
    cycles: tuple
    values: tuple[int, ...]


def dichotomy_witness(d, cycles=None, triples=None, check_shape: bool = True) -> Optional[DichotomyWitness]:
    """First knotted cycle (odd a2), else first triple of disjoint cycles
    with all pairwise linking numbers odd, else None.

    Only rings true as a theorem check on the two fixture shapes, so by
    default the graph must be isomorphic to one of them.
    """
    from .cycles import all_cycles, disjoint_cycle_tuples

    g = d.graph
    if check_shape:
        from .canon import canonical_form
        from .catalog import fixture

        cert = canonical_form(g)
        if cert not in (canonical_form(fixture("N9")), canonical_form(fixture("N'10"))):
            raise GraphError("dichotomy check expects one of the two fixture shapes")
    if cycles is None:
        cycles = sorted(all_cycles(g), key=lambda c: (len(c), sorted(c)))
    for c in cycles:
        v = cycle_a2(d, c)
        if v % 2:
            return DichotomyWitness("knot", (c,), (v,))
    if triples is None:
        triples = disjoint_cycle_tuples(g, 3)
    for t in sorted(triples, key=lambda t: sorted(sorted(c) for c in t)):
        a, b, c = sorted(t, key=sorted)
        vals = (pair_lk(d, a, b), pair_lk(d, a, c), pair_lk(d, b, c))
        if all(v % 2 for v in vals):
            return DichotomyWitness("link", (a, b, c), vals)
    return None
