"""Standard monomials of the Veronese presentation ring and the complexes built from them.

The presentation ring has one variable z_m per degree-r monomial m of S,
ordered by z_m > z_m' iff m >rev m'.  A product z_{m_1}...z_{m_k} with
m_1 >=rev ... >=rev m_k is *standard* when max(m_i) <= min(m_{i+1}) for all
consecutive pairs.  Standard products are in bijection with monomials of
degree k*r of S (sort all variable occurrences, cut into blocks of r), and
they are exactly the monomials outside the revlex initial ideal of the
toric kernel.  For the monomial ideal J, a standard product lies in the
initial ideal of the preimage of J iff its image in S lies in J.

Chains are handled as tuples of vertex ids into a revlex-descending vertex
list, so a chain is a weakly increasing id tuple.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

from . import monomials as mon
from .exactla import RationalMatrix, row_reduce_pivots
from .monomials import Monomial, MonomialIdeal
from .upoly import IntPolynomial
from .veronese import VeroneseQuotient

Chain = tuple[Monomial, ...]


def _check_degrees(chain: Sequence[Monomial]) -> int:
    degs = {sum(m) for m in chain}
    if len(degs) > 1:
        raise ValueError("chain mixes monomials of different degrees")
    return degs.pop() if degs else 0


def is_standard(chain: Sequence[Monomial]) -> bool:
    _check_degrees(chain)
    for a, b in zip(chain, chain[1:]):
        if mon.revlex_compare(a, b) < 0:
            return False
        if mon.max_index(a) > mon.min_index(b):
            return False
    return True


def product(chain: Iterable[Monomial]) -> Monomial:
    chain = list(chain)
    out = [0] * len(chain[0])
    for m in chain:
        for i, e in enumerate(m):
            out[i] += e
    return tuple(out)


def monomial_to_chain(m: Monomial, r: int) -> Chain:
    """The standard chain with product ``m`` (deg m must be a multiple of r)."""
    k, rest = divmod(sum(m), r)
    if rest or k == 0:
        raise ValueError(f"degree {sum(m)} is not a positive multiple of {r}")
    indices = [i for i, e in enumerate(m) for _ in range(e)]
    n = len(m)
    out = []
    for start in range(0, len(indices), r):
        block = [0] * n
        for i in indices[start:start + r]:
            block[i] += 1
        out.append(tuple(block))
    return tuple(out)


def sort_normal_form(monomials: Sequence[Monomial]) -> Chain:
    """Unique standard chain whose product equals the product of ``monomials``."""
    if not monomials:
        raise ValueError("empty multiset")
    r = _check_degrees(monomials)
    if r == 0:
        raise ValueError("monomials must have positive degree")
    chain = monomial_to_chain(product(monomials), r)
    assert is_standard(chain) and product(chain) == product(monomials)
    return chain


def standard_membership(chain: Sequence[Monomial], J: MonomialIdeal) -> bool:
    """Is the standard product in the initial ideal of the preimage of J?"""
    if not is_standard(chain):
        raise ValueError("chain is not standard")
    return product(chain) in J


def chain_key(ids: Sequence[int]) -> tuple[int, ...]:
    """Sort key realizing revlex on the presentation ring, variables indexed largest-first.

    Ascending keys list equal-length chains in descending order: the larger
    chain has fewer occurrences of the smallest variable at which the two
    differ, and that is exactly where its descending id sequence first
    drops below the other.
    """
    return tuple(sorted(ids, reverse=True))


def enumerate_standard_chains(
    vertices: Sequence[Monomial],
    max_length: int | None = None,
    ideal: MonomialIdeal | None = None,
) -> dict[int, list[tuple[int, ...]]]:
    """Standard chains over ``vertices`` (revlex descending), grouped by length.

    Chains whose product lies in ``ideal`` are skipped; since products only
    grow along an extension, so are all their extensions.
    """
    nv = len(vertices)
    maxes = [mon.max_index(m) for m in vertices]
    mins = [mon.min_index(m) for m in vertices]
    succ = [[b for b in range(a, nv) if mins[b] >= maxes[a]] for a in range(nv)]
    out: dict[int, list[tuple[int, ...]]] = {0: [()]}
    frontier = []
    for a, m in enumerate(vertices):
        if ideal is None or m not in ideal:
            frontier.append(((a,), m))
    length = 1
    while frontier and (max_length is None or length <= max_length):
        out[length] = [ids for ids, _ in frontier]
        if max_length is not None and length == max_length:
            break
        nxt = []
        for ids, prod in frontier:
            for b in succ[ids[-1]]:
                p = tuple(x + y for x, y in zip(prod, vertices[b]))
                if ideal is None or p not in ideal:
                    nxt.append((ids + (b,), p))
        frontier = nxt
        length += 1
    return out


class SimplicialComplex:
    """Faces over a vertex list, stored as sorted id tuples and closed under taking subfaces.

    Faces are normally sets.  The standard-monomial complex of a small
    Veronese index can contain repeated vertices (a multicomplex); such
    objects are accepted and reported by :attr:`is_simplicial`.
    """

    def __init__(self, vertices: Sequence[Monomial], faces: Iterable[Sequence[int]]):
        self.vertices = list(vertices)
        self.faces = frozenset(tuple(sorted(f)) for f in faces)
        if () not in self.faces:
            raise ValueError("a complex contains the empty face")
        singletons = {f[0] for f in self.faces if len(f) == 1}
        if singletons != set(range(len(self.vertices))):
            raise ValueError("singleton faces and vertices disagree")
        for f in self.faces:
            for k in range(len(f)):
                if f[:k] + f[k + 1:] not in self.faces:
                    raise ValueError(f"face {f} is missing the subface {f[:k] + f[k + 1:]}")

    def __len__(self) -> int:
        return len(self.faces)

    @property
    def is_simplicial(self) -> bool:
        return all(len(set(f)) == len(f) for f in self.faces)

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.faces) - 1

    def facets(self) -> list[tuple[int, ...]]:
        covered = {f[:k] + f[k + 1:] for f in self.faces for k in range(len(f))}
        return sorted(self.faces - covered, key=lambda f: (len(f), f))

    def to_json(self) -> dict:
        return {
            "vertices": [mon.format_monomial(m) for m in self.vertices],
            "facets": [[str(i) for i in f] for f in self.facets()],
            "f_polynomial": f_polynomial(self).to_json(),
        }


def f_polynomial(C: SimplicialComplex) -> IntPolynomial:
    counts = Counter(len(f) for f in C.faces)
    return IntPolynomial(counts.get(i, 0) for i in range(max(counts) + 1))


def is_flag(C: SimplicialComplex) -> bool:
    """Every vertex multiset whose faces of size <= 2 are all present is itself a face.

    Faces are grown by appending a vertex at least as large as their last
    one; by induction this reaches every such multiset (a clique, for an
    ordinary complex).
    """
    faces = C.faces
    nv = len(C.vertices)
    for f in faces:
        start = f[-1] if f else 0
        for v in range(start, nv):
            pair_ok = all(tuple(sorted((a, v))) in faces for a in f)
            if v in f:
                pair_ok = pair_ok and (v, v) in faces
            if pair_ok and (f + (v,)) not in faces:
                return False
    return True


def build_delta(V: VeroneseQuotient) -> SimplicialComplex:
    """Standard monomials outside the initial ideal of the preimage of J.

    For r >= (deg h + 1)/2 every such monomial is squarefree and the result is
    a flag simplicial complex; its f-polynomial is the Hilbert function of the
    reduced Veronese algebra for every r.
    """
    vertices = V.basis(1)
    chains = enumerate_standard_chains(vertices, ideal=V.J)
    faces = [c for group in chains.values() for c in group]
    return SimplicialComplex(vertices, faces)


def build_gamma(V: VeroneseQuotient, w=None) -> SimplicialComplex:
    """Standard monomials of degree <= floor(lambda/2) outside the initial ideal of J + (w).

    In each degree k the ideal generated by w contributes the span of the
    normal forms of w*b for b running over the standard basis of degree k-1;
    its leading chains (pivots in descending chain order) join the initial
    ideal and the remaining squarefree chains are the faces.
    """
    D = V.h.degree
    if V.r < D:
        raise ValueError(f"r={V.r} is below deg h={D}")
    if w is None:
        w = V.power_linear_form()
    V.check_form(w)
    r = V.r
    lam = V.h_transform().degree
    vertices = V.basis(1)
    chains = enumerate_standard_chains(vertices, max_length=max(lam // 2, 1), ideal=V.J)
    index_of = {m: i for i, m in enumerate(vertices)}
    terms = [(m, c) for m, c in w.items() if c]

    kept: dict[int, list[tuple[int, ...]]] = {0: [()]}
    for k in range(1, lam // 2 + 1):
        cols = sorted(chains.get(k, []), key=chain_key)
        col_of = {c: j for j, c in enumerate(cols)}
        rows = []
        for b in chains.get(k - 1, []):
            base = product([vertices[i] for i in b]) if b else (0,) * V.n
            row = [0] * len(cols)
            for m, c in terms:
                p = tuple(x + y for x, y in zip(m, base))
                if p in V.J:
                    continue
                chain = monomial_to_chain(p, r)
                row[col_of[tuple(index_of[x] for x in chain)]] += c
            rows.append(row)
        pivots = row_reduce_pivots(RationalMatrix(rows, cols=len(cols)), range(len(cols))) if rows else set()
        kept[k] = [c for j, c in enumerate(cols) if j not in pivots and len(set(c)) == len(c)]

    # re-index onto the surviving vertices
    alive = sorted(c[0] for c in kept.get(1, []))
    new_id = {old: new for new, old in enumerate(alive)}
    faces = [tuple(new_id[i] for i in c) for group in kept.values() for c in group]
    return SimplicialComplex([vertices[i] for i in alive], faces)


def pure_power_closed(V: VeroneseQuotient) -> bool:
    """For every vertex m, the chain [m, m] is non-standard or has product in J."""
    for m in V.basis(1):
        pair = (m, m)
        if is_standard(pair) and not standard_membership(pair, V.J):
            return False
    return True


def count_standard_chains(n: int, r: int, k: int) -> int:
    vertices = mon.sort_revlex(mon.monomials_of_degree(n, r))
    return len(enumerate_standard_chains(vertices, max_length=k).get(k, []))


def chain_revlex_greater(u: Sequence[int], v: Sequence[int], nvars: int) -> bool:
    """Definitional revlex comparison of two equal-length chains via exponent vectors."""
    eu, ev = [0] * nvars, [0] * nvars
    for i in u:
        eu[i] += 1
    for i in v:
        ev[i] += 1
    for j in range(nvars - 1, -1, -1):
        if eu[j] != ev[j]:
            return eu[j] < ev[j]
    return False
